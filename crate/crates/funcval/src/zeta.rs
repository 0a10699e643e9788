//! Weight families (stub while geometry is under construction).
