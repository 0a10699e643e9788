//! Valuation functionals (stub while geometry is under construction).
