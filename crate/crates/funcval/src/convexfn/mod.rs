//! Piecewise-affine convex functions and exact Legendre-Fenchel conjugation.

pub mod finite;
pub mod lowerhull;
pub mod restricted;

pub use finite::{PacfFinite, Piece};
pub use restricted::{
    conjugate_finite, min_value, restricted_min_equals, subdivision, Cell, Guard, PacfRestricted,
    Subdivision,
};
