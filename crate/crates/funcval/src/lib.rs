//! Exact convex-geometry kernel and valuation functionals on piecewise-affine
//! convex functions.
//!
//! The library is organized around two conjugate-closed classes of polyhedral
//! convex functions: finite coercive max-of-affine functions ([`convexfn::PacfFinite`])
//! and polyhedral functions restricted to a bounded domain polytope
//! ([`convexfn::PacfRestricted`]). Legendre-Fenchel conjugation maps one class
//! onto the other exactly, in rational arithmetic. On top of that sit the
//! valuation functionals of [`valuation`]: a minimum term, a layer-cake volume
//! term and an exact discrete Monge-Ampere term.
//!
//! All geometry lives in [`geom`]: exact V- and H-representations of polytopes
//! for ambient dimension up to 4, convex hull, polarity, volumes and Hausdorff
//! distances. Floating point only enters through the weight functions of
//! [`zeta`] and the quadrature in [`valuation`].

pub mod convexfn;
pub mod error;
pub mod geom;
pub mod linalg;
pub mod rat;
pub mod valuation;
pub mod zeta;

pub use error::{Error, Result};
pub use rat::Rat;
