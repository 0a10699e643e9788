//! Exact convex-polytope kernel: representations, hulls, polarity, volumes,
//! metrics and group actions, for ambient dimension up to four.

pub mod bodies;
pub mod hausdorff;
pub mod json;
pub mod maps;
pub mod point;
pub mod polytope;

pub use bodies::{lemma_t_delta_suite, standard_body, BodyKind, TDeltaReport};
pub use hausdorff::{hausdorff_distance, hausdorff_distance_sq};
pub use maps::{apply_map, random_unimodular, UnimodularMap};
pub use point::Point;
pub use polytope::{Halfspace, PolytopeH, PolytopeV, MAX_DIM};
