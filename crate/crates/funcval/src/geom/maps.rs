//! Unimodular maps and vertex-wise group actions on polytopes.

use crate::error::{Error, Result};
use crate::geom::point::Point;
use crate::geom::polytope::PolytopeV;
use crate::linalg;
use crate::rat::{int, Rat};
use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Linear map with determinant exactly one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularMap {
    matrix: Vec<Vec<Rat>>,
}

impl UnimodularMap {
    /// Wraps a matrix after checking `det = 1`.
    pub fn new(matrix: Vec<Vec<Rat>>) -> Result<UnimodularMap> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::ParameterOutOfRange("non-square matrix".into()));
        }
        if linalg::det(&matrix) != Rat::one() {
            return Err(Error::ParameterOutOfRange(
                "determinant must be exactly 1".into(),
            ));
        }
        Ok(UnimodularMap { matrix })
    }

    pub fn identity(n: usize) -> UnimodularMap {
        let matrix = (0..n)
            .map(|i| Point::unit(n, i).0)
            .collect();
        UnimodularMap { matrix }
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.matrix
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point(linalg::mat_vec(&self.matrix, &p.0))
    }

    /// Inverse map (exists, determinant one).
    pub fn inverse(&self) -> UnimodularMap {
        UnimodularMap {
            matrix: linalg::inverse(&self.matrix).expect("unimodular matrix is invertible"),
        }
    }

    /// Transpose map.
    pub fn transpose(&self) -> UnimodularMap {
        UnimodularMap {
            matrix: linalg::transpose(&self.matrix),
        }
    }

    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        UnimodularMap {
            matrix: linalg::mat_mul(&self.matrix, &other.matrix),
        }
    }
}

/// Product of `shear_count` random elementary shears `I + c E_ij` with
/// `c` drawn from `{-2,...,2}`; determinant is one by construction.
pub fn random_unimodular(n: usize, seed: u64, shear_count: usize) -> UnimodularMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = UnimodularMap::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..shear_count {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = rng.gen_range(-2i64..=2);
        let mut shear = UnimodularMap::identity(n);
        shear.matrix[i][j] = int(c);
        m = shear.compose(&m);
    }
    m
}

/// Vertex-wise image of a polytope under a unimodular map.
pub fn apply_map(phi: &UnimodularMap, p: &PolytopeV) -> Result<PolytopeV> {
    if phi.n() != p.n() {
        return Err(Error::DimensionMismatch {
            expected: p.n(),
            got: phi.n(),
        });
    }
    let pts: Vec<Point> = p.vertices().iter().map(|v| phi.apply(v)).collect();
    PolytopeV::hull(&pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::bodies::{standard_body, BodyKind};

    #[test]
    fn zero_shears_gives_identity() {
        let m = random_unimodular(3, 7, 0);
        assert_eq!(m, UnimodularMap::identity(3));
    }

    #[test]
    fn random_maps_have_unit_determinant() {
        for seed in 0..20u64 {
            let m = random_unimodular(3, seed, 8);
            assert_eq!(linalg::det(m.matrix()), Rat::one());
        }
    }

    #[test]
    fn volume_is_unimodular_invariant() {
        let q3 = standard_body(BodyKind::Cube, 3, &[]).unwrap();
        for seed in 0..10u64 {
            let m = random_unimodular(3, seed, 6);
            let image = apply_map(&m, &q3).unwrap();
            assert_eq!(image.volume(), q3.volume());
        }
    }

    #[test]
    fn inverse_composes_to_identity() {
        let m = random_unimodular(2, 3, 5);
        assert_eq!(m.compose(&m.inverse()), UnimodularMap::identity(2));
    }
}
