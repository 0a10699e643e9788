//! Finite piecewise-affine convex functions `u(x) = max_i (a_i . x + b_i)`.

use crate::convexfn::lowerhull::lower_hull;
use crate::error::{Error, Result};
use crate::geom::maps::UnimodularMap;
use crate::geom::point::Point;
use crate::geom::polytope::{chart, Halfspace, PolytopeH, PolytopeV};
use crate::rat::Rat;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// One affine piece `x -> a . x + b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Piece {
    pub a: Point,
    pub b: Rat,
}

impl Piece {
    pub fn new(a: Point, b: Rat) -> Self {
        Piece { a, b }
    }

    pub fn eval(&self, x: &Point) -> Rat {
        self.a.dot(x) + &self.b
    }
}

/// Finite convex function `max_i (a_i . x + b_i)`, canonical: every stored
/// piece attains the maximum on a full-dimensional region, pieces sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PacfFinite {
    n: usize,
    pieces: Vec<Piece>,
}

impl PacfFinite {
    /// Builds and canonicalizes. Redundant pieces (never winning on a
    /// full-dimensional set) are dropped via the lifted lower hull.
    pub fn new(n: usize, pieces: Vec<Piece>) -> Result<PacfFinite> {
        if pieces.is_empty() {
            return Err(Error::ParameterOutOfRange("need at least one piece".into()));
        }
        for p in &pieces {
            if p.a.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: p.a.dim(),
                });
            }
        }
        // Collapse identical slopes, keeping the dominating offset.
        let mut by_slope: BTreeMap<Point, Rat> = BTreeMap::new();
        for p in pieces {
            by_slope
                .entry(p.a)
                .and_modify(|b| {
                    if p.b > *b {
                        *b = p.b.clone();
                    }
                })
                .or_insert(p.b);
        }
        let collapsed: Vec<Piece> = by_slope
            .into_iter()
            .map(|(a, b)| Piece::new(a, b))
            .collect();
        if collapsed.len() == 1 {
            return Ok(PacfFinite {
                n,
                pieces: collapsed,
            });
        }
        // Lower hull of (a_i, -b_i) in chart coordinates of the slopes.
        let slopes: Vec<Point> = collapsed.iter().map(|p| p.a.clone()).collect();
        let ch = chart(&slopes);
        let zs: Vec<Rat> = collapsed.iter().map(|p| -p.b.clone()).collect();
        let lh = lower_hull(&ch.coords, &zs);
        let mut pieces: Vec<Piece> = lh
            .vertices
            .iter()
            .map(|&i| collapsed[i].clone())
            .collect();
        pieces.sort();
        Ok(PacfFinite { n, pieces })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Exact pointwise value.
    pub fn eval(&self, x: &Point) -> Result<Rat> {
        if x.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.dim(),
            });
        }
        Ok(self
            .pieces
            .iter()
            .map(|p| p.eval(x))
            .max()
            .expect("canonical function has pieces"))
    }

    /// Hull of the slopes, i.e. `dom u*`.
    pub fn slope_hull(&self) -> PolytopeV {
        let slopes: Vec<Point> = self.pieces.iter().map(|p| p.a.clone()).collect();
        PolytopeV::hull(&slopes).expect("pieces are dimension-checked")
    }

    /// Squared radius of the largest origin-centered ball in `conv{a_i}`;
    /// positive exactly when the function is coercive.
    pub fn coercivity_margin_sq(&self) -> Rat {
        self.slope_hull().inradius_sq_at_origin()
    }

    pub fn is_coercive(&self) -> bool {
        self.coercivity_margin_sq().is_positive()
    }

    /// Exact sublevel set `{u <= t}` as a canonical H-polytope, `None` when
    /// `t < min u`.
    pub fn sublevel(&self, t: &Rat) -> Result<Option<PolytopeH>> {
        if !self.is_coercive() {
            return Err(Error::NotCoercive);
        }
        let hs: Vec<Halfspace> = self
            .pieces
            .iter()
            .map(|p| Halfspace::new(p.a.clone(), t - &p.b))
            .collect();
        match PolytopeH::new(self.n, hs) {
            Ok(p) => Ok(Some(p)),
            Err(Error::Empty) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// `u(x - y)`: piece offsets shift by `-a . y`.
    pub fn translate(&self, y: &Point) -> Result<PacfFinite> {
        if y.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: y.dim(),
            });
        }
        let pieces = self
            .pieces
            .iter()
            .map(|p| Piece::new(p.a.clone(), &p.b - p.a.dot(y)))
            .collect();
        PacfFinite::new(self.n, pieces)
    }

    /// `u . phi^{-1}`, i.e. `x -> u(phi^{-1} x)`: slopes map by `phi^{-t}`.
    pub fn compose_linear(&self, phi: &UnimodularMap) -> Result<PacfFinite> {
        if phi.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: phi.n(),
            });
        }
        let phi_inv_t = phi.inverse().transpose();
        let pieces = self
            .pieces
            .iter()
            .map(|p| Piece::new(phi_inv_t.apply(&p.a), p.b.clone()))
            .collect();
        PacfFinite::new(self.n, pieces)
    }

    /// `u + t`.
    pub fn add_constant(&self, t: &Rat) -> PacfFinite {
        let pieces = self
            .pieces
            .iter()
            .map(|p| Piece::new(p.a.clone(), &p.b + t))
            .collect();
        PacfFinite {
            n: self.n,
            pieces,
        }
    }

    /// `u_lambda(x) = u(x / lambda)`: slopes scale by `1/lambda`.
    pub fn scale_hom(&self, lambda: &Rat) -> Result<PacfFinite> {
        if !lambda.is_positive() {
            return Err(Error::ParameterOutOfRange("lambda must be positive".into()));
        }
        let inv = Rat::one() / lambda;
        let pieces = self
            .pieces
            .iter()
            .map(|p| Piece::new(p.a.scale(&inv), p.b.clone()))
            .collect();
        PacfFinite::new(self.n, pieces)
    }

    /// Pointwise maximum: union of piece lists, canonicalized.
    pub fn max_fn(&self, other: &PacfFinite) -> Result<PacfFinite> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut pieces = self.pieces.clone();
        pieces.extend(other.pieces.iter().cloned());
        PacfFinite::new(self.n, pieces)
    }

    /// Cone function `l_K + shift` from a body with the origin interior:
    /// pieces are the vertices of `K*`.
    pub fn cone(body: &PolytopeV, shift: &Rat) -> Result<PacfFinite> {
        let polar = body.polar()?.to_vrep()?;
        let pieces = polar
            .vertices()
            .iter()
            .map(|w| Piece::new(w.clone(), shift.clone()))
            .collect();
        PacfFinite::new(body.n(), pieces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::bodies::{standard_body, BodyKind};
    use crate::rat::{int, rat};

    fn pt(c: &[i64]) -> Point {
        Point(c.iter().map(|&x| int(x)).collect())
    }

    /// |x1| + |x2| + 1 as four sign pieces.
    fn vee2() -> PacfFinite {
        let pieces = [(-1, -1), (1, -1), (-1, 1), (1, 1)]
            .iter()
            .map(|&(s1, s2)| Piece::new(pt(&[s1, s2]), int(1)))
            .collect();
        PacfFinite::new(2, pieces).unwrap()
    }

    #[test]
    fn eval_is_max_of_pieces() {
        let u = vee2();
        assert_eq!(u.eval(&pt(&[0, 0])).unwrap(), int(1));
        assert_eq!(u.eval(&pt(&[2, -3])).unwrap(), int(6));
    }

    #[test]
    fn redundant_piece_is_dropped() {
        // max(0, x, 2x): the middle piece never wins on an interval.
        let u = PacfFinite::new(
            1,
            vec![
                Piece::new(pt(&[0]), int(0)),
                Piece::new(pt(&[1]), int(0)),
                Piece::new(pt(&[2]), int(0)),
            ],
        )
        .unwrap();
        assert_eq!(u.pieces().len(), 2);
        // Duplicate slope keeps the larger offset.
        let v = PacfFinite::new(
            1,
            vec![Piece::new(pt(&[1]), int(0)), Piece::new(pt(&[1]), int(3))],
        )
        .unwrap();
        assert_eq!(v.pieces(), &[Piece::new(pt(&[1]), int(3))]);
    }

    #[test]
    fn coercivity_margin_examples() {
        // Slopes (+-1, +-1) hull to Q^2: margin 1.
        assert_eq!(vee2().coercivity_margin_sq(), int(1));
        // Collinear slopes: not coercive.
        let u = PacfFinite::new(
            1,
            vec![Piece::new(pt(&[1]), int(0)), Piece::new(pt(&[2]), int(0))],
        )
        .unwrap();
        assert_eq!(u.coercivity_margin_sq(), int(0));
        assert!(!u.is_coercive());
        // Cone function: margin is the squared inradius of K*.
        let q2 = standard_body(BodyKind::Cube, 2, &[]).unwrap();
        let lk = PacfFinite::cone(&q2, &int(0)).unwrap();
        let c2 = q2.polar().unwrap().to_vrep().unwrap();
        assert_eq!(lk.coercivity_margin_sq(), c2.inradius_sq_at_origin());
    }

    #[test]
    fn gauge_of_cube_matches_linf_norm() {
        let q2 = standard_body(BodyKind::Cube, 2, &[]).unwrap();
        let lk = PacfFinite::cone(&q2, &int(0)).unwrap();
        assert_eq!(lk.eval(&Point(vec![rat(1, 2), int(-2)])).unwrap(), int(2));
    }

    #[test]
    fn sublevel_of_cone_scales_the_body() {
        let q2 = standard_body(BodyKind::Cube, 2, &[]).unwrap();
        let lk = PacfFinite::cone(&q2, &int(0)).unwrap();
        let s = lk.sublevel(&int(2)).unwrap().unwrap();
        assert_eq!(s.to_vrep().unwrap(), q2.scale(&int(2)));
        assert!(lk.sublevel(&int(-1)).unwrap().is_none());
    }

    #[test]
    fn sublevel_at_min_is_the_argmin_point() {
        let u = vee2();
        let s = u.sublevel(&int(1)).unwrap().unwrap();
        let v = s.to_vrep().unwrap();
        assert_eq!(v.vertices(), &[pt(&[0, 0])]);
        assert_eq!(v.volume(), int(0));
    }

    #[test]
    fn transforms_rewrite_pieces_exactly() {
        let u = vee2();
        let y = pt(&[3, -2]);
        let ut = u.translate(&y).unwrap();
        for x in [pt(&[0, 0]), pt(&[5, 7]), pt(&[-1, 4])] {
            assert_eq!(ut.eval(&x).unwrap(), u.eval(&x.sub(&y)).unwrap());
        }
        let lambda = int(3);
        let us = u.scale_hom(&lambda).unwrap();
        assert_eq!(us.eval(&pt(&[3, 3])).unwrap(), u.eval(&pt(&[1, 1])).unwrap());
        let phi = crate::geom::maps::random_unimodular(2, 11, 4);
        let uc = u.compose_linear(&phi).unwrap();
        let x = pt(&[2, 5]);
        assert_eq!(
            uc.eval(&phi.apply(&x)).unwrap(),
            u.eval(&x).unwrap(),
            "u(phi^-1 phi x) = u(x)"
        );
    }
}
