//! Standard test bodies and the splitting lemma for the truncated simplex
//! family `T_delta`.

use crate::error::{Error, Result};
use crate::geom::point::Point;
use crate::geom::polytope::{Halfspace, PolytopeV};
use crate::rat::{int, rat, Rat};
use num_traits::{One, Signed, Zero};

/// Preset polytope families.
#[derive(Clone, Debug, PartialEq)]
pub enum BodyKind {
    /// Standard simplex `conv{0, e_1, ..., e_n}`.
    Simplex,
    /// `(1 + 2 delta) T^n - delta (1,...,1)`.
    TDelta(Rat),
    /// Centered cube `[-1, 1]^n`.
    Cube,
    /// Box `[0, lambda]^n`.
    Box(Rat),
    /// Cross-polytope `conv{+-e_i}`.
    Cross,
    /// Inscribed approximation of the unit ball: a polygon with rational
    /// vertices lying exactly on the unit circle (n = 2 only). The parameter
    /// is the vertex count.
    BallApprox(usize),
}

/// Valid range for the `T_delta` parameter: `0 < delta < 1/(n-2)` for
/// `n >= 3`, `0 < delta < 1` for `n <= 2`.
pub fn tdelta_range_ok(n: usize, delta: &Rat) -> bool {
    if !delta.is_positive() {
        return false;
    }
    if n >= 3 {
        delta < &(Rat::one() / int(n as i64 - 2))
    } else {
        delta < &Rat::one()
    }
}

/// Builds one of the preset bodies as an exact vertex list.
pub fn standard_body(kind: BodyKind, n: usize, _params: &[Rat]) -> Result<PolytopeV> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange("dimension must be positive".into()));
    }
    match kind {
        BodyKind::Simplex => {
            let mut pts = vec![Point::zero(n)];
            for i in 0..n {
                pts.push(Point::unit(n, i));
            }
            PolytopeV::hull(&pts)
        }
        BodyKind::TDelta(delta) => {
            if !tdelta_range_ok(n, &delta) {
                return Err(Error::ParameterOutOfRange(format!(
                    "delta = {} invalid for T_delta in dimension {n}",
                    crate::rat::format_rat(&delta)
                )));
            }
            let mut pts = Vec::with_capacity(n + 1);
            pts.push(Point(vec![-delta.clone(); n]));
            for i in 0..n {
                let mut c = vec![-delta.clone(); n];
                c[i] = Rat::one() + &delta;
                pts.push(Point(c));
            }
            PolytopeV::hull(&pts)
        }
        BodyKind::Cube => {
            let pts = corner_points(n, &-Rat::one(), &Rat::one());
            PolytopeV::hull(&pts)
        }
        BodyKind::Box(lambda) => {
            if lambda.is_negative() {
                return Err(Error::ParameterOutOfRange("box side must be >= 0".into()));
            }
            let pts = corner_points(n, &Rat::zero(), &lambda);
            PolytopeV::hull(&pts)
        }
        BodyKind::Cross => {
            let mut pts = Vec::with_capacity(2 * n);
            for i in 0..n {
                pts.push(Point::unit(n, i));
                pts.push(Point::unit(n, i).neg());
            }
            PolytopeV::hull(&pts)
        }
        BodyKind::BallApprox(m) => {
            if n != 2 {
                return Err(Error::ParameterOutOfRange(
                    "ball approximation implemented for n = 2".into(),
                ));
            }
            if m < 3 {
                return Err(Error::ParameterOutOfRange("need at least 3 vertices".into()));
            }
            PolytopeV::hull(&circle_points(m))
        }
    }
}

fn corner_points(n: usize, lo: &Rat, hi: &Rat) -> Vec<Point> {
    (0..1usize << n)
        .map(|mask| {
            Point(
                (0..n)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            hi.clone()
                        } else {
                            lo.clone()
                        }
                    })
                    .collect(),
            )
        })
        .collect()
}

/// `m` rational points exactly on the unit circle, approximately equally
/// spaced. Uses the tangent half-angle parametrization
/// `(cos, sin) = ((1 - t^2)/(1 + t^2), 2t/(1 + t^2))` with `t` a dyadic
/// approximation of `tan(theta/2)`.
fn circle_points(m: usize) -> Vec<Point> {
    const DENOM: i64 = 1 << 20;
    let mut pts = Vec::with_capacity(m);
    for k in 0..m {
        let theta = 2.0 * std::f64::consts::PI * (k as f64) / (m as f64);
        // Map theta into (-pi, pi] so tan(theta/2) stays finite.
        let theta = if theta > std::f64::consts::PI {
            theta - 2.0 * std::f64::consts::PI
        } else {
            theta
        };
        if (theta - std::f64::consts::PI).abs() < 1e-12 {
            pts.push(Point(vec![-Rat::one(), Rat::zero()]));
            continue;
        }
        let t = (theta / 2.0).tan();
        let t = rat((t * DENOM as f64).round() as i64, DENOM);
        let t2 = &t * &t;
        let denom = Rat::one() + &t2;
        let x = (Rat::one() - &t2) / &denom;
        let y = (int(2) * &t) / &denom;
        pts.push(Point(vec![x, y]));
    }
    pts
}

/// The direction vertex `x_delta = (1 + delta, -delta, ..., -delta)`.
pub fn x_delta(n: usize, delta: &Rat) -> Point {
    let mut c = vec![-delta.clone(); n];
    c[0] = Rat::one() + delta;
    Point(c)
}

/// Results of the splitting-lemma checks for `T_delta`.
#[derive(Clone, Debug, PartialEq)]
pub struct TDeltaReport {
    /// `P u ((t-b) T_delta + b x_delta) = t T_delta`, exactly.
    pub union_identity: bool,
    /// `P n ((t-b) T_delta + b x_delta) = (t-b)(T_delta n {x_1 <= rho}) + b x_delta`.
    pub intersection_identity: bool,
    /// Computed polar-volume increment.
    pub increment: Rat,
    /// Closed-form increment.
    pub increment_formula: Rat,
    /// Increment equality.
    pub increment_matches: bool,
}

impl TDeltaReport {
    pub fn all_pass(&self) -> bool {
        self.union_identity && self.intersection_identity && self.increment_matches
    }
}

/// Exact verification of both set identities and the polar-volume increment
/// closed form for the `T_delta` family.
pub fn lemma_t_delta_suite(
    n: usize,
    delta: &Rat,
    rho: &Rat,
    b: &Rat,
    t: &Rat,
) -> Result<TDeltaReport> {
    if !tdelta_range_ok(n, delta) {
        return Err(Error::ParameterOutOfRange("delta out of range".into()));
    }
    if !rho.is_positive() || rho >= &Rat::one() {
        return Err(Error::ParameterOutOfRange("need 0 < rho < 1".into()));
    }
    if !b.is_positive() || t < b {
        return Err(Error::ParameterOutOfRange("need t >= b > 0".into()));
    }
    let tdelta = standard_body(BodyKind::TDelta(delta.clone()), n, &[])?;
    let xd = x_delta(n, delta);

    // P = t T_delta n {x_1 <= b(1+delta) + rho (t-b)}.
    let t_tdelta = tdelta.scale(t);
    let cut = Halfspace::new(
        Point::unit(n, 0),
        b * (Rat::one() + delta) + rho * (t - b),
    );
    let p = t_tdelta
        .to_hrep()
        .intersect_halfspace(&cut)?
        .ok_or(Error::Empty)?;
    let p_v = p.to_vrep()?;

    // piece = (t-b) T_delta + b x_delta.
    let piece = tdelta.scale(&(t - b)).translate(&xd.scale(b));

    // Union identity: both parts inside t T_delta, hull equals t T_delta and
    // the union covers it by inclusion-exclusion of exact volumes.
    let t_tdelta_h = t_tdelta.to_hrep();
    let contained = p_v
        .vertices()
        .iter()
        .chain(piece.vertices())
        .all(|v| t_tdelta_h.contains(v));
    let hull_eq = p_v.conv_union(&piece)? == t_tdelta;
    let inter = p.intersect(&piece.to_hrep())?;
    let inter_vol = match &inter {
        Some(q) => q.volume()?,
        None => Rat::zero(),
    };
    let union_vol = p_v.volume() + piece.volume() - &inter_vol;
    let union_identity = contained && hull_eq && union_vol == t_tdelta.volume();

    // Intersection identity, as canonical polytopes.
    let rhs = {
        let cut_rho = Halfspace::new(Point::unit(n, 0), rho.clone());
        let base = tdelta
            .to_hrep()
            .intersect_halfspace(&cut_rho)?
            .ok_or(Error::Empty)?
            .to_vrep()?;
        base.scale(&(t - b)).translate(&xd.scale(b))
    };
    let intersection_identity = match inter {
        Some(q) => q.to_vrep()? == rhs,
        None => rhs.volume().is_zero() && t == b,
    };

    // Polar-volume increment.
    let cut_rho = Halfspace::new(Point::unit(n, 0), rho.clone());
    let tdelta_cut = tdelta
        .to_hrep()
        .intersect_halfspace(&cut_rho)?
        .ok_or(Error::Empty)?
        .to_vrep()?;
    let vol_polar = |p: &PolytopeV| -> Result<Rat> { Ok(p.polar()?.to_vrep()?.volume()) };
    let increment = vol_polar(&tdelta_cut)? - vol_polar(&tdelta)?;

    // (1/(n! delta^(n-2))) ((1+delta)/(delta(1-(n-2)delta))) (1/rho - 1/(1+delta))
    let mut fact = Rat::one();
    for k in 2..=n {
        fact *= int(k as i64);
    }
    let nm2 = n as i64 - 2;
    let delta_pow = if nm2 >= 0 {
        num_traits::pow::pow(delta.clone(), nm2 as usize)
    } else {
        Rat::one() / delta
    };
    let one_plus = Rat::one() + delta;
    let increment_formula = (Rat::one() / (fact * delta_pow))
        * (&one_plus / (delta * (Rat::one() - int(nm2) * delta)))
        * (Rat::one() / rho - Rat::one() / &one_plus);

    Ok(TDeltaReport {
        union_identity,
        intersection_identity,
        increment_matches: increment == increment_formula,
        increment,
        increment_formula,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_delta_vertices_match_definition() {
        let t = standard_body(BodyKind::TDelta(rat(1, 2)), 2, &[]).unwrap();
        let expect = PolytopeV::hull(&[
            Point(vec![rat(-1, 2), rat(-1, 2)]),
            Point(vec![rat(3, 2), rat(-1, 2)]),
            Point(vec![rat(-1, 2), rat(3, 2)]),
        ])
        .unwrap();
        assert_eq!(t, expect);
        // Facets: x1 >= -1/2, x2 >= -1/2, x1 + x2 <= 1.
        let h = t.to_hrep();
        let expected = vec![
            Halfspace::new(Point(vec![int(-1), int(0)]), rat(1, 2)).to_primitive(),
            Halfspace::new(Point(vec![int(0), int(-1)]), rat(1, 2)).to_primitive(),
            Halfspace::new(Point(vec![int(1), int(1)]), int(1)).to_primitive(),
        ];
        for e in &expected {
            assert!(h.halfspaces().contains(e), "missing {e:?}");
        }
        assert_eq!(h.halfspaces().len(), 3);
    }

    #[test]
    fn t_delta_polar_matches_paper_vertex_list() {
        // (T_{1/2})* in the plane is conv{(-2,0),(0,-2),(1,1)}, of volume 4.
        let t = standard_body(BodyKind::TDelta(rat(1, 2)), 2, &[]).unwrap();
        let polar = t.polar().unwrap().to_vrep().unwrap();
        let expect = PolytopeV::hull(&[
            Point(vec![int(-2), int(0)]),
            Point(vec![int(0), int(-2)]),
            Point(vec![int(1), int(1)]),
        ])
        .unwrap();
        assert_eq!(polar, expect);
        assert_eq!(polar.volume(), int(4));
    }

    #[test]
    fn cross_polytope_has_unit_vertices() {
        let c3 = standard_body(BodyKind::Cross, 3, &[]).unwrap();
        assert_eq!(c3.vertices().len(), 6);
        let q3 = standard_body(BodyKind::Cube, 3, &[]).unwrap();
        assert_eq!(c3.polar().unwrap().to_vrep().unwrap(), q3);
    }

    #[test]
    fn box_volume() {
        let b = standard_body(BodyKind::Box(int(2)), 3, &[]).unwrap();
        assert_eq!(b.vertices().len(), 8);
        assert_eq!(b.volume(), int(8));
    }

    #[test]
    fn ball_vertices_lie_on_the_circle() {
        let b = standard_body(BodyKind::BallApprox(64), 2, &[]).unwrap();
        assert_eq!(b.vertices().len(), 64);
        for v in b.vertices() {
            assert_eq!(v.norm_sq(), Rat::one());
        }
        let area = crate::rat::to_f64(&b.volume());
        assert!((area - std::f64::consts::PI).abs() < 6e-3, "area {area}");
    }

    #[test]
    fn lemma_suite_exact_for_spec_examples() {
        // n = 2, delta = 1/2, rho = 1/2 gives increment 2.
        let r = lemma_t_delta_suite(2, &rat(1, 2), &rat(1, 2), &int(1), &int(2)).unwrap();
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.increment, int(2));

        // n = 3, delta = 1/4, rho = 1/3: all-rational equality.
        let r = lemma_t_delta_suite(3, &rat(1, 4), &rat(1, 3), &int(1), &int(2)).unwrap();
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.increment, rat(88, 9));
    }

    #[test]
    fn lemma_suite_degenerate_split_at_b_equals_t() {
        let r = lemma_t_delta_suite(2, &rat(1, 2), &rat(1, 2), &int(1), &int(1)).unwrap();
        assert!(r.union_identity && r.intersection_identity, "{r:?}");
    }

    #[test]
    fn lemma_suite_rejects_bad_parameters() {
        assert!(lemma_t_delta_suite(3, &int(2), &rat(1, 2), &int(1), &int(1)).is_err());
        assert!(lemma_t_delta_suite(2, &rat(1, 2), &int(1), &int(1), &int(1)).is_err());
        assert!(lemma_t_delta_suite(2, &rat(1, 2), &rat(1, 2), &int(2), &int(1)).is_err());
    }
}
