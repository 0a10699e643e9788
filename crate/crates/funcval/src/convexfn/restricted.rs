//! Polyhedral convex functions on a bounded domain polytope, together with
//! their linearity subdivisions and exact conjugation back to the finite
//! class.

use crate::convexfn::finite::{PacfFinite, Piece};
use crate::convexfn::lowerhull::lower_hull;
use crate::error::{Error, Result};
use crate::geom::point::Point;
use crate::geom::polytope::{chart, Halfspace, PolytopeH, PolytopeV};
use crate::linalg;
use crate::rat::Rat;
use num_traits::Zero;
use std::collections::BTreeSet;

/// One linearity cell: on `poly`, the host function equals
/// `gradient . y - value`.
///
/// When the host is a conjugate `u*`, `gradient` is the tessellation point
/// `x_C` of `u` with `value = u(x_C)`, and `poly` is the subdifferential
/// `du(x_C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub gradient: Point,
    pub value: Rat,
    pub poly: PolytopeV,
    pub poly_h: PolytopeH,
}

impl Cell {
    pub fn piece(&self) -> Piece {
        Piece::new(self.gradient.clone(), -self.value.clone())
    }

    pub fn volume(&self) -> Rat {
        self.poly.volume()
    }
}

/// The affine-linearity subdivision of a conjugate: cells tile `ambient`.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub ambient: PolytopeH,
    pub cells: Vec<Cell>,
}

/// Complexity guard for the combinatorial subdivision paths.
#[derive(Clone, Copy, Debug)]
pub struct Guard {
    pub max_n: usize,
    pub max_pieces: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_n: 3,
            max_pieces: 12,
        }
    }
}

/// Polyhedral function `max_i (a_i . x + b_i)` on a bounded domain, `+inf`
/// outside. Canonical: pieces are exactly the owners of the linearity cells.
#[derive(Clone, Debug)]
pub struct PacfRestricted {
    n: usize,
    pieces: Vec<Piece>,
    domain: PolytopeH,
    cells: Vec<Cell>,
}

impl PartialEq for PacfRestricted {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.pieces == other.pieces && self.domain == other.domain
    }
}
impl Eq for PacfRestricted {}

fn sort_cells(cells: &mut Vec<Cell>) {
    cells.sort_by(|x, y| {
        (&x.gradient, &x.value, x.poly.vertices()).cmp(&(&y.gradient, &y.value, y.poly.vertices()))
    });
}

fn pieces_of_cells(cells: &[Cell]) -> Vec<Piece> {
    let mut pieces: Vec<Piece> = cells.iter().map(Cell::piece).collect();
    pieces.sort();
    pieces.dedup();
    pieces
}

impl PacfRestricted {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn domain(&self) -> &PolytopeH {
        &self.domain
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Exact value, `None` outside the domain.
    pub fn eval(&self, x: &Point) -> Result<Option<Rat>> {
        if x.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.dim(),
            });
        }
        if !self.domain.contains(x) {
            return Ok(None);
        }
        Ok(self.pieces.iter().map(|p| p.eval(x)).max())
    }

    /// Sublevel set `{w <= t}` within the domain.
    pub fn sublevel(&self, t: &Rat) -> Result<Option<PolytopeH>> {
        let mut hs: Vec<Halfspace> = self
            .pieces
            .iter()
            .map(|p| Halfspace::new(p.a.clone(), t - &p.b))
            .collect();
        hs.extend(self.domain.halfspaces().iter().cloned());
        match PolytopeH::new_assume_bounded(self.n, hs) {
            Ok(p) => Ok(Some(p)),
            Err(Error::Empty) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Builds from raw pieces and a domain; the subdivision is recovered from
    /// the dominance structure of the lifted lower hull.
    pub fn from_parts(
        n: usize,
        pieces: Vec<Piece>,
        domain: PolytopeH,
        guard: Guard,
    ) -> Result<PacfRestricted> {
        if n > guard.max_n || pieces.len() > guard.max_pieces {
            return Err(Error::ComplexityGuard(format!(
                "n = {n}, pieces = {} exceeds guard ({}, {})",
                pieces.len(),
                guard.max_n,
                guard.max_pieces
            )));
        }
        // Canonicalize as a finite function first: pieces redundant on R^n are
        // redundant on any domain.
        let finite = PacfFinite::new(n, pieces)?;
        let dom_v = domain.to_vrep()?;
        let dom_dim = dom_v.dim();
        let ps = finite.pieces();
        let cells = if ps.len() == 1 {
            vec![Cell {
                gradient: ps[0].a.clone(),
                value: -ps[0].b.clone(),
                poly: dom_v.clone(),
                poly_h: domain.clone(),
            }]
        } else {
            let slopes: Vec<Point> = ps.iter().map(|p| p.a.clone()).collect();
            let ch = chart(&slopes);
            let zs: Vec<Rat> = ps.iter().map(|p| -p.b.clone()).collect();
            let lh = lower_hull(&ch.coords, &zs);
            // Dominance neighbours: pieces sharing a lower-hull facet.
            let mut neighbours: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ps.len()];
            for f in &lh.facets {
                for &i in &f.members {
                    for &j in &f.members {
                        if i != j {
                            neighbours[i].insert(j);
                        }
                    }
                }
            }
            let mut cells = Vec::new();
            for i in 0..ps.len() {
                let mut hs: Vec<Halfspace> = domain.halfspaces().to_vec();
                for &j in &neighbours[i] {
                    // a_j . x + b_j <= a_i . x + b_i
                    hs.push(Halfspace::new(
                        ps[j].a.sub(&ps[i].a),
                        &ps[i].b - &ps[j].b,
                    ));
                }
                let poly = match PolytopeH::raw(n, hs).to_vrep_assume_bounded() {
                    Ok(p) => p,
                    Err(Error::Empty) => continue,
                    Err(e) => return Err(e),
                };
                if poly.dim() != dom_dim {
                    continue;
                }
                cells.push(Cell {
                    gradient: ps[i].a.clone(),
                    value: -ps[i].b.clone(),
                    poly_h: poly.to_hrep(),
                    poly,
                });
            }
            cells
        };
        Self::from_cells(n, domain, cells)
    }

    /// Assembles a restricted function from known cells.
    pub(crate) fn from_cells(n: usize, domain: PolytopeH, mut cells: Vec<Cell>) -> Result<PacfRestricted> {
        if cells.is_empty() {
            return Err(Error::Empty);
        }
        sort_cells(&mut cells);
        Ok(PacfRestricted {
            n,
            pieces: pieces_of_cells(&cells),
            domain,
            cells,
        })
    }

    /// Intersects the domain with extra halfspaces, refitting every cell.
    pub fn restrict_domain(&self, extra: &PolytopeH) -> Result<PacfRestricted> {
        let domain = self
            .domain
            .intersect(extra)?
            .ok_or(Error::Empty)?;
        let dom_dim = domain.to_vrep()?.dim();
        let mut cells = Vec::new();
        for c in &self.cells {
            let mut hs = c.poly_h.halfspaces().to_vec();
            hs.extend(extra.halfspaces().iter().cloned());
            let poly = match PolytopeH::raw(self.n, hs).to_vrep_assume_bounded() {
                Ok(p) => p,
                Err(Error::Empty) => continue,
                Err(e) => return Err(e),
            };
            if poly.dim() != dom_dim {
                continue;
            }
            cells.push(Cell {
                gradient: c.gradient.clone(),
                value: c.value.clone(),
                poly_h: poly.to_hrep(),
                poly,
            });
        }
        Self::from_cells(self.n, domain, cells)
    }

    /// Pointwise maximum via common refinement of the two subdivisions.
    pub fn max_fn(&self, other: &PacfRestricted) -> Result<PacfRestricted> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let domain = self
            .domain
            .intersect(&other.domain)?
            .ok_or(Error::Empty)?;
        let mut cells = Vec::new();
        for c1 in &self.cells {
            for c2 in &other.cells {
                if !bbox_overlap(&c1.poly, &c2.poly) {
                    continue;
                }
                let inter = match c1.poly_h.intersect(&c2.poly_h)? {
                    Some(i) => i,
                    None => continue,
                };
                let p1 = c1.piece();
                let p2 = c2.piece();
                if p1.a == p2.a {
                    let win = if p1.b >= p2.b { c1 } else { c2 };
                    push_cell_fulldim(&mut cells, self.n, win.gradient.clone(), win.value.clone(), inter)?;
                } else {
                    // Side where p1 >= p2: (a2 - a1) . x <= b1 - b2.
                    let h12 = Halfspace::new(p2.a.sub(&p1.a), &p1.b - &p2.b);
                    if let Some(s1) = inter.intersect_halfspace(&h12)? {
                        push_cell_fulldim(&mut cells, self.n, c1.gradient.clone(), c1.value.clone(), s1)?;
                    }
                    let h21 = Halfspace::new(p1.a.sub(&p2.a), &p2.b - &p1.b);
                    if let Some(s2) = inter.intersect_halfspace(&h21)? {
                        push_cell_fulldim(&mut cells, self.n, c2.gradient.clone(), c2.value.clone(), s2)?;
                    }
                }
            }
        }
        Self::from_cells(self.n, domain, cells)
    }

    /// Pointwise minimum; `None` when the minimum fails the exact convexity
    /// certificate.
    pub fn min_fn(&self, other: &PacfRestricted) -> Result<Option<PacfRestricted>> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        // (w1 ^ w2)** = (w1* v w2*)* with the finite max being a plain piece
        // union; the candidate equals the minimum iff the minimum is convex.
        let v1 = self.conjugate()?;
        let v2 = other.conjugate()?;
        let candidate = conjugate_finite(&v1.max_fn(&v2)?)?;
        if restricted_min_equals(&candidate, self, other)? {
            Ok(Some(candidate))
        } else {
            Ok(None)
        }
    }

    /// Legendre-Fenchel conjugate back to the finite class: the max over the
    /// graph vertices `(v, -w(v))` of all subdivision cells.
    pub fn conjugate(&self) -> Result<PacfFinite> {
        let mut pieces = Vec::new();
        let mut seen = BTreeSet::new();
        for c in &self.cells {
            for v in c.poly.vertices() {
                if seen.insert(v.clone()) {
                    let w = c.gradient.dot(v) - &c.value;
                    pieces.push(Piece::new(v.clone(), -w));
                }
            }
        }
        PacfFinite::new(self.n, pieces)
    }

    /// `w + t`.
    pub fn add_constant(&self, t: &Rat) -> PacfRestricted {
        let cells = self
            .cells
            .iter()
            .map(|c| Cell {
                gradient: c.gradient.clone(),
                value: &c.value - t,
                poly: c.poly.clone(),
                poly_h: c.poly_h.clone(),
            })
            .collect();
        PacfRestricted {
            n: self.n,
            pieces: self
                .pieces
                .iter()
                .map(|p| Piece::new(p.a.clone(), &p.b + t))
                .collect(),
            domain: self.domain.clone(),
            cells,
        }
    }
}

fn push_cell_fulldim(
    cells: &mut Vec<Cell>,
    n: usize,
    gradient: Point,
    value: Rat,
    poly_h: PolytopeH,
) -> Result<()> {
    let poly = poly_h.to_vrep_assume_bounded()?;
    if poly.dim() == n {
        cells.push(Cell {
            gradient,
            value,
            poly,
            poly_h,
        });
    }
    Ok(())
}

pub(crate) fn bbox(p: &PolytopeV) -> (Vec<Rat>, Vec<Rat>) {
    let n = p.n();
    let verts = p.vertices();
    let mut lo = verts[0].coords().to_vec();
    let mut hi = lo.clone();
    for v in &verts[1..] {
        for i in 0..n {
            if v.coords()[i] < lo[i] {
                lo[i] = v.coords()[i].clone();
            }
            if v.coords()[i] > hi[i] {
                hi[i] = v.coords()[i].clone();
            }
        }
    }
    (lo, hi)
}

pub(crate) fn bbox_overlap(a: &PolytopeV, b: &PolytopeV) -> bool {
    let (alo, ahi) = bbox(a);
    let (blo, bhi) = bbox(b);
    alo.iter()
        .zip(&bhi)
        .all(|(l, h)| l <= h)
        && blo.iter().zip(&ahi).all(|(l, h)| l <= h)
}

/// Conjugate of a finite function: the lower envelope of the lifted pieces on
/// `conv{a_i}`, with the subdivision cells read off the lower-hull facets.
pub fn conjugate_finite(u: &PacfFinite) -> Result<PacfRestricted> {
    let n = u.n();
    let ps = u.pieces();
    let slopes: Vec<Point> = ps.iter().map(|p| p.a.clone()).collect();
    let dom_v = PolytopeV::hull(&slopes).expect("slopes are dimension-checked");
    let domain = dom_v.to_hrep();
    if ps.len() == 1 {
        let cells = vec![Cell {
            gradient: Point::zero(n),
            value: u.eval(&Point::zero(n))?,
            poly: dom_v,
            poly_h: domain.clone(),
        }];
        return PacfRestricted::from_cells(n, domain, cells);
    }
    let ch = chart(&slopes);
    let zs: Vec<Rat> = ps.iter().map(|p| -p.b.clone()).collect();
    let lh = lower_hull(&ch.coords, &zs);
    let mut cells = Vec::new();
    for f in &lh.facets {
        // Chart affine function z = grad . alpha + c lifts to the ambient
        // piece X . y + beta with basis * X = grad, beta = c - X . base.
        let x_vec = if ch.dim() == 0 {
            vec![Rat::zero(); n]
        } else {
            linalg::solve_any(&ch.basis, &f.grad).expect("chart basis has full row rank")
        };
        let gradient = Point(x_vec);
        let beta = &f.offset - gradient.dot(&ch.base);
        let corner_slopes: Vec<Point> = f.corners.iter().map(|&i| slopes[i].clone()).collect();
        let poly = PolytopeV::hull(&corner_slopes)?;
        cells.push(Cell {
            gradient,
            value: -beta,
            poly_h: poly.to_hrep(),
            poly,
        });
    }
    PacfRestricted::from_cells(n, domain, cells)
}

/// The linearity subdivision of `dom u*` for a coercive finite function; the
/// cell gradients are the tessellation points of `u`.
pub fn subdivision(u: &PacfFinite) -> Result<Subdivision> {
    if !u.is_coercive() {
        return Err(Error::NotCoercive);
    }
    let w = conjugate_finite(u)?;
    Ok(Subdivision {
        ambient: w.domain.clone(),
        cells: w.cells,
    })
}

/// Minimum value of a coercive function together with an argmin point.
pub fn min_value(u: &PacfFinite) -> Result<(Rat, Point)> {
    if !u.is_coercive() {
        return Err(Error::NotCoercive);
    }
    let w = conjugate_finite(u)?;
    let origin = Point::zero(u.n());
    let min = -w.eval(&origin)?.expect("0 in dom u* by coercivity");
    let cell = w
        .cells
        .iter()
        .find(|c| c.poly_h.contains(&origin))
        .expect("cells tile the domain");
    Ok((min, cell.gradient.clone()))
}

/// Exact test for `candidate == min(w1, w2)` pointwise on all of `R^n`
/// (with `+inf` outside domains). Complete for polyhedral data: the three
/// subdivisions and the domain complements are refined structurally, and on
/// every full-dimensional region two affine functions agree iff their
/// coefficients agree.
pub fn restricted_min_equals(
    candidate: &PacfRestricted,
    w1: &PacfRestricted,
    w2: &PacfRestricted,
) -> Result<bool> {
    let n = candidate.n;
    // Domain condition: dom(min) = D1 u D2 must be convex and equal dom(candidate).
    let d1v = w1.domain.to_vrep()?;
    let d2v = w2.domain.to_vrep()?;
    let union_hull = d1v.conv_union(&d2v)?;
    if union_hull.to_hrep() != candidate.domain {
        return Ok(false);
    }
    let inter_vol = match w1.domain.intersect(&w2.domain)? {
        Some(i) => i.to_vrep_assume_bounded()?.volume(),
        None => Rat::zero(),
    };
    if union_hull.volume() != d1v.volume() + d2v.volume() - inter_vol {
        return Ok(false);
    }
    // Extended cell lists: real cells plus domain-complement pieces (piece = None).
    let ext1 = extended_cells(w1, &candidate.domain)?;
    let ext2 = extended_cells(w2, &candidate.domain)?;
    for e in &candidate.cells {
        let pe = e.piece();
        for (op1, poly1) in &ext1 {
            if !bbox_overlap(&e.poly, poly1) {
                continue;
            }
            let i1 = match e.poly_h.intersect(&poly1.to_hrep())? {
                Some(i) => i,
                None => continue,
            };
            let i1v = i1.to_vrep_assume_bounded()?;
            if i1v.dim() < n {
                continue;
            }
            for (op2, poly2) in &ext2 {
                if !bbox_overlap(&i1v, poly2) {
                    continue;
                }
                let i2 = match i1.intersect(&poly2.to_hrep())? {
                    Some(i) => i,
                    None => continue,
                };
                let i2v = i2.to_vrep_assume_bounded()?;
                if i2v.dim() < n {
                    continue;
                }
                match (op1, op2) {
                    (None, None) => return Ok(false),
                    (Some(p1), None) => {
                        if *p1 != pe {
                            return Ok(false);
                        }
                    }
                    (None, Some(p2)) => {
                        if *p2 != pe {
                            return Ok(false);
                        }
                    }
                    (Some(p1), Some(p2)) => {
                        if p1 == p2 {
                            if *p1 != pe {
                                return Ok(false);
                            }
                        } else {
                            // Side where p1 <= p2 must carry p1, and vice versa.
                            let h12 = Halfspace::new(p1.a.sub(&p2.a), &p2.b - &p1.b);
                            if full_dim_piece(&i2, &h12, n)? && *p1 != pe {
                                return Ok(false);
                            }
                            let h21 = Halfspace::new(p2.a.sub(&p1.a), &p1.b - &p2.b);
                            if full_dim_piece(&i2, &h21, n)? && *p2 != pe {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

fn full_dim_piece(region: &PolytopeH, h: &Halfspace, n: usize) -> Result<bool> {
    match region.intersect_halfspace(h)? {
        Some(p) => Ok(p.to_vrep_assume_bounded()?.dim() == n),
        None => Ok(false),
    }
}

/// Cells of `w` plus a polyhedral decomposition of `universe \ dom w`,
/// tagged `None`.
fn extended_cells(
    w: &PacfRestricted,
    universe: &PolytopeH,
) -> Result<Vec<(Option<Piece>, PolytopeV)>> {
    let mut out: Vec<(Option<Piece>, PolytopeV)> = w
        .cells
        .iter()
        .map(|c| (Some(c.piece()), c.poly.clone()))
        .collect();
    let mut kept: Vec<Halfspace> = universe.halfspaces().to_vec();
    for h in w.domain.halfspaces() {
        let mut hs = kept.clone();
        hs.push(Halfspace::new(h.normal.neg(), -h.offset.clone()));
        match PolytopeH::raw(w.n, hs).to_vrep_assume_bounded() {
            Ok(p) => {
                if p.dim() == w.n {
                    out.push((None, p));
                }
            }
            Err(Error::Empty) => {}
            Err(e) => return Err(e),
        }
        kept.push(h.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::bodies::{standard_body, BodyKind};
    use crate::rat::{int, rat};

    fn pt(c: &[i64]) -> Point {
        Point(c.iter().map(|&x| int(x)).collect())
    }

    fn vee2_plus(b: i64) -> PacfFinite {
        let pieces = [(-1, -1), (1, -1), (-1, 1), (1, 1)]
            .iter()
            .map(|&(s1, s2)| Piece::new(pt(&[s1, s2]), int(b)))
            .collect();
        PacfFinite::new(2, pieces).unwrap()
    }

    #[test]
    fn conjugate_of_gauge_is_indicator_of_polar() {
        // (l_{Q^2})* = I_{C^2}: a single zero cell on the cross-polytope.
        let q2 = standard_body(BodyKind::Cube, 2, &[]).unwrap();
        let lk = PacfFinite::cone(&q2, &int(0)).unwrap();
        let w = conjugate_finite(&lk).unwrap();
        let c2 = standard_body(BodyKind::Cross, 2, &[]).unwrap();
        assert_eq!(w.domain(), &c2.to_hrep());
        assert_eq!(w.cells().len(), 1);
        assert_eq!(w.cells()[0].gradient, Point::zero(2));
        assert_eq!(w.cells()[0].value, int(0));
        assert_eq!(w.cells()[0].poly, c2);
    }

    #[test]
    fn conjugate_of_zero_indicator_is_support_function() {
        // w = 0 on K, so w* = h_K = max over vertices of K.
        let q2 = standard_body(BodyKind::Cube, 2, &[]).unwrap();
        let w = PacfRestricted::from_parts(
            2,
            vec![Piece::new(pt(&[0, 0]), int(0))],
            q2.to_hrep(),
            Guard::default(),
        )
        .unwrap();
        let h = w.conjugate().unwrap();
        assert_eq!(h.pieces().len(), 4);
        for v in [pt(&[3, 1]), pt(&[-2, 5])] {
            let mx = q2
                .vertices()
                .iter()
                .map(|k| k.dot(&v))
                .max()
                .unwrap();
            assert_eq!(h.eval(&v).unwrap(), mx);
        }
    }

    #[test]
    fn biconjugation_recovers_canonical_input() {
        let u = vee2_plus(1);
        let ustar = conjugate_finite(&u).unwrap();
        let back = ustar.conjugate().unwrap();
        assert_eq!(back, u);
    }

    #[test]
    fn vee_subdivision_is_single_cell_with_mass_four() {
        let u = vee2_plus(0);
        let s = subdivision(&u).unwrap();
        assert_eq!(s.cells.len(), 1);
        assert_eq!(s.cells[0].gradient, Point::zero(2));
        assert_eq!(s.cells[0].volume(), int(4));
    }

    #[test]
    fn subgradient_duality_at_cell_samples() {
        // x_C . y = u(x_C) + u*(y) on each cell.
        let u = PacfFinite::new(
            2,
            vec![
                Piece::new(pt(&[-1, -1]), int(0)),
                Piece::new(pt(&[1, -1]), int(1)),
                Piece::new(pt(&[-1, 2]), int(-1)),
                Piece::new(pt(&[2, 1]), int(0)),
            ],
        )
        .unwrap();
        assert!(u.is_coercive());
        let w = conjugate_finite(&u).unwrap();
        for c in w.cells() {
            for y in c.poly.vertices() {
                let ustar = w.eval(y).unwrap().unwrap();
                assert_eq!(c.gradient.dot(y), u.eval(&c.gradient).unwrap() + ustar);
            }
        }
        // Cell volumes tile dom u*.
        let total: Rat = w.cells().iter().map(Cell::volume).sum();
        assert_eq!(total, u.slope_hull().volume());
    }

    #[test]
    fn min_value_via_conjugate() {
        let u = vee2_plus(1);
        let (min, argmin) = min_value(&u).unwrap();
        assert_eq!(min, int(1));
        assert_eq!(argmin, Point::zero(2));
        let shifted = u.translate(&pt(&[2, 3])).unwrap();
        let (min, argmin) = min_value(&shifted).unwrap();
        assert_eq!(min, int(1));
        assert_eq!(argmin, pt(&[2, 3]));
    }

    #[test]
    fn from_parts_matches_conjugate_cells() {
        // Rebuilding u* from its raw pieces and domain recovers the same
        // subdivision as the conjugation route.
        let u = PacfFinite::new(
            2,
            vec![
                Piece::new(pt(&[-1, -1]), int(0)),
                Piece::new(pt(&[1, -1]), int(1)),
                Piece::new(pt(&[-1, 2]), int(-1)),
                Piece::new(pt(&[2, 1]), int(0)),
            ],
        )
        .unwrap();
        let w = conjugate_finite(&u).unwrap();
        let rebuilt = PacfRestricted::from_parts(
            2,
            w.pieces().to_vec(),
            w.domain().clone(),
            Guard::default(),
        )
        .unwrap();
        assert_eq!(&rebuilt, &w);
        let mut a: Vec<_> = w.cells().to_vec();
        let mut b: Vec<_> = rebuilt.cells().to_vec();
        sort_cells(&mut a);
        sort_cells(&mut b);
        assert_eq!(a, b);
    }

    #[test]
    fn restricted_max_refines_cells() {
        let q2 = standard_body(BodyKind::Cube, 2, &[]).unwrap();
        let zero = PacfRestricted::from_parts(
            2,
            vec![Piece::new(pt(&[0, 0]), int(0))],
            q2.to_hrep(),
            Guard::default(),
        )
        .unwrap();
        let tilt = PacfRestricted::from_parts(
            2,
            vec![Piece::new(pt(&[1, 0]), int(0))],
            q2.to_hrep(),
            Guard::default(),
        )
        .unwrap();
        let m = zero.max_fn(&tilt).unwrap();
        assert_eq!(m.cells().len(), 2);
        assert_eq!(m.eval(&pt(&[-1, 0])).unwrap().unwrap(), int(0));
        assert_eq!(m.eval(&Point(vec![rat(1, 2), int(0)])).unwrap().unwrap(), rat(1, 2));
    }

    #[test]
    fn restricted_min_convex_and_nonconvex() {
        // Indicator slabs: min of I_[K] and I_[L] is I_[K u L], convex only
        // when K u L is convex.
        let k = PolytopeV::hull(&[pt(&[-2, -1]), pt(&[0, -1]), pt(&[-2, 1]), pt(&[0, 1])])
            .unwrap();
        let l = PolytopeV::hull(&[pt(&[0, -1]), pt(&[2, -1]), pt(&[0, 1]), pt(&[2, 1])])
            .unwrap();
        let gap = PolytopeV::hull(&[pt(&[1, -1]), pt(&[2, -1]), pt(&[1, 1]), pt(&[2, 1])])
            .unwrap();
        let zero_on = |p: &PolytopeV| {
            PacfRestricted::from_parts(
                2,
                vec![Piece::new(pt(&[0, 0]), int(0))],
                p.to_hrep(),
                Guard::default(),
            )
            .unwrap()
        };
        let wk = zero_on(&k);
        let wl = zero_on(&l);
        let wg = zero_on(&gap);
        let joined = wk.min_fn(&wl).unwrap().expect("adjacent slabs join");
        let full = PolytopeV::hull(&[pt(&[-2, -1]), pt(&[2, -1]), pt(&[-2, 1]), pt(&[2, 1])])
            .unwrap();
        assert_eq!(joined.domain(), &full.to_hrep());
        assert!(wk.min_fn(&wg).unwrap().is_none(), "gap breaks convexity");
    }
}
