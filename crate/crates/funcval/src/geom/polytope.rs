//! Exact V- and H-representations of convex polytopes.
//!
//! Everything here is combinatorial rational arithmetic: convex hulls and
//! vertex enumeration work by exhaustive subset enumeration, which is exact
//! and entirely sufficient for ambient dimension up to [`MAX_DIM`].

use crate::error::{Error, Result};
use crate::geom::point::Point;
use crate::linalg;
use crate::rat::Rat;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// Largest ambient dimension accepted by the exact hull and vertex
/// enumeration routines.
pub const MAX_DIM: usize = 4;

/// Closed halfspace `normal . x <= offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: Point,
    pub offset: Rat,
}

impl Halfspace {
    pub fn new(normal: Point, offset: Rat) -> Self {
        Halfspace { normal, offset }
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.normal.dot(p) <= self.offset
    }

    /// Scales so the normal has coprime integer entries.
    pub fn to_primitive(&self) -> Halfspace {
        let mut v = self.normal.0.clone();
        v.push(self.offset.clone());
        let scaled = linalg::primitive_scale(&v);
        // primitive_scale preserves sign and only rescales by a positive factor
        // as long as some normal entry is non-zero.
        let factor = {
            let idx = self.normal.0.iter().position(|x| !x.is_zero());
            match idx {
                Some(i) => &scaled[i] / &self.normal.0[i],
                None => Rat::one(),
            }
        };
        debug_assert!(factor.is_positive() || self.normal.is_zero());
        let offset = scaled.last().unwrap().clone();
        Halfspace {
            normal: Point(scaled[..scaled.len() - 1].to_vec()),
            offset,
        }
    }
}

/// Polytope given by its extreme points, kept canonical (sorted, irredundant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeV {
    n: usize,
    vertices: Vec<Point>,
    dim: usize,
}

/// Bounded polytope given by irredundant halfspaces in canonical form.
///
/// Lower-dimensional polytopes carry their affine hull as pairs of opposite
/// halfspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeH {
    n: usize,
    halfspaces: Vec<Halfspace>,
}

/// Affine chart of a point set: `x = base + sum_j alpha_j basis_j`.
pub(crate) struct Chart {
    pub base: Point,
    /// Basis directions, rows of a `d x n` matrix.
    pub basis: Vec<Vec<Rat>>,
    /// Chart coordinates of the input points.
    pub coords: Vec<Point>,
}

impl Chart {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Maps a chart point back to ambient coordinates.
    pub fn to_ambient(&self, alpha: &Point) -> Point {
        let mut x = self.base.0.clone();
        for (a, b) in alpha.0.iter().zip(&self.basis) {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += a * bi;
            }
        }
        Point(x)
    }
}

/// Computes an affine chart for `points` (greedy basis extraction).
pub(crate) fn chart(points: &[Point]) -> Chart {
    let base = points[0].clone();
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    for p in points.iter().skip(1) {
        let d = p.sub(&base);
        if d.is_zero() {
            continue;
        }
        let mut rows = basis.clone();
        rows.push(d.0.clone());
        if linalg::rank(&rows) > basis.len() {
            basis.push(d.0);
        }
    }
    let coords = points
        .iter()
        .map(|p| {
            if basis.is_empty() {
                return Point(Vec::new());
            }
            let diff = p.sub(&base);
            // Solve basis^T alpha = diff (n equations, d unknowns, consistent).
            let mat: Vec<Vec<Rat>> = (0..diff.dim())
                .map(|i| basis.iter().map(|b| b[i].clone()).collect())
                .collect();
            let alpha = linalg::solve_any(&mat, &diff.0).expect("point outside its affine hull");
            Point(alpha)
        })
        .collect();
    Chart {
        base,
        basis,
        coords,
    }
}

/// Supporting hyperplanes of the hull of full-dimensional `points` in `R^d`,
/// found from (d)-subsets. Returns canonical halfspaces.
fn supporting_halfspaces(points: &[Point], d: usize) -> Vec<Halfspace> {
    debug_assert!(d >= 1);
    let m = points.len();
    if d == 1 {
        let mut lo = points[0].0[0].clone();
        let mut hi = lo.clone();
        for p in points {
            if p.0[0] < lo {
                lo = p.0[0].clone();
            }
            if p.0[0] > hi {
                hi = p.0[0].clone();
            }
        }
        return vec![
            Halfspace::new(Point(vec![Rat::one()]), hi).to_primitive(),
            Halfspace::new(Point(vec![-Rat::one()]), -lo).to_primitive(),
        ];
    }
    let mut seen: BTreeSet<(Point, Rat)> = BTreeSet::new();
    let mut out = Vec::new();
    let mut subset: Vec<usize> = (0..d).collect();
    loop {
        // Hyperplane through the d chosen points, if affinely independent.
        let p0 = &points[subset[0]];
        let rows: Vec<Vec<Rat>> = subset[1..]
            .iter()
            .map(|&i| points[i].sub(p0).0)
            .collect();
        if linalg::rank(&rows) == d - 1 {
            if let Some(normal) = linalg::nullspace_vector(&rows, d) {
                let normal = Point(normal);
                let offset = normal.dot(p0);
                let key = {
                    let h = Halfspace::new(normal.clone(), offset.clone()).to_primitive();
                    (h.normal, h.offset)
                };
                let flipped_key = {
                    let h = Halfspace::new(normal.neg(), -offset.clone()).to_primitive();
                    (h.normal, h.offset)
                };
                if !seen.contains(&key) || !seen.contains(&flipped_key) {
                    let mut below = true;
                    let mut above = true;
                    for p in points {
                        let v = normal.dot(p);
                        if v > offset {
                            below = false;
                        }
                        if v < offset {
                            above = false;
                        }
                        if !below && !above {
                            break;
                        }
                    }
                    if below && !seen.contains(&key) {
                        seen.insert(key.clone());
                        out.push(Halfspace::new(key.0, key.1));
                    }
                    if above && !seen.contains(&flipped_key) {
                        seen.insert(flipped_key.clone());
                        out.push(Halfspace::new(flipped_key.0, flipped_key.1));
                    }
                }
            }
        }
        // next d-subset of 0..m
        let mut i = d;
        loop {
            if i == 0 {
                return sort_halfspaces(out);
            }
            i -= 1;
            if subset[i] != i + m - d {
                subset[i] += 1;
                for j in i + 1..d {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn sort_halfspaces(mut hs: Vec<Halfspace>) -> Vec<Halfspace> {
    hs.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));
    hs.dedup();
    hs
}

/// Extreme points of `points` in `R^d` (full-dimensional), via active facets.
fn extreme_points(points: &[Point], d: usize, facets: &[Halfspace]) -> Vec<Point> {
    let mut out = Vec::new();
    for p in points {
        let active: Vec<Vec<Rat>> = facets
            .iter()
            .filter(|h| h.normal.dot(p) == h.offset)
            .map(|h| h.normal.0.clone())
            .collect();
        if active.len() >= d && linalg::rank(&active) == d {
            out.push(p.clone());
        }
    }
    out.sort();
    out.dedup();
    out
}

impl PolytopeV {
    /// Convex hull of a non-empty point set: irredundant extreme points.
    pub fn hull(points: &[Point]) -> Result<PolytopeV> {
        if points.is_empty() {
            return Err(Error::Empty);
        }
        let n = points[0].dim();
        if n == 0 || n > MAX_DIM {
            return Err(Error::ParameterOutOfRange(format!(
                "ambient dimension {n} outside 1..={MAX_DIM}"
            )));
        }
        for p in points {
            if p.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: p.dim(),
                });
            }
        }
        let mut pts: Vec<Point> = points.to_vec();
        pts.sort();
        pts.dedup();
        Ok(Self::hull_dedup(pts, n))
    }

    fn hull_dedup(pts: Vec<Point>, n: usize) -> PolytopeV {
        let ch = chart(&pts);
        let d = ch.dim();
        if d == 0 {
            return PolytopeV {
                n,
                vertices: vec![pts[0].clone()],
                dim: 0,
            };
        }
        let extreme_idx: Vec<usize> = if d == 1 {
            let mut lo = 0usize;
            let mut hi = 0usize;
            for (i, c) in ch.coords.iter().enumerate() {
                if c.0[0] < ch.coords[lo].0[0] {
                    lo = i;
                }
                if c.0[0] > ch.coords[hi].0[0] {
                    hi = i;
                }
            }
            vec![lo, hi]
        } else if d == 2 {
            monotone_chain_indices(&ch.coords)
        } else {
            let facets = supporting_halfspaces(&ch.coords, d);
            let ext = extreme_points(&ch.coords, d, &facets);
            let set: BTreeSet<&Point> = ext.iter().collect();
            (0..pts.len())
                .filter(|&i| set.contains(&ch.coords[i]))
                .collect()
        };
        let mut vertices: Vec<Point> = extreme_idx.into_iter().map(|i| pts[i].clone()).collect();
        vertices.sort();
        vertices.dedup();
        PolytopeV { n, vertices, dim: d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_full_dim(&self) -> bool {
        self.dim == self.n
    }

    /// Exact H-representation. Lower-dimensional polytopes get their affine
    /// hull as pairs of opposite halfspaces plus lifted chart facets.
    pub fn to_hrep(&self) -> PolytopeH {
        let ch = chart(&self.vertices);
        let d = ch.dim();
        let mut hs: Vec<Halfspace> = Vec::new();
        if d < self.n {
            // Affine-hull equations m.x = m.base as halfspace pairs.
            let mut rows = ch.basis.clone();
            while let Some(m) = linalg::nullspace_vector(&rows, self.n) {
                let normal = Point(m.clone());
                let c = normal.dot(&ch.base);
                hs.push(Halfspace::new(normal.clone(), c.clone()).to_primitive());
                hs.push(Halfspace::new(normal.neg(), -c).to_primitive());
                rows.push(m);
            }
        }
        if d >= 1 {
            for f in supporting_halfspaces(&ch.coords, d) {
                // Lift chart inequality a.alpha <= c to w.x <= c + w.base
                // where basis * w = a.
                let w = linalg::solve_any(&ch.basis, &f.normal.0)
                    .expect("chart basis has full row rank");
                let normal = Point(w);
                let offset = &f.offset + normal.dot(&ch.base);
                hs.push(Halfspace::new(normal, offset).to_primitive());
            }
        } else {
            // Single point with no chart facets: box it with its coordinates.
            for i in 0..self.n {
                let e = Point::unit(self.n, i);
                let c = e.dot(&ch.base);
                hs.push(Halfspace::new(e.clone(), c.clone()).to_primitive());
                hs.push(Halfspace::new(e.neg(), -c).to_primitive());
            }
        }
        PolytopeH {
            n: self.n,
            halfspaces: sort_halfspaces(hs),
        }
    }

    /// Membership via supporting halfspaces.
    pub fn contains(&self, p: &Point) -> bool {
        self.to_hrep().contains(p)
    }

    /// Exact Lebesgue measure; zero for lower-dimensional polytopes.
    pub fn volume(&self) -> Rat {
        if self.dim < self.n {
            return Rat::zero();
        }
        let simplices = triangulate(&self.vertices);
        let mut vol = Rat::zero();
        for s in simplices {
            let base = &self.vertices[s[0]];
            let rows: Vec<Vec<Rat>> = s[1..]
                .iter()
                .map(|&i| self.vertices[i].sub(base).0)
                .collect();
            vol += linalg::det(&rows).abs();
        }
        let mut fact = Rat::one();
        for k in 2..=self.n {
            fact *= Rat::from_integer(k.into());
        }
        vol / fact
    }

    /// Polar polytope as an H-representation; requires the origin strictly
    /// inside.
    pub fn polar(&self) -> Result<PolytopeH> {
        if !self.is_full_dim() {
            return Err(Error::OriginNotInterior);
        }
        let hrep = self.to_hrep();
        if !hrep
            .halfspaces
            .iter()
            .all(|h| h.offset.is_positive())
        {
            return Err(Error::OriginNotInterior);
        }
        let hs = self
            .vertices
            .iter()
            .map(|v| Halfspace::new(v.clone(), Rat::one()).to_primitive())
            .collect();
        Ok(PolytopeH {
            n: self.n,
            halfspaces: sort_halfspaces(hs),
        })
    }

    /// Convex hull of the union.
    pub fn conv_union(&self, other: &PolytopeV) -> Result<PolytopeV> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut pts = self.vertices.clone();
        pts.extend_from_slice(&other.vertices);
        PolytopeV::hull(&pts)
    }

    /// Vertex-wise translation.
    pub fn translate(&self, x: &Point) -> PolytopeV {
        let mut vertices: Vec<Point> = self.vertices.iter().map(|v| v.add(x)).collect();
        vertices.sort();
        PolytopeV {
            n: self.n,
            vertices,
            dim: self.dim,
        }
    }

    /// Vertex-wise scaling; `lambda = 0` collapses to the origin.
    pub fn scale(&self, lambda: &Rat) -> PolytopeV {
        if lambda.is_zero() {
            return PolytopeV {
                n: self.n,
                vertices: vec![Point::zero(self.n)],
                dim: 0,
            };
        }
        let mut vertices: Vec<Point> = self.vertices.iter().map(|v| v.scale(lambda)).collect();
        vertices.sort();
        PolytopeV {
            n: self.n,
            vertices,
            dim: self.dim,
        }
    }

    /// Radius squared of the largest origin-centered euclidean ball inside;
    /// zero when the origin is not interior.
    pub fn inradius_sq_at_origin(&self) -> Rat {
        if !self.is_full_dim() {
            return Rat::zero();
        }
        let hrep = self.to_hrep();
        let mut best: Option<Rat> = None;
        for h in &hrep.halfspaces {
            if !h.offset.is_positive() {
                return Rat::zero();
            }
            let d2 = &h.offset * &h.offset / h.normal.norm_sq();
            best = Some(match best {
                None => d2,
                Some(b) => {
                    if d2 < b {
                        d2
                    } else {
                        b
                    }
                }
            });
        }
        best.unwrap_or_else(Rat::zero)
    }
}

/// Convex-position ordering of 2-d points by Andrew's monotone chain;
/// returns hull vertex indices in counter-clockwise order.
fn monotone_chain_indices(pts: &[Point]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
    idx.dedup_by(|a, b| pts[*a] == pts[*b]);
    let cross = |o: usize, a: usize, b: usize| -> Rat {
        let oa = pts[a].sub(&pts[o]);
        let ob = pts[b].sub(&pts[o]);
        &oa.0[0] * &ob.0[1] - &oa.0[1] * &ob.0[0]
    };
    let mut hull: Vec<usize> = Vec::new();
    for &i in &idx {
        while hull.len() >= 2
            && !cross(hull[hull.len() - 2], hull[hull.len() - 1], i).is_positive()
        {
            hull.pop();
        }
        hull.push(i);
    }
    let lower_len = hull.len() + 1;
    for &i in idx.iter().rev() {
        while hull.len() >= lower_len
            && !cross(hull[hull.len() - 2], hull[hull.len() - 1], i).is_positive()
        {
            hull.pop();
        }
        hull.push(i);
    }
    hull.pop();
    hull
}

/// Triangulates the hull of `vertices` (indices into the slice). The vertices
/// must be the extreme points of their hull. Works recursively through facets.
pub(crate) fn triangulate(vertices: &[Point]) -> Vec<Vec<usize>> {
    let ch = chart(vertices);
    triangulate_chart(&ch.coords)
}

fn triangulate_chart(pts: &[Point]) -> Vec<Vec<usize>> {
    let d = if pts.is_empty() { 0 } else { pts[0].dim() };
    match d {
        0 => vec![vec![0]],
        1 => {
            let mut lo = 0;
            let mut hi = 0;
            for (i, p) in pts.iter().enumerate() {
                if p.0[0] < pts[lo].0[0] {
                    lo = i;
                }
                if p.0[0] > pts[hi].0[0] {
                    hi = i;
                }
            }
            vec![vec![lo, hi]]
        }
        2 => {
            let ring = monotone_chain_indices(pts);
            (1..ring.len() - 1)
                .map(|k| vec![ring[0], ring[k], ring[k + 1]])
                .collect()
        }
        _ => {
            let facets = supporting_halfspaces(pts, d);
            let base = 0usize;
            let mut out = Vec::new();
            for f in &facets {
                if f.normal.dot(&pts[base]) == f.offset {
                    continue;
                }
                let on_facet: Vec<usize> = (0..pts.len())
                    .filter(|&i| f.normal.dot(&pts[i]) == f.offset)
                    .collect();
                let facet_pts: Vec<Point> = on_facet.iter().map(|&i| pts[i].clone()).collect();
                let sub_chart = chart(&facet_pts);
                for simplex in triangulate_chart(&sub_chart.coords) {
                    let mut s: Vec<usize> = vec![base];
                    s.extend(simplex.into_iter().map(|j| on_facet[j]));
                    out.push(s);
                }
            }
            out
        }
    }
}

impl PolytopeH {
    /// Builds a canonical H-polytope from raw halfspaces. Errors on unbounded
    /// or empty systems.
    pub fn new(n: usize, halfspaces: Vec<Halfspace>) -> Result<PolytopeH> {
        let raw = PolytopeH { n, halfspaces };
        let v = raw.to_vrep()?;
        Ok(v.to_hrep())
    }

    /// Raw, uncanonicalized wrapper (used internally before canonicalization).
    pub(crate) fn raw(n: usize, halfspaces: Vec<Halfspace>) -> PolytopeH {
        PolytopeH { n, halfspaces }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.halfspaces.iter().all(|h| h.contains(p))
    }

    /// Strict interior membership.
    pub fn contains_interior(&self, p: &Point) -> bool {
        self.halfspaces.iter().all(|h| h.normal.dot(p) < h.offset)
    }

    /// Exact vertex enumeration. Errors with [`Error::Unbounded`] when the
    /// recession cone is non-trivial and [`Error::Empty`] when infeasible.
    pub fn to_vrep(&self) -> Result<PolytopeV> {
        if self.n == 0 || self.n > MAX_DIM {
            return Err(Error::ParameterOutOfRange(format!(
                "ambient dimension {} outside 1..={MAX_DIM}",
                self.n
            )));
        }
        if !self.is_bounded() {
            return Err(Error::Unbounded);
        }
        let verts = self.basic_feasible_points()?;
        Ok(PolytopeV::hull_dedup(verts, self.n))
    }

    /// Vertex enumeration for systems known to be bounded (intersections of
    /// bounded polytopes); skips the recession-cone check.
    pub(crate) fn to_vrep_assume_bounded(&self) -> Result<PolytopeV> {
        let verts = self.basic_feasible_points()?;
        Ok(PolytopeV::hull_dedup(verts, self.n))
    }

    /// Canonicalizing constructor for halfspace systems known to be bounded.
    pub(crate) fn new_assume_bounded(n: usize, halfspaces: Vec<Halfspace>) -> Result<PolytopeH> {
        let raw = PolytopeH { n, halfspaces };
        Ok(raw.to_vrep_assume_bounded()?.to_hrep())
    }

    /// Bounded iff the outer normals positively span `R^n`, i.e. the origin is
    /// interior to their convex hull.
    pub fn is_bounded(&self) -> bool {
        let normals: Vec<Point> = self.halfspaces.iter().map(|h| h.normal.clone()).collect();
        if normals.is_empty() {
            return false;
        }
        let hull = match PolytopeV::hull(&normals) {
            Ok(h) => h,
            Err(_) => return false,
        };
        if !hull.is_full_dim() {
            return false;
        }
        hull.to_hrep()
            .halfspaces
            .iter()
            .all(|h| h.offset.is_positive())
    }

    fn basic_feasible_points(&self) -> Result<Vec<Point>> {
        let m = self.halfspaces.len();
        let n = self.n;
        if m < n {
            return Err(Error::Unbounded);
        }
        let mut found: BTreeSet<Point> = BTreeSet::new();
        let mut subset: Vec<usize> = (0..n).collect();
        loop {
            let a: Vec<Vec<Rat>> = subset
                .iter()
                .map(|&i| self.halfspaces[i].normal.0.clone())
                .collect();
            let b: Vec<Rat> = subset
                .iter()
                .map(|&i| self.halfspaces[i].offset.clone())
                .collect();
            if let Some(x) = linalg::solve(&a, &b) {
                let p = Point(x);
                if !found.contains(&p) && self.contains(&p) {
                    found.insert(p);
                }
            }
            let mut i = n;
            let mut done = true;
            while i > 0 {
                i -= 1;
                if subset[i] != i + m - n {
                    subset[i] += 1;
                    for j in i + 1..n {
                        subset[j] = subset[j - 1] + 1;
                    }
                    done = false;
                    break;
                }
            }
            if done {
                break;
            }
        }
        if found.is_empty() {
            return Err(Error::Empty);
        }
        Ok(found.into_iter().collect())
    }

    /// Intersection with canonicalization. `Ok(None)` when empty.
    pub fn intersect(&self, other: &PolytopeH) -> Result<Option<PolytopeH>> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut hs = self.halfspaces.clone();
        hs.extend(other.halfspaces.iter().cloned());
        match PolytopeH::new_assume_bounded(self.n, hs) {
            Ok(p) => Ok(Some(p)),
            Err(Error::Empty) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Intersection with a single halfspace.
    pub fn intersect_halfspace(&self, h: &Halfspace) -> Result<Option<PolytopeH>> {
        if self.n != h.normal.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: h.normal.dim(),
            });
        }
        let mut hs = self.halfspaces.clone();
        hs.push(h.to_primitive());
        match PolytopeH::new_assume_bounded(self.n, hs) {
            Ok(p) => Ok(Some(p)),
            Err(Error::Empty) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Polar polytope as a V-representation; requires the origin strictly
    /// inside (every canonical offset positive).
    pub fn polar(&self) -> Result<PolytopeV> {
        if !self.halfspaces.iter().all(|h| h.offset.is_positive()) {
            return Err(Error::OriginNotInterior);
        }
        let pts: Vec<Point> = self
            .halfspaces
            .iter()
            .map(|h| {
                Point(
                    h.normal
                        .0
                        .iter()
                        .map(|c| c / &h.offset)
                        .collect(),
                )
            })
            .collect();
        PolytopeV::hull(&pts)
    }

    pub fn volume(&self) -> Result<Rat> {
        Ok(self.to_vrep()?.volume())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    fn pt(coords: &[i64]) -> Point {
        Point(coords.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn hull_drops_interior_point() {
        let pts = vec![
            pt(&[0, 0]),
            pt(&[1, 0]),
            pt(&[0, 1]),
            Point(vec![rat(1, 4), rat(1, 4)]),
        ];
        let h = PolytopeV::hull(&pts).unwrap();
        assert_eq!(h.vertices(), &[pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 0])]);
        assert!(h.is_full_dim());
    }

    #[test]
    fn hull_of_simplex_keeps_all() {
        let pts = vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])];
        let h = PolytopeV::hull(&pts).unwrap();
        assert_eq!(h.vertices().len(), 3);
    }

    #[test]
    fn degenerate_hull_on_a_segment() {
        let pts = vec![pt(&[0, 0]), pt(&[2, 2]), pt(&[1, 1])];
        let h = PolytopeV::hull(&pts).unwrap();
        assert_eq!(h.vertices(), &[pt(&[0, 0]), pt(&[2, 2])]);
        assert_eq!(h.dim(), 1);
        assert_eq!(h.volume(), int(0));
    }

    #[test]
    fn cube_round_trip() {
        let pts = vec![pt(&[-1, -1]), pt(&[1, -1]), pt(&[-1, 1]), pt(&[1, 1])];
        let q2 = PolytopeV::hull(&pts).unwrap();
        let h = q2.to_hrep();
        assert_eq!(h.halfspaces().len(), 4);
        let back = h.to_vrep().unwrap();
        assert_eq!(back, q2);
        assert_eq!(q2.volume(), int(4));
    }

    #[test]
    fn simplex_volume_is_inverse_factorial() {
        for n in 1..=4usize {
            let mut pts = vec![Point::zero(n)];
            for i in 0..n {
                pts.push(Point::unit(n, i));
            }
            let t = PolytopeV::hull(&pts).unwrap();
            let mut fact = int(1);
            for k in 2..=n {
                fact *= int(k as i64);
            }
            assert_eq!(t.volume(), int(1) / fact, "n = {n}");
        }
    }

    #[test]
    fn shoelace_oracle_triangle() {
        // conv{(-2,0),(0,-2),(1,1)} has area 4 by the shoelace formula.
        let t = PolytopeV::hull(&[pt(&[-2, 0]), pt(&[0, -2]), pt(&[1, 1])]).unwrap();
        assert_eq!(t.volume(), int(4));
    }

    #[test]
    fn polar_of_cube_is_cross() {
        let q2 = PolytopeV::hull(&[pt(&[-1, -1]), pt(&[1, -1]), pt(&[-1, 1]), pt(&[1, 1])])
            .unwrap();
        let c2 = q2.polar().unwrap().to_vrep().unwrap();
        assert_eq!(
            c2.vertices(),
            &[pt(&[-1, 0]), pt(&[0, -1]), pt(&[0, 1]), pt(&[1, 0])]
        );
        // bipolar
        let back = c2.polar().unwrap().to_vrep().unwrap();
        assert_eq!(back, q2);
    }

    #[test]
    fn polar_requires_interior_origin() {
        let t = PolytopeV::hull(&[pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])]).unwrap();
        assert_eq!(t.polar().unwrap_err(), Error::OriginNotInterior);
    }

    #[test]
    fn unbounded_hrep_is_rejected() {
        let hs = vec![
            Halfspace::new(pt(&[1, 0]), int(1)),
            Halfspace::new(pt(&[0, 1]), int(1)),
        ];
        let p = PolytopeH::raw(2, hs);
        assert_eq!(p.to_vrep().unwrap_err(), Error::Unbounded);
    }

    #[test]
    fn empty_intersection_is_flagged() {
        let q = PolytopeV::hull(&[pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])])
            .unwrap()
            .to_hrep();
        let shifted = PolytopeV::hull(&[pt(&[5, 5]), pt(&[6, 5]), pt(&[5, 6])])
            .unwrap()
            .to_hrep();
        assert!(q.intersect(&shifted).unwrap().is_none());
    }

    #[test]
    fn intersect_with_containing_halfspace_is_identity() {
        let q = PolytopeV::hull(&[pt(&[-1, -1]), pt(&[1, -1]), pt(&[-1, 1]), pt(&[1, 1])])
            .unwrap()
            .to_hrep();
        let h = Halfspace::new(pt(&[1, 1]), int(10));
        let r = q.intersect_halfspace(&h).unwrap().unwrap();
        assert_eq!(r, q);
    }

    #[test]
    fn lower_dimensional_hrep_round_trip() {
        // A segment embedded in R^3.
        let seg = PolytopeV::hull(&[pt(&[0, 1, 2]), pt(&[2, 1, 0])]).unwrap();
        let h = seg.to_hrep();
        let back = h.to_vrep().unwrap();
        assert_eq!(back, seg);
        assert_eq!(back.volume(), int(0));
    }

    #[test]
    fn volume_of_3d_cross_polytope() {
        let mut pts = Vec::new();
        for i in 0..3 {
            pts.push(Point::unit(3, i));
            pts.push(Point::unit(3, i).neg());
        }
        let c3 = PolytopeV::hull(&pts).unwrap();
        // V(C^n) = 2^n / n!
        assert_eq!(c3.volume(), rat(8, 6));
        let q3 = c3.polar().unwrap();
        assert_eq!(q3.volume().unwrap(), int(8));
    }

    #[test]
    fn inradius_of_cube_is_one() {
        let q2 = PolytopeV::hull(&[pt(&[-1, -1]), pt(&[1, -1]), pt(&[-1, 1]), pt(&[1, 1])])
            .unwrap();
        assert_eq!(q2.inradius_sq_at_origin(), int(1));
        let c2 = q2.polar().unwrap().to_vrep().unwrap();
        assert_eq!(c2.inradius_sq_at_origin(), rat(1, 2));
    }
}
