//! Hausdorff distance between polytopes.
//!
//! Distances are minimized exactly over the affine hulls of vertex subsets
//! (every nearest point lies in the relative interior of some face, whose
//! affine hull is spanned by at most `n` affinely independent vertices), so
//! the only floating point is the final square root.

use crate::error::{Error, Result};
use crate::geom::point::Point;
use crate::geom::polytope::{PolytopeH, PolytopeV};
use crate::linalg;
use crate::rat::{to_f64, Rat};

/// Squared distance from `p` to the polytope, exact.
pub fn point_distance_sq(p: &Point, body: &PolytopeV, body_h: &PolytopeH) -> Rat {
    if body_h.contains(p) {
        return Rat::from_integer(0.into());
    }
    let verts = body.vertices();
    let n = body.n();
    let mut best: Option<Rat> = None;
    let mut consider = |d2: Rat| {
        if best.as_ref().map_or(true, |b| &d2 < b) {
            best = Some(d2);
        }
    };
    // Singletons.
    for v in verts {
        consider(p.sub(v).norm_sq());
    }
    // Projections onto affine hulls of subsets of size 2..=n, kept only when
    // they land inside the polytope.
    let m = verts.len();
    for size in 2..=n.min(m) {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            if let Some(q) = project_affine(p, verts, &subset) {
                if body_h.contains(&q) {
                    consider(p.sub(&q).norm_sq());
                }
            }
            let mut i = size;
            let mut done = true;
            while i > 0 {
                i -= 1;
                if subset[i] != i + m - size {
                    subset[i] += 1;
                    for j in i + 1..size {
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
    }
    best.expect("nonempty polytope yields a distance")
}

/// Orthogonal projection of `p` onto the affine hull of the chosen vertices,
/// or `None` when they are affinely dependent.
fn project_affine(p: &Point, verts: &[Point], subset: &[usize]) -> Option<Point> {
    let base = &verts[subset[0]];
    let dirs: Vec<Point> = subset[1..].iter().map(|&i| verts[i].sub(base)).collect();
    let k = dirs.len();
    // Normal equations G c = r with G the Gram matrix of the directions.
    let g: Vec<Vec<Rat>> = (0..k)
        .map(|i| (0..k).map(|j| dirs[i].dot(&dirs[j])).collect())
        .collect();
    let r: Vec<Rat> = (0..k).map(|i| dirs[i].dot(&p.sub(base))).collect();
    let c = linalg::solve(&g, &r)?;
    let mut q = base.clone();
    for (ci, d) in c.iter().zip(&dirs) {
        q = q.add(&d.scale(ci));
    }
    Some(q)
}

/// Hausdorff distance between two nonempty polytopes, as `f64`.
pub fn hausdorff_distance(p: &PolytopeV, q: &PolytopeV) -> Result<f64> {
    if p.n() != q.n() {
        return Err(Error::DimensionMismatch {
            expected: p.n(),
            got: q.n(),
        });
    }
    Ok(to_f64(&hausdorff_distance_sq(p, q)).sqrt())
}

/// Squared Hausdorff distance, exact.
pub fn hausdorff_distance_sq(p: &PolytopeV, q: &PolytopeV) -> Rat {
    let ph = p.to_hrep();
    let qh = q.to_hrep();
    let mut worst = Rat::from_integer(0.into());
    for v in p.vertices() {
        let d = point_distance_sq(v, q, &qh);
        if d > worst {
            worst = d;
        }
    }
    for w in q.vertices() {
        let d = point_distance_sq(w, p, &ph);
        if d > worst {
            worst = d;
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::bodies::{standard_body, BodyKind};
    use crate::rat::int;

    #[test]
    fn distance_to_itself_is_zero() {
        let q2 = standard_body(BodyKind::Cube, 2, &[]).unwrap();
        assert_eq!(hausdorff_distance(&q2, &q2).unwrap(), 0.0);
    }

    #[test]
    fn scaled_cube_distance_is_sqrt2() {
        let q2 = standard_body(BodyKind::Cube, 2, &[]).unwrap();
        let q2x2 = q2.scale(&int(2));
        assert_eq!(hausdorff_distance_sq(&q2, &q2x2), int(2));
    }

    #[test]
    fn translation_distance_is_translation_norm() {
        let c3 = standard_body(BodyKind::Cross, 3, &[]).unwrap();
        let x = Point(vec![int(3), int(-1), int(2)]);
        let moved = c3.translate(&x);
        assert_eq!(hausdorff_distance_sq(&c3, &moved), x.norm_sq());
    }

    #[test]
    fn point_to_simplex_face_projection() {
        let t2 = standard_body(BodyKind::Simplex, 2, &[]).unwrap();
        let h = t2.to_hrep();
        // Distance from (1,1) to the hypotenuse x + y = 1 is 1/sqrt(2).
        let p = Point(vec![int(1), int(1)]);
        assert_eq!(point_distance_sq(&p, &t2, &h), crate::rat::rat(1, 2));
    }
}
