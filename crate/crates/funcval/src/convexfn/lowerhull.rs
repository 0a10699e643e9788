//! Lower convex hull of lifted points, the engine behind piece
//! canonicalization and Legendre-Fenchel conjugation.
//!
//! Points are `(alpha, z)` with distinct `alpha` in `R^d`; the lower hull is
//! the graph of the largest convex function below all of them. Facets are
//! found by exhaustive `(d+1)`-subset enumeration, which is exact and cheap at
//! the piece counts this library handles.

use crate::geom::point::Point;
use crate::geom::polytope::chart;
use crate::linalg;
use crate::rat::Rat;
use num_traits::Zero;
use std::collections::BTreeSet;

/// One facet of the lower hull: the affine function `z = grad . alpha + offset`
/// together with the lifted points lying on it.
#[derive(Clone, Debug)]
pub(crate) struct LowerFacet {
    pub grad: Vec<Rat>,
    pub offset: Rat,
    /// Indices of all input points on the facet plane.
    pub members: Vec<usize>,
    /// Subset of `members` that are vertices of the facet polytope.
    pub corners: Vec<usize>,
}

#[derive(Clone, Debug)]
pub(crate) struct LowerHull {
    pub facets: Vec<LowerFacet>,
    /// Indices of input points that are vertices of the lower hull.
    pub vertices: Vec<usize>,
}

/// Computes the lower hull. `alphas` must be pairwise distinct; their affine
/// hull must be all of `R^d` (use a chart first otherwise).
pub(crate) fn lower_hull(alphas: &[Point], zs: &[Rat]) -> LowerHull {
    let m = alphas.len();
    let d = if m == 0 { 0 } else { alphas[0].dim() };
    debug_assert_eq!(m, zs.len());
    if m == 1 {
        return LowerHull {
            facets: vec![LowerFacet {
                grad: Vec::new(),
                offset: zs[0].clone(),
                members: vec![0],
                corners: vec![0],
            }],
            vertices: vec![0],
        };
    }
    // Degenerate case: every lifted point on one non-vertical hyperplane.
    if let Some((grad, offset)) = common_affine_fit(alphas, zs) {
        let corners = extreme_alpha_indices(alphas);
        return LowerHull {
            facets: vec![LowerFacet {
                grad,
                offset,
                members: (0..m).collect(),
                corners: corners.clone(),
            }],
            vertices: corners,
        };
    }

    let mut facets: Vec<LowerFacet> = Vec::new();
    let mut seen: BTreeSet<(Vec<Rat>, Rat)> = BTreeSet::new();
    let mut subset: Vec<usize> = (0..=d).collect();
    loop {
        if let Some((grad, offset)) = affine_through(alphas, zs, &subset) {
            let key = (grad.clone(), offset.clone());
            if !seen.contains(&key) {
                let mut lower = true;
                for j in 0..m {
                    let lift = linalg::dot(&grad, alphas[j].coords()) + &offset;
                    if zs[j] < lift {
                        lower = false;
                        break;
                    }
                }
                if lower {
                    seen.insert(key);
                    let members: Vec<usize> = (0..m)
                        .filter(|&j| {
                            linalg::dot(&grad, alphas[j].coords()) + &offset == zs[j]
                        })
                        .collect();
                    let member_pts: Vec<Point> =
                        members.iter().map(|&j| alphas[j].clone()).collect();
                    let local = extreme_alpha_indices(&member_pts);
                    let corners: Vec<usize> = local.into_iter().map(|k| members[k]).collect();
                    facets.push(LowerFacet {
                        grad,
                        offset,
                        members,
                        corners,
                    });
                } else {
                    seen.insert(key);
                }
            }
        }
        // next (d+1)-subset
        let k = d + 1;
        let mut i = k;
        let mut done = true;
        while i > 0 {
            i -= 1;
            if subset[i] != i + m - k {
                subset[i] += 1;
                for j in i + 1..k {
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
    let mut verts: BTreeSet<usize> = BTreeSet::new();
    for f in &facets {
        verts.extend(f.corners.iter().copied());
    }
    LowerHull {
        facets,
        vertices: verts.into_iter().collect(),
    }
}

/// Fits `z = grad . alpha + offset` through the points of `subset`, `None`
/// when they are affinely dependent or the plane is vertical.
fn affine_through(alphas: &[Point], zs: &[Rat], subset: &[usize]) -> Option<(Vec<Rat>, Rat)> {
    let d = alphas[subset[0]].dim();
    let a: Vec<Vec<Rat>> = subset
        .iter()
        .map(|&i| {
            let mut row = alphas[i].coords().to_vec();
            row.push(Rat::from_integer(1.into()));
            row
        })
        .collect();
    let b: Vec<Rat> = subset.iter().map(|&i| zs[i].clone()).collect();
    let sol = linalg::solve(&a, &b)?;
    let (grad, offset) = sol.split_at(d);
    Some((grad.to_vec(), offset[0].clone()))
}

/// Fit through all points at once; `Some` iff every lifted point lies on one
/// non-vertical hyperplane.
fn common_affine_fit(alphas: &[Point], zs: &[Rat]) -> Option<(Vec<Rat>, Rat)> {
    let d = alphas[0].dim();
    let a: Vec<Vec<Rat>> = alphas
        .iter()
        .map(|p| {
            let mut row = p.coords().to_vec();
            row.push(Rat::from_integer(1.into()));
            row
        })
        .collect();
    let sol = linalg::solve_any(&a, zs)?;
    let (grad, offset) = sol.split_at(d);
    // solve_any returns a least-structured particular solution only when the
    // system is consistent, which is exactly the coplanar case.
    for (p, z) in alphas.iter().zip(zs) {
        if &(linalg::dot(grad, p.coords()) + &offset[0]) != z {
            return None;
        }
    }
    Some((grad.to_vec(), offset[0].clone()))
}

/// Indices of points extreme in `conv(alphas)` (any dimension, via chart).
pub(crate) fn extreme_alpha_indices(alphas: &[Point]) -> Vec<usize> {
    if alphas.len() == 1 {
        return vec![0];
    }
    let ch = chart(alphas);
    let d = ch.dim();
    if d == 0 {
        return vec![0];
    }
    let hull = crate::geom::polytope::PolytopeV::hull(&ch.coords).expect("chart points valid");
    let vertex_set: BTreeSet<&Point> = hull.vertices().iter().collect();
    let mut out: Vec<usize> = (0..alphas.len())
        .filter(|&i| vertex_set.contains(&ch.coords[i]))
        .collect();
    // Two input points cannot share chart coordinates if alphas are distinct.
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    fn pts(coords: &[&[i64]]) -> Vec<Point> {
        coords
            .iter()
            .map(|c| Point(c.iter().map(|&x| int(x)).collect()))
            .collect()
    }

    #[test]
    fn lower_hull_of_v_shape() {
        // Pieces of |x|: slopes -1, 1 with offsets 0 -> lifted ((-1),0), ((1),0).
        let alphas = pts(&[&[-1], &[1]]);
        let zs = vec![int(0), int(0)];
        let lh = lower_hull(&alphas, &zs);
        assert_eq!(lh.facets.len(), 1);
        assert_eq!(lh.vertices, vec![0, 1]);
        assert!(lh.facets[0].grad[0].is_zero());
    }

    #[test]
    fn interior_lifted_point_is_not_a_vertex() {
        // max(0, x+1, 2x+2): middle piece only ties, never wins.
        let alphas = pts(&[&[0], &[1], &[2]]);
        let zs = vec![int(0), int(-1), int(-2)];
        let lh = lower_hull(&alphas, &zs);
        assert_eq!(lh.vertices, vec![0, 2]);
    }

    #[test]
    fn strictly_convex_lift_keeps_all_points() {
        let alphas = pts(&[&[-1], &[0], &[1]]);
        let zs = vec![int(1), int(0), int(1)];
        let lh = lower_hull(&alphas, &zs);
        assert_eq!(lh.vertices, vec![0, 1, 2]);
        assert_eq!(lh.facets.len(), 2);
    }

    #[test]
    fn upper_point_is_dropped_in_2d() {
        // Four slopes of |x1| + |x2| plus a lifted point floating above.
        let alphas = pts(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1], &[0, 0]]);
        let zs = vec![int(0), int(0), int(0), int(0), int(5)];
        let lh = lower_hull(&alphas, &zs);
        assert_eq!(lh.vertices, vec![0, 1, 2, 3]);
        assert_eq!(lh.facets.len(), 1);
        assert_eq!(lh.facets[0].members, vec![0, 1, 2, 3]);
    }

    #[test]
    fn tilted_plane_fit() {
        let alphas = pts(&[&[0, 0], &[1, 0], &[0, 1]]);
        let zs = vec![int(1), int(2), int(3)];
        let lh = lower_hull(&alphas, &zs);
        assert_eq!(lh.facets.len(), 1);
        assert_eq!(lh.facets[0].grad, vec![int(1), int(2)]);
        assert_eq!(lh.facets[0].offset, int(1));
    }

    #[test]
    fn square_pyramid_lower_hull() {
        // A dipped center point creates four lower facets.
        let alphas = pts(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1], &[0, 0]]);
        let zs = vec![int(0), int(0), int(0), int(0), rat(-1, 1)];
        let lh = lower_hull(&alphas, &zs);
        assert_eq!(lh.facets.len(), 4);
        assert_eq!(lh.vertices.len(), 5);
    }
}
