//! Exact volume via a deterministic fan triangulation.

use num_traits::Zero;

use crate::linalg;
use crate::scalar::Scalar;

use super::faces::{face_polytope, faces};
use super::point::Point;
use super::polytope::Polytope;

/// Simplices of a fan triangulation from the lexicographically smallest
/// vertex, recursing into facets. Each simplex has `rel_dim + 1` vertices.
pub fn triangulate(p: &Polytope) -> Vec<Vec<Point>> {
    if p.rel_dim() == 0 {
        return vec![vec![p.vertices()[0].clone()]];
    }
    // vertices are stored sorted, so index 0 is the lex-min apex
    let apex = p.vertices()[0].clone();
    let mut out = Vec::new();
    let facet_dim = p.rel_dim() - 1;
    for f in faces(p).iter().filter(|f| f.dim == facet_dim) {
        if f.vertex_ids.contains(&0) {
            continue;
        }
        let fp = face_polytope(p, f);
        for mut simplex in triangulate(&fp) {
            simplex.push(apex.clone());
            out.push(simplex);
        }
    }
    out
}

/// Exact d-dimensional volume; 0 for lower-dimensional polytopes by
/// convention. Independent of the triangulation (additivity), which the
/// tests check against shoelace-style oracles.
pub fn volume(p: &Polytope) -> Scalar {
    if !p.is_full_dimensional() {
        return Scalar::zero();
    }
    let d = p.dim();
    let mut dfac = Scalar::from(num_bigint::BigInt::from(1));
    for k in 2..=d {
        dfac *= Scalar::from(num_bigint::BigInt::from(k as i64));
    }
    let mut total = Scalar::zero();
    for s in triangulate(p) {
        let rows: Vec<Vec<Scalar>> = s[..d].iter().map(|v| v.sub(&s[d]).coords().to_vec()).collect();
        total += num_traits::Signed::abs(&linalg::det(&rows));
    }
    total / dfac
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::hull::convex_hull;
    use crate::scalar::{frac, int};

    fn hull(dim: usize, pts: &[&[i64]]) -> Polytope {
        let v: Vec<Point> = pts.iter().map(|c| Point::from_ints(c)).collect();
        convex_hull(dim, &v).unwrap()
    }

    #[test]
    fn unit_square_volume() {
        assert_eq!(volume(&hull(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])), int(1));
    }

    #[test]
    fn standard_simplex_volume() {
        assert_eq!(volume(&hull(2, &[&[0, 0], &[1, 0], &[0, 1]])), frac(1, 2));
    }

    #[test]
    fn shoelace_oracle_triangle() {
        // shoelace for (0,0),(4,0),(0,4): 8
        assert_eq!(volume(&hull(2, &[&[0, 0], &[4, 0], &[0, 4]])), int(8));
    }

    #[test]
    fn lower_dim_is_zero() {
        assert_eq!(volume(&hull(2, &[&[0, 0], &[2, 2]])), int(0));
    }

    #[test]
    fn cube_volume_via_triangulation() {
        let c = hull(
            3,
            &[
                &[0, 0, 0],
                &[2, 0, 0],
                &[0, 2, 0],
                &[0, 0, 2],
                &[2, 2, 0],
                &[2, 0, 2],
                &[0, 2, 2],
                &[2, 2, 2],
            ],
        );
        assert_eq!(volume(&c), int(8));
    }

    #[test]
    fn dilation_scales_by_power() {
        let t = hull(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let t3 = t.dilate(&int(3));
        assert_eq!(volume(&t3), int(9) * volume(&t));
    }

    #[test]
    fn hyperplane_split_additivity() {
        // split the 4x4 square along x = 1
        let square = hull(2, &[&[0, 0], &[4, 0], &[0, 4], &[4, 4]]);
        let left = hull(2, &[&[0, 0], &[1, 0], &[0, 4], &[1, 4]]);
        let right = hull(2, &[&[1, 0], &[4, 0], &[1, 4], &[4, 4]]);
        assert_eq!(volume(&square), volume(&left) + volume(&right));
    }
}
