//! Minkowski sums of polytopes.

use crate::error::{Error, Result};

use super::hull::convex_hull;
use super::point::Point;
use super::polytope::Polytope;

/// Minkowski sum `P + Q`: the hull of all pairwise vertex sums.
pub fn minkowski_sum(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    if p.dim() != q.dim() {
        return Err(Error::Contract(format!(
            "minkowski sum of polytopes in dimensions {} and {}",
            p.dim(),
            q.dim()
        )));
    }
    let mut sums: Vec<Point> = Vec::with_capacity(p.vertices().len() * q.vertices().len());
    for a in p.vertices() {
        for b in q.vertices() {
            sums.push(a.add(b));
        }
    }
    convex_hull(p.dim(), &sums)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn hull(dim: usize, pts: &[&[i64]]) -> Polytope {
        let v: Vec<Point> = pts.iter().map(|c| Point::from_ints(c)).collect();
        convex_hull(dim, &v).unwrap()
    }

    #[test]
    fn segments_sum_to_square() {
        let a = hull(2, &[&[0, 0], &[1, 0]]);
        let b = hull(2, &[&[0, 0], &[0, 1]]);
        let s = minkowski_sum(&a, &b).unwrap();
        assert_eq!(s, hull(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));
    }

    #[test]
    fn point_translates() {
        let t = hull(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let pt = hull(2, &[&[2, 3]]);
        let s = minkowski_sum(&t, &pt).unwrap();
        assert_eq!(s, t.translate(&Point::from_ints(&[2, 3])));
    }

    #[test]
    fn self_sum_is_double() {
        let t = hull(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let s = minkowski_sum(&t, &t).unwrap();
        assert_eq!(s, t.dilate(&int(2)));
    }

    #[test]
    fn dimension_mismatch_is_contract_error() {
        let a = hull(1, &[&[0], &[1]]);
        let b = hull(2, &[&[0, 0], &[1, 1]]);
        assert!(matches!(
            minkowski_sum(&a, &b),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn commutative_and_associative() {
        let a = hull(2, &[&[0, 0], &[2, 1]]);
        let b = hull(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let c = hull(2, &[&[0, 0], &[1, 2], &[2, 0]]);
        let ab = minkowski_sum(&a, &b).unwrap();
        let ba = minkowski_sum(&b, &a).unwrap();
        assert_eq!(ab.vertices(), ba.vertices());
        let ab_c = minkowski_sum(&ab, &c).unwrap();
        let bc = minkowski_sum(&b, &c).unwrap();
        let a_bc = minkowski_sum(&a, &bc).unwrap();
        assert_eq!(ab_c.vertices(), a_bc.vertices());
    }
}
