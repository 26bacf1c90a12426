//! Vertex tangent-cone generating functions: the classical sum for integer
//! polytopes and the coconvex variant, with truncation and enumeration
//! cross-check routes.

use num_traits::ToPrimitive;

use crate::body::CoconvexBody;
use crate::error::{Error, Result};
use crate::geom::{faces, polytope_lattice_points, Point, Polytope};
use crate::scalar::int;

use super::cones::genfun_cone;
use super::{point_to_ivec, GenFun, IVec, IntegerCone, TangentConeAt};

fn primitive_direction(from: &Point, to: &Point) -> Result<IVec> {
    let d = to.sub(from);
    let p = crate::scalar::primitive_integer(d.coords())
        .ok_or_else(|| Error::Invariant("zero edge direction".into()))?;
    p.iter()
        .map(|b| b.to_i64().ok_or_else(|| Error::Capability("direction exceeds i64".into())))
        .collect()
}

/// The tangent cone of a polytope at one of its vertices: generated by the
/// primitive directions of the incident edges.
pub fn tangent_cone(p: &Polytope, at: &Point) -> Result<TangentConeAt> {
    let Some(vid) = p.vertices().iter().position(|v| v == at) else {
        return Err(Error::Contract("tangent cone base must be a vertex".into()));
    };
    let mut gens: Vec<IVec> = Vec::new();
    for f in faces(p) {
        if f.dim != 1 || !f.vertex_ids.contains(&vid) {
            continue;
        }
        let other = f.vertex_ids.iter().find(|&&i| i != vid).copied().ok_or_else(|| {
            Error::Invariant("edge with a single vertex".into())
        })?;
        gens.push(primitive_direction(at, &p.vertices()[other])?);
    }
    Ok(TangentConeAt {
        vertex: point_to_ivec(at)?,
        cone: IntegerCone::new(p.dim(), gens)?,
    })
}

/// Tangent cone of `Delta` at one of its vertices, including the recession
/// directions of unbounded edges. Extracted from the truncation at
/// `2 tstar`, which lies strictly above every vertex level, so the cut
/// facet is never active at a vertex and edge directions are unchanged.
pub fn tangent_cone_of_delta(body: &CoconvexBody, at: &Point) -> Result<TangentConeAt> {
    let t = body.tstar() * int(2);
    let (dt, _) = body.truncate(&t)?;
    tangent_cone(&dt, at)
}

/// The vertex tangent-cone expansion of the generating function of an
/// integer polytope's lattice points.
pub fn brion_convex(p: &Polytope, seed: u64) -> Result<GenFun> {
    let mut acc = GenFun::zero(p.dim());
    for v in p.vertices() {
        let iv = point_to_ivec(v)
            .map_err(|_| Error::Contract("polytope has a non-integer vertex".into()))?;
        let tc = tangent_cone(p, v)?;
        acc = acc.add(&genfun_cone(&tc.cone, seed)?.shift(&iv));
    }
    Ok(acc)
}

/// The coconvex expansion: minus the tangent-cone sums at the vertices of
/// `Delta`, plus the cone's own generating function, minus one.
pub fn genfun_coconvex(a: &CoconvexBody, seed: u64) -> Result<GenFun> {
    if !a.is_integer() {
        return Err(Error::Contract(
            "coconvex generating function needs integer delta vertices".into(),
        ));
    }
    let d = a.dim();
    let cone_gens: Vec<IVec> = a
        .cone()
        .rays()
        .iter()
        .map(point_to_ivec)
        .collect::<Result<_>>()?;
    let cone = IntegerCone::new(d, cone_gens)?;
    let mut acc = genfun_cone(&cone, seed)?.add(&GenFun::constant(d, -1));
    for v in a.delta().base_points() {
        let tc = tangent_cone_of_delta(a, v)?;
        let term = genfun_cone(&tc.cone, seed)?.shift(&tc.vertex).negate();
        acc = acc.add(&term);
    }
    Ok(acc)
}

const TRUNCATION_SEARCH_CAP: i64 = 64;

/// The truncation route `-G(Delta_t) + G(C_t) - 1`, with `t` searched over
/// multiples of `tstar` until both truncations have integer vertices so the
/// vertex expansion applies to them.
pub fn genfun_coconvex_via_truncation(a: &CoconvexBody, seed: u64) -> Result<GenFun> {
    if !a.is_integer() {
        return Err(Error::Contract(
            "coconvex generating function needs integer delta vertices".into(),
        ));
    }
    for k in 2..=TRUNCATION_SEARCH_CAP {
        let t = a.tstar() * int(k);
        let (dt, ct) = a.truncate(&t)?;
        let integral = dt.vertices().iter().chain(ct.vertices()).all(Point::is_integer);
        if !integral {
            continue;
        }
        return Ok(brion_convex(&ct, seed)?
            .add(&brion_convex(&dt, seed)?.negate())
            .add(&GenFun::constant(a.dim(), -1)));
    }
    Err(Error::Capability(format!(
        "no truncation level with integer cut vertices found up to {TRUNCATION_SEARCH_CAP} tstar"
    )))
}

/// Direct enumeration of `A ∩ Z^d` as a monomial sum.
pub fn genfun_enumeration_body(a: &CoconvexBody, cap: u64) -> Result<GenFun> {
    let (_, ct) = a.truncate(a.tstar())?;
    let (lo, hi) = ct.bounding_box();
    let pts = crate::geom::lattice_points(&lo, &hi, cap, |x| {
        a.membership(x) == crate::body::Membership::InA
    })?;
    let monomials: Vec<IVec> = pts.iter().map(point_to_ivec).collect::<Result<_>>()?;
    Ok(GenFun::monomial_sum(a.dim(), &monomials))
}

/// Direct enumeration of a polytope's lattice points as a monomial sum.
pub fn genfun_enumeration_polytope(p: &Polytope, cap: u64) -> Result<GenFun> {
    let pts = polytope_lattice_points(p, cap)?;
    let monomials: Vec<IVec> = pts.iter().map(point_to_ivec).collect::<Result<_>>()?;
    Ok(GenFun::monomial_sum(p.dim(), &monomials))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::make_body;
    use crate::genfun::special::{count_points, genfun_equal};
    use crate::geom::convex_hull;

    fn pt(c: &[i64]) -> Point {
        Point::from_ints(c)
    }

    fn hull(dim: usize, cs: &[&[i64]]) -> Polytope {
        let v: Vec<Point> = cs.iter().map(|c| pt(c)).collect();
        convex_hull(dim, &v).unwrap()
    }

    fn staircase(k: i64) -> CoconvexBody {
        make_body(
            &[pt(&[1, 0]), pt(&[0, 1])],
            &[pt(&[k, 0]), pt(&[0, k])],
            &[int(1), int(1)],
        )
        .unwrap()
    }

    #[test]
    fn tangent_cones_of_square_and_staircase() {
        let sq = hull(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let tc = tangent_cone(&sq, &pt(&[0, 0])).unwrap();
        assert_eq!(tc.cone.generators(), &[vec![0, 1], vec![1, 0]]);
        // staircase delta at (2,0): the x-axis recession and the edge to (0,2)
        let a = staircase(2);
        let tc = tangent_cone_of_delta(&a, &pt(&[2, 0])).unwrap();
        assert_eq!(tc.cone.generators(), &[vec![-1, 1], vec![1, 0]]);
        // 1d segment at its right endpoint
        let seg = hull(1, &[&[0], &[3]]);
        let tc = tangent_cone(&seg, &pt(&[3])).unwrap();
        assert_eq!(tc.cone.generators(), &[vec![-1]]);
    }

    #[test]
    fn tangent_cone_neighborhood_spot_check() {
        let a = staircase(2);
        let tc = tangent_cone_of_delta(&a, &pt(&[2, 0])).unwrap();
        let geom = crate::genfun::cones::cone_geometry(&tc.cone).unwrap();
        let base = pt(&[2, 0]);
        // sample directions at radius 1/4: membership in delta near the
        // vertex must match membership in the shifted cone
        for dir in [[1i64, 0], [-1, 1], [0, 1], [1, 1], [-1, 0], [0, -1], [1, -1]] {
            let step = Point::new(vec![
                crate::scalar::frac(dir[0], 4),
                crate::scalar::frac(dir[1], 4),
            ]);
            let x = base.add(&step);
            assert_eq!(
                a.delta().contains(&x),
                geom.contains(&step),
                "direction {dir:?}"
            );
        }
    }

    #[test]
    fn brion_matches_enumeration_for_basics() {
        for p in [
            hull(1, &[&[0], &[2]]),
            hull(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]),
            hull(2, &[&[0, 0], &[3, 0], &[0, 2]]),
            hull(3, &[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]),
        ] {
            let b = brion_convex(&p, 7).unwrap();
            let e = genfun_enumeration_polytope(&p, 100_000).unwrap();
            assert!(genfun_equal(&b, &e, 31).unwrap(), "mismatch for {:?}", p.vertices());
        }
    }

    #[test]
    fn brion_of_single_point() {
        let p = hull(2, &[&[3, 5]]);
        let b = brion_convex(&p, 7).unwrap();
        assert!(b.terms.is_empty());
        assert_eq!(b.poly.get(&vec![3, 5]), Some(&1));
    }

    #[test]
    fn brion_rejects_fractional_vertices() {
        let p = convex_hull(
            1,
            &[Point::new(vec![crate::scalar::frac(1, 2)]), pt(&[2])],
        )
        .unwrap();
        assert!(matches!(
            brion_convex(&p, 7),
            Err(Error::Contract(msg)) if msg.contains("non-integer")
        ));
    }

    #[test]
    fn coconvex_three_routes_agree_on_staircase() {
        let a = staircase(2);
        let by_vertices = genfun_coconvex(&a, 7).unwrap();
        let by_truncation = genfun_coconvex_via_truncation(&a, 7).unwrap();
        let by_enumeration = genfun_enumeration_body(&a, 100_000).unwrap();
        assert!(genfun_equal(&by_vertices, &by_truncation, 37).unwrap());
        assert!(genfun_equal(&by_vertices, &by_enumeration, 41).unwrap());
        // x + y: exactly the two points of A
        assert_eq!(by_enumeration.poly.len(), 2);
        assert_eq!(count_points(&by_vertices, 43).unwrap(), 2.into());
    }

    #[test]
    fn coconvex_1d_geometric_sum() {
        for k in 1..=5 {
            let a = make_body(&[pt(&[1])], &[pt(&[k])], &[int(1)]).unwrap();
            let g = genfun_coconvex(&a, 7).unwrap();
            let want: Vec<IVec> = (1..k).map(|j| vec![j]).collect();
            let e = GenFun::monomial_sum(1, &want);
            assert!(genfun_equal(&g, &e, 47).unwrap(), "k = {k}");
            assert_eq!(count_points(&g, 53).unwrap(), (k - 1).into());
        }
    }

    #[test]
    fn coconvex_rejects_fractional_delta() {
        let a = make_body(
            &[pt(&[1, 0]), pt(&[0, 1])],
            &[Point::new(vec![crate::scalar::frac(3, 2), int(0)]), pt(&[0, 2])],
            &[int(1), int(1)],
        )
        .unwrap();
        assert!(genfun_coconvex(&a, 7).is_err());
    }
}
