//! Coconvex bodies: a pointed full-dimensional cone `C`, a convex set
//! `Delta = conv(base points) + C` inside it with bounded complement, and
//! the body `A = C \ (Delta ∪ {0})` itself, with truncations, the oplus
//! semigroup operation, dilation and exact covolume.
//!
//! `Delta` is entered by generators ("base points"), so `Delta + C = Delta`
//! holds by construction; its half-space description is derived by
//! homogenizing to a cone in R^{d+1} (generators `(p,1)` and `(g,0)`) and
//! dualizing. Only finitely generated `Delta` with rational data is
//! representable here; arbitrary closed convex sets are out of scope.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geom::{
    hrep_to_vrep, hull, minkowski_sum, volume, HalfSpace, HrepResult, Point, Polytope,
};
use crate::linalg;
use crate::scalar::{int, Scalar};

/// A pointed, full-dimensional closed convex cone with apex at the origin.
///
/// Canonical form: primitive integer extreme rays and facet normals, both
/// sorted, so equal cones compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    rays: Vec<Point>,
    facets: Vec<HalfSpace>,
}

/// Facets (through the origin) of the full-dimensional cone spanned by
/// `gens`: hyperplanes spanned by (dim-1)-subsets with every generator on
/// one side. Works on primitive integer directions internally.
pub(crate) fn cone_facets(dim: usize, gens: &[Point]) -> Vec<HalfSpace> {
    use itertools::Itertools;
    use num_bigint::BigInt;
    use std::collections::BTreeSet;
    let igens: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|g| crate::scalar::primitive_integer(g.coords()).expect("nonzero generator"))
        .collect();
    let mut seen: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    let mut out: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for subset in (0..igens.len()).combinations(dim - 1) {
        let rows: Vec<Vec<BigInt>> = subset.iter().map(|&i| igens[i].clone()).collect();
        let Some(n) = hull::primitive_int_vec(hull::cross_normal(&rows, dim)) else {
            continue;
        };
        if seen.contains(&n) {
            continue;
        }
        let neg: Vec<BigInt> = n.iter().map(|x| -x).collect();
        seen.insert(n.clone());
        seen.insert(neg.clone());
        let (mut pos_side, mut neg_side) = (false, false);
        for g in &igens {
            let s: BigInt = n.iter().zip(g).map(|(a, b)| a * b).sum();
            if s.is_positive() {
                pos_side = true;
            } else if s.is_negative() {
                neg_side = true;
            }
            if pos_side && neg_side {
                break;
            }
        }
        match (pos_side, neg_side) {
            (true, true) => {}
            (_, false) => {
                out.insert(n);
            }
            (false, true) => {
                out.insert(neg);
            }
        }
    }
    out.into_iter()
        .map(|n| {
            HalfSpace::closed(
                n.into_iter().map(Scalar::from).collect::<Vec<_>>(),
                Scalar::zero(),
            )
        })
        .collect()
}

impl Cone {
    /// Validates and canonicalizes a cone given by generators.
    pub fn new(dim: usize, generators: &[Point]) -> Result<Cone> {
        hull::check_dim(dim)?;
        if generators.is_empty() {
            return Err(Error::Validation("cone needs at least one generator".into()));
        }
        for g in generators {
            if g.dim() != dim {
                return Err(Error::Contract("generator dimension mismatch".into()));
            }
            if g.is_zero() {
                return Err(Error::Validation("zero cone generator".into()));
            }
        }
        let rows: Vec<Vec<Scalar>> = generators.iter().map(|g| g.coords().to_vec()).collect();
        if linalg::rank(&rows) != dim {
            return Err(Error::Validation(
                "cone generators do not span the ambient space".into(),
            ));
        }
        let facets = cone_facets(dim, generators);
        // C ∩ (−C) is the lineality space of the facet description
        let normals: Vec<Vec<Scalar>> = facets.iter().map(|f| f.normal.clone()).collect();
        if !linalg::nullspace_dim(&normals, dim).is_empty() {
            return Err(Error::Validation(
                "cone is not pointed: it contains a line".into(),
            ));
        }
        // extreme rays: generators whose active facets span a hyperplane
        let mut rays: Vec<Point> = Vec::new();
        for g in generators {
            let active: Vec<Vec<Scalar>> = facets
                .iter()
                .filter(|f| f.on_boundary(g))
                .map(|f| f.normal.clone())
                .collect();
            if linalg::rank(&active) == dim - 1 {
                let p = crate::scalar::primitive_integer(g.coords()).unwrap();
                let r = Point::new(p.into_iter().map(Scalar::from).collect::<Vec<_>>());
                if !rays.contains(&r) {
                    rays.push(r);
                }
            }
        }
        rays.sort();
        Ok(Cone { dim, rays, facets })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Primitive integer extreme rays, sorted.
    pub fn rays(&self) -> &[Point] {
        &self.rays
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    pub fn contains(&self, x: &Point) -> bool {
        self.facets.iter().all(|f| f.contains(x))
    }

    pub fn interior_contains(&self, x: &Point) -> bool {
        self.facets.iter().all(|f| f.slack(x).is_positive())
    }

    /// The truncation `C ∩ {xi <= t}` as a polytope.
    pub fn truncated(&self, xi: &[Scalar], t: &Scalar) -> Result<Polytope> {
        let mut hs = self.facets.clone();
        hs.push(HalfSpace::closed(xi.iter().map(|x| -x).collect(), -t));
        match hrep_to_vrep(self.dim, &hs)? {
            HrepResult::Bounded(p) => Ok(p),
            _ => Err(Error::Invariant("cone truncation must be bounded".into())),
        }
    }
}

/// `Delta = conv(base points) + C`, stored with its derived irredundant
/// half-space description. Base points are reduced to the vertices of
/// `Delta`, so the representation is canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CConvexSet {
    cone: Cone,
    base_points: Vec<Point>,
    facets: Vec<HalfSpace>,
}

impl CConvexSet {
    pub fn new(cone: Cone, base_points: &[Point]) -> Result<CConvexSet> {
        if base_points.is_empty() {
            return Err(Error::Validation("delta needs at least one base point".into()));
        }
        for p in base_points {
            if p.dim() != cone.dim() {
                return Err(Error::Contract("base point dimension mismatch".into()));
            }
            if !cone.contains(p) {
                return Err(Error::Validation(format!(
                    "base point {:?} lies outside the cone",
                    p.coords()
                )));
            }
        }
        let dim = cone.dim();
        // prune points swallowed by another point's cone translate
        let mut pts: Vec<Point> = base_points.to_vec();
        pts.sort();
        pts.dedup();
        let mut kept: Vec<Point> = Vec::new();
        for (i, p) in pts.iter().enumerate() {
            let dominated = pts[..i]
                .iter()
                .chain(&pts[i + 1..])
                .any(|q| cone.contains(&p.sub(q)));
            if !dominated {
                kept.push(p.clone());
            }
        }
        // homogenize: generators (p,1) and (ray,0) of a cone in R^{d+1}
        let mut hgens: Vec<Point> = Vec::new();
        for p in &kept {
            let mut c = p.coords().to_vec();
            c.push(int(1));
            hgens.push(Point::new(c));
        }
        for r in cone.rays() {
            let mut c = r.coords().to_vec();
            c.push(Scalar::zero());
            hgens.push(Point::new(c));
        }
        let mut facets: Vec<HalfSpace> = Vec::new();
        for hf in cone_facets(dim + 1, &hgens) {
            let (n, last) = hf.normal.split_at(dim);
            if n.iter().all(|x| x.is_zero()) {
                continue; // the t >= 0 facet of the homogenization
            }
            facets.push(HalfSpace::closed(n.to_vec(), -last[0].clone()).canonical());
        }
        facets.sort();
        if facets.iter().all(|f| !f.offset.is_positive()) {
            return Err(Error::Validation("origin lies in delta".into()));
        }
        // keep exactly the vertices of delta
        let vertices: Vec<Point> = kept
            .into_iter()
            .filter(|p| {
                let active: Vec<Vec<Scalar>> = facets
                    .iter()
                    .filter(|f| f.on_boundary(p))
                    .map(|f| f.normal.clone())
                    .collect();
                linalg::rank(&active) == dim
            })
            .collect();
        if vertices.is_empty() {
            return Err(Error::Invariant("delta without vertices".into()));
        }
        Ok(CConvexSet { cone, base_points: vertices, facets })
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    /// The vertices of `Delta` (base points after hull reduction), sorted.
    pub fn base_points(&self) -> &[Point] {
        &self.base_points
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    pub fn contains(&self, x: &Point) -> bool {
        self.facets.iter().all(|f| f.contains(x))
    }

    pub fn interior_contains(&self, x: &Point) -> bool {
        self.facets.iter().all(|f| f.slack(x).is_positive())
    }

    /// `Delta ∩ {xi <= t}` as a polytope.
    pub fn truncated(&self, xi: &[Scalar], t: &Scalar) -> Result<Polytope> {
        let mut hs = self.facets.clone();
        hs.push(HalfSpace::closed(xi.iter().map(|x| -x).collect(), -t));
        match hrep_to_vrep(self.cone.dim(), &hs)? {
            HrepResult::Bounded(p) => Ok(p),
            _ => Err(Error::Invariant("delta truncation must be bounded".into())),
        }
    }
}

/// Membership classes of a point relative to a coconvex body.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    InA,
    InDelta,
    Origin,
    OutsideC,
}

/// The coconvex body `A = C \ (Delta ∪ {0})` with its truncation data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoconvexBody {
    delta: CConvexSet,
    xi: Vec<Scalar>,
    tstar: Scalar,
}

const TSTAR_CAP_LOG2: u32 = 40;

/// Builds and fully validates a coconvex body.
///
/// The certified truncation threshold is found by doubling `t` from 1 until
/// every extreme ray hits `Delta` at level `t`; containment of that slice
/// implies containment of every slice beyond it (dilation plus
/// `Delta + C = Delta`), so the complement is bounded. The doubling is
/// capped, and exceeding the cap reports an unbounded complement.
pub fn make_body(
    cone_generators: &[Point],
    delta_base_points: &[Point],
    xi: &[Scalar],
) -> Result<CoconvexBody> {
    let dim = cone_generators
        .first()
        .map(Point::dim)
        .ok_or_else(|| Error::Validation("cone needs at least one generator".into()))?;
    let cone = Cone::new(dim, cone_generators)?;
    if xi.len() != dim {
        return Err(Error::Contract("truncation functional dimension mismatch".into()));
    }
    for g in cone.rays() {
        if !g.dot(xi).is_positive() {
            return Err(Error::Validation(
                "truncation functional must be strictly positive on the cone".into(),
            ));
        }
    }
    let delta = CConvexSet::new(cone, delta_base_points)?;
    let tstar = certify_tstar(&delta, xi)?;
    Ok(CoconvexBody { delta, xi: xi.to_vec(), tstar })
}

fn certify_tstar(delta: &CConvexSet, xi: &[Scalar]) -> Result<Scalar> {
    let mut t = int(1);
    for _ in 0..=TSTAR_CAP_LOG2 {
        let ok = delta.cone().rays().iter().all(|r| {
            let lam = &t / r.dot(xi);
            delta.contains(&r.scale(&lam))
        });
        if ok {
            return Ok(t);
        }
        t = t * int(2);
    }
    Err(Error::Validation(format!(
        "complement is unbounded: slice containment failed up to 2^{TSTAR_CAP_LOG2}"
    )))
}

impl CoconvexBody {
    pub fn dim(&self) -> usize {
        self.delta.cone().dim()
    }

    pub fn cone(&self) -> &Cone {
        self.delta.cone()
    }

    pub fn delta(&self) -> &CConvexSet {
        &self.delta
    }

    pub fn xi(&self) -> &[Scalar] {
        &self.xi
    }

    /// Certified truncation threshold.
    pub fn tstar(&self) -> &Scalar {
        &self.tstar
    }

    /// `{0} ∪ vertices(Delta)` — the vertex set of the body.
    pub fn vertex_set(&self) -> Vec<Point> {
        let mut v = vec![Point::zero(self.dim())];
        v.extend_from_slice(self.delta.base_points());
        v
    }

    /// `(Delta_t, C_t)` for `t >= tstar`.
    pub fn truncate(&self, t: &Scalar) -> Result<(Polytope, Polytope)> {
        if t < &self.tstar {
            return Err(Error::Contract(format!(
                "truncation level {} below certified threshold {}",
                t, self.tstar
            )));
        }
        Ok((
            self.delta.truncated(&self.xi, t)?,
            self.cone().truncated(&self.xi, t)?,
        ))
    }

    /// Exact covolume `vol(C_t) - vol(Delta_t)`, computed at `t = tstar`
    /// and re-checked at `t = 2 tstar`.
    pub fn covolume(&self) -> Result<Scalar> {
        let v1 = self.covolume_at(&self.tstar)?;
        let t2 = &self.tstar * int(2);
        let v2 = self.covolume_at(&t2)?;
        if v1 != v2 {
            return Err(Error::Invariant(
                "covolume depends on the truncation level".into(),
            ));
        }
        Ok(v1)
    }

    /// Covolume at one truncation level (`t >= tstar` enforced).
    pub fn covolume_at(&self, t: &Scalar) -> Result<Scalar> {
        let (dt, ct) = self.truncate(t)?;
        Ok(volume(&ct) - volume(&dt))
    }

    pub fn membership(&self, x: &Point) -> Membership {
        if !self.cone().contains(x) {
            Membership::OutsideC
        } else if x.is_zero() {
            Membership::Origin
        } else if self.delta.contains(x) {
            Membership::InDelta
        } else {
            Membership::InA
        }
    }

    /// `x ∈ C and x ∉ int(Delta)`: the closure of `A` within the cone.
    pub fn closure_membership(&self, x: &Point) -> bool {
        self.cone().contains(x) && !self.delta.interior_contains(x)
    }

    /// Strict inequalities of every cone facet.
    pub fn interior_cone_membership(&self, x: &Point) -> bool {
        self.cone().interior_contains(x)
    }

    /// Whether every `Delta` vertex is an integer point (the integer
    /// polytope setting for counting).
    pub fn is_integer(&self) -> bool {
        self.delta.base_points().iter().all(Point::is_integer)
    }
}

/// The semigroup operation: the body whose `Delta` is the Minkowski sum of
/// the operands' `Delta`s. Requires a shared cone and functional.
pub fn oplus(a: &CoconvexBody, b: &CoconvexBody) -> Result<CoconvexBody> {
    if a.cone() != b.cone() {
        return Err(Error::Contract("oplus needs bodies over the same cone".into()));
    }
    if a.xi != b.xi {
        return Err(Error::Contract("oplus needs a shared truncation functional".into()));
    }
    let mut sums = Vec::new();
    for p in a.delta.base_points() {
        for q in b.delta.base_points() {
            sums.push(p.add(q));
        }
    }
    let gens: Vec<Point> = a.cone().rays().to_vec();
    make_body(&gens, &sums, &a.xi)
}

/// Dilation by a positive rational factor.
pub fn scale(a: &CoconvexBody, lambda: &Scalar) -> Result<CoconvexBody> {
    if !lambda.is_positive() {
        return Err(Error::Contract("scale factor must be positive".into()));
    }
    let pts: Vec<Point> = a.delta.base_points().iter().map(|p| p.scale(lambda)).collect();
    let gens: Vec<Point> = a.cone().rays().to_vec();
    make_body(&gens, &pts, &a.xi)
}

/// `lambda_1 a_1 ⊕ ... ⊕ lambda_n a_n` for positive coefficients.
///
/// Folds pairwise vertex sums with a full hull reduction between steps (the
/// reduction keeps the point sets minimal, which dominates the cost of the
/// dual description); equivalent to a chain of scale and oplus calls.
pub fn combine(bodies: &[CoconvexBody], lambda: &[Scalar]) -> Result<CoconvexBody> {
    if bodies.is_empty() || bodies.len() != lambda.len() {
        return Err(Error::Contract("combine needs one coefficient per body".into()));
    }
    let cone = bodies[0].cone();
    let xi = bodies[0].xi().to_vec();
    for (b, l) in bodies.iter().zip(lambda) {
        if b.cone() != cone || b.xi() != xi.as_slice() {
            return Err(Error::Contract(
                "combine needs bodies over a shared cone and functional".into(),
            ));
        }
        if !l.is_positive() {
            return Err(Error::Contract("combine coefficients must be positive".into()));
        }
    }
    let scaled0: Vec<Point> = bodies[0]
        .delta()
        .base_points()
        .iter()
        .map(|p| p.scale(&lambda[0]))
        .collect();
    let mut delta = CConvexSet::new(cone.clone(), &scaled0)?;
    for (b, l) in bodies.iter().zip(lambda).skip(1) {
        let mut sums = Vec::with_capacity(delta.base_points().len() * b.delta().base_points().len());
        for p in delta.base_points() {
            for q in b.delta().base_points() {
                sums.push(p.add(&q.scale(l)));
            }
        }
        delta = CConvexSet::new(cone.clone(), &sums)?;
    }
    let tstar = certify_tstar(&delta, &xi)?;
    Ok(CoconvexBody { delta, xi, tstar })
}

/// `Delta_t + C_s = Delta_{t+s}` as a vertex-set equality; exercised by the
/// test suite and available to verifiers.
pub fn truncation_sum_holds(a: &CoconvexBody, t: &Scalar, s: &Scalar) -> Result<bool> {
    let (dt, _) = a.truncate(t)?;
    let cs = a.cone().truncated(a.xi(), s)?;
    let (dts, _) = a.truncate(&(t + s))?;
    Ok(minkowski_sum(&dt, &cs)?.vertices() == dts.vertices())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn pts(cs: &[&[i64]]) -> Vec<Point> {
        cs.iter().map(|c| Point::from_ints(c)).collect()
    }

    fn staircase(k: i64) -> CoconvexBody {
        make_body(
            &pts(&[&[1, 0], &[0, 1]]),
            &pts(&[&[k, 0], &[0, k]]),
            &[int(1), int(1)],
        )
        .unwrap()
    }

    fn toy_1d(k: i64) -> CoconvexBody {
        make_body(&pts(&[&[1]]), &pts(&[&[k]]), &[int(1)]).unwrap()
    }

    #[test]
    fn staircase_covolume_is_two() {
        // shoelace on the staircase triangle: 8 - 6 at t = 4
        let a = staircase(2);
        assert_eq!(a.covolume().unwrap(), int(2));
        assert_eq!(a.tstar(), &int(2));
    }

    #[test]
    fn toy_1d_covolume_is_k() {
        for k in 1..=4 {
            assert_eq!(toy_1d(k).covolume().unwrap(), int(k));
        }
    }

    #[test]
    fn octant_staircase_covolume() {
        // simplex volume 27/6 = 9/2
        let a = make_body(
            &pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            &pts(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]),
            &[int(1), int(1), int(1)],
        )
        .unwrap();
        assert_eq!(a.covolume().unwrap(), crate::scalar::frac(9, 2));
    }

    #[test]
    fn unbounded_complement_rejected() {
        let r = make_body(
            &pts(&[&[1, 0], &[0, 1]]),
            &pts(&[&[1, 1]]),
            &[int(1), int(1)],
        );
        assert!(matches!(r, Err(Error::Validation(msg)) if msg.contains("unbounded")));
    }

    #[test]
    fn origin_in_delta_rejected() {
        let r = make_body(
            &pts(&[&[1, 0], &[0, 1]]),
            &pts(&[&[0, 0]]),
            &[int(1), int(1)],
        );
        assert!(matches!(r, Err(Error::Validation(msg)) if msg.contains("origin")));
    }

    #[test]
    fn non_pointed_cone_rejected() {
        let r = Cone::new(2, &pts(&[&[1, 0], &[-1, 0], &[0, 1]]));
        assert!(matches!(r, Err(Error::Validation(msg)) if msg.contains("pointed")));
    }

    #[test]
    fn base_point_outside_cone_rejected() {
        let r = make_body(
            &pts(&[&[1, 0], &[0, 1]]),
            &pts(&[&[-1, 2]]),
            &[int(1), int(1)],
        );
        assert!(matches!(r, Err(Error::Validation(msg)) if msg.contains("outside")));
    }

    #[test]
    fn truncate_examples() {
        let a = staircase(2);
        let (dt, ct) = a.truncate(&int(4)).unwrap();
        assert_eq!(ct.vertices(), &pts(&[&[0, 0], &[0, 4], &[4, 0]])[..]);
        assert_eq!(dt.vertices(), &pts(&[&[0, 2], &[0, 4], &[2, 0], &[4, 0]])[..]);
        let b = toy_1d(2);
        let (dt, _) = b.truncate(&int(5)).unwrap();
        assert_eq!(dt.vertices(), &pts(&[&[2], &[5]])[..]);
        assert!(matches!(a.truncate(&int(1)), Err(Error::Contract(_))));
    }

    #[test]
    fn oplus_of_staircases() {
        let c = oplus(&staircase(2), &staircase(4)).unwrap();
        assert_eq!(c.delta().base_points(), &pts(&[&[0, 6], &[6, 0]])[..]);
        assert_eq!(c.covolume().unwrap(), int(18));
        // homothety: a ⊕ a = 2a
        let a = staircase(2);
        let twice = oplus(&a, &a).unwrap();
        assert_eq!(&twice, &scale(&a, &int(2)).unwrap());
        // 1d lengths add
        let c1 = oplus(&toy_1d(2), &toy_1d(3)).unwrap();
        assert_eq!(c1.covolume().unwrap(), int(5));
    }

    #[test]
    fn oplus_commutative_associative() {
        let a = staircase(2);
        let b = make_body(
            &pts(&[&[1, 0], &[0, 1]]),
            &pts(&[&[3, 0], &[1, 1], &[0, 2]]),
            &[int(1), int(1)],
        )
        .unwrap();
        let c = make_body(
            &pts(&[&[1, 0], &[0, 1]]),
            &pts(&[&[1, 0], &[0, 3]]),
            &[int(1), int(1)],
        )
        .unwrap();
        assert_eq!(oplus(&a, &b).unwrap(), oplus(&b, &a).unwrap());
        assert_eq!(
            oplus(&oplus(&a, &b).unwrap(), &c).unwrap(),
            oplus(&a, &oplus(&b, &c).unwrap()).unwrap()
        );
    }

    #[test]
    fn scaling_covolume_power() {
        let a = staircase(1);
        assert_eq!(
            scale(&a, &int(2)).unwrap().covolume().unwrap(),
            int(4) * a.covolume().unwrap()
        );
        assert_eq!(&scale(&a, &int(1)).unwrap(), &a);
        let o = make_body(
            &pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            &pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            &[int(1), int(1), int(1)],
        )
        .unwrap();
        assert_eq!(
            scale(&o, &int(3)).unwrap().covolume().unwrap(),
            int(27) * o.covolume().unwrap()
        );
        assert!(scale(&a, &int(0)).is_err());
    }

    #[test]
    fn membership_classes() {
        let a = staircase(2);
        assert_eq!(a.membership(&Point::from_ints(&[1, 1])), Membership::InDelta);
        assert_eq!(a.membership(&Point::from_ints(&[1, 0])), Membership::InA);
        assert_eq!(a.membership(&Point::from_ints(&[0, 0])), Membership::Origin);
        assert_eq!(a.membership(&Point::from_ints(&[-1, 0])), Membership::OutsideC);
    }

    #[test]
    fn closure_and_interior_predicates() {
        let a = staircase(2);
        assert!(a.closure_membership(&Point::from_ints(&[1, 1])));
        assert!(!a.interior_cone_membership(&Point::from_ints(&[0, 1])));
        assert!(a.interior_cone_membership(&Point::from_ints(&[1, 1])));
    }

    #[test]
    fn c_convexity_on_generators_and_random_combos() {
        let b = make_body(
            &pts(&[&[1, 0], &[1, 3]]),
            &pts(&[&[2, 0], &[1, 1], &[1, 3]]),
            &[int(1), int(1)],
        )
        .unwrap();
        for p in b.delta().base_points() {
            for g in b.cone().rays() {
                assert!(b.delta().contains(&p.add(g)));
            }
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let idx = rng.random_range(0..b.delta().base_points().len());
            let mut x = b.delta().base_points()[idx].clone();
            for g in b.cone().rays() {
                let c = crate::scalar::frac(rng.random_range(0..12), rng.random_range(1..4));
                x = x.add(&g.scale(&c));
            }
            assert!(b.delta().contains(&x));
        }
    }

    #[test]
    fn truncation_sum_identity() {
        let a = staircase(2);
        assert!(truncation_sum_holds(&a, &int(4), &crate::scalar::frac(3, 2)).unwrap());
        assert!(truncation_sum_holds(&a, &int(2), &int(1)).unwrap());
    }

    #[test]
    fn membership_partitions_lattice_points() {
        let a = staircase(2);
        let (_, ct) = a.truncate(&int(4)).unwrap();
        let pts = crate::geom::polytope_lattice_points(&ct, 10_000).unwrap();
        let mut in_a = 0;
        for p in &pts {
            match a.membership(p) {
                Membership::InA => in_a += 1,
                Membership::InDelta | Membership::Origin => {}
                Membership::OutsideC => panic!("point of C_t outside C"),
            }
        }
        assert_eq!(in_a, 2); // (1,0) and (0,1); (1,1) is on the boundary of delta
    }

    #[test]
    fn vertex_set_is_origin_plus_delta_vertices() {
        let a = staircase(2);
        let vs = a.vertex_set();
        assert_eq!(vs.len(), 3);
        assert_eq!(vs[0], Point::zero(2));
    }

    #[test]
    fn covolume_agrees_across_levels() {
        let a = staircase(2);
        assert_eq!(a.covolume_at(&int(2)).unwrap(), a.covolume_at(&int(7)).unwrap());
    }
}
