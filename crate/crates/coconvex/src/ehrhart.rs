//! Coconvex counting polynomials and their reciprocity evaluation.
//!
//! `E(m_1,...,m_n)` counts the integer points of
//! `m_1 A_1 ⊕ ... ⊕ m_n A_n`; it is a polynomial of total degree at most d
//! (the counting valuation is degree 0), recovered by exact interpolation
//! on positive integer tuples. Evaluating at `(-1,...,-1)` matches
//! `(-1)^d mu(X) - 1`, where `X` collects the sums `-v_1-...-v_n` with each
//! `v_i` in `cl(A_i) ∩ int(C)`: for `n = 1` the right-hand side is a direct
//! lattice count through the closure/interior membership predicates, and in
//! general it is computed through the chain algebra as
//! `-mu(prod_i inverse(-1_{A_i}))`, which is exact and finite.

use num_bigint::BigInt;

use crate::body::{combine, CoconvexBody, Membership};
use crate::chains::{counting_valuation, inverse_chain, mink_product};
use crate::error::{Error, Result};
use crate::poly::{interpolate_total_degree, MPoly};
use crate::report::{Check, Status};
use crate::scalar::{int, Scalar};

/// Bodies with integer cone and integer `Delta` vertices over a shared cone.
#[derive(Clone, Debug)]
pub struct CoconvexIntegerFamily {
    pub bodies: Vec<CoconvexBody>,
}

impl CoconvexIntegerFamily {
    pub fn new(bodies: Vec<CoconvexBody>) -> Result<Self> {
        if bodies.is_empty() {
            return Err(Error::Contract("family needs at least one body".into()));
        }
        let cone = bodies[0].cone().clone();
        let xi = bodies[0].xi().to_vec();
        for b in &bodies {
            if !b.is_integer() {
                return Err(Error::Validation(
                    "family bodies must have integer delta vertices".into(),
                ));
            }
            if b.cone() != &cone || b.xi() != xi.as_slice() {
                return Err(Error::Contract(
                    "family bodies must share the cone and functional".into(),
                ));
            }
        }
        Ok(CoconvexIntegerFamily { bodies })
    }

    pub fn dim(&self) -> usize {
        self.bodies[0].dim()
    }

    pub fn nvars(&self) -> usize {
        self.bodies.len()
    }
}

/// `#(A ∩ Z^d)` by bounding-box enumeration with exact membership.
pub fn count_coconvex(a: &CoconvexBody, cap: u64) -> Result<BigInt> {
    let (_, ct) = a.truncate(a.tstar())?;
    let (lo, hi) = ct.bounding_box();
    let pts = crate::geom::lattice_points(&lo, &hi, cap, |x| {
        a.membership(x) == Membership::InA
    })?;
    Ok(BigInt::from(pts.len()))
}

/// Interpolates the counting polynomial from counts at the deterministic
/// positive-integer grid, verifying 3 extra seeded tuples exactly.
pub fn ehrhart_interpolate(fam: &CoconvexIntegerFamily, cap: u64) -> Result<MPoly> {
    let d = fam.dim() as u32;
    interpolate_total_degree(fam.nvars(), d, |m| {
        let body = combine(&fam.bodies, m)?;
        Ok(Scalar::from(count_coconvex(&body, cap)?))
    })
}

/// Exact polynomial evaluation at an integer tuple.
pub fn evaluate(p: &MPoly, m: &[i64]) -> Scalar {
    let at: Vec<Scalar> = m.iter().map(|&x| int(x)).collect();
    p.eval(&at)
}

/// `(-1)^d * #{z : -z ∈ cl(A) ∩ int(C)} - 1` by direct enumeration.
pub fn reciprocity_rhs_n1(a: &CoconvexBody, cap: u64) -> Result<BigInt> {
    let (_, ct) = a.truncate(a.tstar())?;
    let (lo, hi) = ct.bounding_box();
    let pts = crate::geom::lattice_points(&lo, &hi, cap, |x| {
        a.closure_membership(x) && a.interior_cone_membership(x)
    })?;
    let n = BigInt::from(pts.len());
    let signed = if a.dim() % 2 == 0 { n } else { -n };
    Ok(signed - 1)
}

const CHAIN_TERM_CAP: usize = 20_000;

/// `-mu(prod_i inverse(-1_{A_i}))` through the chain algebra.
pub fn reciprocity_rhs_chain(fam: &CoconvexIntegerFamily, cap: u64) -> Result<BigInt> {
    let mut product = inverse_chain(&fam.bodies[0])?;
    for b in &fam.bodies[1..] {
        product = mink_product(&product, &inverse_chain(b)?)?;
        if product.terms().len() > CHAIN_TERM_CAP {
            return Err(Error::Capability(format!(
                "inverse-chain product grew past {CHAIN_TERM_CAP} terms"
            )));
        }
    }
    Ok(-counting_valuation(&product, cap)?)
}

/// Reciprocity report: interpolated polynomial, its value at
/// `(-1,...,-1)`, and agreement with the enumeration (n = 1) and chain
/// routes.
pub fn reciprocity_check(fam: &CoconvexIntegerFamily, cap: u64) -> Result<Check> {
    let d = fam.dim();
    if d > 3 {
        return Err(Error::Capability(
            "the chain reciprocity route is capped at dimension 3".into(),
        ));
    }
    let e = ehrhart_interpolate(fam, cap)?;
    let minus_ones = vec![-1i64; fam.nvars()];
    let lhs = evaluate(&e, &minus_ones);
    let mut check = Check::pass("ehrhart-reciprocity");
    check.note("polynomial", e.display("m"));
    check.note("lhs", crate::scalar::format_rational(&lhs));
    let rhs = Scalar::from(reciprocity_rhs_chain(fam, cap)?);
    check.note("rhs_chain", crate::scalar::format_rational(&rhs));
    if lhs != rhs {
        check.status = Status::Fail;
        check.note("reason", "chain route disagrees with the polynomial value");
        return Ok(check);
    }
    if fam.nvars() == 1 {
        let rhs1 = Scalar::from(reciprocity_rhs_n1(&fam.bodies[0], cap)?);
        check.note("rhs_enumeration", crate::scalar::format_rational(&rhs1));
        if lhs != rhs1 {
            check.status = Status::Fail;
            check.note("reason", "enumeration route disagrees with the polynomial value");
        }
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::{make_body, scale};
    use crate::geom::Point;

    const CAP: u64 = 2_000_000;

    fn pt(c: &[i64]) -> Point {
        Point::from_ints(c)
    }

    fn staircase(k: i64) -> CoconvexBody {
        make_body(
            &[pt(&[1, 0]), pt(&[0, 1])],
            &[pt(&[k, 0]), pt(&[0, k])],
            &[int(1), int(1)],
        )
        .unwrap()
    }

    fn toy_1d(k: i64) -> CoconvexBody {
        make_body(&[pt(&[1])], &[pt(&[k])], &[int(1)]).unwrap()
    }

    fn octant_staircase(k: i64) -> CoconvexBody {
        make_body(
            &[pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1])],
            &[pt(&[k, 0, 0]), pt(&[0, k, 0]), pt(&[0, 0, k])],
            &[int(1), int(1), int(1)],
        )
        .unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(count_coconvex(&staircase(2), CAP).unwrap(), BigInt::from(2));
        for k in 1..=4 {
            assert_eq!(count_coconvex(&toy_1d(k), CAP).unwrap(), BigInt::from(k - 1));
        }
        assert_eq!(count_coconvex(&octant_staircase(2), CAP).unwrap(), BigInt::from(3));
    }

    #[test]
    fn staircase_polynomial() {
        let fam = CoconvexIntegerFamily::new(vec![staircase(2)]).unwrap();
        let e = ehrhart_interpolate(&fam, CAP).unwrap();
        // 2m^2 + m - 1, from triangular-number counts 2, 9, 20
        let want = MPoly::from_terms(
            1,
            vec![(vec![2], int(2)), (vec![1], int(1)), (vec![0], int(-1))],
        );
        assert_eq!(e, want);
        assert_eq!(evaluate(&e, &[-1]), int(0));
        assert_eq!(evaluate(&e, &[1]), int(2));
    }

    #[test]
    fn toy_1d_polynomial() {
        for k in 1..=4 {
            let fam = CoconvexIntegerFamily::new(vec![toy_1d(k)]).unwrap();
            let e = ehrhart_interpolate(&fam, CAP).unwrap();
            let want = MPoly::from_terms(1, vec![(vec![1], int(k)), (vec![0], int(-1))]);
            assert_eq!(e, want, "k = {k}");
        }
    }

    #[test]
    fn two_variable_polynomial() {
        let fam = CoconvexIntegerFamily::new(vec![staircase(2), staircase(4)]).unwrap();
        let e = ehrhart_interpolate(&fam, CAP).unwrap();
        // 2(m1 + 2 m2)^2 + (m1 + 2 m2) - 1
        let want = MPoly::from_terms(
            2,
            vec![
                (vec![2, 0], int(2)),
                (vec![1, 1], int(8)),
                (vec![0, 2], int(8)),
                (vec![1, 0], int(1)),
                (vec![0, 1], int(2)),
                (vec![0, 0], int(-1)),
            ],
        );
        assert_eq!(e, want);
        assert_eq!(evaluate(&e, &[-1, -1]), int(14));
    }

    #[test]
    fn reciprocity_enumeration_route() {
        // staircase: X ∩ Z^2 = {-(1,1)}, so the right side is 1 - 1 = 0
        assert_eq!(reciprocity_rhs_n1(&staircase(2), CAP).unwrap(), BigInt::from(0));
        for k in 1..=4 {
            assert_eq!(
                reciprocity_rhs_n1(&toy_1d(k), CAP).unwrap(),
                BigInt::from(-k - 1)
            );
        }
    }

    #[test]
    fn reciprocity_chain_route() {
        let fam = CoconvexIntegerFamily::new(vec![staircase(2)]).unwrap();
        assert_eq!(reciprocity_rhs_chain(&fam, CAP).unwrap(), BigInt::from(0));
        let fam2 = CoconvexIntegerFamily::new(vec![staircase(2), staircase(4)]).unwrap();
        assert_eq!(reciprocity_rhs_chain(&fam2, CAP).unwrap(), BigInt::from(14));
        let fam1d = CoconvexIntegerFamily::new(vec![toy_1d(2)]).unwrap();
        assert_eq!(reciprocity_rhs_chain(&fam1d, CAP).unwrap(), BigInt::from(-3));
    }

    #[test]
    fn reciprocity_checks_pass() {
        for fam in [
            CoconvexIntegerFamily::new(vec![staircase(2)]).unwrap(),
            CoconvexIntegerFamily::new(vec![toy_1d(3)]).unwrap(),
            CoconvexIntegerFamily::new(vec![staircase(2), staircase(4)]).unwrap(),
        ] {
            let c = reciprocity_check(&fam, CAP).unwrap();
            assert_eq!(c.status, Status::Pass, "{:?}", c.details);
        }
    }

    #[test]
    fn reciprocity_octant() {
        let a = octant_staircase(3);
        let fam = CoconvexIntegerFamily::new(vec![a.clone()]).unwrap();
        let e = ehrhart_interpolate(&fam, CAP).unwrap();
        let rhs = Scalar::from(reciprocity_rhs_n1(&a, CAP).unwrap());
        assert_eq!(evaluate(&e, &[-1]), rhs);
    }

    #[test]
    fn scaling_coherence() {
        let a = staircase(2);
        let fam_a = CoconvexIntegerFamily::new(vec![a.clone()]).unwrap();
        let e = ehrhart_interpolate(&fam_a, CAP).unwrap();
        for m in 1..=3 {
            let scaled = scale(&a, &int(m)).unwrap();
            let fam_m = CoconvexIntegerFamily::new(vec![scaled]).unwrap();
            let em = ehrhart_interpolate(&fam_m, CAP).unwrap();
            assert_eq!(evaluate(&e, &[m]), evaluate(&em, &[1]), "m = {m}");
        }
    }

    #[test]
    fn degree_bound_holds() {
        let fam = CoconvexIntegerFamily::new(vec![staircase(2), staircase(3)]).unwrap();
        let e = ehrhart_interpolate(&fam, CAP).unwrap();
        assert!(e.total_degree() <= 2);
    }

    #[test]
    fn non_integer_body_rejected() {
        let a = make_body(
            &[pt(&[1, 0]), pt(&[0, 1])],
            &[
                Point::new(vec![crate::scalar::frac(3, 2), int(0)]),
                pt(&[0, 2]),
            ],
            &[int(1), int(1)],
        )
        .unwrap();
        assert!(CoconvexIntegerFamily::new(vec![a]).is_err());
    }
}
