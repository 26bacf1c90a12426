//! The acceptance suite: ten exact criteria covering the staircase and
//! 1-d worked examples, the randomized nonnegativity/signature suites, the
//! truncation identities, the pointwise chain identities, the vertex-cone
//! expansions, the plane sum-of-squares model, the reversed inequalities
//! and the cone-orthogonality identity. Every expected value is pinned
//! here; a seed fully determines every random draw.

use num_bigint::BigInt;

use crate::body::{make_body, CoconvexBody};
use crate::chains::{verify_inverse_chain, verify_product_identities};
use crate::ehrhart::{
    ehrhart_interpolate, evaluate, reciprocity_rhs_n1,
    CoconvexIntegerFamily,
};
use crate::error::Result;
use crate::genfun::{
    brion_convex, count_points, decompose_cone, genfun_coconvex,
    genfun_coconvex_via_truncation, genfun_enumeration_body, genfun_enumeration_polytope,
    genfun_equal, series_oracle_direct, series_oracle_piece, GenFun, PlacingOrder,
};
use crate::geom::Point;
use crate::mixed::{
    coconvex_af_check, cone_orthogonality_check, convex_af_check, reversed_minkowski_check,
    truncation_volume_identities, LinearFamilyCoconvex,
};
use crate::poly::MPoly;
use crate::polygon2d::{reversed_af_d2, sos_check};
use crate::report::{Check, Report, Status};
use crate::samples::{
    rng_from_seed, sample_body_pair, sample_coconvex_family, sample_convex_family,
    sample_integer_polytope, sample_support_vector, sample_wedge_family,
};
use crate::scalar::{format_rational, int};

const CAP: u64 = crate::geom::DEFAULT_BBOX_CAP;

fn fail(check: &mut Check, reason: impl Into<String>) {
    check.status = Status::Fail;
    check.note("reason", reason.into());
}

fn absorb(check: &mut Check, sub: Check, label: &str) {
    if sub.status != Status::Pass && check.status == Status::Pass {
        check.status = sub.status;
        check.note("failed_at", label.to_string());
        for (k, v) in sub.details {
            check.note(format!("{label}.{k}"), v);
        }
    }
}

fn quadrant_staircase(k: i64) -> Result<CoconvexBody> {
    make_body(
        &[Point::from_ints(&[1, 0]), Point::from_ints(&[0, 1])],
        &[Point::from_ints(&[k, 0]), Point::from_ints(&[0, k])],
        &[int(1), int(1)],
    )
}

fn toy_1d(k: i64) -> Result<CoconvexBody> {
    make_body(&[Point::from_ints(&[1])], &[Point::from_ints(&[k])], &[int(1)])
}

/// Quadrant staircase: covolume, lattice count, the three generating
/// function routes against `x + y`, the counting polynomial `2m^2 + m - 1`
/// and its value at -1 against `(-1)^2 * 1 - 1`.
pub fn criterion_01_staircase(seed: u64) -> Result<Check> {
    let mut check = Check::pass("01-quadrant-staircase");
    let a = quadrant_staircase(2)?;
    let cov = a.covolume()?;
    check.note("covolume", format_rational(&cov));
    if cov != int(2) {
        fail(&mut check, "covolume must be 2");
        return Ok(check);
    }
    let count = crate::ehrhart::count_coconvex(&a, CAP)?;
    check.note("lattice_count", count.to_string());
    if count != BigInt::from(2) {
        fail(&mut check, "lattice count must be 2");
        return Ok(check);
    }
    let by_vertices = genfun_coconvex(&a, seed)?;
    let by_truncation = genfun_coconvex_via_truncation(&a, seed)?;
    let by_enumeration = genfun_enumeration_body(&a, CAP)?;
    let xy = GenFun::monomial_sum(2, &[vec![1, 0], vec![0, 1]]);
    for (label, g) in [
        ("vertex_formula", &by_vertices),
        ("truncation_formula", &by_truncation),
        ("enumeration", &by_enumeration),
    ] {
        if !genfun_equal(g, &xy, seed ^ 0x5eed)? {
            fail(&mut check, format!("{label} is not x + y"));
            return Ok(check);
        }
    }
    check.note("genfun", "x + y (three routes)");
    let fam = CoconvexIntegerFamily::new(vec![a.clone()])?;
    let e = ehrhart_interpolate(&fam, CAP)?;
    let want = MPoly::from_terms(
        1,
        vec![(vec![2], int(2)), (vec![1], int(1)), (vec![0], int(-1))],
    );
    check.note("counting_polynomial", e.display("m"));
    if e != want {
        fail(&mut check, "counting polynomial must be 2m^2 + m - 1");
        return Ok(check);
    }
    let at_minus_one = evaluate(&e, &[-1]);
    let rhs = reciprocity_rhs_n1(&a, CAP)?;
    check.note("value_at_-1", format_rational(&at_minus_one));
    check.note("reciprocity_rhs", rhs.to_string());
    // (-1)^2 * 1 - 1 = 0: the reflected region holds one lattice point
    if at_minus_one != int(0) || rhs != BigInt::from(0) {
        fail(&mut check, "reciprocity at -1 must equal 0 on both sides");
    }
    Ok(check)
}

/// 1-d bodies of length k: covolume k, geometric-sum generating function,
/// reciprocity value -k-1.
pub fn criterion_02_toy_1d(seed: u64) -> Result<Check> {
    let mut check = Check::pass("02-toy-1d");
    for k in 1..=6i64 {
        let a = toy_1d(k)?;
        if a.covolume()? != int(k) {
            fail(&mut check, format!("covolume of the length-{k} body must be {k}"));
            return Ok(check);
        }
        let g = genfun_coconvex(&a, seed)?;
        let want: Vec<Vec<i64>> = (1..k).map(|j| vec![j]).collect();
        if !genfun_equal(&g, &GenFun::monomial_sum(1, &want), seed ^ k as u64)? {
            fail(&mut check, format!("generating function for k={k} is wrong"));
            return Ok(check);
        }
        let fam = CoconvexIntegerFamily::new(vec![a.clone()])?;
        let e = ehrhart_interpolate(&fam, CAP)?;
        let lhs = evaluate(&e, &[-1]);
        let rhs = reciprocity_rhs_n1(&a, CAP)?;
        if lhs != int(-k - 1) || rhs != BigInt::from(-k - 1) {
            fail(&mut check, format!("reciprocity for k={k} must give {}", -k - 1));
            return Ok(check);
        }
    }
    check.note("k_range", "1..=6");
    Ok(check)
}

fn coconvex_suite_families(seed: u64) -> Result<Vec<(String, LinearFamilyCoconvex)>> {
    let mut out = Vec::new();
    for dim in [2usize, 3] {
        let mut rng = rng_from_seed(seed ^ (dim as u64) << 8);
        for i in 0..20 {
            let n = i % 4 + 1;
            out.push((
                format!("d{dim}-n{n}-{i}"),
                sample_coconvex_family(dim, n, &mut rng)?,
            ));
        }
    }
    Ok(out)
}

/// Nonnegativity of the coconvex form over 20 seeded families per
/// dimension, with exact Cauchy-Schwarz spot checks.
pub fn criterion_03_coconvex_af(seed: u64) -> Result<Check> {
    let mut check = Check::pass("03-coconvex-af-suite");
    let fams = coconvex_suite_families(seed)?;
    for (label, fam) in &fams {
        let sub = coconvex_af_check(fam, seed ^ 0xaf, 10)?;
        absorb(&mut check, sub, label);
        if check.status != Status::Pass {
            return Ok(check);
        }
    }
    check.note("families", fams.len().to_string());
    Ok(check)
}

/// Signature (one positive square) of the convex form over 20 seeded
/// families per dimension.
pub fn criterion_04_convex_af(seed: u64) -> Result<Check> {
    let mut check = Check::pass("04-convex-af-signature");
    let mut count = 0;
    for dim in [2usize, 3] {
        let mut rng = rng_from_seed(seed ^ 0xc0 ^ (dim as u64) << 8);
        for i in 0..20 {
            let n = i % 3 + 2;
            let fam = sample_convex_family(dim, n, &mut rng)?;
            let sub = convex_af_check(&fam)?;
            absorb(&mut check, sub, &format!("d{dim}-{i}"));
            if check.status != Status::Pass {
                return Ok(check);
            }
            count += 1;
        }
    }
    check.note("families", count.to_string());
    Ok(check)
}

/// The volume- and quadratic-level truncation identities with positive
/// constants, as exact polynomial identities, over 10 seeded families.
pub fn criterion_05_truncation_identities(seed: u64) -> Result<Check> {
    let mut check = Check::pass("05-truncation-identities");
    let mut count = 0;
    for dim in [2usize, 3] {
        let mut rng = rng_from_seed(seed ^ 0x51 ^ (dim as u64) << 8);
        for i in 0..5 {
            let n = i % 3 + 1;
            let fam = sample_coconvex_family(dim, n, &mut rng)?;
            let sub = truncation_volume_identities(&fam)?;
            absorb(&mut check, sub, &format!("d{dim}-{i}"));
            if check.status != Status::Pass {
                return Ok(check);
            }
            count += 1;
        }
    }
    check.note("families", count.to_string());
    Ok(check)
}

/// Pointwise chain identities for 10 seeded integer body pairs across
/// dimensions 1 to 3: the truncated product representation, the negated
/// indicator, the semigroup homomorphism, and the inverse chain.
pub fn criterion_06_chain_identities(seed: u64) -> Result<Check> {
    let mut check = Check::pass("06-chain-identities");
    let dims = [1usize, 2, 3, 1, 2, 3, 2, 3, 2, 2];
    for (i, &dim) in dims.iter().enumerate() {
        let mut rng = rng_from_seed(seed ^ 0x6b ^ ((i as u64) << 16) ^ dim as u64);
        let (a, b) = sample_body_pair(dim, &mut rng)?;
        let label = format!("pair{i}-d{dim}");
        let sub = verify_product_identities(&a, &b, None, CAP)?;
        absorb(&mut check, sub, &label);
        if check.status != Status::Pass {
            return Ok(check);
        }
        for (tag, body) in [("a", &a), ("b", &b)] {
            let sub = verify_inverse_chain(body, None, CAP)?;
            absorb(&mut check, sub, &format!("{label}-{tag}"));
            if check.status != Status::Pass {
                return Ok(check);
            }
        }
    }
    check.note("pairs", dims.len().to_string());
    Ok(check)
}

/// The vertex-cone expansion equals direct enumeration for 10 seeded
/// integer polytopes, and every decomposition piece of seeded pointed
/// cones matches its truncated-series oracle up to functional value 6.
pub fn criterion_07_vertex_cone_expansion(seed: u64) -> Result<Check> {
    let mut check = Check::pass("07-vertex-cone-expansion");
    let dims = [1usize, 2, 3, 2, 3, 2, 3, 2, 3, 2];
    for (i, &dim) in dims.iter().enumerate() {
        let mut rng = rng_from_seed(seed ^ 0x7b ^ ((i as u64) << 16));
        let p = sample_integer_polytope(dim, 8, &mut rng)?;
        let b = brion_convex(&p, seed)?;
        let e = genfun_enumeration_polytope(&p, CAP)?;
        if !genfun_equal(&b, &e, seed ^ (i as u64))? {
            fail(
                &mut check,
                format!("vertex expansion differs from enumeration on polytope {i} (d={dim})"),
            );
            return Ok(check);
        }
        if count_points(&b, seed ^ 0x77 ^ (i as u64))? != BigInt::from(e.poly.len()) {
            fail(&mut check, format!("point count extraction failed on polytope {i}"));
            return Ok(check);
        }
    }
    // decomposition pieces against the truncated-series oracle
    let mut rng = rng_from_seed(seed ^ 0x7c);
    for i in 0..6 {
        let dim = [2usize, 3][i % 2];
        let (cone, xi) = crate::samples::sample_pointed_cone_with_functional(dim, &mut rng)?;
        let cap6 = int(6);
        for (j, piece) in decompose_cone(&cone, seed, PlacingOrder::Given)?.iter().enumerate() {
            let by_series = series_oracle_piece(piece, &xi, &cap6)?;
            let by_points = series_oracle_direct(piece, &xi, &cap6)?;
            if by_series != by_points {
                fail(&mut check, format!("piece {j} of cone {i} fails the series oracle"));
                return Ok(check);
            }
        }
    }
    check.note("polytopes", dims.len().to_string());
    check.note("cones", "6");
    Ok(check)
}

/// The plane sum-of-squares identity: coefficient-wise equality with the
/// covolume form, positive-definite inertia `(n,0,0)`, and the reversed
/// plane inequality with equality exactly for proportional vectors.
pub fn criterion_08_wedge_sos(seed: u64) -> Result<Check> {
    let mut check = Check::pass("08-wedge-sos");
    let mut rng = rng_from_seed(seed ^ 0x805);
    for i in 0..10 {
        let n = i % 5 + 1;
        let fam = sample_wedge_family(n, &mut rng)?;
        let label = format!("family{i}-n{n}");
        let sub = sos_check(&fam)?;
        absorb(&mut check, sub, &label);
        if check.status != Status::Pass {
            return Ok(check);
        }
        for p in 0..10 {
            let h = sample_support_vector(&fam, &mut rng);
            let h2 = if p == 0 {
                // one proportional pair: the equality case
                h.iter().map(|x| x * crate::scalar::frac(7, 2)).collect()
            } else {
                sample_support_vector(&fam, &mut rng)
            };
            let sub = reversed_af_d2(&fam, &h, &h2)?;
            absorb(&mut check, sub, &format!("{label}-pair{p}"));
            if check.status != Status::Pass {
                return Ok(check);
            }
        }
    }
    check.note("families", "10");
    Ok(check)
}

/// First and second reversed inequalities on seeded families, plus the
/// pinned equality 16 = 16 for the homothetic staircase pair.
pub fn criterion_09_reversed_minkowski(seed: u64) -> Result<Check> {
    let mut check = Check::pass("09-reversed-minkowski");
    let fams = coconvex_suite_families(seed)?;
    // every fifth family keeps the runtime modest while still covering
    // both dimensions and all arities
    let mut rng = rng_from_seed(seed ^ 0x909);
    for (label, fam) in fams.iter().step_by(5) {
        let n = fam.nvars();
        let u: Vec<_> = (0..n)
            .map(|_| crate::scalar::frac(rng.random_range(1..=5), rng.random_range(1..=2)))
            .collect();
        let v: Vec<_> = (0..n)
            .map(|_| crate::scalar::frac(rng.random_range(1..=5), rng.random_range(1..=2)))
            .collect();
        let sub = reversed_minkowski_check(fam, &u, &v, Some(label))?;
        absorb(&mut check, sub, label);
        if check.status != Status::Pass {
            return Ok(check);
        }
    }
    // the homothetic staircase pair achieves equality 16 = 16
    let fam = LinearFamilyCoconvex::new(
        vec![quadrant_staircase(2)?, quadrant_staircase(4)?],
        vec![],
    )?;
    let sub = reversed_minkowski_check(&fam, &[int(1), int(0)], &[int(0), int(1)], None)?;
    let lhs = sub.details.iter().find(|(k, _)| k == "first_lhs").cloned();
    let rhs = sub.details.iter().find(|(k, _)| k == "first_rhs").cloned();
    absorb(&mut check, sub, "staircase-equality");
    if check.status == Status::Pass {
        match (&lhs, &rhs) {
            (Some((_, l)), Some((_, r))) if l == "16" && r == "16" => {
                check.note("staircase_equality", "16 = 16");
            }
            _ => fail(
                &mut check,
                format!("staircase equality must be 16 = 16, got {lhs:?} vs {rhs:?}"),
            ),
        }
    }
    Ok(check)
}

/// `MV(C_t, Delta_t, ...) = MV(C_t, C_t, ...)` for 10 seeded bodies.
pub fn criterion_10_cone_orthogonality(seed: u64) -> Result<Check> {
    let mut check = Check::pass("10-cone-orthogonality");
    for i in 0..5 {
        let mut rng = rng_from_seed(seed ^ 0xa0 ^ ((i as u64) << 8));
        let (a, _) = sample_body_pair(2, &mut rng)?;
        let sub = cone_orthogonality_check(&a, &[])?;
        absorb(&mut check, sub, &format!("d2-{i}"));
        if check.status != Status::Pass {
            return Ok(check);
        }
    }
    for i in 0..5 {
        let mut rng = rng_from_seed(seed ^ 0xa3 ^ ((i as u64) << 8));
        let (a, partner) = sample_body_pair(3, &mut rng)?;
        let sub = cone_orthogonality_check(&a, &[partner])?;
        absorb(&mut check, sub, &format!("d3-{i}"));
        if check.status != Status::Pass {
            return Ok(check);
        }
    }
    check.note("bodies", "10");
    Ok(check)
}

type CriterionFn = fn(u64) -> Result<Check>;

pub const CRITERIA: [(&str, CriterionFn); 10] = [
    ("01-quadrant-staircase", criterion_01_staircase),
    ("02-toy-1d", criterion_02_toy_1d),
    ("03-coconvex-af-suite", criterion_03_coconvex_af),
    ("04-convex-af-signature", criterion_04_convex_af),
    ("05-truncation-identities", criterion_05_truncation_identities),
    ("06-chain-identities", criterion_06_chain_identities),
    ("07-vertex-cone-expansion", criterion_07_vertex_cone_expansion),
    ("08-wedge-sos", criterion_08_wedge_sos),
    ("09-reversed-minkowski", criterion_09_reversed_minkowski),
    ("10-cone-orthogonality", criterion_10_cone_orthogonality),
];

/// Runs every acceptance criterion with the given seed.
pub fn run_all(seed: u64) -> Result<Report> {
    let mut report = Report::new();
    for (_, f) in CRITERIA {
        report.push(f(seed)?);
    }
    Ok(report)
}

use rand::Rng as _;

#[cfg(test)]
mod tests {
    use super::*;

    // the full suite runs as the dedicated integration test target; here a
    // single cheap criterion guards the module wiring
    #[test]
    fn staircase_criterion_passes() {
        let c = criterion_01_staircase(7).unwrap();
        assert_eq!(c.status, Status::Pass, "{:?}", c.details);
    }
}
