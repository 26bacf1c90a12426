//! Volume polynomials of linear families, mixed volumes by polarization,
//! the Aleksandrov-Fenchel bilinear forms with exact inertia, and the
//! verification suite: nonnegativity of the coconvex form, the convex
//! signature, reversed Minkowski/Brunn-Minkowski inequalities, the joint
//! truncation identities relating convex and coconvex volume polynomials,
//! and the cone-orthogonality identity.
//!
//! Normalization: `B(u1,u2) = (1/d!) L_{u1} L_{u2} L_{v1} ... L_{v_{d-2}} Vol`,
//! so the diagonal of `B` equals the volume (`B(u,u) = Vol(u)` when all
//! marked points equal `u`). Under this convention the polarized mixed
//! volume satisfies `MV(P,...,P) = Vol(P)` and e.g. `MV([0,e1],[0,e2]) = 1/2`
//! in the plane; the multinomial-expansion convention found elsewhere in the
//! literature differs from this one by binomial factors.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::body::{combine, CoconvexBody};
use crate::error::{Error, Result};
use crate::geom::{minkowski_sum, volume, Polytope};
use crate::linalg;
use crate::poly::{interpolate_homogeneous, MPoly};
use crate::report::{Check, Status};
use crate::scalar::{format_rational, int, Scalar};

/// `f(lambda) = lambda_1 P_1 + ... + lambda_n P_n` with `d-2` marked
/// coefficient vectors.
#[derive(Clone, Debug)]
pub struct LinearFamilyConvex {
    pub basis: Vec<Polytope>,
    pub marked: Vec<Vec<Scalar>>,
}

/// `g(lambda) = lambda_1 A_1 ⊕ ... ⊕ lambda_n A_n` over a shared cone.
#[derive(Clone, Debug)]
pub struct LinearFamilyCoconvex {
    pub bodies: Vec<CoconvexBody>,
    pub marked: Vec<Vec<Scalar>>,
}

fn check_marked(marked: &[Vec<Scalar>], n: usize) -> Result<()> {
    for v in marked {
        if v.len() != n {
            return Err(Error::Contract("marked point has wrong arity".into()));
        }
        if v.iter().any(|c| !c.is_positive()) {
            return Err(Error::Contract("marked points must be strictly positive".into()));
        }
    }
    Ok(())
}

impl LinearFamilyConvex {
    pub fn new(basis: Vec<Polytope>, marked: Vec<Vec<Scalar>>) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::Contract("family needs at least one body".into()));
        }
        let d = basis[0].dim();
        if basis.iter().any(|p| p.dim() != d) {
            return Err(Error::Contract("family bodies must share a dimension".into()));
        }
        check_marked(&marked, basis.len())?;
        Ok(LinearFamilyConvex { basis, marked })
    }

    pub fn dim(&self) -> usize {
        self.basis[0].dim()
    }

    pub fn nvars(&self) -> usize {
        self.basis.len()
    }

    /// `lambda_1 P_1 + ... + lambda_n P_n` for positive coefficients.
    pub fn member(&self, lambda: &[Scalar]) -> Result<Polytope> {
        if lambda.len() != self.basis.len() {
            return Err(Error::Contract("coefficient arity mismatch".into()));
        }
        let mut acc = self.basis[0].dilate(&lambda[0]);
        for (p, l) in self.basis.iter().zip(lambda).skip(1) {
            acc = minkowski_sum(&acc, &p.dilate(l))?;
        }
        Ok(acc)
    }
}

impl LinearFamilyCoconvex {
    pub fn new(bodies: Vec<CoconvexBody>, marked: Vec<Vec<Scalar>>) -> Result<Self> {
        if bodies.is_empty() {
            return Err(Error::Contract("family needs at least one body".into()));
        }
        let c = bodies[0].cone().clone();
        let xi = bodies[0].xi().to_vec();
        for b in &bodies {
            if b.cone() != &c || b.xi() != xi.as_slice() {
                return Err(Error::Contract(
                    "family bodies must share the cone and functional".into(),
                ));
            }
        }
        check_marked(&marked, bodies.len())?;
        Ok(LinearFamilyCoconvex { bodies, marked })
    }

    pub fn dim(&self) -> usize {
        self.bodies[0].dim()
    }

    pub fn nvars(&self) -> usize {
        self.bodies.len()
    }

    pub fn member(&self, lambda: &[Scalar]) -> Result<CoconvexBody> {
        combine(&self.bodies, lambda)
    }
}

/// Exact volume polynomial of a convex family, homogeneous of degree d.
pub fn volume_polynomial_convex(fam: &LinearFamilyConvex) -> Result<MPoly> {
    let d = fam.dim() as u32;
    interpolate_homogeneous(fam.nvars(), d, |lambda| Ok(volume(&fam.member(lambda)?)))
}

/// Exact covolume polynomial of a coconvex family, homogeneous of degree d.
pub fn volume_polynomial_coconvex(fam: &LinearFamilyCoconvex) -> Result<MPoly> {
    let d = fam.dim() as u32;
    interpolate_homogeneous(fam.nvars(), d, |lambda| fam.member(lambda)?.covolume())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Convex,
    Coconvex,
}

/// The Aleksandrov-Fenchel symmetric bilinear form of a family, as an
/// exact matrix over the coefficient space.
#[derive(Clone, Debug)]
pub struct AfForm {
    pub matrix: Vec<Vec<Scalar>>,
    pub provenance: Provenance,
    pub marked: Vec<Vec<Scalar>>,
}

/// Signature data of a quadratic form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl AfForm {
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let n = self.size();
        assert!(u.len() == n && v.len() == n);
        let mut acc = Scalar::zero();
        for i in 0..n {
            for j in 0..n {
                acc += &u[i] * &self.matrix[i][j] * &v[j];
            }
        }
        acc
    }

    pub fn quad(&self, u: &[Scalar]) -> Scalar {
        self.apply(u, u)
    }

    /// Exact inertia by rational congruence diagonalization.
    pub fn inertia(&self) -> Inertia {
        let (positive, negative, zero) = linalg::inertia(&self.matrix);
        Inertia { positive, negative, zero }
    }
}

fn factorial(d: usize) -> Scalar {
    let mut f = BigInt::one();
    for k in 2..=d {
        f *= BigInt::from(k as i64);
    }
    Scalar::from(f)
}

/// `B_ij = (1/d!) d^2/dl_i dl_j ( L_{v_1} ... L_{v_{d-2}} Vol )`.
pub fn af_from_volume(
    vol: &MPoly,
    marked: &[Vec<Scalar>],
    d: usize,
    provenance: Provenance,
) -> Result<AfForm> {
    if d < 2 {
        return Err(Error::Contract("the bilinear form needs dimension >= 2".into()));
    }
    if marked.len() != d - 2 {
        return Err(Error::Contract(format!(
            "expected {} marked points, got {}",
            d - 2,
            marked.len()
        )));
    }
    let n = vol.nvars();
    check_marked(marked, n)?;
    let mut q = vol.clone();
    for v in marked {
        q = q.directional_derivative(v);
    }
    let scale = Scalar::one() / factorial(d);
    let mut matrix = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        let qi = q.partial(i);
        for j in 0..n {
            matrix[i][j] = qi.partial(j).coeff(&vec![0; n]) * &scale;
        }
    }
    for i in 0..n {
        for j in 0..i {
            debug_assert_eq!(matrix[i][j], matrix[j][i]);
        }
    }
    Ok(AfForm { matrix, provenance, marked: marked.to_vec() })
}

pub fn af_form_convex(fam: &LinearFamilyConvex) -> Result<AfForm> {
    let vol = volume_polynomial_convex(fam)?;
    af_from_volume(&vol, &fam.marked, fam.dim(), Provenance::Convex)
}

pub fn af_form_coconvex(fam: &LinearFamilyCoconvex) -> Result<AfForm> {
    let vol = volume_polynomial_coconvex(fam)?;
    af_from_volume(&vol, &fam.marked, fam.dim(), Provenance::Coconvex)
}

/// Mixed volume of `d` polytopes in dimension `d` by polarization:
/// `(1/d!) sum over nonempty S of (-1)^{d-|S|} Vol(sum_{i in S} P_i)`.
pub fn mixed_volume(bodies: &[Polytope]) -> Result<Scalar> {
    if bodies.is_empty() {
        return Err(Error::Contract("mixed volume of an empty tuple".into()));
    }
    let d = bodies[0].dim();
    if bodies.len() != d {
        return Err(Error::Contract(format!(
            "mixed volume needs exactly {d} bodies in dimension {d}"
        )));
    }
    if bodies.iter().any(|p| p.dim() != d) {
        return Err(Error::Contract("mixed volume dimension mismatch".into()));
    }
    let mut acc = Scalar::zero();
    for mask in 1u32..(1 << d) {
        let members: Vec<&Polytope> = (0..d).filter(|i| mask & (1 << i) != 0).map(|i| &bodies[i]).collect();
        let mut sum = members[0].clone();
        for p in &members[1..] {
            sum = minkowski_sum(&sum, p)?;
        }
        let v = volume(&sum);
        if (d - members.len()) % 2 == 0 {
            acc += v;
        } else {
            acc -= v;
        }
    }
    Ok(acc / factorial(d))
}

fn random_rational_vector(rng: &mut ChaCha8Rng, n: usize, positive: bool) -> Vec<Scalar> {
    (0..n)
        .map(|_| {
            let num = if positive {
                rng.random_range(1..=9)
            } else {
                // avoid the zero vector bias but zero entries are fine
                rng.random_range(-9..=9)
            };
            crate::scalar::frac(num, rng.random_range(1..=4))
        })
        .collect()
}

/// Nonnegativity of the coconvex form: inertia has no negative part, and
/// the Cauchy-Schwarz inequality holds on seeded random rational pairs.
pub fn coconvex_af_check(fam: &LinearFamilyCoconvex, seed: u64, pairs: usize) -> Result<Check> {
    let af = af_form_coconvex(fam)?;
    let inertia = af.inertia();
    let mut check = Check::pass("coconvex-af");
    check.note(
        "inertia",
        format!("({},{},{})", inertia.positive, inertia.negative, inertia.zero),
    );
    if inertia.negative != 0 {
        check.status = Status::Fail;
        check.note("reason", "negative inertia in the coconvex form");
        return Ok(check);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..pairs {
        let u1 = random_rational_vector(&mut rng, af.size(), false);
        let u2 = random_rational_vector(&mut rng, af.size(), false);
        let b12 = af.apply(&u1, &u2);
        let lhs = &b12 * &b12;
        let rhs = af.quad(&u1) * af.quad(&u2);
        if lhs > rhs {
            check.status = Status::Fail;
            check.note("reason", "Cauchy-Schwarz violated");
            check.note(
                "witness",
                format!(
                    "pair {k}: u1={:?} u2={:?}",
                    u1.iter().map(format_rational).collect::<Vec<_>>(),
                    u2.iter().map(format_rational).collect::<Vec<_>>()
                ),
            );
            return Ok(check);
        }
    }
    check.note("cauchy_schwarz_pairs", pairs.to_string());
    Ok(check)
}

/// Signature of the convex form: exactly one positive square.
pub fn convex_af_check(fam: &LinearFamilyConvex) -> Result<Check> {
    if !fam.basis.iter().any(|p| p.is_full_dimensional()) {
        return Err(Error::Contract(
            "the convex signature check needs a full-dimensional body in the family".into(),
        ));
    }
    let af = af_form_convex(fam)?;
    let inertia = af.inertia();
    let mut check = Check::pass("convex-af-signature");
    check.note(
        "inertia",
        format!("({},{},{})", inertia.positive, inertia.negative, inertia.zero),
    );
    if inertia.positive != 1 {
        check.status = Status::Fail;
        check.note("reason", "expected exactly one positive square");
    }
    Ok(check)
}

// --- exact d-th roots and certified brackets -------------------------------

fn nth_root_floor(x: &BigInt, n: u32) -> BigInt {
    debug_assert!(!x.is_negative());
    num_integer::Roots::nth_root(x, n)
}

/// `q^(1/n)` when it is rational (numerator and denominator both perfect
/// n-th powers of the reduced form).
pub fn exact_nth_root(q: &Scalar, n: u32) -> Option<Scalar> {
    if q.is_negative() {
        return None;
    }
    let rn = nth_root_floor(q.numer(), n);
    let rd = nth_root_floor(q.denom(), n);
    if num_traits::pow(rn.clone(), n as usize) == *q.numer()
        && num_traits::pow(rd.clone(), n as usize) == *q.denom()
    {
        Some(Scalar::new(rn, rd))
    } else {
        None
    }
}

/// Bracket `lo <= q^(1/n) <= hi` with `hi - lo = 2^-bits`, by exact integer
/// comparisons.
pub fn nth_root_bracket(q: &Scalar, n: u32, bits: u32) -> (Scalar, Scalar) {
    debug_assert!(!q.is_negative());
    let two_pow = BigInt::one() << bits;
    let target_num = q.numer() * num_traits::pow(two_pow.clone(), n as usize);
    let mut x = nth_root_floor(&(&target_num / q.denom()), n);
    let le = |x: &BigInt| num_traits::pow(x.clone(), n as usize) * q.denom() <= target_num;
    while !le(&x) {
        x -= 1;
    }
    while le(&(&x + 1)) {
        x += 1;
    }
    (
        Scalar::new(x.clone(), two_pow.clone()),
        Scalar::new(x + 1, two_pow),
    )
}

const ROOT_PRECISION_CAP: u32 = 256;

/// Decides `a^(1/d) <= t b^(1/d) + (1-t) c^(1/d)` for positive rational
/// inputs. Symbolic when `b/c` is a rational d-th power (which covers every
/// homothetic equality case); certified interval refinement otherwise;
/// `None` when the precision cap is reached undecided.
fn root_combination_le(
    a: &Scalar,
    b: &Scalar,
    c: &Scalar,
    t: &Scalar,
    d: u32,
) -> Option<bool> {
    let s = Scalar::one() - t;
    if d == 1 {
        return Some(*a <= t * b + s * c);
    }
    if let Some(mu) = exact_nth_root(&(b / c), d) {
        // rhs = (t mu + 1 - t) c^(1/d); compare d-th powers exactly
        let k = t * mu + s;
        return Some(a <= &(num_traits::pow(k, d as usize) * c));
    }
    let mut bits = 64;
    while bits <= ROOT_PRECISION_CAP {
        let (la, ha) = nth_root_bracket(a, d, bits);
        let (lb, hb) = nth_root_bracket(b, d, bits);
        let (lc, hc) = nth_root_bracket(c, d, bits);
        if ha <= t * &lb + &s * lc {
            return Some(true);
        }
        if la > t * &hb + &s * hc {
            return Some(false);
        }
        bits *= 2;
    }
    None
}

/// The reversed-inequality suite for a coconvex family: first and second
/// reversed Minkowski as exact rational inequalities, and the reversed
/// Brunn-Minkowski (convexity of the d-th root of the covolume polynomial)
/// at t in {1/4, 1/2, 3/4} with certified root comparisons.
pub fn reversed_minkowski_check(
    fam: &LinearFamilyCoconvex,
    u: &[Scalar],
    v: &[Scalar],
    seed_note: Option<&str>,
) -> Result<Check> {
    let d = fam.dim();
    let n = fam.nvars();
    if u.len() != n || v.len() != n {
        return Err(Error::Contract("coefficient arity mismatch".into()));
    }
    // nonnegative nonzero suffices: the polynomial inequalities extend to
    // the closed coefficient orthant by continuity
    for w in [u, v] {
        if w.iter().any(Signed::is_negative) || w.iter().all(|c| c.is_zero()) {
            return Err(Error::Contract(
                "coefficient vectors must be nonnegative and nonzero".into(),
            ));
        }
    }
    let vol = volume_polynomial_coconvex(fam)?;
    let vol_u = vol.eval(u);
    let vol_v = vol.eval(v);
    let mut check = Check::pass("reversed-minkowski");
    if let Some(s) = seed_note {
        check.note("family", s);
    }

    // first reversed inequality: ((1/d!) L_u L_v^{d-1} Vol)^d <= Vol(u) Vol(v)^{d-1}
    let mut q = vol.clone();
    for _ in 0..d - 1 {
        q = q.directional_derivative(v);
    }
    q = q.directional_derivative(u);
    let m = q.coeff(&vec![0; n]) / factorial(d);
    let lhs1 = num_traits::pow(m.clone(), d);
    let rhs1 = &vol_u * num_traits::pow(vol_v.clone(), d - 1);
    check.note("first_lhs", format_rational(&lhs1));
    check.note("first_rhs", format_rational(&rhs1));
    if lhs1 > rhs1 {
        check.status = Status::Fail;
        check.note("reason", "first reversed inequality violated");
        return Ok(check);
    }

    // second reversed inequality with all marked points at u:
    // B(u,v)^2 <= Vol(u) B(v,v)
    if d >= 2 {
        let marked_u: Vec<Vec<Scalar>> = vec![u.to_vec(); d - 2];
        let af = af_from_volume(&vol, &marked_u, d, Provenance::Coconvex)?;
        let buv = af.apply(u, v);
        let lhs2 = &buv * &buv;
        let rhs2 = &vol_u * af.quad(v);
        if lhs2 > rhs2 {
            check.status = Status::Fail;
            check.note("reason", "second reversed inequality violated");
            check.note("second_lhs", format_rational(&lhs2));
            check.note("second_rhs", format_rational(&rhs2));
            return Ok(check);
        }
    }

    // reversed Brunn-Minkowski: the d-th root of the covolume is convex
    for (tn, td) in [(1i64, 4i64), (1, 2), (3, 4)] {
        let t = crate::scalar::frac(tn, td);
        let mid: Vec<Scalar> = u
            .iter()
            .zip(v)
            .map(|(x, y)| &t * x + (Scalar::one() - &t) * y)
            .collect();
        let a = vol.eval(&mid);
        match root_combination_le(&a, &vol_u, &vol_v, &t, d as u32) {
            Some(true) => {}
            Some(false) => {
                check.status = Status::Fail;
                check.note("reason", format!("reversed Brunn-Minkowski violated at t={tn}/{td}"));
                return Ok(check);
            }
            None => {
                check.status = Status::Inconclusive;
                check.note(
                    "reason",
                    format!("root comparison undecided after {ROOT_PRECISION_CAP} bits at t={tn}/{td}"),
                );
                return Ok(check);
            }
        }
    }
    Ok(check)
}

/// The joint truncation identities tying the convex and coconvex volume
/// polynomials of a family.
///
/// With the auxiliary convex family over `(lambda, s)` whose member is the
/// truncated complement at level `T0 s`, the identities checked
/// coefficient-wise are `Vol_conv(lambda, s) = c (T0 s)^d - Vol_coco(lambda)`
/// and the same relation two derivative levels down,
/// `Q_conv(lambda, s) = c' s^2 - Q_coco(lambda)`, with `c, c' > 0`.
pub fn truncation_volume_identities(fam: &LinearFamilyCoconvex) -> Result<Check> {
    let d = fam.dim();
    let n = fam.nvars();
    if fam.marked.len() != d.saturating_sub(2) {
        return Err(Error::Contract(format!(
            "expected {} marked points, got {}",
            d - 2,
            fam.marked.len()
        )));
    }
    let vol_coco = volume_polynomial_coconvex(fam)?;

    // slice level bound: sum(lambda_i) * max tstar certifies containment
    // for every grid coefficient vector (entries at most d+3)
    let max_tstar = fam
        .bodies
        .iter()
        .map(|b| b.tstar().clone())
        .max()
        .expect("nonempty family");
    let t0 = max_tstar * int((n * (d + 3)) as i64);
    let cone = fam.bodies[0].cone().clone();
    let xi = fam.bodies[0].xi().to_vec();
    let k = volume(&cone.truncated(&xi, &t0)?);
    if !k.is_positive() {
        return Err(Error::Invariant("truncated cone with nonpositive volume".into()));
    }

    // interpolate Vol_conv on (lambda, s)
    let vol_conv = interpolate_homogeneous(n + 1, d as u32, |at| {
        let (lambda, s) = at.split_at(n);
        let t = &t0 * &s[0];
        let body = combine(&fam.bodies, lambda)?;
        let delta_t = body.delta().truncated(&xi, &t)?;
        Ok(volume(&delta_t))
    })?;

    // identity (volume level): Vol_conv + Vol_cocoembed - k s^d = 0
    let mut s_term = vec![0u32; n + 1];
    s_term[n] = d as u32;
    let k_poly = MPoly::from_terms(n + 1, vec![(s_term, k.clone())]);
    let resid_v = vol_conv.add(&vol_coco.embed_with_extra_var()).sub(&k_poly);

    // identity (quadratic level), marked points (v_i, 1)
    let two_over_dfac = int(2) / factorial(d);
    let mut q_conv = vol_conv.clone();
    let mut q_coco = vol_coco.clone();
    for v in &fam.marked {
        let mut va: Vec<Scalar> = v.clone();
        va.push(Scalar::one());
        q_conv = q_conv.directional_derivative(&va);
        q_coco = q_coco.directional_derivative(v);
    }
    q_conv = q_conv.scale(&two_over_dfac);
    q_coco = q_coco.scale(&two_over_dfac);
    let mut s2 = vec![0u32; n + 1];
    s2[n] = 2;
    let cprime_poly = MPoly::from_terms(n + 1, vec![(s2, k.clone())]);
    let resid_q = q_conv.add(&q_coco.embed_with_extra_var()).sub(&cprime_poly);

    let mut check = Check::pass("truncation-identities");
    check.note("c", format_rational(&(&k / num_traits::pow(t0.clone(), d))));
    check.note("c_prime", format_rational(&k));
    if !resid_v.is_zero() {
        check.status = Status::Fail;
        check.note("reason", "volume-level identity residual nonzero");
        check.note("residual", resid_v.display("x"));
    } else if !resid_q.is_zero() {
        check.status = Status::Fail;
        check.note("reason", "quadratic-level identity residual nonzero");
        check.note("residual", resid_q.display("x"));
    }
    Ok(check)
}

/// The orthogonality identity: with every complement inside `{xi < t0}`,
/// `MV(C_t0, Delta_t0, X...) - MV(C_t0, C_t0, X...) = 0` exactly, where the
/// `X` are `d-2` truncated convex partners over the same cone.
pub fn cone_orthogonality_check(
    a: &CoconvexBody,
    partners: &[CoconvexBody],
) -> Result<Check> {
    let d = a.dim();
    if partners.len() != d.saturating_sub(2) {
        return Err(Error::Contract(format!(
            "need {} convex partners in dimension {d}",
            d - 2
        )));
    }
    for p in partners {
        if p.cone() != a.cone() || p.xi() != a.xi() {
            return Err(Error::Contract(
                "partners must share the cone and functional".into(),
            ));
        }
    }
    let mut t0 = a.tstar().clone();
    for p in partners {
        if p.tstar() > &t0 {
            t0 = p.tstar().clone();
        }
    }
    t0 = t0 * int(2);
    let xi = a.xi().to_vec();
    let ct = a.cone().truncated(&xi, &t0)?;
    let dt = a.delta().truncated(&xi, &t0)?;
    let mut with_delta = vec![ct.clone(), dt];
    let mut with_cone = vec![ct.clone(), ct];
    for p in partners {
        let pd = p.delta().truncated(&xi, &t0)?;
        with_delta.push(pd.clone());
        with_cone.push(pd);
    }
    let mv1 = mixed_volume(&with_delta)?;
    let mv2 = mixed_volume(&with_cone)?;
    let mut check = Check::pass("cone-orthogonality");
    check.note("mv_with_delta", format_rational(&mv1));
    check.note("mv_with_cone", format_rational(&mv2));
    if mv1 != mv2 {
        check.status = Status::Fail;
        check.note("reason", "orthogonality defect nonzero");
        check.note("defect", format_rational(&(mv1 - mv2)));
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::make_body;
    use crate::geom::{convex_hull, Point};
    use crate::scalar::frac;

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

    fn hull(dim: usize, cs: &[&[i64]]) -> Polytope {
        convex_hull(dim, &pts(cs)).unwrap()
    }

    #[test]
    fn convex_volume_polynomials() {
        // n=1 cube: lambda^d
        let fam = LinearFamilyConvex::new(
            vec![hull(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])],
            vec![],
        )
        .unwrap();
        let p = volume_polynomial_convex(&fam).unwrap();
        assert_eq!(p, MPoly::from_terms(1, vec![(vec![2], int(1))]));

        // two segments: lambda1 lambda2
        let fam = LinearFamilyConvex::new(
            vec![hull(2, &[&[0, 0], &[1, 0]]), hull(2, &[&[0, 0], &[0, 1]])],
            vec![],
        )
        .unwrap();
        let p = volume_polynomial_convex(&fam).unwrap();
        assert_eq!(p, MPoly::from_terms(2, vec![(vec![1, 1], int(1))]));

        // homothetic triangles: (l1+l2)^2 * area
        let t = hull(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let fam = LinearFamilyConvex::new(vec![t.clone(), t], vec![]).unwrap();
        let p = volume_polynomial_convex(&fam).unwrap();
        assert_eq!(
            p,
            MPoly::from_terms(
                2,
                vec![
                    (vec![2, 0], frac(1, 2)),
                    (vec![1, 1], int(1)),
                    (vec![0, 2], frac(1, 2))
                ]
            )
        );
    }

    #[test]
    fn coconvex_volume_polynomial_staircases() {
        let fam = LinearFamilyCoconvex::new(vec![staircase(2), staircase(4)], vec![]).unwrap();
        let p = volume_polynomial_coconvex(&fam).unwrap();
        // (2 l1 + 4 l2)^2 / 2
        assert_eq!(
            p,
            MPoly::from_terms(
                2,
                vec![
                    (vec![2, 0], int(2)),
                    (vec![1, 1], int(8)),
                    (vec![0, 2], int(8))
                ]
            )
        );
    }

    #[test]
    fn coconvex_volume_polynomial_1d_and_3d() {
        let b = make_body(&pts(&[&[1]]), &pts(&[&[3]]), &[int(1)]).unwrap();
        let fam = LinearFamilyCoconvex::new(vec![b], vec![]).unwrap();
        assert_eq!(
            volume_polynomial_coconvex(&fam).unwrap(),
            MPoly::from_terms(1, vec![(vec![1], int(3))])
        );
        let o = make_body(
            &pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            &pts(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]),
            &[int(1), int(1), int(1)],
        )
        .unwrap();
        let fam = LinearFamilyCoconvex::new(vec![o], vec![vec![int(1)]]).unwrap();
        assert_eq!(
            volume_polynomial_coconvex(&fam).unwrap(),
            MPoly::from_terms(1, vec![(vec![3], frac(9, 2))])
        );
    }

    #[test]
    fn af_matrices() {
        // staircase family: Hessian/2 of 2l1^2+8l1l2+8l2^2
        let fam = LinearFamilyCoconvex::new(vec![staircase(2), staircase(4)], vec![]).unwrap();
        let af = af_form_coconvex(&fam).unwrap();
        assert_eq!(af.matrix[0], vec![int(2), int(4)]);
        assert_eq!(af.matrix[1], vec![int(4), int(8)]);
        let i = af.inertia();
        assert_eq!((i.positive, i.negative, i.zero), (1, 0, 1));

        // segments family: [[0,1/2],[1/2,0]]
        let fam = LinearFamilyConvex::new(
            vec![
                hull(2, &[&[0, 0], &[1, 0]]),
                hull(2, &[&[0, 0], &[0, 1]]),
            ],
            vec![],
        )
        .unwrap();
        let af = af_form_convex(&fam).unwrap();
        assert_eq!(af.matrix[0], vec![int(0), frac(1, 2)]);
        assert_eq!(af.matrix[1], vec![frac(1, 2), int(0)]);
    }

    #[test]
    fn mixed_volume_normalization() {
        let square = hull(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(mixed_volume(&[square.clone(), square.clone()]).unwrap(), int(1));
        let e1 = hull(2, &[&[0, 0], &[1, 0]]);
        let e2 = hull(2, &[&[0, 0], &[0, 1]]);
        assert_eq!(mixed_volume(&[e1, e2]).unwrap(), frac(1, 2));
        let t = hull(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(mixed_volume(&[t.clone(), t.clone()]).unwrap(), volume(&t));
    }

    #[test]
    fn af_entries_match_polarization() {
        // convex family with a marked point: entries equal mixed volumes of
        // the corresponding weighted bodies
        let p1 = hull(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let p2 = hull(
            3,
            &[
                &[0, 0, 0],
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 1, 1],
                &[1, 1, 1],
            ],
        );
        let marked = vec![vec![int(1), int(2)]];
        let fam = LinearFamilyConvex::new(vec![p1.clone(), p2.clone()], marked.clone()).unwrap();
        let af = af_form_convex(&fam).unwrap();
        let w = minkowski_sum(&p1.dilate(&int(1)), &p2.dilate(&int(2))).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let tuple = vec![fam.basis[i].clone(), fam.basis[j].clone(), w.clone()];
                assert_eq!(af.matrix[i][j], mixed_volume(&tuple).unwrap(), "entry {i}{j}");
            }
        }
    }

    #[test]
    fn diagonal_consistency() {
        let fam = LinearFamilyCoconvex::new(vec![staircase(2), staircase(4)], vec![]).unwrap();
        let vol = volume_polynomial_coconvex(&fam).unwrap();
        let e1 = [int(1), int(0)];
        assert_eq!(vol.eval(&e1), fam.bodies[0].covolume().unwrap());
        let af = af_form_coconvex(&fam).unwrap();
        assert_eq!(af.quad(&e1), vol.eval(&e1));
    }

    #[test]
    fn theorem_checks_on_staircases() {
        let fam = LinearFamilyCoconvex::new(vec![staircase(2), staircase(4)], vec![]).unwrap();
        let c = coconvex_af_check(&fam, 11, 10).unwrap();
        assert_eq!(c.status, Status::Pass);

        let fam1 = LinearFamilyCoconvex::new(vec![staircase(3)], vec![]).unwrap();
        let c1 = coconvex_af_check(&fam1, 11, 5).unwrap();
        assert_eq!(c1.status, Status::Pass);

        let conv = LinearFamilyConvex::new(
            vec![
                hull(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]),
                hull(2, &[&[0, 0], &[1, 0]]),
            ],
            vec![],
        )
        .unwrap();
        let c2 = convex_af_check(&conv).unwrap();
        assert_eq!(c2.status, Status::Pass);
    }

    #[test]
    fn first_reversed_minkowski_equality_on_homothetic_pair() {
        let fam = LinearFamilyCoconvex::new(vec![staircase(2), staircase(4)], vec![]).unwrap();
        let u = [int(1), int(0)];
        let v = [int(0), int(1)];
        let c = reversed_minkowski_check(&fam, &u, &v, None).unwrap();
        assert_eq!(c.status, Status::Pass, "{:?}", c.details);
        // the homothetic pair achieves equality 16 = 16
        let lhs = c.details.iter().find(|(k, _)| k == "first_lhs").unwrap();
        let rhs = c.details.iter().find(|(k, _)| k == "first_rhs").unwrap();
        assert_eq!(lhs.1, "16");
        assert_eq!(rhs.1, "16");
    }

    #[test]
    fn reversed_suite_on_equal_vectors() {
        let fam = LinearFamilyCoconvex::new(vec![staircase(2), staircase(3)], vec![]).unwrap();
        let u = [frac(3, 2), int(1)];
        let c = reversed_minkowski_check(&fam, &u, &u, None).unwrap();
        assert_eq!(c.status, Status::Pass);
    }

    #[test]
    fn truncation_identities_on_staircases() {
        let fam = LinearFamilyCoconvex::new(vec![staircase(2), staircase(4)], vec![]).unwrap();
        let c = truncation_volume_identities(&fam).unwrap();
        assert_eq!(c.status, Status::Pass, "{:?}", c.details);
    }

    #[test]
    fn cone_orthogonality_d2_and_degenerate() {
        let a = staircase(2);
        let c = cone_orthogonality_check(&a, &[]).unwrap();
        assert_eq!(c.status, Status::Pass, "{:?}", c.details);
        // both mixed volumes equal vol(C_t) = 8 at t = 4
        assert!(c.details.iter().any(|(k, v)| k == "mv_with_delta" && v == "8"));
    }

    #[test]
    fn root_helpers() {
        assert_eq!(exact_nth_root(&frac(8, 27), 3), Some(frac(2, 3)));
        assert_eq!(exact_nth_root(&int(2), 2), None);
        let (lo, hi) = nth_root_bracket(&int(2), 2, 64);
        assert!(lo.clone() * lo.clone() <= int(2));
        assert!(hi.clone() * hi.clone() > int(2));
        assert!((hi - lo) == Scalar::new(BigInt::one(), BigInt::one() << 64));
    }
}
