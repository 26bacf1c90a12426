//! The algebra of convex chains: integer combinations of polytope
//! indicator functions, evaluated pointwise.
//!
//! Chains carry no canonical form; equality is decided pointwise on
//! explicit finite grids (default step `1/(2 lcm of vertex denominators)`,
//! over the union bounding box enlarged by 1) plus one relative-interior
//! sample per face of every term polytope. A grid verdict of equality is a
//! randomized/exhaustive-sampling check, not a completeness proof; every
//! downstream verifier consumes exactly this notion.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::body::CoconvexBody;
use crate::error::{Error, Result};
use crate::geom::{
    face_polytope, faces, integer_points_in_box, minkowski_sum, polytope_lattice_points,
    Point, Polytope, Sense,
};
use crate::report::{Check, Status};
use crate::scalar::{denominator_lcm, int, Scalar};

/// A finite integer combination of closed convex polytope indicators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexChain {
    dim: usize,
    terms: Vec<(i64, Polytope)>,
}

impl ConvexChain {
    pub fn zero(dim: usize) -> Self {
        ConvexChain { dim, terms: Vec::new() }
    }

    pub fn indicator(p: Polytope) -> Self {
        ConvexChain { dim: p.dim(), terms: vec![(1, p)] }
    }

    /// The identity element `1_{{0}}`.
    pub fn origin(dim: usize) -> Self {
        let p = crate::geom::convex_hull(dim, &[Point::zero(dim)]).expect("origin polytope");
        ConvexChain::indicator(p)
    }

    pub fn from_terms(dim: usize, terms: Vec<(i64, Polytope)>) -> Result<Self> {
        for (_, p) in &terms {
            if p.dim() != dim {
                return Err(Error::Contract("chain term dimension mismatch".into()));
            }
        }
        let mut out = ConvexChain::zero(dim);
        for (c, p) in terms {
            out.push_term(c, p);
        }
        Ok(out)
    }

    /// Polytopes are canonical values, so identical terms merge and zero
    /// coefficients drop; the term list stays small under products.
    fn push_term(&mut self, c: i64, p: Polytope) {
        if c == 0 {
            return;
        }
        if let Some(slot) = self.terms.iter_mut().find(|(_, q)| *q == p) {
            slot.0 += c;
            if slot.0 == 0 {
                self.terms.retain(|(k, _)| *k != 0);
            }
            return;
        }
        self.terms.push((c, p));
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[(i64, Polytope)] {
        &self.terms
    }

    /// Exact pointwise value.
    pub fn eval(&self, x: &Point) -> i64 {
        self.terms
            .iter()
            .map(|(c, p)| if p.contains(x) { *c } else { 0 })
            .sum()
    }

    pub fn add(&self, other: &ConvexChain) -> ConvexChain {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (c, p) in &other.terms {
            out.push_term(*c, p.clone());
        }
        out
    }

    pub fn sub(&self, other: &ConvexChain) -> ConvexChain {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> ConvexChain {
        if k == 0 {
            return ConvexChain::zero(self.dim);
        }
        ConvexChain {
            dim: self.dim,
            terms: self.terms.iter().map(|(c, p)| (c * k, p.clone())).collect(),
        }
    }

    /// The antipodal image: every term reflected through the origin.
    pub fn antipode(&self) -> ConvexChain {
        ConvexChain {
            dim: self.dim,
            terms: self.terms.iter().map(|(c, p)| (*c, p.antipode())).collect(),
        }
    }

    /// Union bounding box over all term polytopes.
    pub fn bounding_box(&self) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
        let mut it = self.terms.iter();
        let (_, first) = it.next()?;
        let (mut lo, mut hi) = first.bounding_box();
        for (_, p) in it {
            let (l, h) = p.bounding_box();
            for i in 0..self.dim {
                if l[i] < lo[i] {
                    lo[i] = l[i].clone();
                }
                if h[i] > hi[i] {
                    hi[i] = h[i].clone();
                }
            }
        }
        Some((lo, hi))
    }
}

/// Bilinear Minkowski product: `1_P * 1_Q = 1_{P+Q}` extended by linearity.
/// `1_{{0}}` is the identity element.
pub fn mink_product(a: &ConvexChain, b: &ConvexChain) -> Result<ConvexChain> {
    if a.dim != b.dim {
        return Err(Error::Contract("chain product dimension mismatch".into()));
    }
    let mut out = ConvexChain::zero(a.dim);
    for (c, p) in &a.terms {
        for (d, q) in &b.terms {
            out.push_term(c * d, minkowski_sum(p, q)?);
        }
    }
    Ok(out)
}

/// Euler-characteristic convolution of two polytope indicators at a point:
/// 1 iff `A ∩ (x - B)` is nonempty, decided by exact feasibility of the
/// joined linear system. This is the independent oracle for
/// [`mink_product`] on indicator pairs; it never touches hulls.
pub fn chi_convolution_oracle(a: &Polytope, b: &Polytope, x: &Point) -> Result<bool> {
    if a.dim() != b.dim() || x.dim() != a.dim() {
        return Err(Error::Contract("oracle dimension mismatch".into()));
    }
    let dim = a.dim();
    let mut sys: Vec<crate::geom::HalfSpace> = Vec::new();
    let mut push_upper = |normal: Vec<Scalar>, offset: Scalar| {
        sys.push(crate::geom::HalfSpace { normal, offset, sense: Sense::Closed });
    };
    for f in a.facets() {
        push_upper(f.normal.clone(), f.offset.clone());
    }
    for e in a.equations() {
        push_upper(e.normal.clone(), e.offset.clone());
        push_upper(e.normal.iter().map(|v| -v).collect(), -e.offset.clone());
    }
    // y ∈ A and x - y ∈ B: <n, x - y> >= c becomes <-n, y> >= c - <n, x>
    for f in b.facets() {
        let off = &f.offset - x.dot(&f.normal);
        push_upper(f.normal.iter().map(|v| -v).collect(), off);
    }
    for e in b.equations() {
        let off = &e.offset - x.dot(&e.normal);
        push_upper(e.normal.iter().map(|v| -v).collect(), off.clone());
        push_upper(e.normal.clone(), -off);
    }
    crate::geom::feasible(dim, &sys)
}

/// The star operator: `1_P` maps to the signed face sum
/// `sum over faces F of (-1)^{dim F} 1_F`, extended additively. For a
/// full-dimensional `P` the image evaluates to `(-1)^d` on the interior of
/// `P` and 0 elsewhere.
pub fn star(chain: &ConvexChain) -> ConvexChain {
    let mut out = ConvexChain::zero(chain.dim);
    for (c, p) in &chain.terms {
        for f in faces(p) {
            let sign = if f.dim % 2 == 0 { 1 } else { -1 };
            out.push_term(c * sign, face_polytope(p, &f));
        }
    }
    out
}

/// The Minkowski-product inverse of `1_P`: `star(1_P) ∘ antipode`.
pub fn invert_indicator(p: &Polytope) -> ConvexChain {
    star(&ConvexChain::indicator(p.clone())).antipode()
}

/// The chain `1_{Delta_t} - 1_{C_t} + 1_{{0}}` at `t = tstar`; pointwise
/// equal to `-1_A` and independent of the truncation level.
pub fn coconvex_chain(a: &CoconvexBody) -> Result<ConvexChain> {
    coconvex_chain_at(a, a.tstar())
}

pub fn coconvex_chain_at(a: &CoconvexBody, t: &Scalar) -> Result<ConvexChain> {
    let (dt, ct) = a.truncate(t)?;
    Ok(ConvexChain::indicator(dt)
        .sub(&ConvexChain::indicator(ct))
        .add(&ConvexChain::origin(a.dim())))
}

/// The Minkowski inverse of the coconvex chain, expanded into closed
/// polytope indicators: with `A° = int(C) \ int(Delta)` (bounded),
/// the inverse is `(-1)^{d-1} 1_{A°} ∘ σ + 1_{{0}}`, and
/// `1_{A°} = 1_{int C_t} - 1_{int Delta_t}` unfolds through the face sums
/// of the two truncations.
pub fn inverse_chain(a: &CoconvexBody) -> Result<ConvexChain> {
    let t = a.tstar() * int(2);
    let (dt, ct) = a.truncate(&t)?;
    let star_diff = star(&ConvexChain::indicator(dt)).sub(&star(&ConvexChain::indicator(ct)));
    Ok(star_diff.antipode().add(&ConvexChain::origin(a.dim())))
}

/// `sum c_i * #(P_i ∩ Z^d)`.
pub fn counting_valuation(chain: &ConvexChain, cap: u64) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for (c, p) in &chain.terms {
        let n = polytope_lattice_points(p, cap)?.len();
        acc += BigInt::from(*c) * BigInt::from(n);
    }
    Ok(acc)
}

/// A finite evaluation grid `(1/q) Z^d` clipped to a box.
#[derive(Clone, Debug)]
pub struct Grid {
    pub dim: usize,
    pub q: BigInt,
    pub lo: Vec<BigInt>,
    pub hi: Vec<BigInt>,
}

impl Grid {
    /// Default grid for a set of chains: step `1/(2 lcm of all vertex
    /// coordinate denominators)`, box = union bounding box enlarged by 1.
    pub fn default_for(chains: &[&ConvexChain], step_override: Option<&Scalar>) -> Result<Grid> {
        let dim = chains
            .first()
            .map(|c| c.dim())
            .ok_or_else(|| Error::Contract("grid needs at least one chain".into()))?;
        let mut q = BigInt::from(2);
        if let Some(s) = step_override {
            if !s.is_positive() {
                return Err(Error::Contract("grid step must be positive".into()));
            }
            // step 1/q: accept a rational step p/r as q = ceil(r/p)-ish;
            // the natural use is integer q via step 1/q
            q = (s.recip()).ceil().to_integer();
            if q < BigInt::one() {
                q = BigInt::one();
            }
        } else {
            let mut denoms: Vec<Scalar> = Vec::new();
            for ch in chains {
                for (_, p) in ch.terms() {
                    for v in p.vertices() {
                        denoms.extend(v.coords().iter().cloned());
                    }
                }
            }
            if !denoms.is_empty() {
                q = BigInt::from(2) * denominator_lcm(&denoms);
            }
        }
        let mut lo = vec![BigInt::zero(); dim];
        let mut hi = vec![BigInt::zero(); dim];
        let mut any = false;
        for ch in chains {
            if let Some((l, h)) = ch.bounding_box() {
                if !any {
                    lo = l;
                    hi = h;
                    any = true;
                } else {
                    for i in 0..dim {
                        if l[i] < lo[i] {
                            lo[i] = l[i].clone();
                        }
                        if h[i] > hi[i] {
                            hi[i] = h[i].clone();
                        }
                    }
                }
            }
        }
        for i in 0..dim {
            lo[i] -= 1;
            hi[i] += 1;
        }
        Ok(Grid {
            dim,
            lo: lo.iter().map(|x| x * &q).collect(),
            hi: hi.iter().map(|x| x * &q).collect(),
            q,
        })
    }

    pub fn points(&self, cap: u64) -> Result<Vec<Point>> {
        let qrat = Scalar::from(self.q.clone());
        Ok(integer_points_in_box(&self.lo, &self.hi, cap)?
            .into_iter()
            .map(|k| {
                Point::new(
                    k.into_iter()
                        .map(|v| Scalar::from(v) / &qrat)
                        .collect::<Vec<_>>(),
                )
            })
            .collect())
    }
}

/// One relative-interior sample (the barycenter) of every face of every
/// term polytope of every chain; closes the gap for faces the grid skips.
pub fn face_samples(chains: &[&ConvexChain]) -> Vec<Point> {
    let mut out = Vec::new();
    for ch in chains {
        for (_, p) in ch.terms() {
            for f in faces(p) {
                out.push(face_polytope(p, &f).barycenter());
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// First grid or face-sample point where the chains differ, if any.
pub fn first_difference(
    a: &ConvexChain,
    b: &ConvexChain,
    grid: &Grid,
    cap: u64,
) -> Result<Option<Point>> {
    for x in grid.points(cap)? {
        if a.eval(&x) != b.eval(&x) {
            return Ok(Some(x));
        }
    }
    for x in face_samples(&[a, b]) {
        if a.eval(&x) != b.eval(&x) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

fn fmt_point(x: &Point) -> String {
    let inner: Vec<String> = x.coords().iter().map(crate::scalar::format_rational).collect();
    format!("({})", inner.join(","))
}

/// Pointwise verification of the product identities for a pair of bodies:
/// the truncated product representation of each body's chain, and the
/// homomorphism property for the oplus of the pair.
pub fn verify_product_identities(
    a: &CoconvexBody,
    b: &CoconvexBody,
    grid_step: Option<&Scalar>,
    cap: u64,
) -> Result<Check> {
    let chain_a = coconvex_chain(a)?;
    let chain_b = coconvex_chain(b)?;
    let mut check = Check::pass("chains-product-identities");

    // each body's chain equals 1_{Delta_t} * (1_{C_t})^{-1}
    for (label, body, chain) in [("a", a, &chain_a), ("b", b, &chain_b)] {
        let (dt, ct) = body.truncate(body.tstar())?;
        let via_inverse = mink_product(&ConvexChain::indicator(dt), &invert_indicator(&ct))?;
        let grid = Grid::default_for(&[chain, &via_inverse], grid_step)?;
        if let Some(w) = first_difference(chain, &via_inverse, &grid, cap)? {
            check.status = Status::Fail;
            check.note("reason", format!("truncated product identity fails for body {label}"));
            check.note("witness", fmt_point(&w));
            return Ok(check);
        }
        // and equals -1_A pointwise
        for x in grid.points(cap)? {
            let want = if body.membership(&x) == crate::body::Membership::InA {
                -1
            } else {
                0
            };
            if chain.eval(&x) != want {
                check.status = Status::Fail;
                check.note("reason", format!("chain of body {label} differs from -1_A"));
                check.note("witness", fmt_point(&x));
                return Ok(check);
            }
        }
    }

    // homomorphism: chain(a ⊕ b) = chain(a) * chain(b) pointwise
    let sum = crate::body::oplus(a, b)?;
    let chain_sum = coconvex_chain(&sum)?;
    let product = mink_product(&chain_a, &chain_b)?;
    let grid = Grid::default_for(&[&chain_sum, &product], grid_step)?;
    if let Some(w) = first_difference(&chain_sum, &product, &grid, cap)? {
        check.status = Status::Fail;
        check.note("reason", "oplus homomorphism identity fails");
        check.note("witness", fmt_point(&w));
        return Ok(check);
    }
    check.note("grid_step", format!("1/{}", grid.q));
    Ok(check)
}

/// Pointwise verification that [`inverse_chain`] really inverts the body's
/// chain, and that it matches its membership-predicate description.
pub fn verify_inverse_chain(
    a: &CoconvexBody,
    grid_step: Option<&Scalar>,
    cap: u64,
) -> Result<Check> {
    let d = a.dim();
    let chain = coconvex_chain(a)?;
    let inv = inverse_chain(a)?;
    let mut check = Check::pass("chains-inverse");

    // the candidate agrees with (-1)^{d-1} [ -x ∈ cl(A) ∩ int C ] + [x = 0]
    let sign = if (d - 1) % 2 == 0 { 1 } else { -1 };
    let grid = Grid::default_for(&[&chain, &inv], grid_step)?;
    for x in grid.points(cap)?.into_iter().chain(face_samples(&[&inv])) {
        let neg = x.neg();
        let mut want = if a.closure_membership(&neg) && a.interior_cone_membership(&neg) {
            sign
        } else {
            0
        };
        if x.is_zero() {
            want += 1;
        }
        if inv.eval(&x) != want {
            check.status = Status::Fail;
            check.note("reason", "inverse chain differs from its predicate description");
            check.note("witness", fmt_point(&x));
            return Ok(check);
        }
    }

    // chain * inverse = 1_{{0}} pointwise
    let product = mink_product(&chain, &inv)?;
    let one = ConvexChain::origin(d);
    let grid = Grid::default_for(&[&product, &one], grid_step)?;
    if let Some(w) = first_difference(&product, &one, &grid, cap)? {
        check.status = Status::Fail;
        check.note("reason", "product with the inverse is not the origin indicator");
        check.note("witness", fmt_point(&w));
        return Ok(check);
    }
    check.note("grid_step", format!("1/{}", grid.q));
    Ok(check)
}
