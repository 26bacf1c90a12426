//! Specialization of multivariate generating functions along a weight
//! vector, exact univariate rational-function arithmetic, point-count
//! extraction at t -> 1, and randomized-complete equality.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{GenFun, IVec};

/// Dense univariate polynomial over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Scalar>);

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn one() -> Self {
        UniPoly(vec![Scalar::one()])
    }

    pub fn monomial(deg: usize, c: Scalar) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Scalar::zero(); deg + 1];
        v[deg] = c;
        UniPoly(v)
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.0.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.0.len().max(o.0.len());
        let mut v = vec![Scalar::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in o.0.iter().enumerate() {
            v[i] += c;
        }
        UniPoly(v).trim()
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Scalar::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        UniPoly(v).trim()
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut r = self.0.clone();
        if r.len() < d.0.len() {
            return (UniPoly::zero(), UniPoly(r).trim());
        }
        let mut q = vec![Scalar::zero(); r.len() - d.0.len() + 1];
        let lead = d.0.last().unwrap().clone();
        for k in (0..q.len()).rev() {
            let c = &r[k + d.0.len() - 1] / &lead;
            if c.is_zero() {
                continue;
            }
            q[k] = c.clone();
            for (i, dc) in d.0.iter().enumerate() {
                let t = dc * &c;
                r[k + i] = &r[k + i] - t;
            }
        }
        (UniPoly(q).trim(), UniPoly(r).trim())
    }

    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone().trim(), o.clone().trim());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        // monic for determinism
        let lead = a.0.last().unwrap().clone();
        UniPoly(a.0.iter().map(|c| c / &lead).collect())
    }

    /// Multiplicity of the root `t = 1` with the deflated polynomial.
    pub fn deflate_at_one(&self) -> (u32, UniPoly) {
        let linear = UniPoly(vec![-Scalar::one(), Scalar::one()]); // t - 1
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() && p.eval(&Scalar::one()).is_zero() {
            p = p.div_exact(&linear).expect("root of multiplicity >= 1");
            k += 1;
        }
        (k, p)
    }
}

/// A univariate rational function `t^shift * num / den` with `num(0) != 0`
/// (unless zero) and `den(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFun {
    pub shift: i64,
    pub num: UniPoly,
    pub den: UniPoly,
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun { shift: 0, num: UniPoly::zero(), den: UniPoly::one() }
    }

    fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            return RatFun::zero();
        }
        // factor powers of t out of the numerator into the shift
        let k = self.num.0.iter().take_while(|c| c.is_zero()).count();
        if k > 0 {
            self.num = UniPoly(self.num.0[k..].to_vec());
            self.shift += k as i64;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() > 0 {
            self.num = self.num.div_exact(&g).unwrap();
            self.den = self.den.div_exact(&g).unwrap();
        }
        let c0 = self.den.coeff(0);
        debug_assert!(!c0.is_zero(), "denominator divisible by t");
        if !c0.is_one() {
            self.num = UniPoly(self.num.0.iter().map(|c| c / &c0).collect());
            self.den = UniPoly(self.den.0.iter().map(|c| c / &c0).collect());
        }
        self
    }

    pub fn from_term(coef: i64, mut shift: i64, denom_exponents: &[i64]) -> RatFun {
        // coef * t^shift / prod (1 - t^m); negative m rewrites through
        // 1/(1-t^-k) = -t^k/(1-t^k)
        let mut num = UniPoly::monomial(0, Scalar::from(BigInt::from(coef)));
        let mut den = UniPoly::one();
        for &m in denom_exponents {
            assert!(m != 0);
            let k = m.unsigned_abs() as usize;
            let mut f = vec![Scalar::zero(); k + 1];
            f[0] = Scalar::one();
            f[k] = -Scalar::one();
            den = den.mul(&UniPoly(f));
            if m < 0 {
                num = num.neg();
                shift += k as i64;
            }
        }
        RatFun { shift, num, den }.normalize()
    }

    pub fn add(&self, o: &RatFun) -> RatFun {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(o.shift);
        let a = UniPoly::monomial((self.shift - s) as usize, Scalar::one())
            .mul(&self.num)
            .mul(&o.den);
        let b = UniPoly::monomial((o.shift - s) as usize, Scalar::one())
            .mul(&o.num)
            .mul(&self.den);
        RatFun { shift: s, num: a.add(&b), den: self.den.mul(&o.den) }.normalize()
    }

    /// Cross-multiplied exact equality.
    pub fn equal(&self, o: &RatFun) -> bool {
        if self.num.is_zero() || o.num.is_zero() {
            return self.num.is_zero() && o.num.is_zero();
        }
        self.shift == o.shift && self.num.mul(&o.den) == o.num.mul(&self.den)
    }

    /// Value of the analytic continuation at `t = 1`: cancels every
    /// `(t-1)` factor and evaluates. `None` if a pole persists.
    pub fn value_at_one(&self) -> Option<Scalar> {
        if self.num.is_zero() {
            return Some(Scalar::zero());
        }
        let (a, nu) = self.num.deflate_at_one();
        let (b, de) = self.den.deflate_at_one();
        if b > a {
            return None;
        }
        if b < a {
            return Some(Scalar::zero());
        }
        Some(nu.eval(&Scalar::one()) / de.eval(&Scalar::one()))
    }
}

fn dot(w: &[i64], a: &IVec) -> i64 {
    w.iter().zip(a).map(|(x, y)| x * y).sum()
}

/// Substitutes `x_i = t^{w_i}`. Errors when some denominator factor pairs
/// to zero (nongeneric weight, caller should redraw).
pub fn specialize(f: &GenFun, w: &[i64]) -> Result<RatFun> {
    if w.len() != f.nvars {
        return Err(Error::Contract("weight arity mismatch".into()));
    }
    let mut acc = RatFun::zero();
    for term in &f.terms {
        let mut exps = Vec::with_capacity(term.denom.len());
        for b in &term.denom {
            let m = dot(w, b);
            if m == 0 {
                return Err(Error::Contract(format!(
                    "nongeneric weight {w:?}: denominator factor {b:?} collapses"
                )));
            }
            exps.push(m);
        }
        acc = acc.add(&RatFun::from_term(term.coef, dot(w, &term.numer), &exps));
    }
    for (a, c) in &f.poly {
        acc = acc.add(&RatFun::from_term(*c, dot(w, a), &[]));
    }
    Ok(acc)
}

/// Seeded stream of weight vectors generic for all the given genfuns.
pub fn generic_weights(fs: &[&GenFun], count: usize, seed: u64) -> Result<Vec<Vec<i64>>> {
    let nvars = fs.first().map(|f| f.nvars).unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        if attempts > 500 {
            return Err(Error::Invariant(
                "could not draw a generic weight vector".into(),
            ));
        }
        let w: Vec<i64> = (0..nvars).map(|_| rng.random_range(-7..=7)).collect();
        if w.iter().all(|&x| x == 0) {
            continue;
        }
        let generic = fs.iter().all(|f| {
            f.terms
                .iter()
                .flat_map(|t| t.denom.iter())
                .all(|b| dot(&w, b) != 0)
        });
        if generic && !out.contains(&w) {
            out.push(w);
        }
    }
    Ok(out)
}

/// Randomized-complete equality: exact agreement of the specializations
/// under `count` seeded generic weights. A `false` is always sound; `true`
/// is high-confidence (flagged as such in the docs).
pub fn genfun_equal(f: &GenFun, g: &GenFun, seed: u64) -> Result<bool> {
    if f.nvars != g.nvars {
        return Ok(false);
    }
    for w in generic_weights(&[f, g], 5, seed)? {
        if !specialize(f, &w)?.equal(&specialize(g, &w)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The number of integer points behind a generating function with finite
/// support: specialize along a seeded generic weight, cancel the `(1-t)`
/// factors, evaluate at `t = 1`.
pub fn count_points(f: &GenFun, seed: u64) -> Result<BigInt> {
    let w = generic_weights(&[f], 1, seed)?.remove(0);
    let r = specialize(f, &w)?;
    let v = r.value_at_one().ok_or_else(|| {
        Error::Contract("infinite support: a pole at t=1 persists after cancellation".into())
    })?;
    if !v.denom().is_one() {
        return Err(Error::Invariant("point count is not an integer".into()));
    }
    if v.numer().is_negative() {
        return Err(Error::Invariant("point count is negative".into()));
    }
    Ok(v.numer().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::GfTerm;
    use crate::scalar::int;

    fn quadrant_gf() -> GenFun {
        GenFun {
            nvars: 2,
            terms: vec![GfTerm {
                coef: 1,
                numer: vec![0, 0],
                denom: vec![vec![1, 0], vec![0, 1]],
            }],
            poly: Default::default(),
        }
    }

    #[test]
    fn specialize_simple() {
        // 1/((1-x)(1-y)) with w = (1,2) -> 1/((1-t)(1-t^2))
        let r = specialize(&quadrant_gf(), &[1, 2]).unwrap();
        let want = RatFun::from_term(1, 0, &[1, 2]);
        assert!(r.equal(&want));
        // x + y with w = (1,3) -> t + t^3
        let mut f = GenFun::zero(2);
        f.poly.insert(vec![1, 0], 1);
        f.poly.insert(vec![0, 1], 1);
        let r = specialize(&f, &[1, 3]).unwrap();
        let want = RatFun::from_term(1, 1, &[]).add(&RatFun::from_term(1, 3, &[]));
        assert!(r.equal(&want));
    }

    #[test]
    fn nongeneric_weight_rejected() {
        let f = GenFun {
            nvars: 2,
            terms: vec![GfTerm { coef: 1, numer: vec![0, 0], denom: vec![vec![1, -1]] }],
            poly: Default::default(),
        };
        assert!(specialize(&f, &[1, 1]).is_err());
        assert!(specialize(&f, &[2, 1]).is_ok());
    }

    #[test]
    fn algebraic_identity() {
        // 1/(1-x) equals 1 + x/(1-x)
        let a = GenFun {
            nvars: 1,
            terms: vec![GfTerm { coef: 1, numer: vec![0], denom: vec![vec![1]] }],
            poly: Default::default(),
        };
        let mut b = GenFun {
            nvars: 1,
            terms: vec![GfTerm { coef: 1, numer: vec![1], denom: vec![vec![1]] }],
            poly: Default::default(),
        };
        b.poly.insert(vec![0], 1);
        assert!(genfun_equal(&a, &b, 42).unwrap());
        // x vs y differ
        let mut x = GenFun::zero(2);
        x.poly.insert(vec![1, 0], 1);
        let mut y = GenFun::zero(2);
        y.poly.insert(vec![0, 1], 1);
        assert!(!genfun_equal(&x, &y, 42).unwrap());
    }

    #[test]
    fn brion_segment_identity() {
        // 1/(1-x) + x^2/(1-x^{-1}) = 1 + x + x^2
        let f = GenFun {
            nvars: 1,
            terms: vec![
                GfTerm { coef: 1, numer: vec![0], denom: vec![vec![1]] },
                GfTerm { coef: 1, numer: vec![2], denom: vec![vec![-1]] },
            ],
            poly: Default::default(),
        };
        let mut g = GenFun::zero(1);
        for k in 0..=2 {
            g.poly.insert(vec![k], 1);
        }
        assert!(genfun_equal(&f, &g, 7).unwrap());
        assert_eq!(count_points(&f, 9).unwrap(), BigInt::from(3));
    }

    #[test]
    fn count_points_pole_is_an_error() {
        assert!(matches!(
            count_points(&quadrant_gf(), 3),
            Err(Error::Contract(msg)) if msg.contains("infinite support")
        ));
    }

    #[test]
    fn ratfun_arithmetic() {
        // 1/(1-t) - 1/(1-t) = 0
        let a = RatFun::from_term(1, 0, &[1]);
        let b = RatFun::from_term(-1, 0, &[1]);
        assert!(a.add(&b).num.is_zero());
        // the vertex expansion of [0,3] counts its 4 lattice points at t = 1
        let c = RatFun::from_term(1, 0, &[1]).add(&RatFun::from_term(1, 3, &[-1]));
        assert_eq!(c.value_at_one().unwrap(), int(4));
    }

    #[test]
    fn unipoly_division() {
        // (t^2 - 1) / (t - 1) = t + 1
        let p = UniPoly(vec![int(-1), int(0), int(1)]);
        let d = UniPoly(vec![int(-1), int(1)]);
        assert_eq!(p.div_exact(&d).unwrap(), UniPoly(vec![int(1), int(1)]));
        let (k, rest) = p.deflate_at_one();
        assert_eq!(k, 1);
        assert_eq!(rest, UniPoly(vec![int(1), int(1)]));
    }
}
