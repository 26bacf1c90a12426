//! Multivariate polynomials with exact rational coefficients, plus the
//! deterministic interpolation grids used to recover volume and counting
//! polynomials from pointwise evaluations.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{format_rational, int, Scalar};

/// A polynomial in `nvars` variables; exponent vector -> coefficient.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms(nvars: usize, terms: Vec<(Vec<u32>, Scalar)>) -> Self {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, expo: &[u32]) -> Scalar {
        self.terms.get(expo).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, expo: Vec<u32>, c: Scalar) {
        assert_eq!(expo.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(expo);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, by: &Scalar) -> MPoly {
        if by.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * by)).collect(),
        }
    }

    pub fn eval(&self, at: &[Scalar]) -> Scalar {
        assert_eq!(at.len(), self.nvars);
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in at.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    pub fn partial(&self, var: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(e2, c * int(e[var] as i64));
        }
        out
    }

    /// Directional (Lie) derivative along `v`.
    pub fn directional_derivative(&self, v: &[Scalar]) -> MPoly {
        assert_eq!(v.len(), self.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (i, vi) in v.iter().enumerate() {
            if !vi.is_zero() {
                out = out.add(&self.partial(i).scale(vi));
            }
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == degree)
    }

    /// Adds a trailing variable with exponent zero on every term.
    pub fn embed_with_extra_var(&self) -> MPoly {
        MPoly {
            nvars: self.nvars + 1,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.push(0);
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Renders with the given variable names, deterministic term order.
    pub fn display(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut s = format_rational(c);
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                s.push_str(&format!("*{var}{}", i + 1));
                if k > 1 {
                    s.push_str(&format!("^{k}"));
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

/// All exponent vectors in `nvars` variables of total degree exactly `d`,
/// lexicographically sorted.
pub fn homogeneous_exponents(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, d: u32, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
        if nvars == 1 {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=d {
            cur.push(k);
            rec(nvars - 1, d - k, out, cur);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut out, &mut Vec::new());
    out.sort();
    out
}

/// All exponent vectors of total degree at most `d`.
pub fn exponents_up_to(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for k in 0..=d {
        out.extend(homogeneous_exponents(nvars, k));
    }
    out.sort();
    out
}

fn eval_monomial(e: &[u32], at: &[Scalar]) -> Scalar {
    let mut t = Scalar::one();
    for (x, &k) in at.iter().zip(e) {
        for _ in 0..k {
            t *= x;
        }
    }
    t
}

fn solve_interpolation(
    nvars: usize,
    monomials: &[Vec<u32>],
    points: &[Vec<Scalar>],
    values: &[Scalar],
) -> Result<MPoly> {
    let m: linalg::Matrix = points
        .iter()
        .map(|p| monomials.iter().map(|e| eval_monomial(e, p)).collect())
        .collect();
    let coeffs = linalg::solve_square(&m, values).ok_or_else(|| {
        Error::Invariant("interpolation grid turned out singular".into())
    })?;
    Ok(MPoly::from_terms(
        nvars,
        monomials.iter().cloned().zip(coeffs).collect(),
    ))
}

fn verify_extra_points<F>(
    p: &MPoly,
    nvars: usize,
    hi: u32,
    seed: u64,
    f: &mut F,
) -> Result<()>
where
    F: FnMut(&[Scalar]) -> Result<Scalar>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..3 {
        let at: Vec<Scalar> = (0..nvars)
            .map(|_| int(rng.random_range(1..=hi as i64)))
            .collect();
        let want = f(&at)?;
        if p.eval(&at) != want {
            return Err(Error::Invariant(format!(
                "interpolated polynomial disagrees with a direct evaluation at {:?}",
                at.iter().map(format_rational).collect::<Vec<_>>()
            )));
        }
    }
    Ok(())
}

/// Interpolates a homogeneous degree-`d` polynomial from evaluations on the
/// deterministic unisolvent grid of positive integer vectors summing to
/// `nvars + d` (the principal lattice of a dilated simplex, viewed on the
/// hyperplane), then re-checks 3 extra seeded points exactly.
pub fn interpolate_homogeneous<F>(nvars: usize, d: u32, mut f: F) -> Result<MPoly>
where
    F: FnMut(&[Scalar]) -> Result<Scalar>,
{
    assert!(nvars >= 1);
    let monomials = homogeneous_exponents(nvars, d);
    // positive integer compositions of nvars + d
    let points: Vec<Vec<Scalar>> = homogeneous_exponents(nvars, d)
        .into_iter()
        .map(|e| e.into_iter().map(|k| int(k as i64 + 1)).collect())
        .collect();
    debug_assert_eq!(points.len(), monomials.len());
    let values: Vec<Scalar> = points.iter().map(|p| f(p)).collect::<Result<_>>()?;
    let poly = solve_interpolation(nvars, &monomials, &points, &values)?;
    verify_extra_points(&poly, nvars, d + 3, 0xC0C0_0001, &mut f)?;
    Ok(poly)
}

/// Interpolates a (not necessarily homogeneous) polynomial of total degree
/// at most `d` from the shifted principal lattice `{m : m_i >= 1,
/// sum(m_i - 1) <= d}`, then re-checks 3 extra seeded points exactly.
pub fn interpolate_total_degree<F>(nvars: usize, d: u32, mut f: F) -> Result<MPoly>
where
    F: FnMut(&[Scalar]) -> Result<Scalar>,
{
    assert!(nvars >= 1);
    let monomials = exponents_up_to(nvars, d);
    let points: Vec<Vec<Scalar>> = monomials
        .iter()
        .map(|e| e.iter().map(|&k| int(k as i64 + 1)).collect())
        .collect();
    let values: Vec<Scalar> = points.iter().map(|p| f(p)).collect::<Result<_>>()?;
    let poly = solve_interpolation(nvars, &monomials, &points, &values)?;
    verify_extra_points(&poly, nvars, d + 3, 0xC0C0_0002, &mut f)?;
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    #[test]
    fn derivative_rules() {
        // L_v(x1 x2) with v = (1,0) is x2
        let p = MPoly::from_terms(2, vec![(vec![1, 1], int(1))]);
        let d = p.directional_derivative(&[int(1), int(0)]);
        assert_eq!(d, MPoly::from_terms(2, vec![(vec![0, 1], int(1))]));
        // applying L_{e1} d times to x1^d gives d!
        let q = MPoly::from_terms(1, vec![(vec![3], int(1))]);
        let mut r = q.clone();
        for _ in 0..3 {
            r = r.directional_derivative(&[int(1)]);
        }
        assert_eq!(r, MPoly::from_terms(1, vec![(vec![0], int(6))]));
        // L_{(1,1)}(2x^2 + 8xy + 8y^2) = 12x + 24y
        let s = MPoly::from_terms(
            2,
            vec![(vec![2, 0], int(2)), (vec![1, 1], int(8)), (vec![0, 2], int(8))],
        );
        let ds = s.directional_derivative(&[int(1), int(1)]);
        assert_eq!(
            ds,
            MPoly::from_terms(2, vec![(vec![1, 0], int(12)), (vec![0, 1], int(24))])
        );
    }

    #[test]
    fn interpolation_recovers_homogeneous() {
        let target = MPoly::from_terms(
            2,
            vec![(vec![2, 0], int(2)), (vec![1, 1], int(8)), (vec![0, 2], frac(1, 2))],
        );
        let got = interpolate_homogeneous(2, 2, |at| Ok(target.eval(at))).unwrap();
        assert_eq!(got, target);
    }

    #[test]
    fn interpolation_recovers_inhomogeneous() {
        let target = MPoly::from_terms(
            2,
            vec![
                (vec![0, 0], int(-1)),
                (vec![1, 0], int(1)),
                (vec![2, 0], int(2)),
                (vec![1, 1], int(4)),
            ],
        );
        let got = interpolate_total_degree(2, 2, |at| Ok(target.eval(at))).unwrap();
        assert_eq!(got, target);
    }

    #[test]
    fn grid_sizes_match_monomial_counts() {
        assert_eq!(homogeneous_exponents(3, 2).len(), 6);
        assert_eq!(exponents_up_to(2, 2).len(), 6);
        assert_eq!(homogeneous_exponents(1, 5).len(), 1);
    }

    #[test]
    fn display_is_stable() {
        let p = MPoly::from_terms(
            1,
            vec![(vec![2], int(2)), (vec![1], int(1)), (vec![0], int(-1))],
        );
        assert_eq!(p.display("m"), "2*m1^2 + 1*m1 + -1");
    }
}
