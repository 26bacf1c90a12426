//! H-to-V conversion and exact feasibility via Fourier-Motzkin.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;

use super::halfspace::{HalfSpace, Sense};
use super::hull::{check_dim, convex_hull};
use super::point::Point;
use super::polytope::Polytope;

/// Outcome of vertex enumeration on a closed half-space system.
#[derive(Clone, Debug)]
pub enum HrepResult {
    /// Infeasible system.
    Empty,
    Bounded(Polytope),
    /// Feasible but unbounded; carries recession-cone generators.
    Unbounded { recession: Vec<Point> },
}

type IntRow = (Vec<BigInt>, Scalar);

/// Primitive-normal form of `<n,x> >= c`; merges parallel constraints by
/// keeping the largest right-hand side.
fn normalize(dim: usize, hs: &[HalfSpace]) -> Result<Vec<IntRow>> {
    let mut best: BTreeMap<Vec<BigInt>, Scalar> = BTreeMap::new();
    for h in hs {
        if h.sense != Sense::Closed {
            return Err(Error::Contract(
                "hrep conversion works on closed half-spaces".into(),
            ));
        }
        if h.dim() != dim {
            return Err(Error::Contract("half-space dimension mismatch".into()));
        }
        let c = h.canonical();
        let n: Vec<BigInt> = c.normal.iter().map(|x| x.numer().clone()).collect();
        best.entry(n)
            .and_modify(|o| {
                if c.offset > *o {
                    *o = c.offset.clone();
                }
            })
            .or_insert(c.offset);
    }
    Ok(best.into_iter().collect())
}

const FM_CAP: usize = 20_000;

/// Fourier-Motzkin feasibility of a closed system `<n_i, x> >= c_i`.
pub fn feasible(dim: usize, hs: &[HalfSpace]) -> Result<bool> {
    let rows = normalize(dim, hs)?;
    feasible_rows(dim, rows)
}

fn feasible_rows(dim: usize, rows: Vec<IntRow>) -> Result<bool> {
    let mut pool = rows;
    for var in (0..dim).rev() {
        let mut next: BTreeMap<Vec<BigInt>, Scalar> = BTreeMap::new();
        let push = |n: Vec<BigInt>, c: Scalar, next: &mut BTreeMap<Vec<BigInt>, Scalar>| {
            // reduce to primitive form
            let mut g = BigInt::zero();
            for x in &n {
                g = num_integer::gcd(g, x.abs());
            }
            let (n, c) = if g.is_zero() {
                (n, c)
            } else {
                (
                    n.iter().map(|x| x / &g).collect(),
                    c / Scalar::from(g.clone()),
                )
            };
            next.entry(n)
                .and_modify(|o| {
                    if c > *o {
                        *o = c.clone();
                    }
                })
                .or_insert(c);
        };
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for (n, c) in pool {
            if n[var].is_zero() {
                push(n, c, &mut next);
            } else if n[var].is_positive() {
                pos.push((n, c));
            } else {
                neg.push((n, c));
            }
        }
        for (a, alpha) in &pos {
            for (b, beta) in &neg {
                // (-b_k) * a + a_k * b eliminates x_k; both multipliers positive
                let ma = -&b[var];
                let mb = a[var].clone();
                let n: Vec<BigInt> = a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| x * &ma + y * &mb)
                    .collect();
                let c = alpha * Scalar::from(ma) + beta * Scalar::from(mb);
                push(n, c, &mut next);
            }
        }
        if next.len() > FM_CAP {
            return Err(Error::Capability(format!(
                "Fourier-Motzkin blew past {FM_CAP} constraints"
            )));
        }
        pool = next.into_iter().collect();
    }
    // only zero normals remain: 0 >= c
    Ok(pool.iter().all(|(_, c)| !c.is_positive()))
}

/// Generators of the recession cone `{x : <n_i, x> >= 0}`: lineality basis
/// vectors (both signs) plus brute-force extreme rays.
fn recession_generators(dim: usize, rows: &[IntRow]) -> Vec<Point> {
    let normals: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|(n, _)| n.iter().map(|x| Scalar::from(x.clone())).collect())
        .collect();
    let mut gens: Vec<Point> = Vec::new();
    let satisfied = |v: &Point| {
        normals
            .iter()
            .all(|n| !v.dot(n).is_negative())
    };
    for l in linalg::nullspace_dim(&normals, dim) {
        if let Some(p) = crate::scalar::primitive_integer(&l) {
            let v = Point::new(p.into_iter().map(Scalar::from).collect());
            gens.push(v.neg());
            gens.push(v);
        }
    }
    if gens.is_empty() {
        for subset in (0..normals.len()).combinations(dim - 1) {
            let m: Vec<Vec<Scalar>> = subset.iter().map(|&i| normals[i].clone()).collect();
            let ns = linalg::nullspace_dim(&m, dim);
            if ns.len() != 1 {
                continue;
            }
            let Some(p) = crate::scalar::primitive_integer(&ns[0]) else {
                continue;
            };
            let v = Point::new(p.into_iter().map(Scalar::from).collect::<Vec<_>>());
            for cand in [v.clone(), v.neg()] {
                if satisfied(&cand) && !gens.contains(&cand) {
                    gens.push(cand);
                }
            }
        }
    }
    gens.sort();
    gens.dedup();
    gens
}

/// Vertex enumeration for a system of closed half-spaces.
///
/// Brute force over d-subsets of active equalities; detects infeasibility
/// (empty result, not an error) and unboundedness (recession generators).
pub fn hrep_to_vrep(dim: usize, hs: &[HalfSpace]) -> Result<HrepResult> {
    check_dim(dim)?;
    let rows = normalize(dim, hs)?;
    if !feasible_rows(dim, rows.clone())? {
        return Ok(HrepResult::Empty);
    }
    let recession = recession_generators(dim, &rows);
    if !recession.is_empty() {
        return Ok(HrepResult::Unbounded { recession });
    }
    let mut vertices: Vec<Point> = Vec::new();
    let nrows: Vec<(Vec<Scalar>, Scalar)> = rows
        .iter()
        .map(|(n, c)| {
            (
                n.iter().map(|x| Scalar::from(x.clone())).collect(),
                c.clone(),
            )
        })
        .collect();
    for subset in (0..nrows.len()).combinations(dim) {
        let m: Vec<Vec<Scalar>> = subset.iter().map(|&i| nrows[i].0.clone()).collect();
        let b: Vec<Scalar> = subset.iter().map(|&i| nrows[i].1.clone()).collect();
        let Some(x) = linalg::solve_square(&m, &b) else {
            continue;
        };
        let p = Point::new(x);
        if nrows.iter().all(|(n, c)| &p.dot(n) >= c) && !vertices.contains(&p) {
            vertices.push(p);
        }
    }
    if vertices.is_empty() {
        return Err(Error::Invariant(
            "feasible bounded system without basic solutions".into(),
        ));
    }
    Ok(HrepResult::Bounded(convex_hull(dim, &vertices)?))
}
