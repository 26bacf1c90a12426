//! Convex hulls by brute-force facet enumeration, exact over the rationals.
//!
//! Desk scale by design: every d-subset of points is tested as a candidate
//! facet hyperplane. Lower-dimensional point sets are detected, mapped to
//! coordinates of their affine hull, hulled there and mapped back, so
//! lower-dimensional polytopes are first-class values.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{denominator_lcm, Scalar};

use super::halfspace::{Equation, HalfSpace};
use super::point::Point;
use super::polytope::Polytope;

/// Largest supported ambient dimension for the brute-force routines.
pub const MAX_DIM: usize = 4;

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::Contract("ambient dimension must be >= 1".into()));
    }
    if dim > MAX_DIM {
        return Err(Error::Capability(format!(
            "dimension {dim} exceeds the supported bound {MAX_DIM}"
        )));
    }
    Ok(())
}

/// Determinant of a small BigInt matrix by cofactor expansion (sizes up to
/// 4: minors of (r-1) x r difference matrices with r <= 5).
pub(crate) fn det_int(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::from(1),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        3 => {
            let a = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]);
            let b = &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0]);
            let c = &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
            a - b + c
        }
        4 => {
            let mut acc = BigInt::zero();
            for j in 0..4 {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * det_int(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        n => panic!("det_int not implemented for size {n}"),
    }
}

/// Normal of the hyperplane through `rows + base`: generalized cross
/// product of the difference rows. Zero vector iff the rows are dependent.
pub(crate) fn cross_normal(rows: &[Vec<BigInt>], r: usize) -> Vec<BigInt> {
    debug_assert_eq!(rows.len() + 1, r);
    (0..r)
        .map(|j| {
            let minor: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = det_int(&minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

pub(crate) fn primitive_int_vec(mut v: Vec<BigInt>) -> Option<Vec<BigInt>> {
    let mut g = BigInt::zero();
    for x in &v {
        g = num_integer::gcd(g, x.abs());
    }
    if g.is_zero() {
        return None;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
    Some(v)
}

/// Irredundant facets of a full-dimensional integer point set in `r` >= 1
/// dims, as `(primitive normal, rhs)` pairs meaning `<n, x> >= rhs`.
fn facets_int(pts: &[Vec<BigInt>], r: usize) -> Vec<(Vec<BigInt>, BigInt)> {
    let mut seen_planes: BTreeSet<(Vec<BigInt>, BigInt)> = BTreeSet::new();
    let mut facets: BTreeSet<(Vec<BigInt>, BigInt)> = BTreeSet::new();
    for subset in (0..pts.len()).combinations(r) {
        let base = &pts[subset[0]];
        let rows: Vec<Vec<BigInt>> = subset[1..]
            .iter()
            .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let Some(n) = primitive_int_vec(cross_normal(&rows, r)) else {
            continue;
        };
        let c: BigInt = n.iter().zip(base).map(|(a, b)| a * b).sum();
        if seen_planes.contains(&(n.clone(), c.clone())) {
            continue;
        }
        let neg: Vec<BigInt> = n.iter().map(|x| -x).collect();
        seen_planes.insert((n.clone(), c.clone()));
        seen_planes.insert((neg.clone(), -&c));
        let (mut any_pos, mut any_neg) = (false, false);
        for p in pts {
            let s: BigInt = n.iter().zip(p).map(|(a, b)| a * b).sum::<BigInt>() - &c;
            if s.is_positive() {
                any_pos = true;
            } else if s.is_negative() {
                any_neg = true;
            }
            if any_pos && any_neg {
                break;
            }
        }
        match (any_pos, any_neg) {
            (true, true) => {}
            (_, false) => {
                facets.insert((n, c));
            }
            (false, true) => {
                facets.insert((neg, -c));
            }
        }
    }
    facets.into_iter().collect()
}

/// Convex hull of a finite point set.
///
/// Returns the polytope with irredundant V- and H-representations; a
/// lower-dimensional hull carries its affine-hull equations and has no
/// ambient interior.
pub fn convex_hull(dim: usize, points: &[Point]) -> Result<Polytope> {
    check_dim(dim)?;
    if points.is_empty() {
        return Err(Error::Contract("convex hull of an empty point set".into()));
    }
    for p in points {
        if p.dim() != dim {
            return Err(Error::Contract(format!(
                "point dimension {} does not match ambient dimension {dim}",
                p.dim()
            )));
        }
    }
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();

    // affine hull: greedy independent difference basis
    let p0 = pts[0].clone();
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for p in &pts[1..] {
        let d: Vec<Scalar> = p.sub(&p0).coords().to_vec();
        let mut m = basis.clone();
        m.push(d.clone());
        if linalg::rank(&m) > basis.len() {
            basis.push(d);
        }
        if basis.len() == dim {
            break;
        }
    }
    let r = basis.len();
    let mut equations: Vec<Equation> = linalg::nullspace_dim(&basis, dim)
        .into_iter()
        .map(|n| Equation::new(&n, &p0))
        .collect();
    equations.sort();

    if r == 0 {
        return Ok(Polytope::from_parts(dim, vec![p0], equations, Vec::new()));
    }

    // coordinates within the affine hull (identity when full-dimensional)
    let full = r == dim;
    let coords: Vec<Vec<Scalar>> = if full {
        pts.iter().map(|p| p.coords().to_vec()).collect()
    } else {
        // solve (columns = basis vectors) u = p - p0
        let m: Vec<Vec<Scalar>> = (0..dim)
            .map(|row| (0..r).map(|col| basis[col][row].clone()).collect())
            .collect();
        pts.iter()
            .map(|p| {
                linalg::solve_any(&m, p.sub(&p0).coords())
                    .expect("point lies in its own affine hull")
            })
            .collect()
    };

    // scale to integers for the facet enumeration
    let all: Vec<Scalar> = coords.iter().flatten().cloned().collect();
    let l = denominator_lcm(&all);
    let ipts: Vec<Vec<BigInt>> = coords
        .iter()
        .map(|u| u.iter().map(|x| x.numer() * (&l / x.denom())).collect())
        .collect();
    let fi = facets_int(&ipts, r);

    // vertices: points whose active facet normals span the hull
    let mut vertex_ids = Vec::new();
    for (i, p) in ipts.iter().enumerate() {
        let active: Vec<Vec<Scalar>> = fi
            .iter()
            .filter(|(n, c)| {
                n.iter().zip(p).map(|(a, b)| a * b).sum::<BigInt>() == *c
            })
            .map(|(n, _)| n.iter().map(|x| Scalar::from(x.clone())).collect())
            .collect();
        if active.len() >= r && linalg::rank(&active) == r {
            vertex_ids.push(i);
        }
    }
    let vertices: Vec<Point> = vertex_ids.iter().map(|&i| pts[i].clone()).collect();

    // map facets back to ambient half-spaces
    let lrat = Scalar::from(l);
    let mut facets: Vec<HalfSpace> = Vec::new();
    for (n, c) in fi {
        let offs_u = Scalar::from(c) / &lrat;
        let (normal, offset) = if full {
            (
                n.iter().map(|x| Scalar::from(x.clone())).collect::<Vec<_>>(),
                offs_u,
            )
        } else {
            // ambient normal: solve (B^T B) y = n, normal = B y
            let bt_b: Vec<Vec<Scalar>> = (0..r)
                .map(|i| {
                    (0..r)
                        .map(|j| super::point::dot(&basis[i], &basis[j]))
                        .collect()
                })
                .collect();
            let nrat: Vec<Scalar> = n.iter().map(|x| Scalar::from(x.clone())).collect();
            let y = linalg::solve_square(&bt_b, &nrat)
                .expect("gram matrix of a basis is invertible");
            let normal: Vec<Scalar> = (0..dim)
                .map(|row| {
                    (0..r)
                        .map(|col| &basis[col][row] * &y[col])
                        .fold(Scalar::zero(), |a, t| a + t)
                })
                .collect();
            let offset = &offs_u + super::point::dot(&normal, p0.coords());
            (normal, offset)
        };
        facets.push(HalfSpace::closed(normal, offset).canonical());
    }
    facets.sort();
    facets.dedup();

    Ok(Polytope::from_parts(dim, vertices, equations, facets))
}
