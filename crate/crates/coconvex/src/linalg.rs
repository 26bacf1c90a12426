//! Dense exact rational linear algebra at desk scale.
//!
//! Plain `Vec<Vec<Scalar>>` row-major matrices and straightforward Gaussian
//! elimination. Sizes here are tiny (d <= 4 geometry, interpolation systems
//! of a few dozen rows), so clarity beats asymptotics.

use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

fn zero() -> Scalar {
    Scalar::zero()
}

/// Row echelon reduction in place; returns pivot column indices.
fn echelon(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for c2 in 0..cols {
                    let t = &m[r][c2] * &f;
                    m[i][c2] = &m[i][c2] - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Rank of a matrix.
pub fn rank(m: &Matrix) -> usize {
    let mut m = m.clone();
    echelon(&mut m).len()
}

/// Determinant of a square matrix.
pub fn det(m: &Matrix) -> Scalar {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "det needs a square matrix");
    let mut m = m.clone();
    let mut d = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return zero();
        };
        if p != c {
            m.swap(c, p);
            d = -d;
        }
        d *= &m[c][c];
        let inv = m[c][c].clone();
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &inv;
                for c2 in c..n {
                    let t = &m[c][c2] * &f;
                    m[i][c2] = &m[i][c2] - t;
                }
            }
        }
    }
    d
}

/// Basis of the right nullspace `{x : Mx = 0}`.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Scalar>> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    if m.is_empty() {
        // nullspace of the empty map is the whole space
        return (0..cols).map(|_| Vec::new()).collect();
    }
    let mut m = m.clone();
    let pivots = echelon(&mut m);
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![zero(); cols];
        v[free] = Scalar::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Nullspace of the map `x -> Mx` acting on `dim`-dimensional vectors.
/// Unlike [`nullspace`], handles an empty row list (returns the standard
/// basis of the full space).
pub fn nullspace_dim(m: &Matrix, dim: usize) -> Vec<Vec<Scalar>> {
    if m.is_empty() {
        return (0..dim)
            .map(|i| {
                let mut v = vec![zero(); dim];
                v[i] = Scalar::one();
                v
            })
            .collect();
    }
    nullspace(m)
}

/// Solves the square system `Mx = b` exactly. `None` if singular.
pub fn solve_square(m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = m.len();
    assert_eq!(b.len(), n);
    let mut a: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut a);
    if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    let mut x = vec![zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = a[r][n].clone();
    }
    Some(x)
}

/// Solves a (possibly rectangular) consistent system `Mx = b`; returns one
/// solution, or `None` if inconsistent or underdetermined columns remain
/// without pivots being needed.
pub fn solve_any(m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut a);
    // inconsistent if a pivot lands in the augmented column
    if pivots.iter().any(|&c| c == cols) {
        return None;
    }
    let mut x = vec![zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = a[r][cols].clone();
    }
    Some(x)
}

/// Inertia (n_positive, n_negative, n_zero) of a symmetric rational matrix,
/// by congruence diagonalization. When every remaining diagonal candidate
/// vanishes but some off-diagonal entry `a_ij` survives, the standard rank-2
/// completion (add row/col `j` into `i`) produces a usable pivot; Sylvester's
/// law makes the result basis-independent.
pub fn inertia(sym: &Matrix) -> (usize, usize, usize) {
    let n = sym.len();
    for (i, row) in sym.iter().enumerate() {
        assert_eq!(row.len(), n, "inertia needs a square matrix");
        for j in 0..n {
            assert_eq!(sym[i][j], sym[j][i], "inertia needs a symmetric matrix");
        }
    }
    let mut m = sym.clone();
    let (mut pos, mut neg, mut zer) = (0usize, 0usize, 0usize);
    let mut i = 0;
    while i < n {
        if m[i][i].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !m[j][j].is_zero()) {
                m.swap(i, j);
                for row in m.iter_mut() {
                    row.swap(i, j);
                }
            } else if let Some(j) = (i + 1..n).find(|&j| !m[i][j].is_zero()) {
                // all diagonal pivots vanish: fold row/col j into i
                for c in 0..n {
                    let t = m[j][c].clone();
                    m[i][c] += t;
                }
                for r in 0..n {
                    let t = m[r][j].clone();
                    m[r][i] += t;
                }
            } else {
                zer += 1;
                i += 1;
                continue;
            }
        }
        let p = m[i][i].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for r in i + 1..n {
            if !m[r][i].is_zero() {
                let f = &m[r][i] / &p;
                for c in 0..n {
                    let t = &m[i][c] * &f;
                    m[r][c] = &m[r][c] - t;
                }
            }
        }
        for c in i + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &p;
                for r in 0..n {
                    let t = &m[r][i] * &f;
                    m[r][c] = &m[r][c] - t;
                }
            }
        }
        i += 1;
    }
    (pos, neg, zer)
}
