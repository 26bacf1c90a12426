//! Half-open simplicial decompositions of pointed integer cones and their
//! generating functions, with truncated-series oracles.
//!
//! Barvinok-style signed decompositions are deliberately absent: the
//! fundamental parallelepiped of every piece is enumerated exhaustively,
//! which is fine while determinants stay desk-scale and reports a clear
//! capability error otherwise.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::body::cone_facets;
use crate::error::{Error, Result};
use crate::geom::{dot, integer_points_in_box, Point};
use crate::linalg;
use crate::scalar::{frac, rat_ceil, rat_floor, Scalar};

use super::{ivec_to_point, ivec_to_scalars, GenFun, GfTerm, HalfOpenSimplicialCone, IVec, IntegerCone};

const PARALLELEPIPED_CAP: u64 = 100_000;

impl HalfOpenSimplicialCone {
    pub fn closed(dim: usize, gens: Vec<IVec>) -> Result<Self> {
        let open = vec![false; gens.len()];
        Self::with_open(dim, gens, open)
    }

    pub fn with_open(dim: usize, gens: Vec<IVec>, open: Vec<bool>) -> Result<Self> {
        if gens.len() != open.len() {
            return Err(Error::Contract("one openness flag per generator".into()));
        }
        if gens.iter().any(|g| g.len() != dim) {
            return Err(Error::Contract("generator dimension mismatch".into()));
        }
        let rows: Vec<Vec<Scalar>> = gens.iter().map(|g| ivec_to_scalars(g)).collect();
        if linalg::rank(&rows) != gens.len() {
            return Err(Error::Validation(
                "simplicial cone generators must be linearly independent".into(),
            ));
        }
        Ok(HalfOpenSimplicialCone { dim, gens, open })
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    /// Coordinates of `x` in the generator basis, when `x` lies in the span.
    pub fn coordinates(&self, x: &IVec) -> Option<Vec<Scalar>> {
        if self.gens.is_empty() {
            return x.iter().all(|&c| c == 0).then(Vec::new);
        }
        let m: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|row| self.gens.iter().map(|g| crate::scalar::int(g[row])).collect())
            .collect();
        let b = ivec_to_scalars(x);
        let t = linalg::solve_any(&m, &b)?;
        // solve_any can return a spurious solution only if inconsistent
        // systems slipped through; verify cheaply
        let ok = (0..self.dim).all(|row| {
            let mut acc = Scalar::zero();
            for (j, g) in self.gens.iter().enumerate() {
                acc += crate::scalar::int(g[row]) * &t[j];
            }
            acc == b[row]
        });
        ok.then_some(t)
    }

    /// Membership with the half-open facet bounds.
    pub fn contains_int(&self, x: &IVec) -> bool {
        let Some(t) = self.coordinates(x) else {
            return false;
        };
        t.iter().zip(&self.open).all(|(tj, &o)| {
            if o {
                tj.is_positive()
            } else {
                !tj.is_negative()
            }
        })
    }
}

/// All integer points `sum t_j g_j` with `t_j ∈ [0,1)` (closed facets) or
/// `t_j ∈ (0,1]` (open facets). Cardinality equals `|det|` for full-rank
/// cones.
pub fn fundamental_parallelepiped(c: &HalfOpenSimplicialCone) -> Result<Vec<IVec>> {
    if c.gens.is_empty() {
        return Ok(vec![vec![0; c.dim]]);
    }
    let (mut lo, mut hi) = (vec![BigInt::zero(); c.dim], vec![BigInt::zero(); c.dim]);
    for i in 0..c.dim {
        let mut min = Scalar::zero();
        let mut max = Scalar::zero();
        for g in &c.gens {
            let v = crate::scalar::int(g[i]);
            if v.is_positive() {
                max += v;
            } else {
                min += v;
            }
        }
        lo[i] = rat_floor(&min);
        hi[i] = rat_ceil(&max);
    }
    let one = Scalar::from(BigInt::from(1));
    let mut out = Vec::new();
    for cand in integer_points_in_box(&lo, &hi, PARALLELEPIPED_CAP)? {
        let x: IVec = cand
            .iter()
            .map(|b| b.to_i64().expect("desk-scale coordinates"))
            .collect();
        let Some(t) = c.coordinates(&x) else {
            continue;
        };
        let inside = t.iter().zip(&c.open).all(|(tj, &o)| {
            if o {
                tj.is_positive() && *tj <= one
            } else {
                !tj.is_negative() && *tj < one
            }
        });
        if inside {
            out.push(x);
        }
    }
    out.sort();
    Ok(out)
}

/// `G` of a half-open simplicial cone: the parallelepiped points over the
/// geometric-series denominators of the generators.
pub fn genfun_simplicial(c: &HalfOpenSimplicialCone) -> Result<GenFun> {
    let pts = fundamental_parallelepiped(c)?;
    if c.gens.is_empty() {
        return Ok(GenFun::constant(c.dim, 1));
    }
    Ok(GenFun {
        nvars: c.dim,
        terms: pts
            .into_iter()
            .map(|p| GfTerm { coef: 1, numer: p, denom: c.gens.clone() })
            .collect(),
        poly: BTreeMap::new(),
    })
}

/// Deterministic ray orderings for the placing triangulation: the cone's
/// generator sequence as given, or reversed (the alternative order used to
/// confirm triangulation independence).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlacingOrder {
    Given,
    Reversed,
}

/// Ambient-coordinate geometry of a pointed integer cone: equations cutting
/// out its span and facet inequalities within the span.
pub(crate) struct ConeGeometry {
    pub span_equations: Vec<Vec<Scalar>>,
    pub facet_normals: Vec<Vec<Scalar>>,
    /// basis of the span (columns), for coordinates
    basis: Vec<Vec<Scalar>>,
}

impl ConeGeometry {
    pub fn contains(&self, x: &Point) -> bool {
        self.span_equations.iter().all(|e| x.dot(e).is_zero())
            && self.facet_normals.iter().all(|n| !x.dot(n).is_negative())
    }

    fn span_coords(&self, v: &Point) -> Option<Vec<Scalar>> {
        let dim = v.dim();
        let r = self.basis.len();
        let m: Vec<Vec<Scalar>> = (0..dim)
            .map(|row| (0..r).map(|col| self.basis[col][row].clone()).collect())
            .collect();
        let t = linalg::solve_any(&m, v.coords())?;
        let ok = (0..dim).all(|row| {
            let mut acc = Scalar::zero();
            for (col, b) in self.basis.iter().enumerate() {
                acc += &b[row] * &t[col];
            }
            acc == v.coords()[row]
        });
        ok.then_some(t)
    }
}

pub(crate) fn cone_geometry(c: &IntegerCone) -> Result<ConeGeometry> {
    let dim = c.dim();
    if c.generators().is_empty() {
        return Ok(ConeGeometry {
            span_equations: (0..dim)
                .map(|i| {
                    let mut e = vec![Scalar::zero(); dim];
                    e[i] = Scalar::from(BigInt::from(1));
                    e
                })
                .collect(),
            facet_normals: Vec::new(),
            basis: Vec::new(),
        });
    }
    // greedy independent basis of the span
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for g in c.generators() {
        let cand = ivec_to_scalars(g);
        let mut m = basis.clone();
        m.push(cand.clone());
        if linalg::rank(&m) > basis.len() {
            basis.push(cand);
        }
    }
    let r = basis.len();
    let span_equations: Vec<Vec<Scalar>> = linalg::nullspace_dim(&basis, dim);
    // generators in span coordinates
    let mcols: Vec<Vec<Scalar>> = (0..dim)
        .map(|row| (0..r).map(|col| basis[col][row].clone()).collect())
        .collect();
    let gens_r: Vec<Point> = c
        .generators()
        .iter()
        .map(|g| {
            Point::new(
                linalg::solve_any(&mcols, &ivec_to_scalars(g))
                    .expect("generator lies in its own span"),
            )
        })
        .collect();
    let facets_r = cone_facets(r, &gens_r);
    // pull facet normals back to ambient coordinates
    let bt_b: Vec<Vec<Scalar>> = (0..r)
        .map(|i| (0..r).map(|j| dot(&basis[i], &basis[j])).collect())
        .collect();
    let mut facet_normals = Vec::new();
    for f in facets_r {
        let y = linalg::solve_square(&bt_b, &f.normal).expect("gram matrix invertible");
        let n: Vec<Scalar> = (0..dim)
            .map(|row| {
                (0..r)
                    .map(|col| &basis[col][row] * &y[col])
                    .fold(Scalar::zero(), |a, t| a + t)
            })
            .collect();
        facet_normals.push(n);
    }
    Ok(ConeGeometry { span_equations, facet_normals, basis })
}

/// Half-open simplicial decomposition of a pointed integer cone whose
/// indicators sum exactly to the cone's indicator.
///
/// Triangulation: placing over the extreme rays in a deterministic order.
/// Facet assignment: a seeded generic interior reference vector; a piece's
/// facet is open exactly when the reference vector lies strictly on its
/// negative side, which makes each internal wall belong to exactly one
/// piece and keeps every outer facet closed.
pub fn decompose_cone(
    c: &IntegerCone,
    seed: u64,
    order: PlacingOrder,
) -> Result<Vec<HalfOpenSimplicialCone>> {
    if c.generators().is_empty() {
        return Ok(vec![HalfOpenSimplicialCone::closed(c.dim(), Vec::new())?]);
    }
    let geom = cone_geometry(c)?;
    let mut rays = c.generators().to_vec();
    if order == PlacingOrder::Reversed {
        rays.reverse();
    }
    // rays in span coordinates
    let rays_r: Vec<Point> = rays
        .iter()
        .map(|g| Point::new(geom.span_coords(&ivec_to_point(g)).expect("ray in span")))
        .collect();
    let r = rays_r.first().map(Point::dim).unwrap_or(0);

    // independent prefix first, so the placing loop is always full-rank
    let mut order_ids: Vec<usize> = Vec::new();
    let mut rest: Vec<usize> = Vec::new();
    let mut span_rows: Vec<Vec<Scalar>> = Vec::new();
    for (i, p) in rays_r.iter().enumerate() {
        let mut m = span_rows.clone();
        m.push(p.coords().to_vec());
        if linalg::rank(&m) > span_rows.len() {
            span_rows.push(p.coords().to_vec());
            order_ids.push(i);
        } else {
            rest.push(i);
        }
    }
    debug_assert_eq!(order_ids.len(), r);
    let prefix = order_ids.clone();
    order_ids.extend(rest);

    let mut simplices: Vec<Vec<usize>> = vec![prefix.clone()];
    let mut placed: Vec<usize> = prefix.clone();
    for &v in &order_ids[r..] {
        let placed_pts: Vec<Point> = placed.iter().map(|&i| rays_r[i].clone()).collect();
        let region_facets = cone_facets(r, &placed_pts);
        let mut new_simplices: Vec<Vec<usize>> = Vec::new();
        for f in &region_facets {
            if !f.slack(&rays_r[v]).is_negative() {
                continue; // not visible from the new ray
            }
            for sigma in &simplices {
                let tau: Vec<usize> = sigma
                    .iter()
                    .copied()
                    .filter(|&i| f.on_boundary(&rays_r[i]))
                    .collect();
                if tau.len() == r - 1 {
                    let mut s = tau;
                    s.push(v);
                    s.sort();
                    if !new_simplices.contains(&s) {
                        new_simplices.push(s);
                    }
                }
            }
        }
        simplices.extend(new_simplices);
        placed.push(v);
    }

    // facet openness by a generic interior reference vector
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'redraw: for _attempt in 0..64 {
        let mut rho = vec![Scalar::zero(); r];
        for p in &rays_r {
            let coef = frac(rng.random_range(1..=97), rng.random_range(1..=89));
            for (i, x) in p.coords().iter().enumerate() {
                rho[i] += x * &coef;
            }
        }
        let mut out = Vec::new();
        for sigma in &simplices {
            let mut open = Vec::with_capacity(sigma.len());
            for (slot, &gi) in sigma.iter().enumerate() {
                let rows: Vec<Vec<Scalar>> = sigma
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != slot)
                    .map(|(_, &j)| rays_r[j].coords().to_vec())
                    .collect();
                let ns = linalg::nullspace_dim(&rows, r);
                debug_assert_eq!(ns.len(), 1);
                let mut normal = ns.into_iter().next().unwrap();
                let s = rays_r[gi].dot(&normal);
                debug_assert!(!s.is_zero());
                if s.is_negative() {
                    for x in normal.iter_mut() {
                        *x = -x.clone();
                    }
                }
                let side = dot(&normal, &rho);
                if side.is_zero() {
                    continue 'redraw;
                }
                open.push(side.is_negative());
            }
            out.push(HalfOpenSimplicialCone::with_open(
                c.dim(),
                sigma.iter().map(|&i| rays[i].clone()).collect(),
                open,
            )?);
        }
        return Ok(out);
    }
    Err(Error::Invariant(
        "reference vector kept hitting facet hyperplanes".into(),
    ))
}

/// `G` of a pointed integer cone: the sum over a half-open decomposition.
pub fn genfun_cone(c: &IntegerCone, seed: u64) -> Result<GenFun> {
    let mut acc = GenFun::zero(c.dim());
    for piece in decompose_cone(c, seed, PlacingOrder::Given)? {
        acc = acc.add(&genfun_simplicial(&piece)?);
    }
    Ok(acc)
}

/// Truncated expansion of a half-open piece's generating function: every
/// monomial `p + sum n_j g_j` with functional value at most `cap`.
pub fn series_oracle_piece(
    c: &HalfOpenSimplicialCone,
    xi: &[Scalar],
    cap: &Scalar,
) -> Result<BTreeMap<IVec, i64>> {
    for g in &c.gens {
        if !dot(&ivec_to_scalars(g), xi).is_positive() {
            return Err(Error::Contract(
                "series truncation needs a functional positive on the generators".into(),
            ));
        }
    }
    let mut out: BTreeMap<IVec, i64> = BTreeMap::new();
    fn rec(
        gens: &[IVec],
        xi: &[Scalar],
        cap: &Scalar,
        cur: IVec,
        cur_xi: Scalar,
        out: &mut BTreeMap<IVec, i64>,
    ) {
        match gens.split_first() {
            None => {
                *out.entry(cur).or_insert(0) += 1;
            }
            Some((g, rest)) => {
                let step = dot(&ivec_to_scalars(g), xi);
                let mut point = cur;
                let mut val = cur_xi;
                loop {
                    if val > *cap {
                        break;
                    }
                    rec(rest, xi, cap, point.clone(), val.clone(), out);
                    for (x, d) in point.iter_mut().zip(g) {
                        *x += d;
                    }
                    val += &step;
                }
            }
        }
    }
    for p in fundamental_parallelepiped(c)? {
        let v = dot(&ivec_to_scalars(&p), xi);
        if v <= *cap {
            rec(&c.gens, xi, cap, p, v, &mut out);
        }
    }
    Ok(out)
}

/// Direct enumeration of the integer points of a half-open piece up to the
/// functional cap (independent of the series expansion above).
pub fn series_oracle_direct(
    c: &HalfOpenSimplicialCone,
    xi: &[Scalar],
    cap: &Scalar,
) -> Result<BTreeMap<IVec, i64>> {
    let (lo, hi) = truncated_cone_box(&c.gens, xi, cap, c.dim)?;
    let mut out = BTreeMap::new();
    for cand in integer_points_in_box(&lo, &hi, crate::geom::DEFAULT_BBOX_CAP)? {
        let x: IVec = cand.iter().map(|b| b.to_i64().unwrap()).collect();
        if dot(&ivec_to_scalars(&x), xi) <= *cap && c.contains_int(&x) {
            *out.entry(x).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// Direct enumeration of the integer points of a pointed cone up to the cap.
pub fn series_oracle_cone(
    c: &IntegerCone,
    xi: &[Scalar],
    cap: &Scalar,
) -> Result<BTreeMap<IVec, i64>> {
    let geom = cone_geometry(c)?;
    let (lo, hi) = truncated_cone_box(c.generators(), xi, cap, c.dim())?;
    let mut out = BTreeMap::new();
    for cand in integer_points_in_box(&lo, &hi, crate::geom::DEFAULT_BBOX_CAP)? {
        let p = Point::new(cand.iter().map(|b| Scalar::from(b.clone())).collect::<Vec<_>>());
        if dot(p.coords(), xi) <= *cap && geom.contains(&p) {
            out.insert(cand.iter().map(|b| b.to_i64().unwrap()).collect(), 1);
        }
    }
    Ok(out)
}

/// Box bounds for `cone ∩ {xi <= cap}`: the slice is the hull of the origin
/// and the scaled generators.
fn truncated_cone_box(
    gens: &[IVec],
    xi: &[Scalar],
    cap: &Scalar,
    dim: usize,
) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    let mut lo = vec![BigInt::zero(); dim];
    let mut hi = vec![BigInt::zero(); dim];
    for g in gens {
        let xg = dot(&ivec_to_scalars(g), xi);
        if !xg.is_positive() {
            return Err(Error::Contract(
                "truncation needs a functional positive on the generators".into(),
            ));
        }
        let lam = cap / xg;
        for i in 0..dim {
            let c = crate::scalar::int(g[i]) * &lam;
            let f = rat_floor(&c);
            let cl = rat_ceil(&c);
            if f < lo[i] {
                lo[i] = f;
            }
            if cl > hi[i] {
                hi[i] = cl;
            }
        }
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::special::genfun_equal;
    use crate::scalar::int;

    #[test]
    fn parallelepiped_examples() {
        // unimodular, all closed: only the origin
        let c = HalfOpenSimplicialCone::closed(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(fundamental_parallelepiped(&c).unwrap(), vec![vec![0, 0]]);
        // generators (1,0),(1,2): |det| = 2
        let c = HalfOpenSimplicialCone::closed(2, vec![vec![1, 0], vec![1, 2]]).unwrap();
        assert_eq!(
            fundamental_parallelepiped(&c).unwrap(),
            vec![vec![0, 0], vec![1, 1]]
        );
        // first facet open: enumeration with t_1 in (0,1] shifts the points
        let c = HalfOpenSimplicialCone::with_open(
            2,
            vec![vec![1, 0], vec![1, 2]],
            vec![true, false],
        )
        .unwrap();
        assert_eq!(
            fundamental_parallelepiped(&c).unwrap(),
            vec![vec![1, 0], vec![1, 1]]
        );
    }

    #[test]
    fn genfun_of_quadrant() {
        let c = IntegerCone::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let g = genfun_cone(&c, 5).unwrap();
        // 1/((1-x)(1-y))
        let want = GenFun {
            nvars: 2,
            terms: vec![GfTerm {
                coef: 1,
                numer: vec![0, 0],
                denom: vec![vec![0, 1], vec![1, 0]],
            }],
            poly: BTreeMap::new(),
        };
        assert!(genfun_equal(&g, &want, 17).unwrap());
    }

    #[test]
    fn simplicial_input_stays_whole_and_closed() {
        let c = IntegerCone::new(2, vec![vec![1, 0], vec![1, 2]]).unwrap();
        let pieces = decompose_cone(&c, 3, PlacingOrder::Given).unwrap();
        assert_eq!(pieces.len(), 1);
        assert!(pieces[0].open.iter().all(|&o| !o));
    }

    #[test]
    fn decomposition_sums_to_cone_indicator() {
        for gens in [
            vec![vec![1, 0], vec![1, 1], vec![0, 1]],
            vec![vec![2, 1], vec![1, 1], vec![1, 3]],
        ] {
            let c = IntegerCone::new(2, gens).unwrap();
            let geom = cone_geometry(&c).unwrap();
            let pieces = decompose_cone(&c, 11, PlacingOrder::Given).unwrap();
            assert_eq!(pieces.len(), 2);
            for x in -4i64..=6 {
                for y in -4i64..=6 {
                    let p = vec![x, y];
                    let want = geom.contains(&ivec_to_point(&p)) as i64;
                    let got: i64 = pieces.iter().map(|s| s.contains_int(&p) as i64).sum();
                    assert_eq!(got, want, "at {p:?}");
                }
            }
        }
    }

    #[test]
    fn cone_over_square_decomposes_exactly() {
        let gens = vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]];
        let c = IntegerCone::new(3, gens).unwrap();
        let geom = cone_geometry(&c).unwrap();
        let pieces = decompose_cone(&c, 23, PlacingOrder::Given).unwrap();
        assert_eq!(pieces.len(), 2);
        for x in -2i64..=3 {
            for y in -2i64..=3 {
                for z in -1i64..=4 {
                    let p = vec![x, y, z];
                    let want = geom.contains(&ivec_to_point(&p)) as i64;
                    let got: i64 = pieces.iter().map(|s| s.contains_int(&p) as i64).sum();
                    assert_eq!(got, want, "at {p:?}");
                }
            }
        }
    }

    #[test]
    fn triangulation_order_independence() {
        let c = IntegerCone::new(2, vec![vec![1, 0], vec![1, 1], vec![0, 1]]).unwrap();
        let a: GenFun = decompose_cone(&c, 5, PlacingOrder::Given)
            .unwrap()
            .iter()
            .fold(GenFun::zero(2), |acc, p| acc.add(&genfun_simplicial(p).unwrap()));
        let b: GenFun = decompose_cone(&c, 5, PlacingOrder::Reversed)
            .unwrap()
            .iter()
            .fold(GenFun::zero(2), |acc, p| acc.add(&genfun_simplicial(p).unwrap()));
        assert!(genfun_equal(&a, &b, 29).unwrap());
    }

    #[test]
    fn series_oracle_agreement() {
        let xi = [int(1), int(1)];
        let cap = int(6);
        for gens in [
            vec![vec![1, 0], vec![1, 2]],
            vec![vec![1, 0], vec![0, 1]],
        ] {
            let c = IntegerCone::new(2, gens).unwrap();
            for piece in decompose_cone(&c, 13, PlacingOrder::Given).unwrap() {
                let by_series = series_oracle_piece(&piece, &xi, &cap).unwrap();
                let by_points = series_oracle_direct(&piece, &xi, &cap).unwrap();
                assert_eq!(by_series, by_points);
            }
        }
    }

    #[test]
    fn quadrant_series_truncation() {
        let c = IntegerCone::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let m = series_oracle_cone(&c, &[int(1), int(1)], &int(2)).unwrap();
        // 1 + x + y + x^2 + xy + y^2
        assert_eq!(m.len(), 6);
        assert!(m.keys().all(|k| k[0] + k[1] <= 2));
    }

    #[test]
    fn lower_dimensional_ray() {
        let c = IntegerCone::new(2, vec![vec![1, 2]]).unwrap();
        let pieces = decompose_cone(&c, 7, PlacingOrder::Given).unwrap();
        assert_eq!(pieces.len(), 1);
        let g = genfun_simplicial(&pieces[0]).unwrap();
        // points on the ray only
        let m = series_oracle_piece(&pieces[0], &[int(1), int(1)], &int(9)).unwrap();
        assert_eq!(m.keys().cloned().collect::<Vec<_>>(), vec![
            vec![0, 0],
            vec![1, 2],
            vec![2, 4],
            vec![3, 6],
        ]);
        assert_eq!(g.terms.len(), 1);
    }

    #[test]
    fn non_pointed_cone_rejected() {
        assert!(IntegerCone::new(1, vec![vec![1], vec![-1]]).is_err());
        assert!(IntegerCone::new(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1]]).is_err());
    }
}
