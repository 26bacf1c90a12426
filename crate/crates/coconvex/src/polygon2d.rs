//! Plane coconvex polygons from edge normals and support offsets, their
//! triangle decomposition, and the exact sum-of-squares form of the area.
//!
//! Setup: the wedge cone has the positive x-axis as its lower boundary ray
//! and a second primitive integer generator `w` in the open upper
//! half-plane. Edges are listed right to left; edge `k` lies on the line
//! `<u_k, x> = h_k`.
//!
//! Dictionary to the classical angle picture: if `theta_k` is the angle
//! between edge line `k` and the x-axis (measured so that it increases
//! right to left), the normal is `u_k ∝ (sin theta_k, cos theta_k)`; the
//! artifact's offset relates to the Euclidean support distance by
//! `h_k = |u_k| * dist_k`, and the paper-style quotient
//! `dist_k / sin theta_k` is exactly `h_k / u_{k,1}`, the x-intercept of
//! the edge line. Increasing angles mean the normal vectors rotate
//! clockwise: `cross(u_k, u_{k+1}) < 0`. Every triangle of the
//! decomposition fans down to the x-axis ray; its base is the difference
//! of consecutive x-intercepts.

use num_traits::{One, Signed, Zero};

use crate::body::{make_body, oplus, CoconvexBody};
use crate::error::{Error, Result};
use crate::geom::{convex_hull, Point, Polytope};
use crate::linalg;
use crate::mixed::Inertia;
use crate::poly::MPoly;
use crate::report::{Check, Status};
use crate::scalar::{format_rational, int, rat_ceil, Scalar};

/// Fixed edge directions over a wedge: `n` primitive integer normals with
/// positive coordinates, strictly ordered by increasing edge angle
/// (clockwise-rotating normals), each pairing positively with the wedge
/// generator.
#[derive(Clone, Debug)]
pub struct WedgeFamily {
    wedge: Point,
    normals: Vec<Point>,
}

fn cross2(a: &Point, b: &Point) -> Scalar {
    a.coord(0) * b.coord(1) - a.coord(1) * b.coord(0)
}

impl WedgeFamily {
    pub fn new(wedge: Point, normals: Vec<Point>) -> Result<Self> {
        if wedge.dim() != 2 || normals.iter().any(|u| u.dim() != 2) {
            return Err(Error::Contract("wedge data must be planar".into()));
        }
        if !wedge.coord(1).is_positive() {
            return Err(Error::Validation(
                "wedge generator must point into the open upper half-plane".into(),
            ));
        }
        if !wedge.is_integer()
            || crate::scalar::primitive_integer(wedge.coords())
                .map(|p| p.iter().zip(wedge.coords()).any(|(a, b)| &Scalar::from(a.clone()) != b))
                .unwrap_or(true)
        {
            return Err(Error::Validation("wedge generator must be primitive integer".into()));
        }
        if normals.is_empty() {
            return Err(Error::Validation("at least one edge normal".into()));
        }
        for u in &normals {
            if !u.coord(0).is_positive() || !u.coord(1).is_positive() {
                return Err(Error::Validation(
                    "edge normals must have positive coordinates".into(),
                ));
            }
            if !u.is_integer()
                || crate::scalar::primitive_integer(u.coords())
                    .map(|p| p.iter().zip(u.coords()).any(|(a, b)| &Scalar::from(a.clone()) != b))
                    .unwrap_or(true)
            {
                return Err(Error::Validation("edge normals must be primitive integer".into()));
            }
            if !u.dot(wedge.coords()).is_positive() {
                return Err(Error::Validation(
                    "every edge line must cross the wedge generator ray".into(),
                ));
            }
        }
        for k in 0..normals.len() - 1 {
            if !cross2(&normals[k], &normals[k + 1]).is_negative() {
                return Err(Error::Validation(format!(
                    "normals {} and {} are not in increasing edge-angle order",
                    k + 1,
                    k + 2
                )));
            }
        }
        Ok(WedgeFamily { wedge, normals })
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn wedge_generator(&self) -> &Point {
        &self.wedge
    }

    pub fn normals(&self) -> &[Point] {
        &self.normals
    }

    pub fn cone_generators(&self) -> Vec<Point> {
        vec![Point::from_ints(&[1, 0]), self.wedge.clone()]
    }

    /// A functional strictly positive on the wedge.
    pub fn xi(&self) -> Vec<Scalar> {
        // (w2, b) with b > -w1 pairs positively with both rays
        let b = std::cmp::max(
            num_bigint::BigInt::one(),
            rat_ceil(&-self.wedge.coord(0)) + 1,
        );
        vec![self.wedge.coord(1).clone(), Scalar::from(b)]
    }

    /// Traversal direction of edge `k` (right to left along the chain).
    fn direction(&self, k: usize) -> Point {
        let u = &self.normals[k];
        Point::new(vec![-u.coord(1).clone(), u.coord(0).clone()])
    }

    /// Chain vertices `v_0, ..., v_n` for `h`, validating membership in the
    /// region of valid support vectors and naming the first violated
    /// condition.
    pub fn chain(&self, h: &[Scalar]) -> Result<Vec<Point>> {
        let n = self.normals.len();
        if h.len() != n {
            return Err(Error::Contract("one support offset per edge".into()));
        }
        for (k, hk) in h.iter().enumerate() {
            if !hk.is_positive() {
                return Err(Error::Validation(format!(
                    "chain condition violated: edge {} has nonpositive offset",
                    k + 1
                )));
            }
        }
        let mut vs = Vec::with_capacity(n + 1);
        vs.push(Point::new(vec![&h[0] / self.normals[0].coord(0), Scalar::zero()]));
        for k in 0..n - 1 {
            let m = vec![
                self.normals[k].coords().to_vec(),
                self.normals[k + 1].coords().to_vec(),
            ];
            let x = linalg::solve_square(&m, &[h[k].clone(), h[k + 1].clone()])
                .expect("consecutive normals are independent");
            vs.push(Point::new(x));
        }
        let mu = &h[n - 1] / self.normals[n - 1].dot(self.wedge.coords());
        vs.push(self.wedge.scale(&mu));
        for k in 1..=n {
            let delta = vs[k].sub(&vs[k - 1]);
            let d = self.direction(k - 1);
            debug_assert!(cross2(&delta, &d).is_zero());
            if !delta.dot(d.coords()).is_positive() {
                return Err(Error::Validation(format!(
                    "chain condition violated: edge {} has nonpositive length along the chain",
                    k
                )));
            }
        }
        let facet_w = vec![self.wedge.coord(1).clone(), -self.wedge.coord(0).clone()];
        for (k, v) in vs.iter().enumerate().take(n).skip(1) {
            let inside = v.coord(1).is_positive() && v.dot(&facet_w).is_positive();
            if !inside {
                return Err(Error::Validation(format!(
                    "chain condition violated: vertex {k} leaves the wedge interior"
                )));
            }
        }
        Ok(vs)
    }
}

/// The coconvex polygon with the prescribed edge normals and offsets.
pub fn build_polygon(fam: &WedgeFamily, h: &[Scalar]) -> Result<CoconvexBody> {
    let chain = fam.chain(h)?;
    let body = make_body(&fam.cone_generators(), &chain, &fam.xi())?;
    // the prescribed lines must all survive as facets of delta
    for (k, u) in fam.normals.iter().enumerate() {
        let present = body
            .delta()
            .facets()
            .iter()
            .any(|f| f.normal == u.coords() && f.offset == h[k]);
        if !present {
            return Err(Error::Invariant(format!(
                "edge {} did not appear as a facet of the built polygon",
                k + 1
            )));
        }
    }
    Ok(body)
}

/// Support numbers add under the semigroup operation:
/// `polygon(h) ⊕ polygon(h') = polygon(h + h')`.
pub fn additivity_check(fam: &WedgeFamily, h: &[Scalar], h2: &[Scalar]) -> Result<Check> {
    let a = build_polygon(fam, h)?;
    let b = build_polygon(fam, h2)?;
    let hs: Vec<Scalar> = h.iter().zip(h2).map(|(x, y)| x + y).collect();
    let direct = build_polygon(fam, &hs)?;
    let summed = oplus(&a, &b)?;
    let mut check = Check::pass("polygon2d-additivity");
    if summed != direct {
        check.status = Status::Fail;
        let witness = summed
            .delta()
            .base_points()
            .iter()
            .find(|p| !direct.delta().base_points().contains(p))
            .or_else(|| {
                direct
                    .delta()
                    .base_points()
                    .iter()
                    .find(|p| !summed.delta().base_points().contains(p))
            });
        if let Some(w) = witness {
            check.note(
                "witness_vertex",
                format!(
                    "({},{})",
                    format_rational(w.coord(0)),
                    format_rational(w.coord(1))
                ),
            );
        }
    }
    Ok(check)
}

/// The triangles tiling a coconvex polygon, in family form: positive
/// factors `c_k` and linear base-length forms `lambda_k(h)` with
/// `area(T_k) = c_k lambda_k(h)^2`.
#[derive(Clone, Debug)]
pub struct TriangleDecomposition {
    pub coefficients: Vec<Scalar>,
    pub base_forms: Vec<Vec<Scalar>>,
}

impl TriangleDecomposition {
    /// `sum_k c_k lambda_k(h)^2` as a polynomial in `h`.
    pub fn quadratic_form(&self, nvars: usize) -> MPoly {
        let mut acc = MPoly::zero(nvars);
        for (c, form) in self.coefficients.iter().zip(&self.base_forms) {
            let lin = MPoly::from_terms(
                nvars,
                form.iter()
                    .enumerate()
                    .map(|(i, a)| {
                        let mut e = vec![0u32; nvars];
                        e[i] = 1;
                        (e, a.clone())
                    })
                    .collect(),
            );
            // c * lin^2
            let mut sq = MPoly::zero(nvars);
            for (e1, a1) in lin.terms() {
                for (e2, a2) in lin.terms() {
                    let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                    sq = sq.add(&MPoly::from_terms(nvars, vec![(e, a1 * a2)]));
                }
            }
            acc = acc.add(&sq.scale(c));
        }
        acc
    }

    /// Gram matrix of the form and its inertia.
    pub fn inertia(&self) -> Inertia {
        let n = self.base_forms.first().map(Vec::len).unwrap_or(0);
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (c, f) in self.coefficients.iter().zip(&self.base_forms) {
            for i in 0..n {
                for j in 0..n {
                    m[i][j] += c * &f[i] * &f[j];
                }
            }
        }
        let (positive, negative, zero) = linalg::inertia(&m);
        Inertia { positive, negative, zero }
    }

    pub fn eval_form(&self, h: &[Scalar]) -> Scalar {
        self.coefficients
            .iter()
            .zip(&self.base_forms)
            .map(|(c, f)| {
                let l = crate::geom::dot(f, h);
                c * &l * &l
            })
            .fold(Scalar::zero(), |a, t| a + t)
    }

    pub fn bilinear(&self, h: &[Scalar], h2: &[Scalar]) -> Scalar {
        self.coefficients
            .iter()
            .zip(&self.base_forms)
            .map(|(c, f)| c * crate::geom::dot(f, h) * crate::geom::dot(f, h2))
            .fold(Scalar::zero(), |a, t| a + t)
    }

    /// Concrete triangles for a valid `h`: `T_k` has its base on the x-axis
    /// between consecutive intercepts and its apex at chain vertex `v_k`
    /// (the wedge apex for the last one).
    pub fn triangles(&self, fam: &WedgeFamily, h: &[Scalar]) -> Result<Vec<Polytope>> {
        let chain = fam.chain(h)?;
        let n = fam.len();
        let intercept =
            |k: usize| -> Scalar { &h[k] / fam.normals()[k].coord(0) };
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let right = Point::new(vec![intercept(k), Scalar::zero()]);
            let left = if k + 1 < n {
                Point::new(vec![intercept(k + 1), Scalar::zero()])
            } else {
                Point::zero(2)
            };
            out.push(convex_hull(2, &[right, left, chain[k + 1].clone()])?);
        }
        Ok(out)
    }
}

/// Exact triangle data of a wedge family: base forms are differences of
/// consecutive intercept functionals (the last one keeps only its own
/// term), and the positive factors come from the fixed triangle shapes.
pub fn sos_decomposition(fam: &WedgeFamily) -> Result<TriangleDecomposition> {
    let n = fam.len();
    let mut coefficients = Vec::with_capacity(n);
    let mut base_forms = Vec::with_capacity(n);
    for k in 0..n {
        let u = &fam.normals()[k];
        let mut form = vec![Scalar::zero(); n];
        form[k] = u.coord(0).recip();
        if k + 1 < n {
            let unext = &fam.normals()[k + 1];
            form[k + 1] = -unext.coord(0).recip();
            let cr = cross2(u, unext);
            coefficients.push(-(u.coord(0) * unext.coord(0)) / (int(2) * cr));
        } else {
            let w = fam.wedge_generator();
            coefficients.push(
                (u.coord(0) * w.coord(1)) / (int(2) * u.dot(w.coords())),
            );
        }
        base_forms.push(form);
    }
    debug_assert!(coefficients.iter().all(Signed::is_positive));
    Ok(TriangleDecomposition { coefficients, base_forms })
}

/// A deterministic valid support vector: the chain that walks one unit of
/// each edge direction, anchored so the last vertex lands on the wedge ray.
pub fn reference_support_vector(fam: &WedgeFamily) -> Vec<Scalar> {
    let n = fam.len();
    let w = fam.wedge_generator();
    let mut sum_u1 = Scalar::zero();
    let mut sum_u2 = Scalar::zero();
    for u in fam.normals() {
        sum_u1 += u.coord(0);
        sum_u2 += u.coord(1);
    }
    let s = &sum_u2 + w.coord(0) * &sum_u1 / w.coord(1);
    let mut q = Point::new(vec![s, Scalar::zero()]);
    let mut h = Vec::with_capacity(n);
    for k in 0..n {
        h.push(fam.normals()[k].dot(q.coords()));
        let u = &fam.normals()[k];
        q = q.add(&Point::new(vec![-u.coord(1).clone(), u.coord(0).clone()]));
    }
    h
}

/// Coefficient-wise identity between the covolume quadratic form and the
/// sum of squares, plus its positive-definiteness.
pub fn sos_check(fam: &WedgeFamily) -> Result<Check> {
    let n = fam.len();
    let dec = sos_decomposition(fam)?;
    let sos_poly = dec.quadratic_form(n);

    // recover the covolume quadratic form from exact second differences
    // around a valid anchor; the mixed terms of a quadratic cancel the
    // anchor exactly at any step size that stays valid
    let h0 = reference_support_vector(fam);
    let mut eps = Scalar::one();
    let covol = 'found: loop {
        let probe = |delta: &[usize]| -> Vec<Scalar> {
            let mut h = h0.clone();
            for &i in delta {
                h[i] = &h[i] + &eps;
            }
            h
        };
        let mut samples: Vec<Vec<usize>> = vec![vec![]];
        for i in 0..n {
            samples.push(vec![i]);
            for j in i..n {
                samples.push(vec![i, j]);
            }
        }
        let mut values = Vec::new();
        let mut valid = true;
        for s in &samples {
            match build_polygon(fam, &probe(s)) {
                Ok(body) => values.push(body.covolume()?),
                Err(Error::Validation(_)) => {
                    valid = false;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if valid {
            let value_of = |s: &[usize]| -> &Scalar {
                &values[samples.iter().position(|t| t == s).unwrap()]
            };
            let eps2 = &eps * &eps;
            let mut terms = Vec::new();
            for i in 0..n {
                for j in i..n {
                    let fij = value_of(&[i, j]);
                    let fi = value_of(&[i]);
                    let fj = value_of(&[j]);
                    let f0 = value_of(&[]);
                    // for i == j this is q(2 e_i eps) / 4-style; directly:
                    // F(ei+ej) - F(ei) - F(ej) + F(0) = 2 eps^2 B_ij
                    let b = (fij - fi - fj + f0) / (int(2) * &eps2);
                    let mut e = vec![0u32; n];
                    e[i] += 1;
                    e[j] += 1;
                    let coeff = if i == j { b.clone() } else { int(2) * &b };
                    terms.push((e, coeff));
                }
            }
            break 'found MPoly::from_terms(n, terms);
        }
        eps = eps / int(2);
        if eps < crate::scalar::frac(1, 4096) {
            return Err(Error::Invariant(
                "no valid step size for the quadratic recovery".into(),
            ));
        }
    };

    let mut check = Check::pass("polygon2d-sos");
    let inertia = dec.inertia();
    check.note(
        "inertia",
        format!("({},{},{})", inertia.positive, inertia.negative, inertia.zero),
    );
    if covol != sos_poly {
        check.status = Status::Fail;
        check.note("reason", "covolume form differs from the sum of squares");
        check.note("covolume_form", covol.display("h"));
        check.note("sos_form", sos_poly.display("h"));
        return Ok(check);
    }
    if inertia != (Inertia { positive: n, negative: 0, zero: 0 }) {
        check.status = Status::Fail;
        check.note("reason", "sum-of-squares form is not positive definite");
    }
    Ok(check)
}

/// The plane reversed Aleksandrov-Fenchel inequality on the SOS form:
/// `B(h,h')^2 <= Vol(h) Vol(h')`, exact, with equality exactly for
/// proportional support vectors.
pub fn reversed_af_d2(fam: &WedgeFamily, h: &[Scalar], h2: &[Scalar]) -> Result<Check> {
    fam.chain(h)?;
    fam.chain(h2)?;
    let dec = sos_decomposition(fam)?;
    let b = dec.bilinear(h, h2);
    let lhs = &b * &b;
    let rhs = dec.eval_form(h) * dec.eval_form(h2);
    let mut check = Check::pass("polygon2d-reversed-af");
    check.note("lhs", format_rational(&lhs));
    check.note("rhs", format_rational(&rhs));
    if lhs > rhs {
        check.status = Status::Fail;
        check.note("reason", "reversed inequality violated");
        return Ok(check);
    }
    let proportional = {
        let mut ok = true;
        'outer: for i in 0..h.len() {
            for j in 0..h.len() {
                if &h[i] * &h2[j] != &h[j] * &h2[i] {
                    ok = false;
                    break 'outer;
                }
            }
        }
        ok
    };
    check.note("equality", (lhs == rhs).to_string());
    if (lhs == rhs) != proportional {
        check.status = Status::Fail;
        check.note(
            "reason",
            "equality should hold exactly for proportional support vectors",
        );
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    fn fam_quadrant_n1() -> WedgeFamily {
        WedgeFamily::new(Point::from_ints(&[0, 1]), vec![Point::from_ints(&[1, 1])]).unwrap()
    }

    fn fam_quadrant_n2() -> WedgeFamily {
        WedgeFamily::new(
            Point::from_ints(&[0, 1]),
            vec![Point::from_ints(&[1, 2]), Point::from_ints(&[1, 1])],
        )
        .unwrap()
    }

    fn fam_wide_n3() -> WedgeFamily {
        WedgeFamily::new(
            Point::from_ints(&[-1, 2]),
            vec![
                Point::from_ints(&[1, 3]),
                Point::from_ints(&[2, 3]),
                Point::from_ints(&[1, 1]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn single_edge_staircase() {
        let fam = fam_quadrant_n1();
        let body = build_polygon(&fam, &[int(2)]).unwrap();
        assert_eq!(body.covolume().unwrap(), int(2));
        assert_eq!(
            body.delta().base_points(),
            &[Point::from_ints(&[0, 2]), Point::from_ints(&[2, 0])][..]
        );
    }

    #[test]
    fn two_edge_polygon() {
        let fam = fam_quadrant_n2();
        let body = build_polygon(&fam, &[int(3), int(2)]).unwrap();
        assert_eq!(
            body.delta().base_points(),
            &[
                Point::from_ints(&[0, 2]),
                Point::from_ints(&[1, 1]),
                Point::from_ints(&[3, 0])
            ][..]
        );
    }

    #[test]
    fn crossed_chain_rejected_with_named_condition() {
        let fam = fam_quadrant_n2();
        let err = build_polygon(&fam, &[int(3), int(5)]).unwrap_err();
        assert!(matches!(err, Error::Validation(msg) if msg.contains("edge 1")));
    }

    #[test]
    fn unordered_normals_rejected() {
        assert!(WedgeFamily::new(
            Point::from_ints(&[0, 1]),
            vec![Point::from_ints(&[1, 1]), Point::from_ints(&[1, 2])],
        )
        .is_err());
    }

    #[test]
    fn additivity() {
        let fam = fam_quadrant_n1();
        let c = additivity_check(&fam, &[int(2)], &[int(4)]).unwrap();
        assert_eq!(c.status, Status::Pass);
        let fam3 = fam_wide_n3();
        let h = reference_support_vector(&fam3);
        let h2: Vec<Scalar> = h.iter().map(|x| x * frac(3, 2)).collect();
        let c = additivity_check(&fam3, &h, &h2).unwrap();
        assert_eq!(c.status, Status::Pass, "{:?}", c.details);
        // h' = 0 is not a valid support vector
        assert!(build_polygon(&fam, &[int(0)]).is_err());
    }

    #[test]
    fn sos_identity_n1() {
        let fam = fam_quadrant_n1();
        let dec = sos_decomposition(&fam).unwrap();
        assert_eq!(dec.coefficients, vec![frac(1, 2)]);
        assert_eq!(dec.base_forms, vec![vec![int(1)]]);
        let c = sos_check(&fam).unwrap();
        assert_eq!(c.status, Status::Pass, "{:?}", c.details);
    }

    #[test]
    fn sos_identity_n2_and_n3() {
        for fam in [fam_quadrant_n2(), fam_wide_n3()] {
            let c = sos_check(&fam).unwrap();
            assert_eq!(c.status, Status::Pass, "{:?}", c.details);
        }
    }

    #[test]
    fn tiling_matches_covolume() {
        let fam = fam_wide_n3();
        let dec = sos_decomposition(&fam).unwrap();
        for scale in [int(1), frac(5, 3)] {
            let h: Vec<Scalar> =
                reference_support_vector(&fam).iter().map(|x| x * &scale).collect();
            let body = build_polygon(&fam, &h).unwrap();
            let total: Scalar = dec
                .triangles(&fam, &h)
                .unwrap()
                .iter()
                .map(volume)
                .fold(Scalar::zero(), |a, t| a + t);
            assert_eq!(total, body.covolume().unwrap());
            assert_eq!(total, dec.eval_form(&h));
        }
    }

    #[test]
    fn triangles_are_similar_across_support_vectors() {
        let fam = fam_quadrant_n2();
        let h1 = reference_support_vector(&fam);
        let h2: Vec<Scalar> = vec![int(3), int(2)];
        let dec = sos_decomposition(&fam).unwrap();
        let t1 = dec.triangles(&fam, &h1).unwrap();
        let t2 = dec.triangles(&fam, &h2).unwrap();
        for (k, (a, b)) in t1.iter().zip(&t2).enumerate() {
            let ratio = crate::geom::dot(&dec.base_forms[k], &h1)
                / crate::geom::dot(&dec.base_forms[k], &h2);
            // vertex triples are ordered the same way by construction
            let a0 = &a.vertices()[0];
            let b0 = &b.vertices()[0];
            for (va, vb) in a.vertices().iter().zip(b.vertices()) {
                let da = va.sub(a0);
                let db = vb.sub(b0).scale(&ratio);
                assert_eq!(da, db, "triangle {k}");
            }
        }
    }

    #[test]
    fn reversed_af_plane() {
        let fam = fam_quadrant_n2();
        let h = reference_support_vector(&fam);
        // homothetic pair: equality
        let h2: Vec<Scalar> = h.iter().map(|x| x * int(3)).collect();
        let c = reversed_af_d2(&fam, &h, &h2).unwrap();
        assert_eq!(c.status, Status::Pass, "{:?}", c.details);
        assert!(c.details.iter().any(|(k, v)| k == "equality" && v == "true"));
        // independent pair: strict
        let h3 = vec![int(4), frac(5, 2)];
        let c = reversed_af_d2(&fam, &h, &h3).unwrap();
        assert_eq!(c.status, Status::Pass, "{:?}", c.details);
        assert!(c.details.iter().any(|(k, v)| k == "equality" && v == "false"));
        // rank-1 case: always equality
        let f1 = fam_quadrant_n1();
        let c = reversed_af_d2(&f1, &[int(2)], &[int(5)]).unwrap();
        assert_eq!(c.status, Status::Pass, "{:?}", c.details);
    }
}
