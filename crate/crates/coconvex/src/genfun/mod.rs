//! Generating functions for integer points: half-open simplicial
//! decompositions of pointed integer cones, vertex tangent-cone sums for
//! integer polytopes, the coconvex variant, specialization and counting.

pub mod brion;
pub mod cones;
pub mod special;

use std::collections::BTreeMap;

use num_traits::Signed as _;

use crate::error::{Error, Result};
use crate::geom::{feasible, HalfSpace, Point};
use crate::scalar::{int, Scalar};

/// Integer exponent/lattice vector.
pub type IVec = Vec<i64>;

pub(crate) fn ivec_to_scalars(v: &IVec) -> Vec<Scalar> {
    v.iter().map(|&x| int(x)).collect()
}

pub(crate) fn ivec_to_point(v: &IVec) -> Point {
    Point::new(ivec_to_scalars(v))
}

pub(crate) fn point_to_ivec(p: &Point) -> Result<IVec> {
    p.to_integers()
        .ok_or_else(|| Error::Contract("expected an integer point".into()))?
        .iter()
        .map(|b| {
            i64::try_from(b).map_err(|_| Error::Capability("coordinate exceeds i64".into()))
        })
        .collect()
}

fn primitive_ivec(v: &IVec) -> Option<IVec> {
    let mut g: i64 = 0;
    for &x in v {
        g = num_integer::gcd(g, x.abs());
    }
    (g != 0).then(|| v.iter().map(|x| x / g).collect())
}

/// One signed term `coef * x^numer / prod_j (1 - x^{denom_j})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfTerm {
    pub coef: i64,
    pub numer: IVec,
    pub denom: Vec<IVec>,
}

/// A multivariate rational generating function: signed cone terms plus an
/// explicit finite polynomial part. The representation is not canonical;
/// equality goes through [`special::genfun_equal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenFun {
    pub nvars: usize,
    pub terms: Vec<GfTerm>,
    pub poly: BTreeMap<IVec, i64>,
}

impl GenFun {
    pub fn zero(nvars: usize) -> Self {
        GenFun { nvars, terms: Vec::new(), poly: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut g = GenFun::zero(nvars);
        if c != 0 {
            g.poly.insert(vec![0; nvars], c);
        }
        g
    }

    pub fn monomial_sum(nvars: usize, monomials: &[IVec]) -> Self {
        let mut g = GenFun::zero(nvars);
        for m in monomials {
            *g.poly.entry(m.clone()).or_insert(0) += 1;
        }
        g.poly.retain(|_, c| *c != 0);
        g
    }

    pub fn add(&self, other: &GenFun) -> GenFun {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        for (m, c) in &other.poly {
            *out.poly.entry(m.clone()).or_insert(0) += c;
        }
        out.poly.retain(|_, c| *c != 0);
        out
    }

    pub fn negate(&self) -> GenFun {
        GenFun {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| GfTerm { coef: -t.coef, numer: t.numer.clone(), denom: t.denom.clone() })
                .collect(),
            poly: self.poly.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^a` (shifts every numerator).
    pub fn shift(&self, a: &IVec) -> GenFun {
        let add = |m: &IVec| -> IVec { m.iter().zip(a).map(|(x, y)| x + y).collect() };
        GenFun {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| GfTerm { coef: t.coef, numer: add(&t.numer), denom: t.denom.clone() })
                .collect(),
            poly: self.poly.iter().map(|(m, c)| (add(m), *c)).collect(),
        }
    }

    /// Stable text rendering:
    /// `+ x^(a1,...,ad) / (1-x^(b11,...)) (1-x^(b21,...)) ...`.
    pub fn render(&self) -> Vec<String> {
        let fmt_vec = |v: &IVec| {
            let inner: Vec<String> = v.iter().map(i64::to_string).collect();
            format!("({})", inner.join(","))
        };
        let mut lines = Vec::new();
        for t in &self.terms {
            let sign = if t.coef < 0 { '-' } else { '+' };
            let mag = t.coef.abs();
            let mut s = if mag == 1 {
                format!("{sign} x^{}", fmt_vec(&t.numer))
            } else {
                format!("{sign} {mag} x^{}", fmt_vec(&t.numer))
            };
            if !t.denom.is_empty() {
                s.push_str(" /");
                for b in &t.denom {
                    s.push_str(&format!(" (1-x^{})", fmt_vec(b)));
                }
            }
            lines.push(s);
        }
        for (m, c) in &self.poly {
            let sign = if *c < 0 { '-' } else { '+' };
            let mag = c.abs();
            if mag == 1 {
                lines.push(format!("{sign} x^{}", fmt_vec(m)));
            } else {
                lines.push(format!("{sign} {mag} x^{}", fmt_vec(m)));
            }
        }
        if lines.is_empty() {
            lines.push("0".into());
        }
        lines
    }
}

/// A pointed cone generated by primitive integer vectors. May be
/// lower-dimensional (a face of a polytope generates one); the trivial
/// cone `{0}` has no generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerCone {
    dim: usize,
    gens: Vec<IVec>,
}

impl IntegerCone {
    pub fn new(dim: usize, gens: Vec<IVec>) -> Result<Self> {
        crate::geom::hull::check_dim(dim)?;
        // primitive generators, deduplicated, in the order given: the
        // placing triangulation is defined over this sequence
        let mut out: Vec<IVec> = Vec::new();
        for g in &gens {
            if g.len() != dim {
                return Err(Error::Contract("generator dimension mismatch".into()));
            }
            let p = primitive_ivec(g)
                .ok_or_else(|| Error::Validation("zero cone generator".into()))?;
            if !out.contains(&p) {
                out.push(p);
            }
        }
        let cone = IntegerCone { dim, gens: out };
        if !cone.is_pointed() {
            return Err(Error::Validation("integer cone is not pointed".into()));
        }
        Ok(cone)
    }

    pub fn trivial(dim: usize) -> Self {
        IntegerCone { dim, gens: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[IVec] {
        &self.gens
    }

    /// Pointedness certificate: a functional strictly positive on every
    /// generator exists iff the cone contains no line.
    fn is_pointed(&self) -> bool {
        if self.gens.is_empty() {
            return true;
        }
        let sys: Vec<HalfSpace> = self
            .gens
            .iter()
            .map(|g| HalfSpace::closed(ivec_to_scalars(g), int(1)))
            .collect();
        feasible(self.dim, &sys).unwrap_or(false)
    }
}

/// A simplicial cone with independent integer generators, some of whose
/// facets are marked open: facet `i` is the span of the generators other
/// than `g_i`, and marking it open requires `t_i > 0` in the unique
/// expansion `x = sum t_j g_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfOpenSimplicialCone {
    pub dim: usize,
    pub gens: Vec<IVec>,
    pub open: Vec<bool>,
}

/// The tangent cone of a polyhedron at a vertex.
#[derive(Clone, Debug)]
pub struct TangentConeAt {
    pub vertex: IVec,
    pub cone: IntegerCone,
}

pub use brion::{
    brion_convex, genfun_coconvex, genfun_coconvex_via_truncation, genfun_enumeration_body,
    genfun_enumeration_polytope, tangent_cone, tangent_cone_of_delta,
};
pub use cones::{
    decompose_cone, fundamental_parallelepiped, genfun_cone, genfun_simplicial,
    series_oracle_cone, series_oracle_direct, series_oracle_piece, PlacingOrder,
};
pub use special::{count_points, generic_weights, genfun_equal, specialize, RatFun, UniPoly};
