//! The polytope type: canonical V- and H-representations together.

use crate::scalar::Scalar;

use super::halfspace::{Equation, HalfSpace, Sense};
use super::point::Point;

/// A (possibly lower-dimensional) bounded convex polytope.
///
/// * `vertices` are exactly the extreme points, sorted.
/// * `equations` cut out the affine hull (empty iff full-dimensional).
/// * `facets` are irredundant closed half-spaces; within the affine hull
///   they carve out the polytope. Normals are primitive integer vectors, so
///   two equal polytopes have bit-identical representations.
///
/// Construct via [`super::hull::convex_hull`]; the invariants are upheld
/// there and nothing here mutates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Point>,
    equations: Vec<Equation>,
    facets: Vec<HalfSpace>,
}

impl Polytope {
    pub(crate) fn from_parts(
        dim: usize,
        vertices: Vec<Point>,
        equations: Vec<Equation>,
        facets: Vec<HalfSpace>,
    ) -> Self {
        Polytope { dim, vertices, equations, facets }
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the affine hull.
    pub fn rel_dim(&self) -> usize {
        self.dim - self.equations.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    /// Affine-hull descriptor: equations satisfied by every point.
    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn contains(&self, x: &Point) -> bool {
        self.equations.iter().all(|e| e.holds(x))
            && self.facets.iter().all(|f| f.contains(x))
    }

    /// Interior in the ambient space: empty for lower-dimensional polytopes.
    pub fn interior_contains(&self, x: &Point) -> bool {
        self.is_full_dimensional()
            && self
                .facets
                .iter()
                .all(|f| num_traits::Signed::is_positive(&f.slack(x)))
    }

    /// Relative interior (interior within the affine hull).
    pub fn relative_interior_contains(&self, x: &Point) -> bool {
        self.equations.iter().all(|e| e.holds(x))
            && self
                .facets
                .iter()
                .all(|f| num_traits::Signed::is_positive(&f.slack(x)))
    }

    /// Barycenter of the vertex set; lies in the relative interior.
    pub fn barycenter(&self) -> Point {
        let n = Scalar::from(num_bigint::BigInt::from(self.vertices.len() as i64));
        let mut acc = Point::zero(self.dim);
        for v in &self.vertices {
            acc = acc.add(v);
        }
        acc.scale(&(Scalar::from(num_bigint::BigInt::from(1)) / n))
    }

    /// The reflection `{-x : x in P}`.
    pub fn antipode(&self) -> Polytope {
        let vertices: Vec<Point> = self.vertices.iter().map(Point::neg).collect();
        super::hull::convex_hull(self.dim, &vertices)
            .expect("antipode of a valid polytope is valid")
    }

    /// Coordinatewise bounding box `(floor(min), ceil(max))` over vertices.
    pub fn bounding_box(&self) -> (Vec<num_bigint::BigInt>, Vec<num_bigint::BigInt>) {
        let d = self.dim;
        let mut lo = Vec::with_capacity(d);
        let mut hi = Vec::with_capacity(d);
        for i in 0..d {
            let min = self.vertices.iter().map(|v| v.coord(i)).min().unwrap();
            let max = self.vertices.iter().map(|v| v.coord(i)).max().unwrap();
            lo.push(crate::scalar::rat_floor(min));
            hi.push(crate::scalar::rat_ceil(max));
        }
        (lo, hi)
    }

    /// Translate by `t`.
    pub fn translate(&self, t: &Point) -> Polytope {
        let vertices: Vec<Point> = self.vertices.iter().map(|v| v.add(t)).collect();
        let equations = vertices
            .first()
            .map(|_| {
                self.equations
                    .iter()
                    .map(|e| Equation {
                        normal: e.normal.clone(),
                        offset: &e.offset + super::point::dot(&e.normal, t.coords()),
                    })
                    .collect()
            })
            .unwrap_or_default();
        let facets = self
            .facets
            .iter()
            .map(|f| HalfSpace {
                normal: f.normal.clone(),
                offset: &f.offset + super::point::dot(&f.normal, t.coords()),
                sense: Sense::Closed,
            })
            .collect();
        Polytope { dim: self.dim, vertices, equations, facets }
    }

    /// Dilate by a positive rational factor.
    pub fn dilate(&self, by: &Scalar) -> Polytope {
        assert!(num_traits::Signed::is_positive(by));
        let vertices: Vec<Point> = self.vertices.iter().map(|v| v.scale(by)).collect();
        super::hull::convex_hull(self.dim, &vertices).expect("dilate of a valid polytope")
    }
}
