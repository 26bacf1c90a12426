//! Half-spaces `{x : <normal, x> >= offset}` and affine hyperplane equations.

use num_traits::Zero;

use crate::scalar::{primitive_integer, primitive_sign_fixed, Scalar};

use super::point::{dot, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sense {
    Closed,
    Open,
}

/// `{x : <normal,x> >= offset}` (or strict, for `Sense::Open`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    pub normal: Vec<Scalar>,
    pub offset: Scalar,
    pub sense: Sense,
}

impl HalfSpace {
    pub fn closed(normal: Vec<Scalar>, offset: Scalar) -> Self {
        assert!(normal.iter().any(|c| !c.is_zero()), "zero normal");
        HalfSpace { normal, offset, sense: Sense::Closed }
    }

    pub fn open(normal: Vec<Scalar>, offset: Scalar) -> Self {
        assert!(normal.iter().any(|c| !c.is_zero()), "zero normal");
        HalfSpace { normal, offset, sense: Sense::Open }
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// Same half-space with the normal scaled to a primitive integer vector.
    /// The scaling factor is positive, so the set is unchanged and equal
    /// half-spaces become bit-identical.
    pub fn canonical(&self) -> HalfSpace {
        let p = primitive_integer(&self.normal).expect("zero normal");
        // positive factor f with normal = f * p componentwise
        let i = self.normal.iter().position(|c| !c.is_zero()).unwrap();
        let f = &self.normal[i] / Scalar::from(p[i].clone());
        debug_assert!(num_traits::Signed::is_positive(&f));
        HalfSpace {
            normal: p.into_iter().map(Scalar::from).collect(),
            offset: &self.offset / f,
            sense: self.sense,
        }
    }

    pub fn contains(&self, x: &Point) -> bool {
        let v = x.dot(&self.normal);
        match self.sense {
            Sense::Closed => v >= self.offset,
            Sense::Open => v > self.offset,
        }
    }

    /// Value of the defining functional minus the offset (slack).
    pub fn slack(&self, x: &Point) -> Scalar {
        x.dot(&self.normal) - &self.offset
    }

    pub fn on_boundary(&self, x: &Point) -> bool {
        self.slack(x).is_zero()
    }
}

/// Affine equation `<normal, x> = offset`, canonicalized with a
/// sign-fixed primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Equation {
    pub normal: Vec<Scalar>,
    pub offset: Scalar,
}

impl Equation {
    pub fn new(normal: &[Scalar], through: &Point) -> Self {
        let p = primitive_sign_fixed(normal).expect("zero normal");
        let i = normal.iter().position(|c| !c.is_zero()).unwrap();
        let canon: Vec<Scalar> = p.into_iter().map(Scalar::from).collect();
        let f = &normal[i] / &canon[i];
        let offset = dot(normal, through.coords()) / f;
        Equation { normal: canon, offset }
    }

    pub fn holds(&self, x: &Point) -> bool {
        x.dot(&self.normal) == self.offset
    }
}
