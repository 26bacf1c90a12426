//! Points of Q^d, used both for locations and directions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::scalar::{int, Scalar};

/// A point (or vector) with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<Scalar>,
}

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        assert!(!coords.is_empty(), "points need dimension >= 1");
        Point { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Point::new(vec![Scalar::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Point) -> Point {
        assert_eq!(self.dim(), other.dim());
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Point) -> Point {
        assert_eq!(self.dim(), other.dim());
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Point {
        Point::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, by: &Scalar) -> Point {
        Point::new(self.coords.iter().map(|a| a * by).collect())
    }

    pub fn dot(&self, other: &[Scalar]) -> Scalar {
        assert_eq!(self.dim(), other.len());
        self.coords
            .iter()
            .zip(other)
            .map(|(a, b)| a * b)
            .fold(Scalar::zero(), |acc, t| acc + t)
    }

    /// Integer coordinates if every coordinate is an integer.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coords
            .iter()
            .map(|c| num_traits::One::is_one(c.denom()).then(|| c.numer().clone()))
            .collect()
    }

    pub fn is_integer(&self) -> bool {
        self.coords.iter().all(|c| num_traits::One::is_one(c.denom()))
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x * y)
        .fold(Scalar::zero(), |acc, t| acc + t)
}
