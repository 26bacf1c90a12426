//! Exact-arithmetic computations with coconvex bodies.
//!
//! A coconvex body is the bounded complement `A = C \ (Delta ∪ {0})` of a
//! convex set `Delta` inside a pointed full-dimensional cone `C`. This crate
//! implements the semigroup operation on such bodies, covolumes and their
//! mixed-volume forms with exact signatures, the convex-chain (virtual
//! polytope) calculus, vertex-cone generating functions for the integer
//! points, and the coconvex counting polynomial with its reciprocity
//! evaluation — all over exact rationals, with brute-force oracles at desk
//! scale standing behind every identity.

pub mod error;
pub mod geom;
pub mod linalg;
pub mod scalar;

pub mod body;
pub mod chains;
pub mod ehrhart;
pub mod genfun;
pub mod mixed;
pub mod polygon2d;
pub mod poly;
pub mod acceptance;
pub mod io;
pub mod report;
pub mod samples;

pub use error::{Error, Result};
pub use scalar::Scalar;
