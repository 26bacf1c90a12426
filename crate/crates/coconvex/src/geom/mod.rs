//! Exact rational polyhedral primitives: hulls, dual descriptions,
//! Minkowski sums, volumes, face lattices and lattice-point enumeration.

pub mod faces;
pub mod halfspace;
pub mod hrep;
pub mod hull;
pub mod lattice;
pub mod minkowski;
pub mod point;
pub mod polytope;
pub mod volume;

pub use faces::{face_polytope, faces, Face};
pub use halfspace::{Equation, HalfSpace, Sense};
pub use hrep::{feasible, hrep_to_vrep, HrepResult};
pub use hull::{convex_hull, MAX_DIM};
pub use lattice::{
    integer_points_in_box, lattice_points, polytope_lattice_points, DEFAULT_BBOX_CAP,
};
pub use minkowski::minkowski_sum;
pub use point::{dot, Point};
pub use polytope::Polytope;
pub use volume::{triangulate, volume};
