//! Integer-point enumeration over boxes and polytopes.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::point::Point;
use super::polytope::Polytope;

/// Default cap on enumerated box volume.
pub const DEFAULT_BBOX_CAP: u64 = 4_000_000;

/// All integer points of the box `[lo, hi]`, in lexicographic order.
pub fn integer_points_in_box(
    lo: &[BigInt],
    hi: &[BigInt],
    cap: u64,
) -> Result<Vec<Vec<BigInt>>> {
    assert_eq!(lo.len(), hi.len());
    let mut size = BigInt::one();
    for (a, b) in lo.iter().zip(hi) {
        if b < a {
            return Ok(Vec::new());
        }
        size *= b - a + 1;
    }
    if size > BigInt::from(cap) {
        return Err(Error::Capability(format!(
            "bounding box holds {size} integer points, over the cap {cap}"
        )));
    }
    let total = size.to_usize().unwrap();
    let mut out = Vec::with_capacity(total);
    let mut cur = lo.to_vec();
    loop {
        out.push(cur.clone());
        // odometer increment, last coordinate fastest would break lex order,
        // so increment from the right but treat the vector as little-endian
        // in reverse: bump the last coordinate, carry leftwards
        let mut i = cur.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                for j in i + 1..cur.len() {
                    cur[j] = lo[j].clone();
                }
                break;
            }
        }
    }
}

/// Integer points in a box satisfying a membership predicate,
/// in deterministic lexicographic order.
pub fn lattice_points<F>(
    lo: &[BigInt],
    hi: &[BigInt],
    cap: u64,
    predicate: F,
) -> Result<Vec<Point>>
where
    F: Fn(&Point) -> bool,
{
    let mut out = Vec::new();
    for coords in integer_points_in_box(lo, hi, cap)? {
        let p = Point::new(coords.into_iter().map(Scalar::from).collect());
        if predicate(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Integer points of a polytope.
pub fn polytope_lattice_points(p: &Polytope, cap: u64) -> Result<Vec<Point>> {
    let (lo, hi) = p.bounding_box();
    lattice_points(&lo, &hi, cap, |x| p.contains(x))
}
