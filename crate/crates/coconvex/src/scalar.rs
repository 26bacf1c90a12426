//! Exact rational scalars and small helpers shared across the crate.
//!
//! Every quantity in this crate is a `BigRational` kept in canonical form
//! (reduced fraction, positive denominator) by the backing crate. Inputs are
//! parsed from strings like `"3/2"` or `"-4"`; floating-point literals are
//! rejected so no rounding can sneak in through a file.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used everywhere in the crate.
pub type Scalar = BigRational;

/// Shorthand for an integer scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`.
pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a rational from a decimal-free string: `"3"`, `"-3"`, `"3/2"`.
///
/// Rejects empty strings, floats (`"1.5"`), zero denominators and any other
/// malformed input.
pub fn parse_rational(s: &str) -> Result<Scalar> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    if s.contains(['.', 'e', 'E']) {
        return Err(Error::Parse(format!(
            "floating-point literals are not accepted: {s:?}"
        )));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {num:?} in rational {s:?}")))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator {d:?} in rational {s:?}")))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in rational {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// Formats a rational as `p` or `p/q`, the inverse of [`parse_rational`].
pub fn format_rational(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Least common multiple of the denominators of a slice of rationals.
pub fn denominator_lcm(xs: &[Scalar]) -> BigInt {
    let mut l = BigInt::one();
    for x in xs {
        l = num_integer::lcm(l, x.denom().clone());
    }
    l
}

/// Scales a rational vector to a primitive integer vector (gcd 1), keeping
/// the direction. Returns `None` for the zero vector.
pub fn primitive_integer(v: &[Scalar]) -> Option<Vec<BigInt>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let l = denominator_lcm(v);
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = num_integer::gcd(g, x.abs());
    }
    Some(ints.into_iter().map(|x| x / &g).collect())
}

/// Primitive integer vector with the sign fixed so the first nonzero entry
/// is positive. Used for unoriented data (affine-hull equations).
pub fn primitive_sign_fixed(v: &[Scalar]) -> Option<Vec<BigInt>> {
    let p = primitive_integer(v)?;
    let flip = p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    Some(if flip { p.into_iter().map(|x| -x).collect() } else { p })
}

/// Floor of a rational as a BigInt.
pub fn rat_floor(x: &Scalar) -> BigInt {
    x.floor().to_integer()
}

/// Ceiling of a rational as a BigInt.
pub fn rat_ceil(x: &Scalar) -> BigInt {
    x.ceil().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("3/2").unwrap(), frac(3, 2));
        assert_eq!(parse_rational(" 4/6 ").unwrap(), frac(2, 3));
        assert_eq!(parse_rational("-4/6").unwrap(), frac(-2, 3));
    }

    #[test]
    fn rejects_floats_and_garbage() {
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn round_trips_canonical_form() {
        for s in ["0", "7", "-7", "3/2", "-3/2"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(format_rational(&x), s);
        }
        // non-canonical input prints reduced
        assert_eq!(format_rational(&parse_rational("2/4").unwrap()), "1/2");
    }

    #[test]
    fn primitive_vectors() {
        let v = vec![frac(1, 2), int(-1), frac(3, 2)];
        assert_eq!(
            primitive_integer(&v).unwrap(),
            vec![BigInt::from(1), BigInt::from(-2), BigInt::from(3)]
        );
        let w = vec![int(0), frac(-2, 3)];
        assert_eq!(
            primitive_sign_fixed(&w).unwrap(),
            vec![BigInt::from(0), BigInt::from(1)]
        );
        assert!(primitive_integer(&[int(0), int(0)]).is_none());
    }
}
