//! Arbitrary-precision integers and rationals plus small vector helpers.
//!
//! `Rat` values are kept in lowest terms with positive denominator by
//! `num_rational`; the helpers here take care of the other normalization the
//! crate relies on everywhere: scaling rational vectors to primitive integer
//! vectors without flipping their direction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Int = BigInt;
pub type Rat = num_rational::BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Exact dot product of integer vectors. Panics on length mismatch; callers
/// validate dimensions at the API boundary.
pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Int::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn is_zero_vec(v: &[Int]) -> bool {
    v.iter().all(Zero::is_zero)
}

fn gcd_of(v: &[Int]) -> Int {
    let mut g = Int::zero();
    for x in v {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides by the gcd of absolute values; direction is preserved.
/// Errors with [`Error::ZeroVector`] on the zero vector.
pub fn primitive(v: &[Int]) -> Result<Vec<Int>> {
    let g = gcd_of(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Like [`primitive`] but maps the zero vector to itself.
pub fn primitive_or_zero(v: &[Int]) -> Vec<Int> {
    primitive(v).unwrap_or_else(|_| v.to_vec())
}

/// Scales a rational vector to the primitive integer vector with the same
/// direction.
pub fn rat_vec_to_primitive(v: &[Rat]) -> Result<Vec<Int>> {
    let mut lcm = Int::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let scaled: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitive(&scaled)
}

pub fn int_vec_to_rat(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from(x.clone())).collect()
}

/// Flips the sign so the first nonzero entry is positive. Used for sign-free
/// data (equality normals, lineality generators).
pub fn canonical_sign(v: &[Int]) -> Vec<Int> {
    for x in v {
        if x.is_positive() {
            return v.to_vec();
        }
        if x.is_negative() {
            return v.iter().map(|y| -y).collect();
        }
    }
    v.to_vec()
}

pub fn neg_vec(v: &[Int]) -> Vec<Int> {
    v.iter().map(|x| -x).collect()
}

/// `a*x + b*y` componentwise.
pub fn combine(a: &Int, x: &[Int], b: &Int, y: &[Int]) -> Vec<Int> {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(p, q)| a * p + b * q).collect()
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| Error::InvalidArgument(format!("bad rational `{s}`: {e}")))
}

/// Comma- or whitespace-separated rationals.
pub fn parse_rat_vec(s: &str) -> Result<Vec<Rat>> {
    let parts: Vec<&str> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .collect();
    if parts.is_empty() {
        return Err(Error::InvalidArgument("empty vector".into()));
    }
    parts.into_iter().map(parse_rat).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_divides_by_gcd() {
        let v = vec![int(2), int(4)];
        assert_eq!(primitive(&v).unwrap(), vec![int(1), int(2)]);
    }

    #[test]
    fn primitive_preserves_sign() {
        let v = vec![int(0), int(-3)];
        assert_eq!(primitive(&v).unwrap(), vec![int(0), int(-1)]);
    }

    #[test]
    fn primitive_mixed_signs() {
        let v = vec![int(6), int(10), int(-4)];
        assert_eq!(primitive(&v).unwrap(), vec![int(3), int(5), int(-2)]);
    }

    #[test]
    fn primitive_rejects_zero() {
        assert!(matches!(
            primitive(&[int(0), int(0)]),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn rational_scaling() {
        let v = vec![rat(1, 2), rat(-1, 3)];
        assert_eq!(rat_vec_to_primitive(&v).unwrap(), vec![int(3), int(-2)]);
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rat("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rat("-4").unwrap(), rat(-4, 1));
        let v = parse_rat_vec("1, -1/2 3").unwrap();
        assert_eq!(v, vec![rat(1, 1), rat(-1, 2), rat(3, 1)]);
    }
}
