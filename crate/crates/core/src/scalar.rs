//! The integer scalar abstraction shared by every module.
//!
//! All algebra in this crate is exact. Code is written against [`Scalar`]
//! so the same routines run on arbitrary-precision [`num_bigint::BigInt`]
//! (the type behind every alias at the crate root) or on a primitive
//! signed integer when a caller can bound its inputs.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer type.
pub trait Scalar:
    Integer + Roots + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("i64 value fits the scalar type")
    }

    fn from_usize_exact(v: usize) -> Self {
        Self::from_usize(v).expect("usize value fits the scalar type")
    }
}

impl<T> Scalar for T where
    T: Integer
        + Roots
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// `base^exp` by repeated squaring.
pub fn pow<T: Scalar>(base: &T, mut exp: u64) -> T {
    let mut acc = T::one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b.clone();
        }
        exp >>= 1;
        if exp > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

/// Trial-division primality test; adequate for the small moduli used here.
pub fn is_prime<T: Scalar>(n: &T) -> bool {
    let two = T::from_i64_exact(2);
    if *n < two {
        return false;
    }
    let mut d = two;
    while d.clone() * d.clone() <= *n {
        if n.is_multiple_of(&d) {
            return false;
        }
        d = d + T::one();
    }
    true
}

/// Exponent of the prime `p` in the nonzero integer `n`.
pub fn valuation<T: Scalar>(n: &T, p: &T) -> u64 {
    assert!(!n.is_zero(), "valuation of zero");
    let mut v = 0;
    let mut m = n.abs();
    while m.is_multiple_of(p) {
        m = m / p.clone();
        v += 1;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn pow_and_primes() {
        assert_eq!(pow(&3i64, 4), 81);
        assert_eq!(pow(&BigInt::from(2), 100).to_string(), "1267650600228229401496703205376");
        let primes: Vec<i64> = (0..30).filter(is_prime).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(valuation(&48i64, &2), 4);
        assert_eq!(valuation(&-45i64, &3), 2);
    }
}
