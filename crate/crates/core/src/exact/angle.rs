use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{format_rational, parse_rational, Rational};
use super::ExactError;

/// A root of unity `e^{2 pi i t}` stored by its angle `t` in Q/Z.
///
/// Canonicalized into `0 <= t < 1`, so equality and hashing are structural.
/// The multiplicative group of roots of unity becomes addition on `t`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalAngle {
    t: Rational,
}

impl RationalAngle {
    pub fn new(t: Rational) -> Self {
        let mut t = t;
        let floor = t.floor();
        t -= floor;
        debug_assert!(!t.is_negative() && t < Rational::one());
        RationalAngle { t }
    }

    /// `e^{2 pi i r/p}`.
    pub fn from_ratio(r: i64, p: i64) -> Self {
        assert!(p != 0);
        Self::new(Rational::new(BigInt::from(r), BigInt::from(p)))
    }

    pub fn zero() -> Self {
        RationalAngle { t: Rational::zero() }
    }

    /// The angle of -1.
    pub fn half() -> Self {
        Self::from_ratio(1, 2)
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn is_one(&self) -> bool {
        self.t.is_zero()
    }

    /// Multiplicative order: the denominator of `t` in lowest terms.
    /// Panics when it does not fit a `u64`; untrusted input goes through
    /// [`RationalAngle::try_order`].
    pub fn order(&self) -> u64 {
        self.try_order().expect("order exceeds u64")
    }

    pub fn try_order(&self) -> Option<u64> {
        self.t.denom().to_u64()
    }

    /// True iff this is a primitive `l`-th root of unity, i.e. the reduced
    /// denominator of `t` is exactly `l`.
    pub fn is_primitive_root(&self, l: u64) -> bool {
        assert!(l >= 1);
        self.order() == l
    }

    pub fn inverse(&self) -> Self {
        Self::new(-self.t.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        Self::new(&self.t * Rational::from(BigInt::from(e)))
    }

    pub fn parse(s: &str) -> Result<Self, ExactError> {
        Ok(Self::new(parse_rational(s)?))
    }
}

/// Group law: product of roots of unity is addition of angles mod 1.
pub fn angle_mul(a: &RationalAngle, b: &RationalAngle) -> RationalAngle {
    RationalAngle::new(&a.t + &b.t)
}

impl Mul for &RationalAngle {
    type Output = RationalAngle;
    fn mul(self, rhs: &RationalAngle) -> RationalAngle {
        angle_mul(self, rhs)
    }
}

impl Mul for RationalAngle {
    type Output = RationalAngle;
    fn mul(self, rhs: RationalAngle) -> RationalAngle {
        angle_mul(&self, &rhs)
    }
}

// Additive notation is convenient when transcribing exponent arithmetic.
impl Add for &RationalAngle {
    type Output = RationalAngle;
    fn add(self, rhs: &RationalAngle) -> RationalAngle {
        angle_mul(self, rhs)
    }
}

impl Sub for &RationalAngle {
    type Output = RationalAngle;
    fn sub(self, rhs: &RationalAngle) -> RationalAngle {
        RationalAngle::new(&self.t - &rhs.t)
    }
}

impl Neg for &RationalAngle {
    type Output = RationalAngle;
    fn neg(self) -> RationalAngle {
        self.inverse()
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rational(&self.t))
    }
}

impl fmt::Debug for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Numerator of `t` reduced against a given conductor: the exponent `k`
/// with `angle = zeta_N^k`, requiring `order | N`.
pub fn angle_exponent_mod(a: &RationalAngle, conductor: u64) -> Result<u64, ExactError> {
    let l = a.order();
    if conductor % l != 0 {
        return Err(ExactError::BadEmbedding(a.clone(), conductor));
    }
    let r = a
        .t()
        .numer()
        .mod_floor(&BigInt::from(l))
        .to_u64()
        .expect("reduced numerator fits u64");
    Ok(r * (conductor / l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn product_is_addition_mod_one() {
        // (-1)^2 = 1
        let h = RationalAngle::half();
        assert_eq!(angle_mul(&h, &h), RationalAngle::zero());
        // zeta_3^2 is the other primitive cube root
        let z3 = RationalAngle::from_ratio(1, 3);
        assert_eq!(angle_mul(&z3, &z3), RationalAngle::from_ratio(2, 3));
        // 1/3 + 3/4 = 13/12 = 1/12 mod 1
        let a = RationalAngle::from_ratio(1, 3);
        let b = RationalAngle::from_ratio(3, 4);
        assert_eq!(angle_mul(&a, &b), RationalAngle::from_ratio(1, 12));
    }

    #[test]
    fn primitive_root_detection() {
        assert!(RationalAngle::half().is_primitive_root(2));
        assert!(!RationalAngle::from_ratio(2, 4).is_primitive_root(4));
        assert!(RationalAngle::from_ratio(5, 12).is_primitive_root(12));
    }

    #[test]
    fn canonical_range() {
        let a = RationalAngle::new(rat(-1, 6));
        assert_eq!(a.t(), &rat(5, 6));
        assert_eq!(a.order(), 6);
        let b = RationalAngle::new(rat(7, 3));
        assert_eq!(b.t(), &rat(1, 3));
    }

    #[test]
    fn inverse_is_one_minus_t() {
        let a = RationalAngle::from_ratio(2, 7);
        assert_eq!(a.inverse().t(), &rat(5, 7));
        assert_eq!(angle_mul(&a, &a.inverse()), RationalAngle::zero());
        assert_eq!(RationalAngle::zero().inverse(), RationalAngle::zero());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = RationalAngle::from_ratio(3, 10);
        assert_eq!(a.pow(0), RationalAngle::zero());
        assert_eq!(a.pow(-2), RationalAngle::from_ratio(4, 10));
        assert_eq!(a.pow(7), RationalAngle::from_ratio(21, 10));
    }

    #[test]
    fn exponent_embedding() {
        let a = RationalAngle::from_ratio(5, 6);
        assert_eq!(angle_exponent_mod(&a, 12).unwrap(), 10);
        assert_eq!(angle_exponent_mod(&a, 6).unwrap(), 5);
        assert!(angle_exponent_mod(&a, 8).is_err());
    }
}
