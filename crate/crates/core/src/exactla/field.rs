use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use thiserror::Error;

/// Which exact field a scalar type realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    Prime(u64),
    Rationals,
}

impl BaseField {
    pub fn characteristic(self) -> u64 {
        match self {
            BaseField::Prime(p) => p,
            BaseField::Rationals => 0,
        }
    }
}

impl Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Prime(p) => write!(f, "F_{p}"),
            BaseField::Rationals => write!(f, "Q"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse scalar {text:?} over {field}")]
pub struct ParseScalarError {
    pub text: String,
    pub field: BaseField,
}

/// An exact field. Everything above `exactla` is generic over this trait.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    fn base_field() -> BaseField;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;

    fn parse_scalar(text: &str) -> Result<Self, ParseScalarError>;

    /// Every element of the field, if it is finite.
    fn elements() -> Option<Vec<Self>>;

    /// A random element; uniform over F_p, small integers over Q.
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn characteristic() -> u64 {
        Self::base_field().characteristic()
    }
}

const fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field F_P with canonical representatives in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const PRIME_CHECK: () = assert!(is_prime(P) && P < (1 << 32), "modulus must be a prime below 2^32");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::PRIME_CHECK;
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u64> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u64> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn base_field() -> BaseField {
        BaseField::Prime(P)
    }

    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn from_i64(n: i64) -> Self {
        Fp::new(n.rem_euclid(P as i64) as u64)
    }

    fn parse_scalar(text: &str) -> Result<Self, ParseScalarError> {
        let err = || ParseScalarError { text: text.to_string(), field: Self::base_field() };
        let n: i64 = text.trim().parse().map_err(|_| err())?;
        Ok(Self::from_i64(n))
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Fp::new).collect())
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp::new(rng.gen_range(0..P))
    }
}

impl Field for BigRational {
    fn base_field() -> BaseField {
        BaseField::Rationals
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn parse_scalar(text: &str) -> Result<Self, ParseScalarError> {
        let err = || ParseScalarError { text: text.to_string(), field: Self::base_field() };
        let t = text.trim();
        match t.split_once('/') {
            None => BigInt::from_str(t).map(BigRational::from_integer).map_err(|_| err()),
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
                if d.is_zero() || d.is_negative() {
                    return Err(err());
                }
                Ok(BigRational::new(n, d))
            }
        }
    }

    fn elements() -> Option<Vec<Self>> {
        None
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_i64(rng.gen_range(-3..=3))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_roundtrip() {
        for a in Fp::<7>::elements().unwrap().into_iter().skip(1) {
            assert_eq!(a * a.inverse().unwrap(), Fp::one());
        }
        assert_eq!(Fp::<2>::new(0).inverse(), None);
    }

    #[test]
    fn fp_negative_literals_reduce() {
        assert_eq!(Fp::<5>::from_i64(-1), Fp::new(4));
        assert_eq!(Fp::<3>::parse_scalar("-2").unwrap(), Fp::new(1));
    }

    #[test]
    fn rational_parse_and_display() {
        let q = BigRational::parse_scalar("2/4").unwrap();
        assert_eq!(q.to_string(), "1/2");
        assert_eq!(BigRational::parse_scalar("-3").unwrap().to_string(), "-3");
        assert!(BigRational::parse_scalar("1/0").is_err());
        assert!(BigRational::parse_scalar("1/-2").is_err());
    }
}
