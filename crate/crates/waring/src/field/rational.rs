//! Arbitrary-precision rational numbers.
//!
//! Thin wrapper around `num::BigRational` that pins the textual form
//! used everywhere in this crate: `"p/q"` in lowest terms with a
//! positive denominator, or just `"p"` when the denominator is 1.
//! No floating point is involved anywhere.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom`, reducing to lowest terms.
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// `p/q` from machine integers; `q` must be nonzero.
    pub fn from_pair(p: i64, q: i64) -> Result<Self> {
        Self::new(BigInt::from(p), BigInt::from(q))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Numerator in lowest terms (sign lives here).
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator in lowest terms, always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; the zero element has none.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Integer power with negative exponents allowed (via inversion).
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return self.inv()?.pow(-exp);
        }
        let mut acc = Rational::one();
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }
}

// ---- Parsing and display ----

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"p"` or `"p/q"` with optional leading `-` on `p`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_string());
        let s = s.trim();
        if s.is_empty() {
            return Err(bad());
        }
        match s.split_once('/') {
            None => {
                let p = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Rational::from_bigint(p))
            }
            Some((ps, qs)) => {
                let p = BigInt::from_str(ps.trim()).map_err(|_| bad())?;
                let q = BigInt::from_str(qs.trim()).map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Rational::new(p, q)
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

// ---- Arithmetic ----

impl<'a> Add for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &'a Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl<'a> Sub for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &'a Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl<'a> Mul for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &'a Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        &self + &rhs
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        &self - &rhs
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        &self * &rhs
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

/// Falling factorial m(m-1)...(m-k+1) as a rational; 1 when k = 0.
pub fn falling_factorial(m: usize, k: usize) -> Rational {
    let mut acc = BigInt::one();
    for t in 0..k {
        acc *= BigInt::from(m - t);
    }
    Rational::from_bigint(acc)
}

/// m! as a rational.
pub fn factorial(m: usize) -> Rational {
    falling_factorial(m, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, den: i64) -> Rational {
        Rational::from_pair(p, den).unwrap()
    }

    #[test]
    fn reduces_to_lowest_terms_with_positive_denominator() {
        let a = q(6, -4); // -3/2
        assert_eq!(a.numer(), &BigInt::from(-3));
        assert_eq!(a.denom(), &BigInt::from(2));
        assert_eq!(a.to_string(), "-3/2");
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "7", "-7", "3/4", "-22/7"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
            let back: Rational = r.to_string().parse().unwrap();
            assert_eq!(back, r);
        }
        // Non-canonical input parses to the canonical form.
        let r: Rational = "4/8".parse().unwrap();
        assert_eq!(r.to_string(), "1/2");
        let r: Rational = "5/-10".parse().unwrap();
        assert_eq!(r.to_string(), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "a", "1/2/3", "1.5"] {
            assert!(s.parse::<Rational>().is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn arithmetic() {
        // 1/2 + 1/3 = 5/6, 1/2 * 2/5 = 1/5
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!(&q(1, 2) * &q(2, 5), q(1, 5));
        assert_eq!(-&q(3, 7), q(-3, 7));
        assert_eq!(q(1, 2).inv().unwrap(), q(2, 1));
        assert_eq!(Rational::zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(q(2, 3).pow(3).unwrap(), q(8, 27));
        assert_eq!(q(2, 3).pow(-2).unwrap(), q(9, 4));
    }

    #[test]
    fn falling_factorials() {
        // <5>_2 = 20, <5>_0 = 1, 4! = 24
        assert_eq!(falling_factorial(5, 2), q(20, 1));
        assert_eq!(falling_factorial(5, 0), Rational::one());
        assert_eq!(factorial(4), q(24, 1));
    }
}
