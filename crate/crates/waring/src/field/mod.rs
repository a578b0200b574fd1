//! Exact coefficient fields: the rationals and cyclotomic extensions.
//!
//! Arithmetic is expressed through the [`Field`] trait so that the
//! polynomial, matrix and rank machinery can run unchanged over Q and
//! over Q(zeta_n). A field value acts as a context object: elements are
//! plain data, operations go through the field. This keeps elements
//! cheap to clone and store in bulk (coefficient vectors, matrices).

mod cyclotomic;
mod rational;
mod real;

pub use cyclotomic::{CyclotomicField, CyclotomicNumber};
pub use rational::{factorial, falling_factorial, Rational};
pub use real::sign_of_real;

use crate::error::Result;

/// An exact field of characteristic zero.
///
/// All operations are total except `inv`/`div`, which report division
/// by zero as an error rather than panicking.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Canonical embedding of Q.
    fn from_rational(&self, r: &Rational) -> Self::Elem;

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&Rational::from_int(n))
    }

    /// Human-readable rendering used in text reports and errors.
    fn describe_elem(&self, a: &Self::Elem) -> String;

    /// Short name used in error messages ("Q", "Q(zeta_8)").
    fn describe(&self) -> String;
}

/// The field of rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn inv(&self, a: &Rational) -> Result<Rational> {
        a.inv()
    }

    fn from_rational(&self, r: &Rational) -> Rational {
        r.clone()
    }

    fn describe_elem(&self, a: &Rational) -> String {
        a.to_string()
    }

    fn describe(&self) -> String {
        "Q".to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_field_ops() {
        let f = Rationals;
        let a = f.from_int(3);
        let b = Rational::from_pair(1, 2).unwrap();
        assert_eq!(f.add(&a, &b), Rational::from_pair(7, 2).unwrap());
        assert_eq!(f.div(&a, &b).unwrap(), f.from_int(6));
        assert!(f.inv(&f.zero()).is_err());
        assert_eq!(f.describe(), "Q");
    }
}
