//! Exact sign determination for real cyclotomic numbers.
//!
//! A conjugation-fixed element of Q(zeta_n) is a real algebraic
//! number: its value under z -> exp(2*pi*i/n) is sum_i a_i*cos(2*pi*i/n).
//! The sign of that value is decided exactly: the element is first
//! compared against zero in the field, and a nonzero element is then
//! bracketed by shrinking rational intervals (pi via Machin's formula,
//! cosine via alternating Taylor tails) until zero is excluded. Only
//! rational arithmetic is involved, so the answer is certified.

use crate::error::{Error, Result};
use crate::field::{CyclotomicField, CyclotomicNumber, Field, Rational};

#[derive(Clone, Debug)]
struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    fn point(r: Rational) -> Self {
        Interval {
            lo: r.clone(),
            hi: r,
        }
    }

    fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    fn scale(&self, c: &Rational) -> Interval {
        if c.is_negative() {
            Interval {
                lo: c * &self.hi,
                hi: c * &self.lo,
            }
        } else {
            Interval {
                lo: c * &self.lo,
                hi: c * &self.hi,
            }
        }
    }

    fn midpoint(&self) -> Rational {
        &(&self.lo + &self.hi) * &Rational::from_pair(1, 2).unwrap()
    }

    fn half_width(&self) -> Rational {
        &(&self.hi - &self.lo) * &Rational::from_pair(1, 2).unwrap()
    }
}

/// Brackets arctan(1/m) using the alternating Taylor series; the
/// truncation error is bounded by the first omitted term.
fn arctan_inverse_bounds(m: i64, terms: usize) -> Interval {
    let x = Rational::from_pair(1, m).unwrap();
    let x2 = &x * &x;
    let mut sum = Rational::zero();
    let mut power = x.clone();
    for k in 0..terms {
        let term = power.checked_div(&Rational::from_int(2 * k as i64 + 1)).unwrap();
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        power = &power * &x2;
    }
    let tail = power
        .checked_div(&Rational::from_int(2 * terms as i64 + 1))
        .unwrap();
    Interval {
        lo: &sum - &tail,
        hi: &sum + &tail,
    }
}

/// Machin: pi = 16*arctan(1/5) - 4*arctan(1/239).
fn pi_bounds(terms: usize) -> Interval {
    let a = arctan_inverse_bounds(5, terms).scale(&Rational::from_int(16));
    let b = arctan_inverse_bounds(239, terms).scale(&Rational::from_int(-4));
    a.add(&b)
}

/// Brackets cos over a short interval of angles in [0, 2*pi): Taylor
/// partial sum at the midpoint, doubled-next-term truncation bound,
/// plus Lipschitz slack for the interval width.
fn cos_bounds(angle: &Interval, terms: usize) -> Interval {
    let terms = terms.max(6);
    let m = angle.midpoint();
    let m2 = &m * &m;
    let mut sum = Rational::one();
    let mut power = Rational::one(); // m^(2k)
    let mut fact = Rational::one(); // (2k)!
    for k in 1..=terms {
        power = &power * &m2;
        let tk = 2 * k as i64;
        fact = &(&fact * &Rational::from_int(tk - 1)) * &Rational::from_int(tk);
        let term = power.checked_div(&fact).unwrap();
        if k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
    }
    // For |m| <= 7 and terms >= 6 the series terms decrease from the
    // first omitted one onward, so twice that term bounds the tail.
    let tk = 2 * (terms as i64) + 2;
    let next_fact = &(&fact * &Rational::from_int(tk - 1)) * &Rational::from_int(tk);
    let tail = &(&power * &m2).checked_div(&next_fact).unwrap() * &Rational::from_int(2);
    let slack = &tail.abs() + &angle.half_width();
    Interval {
        lo: &sum - &slack,
        hi: &sum + &slack,
    }
}

/// Brackets the real value of `a` under z -> exp(2*pi*i/n), assuming
/// the element is conjugation-fixed.
fn real_value_bounds(field: &CyclotomicField, a: &CyclotomicNumber, terms: usize) -> Interval {
    let pi = pi_bounds(terms);
    let n = field.order() as i64;
    let mut total = Interval::point(Rational::zero());
    for (i, c) in a.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if i == 0 {
            total = total.add(&Interval::point(c.clone()));
            continue;
        }
        let angle = pi.scale(&Rational::from_pair(2 * i as i64, n).unwrap());
        total = total.add(&cos_bounds(&angle, terms).scale(c));
    }
    total
}

/// The sign (-1, 0, +1) of a conjugation-fixed element of Q(zeta_n).
///
/// Errors if the element is not real. Zero is detected exactly in the
/// field; nonzero values terminate because the embedding is injective.
pub fn sign_of_real(field: &CyclotomicField, a: &CyclotomicNumber) -> Result<i32> {
    if !field.is_real(a) {
        return Err(Error::Internal(format!(
            "sign requested for the non-real element {}",
            field.describe_elem(a)
        )));
    }
    if field.is_zero(a) {
        return Ok(0);
    }
    let mut terms = 8;
    for _ in 0..12 {
        let bounds = real_value_bounds(field, a, terms);
        if bounds.lo.signum() > 0 {
            return Ok(1);
        }
        if bounds.hi.signum() < 0 {
            return Ok(-1);
        }
        terms *= 2;
    }
    Err(Error::Internal(format!(
        "sign of {} did not separate from zero",
        field.describe_elem(a)
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_is_bracketed() {
        let pi = pi_bounds(10);
        // 3.14159 < pi < 3.14160
        assert!(pi.lo > Rational::from_pair(314159, 100000).unwrap());
        assert!(pi.hi < Rational::from_pair(314160, 100000).unwrap());
        assert!((&pi.hi - &pi.lo).is_negative() == false);
    }

    #[test]
    fn signs_of_cosine_combinations() {
        let f = CyclotomicField::new(5).unwrap();
        let z = f.root_of_unity(1);
        // z + conj(z) = 2*cos(72 deg) = 0.618... > 0
        let c1 = f.add(&z, &f.conjugate(&z));
        assert_eq!(sign_of_real(&f, &c1).unwrap(), 1);
        // z^2 + conj(z^2) = 2*cos(144 deg) = -1.618... < 0
        let z2 = f.root_of_unity(2);
        let c2 = f.add(&z2, &f.conjugate(&z2));
        assert_eq!(sign_of_real(&f, &c2).unwrap(), -1);
        assert_eq!(sign_of_real(&f, &f.zero()).unwrap(), 0);
        // The two satisfy c1 + c2 = -1 (sum over primitive 5th roots).
        assert_eq!(f.add(&c1, &c2), f.from_int(-1));
    }

    #[test]
    fn sign_survives_a_near_zero_query() {
        // 2*cos(2*pi/5) = (sqrt(5)-1)/2 = 0.61803398874989...;
        // subtracting 61803398/100000000 leaves ~8.7e-9 > 0.
        let f = CyclotomicField::new(5).unwrap();
        let z = f.root_of_unity(1);
        let c = f.add(&z, &f.conjugate(&z));
        let probe = f.sub(
            &c,
            &f.from_rational(&Rational::from_pair(61803398, 100000000).unwrap()),
        );
        assert_eq!(sign_of_real(&f, &probe).unwrap(), 1);
        let probe2 = f.sub(
            &c,
            &f.from_rational(&Rational::from_pair(61803399, 100000000).unwrap()),
        );
        assert_eq!(sign_of_real(&f, &probe2).unwrap(), -1);
    }

    #[test]
    fn non_real_elements_are_rejected() {
        let f = CyclotomicField::new(4).unwrap();
        let i = f.root_of_unity(1);
        assert!(sign_of_real(&f, &i).is_err());
    }

    #[test]
    fn rational_elements_short_circuit() {
        let f = CyclotomicField::new(7).unwrap();
        assert_eq!(
            sign_of_real(&f, &f.from_rational(&Rational::from_pair(-3, 7).unwrap())).unwrap(),
            -1
        );
    }
}
