//! Cyclotomic fields Q(zeta_n) with exact arithmetic.
//!
//! Elements are residues modulo the n-th cyclotomic polynomial,
//! stored as rational coefficient vectors of fixed length phi(n) in
//! the power basis 1, z, ..., z^(phi(n)-1), where z denotes the
//! primitive root exp(2*pi*i/n). Multiplication reduces modulo the
//! minimal polynomial; inversion runs the extended Euclidean algorithm
//! against it. Complex conjugation is the automorphism z -> z^(n-1).

use crate::error::{Error, Result};
use crate::field::{Field, Rational, Rationals};
use crate::poly;

use std::collections::BTreeMap;

/// Euler's totient.
fn totient(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for e in 1..=n {
        if n % e == 0 {
            out.push(e);
        }
    }
    out
}

/// Coefficients of the n-th cyclotomic polynomial, ascending, monic,
/// of degree phi(n). Computed by exact division of z^n - 1 by the
/// cyclotomic polynomials of the proper divisors of n.
pub fn cyclotomic_polynomial(n: u64) -> Result<Vec<Rational>> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let rat = Rationals;
    let mut table: BTreeMap<u64, Vec<Rational>> = BTreeMap::new();
    for e in divisors(n) {
        // z^e - 1
        let mut num = vec![Rational::zero(); e as usize + 1];
        num[0] = Rational::from_int(-1);
        num[e as usize] = Rational::one();
        let mut den = vec![Rational::one()];
        for (&d, phi_d) in table.range(..e) {
            if e % d == 0 {
                den = poly::mul(&rat, &den, phi_d);
            }
        }
        let phi_e = poly::div_exact(&rat, &num, &den)?;
        table.insert(e, phi_e);
    }
    Ok(table.remove(&n).unwrap())
}

/// A residue modulo the cyclotomic polynomial: exactly phi(n)
/// rational coefficients in the power basis. Equality is
/// componentwise, which is canonical because the representation is.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicNumber {
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    /// Coefficients in the power basis 1, z, ..., z^(phi(n)-1).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }
}

/// The field Q(zeta_n), acting as the arithmetic context for
/// [`CyclotomicNumber`] values. Orders 1 and 2 degenerate to Q itself
/// (phi = 1), which the code handles uniformly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicField {
    order: u64,
    degree: usize,
    modulus: Vec<Rational>,
}

impl CyclotomicField {
    pub fn new(order: u64) -> Result<Self> {
        let modulus = cyclotomic_polynomial(order)?;
        Ok(CyclotomicField {
            order,
            degree: totient(order) as usize,
            modulus,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// phi(n), the dimension over Q.
    pub fn degree_over_q(&self) -> usize {
        self.degree
    }

    /// The minimal polynomial of the generator, ascending and monic.
    pub fn modulus(&self) -> &[Rational] {
        &self.modulus
    }

    fn canonical(&self, v: Vec<Rational>) -> CyclotomicNumber {
        let rat = Rationals;
        let mut c = if v.len() > self.degree {
            let (_, r) = poly::div_rem(&rat, &v, &self.modulus)
                .expect("modulus is monic and nonzero");
            r
        } else {
            v
        };
        c.resize(self.degree, Rational::zero());
        CyclotomicNumber { coeffs: c }
    }

    /// Builds an element from arbitrary-length polynomial coefficients
    /// in z, reducing modulo the minimal polynomial.
    pub fn element(&self, coeffs: Vec<Rational>) -> CyclotomicNumber {
        self.canonical(coeffs)
    }

    /// zeta_n^k for any integer k (negative k means inverse powers).
    pub fn root_of_unity(&self, k: i64) -> CyclotomicNumber {
        let n = self.order as i64;
        let k = k.rem_euclid(n) as usize;
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = Rational::one();
        self.canonical(v)
    }

    /// Complex conjugation, the automorphism z -> z^(n-1).
    pub fn conjugate(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        let n = self.order as i64;
        let mut acc = self.zero();
        for (i, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = self.root_of_unity(-(i as i64) % n);
            let scaled = CyclotomicNumber {
                coeffs: term.coeffs.iter().map(|t| t * c).collect(),
            };
            acc = self.add(&acc, &scaled);
        }
        acc
    }

    /// True when the element is fixed by conjugation, i.e. lands on
    /// the real axis under the embedding z -> exp(2*pi*i/n).
    pub fn is_real(&self, a: &CyclotomicNumber) -> bool {
        self.conjugate(a) == *a
    }

    /// Carries an element of Q(zeta_s) into this field along
    /// zeta_s -> zeta_n^(n/s); requires s | n.
    pub fn embed_from(
        &self,
        src: &CyclotomicField,
        a: &CyclotomicNumber,
    ) -> Result<CyclotomicNumber> {
        if self.order % src.order != 0 {
            return Err(Error::BadEmbedding {
                src: src.order,
                dst: self.order,
            });
        }
        let step = (self.order / src.order) as i64;
        let mut acc = self.zero();
        for (i, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = self.root_of_unity(step * i as i64);
            let scaled = CyclotomicNumber {
                coeffs: term.coeffs.iter().map(|t| t * c).collect(),
            };
            acc = self.add(&acc, &scaled);
        }
        Ok(acc)
    }

    /// The rational part if the element lies in Q, else `None`.
    pub fn as_rational(&self, a: &CyclotomicNumber) -> Option<Rational> {
        if a.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(a.coeffs[0].clone())
        } else {
            None
        }
    }
}

impl Field for CyclotomicField {
    type Elem = CyclotomicNumber;

    fn zero(&self) -> CyclotomicNumber {
        CyclotomicNumber {
            coeffs: vec![Rational::zero(); self.degree],
        }
    }

    fn one(&self) -> CyclotomicNumber {
        self.from_rational(&Rational::one())
    }

    fn is_zero(&self, a: &CyclotomicNumber) -> bool {
        a.coeffs.iter().all(|c| c.is_zero())
    }

    fn add(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    fn sub(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    fn neg(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    fn mul(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        let rat = Rationals;
        let pa = poly::trim(&rat, a.coeffs.clone());
        let pb = poly::trim(&rat, b.coeffs.clone());
        self.canonical(poly::mul(&rat, &pa, &pb))
    }

    fn inv(&self, a: &CyclotomicNumber) -> Result<CyclotomicNumber> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        let rat = Rationals;
        let pa = poly::trim(&rat, a.coeffs.clone());
        // u*a + v*modulus = 1 since the modulus is irreducible over Q.
        let (g, u, _) = poly::xgcd(&rat, &pa, &self.modulus)?;
        if g.len() != 1 {
            return Err(Error::Internal(format!(
                "gcd with the cyclotomic modulus of order {} has degree {}",
                self.order,
                g.len().saturating_sub(1)
            )));
        }
        Ok(self.canonical(u))
    }

    fn from_rational(&self, r: &Rational) -> CyclotomicNumber {
        let mut coeffs = vec![Rational::zero(); self.degree];
        coeffs[0] = r.clone();
        CyclotomicNumber { coeffs }
    }

    fn describe_elem(&self, a: &CyclotomicNumber) -> String {
        let mut terms = Vec::new();
        for (i, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = match i {
                0 => c.to_string(),
                _ => {
                    let var = if i == 1 { "z".to_string() } else { format!("z^{i}") };
                    if c.is_one() {
                        var
                    } else if (-c).is_one() {
                        format!("-{var}")
                    } else {
                        format!("{c}*{var}")
                    }
                }
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }

    fn describe(&self) -> String {
        format!("Q(zeta_{})", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, den: i64) -> Rational {
        Rational::from_pair(p, den).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| Rational::from_int(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        // Phi_1 = z - 1, Phi_2 = z + 1, Phi_3 = z^2 + z + 1,
        // Phi_4 = z^2 + 1, Phi_6 = z^2 - z + 1, Phi_12 = z^4 - z^2 + 1.
        assert_eq!(cyclotomic_polynomial(1).unwrap(), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2).unwrap(), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3).unwrap(), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4).unwrap(), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6).unwrap(), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12).unwrap(), ints(&[1, 0, -1, 0, 1]));
        assert!(cyclotomic_polynomial(0).is_err());
    }

    #[test]
    fn cyclotomic_product_recovers_z_n_minus_one() {
        // Independent check by multiplication: prod over e | n of
        // Phi_e(z) must equal z^n - 1.
        let rat = Rationals;
        for n in 1..=30u64 {
            let mut prod = vec![Rational::one()];
            for e in divisors(n) {
                prod = poly::mul(&rat, &prod, &cyclotomic_polynomial(e).unwrap());
            }
            let mut expected = vec![Rational::zero(); n as usize + 1];
            expected[0] = Rational::from_int(-1);
            expected[n as usize] = Rational::one();
            assert_eq!(prod, expected, "n = {n}");
            assert_eq!(
                cyclotomic_polynomial(n).unwrap().len() as u64 - 1,
                totient(n),
                "degree at n = {n}"
            );
        }
    }

    #[test]
    fn roots_of_unity_have_the_right_order() {
        for n in [1u64, 2, 3, 4, 5, 6, 8, 12] {
            let f = CyclotomicField::new(n).unwrap();
            for k in 0..n as i64 {
                let z = f.root_of_unity(k);
                // z^n = 1 always.
                let mut p = f.one();
                for _ in 0..n {
                    p = f.mul(&p, &z);
                }
                assert_eq!(p, f.one(), "n={n} k={k}");
                // Phi_n(zeta^k) = 0 exactly for primitive powers.
                let value = f
                    .modulus()
                    .iter()
                    .rev()
                    .fold(f.zero(), |acc, c| {
                        f.add(&f.mul(&acc, &z), &f.from_rational(c))
                    });
                let primitive = num::integer::gcd(k as u64, n) == 1;
                assert_eq!(f.is_zero(&value), primitive, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn fourth_root_squares_to_minus_one() {
        let f = CyclotomicField::new(4).unwrap();
        let i = f.root_of_unity(1);
        assert_eq!(f.mul(&i, &i), f.from_int(-1));
    }

    #[test]
    fn inversion_against_multiplication() {
        let f = CyclotomicField::new(5).unwrap();
        // a = 1 + 2z - z^3 plus a rational coefficient.
        let a = f.element(vec![q(1, 1), q(2, 1), q(0, 1), q(-1, 3)]);
        let ainv = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &ainv), f.one());
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
        // Division clears denominators exactly: (a/a) = 1.
        assert_eq!(f.div(&a, &a).unwrap(), f.one());
    }

    #[test]
    fn conjugation_is_an_involutive_homomorphism() {
        let f = CyclotomicField::new(8).unwrap();
        let a = f.element(vec![q(1, 2), q(3, 1), q(0, 1), q(-2, 5)]);
        let b = f.element(vec![q(0, 1), q(1, 1), q(1, 1), q(4, 7)]);
        assert_eq!(f.conjugate(&f.conjugate(&a)), a);
        assert_eq!(
            f.conjugate(&f.mul(&a, &b)),
            f.mul(&f.conjugate(&a), &f.conjugate(&b))
        );
        assert_eq!(
            f.conjugate(&f.add(&a, &b)),
            f.add(&f.conjugate(&a), &f.conjugate(&b))
        );
    }

    #[test]
    fn reality_of_symmetric_combinations() {
        let f = CyclotomicField::new(5).unwrap();
        let z = f.root_of_unity(1);
        let zbar = f.conjugate(&z);
        // z + conj(z) = 2*cos(2*pi/5) is real; z itself is not.
        assert!(f.is_real(&f.add(&z, &zbar)));
        assert!(!f.is_real(&z));
        assert!(f.is_real(&f.from_rational(&q(-7, 3))));
        // In Q(zeta_4), conj(i) = -i.
        let f4 = CyclotomicField::new(4).unwrap();
        let i = f4.root_of_unity(1);
        assert_eq!(f4.conjugate(&i), f4.neg(&i));
    }

    #[test]
    fn embedding_into_a_larger_field() {
        let f3 = CyclotomicField::new(3).unwrap();
        let f6 = CyclotomicField::new(6).unwrap();
        let w = f3.root_of_unity(1);
        let w6 = f6.embed_from(&f3, &w).unwrap();
        // The image is zeta_6^2, still a primitive cube root of 1.
        assert_eq!(w6, f6.root_of_unity(2));
        let cube = f6.mul(&f6.mul(&w6, &w6), &w6);
        assert_eq!(cube, f6.one());
        // Homomorphism on a sample sum and product.
        let a = f3.element(vec![q(1, 2), q(-3, 1)]);
        let b = f3.element(vec![q(2, 1), q(5, 4)]);
        let ia = f6.embed_from(&f3, &a).unwrap();
        let ib = f6.embed_from(&f3, &b).unwrap();
        assert_eq!(
            f6.embed_from(&f3, &f3.mul(&a, &b)).unwrap(),
            f6.mul(&ia, &ib)
        );
        // 4 does not divide 6.
        let f4 = CyclotomicField::new(4).unwrap();
        assert!(f6.embed_from(&f4, &f4.one()).is_err());
    }

    #[test]
    fn degenerate_orders_are_just_q() {
        for n in [1u64, 2] {
            let f = CyclotomicField::new(n).unwrap();
            assert_eq!(f.degree_over_q(), 1);
            let a = f.from_rational(&q(3, 7));
            let b = f.from_rational(&q(-2, 7));
            assert_eq!(f.as_rational(&f.mul(&a, &b)).unwrap(), q(-6, 49));
        }
        // zeta_2 = -1.
        let f2 = CyclotomicField::new(2).unwrap();
        assert_eq!(f2.root_of_unity(1), f2.from_int(-1));
    }

    #[test]
    fn element_reduction_wraps_high_powers() {
        // In Q(zeta_5): z^4 = -(1 + z + z^2 + z^3).
        let f = CyclotomicField::new(5).unwrap();
        let z4 = f.root_of_unity(4);
        assert_eq!(z4.coeffs(), ints(&[-1, -1, -1, -1]).as_slice());
        // z^5 wraps to 1.
        assert_eq!(f.root_of_unity(5), f.one());
        assert_eq!(f.root_of_unity(-1), z4);
    }
}
