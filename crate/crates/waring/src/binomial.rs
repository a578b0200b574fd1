//! Closed-form Waring rank of binary binomials.
//!
//! A binomial a*x^r*y^(s+alpha) + b*x^(r+alpha)*y^s with a, b nonzero
//! has a rank that depends only on the exponent data (r, s, alpha),
//! never on the coefficients. This module implements the rank table
//! and, for each arm of it, the explicit minimal-degree apolar form
//! that drives the answer. Everything here is cross-checked against
//! the catalecticant-based engine in `sylvester`.

use crate::error::{Error, Result};
use crate::field::{factorial, Rational, Rationals};
use crate::forms::BinaryForm;

/// Exponent data of a binomial, normalized so that 0 <= r <= s and
/// alpha >= 1. The two monomials are x^r y^(s+alpha) and x^(r+alpha) y^s.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BinomialSpec {
    r: usize,
    s: usize,
    alpha: usize,
}

impl BinomialSpec {
    pub fn new(r: usize, s: usize, alpha: usize) -> Result<Self> {
        if alpha < 1 {
            return Err(Error::DegreeConstraint(
                "binomial exponent gap alpha must be at least 1".into(),
            ));
        }
        if r > s {
            return Err(Error::DegreeConstraint(format!(
                "binomial exponents must satisfy r <= s, got r = {r}, s = {s}"
            )));
        }
        Ok(BinomialSpec { r, s, alpha })
    }

    /// Reads the shape off the (x, y) exponent pairs of two monomials,
    /// swapping the variables if needed to enforce r <= s.
    pub fn from_monomials(first: (usize, usize), second: (usize, usize)) -> Result<Self> {
        if first.0 + first.1 != second.0 + second.1 {
            return Err(Error::DegreeConstraint(
                "the two monomials must have the same total degree".into(),
            ));
        }
        if first.0 == second.0 {
            return Err(Error::DegreeConstraint(
                "the two monomials must be distinct".into(),
            ));
        }
        let (lo, hi) = if first.0 < second.0 {
            (first, second)
        } else {
            (second, first)
        };
        if lo.0 <= hi.1 {
            // x^(lo.0) y^(lo.1) plays the x^r y^(s+alpha) role.
            BinomialSpec::new(lo.0, hi.1, hi.0 - lo.0)
        } else {
            // Swapping x and y transposes each pair and reverses which
            // monomial carries the smaller x-exponent.
            BinomialSpec::new(hi.1, lo.0, lo.1 - hi.1)
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn degree(&self) -> usize {
        self.r + self.s + self.alpha
    }

    /// delta = r + alpha - s; its sign separates the two halves of the
    /// rank table.
    pub fn delta(&self) -> i64 {
        self.r as i64 + self.alpha as i64 - self.s as i64
    }

    /// The Euclidean division r = q*alpha + j with 0 <= j < alpha.
    pub fn quotient_remainder(&self) -> (usize, usize) {
        (self.r / self.alpha, self.r % self.alpha)
    }

    /// The binomial with arbitrary nonzero coefficients.
    pub fn form(&self, a: &Rational, b: &Rational) -> Result<BinaryForm<Rationals>> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::DegreeConstraint(
                "binomial coefficients must be nonzero".into(),
            ));
        }
        let d = self.degree();
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[self.s + self.alpha] = a.clone();
        coeffs[self.s] = b.clone();
        BinaryForm::new(Rationals, d, coeffs)
    }

    /// The coefficient normalization under which the explicit witnesses
    /// below are apolar: a = (r+alpha)! s! / (r! (s+alpha)!), b = 1.
    pub fn normalized_form(&self) -> Result<BinaryForm<Rationals>> {
        let numer = &factorial(self.r + self.alpha) * &factorial(self.s);
        let denom = &factorial(self.r) * &factorial(self.s + self.alpha);
        let a = numer.checked_div(&denom)?;
        self.form(&a, &Rational::one())
    }
}

/// Computes the rank from the table. Writing r = q*alpha + j and
/// delta = r + alpha - s:
///
/// | condition                        | rank        |
/// |----------------------------------|-------------|
/// | delta <= 0                       | s + 1       |
/// | delta > 0, j = 0, r = s, alpha>1 | s + 2       |
/// | delta > 0, j = delta             | s + 1       |
/// | delta > 0, j > delta             | r + alpha+1 |
/// | delta > 0, otherwise             | r + alpha-j |
pub fn binomial_rank(spec: &BinomialSpec) -> usize {
    let (_, j) = spec.quotient_remainder();
    let delta = spec.delta();
    let (r, s, alpha) = (spec.r(), spec.s(), spec.alpha());
    if delta <= 0 {
        s + 1
    } else if j == 0 && r == s && alpha > 1 {
        s + 2
    } else if j as i64 == delta {
        s + 1
    } else if j as i64 > delta {
        r + alpha + 1
    } else {
        r + alpha - j
    }
}

/// Rank of the monomial x^a y^b: 1 for a pure power, max(a, b) + 1
/// otherwise.
pub fn monomial_rank(a: usize, b: usize) -> Result<usize> {
    if a + b == 0 {
        return Err(Error::DegreeConstraint(
            "monomial rank needs total degree >= 1".into(),
        ));
    }
    if a.min(b) == 0 {
        Ok(1)
    } else {
        Ok(a.max(b) + 1)
    }
}

/// Which arm of the case analysis produced the witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessCase {
    C1,
    Ci,
    Cii,
    Ciii,
    Civ,
}

impl WitnessCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            WitnessCase::C1 => "C1",
            WitnessCase::Ci => "Ci",
            WitnessCase::Cii => "Cii",
            WitnessCase::Ciii => "Ciii",
            WitnessCase::Civ => "Civ",
        }
    }
}

/// The minimal-degree apolar form of the normalized binomial, with the
/// case that produced it and its (predicted) square-freeness.
#[derive(Clone, Debug)]
pub struct BinomialWitness {
    pub g1: BinaryForm<Rationals>,
    pub case: WitnessCase,
    pub square_free: bool,
}

/// An alternating sum of monomials X^px Y^py in the dual variables,
/// signs (-1)^i in the order given.
fn alternating_form(terms: &[(i64, i64)]) -> Result<BinaryForm<Rationals>> {
    let degree = terms[0].0 + terms[0].1;
    let mut coeffs = vec![Rational::zero(); degree as usize + 1];
    for (i, &(px, py)) in terms.iter().enumerate() {
        if px < 0 || py < 0 || px + py != degree {
            return Err(Error::Internal(format!(
                "witness exponent pair ({px}, {py}) out of range at total degree {degree}"
            )));
        }
        coeffs[py as usize] = Rational::from_int(if i % 2 == 0 { 1 } else { -1 });
    }
    BinaryForm::new(Rationals, degree as usize, coeffs)
}

/// The explicit generator of least degree in the apolar ideal of the
/// normalized binomial. Its degree always equals the initial degree of
/// the ideal, and the rank table above is exactly "degree of g1 if
/// square-free, else degree of the complementary generator".
pub fn binomial_witness(spec: &BinomialSpec) -> Result<BinomialWitness> {
    let (q, j) = spec.quotient_remainder();
    let (r, s, alpha) = (spec.r() as i64, spec.s() as i64, spec.alpha() as i64);
    let (qi, ji) = (q as i64, j as i64);
    let delta = spec.delta();

    if delta <= 0 {
        // s >= r + alpha: a pure power X^(r+alpha+1) already kills F.
        let g1 = BinaryForm::monomial(Rationals, (r + alpha + 1) as usize, 0)?;
        return Ok(BinomialWitness {
            g1,
            case: WitnessCase::C1,
            square_free: false,
        });
    }
    if 2 * (ji + 1) <= delta {
        // The alternating sum telescopes at degree s + j + 2; it is a
        // square times Y^2 unless j = 0 and r = s.
        let terms: Vec<_> = (0..=qi)
            .map(|i| (r + 1 - i * alpha, i * alpha + s - r + ji + 1))
            .collect();
        return Ok(BinomialWitness {
            g1: alternating_form(&terms)?,
            case: WitnessCase::Ci,
            square_free: j == 0 && spec.r() == spec.s(),
        });
    }
    if delta % 2 == 1 && ji == (delta - 1) / 2 {
        let terms: Vec<_> = (0..=qi + 1)
            .map(|i| (s + ji + 1 - i * alpha, i * alpha))
            .collect();
        return Ok(BinomialWitness {
            g1: alternating_form(&terms)?,
            case: WitnessCase::Cii,
            square_free: true,
        });
    }
    let half = delta / 2; // = ceil((delta - 1) / 2)
    if (delta % 2 == 0 && ji == half) || (half < ji && ji < delta - 1) {
        let k = delta - ji;
        let terms: Vec<_> = (0..=qi + 1).map(|i| (s + k - i * alpha, i * alpha)).collect();
        return Ok(BinomialWitness {
            g1: alternating_form(&terms)?,
            case: WitnessCase::Ciii,
            square_free: true,
        });
    }
    if ji >= delta - 1 {
        // Here the witness lives in degree s + 1; it stays square-free
        // only on the boundary j ∈ {delta - 1, delta}.
        let t = ji - delta;
        let terms: Vec<_> = (0..=qi + 1)
            .map(|i| (s - t - i * alpha, i * alpha + t + 1))
            .collect();
        return Ok(BinomialWitness {
            g1: alternating_form(&terms)?,
            case: WitnessCase::Civ,
            square_free: ji <= delta,
        });
    }
    Err(Error::Internal(format!(
        "no witness case matched delta = {delta}, j = {j}"
    )))
}
