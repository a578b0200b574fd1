//! Waring rank of binary forms by apolarity.
//!
//! For a nonzero form F of degree d, the apolar ideal is generated by
//! two forms whose degrees sum to d + 2. The rank is the degree of the
//! smaller generator when it is square-free and the degree of the
//! larger one otherwise. The functions here locate the generators
//! through catalecticant kernels and package the decision into a
//! replayable certificate.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::forms::{
    apolar_apply, apolar_kernel_basis, is_square_free, root_multiplicities, BinaryForm,
};
use crate::matrix::ExactMatrix;

/// Which arm of the rank dichotomy produced the answer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Branch {
    /// Unique minimal-degree apolar form, square-free: rank = e1.
    DegG1,
    /// Unique minimal-degree apolar form with a repeated root:
    /// rank = d - e1 + 2.
    DegG2,
    /// Two generators share the minimal degree (d even, e1 = d/2 + 1);
    /// a square-free member of the pencil realizes rank e1.
    Pencil,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::DegG1 => "DEG_G1",
            Branch::DegG2 => "DEG_G2",
            Branch::Pencil => "PENCIL",
        }
    }
}

/// The outcome of a rank computation, carrying enough to re-check the
/// answer independently: the decisive apolar form, its degree and
/// square-freeness, and which branch the arithmetic used.
#[derive(Clone, Debug, PartialEq)]
pub struct RankCertificate<F: Field> {
    pub rank: usize,
    pub witness: BinaryForm<F>,
    pub witness_degree: usize,
    pub witness_square_free: bool,
    pub branch: Branch,
    /// For the pencil branch: the lambda with witness = b1 + lambda*b2.
    pub pencil_parameter: Option<F::Elem>,
}

/// Position of a form relative to the rational normal curve and its
/// secant/tangent varieties (degree >= 3 only).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SecantClass {
    /// A pure d-th power (rank 1).
    OnCurve,
    /// N * L^(d-1) with two distinct roots.
    Tangent,
    /// Rank exactly 2.
    Secant,
    /// None of the above.
    Outside,
}

impl SecantClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            SecantClass::OnCurve => "ON_CURVE",
            SecantClass::Tangent => "TANGENT",
            SecantClass::Secant => "SECANT",
            SecantClass::Outside => "OUTSIDE",
        }
    }
}

fn require_rankable<F: Field>(f: &BinaryForm<F>) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    if f.degree() < 1 {
        return Err(Error::DegreeConstraint(
            "rank is defined for forms of degree >= 1".into(),
        ));
    }
    Ok(())
}

/// The smallest degree carrying a nonzero apolar form, together with
/// the deterministic kernel basis found there. The dimension is 1 or 2.
pub fn initial_degree<F: Field>(f: &BinaryForm<F>) -> Result<(usize, Vec<BinaryForm<F>>)> {
    require_rankable(f)?;
    for e in 1..=f.degree() {
        let basis = apolar_kernel_basis(f, e)?;
        if !basis.is_empty() {
            if basis.len() > 2 {
                return Err(Error::Internal(format!(
                    "apolar kernel at the initial degree {e} has dimension {}",
                    basis.len()
                )));
            }
            return Ok((e, basis));
        }
    }
    Err(Error::Internal(
        "no apolar form found up to the degree of the form itself".into(),
    ))
}

/// Computes the Waring rank with a certificate.
pub fn waring_rank<F: Field>(f: &BinaryForm<F>) -> Result<RankCertificate<F>> {
    let (e1, basis) = initial_degree(f)?;
    let d = f.degree();
    if basis.len() == 1 {
        let witness = basis.into_iter().next().unwrap();
        let square_free = is_square_free(&witness)?;
        let (rank, branch) = if square_free {
            (e1, Branch::DegG1)
        } else {
            (d + 2 - e1, Branch::DegG2)
        };
        return Ok(RankCertificate {
            rank,
            witness,
            witness_degree: e1,
            witness_square_free: square_free,
            branch,
            pencil_parameter: None,
        });
    }
    // Two independent apolar forms at the initial degree force the
    // balanced case e1 = (d + 2) / 2.
    if 2 * e1 != d + 2 {
        return Err(Error::Internal(format!(
            "two-dimensional apolar kernel at degree {e1} for a degree-{d} form"
        )));
    }
    let field = f.field().clone();
    let (b1, b2) = (&basis[0], &basis[1]);
    // The square-free members avoid the zero set of a nonzero
    // discriminant of degree at most 2*e1 - 2 in lambda, so scanning
    // 2*e1 + 1 integer values must hit one.
    for lambda in 0..=(2 * e1) {
        let le = field.from_int(lambda as i64);
        let candidate = b1.add(&b2.scale(&le))?;
        if candidate.is_zero() {
            continue;
        }
        if is_square_free(&candidate)? {
            return Ok(RankCertificate {
                rank: e1,
                witness: candidate,
                witness_degree: e1,
                witness_square_free: true,
                branch: Branch::Pencil,
                pencil_parameter: Some(le),
            });
        }
    }
    Err(Error::Internal(
        "pencil of apolar forms contains no square-free member in the scanned range".into(),
    ))
}

/// A generating pair (g1, g2) of the apolar ideal with
/// deg g1 + deg g2 = d + 2. g2 is reduced modulo multiples of g1 and
/// scaled so its first nonzero coefficient is 1.
pub fn apolar_generators<F: Field>(
    f: &BinaryForm<F>,
) -> Result<(BinaryForm<F>, BinaryForm<F>)> {
    let (e1, basis) = initial_degree(f)?;
    let d = f.degree();
    let e2 = d + 2 - e1;
    let field = f.field().clone();
    let g1 = basis[0].clone();

    // Degree-e2 slice of the apolar ideal. Beyond the degree of F every
    // form is apolar, so the slice is the whole space.
    let slice: Vec<BinaryForm<F>> = if e2 > d {
        (0..=e2)
            .map(|j| BinaryForm::monomial(field.clone(), e2, j))
            .collect::<Result<_>>()?
    } else {
        apolar_kernel_basis(f, e2)?
    };

    // Multiples of g1 inside that slice.
    let multiples: Vec<Vec<F::Elem>> = (0..=(e2 - e1))
        .map(|j| {
            let m = BinaryForm::monomial(field.clone(), e2 - e1, j)?;
            Ok(g1.mul(&m)?.coeffs().to_vec())
        })
        .collect::<Result<_>>()?;
    let (reduced, pivots) = ExactMatrix::from_rows(field.clone(), multiples)?.rref();

    // Reduce each slice element modulo the row space of the multiples;
    // the first survivor is the second generator.
    for candidate in &slice {
        let mut v = candidate.coeffs().to_vec();
        for (prow, &pcol) in pivots.iter().enumerate() {
            let coeff = v[pcol].clone();
            if field.is_zero(&coeff) {
                continue;
            }
            for col in 0..v.len() {
                v[col] = field.sub(&v[col], &field.mul(&coeff, reduced.get(prow, col)));
            }
        }
        if v.iter().any(|c| !field.is_zero(c)) {
            let g2 = crate::forms::normalize_projective(&BinaryForm::new(field.clone(), e2, v)?)?;
            return Ok((g1, g2));
        }
    }
    Err(Error::Internal(
        "apolar ideal slice is exhausted by multiples of the first generator".into(),
    ))
}

/// Locates the form relative to the rational normal curve: on it,
/// on a tangent line, on a secant through two distinct points, or
/// beyond. Requires degree >= 3 so the four classes are disjoint.
pub fn classify_secant_point<F: Field>(f: &BinaryForm<F>) -> Result<SecantClass> {
    require_rankable(f)?;
    let d = f.degree();
    if d < 3 {
        return Err(Error::DegreeConstraint(
            "secant classification needs degree >= 3".into(),
        ));
    }
    let certificate = waring_rank(f)?;
    if certificate.rank == 1 {
        return Ok(SecantClass::OnCurve);
    }
    let mults = root_multiplicities(f)?;
    if mults == [d - 1, 1] {
        return Ok(SecantClass::Tangent);
    }
    if certificate.rank == 2 {
        return Ok(SecantClass::Secant);
    }
    Ok(SecantClass::Outside)
}

/// Re-derives everything a certificate claims, independently of how it
/// was produced: apolarity of the witness, its square-freeness flag,
/// and the branch arithmetic connecting witness degree to rank.
pub fn verify_certificate<F: Field>(
    f: &BinaryForm<F>,
    certificate: &RankCertificate<F>,
) -> Result<()> {
    let d = f.degree();
    let fail = |msg: String| Err(Error::Verification(msg));
    if certificate.witness.degree() != certificate.witness_degree {
        return fail("witness degree field disagrees with the witness itself".into());
    }
    if !apolar_apply(&certificate.witness, f)?.is_zero() {
        return fail("witness is not apolar to the form".into());
    }
    if is_square_free(&certificate.witness)? != certificate.witness_square_free {
        return fail("square-freeness flag is wrong".into());
    }
    let e1 = certificate.witness_degree;
    let consistent = match certificate.branch {
        Branch::DegG1 => certificate.witness_square_free && certificate.rank == e1,
        Branch::DegG2 => !certificate.witness_square_free && certificate.rank == d + 2 - e1,
        Branch::Pencil => {
            certificate.witness_square_free
                && certificate.rank == e1
                && certificate.pencil_parameter.is_some()
        }
    };
    if !consistent {
        return fail(format!(
            "branch {} arithmetic does not reproduce rank {}",
            certificate.branch.as_str(),
            certificate.rank
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{CyclotomicField, Rational, Rationals};

    fn form(degree: usize, coeffs: &[i64]) -> BinaryForm<Rationals> {
        BinaryForm::from_integers(degree, coeffs).unwrap()
    }

    fn rank_of(f: &BinaryForm<Rationals>) -> usize {
        let cert = waring_rank(f).unwrap();
        verify_certificate(f, &cert).unwrap();
        cert.rank
    }

    #[test]
    fn pure_powers_have_rank_one() {
        for d in 1..=8 {
            let mut coeffs = vec![0i64; d + 1];
            coeffs[0] = 1;
            assert_eq!(rank_of(&form(d, &coeffs)), 1, "x^{d}");
        }
    }

    #[test]
    fn monomial_x_to_d_minus_one_y_has_maximal_rank() {
        // Classic example: x^(d-1) y has rank d.
        for d in 3..=8 {
            let mut coeffs = vec![0i64; d + 1];
            coeffs[1] = 1;
            let f = form(d, &coeffs);
            let cert = waring_rank(&f).unwrap();
            verify_certificate(&f, &cert).unwrap();
            assert_eq!(cert.rank, d);
            assert_eq!(cert.branch, Branch::DegG2);
            // Witness is Y^2, degree 2, visibly not square-free.
            assert_eq!(cert.witness_degree, 2);
            assert!(!cert.witness_square_free);
        }
        // d = 2 is the balanced case: xy still has rank 2, but through
        // the pencil spanned by X^2 and Y^2.
        let xy = form(2, &[0, 1, 0]);
        let cert = waring_rank(&xy).unwrap();
        verify_certificate(&xy, &cert).unwrap();
        assert_eq!(cert.rank, 2);
        assert_eq!(cert.branch, Branch::Pencil);
    }

    #[test]
    fn balanced_monomials_use_the_pencil() {
        // x^2 y^2: apolar ideal (X^3, Y^3); rank 3 through a
        // square-free member of the degree-3 pencil.
        let f = form(4, &[0, 0, 1, 0, 0]);
        let cert = waring_rank(&f).unwrap();
        verify_certificate(&f, &cert).unwrap();
        assert_eq!(cert.rank, 3);
        assert_eq!(cert.branch, Branch::Pencil);
        assert!(cert.pencil_parameter.is_some());
        assert!(cert.witness_square_free);
    }

    #[test]
    fn quadratic_cases() {
        // x^2 + xy + y^2 = product of two distinct (complex) lines: rank 2.
        assert_eq!(rank_of(&form(2, &[1, 1, 1])), 2);
        // (x + y)^2: rank 1.
        assert_eq!(rank_of(&form(2, &[1, 2, 1])), 1);
    }

    #[test]
    fn odd_degree_rank_two_families() {
        // x^3 + x y^2 and x^3 - x y^2 both have rank 2.
        assert_eq!(rank_of(&form(3, &[1, 0, 1, 0])), 2);
        assert_eq!(rank_of(&form(3, &[1, 0, -1, 0])), 2);
        // x^3 - y^3 likewise.
        assert_eq!(rank_of(&form(3, &[1, 0, 0, -1])), 2);
    }

    #[test]
    fn generators_of_a_pure_power() {
        // F = x^4: apolar ideal (Y, X^5).
        let f = form(4, &[1, 0, 0, 0, 0]);
        let (g1, g2) = apolar_generators(&f).unwrap();
        assert_eq!(g1, form(1, &[0, 1]));
        assert_eq!(g2, form(5, &[1, 0, 0, 0, 0, 0]));
        assert_eq!(g1.degree() + g2.degree(), 4 + 2);
    }

    #[test]
    fn generators_of_the_balanced_monomial() {
        let f = form(4, &[0, 0, 1, 0, 0]);
        let (g1, g2) = apolar_generators(&f).unwrap();
        assert_eq!(g1.degree() + g2.degree(), 6);
        // Both generators are apolar and neither is a multiple of the other.
        assert!(apolar_apply(&g1, &f).unwrap().is_zero());
        assert!(apolar_apply(&g2, &f).unwrap().is_zero());
        assert_ne!(crate::forms::normalize_projective(&g1).unwrap(), g2);
    }

    #[test]
    fn generator_degrees_on_random_samples() {
        // deg g1 + deg g2 = d + 2 and both annihilate F.
        for (d, coeffs) in [
            (3, vec![1, 2, 0, -5]),
            (5, vec![0, 3, 1, 1, 0, 2]),
            (6, vec![7, 0, 0, 1, 0, 0, -2]),
        ] {
            let f = form(d, &coeffs);
            let (g1, g2) = apolar_generators(&f).unwrap();
            assert_eq!(g1.degree() + g2.degree(), d + 2);
            assert!(apolar_apply(&g1, &f).unwrap().is_zero());
            if g2.degree() <= d {
                assert!(apolar_apply(&g2, &f).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn secant_classification() {
        // x^3 on the curve; x^2 y tangent; x^3 - y^3 secant;
        // x^2 y^2 outside.
        assert_eq!(
            classify_secant_point(&form(3, &[1, 0, 0, 0])).unwrap(),
            SecantClass::OnCurve
        );
        assert_eq!(
            classify_secant_point(&form(3, &[0, 1, 0, 0])).unwrap(),
            SecantClass::Tangent
        );
        assert_eq!(
            classify_secant_point(&form(3, &[1, 0, 0, -1])).unwrap(),
            SecantClass::Secant
        );
        assert_eq!(
            classify_secant_point(&form(4, &[0, 0, 1, 0, 0])).unwrap(),
            SecantClass::Outside
        );
        // Tangent detection at higher degree: x y^5.
        assert_eq!(
            classify_secant_point(&form(6, &[0, 0, 0, 0, 0, 1, 0])).unwrap(),
            SecantClass::Tangent
        );
        // Degree 2 is rejected.
        assert!(classify_secant_point(&form(2, &[1, 0, 1])).is_err());
    }

    #[test]
    fn rank_works_over_cyclotomic_fields() {
        // x^d - y^d has rank 2 regardless of where the coefficients live.
        let f5 = CyclotomicField::new(5).unwrap();
        let mut coeffs = vec![f5.zero(); 6];
        coeffs[0] = f5.one();
        coeffs[5] = f5.from_int(-1);
        let f = BinaryForm::new(f5.clone(), 5, coeffs).unwrap();
        let cert = waring_rank(&f).unwrap();
        verify_certificate(&f, &cert).unwrap();
        assert_eq!(cert.rank, 2);
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        assert!(waring_rank(&BinaryForm::zero(Rationals, 3)).is_err());
        let constant = BinaryForm::new(Rationals, 0, vec![Rational::one()]).unwrap();
        assert!(waring_rank(&constant).is_err());
    }

    #[test]
    fn tampered_certificates_fail_verification() {
        let f = form(3, &[1, 0, 0, -1]);
        let mut cert = waring_rank(&f).unwrap();
        cert.rank += 1;
        assert!(verify_certificate(&f, &cert).is_err());
        let mut cert2 = waring_rank(&f).unwrap();
        cert2.witness_square_free = !cert2.witness_square_free;
        assert!(verify_certificate(&f, &cert2).is_err());
    }
}
