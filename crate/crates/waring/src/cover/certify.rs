//! Exact certification of the enumerated forms: real-rootedness and
//! tangent-space transversality.

use super::gamma::{frame_matrix, gamma_general, RootsOfUnity};
use super::RootTriple;
use crate::error::{Error, Result};
use crate::field::{sign_of_real, CyclotomicField, Field};
use crate::forms::{divides, normalize_projective, BinaryForm};
use crate::matrix::ExactMatrix;
use crate::poly;

/// Whether every root of the form is real. A coefficient not fixed by
/// conjugation disqualifies the form outright; otherwise a Sturm chain
/// counts the distinct real roots exactly, using certified interval
/// arithmetic for each leading-coefficient sign, and the count must
/// exhaust the degree of the square-free part. The root at infinity
/// contributed by a power of y is real and needs no counting.
pub fn hyperbolicity_check(f: &BinaryForm<CyclotomicField>) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let field = f.field();
    if f.coeffs().iter().any(|c| !field.is_real(c)) {
        return Ok(false);
    }
    let dehomogenized = f.dehomogenized();
    let reduced = poly::squarefree_part(field, &dehomogenized)?;
    let target = match poly::degree::<CyclotomicField>(&reduced) {
        None | Some(0) => return Ok(true),
        Some(n) => n,
    };

    let mut chain = vec![reduced.clone(), poly::derivative(field, &reduced)];
    loop {
        let last = chain.last().expect("chain starts with two entries");
        if poly::is_zero::<CyclotomicField>(last) {
            chain.pop();
            break;
        }
        if poly::degree::<CyclotomicField>(last) == Some(0) {
            break;
        }
        let (_, rem) = poly::div_rem(field, &chain[chain.len() - 2], last)?;
        chain.push(poly::scale(field, &field.from_int(-1), &rem));
    }

    // The sign pattern at +/-infinity is carried entirely by the
    // leading terms.
    let mut at_plus = Vec::with_capacity(chain.len());
    let mut at_minus = Vec::with_capacity(chain.len());
    for p in &chain {
        let deg = poly::degree::<CyclotomicField>(p).expect("chain entries are nonzero");
        let lead = sign_of_real(field, &p[deg])?;
        at_plus.push(lead);
        at_minus.push(if deg % 2 == 0 { lead } else { -lead });
    }
    let variations =
        |signs: &[i32]| signs.windows(2).filter(|w| w[0] * w[1] < 0).count() as isize;
    Ok(variations(&at_minus) - variations(&at_plus) == target as isize)
}

/// Recovers F = l^d + t^d for the image of a triple. The change of
/// variables behind the construction carries x^d − y^d, which equals
/// x^d + (w·y)^d once w is a primitive 2d-th root of unity — so l and
/// t live one cyclotomic level up, where −1 acquires a d-th root. The
/// decomposition is re-expanded and matched against the enumerated
/// form before being returned.
pub fn power_sum_decomposition(
    roots: &RootsOfUnity,
    frame: &[BinaryForm<CyclotomicField>; 3],
    xi: &RootTriple,
) -> Result<(BinaryForm<CyclotomicField>, BinaryForm<CyclotomicField>)> {
    let d = roots.d();
    let small = roots.field();
    let big = CyclotomicField::new(2 * d as u64)?;
    let lift = |c| big.embed_from(small, c);

    let alpha = frame_matrix(roots, frame, xi)?;
    let alpha = crate::forms::Matrix2::new(
        lift(&alpha.a)?,
        lift(&alpha.b)?,
        lift(&alpha.c)?,
        lift(&alpha.d)?,
    );
    let w = big.root_of_unity(1);
    let (lu, lv) = alpha.apply(&big.one(), &big.zero(), &big);
    let (tu, tv) = alpha.apply(&big.zero(), &w, &big);
    let l = BinaryForm::linear(big.clone(), lu, lv);
    let t = BinaryForm::linear(big.clone(), tu, tv);

    let expanded = normalize_projective(&l.pow(d).add(&t.pow(d))?)?;
    let enumerated = gamma_general(roots, frame, xi)?;
    let lifted: Vec<_> = enumerated
        .coeffs()
        .iter()
        .map(lift)
        .collect::<Result<_>>()?;
    let lifted = normalize_projective(&BinaryForm::new(big.clone(), d, lifted)?)?;
    if expanded != lifted {
        return Err(Error::Verification(
            "power-sum decomposition does not re-expand to the enumerated form".into(),
        ));
    }
    Ok((l, t))
}

/// Transversality at F = l^d + t^d of the rank-two locus against the
/// space of forms vanishing at the roots of x, y and x+y. The tangent
/// directions n·l^(d−1) + m·t^(d−1), restricted to those three roots,
/// give three linear conditions on the four coefficients of (n, m);
/// transversality is exactly their independence, i.e. the 3x4 matrix
/// below having rank three.
pub fn terracini_transversality<F: Field>(
    l: &BinaryForm<F>,
    t: &BinaryForm<F>,
    d: usize,
) -> Result<bool> {
    if l.degree() != 1 || t.degree() != 1 {
        return Err(Error::DegreeConstraint(
            "the power-sum parts must be linear forms".into(),
        ));
    }
    let field = l.field().clone();
    let cross = field.sub(
        &field.mul(l.coeff(0), t.coeff(1)),
        &field.mul(l.coeff(1), t.coeff(0)),
    );
    if field.is_zero(&cross) {
        return Err(Error::CollapsedPoints(
            "the two linear forms must not be proportional".into(),
        ));
    }
    let f = l.pow(d).add(&t.pow(d))?;
    for (u, v) in [(1i64, 0i64), (0, 1), (1, 1)] {
        let line = BinaryForm::linear(field.clone(), field.from_int(u), field.from_int(v));
        if !divides(&line, &f)? {
            return Err(Error::Verification(
                "the power sum is not divisible by x, y and x+y".into(),
            ));
        }
    }

    // Values of l^(d-1) and t^(d-1) at the three roots.
    let power_at = |g: &BinaryForm<F>, u: i64, v: i64| {
        let value = g.eval(&field.from_int(u), &field.from_int(v));
        let mut acc = field.one();
        for _ in 0..d - 1 {
            acc = field.mul(&acc, &value);
        }
        acc
    };
    let lp10 = power_at(l, 1, 0);
    let lp01 = power_at(l, 0, 1);
    let lpm = power_at(l, 1, -1);
    let tp10 = power_at(t, 1, 0);
    let tp01 = power_at(t, 0, 1);
    let tpm = power_at(t, 1, -1);
    let zero = field.zero();
    let rows = vec![
        vec![lp10, zero.clone(), tp10, zero.clone()],
        vec![zero.clone(), lp01, zero.clone(), tp01],
        vec![lpm.clone(), field.neg(&lpm), tpm.clone(), field.neg(&tpm)],
    ];
    Ok(ExactMatrix::from_rows(field, rows)?.rank() == 3)
}
