//! The cross-ratio construction carrying root triples to rank-two
//! forms.
//!
//! Fix the d-th roots of unity Θ = {ξ_0, …, ξ_{d−1}} with ξ_t = ζ^t.
//! Sending an ordered triple (ξ_i, ξ_j, ξ_k) to the image of x^d − y^d
//! under the change of variables that carries x − ξ_i y, x − ξ_j y,
//! x − ξ_k y onto three chosen linear forms produces every rank-two
//! degree-d form divisible by those three forms. For the standard
//! frame (x+y, x, y) this collapses to an explicit product over
//! cross ratios.

use super::{all_triples, open_arc_between, partition_by_key, ArcCounts, RootTriple};
use crate::error::{Error, Result};
use crate::field::{CyclotomicField, CyclotomicNumber, Field};
use crate::forms::{gl2_act, normalize_projective, product_of_linear_forms, BinaryForm, Matrix2};
use std::collections::BTreeMap;

/// The d-th roots of unity inside Q(ζ_d), indexed anticlockwise
/// starting from 1.
pub struct RootsOfUnity {
    field: CyclotomicField,
    theta: Vec<CyclotomicNumber>,
}

impl RootsOfUnity {
    pub fn new(d: usize) -> Result<Self> {
        let field = CyclotomicField::new(d as u64)?;
        let theta = (0..d).map(|t| field.root_of_unity(t as i64)).collect();
        Ok(RootsOfUnity { field, theta })
    }

    pub fn d(&self) -> usize {
        self.theta.len()
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn root(&self, t: usize) -> &CyclotomicNumber {
        &self.theta[t]
    }
}

/// The value at z of the unique Möbius map sending z1 -> 1, z2 -> 0
/// and z3 -> infinity. The anchors must be pairwise distinct, and z
/// may coincide with z1 or z2 but not z3.
pub fn cross_ratio<F: Field>(
    field: &F,
    z: &F::Elem,
    z1: &F::Elem,
    z2: &F::Elem,
    z3: &F::Elem,
) -> Result<F::Elem> {
    let coincide = |a: &F::Elem, b: &F::Elem| field.is_zero(&field.sub(a, b));
    if coincide(z1, z2) || coincide(z2, z3) || coincide(z1, z3) {
        return Err(Error::CollapsedPoints(
            "cross ratio needs three pairwise distinct anchors".into(),
        ));
    }
    if coincide(z, z3) {
        return Err(Error::CollapsedPoints(
            "cross ratio pole: the evaluation point equals the anchor sent to infinity".into(),
        ));
    }
    let numer = field.mul(&field.sub(z, z2), &field.sub(z1, z3));
    let denom = field.mul(&field.sub(z, z3), &field.sub(z1, z2));
    field.div(&numer, &denom)
}

/// Applies a matrix as a fractional linear map z -> (az + b)/(cz + d).
pub fn mobius_value<F: Field>(field: &F, m: &Matrix2<F::Elem>, z: &F::Elem) -> Result<F::Elem> {
    let numer = field.add(&field.mul(&m.a, z), &m.b);
    let denom = field.add(&field.mul(&m.c, z), &m.d);
    field.div(&numer, &denom)
}

/// A matrix representative of the projective transformation carrying
/// three distinct points of the projective line onto three others, in
/// order. Points are coordinate pairs, never (0, 0).
pub fn mobius_from_three_points<F: Field>(
    field: &F,
    sources: &[(F::Elem, F::Elem); 3],
    targets: &[(F::Elem, F::Elem); 3],
) -> Result<Matrix2<F::Elem>> {
    // Frame matrix: scale the first two points so that they sum to the
    // third; the matrix with the scaled points as columns then maps
    // (1:0), (0:1), (1:1) to the triple.
    let frame = |pts: &[(F::Elem, F::Elem); 3]| -> Result<Matrix2<F::Elem>> {
        let det = |p: &(F::Elem, F::Elem), q: &(F::Elem, F::Elem)| {
            field.sub(&field.mul(&p.0, &q.1), &field.mul(&p.1, &q.0))
        };
        let d12 = det(&pts[0], &pts[1]);
        let d32 = det(&pts[2], &pts[1]);
        let d13 = det(&pts[0], &pts[2]);
        if field.is_zero(&d12) || field.is_zero(&d32) || field.is_zero(&d13) {
            return Err(Error::CollapsedPoints(
                "the three points must be pairwise distinct in the projective line".into(),
            ));
        }
        let lambda = field.div(&d32, &d12)?;
        let mu = field.div(&d13, &d12)?;
        Ok(Matrix2::new(
            field.mul(&lambda, &pts[0].0),
            field.mul(&mu, &pts[1].0),
            field.mul(&lambda, &pts[0].1),
            field.mul(&mu, &pts[1].1),
        ))
    };
    let src = frame(sources)?;
    let dst = frame(targets)?;
    // dst ∘ src⁻¹, with the inverse taken up to the (nonzero) scalar
    // det(src) so everything stays inside the field.
    Ok(dst.mul(&src.adjugate(field), field))
}

/// The standard frame of linear forms (x+y, x, y).
pub fn canonical_frame(field: &CyclotomicField) -> [BinaryForm<CyclotomicField>; 3] {
    [
        BinaryForm::linear(field.clone(), field.one(), field.one()),
        BinaryForm::linear(field.clone(), field.one(), field.zero()),
        BinaryForm::linear(field.clone(), field.zero(), field.one()),
    ]
}

/// x^d − y^d, whose roots are exactly the d-th roots of unity.
pub(crate) fn power_difference(field: &CyclotomicField, d: usize) -> Result<BinaryForm<CyclotomicField>> {
    let mut coeffs = vec![field.zero(); d + 1];
    coeffs[0] = field.one();
    coeffs[d] = field.from_int(-1);
    BinaryForm::new(field.clone(), d, coeffs)
}

/// For the standard frame, the image of a triple is the explicit
/// product (x+y) · x · y · Π (x + c_l y), where c_l is the cross ratio
/// of the remaining root ξ_l against (ξ_i; ξ_j, ξ_k). Returned
/// projectively normalized.
pub fn gamma_canonical(
    roots: &RootsOfUnity,
    xi: &RootTriple,
) -> Result<BinaryForm<CyclotomicField>> {
    if xi.d() != roots.d() {
        return Err(Error::InvalidTriple(format!(
            "triple lives at degree {} but the roots have degree {}",
            xi.d(),
            roots.d()
        )));
    }
    let field = roots.field();
    let (i, j, k) = xi.indices();
    let mut lines = vec![
        (field.one(), field.one()),
        (field.one(), field.zero()),
        (field.zero(), field.one()),
    ];
    for l in 0..roots.d() {
        if l == i || l == j || l == k {
            continue;
        }
        let c = cross_ratio(field, roots.root(l), roots.root(i), roots.root(j), roots.root(k))?;
        lines.push((field.one(), c));
    }
    normalize_projective(&product_of_linear_forms(field, &lines))
}

/// The change of variables carrying the linear forms x − ξ_i y,
/// x − ξ_j y, x − ξ_k y onto the three frame entries, as a matrix
/// acting on coefficient vectors.
pub(crate) fn frame_matrix(
    roots: &RootsOfUnity,
    frame: &[BinaryForm<CyclotomicField>; 3],
    xi: &RootTriple,
) -> Result<Matrix2<CyclotomicNumber>> {
    if xi.d() != roots.d() {
        return Err(Error::InvalidTriple(format!(
            "triple lives at degree {} but the roots have degree {}",
            xi.d(),
            roots.d()
        )));
    }
    let field = roots.field();
    for lf in frame {
        if lf.degree() != 1 || lf.is_zero() {
            return Err(Error::DegreeConstraint(
                "frame entries must be nonzero linear forms".into(),
            ));
        }
    }
    let (i, j, k) = xi.indices();
    let sources = [
        (field.one(), field.neg(roots.root(i))),
        (field.one(), field.neg(roots.root(j))),
        (field.one(), field.neg(roots.root(k))),
    ];
    let targets = [
        (frame[0].coeff(0).clone(), frame[0].coeff(1).clone()),
        (frame[1].coeff(0).clone(), frame[1].coeff(1).clone()),
        (frame[2].coeff(0).clone(), frame[2].coeff(1).clone()),
    ];
    mobius_from_three_points(field, &sources, &targets)
}

/// The image of a triple through an arbitrary frame of three pairwise
/// non-proportional linear forms: push x^d − y^d through the change of
/// variables aligning three of its root lines with the frame.
pub fn gamma_general(
    roots: &RootsOfUnity,
    frame: &[BinaryForm<CyclotomicField>; 3],
    xi: &RootTriple,
) -> Result<BinaryForm<CyclotomicField>> {
    let alpha = frame_matrix(roots, frame, xi)?;
    let base = power_difference(roots.field(), roots.d())?;
    normalize_projective(&gl2_act(&alpha, &base)?)
}

/// A canonical text key for a (normalized) form, for use as a
/// deduplication or grouping handle.
pub fn form_key<F: Field>(f: &BinaryForm<F>) -> String {
    let field = f.field();
    f.coeffs()
        .iter()
        .map(|c| field.describe_elem(c))
        .collect::<Vec<_>>()
        .join("; ")
}

/// All distinct images over every triple, in deterministic order.
/// There are exactly (d−1)(d−2)/2 of them.
pub fn enumerate_rank_two(
    roots: &RootsOfUnity,
    frame: &[BinaryForm<CyclotomicField>; 3],
) -> Result<Vec<BinaryForm<CyclotomicField>>> {
    let mut seen: BTreeMap<String, BinaryForm<CyclotomicField>> = BTreeMap::new();
    for xi in all_triples(roots.d())? {
        let image = gamma_general(roots, frame, &xi)?;
        seen.entry(form_key(&image)).or_insert(image);
    }
    Ok(seen.into_values().collect())
}

/// Triples grouped by the form they map to.
pub fn fibers_by_gamma(
    roots: &RootsOfUnity,
    frame: &[BinaryForm<CyclotomicField>; 3],
) -> Result<Vec<Vec<RootTriple>>> {
    partition_by_key(all_triples(roots.d())?, |xi| {
        Ok(form_key(&gamma_general(roots, frame, xi)?))
    })
}

/// Counts the distinct values of p ↦ −(p, ξ_i; ξ_j, ξ_k) on the roots
/// interior to each of the three arcs. Always equal to the pure index
/// count `arc_counts`.
pub fn m_map(roots: &RootsOfUnity, xi: &RootTriple) -> Result<ArcCounts> {
    if xi.d() != roots.d() {
        return Err(Error::InvalidTriple(format!(
            "triple lives at degree {} but the roots have degree {}",
            xi.d(),
            roots.d()
        )));
    }
    let field = roots.field();
    let (i, j, k) = xi.indices();
    let d = roots.d();
    let count_distinct = |arc: Vec<usize>| -> Result<usize> {
        let mut values: Vec<CyclotomicNumber> = Vec::new();
        for p in arc {
            let c = cross_ratio(field, roots.root(p), roots.root(i), roots.root(j), roots.root(k))?;
            let v = field.neg(&c);
            if !values.contains(&v) {
                values.push(v);
            }
        }
        Ok(values.len())
    };
    Ok(ArcCounts(
        count_distinct(open_arc_between(d, i, j, k))?,
        count_distinct(open_arc_between(d, j, k, i))?,
        count_distinct(open_arc_between(d, k, i, j))?,
    ))
}
