//! Dense univariate polynomial helpers over an exact field.
//!
//! A polynomial is a coefficient slice in ascending powers with no
//! trailing zeros; the zero polynomial is the empty slice. These are
//! internal building blocks: cyclotomic moduli, polynomial gcds behind
//! the square-freeness tests, and Yun's multiplicity decomposition.

use crate::error::{Error, Result};
use crate::field::Field;

/// Degree, or `None` for the zero polynomial.
pub fn degree<F: Field>(a: &[F::Elem]) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

/// Drops trailing zeros so the representation is canonical.
pub fn trim<F: Field>(field: &F, mut a: Vec<F::Elem>) -> Vec<F::Elem> {
    while let Some(last) = a.last() {
        if field.is_zero(last) {
            a.pop();
        } else {
            break;
        }
    }
    a
}

pub fn is_zero<F: Field>(a: &[F::Elem]) -> bool {
    a.is_empty()
}

pub fn add<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(|| field.zero());
        let y = b.get(i).cloned().unwrap_or_else(|| field.zero());
        out.push(field.add(&x, &y));
    }
    trim(field, out)
}

pub fn sub<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let neg_b: Vec<F::Elem> = b.iter().map(|x| field.neg(x)).collect();
    add(field, a, &neg_b)
}

pub fn scale<F: Field>(field: &F, c: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
    trim(field, a.iter().map(|x| field.mul(c, x)).collect())
}

pub fn mul<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = field.add(&out[i + j], &field.mul(x, y));
        }
    }
    trim(field, out)
}

/// Euclidean division: returns `(quotient, remainder)` with
/// `deg r < deg b`. Division by the zero polynomial is an error.
pub fn div_rem<F: Field>(
    field: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> Result<(Vec<F::Elem>, Vec<F::Elem>)> {
    if b.is_empty() {
        return Err(Error::DivisionByZero);
    }
    let db = b.len() - 1;
    let lead_inv = field.inv(&b[db])?;
    let mut rem = trim(field, a.to_vec());
    if rem.len() < b.len() {
        return Ok((Vec::new(), rem));
    }
    let mut quot = vec![field.zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let dr = rem.len() - 1;
        let c = field.mul(&rem[dr], &lead_inv);
        let shift = dr - db;
        quot[shift] = c.clone();
        for (i, bi) in b.iter().enumerate() {
            rem[shift + i] = field.sub(&rem[shift + i], &field.mul(&c, bi));
        }
        // The leading term cancels exactly by construction.
        rem.pop();
        rem = trim(field, rem);
    }
    Ok((trim(field, quot), rem))
}

/// Exact division; errors if the remainder is nonzero.
pub fn div_exact<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let (q, r) = div_rem(field, a, b)?;
    if !r.is_empty() {
        return Err(Error::Internal(format!(
            "expected exact polynomial division, remainder has degree {}",
            r.len() - 1
        )));
    }
    Ok(q)
}

pub fn derivative<F: Field>(field: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    if a.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(a.len() - 1);
    for (i, c) in a.iter().enumerate().skip(1) {
        out.push(field.mul(&field.from_int(i as i64), c));
    }
    trim(field, out)
}

/// Horner evaluation.
pub fn eval<F: Field>(field: &F, a: &[F::Elem], x: &F::Elem) -> F::Elem {
    let mut acc = field.zero();
    for c in a.iter().rev() {
        acc = field.add(&field.mul(&acc, x), c);
    }
    acc
}

/// Scales a nonzero polynomial so its leading coefficient is 1.
pub fn monic<F: Field>(field: &F, a: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let lead = a.last().ok_or(Error::DivisionByZero)?;
    let li = field.inv(lead)?;
    Ok(scale(field, &li, a))
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    while !r1.is_empty() {
        let (_, r) = div_rem(field, &r0, &r1)?;
        r0 = r1;
        r1 = r;
    }
    if r0.is_empty() {
        Ok(r0)
    } else {
        monic(field, &r0)
    }
}

/// Extended Euclid: returns `(g, u, v)` with `u*a + v*b = g` and `g`
/// the monic gcd.
pub fn xgcd<F: Field>(
    field: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> Result<(Vec<F::Elem>, Vec<F::Elem>, Vec<F::Elem>)> {
    let one = vec![field.one()];
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut u0 = one.clone();
    let mut u1: Vec<F::Elem> = Vec::new();
    let mut v0: Vec<F::Elem> = Vec::new();
    let mut v1 = one;
    while !r1.is_empty() {
        let (q, r) = div_rem(field, &r0, &r1)?;
        let nu = sub(field, &u0, &mul(field, &q, &u1));
        let nv = sub(field, &v0, &mul(field, &q, &v1));
        r0 = std::mem::replace(&mut r1, r);
        u0 = std::mem::replace(&mut u1, nu);
        v0 = std::mem::replace(&mut v1, nv);
    }
    if r0.is_empty() {
        return Ok((r0, u0, v0));
    }
    let li = field.inv(r0.last().unwrap())?;
    Ok((
        scale(field, &li, &r0),
        scale(field, &li, &u0),
        scale(field, &li, &v0),
    ))
}

/// The product of the distinct irreducible factors, monic.
pub fn squarefree_part<F: Field>(field: &F, a: &[F::Elem]) -> Result<Vec<F::Elem>> {
    if a.is_empty() {
        return Err(Error::ZeroForm);
    }
    if a.len() == 1 {
        return Ok(vec![field.one()]);
    }
    let g = gcd(field, a, &derivative(field, a))?;
    let part = div_exact(field, a, &g)?;
    monic(field, &part)
}

/// Yun's square-free decomposition (characteristic zero).
///
/// Returns pairs `(factor, multiplicity)` with each factor monic,
/// square-free, pairwise coprime, and nonconstant, such that the input
/// equals its leading coefficient times the product of
/// `factor^multiplicity`.
pub fn squarefree_decomposition<F: Field>(
    field: &F,
    a: &[F::Elem],
) -> Result<Vec<(Vec<F::Elem>, usize)>> {
    if a.is_empty() {
        return Err(Error::ZeroForm);
    }
    let f = monic(field, a)?;
    if f.len() == 1 {
        return Ok(Vec::new());
    }
    let fd = derivative(field, &f);
    let g = gcd(field, &f, &fd)?;
    let mut c = div_exact(field, &f, &g)?;
    let mut d = sub(field, &div_exact(field, &fd, &g)?, &derivative(field, &c));
    let mut out = Vec::new();
    let mut mult = 1usize;
    loop {
        let a_i = gcd(field, &c, &d)?;
        if a_i.len() > 1 {
            out.push((a_i.clone(), mult));
        }
        c = div_exact(field, &c, &a_i)?;
        if c.len() == 1 {
            break;
        }
        d = sub(field, &div_exact(field, &d, &a_i)?, &derivative(field, &c));
        mult += 1;
    }
    Ok(out)
}
