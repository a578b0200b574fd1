//! Binary forms and the apolarity pairing.
//!
//! A binary form of degree d is stored as d+1 coefficients in
//! ascending powers of y: index a holds the coefficient of
//! x^(d-a) * y^a. Forms in the dual variables X, Y (the ones that act
//! by differentiation) use the same layout. The apolarity action lets
//! g(X, Y) act on F(x, y) as g(d/dx, d/dy) applied to F, and the
//! catalecticant matrices below are exactly the matrices of that
//! action in the monomial bases.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{falling_factorial, Field, Rational, Rationals};
use crate::matrix::ExactMatrix;
use crate::poly;

#[derive(Clone, PartialEq, Debug)]
pub struct BinaryForm<F: Field> {
    field: F,
    degree: usize,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> BinaryForm<F> {
    /// A degree-d form from its d+1 coefficients (ascending powers of y).
    pub fn new(field: F, degree: usize, coeffs: Vec<F::Elem>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::CoefficientCount {
                degree,
                expected: degree + 1,
                got: coeffs.len(),
            });
        }
        Ok(BinaryForm {
            field,
            degree,
            coeffs,
        })
    }

    pub fn zero(field: F, degree: usize) -> Self {
        let coeffs = vec![field.zero(); degree + 1];
        BinaryForm {
            field,
            degree,
            coeffs,
        }
    }

    /// x^(d-a) * y^a.
    pub fn monomial(field: F, degree: usize, y_power: usize) -> Result<Self> {
        if y_power > degree {
            return Err(Error::DegreeConstraint(format!(
                "monomial y-power {y_power} exceeds degree {degree}"
            )));
        }
        let mut form = Self::zero(field, degree);
        form.coeffs[y_power] = form.field.one();
        Ok(form)
    }

    /// The linear form u*x + v*y.
    pub fn linear(field: F, u: F::Elem, v: F::Elem) -> Self {
        BinaryForm {
            field,
            degree: 1,
            coeffs: vec![u, v],
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// Coefficient of x^(d-a) * y^a.
    pub fn coeff(&self, a: usize) -> &F::Elem {
        &self.coeffs[a]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        BinaryForm {
            field: self.field.clone(),
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| self.field.mul(c, x)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.neg(&self.field.one()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        BinaryForm::new(self.field.clone(), self.degree, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Product of forms; degrees add.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field.describe(),
                other.field.describe()
            )));
        }
        let f = &self.field;
        let degree = self.degree + other.degree;
        let mut coeffs = vec![f.zero(); degree + 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if f.is_zero(ca) {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                coeffs[a + b] = f.add(&coeffs[a + b], &f.mul(ca, cb));
            }
        }
        BinaryForm::new(f.clone(), degree, coeffs)
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = BinaryForm::new(self.field.clone(), 0, vec![self.field.one()]).unwrap();
        for _ in 0..exp {
            acc = acc.mul(self).unwrap();
        }
        acc
    }

    /// Exact evaluation at the point (u, v).
    pub fn eval(&self, u: &F::Elem, v: &F::Elem) -> F::Elem {
        let f = &self.field;
        let d = self.degree;
        // Powers u^(d-a) and v^a, built incrementally.
        let mut upow = vec![f.one()];
        let mut vpow = vec![f.one()];
        for i in 1..=d {
            upow.push(f.mul(&upow[i - 1], u));
            vpow.push(f.mul(&vpow[i - 1], v));
        }
        let mut acc = f.zero();
        for (a, c) in self.coeffs.iter().enumerate() {
            let term = f.mul(c, &f.mul(&upow[d - a], &vpow[a]));
            acc = f.add(&acc, &term);
        }
        acc
    }

    /// Swap x and y (reverses the coefficient vector).
    pub fn swap_variables(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        BinaryForm {
            field: self.field.clone(),
            degree: self.degree,
            coeffs,
        }
    }

    /// Largest m with y^m dividing the form; 0 for the zero form.
    pub fn y_multiplicity(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !self.field.is_zero(c))
            .unwrap_or(0)
    }

    /// F(x, 1) as a trimmed ascending univariate coefficient vector.
    pub fn dehomogenized(&self) -> Vec<F::Elem> {
        let mut v: Vec<F::Elem> = self.coeffs.iter().rev().cloned().collect();
        v = poly::trim(&self.field, std::mem::take(&mut v));
        v
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field.describe(),
                other.field.describe()
            )));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeConstraint(format!(
                "degrees {} and {} differ",
                self.degree, other.degree
            )));
        }
        Ok(())
    }
}

impl BinaryForm<Rationals> {
    /// Convenience constructor from machine integers.
    pub fn from_integers(degree: usize, coeffs: &[i64]) -> Result<Self> {
        BinaryForm::new(
            Rationals,
            degree,
            coeffs.iter().map(|&c| Rational::from_int(c)).collect(),
        )
    }
}

impl<F: Field> fmt::Display for BinaryForm<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree;
        let mut terms = Vec::new();
        for (a, c) in self.coeffs.iter().enumerate() {
            if self.field.is_zero(c) {
                continue;
            }
            let var = |name: &str, p: usize| match p {
                0 => String::new(),
                1 => name.to_string(),
                _ => format!("{name}^{p}"),
            };
            let mono = match (var("x", d - a), var("y", a)) {
                (x, y) if x.is_empty() => y,
                (x, y) if y.is_empty() => x,
                (x, y) => format!("{x}*{y}"),
            };
            let cs = self.field.describe_elem(c);
            let coef = if cs == "1" && !mono.is_empty() {
                String::new()
            } else if cs == "-1" && !mono.is_empty() {
                "-".to_string()
            } else if cs.contains(' ') {
                format!("({cs})")
            } else {
                cs
            };
            if coef == "-" {
                terms.push(format!("-{mono}"));
                continue;
            }
            let term = match (coef.is_empty(), mono.is_empty()) {
                (true, _) => mono.clone(),
                (_, true) => coef,
                _ => format!("{coef}*{mono}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            write!(out, "0")
        } else {
            write!(out, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

/// 2x2 matrix [[a, b], [c, d]]; acts on a linear form u*x + v*y by
/// sending its coordinate vector (u, v) to (a*u + b*v, c*u + d*v).
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix2<E> {
    pub a: E,
    pub b: E,
    pub c: E,
    pub d: E,
}

impl<E: Clone> Matrix2<E> {
    pub fn new(a: E, b: E, c: E, d: E) -> Self {
        Matrix2 { a, b, c, d }
    }

    pub fn det<F: Field<Elem = E>>(&self, f: &F) -> E {
        f.sub(&f.mul(&self.a, &self.d), &f.mul(&self.b, &self.c))
    }

    pub fn mul<F: Field<Elem = E>>(&self, rhs: &Self, f: &F) -> Self {
        Matrix2 {
            a: f.add(&f.mul(&self.a, &rhs.a), &f.mul(&self.b, &rhs.c)),
            b: f.add(&f.mul(&self.a, &rhs.b), &f.mul(&self.b, &rhs.d)),
            c: f.add(&f.mul(&self.c, &rhs.a), &f.mul(&self.d, &rhs.c)),
            d: f.add(&f.mul(&self.c, &rhs.b), &f.mul(&self.d, &rhs.d)),
        }
    }

    /// Adjugate: Matrix2 times its adjugate is det times the identity,
    /// which is all a projective inverse needs.
    pub fn adjugate<F: Field<Elem = E>>(&self, f: &F) -> Self {
        Matrix2 {
            a: self.d.clone(),
            b: f.neg(&self.b),
            c: f.neg(&self.c),
            d: self.a.clone(),
        }
    }

    pub fn apply<F: Field<Elem = E>>(&self, u: &E, v: &E, f: &F) -> (E, E) {
        (
            f.add(&f.mul(&self.a, u), &f.mul(&self.b, v)),
            f.add(&f.mul(&self.c, u), &f.mul(&self.d, v)),
        )
    }
}

/// Applies g(d/dx, d/dy) to F. Requires deg g <= deg F; the result has
/// degree deg F - deg g.
pub fn apolar_apply<F: Field>(g: &BinaryForm<F>, f: &BinaryForm<F>) -> Result<BinaryForm<F>> {
    if g.field != f.field {
        return Err(Error::FieldMismatch(format!(
            "{} vs {}",
            g.field.describe(),
            f.field.describe()
        )));
    }
    let (e, d) = (g.degree, f.degree);
    if e > d {
        return Err(Error::DegreeConstraint(format!(
            "cannot apply a degree-{e} operator to a degree-{d} form"
        )));
    }
    let fd = &f.field;
    let mut out = vec![fd.zero(); d - e + 1];
    for (t, slot) in out.iter_mut().enumerate() {
        // X^(e-j) Y^j acting on x^(d-a) y^a with a = t + j contributes
        // <d-t-j>_(e-j) * <t+j>_j.
        for (j, gj) in g.coeffs.iter().enumerate() {
            if fd.is_zero(gj) {
                continue;
            }
            let scale = &falling_factorial(d - t - j, e - j) * &falling_factorial(t + j, j);
            let term = fd.mul(gj, &fd.mul(&f.coeffs[t + j], &fd.from_rational(&scale)));
            *slot = fd.add(slot, &term);
        }
    }
    BinaryForm::new(fd.clone(), d - e, out)
}

/// The matrix of the apolarity action in degree e: rows index the
/// coefficients of the degree (d-e) image, column j is the image of
/// X^(e-j) Y^j. Kernel vectors are the degree-e forms apolar to F.
pub fn catalecticant<F: Field>(f: &BinaryForm<F>, e: usize) -> Result<ExactMatrix<F>> {
    let d = f.degree;
    if e > d {
        return Err(Error::DegreeConstraint(format!(
            "catalecticant degree {e} exceeds form degree {d}"
        )));
    }
    let fd = &f.field;
    let mut m = ExactMatrix::zeros(fd.clone(), d - e + 1, e + 1);
    for t in 0..=(d - e) {
        for j in 0..=e {
            let scale = &falling_factorial(t + j, j) * &falling_factorial(d - t - j, e - j);
            m.set(
                t,
                j,
                fd.mul(&f.coeffs[t + j], &fd.from_rational(&scale)),
            );
        }
    }
    Ok(m)
}

/// Forms of degree e apolar to F, as a deterministic basis.
pub fn apolar_kernel_basis<F: Field>(f: &BinaryForm<F>, e: usize) -> Result<Vec<BinaryForm<F>>> {
    let m = catalecticant(f, e)?;
    m.kernel()
        .into_iter()
        .map(|v| BinaryForm::new(f.field.clone(), e, v))
        .collect()
}

/// dim of the image of the apolarity action in degree i; zero beyond
/// the degree of the form.
pub fn hilbert_function<F: Field>(f: &BinaryForm<F>, i: usize) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    if i > f.degree {
        return Ok(0);
    }
    Ok(catalecticant(f, i)?.rank())
}

/// True when the form has no repeated projective root: at most one
/// factor of y, and the dehomogenization is coprime to its derivative.
pub fn is_square_free<F: Field>(g: &BinaryForm<F>) -> Result<bool> {
    if g.is_zero() {
        return Err(Error::ZeroForm);
    }
    if g.y_multiplicity() >= 2 {
        return Ok(false);
    }
    let f = &g.field;
    let u = g.dehomogenized();
    let gcd = poly::gcd(f, &u, &poly::derivative(f, &u))?;
    Ok(gcd.len() <= 1)
}

/// Number of distinct projective roots over the algebraic closure.
pub fn distinct_root_count<F: Field>(g: &BinaryForm<F>) -> Result<usize> {
    if g.is_zero() {
        return Err(Error::ZeroForm);
    }
    let f = &g.field;
    let infinity = if g.y_multiplicity() >= 1 { 1 } else { 0 };
    let u = g.dehomogenized();
    if u.len() <= 1 {
        return Ok(infinity);
    }
    let gcd = poly::gcd(f, &u, &poly::derivative(f, &u))?;
    Ok(infinity + (u.len() - gcd.len()))
}

/// Multiplicities of the distinct projective roots, descending.
/// Their sum is the degree of the form.
pub fn root_multiplicities<F: Field>(g: &BinaryForm<F>) -> Result<Vec<usize>> {
    if g.is_zero() {
        return Err(Error::ZeroForm);
    }
    let f = &g.field;
    let mut mults = Vec::new();
    let ym = g.y_multiplicity();
    if ym >= 1 {
        mults.push(ym);
    }
    let u = g.dehomogenized();
    if u.len() > 1 {
        for (factor, mult) in poly::squarefree_decomposition(f, &u)? {
            // Each distinct root of the factor carries this multiplicity.
            for _ in 0..factor.len() - 1 {
                mults.push(mult);
            }
        }
    }
    mults.sort_unstable_by(|a, b| b.cmp(a));
    debug_assert_eq!(mults.iter().sum::<usize>(), g.degree);
    Ok(mults)
}

/// Change of variables by an invertible 2x2 matrix: the induced
/// substitution sends F(x, y) to F(a*x + c*y, b*x + d*y), which is the
/// multiplicative extension of the action on linear forms.
pub fn gl2_act<F: Field>(m: &Matrix2<F::Elem>, f: &BinaryForm<F>) -> Result<BinaryForm<F>> {
    let fd = &f.field;
    if fd.is_zero(&m.det(fd)) {
        return Err(Error::SingularMatrix);
    }
    let d = f.degree;
    let first = BinaryForm::linear(fd.clone(), m.a.clone(), m.c.clone());
    let second = BinaryForm::linear(fd.clone(), m.b.clone(), m.d.clone());
    // Powers of the two image lines, then one convolution per term.
    let mut fpow = Vec::with_capacity(d + 1);
    let mut spow = Vec::with_capacity(d + 1);
    let one = BinaryForm::new(fd.clone(), 0, vec![fd.one()])?;
    fpow.push(one.clone());
    spow.push(one);
    for k in 1..=d {
        fpow.push(fpow[k - 1].mul(&first)?);
        spow.push(spow[k - 1].mul(&second)?);
    }
    let mut acc = BinaryForm::zero(fd.clone(), d);
    for (a, c) in f.coeffs.iter().enumerate() {
        if fd.is_zero(c) {
            continue;
        }
        let term = fpow[d - a].mul(&spow[a])?.scale(c);
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Expands prod (u_i x + v_i y) from the list of coefficient pairs.
pub fn product_of_linear_forms<F: Field>(field: &F, lines: &[(F::Elem, F::Elem)]) -> BinaryForm<F> {
    let mut acc = BinaryForm::new(field.clone(), 0, vec![field.one()]).unwrap();
    for (u, v) in lines {
        let line = BinaryForm::linear(field.clone(), u.clone(), v.clone());
        acc = acc.mul(&line).unwrap();
    }
    acc
}

/// Scales a nonzero form so its first nonzero coefficient is 1,
/// giving a canonical representative of the projective class.
pub fn normalize_projective<F: Field>(f: &BinaryForm<F>) -> Result<BinaryForm<F>> {
    let fd = &f.field;
    let lead = f
        .coeffs
        .iter()
        .find(|c| !fd.is_zero(c))
        .ok_or(Error::ZeroForm)?;
    Ok(f.scale(&fd.inv(lead)?))
}

/// Whether the linear form L divides F, tested by exact evaluation of
/// F at the projective root of L.
pub fn divides<F: Field>(l: &BinaryForm<F>, f: &BinaryForm<F>) -> Result<bool> {
    if l.degree != 1 {
        return Err(Error::DegreeConstraint(format!(
            "divisor must be linear, got degree {}",
            l.degree
        )));
    }
    if l.is_zero() {
        return Err(Error::ZeroForm);
    }
    let fd = &f.field;
    // u*x + v*y vanishes at (v, -u).
    let root_u = l.coeffs[1].clone();
    let root_v = fd.neg(&l.coeffs[0]);
    Ok(fd.is_zero(&f.eval(&root_u, &root_v)))
}
