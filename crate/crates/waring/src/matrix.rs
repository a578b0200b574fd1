//! Exact dense matrices over a field, with deterministic elimination.
//!
//! Pivoting always selects the first nonzero entry scanning top to
//! bottom in the leftmost open column, so ranks, reduced forms and
//! kernel bases are reproducible across runs — the rank certificates
//! downstream depend on that.

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        ExactMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Internal("ragged matrix rows".into()));
        }
        Ok(ExactMatrix {
            field,
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (ExactMatrix<F>, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // First nonzero entry from `row` downwards.
            let Some(p) = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = f
                .inv(m.get(row, col))
                .expect("pivot is nonzero by construction");
            for c in col..m.cols {
                let v = f.mul(m.get(row, c), &inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || f.is_zero(m.get(r, col)) {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), &f.mul(&factor, m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right kernel, one vector per free column in
    /// ascending column order. Each vector has `cols` entries.
    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = Some(prow);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![f.zero(); self.cols];
            vec[free] = f.one();
            for (col, prow) in pivot_set.iter().enumerate() {
                if let Some(prow) = prow {
                    vec[col] = f.neg(r.get(*prow, free));
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::Internal(format!(
                "applied {}-column matrix to a vector of length {}",
                self.cols,
                v.len()
            )));
        }
        let f = &self.field;
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut acc = f.zero();
            for c in 0..self.cols {
                acc = f.add(&acc, &f.mul(self.get(r, c), &v[c]));
            }
            out.push(acc);
        }
        Ok(out)
    }
}
