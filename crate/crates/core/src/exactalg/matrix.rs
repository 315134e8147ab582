//! Dense exact matrices over a single field.
//!
//! Convention used everywhere a matrix represents a linear map on
//! coordinates: column `a` holds the image of basis vector `e_a`, so
//! `M · v` applies the map.

use std::fmt;

use super::field::{FieldDescriptor, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.field.format(self.get(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl ExactMatrix {
    pub fn zeros(field: &FieldDescriptor, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &FieldDescriptor, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: &FieldDescriptor, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(ExactMatrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: &FieldDescriptor, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m.data[r * m.cols + c] = v.clone();
            }
        }
        m
    }

    pub fn from_i64(field: &FieldDescriptor, rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Self::from_rows(field, rows).expect("rectangular literal")
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Scalar) {
        let i = r * self.cols + c;
        self.data[i] = self.field.add(&self.data[i], v);
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        self.field.is_one(x)
                    } else {
                        self.field.is_zero(x)
                    }
                })
            })
    }

    fn check_field(&self, other: &ExactMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Ok(ExactMatrix { data, ..self.clone_shape() })
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> ExactMatrix {
        let data = self.data.iter().map(|a| self.field.mul(a, s)).collect();
        ExactMatrix { data, ..self.clone_shape() }
    }

    fn clone_shape(&self) -> ExactMatrix {
        ExactMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: Vec::new(),
        }
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            let orow = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for (c, slot) in orow.iter_mut().enumerate() {
                    let b = &other.data[k * other.cols + c];
                    f.mul_add_assign(slot, a, b);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `M · v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (r, slot) in out.iter_mut().enumerate() {
                f.mul_add_assign(slot, self.get(r, c), x);
            }
        }
        out
    }

    /// Reduced row-echelon form: leftmost pivots with leading coefficient 1.
    /// Returns the reduced matrix and its pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let pivots = rref_rows(&self.field, &mut rows, self.cols);
        let mut m = self.clone_shape();
        m.data = rows.into_iter().flatten().collect();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// `{v : M v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let pivots = rref_rows(&self.field, &mut rows, self.cols);
        kernel_from_rref(&self.field, &rows, &pivots, self.cols)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(&self.field, self.rows, (0..self.cols).map(|c| self.column(c)).collect())
    }

    pub fn inverse(&self) -> Result<ExactMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let f = &self.field;
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { f.one() } else { f.zero() }));
                row
            })
            .collect();
        let pivots = rref_rows(f, &mut rows, n);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(f, n, n);
        for (r, row) in rows.into_iter().enumerate() {
            for (c, v) in row.into_iter().skip(n).enumerate() {
                inv.data[r * n + c] = v;
            }
        }
        Ok(inv)
    }

    /// Some solution of `M x = b`, or `None` when inconsistent. Free
    /// variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let f = &self.field;
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let pivots = rref_rows(f, &mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = rows[i][self.cols].clone();
        }
        Some(x)
    }

    /// `M^k`; negative exponents go through the exact inverse.
    pub fn pow(&self, k: i64) -> Result<ExactMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `(A⊗B)[i·rB + k, j·cB + l] = A[i,j]·B[k,l]`.
    pub fn kronecker(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_field(other)?;
        let f = &self.field;
        let (rb, cb) = (other.rows, other.cols);
        let mut out = Self::zeros(f, self.rows * rb, self.cols * cb);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        out.data[(i * rb + k) * out.cols + j * cb + l] = f.mul(a, other.get(k, l));
                    }
                }
            }
        }
        Ok(out)
    }

    /// True iff `M^n = 0` for `n = rows`, tested by repeated squaring.
    pub fn is_nilpotent(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut p = self.clone();
        let mut reached = 1usize;
        while reached < self.rows {
            if p.is_zero() {
                return Ok(true);
            }
            p = p.mul(&p)?;
            reached *= 2;
        }
        Ok(p.is_zero())
    }
}

/// In-place RREF on a list of rows of width `width`; returns pivot columns.
/// Rows are reordered so the first `pivots.len()` are the nonzero ones.
pub(crate) fn rref_rows(f: &FieldDescriptor, rows: &mut [Vec<Scalar>], width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]).expect("nonzero pivot");
        if !f.is_one(&inv) {
            for x in rows[r][c..].iter_mut() {
                if !f.is_zero(x) {
                    *x = f.mul(x, &inv);
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (prow, tail) = tail.split_first_mut().unwrap();
        let nz: Vec<usize> = (c..prow.len()).filter(|&k| !f.is_zero(&prow[k])).collect();
        for other in head.iter_mut().chain(tail.iter_mut()) {
            if f.is_zero(&other[c]) {
                continue;
            }
            let factor = other[c].clone();
            for &k in &nz {
                let t = f.mul(&factor, &prow[k]);
                other[k] = f.sub(&other[k], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn kernel_from_rref(
    f: &FieldDescriptor,
    rows: &[Vec<Scalar>],
    pivots: &[usize],
    width: usize,
) -> Subspace {
    let mut is_pivot = vec![false; width];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..width).filter(|&c| !is_pivot[c]) {
        let mut v = vec![f.zero(); width];
        v[free] = f.one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = f.neg(&rows[i][free]);
        }
        basis.push(v);
    }
    Subspace::from_vectors(f, width, basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rational()
    }

    #[test]
    fn kernel_examples() {
        let f = q();
        assert_eq!(ExactMatrix::identity(&f, 3).kernel().dim(), 0);
        assert_eq!(ExactMatrix::zeros(&f, 2, 2).kernel().dim(), 2);
        let k = ExactMatrix::from_i64(&f, &[&[1, 1], &[1, 1]]).kernel();
        assert_eq!(k, Subspace::from_vectors(&f, 2, vec![vec![f.from_i64(1), f.from_i64(-1)]]));
    }

    #[test]
    fn kronecker_examples() {
        let f = q();
        let i6 = ExactMatrix::identity(&f, 2).kronecker(&ExactMatrix::identity(&f, 3)).unwrap();
        assert_eq!(i6, ExactMatrix::identity(&f, 6));
        let a = ExactMatrix::from_i64(&f, &[&[1, 2], &[3, 4]]);
        assert_eq!(a.kronecker(&ExactMatrix::identity(&f, 1)).unwrap(), a);
        let n = ExactMatrix::from_i64(&f, &[&[0, 1], &[0, 0]]);
        let nn = n.kronecker(&n).unwrap();
        let mut expect = ExactMatrix::zeros(&f, 4, 4);
        expect.set(0, 3, f.one());
        assert_eq!(nn, expect);
    }

    #[test]
    fn nilpotency_examples() {
        let f = q();
        let s = ExactMatrix::from_i64(&f, &[&[0, 1, 5], &[0, 0, 2], &[0, 0, 0]]);
        assert!(s.is_nilpotent().unwrap());
        assert!(!ExactMatrix::identity(&f, 3).is_nilpotent().unwrap());
        let j = ExactMatrix::from_i64(&f, &[&[1, 1], &[0, 1]]);
        assert!(j.sub(&ExactMatrix::identity(&f, 2)).unwrap().is_nilpotent().unwrap());
        assert!(ExactMatrix::zeros(&f, 2, 3).is_nilpotent().is_err());
    }

    #[test]
    fn inverse_and_powers() {
        let f = q();
        let a = ExactMatrix::from_i64(&f, &[&[2, 1], &[1, 1]]);
        let ai = a.inverse().unwrap();
        assert!(a.mul(&ai).unwrap().is_identity());
        assert_eq!(a.pow(-2).unwrap(), ai.mul(&ai).unwrap());
        assert!(a.pow(0).unwrap().is_identity());
        assert_eq!(ExactMatrix::from_i64(&f, &[&[1, 1], &[1, 1]]).inverse(), Err(Error::Singular));
        let x = a.solve(&[f.from_i64(3), f.from_i64(2)]).unwrap();
        assert_eq!(x, vec![f.from_i64(1), f.from_i64(1)]);
    }
}
