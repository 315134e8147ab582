//! Subspaces of `k^n` stored by their reduced row-echelon basis, so equality
//! of subspaces is equality of the stored data.

use std::fmt;

use super::field::{FieldDescriptor, Scalar};
use super::matrix::{kernel_from_rref, rref_rows, ExactMatrix};

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldDescriptor,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {})", self.dim(), self.ambient_dim)?;
        for v in &self.basis {
            let row: Vec<String> = v.iter().map(|x| self.field.format(x)).collect();
            write!(f, "\n  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Subspace {
    pub fn from_vectors(field: &FieldDescriptor, ambient_dim: usize, mut vectors: Vec<Vec<Scalar>>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == ambient_dim));
        let pivots = rref_rows(field, &mut vectors, ambient_dim);
        vectors.truncate(pivots.len());
        Subspace {
            field: field.clone(),
            ambient_dim,
            basis: vectors,
            pivots,
        }
    }

    pub fn zero(field: &FieldDescriptor, ambient_dim: usize) -> Self {
        Self::from_vectors(field, ambient_dim, Vec::new())
    }

    pub fn full(field: &FieldDescriptor, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![field.zero(); ambient_dim];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace {
            field: field.clone(),
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots: the standard basis vectors at these
    /// positions span the echelon complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }

    /// Remainder of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if f.is_zero(&r[p]) {
                continue;
            }
            let c = r[p].clone();
            for (k, x) in b.iter().enumerate().skip(p) {
                if !f.is_zero(x) {
                    let t = f.mul(&c, x);
                    r[k] = f.sub(&r[k], &t);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn combination(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            if f.is_zero(c) {
                continue;
            }
            for (slot, x) in out.iter_mut().zip(b) {
                f.mul_add_assign(slot, c, x);
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::from_vectors(&self.field, self.ambient_dim, vs)
    }

    /// Annihilator in dual coordinates: `{f : f(v) = 0 for v in self}`.
    pub fn annihilator(&self) -> Subspace {
        kernel_from_rref(&self.field, &self.basis, &self.pivots, self.ambient_dim)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Image under a linear map given as a matrix (columns = images).
    pub fn map(&self, m: &ExactMatrix) -> Subspace {
        Subspace::from_vectors(&self.field, m.rows(), self.basis.iter().map(|v| m.apply(v)).collect())
    }

    /// Image under an arbitrary linear map given as a closure.
    pub fn map_with(&self, out_dim: usize, f: impl Fn(&[Scalar]) -> Vec<Scalar>) -> Subspace {
        Subspace::from_vectors(&self.field, out_dim, self.basis.iter().map(|v| f(v)).collect())
    }

    /// Span of `a ⊗ b` for basis vectors of `self` and `other`, in the
    /// row-major index `i·dim(other.ambient) + j`.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let f = &self.field;
        let n2 = other.ambient_dim;
        let mut vs = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.basis {
            for b in &other.basis {
                let mut v = vec![f.zero(); self.ambient_dim * n2];
                for (i, x) in a.iter().enumerate() {
                    if f.is_zero(x) {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if !f.is_zero(y) {
                            v[i * n2 + j] = f.mul(x, y);
                        }
                    }
                }
                vs.push(v);
            }
        }
        Subspace::from_vectors(f, self.ambient_dim * n2, vs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_and_membership() {
        let f = FieldDescriptor::rational();
        let v = |xs: &[i64]| xs.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let a = Subspace::from_vectors(&f, 3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::from_vectors(&f, 3, vec![v(&[1, 2, 1]), v(&[1, 0, -1])]);
        assert_eq!(a, b);
        assert!(a.contains(&v(&[2, 3, 1])));
        assert!(!a.contains(&v(&[0, 0, 1])));
        assert_eq!(a.coordinates(&v(&[2, 3, 1])).map(|c| a.combination(&c)), Some(v(&[2, 3, 1])));
        let c = Subspace::from_vectors(&f, 3, vec![v(&[0, 0, 1]), v(&[1, 0, 0])]);
        assert_eq!(a.intersection(&c).dim(), 1);
        assert!(a.sum(&c).is_full());
        assert_eq!(a.annihilator().dim(), 1);
        assert_eq!(a.tensor(&c).dim(), 4);
    }
}
