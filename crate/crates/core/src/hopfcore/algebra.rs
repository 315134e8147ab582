//! The structure-constant data model.
//!
//! Index conventions: `H⊗H` coordinates use `i·d + j` for `e_i⊗e_j`, and
//! `H⊗H⊗H` uses `(i·d + j)·d + k`. Elements are dense coordinate vectors.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, FieldDescriptor, Scalar, Subspace};

/// A linear map between coordinate spaces stored column-sparse: `cols[x]`
/// is the image of basis vector `x`, with no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMap {
    pub in_dim: usize,
    pub out_dim: usize,
    pub cols: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMap {
    /// Accumulates `(input, output, coefficient)` triples; duplicates add up.
    pub fn from_triples(
        f: &FieldDescriptor,
        in_dim: usize,
        out_dim: usize,
        triples: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Self {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); in_dim];
        for (x, y, c) in triples {
            let slot = acc[x].entry(y).or_insert_with(|| f.zero());
            *slot = f.add(slot, &c);
        }
        let cols = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, c)| !f.is_zero(c)).collect())
            .collect();
        SparseMap { in_dim, out_dim, cols }
    }

    pub fn from_dense_columns(f: &FieldDescriptor, out_dim: usize, columns: &[Vec<Scalar>]) -> Self {
        let cols = columns
            .iter()
            .map(|c| {
                c.iter()
                    .enumerate()
                    .filter(|(_, x)| !f.is_zero(x))
                    .map(|(i, x)| (i, x.clone()))
                    .collect()
            })
            .collect();
        SparseMap {
            in_dim: columns.len(),
            out_dim,
            cols,
        }
    }

    pub fn col(&self, x: usize) -> &[(usize, Scalar)] {
        &self.cols[x]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn apply(&self, f: &FieldDescriptor, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![f.zero(); self.out_dim];
        for (x, c) in v.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for (y, a) in &self.cols[x] {
                f.mul_add_assign(&mut out[*y], a, c);
            }
        }
        out
    }

    pub fn transpose(&self, f: &FieldDescriptor) -> SparseMap {
        let triples = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(x, col)| col.iter().map(move |(y, c)| (*y, x, c.clone())));
        SparseMap::from_triples(f, self.out_dim, self.in_dim, triples)
    }

    pub fn to_matrix(&self, f: &FieldDescriptor) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(f, self.out_dim, self.in_dim);
        for (x, col) in self.cols.iter().enumerate() {
            for (y, c) in col {
                m.set(*y, x, c.clone());
            }
        }
        m
    }

    pub fn from_matrix(m: &ExactMatrix) -> SparseMap {
        let f = m.field();
        let columns: Vec<Vec<Scalar>> = (0..m.cols()).map(|c| m.column(c)).collect();
        Self::from_dense_columns(f, m.rows(), &columns)
    }
}

/// A declared basic multiplicative matrix: `entries[i·r + j]` is `c_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeclaredMatrix {
    pub size: usize,
    pub entries: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData {
    pub field: FieldDescriptor,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// `H⊗H → H`: column `i·d + j` is `e_i·e_j`.
    pub mult: SparseMap,
    pub unit: Vec<Scalar>,
    /// `H → H⊗H`: column `i` is `Δ(e_i)`.
    pub comult: SparseMap,
    pub counit: Vec<Scalar>,
    pub antipode: ExactMatrix,
    /// Spanning vectors of a declared coradical (needed in characteristic p).
    pub declared_coradical: Option<Vec<Vec<Scalar>>>,
    /// Declared basic multiplicative matrices of simple blocks of size ≥ 2.
    pub basic_matrices: Vec<DeclaredMatrix>,
}

impl HopfAlgebraData {
    /// Assembles and shape-checks an algebra; axioms are not checked here.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        field: FieldDescriptor,
        basis_labels: Vec<String>,
        mult: SparseMap,
        unit: Vec<Scalar>,
        comult: SparseMap,
        counit: Vec<Scalar>,
        antipode: ExactMatrix,
    ) -> Result<Self> {
        let d = basis_labels.len();
        let bad = |what: &str| Err(Error::DimensionMismatch(format!("{what} does not match dimension {d}")));
        if d == 0 {
            return bad("empty basis");
        }
        if mult.in_dim != d * d || mult.out_dim != d {
            return bad("multiplication tensor");
        }
        if comult.in_dim != d || comult.out_dim != d * d {
            return bad("comultiplication tensor");
        }
        if unit.len() != d || counit.len() != d {
            return bad("unit/counit");
        }
        if antipode.rows() != d || antipode.cols() != d {
            return bad("antipode");
        }
        if antipode.field() != &field {
            return Err(Error::FieldMismatch(field.to_string(), antipode.field().to_string()));
        }
        Ok(HopfAlgebraData {
            field,
            dim: d,
            basis_labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
            declared_coradical: None,
            basic_matrices: Vec::new(),
        })
    }

    pub fn f(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.unit.clone()
    }

    pub fn is_zero(&self, v: &[Scalar]) -> bool {
        v.iter().all(|x| self.field.is_zero(x))
    }

    pub fn add(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }

    pub fn scale(&self, s: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
        a.iter().map(|x| self.field.mul(s, x)).collect()
    }

    /// Product of two elements.
    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let d = self.dim;
        let mut out = self.zero();
        let nb: Vec<usize> = (0..d).filter(|&j| !f.is_zero(&b[j])).collect();
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for &j in &nb {
                let col = self.mult.col(i * d + j);
                if col.is_empty() {
                    continue;
                }
                let xy = f.mul(x, &b[j]);
                for (k, c) in col {
                    f.mul_add_assign(&mut out[*k], &xy, c);
                }
            }
        }
        out
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = self.zero();
        for (k, c) in self.mult.col(i * self.dim + j) {
            out[*k] = c.clone();
        }
        out
    }

    /// `Δ(a)` as a vector in `H⊗H`.
    pub fn comul(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.comult.apply(&self.field, a)
    }

    pub fn counit_of(&self, a: &[Scalar]) -> Scalar {
        let f = &self.field;
        let mut acc = f.zero();
        for (x, e) in a.iter().zip(&self.counit) {
            f.mul_add_assign(&mut acc, x, e);
        }
        acc
    }

    pub fn antipode_of(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(a)
    }

    /// Product in the algebra `H⊗H` of two vectors indexed `i·d + j`.
    pub fn mul_tensor2(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let d = self.dim;
        let mut out = vec![f.zero(); d * d];
        let na: Vec<usize> = (0..d * d).filter(|&i| !f.is_zero(&a[i])).collect();
        let nb: Vec<usize> = (0..d * d).filter(|&i| !f.is_zero(&b[i])).collect();
        for &pa in &na {
            let (p, q) = (pa / d, pa % d);
            for &pb in &nb {
                let (r, s) = (pb / d, pb % d);
                let left = self.mult.col(p * d + r);
                let right = self.mult.col(q * d + s);
                if left.is_empty() || right.is_empty() {
                    continue;
                }
                let ab = f.mul(&a[pa], &b[pb]);
                for (k1, c1) in left {
                    let t = f.mul(&ab, c1);
                    for (k2, c2) in right {
                        f.mul_add_assign(&mut out[k1 * d + k2], &t, c2);
                    }
                }
            }
        }
        out
    }

    /// `a ⊗ b` in `H⊗H` coordinates.
    pub fn tensor2(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let d = self.dim;
        let mut out = vec![f.zero(); d * d];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !f.is_zero(y) {
                    out[i * d + j] = f.mul(x, y);
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> ExactMatrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        ExactMatrix::from_columns(&self.field, self.dim, &cols)
    }

    /// Matrix of `h ↦ a h b`.
    pub fn two_sided_matrix(&self, a: &[Scalar], b: &[Scalar]) -> ExactMatrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| self.mul(&self.mul(a, &self.basis(j)), b))
            .collect();
        ExactMatrix::from_columns(&self.field, self.dim, &cols)
    }

    /// The counit composed with the unit, `h ↦ ε(h)1`, as a matrix.
    pub fn unit_counit(&self) -> ExactMatrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.scale(&self.counit[j], &self.unit)).collect();
        ExactMatrix::from_columns(&self.field, self.dim, &cols)
    }

    pub fn identity(&self) -> ExactMatrix {
        ExactMatrix::identity(&self.field, self.dim)
    }

    /// Subspace spanned by products `a·b` for `a ∈ A`, `b ∈ B`.
    pub fn product_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                vs.push(self.mul(x, y));
            }
        }
        Subspace::from_vectors(&self.field, self.dim, vs)
    }

    /// Element from integer coordinates; handy in tests.
    pub fn element(&self, coords: &[i64]) -> Vec<Scalar> {
        coords.iter().map(|&c| self.field.from_i64(c)).collect()
    }

    pub fn format_element(&self, v: &[Scalar]) -> String {
        let f = &self.field;
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(i, c)| {
                if f.is_one(c) {
                    self.basis_labels[i].clone()
                } else {
                    format!("({})*{}", f.format(c), self.basis_labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// The declared coradical as a subspace, if any.
    pub fn declared_coradical_space(&self) -> Option<Subspace> {
        self.declared_coradical
            .as_ref()
            .map(|vs| Subspace::from_vectors(&self.field, self.dim, vs.clone()))
    }
}
