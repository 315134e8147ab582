//! The Drinfeld double `D(H) = H^{*cop} ⋈ H` and its Drinfeld element.
//!
//! Basis `f^i ⋈ e_j` at index `i·d + j`. Conventions:
//!
//! * `(f ⋈ h)(f' ⋈ h') = Σ f·(h₁ ⇀ f' ↼ S⁻¹(h₃)) ⋈ h₂h'` with
//!   `(h ⇀ f ↼ k)(x) = f(k x h)`;
//! * `Δ(f ⋈ h) = Σ (f₂ ⋈ h₁) ⊗ (f₁ ⋈ h₂)`, `ε(f ⋈ h) = f(1)ε(h)`;
//! * `S(f ⋈ h) = (ε ⋈ S(h))(f∘S⁻¹ ⋈ 1)`;
//! * `u = Σ_i (f^i∘S⁻¹) ⋈ e_i`.
//!
//! The identity `u x = S_D²(x) u` is checked on the algebra generators
//! `f^c ⋈ 1` and `ε ⋈ e_b`; both sides of `x ↦ u x u⁻¹ = S_D²(x)` are algebra
//! automorphisms, so this decides the identity on all of `D(H)`.
//!
//! [`DoubleEngine`] multiplies elements without materializing the d⁴-entry
//! structure tensor, which keeps doubles of 27-dimensional algebras usable.

use super::algebra::{HopfAlgebraData, SparseMap};
use super::verify::verify_hopf;
use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, FieldDescriptor, Scalar};

pub struct DoubleEngine {
    pub base: HopfAlgebraData,
    d: usize,
    /// `f^a f^p` in `H*`, indexed `a·d + p`.
    dual_mul: Vec<Vec<(usize, Scalar)>>,
    /// `(ε ⋈ e_b)(f^c ⋈ 1)`, indexed `b·d + c`, entries `(p·d + q, coeff)`.
    cross: Vec<Vec<(usize, Scalar)>>,
    /// `S⁻¹` of `H`.
    s_inv: ExactMatrix,
    antipode: SparseMap,
}

impl DoubleEngine {
    pub fn new(h: &HopfAlgebraData) -> Result<Self> {
        let f = h.field.clone();
        let d = h.dim;
        let s_inv = h.antipode.inverse()?;
        let dual_mul = h.comult.transpose(&f).cols;

        let mut cross: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(d * d);
        let s_inv_cols: Vec<Vec<Scalar>> = (0..d).map(|k| s_inv.column(k)).collect();
        for b in 0..d {
            let mut acc: Vec<std::collections::BTreeMap<usize, Scalar>> = vec![Default::default(); d];
            // Δ²(e_b) = Σ e_{b1} ⊗ e_{b2} ⊗ e_{b3}
            for (jk, c1) in h.comult.col(b) {
                let (b1, rest) = (jk / d, jk % d);
                for (lm, c2) in h.comult.col(rest) {
                    let (b2, b3) = (lm / d, lm % d);
                    let coef = f.mul(c1, c2);
                    for p in 0..d {
                        let w = h.mul(&h.mul(&s_inv_cols[b3], &h.basis(p)), &h.basis(b1));
                        for (c, x) in w.iter().enumerate() {
                            if f.is_zero(x) {
                                continue;
                            }
                            let slot = acc[c].entry(p * d + b2).or_insert_with(|| f.zero());
                            *slot = f.add(slot, &f.mul(&coef, x));
                        }
                    }
                }
            }
            for m in acc {
                cross.push(m.into_iter().filter(|(_, v)| !f.is_zero(v)).collect());
            }
        }

        let mut engine = DoubleEngine {
            base: h.clone(),
            d,
            dual_mul,
            cross,
            s_inv,
            antipode: SparseMap {
                in_dim: 0,
                out_dim: 0,
                cols: Vec::new(),
            },
        };
        let cols: Vec<Vec<Scalar>> = (0..d * d).map(|x| engine.antipode_basis(x / d, x % d)).collect();
        engine.antipode = SparseMap::from_dense_columns(&f, d * d, &cols);
        Ok(engine)
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.base.field
    }

    pub fn dim(&self) -> usize {
        self.d * self.d
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![self.field().zero(); self.dim()]
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[i] = self.field().one();
        v
    }

    /// `ε ⋈ 1`.
    pub fn one(&self) -> Vec<Scalar> {
        let h = &self.base;
        let f = self.field();
        let mut v = self.zero();
        for a in 0..self.d {
            for b in 0..self.d {
                v[a * self.d + b] = f.mul(&h.counit[a], &h.unit[b]);
            }
        }
        v
    }

    /// `φ ⋈ h` for a functional `φ` (coordinates on the dual basis) and `h ∈ H`.
    pub fn pure(&self, phi: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        self.base.tensor2(phi, x)
    }

    /// Product of two elements of `D(H)`.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let d = self.d;
        let h = &self.base;
        // yq[c][q] = e_q · (Σ_e y_{ce} e_e)
        let rows: Vec<Option<Vec<Scalar>>> = (0..d)
            .map(|c| {
                let r = &y[c * d..(c + 1) * d];
                (!h.is_zero(r)).then(|| r.to_vec())
            })
            .collect();
        let mut yq: Vec<Option<Vec<Scalar>>> = vec![None; d * d];
        // u[b][p] = Σ_c Σ_{(p,q)} X_{bc}[p,q] · yq[c][q]
        let xb: Vec<bool> = (0..d).map(|b| (0..d).any(|a| !f.is_zero(&x[a * d + b]))).collect();
        let mut u: Vec<Vec<Scalar>> = vec![Vec::new(); d * d];
        for b in (0..d).filter(|&b| xb[b]) {
            for (c, row) in rows.iter().enumerate() {
                let Some(row) = row else { continue };
                for (pq, coef) in &self.cross[b * d + c] {
                    let (p, q) = (pq / d, pq % d);
                    let prod = yq[c * d + q].get_or_insert_with(|| h.mul(&h.basis(q), row));
                    let slot = &mut u[b * d + p];
                    if slot.is_empty() {
                        *slot = h.zero();
                    }
                    for (s, v) in slot.iter_mut().zip(prod.iter()) {
                        f.mul_add_assign(s, coef, v);
                    }
                }
            }
        }
        let mut out = self.zero();
        for a in 0..d {
            for b in 0..d {
                let xab = &x[a * d + b];
                if f.is_zero(xab) {
                    continue;
                }
                for p in 0..d {
                    let ub = &u[b * d + p];
                    if ub.is_empty() {
                        continue;
                    }
                    for (k1, c1) in &self.dual_mul[a * d + p] {
                        let t = f.mul(xab, c1);
                        for (k2, v) in ub.iter().enumerate() {
                            f.mul_add_assign(&mut out[k1 * d + k2], &t, v);
                        }
                    }
                }
            }
        }
        out
    }

    /// `(f^a ⋈ e_b)(f^c ⋈ e_e)` straight from the formula.
    pub fn mul_basis(&self, a: usize, b: usize, c: usize, e: usize) -> Vec<(usize, Scalar)> {
        let f = self.field();
        let d = self.d;
        let mut acc = std::collections::BTreeMap::new();
        for (pq, coef) in &self.cross[b * d + c] {
            let (p, q) = (pq / d, pq % d);
            let right = self.base.mult.col(q * d + e);
            if right.is_empty() {
                continue;
            }
            for (k1, c1) in &self.dual_mul[a * d + p] {
                let t = f.mul(coef, c1);
                for (k2, c2) in right {
                    let slot = acc.entry(k1 * d + k2).or_insert_with(|| f.zero());
                    *slot = f.add(slot, &f.mul(&t, c2));
                }
            }
        }
        acc.into_iter().filter(|(_, v)| !f.is_zero(v)).collect()
    }

    fn antipode_basis(&self, a: usize, b: usize) -> Vec<Scalar> {
        let h = &self.base;
        let d = self.d;
        let f = self.field();
        // (ε ⋈ S(e_b)) (f^a∘S⁻¹ ⋈ 1)
        let sb = h.antipode.column(b);
        let phi: Vec<Scalar> = (0..d).map(|p| self.s_inv.get(a, p).clone()).collect();
        let mut out = self.zero();
        for (b2, x) in sb.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (c, y) in phi.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                for (pq, coef) in &self.cross[b2 * d + c] {
                    f.mul_add_assign(&mut out[*pq], &xy, coef);
                }
            }
        }
        out
    }

    pub fn antipode_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(self.field(), x)
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        let h = &self.base;
        let f = self.field();
        let mut acc = f.zero();
        for (i, v) in x.iter().enumerate() {
            if !f.is_zero(v) {
                let e = f.mul(&h.unit[i / self.d], &h.counit[i % self.d]);
                f.mul_add_assign(&mut acc, v, &e);
            }
        }
        acc
    }

    pub fn drinfeld_element(&self) -> Vec<Scalar> {
        let d = self.d;
        let mut u = self.zero();
        for i in 0..d {
            for p in 0..d {
                u[p * d + i] = self.s_inv.get(i, p).clone();
            }
        }
        u
    }

    /// Algebra generators `f^c ⋈ 1` and `ε ⋈ e_b`.
    pub fn generators(&self) -> Vec<Vec<Scalar>> {
        let h = &self.base;
        let d = self.d;
        let mut gens = Vec::with_capacity(2 * d);
        for c in 0..d {
            let mut phi = h.zero();
            phi[c] = self.field().one();
            gens.push(self.pure(&phi, &h.unit));
        }
        for b in 0..d {
            gens.push(self.pure(&h.counit, &h.basis(b)));
        }
        gens
    }

    /// Checks `u x = S_D²(x) u` on generators; returns the first failing
    /// generator index.
    pub fn check_drinfeld_conjugation(&self, u: &[Scalar]) -> Option<usize> {
        self.generators().iter().position(|x| {
            let s2x = self.antipode_of(&self.antipode_of(x));
            self.mul(u, x) != self.mul(&s2x, u)
        })
    }

    /// A two-sided inverse of `u`, from the standard candidates
    /// `Σ f^i ⋈ S²(e_i)`-type formulas, verified exactly.
    pub fn drinfeld_inverse(&self, u: &[Scalar]) -> Option<Vec<Scalar>> {
        let h = &self.base;
        let d = self.d;
        let one = self.one();
        let s2 = h.antipode.mul(&h.antipode).ok()?;
        let s_inv2 = self.s_inv.mul(&self.s_inv).ok()?;
        let mut candidates = Vec::new();
        for m in [&s2, &s_inv2, &h.antipode, &self.s_inv] {
            // Σ_i f^i ⋈ M(e_i) and Σ_i (f^i∘M) ⋈ e_i
            let mut v1 = self.zero();
            let mut v2 = self.zero();
            for i in 0..d {
                for k in 0..d {
                    v1[i * d + k] = m.get(k, i).clone();
                    v2[k * d + i] = m.get(i, k).clone();
                }
            }
            candidates.push(v1);
            candidates.push(v2);
        }
        candidates
            .into_iter()
            .find(|v| self.mul(u, v) == one && self.mul(v, u) == one)
    }

    /// `Tr(L_x)` on `D(H)`.
    pub fn left_trace(&self, x: &[Scalar]) -> Scalar {
        let f = self.field();
        let mut acc = f.zero();
        for b in 0..self.dim() {
            let xb = self.mul(x, &self.basis(b));
            acc = f.add(&acc, &xb[b]);
        }
        acc
    }

    /// Least `n ≤ cap` with `uⁿ − 1` nilpotent, tested by repeated squaring
    /// until the exponent reaches `dim D(H)`. A unipotent `uⁿ` has
    /// `Tr(L_{uⁿ}) = dim D(H)`, which rules most `n` out cheaply.
    pub fn unipotent_power(&self, cap: u64) -> Option<u64> {
        let f = self.field();
        let u = self.drinfeld_element();
        let one = self.one();
        let dim = f.from_i64(self.dim() as i64);
        let mut un = u.clone();
        for n in 1..=cap {
            if self.left_trace(&un) != dim {
                un = self.mul(&un, &u);
                continue;
            }
            let mut a: Vec<Scalar> = un.iter().zip(&one).map(|(x, y)| f.sub(x, y)).collect();
            let mut reached = 1usize;
            while reached < self.dim() && !a.iter().all(|x| f.is_zero(x)) {
                a = self.mul(&a, &a);
                reached *= 2;
            }
            if a.iter().all(|x| f.is_zero(x)) {
                return Some(n);
            }
            un = self.mul(&un, &u);
        }
        None
    }

    /// Materializes `D(H)` as structure constants.
    pub fn materialize(&self) -> Result<HopfAlgebraData> {
        let h = &self.base;
        let f = self.field().clone();
        let d = self.d;
        let n = d * d;
        let mut mult = Vec::new();
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    for e in 0..d {
                        let input = (a * d + b) * n + c * d + e;
                        for (k, v) in self.mul_basis(a, b, c, e) {
                            mult.push((input, k, v));
                        }
                    }
                }
            }
        }
        // Δ_{H*}(f^a) = Σ mult[(j,k) → a] f^j ⊗ f^k; cop swaps the legs.
        let mut comult = Vec::new();
        for (jk, col) in h.mult.cols.iter().enumerate() {
            let (j, k) = (jk / d, jk % d);
            for (a, c1) in col {
                for b in 0..d {
                    for (lm, c2) in h.comult.col(b) {
                        let (b1, b2) = (lm / d, lm % d);
                        let left = k * d + b1;
                        let right = j * d + b2;
                        comult.push((a * d + b, left * n + right, f.mul(c1, c2)));
                    }
                }
            }
        }
        let counit = (0..n).map(|x| f.mul(&h.unit[x / d], &h.counit[x % d])).collect();
        let labels = h
            .basis_labels
            .iter()
            .flat_map(|a| h.basis_labels.iter().map(move |b| format!("{a}*⋈{b}")))
            .collect();
        HopfAlgebraData::new(
            f.clone(),
            labels,
            SparseMap::from_triples(&f, n * n, n, mult),
            self.one(),
            SparseMap::from_triples(&f, n, n * n, comult),
            counit,
            self.antipode.to_matrix(&f),
        )
    }
}

pub struct DoubleData {
    pub double: HopfAlgebraData,
    /// `h ↦ ε ⋈ h`, a `d² × d` matrix.
    pub embed_h: ExactMatrix,
    /// `φ ↦ φ ⋈ 1`, a `d² × d` matrix.
    pub embed_dual: ExactMatrix,
    pub drinfeld_element: Vec<Scalar>,
    pub drinfeld_inverse: Vec<Scalar>,
}

/// Builds and checks `D(H)`. Any failure of the postconditions is an
/// error: it would mean the conventions above are inconsistent.
pub fn drinfeld_double(h: &HopfAlgebraData) -> Result<DoubleData> {
    let engine = DoubleEngine::new(h)?;
    let double = engine.materialize()?;
    let report = verify_hopf(&double);
    if let Some(bad) = report.failures().next() {
        return Err(Error::Construction(format!("D(H) axiom {} failed: {:?}", bad.name, bad.status)));
    }
    let u = engine.drinfeld_element();
    if let Some(i) = engine.check_drinfeld_conjugation(&u) {
        return Err(Error::Construction(format!("u x != S^2(x) u for generator {i}")));
    }
    let u_inv = match engine.drinfeld_inverse(&u) {
        Some(v) => v,
        None => {
            let lu = double.left_mult_matrix(&u);
            lu.solve(&double.unit)
                .filter(|v| double.mul(v, &u) == double.unit)
                .ok_or_else(|| Error::Construction("Drinfeld element is not invertible".into()))?
        }
    };
    let f = &h.field;
    let d = h.dim;
    let embed_h = ExactMatrix::from_columns(f, d * d, &(0..d).map(|b| engine.pure(&h.counit, &h.basis(b))).collect::<Vec<_>>());
    let embed_dual = ExactMatrix::from_columns(
        f,
        d * d,
        &(0..d)
            .map(|c| {
                let mut phi = h.zero();
                phi[c] = f.one();
                engine.pure(&phi, &h.unit)
            })
            .collect::<Vec<_>>(),
    );
    Ok(DoubleData {
        double,
        embed_h,
        embed_dual,
        drinfeld_element: u,
        drinfeld_inverse: u_inv,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::exactalg::FieldDescriptor;

    #[test]
    fn double_of_c2() {
        let c2 = corpus::group_algebra_cyclic(&FieldDescriptor::rational(), 2);
        let dd = drinfeld_double(&c2).unwrap();
        assert_eq!(dd.double.dim, 4);
        let u = &dd.drinfeld_element;
        assert_eq!(dd.double.mul(u, u), dd.double.unit);
    }

    #[test]
    fn double_of_sweedler() {
        let h4 = corpus::taft(2).unwrap();
        let dd = drinfeld_double(&h4).unwrap();
        assert_eq!(dd.double.dim, 16);
        let d = &dd.double;
        let s2 = d.antipode.mul(&d.antipode).unwrap();
        let conj = d.two_sided_matrix(&dd.drinfeld_element, &dd.drinfeld_inverse);
        assert_eq!(conj, s2);
    }

    #[test]
    fn engine_matches_materialized_product() {
        let t3 = corpus::taft(3).unwrap();
        let engine = DoubleEngine::new(&t3).unwrap();
        let dd = engine.materialize().unwrap();
        let x: Vec<Scalar> = (0..81).map(|i| t3.f().from_i64((i * 7 % 5) as i64 - 2)).collect();
        let y: Vec<Scalar> = (0..81).map(|i| t3.f().from_i64((i * 3 % 4) as i64 - 1)).collect();
        assert_eq!(engine.mul(&x, &y), dd.mul(&x, &y));
    }
}
