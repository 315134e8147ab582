//! Coradical, coradical filtration, simple subcoalgebras and coradical
//! orthonormal idempotents.
//!
//! Functionals on `H` are coordinate vectors on the dual basis; their
//! product is the convolution `(f g)(h) = Σ f(h₁) g(h₂)`.

mod blocks;
mod idempotents;

pub use blocks::{grouplikes, simple_subcoalgebras, SimpleBlock};
pub use idempotents::{
    component_space, coradical_idempotents, family_check, family_from, family_violation, h1_one_part, hit_components,
    left_hit, right_hit, IdempotentFamily,
};

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, Scalar, Subspace};
use crate::hopfcore::HopfAlgebraData;
use crate::report::CheckOutcome;

/// Product of two functionals in `H*`.
pub fn dual_mul(h: &HopfAlgebraData, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let f = &h.field;
    let d = h.dim;
    (0..d)
        .map(|k| {
            let mut acc = f.zero();
            for (ij, c) in h.comult.col(k) {
                let (i, j) = (ij / d, ij % d);
                if f.is_zero(&a[i]) || f.is_zero(&b[j]) {
                    continue;
                }
                f.mul_add_assign(&mut acc, c, &f.mul(&a[i], &b[j]));
            }
            acc
        })
        .collect()
}

/// `⟨φ, v⟩` for a functional and an element.
pub fn pair(h: &HopfAlgebraData, phi: &[Scalar], v: &[Scalar]) -> Scalar {
    let f = &h.field;
    let mut acc = f.zero();
    for (x, y) in phi.iter().zip(v) {
        if !f.is_zero(x) && !f.is_zero(y) {
            f.mul_add_assign(&mut acc, x, y);
        }
    }
    acc
}

/// How the coradical was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoradicalSource {
    /// Characteristic 0: the annihilator of the trace-form radical of `H*`.
    TraceForm,
    /// Characteristic p: the declared span, checked to be a subcoalgebra
    /// containing every grouplike. Maximality is not checked.
    DeclaredPartiallyVerified,
}

/// `H₀`, with how it was obtained.
pub fn coradical_with_source(h: &HopfAlgebraData) -> Result<(Subspace, CoradicalSource)> {
    if h.field.characteristic() == 0 {
        return Ok((trace_form_coradical(h), CoradicalSource::TraceForm));
    }
    let declared = h.declared_coradical_space().ok_or(Error::CoradicalUndecidable)?;
    if declared.dim() == 0 || !is_subcoalgebra(h, &declared) {
        return Err(Error::BadDeclaredCoradical("declared span is not a subcoalgebra".into()));
    }
    if !declared.contains(&h.unit) {
        return Err(Error::BadDeclaredCoradical("declared span misses the unit".into()));
    }
    for g in blocks::grouplikes_via_characters(h)? {
        if !declared.contains(&g) {
            return Err(Error::BadDeclaredCoradical(format!(
                "grouplike {} is outside the declared span",
                h.format_element(&g)
            )));
        }
    }
    Ok((declared, CoradicalSource::DeclaredPartiallyVerified))
}

pub fn coradical(h: &HopfAlgebraData) -> Result<Subspace> {
    coradical_with_source(h).map(|(c, _)| c)
}

/// `J(H*)` is the radical of the trace form `(x, y) ↦ Tr(L_{xy})` in
/// characteristic 0, and `H₀ = J(H*)^⊥`.
fn trace_form_coradical(h: &HopfAlgebraData) -> Subspace {
    let f = &h.field;
    let d = h.dim;
    // t_k = Tr(L_{f^k}) = Σ_j [f^j-coefficient of f^k f^j] = Σ_j Δ(e_j)[k, j]
    let mut t = vec![f.zero(); d];
    for j in 0..d {
        for (kj, c) in h.comult.col(j) {
            if kj % d == j {
                t[kj / d] = f.add(&t[kj / d], c);
            }
        }
    }
    // G_ab = Tr(L_{f^a f^b}) = Σ_k Δ(e_k)[a, b] t_k
    let mut gram = ExactMatrix::zeros(f, d, d);
    for (k, tk) in t.iter().enumerate() {
        if f.is_zero(tk) {
            continue;
        }
        for (ab, c) in h.comult.col(k) {
            gram.add_at(ab / d, ab % d, &f.mul(c, tk));
        }
    }
    gram.kernel().annihilator()
}

/// `Δ(C) ⊆ C ⊗ C`.
pub fn is_subcoalgebra(h: &HopfAlgebraData, c: &Subspace) -> bool {
    let cc = c.tensor(c);
    c.basis().iter().all(|v| cc.contains(&h.comul(v)))
}

/// Rows `(a ⊗ b) ∘ Δ` for `a ∈ A^⊥`, `b ∈ B^⊥`; their common kernel is
/// `A ∧ B = Δ⁻¹(A⊗H + H⊗B)`.
pub fn wedge(a: &Subspace, b: &Subspace, h: &HopfAlgebraData) -> Subspace {
    let f = &h.field;
    let d = h.dim;
    let (pa, pb) = (a.annihilator(), b.annihilator());
    if pa.dim() == 0 || pb.dim() == 0 {
        return Subspace::full(f, d);
    }
    let mut rows = Vec::with_capacity(pa.dim() * pb.dim());
    for x in pa.basis() {
        for y in pb.basis() {
            let row: Vec<Scalar> = (0..d)
                .map(|k| {
                    let mut acc = f.zero();
                    for (ij, c) in h.comult.col(k) {
                        let (i, j) = (ij / d, ij % d);
                        if !f.is_zero(&x[i]) && !f.is_zero(&y[j]) {
                            f.mul_add_assign(&mut acc, c, &f.mul(&x[i], &y[j]));
                        }
                    }
                    acc
                })
                .collect();
            rows.push(row);
        }
    }
    ExactMatrix::from_rows(f, rows).expect("rectangular").kernel()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationData {
    /// `H₀ ⊊ H₁ ⊊ ⋯ ⊊ H_{L−1} = H`.
    pub layers: Vec<Subspace>,
    pub loewy_length: usize,
}

impl FiltrationData {
    pub fn dims(&self) -> Vec<usize> {
        self.layers.iter().map(Subspace::dim).collect()
    }

    /// `H_n`, which is all of `H` past the last layer.
    pub fn layer(&self, n: usize) -> &Subspace {
        &self.layers[n.min(self.layers.len() - 1)]
    }
}

pub fn coradical_filtration(h: &HopfAlgebraData) -> Result<FiltrationData> {
    filtration_from(h, coradical(h)?)
}

pub fn filtration_from(h: &HopfAlgebraData, h0: Subspace) -> Result<FiltrationData> {
    let mut layers = vec![h0];
    while !layers.last().unwrap().is_full() {
        let next = wedge(&layers[0], layers.last().unwrap(), h);
        if next.dim() <= layers.last().unwrap().dim() {
            return Err(Error::Internal("coradical filtration stalled below H".into()));
        }
        layers.push(next);
    }
    let loewy_length = layers.len();
    Ok(FiltrationData { layers, loewy_length })
}

/// `H₀·H₀ ⊆ H₀` (and then `S(H₀) ⊆ H₀`, which must follow).
pub fn dual_chevalley_check(h: &HopfAlgebraData) -> Result<bool> {
    let h0 = coradical(h)?;
    Ok(dual_chevalley_of(h, &h0))
}

pub fn dual_chevalley_of(h: &HopfAlgebraData, h0: &Subspace) -> bool {
    if !h.product_span(h0, h0).is_subspace_of(h0) {
        return false;
    }
    assert!(
        h0.map(&h.antipode).is_subspace_of(h0),
        "a subcoalgebra closed under products must be S-stable"
    );
    true
}

/// `H_i·H_j ⊆ H_{i+j}` and `S(H_n) ⊆ H_n` on every computed layer.
pub fn hopf_filtration_check(h: &HopfAlgebraData, filt: &FiltrationData) -> CheckOutcome {
    let n = filt.layers.len();
    for i in 0..n {
        if !filt.layers[i].map(&h.antipode).is_subspace_of(&filt.layers[i]) {
            return CheckOutcome::fail("hopf_filtration", format!("S(H_{i}) ⊄ H_{i}"));
        }
        for j in 0..n - i {
            if i + j >= n - 1 {
                continue;
            }
            if !h.product_span(&filt.layers[i], &filt.layers[j]).is_subspace_of(filt.layer(i + j)) {
                return CheckOutcome::fail("hopf_filtration", format!("H_{i}·H_{j} ⊄ H_{}", i + j));
            }
        }
    }
    CheckOutcome::pass("hopf_filtration")
}
