//! Linear-map calculus on End(H): convolution, antipode powers, conjugation.

use super::algebra::HopfAlgebraData;
use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, Scalar};

/// Endomorphisms of `H` are plain matrices on its coordinates.
pub type LinearEndo = ExactMatrix;

/// `f ★ g = m ∘ (f ⊗ g) ∘ Δ`.
pub fn convolution(h: &HopfAlgebraData, f: &LinearEndo, g: &LinearEndo) -> Result<LinearEndo> {
    let d = h.dim;
    for m in [f, g] {
        if m.rows() != d || m.cols() != d {
            return Err(Error::DimensionMismatch(format!(
                "endomorphism {}x{} on a {d}-dimensional algebra",
                m.rows(),
                m.cols()
            )));
        }
    }
    let fc: Vec<Vec<Scalar>> = (0..d).map(|j| f.column(j)).collect();
    let gc: Vec<Vec<Scalar>> = (0..d).map(|j| g.column(j)).collect();
    let field = &h.field;
    let cols: Vec<Vec<Scalar>> = (0..d)
        .map(|a| {
            let mut out = h.zero();
            for (jk, c) in h.comult.col(a) {
                let (j, k) = (jk / d, jk % d);
                let prod = h.mul(&fc[j], &gc[k]);
                for (slot, x) in out.iter_mut().zip(prod) {
                    field.mul_add_assign(slot, c, &x);
                }
            }
            out
        })
        .collect();
    Ok(ExactMatrix::from_columns(field, d, &cols))
}

/// Matrix of `S^k`; negative powers use the exact inverse.
pub fn antipode_power(h: &HopfAlgebraData, k: i64) -> Result<LinearEndo> {
    h.antipode.pow(k)
}

/// Least `k ≤ cap` with `S^{2k} = id`.
pub fn ord_s2(h: &HopfAlgebraData, cap: usize) -> Option<u64> {
    let s2 = h.antipode.mul(&h.antipode).ok()?;
    let mut p = s2.clone();
    for k in 1..=cap {
        if p.is_identity() {
            return Some(k as u64);
        }
        p = p.mul(&s2).ok()?;
    }
    None
}

/// Matrix of `x ↦ g x g⁻¹` for an invertible `g` with inverse `g_inv`.
pub fn conjugation(h: &HopfAlgebraData, g: &[Scalar], g_inv: &[Scalar]) -> LinearEndo {
    h.two_sided_matrix(g, g_inv)
}

pub fn is_grouplike(h: &HopfAlgebraData, g: &[Scalar]) -> bool {
    h.field.is_one(&h.counit_of(g)) && h.comul(g) == h.tensor2(g, g)
}

/// A grouplike `g` with `S²(x) = g x g⁻¹` for all `x`, searched among the
/// grouplikes of `H`; the unit when `S² = id`.
pub fn pivotal_check(h: &HopfAlgebraData) -> Result<Option<Vec<Scalar>>> {
    let s2 = antipode_power(h, 2)?;
    if s2.is_identity() {
        return Ok(Some(h.one()));
    }
    for g in crate::coradical::grouplikes(h)? {
        let g_inv = h.antipode_of(&g);
        if conjugation(h, &g, &g_inv) == s2 {
            return Ok(Some(g));
        }
    }
    Ok(None)
}
