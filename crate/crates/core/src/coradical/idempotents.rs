//! Coradical orthonormal idempotents and the hit-action decomposition.

use super::blocks::{blocks_of, SimpleBlock};
use super::{coradical_filtration, dual_mul, pair, FiltrationData};
use crate::error::{Error, Result};
use crate::exactalg::{Scalar, Subspace};
use crate::hopfcore::HopfAlgebraData;
use crate::report::CheckOutcome;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentFamily {
    pub blocks: Vec<SimpleBlock>,
    /// `e_C ∈ H*` for each block, in dual-basis coordinates.
    pub idempotents: Vec<Vec<Scalar>>,
    /// Index of the block `k1`.
    pub unit_block: usize,
    /// Lifting passes performed per idempotent.
    pub passes: usize,
}

/// `f ⇀ h = Σ h₁ f(h₂)`.
pub fn left_hit(h: &HopfAlgebraData, phi: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
    let f = &h.field;
    let d = h.dim;
    let mut out = h.zero();
    for (i, xi) in x.iter().enumerate() {
        if f.is_zero(xi) {
            continue;
        }
        for (jk, c) in h.comult.col(i) {
            let (j, k) = (jk / d, jk % d);
            if !f.is_zero(&phi[k]) {
                f.mul_add_assign(&mut out[j], &f.mul(xi, c), &phi[k]);
            }
        }
    }
    out
}

/// `h ↼ f = Σ f(h₁) h₂`.
pub fn right_hit(h: &HopfAlgebraData, x: &[Scalar], phi: &[Scalar]) -> Vec<Scalar> {
    let f = &h.field;
    let d = h.dim;
    let mut out = h.zero();
    for (i, xi) in x.iter().enumerate() {
        if f.is_zero(xi) {
            continue;
        }
        for (jk, c) in h.comult.col(i) {
            let (j, k) = (jk / d, jk % d);
            if !f.is_zero(&phi[j]) {
                f.mul_add_assign(&mut out[k], &f.mul(xi, c), &phi[j]);
            }
        }
    }
    out
}

/// Builds `{e_C}`: each central idempotent of `H₀*` is extended by zero on
/// the echelon complement of `H₀`, compressed into the corner left over by
/// the previous idempotents and lifted by `x ← 3x² − 2x³`; the last one is
/// `ε − Σ e`. All three defining conditions are then checked exactly.
pub fn coradical_idempotents(h: &HopfAlgebraData) -> Result<IdempotentFamily> {
    let filt = coradical_filtration(h)?;
    family_from(h, &filt)
}

pub fn family_from(h: &HopfAlgebraData, filt: &FiltrationData) -> Result<IdempotentFamily> {
    let f = &h.field;
    let h0 = &filt.layers[0];
    let blocks = blocks_of(h, h0, false)?;
    let l = filt.loewy_length.max(2);
    let passes = if filt.loewy_length == 1 {
        0
    } else {
        (usize::BITS - (l - 1).leading_zeros()) as usize + 1
    };
    let eps = h.counit.clone();
    let mul = |a: &[Scalar], b: &[Scalar]| dual_mul(h, a, b);
    let three = f.from_i64(3);
    let two = f.from_i64(2);

    let mut idempotents: Vec<Vec<Scalar>> = Vec::with_capacity(blocks.len());
    let mut acc = h.zero();
    for (bi, b) in blocks.iter().enumerate() {
        if bi + 1 == blocks.len() {
            idempotents.push(h.sub(&eps, &acc));
            break;
        }
        let mut x = h.zero();
        for (k, &p) in h0.pivots().iter().enumerate() {
            x[p] = b.central_idempotent[k].clone();
        }
        let rest = h.sub(&eps, &acc);
        x = mul(&mul(&rest, &x), &rest);
        for _ in 0..passes {
            let x2 = mul(&x, &x);
            let x3 = mul(&x2, &x);
            x = h.sub(&h.scale(&three, &x2), &h.scale(&two, &x3));
        }
        acc = h.add(&acc, &x);
        idempotents.push(x);
    }
    let family = IdempotentFamily {
        unit_block: blocks.iter().position(|b| b.subcoalgebra.contains(&h.unit)).expect("k1 is a block"),
        blocks,
        idempotents,
        passes,
    };
    if let Some(w) = family_violation(h, &family) {
        return Err(Error::Internal(format!("idempotent lifting failed: {w}")));
    }
    Ok(family)
}

/// The first violated defining condition, if any.
pub fn family_violation(h: &HopfAlgebraData, fam: &IdempotentFamily) -> Option<String> {
    let f = &h.field;
    let n = fam.idempotents.len();
    for a in 0..n {
        for b in 0..n {
            let prod = dual_mul(h, &fam.idempotents[a], &fam.idempotents[b]);
            let want = if a == b { fam.idempotents[a].clone() } else { h.zero() };
            if prod != want {
                return Some(format!("e_{a} e_{b} ≠ δ e_{a}"));
            }
        }
    }
    let total = fam.idempotents.iter().fold(h.zero(), |s, e| h.add(&s, e));
    if total != h.counit {
        return Some("Σ e_C ≠ ε".into());
    }
    for (a, e) in fam.idempotents.iter().enumerate() {
        for (b, blk) in fam.blocks.iter().enumerate() {
            for v in blk.subcoalgebra.basis() {
                let want = if a == b { h.counit_of(v) } else { f.zero() };
                if pair(h, e, v) != want {
                    return Some(format!("e_{a} on block {b} ≠ δ ε"));
                }
            }
        }
    }
    None
}

pub fn family_check(h: &HopfAlgebraData, fam: &IdempotentFamily) -> CheckOutcome {
    match family_violation(h, fam) {
        None => CheckOutcome::pass("idempotents").with_detail(format!(
            "{} blocks, {} lifting passes",
            fam.blocks.len(),
            fam.passes
        )),
        Some(w) => CheckOutcome::fail("idempotents", w),
    }
}

/// `comps[c][d] = ^C x ^D = e_D ⇀ x ↼ e_C`.
pub fn hit_components(h: &HopfAlgebraData, x: &[Scalar], fam: &IdempotentFamily) -> Vec<Vec<Vec<Scalar>>> {
    fam.idempotents
        .iter()
        .map(|ec| {
            let left = right_hit(h, x, ec);
            fam.idempotents.iter().map(|ed| left_hit(h, ed, &left)).collect()
        })
        .collect()
}

/// `^C V ^D` as a subspace.
pub fn component_space(h: &HopfAlgebraData, v: &Subspace, fam: &IdempotentFamily, c: usize, d: usize) -> Subspace {
    v.map_with(h.dim, |x| left_hit(h, &fam.idempotents[d], &right_hit(h, x, &fam.idempotents[c])))
}

/// `H₁¹ = e_{k1} ⇀ H₁`, after checking `H₁ = H₁¹·H₀` and that every
/// `^C H₁ ^D` lies in `Δ⁻¹(C ⊗ ^C H₁ ^D + ^C H₁ ^D ⊗ D)`.
pub fn h1_one_part(h: &HopfAlgebraData, fam: &IdempotentFamily, filt: &FiltrationData) -> Result<Subspace> {
    let h1 = filt.layer(1);
    let e1 = &fam.idempotents[fam.unit_block];
    let part = h1.map_with(h.dim, |x| left_hit(h, e1, x));
    if h.product_span(&part, &filt.layers[0]) != *h1 {
        return Err(Error::Internal("H₁ ≠ H₁¹·H₀".into()));
    }
    for c in 0..fam.blocks.len() {
        for d in 0..fam.blocks.len() {
            let v = component_space(h, h1, fam, c, d);
            if v.dim() == 0 {
                continue;
            }
            let target = fam.blocks[c].subcoalgebra.tensor(&v).sum(&v.tensor(&fam.blocks[d].subcoalgebra));
            if let Some(bad) = v.basis().iter().find(|x| !target.contains(&h.comul(x))) {
                return Err(Error::Internal(format!(
                    "Δ({}) leaves C⊗V + V⊗D for blocks ({c},{d})",
                    h.format_element(bad)
                )));
            }
        }
    }
    Ok(part)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::exactalg::FieldDescriptor;

    #[test]
    fn cosemisimple_needs_no_lifting() {
        let s3 = corpus::group_algebra_s3(&FieldDescriptor::rational());
        let fam = coradical_idempotents(&s3).unwrap();
        assert_eq!(fam.passes, 0);
        assert_eq!(fam.idempotents.len(), 6);
    }

    #[test]
    fn sweedler_family_and_components() {
        let h4 = corpus::taft(2).unwrap();
        let fam = coradical_idempotents(&h4).unwrap();
        assert_eq!(fam.idempotents.len(), 2);
        assert!(family_check(&h4, &fam).is_pass());
        // x lives in ^g H ^1 only
        let x = h4.basis(2);
        let comps = hit_components(&h4, &x, &fam);
        assert_eq!(comps[1][0], x);
        assert!(h4.is_zero(&comps[0][0]) && h4.is_zero(&comps[0][1]) && h4.is_zero(&comps[1][1]));
        // grouplike g sits in its own block
        let g = h4.basis(1);
        let comps = hit_components(&h4, &g, &fam);
        assert_eq!(comps[1][1], g);
        let filt = coradical_filtration(&h4).unwrap();
        let part = h1_one_part(&h4, &fam, &filt).unwrap();
        assert_eq!(part, Subspace::from_vectors(h4.f(), 4, vec![h4.basis(0), h4.basis(2)]));
    }

    #[test]
    fn taft3_h1_one_part() {
        let t3 = corpus::taft(3).unwrap();
        let filt = coradical_filtration(&t3).unwrap();
        let fam = family_from(&t3, &filt).unwrap();
        assert_eq!(fam.idempotents.len(), 3);
        let part = h1_one_part(&t3, &fam, &filt).unwrap();
        assert_eq!(part.dim(), 2);
    }
}
