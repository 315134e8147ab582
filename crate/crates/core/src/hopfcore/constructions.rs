//! New Hopf algebras from old: dual, tensor product, Hopf subalgebras and
//! the smash product with the cyclic group generated by S².

use super::algebra::{DeclaredMatrix, HopfAlgebraData, SparseMap};
use super::calculus::{antipode_power, ord_s2};
use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, Scalar, Subspace};

/// The dual Hopf algebra on the dual basis `f^i`.
pub fn dual(h: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    let f = &h.field;
    let labels = h.basis_labels.iter().map(|l| format!("{l}*")).collect();
    let mut out = HopfAlgebraData::new(
        f.clone(),
        labels,
        h.comult.transpose(f),
        h.counit.clone(),
        h.mult.transpose(f),
        h.unit.clone(),
        h.antipode.transpose(),
    )?;
    // A declared coradical of H says nothing useful about H*.
    out.declared_coradical = None;
    Ok(out)
}

/// `H ⊗ K` with index `a·d_K + b` for `e_a ⊗ e_b`.
pub fn tensor_product(h: &HopfAlgebraData, k: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    if h.field != k.field {
        return Err(Error::FieldMismatch(h.field.to_string(), k.field.to_string()));
    }
    let f = &h.field;
    let (dh, dk) = (h.dim, k.dim);
    let n = dh * dk;
    let idx = |a: usize, b: usize| a * dk + b;

    let mut mult = Vec::new();
    for a in 0..dh {
        for c in 0..dh {
            let left = h.mult.col(a * dh + c);
            if left.is_empty() {
                continue;
            }
            for b in 0..dk {
                for e in 0..dk {
                    for (p, x) in left {
                        for (q, y) in k.mult.col(b * dk + e) {
                            mult.push((idx(a, b) * n + idx(c, e), idx(*p, *q), f.mul(x, y)));
                        }
                    }
                }
            }
        }
    }
    let mut comult = Vec::new();
    for a in 0..dh {
        for b in 0..dk {
            for (pq, x) in h.comult.col(a) {
                let (p1, p2) = (pq / dh, pq % dh);
                for (rs, y) in k.comult.col(b) {
                    let (r1, r2) = (rs / dk, rs % dk);
                    comult.push((idx(a, b), idx(p1, r1) * n + idx(p2, r2), f.mul(x, y)));
                }
            }
        }
    }
    let kron_vec = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        u.iter().flat_map(|x| v.iter().map(move |y| f.mul(x, y))).collect()
    };
    let labels = h
        .basis_labels
        .iter()
        .flat_map(|a| k.basis_labels.iter().map(move |b| format!("{a}⊗{b}")))
        .collect();
    let mut out = HopfAlgebraData::new(
        f.clone(),
        labels,
        SparseMap::from_triples(f, n * n, n, mult),
        kron_vec(&h.unit, &k.unit),
        SparseMap::from_triples(f, n, n * n, comult),
        kron_vec(&h.counit, &k.counit),
        h.antipode.kronecker(&k.antipode)?,
    )?;
    if let (Some(a), Some(b)) = (&h.declared_coradical, &k.declared_coradical) {
        out.declared_coradical = Some(a.iter().flat_map(|u| b.iter().map(|v| kron_vec(u, v))).collect());
    }
    for m in &h.basic_matrices {
        out.basic_matrices.push(DeclaredMatrix {
            size: m.size,
            entries: m.entries.iter().map(|c| kron_vec(c, &k.unit)).collect(),
        });
    }
    for m in &k.basic_matrices {
        out.basic_matrices.push(DeclaredMatrix {
            size: m.size,
            entries: m.entries.iter().map(|c| kron_vec(&h.unit, c)).collect(),
        });
    }
    Ok(out)
}

/// Restricts `H` to a subspace closed under all structure maps, on the
/// subspace's echelon basis.
pub fn sub_hopf(h: &HopfAlgebraData, v: &Subspace) -> Result<HopfAlgebraData> {
    let f = &h.field;
    let n = v.dim();
    let basis = v.basis();
    let coords = |x: &[Scalar], what: &str| -> Result<Vec<Scalar>> {
        v.coordinates(x)
            .ok_or_else(|| Error::Construction(format!("subspace not closed under {what}")))
    };
    let mut mult = Vec::new();
    for (a, x) in basis.iter().enumerate() {
        for (b, y) in basis.iter().enumerate() {
            for (k, c) in coords(&h.mul(x, y), "multiplication")?.into_iter().enumerate() {
                mult.push((a * n + b, k, c));
            }
        }
    }
    let piv = v.pivots();
    let mut comult = Vec::new();
    let vv = v.tensor(v);
    for (a, x) in basis.iter().enumerate() {
        let dx = h.comul(x);
        if !vv.contains(&dx) {
            return Err(Error::Construction("subspace is not a subcoalgebra".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let c = &dx[piv[i] * h.dim + piv[j]];
                if !f.is_zero(c) {
                    comult.push((a, i * n + j, c.clone()));
                }
            }
        }
    }
    let s_cols: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|x| coords(&h.antipode_of(x), "the antipode"))
        .collect::<Result<_>>()?;
    let labels = basis.iter().map(|x| h.format_element(x)).collect();
    HopfAlgebraData::new(
        f.clone(),
        labels,
        SparseMap::from_triples(f, n * n, n, mult),
        coords(&h.unit, "the unit")?,
        SparseMap::from_triples(f, n, n * n, comult),
        basis.iter().map(|x| h.counit_of(x)).collect(),
        ExactMatrix::from_columns(f, n, &s_cols),
    )
}

/// `H ⋊ k⟨S²⟩` on the basis `e_j ⋊ S^{2i}` at index `i·d + j`, where
/// `0 ≤ i < t = ord(S²)`.
pub fn smash_with_s2(h: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    let f = &h.field;
    let d = h.dim;
    let t = ord_s2(h, 4 * d * d + 4).ok_or_else(|| Error::Construction("ord(S^2) not found".into()))? as usize;
    let n = d * t;
    let sigma: Vec<ExactMatrix> = (0..t).map(|i| antipode_power(h, 2 * i as i64)).collect::<Result<_>>()?;
    let idx = |i: usize, j: usize| i * d + j;

    let mut mult = Vec::new();
    for i in 0..t {
        for jj in 0..t {
            let target = (i + jj) % t;
            for b in 0..d {
                let sb = sigma[i].column(b);
                for a in 0..d {
                    let prod = h.mul(&h.basis(a), &sb);
                    for (k, c) in prod.into_iter().enumerate() {
                        if !f.is_zero(&c) {
                            mult.push((idx(i, a) * n + idx(jj, b), idx(target, k), c));
                        }
                    }
                }
            }
        }
    }
    let mut comult = Vec::new();
    for i in 0..t {
        for a in 0..d {
            for (pq, c) in h.comult.col(a) {
                let (p, q) = (pq / d, pq % d);
                comult.push((idx(i, a), idx(i, p) * n + idx(i, q), c.clone()));
            }
        }
    }
    let mut antipode = ExactMatrix::zeros(f, n, n);
    for i in 0..t {
        let m = antipode_power(h, 1 - 2 * i as i64)?;
        let inv = (t - i) % t;
        for a in 0..d {
            for k in 0..d {
                let c = m.get(k, a);
                if !f.is_zero(c) {
                    antipode.set(idx(inv, k), idx(i, a), c.clone());
                }
            }
        }
    }
    let mut unit = vec![f.zero(); n];
    unit[..d].clone_from_slice(&h.unit);
    let counit = (0..n).map(|x| h.counit[x % d].clone()).collect();
    let labels = (0..t)
        .flat_map(|i| {
            h.basis_labels.iter().map(move |l| if i == 0 { l.clone() } else { format!("{l}#S^{}", 2 * i) })
        })
        .collect();
    let mut out = HopfAlgebraData::new(
        f.clone(),
        labels,
        SparseMap::from_triples(f, n * n, n, mult),
        unit,
        SparseMap::from_triples(f, n, n * n, comult),
        counit,
        antipode,
    )?;
    let lift = |v: &[Scalar], i: usize| -> Vec<Scalar> {
        let mut w = vec![f.zero(); n];
        w[i * d..(i + 1) * d].clone_from_slice(v);
        w
    };
    if let Some(c) = &h.declared_coradical {
        out.declared_coradical = Some((0..t).flat_map(|i| c.iter().map(move |v| lift(v, i))).collect());
    }
    for m in &h.basic_matrices {
        for i in 0..t {
            out.basic_matrices.push(DeclaredMatrix {
                size: m.size,
                entries: m.entries.iter().map(|c| lift(c, i)).collect(),
            });
        }
    }
    Ok(out)
}

/// The element `1 ⋊ S²` of a smash product built by [`smash_with_s2`].
pub fn smash_pivot(h: &HopfAlgebraData, smash: &HopfAlgebraData) -> Vec<Scalar> {
    let f = &h.field;
    let mut v = vec![f.zero(); smash.dim];
    if smash.dim == h.dim {
        v[..h.dim].clone_from_slice(&h.unit);
    } else {
        v[h.dim..2 * h.dim].clone_from_slice(&h.unit);
    }
    v
}
