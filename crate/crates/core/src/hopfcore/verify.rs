//! Axiom verification on basis elements.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::HopfAlgebraData;
use crate::exactalg::{FieldDescriptor, Scalar};
use crate::report::{CheckOutcome, VerificationReport};

/// Above this dimension the cubic checks (associativity, coassociativity)
/// run on a fixed pseudo-random sample of basis triples.
pub const EXHAUSTIVE_LIMIT: usize = 100;
const SAMPLE_SIZE: usize = 4000;

type Sparse = BTreeMap<usize, Scalar>;

fn acc(f: &FieldDescriptor, m: &mut Sparse, k: usize, v: Scalar) {
    let slot = m.entry(k).or_insert_with(|| f.zero());
    *slot = f.add(slot, &v);
}

fn clean(f: &FieldDescriptor, m: Sparse) -> Sparse {
    m.into_iter().filter(|(_, v)| !f.is_zero(v)).collect()
}

fn dense_to_sparse(f: &FieldDescriptor, v: &[Scalar]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !f.is_zero(x))
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

impl HopfAlgebraData {
    fn mul_sparse(&self, a: &Sparse, b: &Sparse) -> Sparse {
        let f = &self.field;
        let d = self.dim;
        let mut out = Sparse::new();
        for (i, x) in a {
            for (j, y) in b {
                let col = self.mult.col(i * d + j);
                if col.is_empty() {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in col {
                    acc(f, &mut out, *k, f.mul(&xy, c));
                }
            }
        }
        clean(f, out)
    }

    /// `Δ(e_i)` as a sparse `H⊗H` vector.
    fn comul_sparse(&self, i: usize) -> Sparse {
        self.comult.col(i).iter().cloned().collect()
    }

    fn triple_check_indices(&self) -> (Vec<(usize, usize, usize)>, bool) {
        let d = self.dim;
        if d <= EXHAUSTIVE_LIMIT {
            let mut v = Vec::with_capacity(d * d * d);
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        v.push((i, j, k));
                    }
                }
            }
            (v, false)
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            let v = (0..SAMPLE_SIZE)
                .map(|_| (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d)))
                .collect();
            (v, true)
        }
    }
}

/// Checks every Hopf algebra axiom on basis elements, reporting the first
/// offending basis index (or tuple) as the witness.
pub fn verify_hopf(h: &HopfAlgebraData) -> VerificationReport {
    let f = &h.field;
    let d = h.dim;
    let mut report = VerificationReport::new("axioms");
    let basis: Vec<Sparse> = (0..d).map(|i| Sparse::from([(i, f.one())])).collect();
    let unit = dense_to_sparse(f, &h.unit);
    let (triples, sampled) = h.triple_check_indices();
    let note = |c: CheckOutcome| {
        if sampled {
            c.with_detail(format!("sampled {SAMPLE_SIZE} basis triples (dim {d})"))
        } else {
            c
        }
    };

    // associativity
    let mut pair_products: BTreeMap<(usize, usize), Sparse> = BTreeMap::new();
    let mut prod = |i: usize, j: usize| -> Sparse {
        pair_products
            .entry((i, j))
            .or_insert_with(|| h.mul_sparse(&basis[i], &basis[j]))
            .clone()
    };
    let mut witness = None;
    for &(i, j, k) in &triples {
        let left = h.mul_sparse(&prod(i, j), &basis[k]);
        let right = h.mul_sparse(&basis[i], &prod(j, k));
        if left != right {
            witness = Some(format!("basis ({i},{j},{k})"));
            break;
        }
    }
    report.push(note(CheckOutcome::from_bool("associativity", witness.is_none(), || witness.clone().unwrap())));

    // unit
    let w = (0..d).find(|&i| h.mul_sparse(&unit, &basis[i]) != basis[i] || h.mul_sparse(&basis[i], &unit) != basis[i]);
    report.push(CheckOutcome::from_bool("unit", w.is_none(), || format!("basis {}", w.unwrap())));

    // coassociativity
    let delta: Vec<Sparse> = (0..d).map(|i| h.comul_sparse(i)).collect();
    let coassoc_fails = |i: usize| -> bool {
        let mut left = Sparse::new();
        let mut right = Sparse::new();
        for (jk, c) in &delta[i] {
            let (j, k) = (jk / d, jk % d);
            for (ab, c2) in &delta[j] {
                acc(f, &mut left, ab * d + k, f.mul(c, c2));
            }
            for (ab, c2) in &delta[k] {
                acc(f, &mut right, j * d * d + ab, f.mul(c, c2));
            }
        }
        clean(f, left) != clean(f, right)
    };
    let w = if sampled {
        triples.iter().map(|t| t.0).find(|&i| coassoc_fails(i))
    } else {
        (0..d).find(|&i| coassoc_fails(i))
    };
    report.push(CheckOutcome::from_bool("coassociativity", w.is_none(), || format!("basis {}", w.unwrap())));

    // counit
    let w = (0..d).find(|&i| {
        let mut left = h.zero();
        let mut right = h.zero();
        for (jk, c) in &delta[i] {
            let (j, k) = (jk / d, jk % d);
            f.mul_add_assign(&mut left[k], c, &h.counit[j]);
            f.mul_add_assign(&mut right[j], c, &h.counit[k]);
        }
        left != h.basis(i) || right != h.basis(i)
    });
    report.push(CheckOutcome::from_bool("counit", w.is_none(), || format!("basis {}", w.unwrap())));

    // bialgebra compatibility: Δ and ε are unital algebra maps
    let eps = |v: &Sparse| -> Scalar {
        let mut a = f.zero();
        for (i, x) in v {
            f.mul_add_assign(&mut a, x, &h.counit[*i]);
        }
        a
    };
    let mut witness = None;
    let pairs: Vec<(usize, usize)> = if sampled {
        triples.iter().map(|t| (t.0, t.1)).collect()
    } else {
        (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect()
    };
    let tensor_mul = |a: &Sparse, b: &Sparse| -> Sparse {
        let mut out = Sparse::new();
        for (pq, x) in a {
            let (p, q) = (pq / d, pq % d);
            for (rs, y) in b {
                let (r, s) = (rs / d, rs % d);
                let left = h.mult.col(p * d + r);
                let right = h.mult.col(q * d + s);
                if left.is_empty() || right.is_empty() {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k1, c1) in left {
                    let t = f.mul(&xy, c1);
                    for (k2, c2) in right {
                        acc(f, &mut out, k1 * d + k2, f.mul(&t, c2));
                    }
                }
            }
        }
        clean(f, out)
    };
    for &(i, j) in &pairs {
        let ij = h.mul_sparse(&basis[i], &basis[j]);
        let mut lhs = Sparse::new();
        for (k, c) in &ij {
            for (t, c2) in &delta[*k] {
                acc(f, &mut lhs, *t, f.mul(c, c2));
            }
        }
        let lhs = clean(f, lhs);
        if lhs != tensor_mul(&delta[i], &delta[j]) {
            witness = Some(format!("Δ(e_{i} e_{j})"));
            break;
        }
        if eps(&ij) != f.mul(&h.counit[i], &h.counit[j]) {
            witness = Some(format!("ε(e_{i} e_{j})"));
            break;
        }
    }
    if witness.is_none() {
        let mut d1 = Sparse::new();
        for (i, x) in &unit {
            for (t, c) in &delta[*i] {
                acc(f, &mut d1, *t, f.mul(x, c));
            }
        }
        let one_one = dense_to_sparse(f, &h.tensor2(&h.unit, &h.unit));
        if clean(f, d1) != one_one {
            witness = Some("Δ(1)".into());
        } else if !f.is_one(&eps(&unit)) {
            witness = Some("ε(1)".into());
        }
    }
    report.push(note(CheckOutcome::from_bool("bialgebra", witness.is_none(), || witness.clone().unwrap())));

    // antipode law
    let s_cols: Vec<Sparse> = (0..d).map(|j| dense_to_sparse(f, &h.antipode.column(j))).collect();
    let w = (0..d).find(|&i| {
        let mut left = Sparse::new();
        let mut right = Sparse::new();
        for (jk, c) in &delta[i] {
            let (j, k) = (jk / d, jk % d);
            for (t, v) in h.mul_sparse(&s_cols[j], &basis[k]) {
                acc(f, &mut left, t, f.mul(c, &v));
            }
            for (t, v) in h.mul_sparse(&basis[j], &s_cols[k]) {
                acc(f, &mut right, t, f.mul(c, &v));
            }
        }
        let target = clean(f, unit.iter().map(|(k, v)| (*k, f.mul(v, &h.counit[i]))).collect());
        clean(f, left) != target || clean(f, right) != target
    });
    report.push(CheckOutcome::from_bool("antipode", w.is_none(), || format!("basis {}", w.unwrap())));

    let rank = h.antipode.rank();
    report.push(CheckOutcome::from_bool("antipode_invertible", rank == d, || {
        format!("rank {rank} < {d}")
    }));
    report
}
