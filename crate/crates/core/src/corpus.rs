//! Built-in Hopf algebras with their expected invariants.
//!
//! Taft algebras `T_n` use the presentation `gⁿ = 1`, `xⁿ = 0`,
//! `g x = ζ x g`, `Δ(g) = g⊗g`, `Δ(x) = x⊗1 + g⊗x`, `S(x) = −g⁻¹x`, on the
//! basis `g^i x^j` at index `j·n + i`. `T_2` is Sweedler's `H₄`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, FieldDescriptor, Scalar};
use crate::hopfcore::{drinfeld_double, dual, smash_with_s2, tensor_product, DeclaredMatrix, HopfAlgebraData, SparseMap};

/// Fills in `Δ` and `S` on a monomial basis from their values on
/// generators. `words[k]` spells basis element `k` as a product of
/// generator indices; `Δ` is extended multiplicatively and `S`
/// anti-multiplicatively. The multiplication must already be in place.
fn expand_from_generators(
    h: &mut HopfAlgebraData,
    words: &[Vec<usize>],
    gen_comult: &[Vec<Scalar>],
    gen_antipode: &[Vec<Scalar>],
) {
    let f = h.field.clone();
    let d = h.dim;
    let one2 = h.tensor2(&h.unit, &h.unit);
    let mut comult_cols = Vec::with_capacity(d);
    let mut antipode_cols = Vec::with_capacity(d);
    for w in words {
        let mut delta = one2.clone();
        let mut s = h.unit.clone();
        for &g in w {
            delta = h.mul_tensor2(&delta, &gen_comult[g]);
            s = h.mul(&gen_antipode[g], &s);
        }
        comult_cols.push(delta);
        antipode_cols.push(s);
    }
    h.comult = SparseMap::from_dense_columns(&f, d * d, &comult_cols);
    h.antipode = ExactMatrix::from_columns(&f, d, &antipode_cols);
}

fn placeholder(f: &FieldDescriptor, labels: Vec<String>, mult: SparseMap, unit: Vec<Scalar>, counit: Vec<Scalar>) -> Result<HopfAlgebraData> {
    let d = labels.len();
    HopfAlgebraData::new(
        f.clone(),
        labels,
        mult,
        unit,
        SparseMap::from_triples(f, d, d * d, std::iter::empty()),
        counit,
        ExactMatrix::identity(f, d),
    )
}

/// Group algebra from a multiplication table; element 0 must be the identity.
pub fn group_algebra(f: &FieldDescriptor, labels: Vec<String>, table: &[Vec<usize>]) -> HopfAlgebraData {
    let n = table.len();
    let one = f.one();
    let mult = SparseMap::from_triples(
        f,
        n * n,
        n,
        (0..n).flat_map(|a| (0..n).map(move |b| (a * n + b, table[a][b]))).map(|(x, y)| (x, y, one.clone())),
    );
    let comult = SparseMap::from_triples(f, n, n * n, (0..n).map(|a| (a, a * n + a, f.one())));
    let mut antipode = ExactMatrix::zeros(f, n, n);
    for a in 0..n {
        let inv = (0..n).find(|&b| table[a][b] == 0).expect("group table without inverses");
        antipode.set(inv, a, f.one());
    }
    let mut unit = vec![f.zero(); n];
    unit[0] = f.one();
    HopfAlgebraData::new(f.clone(), labels, mult, unit, comult, vec![f.one(); n], antipode)
        .expect("group algebra shapes")
}

pub fn group_algebra_cyclic(f: &FieldDescriptor, n: usize) -> HopfAlgebraData {
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    group_algebra(f, labels, &table)
}

/// The six permutations of `{0,1,2}` in lexicographic order.
pub fn s3_elements() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
}

fn s3_table() -> Vec<Vec<usize>> {
    let els = s3_elements();
    let compose = |s: &[usize; 3], t: &[usize; 3]| [s[t[0]], s[t[1]], s[t[2]]];
    els.iter()
        .map(|s| els.iter().map(|t| els.iter().position(|u| *u == compose(s, t)).unwrap()).collect())
        .collect()
}

pub fn group_algebra_s3(f: &FieldDescriptor) -> HopfAlgebraData {
    let labels = s3_elements()
        .iter()
        .map(|p| format!("({}{}{})", p[0], p[1], p[2]))
        .collect();
    group_algebra(f, labels, &s3_table())
}

/// The 2-dimensional irreducible representation of `S₃` on the basis
/// `e₀ − e₁`, `e₁ − e₂` of the sum-zero plane, as integer matrices.
pub fn s3_standard_rep() -> Vec<[[i64; 2]; 2]> {
    s3_elements()
        .iter()
        .map(|s| {
            let mut m = [[0i64; 2]; 2];
            for (j, (a, b)) in [(0, 1), (1, 2)].into_iter().enumerate() {
                let mut w = [0i64; 3];
                w[s[a]] += 1;
                w[s[b]] -= 1;
                m[0][j] = w[0];
                m[1][j] = -w[2];
            }
            m
        })
        .collect()
}

/// `(kS₃)*`, the function algebra on `S₃`, with its 2×2 basic matrix
/// `c_ij = Σ_σ ρ(σ)_ij δ_σ` declared.
pub fn dual_s3(f: &FieldDescriptor) -> Result<HopfAlgebraData> {
    let mut h = dual(&group_algebra_s3(f))?;
    let rep = s3_standard_rep();
    let entries = (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .map(|(i, j)| rep.iter().map(|m| f.from_i64(m[i][j])).collect())
        .collect();
    h.basic_matrices.push(DeclaredMatrix { size: 2, entries });
    Ok(h)
}

pub fn dual_cyclic(f: &FieldDescriptor, n: usize) -> Result<HopfAlgebraData> {
    dual(&group_algebra_cyclic(f, n))
}

/// `T_n` over `f` with `zeta` a primitive `n`-th root of unity in `f`.
pub fn taft_over(f: &FieldDescriptor, n: usize, zeta: &Scalar) -> Result<HopfAlgebraData> {
    if n < 2 {
        return Err(Error::Construction("Taft algebras need n ≥ 2".into()));
    }
    let d = n * n;
    let idx = |i: usize, j: usize| j * n + i;
    let zpow: Vec<Scalar> = (0..n).map(|k| f.pow(zeta, k as i64).expect("nonzero root")).collect();
    let mut mult = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    if b + e >= n {
                        continue;
                    }
                    // x^b g^c = ζ^{-bc} g^c x^b
                    let coef = zpow[(n - (b * c) % n) % n].clone();
                    mult.push((idx(a, b) * d + idx(c, e), idx((a + c) % n, b + e), coef));
                }
            }
        }
    }
    let labels = (0..n)
        .flat_map(|j| {
            (0..n).map(move |i| {
                let g = match i {
                    0 => String::new(),
                    1 => "g".into(),
                    _ => format!("g^{i}"),
                };
                let x = match j {
                    0 => String::new(),
                    1 => "x".into(),
                    _ => format!("x^{j}"),
                };
                if i == 0 && j == 0 {
                    "1".into()
                } else {
                    format!("{g}{x}")
                }
            })
        })
        .collect();
    let mut unit = vec![f.zero(); d];
    unit[0] = f.one();
    let counit = (0..d).map(|k| if k < n { f.one() } else { f.zero() }).collect();
    let mut h = placeholder(f, labels, SparseMap::from_triples(f, d * d, d, mult), unit, counit)?;

    let (g, x) = (h.basis(idx(1, 0)), h.basis(idx(0, 1)));
    let delta_g = h.tensor2(&g, &g);
    let delta_x = h.add(&h.tensor2(&x, &h.unit), &h.tensor2(&g, &x));
    let g_inv = h.basis(idx(n - 1, 0));
    let s_x = h.scale(&f.from_i64(-1), &h.mul(&g_inv, &x));
    let words: Vec<Vec<usize>> = (0..d)
        .map(|k| {
            let (i, j) = (k % n, k / n);
            std::iter::repeat(0).take(i).chain(std::iter::repeat(1).take(j)).collect()
        })
        .collect();
    expand_from_generators(&mut h, &words, &[delta_g, delta_x], &[g_inv, s_x]);
    Ok(h)
}

/// `T_n` over `ℚ` for `n = 2`, over `ℚ(ζ_n)` otherwise.
pub fn taft(n: usize) -> Result<HopfAlgebraData> {
    let f = if n == 2 {
        FieldDescriptor::rational()
    } else {
        FieldDescriptor::cyclotomic(n as u32)?
    };
    let zeta = if n == 2 { f.from_i64(-1) } else { f.zeta().expect("cyclotomic") };
    taft_over(&f, n, &zeta)
}

/// `T_2` over `𝔽_p` with its coradical `span{1, g}` declared.
pub fn taft2_mod(p: u64) -> Result<HopfAlgebraData> {
    let f = FieldDescriptor::prime(p)?;
    let mut h = taft_over(&f, 2, &f.from_i64(-1))?;
    h.declared_coradical = Some(vec![h.basis(0), h.basis(1)]);
    Ok(h)
}

/// `kC_n` over `𝔽_p` with the whole space declared as coradical.
pub fn cyclic_mod(p: u64, n: usize) -> Result<HopfAlgebraData> {
    let f = FieldDescriptor::prime(p)?;
    let mut h = group_algebra_cyclic(&f, n);
    h.declared_coradical = Some((0..n).map(|i| h.basis(i)).collect());
    Ok(h)
}

/// Exponent-like expectations: a finite value, or a search that must run
/// into its cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExpectedExp {
    Finite(u64),
    ExceedsCap,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub dim: usize,
    #[serde(rename = "N")]
    pub n: Option<u64>,
    #[serde(rename = "L")]
    pub l: Option<usize>,
    pub ord_s2: Option<u64>,
    pub exp: Option<ExpectedExp>,
    pub qexp: Option<u64>,
    pub dual_chevalley: Option<bool>,
}

pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub field: FieldDescriptor,
    pub build: fn() -> Result<HopfAlgebraData>,
    pub expected: Expected,
}

impl CorpusEntry {
    pub fn build(&self) -> Result<HopfAlgebraData> {
        (self.build)()
    }
}

fn q() -> FieldDescriptor {
    FieldDescriptor::rational()
}

fn cyc(m: u32) -> FieldDescriptor {
    FieldDescriptor::cyclotomic(m).expect("valid order")
}

/// Field used for `kC_n` and its dual: `ℚ` suffices for `kC_n`, the dual
/// needs `ζ_n` to split.
fn dual_cyclic_field(n: usize) -> FieldDescriptor {
    if n <= 2 {
        q()
    } else {
        cyc(n as u32)
    }
}

macro_rules! exp {
    (cap) => {
        Some(ExpectedExp::ExceedsCap)
    };
    ($v:expr) => {
        Some(ExpectedExp::Finite($v))
    };
}

#[allow(clippy::too_many_arguments)]
fn expected(
    dim: usize,
    n: Option<u64>,
    l: Option<usize>,
    ord_s2: Option<u64>,
    exp: Option<ExpectedExp>,
    qexp: Option<u64>,
    dual_chevalley: Option<bool>,
) -> Expected {
    Expected { dim, n, l, ord_s2, exp, qexp, dual_chevalley }
}

pub fn build_corpus() -> Vec<CorpusEntry> {
    let mut v = vec![
        CorpusEntry {
            name: "kC2",
            description: "group algebra of C2",
            field: q(),
            build: || Ok(group_algebra_cyclic(&q(), 2)),
            expected: expected(2, Some(2), Some(1), Some(1), exp!(2), Some(2), Some(true)),
        },
        CorpusEntry {
            name: "kC3",
            description: "group algebra of C3",
            field: q(),
            build: || Ok(group_algebra_cyclic(&q(), 3)),
            expected: expected(3, Some(3), Some(1), Some(1), exp!(3), None, Some(true)),
        },
        CorpusEntry {
            name: "kC4",
            description: "group algebra of C4",
            field: q(),
            build: || Ok(group_algebra_cyclic(&q(), 4)),
            expected: expected(4, Some(4), Some(1), Some(1), exp!(4), None, Some(true)),
        },
        CorpusEntry {
            name: "kC5",
            description: "group algebra of C5",
            field: q(),
            build: || Ok(group_algebra_cyclic(&q(), 5)),
            expected: expected(5, Some(5), Some(1), Some(1), exp!(5), None, Some(true)),
        },
        CorpusEntry {
            name: "kC6",
            description: "group algebra of C6",
            field: q(),
            build: || Ok(group_algebra_cyclic(&q(), 6)),
            expected: expected(6, Some(6), Some(1), Some(1), exp!(6), None, Some(true)),
        },
        CorpusEntry {
            name: "kS3",
            description: "group algebra of S3",
            field: q(),
            build: || Ok(group_algebra_s3(&q())),
            expected: expected(6, Some(6), Some(1), Some(1), exp!(6), None, Some(true)),
        },
    ];
    let duals: [(&'static str, usize, fn() -> Result<HopfAlgebraData>); 5] = [
        ("dual-kC2", 2, || dual_cyclic(&dual_cyclic_field(2), 2)),
        ("dual-kC3", 3, || dual_cyclic(&dual_cyclic_field(3), 3)),
        ("dual-kC4", 4, || dual_cyclic(&dual_cyclic_field(4), 4)),
        ("dual-kC5", 5, || dual_cyclic(&dual_cyclic_field(5), 5)),
        ("dual-kC6", 6, || dual_cyclic(&dual_cyclic_field(6), 6)),
    ];
    for (name, n, build) in duals {
        let n64 = n as u64;
        v.push(CorpusEntry {
            name,
            description: "function algebra on a cyclic group",
            field: dual_cyclic_field(n),
            build,
            expected: expected(n, Some(n64), Some(1), Some(1), exp!(n64), None, Some(true)),
        });
    }
    v.extend([
        CorpusEntry {
            name: "dual-kS3",
            description: "function algebra on S3 with its 2x2 basic matrix declared",
            field: q(),
            build: || dual_s3(&q()),
            expected: expected(6, Some(6), Some(1), Some(1), exp!(6), None, Some(true)),
        },
        CorpusEntry {
            name: "H4",
            description: "Sweedler's algebra, the Taft algebra T2",
            field: q(),
            build: || taft(2),
            expected: expected(4, Some(2), Some(2), Some(2), exp!(cap), Some(2), Some(true)),
        },
        CorpusEntry {
            name: "T3",
            description: "Taft algebra T3",
            field: cyc(3),
            build: || taft(3),
            expected: expected(9, Some(3), Some(3), Some(3), exp!(cap), Some(3), Some(true)),
        },
        CorpusEntry {
            name: "T4",
            description: "Taft algebra T4",
            field: cyc(4),
            build: || taft(4),
            expected: expected(16, Some(4), Some(4), Some(4), exp!(cap), None, Some(true)),
        },
        CorpusEntry {
            name: "T5",
            description: "Taft algebra T5",
            field: cyc(5),
            build: || taft(5),
            expected: expected(25, Some(5), Some(5), Some(5), exp!(cap), None, Some(true)),
        },
        CorpusEntry {
            name: "dual-kS3-x-T2",
            description: "(kS3)* tensor T2, a non-pointed algebra with the dual Chevalley property",
            field: q(),
            build: || tensor_product(&dual_s3(&q())?, &taft(2)?),
            expected: expected(24, Some(6), Some(2), Some(2), exp!(cap), None, Some(true)),
        },
        CorpusEntry {
            name: "smash-H4",
            description: "H4 smashed with the group generated by S^2",
            field: q(),
            build: || smash_with_s2(&taft(2)?),
            expected: expected(8, Some(2), Some(2), Some(2), exp!(cap), Some(2), Some(true)),
        },
        CorpusEntry {
            name: "smash-T3",
            description: "T3 smashed with the group generated by S^2",
            field: cyc(3),
            build: || smash_with_s2(&taft(3)?),
            expected: expected(27, Some(3), Some(3), Some(3), exp!(cap), Some(3), Some(true)),
        },
        CorpusEntry {
            name: "T2-F5",
            description: "Taft algebra T2 over F5, coradical declared",
            field: FieldDescriptor::prime(5).expect("prime"),
            build: || taft2_mod(5),
            expected: expected(4, Some(2), Some(2), Some(2), exp!(10), None, Some(true)),
        },
        CorpusEntry {
            name: "kC5-F5",
            description: "group algebra of C5 over F5, coradical declared",
            field: FieldDescriptor::prime(5).expect("prime"),
            build: || cyclic_mod(5, 5),
            expected: expected(5, Some(5), Some(1), Some(1), exp!(5), None, Some(true)),
        },
        CorpusEntry {
            name: "dual-D-H4",
            description: "dual of the Drinfeld double of H4; its coradical is not a subalgebra",
            field: q(),
            build: || dual(&drinfeld_double(&taft(2)?)?.double),
            expected: expected(16, None, Some(3), Some(2), exp!(cap), None, Some(false)),
        },
    ]);
    v
}

pub fn find(name: &str) -> Option<CorpusEntry> {
    build_corpus().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::verify_hopf;

    #[test]
    fn sweedler_structure_constants() {
        let h = taft(2).unwrap();
        // basis [1, g, x, gx]
        let e = |i: usize| h.basis(i);
        assert_eq!(h.mul(&e(1), &e(1)), e(0));
        assert!(h.is_zero(&h.mul(&e(2), &e(2))));
        assert_eq!(h.mul(&e(2), &e(1)), h.scale(&h.f().from_i64(-1), &e(3)));
        assert_eq!(h.mul(&e(1), &e(2)), e(3));
        let dx = h.add(&h.tensor2(&e(2), &e(0)), &h.tensor2(&e(1), &e(2)));
        assert_eq!(h.comul(&e(2)), dx);
        assert_eq!(h.antipode_of(&e(2)), h.scale(&h.f().from_i64(-1), &e(3)));
        assert!(verify_hopf(&h).all_pass());
    }

    #[test]
    fn taft_comultiplication_matches_q_binomial() {
        // Δ(x^j) = Σ_k [j choose k]_{ζ⁻¹} g^k x^{j-k} ⊗ x^k for the relation g x = ζ x g
        let n = 4;
        let h = taft(n).unwrap();
        let f = h.f().clone();
        let z = f.zeta_pow(-1).unwrap();
        let qint = |m: usize| (0..m).fold(f.zero(), |a, k| f.add(&a, &f.pow(&z, k as i64).unwrap()));
        let qfact = |m: usize| (1..=m).fold(f.one(), |a, k| f.mul(&a, &qint(k)));
        for j in 0..n {
            let mut want = vec![f.zero(); n * n * n * n];
            for k in 0..=j {
                let c = f.div(&qfact(j), &f.mul(&qfact(k), &qfact(j - k))).unwrap();
                let left = (j - k) * n + k;
                let right = k * n;
                want[left * n * n + right] = c;
            }
            assert_eq!(h.comul(&h.basis(j * n)), want, "x^{j}");
        }
    }

    #[test]
    fn s3_rep_is_a_homomorphism() {
        let rep = s3_standard_rep();
        let t = s3_table();
        let mm = |a: &[[i64; 2]; 2], b: &[[i64; 2]; 2]| {
            let mut c = [[0; 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
                }
            }
            c
        };
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(mm(&rep[a], &rep[b]), rep[t[a][b]]);
            }
        }
        assert_eq!(rep[0], [[1, 0], [0, 1]]);
    }

    #[test]
    fn corpus_small_entries_pass_axioms() {
        for e in build_corpus() {
            if e.expected.dim > 16 {
                continue;
            }
            let h = e.build().unwrap();
            assert_eq!(h.dim, e.expected.dim, "{}", e.name);
            assert_eq!(h.field, e.field, "{}", e.name);
            let r = verify_hopf(&h);
            assert!(r.all_pass(), "{}: {}", e.name, r.render());
        }
    }
}
