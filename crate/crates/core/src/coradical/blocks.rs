//! Simple subcoalgebras of the coradical through the Wedderburn blocks of
//! the semisimple algebra `H₀*`, and grouplike elements.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{coradical, dual_mul};
use crate::error::{Error, Result};
use crate::exactalg::roots::roots_in_field;
use crate::exactalg::{ExactMatrix, FieldDescriptor, Scalar, Subspace};
use crate::hopfcore::HopfAlgebraData;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleBlock {
    pub subcoalgebra: Subspace,
    /// `r` with `dim C = r²`.
    pub size: usize,
    /// Basic multiplicative matrix, `entries[i·r + j] = c_ij`.
    pub basic_matrix: Option<Vec<Vec<Scalar>>>,
    /// The central idempotent of `H₀*` for this block, as values on the
    /// echelon basis of `H₀`.
    pub central_idempotent: Vec<Scalar>,
}

impl SimpleBlock {
    pub fn entry(&self, i: usize, j: usize) -> Option<&[Scalar]> {
        self.basic_matrix.as_ref().map(|m| m[i * self.size + j].as_slice())
    }
}

/// Splits the unit of a commutative split semisimple algebra `Z` into its
/// primitive idempotents, using minimal polynomials of pseudo-random
/// elements and their roots in the base field.
pub(crate) fn primitive_idempotents(
    f: &FieldDescriptor,
    unit: Vec<Scalar>,
    z: &Subspace,
    mul: &dyn Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>,
) -> Result<Vec<Vec<Scalar>>> {
    const TRIES: usize = 24;
    let n = unit.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
    let mut queue = vec![unit];
    let mut done = Vec::new();
    'pieces: while let Some(e) = queue.pop() {
        let ez = Subspace::from_vectors(f, n, z.basis().iter().map(|b| mul(&e, b)).collect());
        if ez.dim() <= 1 {
            done.push(e);
            continue;
        }
        for _ in 0..TRIES {
            let coeffs: Vec<Scalar> = (0..ez.dim()).map(|_| f.from_i64(rng.gen_range(-4..=4))).collect();
            let x = ez.combination(&coeffs);
            let poly = minimal_polynomial(f, &e, &x, mul);
            let deg = poly.len() - 1;
            if deg == 1 {
                continue;
            }
            let roots = roots_in_field(f, &poly)?;
            if roots.len() < deg {
                return Err(Error::NonSplitCoradical(format!(
                    "a central element has a degree-{deg} minimal polynomial with only {} roots over {f}",
                    roots.len()
                )));
            }
            for (li, lambda) in roots.iter().enumerate() {
                let mut p = e.clone();
                for (mi, mu) in roots.iter().enumerate() {
                    if mi == li {
                        continue;
                    }
                    let shifted: Vec<Scalar> = x.iter().zip(&e).map(|(a, b)| f.sub(a, &f.mul(mu, b))).collect();
                    let inv = f.inv(&f.sub(lambda, mu)).expect("distinct roots");
                    p = mul(&p, &shifted).iter().map(|a| f.mul(a, &inv)).collect();
                }
                queue.push(p);
            }
            continue 'pieces;
        }
        return Err(Error::Internal("could not split a central idempotent".into()));
    }
    Ok(done)
}

/// Monic minimal polynomial of `x` in an algebra with unit `e`, low
/// degree first.
fn minimal_polynomial(
    f: &FieldDescriptor,
    e: &[Scalar],
    x: &[Scalar],
    mul: &dyn Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>,
) -> Vec<Scalar> {
    let n = e.len();
    let mut powers = vec![e.to_vec()];
    loop {
        let next = mul(powers.last().unwrap(), x);
        let m = ExactMatrix::from_columns(f, n, &powers);
        if let Some(a) = m.solve(&next) {
            let mut poly: Vec<Scalar> = a.iter().map(|c| f.neg(c)).collect();
            poly.push(f.one());
            return poly;
        }
        powers.push(next);
    }
}

/// Structure of `H₀*` on the basis dual to the echelon basis of `H₀`.
struct CoradicalDual<'a> {
    h: &'a HopfAlgebraData,
    h0: &'a Subspace,
    /// `φ_a φ_b = Σ_k table[a·n + b][k] φ_k`.
    table: Vec<Vec<(usize, Scalar)>>,
    unit: Vec<Scalar>,
}

impl<'a> CoradicalDual<'a> {
    fn new(h: &'a HopfAlgebraData, h0: &'a Subspace) -> Self {
        let f = &h.field;
        let n = h0.dim();
        let d = h.dim;
        let piv = h0.pivots();
        let mut table = vec![Vec::new(); n * n];
        for (k, hk) in h0.basis().iter().enumerate() {
            let delta = h.comul(hk);
            for a in 0..n {
                for b in 0..n {
                    let c = &delta[piv[a] * d + piv[b]];
                    if !f.is_zero(c) {
                        table[a * n + b].push((k, c.clone()));
                    }
                }
            }
        }
        let unit = h0.basis().iter().map(|v| h.counit_of(v)).collect();
        CoradicalDual { h, h0, table, unit }
    }

    fn n(&self) -> usize {
        self.h0.dim()
    }

    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = &self.h.field;
        let n = self.n();
        let mut out = vec![f.zero(); n];
        for (a, xa) in x.iter().enumerate() {
            if f.is_zero(xa) {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if f.is_zero(yb) {
                    continue;
                }
                let t = f.mul(xa, yb);
                for (k, c) in &self.table[a * n + b] {
                    f.mul_add_assign(&mut out[k.to_owned()], &t, c);
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<Scalar> {
        let f = &self.h.field;
        let mut v = vec![f.zero(); self.n()];
        v[i] = f.one();
        v
    }

    fn center(&self) -> Subspace {
        let f = &self.h.field;
        let n = self.n();
        // Σ_j z_j (φ_j φ_a − φ_a φ_j) = 0 for every a
        let mut rows = Vec::new();
        for a in 0..n {
            let mut block = vec![vec![f.zero(); n]; n];
            for j in 0..n {
                for (k, c) in &self.table[j * n + a] {
                    block[*k][j] = f.add(&block[*k][j], c);
                }
                for (k, c) in &self.table[a * n + j] {
                    block[*k][j] = f.sub(&block[*k][j], c);
                }
            }
            rows.extend(block);
        }
        ExactMatrix::from_rows(f, rows).expect("rectangular").kernel()
    }

    /// `E ⇀ H₀ = span{Σ h₁ E(h₂)}`.
    fn hit_span(&self, e: &[Scalar]) -> Subspace {
        let f = &self.h.field;
        let n = self.n();
        let vs = (0..n)
            .map(|k| {
                let mut coords = vec![f.zero(); n];
                for a in 0..n {
                    for b in 0..n {
                        if let Some((_, c)) = self.table[a * n + b].iter().find(|(kk, _)| *kk == k) {
                            if !f.is_zero(&e[b]) {
                                f.mul_add_assign(&mut coords[a], c, &e[b]);
                            }
                        }
                    }
                }
                self.h0.combination(&coords)
            })
            .collect();
        Subspace::from_vectors(f, self.h.dim, vs)
    }
}

/// Blocks without basic matrices, unit block first, then by pivots.
pub(crate) fn raw_blocks(h: &HopfAlgebraData, h0: &Subspace) -> Result<Vec<SimpleBlock>> {
    let f = &h.field;
    let a = CoradicalDual::new(h, h0);
    let center = a.center();
    let mul = |x: &[Scalar], y: &[Scalar]| a.mul(x, y);
    let idems = primitive_idempotents(f, a.unit.clone(), &center, &mul)?;
    let mut blocks = Vec::new();
    let mut total = 0;
    for e in idems {
        let ea = Subspace::from_vectors(f, a.n(), (0..a.n()).map(|k| a.mul(&e, &a.basis(k))).collect());
        let r = (ea.dim() as f64).sqrt().round() as usize;
        if r * r != ea.dim() {
            return Err(Error::NonSplitCoradical(format!(
                "a simple block of the dual coradical has dimension {}",
                ea.dim()
            )));
        }
        let c = a.hit_span(&e);
        if c.dim() != ea.dim() {
            return Err(Error::Internal("block subcoalgebra has the wrong dimension".into()));
        }
        total += c.dim();
        blocks.push(SimpleBlock {
            subcoalgebra: c,
            size: r,
            basic_matrix: None,
            central_idempotent: e,
        });
    }
    if total != h0.dim() {
        return Err(Error::NonSplitCoradical(format!("blocks cover {total} of {} dimensions", h0.dim())));
    }
    blocks.sort_by_key(|b| (!b.subcoalgebra.contains(&h.unit), b.size, b.subcoalgebra.pivots().to_vec()));
    Ok(blocks)
}

fn grouplike_of(h: &HopfAlgebraData, block: &SimpleBlock) -> Vec<Scalar> {
    let c = &block.subcoalgebra.basis()[0];
    let inv = h.field.inv(&h.counit_of(c)).expect("grouplike block has nonzero counit");
    h.scale(&inv, c)
}

fn is_multiplicative_entries(h: &HopfAlgebraData, r: usize, m: &[Vec<Scalar>]) -> bool {
    let f = &h.field;
    (0..r).all(|i| {
        (0..r).all(|j| {
            let want_eps = if i == j { f.one() } else { f.zero() };
            if h.counit_of(&m[i * r + j]) != want_eps {
                return false;
            }
            let mut rhs = vec![f.zero(); h.dim * h.dim];
            for k in 0..r {
                for (s, v) in rhs.iter_mut().zip(h.tensor2(&m[i * r + k], &m[k * r + j])) {
                    *s = f.add(s, &v);
                }
            }
            h.comul(&m[i * r + j]) == rhs
        })
    })
}

pub fn simple_subcoalgebras(h: &HopfAlgebraData) -> Result<Vec<SimpleBlock>> {
    let h0 = coradical(h)?;
    blocks_of(h, &h0, true)
}

/// Blocks with basic matrices attached; with `require_matrices` unset a
/// block of size ≥ 2 without a declared matrix keeps `None`.
pub(crate) fn blocks_of(h: &HopfAlgebraData, h0: &Subspace, require_matrices: bool) -> Result<Vec<SimpleBlock>> {
    let mut blocks = raw_blocks(h, h0)?;
    let groups: Vec<Vec<Scalar>> = blocks.iter().filter(|b| b.size == 1).map(|b| grouplike_of(h, b)).collect();
    for b in blocks.iter_mut() {
        if b.size == 1 {
            b.basic_matrix = Some(vec![grouplike_of(h, b)]);
            continue;
        }
        let r = b.size;
        let mut candidates: Vec<Vec<Vec<Scalar>>> = Vec::new();
        for m in h.basic_matrices.iter().filter(|m| m.size == r) {
            candidates.push(m.entries.clone());
            for g in &groups {
                candidates.push(m.entries.iter().map(|c| h.mul(c, g)).collect());
                candidates.push(m.entries.iter().map(|c| h.mul(g, c)).collect());
            }
        }
        let found = candidates.into_iter().find(|m| {
            m.iter().all(|c| b.subcoalgebra.contains(c))
                && Subspace::from_vectors(&h.field, h.dim, m.clone()).dim() == r * r
                && is_multiplicative_entries(h, r, m)
        });
        match found {
            Some(m) => b.basic_matrix = Some(m),
            None if require_matrices => return Err(Error::MissingBasicMatrix(r)),
            None => {}
        }
    }
    Ok(blocks)
}

/// Grouplike elements of `H`. In characteristic 0 they are read off the
/// one-dimensional simple subcoalgebras; in characteristic p they are the
/// `𝔽_p`-valued characters of `H*`.
pub fn grouplikes(h: &HopfAlgebraData) -> Result<Vec<Vec<Scalar>>> {
    if h.field.characteristic() > 0 {
        return grouplikes_via_characters(h);
    }
    let h0 = coradical(h)?;
    Ok(raw_blocks(h, &h0)?
        .iter()
        .filter(|b| b.size == 1)
        .map(|b| grouplike_of(h, b))
        .collect())
}

/// Characters of `H*` over `𝔽_p`: they factor through the abelianization
/// `A = H*/[H*,H*]`, whose Frobenius-fixed part `{x : x^p = x}` is spanned
/// by the primitive idempotents `ε_i` of the local factors with residue
/// field `𝔽_p`. The character of `ε_i` sends `a` to the `c` with
/// `ε_i a − c ε_i` nilpotent.
pub(crate) fn grouplikes_via_characters(h: &HopfAlgebraData) -> Result<Vec<Vec<Scalar>>> {
    let f = &h.field;
    let p = f.characteristic();
    if p == 0 || p > 1 << 16 {
        return Err(Error::Infeasible(format!("character search over {f}")));
    }
    let d = h.dim;
    let basis: Vec<Vec<Scalar>> = (0..d).map(|i| h.basis(i)).collect();
    let mut ideal = Subspace::from_vectors(
        f,
        d,
        (0..d)
            .flat_map(|a| (0..d).map(move |b| (a, b)))
            .map(|(a, b)| h.sub(&dual_mul(h, &basis[a], &basis[b]), &dual_mul(h, &basis[b], &basis[a])))
            .collect(),
    );
    loop {
        let mut vs = ideal.basis().to_vec();
        for v in ideal.basis() {
            for b in &basis {
                vs.push(dual_mul(h, v, b));
                vs.push(dual_mul(h, b, v));
            }
        }
        let next = Subspace::from_vectors(f, d, vs);
        if next.dim() == ideal.dim() {
            break;
        }
        ideal = next;
    }
    let mul = |x: &[Scalar], y: &[Scalar]| ideal.reduce(&dual_mul(h, x, y));
    let pow = |x: &[Scalar], mut e: u64| {
        let mut acc = ideal.reduce(&h.counit);
        let mut base = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(&acc, &base);
            }
            base = mul(&base, &base);
            e >>= 1;
        }
        acc
    };
    let reps = ideal.non_pivots();
    let frob_cols: Vec<Vec<Scalar>> = reps
        .iter()
        .map(|&j| {
            let fx = h.sub(&pow(&basis[j], p), &basis[j]);
            reps.iter().map(|&k| fx[k].clone()).collect()
        })
        .collect();
    let fixed = ExactMatrix::from_columns(f, reps.len(), &frob_cols).kernel();
    let lift = |v: &[Scalar]| {
        let mut out = h.zero();
        for (c, &j) in v.iter().zip(&reps) {
            out[j] = c.clone();
        }
        out
    };
    let fixed = Subspace::from_vectors(f, d, fixed.basis().iter().map(|v| lift(v)).collect());
    let unit = ideal.reduce(&h.counit);
    let idems = primitive_idempotents(f, unit, &fixed, &mul)?;
    let is_nilpotent = |x: Vec<Scalar>| {
        let mut x = x;
        let mut k = 1;
        while k < d && !h.is_zero(&x) {
            x = mul(&x, &x);
            k *= 2;
        }
        h.is_zero(&x)
    };
    let mut out = Vec::new();
    'idem: for e in idems {
        let mut g = h.zero();
        for (j, b) in basis.iter().enumerate() {
            let eb = mul(&e, b);
            let value = (0..p).map(|c| f.from_i64(c as i64)).find(|c| is_nilpotent(h.sub(&eb, &h.scale(c, &e))));
            match value {
                Some(c) => g[j] = c,
                None => continue 'idem,
            }
        }
        if !crate::hopfcore::is_grouplike(h, &g) {
            return Err(Error::Internal("character did not give a grouplike".into()));
        }
        out.push(g);
    }
    out.sort_by_key(|g| {
        let first = g.iter().position(|x| !f.is_zero(x)).unwrap_or(d);
        (!(*g == h.unit), first, g.iter().map(|x| f.format(x)).collect::<Vec<_>>())
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn grouplike_counts() {
        let q = FieldDescriptor::rational();
        assert_eq!(grouplikes(&corpus::group_algebra_cyclic(&q, 4)).unwrap().len(), 4);
        let t3 = corpus::taft(3).unwrap();
        let g = grouplikes(&t3).unwrap();
        assert_eq!(g, vec![t3.basis(0), t3.basis(1), t3.basis(2)]);
        // characters of S3: trivial and sign
        let ds3 = corpus::dual_s3(&q).unwrap();
        let g = grouplikes(&ds3).unwrap();
        assert_eq!(g.len(), 2);
        for a in &g {
            for b in &g {
                assert!(g.contains(&ds3.mul(a, b)));
            }
        }
    }

    #[test]
    fn grouplikes_in_char_p() {
        let h = corpus::taft2_mod(5).unwrap();
        assert_eq!(grouplikes(&h).unwrap(), vec![h.basis(0), h.basis(1)]);
        let c5 = corpus::cyclic_mod(5, 5).unwrap();
        assert_eq!(grouplikes(&c5).unwrap().len(), 5);
    }

    #[test]
    fn blocks() {
        let q = FieldDescriptor::rational();
        let c2 = corpus::group_algebra_cyclic(&q, 2);
        let b = simple_subcoalgebras(&c2).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].entry(0, 0).unwrap(), c2.basis(0).as_slice());
        assert_eq!(b[1].entry(0, 0).unwrap(), c2.basis(1).as_slice());

        let ds3 = corpus::dual_s3(&q).unwrap();
        let b = simple_subcoalgebras(&ds3).unwrap();
        let mut sizes: Vec<usize> = b.iter().map(|b| b.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2]);

        let h4 = corpus::taft(2).unwrap();
        let b = simple_subcoalgebras(&h4).unwrap();
        let gs: Vec<_> = b.iter().map(|b| b.entry(0, 0).unwrap().to_vec()).collect();
        assert_eq!(gs, vec![h4.basis(0), h4.basis(1)]);
    }

    #[test]
    fn non_split_dual_is_reported() {
        let d3 = corpus::dual_cyclic(&FieldDescriptor::rational(), 3).unwrap();
        assert!(matches!(simple_subcoalgebras(&d3), Err(Error::NonSplitCoradical(_))));
        let d3 = corpus::dual_cyclic(&FieldDescriptor::cyclotomic(3).unwrap(), 3).unwrap();
        assert_eq!(simple_subcoalgebras(&d3).unwrap().len(), 3);
    }

    #[test]
    fn missing_basic_matrix() {
        let mut ds3 = corpus::dual_s3(&FieldDescriptor::rational()).unwrap();
        ds3.basic_matrices.clear();
        assert_eq!(simple_subcoalgebras(&ds3), Err(Error::MissingBasicMatrix(2)));
    }
}
