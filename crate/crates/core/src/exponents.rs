//! Sweedler power maps, exponents, quasi-exponents and the annihilation
//! theorem `(S^{2N} − id)^{L−1} = 0`.

use num_integer::Integer;
use serde::Serialize;

use crate::coradical::{coradical_filtration, dual_chevalley_of, FiltrationData};
use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, Scalar, Subspace};
use crate::hopfcore::{
    antipode_power, convolution, dual, is_grouplike, pivotal_check, smash_with_s2, sub_hopf, DoubleEngine,
    HopfAlgebraData, LinearEndo,
};
use crate::report::{CheckOutcome, InvariantsReport, VerificationReport};

/// Cap used when no decisive bound is available.
pub const DEFAULT_CAP: u64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExponentValue {
    Finite(u64),
    /// The search ran to the cap without success; says nothing about
    /// finiteness.
    ExceedsCap(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentResult {
    pub value: ExponentValue,
    /// Largest `n` examined.
    pub checked: u64,
}

impl ExponentResult {
    pub fn finite(&self) -> Option<u64> {
        match self.value {
            ExponentValue::Finite(n) => Some(n),
            ExponentValue::ExceedsCap(_) => None,
        }
    }

    fn found(n: u64) -> Self {
        ExponentResult { value: ExponentValue::Finite(n), checked: n }
    }

    fn capped(cap: u64) -> Self {
        ExponentResult { value: ExponentValue::ExceedsCap(cap), checked: cap }
    }
}

impl std::fmt::Display for ExponentResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.value {
            ExponentValue::Finite(n) => write!(f, "{n}"),
            ExponentValue::ExceedsCap(c) => write!(f, ">{c}"),
        }
    }
}

/// `m_n ∘ (f₁ ⊗ ⋯ ⊗ f_n) ∘ Δ_n`, as `f₁ ★ f₂ ★ ⋯ ★ f_n`.
pub fn generalized_sweedler_power(h: &HopfAlgebraData, maps: &[LinearEndo]) -> Result<LinearEndo> {
    let (first, rest) = maps
        .split_first()
        .ok_or_else(|| Error::DimensionMismatch("at least one map is required".into()))?;
    if first.rows() != h.dim || first.cols() != h.dim {
        return Err(Error::DimensionMismatch(format!("map {}x{} on dim {}", first.rows(), first.cols(), h.dim)));
    }
    let mut acc = first.clone();
    for m in rest {
        acc = convolution(h, &acc, m)?;
    }
    Ok(acc)
}

/// The same map by expanding `Δ_n(e_a)` into pure tensors (coassociated
/// on the right), applying each map to its leg and multiplying out.
pub fn tensor_form_sweedler_power(h: &HopfAlgebraData, maps: &[LinearEndo]) -> Result<LinearEndo> {
    let f = &h.field;
    let d = h.dim;
    if maps.is_empty() {
        return Err(Error::DimensionMismatch("at least one map is required".into()));
    }
    let images: Vec<Vec<Vec<Scalar>>> = maps.iter().map(|m| (0..d).map(|j| m.column(j)).collect()).collect();
    let mut cols = Vec::with_capacity(d);
    for a in 0..d {
        // terms of Δ_n(e_a): (indices, coefficient), expanding the last leg
        let mut terms: Vec<(Vec<usize>, Scalar)> = vec![(vec![a], f.one())];
        for _ in 1..maps.len() {
            let mut next = Vec::new();
            for (idx, c) in &terms {
                let last = *idx.last().unwrap();
                for (jk, v) in h.comult.col(last) {
                    let mut i2 = idx[..idx.len() - 1].to_vec();
                    i2.push(jk / d);
                    i2.push(jk % d);
                    next.push((i2, f.mul(c, v)));
                }
            }
            terms = next;
        }
        let mut out = h.zero();
        for (idx, c) in terms {
            let mut prod = h.scale(&c, &images[0][idx[0]]);
            for (leg, &i) in idx.iter().enumerate().skip(1) {
                prod = h.mul(&prod, &images[leg][i]);
            }
            out = h.add(&out, &prod);
        }
        cols.push(out);
    }
    Ok(ExactMatrix::from_columns(f, d, &cols))
}

/// A left integral: `xΛ = ε(x)Λ` for all `x`.
pub fn left_integral(h: &HopfAlgebraData) -> Result<Vec<Scalar>> {
    let f = &h.field;
    let mut rows = Vec::new();
    for x in 0..h.dim {
        let mut m = h.left_mult_matrix(&h.basis(x));
        let e = h.counit[x].clone();
        for i in 0..h.dim {
            let v = f.sub(m.get(i, i), &e);
            m.set(i, i, v);
        }
        for i in 0..h.dim {
            rows.push(m.row(i).to_vec());
        }
    }
    let k = ExactMatrix::from_rows(f, rows)?.kernel();
    if k.dim() != 1 {
        return Err(Error::Internal(format!("space of left integrals has dimension {}", k.dim())));
    }
    Ok(k.basis()[0].clone())
}

/// Maschke: `H` is semisimple iff `ε(Λ) ≠ 0`.
pub fn is_semisimple(h: &HopfAlgebraData) -> Result<bool> {
    let l = left_integral(h)?;
    Ok(!h.field.is_zero(&h.counit_of(&l)))
}

pub fn is_cosemisimple(h: &HopfAlgebraData) -> Result<bool> {
    is_semisimple(&dual(h)?)
}

/// `dim³` when `H` is semisimple and cosemisimple (then `exp(H) | dim³`),
/// else [`DEFAULT_CAP`].
pub fn default_cap(h: &HopfAlgebraData) -> Result<u64> {
    if is_semisimple(h)? && is_cosemisimple(h)? {
        Ok((h.dim as u64).pow(3))
    } else {
        Ok(DEFAULT_CAP)
    }
}

/// Least `n ≤ cap` with `P_n = u∘ε`, where `P_1 = id` and
/// `P_n = P_{n−1} ★ twist(n−1)`.
fn search(h: &HopfAlgebraData, cap: u64, twist: impl Fn(u64) -> Result<LinearEndo>) -> Result<ExponentResult> {
    let target = h.unit_counit();
    let mut p = h.identity();
    for n in 1..=cap {
        if n > 1 {
            p = convolution(h, &p, &twist(n - 1)?)?;
        }
        if p == target {
            return Ok(ExponentResult::found(n));
        }
    }
    Ok(ExponentResult::capped(cap))
}

/// Powers `S^{2k·step}` for `k` modulo `ord(S²)` when it is known.
struct TwistCache<'a> {
    h: &'a HopfAlgebraData,
    step: i64,
    period: Option<u64>,
    cache: std::cell::RefCell<std::collections::HashMap<i64, LinearEndo>>,
}

impl<'a> TwistCache<'a> {
    fn new(h: &'a HopfAlgebraData, step: i64) -> Self {
        let period = crate::hopfcore::ord_s2(h, 4 * h.dim * h.dim + 4);
        TwistCache { h, step, period, cache: Default::default() }
    }

    fn get(&self, k: u64) -> Result<LinearEndo> {
        let mut e = self.step * k as i64;
        if let Some(t) = self.period {
            e = e.rem_euclid(t as i64);
        }
        if let Some(m) = self.cache.borrow().get(&e) {
            return Ok(m.clone());
        }
        let m = antipode_power(self.h, 2 * e)?;
        self.cache.borrow_mut().insert(e, m.clone());
        Ok(m)
    }
}

/// `exp(H)`: least `n` with `m_n∘(id⊗S^{−2}⊗⋯⊗S^{−2n+2})∘Δ_n = u∘ε`.
pub fn exponent(h: &HopfAlgebraData, cap: u64) -> Result<ExponentResult> {
    let tw = TwistCache::new(h, -1);
    search(h, cap, |k| tw.get(k))
}

pub fn exponent_default(h: &HopfAlgebraData) -> Result<ExponentResult> {
    exponent(h, default_cap(h)?)
}

/// `exp_{2i}(H)`: the twists are `S^{2i}, S^{4i}, …`.
pub fn twisted_exponent(h: &HopfAlgebraData, i: i64, cap: u64) -> Result<ExponentResult> {
    let tw = TwistCache::new(h, i);
    search(h, cap, |k| tw.get(k))
}

pub fn ord_s2(h: &HopfAlgebraData, cap: u64) -> ExponentResult {
    match crate::hopfcore::ord_s2(h, cap as usize) {
        Some(n) => ExponentResult::found(n),
        None => ExponentResult::capped(cap),
    }
}

/// `(hg)^{[n]} = Σ h₁ φ(h₂) ⋯ φ^{n−1}(h_n) gⁿ` with `φ = g(·)g⁻¹`, for
/// every basis `h` and `n ≤ n_max`; both sides evaluated exactly.
pub fn conjugate_sweedler_identity_check(h: &HopfAlgebraData, g: &[Scalar], n_max: usize) -> Result<bool> {
    if !is_grouplike(h, g) {
        return Err(Error::NotGrouplike);
    }
    let g_inv = h.antipode_of(g);
    let phi = h.two_sided_matrix(g, &g_inv);
    let id = h.identity();
    let right_g = ExactMatrix::from_columns(&h.field, h.dim, &(0..h.dim).map(|j| h.mul(&h.basis(j), g)).collect::<Vec<_>>());
    let mut plain = id.clone();
    let mut twisted = id.clone();
    let mut phi_k = id.clone();
    let mut gn = g.to_vec();
    for n in 1..=n_max {
        if n > 1 {
            plain = convolution(h, &plain, &id)?;
            phi_k = phi_k.mul(&phi)?;
            twisted = convolution(h, &twisted, &phi_k)?;
            gn = h.mul(&gn, g);
        }
        let lhs = plain.mul(&right_g)?;
        for j in 0..h.dim {
            if lhs.column(j) != h.mul(&twisted.column(j), &gn) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Least `n ≤ cap` with `uⁿ` unipotent in `D(H)`.
pub fn quasi_exponent(h: &HopfAlgebraData, cap: u64) -> Result<ExponentResult> {
    let engine = DoubleEngine::new(h)?;
    Ok(match engine.unipotent_power(cap) {
        Some(n) => ExponentResult::found(n),
        None => ExponentResult::capped(cap),
    })
}

/// `exp(H₀)` with `H₀` taken as a Hopf algebra in its own right.
pub fn coradical_exponent(h: &HopfAlgebraData, h0: &Subspace) -> Result<ExponentResult> {
    let sub = sub_hopf(h, h0)?;
    exponent_default(&sub)
}

#[derive(Clone, Debug)]
pub struct AnnihilationOutcome {
    pub invariants: InvariantsReport,
    pub checks: VerificationReport,
    pub filtration: FiltrationData,
}

/// `p^M ≥ L − 1` with `M` minimal.
pub fn char_p_m(p: u64, l: usize) -> u32 {
    let mut m = 0;
    let mut pm = 1u64;
    while pm < (l.saturating_sub(1)) as u64 {
        pm = pm.saturating_mul(p);
        m += 1;
    }
    m
}

/// Evaluates the annihilation theorem and its corollaries on `H`.
/// Refuses (rather than reports false) when `H₀` is not a subalgebra.
pub fn annihilation_check(h: &HopfAlgebraData, cap: u64) -> Result<AnnihilationOutcome> {
    let filt = coradical_filtration(h)?;
    annihilation_with(h, filt, cap)
}

pub fn annihilation_with(h: &HopfAlgebraData, filt: FiltrationData, cap: u64) -> Result<AnnihilationOutcome> {
    let f = &h.field;
    let h0 = filt.layers[0].clone();
    if !dual_chevalley_of(h, &h0) {
        return Err(Error::NotDualChevalley);
    }
    let n = coradical_exponent(h, &h0)?
        .finite()
        .ok_or_else(|| Error::Infeasible("exp(H₀) not found below the cap".into()))?;
    let l = filt.loewy_length;
    let ord = ord_s2(h, cap.max(4 * (h.dim * h.dim) as u64));
    let exp = exponent(h, cap)?;
    let mut checks = VerificationReport::new("annihilation");
    let mut notes = Vec::new();

    let s2n = antipode_power(h, 2 * n as i64)?;
    let phi_minus = s2n.sub(&h.identity())?;
    let power = (l - 1).max(1);
    if l == 1 {
        notes.push("L = 1: the exponent L−1 = 0 is read as 1".to_string());
    }
    let theorem = phi_minus.pow(power as i64)?.is_zero();
    checks.push(CheckOutcome::from_bool("theorem", theorem, || format!("(S^{}−id)^{power} ≠ 0", 2 * n)));

    let ord_v = ord.finite();
    let corollary = if f.characteristic() == 0 {
        let ok = ord_v.map_or(false, |o| n % o == 0) && s2n.is_identity();
        checks.push(CheckOutcome::from_bool("corollary", ok, || format!("ord(S²) = {ord} does not divide N = {n}")));
        ok
    } else {
        let p = f.characteristic();
        let m = char_p_m(p, l);
        let npm = n * p.pow(m);
        let bound = match exp.finite() {
            Some(e) => npm.gcd(&e),
            None => {
                notes.push(format!("exp(H) not found below {cap}; checked ord(S²) | N·p^M only"));
                npm
            }
        };
        let ok = ord_v.map_or(false, |o| bound % o == 0);
        checks.push(CheckOutcome::from_bool("corollary", ok, || format!("ord(S²) = {ord} does not divide {bound}")));
        ok
    };

    checks.push(CheckOutcome::from_bool("s2N_on_H0", restricts_to_identity(&s2n, &h0), || "S^{2N} ≠ id on H₀".into()));
    checks.push(CheckOutcome::from_bool("s2N_on_H1", restricts_to_identity(&s2n, filt.layer(1)), || {
        "S^{2N} ≠ id on H₁".into()
    }));
    let mut tw = None;
    for i in 0..filt.layers.len().saturating_sub(1) {
        let image = filt.layers[i + 1].map(&phi_minus);
        if !image.is_subspace_of(&filt.layers[i]) {
            tw = Some(format!("(φ−id)(H_{}) ⊄ H_{i}", i + 1));
            break;
        }
    }
    checks.push(CheckOutcome::from_bool("layer_contraction", tw.is_none(), || tw.clone().unwrap()));

    let invariants = InvariantsReport {
        dim: h.dim,
        n: Some(n),
        l: Some(l),
        ord_s2: ord_v,
        exp: exp.finite(),
        qexp: None,
        dual_chevalley: Some(true),
        theorem_pass: Some(theorem),
        corollary_pass: Some(corollary),
        notes,
    };
    Ok(AnnihilationOutcome { invariants, checks, filtration: filt })
}

fn restricts_to_identity(m: &LinearEndo, v: &Subspace) -> bool {
    v.basis().iter().all(|x| m.apply(x) == *x)
}

/// Both sides of `exp(H ⋊ k⟨S²⟩) = lcm_i exp_{2i}(H)` with `i` running
/// over `0..ord(S²)`; when `H₀` is a subalgebra and `qexp_cap > 0`, also
/// `qexp(H ⋊ k⟨S²⟩) = exp(H₀) = qexp(H)`.
pub fn smash_exponent_check(h: &HopfAlgebraData, cap: u64, qexp_cap: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("smash");
    let t = ord_s2(h, 4 * (h.dim * h.dim) as u64)
        .finite()
        .ok_or_else(|| Error::Infeasible("ord(S²) not found".into()))?;
    let smash = smash_with_s2(h)?;
    let lhs = exponent(&smash, cap)?;
    let twisted: Vec<ExponentResult> = (0..t as i64).map(|i| twisted_exponent(h, i, cap)).collect::<Result<_>>()?;
    let rhs = twisted.iter().try_fold(1u64, |acc, r| r.finite().map(|v| acc.lcm(&v)));
    let detail = format!(
        "exp(smash) = {lhs}; exp_2i = [{}]",
        twisted.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ")
    );
    let outcome = match (lhs.finite(), rhs) {
        (Some(a), Some(b)) => CheckOutcome::from_bool("smash_exponent", a == b, || format!("{a} ≠ {b}")),
        _ => CheckOutcome::inconclusive("smash_exponent", cap),
    };
    report.push(outcome.with_detail(detail));

    if qexp_cap > 0 {
        let filt = coradical_filtration(h)?;
        if h.field.characteristic() != 0 {
            // in characteristic p every u with u^{p^k} = 1 is already unipotent
            report.push(CheckOutcome::skipped("smash_qexp", "characteristic 0 statement"));
        } else if dual_chevalley_of(h, &filt.layers[0]) {
            let e0 = coradical_exponent(h, &filt.layers[0])?;
            let q_smash = quasi_exponent(&smash, qexp_cap)?;
            let q_h = quasi_exponent(h, qexp_cap)?;
            let detail = format!("qexp(smash) = {q_smash}, exp(H₀) = {e0}, qexp(H) = {q_h}");
            let outcome = match (q_smash.finite(), e0.finite(), q_h.finite()) {
                (Some(a), Some(b), Some(c)) => {
                    CheckOutcome::from_bool("smash_qexp", a == b && b == c, || detail.clone())
                }
                _ => CheckOutcome::inconclusive("smash_qexp", qexp_cap),
            };
            report.push(outcome.with_detail(detail));
        } else {
            report.push(CheckOutcome::skipped("smash_qexp", "hypothesis: dual Chevalley"));
        }
    }
    Ok(report)
}

/// For pivotal `H`: `exp_{2i}(H) = exp_0(H)` for `i` in `0..ord(S²)`.
pub fn pivotal_invariance_check(h: &HopfAlgebraData, cap: u64) -> Result<CheckOutcome> {
    if pivotal_check(h)?.is_none() {
        return Ok(CheckOutcome::skipped("pivotal_invariance", "not pivotal"));
    }
    let t = ord_s2(h, 4 * (h.dim * h.dim) as u64).finite().unwrap_or(1);
    let base = twisted_exponent(h, 0, cap)?;
    for i in 1..t as i64 {
        let r = twisted_exponent(h, i, cap)?;
        if r != base {
            return Ok(CheckOutcome::fail("pivotal_invariance", format!("exp_{} = {r} ≠ exp_0 = {base}", 2 * i)));
        }
    }
    Ok(CheckOutcome::pass("pivotal_invariance").with_detail(format!("exp_2i = {base}")))
}
