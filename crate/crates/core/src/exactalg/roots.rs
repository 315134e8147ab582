//! Roots in the base field of polynomials that are expected to split.
//!
//! Over ℚ(ζ_m) the polynomial is scaled to a monic one with coefficients in
//! ℤ[ζ_m], reduced modulo an inert prime p (so ℤ[ζ_m]/p = 𝔽_{p^φ(m)}), its
//! roots found by exhaustive search in that finite field, Hensel-lifted in
//! the Galois ring (ℤ/p^K)[t]/Φ_m(t), symmetrically lifted to ℤ[ζ_m] and
//! verified exactly. Roots that fail verification are dropped, so a short
//! result means the polynomial does not split (or has enormous roots).
//! Over 𝔽_p roots are found by exhaustive search.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::field::{euler_phi, is_prime, FieldDescriptor, FieldKind, Scalar};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Largest finite field searched exhaustively.
const SEARCH_LIMIT: u64 = 1 << 20;

/// Evaluates `Σ c_k x^k` (coefficients low degree first).
pub fn eval_poly(f: &FieldDescriptor, poly: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = f.zero();
    for c in poly.iter().rev() {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

/// Distinct roots of `poly` in the field of `f`, verified exactly.
pub fn roots_in_field(f: &FieldDescriptor, poly: &[Scalar]) -> Result<Vec<Scalar>> {
    let mut poly = poly.to_vec();
    while poly.len() > 1 && f.is_zero(poly.last().unwrap()) {
        poly.pop();
    }
    if poly.len() <= 1 {
        return Ok(Vec::new());
    }
    match f.kind() {
        FieldKind::Prime(p) => {
            let p = *p;
            if p > SEARCH_LIMIT {
                return Err(Error::Infeasible(format!("root search over F_{p} exceeds the search limit")));
            }
            Ok((0..p)
                .map(Scalar::Mod)
                .filter(|x| f.is_zero(&eval_poly(f, &poly, x)))
                .collect())
        }
        FieldKind::Rational => char0_roots(f, &poly, 1, &[-1, 1]),
        FieldKind::Cyclotomic(m) => {
            let phi = f.phi_coeffs().to_vec();
            char0_roots(f, &poly, *m, &phi)
        }
    }
}

fn char0_roots(f: &FieldDescriptor, poly: &[Scalar], m: u32, phi: &[i64]) -> Result<Vec<Scalar>> {
    let deg = poly.len() - 1;
    let lead_inv = f.inv(poly.last().unwrap()).unwrap();
    let monic: Vec<Vec<Rational>> = poly
        .iter()
        .map(|c| f.rational_coeffs(&f.mul(c, &lead_inv)).unwrap())
        .collect();
    let mut den = BigInt::one();
    for c in monic.iter().flatten() {
        den = den.lcm(&c.denom());
    }
    // y = D·x turns the monic polynomial into one over ℤ[ζ].
    let mut int_coeffs: Vec<Vec<BigInt>> = Vec::with_capacity(deg + 1);
    let mut dpow = BigInt::one();
    for k in (0..=deg).rev() {
        let scaled: Vec<BigInt> = monic[k]
            .iter()
            .map(|c| {
                let n = c.numer() * &dpow;
                let (q, r) = n.div_rem(&c.denom());
                debug_assert!(r.is_zero());
                q
            })
            .collect();
        int_coeffs.push(scaled);
        dpow *= &den;
    }
    int_coeffs.reverse();

    let phi_deg = phi.len() - 1;
    let mut best: Option<(u64, Vec<Vec<i128>>)> = None;
    let mut tried = 0;
    let mut p = 2u64;
    while tried < 40 {
        p += 1;
        if !is_prime(p) || m % p as u32 == 0 || !is_inert(p, m) {
            continue;
        }
        let size = (p as u128).pow(phi_deg as u32);
        if size > SEARCH_LIMIT as u128 {
            break;
        }
        if size < 2 * deg as u128 + 8 {
            continue;
        }
        tried += 1;
        let ring = GaloisRing::new(p, 1, phi);
        let reduced: Vec<Vec<i128>> = int_coeffs.iter().map(|c| ring.from_big(c)).collect();
        let roots = ring.simple_roots(&reduced);
        let better = best.as_ref().map_or(true, |(_, r)| roots.len() > r.len());
        if better {
            best = Some((p, roots));
        }
        if best.as_ref().unwrap().1.len() == deg {
            break;
        }
    }
    let Some((p, roots_mod_p)) = best else {
        return Err(Error::Infeasible(format!(
            "no inert prime found for Q(zeta_{m}); the multiplicative group mod {m} must be cyclic"
        )));
    };

    let mut k = 1u32;
    while (p as u128).pow(k + 1) < (1u128 << 62) {
        k += 1;
    }
    let ring = GaloisRing::new(p, k, phi);
    let lifted_poly: Vec<Vec<i128>> = int_coeffs.iter().map(|c| ring.from_big(c)).collect();
    let deriv: Vec<Vec<i128>> = (1..lifted_poly.len())
        .map(|i| ring.scale(&lifted_poly[i], i as i128))
        .collect();
    let den_r = Rational::from_big(num_rational::BigRational::from_integer(den));
    let den_inv = den_r.inv().unwrap();
    let mut out = Vec::new();
    for r0 in roots_mod_p {
        let y = ring.hensel(&lifted_poly, &deriv, r0);
        let coeffs: Vec<Rational> = y
            .iter()
            .map(|&c| {
                let c = if c > ring.q / 2 { c - ring.q } else { c };
                Rational::from_i128(c, 1).mul(&den_inv)
            })
            .collect();
        let x = f.from_rational_coeffs(&coeffs);
        if f.is_zero(&eval_poly(f, poly, &x)) && !out.contains(&x) {
            out.push(x);
        }
    }
    Ok(out)
}

/// p generates (ℤ/m)^×, i.e. p stays prime in ℤ[ζ_m].
fn is_inert(p: u64, m: u32) -> bool {
    if m <= 2 {
        return true;
    }
    let phi = euler_phi(m) as u64;
    let m = m as u64;
    let mut x = 1u64;
    for k in 1..=phi {
        x = x * (p % m) % m;
        if x == 1 {
            return k == phi;
        }
    }
    false
}

/// (ℤ/p^K)[t]/Φ(t) with `i128` coefficients in `[0, q)`.
struct GaloisRing {
    p: u64,
    k: u32,
    q: i128,
    phi: Vec<i128>,
    deg: usize,
}

impl GaloisRing {
    fn new(p: u64, k: u32, phi: &[i64]) -> Self {
        let q = (p as i128).pow(k);
        GaloisRing {
            p,
            k,
            q,
            phi: phi.iter().map(|&c| (c as i128).rem_euclid(q)).collect(),
            deg: phi.len() - 1,
        }
    }

    fn from_big(&self, c: &[BigInt]) -> Vec<i128> {
        let q = BigInt::from(self.q);
        let raw: Vec<i128> = c.iter().map(|x| x.mod_floor(&q).to_i128().unwrap()).collect();
        self.reduce(raw)
    }

    fn reduce(&self, mut raw: Vec<i128>) -> Vec<i128> {
        while raw.len() > self.deg {
            let top = raw.pop().unwrap();
            if top != 0 {
                let base = raw.len() - self.deg;
                for i in 0..self.deg {
                    raw[base + i] = (raw[base + i] - top * self.phi[i]).rem_euclid(self.q);
                }
            }
        }
        raw.resize(self.deg, 0);
        raw
    }

    fn add(&self, a: &[i128], b: &[i128]) -> Vec<i128> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.q).collect()
    }

    fn sub(&self, a: &[i128], b: &[i128]) -> Vec<i128> {
        a.iter().zip(b).map(|(x, y)| (x - y).rem_euclid(self.q)).collect()
    }

    fn scale(&self, a: &[i128], s: i128) -> Vec<i128> {
        a.iter().map(|x| (x * s.rem_euclid(self.q)) % self.q).collect()
    }

    fn mul(&self, a: &[i128], b: &[i128]) -> Vec<i128> {
        let mut raw = vec![0i128; 2 * self.deg - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                raw[i + j] = (raw[i + j] + x * y) % self.q;
            }
        }
        self.reduce(raw)
    }

    fn one(&self) -> Vec<i128> {
        let mut v = vec![0; self.deg];
        v[0] = 1 % self.q;
        v
    }

    fn eval(&self, poly: &[Vec<i128>], x: &[i128]) -> Vec<i128> {
        let mut acc = vec![0; self.deg];
        for c in poly.iter().rev() {
            acc = self.add(&self.mul(&acc, x), c);
        }
        acc
    }

    fn is_unit(&self, a: &[i128]) -> bool {
        a.iter().any(|&c| c % self.p as i128 != 0)
    }

    /// Inverse of a unit: Fermat in the residue field, then Newton lifting.
    fn inv(&self, a: &[i128]) -> Vec<i128> {
        let residue = GaloisRing::new(self.p, 1, &self.phi.iter().map(|&c| c as i64).collect::<Vec<_>>());
        let a_mod: Vec<i128> = a.iter().map(|c| c % self.p as i128).collect();
        let order = (self.p as u128).pow(self.deg as u32) - 2;
        let mut v = residue.pow(&a_mod, order);
        let two = self.scale(&self.one(), 2);
        for _ in 0..self.newton_steps() {
            v = self.mul(&v, &self.sub(&two, &self.mul(a, &v)));
        }
        v
    }

    fn pow(&self, a: &[i128], mut e: u128) -> Vec<i128> {
        let mut base = a.to_vec();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// All roots in the residue field at which the derivative is nonzero.
    fn simple_roots(&self, poly: &[Vec<i128>]) -> Vec<Vec<i128>> {
        let deriv: Vec<Vec<i128>> = (1..poly.len()).map(|i| self.scale(&poly[i], i as i128)).collect();
        let size = (self.p as u128).pow(self.deg as u32);
        let mut out = Vec::new();
        let mut x = vec![0i128; self.deg];
        for _ in 0..size {
            if !self.is_unit(&self.eval(poly, &x)) && self.is_unit(&self.eval(&deriv, &x)) {
                out.push(x.clone());
            }
            // Odometer increment.
            for c in x.iter_mut() {
                *c += 1;
                if *c < self.p as i128 {
                    break;
                }
                *c = 0;
            }
        }
        out
    }

    fn hensel(&self, poly: &[Vec<i128>], deriv: &[Vec<i128>], r0: Vec<i128>) -> Vec<i128> {
        let mut r = r0;
        for _ in 0..self.newton_steps() {
            let step = self.mul(&self.eval(poly, &r), &self.inv(&self.eval(deriv, &r)));
            r = self.sub(&r, &step);
        }
        r
    }

    /// Each Newton step doubles the p-adic precision.
    fn newton_steps(&self) -> u32 {
        32 - self.k.leading_zeros() + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: &FieldDescriptor, lits: &[&str]) -> Vec<Scalar> {
        lits.iter().map(|s| f.parse_literal(s).unwrap()).collect()
    }

    #[test]
    fn rational_roots() {
        let q = FieldDescriptor::rational();
        // (x - 1/2)(x + 3)(x - 7) = x^3 - 9/2 x^2 - 19 x + 21/2
        let p = poly(&q, &["21/2", "-19", "-9/2", "1"]);
        let mut r: Vec<String> = roots_in_field(&q, &p).unwrap().iter().map(|x| q.format(x)).collect();
        r.sort();
        assert_eq!(r, vec!["-3", "1/2", "7"]);
        // x^2 + 1 has no rational roots
        assert!(roots_in_field(&q, &poly(&q, &["1", "0", "1"])).unwrap().is_empty());
    }

    #[test]
    fn cyclotomic_roots() {
        let q5 = FieldDescriptor::cyclotomic(5).unwrap();
        // x^5 - 1 splits completely over Q(ζ_5)
        let p = poly(&q5, &["-1", "0", "0", "0", "0", "1"]);
        let r = roots_in_field(&q5, &p).unwrap();
        assert_eq!(r.len(), 5);
        let q3 = FieldDescriptor::cyclotomic(3).unwrap();
        // (x - (1+2z)/3)(x - 5z)
        let a = q3.parse_literal("(1+2*z)/3").unwrap();
        let b = q3.parse_literal("5*z").unwrap();
        let c0 = q3.mul(&a, &b);
        let c1 = q3.neg(&q3.add(&a, &b));
        let r = roots_in_field(&q3, &[c0, c1, q3.one()]).unwrap();
        assert!(r.contains(&a) && r.contains(&b) && r.len() == 2);
    }

    #[test]
    fn prime_roots() {
        let f5 = FieldDescriptor::prime(5).unwrap();
        let p = poly(&f5, &["-1", "0", "1"]);
        assert_eq!(roots_in_field(&f5, &p).unwrap(), vec![Scalar::Mod(1), Scalar::Mod(4)]);
    }
}
