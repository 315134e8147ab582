//! Base fields: ℚ, cyclotomic fields ℚ(ζ_m), and prime fields 𝔽_p.
//!
//! A [`FieldDescriptor`] is the arithmetic context; [`Scalar`] is a bare value
//! that only makes sense relative to a descriptor. Matrices and algebras keep
//! one descriptor and a flat array of scalars, which keeps the hot loops free
//! of per-entry bookkeeping. [`FieldScalar`] pairs the two for the public
//! scalar API.
//!
//! Cyclotomic values are coefficient vectors of length φ(m) in the power
//! basis 1, ζ, …, ζ^{φ(m)-1}, always reduced modulo Φ_m, so equality is
//! coefficientwise.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::rational::Rational;
use crate::error::{Error, Result};

pub type Coeffs = SmallVec<[Rational; 2]>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "param", rename_all = "lowercase")]
pub enum FieldKind {
    Rational,
    Cyclotomic(u32),
    Prime(u64),
}

#[derive(Clone)]
pub struct FieldDescriptor {
    kind: FieldKind,
    /// Monic Φ_m, coefficients from degree 0 up; empty for the other kinds.
    phi: Arc<[i64]>,
}

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for FieldDescriptor {}

impl fmt::Debug for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rational => write!(f, "rational"),
            FieldKind::Cyclotomic(m) => write!(f, "cyclotomic {m}"),
            FieldKind::Prime(p) => write!(f, "prime {p}"),
        }
    }
}

/// A bare field element. Which variant is valid depends on the descriptor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Cyc(Coeffs),
    Mod(u64),
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Cyc(c) => write!(f, "{c:?}"),
            Scalar::Mod(a) => write!(f, "{a}"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= p {
        if p % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// Integer coefficients of the m-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    // x^m - 1 divided by Φ_d for every proper divisor d.
    let mut num: Vec<i128> = vec![0; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            let div = cyclotomic_polynomial(d);
            num = exact_divide(&num, &div);
        }
    }
    num.into_iter().map(|c| c as i64).collect()
}

fn exact_divide(num: &[i128], den: &[i64]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut q = vec![0i128; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (i, &b) in den.iter().enumerate() {
                rem[k + i] -= c * b as i128;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

pub fn euler_phi(m: u32) -> u32 {
    (1..=m).filter(|&k| num_integer::gcd(k, m) == 1).count() as u32
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl FieldDescriptor {
    pub fn rational() -> Self {
        FieldDescriptor {
            kind: FieldKind::Rational,
            phi: Arc::from(Vec::new()),
        }
    }

    pub fn cyclotomic(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidField("cyclotomic order must be >= 1".into()));
        }
        if m > 2000 {
            return Err(Error::InvalidField(format!("cyclotomic order {m} is too large")));
        }
        Ok(FieldDescriptor {
            kind: FieldKind::Cyclotomic(m),
            phi: Arc::from(cyclotomic_polynomial(m)),
        })
    }

    /// Prime field 𝔽_p; `p` must be prime and below 2³² so products fit in a `u64`.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::InvalidField(format!("prime {p} exceeds 2^32")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldDescriptor {
            kind: FieldKind::Prime(p),
            phi: Arc::from(Vec::new()),
        })
    }

    pub fn from_kind(kind: &FieldKind) -> Result<Self> {
        match kind {
            FieldKind::Rational => Ok(Self::rational()),
            FieldKind::Cyclotomic(m) => Self::cyclotomic(*m),
            FieldKind::Prime(p) => Self::prime(*p),
        }
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    pub fn characteristic(&self) -> u64 {
        match self.kind {
            FieldKind::Prime(p) => p,
            _ => 0,
        }
    }

    /// Dimension over the prime field for cyclotomic fields, else 1.
    pub fn degree(&self) -> usize {
        match self.kind {
            FieldKind::Cyclotomic(_) => self.phi.len() - 1,
            _ => 1,
        }
    }

    pub fn cyclotomic_order(&self) -> Option<u32> {
        match self.kind {
            FieldKind::Cyclotomic(m) => Some(m),
            _ => None,
        }
    }

    pub(crate) fn phi_coeffs(&self) -> &[i64] {
        &self.phi
    }

    pub fn zero(&self) -> Scalar {
        match self.kind {
            FieldKind::Rational => Scalar::Rat(Rational::ZERO),
            FieldKind::Cyclotomic(_) => Scalar::Cyc(smallvec::smallvec![Rational::ZERO; self.degree()]),
            FieldKind::Prime(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_rational(&Rational::from_int(n))
    }

    pub fn from_rational(&self, r: &Rational) -> Scalar {
        match self.kind {
            FieldKind::Rational => Scalar::Rat(r.clone()),
            FieldKind::Cyclotomic(_) => {
                let mut c: Coeffs = smallvec::smallvec![Rational::ZERO; self.degree()];
                c[0] = r.clone();
                Scalar::Cyc(c)
            }
            FieldKind::Prime(p) => {
                let n = reduce_bigint(&r.numer(), p);
                let d = reduce_bigint(&r.denom(), p);
                assert!(d != 0, "denominator divisible by the characteristic");
                Scalar::Mod(n * mod_pow(d, p - 2, p) % p)
            }
        }
    }

    /// Converts a rational into this field, failing when the denominator
    /// vanishes in characteristic p.
    pub fn try_from_rational(&self, r: &Rational) -> Result<Scalar> {
        if let FieldKind::Prime(p) = self.kind {
            if reduce_bigint(&r.denom(), p) == 0 {
                return Err(Error::DivisionByZero);
            }
        }
        Ok(self.from_rational(r))
    }

    /// The primitive root of unity ζ_m of a cyclotomic field.
    pub fn zeta(&self) -> Option<Scalar> {
        match self.kind {
            FieldKind::Cyclotomic(_) => {
                let mut raw = vec![Rational::ZERO; 2.max(self.degree())];
                raw[1] = Rational::ONE;
                Some(Scalar::Cyc(self.reduce_poly(raw)))
            }
            _ => None,
        }
    }

    /// ζ_m^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> Option<Scalar> {
        let m = self.cyclotomic_order()? as i64;
        let e = k.rem_euclid(m) as usize;
        let mut raw = vec![Rational::ZERO; (e + 1).max(self.degree())];
        raw[e] = Rational::ONE;
        Some(Scalar::Cyc(self.reduce_poly(raw)))
    }

    /// Reduces a polynomial in ζ modulo Φ_m.
    pub(crate) fn reduce_poly(&self, mut raw: Vec<Rational>) -> Coeffs {
        let deg = self.degree();
        let phi = &self.phi;
        while raw.len() > deg {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let base = raw.len() - deg;
            for i in 0..deg {
                if phi[i] != 0 {
                    let t = top.mul(&Rational::from_int(phi[i]));
                    raw[base + i] = raw[base + i].sub(&t);
                }
            }
        }
        while raw.len() < deg {
            raw.push(Rational::ZERO);
        }
        raw.into_iter().collect()
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Cyc(c) => c.iter().all(Rational::is_zero),
            Scalar::Mod(x) => *x == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Cyc(c) => c[0].is_one() && c[1..].iter().all(Rational::is_zero),
            Scalar::Mod(x) => *x == 1,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x.add(y)),
            (Scalar::Cyc(x), Scalar::Cyc(y)) => {
                Scalar::Cyc(x.iter().zip(y.iter()).map(|(u, v)| u.add(v)).collect())
            }
            (Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + y) % self.modulus()),
            _ => panic!("scalar variants do not match field {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rat(x) => Scalar::Rat(x.neg()),
            Scalar::Cyc(x) => Scalar::Cyc(x.iter().map(Rational::neg).collect()),
            Scalar::Mod(x) => Scalar::Mod((self.modulus() - x) % self.modulus()),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x.mul(y)),
            (Scalar::Cyc(x), Scalar::Cyc(y)) => {
                let deg = x.len();
                if deg == 1 {
                    return Scalar::Cyc(smallvec::smallvec![x[0].mul(&y[0])]);
                }
                let mut raw = vec![Rational::ZERO; 2 * deg - 1];
                for (i, u) in x.iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    for (j, v) in y.iter().enumerate() {
                        if !v.is_zero() {
                            raw[i + j] = raw[i + j].add(&u.mul(v));
                        }
                    }
                }
                Scalar::Cyc(self.reduce_poly(raw))
            }
            (Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(x * y % self.modulus()),
            _ => panic!("scalar variants do not match field {self}"),
        }
    }

    /// `acc += a * b`, skipping the work when either factor is zero.
    pub fn mul_add_assign(&self, acc: &mut Scalar, a: &Scalar, b: &Scalar) {
        if self.is_zero(a) || self.is_zero(b) {
            return;
        }
        let t = self.mul(a, b);
        *acc = self.add(acc, &t);
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        match a {
            Scalar::Rat(x) => x.inv().map(Scalar::Rat),
            Scalar::Mod(x) => {
                let p = self.modulus();
                Some(Scalar::Mod(mod_pow(*x, p - 2, p)))
            }
            Scalar::Cyc(x) => Some(Scalar::Cyc(self.cyc_inverse(x))),
        }
    }

    /// Inverts a nonzero cyclotomic element by solving `a·y = 1` with the
    /// multiplication-by-`a` matrix over ℚ.
    fn cyc_inverse(&self, a: &Coeffs) -> Coeffs {
        let deg = a.len();
        // Columns are a·ζ^j expressed in the power basis.
        let mut cols: Vec<Coeffs> = Vec::with_capacity(deg);
        let mut cur: Coeffs = a.clone();
        for _ in 0..deg {
            cols.push(cur.clone());
            let mut raw = vec![Rational::ZERO];
            raw.extend(cur.iter().cloned());
            cur = self.reduce_poly(raw);
        }
        // Augmented system [M | e_0], M[i][j] = cols[j][i].
        let mut m: Vec<Vec<Rational>> = (0..deg)
            .map(|i| {
                let mut row: Vec<Rational> = (0..deg).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Rational::ONE } else { Rational::ZERO });
                row
            })
            .collect();
        for c in 0..deg {
            let p = (c..deg).find(|&r| !m[r][c].is_zero()).expect("nonzero cyclotomic element is invertible");
            m.swap(c, p);
            let inv = m[c][c].inv().unwrap();
            for v in m[c].iter_mut() {
                *v = v.mul(&inv);
            }
            for r in 0..deg {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for k in c..=deg {
                        let t = f.mul(&m[c][k]);
                        m[r][k] = m[r][k].sub(&t);
                    }
                }
            }
        }
        m.into_iter().map(|row| row[deg].clone()).collect()
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    pub fn pow(&self, a: &Scalar, e: i64) -> Option<Scalar> {
        let mut base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut e = e.unsigned_abs();
        let mut r = self.one();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        Some(r)
    }

    fn modulus(&self) -> u64 {
        match self.kind {
            FieldKind::Prime(p) => p,
            _ => unreachable!("modulus of a characteristic-0 field"),
        }
    }

    /// True when the scalar has the variant (and length) this field expects.
    pub fn owns(&self, a: &Scalar) -> bool {
        match (&self.kind, a) {
            (FieldKind::Rational, Scalar::Rat(_)) => true,
            (FieldKind::Cyclotomic(_), Scalar::Cyc(c)) => c.len() == self.degree(),
            (FieldKind::Prime(p), Scalar::Mod(x)) => x < p,
            _ => false,
        }
    }

    /// Rational coordinates of a characteristic-0 scalar in the power basis.
    pub fn rational_coeffs(&self, a: &Scalar) -> Option<Vec<Rational>> {
        match a {
            Scalar::Rat(r) => Some(vec![r.clone()]),
            Scalar::Cyc(c) => Some(c.to_vec()),
            Scalar::Mod(_) => None,
        }
    }

    pub fn from_rational_coeffs(&self, coeffs: &[Rational]) -> Scalar {
        match self.kind {
            FieldKind::Rational => Scalar::Rat(coeffs[0].clone()),
            FieldKind::Cyclotomic(_) => Scalar::Cyc(self.reduce_poly(coeffs.to_vec())),
            FieldKind::Prime(_) => self.from_rational(&coeffs[0]),
        }
    }

    /// Parses a scalar literal.
    ///
    /// Rationals are `a` or `a/b`; prime-field literals are the same, reduced
    /// mod p; cyclotomic literals are `c0+c1*z+...+ck*z^k` with integer
    /// coefficients, optionally wrapped as `(poly)/d` or followed by a global
    /// `/d`. Powers of `z` beyond φ(m)-1 are reduced.
    pub fn parse_literal(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::Literal {
            literal: s.to_string(),
            field: self.to_string(),
        };
        match self.kind {
            FieldKind::Rational => s.parse::<Rational>().map(Scalar::Rat).map_err(|_| bad()),
            FieldKind::Prime(_) => {
                let r = s.parse::<Rational>().map_err(|_| bad())?;
                self.try_from_rational(&r).map_err(|_| bad())
            }
            FieldKind::Cyclotomic(_) => {
                let (poly, den) = match s.rfind('/') {
                    Some(i) => {
                        let d: Rational = s[i + 1..].parse().map_err(|_| bad())?;
                        if !d.is_integer() || d.is_zero() {
                            return Err(bad());
                        }
                        (&s[..i], d)
                    }
                    None => (s, Rational::ONE),
                };
                let poly = poly
                    .strip_prefix('(')
                    .and_then(|p| p.strip_suffix(')'))
                    .unwrap_or(poly);
                let raw = parse_z_poly(poly).ok_or_else(bad)?;
                let inv = den.inv().unwrap();
                let raw: Vec<Rational> = raw.iter().map(|c| c.mul(&inv)).collect();
                Ok(Scalar::Cyc(self.reduce_poly(raw)))
            }
        }
    }

    /// Canonical literal for a scalar; `parse_literal` inverts it.
    pub fn format(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rat(r) => r.to_string(),
            Scalar::Mod(x) => x.to_string(),
            Scalar::Cyc(c) => {
                let mut den = num_bigint::BigInt::from(1);
                for x in c.iter() {
                    den = num_integer::Integer::lcm(&den, &x.denom());
                }
                let den_r = Rational::from_big(num_rational::BigRational::from_integer(den.clone()));
                let mut terms = Vec::new();
                for (k, x) in c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let n = x.mul(&den_r);
                    let ns = n.to_string();
                    let (sign, mag) = match ns.strip_prefix('-') {
                        Some(m) => ("-", m.to_string()),
                        None => ("+", ns.clone()),
                    };
                    let body = match (k, mag.as_str()) {
                        (0, _) => mag.clone(),
                        (1, "1") => "z".to_string(),
                        (1, _) => format!("{mag}*z"),
                        (_, "1") => format!("z^{k}"),
                        _ => format!("{mag}*z^{k}"),
                    };
                    terms.push((sign, body));
                }
                if terms.is_empty() {
                    return "0".into();
                }
                let mut out = String::new();
                for (i, (sign, body)) in terms.iter().enumerate() {
                    if i == 0 {
                        if *sign == "-" {
                            out.push('-');
                        }
                    } else {
                        out.push_str(sign);
                    }
                    out.push_str(body);
                }
                if den == num_bigint::BigInt::from(1) {
                    out
                } else if terms.len() == 1 && !out.contains('z') {
                    format!("{out}/{den}")
                } else {
                    format!("({out})/{den}")
                }
            }
        }
    }

    /// Maps a scalar of `self` into `target` along the standard inclusion:
    /// ℚ ⊂ ℚ(ζ_m), and ℚ(ζ_a) ⊂ ℚ(ζ_b) via ζ_a ↦ ζ_b^{b/a} when a | b.
    pub fn embed_into(&self, target: &FieldDescriptor, a: &Scalar) -> Result<Scalar> {
        if self == target {
            return Ok(a.clone());
        }
        let mismatch = || Error::FieldMismatch(self.to_string(), target.to_string());
        match (&self.kind, &target.kind, a) {
            (FieldKind::Rational, FieldKind::Cyclotomic(_), Scalar::Rat(r)) => Ok(target.from_rational(r)),
            (FieldKind::Cyclotomic(from), FieldKind::Cyclotomic(to), Scalar::Cyc(c)) => {
                let ratio = effective_order(*from);
                if to % ratio != 0 {
                    return Err(mismatch());
                }
                let step = to / ratio;
                let src_zeta_in_target = target.zeta_pow(step as i64).unwrap();
                // ζ_from may not equal ζ_{from reduced}; express via the source power basis.
                let base = if ratio == *from {
                    src_zeta_in_target
                } else {
                    // from = 2·odd with ζ_{2k} = -ζ_k^{(k+1)/2}; handled by evaluating ζ_from directly.
                    let step = *to as i64 / *from as i64;
                    if (*to as i64) % (*from as i64) != 0 {
                        return Err(mismatch());
                    }
                    target.zeta_pow(step).unwrap()
                };
                let mut acc = target.zero();
                let mut pw = target.one();
                for coef in c.iter() {
                    let t = target.mul(&target.from_rational(coef), &pw);
                    acc = target.add(&acc, &t);
                    pw = target.mul(&pw, &base);
                }
                Ok(acc)
            }
            (FieldKind::Cyclotomic(m), FieldKind::Rational, Scalar::Cyc(c)) if c.len() == 1 && *m <= 2 => {
                Ok(Scalar::Rat(c[0].clone()))
            }
            _ => Err(mismatch()),
        }
    }
}

/// ℚ(ζ_m) = ℚ(ζ_{m/2}) for m ≡ 2 mod 4; the smallest order defining the same field.
fn effective_order(m: u32) -> u32 {
    if m % 4 == 2 {
        m / 2
    } else {
        m
    }
}

fn reduce_bigint(n: &num_bigint::BigInt, p: u64) -> u64 {
    use num_integer::Integer;
    let r = n.mod_floor(&num_bigint::BigInt::from(p));
    num_traits::ToPrimitive::to_u64(&r).unwrap()
}

/// Parses `c0+c1*z+...` into raw integer coefficients (as rationals).
fn parse_z_poly(s: &str) -> Option<Vec<Rational>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut coeffs: Vec<Rational> = Vec::new();
    for t in terms {
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, t.strip_prefix('+').unwrap_or(&t)),
        };
        if body.is_empty() {
            return None;
        }
        let (coef, power) = if let Some(idx) = body.find('z') {
            let c = &body[..idx];
            let c = if c.is_empty() {
                Rational::ONE
            } else {
                let c = c.strip_suffix('*')?;
                let r: Rational = c.parse().ok()?;
                if !r.is_integer() {
                    return None;
                }
                r
            };
            let rest = &body[idx + 1..];
            let p = if rest.is_empty() {
                1usize
            } else {
                rest.strip_prefix('^')?.parse::<usize>().ok()?
            };
            (c, p)
        } else {
            let r: Rational = body.parse().ok()?;
            if !r.is_integer() {
                return None;
            }
            (r, 0)
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Rational::ZERO);
        }
        let c = if neg { coef.neg() } else { coef };
        coeffs[power] = coeffs[power].add(&c);
    }
    Some(coeffs)
}

/// A field element bundled with its descriptor.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldScalar {
    pub field: FieldDescriptor,
    pub value: Scalar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldScalar {
    pub fn new(field: &FieldDescriptor, value: Scalar) -> Self {
        debug_assert!(field.owns(&value));
        FieldScalar {
            field: field.clone(),
            value,
        }
    }

    pub fn parse(field: &FieldDescriptor, s: &str) -> Result<Self> {
        Ok(Self::new(field, field.parse_literal(s)?))
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.value)
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.field.format(&self.value), self.field)
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(&self.value))
    }
}

/// Exact scalar arithmetic with descriptor checking.
pub fn scalar_arith(a: &FieldScalar, b: &FieldScalar, op: ArithOp) -> Result<FieldScalar> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(a.field.to_string(), b.field.to_string()));
    }
    let f = &a.field;
    let value = match op {
        ArithOp::Add => f.add(&a.value, &b.value),
        ArithOp::Sub => f.sub(&a.value, &b.value),
        ArithOp::Mul => f.mul(&a.value, &b.value),
        ArithOp::Div => f.div(&a.value, &b.value).ok_or(Error::DivisionByZero)?,
    };
    Ok(FieldScalar::new(f, value))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(f: &FieldDescriptor, s: &str) -> FieldScalar {
        FieldScalar::parse(f, s).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(5), 4);
    }

    #[test]
    fn spec_scalar_examples() {
        let q4 = FieldDescriptor::cyclotomic(4).unwrap();
        let z = FieldScalar::new(&q4, q4.zeta().unwrap());
        let zz = scalar_arith(&z, &z, ArithOp::Mul).unwrap();
        assert_eq!(zz, fs(&q4, "-1"));

        let q = FieldDescriptor::rational();
        let s = scalar_arith(&fs(&q, "2/3"), &fs(&q, "1/3"), ArithOp::Add).unwrap();
        assert_eq!(s, fs(&q, "1"));

        let f5 = FieldDescriptor::prime(5).unwrap();
        let p = scalar_arith(&fs(&f5, "3"), &fs(&f5, "4"), ArithOp::Mul).unwrap();
        assert_eq!(p, fs(&f5, "2"));
    }

    #[test]
    fn arith_errors() {
        let q = FieldDescriptor::rational();
        let f5 = FieldDescriptor::prime(5).unwrap();
        assert!(matches!(
            scalar_arith(&fs(&q, "1"), &fs(&f5, "1"), ArithOp::Add),
            Err(Error::FieldMismatch(..))
        ));
        assert_eq!(
            scalar_arith(&fs(&q, "1"), &fs(&q, "0"), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
        assert!(FieldDescriptor::prime(6).is_err());
        assert!(FieldDescriptor::cyclotomic(0).is_err());
    }

    #[test]
    fn cyclotomic_literals_round_trip() {
        let q5 = FieldDescriptor::cyclotomic(5).unwrap();
        for lit in ["0", "1", "-z", "3+2*z-z^3", "(1+z)/3", "1/2", "z^4", "(2-3*z^2)/7"] {
            let a = q5.parse_literal(lit).unwrap();
            let s = q5.format(&a);
            assert_eq!(q5.parse_literal(&s).unwrap(), a, "{lit} -> {s}");
        }
        // ζ^4 = -1 - ζ - ζ² - ζ³ in ℚ(ζ_5)
        assert_eq!(q5.format(&q5.parse_literal("z^4").unwrap()), "-1-z-z^2-z^3");
        assert!(q5.parse_literal("1/2*z").is_err());
        assert!(q5.parse_literal("q").is_err());
    }

    #[test]
    fn cyclotomic_inverse() {
        let q5 = FieldDescriptor::cyclotomic(5).unwrap();
        let a = q5.parse_literal("2+z-z^3").unwrap();
        let ia = q5.inv(&a).unwrap();
        assert!(q5.is_one(&q5.mul(&a, &ia)));
        let z = q5.zeta().unwrap();
        assert!(q5.is_one(&q5.pow(&z, 5).unwrap()));
        assert_eq!(q5.pow(&z, -1).unwrap(), q5.zeta_pow(4).unwrap());
    }

    #[test]
    fn embeddings() {
        let q3 = FieldDescriptor::cyclotomic(3).unwrap();
        let q6 = FieldDescriptor::cyclotomic(6).unwrap();
        let q12 = FieldDescriptor::cyclotomic(12).unwrap();
        let z3 = q3.zeta().unwrap();
        let img = q3.embed_into(&q12, &z3).unwrap();
        assert_eq!(img, q12.zeta_pow(4).unwrap());
        let z6 = q6.zeta().unwrap();
        let img6 = q6.embed_into(&q12, &z6).unwrap();
        assert_eq!(img6, q12.zeta_pow(2).unwrap());
        let q = FieldDescriptor::rational();
        assert_eq!(
            q.embed_into(&q3, &q.parse_literal("1/2").unwrap()).unwrap(),
            q3.parse_literal("1/2").unwrap()
        );
        let q5 = FieldDescriptor::cyclotomic(5).unwrap();
        assert!(q3.embed_into(&q5, &z3).is_err());
    }

    #[test]
    fn prime_literals() {
        let f5 = FieldDescriptor::prime(5).unwrap();
        assert_eq!(f5.parse_literal("-1").unwrap(), Scalar::Mod(4));
        assert_eq!(f5.parse_literal("1/2").unwrap(), Scalar::Mod(3));
        assert!(f5.parse_literal("1/5").is_err());
    }
}
