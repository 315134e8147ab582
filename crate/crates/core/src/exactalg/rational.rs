//! Rational numbers with an inline `i64` fast path.
//!
//! Structure constants of the algebras we handle are small, so almost every
//! value fits in a machine word. Values spill into a boxed [`BigRational`]
//! only when an intermediate result does not fit, and fold back as soon as
//! they do. The representation is canonical: a value is `Small` whenever it
//! can be, so derived equality and hashing are value equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    /// `num / den` with `den > 0`, `gcd(num, den) = 1`, `num != i64::MIN`.
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl Rational {
    pub const ZERO: Rational = Rational::Small(0, 1);
    pub const ONE: Rational = Rational::Small(1, 1);

    pub fn from_int(n: i64) -> Self {
        if n == i64::MIN {
            return Self::from_big(BigRational::from_integer(BigInt::from(n)));
        }
        Rational::Small(n, 1)
    }

    /// Builds `n / d` from wide intermediates. Panics if `d == 0`.
    pub fn from_i128(n: i128, d: i128) -> Self {
        assert!(d != 0, "zero denominator");
        if n == 0 {
            return Self::ZERO;
        }
        let negative = (n < 0) != (d < 0);
        let (un, ud) = (n.unsigned_abs(), d.unsigned_abs());
        let g = gcd_u128(un, ud);
        let (un, ud) = (un / g, ud / g);
        if un < (1u128 << 63) && ud < (1u128 << 63) {
            let num = un as i64;
            return Rational::Small(if negative { -num } else { num }, ud as i64);
        }
        let mut num = BigInt::from(un);
        if negative {
            num = -num;
        }
        Rational::Big(Box::new(BigRational::new_raw(num, BigInt::from(ud))))
    }

    pub fn new(n: i64, d: i64) -> Self {
        Self::from_i128(n as i128, d as i128)
    }

    /// Normalizes a big rational, folding it into `Small` when it fits.
    pub fn from_big(r: BigRational) -> Self {
        let r = if r.denom().is_negative() {
            BigRational::new(r.numer().clone(), r.denom().clone())
        } else {
            r
        };
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Rational::Small(n, d),
            _ => Rational::Big(Box::new(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(_, d) => *d == 1,
            Rational::Big(b) => b.is_integer(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small(n, _) => BigInt::from(*n),
            Rational::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small(_, d) => BigInt::from(*d),
            Rational::Big(b) => b.denom().clone(),
        }
    }

    pub fn add(&self, other: &Rational) -> Rational {
        match (self, other) {
            (Rational::Small(a, 1), Rational::Small(b, 1)) => {
                Self::from_i128(*a as i128 + *b as i128, 1)
            }
            (Rational::Small(an, ad), Rational::Small(bn, bd)) => {
                if ad == bd {
                    return Self::from_i128(*an as i128 + *bn as i128, *ad as i128);
                }
                let n = *an as i128 * *bd as i128 + *bn as i128 * *ad as i128;
                Self::from_i128(n, *ad as i128 * *bd as i128)
            }
            _ => Self::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn neg(&self) -> Rational {
        match self {
            Rational::Small(n, d) => Rational::Small(-n, *d),
            Rational::Big(b) => Self::from_big(-(**b).clone()),
        }
    }

    pub fn sub(&self, other: &Rational) -> Rational {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Rational) -> Rational {
        match (self, other) {
            (Rational::Small(0, _), _) | (_, Rational::Small(0, _)) => Self::ZERO,
            (Rational::Small(an, ad), Rational::Small(bn, bd)) => {
                Self::from_i128(*an as i128 * *bn as i128, *ad as i128 * *bd as i128)
            }
            _ => Self::from_big(self.to_big() * other.to_big()),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Rational> {
        match self {
            Rational::Small(0, _) => None,
            Rational::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Rational::Big(b) => Some(Self::from_big(b.recip())),
        }
    }

    pub fn div(&self, other: &Rational) -> Option<Rational> {
        other.inv().map(|i| self.mul(&i))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Big(b) => {
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal `{}`", self.0)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Self::from_big(BigRational::new(n, d)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic() {
        let a = Rational::new(2, 3);
        let b = Rational::new(1, 3);
        assert_eq!(a.add(&b), Rational::ONE);
        assert_eq!(a.mul(&b), Rational::new(2, 9));
        assert_eq!(a.sub(&a), Rational::ZERO);
        assert_eq!(Rational::new(4, -6), Rational::new(-2, 3));
    }

    #[test]
    fn overflow_spills_and_folds_back() {
        let big = Rational::from_int(i64::MAX);
        let sq = big.mul(&big);
        assert!(matches!(sq, Rational::Big(_)));
        let back = sq.div(&big).unwrap();
        assert_eq!(back, big);
        assert!(matches!(back, Rational::Small(..)));
        let m = Rational::from_int(i64::MIN);
        assert_eq!(m.neg().neg(), m);
    }

    #[test]
    fn parse_and_display() {
        let r: Rational = "-10/4".parse().unwrap();
        assert_eq!(r.to_string(), "-5/2");
        assert!("1/0".parse::<Rational>().is_err());
        let huge: Rational = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(huge.to_string(), "123456789012345678901234567890");
    }
}
