use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    /// The rationals, with exact arbitrary-precision arithmetic.
    Rational,
    /// The prime field of the given characteristic.
    Prime(u64),
}

impl Default for Field {
    fn default() -> Self {
        Field::Prime(Field::DEFAULT_PRIME)
    }
}

impl Field {
    pub const DEFAULT_PRIME: u64 = 32003;

    /// Prime field, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || p >= 1 << 31 || !is_prime_u64(p) {
            return Err(Error::InvalidInput(format!("{p} is not a supported prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coef {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coef {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coef {
        match *self {
            Field::Rational => Coef::Rat(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Coef::Mod(v.rem_euclid(p as i64) as u64, p),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coef {
        match *self {
            Field::Rational => Coef::Rat(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Coef::Mod(r.to_u64().expect("residue fits"), p)
            }
        }
    }

    /// Image of a rational number; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, v: &BigRational) -> Result<Coef> {
        match *self {
            Field::Rational => Ok(Coef::Rat(v.clone())),
            Field::Prime(_) => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                let inv = den.inv().ok_or_else(|| {
                    Error::InvalidInput(format!("denominator of {v} vanishes in {self}"))
                })?;
                Ok(num.mul(&inv))
            }
        }
    }

    pub fn contains(&self, c: &Coef) -> bool {
        matches!(
            (self, c),
            (Field::Rational, Coef::Rat(_)) | (Field::Prime(_), Coef::Mod(_, _))
        ) && c.field() == *self
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F({p})"),
        }
    }
}

/// An element of `Q` or of `F_p`.
///
/// Rationals are kept in lowest terms with positive denominator (guaranteed by
/// `BigRational`); prime-field values lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coef {
    Rat(BigRational),
    Mod(u64, u64),
}

impl Coef {
    pub fn field(&self) -> Field {
        match self {
            Coef::Rat(_) => Field::Rational,
            Coef::Mod(_, p) => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coef::Rat(r) => r.is_zero(),
            Coef::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coef::Rat(r) => r.is_one(),
            Coef::Mod(v, _) => *v == 1,
        }
    }

    pub fn add(&self, other: &Coef) -> Coef {
        match (self, other) {
            (Coef::Rat(a), Coef::Rat(b)) => Coef::Rat(a + b),
            (Coef::Mod(a, p), Coef::Mod(b, q)) if p == q => Coef::Mod((a + b) % p, *p),
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn sub(&self, other: &Coef) -> Coef {
        match (self, other) {
            (Coef::Rat(a), Coef::Rat(b)) => Coef::Rat(a - b),
            (Coef::Mod(a, p), Coef::Mod(b, q)) if p == q => Coef::Mod((a + p - b) % p, *p),
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn mul(&self, other: &Coef) -> Coef {
        match (self, other) {
            (Coef::Rat(a), Coef::Rat(b)) => Coef::Rat(a * b),
            (Coef::Mod(a, p), Coef::Mod(b, q)) if p == q => Coef::Mod(a * b % p, *p),
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn neg(&self) -> Coef {
        match self {
            Coef::Rat(a) => Coef::Rat(-a),
            Coef::Mod(a, p) => Coef::Mod((p - a) % p, *p),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Coef> {
        if self.is_zero() {
            return None;
        }
        match self {
            Coef::Rat(a) => Some(Coef::Rat(a.recip())),
            Coef::Mod(a, p) => Some(Coef::Mod(mod_pow(*a, p - 2, *p), *p)),
        }
    }

    pub fn div(&self, other: &Coef) -> Option<Coef> {
        other.inv().map(|i| self.mul(&i))
    }

    /// Exact integer value if the coefficient is a rational integer.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            Coef::Rat(r) if r.is_integer() => Some(r.to_integer()),
            Coef::Rat(_) => None,
            Coef::Mod(v, _) => Some(BigInt::from(*v)),
        }
    }

    /// True when the printed form needs a leading minus sign.
    pub fn is_negative_display(&self) -> bool {
        match self {
            Coef::Rat(r) => r.is_negative(),
            Coef::Mod(_, _) => false,
        }
    }
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coef::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coef::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
