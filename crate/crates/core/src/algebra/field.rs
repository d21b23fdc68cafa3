use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exclusive upper bound on supported prime moduli.
pub const MAX_MODULUS: u64 = 1 << 31;

/// The scalar field: the rationals or a prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field(Kind);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Kind {
    Rationals,
    Prime(u32),
}

impl Field {
    pub const RATIONALS: Field = Field(Kind::Rationals);

    pub fn rationals() -> Field {
        Field::RATIONALS
    }

    /// GF(p). Rejects composite moduli and moduli outside `2..2^31`.
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..MAX_MODULUS).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field(Kind::Prime(p as u32)))
    }

    /// 0 for the rationals, p for GF(p).
    pub fn characteristic(self) -> u32 {
        match self.0 {
            Kind::Rationals => 0,
            Kind::Prime(p) => p,
        }
    }

    pub fn modulus(self) -> Option<u32> {
        match self.0 {
            Kind::Rationals => None,
            Kind::Prime(p) => Some(p),
        }
    }

    pub fn is_finite(self) -> bool {
        self.modulus().is_some()
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(self) -> Option<u64> {
        self.modulus().map(u64::from)
    }

    pub fn zero(self) -> Scalar {
        Scalar::from_i64(self, 0)
    }

    pub fn one(self) -> Scalar {
        Scalar::from_i64(self, 1)
    }

    /// All field elements in residue order. Finite fields only.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        let p = self.modulus()?;
        Some((0..p).map(move |v| Scalar(Repr::Residue { p, v })))
    }

    pub(crate) fn check(self, other: Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self,
                right: other,
            })
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Rationals => f.write_str("Q"),
            Kind::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::RATIONALS);
        }
        let inner = s
            .strip_prefix("GF(")
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| Error::ParseField(s.to_string()))?;
        if inner.is_empty() || !inner.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::ParseField(s.to_string()));
        }
        let p: u64 = inner.parse().map_err(|_| Error::ModulusOutOfRange(u64::MAX))?;
        Field::prime(p)
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An exact field element. Canonical forms (reduced fractions, least
/// residues) are maintained eagerly, so derived equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { p: u32, v: u32 },
}

impl Scalar {
    pub fn from_i64(field: Field, value: i64) -> Scalar {
        match field.0 {
            Kind::Rationals => Scalar(Repr::Rational(BigRational::from_integer(value.into()))),
            Kind::Prime(p) => Scalar(Repr::Residue {
                p,
                v: value.rem_euclid(i64::from(p)) as u32,
            }),
        }
    }

    /// The fraction `num/den` over the rationals. `None` when `den == 0`.
    pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Option<Scalar> {
        let den = den.into();
        if den.is_zero() {
            return None;
        }
        Some(Scalar(Repr::Rational(BigRational::new(num.into(), den))))
    }

    /// Residue of `value` modulo the field's prime; panics over the rationals.
    pub fn residue(field: Field, value: u64) -> Scalar {
        let p = field.modulus().expect("residue requires a prime field");
        Scalar(Repr::Residue {
            p,
            v: (value % u64::from(p)) as u32,
        })
    }

    pub fn field(&self) -> Field {
        match self.0 {
            Repr::Rational(_) => Field::RATIONALS,
            Repr::Residue { p, .. } => Field(Kind::Prime(p)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_zero(),
            Repr::Residue { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_one(),
            Repr::Residue { v, .. } => *v == 1,
        }
    }

    /// Canonical residue for prime-field scalars.
    pub fn as_residue(&self) -> Option<u32> {
        match self.0 {
            Repr::Residue { v, .. } => Some(v),
            Repr::Rational(_) => None,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Rational(r) => Scalar(Repr::Rational(r.recip())),
            Repr::Residue { p, v } => Scalar(Repr::Residue {
                p: *p,
                v: pow_mod(*v, *p - 2, *p),
            }),
        })
    }

    pub fn parse(field: Field, input: &str) -> Result<Scalar> {
        let bad = || Error::ParseScalar {
            input: input.to_string(),
            field,
        };
        match field.0 {
            Kind::Rationals => {
                let (num, den) = match input.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (input, None),
                };
                let digits = num.strip_prefix(['-', '+']).unwrap_or(num);
                if !is_decimal(digits) {
                    return Err(bad());
                }
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = match den {
                    Some(d) if is_decimal(d) => d.parse().map_err(|_| bad())?,
                    Some(_) => return Err(bad()),
                    None => BigInt::one(),
                };
                Scalar::rational(num, den).ok_or_else(bad)
            }
            Kind::Prime(p) => {
                if !is_decimal(input) {
                    return Err(bad());
                }
                match input.parse::<u64>() {
                    Ok(v) if v < u64::from(p) => Ok(Scalar(Repr::Residue { p, v: v as u32 })),
                    _ => Err(bad()),
                }
            }
        }
    }

    fn binary(
        &self,
        rhs: &Scalar,
        op: &str,
        rat: impl Fn(&BigRational, &BigRational) -> BigRational,
        res: impl Fn(u64, u64, u64) -> u64,
    ) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(rat(a, b))),
            (Repr::Residue { p, v: a }, Repr::Residue { p: q, v: b }) if p == q => {
                let p64 = u64::from(*p);
                Scalar(Repr::Residue {
                    p: *p,
                    v: res(u64::from(*a), u64::from(*b), p64) as u32,
                })
            }
            _ => panic!("scalar {op} across fields {} and {}", self.field(), rhs.field()),
        }
    }
}

fn is_decimal(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let p = u64::from(p);
    let mut base = u64::from(base) % p;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc as u32
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Residue { v, .. } => write!(f, "{v}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.binary(rhs, "add", |a, b| a + b, |a, b, p| (a + b) % p)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.binary(rhs, "sub", |a, b| a - b, |a, b, p| (a + p - b) % p)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.binary(rhs, "mul", |a, b| a * b, |a, b, p| a * b % p)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rational(r) => Scalar(Repr::Rational(-r)),
            Repr::Residue { p, v } => Scalar(Repr::Residue { p: *p, v: (p - v) % p }),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
