//! Exact field elements: arbitrary-precision rationals and residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Field descriptor shared by every scalar, matrix and subspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Residues modulo `p`. Moduli are limited to 32 bits so products fit in a `u64`.
    pub fn prime(p: u64) -> Result<Field> {
        if p > u64::from(u32::MAX) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("rational"),
            Field::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `rational` or `gf:<p>`.
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "rational" {
            return Ok(Field::Rational);
        }
        match s.strip_prefix("gf:") {
            Some(p) => {
                let p = p
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidInput(format!("bad field modulus in `{s}`")))?;
                Field::prime(p)
            }
            None => Err(Error::InvalidInput(format!(
                "unknown field `{s}` (expected `rational` or `gf:<p>`)"
            ))),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact element of `Q` or `GF(p)`.
///
/// Rationals are kept in lowest terms with a positive denominator; residues are canonical in `0..p`. Arithmetic between scalars of
/// different fields is a programming error and panics; the matrix and subspace layers
/// check field agreement up front and report [`Error::FieldMismatch`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        Scalar::from_int(field, 0)
    }

    pub fn one(field: Field) -> Scalar {
        Scalar::from_int(field, 1)
    }

    pub fn from_int(field: Field, v: i64) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(Rational::from_integer(v)),
            Field::Prime(p) => Scalar::Prime {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `num / den` in `field`; fails when `den` vanishes in the field.
    pub fn from_ratio(field: Field, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        match field {
            Field::Rational => Ok(Scalar::Rational(Rational::from_big(
                num_rational::BigRational::new(num.clone(), den.clone()),
            ))),
            Field::Prime(p) => {
                let n = reduce_bigint(num, p);
                let d = reduce_bigint(den, p);
                if d == 0 {
                    return Err(Error::InvalidInput(format!(
                        "denominator {den} is not invertible modulo {p}"
                    )));
                }
                let n = Scalar::Prime { value: n, modulus: p };
                let d = Scalar::Prime { value: d, modulus: p };
                Ok(&n * &d.inv().expect("nonzero residue"))
            }
        }
    }

    /// Parses an integer or `num/den` string into `field`.
    pub fn parse(field: Field, s: &str) -> Result<Scalar> {
        let bad = || Error::InvalidInput(format!("bad scalar `{s}`"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let num = num.parse::<BigInt>().map_err(|_| bad())?;
        let den = den.parse::<BigInt>().map_err(|_| bad())?;
        Scalar::from_ratio(field, &num, &den)
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Rational(r) => Some(Scalar::Rational(r.recip().expect("nonzero"))),
            Scalar::Prime { value, modulus } => {
                let egcd = (*value as i64).extended_gcd(&(*modulus as i64));
                debug_assert_eq!(egcd.gcd, 1);
                Some(Scalar::Prime {
                    value: egcd.x.rem_euclid(*modulus as i64) as u64,
                    modulus: *modulus,
                })
            }
        }
    }

    /// Integer value when the scalar is an integer (rational) or a residue.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(r) => r.to_i64(),
            Scalar::Prime { value, .. } => Some(*value as i64),
        }
    }
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

fn expect_same(a: &Scalar, b: &Scalar) -> u64 {
    match (a, b) {
        (Scalar::Prime { modulus: p, .. }, Scalar::Prime { modulus: q, .. }) if p == q => *p,
        _ => panic!(
            "scalar field mismatch: {} vs {}",
            a.field(),
            b.field()
        ),
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, .. }, Scalar::Prime { value: b, .. }) => {
                let p = expect_same(self, rhs);
                Scalar::Prime { value: (a + b) % p, modulus: p }
            }
            _ => {
                expect_same(self, rhs);
                unreachable!()
            }
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Prime { value: a, .. }, Scalar::Prime { value: b, .. }) => {
                let p = expect_same(self, rhs);
                Scalar::Prime { value: (a + p - b) % p, modulus: p }
            }
            _ => {
                expect_same(self, rhs);
                unreachable!()
            }
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, .. }, Scalar::Prime { value: b, .. }) => {
                let p = expect_same(self, rhs);
                Scalar::Prime { value: a * b % p, modulus: p }
            }
            _ => {
                expect_same(self, rhs);
                unreachable!()
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}
