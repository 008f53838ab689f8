use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The ground field: ℚ or `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// `F_p`; `p` must be a prime below `2^31`.
    pub fn prime(p: u64) -> Result<Field> {
        let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !is_prime || p >= 1 << 31 {
            return Err(Error::InvalidScalar(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    pub fn from_int(&self, v: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Prime { value: v.rem_euclid(p as i64) as u64, p },
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    /// Accepts `"a"` or `"a/b"`; over `F_p` the fraction is `a·b⁻¹`.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::InvalidScalar(format!("cannot parse {s:?}"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::InvalidScalar(format!("zero denominator in {s:?}")));
        }
        match *self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let reduce = |x: &BigInt| -> u64 {
                    let r = x % BigInt::from(p);
                    let r = if r < BigInt::zero() { r + BigInt::from(p) } else { r };
                    r.try_into().expect("residue fits in u64")
                };
                let d = reduce(&den);
                if d == 0 {
                    return Err(Error::InvalidScalar(format!("denominator of {s:?} vanishes mod {p}")));
                }
                Ok(Scalar::Prime { value: reduce(&num) * inv_mod(d, p) % p, p })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

/// An element of ℚ (kept in lowest terms) or of `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    /// `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { value, p } => Scalar::Prime { value: inv_mod(*value, *p), p: *p },
        })
    }

    fn zip(&self, other: &Scalar, q: impl Fn(&BigRational, &BigRational) -> BigRational, m: impl Fn(u64, u64, u64) -> u64) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(q(a, b)),
            (Scalar::Prime { value: a, p }, Scalar::Prime { value: b, p: p2 }) if p == p2 => {
                Scalar::Prime { value: m(*a, *b, *p), p: *p }
            }
            _ => panic!("arithmetic between {} and {}", self.field(), other.field()),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.zip(rhs, |a, b| a + b, |a, b, p| (a + b) % p)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.zip(rhs, |a, b| a - b, |a, b, p| (a + p - b) % p)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.zip(rhs, |a, b| a * b, |a, b, p| a * b % p)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Prime { value, p } => Scalar::Prime { value: (p - value) % p, p: *p },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
