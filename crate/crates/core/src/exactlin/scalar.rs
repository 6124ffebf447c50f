//! Exact field scalars: arbitrary-precision rationals and prime fields.
//!
//! No floating point anywhere. Rationals are kept normalized (gcd 1,
//! positive denominator) by `num::BigRational`; prime-field elements are
//! machine integers reduced mod p with inverses by Fermat's little theorem.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// The base field: ℚ or 𝔽_p for a prime p < 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Validates that a prime-field modulus really is a prime below 2^31.
    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::Prime(p) => {
                if *p < 2 || *p >= (1 << 31) {
                    return Err(Error::input(format!("invalid characteristic {p}")));
                }
                if !is_prime(*p as u64) {
                    return Err(Error::input(format!("{p} is not prime")));
                }
                Ok(())
            }
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(*self)
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(*self)
    }

    pub fn scalar_from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from(BigInt::from(v))),
            FieldSpec::Prime(p) => {
                let p = *p as i64;
                Scalar::Mod {
                    value: (v.rem_euclid(p)) as u64,
                    modulus: p as u32,
                }
            }
        }
    }

    pub fn scalar_from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from(v.clone())),
            FieldSpec::Prime(p) => {
                let m = BigInt::from(*p);
                let r = ((v % &m) + &m) % &m;
                let digits = r.to_u64_digits().1;
                Scalar::Mod {
                    value: digits.first().copied().unwrap_or(0),
                    modulus: *p,
                }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact element of ℚ or 𝔽_p. Each value knows its field so that
/// mixed-field data is detected at construction boundaries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u64, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Mod { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn zero(field: FieldSpec) -> Self {
        field.scalar_from_i64(0)
    }

    pub fn one(field: FieldSpec) -> Self {
        field.scalar_from_i64(1)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, other: &Scalar) -> (u32, bool) {
        match (self, other) {
            (Scalar::Rat(_), Scalar::Rat(_)) => (0, true),
            (Scalar::Mod { modulus: p, .. }, Scalar::Mod { modulus: q, .. }) => (*p, p == q),
            _ => (0, false),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Mod {
                    value: (a + b) % (*p as u64),
                    modulus: *p,
                }
            }
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: if *value == 0 { 0 } else { *modulus as u64 - value },
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Mod {
                    value: (a * b) % (*p as u64),
                    modulus: *p,
                }
            }
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }

    /// Multiplicative inverse. `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: pow_mod(*value, *modulus as u64 - 2, *modulus as u64),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv().expect("division by zero"))
    }

    /// Checks the two scalars live in the same field, as an input error.
    pub fn check_same_field(&self, other: &Scalar) -> Result<()> {
        let (_, ok) = self.same_field(other);
        if ok {
            Ok(())
        } else {
            Err(Error::input(format!(
                "mixed fields: {} vs {}",
                self.field(),
                other.field()
            )))
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
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

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}
