//! Exact field scalars: arbitrary-precision rationals and prime fields F_p.
//!
//! Every scalar knows its own field, so arithmetic never needs external
//! context. Mixing scalars from different fields is a programming error and
//! panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::Error;

/// The coefficient field: the rationals, or F_p for a prime p < 2^16.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum FieldSpec {
    Q,
    Fp(u32),
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// Validates a prime-field modulus: prime and below 2^16.
    pub fn fp(p: u32) -> Result<FieldSpec, Error> {
        if p >= 1 << 16 {
            return Err(Error::BadField(format!("modulus {p} is not below 2^16")));
        }
        if !is_prime(p) {
            return Err(Error::BadField(format!("modulus {p} is not prime")));
        }
        Ok(FieldSpec::Fp(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rat(BigRational::zero()),
            FieldSpec::Fp(p) => Scalar::Fp { p: *p, val: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Fp(p) => {
                let p64 = *p as i64;
                Scalar::Fp {
                    p: *p,
                    val: n.rem_euclid(p64) as u32,
                }
            }
        }
    }

    /// Field order for finite fields, `None` over Q.
    pub fn order(&self) -> Option<u32> {
        match self {
            FieldSpec::Q => None,
            FieldSpec::Fp(p) => Some(*p),
        }
    }

    /// The idx-th field element; only meaningful over F_p.
    pub fn element(&self, idx: u32) -> Scalar {
        match self {
            FieldSpec::Q => panic!("element enumeration requires a finite field"),
            FieldSpec::Fp(p) => Scalar::Fp { p: *p, val: idx % *p },
        }
    }

    /// Parses "a", "-a" or "a/b".
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, Error> {
        let bad = || Error::BadScalar(text.to_string());
        if let Some((num, den)) = text.split_once('/') {
            let n: i64 = num.trim().parse().map_err(|_| bad())?;
            let d: i64 = den.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            let dn = self.from_int(d);
            return dn.inv().ok_or_else(bad).map(|di| &self.from_int(n) * &di);
        }
        let n: i64 = text.trim().parse().map_err(|_| bad())?;
        Ok(self.from_int(n))
    }

    /// A random scalar with small representation; used for sampled searches.
    pub fn random(&self, rng: &mut impl Rng) -> Scalar {
        match self {
            FieldSpec::Q => self.from_int(rng.gen_range(-3i64..=3)),
            FieldSpec::Fp(p) => Scalar::Fp {
                p: *p,
                val: rng.gen_range(0..*p),
            },
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::Fp(p) => write!(f, "Fp {p}"),
        }
    }
}

/// An exact field element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u32, val: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Q,
            Scalar::Fp { p, .. } => FieldSpec::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(r.recip()))
                }
            }
            Scalar::Fp { p, val } => {
                if *val == 0 {
                    None
                } else {
                    // Fermat: val^(p-2) mod p.
                    let mut base = *val as u64;
                    let m = *p as u64;
                    let mut exp = m - 2;
                    let mut acc = 1u64;
                    while exp > 0 {
                        if exp & 1 == 1 {
                            acc = acc * base % m;
                        }
                        base = base * base % m;
                        exp >>= 1;
                    }
                    Some(Scalar::Fp {
                        p: *p,
                        val: acc as u32,
                    })
                }
            }
        }
    }
}

fn check_same(a: &Scalar, b: &Scalar) {
    if a.field() != b.field() {
        panic!("scalar field mismatch: {} vs {}", a.field(), b.field());
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        check_same(self, rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                p: *p,
                val: ((*a as u64 + *b as u64) % *p as u64) as u32,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        check_same(self, rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                p: *p,
                val: ((*a as u64 + (*p - *b) as u64) % *p as u64) as u32,
            },
            _ => unreachable!(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        check_same(self, rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                p: *p,
                val: (*a as u64 * *b as u64 % *p as u64) as u32,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: if *val == 0 { 0 } else { *p - *val },
            },
        }
    }
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
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Rat(_) => s.serialize_str(&self.to_string()),
            Scalar::Fp { val, .. } => s.serialize_u32(*val),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::fp(2).is_ok());
        assert!(FieldSpec::fp(65521).is_ok());
        assert!(FieldSpec::fp(65537).is_err()); // above 2^16
        assert!(FieldSpec::fp(6).is_err());
        assert!(FieldSpec::fp(1).is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let f = FieldSpec::fp(7).unwrap();
        let a = f.from_int(3);
        let b = f.from_int(5);
        assert_eq!(&a + &b, f.from_int(1));
        assert_eq!(&a - &b, f.from_int(5));
        assert_eq!(&a * &b, f.from_int(1));
        assert_eq!(a.inv().unwrap(), f.from_int(5));
        assert!(f.zero().inv().is_none());
        assert_eq!(-&f.zero(), f.zero());
    }

    #[test]
    fn rational_arithmetic() {
        let f = FieldSpec::Q;
        let half = f.parse_scalar("1/2").unwrap();
        assert_eq!(&half + &half, f.one());
        assert_eq!(half.inv().unwrap(), f.from_int(2));
        assert_eq!(f.parse_scalar("-3").unwrap(), f.from_int(-3));
        assert!(f.parse_scalar("1/0").is_err());
        assert_eq!(format!("{}", half), "1/2");
    }

    #[test]
    fn exact_zero_after_mixed_ops() {
        // (1/3 + 1/6) * 2 - 1 must be exactly zero.
        let f = FieldSpec::Q;
        let x = &(&(&f.parse_scalar("1/3").unwrap() + &f.parse_scalar("1/6").unwrap())
            * &f.from_int(2))
            - &f.one();
        assert!(x.is_zero());
    }
}
