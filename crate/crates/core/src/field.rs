//! Exact base fields: the rationals and prime fields `F_p`.
//!
//! Rationals use an `i64` fast path and promote to arbitrary precision on
//! overflow, so every value is exact. Residues are stored in `[0, p)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest prime modulus accepted; products of two residues fit in a `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// The base field `k`: characteristic 0 (the rationals) or a prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const fn rationals() -> Self {
        FieldSpec { characteristic: 0 }
    }

    /// The prime field `F_p`. Rejects non-primes and moduli above [`MAX_PRIME`].
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || p > MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(FieldSpec { characteristic: p as u32 })
    }

    /// `0` gives the rationals, anything else must be a prime.
    pub fn with_characteristic(c: u64) -> Result<Self> {
        if c == 0 {
            Ok(Self::rationals())
        } else {
            Self::prime(c)
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic as u64
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar(Repr::Small(v, 1)),
            p => Scalar(Repr::Fp(v.rem_euclid(p as i64) as u32, p)),
        }
    }

    /// `num / den` as a field element; `None` when `den` vanishes in the field.
    pub fn fraction(&self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.from_i64(den);
        d.inv().map(|inv| &self.from_i64(num) * &inv)
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self.characteristic {
            0 => Scalar::from_big(BigRational::from_integer(v.clone())),
            p => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar(Repr::Fp(r.to_u32().expect("residue fits"), p))
            }
        }
    }

    /// Parses `"n"`, `"-n"` or `"n/d"`. In characteristic `p` the value is
    /// reduced mod `p`; a denominator divisible by `p` is rejected.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::Parse {
            line: 0,
            column: 0,
            message: format!("invalid scalar {s:?}"),
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let valid = |t: &str| {
            let digits = t.strip_prefix('-').unwrap_or(t);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid(num) || den.is_some_and(|d| !valid(d) || d.starts_with('-')) {
            return Err(bad());
        }
        let n = BigInt::from_str(num).map_err(|_| bad())?;
        let n = self.from_bigint(&n);
        match den {
            None => Ok(n),
            Some(d) => {
                let d = BigInt::from_str(d).map_err(|_| bad())?;
                let d = self.from_bigint(&d);
                let inv = d.inv().ok_or_else(bad)?;
                Ok(&n * &inv)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "F_{p}"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced fraction with positive denominator.
    Small(i64, i64),
    /// Only used when the reduced fraction does not fit `Small`.
    Big(Box<BigRational>),
    /// Residue and modulus.
    Fp(u32, u32),
}

impl Scalar {
    fn from_big(r: BigRational) -> Scalar {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(Box::new(r))),
        }
    }

    fn small(n: i128, d: i128) -> Scalar {
        debug_assert!(d != 0);
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / g, d / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) if n != i64::MIN => Scalar(Repr::Small(n, d)),
            _ => Scalar::from_big(BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
            Repr::Fp(..) => panic!("residue used as rational"),
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self.0 {
            Repr::Fp(_, p) => FieldSpec { characteristic: p },
            _ => FieldSpec::rationals(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n == 0,
            Repr::Big(b) => b.is_zero(),
            Repr::Fp(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Small(n, d) => *n == 1 && *d == 1,
            Repr::Big(b) => b.is_one(),
            Repr::Fp(v, _) => *v == 1,
        }
    }

    /// The value as a rational, for characteristic 0 scalars.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self.0 {
            Repr::Fp(..) => None,
            _ => Some(self.to_big()),
        }
    }

    /// The residue in `[0, p)`, for prime-field scalars.
    pub fn residue(&self) -> Option<u64> {
        match self.0 {
            Repr::Fp(v, _) => Some(v as u64),
            _ => None,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Scalar::small(*d as i128, *n as i128),
            Repr::Big(b) => Scalar::from_big(b.recip()),
            Repr::Fp(v, p) => {
                let p64 = *p as u64;
                Scalar(Repr::Fp(pow_mod(*v as u64, p64 - 2, p64) as u32, *p))
            }
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Sign for rationals (`Less`, `Equal`, `Greater` against zero); residues
    /// compare as nonnegative integers.
    pub fn signum(&self) -> Ordering {
        match &self.0 {
            Repr::Small(n, _) => n.cmp(&0),
            Repr::Big(b) => {
                if b.is_negative() {
                    Ordering::Less
                } else if b.is_zero() {
                    Ordering::Equal
                } else {
                    Ordering::Greater
                }
            }
            Repr::Fp(v, _) => v.cmp(&0),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn field_mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Fp(a, p), Repr::Fp(b, q)) if p == q => {
                Scalar(Repr::Fp(((*a as u64 + *b as u64) % *p as u64) as u32, *p))
            }
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        if s != i64::MIN {
                            return Scalar(Repr::Small(s, 1));
                        }
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Scalar::small(a * d + c * b, b * d)
            }
            (Repr::Fp(..), _) | (_, Repr::Fp(..)) => field_mismatch(self, rhs),
            _ => Scalar::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Fp(a, p), Repr::Fp(b, q)) if p == q => {
                Scalar(Repr::Fp(((*a as u64 * *b as u64) % *p as u64) as u32, *p))
            }
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_mul(*c) {
                        if s != i64::MIN {
                            return Scalar(Repr::Small(s, 1));
                        }
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                // Cross-cancel first so the i128 products cannot overflow.
                let g1 = a.gcd(&d).max(1);
                let g2 = c.gcd(&b).max(1);
                Scalar::small((a / g1) * (c / g2), (b / g2) * (d / g1))
            }
            (Repr::Fp(..), _) | (_, Repr::Fp(..)) => field_mismatch(self, rhs),
            _ => Scalar::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => Scalar(Repr::Small(-n, *d)),
            Repr::Big(b) => Scalar::from_big(-(**b).clone()),
            Repr::Fp(v, p) => Scalar(Repr::Fp(if *v == 0 { 0 } else { p - v }, *p)),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
            Repr::Fp(v, _) => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_characteristic() {
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(7).is_ok());
        assert!(FieldSpec::with_characteristic(0).unwrap().is_rational());
    }

    #[test]
    fn rationals_stay_reduced() {
        let q = FieldSpec::rationals();
        let a = q.fraction(2, -4).unwrap();
        assert_eq!(a.to_string(), "-1/2");
        assert_eq!((&a + &a).to_string(), "-1");
        assert!(q.fraction(1, 0).is_none());
    }

    #[test]
    fn small_path_promotes_on_overflow() {
        let q = FieldSpec::rationals();
        let big = q.from_i64(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.to_string(), "85070591730234615847396907784232501249");
        let back = &sq * &(big.inv().unwrap());
        assert_eq!(back, big);
        let sum = &big + &big;
        assert_eq!(&sum - &big, big);
    }

    #[test]
    fn residues_wrap() {
        let f = FieldSpec::prime(3).unwrap();
        let two = f.from_i64(-1);
        assert_eq!(two.residue(), Some(2));
        assert_eq!((&two * &two).residue(), Some(1));
        assert_eq!(two.inv().unwrap().residue(), Some(2));
        assert_eq!(f.parse_scalar("1/2").unwrap().residue(), Some(2));
        assert!(f.parse_scalar("1/3").is_err());
    }

    #[test]
    fn parse_rejects_garbage() {
        let q = FieldSpec::rationals();
        for bad in ["", "-", "1/", "/2", "1/-2", "a", "1.5", "1/0"] {
            assert!(q.parse_scalar(bad).is_err(), "{bad}");
        }
        assert_eq!(q.parse_scalar("-6/4").unwrap().to_string(), "-3/2");
    }
}
