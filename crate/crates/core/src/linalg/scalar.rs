//! Exact scalars.
//!
//! A [`Scalar`] is either an arbitrary-precision rational or a residue in a
//! prime field GF(p). Rationals act as "generic" constants: combining a
//! rational with a residue coerces the rational into the residue's field, so
//! constants such as `Scalar::one()` can be used unchanged in GF(p) mode.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact field element.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den` in lowest terms. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn residue(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let v = (value as i128).rem_euclid(m) as u64;
        Scalar::Residue { value: v, modulus }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_integer(),
            Scalar::Residue { .. } => true,
        }
    }

    /// The integer value, when the scalar is integral and fits in an `i64`.
    /// Residues report their canonical representative in `0..p`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(r) if r.is_integer() => r.to_integer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Residue { value, .. } => i64::try_from(*value).ok(),
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Residue { modulus, .. } => Some(*modulus),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// Reduce into GF(p). Fails if the denominator is divisible by `p`.
    pub fn reduce_mod(&self, modulus: u64) -> Result<Scalar> {
        match self {
            Scalar::Residue { modulus: m, .. } if *m == modulus => Ok(self.clone()),
            Scalar::Residue { modulus: m, .. } => Err(Error::Field(format!(
                "cannot move a residue mod {m} into GF({modulus})"
            ))),
            Scalar::Rational(r) => {
                let p = BigInt::from(modulus);
                let num = r.numer().mod_floor(&p).to_u64().expect("residue fits");
                let den = r.denom().mod_floor(&p).to_u64().expect("residue fits");
                if den == 0 {
                    return Err(Error::Field(format!("{r} has a denominator divisible by {modulus}")));
                }
                let value = mul_mod(num, mod_inverse(den, modulus), modulus);
                Ok(Scalar::Residue { value, modulus })
            }
        }
    }

    fn coerce_pair(a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
        match (a, b) {
            (Scalar::Rational(_), Scalar::Residue { modulus, .. }) => (
                a.reduce_mod(*modulus)
                    .expect("rational constant not invertible in GF(p)"),
                b.clone(),
            ),
            (Scalar::Residue { modulus, .. }, Scalar::Rational(_)) => (
                a.clone(),
                b.reduce_mod(*modulus)
                    .expect("rational constant not invertible in GF(p)"),
            ),
            (Scalar::Residue { modulus: m1, .. }, Scalar::Residue { modulus: m2, .. }) => {
                assert_eq!(m1, m2, "mixing residues of different moduli");
                (a.clone(), b.clone())
            }
            _ => (a.clone(), b.clone()),
        }
    }

    fn binary(
        a: &Scalar,
        b: &Scalar,
        rat: impl Fn(&BigRational, &BigRational) -> BigRational,
        res: impl Fn(u64, u64, u64) -> u64,
    ) -> Scalar {
        if let (Scalar::Rational(x), Scalar::Rational(y)) = (a, b) {
            return Scalar::Rational(rat(x, y));
        }
        match Scalar::coerce_pair(a, b) {
            (Scalar::Residue { value: x, modulus }, Scalar::Residue { value: y, .. }) => Scalar::Residue {
                value: res(x, y, modulus),
                modulus,
            },
            _ => unreachable!(),
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// Fermat inverse; the modulus is prime by construction of `Field`.
fn mod_inverse(a: u64, m: u64) -> u64 {
    pow_mod(a, m - 2, m)
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            _ => {
                let (a, b) = Scalar::coerce_pair(self, other);
                matches!((a, b), (Scalar::Residue { value: x, .. }, Scalar::Residue { value: y, .. }) if x == y)
            }
        }
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.partial_cmp(b),
            _ => None,
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_i64(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $rat:expr, $res:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::binary(self, rhs, $rat, $res)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a + b, |x, y, m| ((x as u128 + y as u128) % m as u128)
    as u64);
forward_binop!(
    Sub,
    sub,
    |a, b| a - b,
    |x, y, m| ((x as u128 + m as u128 - y as u128) % m as u128) as u64
);
forward_binop!(Mul, mul, |a, b| a * b, mul_mod);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Scalar {
    /// Integers print as `n`, other rationals as `num/den` in lowest terms,
    /// residues as their canonical representative.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
        };
        let r = match s.split_once('/') {
            Some((n, d)) => {
                let den = parse_int(d)?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                BigRational::new(parse_int(n)?, den)
            }
            None => BigRational::from_integer(parse_int(s)?),
        };
        Ok(Scalar::Rational(r))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Int(n) => Ok(Scalar::from_i64(n)),
        }
    }
}

/// The field all scalars of a computation live in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl Field {
    /// Moves a scalar into this field.
    pub fn convert(&self, s: &Scalar) -> Result<Scalar> {
        match self {
            Field::Rational => match s {
                Scalar::Rational(_) => Ok(s.clone()),
                Scalar::Residue { modulus, .. } => Err(Error::Field(format!(
                    "cannot lift a residue mod {modulus} to the rationals"
                ))),
            },
            Field::Prime(p) => s.reduce_mod(*p),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `rational` or `gfp:<p>` with `p` a prime below 2^32.
    fn from_str(s: &str) -> Result<Self> {
        if s == "rational" {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix("gfp:")
            .and_then(|t| t.parse::<u64>().ok())
            .ok_or_else(|| Error::Parse(format!("unknown field {s:?}; expected rational or gfp:<p>")))?;
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::Field(format!("{p} is not a prime below 2^32")));
        }
        Ok(Field::Prime(p))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "gfp:{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Scalar {
    /// Absolute value of a rational; residues are returned unchanged.
    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.abs()),
            other => other.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        assert_eq!(Scalar::ratio(2, 4), Scalar::ratio(1, 2));
        assert_eq!(Scalar::ratio(3, -6).to_string(), "-1/2");
        assert_eq!("6/-4".parse::<Scalar>().unwrap().to_string(), "-3/2");
    }

    #[test]
    fn integers_print_without_denominator() {
        assert_eq!(Scalar::from_i64(-7).to_string(), "-7");
        assert_eq!("4/2".parse::<Scalar>().unwrap().to_string(), "2");
    }

    #[test]
    fn rejects_garbage() {
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
    }

    #[test]
    fn residue_arithmetic() {
        let a = Scalar::residue(3, 7);
        let b = Scalar::residue(5, 7);
        assert_eq!(&a + &b, Scalar::residue(1, 7));
        assert_eq!(&a * &b, Scalar::residue(1, 7));
        assert_eq!(&a - &b, Scalar::residue(5, 7));
        assert_eq!(a.inv(), Scalar::residue(5, 7));
        // rationals coerce into GF(p)
        assert_eq!(&a + &Scalar::one(), Scalar::residue(4, 7));
        assert_eq!(Scalar::ratio(1, 2), Scalar::residue(4, 7));
        assert!((&Scalar::residue(2, 2) + &Scalar::zero()).is_zero());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("rational".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("gfp:5".parse::<Field>().unwrap(), Field::Prime(5));
        assert!("gfp:6".parse::<Field>().is_err());
        assert!("real".parse::<Field>().is_err());
        assert!(Field::Prime(3).convert(&Scalar::ratio(1, 3)).is_err());
    }
}
