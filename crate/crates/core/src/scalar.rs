//! Scalar abstractions.
//!
//! All algebra in this crate is written against [`Scalar`], a field-like
//! numeric type. The certified procedures (Sturm counting, root isolation,
//! value-function extraction, game compilation) additionally require
//! [`ExactField`], which is only implemented for exact rationals: with
//! floating point every zero test is a guess.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

/// Exact arbitrary-precision rational.
pub type Rat = BigRational;

pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialOrd
    + Num
    + Signed
    + FromPrimitive
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every scalar type represents small integers")
    }
    /// Magnitude below which pivoting treats a value as zero.
    fn tolerance() -> Self {
        Self::zero()
    }
}

/// Marker for scalar types whose arithmetic and comparisons are exact.
pub trait ExactField: Scalar + Ord + Eq + std::hash::Hash {}

impl Scalar for f32 {
    fn tolerance() -> Self {
        1e-5
    }
}
impl Scalar for f64 {
    fn tolerance() -> Self {
        1e-11
    }
}
impl Scalar for Rat {}
impl ExactField for Rat {}

/// `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `num / den` as a reduced rational. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRatError(pub String);

/// Parses `"p"`, `"p/q"` or a finite decimal such as `"-1.25"`.
pub fn parse_rat(text: &str) -> Result<Rat, ParseRatError> {
    let err = || ParseRatError(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_int(n.trim()).ok_or_else(err)?;
        let d = parse_int(d.trim()).ok_or_else(err)?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = whole.starts_with('-');
        let whole = match whole.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            w => parse_int(w).ok_or_else(err)?,
        };
        if whole.is_negative() {
            return Err(err());
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac = BigInt::from_str(frac).map_err(|_| err())?;
        let value = Rat::new(whole * &scale + frac, scale);
        return Ok(if negative { -value } else { value });
    }
    parse_int(s).map(Rat::from_integer).ok_or_else(err)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s.strip_prefix('+').unwrap_or(s)).ok()
}

/// Plain decimal rendering of `value` rounded (half away from zero) to
/// `digits` significant digits. Trailing zeros after the point are dropped.
pub fn to_decimal(value: &Rat, digits: u32) -> String {
    assert!(digits > 0);
    if value.is_zero() {
        return "0".to_string();
    }
    let ten = BigInt::from(10u32);
    let abs = value.abs();
    // exponent e with 10^e <= |value| < 10^(e+1)
    let mut exp: i64 = (abs.numer().bits() as i64 - abs.denom().bits() as i64) * 30103 / 100000;
    loop {
        let lower = pow10(exp);
        if abs < lower {
            exp -= 1;
        } else if abs >= lower * &ten {
            exp += 1;
        } else {
            break;
        }
    }
    let shift = digits as i64 - 1 - exp;
    let mut scaled = round_half_away(&(abs * pow10(shift)));
    let mut shift = shift;
    if scaled.bits() > 0 && scaled >= ten.pow(digits) {
        scaled = Integer::div_floor(&scaled, &ten);
        shift -= 1;
    }
    let mut text = scaled.to_str_radix(10);
    if shift > 0 {
        let shift = shift as usize;
        if text.len() <= shift {
            text = format!("{}{}", "0".repeat(shift - text.len() + 1), text);
        }
        text.insert(text.len() - shift, '.');
        let trimmed = text.trim_end_matches('0').trim_end_matches('.');
        text = trimmed.to_string();
    } else {
        text.push_str(&"0".repeat((-shift) as usize));
    }
    if value.is_negative() {
        text.insert(0, '-');
    }
    text
}

fn pow10(exp: i64) -> Rat {
    let p = Rat::from_integer(BigInt::from(10u32).pow(exp.unsigned_abs() as u32));
    if exp >= 0 {
        p
    } else {
        p.recip()
    }
}

fn round_half_away(x: &Rat) -> BigInt {
    let (q, r) = x.numer().div_mod_floor(x.denom());
    if (r * 2u32) >= *x.denom() {
        q + 1
    } else {
        q
    }
}

/// Sign as -1, 0 or 1.
pub fn sign_of<T: Scalar>(value: &T) -> i8 {
    if value.is_zero() {
        0
    } else if value.is_positive() {
        1
    } else {
        -1
    }
}

/// `2^k` as a rational.
pub fn pow2(k: u32) -> Rat {
    Rat::from_integer(BigInt::one() << k)
}

/// True when the rational is an integer.
pub fn is_integral(value: &Rat) -> bool {
    value.denom().is_one()
}
