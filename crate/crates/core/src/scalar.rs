//! Exact arithmetic in the Gaussian rationals `Q(i)`.
//!
//! A [`Scalar`] is `a + b*i` with `a, b` arbitrary-precision rationals.
//! Values are always kept in reduced canonical form (positive denominators,
//! reduced fractions), so equality is plain structural equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// An element of `Q(i)`, the coefficient field used throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit, `i^2 = -1`.
    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `num/den` as a real rational. Fails on a zero denominator.
    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        ))
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// Squared absolute value `a^2 + b^2`, a rational.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::new(&self.re / &n, -(&self.im / &n)))
    }

    /// Exact division; division by zero is a reported error.
    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact square root in `Q(i)`, if one exists there.
    pub fn sqrt(&self) -> Option<Self> {
        if self.im.is_zero() {
            let a = &self.re;
            if let Some(s) = rational_sqrt(&a.abs()) {
                return if a.is_negative() {
                    Some(Scalar::new(BigRational::zero(), s))
                } else {
                    Some(Scalar::new(s, BigRational::zero()))
                };
            }
            return None;
        }
        // (u + vi)^2 = a + bi  =>  u^2 = (a + |z|)/2, v = b/(2u)
        let r = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(BigInt::from(2));
        let u2 = (&self.re + r) / &two;
        let u = rational_sqrt(&u2)?;
        if u.is_zero() {
            return None;
        }
        let v = &self.im / (&two * &u);
        Some(Scalar::new(u, v))
    }
}

/// Exact square root of a non-negative rational, if rational.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let (num, den) = (r.numer(), r.denom());
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---- arithmetic -------------------------------------------------------

impl<'a> Add<&'a Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] where the
/// denominator is not known to be nonzero.
impl<'a> Div<&'a Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self.checked_div(rhs).expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

// ---- text form --------------------------------------------------------

fn render_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Canonical text form: `3/2`, `-1/3+2i`, `1i`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", render_rat(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}i", render_rat(&self.im));
        }
        if self.im.is_negative() {
            write!(f, "{}-{}i", render_rat(&self.re), render_rat(&self.im.abs()))
        } else {
            write!(f, "{}+{}i", render_rat(&self.re), render_rat(&self.im))
        }
    }
}

fn parse_rat(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("malformed rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for Scalar {
    type Err = Error;

    /// Grammar: `<rat> | <rat>[+|-]<rat>i | [+|-]<rat>i` with
    /// `<rat> = int[/int]`; a `*` before `i` and a bare `i` (for `1i`)
    /// are also accepted.
    fn from_str(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let parse_i_part = |part: &str| -> Result<BigRational> {
            // `part` ends with `i`; strip it and an optional `*`
            let body = &part[..part.len() - 1];
            let body = body.strip_suffix('*').unwrap_or(body);
            match body {
                "" | "+" => Ok(BigRational::one()),
                "-" => Ok(-BigRational::one()),
                b => parse_rat(b),
            }
        };
        if let Some(stripped) = s.strip_suffix('i') {
            // find the split between real part and imaginary part: the last
            // sign that is not a leading sign and not right after '/'
            let bytes = stripped.as_bytes();
            let mut split = None;
            for k in (1..bytes.len()).rev() {
                let c = bytes[k] as char;
                if (c == '+' || c == '-') && bytes[k - 1] as char != '/' {
                    split = Some(k);
                    break;
                }
            }
            return match split {
                Some(k) => {
                    let re = parse_rat(&s[..k])?;
                    let im_text = &s[k..]; // includes sign, includes the trailing i
                    let im = parse_i_part(im_text)?;
                    Ok(Scalar::new(re, im))
                }
                None => Ok(Scalar::new(BigRational::zero(), parse_i_part(&s)?)),
            };
        }
        Ok(Scalar::new(parse_rat(&s)?, BigRational::zero()))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
