//! Coefficient fields.
//!
//! Two modes share one generic code path: exact Gaussian rationals
//! (`a + b i` with `a, b` in Q) and complex double floats. Everything above
//! this module is generic over [`Scalar`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Coefficient mode tag, used in file formats and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoeffMode {
    Rational,
    Float,
}

impl fmt::Display for CoeffMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffMode::Rational => f.write_str("rational"),
            CoeffMode::Float => f.write_str("float"),
        }
    }
}

pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;
    const MODE: CoeffMode;

    fn zero() -> Self;
    fn one() -> Self;
    fn i() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Exact binary value in exact mode.
    fn from_f64(v: f64) -> Self;
    fn from_c64(v: Complex64) -> Self;
    fn from_parts(re: BigRational, im: BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;
    fn to_c64(&self) -> Complex64;
    fn to_exact(&self) -> Option<GaussRational>;
    /// Modulus as a float (approximate in exact mode).
    fn magnitude(&self) -> f64 {
        self.to_c64().norm()
    }
    fn is_real(&self) -> bool;
    fn re(&self) -> Self;
    fn im(&self) -> Self;
    /// Square root of a nonnegative real value, if representable.
    fn sqrt_real(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn powi(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            k >>= 1;
        }
        acc
    }

    /// `true` when the value should be treated as zero at relative tolerance
    /// `tol` against `scale`. Exact mode ignores the tolerance.
    fn negligible(&self, scale: f64, tol: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.magnitude() <= tol * scale.max(f64::MIN_POSITIVE)
        }
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;
    const MODE: CoeffMode = CoeffMode::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn i() -> Self {
        Complex64::new(0.0, 1.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn from_f64(v: f64) -> Self {
        Complex64::new(v, 0.0)
    }
    fn from_c64(v: Complex64) -> Self {
        v
    }
    fn from_parts(re: BigRational, im: BigRational) -> Self {
        Complex64::new(rat_to_f64(&re), rat_to_f64(&im))
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn to_exact(&self) -> Option<GaussRational> {
        None
    }
    fn is_real(&self) -> bool {
        self.im == 0.0
    }
    fn re(&self) -> Self {
        Complex64::new(self.re, 0.0)
    }
    fn im(&self) -> Self {
        Complex64::new(self.im, 0.0)
    }
    fn sqrt_real(&self) -> Option<Self> {
        if self.re >= 0.0 {
            Some(Complex64::new(self.re.sqrt(), 0.0))
        } else {
            None
        }
    }
}

/// Exact complex number `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussRational {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "({}-{}i)", self.re, -&self.im)
        } else {
            write!(f, "({}+{}i)", self.re, self.im)
        }
    }
}

impl Add for GaussRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRational::real(self.re * rhs.re);
        }
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        GaussRational::new(re, im)
    }
}

impl Div for GaussRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(
            !(rhs.re.is_zero() && rhs.im.is_zero()),
            "division by exact zero"
        );
        if rhs.im.is_zero() {
            return GaussRational::new(self.re / &rhs.re, self.im / &rhs.re);
        }
        let den = rhs.norm_sqr();
        let re = (&self.re * &rhs.re + &self.im * &rhs.im) / &den;
        let im = (&self.im * &rhs.re - &self.re * &rhs.im) / &den;
        GaussRational::new(re, im)
    }
}

impl Neg for GaussRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussRational::new(-self.re, -self.im)
    }
}

impl Scalar for GaussRational {
    const EXACT: bool = true;
    const MODE: CoeffMode = CoeffMode::Rational;

    fn zero() -> Self {
        GaussRational::real(BigRational::zero())
    }
    fn one() -> Self {
        GaussRational::real(BigRational::one())
    }
    fn i() -> Self {
        GaussRational::new(BigRational::zero(), BigRational::one())
    }
    fn from_i64(v: i64) -> Self {
        GaussRational::real(BigRational::from_integer(BigInt::from(v)))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        GaussRational::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
    fn from_f64(v: f64) -> Self {
        GaussRational::real(BigRational::from_float(v).expect("finite float"))
    }
    fn from_c64(v: Complex64) -> Self {
        GaussRational::new(
            BigRational::from_float(v.re).expect("finite float"),
            BigRational::from_float(v.im).expect("finite float"),
        )
    }
    fn from_parts(re: BigRational, im: BigRational) -> Self {
        GaussRational::new(re, im)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -&self.im)
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
    fn to_exact(&self) -> Option<GaussRational> {
        Some(self.clone())
    }
    fn is_real(&self) -> bool {
        self.im.is_zero()
    }
    fn re(&self) -> Self {
        GaussRational::real(self.re.clone())
    }
    fn im(&self) -> Self {
        GaussRational::real(self.im.clone())
    }
    fn sqrt_real(&self) -> Option<Self> {
        if !self.im.is_zero() || self.re.is_negative() {
            return None;
        }
        let n = exact_isqrt(self.re.numer())?;
        let d = exact_isqrt(self.re.denom())?;
        Some(GaussRational::real(BigRational::new(n, d)))
    }
}

fn exact_isqrt(v: &BigInt) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let r = v.sqrt();
    if &r * &r == *v {
        Some(r)
    } else {
        None
    }
}

/// Float value of a big rational, robust to huge numerators/denominators.
pub fn rat_to_f64(r: &BigRational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let n = r.numer().bits() as i64;
    let d = r.denom().bits() as i64;
    let shift = n - d;
    let scaled = if shift > 0 {
        BigRational::new(r.numer().clone(), r.denom() << (shift as u64))
    } else {
        BigRational::new(r.numer() << ((-shift) as u64), r.denom().clone())
    };
    scaled.to_f64().unwrap_or(0.0) * 2f64.powi(shift as i32)
}

/// Best rational approximation of `x` with denominator at most `max_den`
/// (continued-fraction convergents).
pub fn approx_rational(x: f64, max_den: i64) -> BigRational {
    if !x.is_finite() {
        return BigRational::zero();
    }
    let neg = x < 0.0;
    let mut v = x.abs();
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    for _ in 0..64 {
        let a = v.floor();
        if a > 1e15 {
            break;
        }
        let ai = a as i128;
        let p2 = ai * p1 + p0;
        let q2 = ai * q1 + q0;
        if q2 > max_den as i128 {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = v - a;
        if frac < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1 == 0 {
        return BigRational::zero();
    }
    let r = BigRational::new(BigInt::from(p1), BigInt::from(q1));
    if neg {
        -r
    } else {
        r
    }
}

/// Parse `"num/den"`, `"int"` or a decimal literal into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Ok(n) = s.parse::<BigInt>() {
        return Some(BigRational::from_integer(n));
    }
    // Decimal literal, read exactly in base ten.
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let neg = mantissa.starts_with('-');
    let mantissa = mantissa.trim_start_matches(['-', '+']);
    let (ip, fp) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if ip.is_empty() && fp.is_empty() {
        return None;
    }
    let digits = format!("{}{}", ip, fp);
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = digits.parse().ok()?;
    let scale = exp - fp.len() as i32;
    let ten = BigInt::from(10);
    let r = if scale >= 0 {
        BigRational::from_integer(n * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(n, num_traits::pow(ten, (-scale) as usize))
    };
    Some(if neg { -r } else { r })
}

/// Render a rational as `"num/den"` (or `"num"` for integers).
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_division_roundtrip() {
        let a = GaussRational::new(
            BigRational::new(3.into(), 4.into()),
            BigRational::new((-2).into(), 5.into()),
        );
        let b = GaussRational::new(BigRational::from_integer(2.into()), BigRational::one());
        assert_eq!((a.clone() / b.clone()) * b, a);
    }

    #[test]
    fn exact_sqrt_of_squares_only() {
        let q = GaussRational::from_ratio(9, 4);
        assert_eq!(q.sqrt_real(), Some(GaussRational::from_ratio(3, 2)));
        assert_eq!(GaussRational::from_ratio(1, 2).sqrt_real(), None);
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("-3/6"), Some(BigRational::new((-1).into(), 2.into())));
        assert_eq!(parse_rational("0.25"), Some(BigRational::new(1.into(), 4.into())));
        assert_eq!(parse_rational("1e2"), Some(BigRational::from_integer(100.into())));
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn continued_fraction_recovers_small_fractions() {
        assert_eq!(approx_rational(0.5 + 1e-14, 1000), BigRational::new(1.into(), 2.into()));
        assert_eq!(approx_rational(-2.0 / 3.0, 1000), BigRational::new((-2).into(), 3.into()));
    }
}
