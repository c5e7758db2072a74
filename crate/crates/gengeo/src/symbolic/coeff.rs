//! Gaussian-rational coefficients: exact complex numbers with
//! arbitrary-precision rational real and imaginary parts.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The coefficient field ℚ(i).
pub type CNum = Complex<BigRational>;

pub fn cnum_zero() -> CNum {
    Complex::new(BigRational::zero(), BigRational::zero())
}

pub fn cnum_one() -> CNum {
    Complex::new(BigRational::one(), BigRational::zero())
}

pub fn cnum_i() -> CNum {
    Complex::new(BigRational::zero(), BigRational::one())
}

pub fn cnum_from_int(n: i64) -> CNum {
    Complex::new(
        BigRational::from_integer(BigInt::from(n)),
        BigRational::zero(),
    )
}

/// `n/d` as a Gaussian rational. Panics if `d == 0`.
pub fn cnum_from_ratio(n: i64, d: i64) -> CNum {
    assert!(d != 0, "zero denominator in rational literal");
    Complex::new(
        BigRational::new(BigInt::from(n), BigInt::from(d)),
        BigRational::zero(),
    )
}

pub(crate) fn cnum_conj(c: &CNum) -> CNum {
    Complex::new(c.re.clone(), -c.im.clone())
}

pub(crate) fn cnum_pow(c: &CNum, mut e: u32) -> CNum {
    let mut base = c.clone();
    let mut acc = cnum_one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base.clone();
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

/// How a coefficient renders inside a printed term. The payload is the
/// magnitude text without any leading sign; `Mixed` carries a fully
/// parenthesized expression and is never sign-split.
pub(crate) enum CoeffText {
    Positive(String),
    Negative(String),
    Mixed(String),
}

pub(crate) fn coeff_text(c: &CNum) -> CoeffText {
    let re_zero = c.re.is_zero();
    let im_zero = c.im.is_zero();
    if im_zero {
        if c.re.is_negative() {
            CoeffText::Negative(format!("{}", -c.re.clone()))
        } else {
            CoeffText::Positive(format!("{}", c.re))
        }
    } else if re_zero {
        let mag = c.im.abs();
        let body = if mag.is_one() {
            "i".to_string()
        } else {
            format!("{mag}*i")
        };
        if c.im.is_negative() {
            CoeffText::Negative(body)
        } else {
            CoeffText::Positive(body)
        }
    } else {
        let im_mag = c.im.abs();
        let im_body = if im_mag.is_one() {
            "i".to_string()
        } else {
            format!("{im_mag}*i")
        };
        let sign = if c.im.is_negative() { '-' } else { '+' };
        CoeffText::Mixed(format!("({} {} {})", c.re, sign, im_body))
    }
}

/// True when the magnitude text is literally `1`, so `1*x` prints as `x`.
pub(crate) fn is_unit_text(s: &str) -> bool {
    s == "1"
}
