//! Rational-function scalars with exact arithmetic and a decidable zero test.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use super::coeff::{cnum_from_int, cnum_from_ratio, cnum_i, cnum_one, CNum};
use super::poly::{Monomial, Poly};
use super::{Coord, SymError};

/// A rational function `num/den` in chart coordinates.
///
/// Invariants: `den` is never the zero polynomial; the common monomial
/// content of `num` and `den` is cancelled; a constant denominator is folded
/// into the numerator; otherwise the denominator's leading coefficient is
/// one. Fractions are *not* GCD-reduced — equality and the zero test use
/// cross-multiplication, so `(1-y^2)/(1-y)` and `1+y` compare equal while
/// keeping their stored forms.
#[derive(Clone, Debug)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    /// Builds the canonical representative of `num/den`.
    /// Panics if `den` is the zero polynomial; fallible entry points guard
    /// against that before calling.
    pub fn from_parts(num: Poly, den: Poly) -> Scalar {
        assert!(!den.is_zero(), "scalar with zero denominator");
        if num.is_zero() {
            return Scalar {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let content = num.monomial_content().gcd(&den.monomial_content());
        let (mut num, mut den) = if content.is_one() {
            (num, den)
        } else {
            (num.div_monomial(&content), den.div_monomial(&content))
        };
        if let Some(c) = den.as_constant() {
            num = num.div_constant(&c);
            den = Poly::one();
        } else {
            let lead = den.leading().expect("nonzero").1.clone();
            num = num.div_constant(&lead);
            den = den.div_constant(&lead);
        }
        Scalar { num, den }
    }

    pub fn from_poly(p: Poly) -> Scalar {
        Scalar::from_parts(p, Poly::one())
    }

    pub fn zero() -> Scalar {
        Scalar::from_poly(Poly::zero())
    }

    pub fn one() -> Scalar {
        Scalar::from_poly(Poly::one())
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_poly(Poly::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Scalar {
        Scalar::from_poly(Poly::constant(cnum_from_ratio(n, d)))
    }

    pub fn constant(c: CNum) -> Scalar {
        Scalar::from_poly(Poly::constant(c))
    }

    /// The imaginary unit as a scalar.
    pub fn i() -> Scalar {
        Scalar::from_poly(Poly::constant(cnum_i()))
    }

    pub fn coord(c: &Coord) -> Scalar {
        Scalar::from_poly(Poly::var(c))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// True iff the numerator expands to the zero polynomial. Sound and
    /// complete for rational functions.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.sub(&Scalar::one()).is_zero()
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        if self.den == other.den {
            return Scalar::from_parts(self.num.add(&other.num), self.den.clone());
        }
        Scalar::from_parts(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        Scalar::from_parts(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, c: &CNum) -> Scalar {
        Scalar::from_parts(self.num.scale(c), self.den.clone())
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, SymError> {
        if other.is_zero() {
            return Err(SymError::DivisionByZero);
        }
        Ok(Scalar::from_parts(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn recip(&self) -> Result<Scalar, SymError> {
        Scalar::one().div(self)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        Scalar::from_parts(self.num.pow(e), self.den.pow(e))
    }

    /// Exact partial derivative via the quotient rule.
    pub fn partial(&self, c: &Coord) -> Scalar {
        let dn = self.num.partial(c);
        if self.den.as_constant().is_some() {
            // canonical form keeps constant denominators equal to one
            return Scalar::from_parts(dn, self.den.clone());
        }
        let dd = self.den.partial(c);
        Scalar::from_parts(
            dn.mul(&self.den).sub(&self.num.mul(&dd)),
            self.den.mul(&self.den),
        )
    }

    /// Exact evaluation at a rational point. The point must assign every
    /// coordinate occurring in the stored representation, which is evaluated
    /// as-is: no cancellation is attempted at evaluation time.
    pub fn eval(&self, point: &BTreeMap<Coord, BigRational>) -> Result<CNum, SymError> {
        let lookup = |c: &Coord| {
            point
                .get(c)
                .map(|r| num_complex::Complex::new(r.clone(), BigRational::zero()))
        };
        let den = self.den.eval(&lookup)?;
        if den.is_zero() {
            return Err(SymError::Pole);
        }
        let num = self.num.eval(&lookup)?;
        Ok(num / den)
    }

    /// Conjugates all coefficients (`conj(n/d) = conj(n)/conj(d)`).
    pub fn conj(&self) -> Scalar {
        Scalar::from_parts(self.num.conj(), self.den.conj())
    }

    /// Exact decomposition `self = re + i*im` with real-coefficient parts.
    pub fn re_im(&self) -> (Scalar, Scalar) {
        let conj = self.conj();
        let half = Scalar::from_ratio(1, 2);
        let re = self.add(&conj).mul(&half);
        let minus_half_i = Scalar::constant(cnum_i()).neg().mul(&half);
        let im = self.sub(&conj).mul(&minus_half_i);
        (re, im)
    }

    /// True when the imaginary part vanishes identically.
    pub fn is_real(&self) -> bool {
        self.re_im().1.is_zero()
    }

    pub fn vars(&self) -> BTreeSet<Coord> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }

    /// Random integer-coefficient polynomial, for seeded property checks.
    pub fn random_polynomial(coords: &[Coord], max_degree: u32, rng: &mut impl Rng) -> Scalar {
        let mut p = Poly::zero();
        let n_terms = rng.gen_range(1..=3 + coords.len());
        for _ in 0..n_terms {
            let mut m = Monomial::one();
            let mut budget = max_degree;
            for c in coords {
                if budget == 0 {
                    break;
                }
                let e = rng.gen_range(0..=budget);
                budget -= e;
                for _ in 0..e {
                    m = m.mul(&Monomial::var(c));
                }
            }
            let coeff = rng.gen_range(-3i64..=3);
            p.add_term(m, cnum_from_int(coeff));
        }
        Scalar::from_poly(p)
    }
}

/// Equality of rational functions by cross-multiplication of numerators.
impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den).sub(&other.num.mul(&self.den)).is_zero()
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens_as_divisor(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

/// A divisor can be printed bare only when it is a single factor under the
/// grammar (one variable power with unit coefficient).
fn needs_parens_as_divisor(p: &Poly) -> bool {
    if p.num_terms() != 1 {
        return true;
    }
    let (m, c) = p.terms().next().unwrap();
    if (c.clone() - cnum_one()) != num_complex::Complex::new(BigRational::zero(), BigRational::zero())
    {
        return true;
    }
    m.vars().count() != 1
}

impl Scalar {
    /// How this scalar renders when it multiplies a basis symbol: a sign
    /// flag plus magnitude text, or a fully parenthesized body.
    pub(crate) fn coefficient_text(&self) -> (bool, String) {
        if self.is_zero() {
            return (false, "0".to_string());
        }
        if self.den.as_constant().is_some() && self.num.num_terms() == 1 {
            let (m, c) = self.num.terms().next().unwrap();
            use super::coeff::{coeff_text, CoeffText};
            let (neg, mag) = match coeff_text(c) {
                CoeffText::Positive(s) => (false, s),
                CoeffText::Negative(s) => (true, s),
                CoeffText::Mixed(s) => (false, s),
            };
            let body = if m.is_one() {
                mag
            } else if super::coeff::is_unit_text(&mag) {
                format!("{m}")
            } else {
                format!("{mag}*{m}")
            };
            return (neg, body);
        }
        if self.den.as_constant().is_some() {
            return (false, format!("({})", self.num));
        }
        // keep a quotient intact: (num/den) parses as one factor group
        (false, format!("({self})"))
    }

    /// True when the scalar is the constant 1 exactly (cheap structural test).
    pub(crate) fn is_literal_one(&self) -> bool {
        self.den.as_constant().is_some()
            && self
                .num
                .as_constant()
                .map(|c| c == cnum_one())
                .unwrap_or(false)
    }

    /// True when the scalar is the constant -1 exactly.
    pub(crate) fn is_literal_minus_one(&self) -> bool {
        self.den.as_constant().is_some()
            && self
                .num
                .as_constant()
                .map(|c| c == -cnum_one())
                .unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Coord {
        Coord::new("x")
    }
    fn y() -> Coord {
        Coord::new("y")
    }

    #[test]
    fn field_arithmetic() {
        let sx = Scalar::coord(&x());
        assert!(sx.add(&sx.neg()).is_zero());
        let inv = sx.recip().unwrap();
        assert!(inv.mul(&sx).is_one());
        // (x^2 - 1)/(x - 1) == x + 1 under cross-multiplication
        let num = sx.mul(&sx).sub(&Scalar::one());
        let den = sx.sub(&Scalar::one());
        let q = num.div(&den).unwrap();
        let expected = sx.add(&Scalar::one());
        assert_eq!(q, expected);
        // independent oracle: expand (x^2-1) - (x-1)(x+1) to zero directly
        let lhs = num.sub(&den.mul(&expected));
        assert!(lhs.is_zero());
    }

    #[test]
    fn division_by_zero_scalar() {
        let sx = Scalar::coord(&x());
        let z = sx.sub(&sx);
        assert_eq!(Scalar::one().div(&z), Err(SymError::DivisionByZero));
    }

    #[test]
    fn partial_quotient_rule() {
        let sy = Scalar::coord(&y());
        let inv = sy.recip().unwrap();
        let d = inv.partial(&y());
        // -1/y^2
        let expected = Scalar::one().neg().div(&sy.mul(&sy)).unwrap();
        assert_eq!(d, expected);
        // product-rule identity d(y * 1/y)/dy = 0
        let prod = sy.mul(&inv);
        assert!(prod.partial(&y()).is_zero());
    }

    #[test]
    fn binomial_zero_test() {
        let sx = Scalar::coord(&x());
        let sy = Scalar::coord(&y());
        let s = sx.add(&sy);
        let expand = s.mul(&s);
        let rhs = sx
            .mul(&sx)
            .add(&sx.mul(&sy).scale(&cnum_from_int(2)))
            .add(&sy.mul(&sy));
        assert!(expand.sub(&rhs).is_zero());
        assert!(!sx.sub(&sy).is_zero());
    }

    #[test]
    fn eval_and_poles() {
        let sx = Scalar::coord(&x());
        let sy = Scalar::coord(&y());
        let s = sx.mul(&sx).add(&sy);
        let mut pt = BTreeMap::new();
        pt.insert(x(), BigRational::from_integer(2.into()));
        pt.insert(y(), BigRational::from_integer(3.into()));
        assert_eq!(s.eval(&pt).unwrap(), cnum_from_int(7));

        let mut origin = BTreeMap::new();
        origin.insert(x(), BigRational::zero());
        assert_eq!(sx.recip().unwrap().eval(&origin), Err(SymError::Pole));

        // unreduced representation evaluates as stored: pole at x = 1
        let q = sx
            .mul(&sx)
            .sub(&Scalar::one())
            .div(&sx.sub(&Scalar::one()))
            .unwrap();
        let mut one = BTreeMap::new();
        one.insert(x(), BigRational::from_integer(1.into()));
        assert_eq!(q.eval(&one), Err(SymError::Pole));
    }

    #[test]
    fn re_im_decomposition() {
        let sx = Scalar::coord(&x());
        let s = sx.add(&Scalar::i().mul(&sx).scale(&cnum_from_int(2)));
        let (re, im) = s.re_im();
        assert_eq!(re, sx);
        assert_eq!(im, sx.scale(&cnum_from_int(2)));
        assert!(re.is_real() && im.is_real());
    }

    #[test]
    fn canonical_display() {
        let sx = Scalar::coord(&x());
        let sy = Scalar::coord(&y());
        let q = sx.add(&Scalar::one()).div(&sy.mul(&sy)).unwrap();
        assert_eq!(q.to_string(), "(x + 1)/y^2");
        let r = sx.div(&sx.mul(&sy)).unwrap();
        // monomial content cancels
        assert_eq!(r.to_string(), "1/y");
    }
}
