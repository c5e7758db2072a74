//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! Terms live in a `BTreeMap` keyed by monomial, so a polynomial is always
//! held in canonical form: monomials sorted under the fixed lexicographic
//! order, zero coefficients absent.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use super::coeff::{cnum_conj, cnum_from_int, cnum_one, cnum_pow, coeff_text, is_unit_text, CNum, CoeffText};
use super::{Coord, SymError};

/// A power product of coordinates. Factors are kept sorted by coordinate
/// name with strictly positive exponents; the empty product is `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    factors: Vec<(Coord, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn var(c: &Coord) -> Self {
        Monomial {
            factors: vec![(c.clone(), 1)],
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| *e).sum()
    }

    pub fn exponent_of(&self, c: &Coord) -> u32 {
        self.factors
            .iter()
            .find(|(v, _)| v == c)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, ea) = &self.factors[i];
            let (b, eb) = &other.factors[j];
            match a.cmp(b) {
                std::cmp::Ordering::Less => {
                    out.push((a.clone(), *ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b.clone(), *eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.clone(), ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        for (v, e) in &self.factors {
            let f = other.exponent_of(v);
            let m = (*e).min(f);
            if m > 0 {
                out.push((v.clone(), m));
            }
        }
        Monomial { factors: out }
    }

    /// Exact division; `None` when some exponent of `other` exceeds ours.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::new();
        for (v, e) in &self.factors {
            let f = other.exponent_of(v);
            if f > *e {
                return None;
            }
            if f < *e {
                out.push((v.clone(), e - f));
            }
        }
        for (v, f) in &other.factors {
            if self.exponent_of(v) < *f {
                return None;
            }
        }
        Some(Monomial { factors: out })
    }

    pub fn vars(&self) -> impl Iterator<Item = &Coord> {
        self.factors.iter().map(|(v, _)| v)
    }
}

/// Lexicographic order: coordinates rank by name, earliest name most
/// significant; at the first coordinate where exponents differ the larger
/// exponent wins. The constant monomial is least.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.factors.get(i), other.factors.get(j)) {
                (None, None) => return Equal,
                (Some(_), None) => return Greater,
                (None, Some(_)) => return Less,
                (Some((a, ea)), Some((b, eb))) => match a.cmp(b) {
                    Less => return Greater,
                    Greater => return Less,
                    Equal => {
                        match ea.cmp(eb) {
                            Less => return Less,
                            Greater => return Greater,
                            Equal => {}
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.factors {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in canonical form: no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, CNum>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(cnum_one())
    }

    pub fn constant(c: CNum) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(cnum_from_int(n))
    }

    pub fn var(c: &Coord) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::var(c), cnum_one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CNum)> {
        self.terms.iter()
    }

    /// Adds `c · m` into the polynomial, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: CNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &CNum) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact partial derivative with respect to `c`.
    pub fn partial(&self, c: &Coord) -> Poly {
        let mut out = Poly::zero();
        for (m, k) in &self.terms {
            let e = m.exponent_of(c);
            if e == 0 {
                continue;
            }
            let reduced = m.div(&Monomial::var(c)).expect("exponent checked above");
            out.add_term(reduced, k.clone() * cnum_from_int(e as i64));
        }
        out
    }

    /// Conjugates every coefficient.
    pub fn conj(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), cnum_conj(c)))
                .collect(),
        }
    }

    /// Exact evaluation; `lookup` must assign every variable that occurs.
    pub fn eval(&self, lookup: &dyn Fn(&Coord) -> Option<CNum>) -> Result<CNum, SymError> {
        let mut acc = num_complex::Complex::new(
            num_rational::BigRational::zero(),
            num_rational::BigRational::zero(),
        );
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in &m.factors {
                let val = lookup(v).ok_or_else(|| SymError::UnassignedCoord(v.name().into()))?;
                term = term * cnum_pow(&val, *e);
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Total degree; zero for the zero polynomial and constants.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// The greatest monomial and its coefficient, or `None` for zero.
    pub fn leading(&self) -> Option<(&Monomial, &CNum)> {
        self.terms.iter().next_back()
    }

    /// `Some(c)` when the polynomial is the constant `c` (zero included).
    pub fn as_constant(&self) -> Option<CNum> {
        match self.terms.len() {
            0 => Some(num_complex::Complex::new(
                num_rational::BigRational::zero(),
                num_rational::BigRational::zero(),
            )),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.is_one() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// GCD of all term monomials (the common monomial content).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => m.clone(),
            None => return Monomial::one(),
        };
        it.fold(first, |acc, m| acc.gcd(m))
    }

    /// Exact division by a monomial that divides every term.
    pub fn div_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.div(m).expect("monomial content divides"), c.clone()))
                .collect(),
        }
    }

    /// Exact division by a nonzero constant.
    pub fn div_constant(&self, c: &CNum) -> Poly {
        assert!(!c.is_zero(), "division of polynomial by zero constant");
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() / c.clone()))
                .collect(),
        }
    }

    pub fn vars(&self) -> BTreeSet<Coord> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for v in m.vars() {
                out.insert(v.clone());
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    /// Canonical rendering: terms in descending monomial order, signs folded
    /// into the separators; always re-parseable by the expression grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (neg, body) = match coeff_text(c) {
                CoeffText::Positive(s) => (false, term_body(&s, m)),
                CoeffText::Negative(s) => (true, term_body(&s, m)),
                CoeffText::Mixed(s) => (false, term_body(&s, m)),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

fn term_body(coeff_mag: &str, m: &Monomial) -> String {
    if m.is_one() {
        coeff_mag.to_string()
    } else if is_unit_text(coeff_mag) {
        format!("{m}")
    } else {
        format!("{coeff_mag}*{m}")
    }
}
