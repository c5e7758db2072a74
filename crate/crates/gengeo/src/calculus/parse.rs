//! Parser for section expressions: scalar expressions extended with the
//! basis symbols `D<coord>` (vector fields) and `d<coord>` (one-forms), with
//! `^` between one-forms meaning the wedge product.
//!
//! The result is a [`ParsedSection`] carrying a scalar part, a vector part,
//! a one-form part and a two-form part; extraction helpers enforce purity
//! where a single kind is required.

use crate::symbolic::parse::{lex_expr, SpannedTok, Tok};
use crate::symbolic::Scalar;

use super::{CalcError, Chart, OneForm, TwoForm, VectorField};

/// A sum of parts of mixed kind produced by the section grammar.
#[derive(Clone, Debug)]
pub struct ParsedSection {
    pub scalar: Scalar,
    pub vector: VectorField,
    pub oneform: OneForm,
    pub twoform: TwoForm,
}

impl ParsedSection {
    fn zero(chart: &Chart) -> Self {
        ParsedSection {
            scalar: Scalar::zero(),
            vector: VectorField::zero(chart),
            oneform: OneForm::zero(chart),
            twoform: TwoForm::zero(chart),
        }
    }

    fn from_scalar(chart: &Chart, s: Scalar) -> Self {
        let mut p = ParsedSection::zero(chart);
        p.scalar = s;
        p
    }

    fn add(&self, other: &ParsedSection) -> Self {
        ParsedSection {
            scalar: self.scalar.add(&other.scalar),
            vector: self.vector.add(&other.vector),
            oneform: self.oneform.add(&other.oneform),
            twoform: self.twoform.add(&other.twoform),
        }
    }

    fn neg(&self) -> Self {
        ParsedSection {
            scalar: self.scalar.neg(),
            vector: self.vector.neg(),
            oneform: self.oneform.neg(),
            twoform: self.twoform.neg(),
        }
    }

    fn scale(&self, f: &Scalar) -> Self {
        ParsedSection {
            scalar: self.scalar.mul(f),
            vector: self.vector.scale(f),
            oneform: self.oneform.scale(f),
            twoform: self.twoform.scale(f),
        }
    }

    fn is_pure_scalar(&self) -> bool {
        self.vector.is_zero() && self.oneform.is_zero() && self.twoform.is_zero()
    }

    fn is_pure_oneform(&self) -> bool {
        self.scalar.is_zero() && self.vector.is_zero() && self.twoform.is_zero()
    }

    /// The vector part, requiring every other part to vanish.
    pub fn into_vector(self, pos: usize) -> Result<VectorField, CalcError> {
        if self.scalar.is_zero() && self.oneform.is_zero() && self.twoform.is_zero() {
            Ok(self.vector)
        } else {
            Err(CalcError::SectionParse {
                pos,
                msg: "expected a pure vector field".into(),
            })
        }
    }

    /// The one-form part, requiring every other part to vanish.
    pub fn into_oneform(self, pos: usize) -> Result<OneForm, CalcError> {
        if self.scalar.is_zero() && self.vector.is_zero() && self.twoform.is_zero() {
            Ok(self.oneform)
        } else {
            Err(CalcError::SectionParse {
                pos,
                msg: "expected a pure one-form".into(),
            })
        }
    }

    /// The two-form part, requiring every other part to vanish.
    pub fn into_twoform(self, pos: usize) -> Result<TwoForm, CalcError> {
        if self.scalar.is_zero() && self.vector.is_zero() && self.oneform.is_zero() {
            Ok(self.twoform)
        } else {
            Err(CalcError::SectionParse {
                pos,
                msg: "expected a pure two-form".into(),
            })
        }
    }

    /// The generalized-vector parts (vector + one-form), requiring the
    /// scalar and two-form parts to vanish.
    pub fn into_pair(self, pos: usize) -> Result<(VectorField, OneForm), CalcError> {
        if self.scalar.is_zero() && self.twoform.is_zero() {
            Ok((self.vector, self.oneform))
        } else {
            Err(CalcError::SectionParse {
                pos,
                msg: "expected a section of TM ⊕ T*M".into(),
            })
        }
    }
}

struct Parser<'a> {
    toks: &'a [SpannedTok],
    idx: usize,
    chart: &'a Chart,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|t| t.pos).unwrap_or(self.end)
    }

    fn err(&self, pos: usize, msg: &str) -> CalcError {
        CalcError::SectionParse {
            pos,
            msg: msg.to_string(),
        }
    }

    fn expr(&mut self) -> Result<ParsedSection, CalcError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.idx += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.idx += 1;
                    acc = acc.add(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ParsedSection, CalcError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    let pos = self.pos();
                    self.idx += 1;
                    let rhs = self.factor()?;
                    acc = mul_sections(&acc, &rhs)
                        .ok_or_else(|| self.err(pos, "product of two non-scalar sections"))?;
                }
                Some(Tok::Slash) => {
                    let pos = self.pos();
                    self.idx += 1;
                    let rhs = self.factor()?;
                    if !rhs.is_pure_scalar() {
                        return Err(self.err(pos, "division by a non-scalar section"));
                    }
                    if rhs.scalar.is_zero() {
                        return Err(self.err(pos, "division by zero"));
                    }
                    let inv = rhs.scalar.recip().expect("nonzero divisor");
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<ParsedSection, CalcError> {
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            let caret_pos = self.pos();
            self.idx += 1;
            if let Some(Tok::Int(n)) = self.peek().cloned() {
                self.idx += 1;
                if !base.is_pure_scalar() {
                    return Err(self.err(caret_pos, "integer power of a non-scalar section"));
                }
                let e: u32 = n
                    .try_into()
                    .map_err(|_| self.err(caret_pos, "exponent out of range"))?;
                return Ok(ParsedSection::from_scalar(self.chart, base.scalar.pow(e)));
            }
            // wedge of one-forms
            let rhs = self.base()?;
            if !base.is_pure_oneform() || !rhs.is_pure_oneform() {
                return Err(self.err(caret_pos, "wedge of non-one-form operands"));
            }
            let w = TwoForm::wedge(&base.oneform, &rhs.oneform).expect("same chart");
            let mut out = ParsedSection::zero(self.chart);
            out.twoform = w;
            return Ok(out);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<ParsedSection, CalcError> {
        let pos = self.pos();
        let tok = self.toks.get(self.idx).map(|t| t.tok.clone());
        self.idx += 1;
        match tok {
            Some(Tok::Int(n)) => {
                let s = Scalar::constant(num_complex::Complex::new(
                    num_rational::BigRational::from_integer(n),
                    num_rational::BigRational::from_integer(0.into()),
                ));
                Ok(ParsedSection::from_scalar(self.chart, s))
            }
            Some(Tok::Ident(name)) => self.resolve_ident(&name, pos),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.idx += 1;
                        Ok(inner)
                    }
                    _ => Err(self.err(self.pos(), "expected `)`")),
                }
            }
            // unary minus wraps the whole factor so that -y^2 = -(y^2)
            Some(Tok::Minus) => Ok(self.factor()?.neg()),
            _ => Err(self.err(pos, "expected a value")),
        }
    }

    /// Identifier resolution order: imaginary unit, chart coordinate,
    /// then `D`/`d` basis symbols.
    fn resolve_ident(&self, name: &str, pos: usize) -> Result<ParsedSection, CalcError> {
        if name == "i" {
            return Ok(ParsedSection::from_scalar(self.chart, Scalar::i()));
        }
        if let Some(k) = self
            .chart
            .coords()
            .iter()
            .position(|c| c.name() == name)
        {
            return Ok(ParsedSection::from_scalar(
                self.chart,
                Scalar::coord(self.chart.coord(k)),
            ));
        }
        if let Some(rest) = name.strip_prefix('D') {
            if let Some(k) = self.chart.coords().iter().position(|c| c.name() == rest) {
                let mut p = ParsedSection::zero(self.chart);
                p.vector = VectorField::basis(self.chart, k);
                return Ok(p);
            }
        }
        if let Some(rest) = name.strip_prefix('d') {
            if let Some(k) = self.chart.coords().iter().position(|c| c.name() == rest) {
                let mut p = ParsedSection::zero(self.chart);
                p.oneform = OneForm::basis(self.chart, k);
                return Ok(p);
            }
        }
        Err(CalcError::Sym(crate::symbolic::SymError::UnknownIdentifier {
            name: name.to_string(),
            pos,
        }))
    }
}

fn mul_sections(a: &ParsedSection, b: &ParsedSection) -> Option<ParsedSection> {
    if a.is_pure_scalar() {
        Some(b.scale(&a.scalar))
    } else if b.is_pure_scalar() {
        Some(a.scale(&b.scalar))
    } else {
        None
    }
}

/// Parses a section expression over the chart.
pub fn parse_section(text: &str, chart: &Chart) -> Result<ParsedSection, CalcError> {
    let toks = lex_expr(text)?;
    let mut p = Parser {
        toks: &toks,
        idx: 0,
        chart,
        end: text.len(),
    };
    let v = p.expr()?;
    if p.idx != toks.len() {
        return Err(CalcError::SectionParse {
            pos: p.pos(),
            msg: "unexpected trailing input".into(),
        });
    }
    Ok(v)
}

/// Parses a pure vector field like `Dz` or `x*Dy - Dx`.
pub fn parse_vector(text: &str, chart: &Chart) -> Result<VectorField, CalcError> {
    parse_section(text, chart)?.into_vector(0)
}

/// Parses a pure one-form like `dz - y*dx`.
pub fn parse_oneform(text: &str, chart: &Chart) -> Result<OneForm, CalcError> {
    parse_section(text, chart)?.into_oneform(0)
}

/// Parses a two-form literal: sums of scalar multiples of wedge terms.
pub fn parse_twoform(text: &str, chart: &Chart) -> Result<TwoForm, CalcError> {
    parse_section(text, chart)?.into_twoform(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r3() -> Chart {
        Chart::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_mixed_sections() {
        let c = r3();
        let p = parse_section("Dz + y*dx - dy", &c).unwrap();
        let (v, f) = p.into_pair(0).unwrap();
        assert!(v.comp(2).is_one());
        assert_eq!(f.to_string(), "y*dx - dy");
    }

    #[test]
    fn wedge_and_powers() {
        let c = r3();
        let w = parse_twoform("dx^dy + 2*dy^dz", &c).unwrap();
        assert!(w.entry(0, 1).is_one());
        assert_eq!(w.entry(2, 1), c.parse_scalar("-2").unwrap());
        // scalar powers still work
        let s = parse_section("x^2 + 1", &c).unwrap();
        assert_eq!(s.scalar, c.parse_scalar("x^2 + 1").unwrap());
        // scaled wedges
        let sw = parse_twoform("(1 + x^2)*dx^dy", &c).unwrap();
        assert_eq!(sw.entry(0, 1), c.parse_scalar("1 + x^2").unwrap());
    }

    #[test]
    fn rejects_nonlinear_sections() {
        let c = r3();
        assert!(matches!(
            parse_section("Dx*Dy", &c),
            Err(CalcError::SectionParse { .. })
        ));
        assert!(matches!(
            parse_section("1/dx", &c),
            Err(CalcError::SectionParse { .. })
        ));
        assert!(matches!(
            parse_section("dx^dy + Dz", &c).and_then(|p| p.into_twoform(0)),
            Err(CalcError::SectionParse { .. })
        ));
    }

    #[test]
    fn display_round_trip() {
        let c = r3();
        for text in ["Dz", "dz - y*dx", "Dx + i*Dy", "-1/2*dy"] {
            let p = parse_section(text, &c).unwrap();
            let (v, f) = p.into_pair(0).unwrap();
            let printed = if v.is_zero() {
                f.to_string()
            } else if f.is_zero() {
                v.to_string()
            } else {
                format!("{v} + {f}")
            };
            let back = parse_section(&printed, &c).unwrap();
            let (v2, f2) = back.into_pair(0).unwrap();
            assert_eq!(v, v2, "vector part after `{text}` -> `{printed}`");
            assert_eq!(f, f2, "form part after `{text}` -> `{printed}`");
        }
    }
}
