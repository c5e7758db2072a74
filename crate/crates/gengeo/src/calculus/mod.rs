//! Single-chart exterior calculus: vector fields, one-forms, two-forms,
//! bivectors, and the Cartan operations the Courant bracket is built from.
//!
//! A chart is an ordered list of distinct coordinates; all component indexing
//! follows that order. Printing uses the basis symbols `D<coord>` for
//! ∂/∂coord and `d<coord>` for dcoord.

mod parse;

pub use parse::{parse_oneform, parse_section, parse_twoform, parse_vector, ParsedSection};

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::linalg::SMat;
use crate::symbolic::{Coord, Scalar, SymError};

#[derive(Clone, Debug, Error, PartialEq)]
pub enum CalcError {
    #[error("chart mismatch: [{0}] vs [{1}]")]
    ChartMismatch(String, String),
    #[error("coordinate collision in product chart: `{0}`")]
    CoordCollision(String),
    #[error("chart [{0}] is not the {1} factor of [{2}]")]
    NotAFactor(String, String, String),
    #[error("duplicate coordinate `{0}` in chart")]
    DuplicateCoord(String),
    #[error("a chart needs at least one coordinate")]
    EmptyChart,
    #[error("coordinate name `{0}` is reserved")]
    ReservedCoord(String),
    #[error("component expression uses `{0}`, which is not a chart coordinate")]
    ForeignVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    SectionParse { pos: usize, msg: String },
    #[error(transparent)]
    Sym(#[from] SymError),
}

/// An ordered coordinate chart (an open subset of n-space).
#[derive(Clone, Debug)]
pub struct Chart {
    coords: Arc<[Coord]>,
}

impl PartialEq for Chart {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for Chart {}

impl Chart {
    pub fn new(names: &[&str]) -> Result<Chart, CalcError> {
        if names.is_empty() {
            return Err(CalcError::EmptyChart);
        }
        let mut coords = Vec::with_capacity(names.len());
        for name in names {
            if *name == "i" {
                return Err(CalcError::ReservedCoord((*name).into()));
            }
            let c = Coord::new(name);
            if coords.contains(&c) {
                return Err(CalcError::DuplicateCoord((*name).into()));
            }
            coords.push(c);
        }
        Ok(Chart {
            coords: coords.into(),
        })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Coord {
        &self.coords[i]
    }

    pub fn index_of(&self, c: &Coord) -> Option<usize> {
        self.coords.iter().position(|k| k == c)
    }

    pub fn names(&self) -> String {
        self.coords
            .iter()
            .map(|c| c.name().to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// Concatenates two charts, left coordinates first. Name collisions are
    /// an error; callers rename before taking products.
    pub fn product(left: &Chart, right: &Chart) -> Result<Chart, CalcError> {
        let mut coords: Vec<Coord> = left.coords.to_vec();
        for c in right.coords.iter() {
            if coords.contains(c) {
                return Err(CalcError::CoordCollision(c.name().into()));
            }
            coords.push(c.clone());
        }
        Ok(Chart {
            coords: coords.into(),
        })
    }

    /// Where a factor chart's components land inside this product chart.
    fn factor_offset(&self, factor: &Chart, side: Side) -> Result<usize, CalcError> {
        let n = factor.dim();
        let err = || {
            CalcError::NotAFactor(
                factor.names(),
                side.to_string(),
                self.names(),
            )
        };
        match side {
            Side::Left => {
                if self.dim() > n && self.coords[..n] == factor.coords[..] {
                    Ok(0)
                } else {
                    Err(err())
                }
            }
            Side::Right => {
                let total = self.dim();
                if total > n && self.coords[total - n..] == factor.coords[..] {
                    Ok(total - n)
                } else {
                    Err(err())
                }
            }
        }
    }

    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, SymError> {
        crate::symbolic::parse_scalar(text, &self.coords)
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names())
    }
}

/// Which factor of a product chart an object lives on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

fn check_same_chart(a: &Chart, b: &Chart) -> Result<(), CalcError> {
    if a == b {
        Ok(())
    } else {
        Err(CalcError::ChartMismatch(a.names(), b.names()))
    }
}

fn check_components(chart: &Chart, comps: &[Scalar]) -> Result<(), CalcError> {
    assert_eq!(comps.len(), chart.dim(), "component count mismatch");
    for s in comps {
        for v in s.vars() {
            if chart.index_of(&v).is_none() {
                return Err(CalcError::ForeignVariable(v.name().into()));
            }
        }
    }
    Ok(())
}

/// A vector field: one scalar coefficient per ∂/∂xᵢ.
#[derive(Clone, PartialEq, Debug)]
pub struct VectorField {
    chart: Chart,
    comps: Vec<Scalar>,
}

/// A one-form: one scalar coefficient per dxᵢ.
#[derive(Clone, PartialEq, Debug)]
pub struct OneForm {
    chart: Chart,
    comps: Vec<Scalar>,
}

macro_rules! field_impl {
    ($ty:ident, $basis_prefix:literal) => {
        impl $ty {
            pub fn new(chart: &Chart, comps: Vec<Scalar>) -> Result<Self, CalcError> {
                check_components(chart, &comps)?;
                Ok($ty {
                    chart: chart.clone(),
                    comps,
                })
            }

            pub fn zero(chart: &Chart) -> Self {
                $ty {
                    chart: chart.clone(),
                    comps: vec![Scalar::zero(); chart.dim()],
                }
            }

            /// The i-th coordinate basis element.
            pub fn basis(chart: &Chart, i: usize) -> Self {
                let mut f = Self::zero(chart);
                f.comps[i] = Scalar::one();
                f
            }

            pub fn chart(&self) -> &Chart {
                &self.chart
            }

            pub fn comps(&self) -> &[Scalar] {
                &self.comps
            }

            pub fn comp(&self, i: usize) -> &Scalar {
                &self.comps[i]
            }

            pub fn is_zero(&self) -> bool {
                self.comps.iter().all(Scalar::is_zero)
            }

            pub fn add(&self, other: &Self) -> Self {
                assert_eq!(self.chart, other.chart, "chart mismatch in field sum");
                $ty {
                    chart: self.chart.clone(),
                    comps: self
                        .comps
                        .iter()
                        .zip(&other.comps)
                        .map(|(a, b)| a.add(b))
                        .collect(),
                }
            }

            pub fn sub(&self, other: &Self) -> Self {
                self.add(&other.neg())
            }

            pub fn neg(&self) -> Self {
                $ty {
                    chart: self.chart.clone(),
                    comps: self.comps.iter().map(Scalar::neg).collect(),
                }
            }

            pub fn scale(&self, f: &Scalar) -> Self {
                $ty {
                    chart: self.chart.clone(),
                    comps: self.comps.iter().map(|c| c.mul(f)).collect(),
                }
            }

            /// Zero-padded copy on a product chart containing this chart as
            /// the given factor.
            pub fn lift(&self, side: Side, product: &Chart) -> Result<Self, CalcError> {
                let off = product.factor_offset(&self.chart, side)?;
                let mut comps = vec![Scalar::zero(); product.dim()];
                for (k, c) in self.comps.iter().enumerate() {
                    comps[off + k] = c.clone();
                }
                Ok($ty {
                    chart: product.clone(),
                    comps,
                })
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let terms: Vec<(bool, String)> = self
                    .comps
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| {
                        fmt_basis_term(c, &format!("{}{}", $basis_prefix, self.chart.coord(k)))
                    })
                    .collect();
                fmt_signed_sum(f, &terms)
            }
        }
    };
}

field_impl!(VectorField, "D");
field_impl!(OneForm, "d");

pub(crate) fn fmt_basis_term(c: &Scalar, basis: &str) -> (bool, String) {
    if c.is_literal_one() {
        (false, basis.to_string())
    } else if c.is_literal_minus_one() {
        (true, basis.to_string())
    } else {
        let (neg, body) = c.coefficient_text();
        (neg, format!("{body}*{basis}"))
    }
}

pub(crate) fn fmt_signed_sum(f: &mut fmt::Formatter<'_>, terms: &[(bool, String)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (neg, body)) in terms.iter().enumerate() {
        if k == 0 {
            if *neg {
                write!(f, "-")?;
            }
        } else if *neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        write!(f, "{body}")?;
    }
    Ok(())
}

/// Antisymmetric rank-2 tensors share their storage layout: only the entries
/// with i < j are kept, the rest follow by antisymmetry.
#[derive(Clone, PartialEq, Debug)]
pub struct AntiMatrix {
    chart: Chart,
    upper: Vec<Scalar>, // entries (i, j) with i < j, row-major
}

impl AntiMatrix {
    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j);
        let n = self.chart.dim();
        i * (2 * n - i - 1) / 2 + (j - i - 1)
    }

    fn zero(chart: &Chart) -> Self {
        let n = chart.dim();
        AntiMatrix {
            chart: chart.clone(),
            upper: vec![Scalar::zero(); n * (n - 1) / 2],
        }
    }

    fn entry(&self, i: usize, j: usize) -> Scalar {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.upper[self.idx(i, j)].clone(),
            Equal => Scalar::zero(),
            Greater => self.upper[self.idx(j, i)].neg(),
        }
    }

    fn set_upper(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < j, "only i < j entries are stored");
        let k = self.idx(i, j);
        self.upper[k] = v;
    }

    fn add(&self, other: &Self) -> Self {
        assert_eq!(self.chart, other.chart, "chart mismatch");
        AntiMatrix {
            chart: self.chart.clone(),
            upper: self
                .upper
                .iter()
                .zip(&other.upper)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    fn neg(&self) -> Self {
        AntiMatrix {
            chart: self.chart.clone(),
            upper: self.upper.iter().map(Scalar::neg).collect(),
        }
    }

    fn scale(&self, f: &Scalar) -> Self {
        AntiMatrix {
            chart: self.chart.clone(),
            upper: self.upper.iter().map(|c| c.mul(f)).collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.upper.iter().all(Scalar::is_zero)
    }
}

macro_rules! anti_wrapper {
    ($ty:ident, $sep:literal, $prefix:literal) => {
        #[derive(Clone, PartialEq, Debug)]
        pub struct $ty(AntiMatrix);

        impl $ty {
            pub fn zero(chart: &Chart) -> Self {
                $ty(AntiMatrix::zero(chart))
            }

            /// Builds from the strict upper entries (i < j).
            pub fn from_upper_fn(
                chart: &Chart,
                f: impl Fn(usize, usize) -> Scalar,
            ) -> Result<Self, CalcError> {
                let mut m = AntiMatrix::zero(chart);
                for i in 0..chart.dim() {
                    for j in (i + 1)..chart.dim() {
                        let v = f(i, j);
                        for var in v.vars() {
                            if chart.index_of(&var).is_none() {
                                return Err(CalcError::ForeignVariable(var.name().into()));
                            }
                        }
                        m.set_upper(i, j, v);
                    }
                }
                Ok($ty(m))
            }

            pub fn chart(&self) -> &Chart {
                &self.0.chart
            }

            /// The (i, j) component, with antisymmetry built in.
            pub fn entry(&self, i: usize, j: usize) -> Scalar {
                self.0.entry(i, j)
            }

            pub fn is_zero(&self) -> bool {
                self.0.is_zero()
            }

            pub fn add(&self, other: &Self) -> Self {
                $ty(self.0.add(&other.0))
            }

            pub fn sub(&self, other: &Self) -> Self {
                $ty(self.0.add(&other.0.neg()))
            }

            pub fn neg(&self) -> Self {
                $ty(self.0.neg())
            }

            pub fn scale(&self, f: &Scalar) -> Self {
                $ty(self.0.scale(f))
            }

            /// The action matrix `M[j][i] = entry(i, j)`, so that
            /// `M·v` computes the contraction fixed by this type's pairing
            /// convention.
            pub fn action_matrix(&self) -> SMat {
                let n = self.chart().dim();
                SMat::from_fn(n, n, |j, i| self.entry(i, j))
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let n = self.chart().dim();
                let mut terms = Vec::new();
                for i in 0..n {
                    for j in (i + 1)..n {
                        let c = self.entry(i, j);
                        if c.is_zero() {
                            continue;
                        }
                        let basis = format!(
                            "{}{}{}{}{}",
                            $prefix,
                            self.chart().coord(i),
                            $sep,
                            $prefix,
                            self.chart().coord(j)
                        );
                        terms.push(fmt_basis_term(&c, &basis));
                    }
                }
                fmt_signed_sum(f, &terms)
            }
        }
    };
}

anti_wrapper!(TwoForm, "^", "d");
anti_wrapper!(Bivector, "^", "D");

impl TwoForm {
    /// The coordinate wedge dxᵢ∧dxⱼ.
    pub fn coordinate_wedge(chart: &Chart, i: usize, j: usize) -> TwoForm {
        assert!(i != j, "degenerate wedge");
        let mut m = AntiMatrix::zero(chart);
        if i < j {
            m.set_upper(i, j, Scalar::one());
        } else {
            m.set_upper(j, i, Scalar::one().neg());
        }
        TwoForm(m)
    }

    /// α∧β for one-forms: entries αᵢβⱼ − αⱼβᵢ.
    pub fn wedge(a: &OneForm, b: &OneForm) -> Result<TwoForm, CalcError> {
        check_same_chart(a.chart(), b.chart())?;
        TwoForm::from_upper_fn(a.chart(), |i, j| {
            a.comp(i).mul(b.comp(j)).sub(&a.comp(j).mul(b.comp(i)))
        })
    }
}

impl Bivector {
    /// Builds the bivector with entries π(dxᵢ, dxⱼ) = f(i, j).
    pub fn from_pairings(
        chart: &Chart,
        f: impl Fn(usize, usize) -> Scalar,
    ) -> Result<Bivector, CalcError> {
        Bivector::from_upper_fn(chart, f)
    }
}

// ---- Cartan operations ----

/// `[X, Y]` with components Σᵢ (Xⁱ ∂ᵢYᵏ − Yⁱ ∂ᵢXᵏ).
pub fn lie_bracket(x: &VectorField, y: &VectorField) -> Result<VectorField, CalcError> {
    check_same_chart(x.chart(), y.chart())?;
    let chart = x.chart();
    let comps = (0..chart.dim())
        .map(|k| {
            let mut acc = Scalar::zero();
            for i in 0..chart.dim() {
                let c = chart.coord(i);
                acc = acc.add(&x.comp(i).mul(&y.comp(k).partial(c)));
                acc = acc.sub(&y.comp(i).mul(&x.comp(k).partial(c)));
            }
            acc
        })
        .collect();
    Ok(VectorField {
        chart: chart.clone(),
        comps,
    })
}

/// The exterior derivative of a function: (df)ᵢ = ∂ᵢf.
pub fn d_scalar(f: &Scalar, chart: &Chart) -> OneForm {
    for v in f.vars() {
        assert!(
            chart.index_of(&v).is_some(),
            "scalar uses a variable outside the chart"
        );
    }
    OneForm {
        chart: chart.clone(),
        comps: chart.coords().iter().map(|c| f.partial(c)).collect(),
    }
}

/// The exterior derivative of a one-form: (dα)ᵢⱼ = ∂ᵢαⱼ − ∂ⱼαᵢ.
pub fn d_oneform(a: &OneForm) -> TwoForm {
    let chart = a.chart().clone();
    TwoForm::from_upper_fn(&chart, |i, j| {
        a.comp(j)
            .partial(chart.coord(i))
            .sub(&a.comp(i).partial(chart.coord(j)))
    })
    .expect("components stay inside the chart")
}

/// Natural pairing α(X) = Σ αᵢ Xⁱ.
pub fn pair(a: &OneForm, x: &VectorField) -> Result<Scalar, CalcError> {
    check_same_chart(a.chart(), x.chart())?;
    let mut acc = Scalar::zero();
    for i in 0..a.chart().dim() {
        acc = acc.add(&a.comp(i).mul(x.comp(i)));
    }
    Ok(acc)
}

/// ι_X α = α(X).
pub fn interior_oneform(x: &VectorField, a: &OneForm) -> Result<Scalar, CalcError> {
    pair(a, x)
}

/// (ι_X ω)ⱼ = Σᵢ Xⁱ ωᵢⱼ.
pub fn interior_twoform(x: &VectorField, w: &TwoForm) -> Result<OneForm, CalcError> {
    check_same_chart(x.chart(), w.chart())?;
    let chart = x.chart();
    let comps = (0..chart.dim())
        .map(|j| {
            let mut acc = Scalar::zero();
            for i in 0..chart.dim() {
                acc = acc.add(&x.comp(i).mul(&w.entry(i, j)));
            }
            acc
        })
        .collect();
    Ok(OneForm {
        chart: chart.clone(),
        comps,
    })
}

/// 𝓛_X α = ι_X dα + d(ι_X α), straight from the Cartan formula.
pub fn lie_derivative_oneform(x: &VectorField, a: &OneForm) -> Result<OneForm, CalcError> {
    let da = d_oneform(a);
    let first = interior_twoform(x, &da)?;
    let inner = interior_oneform(x, a)?;
    let second = d_scalar(&inner, x.chart());
    Ok(first.add(&second))
}

/// (π α)ʲ = Σᵢ πᵢⱼ αᵢ; the sign convention makes
/// `bivec_pair(π, α, β) = pair(β, bivec_contract(π, α))`.
pub fn bivec_contract(p: &Bivector, a: &OneForm) -> Result<VectorField, CalcError> {
    check_same_chart(p.chart(), a.chart())?;
    let chart = a.chart();
    let comps = (0..chart.dim())
        .map(|j| {
            let mut acc = Scalar::zero();
            for i in 0..chart.dim() {
                acc = acc.add(&p.entry(i, j).mul(a.comp(i)));
            }
            acc
        })
        .collect();
    Ok(VectorField {
        chart: chart.clone(),
        comps,
    })
}

/// π(α, β) = Σᵢⱼ πᵢⱼ αᵢ βⱼ.
pub fn bivec_pair(p: &Bivector, a: &OneForm, b: &OneForm) -> Result<Scalar, CalcError> {
    let v = bivec_contract(p, a)?;
    pair(b, &v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r3() -> Chart {
        Chart::new(&["x", "y", "z"]).unwrap()
    }

    fn s(chart: &Chart, t: &str) -> Scalar {
        chart.parse_scalar(t).unwrap()
    }

    #[test]
    fn chart_construction_errors() {
        assert_eq!(Chart::new(&[]), Err(CalcError::EmptyChart));
        assert!(matches!(
            Chart::new(&["x", "x"]),
            Err(CalcError::DuplicateCoord(_))
        ));
        assert!(matches!(
            Chart::new(&["i"]),
            Err(CalcError::ReservedCoord(_))
        ));
    }

    #[test]
    fn lie_bracket_examples() {
        let c = r3();
        let dx = VectorField::basis(&c, 0);
        let dy = VectorField::basis(&c, 1);
        assert!(lie_bracket(&dx, &dy).unwrap().is_zero());
        let x_dy = dy.scale(&s(&c, "x"));
        assert!(lie_bracket(&x_dy, &x_dy).unwrap().is_zero());
        // [x Dy, Dx] = -Dy
        let b = lie_bracket(&x_dy, &dx).unwrap();
        assert_eq!(b, dy.neg());
        // chart mismatch is an error
        let other = Chart::new(&["u"]).unwrap();
        assert!(matches!(
            lie_bracket(&dx, &VectorField::basis(&other, 0)),
            Err(CalcError::ChartMismatch(..))
        ));
    }

    #[test]
    fn exterior_derivative_examples() {
        let c = r3();
        // d(x y) = y dx + x dy
        let df = d_scalar(&s(&c, "x*y"), &c);
        assert_eq!(df, parse_oneform("y*dx + x*dy", &c).unwrap());
        // d^2 = 0 on x^2 y + 1/y
        let f = s(&c, "x^2*y + 1/y");
        assert!(d_oneform(&d_scalar(&f, &c)).is_zero());
        // d(dz - y dx) = dx^dy
        let eta = parse_oneform("dz - y*dx", &c).unwrap();
        let deta = d_oneform(&eta);
        assert_eq!(deta, TwoForm::coordinate_wedge(&c, 0, 1));
    }

    #[test]
    fn interior_product_examples() {
        let c = r3();
        let w = TwoForm::coordinate_wedge(&c, 0, 1); // dx^dy
        let dx_field = VectorField::basis(&c, 0);
        let dz_field = VectorField::basis(&c, 2);
        let dy_field = VectorField::basis(&c, 1);
        assert!(pair(&parse_oneform("dx", &c).unwrap(), &dx_field)
            .unwrap()
            .is_one());
        assert!(interior_twoform(&dz_field, &w).unwrap().is_zero());
        // ι_Dy (dx^dy) = -dx
        assert_eq!(
            interior_twoform(&dy_field, &w).unwrap(),
            parse_oneform("-dx", &c).unwrap()
        );
    }

    #[test]
    fn lie_derivative_examples() {
        let c = r3();
        let eta = parse_oneform("dz - y*dx", &c).unwrap();
        let xi = VectorField::basis(&c, 2);
        assert!(lie_derivative_oneform(&xi, &eta).unwrap().is_zero());
        // L_Dx d(xy) = dy
        let f = s(&c, "x*y");
        let dx_field = VectorField::basis(&c, 0);
        let lhs = lie_derivative_oneform(&dx_field, &d_scalar(&f, &c)).unwrap();
        assert_eq!(lhs, parse_oneform("dy", &c).unwrap());
        // L_0 a = 0
        assert!(
            lie_derivative_oneform(&VectorField::zero(&c), &eta)
                .unwrap()
                .is_zero()
        );
    }

    #[test]
    fn lie_derivative_matches_direct_formula() {
        // independent oracle: (L_X a)_j = Σ_i (X^i ∂_i a_j + a_i ∂_j X^i)
        let c = r3();
        let x = parse_vector("y*Dx + x^2*Dz", &c).unwrap();
        let a = parse_oneform("z*dx - x*y*dy + dz", &c).unwrap();
        let cartan = lie_derivative_oneform(&x, &a).unwrap();
        let direct_comps: Vec<Scalar> = (0..3)
            .map(|j| {
                let mut acc = Scalar::zero();
                for i in 0..3 {
                    acc = acc.add(&x.comp(i).mul(&a.comp(j).partial(c.coord(i))));
                    acc = acc.add(&a.comp(i).mul(&x.comp(i).partial(c.coord(j))));
                }
                acc
            })
            .collect();
        let direct = OneForm::new(&c, direct_comps).unwrap();
        assert_eq!(cartan, direct);
    }

    #[test]
    fn bivector_pairing_convention() {
        let c = r3();
        let p = Bivector::from_pairings(&c, |i, j| {
            if (i, j) == (0, 1) {
                s(&c, "x + 1")
            } else {
                Scalar::zero()
            }
        })
        .unwrap();
        let alpha = parse_oneform("dx - z*dy", &c).unwrap();
        let beta = parse_oneform("y*dx + dy", &c).unwrap();
        // antisymmetry in the two slots
        assert!(bivec_pair(&p, &alpha, &alpha).unwrap().is_zero());
        let direct = bivec_pair(&p, &alpha, &beta).unwrap();
        let via_contract = pair(&beta, &bivec_contract(&p, &alpha).unwrap()).unwrap();
        assert_eq!(direct, via_contract);
    }

    #[test]
    fn lifts_are_zero_padded() {
        let left = r3();
        let right = Chart::new(&["u", "v"]).unwrap();
        let product = Chart::product(&left, &right).unwrap();
        assert_eq!(product.dim(), 5);

        let dz = VectorField::basis(&left, 2);
        let lifted = dz.lift(Side::Left, &product).unwrap();
        assert!(lifted.comp(2).is_one());
        assert_eq!(lifted.comps().iter().filter(|c| !c.is_zero()).count(), 1);

        let du = parse_oneform("du", &right).unwrap();
        let lifted_form = du.lift(Side::Right, &product).unwrap();
        assert!(lifted_form.comp(3).is_one());

        // pair(lift a, lift X) = lift(pair(a, X))
        let a = parse_oneform("y*dx", &left).unwrap();
        let x = parse_vector("Dx", &left).unwrap();
        let lhs = pair(
            &a.lift(Side::Left, &product).unwrap(),
            &x.lift(Side::Left, &product).unwrap(),
        )
        .unwrap();
        assert_eq!(lhs, pair(&a, &x).unwrap());

        // wrong factor is an error
        assert!(matches!(
            dz.lift(Side::Right, &product),
            Err(CalcError::NotAFactor(..))
        ));
        // collisions refuse at product time
        assert!(matches!(
            Chart::product(&left, &left),
            Err(CalcError::CoordCollision(_))
        ));
    }

    #[test]
    fn display_uses_basis_symbols() {
        let c = r3();
        let v = parse_vector("Dx - y*Dz", &c).unwrap();
        assert_eq!(v.to_string(), "Dx - y*Dz");
        let a = parse_oneform("dz - y*dx", &c).unwrap();
        assert_eq!(a.to_string(), "-y*dx + dz");
        let w = TwoForm::coordinate_wedge(&c, 0, 1);
        assert_eq!(w.to_string(), "dx^dy");
    }
}
