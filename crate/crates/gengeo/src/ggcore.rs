//! The generalized tangent bundle `TM ⊕ T*M`: neutral metric, Courant
//! bracket, block endomorphisms, the two structure kinds with their axiom
//! checkers, and the standard constructors.
//!
//! Conventions fixed here and relied on everywhere else:
//!
//! - the neutral pairing is `⟨X+α, Y+β⟩ = ½(β(X) + α(Y))`;
//! - the Courant bracket is
//!   `[[X+α, Y+β]] = [X,Y] + 𝓛_X β − 𝓛_Y α − ½ d(ι_X β − ι_Y α)`;
//! - `(u⊗v)(b) = 2⟨v, b⟩·u`, i.e. the second slot acts through the natural
//!   dual pairing `β(X) + α(Y)` rather than the half-valued metric. This is
//!   the unique reading under which `Φ² = −Id + E₊⊗E₋ + E₋⊗E₊` annihilates
//!   `E±` and reproduces the classical `φ² = −Id + η⊗ξ`.

use std::fmt;

use thiserror::Error;

use crate::calculus::{
    self, d_scalar, interior_oneform, interior_twoform, lie_bracket, lie_derivative_oneform,
    pair, CalcError, Chart, OneForm, Side, TwoForm, VectorField,
};
use crate::linalg::{self, SMat};
use crate::report::CheckList;
use crate::symbolic::Scalar;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum StructureError {
    #[error(transparent)]
    Calc(#[from] CalcError),
    #[error("matrix does not square to -Id: {witness}")]
    NotComplexMatrix { witness: String },
    #[error("classical axiom `{axiom}` fails: {witness}")]
    ClassicalAxiom { axiom: String, witness: String },
    #[error("two-form is degenerate: symbolic determinant is identically zero")]
    DegenerateTwoForm,
    #[error("chart dimension {0} is not even")]
    OddDimension(usize),
    #[error("chart dimension {0} is not odd")]
    EvenDimension(usize),
    #[error("rho map is singular: the one-form is not contact on this chart")]
    RhoSingular,
    #[error("Reeb system unsolvable: {witness}")]
    ReebUnsolvable { witness: String },
}

/// A section `X + α` of `TM ⊕ T*M`, components possibly complex.
#[derive(Clone, PartialEq, Debug)]
pub struct GVector {
    vec: VectorField,
    form: OneForm,
}

impl GVector {
    pub fn new(vec: VectorField, form: OneForm) -> Result<GVector, CalcError> {
        if vec.chart() != form.chart() {
            return Err(CalcError::ChartMismatch(
                vec.chart().names(),
                form.chart().names(),
            ));
        }
        Ok(GVector { vec, form })
    }

    pub fn zero(chart: &Chart) -> GVector {
        GVector {
            vec: VectorField::zero(chart),
            form: OneForm::zero(chart),
        }
    }

    pub fn from_vector(vec: VectorField) -> GVector {
        let form = OneForm::zero(vec.chart());
        GVector { vec, form }
    }

    pub fn from_oneform(form: OneForm) -> GVector {
        let vec = VectorField::zero(form.chart());
        GVector { vec, form }
    }

    /// Parses a section expression like `Dz + y*dx`.
    pub fn parse(text: &str, chart: &Chart) -> Result<GVector, CalcError> {
        let (vec, form) = calculus::parse_section(text, chart)?.into_pair(0)?;
        Ok(GVector { vec, form })
    }

    pub fn chart(&self) -> &Chart {
        self.vec.chart()
    }

    pub fn vec(&self) -> &VectorField {
        &self.vec
    }

    pub fn form(&self) -> &OneForm {
        &self.form
    }

    pub fn is_zero(&self) -> bool {
        self.vec.is_zero() && self.form.is_zero()
    }

    pub fn add(&self, other: &GVector) -> GVector {
        GVector {
            vec: self.vec.add(&other.vec),
            form: self.form.add(&other.form),
        }
    }

    pub fn sub(&self, other: &GVector) -> GVector {
        GVector {
            vec: self.vec.sub(&other.vec),
            form: self.form.sub(&other.form),
        }
    }

    pub fn neg(&self) -> GVector {
        GVector {
            vec: self.vec.neg(),
            form: self.form.neg(),
        }
    }

    pub fn scale(&self, f: &Scalar) -> GVector {
        GVector {
            vec: self.vec.scale(f),
            form: self.form.scale(f),
        }
    }

    /// Multiplication by the imaginary unit.
    pub fn times_i(&self) -> GVector {
        self.scale(&Scalar::i())
    }

    pub fn lift(&self, side: Side, product: &Chart) -> Result<GVector, CalcError> {
        Ok(GVector {
            vec: self.vec.lift(side, product)?,
            form: self.form.lift(side, product)?,
        })
    }

    /// The 2n coordinate-frame sections: ∂₁..∂ₙ then dx₁..dxₙ.
    pub fn coordinate_frame(chart: &Chart) -> Vec<GVector> {
        let n = chart.dim();
        let mut out = Vec::with_capacity(2 * n);
        for i in 0..n {
            out.push(GVector::from_vector(VectorField::basis(chart, i)));
        }
        for i in 0..n {
            out.push(GVector::from_oneform(OneForm::basis(chart, i)));
        }
        out
    }

    /// Component in the coordinate frame: vector slots first, then form slots.
    pub fn component(&self, k: usize) -> &Scalar {
        let n = self.chart().dim();
        if k < n {
            self.vec.comp(k)
        } else {
            self.form.comp(k - n)
        }
    }

    pub fn components(&self) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = self.vec.comps().to_vec();
        out.extend_from_slice(self.form.comps());
        out
    }
}

impl fmt::Display for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.vec.is_zero() {
            return write!(f, "{}", self.form);
        }
        if self.form.is_zero() {
            return write!(f, "{}", self.vec);
        }
        write!(f, "{} + {}", self.vec, self.form)
    }
}

/// `⟨X+α, Y+β⟩ = ½(β(X) + α(Y))` — the neutral metric.
pub fn neutral_pairing(a: &GVector, b: &GVector) -> Result<Scalar, CalcError> {
    let first = pair(b.form(), a.vec())?;
    let second = pair(a.form(), b.vec())?;
    Ok(first.add(&second).mul(&Scalar::from_ratio(1, 2)))
}

/// The natural dual pairing `β(X) + α(Y)`, i.e. twice the neutral metric.
pub fn dual_pairing(a: &GVector, b: &GVector) -> Result<Scalar, CalcError> {
    Ok(neutral_pairing(a, b)?.scale(&crate::symbolic::cnum_from_int(2)))
}

/// `[[X+α, Y+β]] = [X,Y] + 𝓛_X β − 𝓛_Y α − ½ d(ι_X β − ι_Y α)`.
pub fn courant_bracket(a: &GVector, b: &GVector) -> Result<GVector, CalcError> {
    if a.chart() != b.chart() {
        return Err(CalcError::ChartMismatch(
            a.chart().names(),
            b.chart().names(),
        ));
    }
    let chart = a.chart();
    let vec = lie_bracket(a.vec(), b.vec())?;
    let lie_xb = lie_derivative_oneform(a.vec(), b.form())?;
    let lie_ya = lie_derivative_oneform(b.vec(), a.form())?;
    let inner = interior_oneform(a.vec(), b.form())?.sub(&interior_oneform(b.vec(), a.form())?);
    let correction = d_scalar(&inner, chart).scale(&Scalar::from_ratio(1, 2));
    let form = lie_xb.sub(&lie_ya).sub(&correction);
    Ok(GVector { vec, form })
}

/// A block endomorphism of `TM ⊕ T*M`, stored as four action matrices:
/// `Φ(X, α) = (A·X + P·α, S·X + B·α)` with `P` coming from a bivector and
/// `S` from a two-form when the endomorphism is skew-adjoint.
#[derive(Clone, PartialEq, Debug)]
pub struct GEndo {
    chart: Chart,
    vec_vec: SMat,  // A : TM → TM
    form_vec: SMat, // P : T*M → TM
    vec_form: SMat, // S : TM → T*M
    form_form: SMat, // B : T*M → T*M
}

impl GEndo {
    pub fn from_blocks(
        chart: &Chart,
        vec_vec: SMat,
        form_vec: SMat,
        vec_form: SMat,
        form_form: SMat,
    ) -> GEndo {
        let n = chart.dim();
        for m in [&vec_vec, &form_vec, &vec_form, &form_form] {
            assert_eq!((m.rows(), m.cols()), (n, n), "block size mismatch");
        }
        GEndo {
            chart: chart.clone(),
            vec_vec,
            form_vec,
            vec_form,
            form_form,
        }
    }

    pub fn zero(chart: &Chart) -> GEndo {
        let n = chart.dim();
        GEndo::from_blocks(
            chart,
            SMat::zero(n, n),
            SMat::zero(n, n),
            SMat::zero(n, n),
            SMat::zero(n, n),
        )
    }

    pub fn identity(chart: &Chart) -> GEndo {
        let n = chart.dim();
        GEndo::from_blocks(
            chart,
            SMat::identity(n),
            SMat::zero(n, n),
            SMat::zero(n, n),
            SMat::identity(n),
        )
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn vec_vec(&self) -> &SMat {
        &self.vec_vec
    }

    pub fn form_vec(&self) -> &SMat {
        &self.form_vec
    }

    pub fn vec_form(&self) -> &SMat {
        &self.vec_form
    }

    pub fn form_form(&self) -> &SMat {
        &self.form_form
    }

    pub fn apply(&self, a: &GVector) -> Result<GVector, CalcError> {
        if a.chart() != &self.chart {
            return Err(CalcError::ChartMismatch(
                self.chart.names(),
                a.chart().names(),
            ));
        }
        let x = a.vec().comps();
        let al = a.form().comps();
        let mut vec = self.vec_vec.mul_vec(x);
        for (v, extra) in vec.iter_mut().zip(self.form_vec.mul_vec(al)) {
            *v = v.add(&extra);
        }
        let mut form = self.vec_form.mul_vec(x);
        for (v, extra) in form.iter_mut().zip(self.form_form.mul_vec(al)) {
            *v = v.add(&extra);
        }
        Ok(GVector {
            vec: VectorField::new(&self.chart, vec)?,
            form: OneForm::new(&self.chart, form)?,
        })
    }

    /// The adjoint under the neutral metric: `⟨Φa, b⟩ = ⟨a, Φ*b⟩`.
    /// Blockwise, `(A, P, S, B)* = (Bᵀ, Pᵀ, Sᵀ, Aᵀ)`.
    pub fn adjoint(&self) -> GEndo {
        GEndo {
            chart: self.chart.clone(),
            vec_vec: self.form_form.transpose(),
            form_vec: self.form_vec.transpose(),
            vec_form: self.vec_form.transpose(),
            form_form: self.vec_vec.transpose(),
        }
    }

    pub fn compose(&self, other: &GEndo) -> Result<GEndo, CalcError> {
        if self.chart != other.chart {
            return Err(CalcError::ChartMismatch(
                self.chart.names(),
                other.chart.names(),
            ));
        }
        Ok(GEndo {
            chart: self.chart.clone(),
            vec_vec: self
                .vec_vec
                .mul(&other.vec_vec)
                .add(&self.form_vec.mul(&other.vec_form)),
            form_vec: self
                .vec_vec
                .mul(&other.form_vec)
                .add(&self.form_vec.mul(&other.form_form)),
            vec_form: self
                .vec_form
                .mul(&other.vec_vec)
                .add(&self.form_form.mul(&other.vec_form)),
            form_form: self
                .vec_form
                .mul(&other.form_vec)
                .add(&self.form_form.mul(&other.form_form)),
        })
    }

    pub fn add(&self, other: &GEndo) -> GEndo {
        assert_eq!(self.chart, other.chart, "chart mismatch in endo sum");
        GEndo {
            chart: self.chart.clone(),
            vec_vec: self.vec_vec.add(&other.vec_vec),
            form_vec: self.form_vec.add(&other.form_vec),
            vec_form: self.vec_form.add(&other.vec_form),
            form_form: self.form_form.add(&other.form_form),
        }
    }

    pub fn sub(&self, other: &GEndo) -> GEndo {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GEndo {
        GEndo {
            chart: self.chart.clone(),
            vec_vec: self.vec_vec.neg(),
            form_vec: self.form_vec.neg(),
            vec_form: self.vec_form.neg(),
            form_form: self.form_form.neg(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.vec_vec.is_zero()
            && self.form_vec.is_zero()
            && self.vec_form.is_zero()
            && self.form_form.is_zero()
    }

    /// First nonzero entry with a block-qualified label, for witnesses.
    pub fn first_nonzero(&self) -> Option<String> {
        for (name, m) in [
            ("vec→vec", &self.vec_vec),
            ("form→vec", &self.form_vec),
            ("vec→form", &self.vec_form),
            ("form→form", &self.form_form),
        ] {
            if let Some((i, j, s)) = m.first_nonzero() {
                return Some(format!("{name}[{i}][{j}] = {s}"));
            }
        }
        None
    }

    /// Block-diagonal join on a product chart.
    pub fn block_diag(left: &GEndo, right: &GEndo, product: &Chart) -> Result<GEndo, CalcError> {
        let nl = left.chart.dim();
        let nr = right.chart.dim();
        // validate factor embedding through a basis lift
        VectorField::zero(&left.chart).lift(Side::Left, product)?;
        VectorField::zero(&right.chart).lift(Side::Right, product)?;
        let embed = |lm: &SMat, rm: &SMat| {
            SMat::from_fn(nl + nr, nl + nr, |i, j| {
                if i < nl && j < nl {
                    lm.get(i, j).clone()
                } else if i >= nl && j >= nl {
                    rm.get(i - nl, j - nl).clone()
                } else {
                    Scalar::zero()
                }
            })
        };
        Ok(GEndo {
            chart: product.clone(),
            vec_vec: embed(&left.vec_vec, &right.vec_vec),
            form_vec: embed(&left.form_vec, &right.form_vec),
            vec_form: embed(&left.vec_form, &right.vec_form),
            form_form: embed(&left.form_form, &right.form_form),
        })
    }
}

/// `(u ⊗ v)(b) = 2⟨v, b⟩ · u` as a block endomorphism.
pub fn tensor_term(u: &GVector, v: &GVector) -> Result<GEndo, CalcError> {
    if u.chart() != v.chart() {
        return Err(CalcError::ChartMismatch(
            u.chart().names(),
            v.chart().names(),
        ));
    }
    // 2⟨v, b⟩ = β(V) + ν(Y) for v = V + ν, b = Y + β, so
    // (u⊗v)(Y, β) = (U·νᵀ·Y + U·Vᵀ·β, μ·νᵀ·Y + μ·Vᵀ·β).
    let u_vec = u.vec().comps();
    let u_form = u.form().comps();
    let v_vec = v.vec().comps();
    let v_form = v.form().comps();
    Ok(GEndo {
        chart: u.chart().clone(),
        vec_vec: SMat::outer(u_vec, v_form),
        form_vec: SMat::outer(u_vec, v_vec),
        vec_form: SMat::outer(u_form, v_form),
        form_form: SMat::outer(u_form, v_vec),
    })
}

/// Axiom report for a generalized almost complex structure candidate.
pub fn check_gcs_axioms(j: &GEndo) -> CheckList {
    let mut list = CheckList::new();
    let n = j.chart().dim();
    list.record(
        "gcs.dim-even",
        "chart dimension is even",
        n % 2 == 0,
        &format!("dim = {n}"),
    );
    let skew = j.adjoint().add(j);
    list.record(
        "gcs.skew",
        "J + J* = 0",
        skew.is_zero(),
        &skew.first_nonzero().unwrap_or_default(),
    );
    let square = j
        .compose(j)
        .expect("same chart")
        .add(&GEndo::identity(j.chart()));
    list.record(
        "gcs.square",
        "J∘J = -Id",
        square.is_zero(),
        &square.first_nonzero().unwrap_or_default(),
    );
    list
}

/// Axiom report for a generalized almost contact triple, including the
/// derived identities Φ(E±) = 0.
pub fn check_gacs_axioms(
    phi: &GEndo,
    e_plus: &GVector,
    e_minus: &GVector,
) -> Result<CheckList, CalcError> {
    if phi.chart() != e_plus.chart() || phi.chart() != e_minus.chart() {
        return Err(CalcError::ChartMismatch(
            phi.chart().names(),
            format!("{}, {}", e_plus.chart().names(), e_minus.chart().names()),
        ));
    }
    let mut list = CheckList::new();
    let skew = phi.adjoint().add(phi);
    list.record(
        "gacs.eq1.skew",
        "Φ + Φ* = 0",
        skew.is_zero(),
        &skew.first_nonzero().unwrap_or_default(),
    );
    let rhs = tensor_term(e_plus, e_minus)?
        .add(&tensor_term(e_minus, e_plus)?)
        .sub(&GEndo::identity(phi.chart()));
    let diff = phi.compose(phi)?.sub(&rhs);
    list.record(
        "gacs.eq2.square",
        "Φ∘Φ = -Id + E+⊗E- + E-⊗E+",
        diff.is_zero(),
        &diff.first_nonzero().unwrap_or_default(),
    );
    let np = neutral_pairing(e_plus, e_plus)?;
    list.record(
        "gacs.eq3.null-plus",
        "⟨E+, E+⟩ = 0",
        np.is_zero(),
        &format!("⟨E+, E+⟩ = {np}"),
    );
    let nm = neutral_pairing(e_minus, e_minus)?;
    list.record(
        "gacs.eq3.null-minus",
        "⟨E-, E-⟩ = 0",
        nm.is_zero(),
        &format!("⟨E-, E-⟩ = {nm}"),
    );
    let cross = neutral_pairing(e_plus, e_minus)?
        .scale(&crate::symbolic::cnum_from_int(2))
        .sub(&Scalar::one());
    list.record(
        "gacs.eq3.pairing",
        "2⟨E+, E-⟩ = 1",
        cross.is_zero(),
        &format!("2⟨E+, E-⟩ - 1 = {cross}"),
    );
    let kp = phi.apply(e_plus)?;
    list.record(
        "gacs.kernel-plus",
        "Φ(E+) = 0",
        kp.is_zero(),
        &format!("Φ(E+) = {kp}"),
    );
    let km = phi.apply(e_minus)?;
    list.record(
        "gacs.kernel-minus",
        "Φ(E-) = 0",
        km.is_zero(),
        &format!("Φ(E-) = {km}"),
    );
    Ok(list)
}

/// A generalized almost complex structure with its axiom-check status.
#[derive(Clone, Debug)]
pub struct Gcs {
    endo: GEndo,
    axioms: CheckList,
}

impl Gcs {
    /// Wraps an endomorphism, recording (not enforcing) the axiom checks.
    pub fn new(endo: GEndo) -> Gcs {
        let axioms = check_gcs_axioms(&endo);
        Gcs { endo, axioms }
    }

    pub fn endo(&self) -> &GEndo {
        &self.endo
    }

    pub fn chart(&self) -> &Chart {
        self.endo.chart()
    }

    pub fn axioms(&self) -> &CheckList {
        &self.axioms
    }

    pub fn axioms_pass(&self) -> bool {
        self.axioms.all_pass()
    }

    pub fn apply(&self, a: &GVector) -> Result<GVector, CalcError> {
        self.endo.apply(a)
    }
}

/// A generalized almost contact triple with its axiom-check status.
#[derive(Clone, Debug)]
pub struct Gacs {
    phi: GEndo,
    e_plus: GVector,
    e_minus: GVector,
    axioms: CheckList,
}

impl Gacs {
    pub fn new(phi: GEndo, e_plus: GVector, e_minus: GVector) -> Result<Gacs, CalcError> {
        let axioms = check_gacs_axioms(&phi, &e_plus, &e_minus)?;
        Ok(Gacs {
            phi,
            e_plus,
            e_minus,
            axioms,
        })
    }

    pub fn phi(&self) -> &GEndo {
        &self.phi
    }

    pub fn e_plus(&self) -> &GVector {
        &self.e_plus
    }

    pub fn e_minus(&self) -> &GVector {
        &self.e_minus
    }

    pub fn chart(&self) -> &Chart {
        self.phi.chart()
    }

    pub fn axioms(&self) -> &CheckList {
        &self.axioms
    }

    pub fn axioms_pass(&self) -> bool {
        self.axioms.all_pass()
    }
}

/// Lifts a classical complex-structure matrix `J` (with `J² = −Id`) to the
/// generalized structure with blocks `(−J, 0, 0, Jᵀ)`.
pub fn from_complex(jcl: &SMat, chart: &Chart) -> Result<Gcs, StructureError> {
    let n = chart.dim();
    assert_eq!((jcl.rows(), jcl.cols()), (n, n), "matrix size mismatch");
    if n % 2 != 0 {
        return Err(StructureError::OddDimension(n));
    }
    let square = jcl.mul(jcl).add(&SMat::identity(n));
    if !square.is_zero() {
        let (i, j, s) = square.first_nonzero().expect("nonzero");
        return Err(StructureError::NotComplexMatrix {
            witness: format!("(J² + Id)[{i}][{j}] = {s}"),
        });
    }
    let endo = GEndo::from_blocks(
        chart,
        jcl.neg(),
        SMat::zero(n, n),
        SMat::zero(n, n),
        jcl.transpose(),
    );
    Ok(Gcs::new(endo))
}

/// Lifts a nondegenerate two-form to the generalized structure with blocks
/// `(0, −ω⁻¹, ω, 0)`; closedness is not required here.
pub fn from_symplectic(omega: &TwoForm) -> Result<Gcs, StructureError> {
    let chart = omega.chart().clone();
    let n = chart.dim();
    if n % 2 != 0 {
        return Err(StructureError::OddDimension(n));
    }
    let s = omega.action_matrix();
    let s_inv = linalg::inverse(&s).ok_or(StructureError::DegenerateTwoForm)?;
    let endo = GEndo::from_blocks(&chart, SMat::zero(n, n), s_inv.neg(), s, SMat::zero(n, n));
    Ok(Gcs::new(endo))
}

/// Validates the classical almost-contact axioms, returning a witness for
/// the first failure.
pub(crate) fn validate_classical(
    phi: &SMat,
    xi: &VectorField,
    eta: &OneForm,
) -> Result<(), StructureError> {
    let chart = xi.chart().clone();
    if xi.chart() != eta.chart() {
        return Err(StructureError::Calc(CalcError::ChartMismatch(
            xi.chart().names(),
            eta.chart().names(),
        )));
    }
    let n = chart.dim();
    assert_eq!((phi.rows(), phi.cols()), (n, n), "phi size mismatch");

    // φ² = -Id + ξ·ηᵀ
    let rhs = SMat::outer(xi.comps(), eta.comps()).sub(&SMat::identity(n));
    let diff = phi.mul(phi).sub(&rhs);
    if let Some((i, j, s)) = diff.first_nonzero() {
        return Err(StructureError::ClassicalAxiom {
            axiom: "phi^2 = -Id + eta⊗xi".into(),
            witness: format!("(φ² + Id - ξηᵀ)[{i}][{j}] = {s}"),
        });
    }
    // η(ξ) = 1
    let p = pair(eta, xi).map_err(StructureError::Calc)?;
    if !p.is_one() {
        return Err(StructureError::ClassicalAxiom {
            axiom: "eta(xi) = 1".into(),
            witness: format!("η(ξ) = {p}"),
        });
    }
    // φξ = 0
    let phixi = phi.mul_vec(xi.comps());
    if let Some(k) = phixi.iter().position(|s| !s.is_zero()) {
        return Err(StructureError::ClassicalAxiom {
            axiom: "phi(xi) = 0".into(),
            witness: format!("(φξ)[{k}] = {}", phixi[k]),
        });
    }
    // η∘φ = 0 (row vector ηᵀ·φ)
    let etaphi = phi.transpose().mul_vec(eta.comps());
    if let Some(k) = etaphi.iter().position(|s| !s.is_zero()) {
        return Err(StructureError::ClassicalAxiom {
            axiom: "eta∘phi = 0".into(),
            witness: format!("(ηφ)[{k}] = {}", etaphi[k]),
        });
    }
    Ok(())
}

/// Lifts a classical almost contact structure `(φ, ξ, η)` to the triple with
/// `Φ = (φ, 0, 0, −φᵀ)`, `E₊ = ξ`, `E₋ = η`.
pub fn from_almost_contact(
    phi: &SMat,
    xi: &VectorField,
    eta: &OneForm,
) -> Result<Gacs, StructureError> {
    validate_classical(phi, xi, eta)?;
    let chart = xi.chart().clone();
    let n = chart.dim();
    let endo = GEndo::from_blocks(
        &chart,
        phi.clone(),
        SMat::zero(n, n),
        SMat::zero(n, n),
        phi.transpose().neg(),
    );
    Gacs::new(
        endo,
        GVector::from_vector(xi.clone()),
        GVector::from_oneform(eta.clone()),
    )
    .map_err(StructureError::Calc)
}

/// Builds a generalized almost contact structure from a contact form:
/// computes the Reeb field from `ρ(X) = ι_X dη − η(X)η`, the bivector
/// `π(α, β) = dη(ρ⁻¹α, ρ⁻¹β)`, and sets `Φ = (0, π, dη, 0)`, `E₊ = η`,
/// `E₋ = ξ`.
pub fn from_contact(eta: &OneForm) -> Result<Gacs, StructureError> {
    let chart = eta.chart().clone();
    let n = chart.dim();
    if n % 2 == 0 {
        return Err(StructureError::EvenDimension(n));
    }
    let deta = calculus::d_oneform(eta);
    let rho = rho_matrix(eta, &deta);
    let rho_inv = linalg::inverse(&rho).ok_or(StructureError::RhoSingular)?;

    // ρ(ξ) = ι_ξ dη − η(ξ)η = −η, so ξ = ρ⁻¹(−η).
    let xi_comps = rho_inv.mul_vec(
        &eta.comps()
            .iter()
            .map(Scalar::neg)
            .collect::<Vec<_>>(),
    );
    let xi = VectorField::new(&chart, xi_comps).map_err(StructureError::Calc)?;
    let reeb_interior = interior_twoform(&xi, &deta).map_err(StructureError::Calc)?;
    if !reeb_interior.is_zero() {
        return Err(StructureError::ReebUnsolvable {
            witness: format!("ι_ξ dη = {reeb_interior}"),
        });
    }
    let normal = pair(eta, &xi).map_err(StructureError::Calc)?;
    if !normal.is_one() {
        return Err(StructureError::ReebUnsolvable {
            witness: format!("η(ξ) = {normal}"),
        });
    }

    // π(dxᵢ, dxⱼ) = dη(ρ⁻¹ dxᵢ, ρ⁻¹ dxⱼ)
    let deta_action = deta.action_matrix();
    let pi = calculus::Bivector::from_pairings(&chart, |i, j| {
        let col_i: Vec<Scalar> = (0..n).map(|k| rho_inv.get(k, i).clone()).collect();
        let col_j: Vec<Scalar> = (0..n).map(|k| rho_inv.get(k, j).clone()).collect();
        let image = deta_action.mul_vec(&col_i);
        let mut acc = Scalar::zero();
        for k in 0..n {
            acc = acc.add(&col_j[k].mul(&image[k]));
        }
        acc
    })
    .map_err(StructureError::Calc)?;

    let endo = GEndo::from_blocks(
        &chart,
        SMat::zero(n, n),
        pi.action_matrix(),
        deta.action_matrix(),
        SMat::zero(n, n),
    );
    Gacs::new(
        endo,
        GVector::from_oneform(eta.clone()),
        GVector::from_vector(xi),
    )
    .map_err(StructureError::Calc)
}

/// The matrix of `ρ(X) = ι_X dη − η(X)η`, mapping vectors to forms:
/// `R[j][i] = (dη)ᵢⱼ − ηᵢ ηⱼ`.
pub fn rho_matrix(eta: &OneForm, deta: &TwoForm) -> SMat {
    let n = eta.chart().dim();
    SMat::from_fn(n, n, |j, i| {
        deta.entry(i, j).sub(&eta.comp(i).mul(eta.comp(j)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{parse_oneform, parse_twoform, parse_vector};

    fn r3() -> Chart {
        Chart::new(&["x", "y", "z"]).unwrap()
    }

    fn gv(text: &str, chart: &Chart) -> GVector {
        GVector::parse(text, chart).unwrap()
    }

    #[test]
    fn neutral_pairing_values() {
        let c = r3();
        let half = Scalar::from_ratio(1, 2);
        assert_eq!(neutral_pairing(&gv("Dx", &c), &gv("dx", &c)).unwrap(), half);
        assert!(
            neutral_pairing(&gv("Dx + dx", &c), &gv("Dx + dx", &c))
                .unwrap()
                .is_one()
        );
        let line = Chart::new(&["t"]).unwrap();
        let p = neutral_pairing(&gv("dt", &line), &gv("Dt", &line)).unwrap();
        assert_eq!(p, Scalar::from_ratio(1, 2));
    }

    #[test]
    fn courant_bracket_examples() {
        let c = r3();
        assert!(courant_bracket(&gv("Dx", &c), &gv("Dy", &c)).unwrap().is_zero());
        // [[Dx, y dx]] = -1/2 dy
        let b = courant_bracket(&gv("Dx", &c), &gv("y*dx", &c)).unwrap();
        assert_eq!(b, gv("-1/2*dy", &c));
        // [[dz - y dx, Dz]] = 0 (contact form against its Reeb field)
        let b2 = courant_bracket(&gv("dz - y*dx", &c), &gv("Dz", &c)).unwrap();
        assert!(b2.is_zero());
    }

    #[test]
    fn courant_bracket_independent_expansion() {
        // oracle: expand each defining term with the direct (non-Cartan)
        // Lie-derivative formula
        let c = r3();
        let a = gv("y*Dx + z*dy", &c);
        let b = gv("x^2*Dz + dx - y*dz", &c);
        let lhs = courant_bracket(&a, &b).unwrap();

        let direct_lie = |x: &VectorField, al: &OneForm| -> OneForm {
            let comps: Vec<Scalar> = (0..3)
                .map(|j| {
                    let mut acc = Scalar::zero();
                    for i in 0..3 {
                        acc = acc.add(&x.comp(i).mul(&al.comp(j).partial(c.coord(i))));
                        acc = acc.add(&al.comp(i).mul(&x.comp(i).partial(c.coord(j))));
                    }
                    acc
                })
                .collect();
            OneForm::new(&c, comps).unwrap()
        };
        let vec = lie_bracket(a.vec(), b.vec()).unwrap();
        let form = direct_lie(a.vec(), b.form())
            .sub(&direct_lie(b.vec(), a.form()))
            .sub(
                &d_scalar(
                    &pair(b.form(), a.vec())
                        .unwrap()
                        .sub(&pair(a.form(), b.vec()).unwrap()),
                    &c,
                )
                .scale(&Scalar::from_ratio(1, 2)),
            );
        let rhs = GVector::new(vec, form).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_antisymmetry_and_anomaly() {
        let c = r3();
        let a = gv("y*Dx + dz", &c);
        let b = gv("Dz + x*dy", &c);
        let ab = courant_bracket(&a, &b).unwrap();
        let ba = courant_bracket(&b, &a).unwrap();
        assert!(ab.add(&ba).is_zero());

        // [[a, f b]] = f [[a,b]] + (X_a f) b − ⟨a,b⟩ df
        let f = c.parse_scalar("x*y + z^2").unwrap();
        let lhs = courant_bracket(&a, &b.scale(&f)).unwrap();
        let xa_f = {
            let mut acc = Scalar::zero();
            for i in 0..3 {
                acc = acc.add(&a.vec().comp(i).mul(&f.partial(c.coord(i))));
            }
            acc
        };
        let pairing = neutral_pairing(&a, &b).unwrap();
        let rhs = ab
            .scale(&f)
            .add(&b.scale(&xa_f))
            .sub(&GVector::from_oneform(d_scalar(&f, &c)).scale(&pairing));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn adjoint_satisfies_pairing_identity() {
        let c = r3();
        // a generic endomorphism: check ⟨Φa, b⟩ = ⟨a, Φ*b⟩ on the full frame
        let m = |k: i64| SMat::from_fn(3, 3, |i, j| Scalar::from_int((i as i64) + k * (j as i64)));
        let phi = GEndo::from_blocks(&c, m(1), m(2), m(3), m(4));
        let adj = phi.adjoint();
        let frame = GVector::coordinate_frame(&c);
        for a in &frame {
            for b in &frame {
                let lhs = neutral_pairing(&phi.apply(a).unwrap(), b).unwrap();
                let rhs = neutral_pairing(a, &adj.apply(b).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        // adjoint of a pure vec→vec block acts as the transpose on forms
        let a_only = GEndo::from_blocks(&c, m(5), SMat::zero(3, 3), SMat::zero(3, 3), SMat::zero(3, 3));
        let adj2 = a_only.adjoint();
        assert!(adj2.vec_vec().is_zero());
        assert_eq!(adj2.form_form(), &m(5).transpose());
    }

    #[test]
    fn tensor_term_convention() {
        let c = r3();
        let xi = gv("Dz", &c);
        let eta = gv("dz", &c);
        // (ξ⊗η)(X + α) = η(X)·ξ
        let t = tensor_term(&xi, &eta).unwrap();
        let probe = gv("Dz + x*Dx + dy", &c);
        assert_eq!(t.apply(&probe).unwrap(), xi);
        // (u⊗v)(b) = 0 when ⟨v, b⟩ = 0
        assert!(t.apply(&gv("Dx + dy", &c)).unwrap().is_zero());
        // (E+⊗E- + E-⊗E+)(E+) = E+ for a triple satisfying the pairing axioms
        let sum = tensor_term(&xi, &eta)
            .unwrap()
            .add(&tensor_term(&eta, &xi).unwrap());
        assert_eq!(sum.apply(&xi).unwrap(), xi);
    }

    #[test]
    fn from_complex_standard_plane() {
        let c2 = Chart::new(&["x", "y"]).unwrap();
        // J: Dx -> Dy, Dy -> -Dx
        let j = SMat::from_rows(vec![
            vec![Scalar::zero(), Scalar::from_int(-1)],
            vec![Scalar::one(), Scalar::zero()],
        ]);
        let gcs = from_complex(&j, &c2).unwrap();
        assert!(gcs.axioms_pass(), "{}", gcs.axioms());
        assert!(gcs.endo().form_vec().is_zero());
        assert!(gcs.endo().vec_form().is_zero());
        // identity matrix is rejected
        let id = SMat::identity(2);
        assert!(matches!(
            from_complex(&id, &c2),
            Err(StructureError::NotComplexMatrix { .. })
        ));
    }

    #[test]
    fn from_symplectic_examples() {
        let c2 = Chart::new(&["x", "y"]).unwrap();
        let w = parse_twoform("dx^dy", &c2).unwrap();
        let gcs = from_symplectic(&w).unwrap();
        assert!(gcs.axioms_pass(), "{}", gcs.axioms());
        // J(Dx) = ι_Dx ω = dy
        let out = gcs.apply(&gv("Dx", &c2)).unwrap();
        assert_eq!(out, gv("dy", &c2));

        let c4 = Chart::new(&["x", "y", "z", "w"]).unwrap();
        let w4 = parse_twoform("dx^dy + dz^dw", &c4).unwrap();
        assert!(from_symplectic(&w4).unwrap().axioms_pass());

        // scaled form: axioms hold as rational-function identities
        let c2b = Chart::new(&["x", "y"]).unwrap();
        let wx = parse_twoform("x*dx^dy", &c2b).unwrap();
        assert!(from_symplectic(&wx).unwrap().axioms_pass());

        // degenerate form refuses
        let c4b = Chart::new(&["x", "y", "z", "w"]).unwrap();
        let degen = parse_twoform("dx^dy", &c4b).unwrap();
        assert!(matches!(
            from_symplectic(&degen),
            Err(StructureError::DegenerateTwoForm)
        ));
    }

    #[test]
    fn from_almost_contact_examples() {
        let c = r3();
        // cosymplectic standard: φ rotation in (x, y), ξ = Dz, η = dz
        let phi = SMat::from_rows(vec![
            vec![Scalar::zero(), Scalar::from_int(-1), Scalar::zero()],
            vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), Scalar::zero()],
        ]);
        let s = from_almost_contact(
            &phi,
            &parse_vector("Dz", &c).unwrap(),
            &parse_oneform("dz", &c).unwrap(),
        )
        .unwrap();
        assert!(s.axioms_pass(), "{}", s.axioms());

        // Darboux-type structure on η = dz − y dx
        let phi2 = SMat::from_rows(vec![
            vec![Scalar::zero(), Scalar::one(), Scalar::zero()],
            vec![Scalar::from_int(-1), Scalar::zero(), Scalar::zero()],
            vec![Scalar::zero(), c.parse_scalar("y").unwrap(), Scalar::zero()],
        ]);
        let s2 = from_almost_contact(
            &phi2,
            &parse_vector("Dz", &c).unwrap(),
            &parse_oneform("dz - y*dx", &c).unwrap(),
        )
        .unwrap();
        assert!(s2.axioms_pass(), "{}", s2.axioms());

        // the flat line structure
        let line = Chart::new(&["t"]).unwrap();
        let s3 = from_almost_contact(
            &SMat::zero(1, 1),
            &parse_vector("Dt", &line).unwrap(),
            &parse_oneform("dt", &line).unwrap(),
        )
        .unwrap();
        assert!(s3.axioms_pass());

        // broken input: ξ not normalized
        let bad = from_almost_contact(
            &phi,
            &parse_vector("2*Dz", &c).unwrap(),
            &parse_oneform("dz", &c).unwrap(),
        );
        assert!(matches!(bad, Err(StructureError::ClassicalAxiom { .. })));
    }

    #[test]
    fn from_contact_darboux() {
        let c = r3();
        let eta = parse_oneform("dz - y*dx", &c).unwrap();
        let deta = calculus::d_oneform(&eta);
        // ρ(Dy) = ι_Dy(dx^dy) − η(Dy)η = −dx
        let rho = rho_matrix(&eta, &deta);
        let col: Vec<Scalar> = (0..3).map(|k| rho.get(k, 1).clone()).collect();
        assert_eq!(col[0], Scalar::from_int(-1));
        assert!(col[1].is_zero() && col[2].is_zero());

        let s = from_contact(&eta).unwrap();
        assert!(s.axioms_pass(), "{}", s.axioms());
        // Reeb field is Dz, E+ = η, E- = ξ
        assert_eq!(s.e_minus(), &gv("Dz", &c));
        assert_eq!(s.e_plus(), &gv("dz - y*dx", &c));
        // dη = dx∧dy sits in the vec→form block
        assert_eq!(s.phi().vec_form(), &deta.action_matrix());

        // η = dz is not contact on ℝ³
        let flat = parse_oneform("dz", &c).unwrap();
        assert!(matches!(from_contact(&flat), Err(StructureError::RhoSingular)));
    }

    #[test]
    fn gacs_axiom_failures_report_witnesses() {
        let c = r3();
        let phi = GEndo::zero(&c);
        let e = gv("Dz", &c);
        let list = check_gacs_axioms(&phi, &e, &e).unwrap();
        assert!(!list.all_pass());
        let failing = list.first_failure().unwrap();
        assert_eq!(failing.id, "gacs.eq2.square");
        // and the pairing axiom fails with 2⟨E+,E-⟩ = 0
        assert!(list
            .iter()
            .any(|ch| ch.id == "gacs.eq3.pairing" && ch.verdict == crate::report::Verdict::Fail));
    }

    #[test]
    fn gcs_isometry_and_eq2_on_frame() {
        // ⟨Ja, Jb⟩ = ⟨a, b⟩ on the coordinate frame for a symplectic lift
        let c2 = Chart::new(&["x", "y"]).unwrap();
        let w = parse_twoform("dx^dy", &c2).unwrap();
        let gcs = from_symplectic(&w).unwrap();
        let frame = GVector::coordinate_frame(&c2);
        for a in &frame {
            for b in &frame {
                let lhs = neutral_pairing(
                    &gcs.apply(a).unwrap(),
                    &gcs.apply(b).unwrap(),
                )
                .unwrap();
                let rhs = neutral_pairing(a, b).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
