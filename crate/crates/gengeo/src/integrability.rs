//! Eigenbundle frames, span membership over the function field,
//! involutivity, the Courant–Nijenhuis tensor, and the integrable/strong
//! classification of structures.
//!
//! All span questions are settled by exact elimination over the
//! rational-function field, i.e. at a generic point of the chart. Frames are
//! spanning sets: redundant generators are allowed everywhere.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::calculus::{CalcError, Chart};
use crate::ggcore::{courant_bracket, neutral_pairing, GVector, Gacs, Gcs};
use crate::linalg::{self, SMat, SolveOutcome};
use crate::report::CheckList;
use crate::symbolic::Scalar;

#[derive(Clone, Debug, Error)]
pub enum IntegError {
    #[error(transparent)]
    Calc(#[from] CalcError),
    #[error("structure fails its axioms: {0}")]
    AxiomFailure(String),
    #[error("E+ and E- are dependent over the function field")]
    DependentSections,
    #[error(
        "frame is not isotropic (⟨g{i}, g{j}⟩ = {pairing}); refusing an unsound involutivity answer"
    )]
    NonIsotropicFrame {
        i: usize,
        j: usize,
        pairing: String,
    },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// What a frame was built as.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FrameLabel {
    E10,
    LPlus,
    LMinus,
    LBundle,
    Custom,
}

impl fmt::Display for FrameLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameLabel::E10 => write!(f, "E(1,0)"),
            FrameLabel::LPlus => write!(f, "L+"),
            FrameLabel::LMinus => write!(f, "L-"),
            FrameLabel::LBundle => write!(f, "L"),
            FrameLabel::Custom => write!(f, "custom"),
        }
    }
}

/// A finite spanning set of complex sections of `(TM ⊕ T*M) ⊗ ℂ`.
#[derive(Clone, Debug)]
pub struct SubbundleFrame {
    chart: Chart,
    label: FrameLabel,
    generators: Vec<GVector>,
    generic_rank: usize,
}

impl SubbundleFrame {
    /// Wraps generators, recording the generic rank of the component matrix
    /// (computed exactly over the function field).
    pub fn new(chart: &Chart, label: FrameLabel, generators: Vec<GVector>) -> SubbundleFrame {
        for g in &generators {
            assert_eq!(g.chart(), chart, "generator off its chart");
        }
        let generic_rank = if generators.is_empty() {
            0
        } else {
            linalg::rank(&component_matrix(chart, &generators))
        };
        SubbundleFrame {
            chart: chart.clone(),
            label,
            generators,
            generic_rank,
        }
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn label(&self) -> FrameLabel {
        self.label
    }

    pub fn generators(&self) -> &[GVector] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generic_rank(&self) -> usize {
        self.generic_rank
    }

    /// Adjoins one generator, keeping the recorded rank current.
    pub fn with_generator(&self, g: GVector) -> SubbundleFrame {
        let mut gens = self.generators.clone();
        gens.push(g);
        SubbundleFrame::new(&self.chart, self.label, gens)
    }

    /// All mutual neutral pairings vanish identically.
    pub fn isotropy_witness(&self) -> Result<Option<(usize, usize, Scalar)>, CalcError> {
        for i in 0..self.generators.len() {
            for j in i..self.generators.len() {
                let p = neutral_pairing(&self.generators[i], &self.generators[j])?;
                if !p.is_zero() {
                    return Ok(Some((i, j, p)));
                }
            }
        }
        Ok(None)
    }
}

/// Columns are generator components: vector slots stacked over form slots.
fn component_matrix(chart: &Chart, gens: &[GVector]) -> SMat {
    let rows = 2 * chart.dim();
    SMat::from_fn(rows, gens.len(), |i, j| gens[j].component(i).clone())
}

/// Spanning set of the solutions of `⟨E₊, a⟩ = ⟨E₋, a⟩ = 0`, computed by
/// exact elimination. Errors when the two pairing functionals are dependent.
pub fn orthogonal_complement_frame(
    e_plus: &GVector,
    e_minus: &GVector,
) -> Result<SubbundleFrame, IntegError> {
    if e_plus.chart() != e_minus.chart() {
        return Err(IntegError::Calc(CalcError::ChartMismatch(
            e_plus.chart().names(),
            e_minus.chart().names(),
        )));
    }
    let chart = e_plus.chart().clone();
    let n = chart.dim();
    // row k of the system: ⟨E, e_k⟩ over the coordinate frame; the pairing
    // swaps vector and form slots (halving drops out of a homogeneous system)
    let row = |e: &GVector, k: usize| -> Scalar {
        if k < n {
            e.form().comp(k).clone()
        } else {
            e.vec().comp(k - n).clone()
        }
    };
    let system = SMat::from_fn(2, 2 * n, |r, k| {
        if r == 0 {
            row(e_plus, k)
        } else {
            row(e_minus, k)
        }
    });
    if linalg::rank(&system) < 2 {
        return Err(IntegError::DependentSections);
    }
    let kernel = linalg::kernel_basis(&system);
    let gens = kernel
        .into_iter()
        .map(|comps| {
            let vec = crate::calculus::VectorField::new(&chart, comps[..n].to_vec())?;
            let form = crate::calculus::OneForm::new(&chart, comps[n..].to_vec())?;
            GVector::new(vec, form)
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(IntegError::Calc)?;
    Ok(SubbundleFrame::new(&chart, FrameLabel::Custom, gens))
}

fn require_gacs_axioms(s: &Gacs) -> Result<(), IntegError> {
    if s.axioms_pass() {
        Ok(())
    } else {
        let failing = s
            .axioms()
            .first_failure()
            .map(|c| format!("{}: {}", c.id, c.witness))
            .unwrap_or_default();
        Err(IntegError::AxiomFailure(failing))
    }
}

fn require_gcs_axioms(j: &Gcs) -> Result<(), IntegError> {
    if j.axioms_pass() {
        Ok(())
    } else {
        let failing = j
            .axioms()
            .first_failure()
            .map(|c| format!("{}: {}", c.id, c.witness))
            .unwrap_or_default();
        Err(IntegError::AxiomFailure(failing))
    }
}

/// The √−1 eigenbundle frame of Φ: generators `a − i·Φ(a)` for `a` ranging
/// over the orthogonal-complement frame. Every generator is verified to be
/// an eigenvector.
pub fn eigenframe_e10(s: &Gacs) -> Result<SubbundleFrame, IntegError> {
    require_gacs_axioms(s)?;
    let complement = orthogonal_complement_frame(s.e_plus(), s.e_minus())?;
    let mut gens = Vec::with_capacity(complement.len());
    for a in complement.generators() {
        let g = a.sub(&s.phi().apply(a).map_err(IntegError::Calc)?.times_i());
        let residual = s
            .phi()
            .apply(&g)
            .map_err(IntegError::Calc)?
            .sub(&g.times_i());
        if !residual.is_zero() {
            return Err(IntegError::Internal(format!(
                "eigenvector defect: Φ(g) - i·g = {residual}"
            )));
        }
        gens.push(g);
    }
    Ok(SubbundleFrame::new(s.chart(), FrameLabel::E10, gens))
}

/// Which of the two maximal isotropics `L± = L_{E±} ⊕ E^{(1,0)}` to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LSign {
    Plus,
    Minus,
}

/// The frame of `L⁺` or `L⁻`: the kernel line generator adjoined to the
/// eigenbundle frame.
pub fn frame_lpm(s: &Gacs, sign: LSign) -> Result<SubbundleFrame, IntegError> {
    let e10 = eigenframe_e10(s)?;
    let (label, extra) = match sign {
        LSign::Plus => (FrameLabel::LPlus, s.e_plus().clone()),
        LSign::Minus => (FrameLabel::LMinus, s.e_minus().clone()),
    };
    let mut gens = vec![extra];
    gens.extend_from_slice(e10.generators());
    Ok(SubbundleFrame::new(s.chart(), label, gens))
}

/// The √−1 eigenbundle frame of a generalized almost complex structure:
/// generators `a − i·J(a)` over the full coordinate frame.
pub fn eigenframe_l(j: &Gcs) -> Result<SubbundleFrame, IntegError> {
    require_gcs_axioms(j)?;
    let frame = GVector::coordinate_frame(j.chart());
    let mut gens = Vec::with_capacity(frame.len());
    for a in &frame {
        let g = a.sub(&j.apply(a).map_err(IntegError::Calc)?.times_i());
        let residual = j.apply(&g).map_err(IntegError::Calc)?.sub(&g.times_i());
        if !residual.is_zero() {
            return Err(IntegError::Internal(format!(
                "eigenvector defect: J(g) - i·g = {residual}"
            )));
        }
        gens.push(g);
    }
    Ok(SubbundleFrame::new(j.chart(), FrameLabel::LBundle, gens))
}

/// Membership certificate: coefficients on success, the exact residual on
/// failure.
#[derive(Clone, Debug)]
pub struct SpanCertificate {
    pub member: bool,
    pub coefficients: Option<Vec<Scalar>>,
    pub residual: Option<GVector>,
}

/// Decides whether `v` is a rational-function combination of the frame's
/// generators, by exact elimination.
pub fn span_membership(frame: &SubbundleFrame, v: &GVector) -> Result<SpanCertificate, IntegError> {
    if v.chart() != frame.chart() {
        return Err(IntegError::Calc(CalcError::ChartMismatch(
            frame.chart().names(),
            v.chart().names(),
        )));
    }
    let chart = frame.chart();
    let n = chart.dim();
    if frame.is_empty() {
        return Ok(SpanCertificate {
            member: v.is_zero(),
            coefficients: if v.is_zero() { Some(Vec::new()) } else { None },
            residual: if v.is_zero() { None } else { Some(v.clone()) },
        });
    }
    let a = component_matrix(chart, frame.generators());
    let rhs = v.components();
    match linalg::solve(&a, &rhs) {
        SolveOutcome::Solution(coeffs) => Ok(SpanCertificate {
            member: true,
            coefficients: Some(coeffs),
            residual: None,
        }),
        SolveOutcome::Inconsistent { residual, .. } => {
            let vec = crate::calculus::VectorField::new(chart, residual[..n].to_vec())
                .map_err(IntegError::Calc)?;
            let form = crate::calculus::OneForm::new(chart, residual[n..].to_vec())
                .map_err(IntegError::Calc)?;
            Ok(SpanCertificate {
                member: false,
                coefficients: None,
                residual: Some(GVector::new(vec, form).map_err(IntegError::Calc)?),
            })
        }
    }
}

/// A failed involutivity pair with its escaping bracket.
#[derive(Clone, Debug)]
pub struct InvolutivityWitness {
    pub i: usize,
    pub j: usize,
    pub bracket: GVector,
    pub residual: GVector,
}

#[derive(Clone, Debug)]
pub struct InvolutivityOutcome {
    pub involutive: bool,
    pub witness: Option<InvolutivityWitness>,
}

/// Tests closure of the frame's span under the Courant bracket by checking
/// every generator pair.
///
/// A failing pair is always a sound "not involutive" witness. Concluding
/// "involutive" from pair checks alone additionally needs the frame to be
/// isotropic (the anomaly term `⟨gᵢ, gⱼ⟩·df` must stay in the span), so a
/// non-isotropic frame whose pairs all close is refused rather than answered
/// unsoundly.
pub fn is_involutive(frame: &SubbundleFrame) -> Result<InvolutivityOutcome, IntegError> {
    for i in 0..frame.len() {
        for j in (i + 1)..frame.len() {
            let bracket = courant_bracket(&frame.generators()[i], &frame.generators()[j])
                .map_err(IntegError::Calc)?;
            let cert = span_membership(frame, &bracket)?;
            if !cert.member {
                return Ok(InvolutivityOutcome {
                    involutive: false,
                    witness: Some(InvolutivityWitness {
                        i,
                        j,
                        bracket,
                        residual: cert.residual.expect("non-member has residual"),
                    }),
                });
            }
        }
    }
    if let Some((i, j, pairing)) = frame.isotropy_witness().map_err(IntegError::Calc)? {
        return Err(IntegError::NonIsotropicFrame {
            i,
            j,
            pairing: pairing.to_string(),
        });
    }
    Ok(InvolutivityOutcome {
        involutive: true,
        witness: None,
    })
}

/// The Courant–Nijenhuis tensor
/// `N(a,b) = [[Ja, Jb]] − J[[a, Jb]] − J[[Ja, b]] + J²[[a, b]]`.
pub fn nijenhuis(j: &Gcs, a: &GVector, b: &GVector) -> Result<GVector, IntegError> {
    let ja = j.apply(a).map_err(IntegError::Calc)?;
    let jb = j.apply(b).map_err(IntegError::Calc)?;
    let t1 = courant_bracket(&ja, &jb).map_err(IntegError::Calc)?;
    let t2 = j
        .apply(&courant_bracket(a, &jb).map_err(IntegError::Calc)?)
        .map_err(IntegError::Calc)?;
    let t3 = j
        .apply(&courant_bracket(&ja, b).map_err(IntegError::Calc)?)
        .map_err(IntegError::Calc)?;
    let ab = courant_bracket(a, b).map_err(IntegError::Calc)?;
    let t4 = j
        .apply(&j.apply(&ab).map_err(IntegError::Calc)?)
        .map_err(IntegError::Calc)?;
    Ok(t1.sub(&t2).sub(&t3).add(&t4))
}

/// Integrability verdict with the full dual-route evidence.
#[derive(Clone, Debug)]
pub struct IntegrabilityReport {
    pub integrable: bool,
    /// Both criteria agreed; a `false` here is an internal inconsistency,
    /// not a finding about the structure.
    pub consistent: bool,
    pub checks: CheckList,
    /// A nonzero tensor value when the Nijenhuis route fails.
    pub nijenhuis_witness: Option<(String, GVector)>,
}

/// Decides integrability twice — Nijenhuis tensor on all coordinate-frame
/// pairs, and involutivity of the eigenbundle frame — and insists the
/// verdicts agree. Tensoriality of the tensor is spot-checked on seeded
/// random inputs rather than assumed.
pub fn is_integrable_gcs(j: &Gcs, seed: u64) -> Result<IntegrabilityReport, IntegError> {
    require_gcs_axioms(j)?;
    let chart = j.chart().clone();
    let frame = GVector::coordinate_frame(&chart);
    let mut checks = CheckList::new();

    let frame_name = |k: usize| -> String {
        let n = chart.dim();
        if k < n {
            format!("D{}", chart.coord(k))
        } else {
            format!("d{}", chart.coord(k - n))
        }
    };

    let mut nijenhuis_witness = None;
    'outer: for a in 0..frame.len() {
        for b in (a + 1)..frame.len() {
            let value = nijenhuis(j, &frame[a], &frame[b])?;
            if !value.is_zero() {
                nijenhuis_witness = Some((
                    format!("N({}, {})", frame_name(a), frame_name(b)),
                    value,
                ));
                break 'outer;
            }
        }
    }
    let tensor_zero = nijenhuis_witness.is_none();
    match &nijenhuis_witness {
        None => checks.pass(
            "nijenhuis.frame-pairs",
            "N vanishes on all coordinate-frame pairs",
        ),
        Some((name, value)) => checks.fail(
            "nijenhuis.frame-pairs",
            "N vanishes on all coordinate-frame pairs",
            &format!("{name} = {value}"),
        ),
    }

    let l_frame = eigenframe_l(j)?;
    let outcome = is_involutive(&l_frame)?;
    match &outcome.witness {
        None => checks.pass(
            "eigenbundle.involutive",
            "the √-1 eigenbundle is closed under the Courant bracket",
        ),
        Some(w) => checks.fail(
            "eigenbundle.involutive",
            "the √-1 eigenbundle is closed under the Courant bracket",
            &format!(
                "[[g{}, g{}]] escapes the span; residual = {}",
                w.i, w.j, w.residual
            ),
        ),
    }

    let consistent = tensor_zero == outcome.involutive;
    checks.record(
        "criteria.agree",
        "Nijenhuis and eigenbundle verdicts agree",
        consistent,
        &format!(
            "nijenhuis-zero = {tensor_zero}, involutive = {}",
            outcome.involutive
        ),
    );

    // tensoriality spot-check: N(f·a, b) = f·N(a, b)
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tensorial = true;
    let mut tensorial_witness = String::new();
    for _ in 0..4 {
        let a = &frame[rng.gen_range(0..frame.len())];
        let b = &frame[rng.gen_range(0..frame.len())];
        let f = Scalar::random_polynomial(chart.coords(), 2, &mut rng);
        let lhs = nijenhuis(j, &a.scale(&f), b)?;
        let rhs = nijenhuis(j, a, b)?.scale(&f);
        let diff = lhs.sub(&rhs);
        if !diff.is_zero() {
            tensorial = false;
            tensorial_witness = format!("N(f·a, b) - f·N(a, b) = {diff} for f = {f}");
            break;
        }
    }
    if !tensorial {
        return Err(IntegError::Internal(format!(
            "Nijenhuis tensor is not tensorial: {tensorial_witness}"
        )));
    }
    checks.pass(
        "nijenhuis.tensoriality",
        "N(f·a, b) = f·N(a, b) on seeded random inputs",
    );

    Ok(IntegrabilityReport {
        integrable: tensor_zero,
        consistent,
        checks,
        nijenhuis_witness,
    })
}

use rand::Rng;

/// The four-way classification of a generalized almost contact structure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GacsClass {
    NotIntegrable,
    ViaLPlusOnly,
    ViaLMinusOnly,
    Strong,
}

impl GacsClass {
    pub fn is_integrable(self) -> bool {
        self != GacsClass::NotIntegrable
    }

    pub fn is_strong(self) -> bool {
        self == GacsClass::Strong
    }
}

impl fmt::Display for GacsClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GacsClass::NotIntegrable => write!(f, "not integrable"),
            GacsClass::ViaLPlusOnly => write!(f, "integrable via L+ only"),
            GacsClass::ViaLMinusOnly => write!(f, "integrable via L- only"),
            GacsClass::Strong => write!(f, "strong"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyReport {
    pub class: GacsClass,
    pub plus_involutive: bool,
    pub minus_involutive: bool,
    pub checks: CheckList,
}

/// Runs involutivity on both `L±` frames and maps the verdict pair to the
/// four-way classification.
pub fn classify_gacs(s: &Gacs) -> Result<ClassifyReport, IntegError> {
    require_gacs_axioms(s)?;
    let mut checks = CheckList::new();
    let mut outcomes = [false, false];
    for (idx, sign) in [LSign::Plus, LSign::Minus].into_iter().enumerate() {
        let frame = frame_lpm(s, sign)?;
        let outcome = is_involutive(&frame)?;
        outcomes[idx] = outcome.involutive;
        let id = match sign {
            LSign::Plus => "classify.l-plus",
            LSign::Minus => "classify.l-minus",
        };
        let desc = match sign {
            LSign::Plus => "L+ is involutive",
            LSign::Minus => "L- is involutive",
        };
        match &outcome.witness {
            None => checks.pass_with(id, desc, "involutive (derived)"),
            Some(w) => checks.pass_with(
                id,
                desc,
                &format!(
                    "not involutive: [[g{}, g{}]] has residual {} outside the span",
                    w.i, w.j, w.residual
                ),
            ),
        }
    }
    let class = match (outcomes[0], outcomes[1]) {
        (true, true) => GacsClass::Strong,
        (true, false) => GacsClass::ViaLPlusOnly,
        (false, true) => GacsClass::ViaLMinusOnly,
        (false, false) => GacsClass::NotIntegrable,
    };
    checks.pass_with("classify.verdict", "classification", &class.to_string());
    Ok(ClassifyReport {
        class,
        plus_involutive: outcomes[0],
        minus_involutive: outcomes[1],
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{parse_oneform, parse_twoform, parse_vector};
    use crate::ggcore::{from_almost_contact, from_contact, from_symplectic};

    fn r3() -> Chart {
        Chart::new(&["x", "y", "z"]).unwrap()
    }

    fn gv(text: &str, chart: &Chart) -> GVector {
        GVector::parse(text, chart).unwrap()
    }

    fn cosymplectic(chart: &Chart) -> Gacs {
        let phi = SMat::from_rows(vec![
            vec![Scalar::zero(), Scalar::from_int(-1), Scalar::zero()],
            vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), Scalar::zero()],
        ]);
        from_almost_contact(
            &phi,
            &parse_vector("Dz", chart).unwrap(),
            &parse_oneform("dz", chart).unwrap(),
        )
        .unwrap()
    }

    fn line_structure() -> Gacs {
        let line = Chart::new(&["t"]).unwrap();
        from_almost_contact(
            &SMat::zero(1, 1),
            &parse_vector("Dt", &line).unwrap(),
            &parse_oneform("dt", &line).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn complement_frames() {
        // on the line the complement is empty
        let line = line_structure();
        let empty =
            orthogonal_complement_frame(line.e_plus(), line.e_minus()).unwrap();
        assert_eq!(empty.len(), 0);
        assert_eq!(empty.generic_rank(), 0);

        // cosymplectic standard: complement spans {Dx, Dy, dx, dy}
        let c = r3();
        let s = cosymplectic(&c);
        let comp = orthogonal_complement_frame(s.e_plus(), s.e_minus()).unwrap();
        assert_eq!(comp.generic_rank(), 4);
        let expected = SubbundleFrame::new(
            &c,
            FrameLabel::Custom,
            vec![gv("Dx", &c), gv("Dy", &c), gv("dx", &c), gv("dy", &c)],
        );
        for g in comp.generators() {
            assert!(span_membership(&expected, g).unwrap().member);
        }
        for g in expected.generators() {
            assert!(span_membership(&comp, g).unwrap().member);
        }

        // the contact example: every member pairs to zero with E±
        let eta = parse_oneform("dz - y*dx", &c).unwrap();
        let t = from_contact(&eta).unwrap();
        let comp2 = orthogonal_complement_frame(t.e_plus(), t.e_minus()).unwrap();
        assert_eq!(comp2.generic_rank(), 4);
        for g in comp2.generators() {
            assert!(neutral_pairing(t.e_plus(), g).unwrap().is_zero());
            assert!(neutral_pairing(t.e_minus(), g).unwrap().is_zero());
        }

        // dependent sections refuse
        let e = gv("Dz", &c);
        assert!(matches!(
            orthogonal_complement_frame(&e, &e),
            Err(IntegError::DependentSections)
        ));
    }

    #[test]
    fn eigenframe_e10_properties() {
        let c = r3();
        let s = cosymplectic(&c);
        let e10 = eigenframe_e10(&s).unwrap();
        assert_eq!(e10.generic_rank(), 2);
        // span contains Dx - i Dy and dx - i dy
        for text in ["Dx - i*Dy", "dx - i*dy"] {
            assert!(span_membership(&e10, &gv(text, &c)).unwrap().member);
        }
        // Lemma 1 on generators: ⟨E±, g⟩ = 0
        for g in e10.generators() {
            assert!(neutral_pairing(s.e_plus(), g).unwrap().is_zero());
            assert!(neutral_pairing(s.e_minus(), g).unwrap().is_zero());
        }

        // the line structure has an empty eigenbundle; L+ is the span of E+
        let line = line_structure();
        let e10_line = eigenframe_e10(&line).unwrap();
        assert!(e10_line.is_empty());
        let lp = frame_lpm(&line, LSign::Plus).unwrap();
        assert_eq!(lp.len(), 1);
        assert_eq!(lp.generators()[0], *line.e_plus());
    }

    #[test]
    fn eigenframe_l_ranks() {
        let c2 = Chart::new(&["x", "y"]).unwrap();
        let w = parse_twoform("dx^dy", &c2).unwrap();
        let j = from_symplectic(&w).unwrap();
        let l = eigenframe_l(&j).unwrap();
        assert_eq!(l.generic_rank(), 2);
        assert_eq!(l.len(), 4);
        // isotropy of the eigenbundle
        assert!(l.isotropy_witness().unwrap().is_none());
    }

    #[test]
    fn span_membership_certificates() {
        let c = r3();
        let f = SubbundleFrame::new(
            &c,
            FrameLabel::Custom,
            vec![gv("dx", &c), gv("dy", &c)],
        );
        let cert = span_membership(&f, &gv("dy", &c)).unwrap();
        assert!(cert.member);
        let coeffs = cert.coefficients.unwrap();
        assert!(coeffs[0].is_zero());
        assert!(coeffs[1].is_one());

        // module coefficients over the functions
        let fx = SubbundleFrame::new(&c, FrameLabel::Custom, vec![gv("dx", &c)]);
        let cert2 = span_membership(&fx, &gv("y*dx", &c)).unwrap();
        assert!(cert2.member);
        assert_eq!(
            cert2.coefficients.unwrap()[0],
            c.parse_scalar("y").unwrap()
        );

        // non-membership leaves the dy residual
        let g = SubbundleFrame::new(
            &c,
            FrameLabel::Custom,
            vec![gv("Dx", &c), gv("dz - y*dx", &c)],
        );
        let cert3 = span_membership(&g, &gv("1/2*dy", &c)).unwrap();
        assert!(!cert3.member);
        assert_eq!(cert3.residual.unwrap(), gv("1/2*dy", &c));
    }

    #[test]
    fn involutivity_examples() {
        let c = r3();
        let coords = SubbundleFrame::new(
            &c,
            FrameLabel::Custom,
            vec![gv("Dx", &c), gv("Dy", &c)],
        );
        assert!(is_involutive(&coords).unwrap().involutive);

        // a failing pair is reported with its residual even though the
        // frame is not isotropic
        let bad = SubbundleFrame::new(
            &c,
            FrameLabel::Custom,
            vec![gv("Dx", &c), gv("dz - y*dx", &c)],
        );
        let outcome = is_involutive(&bad).unwrap();
        assert!(!outcome.involutive);
        let w = outcome.witness.unwrap();
        assert_eq!(w.residual, gv("1/2*dy", &c));

        // non-isotropic frame whose pairs all close is refused
        let closed_not_isotropic = SubbundleFrame::new(
            &c,
            FrameLabel::Custom,
            vec![gv("Dx", &c), gv("dx", &c), gv("dy", &c)],
        );
        assert!(matches!(
            is_involutive(&closed_not_isotropic),
            Err(IntegError::NonIsotropicFrame { .. })
        ));

        // L+ of the cosymplectic structure is involutive
        let s = cosymplectic(&c);
        let lp = frame_lpm(&s, LSign::Plus).unwrap();
        assert!(is_involutive(&lp).unwrap().involutive);
    }

    #[test]
    fn nijenhuis_examples() {
        let c2 = Chart::new(&["x", "y"]).unwrap();
        let w = parse_twoform("dx^dy", &c2).unwrap();
        let j = from_symplectic(&w).unwrap();
        let a = gv("Dx + y*dx", &c2);
        assert!(nijenhuis(&j, &a, &a).unwrap().is_zero());
        assert!(nijenhuis(&j, &gv("Dx", &c2), &gv("Dy", &c2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn integrability_dual_route() {
        let c2 = Chart::new(&["x", "y"]).unwrap();
        let flat = from_symplectic(&parse_twoform("dx^dy", &c2).unwrap()).unwrap();
        let report = is_integrable_gcs(&flat, 0).unwrap();
        assert!(report.integrable && report.consistent);

        // a plane chart is rigid: every two-form is closed, so even a
        // variable-coefficient area form gives an integrable structure
        let curved =
            from_symplectic(&parse_twoform("(1 + x^2)*dx^dy", &c2).unwrap()).unwrap();
        let report2 = is_integrable_gcs(&curved, 0).unwrap();
        assert!(report2.integrable && report2.consistent);

        // in four dimensions a non-closed form obstructs:
        // d(dx∧dy + (1+x²) dz∧dw) = 2x dx∧dz∧dw ≠ 0
        let c4 = Chart::new(&["x", "y", "z", "w"]).unwrap();
        let nonclosed =
            from_symplectic(&parse_twoform("dx^dy + (1 + x^2)*dz^dw", &c4).unwrap()).unwrap();
        assert!(nonclosed.axioms_pass());
        let report3 = is_integrable_gcs(&nonclosed, 0).unwrap();
        assert!(!report3.integrable);
        assert!(report3.consistent);
        let (name, value) = report3.nijenhuis_witness.unwrap();
        assert!(!value.is_zero(), "witness {name} should be nonzero");
    }

    #[test]
    fn classification_examples() {
        // the line structure is strong
        let line = line_structure();
        let report = classify_gacs(&line).unwrap();
        assert_eq!(report.class, GacsClass::Strong);

        // cosymplectic standard is strong
        let c = r3();
        let report2 = classify_gacs(&cosymplectic(&c)).unwrap();
        assert_eq!(report2.class, GacsClass::Strong);

        // the Darboux contact structure is integrable but not strong
        let eta = parse_oneform("dz - y*dx", &c).unwrap();
        let t = from_contact(&eta).unwrap();
        let report3 = classify_gacs(&t).unwrap();
        assert!(report3.class.is_integrable());
        assert!(!report3.class.is_strong());
    }
}
