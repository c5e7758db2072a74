//! Exact symbolic computation for generalized geometry on coordinate charts.
//!
//! The crate builds up, layer by layer:
//!
//! - [`symbolic`] — rational-function scalars with Gaussian-rational
//!   coefficients, exact arithmetic, differentiation and a decidable zero
//!   test;
//! - [`linalg`] — matrices over those scalars with exact Gaussian
//!   elimination (rank, kernel, solve, inverse, determinant);
//! - [`calculus`] — vector fields, one-forms, two-forms and bivectors on a
//!   single chart, with the Cartan operations (Lie bracket, exterior
//!   derivative, interior product, Lie derivative) and product-chart lifts;
//! - [`ggcore`] — the generalized tangent bundle `TM ⊕ T*M`: neutral
//!   pairing, Courant bracket, block endomorphisms, axiom checkers and the
//!   standard constructors (complex, symplectic, almost-contact, contact);
//! - [`integrability`] — eigenbundle frames, span membership over the
//!   function field, involutivity, the Courant–Nijenhuis tensor and the
//!   integrable/strong classification;
//! - [`products`] — product structures on disjoint charts, their
//!   verification reports, and the classical normality correspondence.
//!
//! Everything is immutable and pure: values can be shared freely between
//! threads and every operation returns a fresh value.

pub mod calculus;
pub mod ggcore;
pub mod integrability;
pub mod linalg;
pub mod report;
pub mod symbolic;
