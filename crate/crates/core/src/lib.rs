//! Exact computational Lie theory for parabolic geometries.
//!
//! The crate classifies standard invariant differential operators on
//! parabolic geometries and produces the universal curvature-corrected
//! formulae they satisfy. Everything is computed over exact rationals:
//!
//! - [`lie`] — Cartan data, root systems, invariant forms, Weyl orbits;
//! - [`parabolic`] — crossed-diagram gradings, Levi data, p-dominance;
//! - [`tensor`] — Freudenthal weight multiplicities and Klimyk tensor
//!   decompositions over a Levi factor;
//! - [`casimir`] — Casimir scalars and the eigenvalue spectra driving
//!   operator invariance;
//! - [`classify`] — existence classification of standard operators and
//!   labelled BGG Hasse graphs;
//! - [`formula`] — the symbolic expansion of the order-k universal
//!   formulae as integer-weighted words in D and Γ.

pub mod casimir;
pub mod classify;
pub mod error;
pub mod formula;
pub mod lie;
pub mod parabolic;
pub mod tensor;

#[cfg(any(test, feature = "testutil"))]
pub mod testutil;

pub use casimir::{casimir_scalar, gamma_coefficient, psi_eigenvalue, psi_spectrum, PsiSpectrum};
pub use classify::{
    bgg_edges, bgg_vertices, classify_pair, telescoping_report, Classification, HasseEdge,
    HasseGraph, OperatorDescriptor, RejectReason,
};
pub use error::Error;
pub use formula::{expand_dk, expand_dk_capped, FormulaTerm, RenderFormat, UniversalFormula};
pub use lie::{
    coroot_pairing, delta, invariant_form, parse_dynkin, positive_roots, reflect, weyl_orbit,
    CartanDatum, InvariantForm, LengthClass, Root, Series, Weight,
};
pub use parabolic::{
    f_star_components, grading, is_p_dominant, FStarComponent, GradingReport, ParabolicDatum,
};
pub use tensor::{klimyk_decompose, IsotypicComponent, LeviContext};

/// Exact rational scalar used throughout the crate.
pub type Q = num::BigRational;
/// Arbitrary-precision integer used for formula coefficients.
pub type Z = num::BigInt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
