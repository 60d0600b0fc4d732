//! Exact noncommutative *-polynomials, presentations and normal forms.

pub mod coef;
pub mod gaussian;
pub mod idempotent;
pub mod ncpoly;
pub mod parse;
pub mod presentation;
pub mod rewrite;

pub use coef::{CoefPoly, Exponent, Param};
pub use gaussian::gaussian_binomial;
pub use idempotent::{
    build_en, build_en_with, podles_eta, podles_relation_defects, podles_zeta, LineBundleData,
    SymMatrix, YAssignment, EN_CAP,
};
pub use ncpoly::{Letter, NCPoly, Word};
pub use parse::{parse_polynomial, parse_presentation, to_text};
pub use presentation::{
    circle_algebra, presets, quantum_disc, quantum_disc_in, quantum_sphere_s2, quantum_sphere_s3,
    quantum_su2, Generator, Presentation, PresentationBuilder, Rule,
};
pub use rewrite::{
    is_reduced, normal_form, normal_form_with, verify_identity, IdentityCheck, ReduceOptions,
    ReductionOrder, DEFAULT_STEP_LIMIT,
};
