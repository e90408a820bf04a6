//! Exact invariants of Calabi-Yau hypersurfaces in weighted projective
//! four-space: graded dimensions, singular curves and their genera, moduli
//! and Hodge bookkeeping, intersection theory on rational scroll models,
//! and stabilizer algebras of general members.

pub mod aut;
pub mod chow;
pub mod error;
pub mod hodge;
pub mod linalg;
pub mod plane;
pub mod poly;
pub mod report;
pub mod strata;
pub mod upoly;
pub mod weights;

pub use aut::{stabilizer_dim, StabilizerSample};
pub use chow::{
    ChernNumbers, ChowClass, ModelKind, NefVerdict, PicardForms, ScrollSpec, ThreefoldModel,
};
pub use error::{Error, Result};
pub use hodge::{HodgeSplit, ModuliCount};
pub use poly::{random_member, Rational, SparsePoly, WireTerm};
pub use report::{analyze, consistency_suite, AnalyzeOptions, FamilyReport, SuiteRow};
pub use strata::{SingularCurve, Stratum};
pub use weights::{
    enumerate_monomials, enumerate_monomials_capped, graded_dim, normalize_weights,
    HypersurfaceFamily, Preset, WeightSystem,
};
