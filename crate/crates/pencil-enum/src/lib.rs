//! Signed counts of real rational plane cubics through eight point
//! conditions, as a desk-scale witness for the invariance of such counts.
//!
//! The pipeline: sample a real point configuration (r real points, c
//! conjugate pairs, r + 2c = 8), take the pencil F + tG of cubics through
//! it, locate the 12 singular members as roots of a degree-12 discriminant
//! in t, classify each real singular member's node as crossing (+1) or
//! solitary (-1), and sum. Invariance says the sum depends only on (r, c),
//! not on the configuration; `invariance_experiment` tests exactly that
//! across seeded trials.
//!
//! All randomness flows from explicit 64-bit seeds through ChaCha8, so every
//! run of the same experiment is bit-identical.

use thiserror::Error;

pub mod classify;
pub mod config;
pub mod discriminant;
pub mod experiment;
pub mod macaulay;
pub mod pencil;
pub mod poly;
pub mod roots;

pub use classify::{chart_hessian_det, classify_member, MemberClass, NodeType};
pub use config::{interpolation_matrix, sample_config, GenericityCertificate, RealPointConfig};
pub use discriminant::{discriminant_poly, resultant_eval, DiscriminantPoly};
pub use experiment::{
    conic_through_five_points, count_pencil, invariance_experiment, line_through_two_points,
    signed_count, AnalogueReport, ExperimentSummary, MemberRecord, TrialOutcome, TrialRecord,
};
pub use macaulay::{
    macaulay_dets, macaulay_matrix, macaulay_matrix_complex, resultant_value,
    resultant_value_complex,
};
pub use pencil::{pencil_through, Pencil};
pub use poly::{monomial_exponents, HomogeneousPoly};
pub use roots::{poly_roots, PolyRoots};

#[derive(Debug, Error)]
pub enum PencilError {
    #[error("configuration needs r + 2c = {expected} point conditions, got r={r}, c={c}")]
    InvalidArity { r: u32, c: u32, expected: u32 },
    #[error("real configurations need at least one real point")]
    NoRealPoint,
    #[error("need at least {min} trials, got {got}")]
    TooFewTrials { min: u32, got: u32 },
    #[error("degree {degree} needs {expected} coefficients, got {got}")]
    CoefficientArity {
        degree: u32,
        expected: usize,
        got: usize,
    },
    #[error("polynomial degree must be at least 1")]
    DegreeTooSmall,
    #[error("pencil members must be linearly independent")]
    DependentPencil,
    #[error("non-generic configuration: {reason}")]
    NonGeneric { reason: String },
    #[error("gave up after {attempts} resample attempts: {last}")]
    GenericityExhausted { attempts: u32, last: String },
    #[error("Macaulay denominator minor vanishes (|D'| = {denom:.3e})")]
    VanishingDenominator { denom: f64 },
}

impl PencilError {
    /// Whether the error calls for resampling the configuration rather than
    /// aborting the experiment.
    pub fn is_resample_signal(&self) -> bool {
        matches!(
            self,
            PencilError::NonGeneric { .. } | PencilError::VanishingDenominator { .. }
        )
    }
}

/// Numerical thresholds for the whole pipeline. Every default is deliberate
/// slack over double precision at the unit scale the pipeline works in;
/// the CLI can override each one.
#[derive(Debug, Clone)]
pub struct Tolerances {
    /// Relative residual allowed when the pencil is evaluated at its own
    /// interpolation conditions.
    pub interp_residual: f64,
    /// Scaled polynomial residual |p(root)| / Σ|c_j||root|^j after polishing.
    pub root_residual: f64,
    /// Pairwise root distance below which a discriminant is treated as
    /// having a multiple root (resample signal).
    pub cluster: f64,
    /// Relative threshold on the affine Hessian determinant separating
    /// crossing/solitary from degenerate.
    pub hessian: f64,
    /// Relative held-out residual allowed for the discriminant fit.
    pub fit_residual: f64,
    /// Minimal ratio of smallest to largest singular value certifying a
    /// configuration as generic.
    pub genericity: f64,
    /// Relative gradient norm below which the node refinement has converged.
    pub node_residual: f64,
    /// Minimal projective distance between a node and any base condition.
    pub base_distance: f64,
    /// |Im t| below which a polished discriminant root counts as real.
    pub real_root_imag: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            interp_residual: 1e-10,
            root_residual: 1e-8,
            cluster: 1e-5,
            hessian: 1e-8,
            fit_residual: 1e-6,
            genericity: 1e-6,
            node_residual: 1e-8,
            base_distance: 1e-6,
            real_root_imag: 1e-6,
        }
    }
}
