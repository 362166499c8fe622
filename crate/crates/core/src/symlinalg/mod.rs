//! Dense exact linear algebra: fraction-free elimination, kernels, and
//! probabilistic rank certificates over prime-field specializations.

mod elim;
mod mat;
mod pit;

pub use elim::{bareiss_rank, kernel_basis, lin_solve, lin_solve_columns, sym_det, RankProfile};
pub use mat::Mat;
pub use pit::{pit_rank_certify, RankCertificate};

use thiserror::Error;

use crate::exactmath::ArithError;

/// Errors from exact linear algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    /// A division inside fraction-free elimination was not exact. Bareiss
    /// divisions are exact by construction, so this indicates a bug in the
    /// scalar implementation, never bad input.
    #[error("exact division failed during fraction-free elimination: {0}")]
    ExactDivisionFailure(ArithError),

    /// A random specialization exceeded the claimed rank bound, refuting the
    /// claim. Carries the witness: the trial index, the evaluation point, and
    /// the observed rank.
    #[error("rank claim refuted: trial {trial} observed rank {observed_rank} > claimed {claimed_max_rank}")]
    ClaimRefuted {
        claimed_max_rank: usize,
        observed_rank: usize,
        trial: u32,
        point: Vec<u64>,
    },

    /// A coefficient had no image modulo the chosen prime.
    #[error("bad prime for specialization: {0}")]
    BadPrime(ArithError),

    /// Matrix dimensions do not match the operation.
    #[error("shape mismatch: {detail}")]
    ShapeMismatch { detail: String },

    /// Underlying scalar arithmetic failed (arity mismatch etc.).
    #[error("scalar arithmetic failed: {0}")]
    Arith(#[from] ArithError),
}
