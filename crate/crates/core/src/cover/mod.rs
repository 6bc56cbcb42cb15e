//! Double covers of ℙ¹ attached to sections modulo p, their special fibres,
//! and the resulting two-torsion statement.

mod build;
mod lift;
mod witness;

pub use build::{
    build_cover, build_cover_from_x, build_cover_with_star, divisor_of, CoverData, CoverOutcome,
    IntersectionPoint, PointKind, SpecialFibreReport,
};
pub use lift::{
    j_polynomial, lambda_scan, lift_x, scan_lambdas, Lift, RejectedLambda, DEFAULT_LAMBDA_MAX,
};
pub use witness::{torsion_witness, TorsionWitness};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("prime {p} fails the good-prime check ({}); pass force to proceed", reasons.join("; "))]
    BadPrimeRefused { p: u64, reasons: Vec<String> },
    #[error("x does not give a section modulo {0}")]
    NotASection(u64),
    #[error("the section is 2-torsion (y = 0 modulo p), so the special fibre does not split into two lines")]
    TwoTorsionDegenerate,
    #[error("no lambda in 0..={lambda_max} gives a squarefree J with a nonconstant kernel")]
    ScanExhausted { lambda_max: u64 },
    #[error("prime {0} is not supported (need an odd prime)")]
    UnsupportedPrime(u64),
    #[error("the surface does not reduce modulo {0}")]
    ReductionFails(u64),
    #[error("cover invariant failed: {0}")]
    InvalidCover(String),
}

#[cfg(test)]
mod tests;
