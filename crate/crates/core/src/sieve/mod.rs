//! Good-prime criterion for a surface: per-prime checks and the finite
//! set of primes that can fail them.

pub mod bad_primes;
mod data;
mod ftype;
mod star;

pub use bad_primes::{
    bad_primes, bad_primes_with_budget, BadPrimeSet, Certificate, CertificateKind,
    DEFAULT_FACTOR_BUDGET,
};
pub use ftype::{factorization_type, FactorizationType};
pub use star::{check_star, Chart, FunctionDiagnostic, StarChecker, StarReport};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SieveError {
    #[error("function is not {0}-integral")]
    NonIntegral(u64),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
