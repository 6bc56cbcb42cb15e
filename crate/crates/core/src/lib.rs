//! Elliptic surfaces `y² = x³ + a₄(t)x + a₆(t)` over ℚ(t): singular fibres,
//! good reduction primes, sections modulo p and their double covers.

pub mod algebra;
pub mod cli;
pub mod cover;
pub mod sections;
pub mod sieve;
pub mod weierstrass;
