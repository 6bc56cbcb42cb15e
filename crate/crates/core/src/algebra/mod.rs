//! Exact univariate algebra over ℚ and 𝔽_p.

pub mod error;
pub mod factor_fp;
pub mod factor_q;
pub mod factorization;
pub mod field;
pub mod gcd;
pub mod intfactor;
pub mod intpoly;
pub mod poly;
pub mod ratfunc;
pub mod resultant;
pub mod square;
pub mod squarefree;
pub mod valuation;

pub use error::AlgebraError;
pub use factor_fp::{factor_mod_p, factor_mod_p_seeded};
pub use factor_q::factor_over_rationals;
pub use factorization::Factorization;
pub use field::{Field, FpElem, Modulus, Rat};
pub use gcd::poly_gcd;
pub use poly::{FpPoly, Poly, QPoly};
pub use ratfunc::{FpRatFunc, QRatFunc, RatFunc};
pub use resultant::{discriminant, resultant};
pub use square::{is_perfect_square, squarefree_kernel, SquarefreeKernel};
pub use squarefree::{squarefree_decomposition, SquarefreeDecomposition};
pub use valuation::{gauss_valuation, reduce_mod_p, Valuation};
