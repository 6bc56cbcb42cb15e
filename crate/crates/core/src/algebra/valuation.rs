//! Gauss valuations on ℚ(t) and reduction modulo p.

use std::fmt;

use num_traits::Zero;

use super::error::AlgebraError;
use super::field::{rat_valuation, Modulus, Rat};
use super::poly::{FpPoly, QPoly};
use super::ratfunc::{FpRatFunc, QRatFunc, RatFunc};

/// A valuation value: an integer or +∞ (the valuation of zero).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Valuation::Infinity
    }
}

impl std::ops::Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

/// Minimum p-adic valuation of the coefficients.
pub fn gauss_valuation_poly(a: &QPoly, p: u64) -> Valuation {
    a.coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| rat_valuation(c, p))
        .min()
        .map_or(Valuation::Infinity, Valuation::Finite)
}

/// Gauss valuation `v_p(num) - v_p(den)`; multiplicative, `+∞` only at 0.
pub fn gauss_valuation(a: &QRatFunc, p: u64) -> Valuation {
    match (
        gauss_valuation_poly(a.numer(), p),
        gauss_valuation_poly(a.denom(), p),
    ) {
        (Valuation::Finite(n), Valuation::Finite(d)) => Valuation::Finite(n - d),
        _ => Valuation::Infinity,
    }
}

/// Reduction of a p-integral rational function, in lowest terms over 𝔽_p.
///
/// The denominator is rescaled to a primitive integer polynomial first, so
/// it never reduces to zero; a negative Gauss valuation is `NonIntegral`.
pub fn reduce_mod_p(a: &QRatFunc, p: u64) -> Result<FpRatFunc, AlgebraError> {
    let m = Modulus::new(p).ok_or(AlgebraError::InvalidModulus(p))?;
    if a.is_zero() {
        return Ok(RatFunc::zero(m));
    }
    if gauss_valuation(a, p) < Valuation::Finite(0) {
        return Err(AlgebraError::NonIntegral(p));
    }
    let (cn, n) = a.numer().primitive_decomposition();
    let (cd, d) = a.denom().primitive_decomposition();
    let unit: Rat = cn / cd;
    // v_p(unit) = gauss valuation ≥ 0, so the unit reduces
    let u = m.reduce_rat(&unit).ok_or(AlgebraError::NonIntegral(p))?;
    let nbar = QPoly::from_bigints(&n)
        .reduce(m)
        .expect("integral")
        .scale(&u);
    let dbar = QPoly::from_bigints(&d).reduce(m).expect("integral");
    RatFunc::new(nbar, dbar).map_err(|_| AlgebraError::DenominatorVanishes(p))
}

/// Coefficient-wise reduction of a raw `num / den` pair, without first
/// normalizing. Fails when a coefficient is not p-integral or when the
/// denominator's reduction vanishes.
pub fn reduce_fraction(num: &QPoly, den: &QPoly, p: u64) -> Result<FpRatFunc, AlgebraError> {
    let m = Modulus::new(p).ok_or(AlgebraError::InvalidModulus(p))?;
    let nbar = num.reduce(m).ok_or(AlgebraError::NonIntegral(p))?;
    let dbar = den.reduce(m).ok_or(AlgebraError::NonIntegral(p))?;
    if dbar.is_zero() {
        return Err(AlgebraError::DenominatorVanishes(p));
    }
    RatFunc::new(nbar, dbar)
}

/// Reduction of a polynomial with p-integral coefficients.
pub fn reduce_poly(a: &QPoly, p: u64) -> Result<FpPoly, AlgebraError> {
    let m = Modulus::new(p).ok_or(AlgebraError::InvalidModulus(p))?;
    a.reduce(m).ok_or(AlgebraError::NonIntegral(p))
}
