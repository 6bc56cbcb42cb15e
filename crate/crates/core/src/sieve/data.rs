use num_bigint::BigInt;

use crate::algebra::intpoly::IntPoly;
use crate::algebra::{factor_over_rationals, QPoly, QRatFunc, Rat};
use crate::weierstrass::WeierstrassSurface;

/// A rational function split over ℚ as `unit · ∏ fᵢ^{mᵢ}` with primitive
/// integer `fᵢ` (positive leading coefficient) and signed multiplicities.
#[derive(Clone, Debug)]
pub(crate) struct SplitFunction {
    pub name: &'static str,
    pub at_infinity: bool,
    /// `None` for the zero function.
    pub unit: Option<Rat>,
    pub factors: Vec<(IntPoly, i64)>,
}

fn int_coeffs(f: &QPoly) -> IntPoly {
    f.coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.numer().clone()
        })
        .collect()
}

pub(crate) fn split_function(name: &'static str, at_infinity: bool, f: &QRatFunc) -> SplitFunction {
    if f.is_zero() {
        return SplitFunction {
            name,
            at_infinity,
            unit: None,
            factors: Vec::new(),
        };
    }
    let num = factor_over_rationals(f.numer()).expect("nonzero");
    let den = factor_over_rationals(f.denom()).expect("nonzero");
    let mut factors: Vec<(IntPoly, i64)> = num
        .factors
        .iter()
        .map(|(q, m)| (int_coeffs(q), *m as i64))
        .collect();
    factors.extend(
        den.factors
            .iter()
            .map(|(q, m)| (int_coeffs(q), -(*m as i64))),
    );
    SplitFunction {
        name,
        at_infinity,
        unit: Some(num.unit / den.unit),
        factors,
    }
}

pub(crate) fn split_surface(s: &WeierstrassSurface) -> Vec<SplitFunction> {
    s.chart_functions()
        .iter()
        .enumerate()
        .map(|(i, (name, f))| {
            if *name == "delta" {
                // reuse the cached factorization of Δ
                let fac = s.delta_factorization();
                let factors = fac
                    .factors
                    .iter()
                    .map(|(q, m)| (int_coeffs(q), *m as i64))
                    .collect();
                SplitFunction {
                    name,
                    at_infinity: false,
                    unit: Some(fac.unit.clone()),
                    factors,
                }
            } else {
                split_function(name, i >= 4, f)
            }
        })
        .collect()
}

pub(crate) fn display_int_poly(f: &[BigInt]) -> String {
    QPoly::from_bigints(f).to_string()
}
