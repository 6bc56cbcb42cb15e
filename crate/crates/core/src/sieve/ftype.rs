use std::fmt;

use crate::algebra::field::rat_valuation;
use crate::algebra::{factor_mod_p, gauss_valuation, reduce_mod_p, FpPoly, QRatFunc, Valuation};

use super::data::split_function;
use super::SieveError;

/// Unit valuation plus the sorted multiset of `(degree, multiplicity)`;
/// denominators contribute negative multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationType {
    pub unit_valuation: i64,
    pub parts: Vec<(usize, i64)>,
}

impl fmt::Display for FactorizationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v(unit)={} [", self.unit_valuation)?;
        for (i, (d, m)) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}^{m}")?;
        }
        f.write_str("]")
    }
}

fn fp_parts(a: &FpPoly, sign: i64, out: &mut Vec<(usize, i64)>) {
    if a.is_constant() {
        return;
    }
    for (q, m) in factor_mod_p(a).expect("nonzero").factors {
        out.push((q.degree().unwrap_or(0), sign * m as i64));
    }
}

/// Factorization type of `f` over ℚ and of its reduction over 𝔽_p, and
/// whether reduction preserves it.
pub fn factorization_type(
    f: &QRatFunc,
    p: u64,
) -> Result<(FactorizationType, FactorizationType, bool), SieveError> {
    let m =
        crate::algebra::Modulus::new(p).ok_or(crate::algebra::AlgebraError::InvalidModulus(p))?;
    if gauss_valuation(f, p) < Valuation::Finite(0) {
        return Err(SieveError::NonIntegral(p));
    }
    let split = split_function("f", false, f);
    let Some(unit) = &split.unit else {
        let empty = FactorizationType {
            unit_valuation: 0,
            parts: Vec::new(),
        };
        return Ok((empty.clone(), empty, true));
    };
    let mut q_parts: Vec<(usize, i64)> = split
        .factors
        .iter()
        .map(|(g, k)| (g.len() - 1, *k))
        .collect();
    q_parts.sort();
    let over_q = FactorizationType {
        unit_valuation: rat_valuation(unit, p),
        parts: q_parts,
    };

    let fbar = reduce_mod_p(f, p)?;
    let mut fp = Vec::new();
    fp_parts(fbar.numer(), 1, &mut fp);
    fp_parts(fbar.denom(), -1, &mut fp);
    fp.sort();
    let over_p = FactorizationType {
        unit_valuation: 0,
        parts: fp,
    };

    let preserved = super::star::split_preserved(&split, m).is_ok();
    Ok((over_q, over_p, preserved))
}
