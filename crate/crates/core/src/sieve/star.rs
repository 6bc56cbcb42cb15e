use std::fmt;

use crate::algebra::field::rat_valuation;
use crate::algebra::{FpPoly, Modulus, Poly};
use crate::weierstrass::WeierstrassSurface;

use super::data::{display_int_poly, split_surface, SplitFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chart {
    /// `U = Spec ℚ[t]`
    Affine,
    /// `U' = Spec ℚ[s]`, `s = 1/t`
    Infinity,
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chart::Affine => "U",
            Chart::Infinity => "U'",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionDiagnostic {
    pub function: &'static str,
    pub chart: Chart,
    pub integral: bool,
    pub preserved: bool,
    pub reason: Option<String>,
}

impl FunctionDiagnostic {
    pub fn passes(&self) -> bool {
        self.integral && self.preserved
    }
}

/// Outcome of the good-prime check at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarReport {
    pub p: u64,
    pub verdict: bool,
    /// Clause (1): `p ∉ {2, 3}`.
    pub residue_characteristic_ok: bool,
    /// Empty at `p = 2`, where reduction is not supported.
    pub diagnostics: Vec<FunctionDiagnostic>,
    /// Over ℚ the ramification index is 1 ≤ p − 1, so (**) coincides with (*).
    pub double_star: bool,
    pub double_star_derivation: String,
}

impl StarReport {
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.residue_characteristic_ok {
            out.push(format!("residue characteristic {} is 2 or 3", self.p));
        }
        for d in self.diagnostics.iter().filter(|d| !d.passes()) {
            out.push(format!(
                "{} on {}: {}",
                d.function,
                d.chart,
                d.reason.as_deref().unwrap_or("failed")
            ));
        }
        out
    }
}

fn reduce_int_poly(f: &[num_bigint::BigInt], m: Modulus) -> FpPoly {
    Poly::new(m, f.iter().map(|c| m.reduce_int(c)).collect())
}

/// Checks that every ℚ-factor keeps its degree, stays separable and stays
/// coprime to the others, and that the unit survives. Zero always passes.
pub(crate) fn split_preserved(f: &SplitFunction, m: Modulus) -> Result<(), (bool, String)> {
    let Some(unit) = &f.unit else {
        return Ok(());
    };
    let p = m.get();
    let v = rat_valuation(unit, p);
    if v < 0 {
        return Err((false, format!("unit {unit} is not {p}-integral")));
    }
    if v > 0 {
        return Err((true, format!("unit {unit} vanishes mod {p}")));
    }
    let mut reduced = Vec::with_capacity(f.factors.len());
    for (g, _) in &f.factors {
        let gbar = reduce_int_poly(g, m);
        if gbar.degree() != Some(g.len() - 1) {
            return Err((
                true,
                format!("factor {} drops degree mod {p}", display_int_poly(g)),
            ));
        }
        if gbar.degree() > Some(1) && !gbar.gcd(&gbar.derivative()).is_constant() {
            return Err((
                true,
                format!("factor {} is inseparable mod {p}", display_int_poly(g)),
            ));
        }
        reduced.push(gbar);
    }
    for i in 0..reduced.len() {
        for j in (i + 1)..reduced.len() {
            if !reduced[i].gcd(&reduced[j]).is_constant() {
                return Err((
                    true,
                    format!(
                        "factors {} and {} share a root mod {p}",
                        display_int_poly(&f.factors[i].0),
                        display_int_poly(&f.factors[j].0)
                    ),
                ));
            }
        }
    }
    Ok(())
}

/// Caches the ℚ-factorizations of the eight chart functions so that many
/// primes can be checked cheaply.
#[derive(Clone, Debug)]
pub struct StarChecker {
    functions: Vec<SplitFunction>,
}

impl StarChecker {
    pub fn new(s: &WeierstrassSurface) -> Self {
        StarChecker {
            functions: split_surface(s),
        }
    }

    pub(crate) fn functions(&self) -> &[SplitFunction] {
        &self.functions
    }

    pub fn check(&self, p: u64) -> StarReport {
        let residue_characteristic_ok = p != 2 && p != 3;
        let mut diagnostics = Vec::new();
        if let Some(m) = Modulus::new(p) {
            for f in &self.functions {
                let chart = if f.at_infinity {
                    Chart::Infinity
                } else {
                    Chart::Affine
                };
                let (integral, preserved, reason) = match split_preserved(f, m) {
                    Ok(()) => (true, true, None),
                    Err((integral, why)) => (integral, false, Some(why)),
                };
                diagnostics.push(FunctionDiagnostic {
                    function: f.name,
                    chart,
                    integral,
                    preserved,
                    reason,
                });
            }
        }
        let verdict = residue_characteristic_ok
            && !diagnostics.is_empty()
            && diagnostics.iter().all(|d| d.passes());
        StarReport {
            p,
            verdict,
            residue_characteristic_ok,
            diagnostics,
            double_star: verdict,
            double_star_derivation: format!(
                "e = 1 <= p - 1 = {}, so (**) holds iff (*) holds",
                p.saturating_sub(1)
            ),
        }
    }
}

pub fn check_star(s: &WeierstrassSurface, p: u64) -> StarReport {
    StarChecker::new(s).check(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QPoly;

    fn e3() -> WeierstrassSurface {
        WeierstrassSurface::from_polys(QPoly::from_ints(&[0]), QPoly::from_ints(&[0, 0, -1]))
            .unwrap()
    }

    #[test]
    fn spec_examples() {
        let s = e3();
        let r = check_star(&s, 5);
        assert!(r.verdict && r.double_star);
        assert_eq!(r.diagnostics.len(), 8);
        let r = check_star(&s, 3);
        assert!(!r.verdict);
        assert!(!r.residue_characteristic_ok);
        let delta = r
            .diagnostics
            .iter()
            .find(|d| d.function == "delta")
            .unwrap();
        assert!(!delta.preserved);
        assert!(delta.reason.as_ref().unwrap().contains("vanishes"));
        let r = check_star(&s, 2);
        assert!(!r.verdict);
        assert!(r.diagnostics.is_empty());
    }

    #[test]
    fn factor_collision_fails() {
        // a6 = t^2 - 5: the factor t^2 - 5 is inseparable mod 5
        let s =
            WeierstrassSurface::from_polys(QPoly::from_ints(&[0]), QPoly::from_ints(&[-5, 0, 1]))
                .unwrap();
        let r = check_star(&s, 5);
        assert!(!r.verdict);
        assert!(check_star(&s, 7).verdict);
    }
}
