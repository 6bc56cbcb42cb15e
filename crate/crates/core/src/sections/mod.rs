//! Sections of the reduced surface over 𝔽_p(t).

use std::cmp::Ordering;

use thiserror::Error;

use crate::algebra::square::poly_sqrt;
use crate::algebra::valuation::reduce_poly;
use crate::algebra::{
    is_perfect_square, AlgebraError, FpElem, FpPoly, FpRatFunc, Modulus, Poly, RatFunc,
};
use crate::weierstrass::{weierstrass_rhs, WeierstrassSurface};

/// Largest number of candidates `search_sections` will enumerate by default.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SectionError {
    #[error("prime {0} is not supported (need an odd prime)")]
    UnsupportedPrime(u64),
    #[error("the surface does not reduce modulo {0}")]
    ReductionFails(u64),
    #[error("search space has {candidates} candidates, over the budget of {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },
}

/// A point `(x, y)` on the generic fibre over 𝔽_p(t). The sign of `y` is
/// normalized so that its leading residue lies in `[1, p/2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionModP {
    pub x: FpRatFunc,
    pub y: FpRatFunc,
}

impl SectionModP {
    /// `x = A/B²` as `(A, B)` with `B` monic.
    pub fn x_parts(&self) -> (FpPoly, FpPoly) {
        let b = poly_sqrt(self.x.denom()).expect("x has a square denominator");
        (self.x.numer().clone(), b)
    }

    pub fn negate(&self) -> SectionModP {
        SectionModP {
            x: self.x.clone(),
            y: -&self.y,
        }
    }

    /// Re-checks `y² = x³ + a₄x + a₆` over 𝔽_p(t).
    pub fn verify(&self, s: &WeierstrassSurface) -> bool {
        let m = self.x.ctx();
        match reduced_coefficients(s, m.get()) {
            Ok((a4, a6)) => self.y.pow(2) == weierstrass_rhs(&a4, &a6, &self.x),
            Err(_) => false,
        }
    }

    fn sort_key(&self) -> (FpPoly, FpPoly) {
        let (a, b) = self.x_parts();
        (b, a)
    }
}

impl PartialOrd for SectionModP {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `(deg B, B, deg A, A)`, coefficients compared from the top.
impl Ord for SectionModP {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key()
            .cmp(&other.sort_key())
            .then_with(|| self.y.numer().cmp(other.y.numer()))
    }
}

pub fn modulus_for(p: u64) -> Result<Modulus, SectionError> {
    Modulus::new(p).ok_or(SectionError::UnsupportedPrime(p))
}

/// `(ā₄, ā₆)` over 𝔽_p.
pub fn reduced_coefficients(
    s: &WeierstrassSurface,
    p: u64,
) -> Result<(FpPoly, FpPoly), SectionError> {
    let red = |a| match reduce_poly(a, p) {
        Ok(r) => Ok(r),
        Err(AlgebraError::InvalidModulus(_)) => Err(SectionError::UnsupportedPrime(p)),
        Err(_) => Err(SectionError::ReductionFails(p)),
    };
    Ok((red(s.a4())?, red(s.a6())?))
}

/// The section over `x`, if `x³ + ā₄x + ā₆` is a square in 𝔽_p(t).
pub fn is_section_x(
    s: &WeierstrassSurface,
    p: u64,
    x: &FpRatFunc,
) -> Result<Option<SectionModP>, SectionError> {
    let (a4, a6) = reduced_coefficients(s, p)?;
    if x.ctx().get() != p {
        return Err(SectionError::UnsupportedPrime(x.ctx().get()));
    }
    let rhs = weierstrass_rhs(&a4, &a6, x);
    Ok(is_perfect_square(&rhs).map(|y| SectionModP { x: x.clone(), y }))
}

/// Default bound on `deg A`: `2d + 2·den_deg`.
pub fn default_num_deg(s: &WeierstrassSurface, den_deg: usize) -> usize {
    2 * s.d() + 2 * den_deg
}

/// Number of `(A, B)` pairs with `deg A ≤ num_deg`, `B` monic of degree ≤ `den_deg`.
pub fn candidate_count(p: u64, num_deg: usize, den_deg: usize) -> u128 {
    let p = p as u128;
    let a = p.checked_pow(num_deg as u32 + 1).unwrap_or(u128::MAX);
    let b: u128 = (0..=den_deg as u32)
        .map(|k| p.checked_pow(k).unwrap_or(u128::MAX))
        .fold(0u128, |x, y| x.saturating_add(y));
    a.saturating_mul(b)
}

/// Every polynomial over 𝔽_p of degree < `len` (zero included), by residue vector.
fn all_polys(m: Modulus, len: usize, monic_degree: Option<usize>) -> impl Iterator<Item = FpPoly> {
    let p = m.get();
    let mut digits = vec![0u64; len];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mut cs: Vec<FpElem> = digits.iter().map(|&d| m.elem(d)).collect();
        if let Some(k) = monic_degree {
            cs.push(m.elem(1));
            debug_assert_eq!(cs.len(), k + 1);
        }
        let out = Poly::new(m, cs);
        let mut i = 0;
        loop {
            if i == len {
                done = true;
                break;
            }
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        Some(out)
    })
}

/// All sections with `x = A/B²`, `gcd(A, B) = 1`, within the degree bounds,
/// one per `±y` pair, sorted.
pub fn search_sections(
    s: &WeierstrassSurface,
    p: u64,
    num_deg: usize,
    den_deg: usize,
    budget: u64,
) -> Result<Vec<SectionModP>, SectionError> {
    let m = modulus_for(p)?;
    let (a4, a6) = reduced_coefficients(s, p)?;
    let candidates = candidate_count(p, num_deg, den_deg);
    if candidates > budget as u128 {
        return Err(SectionError::BudgetExceeded { candidates, budget });
    }
    let mut found = Vec::new();
    let filter = PointFilter::new(m);
    let len = num_deg + 1;
    for k in 0..=den_deg {
        for b in all_polys(m, k, Some(k)) {
            let b2 = b.pow(2);
            let b4 = b2.pow(2);
            let a6b6 = &a6 * &b4 * &b2;
            let a4b4 = &a4 * &b4;
            let b3 = &b2 * &b;
            let at = filter.tables(&a4b4, &a6b6);
            let mut digits = vec![0u64; len];
            loop {
                if filter.may_be_square(&digits, &at) {
                    let a = Poly::new(m, digits.iter().map(|&d| m.elem(d)).collect());
                    if k == 0 || a.gcd(&b).is_one() {
                        // numerator of P(A/B²) · B⁶
                        let n = &(&a.pow(3) + &(&a4b4 * &a)) + &a6b6;
                        if quick_square_test(&n) {
                            if let Some(r) = poly_sqrt(&n) {
                                let x = RatFunc::new(a, b2.clone()).expect("B ≠ 0");
                                let y = RatFunc::new(r, b3.clone()).expect("B ≠ 0");
                                found.push(SectionModP { x, y });
                            }
                        }
                    }
                }
                if !increment(&mut digits, p) {
                    break;
                }
            }
        }
    }
    found.sort();
    Ok(found)
}

fn increment(digits: &mut [u64], p: u64) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

/// Necessary condition for `N = A³ + ā₄B⁴A + ā₆B⁶` to be a square: `N(t₀)`
/// is a square in 𝔽_p at every `t₀ ∈ 𝔽_p`. Evaluated on raw residues.
struct PointFilter {
    m: Modulus,
    points: u64,
    /// Quadratic-residue table, for small p only.
    square: Option<Vec<bool>>,
}

const FILTER_POINTS: u64 = 64;
const TABLE_LIMIT: u64 = 1 << 16;

struct PointTables {
    a4b4: Vec<u64>,
    a6b6: Vec<u64>,
}

impl PointFilter {
    fn new(m: Modulus) -> Self {
        let p = m.get();
        let square = (p <= TABLE_LIMIT).then(|| {
            let mut table = vec![false; p as usize];
            for r in 0..p {
                table[((r as u128 * r as u128) % p as u128) as usize] = true;
            }
            table
        });
        PointFilter {
            m,
            points: p.min(FILTER_POINTS),
            square,
        }
    }

    fn tables(&self, a4b4: &FpPoly, a6b6: &FpPoly) -> PointTables {
        let m = a4b4.ctx();
        let at = |f: &FpPoly| {
            (0..self.points)
                .map(|t0| f.eval(&m.elem(t0)).residue())
                .collect()
        };
        PointTables {
            a4b4: at(a4b4),
            a6b6: at(a6b6),
        }
    }

    fn may_be_square(&self, digits: &[u64], at: &PointTables) -> bool {
        let p = self.m.get() as u128;
        for t0 in 0..self.points {
            let mut a = 0u128;
            for &d in digits.iter().rev() {
                a = (a * t0 as u128 + d as u128) % p;
            }
            let n =
                (a * a % p * a + at.a4b4[t0 as usize] as u128 * a + at.a6b6[t0 as usize] as u128)
                    % p;
            let ok = match &self.square {
                Some(table) => table[n as usize],
                None => self.m.elem(n as u64).is_square(),
            };
            if !ok {
                return false;
            }
        }
        true
    }
}

fn quick_square_test(n: &FpPoly) -> bool {
    match n.degree() {
        None => true,
        Some(k) => k % 2 == 0 && n.lc().is_square(),
    }
}

#[cfg(test)]
mod tests;
