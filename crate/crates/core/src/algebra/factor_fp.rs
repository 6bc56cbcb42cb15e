//! Factorization over 𝔽_p: squarefree decomposition, distinct-degree
//! factorization, then equal-degree splitting (Cantor–Zassenhaus).

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::error::AlgebraError;
use super::factorization::Factorization;
use super::field::FpElem;
use super::poly::FpPoly;
use super::squarefree::squarefree_decomposition;

/// Seed used when none is configured.
pub const DEFAULT_SEED: u64 = 0;

/// Complete factorization over 𝔽_p with the default seed.
pub fn factor_mod_p(a: &FpPoly) -> Result<Factorization<FpElem>, AlgebraError> {
    factor_mod_p_seeded(a, DEFAULT_SEED)
}

/// Complete factorization over 𝔽_p. The seed drives the random splitting;
/// the result is canonical and does not depend on it.
pub fn factor_mod_p_seeded(a: &FpPoly, seed: u64) -> Result<Factorization<FpElem>, AlgebraError> {
    if a.is_zero() {
        return Err(AlgebraError::ZeroInput("factor_mod_p"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sqf = squarefree_decomposition(a)?;
    let mut factors = Vec::new();
    for (part, mult) in &sqf.parts {
        for (block, d) in distinct_degree(part) {
            for irr in equal_degree(&block, d, &mut rng) {
                factors.push((irr, *mult));
            }
        }
    }
    let mut f = Factorization {
        unit: sqf.unit,
        factors,
    };
    f.normalize();
    Ok(f)
}

/// Splits a monic squarefree polynomial into `(product of all irreducible
/// factors of degree d, d)` blocks.
pub fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let m = f.ctx();
    let p = m.get();
    let t = FpPoly::t(m);
    let mut out = Vec::new();
    let mut rest = f.monic();
    let mut h = t.rem(&rest);
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(p, &rest);
        let g = (&h - &t).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_exact(&g).expect("gcd divides");
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(dr) = rest.degree() {
        if dr > 0 {
            out.push((rest, dr));
        }
    }
    out
}

/// Splits a monic squarefree product of degree-`d` irreducibles (odd p).
pub fn equal_degree(f: &FpPoly, d: usize, rng: &mut impl Rng) -> Vec<FpPoly> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    let m = f.ctx();
    let p = m.get();
    let exponent: BigUint = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    let bits: Vec<bool> = (0..exponent.bits())
        .rev()
        .map(|i| exponent.bit(i))
        .collect();
    loop {
        let coeffs: Vec<FpElem> = (0..n).map(|_| m.elem(rng.gen_range(0..p))).collect();
        let a = FpPoly::new(m, coeffs);
        if a.is_constant() {
            continue;
        }
        let g = a.gcd(f);
        let g = if !g.is_one() && g.degree() != f.degree() {
            g
        } else {
            let b = a.pow_mod_bits(bits.iter().copied(), f);
            let g = (&b - &FpPoly::one(m)).gcd(f);
            if g.is_one() || g.degree() == f.degree() {
                continue;
            }
            g
        };
        let h = f.div_exact(&g).expect("gcd divides");
        let mut out = equal_degree(&g, d, rng);
        out.extend(equal_degree(&h, d, rng));
        return out;
    }
}

/// Number of irreducible factors of a squarefree polynomial, without
/// splitting.
pub fn count_factors_squarefree(f: &FpPoly) -> usize {
    distinct_degree(f)
        .iter()
        .map(|(g, d)| g.degree().unwrap_or(0) / d)
        .sum()
}

pub fn is_irreducible(f: &FpPoly) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => {
            super::squarefree::is_squarefree(f) && {
                let blocks = distinct_degree(f);
                blocks.len() == 1 && blocks[0].1 == f.degree().unwrap()
            }
        }
    }
}
