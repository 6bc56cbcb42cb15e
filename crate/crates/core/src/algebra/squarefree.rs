//! Squarefree decomposition.

use super::error::AlgebraError;
use super::field::Field;
use super::poly::Poly;

/// `a = unit · ∏ partᵢ^{multᵢ}` with monic, squarefree, pairwise coprime parts
/// and distinct multiplicities, sorted by multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition<F: Field> {
    pub unit: F,
    pub parts: Vec<(Poly<F>, u32)>,
}

impl<F: Field> SquarefreeDecomposition<F> {
    pub fn expand(&self) -> Poly<F> {
        let mut acc = Poly::constant(self.unit.clone());
        for (p, m) in &self.parts {
            acc = &acc * &p.pow(*m);
        }
        acc
    }

    /// Product of the distinct parts (the radical, monic).
    pub fn radical(&self) -> Poly<F> {
        let ctx = self.unit.ctx();
        self.parts
            .iter()
            .fold(Poly::one(ctx), |acc, (p, _)| &acc * p)
    }
}

/// Squarefree decomposition of a nonzero polynomial. In characteristic p,
/// p-th powers are detected and their roots decomposed recursively.
pub fn squarefree_decomposition<F: Field>(
    a: &Poly<F>,
) -> Result<SquarefreeDecomposition<F>, AlgebraError> {
    if a.is_zero() {
        return Err(AlgebraError::ZeroInput("squarefree_decomposition"));
    }
    let unit = a.lc();
    let mut parts = monic_sqf(&a.monic());
    parts.sort_by_key(|(_, m)| *m);
    let mut merged: Vec<(Poly<F>, u32)> = Vec::with_capacity(parts.len());
    for (p, m) in parts {
        match merged.last_mut() {
            Some((q, mm)) if *mm == m => *q = &*q * &p,
            _ => merged.push((p, m)),
        }
    }
    Ok(SquarefreeDecomposition {
        unit,
        parts: merged,
    })
}

fn monic_sqf<F: Field>(f: &Poly<F>) -> Vec<(Poly<F>, u32)> {
    let ctx = f.ctx();
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.div_exact(&c).expect("gcd divides");
    let mut i = 1u32;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y).expect("gcd divides");
        if !fac.is_constant() {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w).expect("gcd divides");
        i += 1;
    }
    if !c.is_constant() {
        let p = F::characteristic(ctx);
        debug_assert!(p > 0, "leftover only arises in positive characteristic");
        let root = pth_root(&c, p as usize);
        for (q, m) in monic_sqf(&root) {
            out.push((q, m * p as u32));
        }
    }
    out
}

/// `c^{1/p}` for a polynomial in `t^p` over 𝔽_p (Frobenius is the identity
/// on prime-field coefficients).
fn pth_root<F: Field>(c: &Poly<F>, p: usize) -> Poly<F> {
    let coeffs = c.coeffs().iter().step_by(p).cloned().collect();
    Poly::new(c.ctx(), coeffs)
}

/// True when `a` has no repeated factor over the algebraic closure.
pub fn is_squarefree<F: Field>(a: &Poly<F>) -> bool {
    if a.is_zero() {
        return false;
    }
    if a.is_constant() {
        return true;
    }
    let d = a.derivative();
    !d.is_zero() && a.gcd(&d).is_constant()
}
