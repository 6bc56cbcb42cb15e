//! Square roots in F[t] and F(t), and the squarefree kernel over ℚ(t).

use super::error::AlgebraError;
use super::field::{Field, Rat};
use super::poly::{Poly, QPoly};
use super::ratfunc::{QRatFunc, RatFunc};
use super::squarefree::squarefree_decomposition;

/// Square root of a polynomial, sign-normalized on the leading coefficient.
///
/// Matches coefficients from the top down, then verifies, so it needs
/// characteristic ≠ 2.
pub fn poly_sqrt<F: Field>(a: &Poly<F>) -> Option<Poly<F>> {
    let ctx = a.ctx();
    let Some(n) = a.degree() else {
        return Some(Poly::zero(ctx));
    };
    if n % 2 == 1 {
        return None;
    }
    let m = n / 2;
    let lead = a.lc().sqrt()?;
    let two_lead_inv = lead.add(&lead).inv()?;
    let mut r = vec![F::zero(ctx); m + 1];
    r[m] = lead;
    for k in (0..m).rev() {
        // coefficient of t^{m+k} in r² is 2 r_m r_k + Σ_{k<i,j<m, i+j=m+k} r_i r_j
        let mut acc = a.coeff(m + k);
        for i in (k + 1)..m {
            let j = m + k - i;
            if j > k && j < m {
                acc = acc.sub(&r[i].mul(&r[j]));
            }
        }
        r[k] = acc.mul(&two_lead_inv);
    }
    let root = Poly::new(ctx, r);
    (&root * &root == *a).then_some(root)
}

/// `Some(r)` with `r² = a` when `a` is a square in F(t).
///
/// The root returned has a sign-normalized leading coefficient: positive
/// over ℚ, residue in `[1, p/2]` over 𝔽_p.
pub fn is_perfect_square<F: Field>(a: &RatFunc<F>) -> Option<RatFunc<F>> {
    let num = poly_sqrt(a.numer())?;
    let den = poly_sqrt(a.denom())?;
    // the denominator is monic, so its normalized root is monic too
    Some(RatFunc::new(num, den).expect("nonzero denominator"))
}

/// Decomposition `a = c · S · v²` with `S` monic squarefree.
///
/// `a` is a square over ℚ̄(t) iff `S = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeKernel {
    pub c: Rat,
    pub s: QPoly,
    pub v: QRatFunc,
}

impl SquarefreeKernel {
    pub fn recombine(&self) -> QRatFunc {
        let cs = RatFunc::from_poly(self.s.scale(&self.c));
        &cs * &self.v.pow(2)
    }
}

pub fn squarefree_kernel(a: &QRatFunc) -> Result<SquarefreeKernel, AlgebraError> {
    if a.is_zero() {
        return Err(AlgebraError::ZeroInput("squarefree_kernel"));
    }
    let num = squarefree_decomposition(a.numer())?;
    let den = squarefree_decomposition(a.denom())?;
    let mut s = QPoly::one(());
    let mut v_num = QPoly::one(());
    let mut v_den = QPoly::one(());
    for (part, mult) in &num.parts {
        if mult % 2 == 1 {
            s = &s * part;
        }
        v_num = &v_num * &part.pow(mult / 2);
    }
    // 1/d^i = d · (d^{-(i+1)/2})² for odd i
    for (part, mult) in &den.parts {
        if mult % 2 == 1 {
            s = &s * part;
        }
        v_den = &v_den * &part.pow(mult.div_ceil(2));
    }
    let v = RatFunc::new(v_num, v_den).expect("nonzero");
    Ok(SquarefreeKernel {
        c: num.unit / den.unit,
        s,
        v,
    })
}
