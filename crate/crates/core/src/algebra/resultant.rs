//! Resultants and discriminants.
//!
//! Convention: `Res(a, b) = lc(a)^{deg b} · ∏_{a(α)=0} b(α)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::error::AlgebraError;
use super::field::{Field, Rat};
use super::intpoly;
use super::poly::{Poly, QPoly};

/// Resultant by the Euclidean remainder sequence over a field.
pub fn euclid_resultant<F: Field>(a: &Poly<F>, b: &Poly<F>) -> F {
    let ctx = a.ctx();
    let mut acc = F::one(ctx);
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
            return F::zero(ctx);
        };
        if n == 0 {
            return acc.mul(&b.lc().pow(m as u64));
        }
        if m == 0 {
            return acc.mul(&a.lc().pow(n as u64));
        }
        let r = a.rem(&b);
        let Some(dr) = r.degree() else {
            return F::zero(ctx);
        };
        // Res(a,b) = (-1)^{mn} Res(b,a) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
        if (m * n) % 2 == 1 {
            acc = acc.neg();
        }
        acc = acc.mul(&b.lc().pow((m - dr) as u64));
        a = b;
        b = r;
    }
}

/// Resultant over ℚ by the subresultant remainder sequence on primitive
/// integer polynomials.
pub fn subresultant_rational(a: &QPoly, b: &QPoly) -> Rat {
    if a.is_zero() || b.is_zero() {
        return <Rat as num_traits::Zero>::zero();
    }
    let (ca, pa) = a.primitive_decomposition();
    let (cb, pb) = b.primitive_decomposition();
    let (m, n) = (pa.len() - 1, pb.len() - 1);
    // Res(ca·A, cb·B) = ca^{deg B} cb^{deg A} Res(A, B)
    let scale = num_traits::pow(ca, n) * num_traits::pow(cb, m);
    Rat::from_integer(subresultant_int(&pa, &pb)) * scale
}

/// Resultant of two nonzero integer polynomials.
pub fn subresultant_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let (Some(m), Some(n)) = (intpoly::degree(a), intpoly::degree(b)) else {
        return BigInt::zero();
    };
    if n == 0 {
        return num_traits::pow(b[0].clone(), m);
    }
    if m == 0 {
        return num_traits::pow(a[0].clone(), n);
    }
    let ca = intpoly::content(a);
    let cb = intpoly::content(b);
    let mut t = num_traits::pow(ca.clone(), n) * num_traits::pow(cb.clone(), m);
    let mut big_a = intpoly::div_scalar(a, &ca);
    let mut big_b = intpoly::div_scalar(b, &cb);
    let mut s = BigInt::one();
    if m < n {
        std::mem::swap(&mut big_a, &mut big_b);
        if m % 2 == 1 && n % 2 == 1 {
            s = -s;
        }
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = big_a.len() - 1;
        let db = big_b.len() - 1;
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = intpoly::pseudo_rem(&big_a, &big_b);
        let divisor = &g * num_traits::pow(h.clone(), delta);
        big_a = big_b;
        big_b = intpoly::div_scalar(&r, &divisor);
        g = intpoly::lc(&big_a);
        if delta > 0 {
            h = num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1);
        }
        match intpoly::degree(&big_b) {
            None => return BigInt::zero(),
            Some(0) => break,
            Some(_) => {}
        }
    }
    let da = big_a.len() - 1;
    let hb = num_traits::pow(intpoly::lc(&big_b), da) / num_traits::pow(h, da - 1);
    t *= s * hb;
    t
}

/// Resultant of two nonzero polynomials.
pub fn resultant<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Result<F, AlgebraError> {
    if a.is_zero() || b.is_zero() {
        return Err(AlgebraError::ZeroInput("resultant"));
    }
    Ok(F::poly_resultant(a, b))
}

/// `(-1)^{n(n-1)/2} · Res(a, a') / lc(a)`, with `a'` taken at formal degree
/// `n - 1`. Zero exactly when `a` is not squarefree.
pub fn discriminant<F: Field>(a: &Poly<F>) -> Result<F, AlgebraError> {
    let n = match a.degree() {
        None => return Err(AlgebraError::ZeroInput("discriminant")),
        Some(0) => return Err(AlgebraError::ConstantInput("discriminant")),
        Some(n) => n,
    };
    let ctx = a.ctx();
    let da = a.derivative();
    let Some(dd) = da.degree() else {
        return Ok(F::zero(ctx));
    };
    let lc = a.lc();
    let mut r = F::poly_resultant(a, &da);
    // formal degree n-1 for a' contributes lc(a)^{(n-1) - deg a'}
    r = r.mul(&lc.pow((n - 1 - dd) as u64));
    let mut d = r.mul(&lc.inv().expect("nonzero leading coefficient"));
    if (n * (n - 1) / 2) % 2 == 1 {
        d = d.neg();
    }
    Ok(d)
}
