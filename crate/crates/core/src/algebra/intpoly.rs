//! Integer polynomials as plain coefficient vectors (ascending degree, no
//! trailing zeros). Used where working over ℤ avoids fraction growth: gcds,
//! resultants and Hensel lifting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntPoly = Vec<BigInt>;

pub fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &[BigInt]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn lc(p: &[BigInt]) -> BigInt {
    p.last().cloned().unwrap_or_else(BigInt::zero)
}

pub fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divide out the content and make the leading coefficient positive.
pub fn primitive(p: &[BigInt]) -> IntPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut g = content(p);
    if lc(p).is_negative() {
        g = -g;
    }
    p.iter().map(|c| c / &g).collect()
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let n = a.len().max(b.len());
    let mut out: IntPoly = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(&mut out);
    out
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let neg: IntPoly = b.iter().map(|c| -c).collect();
    add(a, &neg)
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &[BigInt], c: &BigInt) -> IntPoly {
    let mut out: IntPoly = a.iter().map(|x| x * c).collect();
    trim(&mut out);
    out
}

/// Exact division of every coefficient by `c`.
pub fn div_scalar(a: &[BigInt], c: &BigInt) -> IntPoly {
    a.iter()
        .map(|x| {
            debug_assert!((x % c).is_zero(), "inexact scalar division");
            x / c
        })
        .collect()
}

/// Pseudo-remainder: `lc(b)^{deg a - deg b + 1} · a mod b`.
pub fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = degree(b).expect("pseudo-division by zero");
    let mut r = a.to_vec();
    let lb = lc(b);
    let Some(da) = degree(a) else { return r };
    if da < db {
        return r;
    }
    let mut e = da - db + 1;
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = lc(&r);
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = num_traits::pow(lb, e);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

/// Exact division over ℤ, `None` if `b` does not divide `a` in ℤ[t].
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let db = degree(b)?;
    let Some(da) = degree(a) else {
        return Some(Vec::new());
    };
    if da < db {
        return None;
    }
    let lb = lc(b);
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(&lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bc) in b.iter().enumerate() {
            r[k + j] -= &c * bc;
        }
        q[k] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

pub fn derivative(a: &[BigInt]) -> IntPoly {
    let mut out: IntPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    trim(&mut out);
    out
}

/// Primitive gcd over ℤ (positive leading coefficient), via the primitive
/// remainder sequence.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() {
        return primitive(b);
    }
    if b.is_empty() {
        return primitive(a);
    }
    let (mut r0, mut r1) = (primitive(a), primitive(b));
    if degree(&r0) < degree(&r1) {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_empty() {
        let r = pseudo_rem(&r0, &r1);
        r0 = r1;
        r1 = primitive(&r);
    }
    primitive(&r0)
}

/// Symmetric residue of `c` modulo `m` in `(-m/2, m/2]`.
pub fn symmetric_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    let half: BigInt = m >> 1;
    if r > half {
        r - m
    } else {
        r
    }
}

pub fn reduce_mod(a: &[BigInt], m: &BigInt) -> IntPoly {
    let mut out: IntPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    trim(&mut out);
    out
}

/// Division by a monic `b` with coefficients reduced mod `m`.
pub fn div_rem_monic_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (IntPoly, IntPoly) {
    debug_assert!(lc(b).is_one());
    let db = degree(b).expect("nonzero divisor");
    let mut r = reduce_mod(a, m);
    let Some(da) = degree(&r) else {
        return (Vec::new(), Vec::new());
    };
    if da < db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = r[k + db].mod_floor(m);
        if !c.is_zero() {
            for (j, bc) in b.iter().enumerate() {
                r[k + j] = (&r[k + j] - &c * bc).mod_floor(m);
            }
        }
        q[k] = c;
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

pub fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> IntPoly {
    reduce_mod(&mul(a, b), m)
}

pub fn eval(a: &[BigInt], x: &BigInt) -> BigInt {
    a.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

pub fn max_norm(a: &[BigInt]) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

pub fn from_i64s(cs: &[i64]) -> IntPoly {
    let mut v: IntPoly = cs.iter().map(|&c| BigInt::from(c)).collect();
    trim(&mut v);
    v
}
