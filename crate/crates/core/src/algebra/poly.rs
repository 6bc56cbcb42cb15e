//! Dense univariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::field::{Field, FpElem, Modulus, Rat};

/// Polynomial with coefficients stored in ascending degree.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector and its degree is `None`. `Option`'s ordering puts
/// `None` below every `Some`, which is the −∞ convention for `deg 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F: Field> {
    ctx: F::Ctx,
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(ctx: F::Ctx, coeffs: Vec<F>) -> Self {
        let mut p = Poly { ctx, coeffs };
        p.trim();
        p
    }

    pub fn zero(ctx: F::Ctx) -> Self {
        Poly {
            ctx,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: F::Ctx) -> Self {
        Poly {
            ctx,
            coeffs: vec![F::one(ctx)],
        }
    }

    pub fn constant(c: F) -> Self {
        Poly::new(c.ctx(), vec![c])
    }

    /// The variable `t`.
    pub fn t(ctx: F::Ctx) -> Self {
        Poly {
            ctx,
            coeffs: vec![F::zero(ctx), F::one(ctx)],
        }
    }

    /// `c · t^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let ctx = c.ctx();
        let mut coeffs = vec![F::zero(ctx); k];
        coeffs.push(c);
        Poly::new(ctx, coeffs)
    }

    pub fn from_i64s(ctx: F::Ctx, cs: &[i64]) -> Self {
        Poly::new(ctx, cs.iter().map(|&c| F::from_i64(ctx, c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn ctx(&self) -> F::Ctx {
        self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| F::zero(self.ctx))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to −1, for arithmetic on degrees.
    pub fn degree_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> F {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| F::zero(self.ctx))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero(self.ctx);
        }
        Poly {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero(self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&F::from_i64(self.ctx, i as i64)))
            .collect();
        Poly::new(self.ctx, coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one(self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![F::zero(self.ctx); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly {
            ctx: self.ctx,
            coeffs,
        }
    }

    /// `s^n · p(1/s)` for `n ≥ deg p`.
    pub fn reverse_padded(&self, n: usize) -> Self {
        assert!(self.degree().is_none_or(|d| d <= n), "padding below degree");
        let mut coeffs = vec![F::zero(self.ctx); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[n - i] = c.clone();
        }
        Poly::new(self.ctx, coeffs)
    }

    /// Order of vanishing at `t = 0`; `None` for the zero polynomial.
    pub fn trailing_zeros(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `p(q(t))`.
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Poly::zero(self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv_lc = divisor.lc().inv().expect("nonzero leading coefficient");
        let Some(nd) = self.degree() else {
            return (Poly::zero(self.ctx), Poly::zero(self.ctx));
        };
        if nd < dd {
            return (Poly::zero(self.ctx), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(self.ctx); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].mul(&inv_lc);
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].sub(&c.mul(dc));
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(self.ctx, quot), Poly::new(self.ctx, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact quotient, `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    pub fn gcd(&self, other: &Self) -> Self {
        F::poly_gcd(self, other)
    }

    /// Extended gcd: `(g, s, u)` with `s·self + u·other = g`, `g` monic
    /// (or zero when both inputs vanish).
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let ctx = self.ctx;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(ctx), Poly::zero(ctx));
        let (mut u0, mut u1) = (Poly::zero(ctx), Poly::one(ctx));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let u2 = &u0 - &(&q * &u1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            u0 = std::mem::replace(&mut u1, u2);
        }
        if r0.is_zero() {
            return (r0, s0, u0);
        }
        let inv = r0.lc().inv().expect("nonzero");
        (r0.scale(&inv), s0.scale(&inv), u0.scale(&inv))
    }

    /// `self^e mod m`, with a possibly huge exponent given in binary
    /// (most significant bit first).
    pub fn pow_mod_bits(&self, bits: impl IntoIterator<Item = bool>, m: &Self) -> Self {
        let mut acc = Poly::one(self.ctx).rem(m);
        let base = self.rem(m);
        for b in bits {
            acc = (&acc * &acc).rem(m);
            if b {
                acc = (&acc * &base).rem(m);
            }
        }
        acc
    }

    pub fn pow_mod(&self, e: u64, m: &Self) -> Self {
        let bits = (0..64)
            .rev()
            .map(move |i| (e >> i) & 1 == 1)
            .skip_while(|b| !b);
        self.pow_mod_bits(bits, m)
    }

    pub fn map<G: Field>(&self, ctx: G::Ctx, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(ctx, self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field> PartialOrd for Poly<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by degree, then coefficients from the top down.
impl<F: Field> Ord for Poly<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(self.ctx, coeffs)
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(self.ctx, coeffs)
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.ctx);
        }
        let mut out = vec![F::zero(self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(self.ctx, out)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$m(&rhs)
            }
        }
        impl<F: Field> $tr<&Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: &Poly<F>) -> Poly<F> {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}

/// Prints in the input grammar (`(1/2)*t^3 + t - 5`), highest degree first,
/// so printed polynomials re-parse to the same value.
impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, mag) = coefficient_text(c);
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            match (mag.as_str(), mono.is_empty()) {
                (m, true) => write!(f, "{m}")?,
                ("1", false) => write!(f, "{mono}")?,
                (m, false) => write!(f, "{m}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// Sign and magnitude text for a coefficient; fractions are parenthesized.
fn coefficient_text<F: Field>(c: &F) -> (bool, String) {
    let s = c.to_string();
    let (neg, mag) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s),
    };
    if mag.contains('/') {
        (neg, format!("({mag})"))
    } else {
        (neg, mag)
    }
}

/// Polynomials over ℚ.
pub type QPoly = Poly<Rat>;
/// Polynomials over 𝔽_p.
pub type FpPoly = Poly<FpElem>;

impl QPoly {
    pub fn from_ints(cs: &[i64]) -> Self {
        Poly::from_i64s((), cs)
    }

    pub fn from_bigints(cs: &[BigInt]) -> Self {
        Poly::new(
            (),
            cs.iter().map(|c| Rat::from_integer(c.clone())).collect(),
        )
    }

    /// Decompose as `content · primitive` where the primitive part has
    /// coprime integer coefficients and a positive leading coefficient.
    /// Returns `(0, [])` for zero.
    pub fn primitive_decomposition(&self) -> (Rat, Vec<BigInt>) {
        if self.is_zero() {
            return (<Rat as num_traits::Zero>::zero(), Vec::new());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = num_integer::gcd(g, c.clone());
        }
        if ints.last().expect("nonzero").is_negative() {
            g = -g;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        (Rat::new(g, den), prim)
    }

    /// Primitive integer polynomial with positive leading coefficient.
    pub fn primitive_part(&self) -> QPoly {
        QPoly::from_bigints(&self.primitive_decomposition().1)
    }

    /// Coefficient-wise reduction; `None` if p divides a denominator.
    pub fn reduce(&self, m: Modulus) -> Option<FpPoly> {
        let cs: Option<Vec<FpElem>> = self.coeffs.iter().map(|c| m.reduce_rat(c)).collect();
        Some(Poly::new(m, cs?))
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl FpPoly {
    pub fn from_residues(m: Modulus, cs: &[u64]) -> Self {
        Poly::new(m, cs.iter().map(|&c| m.elem(c)).collect())
    }

    pub fn residues(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.residue()).collect()
    }

    /// Lift using balanced representatives in `(-p/2, p/2]`.
    pub fn lift_balanced(&self) -> QPoly {
        QPoly::from_ints(&self.coeffs.iter().map(|c| c.balanced()).collect::<Vec<_>>())
    }
}
