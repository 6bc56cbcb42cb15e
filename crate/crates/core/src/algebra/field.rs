//! Coefficient fields: the rationals and prime fields of odd characteristic.
//!
//! Polynomials are generic over [`Field`]. A field element carries enough
//! context to rebuild zero and one (for 𝔽_p that is the modulus), which lets
//! a zero polynomial over 𝔽_p still know which field it lives in.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Poly;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

/// Operations shared by every coefficient field.
pub trait Field:
    Clone + PartialEq + Eq + Ord + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Data needed to construct constants of the field.
    type Ctx: Copy + Eq + fmt::Debug + Send + Sync;

    fn zero(ctx: Self::Ctx) -> Self;
    fn one(ctx: Self::Ctx) -> Self;
    fn from_i64(ctx: Self::Ctx, v: i64) -> Self;
    fn ctx(&self) -> Self::Ctx;
    /// 0 for ℚ, p for 𝔽_p.
    fn characteristic(ctx: Self::Ctx) -> u64;

    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Canonical square root if one exists in the field.
    ///
    /// Over ℚ the positive root is returned, over 𝔽_p the root whose residue
    /// lies in `[0, p/2]`.
    fn sqrt(&self) -> Option<Self>;

    /// True for the representative chosen by [`Field::sqrt`] among `±x`.
    fn is_sign_normalized(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one(self.ctx())
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ctx());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Monic gcd. Fields may override the Euclidean default with something
    /// that controls coefficient growth.
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        super::gcd::euclid_gcd(a, b)
    }

    /// Resultant `lc(a)^{deg b} · ∏_{a(α)=0} b(α)` of two nonzero polynomials.
    fn poly_resultant(a: &Poly<Self>, b: &Poly<Self>) -> Self {
        super::resultant::euclid_resultant(a, b)
    }
}

impl Field for Rat {
    type Ctx = ();

    fn zero(_: ()) -> Self {
        Zero::zero()
    }
    fn one(_: ()) -> Self {
        One::one()
    }
    fn from_i64(_: (), v: i64) -> Self {
        Rat::from_integer(BigInt::from(v))
    }
    fn ctx(&self) {}
    fn characteristic(_: ()) -> u64 {
        0
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = exact_isqrt(self.numer())?;
        let d = exact_isqrt(self.denom())?;
        Some(Rat::new(n, d))
    }
    fn is_sign_normalized(&self) -> bool {
        !self.is_negative()
    }
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        super::gcd::rational_gcd(a, b)
    }
    fn poly_resultant(a: &Poly<Self>, b: &Poly<Self>) -> Self {
        super::resultant::subresultant_rational(a, b)
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// An odd prime modulus.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Modulus(u64);

impl Modulus {
    /// Accepts odd primes only.
    pub fn new(p: u64) -> Option<Self> {
        if p >= 3 && p % 2 == 1 && is_prime_u64(p) {
            Some(Modulus(p))
        } else {
            None
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn elem(self, v: u64) -> FpElem {
        FpElem {
            value: v % self.0,
            modulus: self.0,
        }
    }

    /// Residue of an integer.
    pub fn reduce_int(self, n: &BigInt) -> FpElem {
        let r = n.mod_floor(&BigInt::from(self.0));
        self.elem(r.to_u64().expect("residue fits in u64"))
    }

    /// Residue of a rational, `None` when p divides the denominator.
    pub fn reduce_rat(self, q: &Rat) -> Option<FpElem> {
        let den = self.reduce_int(q.denom());
        let inv = den.inv()?;
        Some(self.reduce_int(q.numer()).mul(&inv))
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Element of 𝔽_p, stored as a residue in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FpElem {
    value: u64,
    modulus: u64,
}

impl FpElem {
    pub fn residue(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> Modulus {
        Modulus(self.modulus)
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn balanced(&self) -> i64 {
        if self.value <= self.modulus / 2 {
            self.value as i64
        } else {
            self.value as i64 - self.modulus as i64
        }
    }

    /// Legendre-style test: zero counts as a square.
    pub fn is_square(&self) -> bool {
        self.value == 0 || self.pow((self.modulus - 1) / 2).value == 1
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

impl Field for FpElem {
    type Ctx = Modulus;

    fn zero(ctx: Modulus) -> Self {
        FpElem {
            value: 0,
            modulus: ctx.0,
        }
    }
    fn one(ctx: Modulus) -> Self {
        FpElem {
            value: 1,
            modulus: ctx.0,
        }
    }
    fn from_i64(ctx: Modulus, v: i64) -> Self {
        let m = ctx.0 as i128;
        FpElem {
            value: (v as i128).rem_euclid(m) as u64,
            modulus: ctx.0,
        }
    }
    fn ctx(&self) -> Modulus {
        Modulus(self.modulus)
    }
    fn characteristic(ctx: Modulus) -> u64 {
        ctx.0
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = self.value + other.value;
        FpElem {
            value: if s >= self.modulus {
                s - self.modulus
            } else {
                s
            },
            modulus: self.modulus,
        }
    }
    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let v = if self.value >= other.value {
            self.value - other.value
        } else {
            self.value + self.modulus - other.value
        };
        FpElem {
            value: v,
            modulus: self.modulus,
        }
    }
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        FpElem {
            value: mulmod(self.value, other.value, self.modulus),
            modulus: self.modulus,
        }
    }
    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            FpElem {
                value: self.modulus - self.value,
                modulus: self.modulus,
            }
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(FpElem {
                value: powmod(self.value, self.modulus - 2, self.modulus),
                modulus: self.modulus,
            })
        }
    }
    fn pow(&self, e: u64) -> Self {
        FpElem {
            value: powmod(self.value, e, self.modulus),
            modulus: self.modulus,
        }
    }
    fn sqrt(&self) -> Option<Self> {
        let p = self.modulus;
        let r = tonelli_shanks(self.value, p)?;
        let r = r.min(p - r);
        Some(FpElem {
            value: r % p,
            modulus: p,
        })
    }
    fn is_sign_normalized(&self) -> bool {
        self.value <= self.modulus / 2
    }
}

fn tonelli_shanks(n: u64, p: u64) -> Option<u64> {
    let n = n % p;
    if n == 0 {
        return Some(0);
    }
    if powmod(n, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(powmod(n, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while powmod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = powmod(z, q, p);
    let mut t = powmod(n, q, p);
    let mut r = powmod(n, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mulmod(tt, tt, p);
            i += 1;
        }
        let b = powmod(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    Some(r)
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// p-adic valuation of a nonzero rational.
pub fn rat_valuation(q: &Rat, p: u64) -> i64 {
    debug_assert!(!Zero::is_zero(q));
    int_valuation(q.numer(), p) as i64 - int_valuation(q.denom(), p) as i64
}

/// p-adic valuation of a nonzero integer.
pub fn int_valuation(n: &BigInt, p: u64) -> u64 {
    debug_assert!(!n.is_zero());
    let bp = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&bp);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

pub fn rat_from_ints(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}
