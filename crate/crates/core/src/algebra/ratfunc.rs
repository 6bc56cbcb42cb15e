//! Rational functions in lowest terms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::error::AlgebraError;
use super::field::{Field, FpElem, Rat};
use super::poly::Poly;

/// `numerator / denominator` with coprime parts and a monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

pub type QRatFunc = RatFunc<Rat>;
pub type FpRatFunc = RatFunc<FpElem>;

impl<F: Field> RatFunc<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                den: Poly::one(num.ctx()),
                num,
            });
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let lc_inv = den.lc().inv().expect("nonzero");
        Ok(RatFunc {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        })
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        let ctx = p.ctx();
        RatFunc {
            num: p,
            den: Poly::one(ctx),
        }
    }

    pub fn zero(ctx: F::Ctx) -> Self {
        Self::from_poly(Poly::zero(ctx))
    }

    pub fn one(ctx: F::Ctx) -> Self {
        Self::from_poly(Poly::one(ctx))
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    pub fn ctx(&self) -> F::Ctx {
        self.num.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The polynomial if the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly<F>> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        RatFunc::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    /// Leading coefficient of the numerator (the denominator is monic).
    pub fn lc(&self) -> F {
        self.num.lc()
    }

    /// Order of vanishing at infinity: `deg den - deg num`.
    pub fn order_at_infinity(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.den.degree_i64() - self.num.degree_i64())
    }
}

impl<F: Field> Add for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero")
    }
}

impl<F: Field> Sub for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Mul for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl<F: Field> Neg for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
