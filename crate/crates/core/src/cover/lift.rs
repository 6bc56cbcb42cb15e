use num_bigint::BigInt;

use crate::algebra::field::Rat;
use crate::algebra::square::squarefree_kernel;
use crate::algebra::squarefree::is_squarefree;
use crate::algebra::{FpRatFunc, QPoly, QRatFunc, RatFunc};
use crate::weierstrass::WeierstrassSurface;

use super::CoverError;

pub const DEFAULT_LAMBDA_MAX: u64 = 100;

/// A lift `f = (f₀ + pλ)/f₁` of `x ∈ 𝔽_p(t)` to ℚ(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub f0: QPoly,
    pub f1: QPoly,
    pub p: u64,
    pub lambda: u64,
}

impl Lift {
    /// `f₀ + pλ`.
    pub fn shifted_numerator(&self) -> QPoly {
        let shift = Rat::from_integer(BigInt::from(self.p) * BigInt::from(self.lambda));
        &self.f0 + &QPoly::constant(shift)
    }

    pub fn f(&self) -> QRatFunc {
        RatFunc::new(self.shifted_numerator(), self.f1.clone()).expect("f₁ ≠ 0")
    }

    pub fn with_lambda(&self, lambda: u64) -> Lift {
        Lift {
            lambda,
            ..self.clone()
        }
    }
}

/// Coefficient-wise lift with balanced representatives in `(−p/2, p/2]`.
pub fn lift_x(x: &FpRatFunc, p: u64) -> Lift {
    debug_assert_eq!(x.ctx().get(), p);
    Lift {
        f0: x.numer().lift_balanced(),
        f1: x.denom().lift_balanced(),
        p,
        lambda: 0,
    }
}

/// `J = (f₀+pλ)³ + a₄f₁²(f₀+pλ) + a₆f₁³ = f₁³·P(f)`.
pub fn j_polynomial(s: &WeierstrassSurface, lift: &Lift) -> QPoly {
    let g = lift.shifted_numerator();
    let f1 = &lift.f1;
    let f1_2 = f1.pow(2);
    &(&g.pow(3) + &(&(s.a4() * &f1_2) * &g)) + &(s.a6() * &(&f1_2 * f1))
}

/// A λ the scan skipped, and why.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RejectedLambda {
    pub lambda: u64,
    pub reason: String,
}

/// The smallest `λ ≤ lambda_max` whose `J` is nonzero and squarefree over ℚ
/// and whose `P(f_λ)` has a nonconstant squarefree kernel, plus the trail of
/// rejected values.
pub fn scan_lambdas(
    s: &WeierstrassSurface,
    lift0: &Lift,
    lambda_max: u64,
) -> Result<(Lift, Vec<RejectedLambda>), CoverError> {
    let mut rejected = Vec::new();
    for lambda in 0..=lambda_max {
        let lift = lift0.with_lambda(lambda);
        let j = j_polynomial(s, &lift);
        let reason = if j.is_zero() {
            "J = 0".to_string()
        } else if !is_squarefree(&j) {
            format!("J = {j} is not squarefree")
        } else {
            let g = s.rhs(&lift.f());
            let k = squarefree_kernel(&g).expect("G ≠ 0 when J ≠ 0");
            if k.s.is_constant() {
                "P(f) is a square up to a constant".to_string()
            } else {
                return Ok((lift, rejected));
            }
        };
        rejected.push(RejectedLambda { lambda, reason });
    }
    Err(CoverError::ScanExhausted { lambda_max })
}

pub fn lambda_scan(
    s: &WeierstrassSurface,
    lift0: &Lift,
    lambda_max: u64,
) -> Result<Lift, CoverError> {
    scan_lambdas(s, lift0, lambda_max).map(|(lift, _)| lift)
}
