use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0}: zero input")]
    ZeroInput(&'static str),
    #[error("{0}: constant input")]
    ConstantInput(&'static str),
    #[error("not integral at p = {0}")]
    NonIntegral(u64),
    #[error("denominator vanishes modulo p = {0}")]
    DenominatorVanishes(u64),
    #[error("{0} is not an odd prime")]
    InvalidModulus(u64),
    #[error("division by zero")]
    DivisionByZero,
}
