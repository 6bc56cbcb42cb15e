use std::fmt;

use crate::algebra::{Field, Poly, Rat, Valuation};

/// A closed point of ℙ¹: a monic irreducible polynomial, or ∞.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Place<F: Field> {
    Finite(Poly<F>),
    Infinity,
}

pub type QPlace = Place<Rat>;

impl<F: Field> Place<F> {
    /// Degree of the residue field over the base field.
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(q) => q.degree().unwrap_or(0),
            Place::Infinity => 1,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }
}

impl<F: Field> fmt::Display for Place<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(q) => write!(f, "{q}"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

/// `v_q(a)` for a monic irreducible `q`.
pub fn poly_valuation_at<F: Field>(a: &Poly<F>, q: &Poly<F>) -> Valuation {
    if a.is_zero() {
        return Valuation::Infinity;
    }
    let mut v = 0;
    let mut cur = a.clone();
    while let Some(next) = cur.div_exact(q) {
        cur = next;
        v += 1;
    }
    Valuation::Finite(v)
}

/// Valuation at a place; at ∞ the polynomial is read in the chart `s = 1/t`
/// so the caller passes the chart polynomial.
pub fn place_valuation<F: Field>(a: &Poly<F>, v: &Place<F>) -> Valuation {
    match v {
        Place::Finite(q) => poly_valuation_at(a, q),
        Place::Infinity => a
            .trailing_zeros()
            .map_or(Valuation::Infinity, |k| Valuation::Finite(k as i64)),
    }
}
