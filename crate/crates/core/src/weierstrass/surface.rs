use std::collections::BTreeMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::algebra::field::Field;
use crate::algebra::gcd::poly_lcm;
use crate::algebra::{
    factor_over_rationals, poly_gcd, Factorization, Poly, QPoly, QRatFunc, Rat, RatFunc,
};

use super::kodaira::{kodaira_from_valuations, KodairaType};
use super::place::{place_valuation, QPlace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeierstrassError {
    #[error("the generic fibre is singular (discriminant vanishes identically)")]
    SingularGenericFibre,
    #[error("the minimal model has constant coefficients, so there is no singular fibre")]
    NoSingularFibre,
}

/// `Δ = −16(4a₄³ + 27a₆²)`.
pub fn discriminant_of<F: Field>(a4: &Poly<F>, a6: &Poly<F>) -> Poly<F> {
    let ctx = a4.ctx();
    let inner = &a4.pow(3).scale(&F::from_i64(ctx, 4)) + &a6.pow(2).scale(&F::from_i64(ctx, 27));
    inner.scale(&F::from_i64(ctx, -16))
}

/// `j = −1728(4a₄)³/Δ`, `None` when `Δ = 0`.
pub fn j_invariant_of<F: Field>(a4: &Poly<F>, delta: &Poly<F>) -> Option<RatFunc<F>> {
    let ctx = a4.ctx();
    let num = a4.pow(3).scale(&F::from_i64(ctx, -1728 * 64));
    RatFunc::new(num, delta.clone()).ok()
}

/// `(a₄, a₆) ↦ (s^{4d}a₄(1/s), s^{6d}a₆(1/s))`; an involution for fixed `d`.
pub fn chart_swap<F: Field>(a4: &Poly<F>, a6: &Poly<F>, d: usize) -> (Poly<F>, Poly<F>) {
    (a4.reverse_padded(4 * d), a6.reverse_padded(6 * d))
}

/// `P(x) = x³ + a₄x + a₆`.
pub fn weierstrass_rhs<F: Field>(a4: &Poly<F>, a6: &Poly<F>, x: &RatFunc<F>) -> RatFunc<F> {
    let x3 = x.pow(3);
    let a4x = &RatFunc::from_poly(a4.clone()) * x;
    &(&x3 + &a4x) + &RatFunc::from_poly(a6.clone())
}

/// `y² = x³ + a₄x + a₆` with `a₄, a₆ ∈ ℚ[t]` minimal at every finite place.
#[derive(Clone, Debug)]
pub struct WeierstrassSurface {
    a4: QPoly,
    a6: QPoly,
    d: usize,
    delta: QPoly,
    j: QRatFunc,
    a4_inf: QPoly,
    a6_inf: QPoly,
    delta_inf: QPoly,
    j_inf: QRatFunc,
    delta_factors: OnceLock<Factorization<Rat>>,
}

impl PartialEq for WeierstrassSurface {
    fn eq(&self, other: &Self) -> bool {
        self.a4 == other.a4 && self.a6 == other.a6
    }
}

impl Eq for WeierstrassSurface {}

fn weight_bound(deg: Option<usize>, weight: usize) -> usize {
    deg.map_or(0, |n| n.div_ceil(weight))
}

impl WeierstrassSurface {
    /// Minimal model of a surface given by polynomial coefficients.
    pub fn from_polys(a4: QPoly, a6: QPoly) -> Result<Self, WeierstrassError> {
        minimal_model(&RatFunc::from_poly(a4), &RatFunc::from_poly(a6))
    }

    pub fn a4(&self) -> &QPoly {
        &self.a4
    }
    pub fn a6(&self) -> &QPoly {
        &self.a6
    }
    pub fn d(&self) -> usize {
        self.d
    }
    pub fn delta(&self) -> &QPoly {
        &self.delta
    }
    pub fn j(&self) -> &QRatFunc {
        &self.j
    }
    pub fn a4_inf(&self) -> &QPoly {
        &self.a4_inf
    }
    pub fn a6_inf(&self) -> &QPoly {
        &self.a6_inf
    }
    pub fn delta_inf(&self) -> &QPoly {
        &self.delta_inf
    }
    pub fn j_inf(&self) -> &QRatFunc {
        &self.j_inf
    }

    /// Factorization of `Δ` over ℚ, computed once.
    pub fn delta_factorization(&self) -> &Factorization<Rat> {
        self.delta_factors
            .get_or_init(|| factor_over_rationals(&self.delta).expect("Δ ≠ 0"))
    }

    /// The eight functions checked by the good-prime criterion, with labels:
    /// `a4, a6, delta, j` on the affine chart and their primed versions at ∞.
    pub fn chart_functions(&self) -> [(&'static str, QRatFunc); 8] {
        let p = |a: &QPoly| RatFunc::from_poly(a.clone());
        [
            ("a4", p(&self.a4)),
            ("a6", p(&self.a6)),
            ("delta", p(&self.delta)),
            ("j", self.j.clone()),
            ("a4'", p(&self.a4_inf)),
            ("a6'", p(&self.a6_inf)),
            ("delta'", p(&self.delta_inf)),
            ("j'", self.j_inf.clone()),
        ]
    }

    /// `P(x) = x³ + a₄x + a₆` over ℚ(t).
    pub fn rhs(&self, x: &QRatFunc) -> QRatFunc {
        weierstrass_rhs(&self.a4, &self.a6, x)
    }
}

fn strip_non_minimal(a4: QPoly, a6: QPoly) -> (QPoly, QPoly) {
    let g = poly_gcd(&a4, &a6);
    if g.is_constant() {
        return (a4, a6);
    }
    let fac = factor_over_rationals(&g).expect("nonzero gcd");
    let (mut a4, mut a6) = (a4, a6);
    for (q, _) in &fac.factors {
        let q = q.monic();
        let v4 = super::place::poly_valuation_at(&a4, &q);
        let v6 = super::place::poly_valuation_at(&a6, &q);
        let k4 = v4.finite().map_or(i64::MAX, |v| v / 4);
        let k6 = v6.finite().map_or(i64::MAX, |v| v / 6);
        let k = k4.min(k6) as u32;
        if k > 0 {
            a4 = a4.div_exact(&q.pow(4 * k)).expect("valuation ≥ 4k");
            a6 = a6.div_exact(&q.pow(6 * k)).expect("valuation ≥ 6k");
        }
    }
    (a4, a6)
}

/// Global minimal model over `ℚ[t]` via `x ↦ u²x`, `y ↦ u³y`.
///
/// Denominators are cleared with `u = 1/lcm(den)`, then every irreducible `q`
/// with `v_q(a₄) ≥ 4` and `v_q(a₆) ≥ 6` is divided out. No constant rescaling.
pub fn minimal_model(
    a4_raw: &QRatFunc,
    a6_raw: &QRatFunc,
) -> Result<WeierstrassSurface, WeierstrassError> {
    let h = poly_lcm(a4_raw.denom(), a6_raw.denom());
    let clear = |a: &QRatFunc, e: u32| -> QPoly {
        let scaled = &RatFunc::from_poly(h.pow(e)) * a;
        scaled.as_poly().expect("denominator divides h").clone()
    };
    let a4 = clear(a4_raw, 4);
    let a6 = clear(a6_raw, 6);
    if discriminant_of(&a4, &a6).is_zero() {
        return Err(WeierstrassError::SingularGenericFibre);
    }
    let (a4, a6) = strip_non_minimal(a4, a6);
    let d = weight_bound(a4.degree(), 4).max(weight_bound(a6.degree(), 6));
    if d == 0 {
        return Err(WeierstrassError::NoSingularFibre);
    }
    let delta = discriminant_of(&a4, &a6);
    let j = j_invariant_of(&a4, &delta).expect("Δ ≠ 0");
    let (a4_inf, a6_inf) = chart_swap(&a4, &a6, d);
    let delta_inf = delta.reverse_padded(12 * d);
    debug_assert_eq!(delta_inf, discriminant_of(&a4_inf, &a6_inf));
    let j_inf = j_invariant_of(&a4_inf, &delta_inf).expect("Δ' ≠ 0");
    Ok(WeierstrassSurface {
        a4,
        a6,
        d,
        delta,
        j,
        a4_inf,
        a6_inf,
        delta_inf,
        j_inf,
        delta_factors: OnceLock::new(),
    })
}

/// Kodaira type at a place; `Infinity` is read on the chart `s = 1/t`.
pub fn kodaira_type_at(s: &WeierstrassSurface, v: &QPlace) -> KodairaType {
    let (a4, a6, delta) = match v {
        QPlace::Finite(_) => (&s.a4, &s.a6, &s.delta),
        QPlace::Infinity => (&s.a4_inf, &s.a6_inf, &s.delta_inf),
    };
    let triple = (
        place_valuation(a4, v),
        place_valuation(a6, v),
        place_valuation(delta, v),
    );
    kodaira_from_valuations(triple.0, triple.1, triple.2)
        .unwrap_or_else(|| panic!("minimal model violates the Kodaira table at {v}: {triple:?}"))
}

/// Singular fibres of a surface. A place of degree `k` stands for `k`
/// conjugate geometric fibres of the same type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibreConfiguration {
    pub d: usize,
    pub entries: BTreeMap<QPlace, KodairaType>,
}

impl FibreConfiguration {
    /// Σ deg(v)·e(v) over singular places; equals `12d`.
    pub fn euler_sum(&self) -> u64 {
        self.entries
            .iter()
            .map(|(v, k)| v.degree() as u64 * k.euler() as u64)
            .sum()
    }

    pub fn has_reducible_fibre(&self) -> bool {
        self.entries.values().any(|k| k.is_reducible())
    }

    /// Geometric singular fibres as a sorted list of types with multiplicity.
    pub fn geometric_types(&self) -> Vec<KodairaType> {
        let mut out: Vec<KodairaType> = self
            .entries
            .iter()
            .flat_map(|(v, k)| std::iter::repeat_n(*k, v.degree()))
            .collect();
        out.sort();
        out
    }
}

pub fn fibre_configuration(s: &WeierstrassSurface) -> FibreConfiguration {
    let mut entries = BTreeMap::new();
    for (q, _) in &s.delta_factorization().factors {
        let place = QPlace::Finite(q.monic());
        let k = kodaira_type_at(s, &place);
        entries.insert(place, k);
    }
    if s.delta_inf.trailing_zeros() != Some(0) {
        entries.insert(QPlace::Infinity, kodaira_type_at(s, &QPlace::Infinity));
    }
    FibreConfiguration { d: s.d, entries }
}

/// `2 + Σ (m_v − 1)` over geometric singular fibres.
pub fn trivial_lattice_rank(cfg: &FibreConfiguration) -> u64 {
    2 + cfg
        .entries
        .iter()
        .map(|(v, k)| v.degree() as u64 * (k.components() as u64 - 1))
        .sum::<u64>()
}
