use super::field::Field;
use super::poly::Poly;

/// `unit · ∏ polyᵢ^{multᵢ}` with irreducible, pairwise distinct factors.
///
/// Over 𝔽_p the factors are monic. Over ℚ they are primitive integer
/// polynomials with positive leading coefficient, and the unit absorbs the
/// content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<F: Field> {
    pub unit: F,
    pub factors: Vec<(Poly<F>, u32)>,
}

impl<F: Field> Factorization<F> {
    pub fn expand(&self) -> Poly<F> {
        let mut acc = Poly::constant(self.unit.clone());
        for (p, m) in &self.factors {
            acc = &acc * &p.pow(*m);
        }
        acc
    }

    /// Sorts factors canonically and merges repeats.
    pub(crate) fn normalize(&mut self) {
        self.factors.sort();
        let mut merged: Vec<(Poly<F>, u32)> = Vec::with_capacity(self.factors.len());
        for (p, m) in self.factors.drain(..) {
            match merged.last_mut() {
                Some((q, mm)) if *q == p => *mm += m,
                _ => merged.push((p, m)),
            }
        }
        self.factors = merged;
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// `(degree, multiplicity)` pairs, sorted.
    pub fn degree_profile(&self) -> Vec<(usize, u32)> {
        let mut v: Vec<_> = self
            .factors
            .iter()
            .map(|(p, m)| (p.degree().unwrap_or(0), *m))
            .collect();
        v.sort();
        v
    }
}
