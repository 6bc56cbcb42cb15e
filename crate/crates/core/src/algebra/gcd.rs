//! Polynomial gcd.

use super::field::Field;
use super::intpoly;
use super::poly::{Poly, QPoly};

/// Monic gcd by the Euclidean algorithm. `gcd(0, 0) = 0`.
pub fn euclid_gcd<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    while !r1.is_zero() {
        let r = r0.rem(&r1);
        r0 = r1;
        r1 = if r.is_zero() { r } else { r.monic() };
    }
    r0.monic()
}

/// Monic gcd over ℚ, computed on primitive integer forms.
pub fn rational_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() && b.is_zero() {
        return QPoly::zero(());
    }
    let (_, pa) = a.primitive_decomposition();
    let (_, pb) = b.primitive_decomposition();
    let g = intpoly::gcd(&pa, &pb);
    QPoly::from_bigints(&g).monic()
}

/// Monic greatest common divisor of two polynomials.
pub fn poly_gcd<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    F::poly_gcd(a, b)
}

/// Least common multiple, monic.
pub fn poly_lcm<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    if a.is_zero() || b.is_zero() {
        return Poly::zero(a.ctx());
    }
    let g = poly_gcd(a, b);
    (a * &b.div_exact(&g).expect("gcd divides")).monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Modulus;
    use crate::algebra::poly::FpPoly;

    #[test]
    fn gcd_over_q() {
        let a = QPoly::from_ints(&[-1, 0, 1]);
        let b = QPoly::from_ints(&[1, -2, 1]);
        assert_eq!(poly_gcd(&a, &b), QPoly::from_ints(&[-1, 1]));
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let a = QPoly::from_ints(&[4, 0, 2]);
        assert_eq!(poly_gcd(&a, &QPoly::zero(())), QPoly::from_ints(&[2, 0, 1]));
        assert!(poly_gcd(&QPoly::zero(()), &QPoly::zero(())).is_zero());
    }

    #[test]
    fn gcd_over_f5() {
        let m = Modulus::new(5).unwrap();
        let a = FpPoly::from_residues(m, &[0, 4, 0, 0, 0, 1]);
        let b = FpPoly::from_residues(m, &[1, 0, 1]);
        assert_eq!(poly_gcd(&a, &b), b);
    }

    #[test]
    fn euclid_and_integer_routes_agree() {
        let a = &QPoly::from_ints(&[3, 1, -4, 1]) * &QPoly::from_ints(&[2, 7, 1]);
        let b = &QPoly::from_ints(&[-5, 9, 2]) * &QPoly::from_ints(&[2, 7, 1]);
        assert_eq!(euclid_gcd(&a, &b), rational_gcd(&a, &b));
    }
}
