//! Factorization over ℚ: factor modulo an auxiliary prime, Hensel-lift the
//! factors past a Mignotte-style coefficient bound, then recombine subsets.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::error::AlgebraError;
use super::factor_fp::{count_factors_squarefree, factor_mod_p};
use super::factorization::Factorization;
use super::field::{is_prime_u64, Modulus, Rat};
use super::intpoly::{self, IntPoly};
use super::poly::{FpPoly, QPoly};
use super::squarefree::squarefree_decomposition;

/// How many admissible primes are tried before committing to the one with
/// the fewest modular factors.
const PRIME_TRIALS: usize = 5;

/// Irreducible factorization over ℚ. Factors are primitive integer
/// polynomials with positive leading coefficient.
pub fn factor_over_rationals(a: &QPoly) -> Result<Factorization<Rat>, AlgebraError> {
    if a.is_zero() {
        return Err(AlgebraError::ZeroInput("factor_over_rationals"));
    }
    let sqf = squarefree_decomposition(a)?;
    let mut factors = Vec::new();
    for (part, mult) in &sqf.parts {
        let prim = part.primitive_decomposition().1;
        for f in factor_squarefree_primitive(&prim) {
            factors.push((QPoly::from_bigints(&f), *mult));
        }
    }
    let lc_prod = factors
        .iter()
        .fold(<Rat as num_traits::One>::one(), |acc, (f, m)| {
            acc * num_traits::pow(f.lc(), *m as usize)
        });
    let unit = a.lc() / lc_prod;
    let mut out = Factorization { unit, factors };
    out.normalize();
    Ok(out)
}

/// Irreducible factors of a squarefree primitive integer polynomial.
pub fn factor_squarefree_primitive(f: &[BigInt]) -> Vec<IntPoly> {
    let n = intpoly::degree(f).expect("nonzero");
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![intpoly::primitive(f)];
    }
    let mut out = Vec::new();
    let mut f = intpoly::primitive(f);
    // strip the factor t, which every prime would otherwise see
    if f[0].is_zero() {
        out.push(intpoly::from_i64s(&[0, 1]));
        f.remove(0);
        if f.len() <= 2 {
            if f.len() == 2 {
                out.push(f);
            }
            return out;
        }
    }
    let Some(p) = choose_prime(&f) else {
        unreachable!("a squarefree integer polynomial has good primes");
    };
    let m = Modulus::new(p).expect("odd prime");
    let fbar = int_to_fp(&f, m);
    let modular = factor_mod_p(&fbar).expect("nonzero");
    if modular.factors.len() == 1 {
        out.push(f);
        return out;
    }
    let monic: Vec<IntPoly> = modular.factors.iter().map(|(g, _)| fp_to_int(g)).collect();
    let bound = coefficient_bound(&f);
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus = &modulus * &modulus;
    }
    let lifted = hensel_lift_tree(&f, &monic, &pb, &modulus);
    out.extend(recombine(f, lifted, &modulus));
    out
}

/// Coefficients of any candidate `lc(f) · g` with `g | f` are bounded by
/// `|lc(f)| · 2^n · ‖f‖₂`; the modulus must exceed twice that.
fn coefficient_bound(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + 1;
    intpoly::lc(f).abs() * (BigInt::one() << n) * norm * 2
}

fn choose_prime(f: &[BigInt]) -> Option<u64> {
    let lc = intpoly::lc(f);
    let mut best: Option<(usize, u64)> = None;
    let mut tried = 0;
    let mut p = 3u64;
    while tried < PRIME_TRIALS && p < 100_000 {
        if is_prime_u64(p) && !(&lc % p).is_zero() {
            let m = Modulus::new(p).expect("odd prime");
            let fbar = int_to_fp(f, m);
            if super::squarefree::is_squarefree(&fbar) {
                tried += 1;
                let count = count_factors_squarefree(&fbar.monic());
                if best.is_none_or(|(c, _)| count < c) {
                    best = Some((count, p));
                }
                if count == 1 {
                    break;
                }
            }
        }
        p += 2;
    }
    best.map(|(_, p)| p)
}

fn int_to_fp(f: &[BigInt], m: Modulus) -> FpPoly {
    FpPoly::new(m, f.iter().map(|c| m.reduce_int(c)).collect())
}

fn fp_to_int(f: &FpPoly) -> IntPoly {
    f.coeffs()
        .iter()
        .map(|c| BigInt::from(c.residue()))
        .collect()
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Lifts `f ≡ lc(f) · ∏ factors (mod p)` to monic factors modulo `target`,
/// which must be p raised to a power of two.
fn hensel_lift_tree(
    f: &[BigInt],
    factors: &[IntPoly],
    p: &BigInt,
    target: &BigInt,
) -> Vec<IntPoly> {
    if factors.len() == 1 {
        let inv = inverse_mod(&intpoly::lc(f), target);
        return vec![intpoly::reduce_mod(&intpoly::scale(f, &inv), target)];
    }
    lift_split(f, factors, p, target)
}

fn lift_split(f: &[BigInt], factors: &[IntPoly], p: &BigInt, target: &BigInt) -> Vec<IntPoly> {
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let lc = intpoly::lc(f);
    let mut g = intpoly::reduce_mod(&intpoly::scale(&product_mod(left, p), &lc), p);
    let mut h = product_mod(right, p);
    let (mut s, mut t) = bezout_mod_p(&g, &h, p);
    let mut m = p.clone();
    while &m < target {
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let mut out = hensel_lift_tree(&g, left, p, target);
    out.extend(hensel_lift_tree(&h, right, p, target));
    out
}

fn product_mod(polys: &[IntPoly], m: &BigInt) -> IntPoly {
    polys
        .iter()
        .fold(vec![BigInt::one()], |acc, q| intpoly::mul_mod(&acc, q, m))
}

/// `(s, t)` with `s·g + t·h ≡ 1 (mod p)`, `deg s < deg h`, `deg t < deg g`.
fn bezout_mod_p(g: &[BigInt], h: &[BigInt], p: &BigInt) -> (IntPoly, IntPoly) {
    let m = Modulus::new(p.to_u64().expect("small prime")).expect("odd prime");
    let (d, s, t) = int_to_fp(g, m).ext_gcd(&int_to_fp(h, m));
    debug_assert!(d.is_one(), "modular factors are coprime");
    (fp_to_int(&s), fp_to_int(&t))
}

/// One quadratic Hensel step from modulus `m` to `m²`.
///
/// Input: `f ≡ g·h`, `s·g + t·h ≡ 1 (mod m)`, `h` monic. Output satisfies the
/// same relations modulo `m²`.
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let m2 = m * m;
    let e = intpoly::reduce_mod(&intpoly::sub(f, &intpoly::mul(g, h)), &m2);
    let (q, r) = intpoly::div_rem_monic_mod(&intpoly::mul(s, &e), h, &m2);
    let g_new = intpoly::reduce_mod(
        &intpoly::add(&intpoly::add(g, &intpoly::mul(t, &e)), &intpoly::mul(&q, g)),
        &m2,
    );
    let h_new = intpoly::reduce_mod(&intpoly::add(h, &r), &m2);
    let b = intpoly::reduce_mod(
        &intpoly::sub(
            &intpoly::add(&intpoly::mul(s, &g_new), &intpoly::mul(t, &h_new)),
            &[BigInt::one()],
        ),
        &m2,
    );
    let (c, d) = intpoly::div_rem_monic_mod(&intpoly::mul(s, &b), &h_new, &m2);
    let s_new = intpoly::reduce_mod(&intpoly::sub(s, &d), &m2);
    let t_new = intpoly::reduce_mod(
        &intpoly::sub(
            &intpoly::sub(t, &intpoly::mul(t, &b)),
            &intpoly::mul(&c, &g_new),
        ),
        &m2,
    );
    (g_new, h_new, s_new, t_new)
}

/// Zassenhaus recombination of lifted monic factors.
fn recombine(mut f: IntPoly, mut lifted: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut found = Vec::new();
    let mut k = 1;
    while 2 * k <= lifted.len() {
        let mut hit = None;
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let lc = intpoly::lc(&f);
            let mut cand = vec![lc.clone()];
            for &i in &combo {
                cand = intpoly::mul_mod(&cand, &lifted[i], modulus);
            }
            let cand: IntPoly = cand
                .iter()
                .map(|c| intpoly::symmetric_mod(c, modulus))
                .collect();
            let cand = intpoly::primitive(&cand);
            if constant_term_divides(&cand, &f) {
                if let Some(q) = intpoly::div_exact(&f, &cand) {
                    hit = Some((combo.clone(), cand, q));
                    break;
                }
            }
            if !next_combination(&mut combo, lifted.len()) {
                break;
            }
        }
        match hit {
            Some((combo, cand, q)) => {
                found.push(cand);
                f = intpoly::primitive(&q);
                for &i in combo.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => k += 1,
        }
    }
    if intpoly::degree(&f).is_some_and(|d| d > 0) {
        found.push(intpoly::primitive(&f));
    }
    found
}

fn constant_term_divides(g: &[BigInt], f: &[BigInt]) -> bool {
    g[0].is_zero() || (&f[0] % &g[0]).is_zero()
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::rat;

    fn q(cs: &[i64]) -> QPoly {
        QPoly::from_ints(cs)
    }

    #[test]
    fn t4_plus_5t() {
        let f = factor_over_rationals(&q(&[0, 5, 0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(q(&[0, 1]), 1), (q(&[5, 0, 0, 1]), 1)]);
        assert_eq!(f.unit, rat(1));
    }

    #[test]
    fn cyclotomic_split() {
        let f = factor_over_rationals(&q(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(
            f.factors,
            vec![(q(&[-1, 1]), 1), (q(&[1, 1]), 1), (q(&[1, 0, 1]), 1)]
        );
    }

    #[test]
    fn irreducible_quadratic() {
        assert!(factor_over_rationals(&q(&[1, 0, 1]))
            .unwrap()
            .is_irreducible());
    }

    #[test]
    fn swinnerton_dyer_like_recombination() {
        // t^4 + 1 splits modulo every prime but is irreducible over Q
        assert!(factor_over_rationals(&q(&[1, 0, 0, 0, 1]))
            .unwrap()
            .is_irreducible());
        // t^4 - 10t^2 + 1 likewise
        assert!(factor_over_rationals(&q(&[1, 0, -10, 0, 1]))
            .unwrap()
            .is_irreducible());
    }

    #[test]
    fn unit_and_multiplicities() {
        let a = (&(&q(&[-2, 3]).pow(2) * &q(&[1, 0, 1])) * &q(&[0, 1]))
            .scale(&crate::algebra::field::rat_from_ints(-7, 3));
        let f = factor_over_rationals(&a).unwrap();
        assert_eq!(f.expand(), a);
        assert_eq!(f.unit, crate::algebra::field::rat_from_ints(-7, 3));
        assert_eq!(f.degree_profile(), vec![(1, 1), (1, 2), (2, 1)]);
    }

    #[test]
    fn non_monic_factors() {
        let a = &(&q(&[1, 2, 3]) * &q(&[-5, 0, 7])) * &q(&[3, -4, 0, 6]);
        let f = factor_over_rationals(&a).unwrap();
        assert_eq!(f.factors.len(), 3);
        assert_eq!(f.expand(), a);
    }

    #[test]
    fn zero_rejected() {
        assert!(factor_over_rationals(&QPoly::zero(())).is_err());
    }
}
