//! Integer factorization with a work budget.
//!
//! Trial division, then Miller–Rabin and Pollard–Brent. Cofactors the budget
//! could not split are returned as-is and flagged; callers can still test
//! divisibility by them.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TRIAL_LIMIT: u64 = 1 << 16;
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntFactorization {
    /// Primes (or probable primes above 2^64) with multiplicity, ascending.
    pub primes: Vec<(BigUint, u32)>,
    /// Composite cofactors left unsplit.
    pub unfactored: Vec<BigUint>,
}

impl IntFactorization {
    pub fn is_complete(&self) -> bool {
        self.unfactored.is_empty()
    }

    /// Whether `p` divides the factored integer.
    pub fn divisible_by(&self, p: u64) -> bool {
        let pb = BigUint::from(p);
        self.primes.iter().any(|(q, _)| *q == pb)
            || self.unfactored.iter().any(|c| (c % &pb).is_zero())
    }
}

pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return super::field::is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'bases: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint, rng: &mut ChaCha8Rng, budget: &mut u64) -> Option<BigUint> {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    while *budget > 0 {
        let mut y = rng.gen_biguint_range(&one, n);
        let c = rng.gen_biguint_range(&one, n);
        let m = 128u64;
        let mut g = one.clone();
        let mut r = 1u64;
        let mut q = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &c) % n;
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = (&y * &y + &c) % n;
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (&q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
                *budget = budget.saturating_sub(m.min(r));
                if *budget == 0 && g == one {
                    return None;
                }
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = (&ys * &ys + &c) % n;
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if g != *n && g >= two {
            return Some(g);
        }
    }
    None
}

/// Factor `|n|` with `budget` Pollard iterations in total.
pub fn factor_integer(n: &BigInt, budget: u64) -> IntFactorization {
    let mut out = IntFactorization::default();
    let mut n = n.abs().to_biguint().expect("nonnegative");
    if n.is_zero() {
        return out;
    }
    let mut found: Vec<BigUint> = Vec::new();
    let mut p = 2u64;
    while p < TRIAL_LIMIT {
        let pb = BigUint::from(p);
        if &pb * &pb > n {
            break;
        }
        while (&n % &pb).is_zero() {
            n /= &pb;
            found.push(pb.clone());
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut budget = budget;
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        let small_enough = BigUint::from(TRIAL_LIMIT);
        if &small_enough * &small_enough > m || is_probable_prime(&m) {
            found.push(m);
            continue;
        }
        match pollard_brent(&m, &mut rng, &mut budget) {
            Some(d) => {
                stack.push(&m / &d);
                stack.push(d);
            }
            None => out.unfactored.push(m),
        }
    }
    found.sort();
    for q in found {
        match out.primes.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.primes.push((q, 1)),
        }
    }
    out.unfactored.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn primes_of(n: i64) -> Vec<(u64, u32)> {
        factor_integer(&BigInt::from(n), 100_000)
            .primes
            .into_iter()
            .map(|(p, e)| (p.to_u64().unwrap(), e))
            .collect()
    }

    #[test]
    fn small_numbers() {
        assert_eq!(primes_of(-314928), vec![(2, 4), (3, 9)]);
        assert_eq!(primes_of(1), vec![]);
        assert_eq!(primes_of(97), vec![(97, 1)]);
        assert_eq!(
            primes_of(2 * 2 * 65537 * 65539),
            vec![(2, 2), (65537, 1), (65539, 1)]
        );
    }

    #[test]
    fn pollard_splits_semiprime() {
        let p = BigInt::from(1_000_000_007u64);
        let q = BigInt::from(998_244_353u64);
        let f = factor_integer(&(&p * &q * &p), 1_000_000);
        assert!(f.is_complete());
        assert_eq!(f.primes.len(), 2);
        assert!(f.divisible_by(998_244_353));
    }

    #[test]
    fn exhausted_budget_keeps_cofactor() {
        let p = BigInt::from(1_000_000_007u64);
        let q = BigInt::from(998_244_353u64);
        let f = factor_integer(&(&p * &q), 0);
        assert_eq!(f.unfactored.len(), 1);
        assert!(f.divisible_by(1_000_000_007));
        assert!(!f.divisible_by(13));
    }

    #[test]
    fn large_prime_detected() {
        let p: BigUint = "170141183460469231731687303715884105727".parse().unwrap();
        assert!(is_probable_prime(&p));
        assert!(!is_probable_prime(&(&p * BigUint::from(3u32))));
    }
}
