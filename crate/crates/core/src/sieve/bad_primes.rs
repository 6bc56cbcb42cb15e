use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive};

use crate::algebra::intfactor::{factor_integer, IntFactorization};
use crate::algebra::resultant::subresultant_int;
use crate::algebra::{discriminant, QPoly};
use crate::weierstrass::WeierstrassSurface;

use super::data::display_int_poly;
use super::star::StarChecker;

/// Pollard iterations allowed per integer before a cofactor is kept whole.
pub const DEFAULT_FACTOR_BUDGET: u64 = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CertificateKind {
    ResidueChar,
    Denominator,
    LeadingCoefficient,
    DiscriminantOfFactor,
    ResultantOfFactorPair,
    UnitValuation,
}

impl CertificateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateKind::ResidueChar => "residue-char",
            CertificateKind::Denominator => "denominator",
            CertificateKind::LeadingCoefficient => "leading-coefficient",
            CertificateKind::DiscriminantOfFactor => "discriminant-of-factor",
            CertificateKind::ResultantOfFactorPair => "resultant-of-factor-pair",
            CertificateKind::UnitValuation => "unit-valuation",
        }
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The divisibility that convicted a prime.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate {
    pub kind: CertificateKind,
    /// Chart function name (`a4`, `delta'`, ...), empty for the residue characteristic.
    pub function: String,
    pub detail: String,
}

/// Primes at which the good-prime check may fail. Every prime outside the
/// set passes; the set may over-approximate.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BadPrimeSet {
    pub primes: BTreeSet<BigUint>,
    pub reasons: BTreeMap<BigUint, Vec<Certificate>>,
    /// Composite cofactors the factoring budget could not split, with the
    /// certificate they came from. Their prime divisors are bad too.
    pub unfactored: Vec<(BigUint, Certificate)>,
}

impl BadPrimeSet {
    pub fn contains(&self, p: u64) -> bool {
        let pb = BigUint::from(p);
        self.primes.contains(&pb)
            || self
                .unfactored
                .iter()
                .any(|(c, _)| (c % &pb) == BigUint::ZERO)
    }

    /// Listed primes that fit in 64 bits.
    pub fn small_primes(&self) -> Vec<u64> {
        self.primes.iter().filter_map(|p| p.to_u64()).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.unfactored.is_empty()
    }

    fn add(&mut self, p: BigUint, cert: Certificate) {
        self.primes.insert(p.clone());
        let list = self.reasons.entry(p).or_default();
        if !list.contains(&cert) {
            list.push(cert);
        }
    }
}

struct Collector {
    set: BadPrimeSet,
    cache: BTreeMap<BigInt, IntFactorization>,
    budget: u64,
}

impl Collector {
    fn convict(&mut self, n: &BigInt, kind: CertificateKind, function: &str, detail: String) {
        let n = n.abs();
        if n.is_one() || n == BigInt::ZERO {
            return;
        }
        let budget = self.budget;
        let fac = self
            .cache
            .entry(n.clone())
            .or_insert_with(|| factor_integer(&n, budget))
            .clone();
        let cert = Certificate {
            kind,
            function: function.to_string(),
            detail,
        };
        for (p, _) in fac.primes {
            self.set.add(p, cert.clone());
        }
        for c in fac.unfactored {
            if !self
                .set
                .unfactored
                .iter()
                .any(|(d, e)| *d == c && *e == cert)
            {
                self.set.unfactored.push((c, cert.clone()));
            }
        }
    }
}

/// Bad primes with the default factoring budget.
pub fn bad_primes(s: &WeierstrassSurface) -> BadPrimeSet {
    bad_primes_with_budget(s, DEFAULT_FACTOR_BUDGET)
}

pub fn bad_primes_with_budget(s: &WeierstrassSurface, budget: u64) -> BadPrimeSet {
    bad_primes_from_checker(&StarChecker::new(s), budget)
}

pub(crate) fn bad_primes_from_checker(checker: &StarChecker, budget: u64) -> BadPrimeSet {
    let mut c = Collector {
        set: BadPrimeSet::default(),
        cache: BTreeMap::new(),
        budget,
    };
    for p in [2u32, 3] {
        let cert = Certificate {
            kind: CertificateKind::ResidueChar,
            function: String::new(),
            detail: format!("p = {p} is excluded"),
        };
        c.set.add(BigUint::from(p), cert);
    }
    for f in checker.functions() {
        let Some(unit) = &f.unit else { continue };
        c.convict(
            unit.numer(),
            CertificateKind::UnitValuation,
            f.name,
            format!("unit {unit}"),
        );
        c.convict(
            unit.denom(),
            CertificateKind::Denominator,
            f.name,
            format!("unit {unit}"),
        );
        for (g, _) in &f.factors {
            let shown = display_int_poly(g);
            let lc = g.last().expect("nonzero factor");
            c.convict(
                lc,
                CertificateKind::LeadingCoefficient,
                f.name,
                format!("lc({shown}) = {lc}"),
            );
            if g.len() > 2 {
                let disc = discriminant(&QPoly::from_bigints(g)).expect("degree ≥ 2");
                let disc = disc.numer().clone();
                c.convict(
                    &disc,
                    CertificateKind::DiscriminantOfFactor,
                    f.name,
                    format!("disc({shown}) = {disc}"),
                );
            }
        }
        for i in 0..f.factors.len() {
            for j in (i + 1)..f.factors.len() {
                let (a, b) = (&f.factors[i].0, &f.factors[j].0);
                let r = subresultant_int(a, b);
                let detail = format!(
                    "res({}, {}) = {r}",
                    display_int_poly(a),
                    display_int_poly(b)
                );
                c.convict(&r, CertificateKind::ResultantOfFactorPair, f.name, detail);
            }
        }
    }
    for list in c.set.reasons.values_mut() {
        list.sort();
    }
    c.set.unfactored.sort();
    c.set
}
