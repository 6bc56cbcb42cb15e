//! JSON encoding of library values. Keys are sorted (serde_json's default
//! map), polynomials print in the input grammar, and integers that do not
//! fit in 64 bits become decimal strings.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::algebra::{Field, Poly, Rat, RatFunc, SquarefreeKernel, Valuation};
use crate::cover::{CoverData, IntersectionPoint, SpecialFibreReport, TorsionWitness};
use crate::sections::SectionModP;
use crate::sieve::{BadPrimeSet, StarReport};
use crate::weierstrass::{place_valuation, FibreConfiguration, Place, WeierstrassSurface};

pub fn bigint(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn biguint(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

/// Rationals print as strings (`"-1"`, `"1/2"`), which the grammar accepts.
pub fn rational(r: &Rat) -> Value {
    json!(r.to_string())
}

pub fn poly<F: Field>(p: &Poly<F>) -> Value {
    json!(p.to_string())
}

pub fn ratfunc<F: Field>(r: &RatFunc<F>) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

pub fn place<F: Field>(v: &Place<F>) -> Value {
    json!(v.to_string())
}

pub fn valuation(v: Valuation) -> Value {
    match v {
        Valuation::Finite(k) => json!(k),
        Valuation::Infinity => json!("inf"),
    }
}

pub fn model(s: &WeierstrassSurface) -> Value {
    json!({
        "a4": poly(s.a4()),
        "a6": poly(s.a6()),
        "d": s.d(),
        "delta": poly(s.delta()),
        "j": ratfunc(s.j()),
        "chart_infinity": {
            "coordinate": "s = 1/t",
            "a4": poly(s.a4_inf()),
            "a6": poly(s.a6_inf()),
            "delta": poly(s.delta_inf()),
            "j": ratfunc(s.j_inf()),
        },
    })
}

pub fn fibres(s: &WeierstrassSurface, cfg: &FibreConfiguration) -> Value {
    let mut list = Vec::new();
    let mut compact = Map::new();
    for (v, k) in &cfg.entries {
        let (a4, a6, delta) = match v {
            Place::Finite(_) => (s.a4(), s.a6(), s.delta()),
            Place::Infinity => (s.a4_inf(), s.a6_inf(), s.delta_inf()),
        };
        list.push(json!({
            "place": place(v),
            "degree": v.degree(),
            "type": k.symbol(),
            "components": k.components(),
            "euler": k.euler(),
            "valuations": {
                "a4": valuation(place_valuation(a4, v)),
                "a6": valuation(place_valuation(a6, v)),
                "delta": valuation(place_valuation(delta, v)),
            },
        }));
        compact.insert(v.to_string(), json!(k.symbol()));
    }
    json!({ "fibres": list, "configuration": compact })
}

pub fn bad_primes(set: &BadPrimeSet) -> Value {
    let mut certs = Map::new();
    for (p, list) in &set.reasons {
        let entries: Vec<Value> = list
            .iter()
            .map(|c| json!({ "kind": c.kind.as_str(), "function": c.function, "detail": c.detail }))
            .collect();
        certs.insert(p.to_string(), Value::Array(entries));
    }
    let unfactored: Vec<Value> = set
        .unfactored
        .iter()
        .map(|(n, c)| json!({ "cofactor": biguint(n), "kind": c.kind.as_str(), "function": c.function, "detail": c.detail }))
        .collect();
    json!({
        "primes": set.primes.iter().map(biguint).collect::<Vec<_>>(),
        "certificates": certs,
        "unfactored": unfactored,
        "complete": set.is_complete(),
    })
}

pub fn star(r: &StarReport) -> Value {
    let diags: Vec<Value> = r
        .diagnostics
        .iter()
        .map(|d| {
            json!({
                "function": d.function,
                "chart": d.chart.to_string(),
                "integral": d.integral,
                "preserved": d.preserved,
                "reason": d.reason,
            })
        })
        .collect();
    json!({
        "prime": r.p,
        "verdict": r.verdict,
        "residue_characteristic_ok": r.residue_characteristic_ok,
        "diagnostics": diags,
        "double_star": r.double_star,
        "double_star_derivation": r.double_star_derivation,
        "failures": r.failures(),
    })
}

pub fn section(s: &SectionModP) -> Value {
    json!({ "x": ratfunc(&s.x), "y": ratfunc(&s.y) })
}

pub fn kernel(k: &SquarefreeKernel) -> Value {
    json!({ "c": rational(&k.c), "S": poly(&k.s), "v": ratfunc(&k.v) })
}

fn intersection_point(pt: &IntersectionPoint) -> Value {
    json!({ "place": place(&pt.place), "kind": pt.kind.to_string(), "order": pt.order })
}

pub fn cover(c: &CoverData) -> Value {
    let rejected: Vec<Value> = c
        .rejected_lambdas
        .iter()
        .map(|r| json!({ "lambda": r.lambda, "reason": r.reason }))
        .collect();
    json!({
        "prime": c.p,
        "section": section(&c.section),
        "lift": {
            "f0": poly(&c.lift.f0),
            "f1": poly(&c.lift.f1),
            "lambda": c.lift.lambda,
            "f": ratfunc(&c.lift.f()),
        },
        "rejected_lambdas": rejected,
        "G": ratfunc(&c.g),
        "J": poly(&c.j),
        "kernel": kernel(&c.kernel),
        "genus": c.genus,
        "two_section": c.two_section_desc,
    })
}

pub fn special_fibre(r: &SpecialFibreReport) -> Value {
    json!({
        "split": r.split,
        "g_bar": ratfunc(&r.g_bar),
        "intersection": r.intersection.iter().map(intersection_point).collect::<Vec<_>>(),
        "involution_swap": r.involution_swap,
    })
}

pub fn witness(w: &TorsionWitness) -> Value {
    json!({
        "prime": w.p,
        "section": section(&w.section),
        "multiplier": w.multiplier,
        "rationale": w.rationale,
        "caveat_n": w.caveat_n,
        "caveat": w.caveat,
    })
}
