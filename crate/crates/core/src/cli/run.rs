use std::panic::{catch_unwind, AssertUnwindSafe};

use serde_json::{json, Map, Value};

use crate::algebra::field::is_prime_u64;
use crate::algebra::{reduce_mod_p, RatFunc};
use crate::cover::{
    build_cover_from_x, build_cover_with_star, torsion_witness, CoverError, DEFAULT_LAMBDA_MAX,
};
use crate::sections::{
    candidate_count, default_num_deg, search_sections, SectionError, DEFAULT_BUDGET,
};
use crate::sieve::{check_star, StarChecker};
use crate::weierstrass::{fibre_configuration, trivial_lattice_rank, WeierstrassSurface};

use super::parse::parse_polynomial;
use super::report;
use super::surface_file::SurfaceFile;
use super::{Cli, Command};

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExitCode {
    Ok = 0,
    Domain = 1,
    Input = 2,
    Internal = 3,
}

impl ExitCode {
    fn status(self) -> &'static str {
        match self {
            ExitCode::Ok => "ok",
            ExitCode::Domain => "domain-error",
            ExitCode::Input => "input-error",
            ExitCode::Internal => "internal-error",
        }
    }
}

/// Per-invocation overrides; these win over the surface file's options.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub prime: Option<u64>,
    pub x: Option<String>,
    pub num_deg: Option<usize>,
    pub den_deg: Option<usize>,
    pub lambda_max: Option<u64>,
    pub force: bool,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub exit: ExitCode,
}

struct Failure {
    exit: ExitCode,
    error: Value,
}

fn failure(exit: ExitCode, kind: &str, message: impl ToString) -> Failure {
    Failure {
        exit,
        error: json!({ "kind": kind, "message": message.to_string() }),
    }
}

fn input_error(kind: &str, message: impl ToString) -> Failure {
    failure(ExitCode::Input, kind, message)
}

fn cover_error_kind(e: &CoverError) -> &'static str {
    match e {
        CoverError::BadPrimeRefused { .. } => "BadPrimeRefused",
        CoverError::NotASection(_) => "NotASection",
        CoverError::TwoTorsionDegenerate => "TwoTorsionDegenerate",
        CoverError::ScanExhausted { .. } => "ScanExhausted",
        CoverError::UnsupportedPrime(_) => "UnsupportedPrime",
        CoverError::ReductionFails(_) => "ReductionFails",
        CoverError::InvalidCover(_) => "InvalidCover",
    }
}

fn cover_error_json(e: &CoverError) -> Value {
    let mut v = json!({ "kind": cover_error_kind(e), "message": e.to_string() });
    let obj = v.as_object_mut().expect("object");
    match e {
        CoverError::BadPrimeRefused { p, reasons } => {
            obj.insert("prime".into(), json!(p));
            obj.insert("reasons".into(), json!(reasons));
        }
        CoverError::ScanExhausted { lambda_max } => {
            obj.insert("lambda_max".into(), json!(lambda_max));
        }
        CoverError::NotASection(p)
        | CoverError::UnsupportedPrime(p)
        | CoverError::ReductionFails(p) => {
            obj.insert("prime".into(), json!(p));
        }
        _ => {}
    }
    v
}

fn cover_failure(e: CoverError) -> Failure {
    let exit = match e {
        CoverError::UnsupportedPrime(_) | CoverError::ReductionFails(_) => ExitCode::Input,
        CoverError::InvalidCover(_) => ExitCode::Internal,
        _ => ExitCode::Domain,
    };
    Failure {
        exit,
        error: cover_error_json(&e),
    }
}

fn section_failure(e: SectionError) -> Failure {
    match e {
        SectionError::BudgetExceeded { candidates, budget } => Failure {
            exit: ExitCode::Domain,
            error: json!({
                "kind": "BudgetExceeded",
                "message": e.to_string(),
                "candidates": candidates.to_string(),
                "budget": budget,
            }),
        },
        SectionError::UnsupportedPrime(_) => input_error("UnsupportedPrime", e),
        SectionError::ReductionFails(_) => input_error("ReductionFails", e),
    }
}

struct Settings {
    num_deg: Option<usize>,
    den_deg: usize,
    lambda_max: u64,
    seed: u64,
    budget: u64,
}

impl Settings {
    fn num_deg(&self, s: &WeierstrassSurface) -> usize {
        self.num_deg
            .unwrap_or_else(|| default_num_deg(s, self.den_deg))
    }
}

fn settings(file: &SurfaceFile, flags: &Flags) -> Settings {
    let o = &file.options;
    Settings {
        num_deg: flags.num_deg.or(o.num_deg),
        den_deg: flags.den_deg.or(o.den_deg).unwrap_or(0),
        lambda_max: flags
            .lambda_max
            .or(o.lambda_max)
            .unwrap_or(DEFAULT_LAMBDA_MAX),
        seed: flags.seed.or(o.seed).unwrap_or(0),
        budget: o.budget.unwrap_or(DEFAULT_BUDGET),
    }
}

fn input_echo(file: &SurfaceFile, flags: &Flags, set: &Settings) -> Value {
    let o = &file.options;
    json!({
        "name": file.name,
        "a4": file.a4,
        "a6": file.a6,
        "options": {
            "primes": o.primes,
            "num_deg": o.num_deg,
            "den_deg": o.den_deg,
            "lambda_max": o.lambda_max,
            "seed": o.seed,
            "budget": o.budget,
        },
        "flags": {
            "prime": flags.prime,
            "x": flags.x,
            "num_deg": flags.num_deg,
            "den_deg": flags.den_deg,
            "lambda_max": flags.lambda_max,
            "force": flags.force,
            "seed": flags.seed,
        },
        "seed": set.seed,
    })
}

fn require_prime(flags: &Flags) -> Result<u64, Failure> {
    let p = flags
        .prime
        .ok_or_else(|| input_error("MissingArgument", "--prime is required"))?;
    if !is_prime_u64(p) {
        return Err(input_error("InvalidPrime", format!("{p} is not prime")));
    }
    if p == 2 {
        return Err(input_error(
            "UnsupportedPrime",
            "p = 2 is not supported (need an odd prime)",
        ));
    }
    Ok(p)
}

fn analyze(s: &WeierstrassSurface, checker: &StarChecker) -> Value {
    let cfg = fibre_configuration(s);
    let fib = report::fibres(s, &cfg);
    let bad = crate::sieve::bad_primes::bad_primes_from_checker(
        checker,
        crate::sieve::DEFAULT_FACTOR_BUDGET,
    );
    json!({
        "model": report::model(s),
        "fibres": fib["fibres"],
        "configuration": fib["configuration"],
        "euler_sum": cfg.euler_sum(),
        "euler_expected": 12 * s.d() as u64,
        "trivial_lattice_rank": trivial_lattice_rank(&cfg),
        "has_reducible_fibre": cfg.has_reducible_fibre(),
        "bad_primes": report::bad_primes(&bad),
    })
}

fn sections_cmd(
    s: &WeierstrassSurface,
    flags: &Flags,
    set: &Settings,
    warnings: &mut Vec<String>,
) -> Result<Value, Failure> {
    let p = require_prime(flags)?;
    let star = check_star(s, p);
    if !star.verdict {
        warnings.push(format!(
            "prime {p} fails the good-prime check ({})",
            star.failures().join("; ")
        ));
    }
    let num_deg = set.num_deg(s);
    let found = search_sections(s, p, num_deg, set.den_deg, set.budget).map_err(section_failure)?;
    Ok(json!({
        "prime": p,
        "bounds": { "num_deg": num_deg, "den_deg": set.den_deg },
        "candidates": candidate_count(p, num_deg, set.den_deg).to_string(),
        "count": found.len(),
        "sections": found.iter().map(report::section).collect::<Vec<_>>(),
        "star": report::star(&star),
    }))
}

fn cover_cmd(
    s: &WeierstrassSurface,
    flags: &Flags,
    set: &Settings,
    warnings: &mut Vec<String>,
) -> Result<Value, Failure> {
    let p = require_prime(flags)?;
    let src = flags
        .x
        .as_ref()
        .ok_or_else(|| input_error("MissingArgument", "--x is required"))?;
    let x = parse_polynomial(src).map_err(|e| input_error("ParseError", format!("--x: {e}")))?;
    let xbar = reduce_mod_p(&RatFunc::from_poly(x), p).map_err(|e| {
        input_error(
            "ReductionFails",
            format!("--x does not reduce modulo {p}: {e}"),
        )
    })?;
    let star = check_star(s, p);
    if !star.verdict && flags.force {
        // recorded up front so it survives a later domain error
        warnings.push(format!(
            "prime {p} fails the good-prime check ({}); proceeding because of --force, the torsion statement needs a good prime",
            star.failures().join("; ")
        ));
    }
    let out =
        build_cover_from_x(s, p, &xbar, set.lambda_max, flags.force).map_err(cover_failure)?;
    let cfg = fibre_configuration(s);
    let w = torsion_witness(&out.cover, &out.report, &cfg).map_err(cover_failure)?;
    Ok(json!({
        "cover": report::cover(&out.cover),
        "special_fibre": report::special_fibre(&out.report),
        "witness": report::witness(&w),
        "star": report::star(&star),
    }))
}

fn verify_cmd(s: &WeierstrassSurface, flags: &Flags, set: &Settings, file: &SurfaceFile) -> Value {
    let checker = StarChecker::new(s);
    let analysis = analyze(s, &checker);
    let cfg = fibre_configuration(s);
    let primes: Vec<u64> = match (&flags.prime, &file.options.primes) {
        (Some(p), _) => vec![*p],
        (None, Some(list)) => list.clone(),
        (None, None) => {
            let bad = crate::sieve::bad_primes::bad_primes_from_checker(
                &checker,
                crate::sieve::DEFAULT_FACTOR_BUDGET,
            );
            (5..50)
                .filter(|&p| is_prime_u64(p) && !bad.contains(p))
                .collect()
        }
    };
    let num_deg = set.num_deg(s);
    let mut per_prime = Vec::new();
    let mut witnesses = 0u64;
    let mut failures = 0u64;
    for p in primes {
        if p == 2 {
            per_prime.push(json!({ "prime": p, "error": { "kind": "UnsupportedPrime", "message": "p = 2 is not supported" } }));
            failures += 1;
            continue;
        }
        let star = checker.check(p);
        let mut entry = Map::new();
        entry.insert("prime".into(), json!(p));
        entry.insert("star_verdict".into(), json!(star.verdict));
        match search_sections(s, p, num_deg, set.den_deg, set.budget) {
            Err(e) => {
                entry.insert("error".into(), section_failure(e).error);
                failures += 1;
            }
            Ok(found) => {
                entry.insert("section_count".into(), json!(found.len()));
                let mut covers = Vec::new();
                for sec in &found {
                    let mut c = Map::new();
                    c.insert("section".into(), report::section(sec));
                    let built = build_cover_with_star(s, &star, sec, set.lambda_max, flags.force)
                        .and_then(|out| {
                            torsion_witness(&out.cover, &out.report, &cfg).map(|w| (out, w))
                        });
                    match built {
                        Ok((out, w)) => {
                            witnesses += 1;
                            c.insert("lambda".into(), json!(out.cover.lift.lambda));
                            c.insert("genus".into(), json!(out.cover.genus));
                            c.insert("kernel_S".into(), report::poly(&out.cover.kernel.s));
                            c.insert("split".into(), json!(out.report.split));
                            c.insert(
                                "witness".into(),
                                json!({ "multiplier": w.multiplier, "caveat_n": w.caveat_n }),
                            );
                        }
                        Err(e) => {
                            if !matches!(e, CoverError::TwoTorsionDegenerate) {
                                failures += 1;
                            }
                            c.insert("error".into(), cover_error_json(&e));
                        }
                    }
                    covers.push(Value::Object(c));
                }
                entry.insert("covers".into(), Value::Array(covers));
            }
        }
        per_prime.push(Value::Object(entry));
    }
    json!({
        "analysis": analysis,
        "bounds": { "num_deg": num_deg, "den_deg": set.den_deg },
        "primes": per_prime,
        "witness_count": witnesses,
        "failure_count": failures,
    })
}

fn dispatch(
    command: Command,
    file: &SurfaceFile,
    flags: &Flags,
    set: &Settings,
    warnings: &mut Vec<String>,
) -> Result<Value, Failure> {
    let s = file
        .surface()
        .map_err(|e| input_error("InvalidSurface", e))?;
    match command {
        Command::Analyze => Ok(analyze(&s, &StarChecker::new(&s))),
        Command::Sections => sections_cmd(&s, flags, set, warnings),
        Command::Cover => cover_cmd(&s, flags, set, warnings),
        Command::Verify => Ok(verify_cmd(&s, flags, set, file)),
    }
}

fn envelope(
    command: Command,
    input: Value,
    results: Value,
    warnings: Vec<String>,
    error: Value,
    exit: ExitCode,
) -> Value {
    json!({
        "tool": { "name": env!("CARGO_PKG_NAME"), "version": env!("CARGO_PKG_VERSION") },
        "command": command.as_str(),
        "input": input,
        "results": results,
        "warnings": warnings,
        "error": error,
        "status": exit.status(),
        "exit_code": exit as i32,
    })
}

/// Runs one command on the text of a surface file.
pub fn run(command: Command, surface_text: &str, flags: &Flags) -> Outcome {
    let file = match SurfaceFile::parse(surface_text) {
        Ok(f) => f,
        Err(e) => {
            let f = input_error("InvalidSurfaceFile", e);
            return Outcome {
                report: envelope(
                    command,
                    Value::Null,
                    Value::Null,
                    Vec::new(),
                    f.error,
                    f.exit,
                ),
                exit: f.exit,
            };
        }
    };
    let set = settings(&file, flags);
    let input = input_echo(&file, flags, &set);
    let mut warnings = Vec::new();
    let result = catch_unwind(AssertUnwindSafe(|| {
        dispatch(command, &file, flags, &set, &mut warnings)
    }));
    let (results, error, exit) = match result {
        Ok(Ok(v)) => (v, Value::Null, ExitCode::Ok),
        Ok(Err(f)) => (Value::Null, f.error, f.exit),
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "internal error".into());
            (
                Value::Null,
                json!({ "kind": "InternalError", "message": msg }),
                ExitCode::Internal,
            )
        }
    };
    Outcome {
        report: envelope(command, input, results, warnings, error, exit),
        exit,
    }
}

/// Pretty-printed report with a trailing newline.
pub fn render(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Reads the input file, runs, and writes the report to `--out` or returns it.
pub fn run_cli(cli: &Cli) -> (Option<String>, ExitCode) {
    let flags = cli.flags();
    let outcome = match std::fs::read_to_string(&cli.input) {
        Ok(text) => run(cli.command, &text, &flags),
        Err(e) => {
            let f = input_error("Io", format!("cannot read {}: {e}", cli.input.display()));
            Outcome {
                report: envelope(
                    cli.command,
                    Value::Null,
                    Value::Null,
                    Vec::new(),
                    f.error,
                    f.exit,
                ),
                exit: f.exit,
            }
        }
    };
    let text = render(&outcome.report);
    match &cli.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => (None, outcome.exit),
            Err(e) => {
                eprintln!("ellsurf: cannot write {}: {e}", path.display());
                (Some(text), ExitCode::Input)
            }
        },
        None => (Some(text), outcome.exit),
    }
}
