//! Flat `key = value` surface descriptions.
//!
//! ```text
//! # E3
//! name = e3
//! a4 = 0
//! a6 = -t^2
//! primes = 5, 7, 11
//! ```

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{QPoly, RatFunc};
use crate::weierstrass::{minimal_model, WeierstrassError, WeierstrassSurface};

use super::parse::{parse_polynomial, ParseError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceFileError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("missing required key '{0}'")]
    MissingKey(&'static str),
    #[error("key '{key}': {source}")]
    Expression {
        key: &'static str,
        source: ParseError,
    },
    #[error(transparent)]
    Surface(#[from] WeierstrassError),
}

/// Optional overrides carried by a surface file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurfaceOptions {
    pub primes: Option<Vec<u64>>,
    pub num_deg: Option<usize>,
    pub den_deg: Option<usize>,
    pub lambda_max: Option<u64>,
    pub seed: Option<u64>,
    pub budget: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceFile {
    pub name: String,
    pub a4: String,
    pub a6: String,
    pub options: SurfaceOptions,
}

const KEYS: [&str; 9] = [
    "name",
    "a4",
    "a6",
    "primes",
    "num_deg",
    "den_deg",
    "lambda_max",
    "seed",
    "budget",
];

fn parse_number<T: std::str::FromStr>(
    line: usize,
    key: &str,
    v: &str,
) -> Result<T, SurfaceFileError> {
    v.parse().map_err(|_| SurfaceFileError::Format {
        line,
        message: format!("'{key}' expects a non-negative integer, got '{v}'"),
    })
}

impl SurfaceFile {
    pub fn parse(text: &str) -> Result<SurfaceFile, SurfaceFileError> {
        let mut seen: BTreeMap<&'static str, (usize, String)> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((k, v)) = content.split_once('=') else {
                return Err(SurfaceFileError::Format {
                    line,
                    message: "expected 'key = value'".into(),
                });
            };
            let k = k.trim();
            let Some(&key) = KEYS.iter().find(|&&known| known == k) else {
                return Err(SurfaceFileError::Format {
                    line,
                    message: format!("unknown key '{k}'"),
                });
            };
            if seen.insert(key, (line, v.trim().to_string())).is_some() {
                return Err(SurfaceFileError::Format {
                    line,
                    message: format!("duplicate key '{key}'"),
                });
            }
        }
        let take = |key: &'static str| seen.get(key).cloned();
        let (_, a4) = take("a4").ok_or(SurfaceFileError::MissingKey("a4"))?;
        let (_, a6) = take("a6").ok_or(SurfaceFileError::MissingKey("a6"))?;
        let name = take("name").map(|(_, v)| v).unwrap_or_default();
        let mut options = SurfaceOptions::default();
        if let Some((line, v)) = take("primes") {
            let primes = v
                .split(',')
                .map(|s| s.trim())
                .filter(|s| !s.is_empty())
                .map(|s| parse_number::<u64>(line, "primes", s))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(bad) = primes
                .iter()
                .find(|&&p| !crate::algebra::field::is_prime_u64(p))
            {
                return Err(SurfaceFileError::Format {
                    line,
                    message: format!("{bad} is not prime"),
                });
            }
            options.primes = Some(primes);
        }
        if let Some((line, v)) = take("num_deg") {
            options.num_deg = Some(parse_number(line, "num_deg", &v)?);
        }
        if let Some((line, v)) = take("den_deg") {
            options.den_deg = Some(parse_number(line, "den_deg", &v)?);
        }
        if let Some((line, v)) = take("lambda_max") {
            options.lambda_max = Some(parse_number(line, "lambda_max", &v)?);
        }
        if let Some((line, v)) = take("seed") {
            options.seed = Some(parse_number(line, "seed", &v)?);
        }
        if let Some((line, v)) = take("budget") {
            options.budget = Some(parse_number(line, "budget", &v)?);
        }
        Ok(SurfaceFile {
            name,
            a4,
            a6,
            options,
        })
    }

    pub fn coefficients(&self) -> Result<(QPoly, QPoly), SurfaceFileError> {
        let a4 = parse_polynomial(&self.a4)
            .map_err(|source| SurfaceFileError::Expression { key: "a4", source })?;
        let a6 = parse_polynomial(&self.a6)
            .map_err(|source| SurfaceFileError::Expression { key: "a6", source })?;
        Ok((a4, a6))
    }

    /// Parses the coefficients and takes the minimal model.
    pub fn surface(&self) -> Result<WeierstrassSurface, SurfaceFileError> {
        let (a4, a6) = self.coefficients()?;
        Ok(minimal_model(
            &RatFunc::from_poly(a4),
            &RatFunc::from_poly(a6),
        )?)
    }
}
