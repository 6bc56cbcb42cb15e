use std::fmt;

use crate::algebra::square::{squarefree_kernel, SquarefreeKernel};
use crate::algebra::squarefree::is_squarefree;
use crate::algebra::{
    factor_mod_p, is_perfect_square, reduce_mod_p, FpElem, FpRatFunc, QPoly, QRatFunc,
};
use crate::sections::{is_section_x, SectionError, SectionModP};
use crate::sieve::{check_star, StarReport};
use crate::weierstrass::{Place, WeierstrassSurface};

use super::lift::{j_polynomial, lift_x, scan_lambdas, Lift, RejectedLambda};
use super::CoverError;

/// The cover `w² = G(t)` of ℙ¹ with `G = P(f)` for a lift `f` of a section's x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverData {
    pub surface: WeierstrassSurface,
    pub p: u64,
    pub section: SectionModP,
    pub lift: Lift,
    pub rejected_lambdas: Vec<RejectedLambda>,
    pub g: QRatFunc,
    pub j: QPoly,
    pub kernel: SquarefreeKernel,
    pub genus: u64,
    pub two_section_desc: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PointKind {
    Zero,
    Pole,
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointKind::Zero => "zero",
            PointKind::Pole => "pole",
        })
    }
}

/// A point where the two components of the special fibre meet.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IntersectionPoint {
    pub place: Place<FpElem>,
    pub kind: PointKind,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialFibreReport {
    pub split: bool,
    pub g_bar: FpRatFunc,
    pub intersection: Vec<IntersectionPoint>,
    pub involution_swap: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverOutcome {
    pub cover: CoverData,
    pub report: SpecialFibreReport,
    pub warnings: Vec<String>,
}

fn section_error(e: SectionError) -> CoverError {
    match e {
        SectionError::UnsupportedPrime(p) => CoverError::UnsupportedPrime(p),
        SectionError::ReductionFails(p) => CoverError::ReductionFails(p),
        SectionError::BudgetExceeded { .. } => unreachable!("no search here"),
    }
}

fn gate(s: &WeierstrassSurface, p: u64, force: bool) -> Result<Vec<String>, CoverError> {
    if p.is_multiple_of(2) {
        return Err(CoverError::UnsupportedPrime(p));
    }
    gate_with(&check_star(s, p), force)
}

fn gate_with(star: &StarReport, force: bool) -> Result<Vec<String>, CoverError> {
    let p = star.p;
    if p.is_multiple_of(2) {
        return Err(CoverError::UnsupportedPrime(p));
    }
    if star.verdict {
        return Ok(Vec::new());
    }
    let reasons = star.failures();
    if !force {
        return Err(CoverError::BadPrimeRefused { p, reasons });
    }
    Ok(vec![format!(
        "prime {p} fails the good-prime check ({}); the torsion statement needs a good prime",
        reasons.join("; ")
    )])
}

/// Zeros and poles of `ḡ` on ℙ¹, with `ord_∞ = deg(den) − deg(num)`.
pub fn divisor_of(g: &FpRatFunc) -> Vec<IntersectionPoint> {
    let mut out = Vec::new();
    for (poly, kind) in [(g.numer(), PointKind::Zero), (g.denom(), PointKind::Pole)] {
        if poly.is_constant() {
            continue;
        }
        for (q, m) in factor_mod_p(poly).expect("nonzero").factors {
            out.push(IntersectionPoint {
                place: Place::Finite(q),
                kind,
                order: m as u64,
            });
        }
    }
    let at_inf = g.denom().degree_i64() - g.numer().degree_i64();
    if at_inf != 0 {
        let kind = if at_inf > 0 {
            PointKind::Zero
        } else {
            PointKind::Pole
        };
        out.push(IntersectionPoint {
            place: Place::Infinity,
            kind,
            order: at_inf.unsigned_abs(),
        });
    }
    out.sort();
    out
}

impl CoverData {
    /// Re-checks every stated invariant from scratch.
    pub fn verify(&self) -> Result<(), String> {
        let s = &self.surface;
        let p = self.p;
        if !self.section.verify(s) {
            return Err("section does not satisfy the Weierstrass equation".into());
        }
        let f = self.lift.f();
        match reduce_mod_p(&f, p) {
            Ok(fbar) if fbar == self.section.x => {}
            _ => return Err("lift does not reduce to the section's x".into()),
        }
        if self.lift.f1.degree() != self.section.x.denom().degree() {
            return Err("lift changes the denominator degree".into());
        }
        if j_polynomial(s, &self.lift) != self.j {
            return Err("J does not match (f₀+pλ)³ + a₄f₁²(f₀+pλ) + a₆f₁³".into());
        }
        if self.j.is_zero() || !is_squarefree(&self.j) {
            return Err("J is not squarefree".into());
        }
        if !self.j.gcd(&self.lift.f1).is_constant() {
            return Err("J is not coprime to f₁".into());
        }
        if s.rhs(&f) != self.g {
            return Err("G differs from P(f)".into());
        }
        if self.kernel.recombine() != self.g
            || self.kernel.s.is_constant()
            || !is_squarefree(&self.kernel.s)
        {
            return Err("kernel is not a valid nonconstant squarefree decomposition of G".into());
        }
        let deg_s = self.kernel.s.degree().unwrap_or(0) as u64;
        if self.genus != (deg_s - 1) / 2 {
            return Err("genus does not match the kernel degree".into());
        }
        match reduce_mod_p(&self.g, p) {
            Ok(gbar) if gbar == self.section.y.pow(2) => Ok(()),
            _ => Err("G does not reduce to ḡ²".into()),
        }
    }
}

impl SpecialFibreReport {
    pub fn verify(&self, cover: &CoverData) -> Result<(), String> {
        let gbar = reduce_mod_p(&cover.g, cover.p).map_err(|e| e.to_string())?;
        if self.split != is_perfect_square(&gbar).is_some() {
            return Err("split flag disagrees with reduce(G)".into());
        }
        if self.split && (self.g_bar.pow(2) != gbar || self.intersection != divisor_of(&self.g_bar))
        {
            return Err("special-fibre data disagree with reduce(G)".into());
        }
        Ok(())
    }
}

/// Builds the cover for a section modulo `p`. At a prime failing the
/// good-prime check this is refused unless `force` is set.
pub fn build_cover(
    s: &WeierstrassSurface,
    p: u64,
    sec: &SectionModP,
    lambda_max: u64,
    force: bool,
) -> Result<CoverOutcome, CoverError> {
    let warnings = gate(s, p, force)?;
    if sec.x.ctx().get() != p || !sec.verify(s) {
        return Err(CoverError::NotASection(p));
    }
    assemble(s, p, sec, lambda_max, warnings)
}

/// As [`build_cover`], with the good-prime check already done.
pub fn build_cover_with_star(
    s: &WeierstrassSurface,
    star: &StarReport,
    sec: &SectionModP,
    lambda_max: u64,
    force: bool,
) -> Result<CoverOutcome, CoverError> {
    let warnings = gate_with(star, force)?;
    let p = star.p;
    if sec.x.ctx().get() != p || !sec.verify(s) {
        return Err(CoverError::NotASection(p));
    }
    assemble(s, p, sec, lambda_max, warnings)
}

/// As [`build_cover`], starting from an x-coordinate.
pub fn build_cover_from_x(
    s: &WeierstrassSurface,
    p: u64,
    x: &FpRatFunc,
    lambda_max: u64,
    force: bool,
) -> Result<CoverOutcome, CoverError> {
    let warnings = gate(s, p, force)?;
    let sec = is_section_x(s, p, x)
        .map_err(section_error)?
        .ok_or(CoverError::NotASection(p))?;
    assemble(s, p, &sec, lambda_max, warnings)
}

fn assemble(
    s: &WeierstrassSurface,
    p: u64,
    sec: &SectionModP,
    lambda_max: u64,
    warnings: Vec<String>,
) -> Result<CoverOutcome, CoverError> {
    if sec.y.is_zero() {
        return Err(CoverError::TwoTorsionDegenerate);
    }
    let (lift, rejected_lambdas) = scan_lambdas(s, &lift_x(&sec.x, p), lambda_max)?;
    let f = lift.f();
    let g = s.rhs(&f);
    let j = j_polynomial(s, &lift);
    let kernel = squarefree_kernel(&g).expect("G ≠ 0");
    let deg_s = kernel.s.degree().unwrap_or(0) as u64;
    let genus = (deg_s - 1) / 2;
    let two_section_desc = format!(
        "curve {{x = {f}, y^2 = {g}}} in the surface; normal model w^2 = {} * ({}), genus {genus}, mapping 2:1 onto P^1",
        crate::algebra::QPoly::constant(kernel.c.clone()),
        kernel.s
    );
    let cover = CoverData {
        surface: s.clone(),
        p,
        section: sec.clone(),
        lift,
        rejected_lambdas,
        g,
        j,
        kernel,
        genus,
        two_section_desc,
    };
    cover.verify().map_err(CoverError::InvalidCover)?;

    let gbar = reduce_mod_p(&cover.g, p).map_err(|e| CoverError::InvalidCover(e.to_string()))?;
    let root = is_perfect_square(&gbar);
    let split = root.is_some();
    let g_bar = root.unwrap_or_else(|| gbar.clone());
    let intersection = if split {
        divisor_of(&g_bar)
    } else {
        Vec::new()
    };
    // (f, g) and (f, −g) reduce to (x, ḡ) and (x, −ḡ), distinct since ḡ ≠ 0
    let involution_swap = split && g_bar != -&g_bar;
    let report = SpecialFibreReport {
        split,
        g_bar,
        intersection,
        involution_swap,
    };
    report.verify(&cover).map_err(CoverError::InvalidCover)?;
    Ok(CoverOutcome {
        cover,
        report,
        warnings,
    })
}
