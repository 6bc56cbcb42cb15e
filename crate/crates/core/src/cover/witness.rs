use crate::sections::SectionModP;
use crate::weierstrass::FibreConfiguration;

use super::build::{CoverData, SpecialFibreReport};
use super::CoverError;

/// The checked statement `2·[D] = 0` for the section's curve in the model's
/// Chow group of zero-cycles, with its justification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionWitness {
    pub p: u64,
    pub section: SectionModP,
    pub multiplier: u32,
    pub rationale: Vec<String>,
    /// Set when some singular fibre is reducible: the class is then only
    /// known to be killed by `2N` for some unspecified `N`.
    pub caveat_n: bool,
    pub caveat: Option<String>,
}

pub fn torsion_witness(
    cover: &CoverData,
    report: &SpecialFibreReport,
    cfg: &FibreConfiguration,
) -> Result<TorsionWitness, CoverError> {
    if !report.split {
        return Err(CoverError::InvalidCover(
            "special fibre does not split".into(),
        ));
    }
    cover.verify().map_err(CoverError::InvalidCover)?;
    report.verify(cover).map_err(CoverError::InvalidCover)?;
    let rationale = vec![
        format!(
            "psi: the normalization of P^1 in Q(t)(sqrt G) is finite flat of degree 2 over P^1 (G = c * S * v^2 with deg S = {} >= 1)",
            cover.kernel.s.degree().unwrap_or(0)
        ),
        format!(
            "the special fibre at p = {} splits into two lines swapped by the involution, meeting at the zeros and poles of g_bar = {}; each is the special fibre of a flat closure, so its class vanishes",
            cover.p, report.g_bar
        ),
        "push-pull: psi_* psi^* [D] = 2 [D], and psi^* [D] = 0, so 2 [D] = 0".to_string(),
    ];
    let reducible: Vec<String> = cfg
        .entries
        .iter()
        .filter(|(_, k)| k.is_reducible())
        .map(|(v, k)| format!("{k} at {v}"))
        .collect();
    let caveat_n = !reducible.is_empty();
    let caveat = caveat_n.then(|| {
        format!(
            "reducible fibres ({}) may have components not defined over Q; the class is killed by 2N for some N",
            reducible.join(", ")
        )
    });
    Ok(TorsionWitness {
        p: cover.p,
        section: cover.section.clone(),
        multiplier: 2,
        rationale,
        caveat_n,
        caveat,
    })
}
