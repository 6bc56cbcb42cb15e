use std::fmt;

use crate::algebra::Valuation;

/// Kodaira symbol of a fibre. `I(0)` is the smooth fibre, `IStar(0)` is I₀*.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum KodairaType {
    I(u32),
    II,
    III,
    IV,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    /// Number of irreducible components, `m_v`.
    pub fn components(self) -> u32 {
        match self {
            KodairaType::I(0) => 1,
            KodairaType::I(n) => n,
            KodairaType::II => 1,
            KodairaType::III => 2,
            KodairaType::IV => 3,
            KodairaType::IStar(n) => n + 5,
            KodairaType::IVStar => 7,
            KodairaType::IIIStar => 8,
            KodairaType::IIStar => 9,
        }
    }

    /// Local Euler number; equals `v(Δ)` away from characteristic 2 and 3.
    pub fn euler(self) -> u32 {
        match self {
            KodairaType::I(n) => n,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IStar(n) => n + 6,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }

    pub fn is_singular(self) -> bool {
        self != KodairaType::I(0)
    }

    pub fn is_reducible(self) -> bool {
        self.components() >= 2
    }

    pub fn symbol(self) -> String {
        match self {
            KodairaType::I(n) => format!("I{n}"),
            KodairaType::II => "II".into(),
            KodairaType::III => "III".into(),
            KodairaType::IV => "IV".into(),
            KodairaType::IStar(n) => format!("I{n}*"),
            KodairaType::IVStar => "IV*".into(),
            KodairaType::IIIStar => "III*".into(),
            KodairaType::IIStar => "II*".into(),
        }
    }

    pub fn parse_symbol(s: &str) -> Option<KodairaType> {
        Some(match s {
            "II" => KodairaType::II,
            "III" => KodairaType::III,
            "IV" => KodairaType::IV,
            "IV*" => KodairaType::IVStar,
            "III*" => KodairaType::IIIStar,
            "II*" => KodairaType::IIStar,
            _ => {
                let rest = s.strip_prefix('I')?;
                match rest.strip_suffix('*') {
                    Some(n) => KodairaType::IStar(n.parse().ok()?),
                    None => KodairaType::I(rest.parse().ok()?),
                }
            }
        })
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol())
    }
}

/// Tate's table for residue characteristic ≠ 2, 3, on `(v(a₄), v(a₆), v(Δ))`.
///
/// `None` means the triple is not minimal or not consistent with `Δ`.
pub fn kodaira_from_valuations(v4: Valuation, v6: Valuation, vd: Valuation) -> Option<KodairaType> {
    use Valuation::Finite as F;
    let vd = vd.finite()?;
    let at_least = |v: Valuation, k: i64| v >= F(k);
    let kind = if vd == 0 {
        KodairaType::I(0)
    } else if v4 == F(0) {
        KodairaType::I(vd as u32)
    } else if at_least(v4, 1) && v6 == F(1) {
        KodairaType::II
    } else if v4 == F(1) && at_least(v6, 2) {
        KodairaType::III
    } else if at_least(v4, 2) && v6 == F(2) {
        KodairaType::IV
    } else if at_least(v4, 2) && at_least(v6, 3) && vd == 6 {
        KodairaType::IStar(0)
    } else if v4 == F(2) && v6 == F(3) && vd > 6 {
        KodairaType::IStar((vd - 6) as u32)
    } else if at_least(v4, 3) && v6 == F(4) {
        KodairaType::IVStar
    } else if v4 == F(3) && at_least(v6, 5) {
        KodairaType::IIIStar
    } else if at_least(v4, 4) && v6 == F(5) {
        KodairaType::IIStar
    } else {
        return None;
    };
    (kind.euler() as i64 == vd).then_some(kind)
}
