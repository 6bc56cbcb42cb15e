//! Minimal Weierstrass models over ℙ¹_ℚ and their singular fibres.

mod kodaira;
mod place;
mod surface;

pub use kodaira::{kodaira_from_valuations, KodairaType};
pub use place::{place_valuation, poly_valuation_at, Place, QPlace};
pub use surface::{
    chart_swap, discriminant_of, fibre_configuration, j_invariant_of, kodaira_type_at,
    minimal_model, trivial_lattice_rank, weierstrass_rhs, FibreConfiguration, WeierstrassError,
    WeierstrassSurface,
};
