#![allow(dead_code)]

use ellsurf::algebra::field::rat;
use ellsurf::algebra::QPoly;
use ellsurf::weierstrass::WeierstrassSurface;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q(cs: &[i64]) -> QPoly {
    QPoly::from_ints(cs)
}

pub fn surface(a4: &[i64], a6: &[i64]) -> WeierstrassSurface {
    WeierstrassSurface::from_polys(q(a4), q(a6)).expect("valid surface")
}

pub fn e3() -> WeierstrassSurface {
    surface(&[0], &[0, 0, -1])
}

pub fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, height: i64) -> QPoly {
    let deg = rng.gen_range(0..=max_deg);
    let cs: Vec<_> = (0..=deg)
        .map(|_| rat(rng.gen_range(-height..=height)))
        .collect();
    QPoly::new((), cs)
}

/// Random surfaces with coefficients of degree ≤ 6 and height ≤ 20, kept
/// when the generic fibre is smooth and some fibre is singular.
pub fn corpus(count: usize, seed: u64) -> Vec<WeierstrassSurface> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let a4 = random_poly(&mut rng, 6, 20);
        let a6 = random_poly(&mut rng, 6, 20);
        if let Ok(s) = WeierstrassSurface::from_polys(a4, a6) {
            out.push(s);
        }
    }
    out
}
pub mod cli;
