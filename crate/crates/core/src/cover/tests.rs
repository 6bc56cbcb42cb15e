use super::*;
use crate::algebra::field::rat;
use crate::algebra::{FpPoly, Modulus, QPoly, RatFunc};
use crate::sections::is_section_x;
use crate::weierstrass::{fibre_configuration, KodairaType, Place, WeierstrassSurface};

fn surf(a4: &[i64], a6: &[i64]) -> WeierstrassSurface {
    WeierstrassSurface::from_polys(QPoly::from_ints(a4), QPoly::from_ints(a6)).unwrap()
}

fn fp(p: u64, cs: &[u64]) -> crate::algebra::FpRatFunc {
    RatFunc::from_poly(FpPoly::from_residues(Modulus::new(p).unwrap(), cs))
}

fn q(cs: &[i64]) -> QPoly {
    QPoly::from_ints(cs)
}

#[test]
fn lift_examples() {
    let l = lift_x(&fp(5, &[0]), 5);
    assert_eq!((l.f0.clone(), l.f1.clone()), (q(&[0]), q(&[1])));
    assert_eq!(lift_x(&fp(5, &[4, 3]), 5).f0, q(&[-1, -2]));
    let m = Modulus::new(5).unwrap();
    let x = RatFunc::new(
        FpPoly::from_residues(m, &[0, 1]),
        FpPoly::from_residues(m, &[1, 1]),
    )
    .unwrap();
    let l = lift_x(&x, 5);
    assert_eq!(l.f(), RatFunc::new(q(&[0, 1]), q(&[1, 1])).unwrap());
}

#[test]
fn lambda_scan_examples() {
    let e3 = surf(&[0], &[0, 0, -1]);
    let (lift, rejected) = scan_lambdas(&e3, &lift_x(&fp(5, &[0]), 5), 100).unwrap();
    assert_eq!(lift.lambda, 1);
    assert_eq!(j_polynomial(&e3, &lift), q(&[125, 0, -1]));
    assert_eq!(rejected.len(), 1);

    let s = surf(&[0, 0, -1], &[0]);
    let lift0 = lift_x(&fp(5, &[0, 1]), 5);
    assert!(j_polynomial(&s, &lift0).is_zero());
    let lift = lambda_scan(&s, &lift0, 100).unwrap();
    assert_eq!(lift.lambda, 1);
    assert_eq!(
        j_polynomial(&s, &lift),
        (&q(&[5, 1]) * &q(&[5, 2])).scale(&rat(5))
    );

    assert_eq!(
        lambda_scan(&e3, &lift_x(&fp(5, &[0]), 5), 0),
        Err(CoverError::ScanExhausted { lambda_max: 0 })
    );
}

#[test]
fn e3_cover() {
    let e3 = surf(&[0], &[0, 0, -1]);
    let out = build_cover_from_x(&e3, 5, &fp(5, &[0]), 100, false).unwrap();
    let c = &out.cover;
    assert_eq!(c.lift.lambda, 1);
    assert_eq!(c.g, RatFunc::from_poly(q(&[125, 0, -1])));
    assert_eq!(c.kernel.c, rat(-1));
    assert_eq!(c.kernel.s, q(&[-125, 0, 1]));
    assert!(c.kernel.v.numer().is_one() && c.kernel.v.denom().is_one());
    assert_eq!(c.genus, 0);
    let r = &out.report;
    assert!(r.split && r.involution_swap);
    assert_eq!(r.g_bar, fp(5, &[0, 2]));
    let m = Modulus::new(5).unwrap();
    assert_eq!(
        r.intersection,
        vec![
            IntersectionPoint {
                place: Place::Finite(FpPoly::from_residues(m, &[0, 1])),
                kind: PointKind::Zero,
                order: 1
            },
            IntersectionPoint {
                place: Place::Infinity,
                kind: PointKind::Pole,
                order: 1
            },
        ]
    );
    assert!(out.warnings.is_empty());
    let w = torsion_witness(c, r, &fibre_configuration(&e3)).unwrap();
    assert_eq!((w.p, w.multiplier, w.caveat_n), (5, 2, true));
    assert_eq!(w.rationale.len(), 3);
}

#[test]
fn error_examples() {
    let e1 = surf(&[0], &[0, 1]);
    assert_eq!(
        build_cover_from_x(&e1, 5, &fp(5, &[0, 1]), 100, false).unwrap_err(),
        CoverError::NotASection(5)
    );
    let s = surf(&[0, 0, -1], &[0]);
    assert_eq!(
        build_cover_from_x(&s, 5, &fp(5, &[0, 1]), 100, false).unwrap_err(),
        CoverError::TwoTorsionDegenerate
    );
}

#[test]
fn bad_prime_gate() {
    let e3 = surf(&[0], &[0, 0, -1]);
    let err = build_cover_from_x(&e3, 3, &fp(3, &[0]), 100, false).unwrap_err();
    assert!(matches!(err, CoverError::BadPrimeRefused { p: 3, .. }));
    // forced: the gate opens, and x = 0 is then rejected on its merits
    assert_eq!(
        build_cover_from_x(&e3, 3, &fp(3, &[0]), 100, true).unwrap_err(),
        CoverError::NotASection(3)
    );

    // a6 = t² − 5 is bad at 5, and x = 0 gives y² = t² there
    let s = surf(&[0], &[-5, 0, 1]);
    assert!(matches!(
        build_cover_from_x(&s, 5, &fp(5, &[0]), 100, false),
        Err(CoverError::BadPrimeRefused { p: 5, .. })
    ));
    let out = build_cover_from_x(&s, 5, &fp(5, &[0]), 100, true).unwrap();
    assert_eq!(out.warnings.len(), 1);
    assert!(out.report.split);
}

#[test]
fn tampered_cover_is_invalid() {
    let e3 = surf(&[0], &[0, 0, -1]);
    let out = build_cover_from_x(&e3, 5, &fp(5, &[0]), 100, false).unwrap();
    let mut bad = out.cover.clone();
    bad.genus = 3;
    let cfg = fibre_configuration(&e3);
    assert!(matches!(
        torsion_witness(&bad, &out.report, &cfg),
        Err(CoverError::InvalidCover(_))
    ));
    let mut bad = out.cover.clone();
    bad.j = q(&[1]);
    assert!(matches!(
        torsion_witness(&bad, &out.report, &cfg),
        Err(CoverError::InvalidCover(_))
    ));
}

#[test]
fn caveat_off_for_irreducible_fibres() {
    let e3 = surf(&[0], &[0, 0, -1]);
    let out = build_cover_from_x(&e3, 5, &fp(5, &[0]), 100, false).unwrap();
    let mut cfg = fibre_configuration(&e3);
    cfg.entries = (0..12)
        .map(|c| (Place::Finite(q(&[c, 1])), KodairaType::I(1)))
        .collect();
    let w = torsion_witness(&out.cover, &out.report, &cfg).unwrap();
    assert!(!w.caveat_n && w.caveat.is_none());
}

#[test]
fn explicit_section_path() {
    let e3 = surf(&[0], &[0, 0, -1]);
    let sec = is_section_x(&e3, 5, &fp(5, &[0])).unwrap().unwrap();
    assert!(build_cover(&e3, 5, &sec, 100, false).is_ok());
    let mut wrong = sec.clone();
    wrong.y = fp(5, &[1, 2]);
    assert_eq!(
        build_cover(&e3, 5, &wrong, 100, false).unwrap_err(),
        CoverError::NotASection(5)
    );
}
