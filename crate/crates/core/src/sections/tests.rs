use super::*;
use crate::algebra::QPoly;

fn surf(a4: &[i64], a6: &[i64]) -> WeierstrassSurface {
    WeierstrassSurface::from_polys(QPoly::from_ints(a4), QPoly::from_ints(a6)).unwrap()
}

fn fp(p: u64, cs: &[u64]) -> FpRatFunc {
    RatFunc::from_poly(FpPoly::from_residues(Modulus::new(p).unwrap(), cs))
}

#[test]
fn is_section_examples() {
    let e3 = surf(&[0], &[0, 0, -1]);
    let sec = is_section_x(&e3, 5, &fp(5, &[0])).unwrap().unwrap();
    assert_eq!(sec.y, fp(5, &[0, 2]));
    let s = surf(&[0, 0, -1], &[0]);
    let sec = is_section_x(&s, 5, &fp(5, &[0, 1])).unwrap().unwrap();
    assert!(sec.y.is_zero());
    let e1 = surf(&[0], &[0, 1]);
    assert_eq!(is_section_x(&e1, 5, &fp(5, &[0, 1])).unwrap(), None);
}

#[test]
fn reduction_failure() {
    let a6 = QPoly::new(
        (),
        vec![
            crate::algebra::field::rat_from_ints(1, 5),
            crate::algebra::field::rat(1),
        ],
    );
    let s = WeierstrassSurface::from_polys(QPoly::from_ints(&[0]), a6).unwrap();
    assert_eq!(
        is_section_x(&s, 5, &fp(5, &[0])),
        Err(SectionError::ReductionFails(5))
    );
}

#[test]
fn search_examples() {
    let s = surf(&[0, 0, -1], &[0]);
    let found = search_sections(&s, 5, 2, 0, DEFAULT_BUDGET).unwrap();
    for x in [fp(5, &[0]), fp(5, &[0, 1]), fp(5, &[0, 4])] {
        assert!(
            found.iter().any(|sec| sec.x == x && sec.y.is_zero()),
            "missing x = {x}"
        );
    }
    let e3 = surf(&[0], &[0, 0, -1]);
    let found = search_sections(&e3, 5, 2, 0, DEFAULT_BUDGET).unwrap();
    assert!(found.contains(&SectionModP {
        x: fp(5, &[0]),
        y: fp(5, &[0, 2])
    }));
    let found = search_sections(&e3, 7, 2, 0, DEFAULT_BUDGET).unwrap();
    assert!(!found.iter().any(|sec| sec.x.is_zero()));
}

#[test]
fn results_verify_and_are_sorted() {
    let e3 = surf(&[0], &[0, 0, -1]);
    let found = search_sections(&e3, 5, 4, 1, DEFAULT_BUDGET).unwrap();
    assert!(found.windows(2).all(|w| w[0] < w[1]));
    for sec in &found {
        assert!(sec.verify(&e3));
        assert!(sec.negate().verify(&e3));
        let (_, b) = sec.x_parts();
        assert!(b.is_monic());
    }
}

#[test]
fn finds_sections_with_denominators() {
    // (1/t², 1/t³) lies on y² = x³ − t²x + 1
    let s = surf(&[0, 0, -1], &[1]);
    let found = search_sections(&s, 7, 2, 1, DEFAULT_BUDGET).unwrap();
    let m = Modulus::new(7).unwrap();
    let t = FpPoly::from_residues(m, &[0, 1]);
    let x = RatFunc::new(FpPoly::one(m), t.pow(2)).unwrap();
    let sec = found
        .iter()
        .find(|sec| sec.x == x)
        .expect("x = 1/t^2 found");
    assert_eq!(sec.y, RatFunc::new(FpPoly::one(m), t.pow(3)).unwrap());
    assert!(found.iter().all(|sec| sec.verify(&s)));
}

#[test]
fn matches_is_section_x() {
    let s = surf(&[1, 2], &[3, 0, 1]);
    let found = search_sections(&s, 7, 2, 0, DEFAULT_BUDGET).unwrap();
    let m = Modulus::new(7).unwrap();
    let mut expected = Vec::new();
    for c in 0..343u64 {
        let x = RatFunc::from_poly(FpPoly::from_residues(m, &[c % 7, (c / 7) % 7, c / 49]));
        if let Some(sec) = is_section_x(&s, 7, &x).unwrap() {
            expected.push(sec);
        }
    }
    expected.sort();
    assert_eq!(found, expected);
}

#[test]
fn budget_is_enforced() {
    let e3 = surf(&[0], &[0, 0, -1]);
    let err = search_sections(&e3, 13, 6, 0, 1000).unwrap_err();
    assert!(matches!(err, SectionError::BudgetExceeded { .. }));
}
