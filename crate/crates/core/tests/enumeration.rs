use std::collections::HashSet;

use k3_octic::enumerator::{
    brute_force_classify, classify_annotated, classify_order8, involution_fixed_locus, involution_points,
    lefschetz_check, ns_rank, power_invariants, rational_fix4_constraints, square_row, FixedLocusDescriptor,
    InvolutionData, SearchBounds,
};

#[test]
fn derivation_matches_scan_as_sets() {
    let derived: HashSet<_> = classify_order8().into_iter().collect();
    let scanned: HashSet<_> = brute_force_classify(&SearchBounds::default()).into_iter().collect();
    assert_eq!(derived, scanned);
    assert_eq!(derived.len(), 4);
}

#[test]
fn larger_bounds_find_nothing_new() {
    let bounds = SearchBounds {
        max_k: 20,
        max_a: 20,
        max_points: 120,
        ..SearchBounds::default()
    };
    assert_eq!(brute_force_classify(&bounds), classify_order8());
}

#[test]
fn profile_invariants() {
    for p in classify_order8() {
        assert!(p.ranks.is_valid());
        assert!(lefschetz_check(&p));
        assert!(rational_fix4_constraints(&p));
        assert!([14, 18].contains(&ns_rank(&p)));
        let (sq, fourth) = power_invariants(&p.ranks);
        assert_eq!(fourth.r, ns_rank(&p));
        assert_eq!(sq.l % 2, 0);
        assert_eq!(sq.m % 2, 0);
        assert!(square_row(&p).is_ok());
        assert!(p.k <= 1);
        assert_eq!(p.n(), if p.k == 1 { 10 } else { 4 });
    }
}

#[test]
fn annotated_output_is_deterministic() {
    assert_eq!(classify_annotated().unwrap(), classify_annotated().unwrap());
}

#[test]
fn involution_loci() {
    // every admissible point except the special ones gives (g, k) by formula
    let mut empty = 0;
    let mut elliptic = 0;
    for p in involution_points() {
        match involution_fixed_locus(&InvolutionData::new(p.r, p.a, Some(p.delta))).unwrap() {
            FixedLocusDescriptor::Empty => empty += 1,
            FixedLocusDescriptor::TwoEllipticCurves => elliptic += 1,
            FixedLocusDescriptor::Curves { genus, rational_curves } => {
                assert_eq!(2 * genus, 22 - p.r - p.a);
                assert_eq!(2 * rational_curves, p.r - p.a);
            }
        }
    }
    assert_eq!((empty, elliptic), (1, 1));
}
