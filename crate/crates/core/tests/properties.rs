mod common;

use common::*;
use proptest::prelude::*;

use k3_octic::kodaira::fiber_type;
use k3_octic::poly::coprime_refinement;
use k3_octic::{QPoly, Valuation};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn zeta8_field_axioms(a in zeta8(), b in zeta8(), c in zeta8()) {
        checks::field_axioms(&a, &b, &c)?;
    }

    #[test]
    fn zeta8_norm_is_multiplicative(a in zeta8(), b in zeta8()) {
        prop_assert_eq!((a.clone() * b.clone()).norm(), a.norm() * b.norm());
        for k in [1, 3, 5, 7] {
            prop_assert_eq!((a.clone() * b.clone()).galois(k), a.galois(k) * b.galois(k));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn squarefree_reconstruction((p, _factors) in factored_product()) {
        checks::squarefree_reconstruction(&p)?;
    }

    #[test]
    fn every_factor_appears_in_the_decomposition((p, factors) in factored_product()) {
        let dec = p.squarefree_decompose().unwrap();
        for (f, _) in &factors {
            prop_assert!(dec.factors.iter().any(|(g, _)| !g.gcd(f).unwrap().is_constant()));
        }
    }

    #[test]
    fn refinement_is_pairwise_coprime(parts in prop::collection::vec(nonconstant_qpoly(4), 1..=4)) {
        let parts: Vec<QPoly> = parts.iter().map(|p| p.squarefree_part().unwrap()).collect();
        let basis = coprime_refinement(&parts);
        for (i, f) in basis.iter().enumerate() {
            for g in &basis[i + 1..] {
                prop_assert!(f.gcd(g).unwrap().is_constant());
            }
        }
        for p in &parts {
            let covered = basis.iter().filter(|b| b.divides(p)).fold(QPoly::one(), |acc, b| &acc * b);
            prop_assert_eq!(covered, p.monic());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn vanishing_orders_sum_to_total_degree((p, _f) in factored_product(), extra in 0usize..4) {
        checks::vanishing_orders_sum(&p, extra)?;
    }

    #[test]
    fn fiber_type_total_on_minimal_models(model in minimal_model()) {
        checks::fiber_type_totality(&model)?;
    }

    #[test]
    fn fiber_type_total_on_consistent_orders(va in 0u32..8, vb in 0u32..10, a_zero: bool, b_zero: bool, bump in 0u32..6) {
        prop_assume!(!(a_zero && b_zero));
        let va = if a_zero { Valuation::Infinite } else { Valuation::Finite(va) };
        let vb = if b_zero { Valuation::Infinite } else { Valuation::Finite(vb) };
        // vΔ = min(3vA, 2vB), or anything at least that when they tie
        let vd = match (va.finite().map(|v| 3 * v), vb.finite().map(|v| 2 * v)) {
            (Some(x), Some(y)) if x == y => x + bump,
            (Some(x), Some(y)) => x.min(y),
            (Some(x), None) => x,
            (None, Some(y)) => y,
            (None, None) => unreachable!(),
        };
        prop_assert!(fiber_type(va, vb, vd).is_ok(), "({}, {}, {})", va, vb, vd);
    }

    #[test]
    fn riemann_hurwitz_even_counts(half in 0usize..20) {
        checks::riemann_hurwitz_even(2 * half)?;
    }
}
