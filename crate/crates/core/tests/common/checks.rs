//! Property bodies, shared by the proptest suites and the acceptance run.

use num::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use k3_octic::automorphism::riemann_hurwitz_genus;
use k3_octic::kodaira::{configuration_unchecked, discriminant, fiber_type, Reduction, WeierstrassModel};
use k3_octic::poly::{coprime_refinement, vanishing_order};
use k3_octic::{Place, QPoly, Zeta8};

pub fn field_axioms(a: &Zeta8, b: &Zeta8, c: &Zeta8) -> Result<(), TestCaseError> {
    let (a, b, c) = (a.clone(), b.clone(), c.clone());
    prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
    prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
    prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
    prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
    prop_assert_eq!(
        a.clone() * (b.clone() + c.clone()),
        a.clone() * b.clone() + a.clone() * c.clone()
    );
    prop_assert_eq!(a.clone() + Zeta8::zero(), a.clone());
    prop_assert_eq!(a.clone() * Zeta8::one(), a.clone());
    prop_assert!((a.clone() + (-a.clone())).is_zero());
    if a.is_zero() {
        prop_assert!(a.inv().is_err());
    } else {
        prop_assert!((a.clone() * a.inv().unwrap()).is_one());
    }
    Ok(())
}

pub fn squarefree_reconstruction(p: &QPoly) -> Result<(), TestCaseError> {
    let dec = p.squarefree_decompose().unwrap();
    prop_assert_eq!(&dec.reconstruct(), p);
    let mut last = 0;
    for (f, e) in &dec.factors {
        prop_assert!(f.is_squarefree());
        prop_assert!(!f.is_constant());
        prop_assert!(*e > last);
        last = *e;
    }
    for (i, (f, _)) in dec.factors.iter().enumerate() {
        for (g, _) in &dec.factors[i + 1..] {
            prop_assert!(f.gcd(g).unwrap().is_constant());
        }
    }
    Ok(())
}

pub fn vanishing_orders_sum(p: &QPoly, extra: usize) -> Result<(), TestCaseError> {
    let total = p.degree().unwrap() + extra;
    let parts: Vec<QPoly> = p
        .squarefree_decompose()
        .unwrap()
        .factors
        .into_iter()
        .map(|(f, _)| f)
        .collect();
    let mut sum = 0usize;
    for cluster in coprime_refinement(&parts) {
        let place = Place::finite(cluster.clone()).unwrap();
        let v = vanishing_order(p, &place, total).unwrap().finite().unwrap();
        sum += v as usize * cluster.degree().unwrap();
    }
    let at_infinity = vanishing_order(p, &Place::Infinity, total).unwrap().finite().unwrap();
    prop_assert_eq!(sum + at_infinity as usize, total);
    Ok(())
}

pub fn fiber_type_totality(model: &WeierstrassModel) -> Result<(), TestCaseError> {
    let config = configuration_unchecked(model).unwrap();
    prop_assert!(config.minimalized.is_empty());
    prop_assert_eq!(config.euler_sum(), 12 * model.bundle_degree());
    for entry in &config.entries {
        let (va, vb, vd) = entry.orders;
        prop_assert_eq!(fiber_type(va, vb, vd).unwrap(), Reduction::Singular(entry.fiber));
        prop_assert_eq!(entry.fiber.euler_number(), vd);
    }
    let disc = discriminant(model).unwrap();
    let mut parts = Vec::new();
    for p in [model.a(), model.b(), &disc] {
        if !p.is_zero() && !p.is_constant() {
            parts.push(p.squarefree_part().unwrap());
        }
    }
    let mut places: Vec<Place> = coprime_refinement(&parts)
        .into_iter()
        .map(|c| Place::finite(c).unwrap())
        .collect();
    places.push(Place::Infinity);
    for place in &places {
        let va = vanishing_order(model.a(), place, model.degree_a()).unwrap();
        let vb = vanishing_order(model.b(), place, model.degree_b()).unwrap();
        let vd = vanishing_order(&disc, place, model.degree_discriminant())
            .unwrap()
            .finite()
            .unwrap();
        let reduction = fiber_type(va, vb, vd);
        prop_assert!(
            matches!(reduction, Ok(Reduction::Smooth | Reduction::Singular(_))),
            "{place}: {reduction:?}"
        );
    }
    Ok(())
}

pub fn riemann_hurwitz_even(count: usize) -> Result<(), TestCaseError> {
    let indices = vec![2u32; count];
    match riemann_hurwitz_genus(&indices) {
        Ok(g) => {
            prop_assert!(count >= 2);
            prop_assert_eq!(g as usize, count / 2 - 1);
        }
        Err(_) => prop_assert!(count < 2),
    }
    Ok(())
}
