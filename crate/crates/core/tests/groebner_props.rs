mod common;

use common::{field_strategy, homogeneous, poly, ring};
use proptest::prelude::*;
use regcd_core::groebner::GroebnerBasis;
use regcd_core::ideal::{as_vectors, ideal_gb};
use regcd_core::{Polynomial, Ring, Vector};

fn vec_of(r: &Ring, p: &Polynomial) -> Vector {
    as_vectors(r, std::slice::from_ref(p)).pop().unwrap_or_else(Vector::zero)
}

fn nf(gb: &GroebnerBasis, v: &Vector) -> Vector {
    gb.normal_form(v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn normal_forms_are_confluent(
        f in field_strategy(),
        gens in prop::collection::vec((1u32..=3).prop_flat_map(|d| homogeneous(3, d)), 1..=3),
        a in homogeneous(3, 3),
        b in homogeneous(3, 3),
        h in homogeneous(3, 1),
        pick in any::<prop::sample::Index>(),
    ) {
        let r = ring(f, 0, 3);
        let gens: Vec<Polynomial> = gens.iter().map(|g| poly(&r, g)).filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let gb = ideal_gb(&r, &gens);
        let (a, b, h) = (poly(&r, &a), poly(&r, &b), poly(&r, &h));
        let (va, vb) = (vec_of(&r, &a), vec_of(&r, &b));
        let na = nf(&gb, &va);

        prop_assert_eq!(nf(&gb, &na), na.clone());
        prop_assert_eq!(nf(&gb, &va.add(&vb, &gb.order)), na.add(&nf(&gb, &vb), &gb.order));
        for t in &na.terms {
            prop_assert!(!gb.is_reducible(&t.mono, t.comp));
        }

        let g = &gens[pick.index(gens.len())];
        let member = vec_of(&r, &h.mul(g, &r));
        prop_assert!(nf(&gb, &member).is_zero());
        prop_assert_eq!(nf(&gb, &va.add(&member, &gb.order)), na);

        let mut rev = gens.clone();
        rev.reverse();
        prop_assert_eq!(ideal_gb(&r, &rev).render(), gb.render());
    }
}
