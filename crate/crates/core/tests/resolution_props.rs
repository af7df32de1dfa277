mod common;

use common::{field_strategy, homogeneous, poly, rank, ring};
use proptest::prelude::*;
use regcd_core::groebner::monomials_of_degree;
use regcd_core::resolution::ResolutionChain;
use regcd_core::{Monomial, Polynomial, Presentation, Ring};

fn binom(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim (R/I)_d` from the rank of all degree-`d` multiples of the generators.
fn hilbert_oracle(r: &Ring, gens: &[Polynomial], d: i64) -> i64 {
    let basis = monomials_of_degree(3, d);
    let mut rows = Vec::new();
    for g in gens {
        let gd = g.leading().unwrap().0.total_degree() as i64;
        for m in monomials_of_degree(3, d - gd) {
            let h = g.mul(&Polynomial::monomial(r, m), r);
            rows.push(
                basis
                    .iter()
                    .map(|b| {
                        h.terms()
                            .iter()
                            .find(|(mm, _)| mm == b)
                            .map_or(0, |(_, c)| signed(c.to_i64().unwrap(), r.field.characteristic()))
                    })
                    .collect(),
            );
        }
    }
    basis.len() as i64 - rank(r.field, rows) as i64
}

fn signed(v: i64, p: u64) -> i128 {
    if p > 0 && v > p as i64 / 2 {
        (v - p as i64) as i128
    } else {
        v as i128
    }
}

fn compose_is_zero(r: &Ring, c: &ResolutionChain) -> bool {
    (1..c.maps.len()).all(|i| {
        let target = c.modules[i - 1].rank();
        c.maps[i].iter().all(|col| {
            let mut acc = vec![Polynomial::zero(); target];
            for (k, a) in col.coords(c.maps[i - 1].len(), r).iter().enumerate() {
                for (slot, b) in acc.iter_mut().zip(&c.maps[i - 1][k].coords(target, r)) {
                    *slot = slot.add(&a.mul(b, r), r);
                }
            }
            acc.iter().all(Polynomial::is_zero)
        })
    })
}

fn minimal(r: &Ring, c: &ResolutionChain) -> bool {
    let one = Monomial::one(r.nvars());
    c.maps
        .iter()
        .all(|m| m.iter().all(|v| v.terms.iter().all(|t| t.mono != one)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn resolutions_of_homogeneous_ideals(
        f in field_strategy(),
        gens in prop::collection::vec((1u32..=3).prop_flat_map(|d| homogeneous(3, d)), 1..=3),
    ) {
        let r = ring(f, 0, 3);
        let gens: Vec<Polynomial> = gens.iter().map(|g| poly(&r, g)).filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let q = Presentation::quotient(&r, &gens).unwrap();
        let c = ResolutionChain::compute(&q, 4).unwrap();
        prop_assert!(!c.truncated);
        prop_assert!(c.length().unwrap() <= 3);
        prop_assert!(compose_is_zero(&r, &c));
        prop_assert!(minimal(&r, &c));
        prop_assert!(c.is_complex() && c.is_minimal() && c.is_graded());
        let shifts = c.shifts();
        for d in 0..8i64 {
            let from_shifts: i64 = shifts
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let s: i64 = row.iter().map(|a| binom(d + a + 2, 2)).sum();
                    if i % 2 == 0 { s } else { -s }
                })
                .sum();
            prop_assert_eq!(from_shifts, hilbert_oracle(&r, &gens, d), "degree {}", d);
        }
    }

    #[test]
    fn resolutions_of_fine_modules(
        m in 0usize..=2,
        gens in prop::collection::vec(prop::collection::vec(0u32..=2, 4), 1..=4),
        second in prop::collection::vec(prop::collection::vec(0u32..=2, 4), 0..=2),
    ) {
        let r = ring(regcd_core::Field::Rationals, m, 4 - m);
        let monos: Vec<Monomial> = gens.iter().map(|e| Monomial::from_exps(e)).filter(|g| !g.is_one()).collect();
        prop_assume!(!monos.is_empty());
        let mut q = Presentation::cyclic(&r, &monos).unwrap();
        let extra: Vec<Monomial> = second.iter().map(|e| Monomial::from_exps(e)).filter(|g| !g.is_one()).collect();
        if !extra.is_empty() {
            q = q.direct_sum(&Presentation::cyclic(&r, &extra).unwrap());
        }
        let c = ResolutionChain::compute(&q, 6).unwrap();
        prop_assert!(!c.truncated);
        prop_assert!(c.length().unwrap() <= 4);
        prop_assert!(compose_is_zero(&r, &c));
        prop_assert!(minimal(&r, &c));
        prop_assert!(c.is_graded());
    }
}
