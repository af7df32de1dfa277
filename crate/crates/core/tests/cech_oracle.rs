mod common;

use std::sync::atomic::{AtomicUsize, Ordering};

use common::{brute_cech, ring};
use proptest::prelude::*;
use regcd_core::cech::{cohomology_piece, CechOptions, CechSpec};
use regcd_core::groebner::PieceDegree;
use regcd_core::verify::{corpus, hochster_dim, SimplicialComplex};
use regcd_core::{Field, Monomial, MultiDegree, Presentation, RingSpec};

static TRIPLES: AtomicUsize = AtomicUsize::new(0);
static NONZERO: AtomicUsize = AtomicUsize::new(0);

fn exps(n: usize, top: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=top, n).prop_filter("not the unit monomial", |e| e.iter().any(|&x| x > 0))
}

fn case() -> impl Strategy<Value = (usize, usize, Vec<Vec<u32>>, Vec<Vec<u32>>, Vec<i64>, bool)> {
    (0usize..=2, 1usize..=2).prop_flat_map(|(m, t)| {
        let n = m + t;
        (
            Just(m),
            Just(t),
            prop::collection::vec(exps(n, 3), 0..=3),
            prop::collection::vec(exps(n, 2), 1..=3),
            prop::collection::vec(-4i64..=3, n),
            any::<bool>(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn cech_pieces_match_brute_force((m, t, ideal, f, u, prime) in case()) {
        let field = if prime { Field::prime(2).unwrap() } else { Field::Rationals };
        let r = ring(field, m, t);
        let monos: Vec<Monomial> = ideal.iter().map(|e| Monomial::from_exps(e)).collect();
        let q = Presentation::cyclic(&r, &monos).unwrap();
        let c = CechSpec::new(&r, f.iter().map(|e| Monomial::from_exps(e)).collect()).unwrap();
        let deg = PieceDegree::Fine(MultiDegree(u.clone()));
        for i in 0..=f.len() {
            let got = cohomology_piece(&q, &c, i, &deg, &CechOptions::default()).unwrap().dim as usize;
            prop_assert_eq!(got, brute_cech(field, &ideal, &f, i, &u), "i = {}", i);
            TRIPLES.fetch_add(1, Ordering::Relaxed);
            if got > 0 {
                NONZERO.fetch_add(1, Ordering::Relaxed);
            }
        }
    }
}

#[test]
fn enough_triples_were_compared() {
    cech_pieces_match_brute_force();
    assert!(TRIPLES.load(Ordering::Relaxed) >= 200);
    assert!(NONZERO.load(Ordering::Relaxed) >= 20, "{}", NONZERO.load(Ordering::Relaxed));
}

fn hochster_agrees(delta: &SimplicialComplex, m: usize, field: Field) {
    let base = RingSpec::base_ring(field, m);
    let q = Presentation::cyclic(&base, &delta.stanley_reisner(m)).unwrap();
    let c = CechSpec::new(&base, (0..m).map(|j| base.var(j)).collect()).unwrap();
    let points = 4usize.pow(m as u32);
    for code in 0..points {
        let u: Vec<i64> = (0..m).map(|j| -(((code / 4usize.pow(j as u32)) % 4) as i64)).collect();
        for i in 0..=m {
            let got = cohomology_piece(&q, &c, i, &PieceDegree::Fine(MultiDegree(u.clone())), &CechOptions::default())
                .unwrap()
                .dim as usize;
            assert_eq!(got, hochster_dim(delta, field, i, &u), "{delta:?} i = {i} u = {u:?}");
        }
    }
}

#[test]
fn hochster_on_corpus_complexes() {
    let mut seen = 0;
    for seed in 0..3 {
        for inst in corpus(seed, 21).unwrap() {
            if let Some(delta) = &inst.complex {
                hochster_agrees(delta, inst.ring.m(), inst.ring.field);
                seen += 1;
            }
        }
    }
    assert!(seen >= 5, "{seen}");
}

#[test]
fn hochster_on_fixed_complexes() {
    let q = Field::Rationals;
    let f2 = Field::prime(2).unwrap();
    let complexes = [
        (2, SimplicialComplex::new(2, &[vec![0], vec![1]])),
        (3, SimplicialComplex::new(3, &[vec![0, 1], vec![1, 2], vec![0, 2]])),
        (3, SimplicialComplex::new(3, &[vec![0, 1], vec![2]])),
        (4, SimplicialComplex::new(4, &[vec![0, 1], vec![1, 2], vec![2, 3]])),
        (4, SimplicialComplex::new(4, &[vec![0, 1], vec![2, 3]])),
        (4, SimplicialComplex::new(4, &[vec![0, 1, 2], vec![1, 2, 3]])),
        (3, SimplicialComplex::new(3, &[vec![0, 1, 2]])),
    ];
    for (m, d) in &complexes {
        hochster_agrees(d, *m, q);
        hochster_agrees(d, *m, f2);
    }
}
