mod common;

use std::cmp::Ordering;

use common::{field_strategy, homogeneous, poly, ring, scalar};
use proptest::prelude::*;
use regcd_core::{Field, Monomial, MonomialOrder};

fn frac() -> impl Strategy<Value = (i64, i64)> {
    (-50i64..=50, 1i64..=12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn field_axioms(f in field_strategy(), a in frac(), b in frac(), c in frac()) {
        let (a, b, c) = (scalar(f, a.0, a.1), scalar(f, b.0, b.1), scalar(f, c.0, c.1));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &f.zero(), a.clone());
        prop_assert_eq!(&a * &f.one(), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv()).is_one());
        }
    }

    #[test]
    fn prime_field_frobenius_is_identity(p in prop::sample::select(vec![2u64, 3, 5, 7, 32003]), n in -1000i64..1000) {
        let f = Field::prime(p).unwrap();
        let a = f.from_i64(n);
        prop_assert_eq!(a.pow(p), a);
    }

    #[test]
    fn block_order_is_a_monomial_order(
        m in 0usize..3,
        a in prop::collection::vec(0u32..4, 4),
        b in prop::collection::vec(0u32..4, 4),
        c in prop::collection::vec(0u32..4, 4),
        lex in any::<bool>(),
    ) {
        let mut r = ring(Field::Rationals, m, 4 - m);
        if lex {
            r = r.with_order(MonomialOrder::Lex);
        }
        let (a, b, c) = (Monomial::from_exps(&a), Monomial::from_exps(&b), Monomial::from_exps(&c));
        prop_assert_eq!(r.cmp(&a, &b), r.cmp(&b, &a).reverse());
        prop_assert_eq!(r.cmp(&a, &b) == Ordering::Equal, a == b);
        prop_assert_eq!(r.cmp(&a.mul(&c), &b.mul(&c)), r.cmp(&a, &b));
        prop_assert_ne!(r.cmp(&a.mul(&c), &a), Ordering::Less);
        if r.cmp(&a, &b) == Ordering::Less && r.cmp(&b, &c) == Ordering::Less {
            prop_assert_eq!(r.cmp(&a, &c), Ordering::Less);
        }
    }

    #[test]
    fn polynomial_ring_laws(
        f in field_strategy(),
        p in homogeneous(3, 2),
        q in homogeneous(3, 1),
        s in homogeneous(3, 2),
    ) {
        let r = ring(f, 0, 3);
        let (p, q, s) = (poly(&r, &p), poly(&r, &q), poly(&r, &s));
        prop_assert_eq!(p.add(&s, &r), s.add(&p, &r));
        prop_assert_eq!(p.mul(&q, &r), q.mul(&p, &r));
        prop_assert_eq!(p.mul(&q, &r).mul(&s, &r), p.mul(&q.mul(&s, &r), &r));
        prop_assert_eq!(p.add(&s, &r).mul(&q, &r), p.mul(&q, &r).add(&s.mul(&q, &r), &r));
        prop_assert!(p.sub(&p, &r).is_zero());
        prop_assert_eq!(p.pow(2, &r), p.mul(&p, &r));
        let lead = p.mul(&q, &r);
        if let (Some(a), Some(b), Some(ab)) = (p.leading(), q.leading(), lead.leading()) {
            prop_assert_eq!(&ab.0, &a.0.mul(&b.0));
        }
    }

    #[test]
    fn frobenius_is_a_ring_map(
        pr in prop::sample::select(vec![2u64, 3, 5]),
        p in homogeneous(3, 2),
        q in homogeneous(3, 1),
        c in -9i64..9,
    ) {
        let f = Field::prime(pr).unwrap();
        let r = ring(f, 0, 3);
        let (p, q) = (poly(&r, &p), poly(&r, &q));
        let e = pr as u32;
        prop_assert_eq!(p.add(&q, &r).frobenius(e, &r), p.frobenius(e, &r).add(&q.frobenius(e, &r), &r));
        prop_assert_eq!(p.mul(&q, &r).frobenius(e, &r), p.frobenius(e, &r).mul(&q.frobenius(e, &r), &r));
        prop_assert_eq!(p.pow(e, &r), p.frobenius(e, &r));
        let cs = f.from_i64(c);
        prop_assert_eq!(p.scalar_mul(&cs).frobenius(e, &r), p.frobenius(e, &r).scalar_mul(&cs.pow(pr)));
        prop_assert_eq!(p.frobenius(e, &r).frobenius(e, &r), p.frobenius(e * e, &r));
    }
}
