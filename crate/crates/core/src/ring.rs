//! The ambient ring `k[y_1..y_m][x_1..x_t]` with its two-block grading.

use std::cmp::Ordering;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Block order: graded reverse lexicographic on the x-block, ties broken
    /// by graded reverse lexicographic on the y-block.
    GrevLex,
    /// Lexicographic with `x_1 > .. > x_t > y_1 > .. > y_m`.
    Lex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// `m = 0`; arbitrary coarse-homogeneous data.
    General,
    /// All data fine-multihomogeneous (single-term entries).
    Multigraded,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    pub field: Field,
    pub base: Vec<String>,
    pub positive: Vec<String>,
    pub order: MonomialOrder,
    pub regime: Regime,
}

pub type Ring = Arc<RingSpec>;

impl RingSpec {
    /// A standard graded ring `k[y][x]`; requires at least one positive variable.
    pub fn new(field: Field, base: Vec<String>, positive: Vec<String>) -> Result<Ring> {
        if positive.is_empty() {
            return Err(Error::InvalidRing("at least one positive variable is required".into()));
        }
        Self::build(field, base, positive, MonomialOrder::GrevLex)
    }

    /// Default variable names `y1..ym`, `x1..xt`.
    pub fn standard(field: Field, m: usize, t: usize) -> Result<Ring> {
        Self::new(field, names("y", m), names("x", t))
    }

    /// The base ring `R_0 = k[y_1..y_m]` (no positive variables).
    pub fn base_ring(field: Field, m: usize) -> Ring {
        Self::build(field, names("y", m), Vec::new(), MonomialOrder::GrevLex)
            .expect("base ring names are distinct")
    }

    fn build(
        field: Field,
        base: Vec<String>,
        positive: Vec<String>,
        order: MonomialOrder,
    ) -> Result<Ring> {
        let mut all: Vec<&String> = base.iter().chain(&positive).collect();
        all.sort();
        all.dedup();
        if all.len() != base.len() + positive.len() {
            return Err(Error::InvalidRing("variable names must be distinct".into()));
        }
        if base.len() + positive.len() > 60 {
            return Err(Error::InvalidRing("too many variables".into()));
        }
        let regime = if base.is_empty() {
            Regime::General
        } else {
            Regime::Multigraded
        };
        Ok(Arc::new(RingSpec {
            field,
            base,
            positive,
            order,
            regime,
        }))
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Arc::new(RingSpec {
            order,
            ..self.clone()
        })
    }

    /// The same ring with one extra base variable appended to the y-block.
    /// Monomials of `self` embed by [`RingSpec::embed_extra_base`].
    pub fn with_extra_base_var(&self, name: &str) -> Ring {
        let mut base = self.base.clone();
        base.push(name.to_string());
        Arc::new(RingSpec {
            base,
            regime: Regime::Multigraded,
            ..self.clone()
        })
    }

    pub fn embed_extra_base(&self, mono: &Monomial) -> Monomial {
        let m = self.m();
        let mut e: Vec<u32> = mono.exps()[..m].to_vec();
        e.push(0);
        e.extend_from_slice(&mono.exps()[m..]);
        Monomial::from_exps(&e)
    }

    /// `k[y]` underneath this ring.
    pub fn base_only(&self) -> Ring {
        Arc::new(RingSpec {
            positive: Vec::new(),
            regime: if self.base.is_empty() {
                Regime::General
            } else {
                Regime::Multigraded
            },
            ..self.clone()
        })
    }

    pub fn m(&self) -> usize {
        self.base.len()
    }

    pub fn t(&self) -> usize {
        self.positive.len()
    }

    pub fn nvars(&self) -> usize {
        self.m() + self.t()
    }

    pub fn var_name(&self, i: usize) -> &str {
        if i < self.m() {
            &self.base[i]
        } else {
            &self.positive[i - self.m()]
        }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.base
            .iter()
            .chain(&self.positive)
            .position(|v| v == name)
    }

    pub fn var(&self, i: usize) -> Monomial {
        Monomial::var(self.nvars(), i)
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn is_base_var(&self, i: usize) -> bool {
        i < self.m()
    }

    pub fn coarse(&self, mono: &Monomial) -> i64 {
        mono.coarse_degree(self.m())
    }

    /// Compare two monomials; `Greater` means `a` is the larger term.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let m = self.m();
        let (ay, ax) = a.exps().split_at(m);
        let (by, bx) = b.exps().split_at(m);
        match self.order {
            MonomialOrder::GrevLex => grevlex(ax, bx).then_with(|| grevlex(ay, by)),
            MonomialOrder::Lex => ax.cmp(bx).then_with(|| ay.cmp(by)),
        }
    }

    pub fn render_monomial(&self, mono: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in mono.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.var_name(i).to_string()),
                _ => parts.push(format!("{}^{}", self.var_name(i), e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

pub fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(m: usize, t: usize) -> Ring {
        RingSpec::standard(Field::Rationals, m, t).unwrap()
    }

    #[test]
    fn grevlex_examples() {
        let r = ring(0, 2);
        let a = Monomial::from_exps(&[2, 0]);
        let b = Monomial::from_exps(&[1, 1]);
        assert_eq!(r.cmp(&a, &b), Ordering::Greater);
        assert_eq!(r.cmp(&a, &a), Ordering::Equal);
        let r = ring(1, 1);
        let x1 = Monomial::from_exps(&[0, 1]);
        let y1_3 = Monomial::from_exps(&[3, 0]);
        assert_eq!(r.cmp(&x1, &y1_3), Ordering::Greater);
    }

    #[test]
    fn needs_positive_variable() {
        assert!(RingSpec::standard(Field::Rationals, 2, 0).is_err());
        assert!(RingSpec::new(Field::Rationals, vec!["a".into()], vec!["a".into()]).is_err());
    }

    // Brute force over all monomials of total degree <= 3 in (y1, x1): the
    // order is total, antisymmetric, and multiplicative.
    #[test]
    fn order_axioms_degree_three() {
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let r = ring(1, 1).with_order(order);
            let mut all = Vec::new();
            for a in 0..=3u32 {
                for b in 0..=(3 - a) {
                    all.push(Monomial::from_exps(&[a, b]));
                }
            }
            for u in &all {
                for v in &all {
                    let c = r.cmp(u, v);
                    assert_eq!(c.reverse(), r.cmp(v, u));
                    assert_eq!(c == Ordering::Equal, u == v);
                    for w in &all {
                        assert_eq!(r.cmp(&u.mul(w), &v.mul(w)), c);
                        if c != Ordering::Less && r.cmp(v, w) != Ordering::Less {
                            assert_ne!(r.cmp(u, w), Ordering::Less);
                        }
                    }
                }
            }
            // x-block dominates under both orders
            let x1 = Monomial::from_exps(&[0, 1]);
            let y1_3 = Monomial::from_exps(&[3, 0]);
            assert_eq!(r.cmp(&x1, &y1_3), Ordering::Greater);
        }
    }
}
