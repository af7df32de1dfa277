//! Sparse polynomials over a [`RingSpec`].

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::monomial::{Monomial, MultiDegree};
use crate::ring::RingSpec;
use crate::scalar::{Field, Scalar};

/// Terms sorted by decreasing monomial order of the ring they were built in;
/// no zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Scalar)>,
}

/// Result of asking for the degree of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degree {
    Coarse(i64),
    Fine(MultiDegree),
    NotHomogeneous,
    /// The zero polynomial, degree `-inf`.
    MinusInfinity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeMode {
    Coarse,
    Fine,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(ring: &RingSpec, c: Scalar) -> Polynomial {
        Polynomial::term(ring.one(), c)
    }

    pub fn term(mono: Monomial, c: Scalar) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(mono, c)],
            }
        }
    }

    pub fn monomial(ring: &RingSpec, mono: Monomial) -> Polynomial {
        Polynomial::term(mono, ring.field.one())
    }

    pub fn var(ring: &RingSpec, i: usize) -> Polynomial {
        Polynomial::monomial(ring, ring.var(i))
    }

    /// Build from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(ring: &RingSpec, terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    /// Nonzero scalar constant?
    pub fn as_unit(&self) -> Option<&Scalar> {
        match self.terms.as_slice() {
            [(m, c)] if m.is_one() => Some(c),
            _ => None,
        }
    }

    pub fn add(&self, other: &Polynomial, ring: &RingSpec) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match ring.cmp(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.1 + &b.1;
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial, ring: &RingSpec) -> Polynomial {
        self.add(&other.neg(), ring)
    }

    pub fn scalar_mul(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiply by a single term; monomial multiplication preserves the order.
    pub fn mul_term(&self, mono: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, ring: &RingSpec) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                terms.push((m.mul(n), a * b));
            }
        }
        Polynomial::from_terms(ring, terms)
    }

    pub fn pow(&self, e: u32, ring: &RingSpec) -> Polynomial {
        let mut acc = Polynomial::constant(ring, ring.field.one());
        for _ in 0..e {
            acc = acc.mul(self, ring);
        }
        acc
    }

    /// Term-wise `p^s` power map; additive only in characteristic `p`.
    pub fn frobenius(&self, q: u32, ring: &RingSpec) -> Polynomial {
        Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .map(|(m, c)| (m.pow(q), c.pow(q as u64)))
                .collect(),
        )
    }

    pub fn degree(&self, ring: &RingSpec, mode: DegreeMode) -> Degree {
        let Some((first, _)) = self.terms.first() else {
            return Degree::MinusInfinity;
        };
        match mode {
            DegreeMode::Coarse => {
                let d = ring.coarse(first);
                if self.terms.iter().all(|(m, _)| ring.coarse(m) == d) {
                    Degree::Coarse(d)
                } else {
                    Degree::NotHomogeneous
                }
            }
            DegreeMode::Fine => {
                if self.terms.iter().all(|(m, _)| m == first) {
                    Degree::Fine(first.fine_degree())
                } else {
                    Degree::NotHomogeneous
                }
            }
        }
    }

    /// Re-sort after a change of monomial order.
    pub fn resort(&self, ring: &RingSpec) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.clone())
    }

    pub fn map_monomials(&self, ring: &RingSpec, f: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect())
    }

    pub fn field(&self) -> Option<Field> {
        self.terms.first().map(|(_, c)| c.field())
    }

    /// Canonical text: terms in decreasing order, explicit exponents,
    /// e.g. `y1^2*x1 + 2*x2`.
    pub fn render(&self, ring: &RingSpec) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&ring.render_monomial(m));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;
    use crate::scalar::Field;

    #[test]
    fn difference_of_squares() {
        let r = RingSpec::standard(Field::Rationals, 0, 2).unwrap();
        let x1 = Polynomial::var(&r, 0);
        let x2 = Polynomial::var(&r, 1);
        let p = x1.add(&x2, &r).mul(&x1.sub(&x2, &r), &r);
        assert_eq!(p.render(&r), "x1^2 - x2^2");
        assert!(p.add(&p.neg(), &r).is_zero());
    }

    #[test]
    fn freshman_dream_mod_two() {
        for (field, expect) in [
            (Field::Rationals, "x1^2 + 2*y1*x1 + y1^2"),
            (Field::Prime(2), "x1^2 + y1^2"),
        ] {
            let r = RingSpec::standard(field, 1, 1).unwrap();
            let s = Polynomial::var(&r, 0).add(&Polynomial::var(&r, 1), &r);
            assert_eq!(s.pow(2, &r).render(&r), expect);
        }
    }

    #[test]
    fn degrees() {
        let r = RingSpec::standard(Field::Rationals, 2, 1).unwrap();
        let y1 = Polynomial::var(&r, 0);
        let y2 = Polynomial::var(&r, 1);
        let x1 = Polynomial::var(&r, 2);
        let f = y1.mul(&y1, &r).mul(&x1, &r).add(&y2.mul(&x1, &r), &r);
        assert_eq!(f.degree(&r, DegreeMode::Coarse), Degree::Coarse(1));
        assert_eq!(f.degree(&r, DegreeMode::Fine), Degree::NotHomogeneous);
        assert_eq!(Polynomial::zero().degree(&r, DegreeMode::Coarse), Degree::MinusInfinity);
        let r2 = RingSpec::standard(Field::Rationals, 0, 2).unwrap();
        let g = Polynomial::var(&r2, 0).mul(&Polynomial::var(&r2, 1), &r2);
        assert_eq!(g.degree(&r2, DegreeMode::Fine), Degree::Fine(MultiDegree(vec![1, 1])));
    }

    #[test]
    fn canonical_rendering() {
        let r = RingSpec::standard(Field::Rationals, 1, 2).unwrap();
        let f = Polynomial::from_terms(
            &r,
            vec![
                (Monomial::from_exps(&[0, 0, 1]), Field::Rationals.from_i64(2)),
                (Monomial::from_exps(&[2, 1, 0]), Field::Rationals.one()),
            ],
        );
        assert_eq!(f.render(&r), "y1^2*x1 + 2*x2");
    }
}
