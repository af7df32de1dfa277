use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector over `y_1..y_m, x_1..x_t`, base block first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(pub SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exps(exps: &[u32]) -> Monomial {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, index: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.0[index] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Coarse degree: sum of the exponents from `base` onwards (the x-block).
    pub fn coarse_degree(&self, base: usize) -> i64 {
        self.0[base..].iter().map(|&e| e as i64).sum()
    }

    pub fn fine_degree(&self) -> MultiDegree {
        MultiDegree(self.0.iter().map(|&e| e as i64).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * e).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn try_div(&self, other: &Monomial) -> Result<Monomial> {
        if !other.divides(self) {
            return Err(Error::NotDivisible(
                format!("{:?}", other.0.as_slice()),
                format!("{:?}", self.0.as_slice()),
            ));
        }
        Ok(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// `self / other`, assuming divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.try_div(other).expect("monomial division requires divisibility")
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of variables with positive exponent.
    pub fn support(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Monomial `x^d` for a nonnegative degree vector.
    pub fn from_degree(d: &MultiDegree) -> Option<Monomial> {
        if d.0.iter().any(|&e| e < 0) {
            return None;
        }
        Some(Monomial(d.0.iter().map(|&e| e as u32).collect()))
    }
}

/// Fine multidegree; entries may be negative for localized pieces.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct MultiDegree(pub Vec<i64>);

impl MultiDegree {
    pub fn zero(n: usize) -> MultiDegree {
        MultiDegree(vec![0; n])
    }

    pub fn coarse(&self, base: usize) -> i64 {
        self.0[base..].iter().sum()
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> MultiDegree {
        MultiDegree(self.0.iter().map(|a| a * k).collect())
    }

    pub fn le(&self, other: &MultiDegree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    // exponent order (y1, x1) / (y1, x1, x2)
    #[test]
    fn lcm_gcd_divide() {
        assert_eq!(m(&[1, 2]).lcm(&m(&[2, 1])), m(&[2, 2]));
        assert_eq!(m(&[1, 2]).gcd(&m(&[2, 1])), m(&[1, 1]));
        assert!(!m(&[0, 1, 0]).divides(&m(&[1, 0, 1])));
        assert_eq!(m(&[1, 2]).div(&m(&[0, 1])), m(&[1, 1]));
        assert!(m(&[0, 1]).try_div(&m(&[1, 0])).is_err());
    }

    #[test]
    fn degrees() {
        let u = m(&[2, 1, 3]);
        assert_eq!(u.coarse_degree(1), 4);
        assert_eq!(u.total_degree(), 6);
        assert_eq!(u.support(), 0b111);
        assert_eq!(m(&[0, 2, 0]).support(), 0b010);
    }
}
