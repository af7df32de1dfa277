//! Local cohomology with respect to monomial ideals via Čech complexes:
//! graded pieces, end, a*, reg^k and cohomological dimension.

pub mod duality;
pub mod engine;
pub mod polymod;
pub mod report;

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingSpec;

pub use engine::FineEngine;
pub use report::{
    cohomological_dimension, cohomology_piece, end_of_cohomology, localized_piece, reg_wrt, CdReport,
    CechOptions, CohomologyPiece, EndEntry, EndReport, LocalizedPiece, Method,
};

/// Monomial generators `f_1..f_s` of the ideal; `from_base` marks the
/// generators coming from the base block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CechSpec {
    pub gens: Vec<Monomial>,
    pub from_base: Vec<bool>,
}

impl CechSpec {
    pub fn new(ring: &RingSpec, gens: Vec<Monomial>) -> Result<CechSpec> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != ring.nvars()) {
            return Err(Error::RankMismatch {
                expected: ring.nvars(),
                got: g.nvars(),
            });
        }
        let m = ring.m();
        let from_base = gens.iter().map(|g| g.coarse_degree(m) == 0).collect();
        Ok(CechSpec { gens, from_base })
    }

    /// Every generator must be a single term.
    pub fn from_polys(ring: &RingSpec, polys: &[Polynomial]) -> Result<CechSpec> {
        let mut gens = Vec::new();
        for p in polys.iter().filter(|p| !p.is_zero()) {
            if !p.is_term() {
                return Err(Error::RegimeViolation(format!(
                    "local cohomology needs monomial generators, got {}",
                    p.render(ring)
                )));
            }
            gens.push(p.leading().unwrap().0.clone());
        }
        CechSpec::new(ring, gens)
    }

    /// `R_+ = (x_1..x_t)`.
    pub fn r_plus(ring: &RingSpec) -> CechSpec {
        let gens = (ring.m()..ring.nvars()).map(|i| ring.var(i)).collect();
        CechSpec::new(ring, gens).unwrap()
    }

    /// `a_0 + R_+`.
    pub fn plus_r_plus(ring: &RingSpec, a0: &[Monomial]) -> CechSpec {
        let mut gens = a0.to_vec();
        gens.extend((ring.m()..ring.nvars()).map(|i| ring.var(i)));
        CechSpec::new(ring, gens).unwrap()
    }

    pub fn s(&self) -> usize {
        self.gens.len()
    }

    /// Minimal supports: the squarefree generators of the radical.
    pub fn supports(&self) -> Vec<u64> {
        let all: Vec<u64> = self.gens.iter().map(Monomial::support).collect();
        let mut out: Vec<u64> = Vec::new();
        for (i, &a) in all.iter().enumerate() {
            let dominated = all
                .iter()
                .enumerate()
                .any(|(k, &b)| b & a == b && (b != a || k < i));
            if !dominated {
                out.push(a);
            }
        }
        out
    }

    /// The ideal is the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    /// `x_j` lies in the radical.
    pub fn contains_var(&self, j: usize) -> bool {
        self.supports().contains(&(1u64 << j))
    }

    pub fn contains_r_plus(&self, ring: &RingSpec) -> bool {
        (ring.m()..ring.nvars()).all(|j| self.contains_var(j))
    }

    pub fn is_r_plus(&self, ring: &RingSpec) -> bool {
        let mut s = self.supports();
        s.sort();
        let mut want: Vec<u64> = (ring.m()..ring.nvars()).map(|j| 1u64 << j).collect();
        want.sort();
        s == want
    }

    /// The base-block part `a_0` of an ideal of the form `a_0 + R_+`.
    pub fn base_part(&self) -> Vec<Monomial> {
        self.gens
            .iter()
            .zip(&self.from_base)
            .filter(|(_, b)| **b)
            .map(|(g, _)| g.clone())
            .collect()
    }

    pub fn render(&self, ring: &RingSpec) -> String {
        let g: Vec<String> = self.gens.iter().map(|m| ring.render_monomial(m)).collect();
        format!("({})", g.join(", "))
    }
}

/// An extended integer: `-inf`, a value, or `+inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EndValue {
    MinusInfinity,
    Finite(i64),
    PlusInfinity,
}

impl EndValue {
    pub fn finite(&self) -> Option<i64> {
        match self {
            EndValue::Finite(v) => Some(*v),
            _ => None,
        }
    }

    pub fn plus(&self, k: i64) -> EndValue {
        match self {
            EndValue::Finite(v) => EndValue::Finite(v + k),
            other => *other,
        }
    }

    pub fn is_minus_infinity(&self) -> bool {
        matches!(self, EndValue::MinusInfinity)
    }

    pub fn from_option(v: Option<i64>) -> EndValue {
        v.map_or(EndValue::MinusInfinity, EndValue::Finite)
    }
}

impl Ord for EndValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use EndValue::*;
        match (self, other) {
            (MinusInfinity, MinusInfinity) | (PlusInfinity, PlusInfinity) => Ordering::Equal,
            (MinusInfinity, _) | (_, PlusInfinity) => Ordering::Less,
            (_, MinusInfinity) | (PlusInfinity, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for EndValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EndValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndValue::MinusInfinity => write!(f, "-inf"),
            EndValue::Finite(v) => write!(f, "{v}"),
            EndValue::PlusInfinity => write!(f, "+inf"),
        }
    }
}

impl Serialize for EndValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            EndValue::MinusInfinity => s.serialize_str("minus_infinity"),
            EndValue::Finite(v) => s.serialize_i64(*v),
            EndValue::PlusInfinity => s.serialize_str("plus_infinity"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Certified,
    WindowBounded,
}

impl Status {
    pub fn worst(self, other: Status) -> Status {
        if self == Status::WindowBounded || other == Status::WindowBounded {
            Status::WindowBounded
        } else {
            Status::Certified
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Certified => write!(f, "certified"),
            Status::WindowBounded => write!(f, "window-bounded"),
        }
    }
}
