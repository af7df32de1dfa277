//! Frobenius on `H^i_m(Q)` for `Q = k[y]/a` with `k = F_p` and `a` monomial,
//! and the F-depth probe built on it.
//!
//! In the fine grading, `H^i_m(Q)_u` only depends on the pattern of `u`:
//! coordinates below zero all behave alike, and coordinates at or past the
//! stabilization bound give zero. Frobenius sends degree `u` to `p u`, so a
//! class whose degree has only negative and zero coordinates stays inside
//! one pattern, and `F^s` there is the `s`-th power of a single matrix.

use rayon::prelude::*;
use serde::Serialize;

use crate::cech::engine::{CechComplex, FineEngine, Piece};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subquotient};
use crate::module::Presentation;
use crate::monomial::{Monomial, MultiDegree};
use crate::ring::RingSpec;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusMap {
    pub p: u64,
    pub s: u32,
    pub i: usize,
    pub source: Vec<i64>,
    pub target: Vec<i64>,
    /// Rows index the target basis, columns the source basis.
    pub matrix: Vec<Vec<u64>>,
}

/// A cohomology class rendered as `c*num/(den)` terms per Čech block.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub degree: Vec<i64>,
    pub terms: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "s", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FVerdict {
    FNonvanishing,
    FNilpotentAt(u32),
    Undecided(u32),
}

#[derive(Clone, Debug, Serialize)]
pub struct FDepthEntry {
    pub i: usize,
    pub verdict: FVerdict,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FDepthReport {
    pub p: u64,
    pub entries: Vec<FDepthEntry>,
    /// Smallest `i` with a nonvanishing verdict.
    pub f_depth: Option<usize>,
    /// No undecided index precedes the reported value.
    pub certified: bool,
}

struct Frob {
    eng: FineEngine,
    supports: Vec<u64>,
    p: u64,
}

fn prime_of(field: Field) -> Result<u64> {
    match field {
        Field::Prime(p) => Ok(p),
        Field::Rationals => Err(Error::NonPrimeField("QQ".into())),
    }
}

fn as_u64(x: &Scalar) -> u64 {
    match x {
        Scalar::Fp { value, .. } => *value,
        _ => unreachable!("prime field scalar"),
    }
}

impl Frob {
    fn new(q: &Presentation) -> Result<Frob> {
        let p = prime_of(q.ring.field)?;
        let cyclic = q.rank() == 1
            && q.free.degrees[0].coarse == 0
            && q.free.degrees[0].fine.as_ref().is_none_or(|f| f.0.iter().all(|&x| x == 0));
        let monomial = q.relations.iter().all(|v| v.terms.len() <= 1);
        if !cyclic || !monomial {
            return Err(Error::RegimeViolation(
                "Frobenius needs a cyclic quotient by a monomial ideal".into(),
            ));
        }
        let eng = FineEngine::new(q)?;
        let supports = (0..q.ring.nvars()).map(|j| 1u64 << j).collect();
        Ok(Frob { eng, supports, p })
    }

    fn complex(&self, u: &MultiDegree) -> CechComplex {
        self.eng.complex(&self.supports, 0, u)
    }

    fn cohomology(&self, cx: &CechComplex, i: usize) -> Subquotient {
        let (z, b) = cx.cycles_and_boundaries(i);
        Subquotient::new(self.eng.ring.field, cx.dims[i], &z, &b)
    }

    /// Image under `F^1` of one basis element of a localized piece.
    fn frobenius_term(&self, src: &Piece, mask: u64, a: &Monomial, g: usize, dst: &Piece) -> Vec<Scalar> {
        let q = self.p as i64;
        let n = self.eng.nvars();
        let v = MultiDegree(
            (0..n)
                .map(|j| {
                    if mask >> j & 1 == 1 {
                        dst.degree.0[j].max(q * src.degree.0[j])
                    } else {
                        dst.degree.0[j]
                    }
                })
                .collect(),
        );
        let exps: Vec<u32> = (0..n)
            .map(|j| (q * a.exps()[j] as i64 + v.0[j] - q * src.degree.0[j]) as u32)
            .collect();
        let big = self.eng.piece(&v);
        let coords = self.eng.coords_of(&Monomial::from_exps(&exps), g, &big);
        if v == dst.degree {
            return coords;
        }
        let m = self.eng.mult_map(&dst.degree, &v);
        m.solve(&coords).expect("stable multiplication is bijective")
    }

    /// `F^1` on the cochains `C^i` at degree `u` into `C^i` at `p u`.
    fn on_cochains(&self, src: &CechComplex, dst: &CechComplex, i: usize) -> Matrix {
        let field = self.eng.ring.field;
        let mut out = Matrix::zeros(field, dst.dims[i], src.dims[i]);
        let mut row_off = 0;
        let mut col_off = 0;
        for ((_, mask, sp), (_, _, dp)) in src.terms[i].iter().zip(&dst.terms[i]) {
            for (k, (a, g)) in sp.basis.iter().enumerate() {
                let img = self.frobenius_term(sp, *mask, a, *g, dp);
                for (r, x) in img.into_iter().enumerate() {
                    if !x.is_zero() {
                        out.set(row_off + r, col_off + k, x);
                    }
                }
            }
            row_off += dp.dim();
            col_off += sp.dim();
        }
        out
    }

    /// `F^1 : H^i(u) -> H^i(p u)` in the chosen cohomology bases.
    fn on_cohomology(&self, u: &MultiDegree, i: usize) -> (Matrix, Subquotient, Subquotient) {
        let pu = u.scale(self.p as i64);
        let (cs, cd) = (self.complex(u), self.complex(&pu));
        let (hs, hd) = (self.cohomology(&cs, i), self.cohomology(&cd, i));
        let chain = self.on_cochains(&cs, &cd, i);
        let cols: Vec<Vec<Scalar>> = hs
            .basis
            .iter()
            .map(|z| hd.coords(&chain.apply(z)).expect("Frobenius preserves cocycles"))
            .collect();
        (Matrix::from_columns(self.eng.ring.field, hd.dim(), &cols), hs, hd)
    }

    fn render_class(&self, u: &MultiDegree, i: usize, z: &[Scalar]) -> Witness {
        let ring: &RingSpec = &self.eng.ring;
        let cx = self.complex(u);
        let mut terms = Vec::new();
        let mut off = 0;
        for (_, _, piece) in &cx.terms[i] {
            for (k, (a, _)) in piece.basis.iter().enumerate() {
                let c = &z[off + k];
                if c.is_zero() {
                    continue;
                }
                let e: Vec<i64> = (0..ring.nvars())
                    .map(|j| a.exps()[j] as i64 - (piece.degree.0[j] - u.0[j]))
                    .collect();
                let num: Vec<u32> = e.iter().map(|&x| x.max(0) as u32).collect();
                let den: Vec<u32> = e.iter().map(|&x| (-x).max(0) as u32).collect();
                let num = Monomial::from_exps(&num);
                let den = Monomial::from_exps(&den);
                let mut t = match (c.is_one(), num.is_one()) {
                    (true, _) => ring.render_monomial(&num),
                    (false, true) => c.to_string(),
                    (false, false) => format!("{c}*{}", ring.render_monomial(&num)),
                };
                if den.total_degree() == 1 {
                    t = format!("{t}/{}", ring.render_monomial(&den));
                } else if !den.is_one() {
                    t = format!("{t}/({})", ring.render_monomial(&den));
                }
                terms.push(t);
            }
            off += piece.dim();
        }
        Witness {
            degree: u.0.clone(),
            terms,
        }
    }
}

/// Matrix of `F^s : H^i_m(Q)_u -> H^i_m(Q)_{p^s u}`.
pub fn frobenius_on_piece(q: &Presentation, i: usize, u: &MultiDegree, s: u32) -> Result<FrobeniusMap> {
    let f = Frob::new(q)?;
    if u.0.len() != q.ring.nvars() {
        return Err(Error::RankMismatch {
            expected: q.ring.nvars(),
            got: u.0.len(),
        });
    }
    let field = q.ring.field;
    let dim = f.cohomology(&f.complex(u), i).dim();
    let mut acc = Matrix::identity(field, dim);
    let mut deg = u.clone();
    for _ in 0..s {
        let (m, _, _) = f.on_cohomology(&deg, i);
        acc = m.mul(&acc);
        deg = deg.scale(f.p as i64);
    }
    Ok(FrobeniusMap {
        p: f.p,
        s,
        i,
        source: u.0.clone(),
        target: deg.0,
        matrix: (0..acc.rows)
            .map(|r| (0..acc.cols).map(|c| as_u64(acc.get(r, c))).collect())
            .collect(),
    })
}

/// Per index `i`: whether some class of `H^i_m(Q)` survives every Frobenius
/// power.
pub fn f_depth_probe(q: &Presentation, s_max: u32) -> Result<FDepthReport> {
    let f = Frob::new(q)?;
    let n = f.eng.nvars();
    let types = f.eng.types(
        &(0..n).collect::<Vec<_>>(),
        &vec![false; n],
        &vec![true; n],
    );
    let entries: Vec<FDepthEntry> = (0..=n)
        .into_par_iter()
        .map(|i| probe_index(&f, &types, i, s_max))
        .collect();
    let mut f_depth = None;
    let mut certified = true;
    for e in &entries {
        match e.verdict {
            FVerdict::FNonvanishing => {
                f_depth = Some(e.i);
                break;
            }
            FVerdict::Undecided(_) => certified = false,
            FVerdict::FNilpotentAt(_) => {}
        }
    }
    Ok(FDepthReport {
        p: f.p,
        entries,
        f_depth,
        certified,
    })
}

fn probe_index(f: &Frob, types: &[Vec<i64>], i: usize, s_max: u32) -> FDepthEntry {
    let mut worst = 0u32;
    let mut undecided = false;
    for t in types {
        let u = MultiDegree(t.clone());
        let stable = t.iter().all(|&x| x <= 0);
        let (phi, hs, _) = f.on_cohomology(&u, i);
        let d = hs.dim();
        if d == 0 {
            continue;
        }
        if stable {
            // same pattern at u and p u: F^s is phi^s
            let top = phi.pow(d);
            if !top.is_zero() {
                let col = (0..top.cols).find(|&c| !top.column(c).iter().all(Scalar::is_zero)).unwrap();
                let z = &hs.basis[col];
                return FDepthEntry {
                    i,
                    verdict: FVerdict::FNonvanishing,
                    witness: Some(f.render_class(&u, i, z)),
                };
            }
            let mut s = 1;
            while !phi.pow(s).is_zero() {
                s += 1;
            }
            worst = worst.max(s as u32);
        } else {
            let mut acc = phi;
            let mut deg = u.scale(f.p as i64);
            let mut s = 1u32;
            while !acc.is_zero() {
                if s >= s_max {
                    undecided = true;
                    break;
                }
                let (m, _, _) = f.on_cohomology(&deg, i);
                acc = m.mul(&acc);
                deg = deg.scale(f.p as i64);
                s += 1;
            }
            worst = worst.max(s);
        }
    }
    let verdict = if undecided || worst > s_max {
        FVerdict::Undecided(s_max)
    } else {
        FVerdict::FNilpotentAt(worst)
    };
    FDepthEntry {
        i,
        verdict,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    fn f2(m: usize) -> crate::ring::Ring {
        RingSpec::base_ring(Field::prime(2).unwrap(), m)
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn inverse_variable_squares() {
        let q = Presentation::ring_module(&f2(1));
        let fm = frobenius_on_piece(&q, 1, &MultiDegree(vec![-1]), 1).unwrap();
        assert_eq!(fm.matrix, vec![vec![1]]);
        assert_eq!(fm.target, vec![-2]);
    }

    #[test]
    fn hochster_class_is_fixed() {
        let q = Presentation::cyclic(&f2(2), &[mono(&[1, 1])]).unwrap();
        let fm = frobenius_on_piece(&q, 1, &MultiDegree(vec![0, 0]), 1).unwrap();
        assert_eq!(fm.matrix, vec![vec![1]]);
    }

    #[test]
    fn residue_field() {
        let q = Presentation::cyclic(&f2(2), &[mono(&[1, 0]), mono(&[0, 1])]).unwrap();
        let fm = frobenius_on_piece(&q, 0, &MultiDegree(vec![0, 0]), 3).unwrap();
        assert_eq!(fm.matrix, vec![vec![1]]);
        assert_eq!(f_depth_probe(&q, 4).unwrap().f_depth, Some(0));
    }

    #[test]
    fn f_depths() {
        let q = Presentation::cyclic(&f2(2), &[mono(&[1, 0])]).unwrap();
        let r = f_depth_probe(&q, 4).unwrap();
        assert_eq!(r.f_depth, Some(1));
        assert_eq!(r.entries[0].verdict, FVerdict::FNilpotentAt(0));
        let q = Presentation::cyclic(&f2(2), &[mono(&[1, 1])]).unwrap();
        assert_eq!(f_depth_probe(&q, 4).unwrap().f_depth, Some(1));
    }

    #[test]
    fn rejects_rationals() {
        let r = RingSpec::base_ring(Field::Rationals, 1);
        assert!(matches!(
            frobenius_on_piece(&Presentation::ring_module(&r), 0, &MultiDegree(vec![0]), 1),
            Err(Error::NonPrimeField(_))
        ));
    }
}
