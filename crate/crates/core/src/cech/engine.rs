//! Fine-graded Čech complexes over monomial localizations.
//!
//! Inverting a monomial is the same as inverting the variables in its
//! support. In a fine degree `u`, the piece `(M_{x_S})_u` is identified with
//! `M_{u'}` where `u'_j = max(u_j, K_j)` for `j` in `S`, because beyond `K_j`
//! multiplication by `x_j` maps standard monomials bijectively onto standard
//! monomials.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::linalg::Matrix;
use crate::module::Presentation;
use crate::monomial::{Monomial, MultiDegree};
use crate::ring::Ring;
use crate::scalar::Scalar;

/// Standard-monomial basis of `M_v`.
#[derive(Debug)]
pub struct Piece {
    pub degree: MultiDegree,
    pub basis: Vec<(Monomial, usize)>,
    index: HashMap<(Monomial, usize), usize>,
}

impl Piece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub struct FineEngine {
    pub ring: Ring,
    pub pres: Presentation,
    pub gb: GroebnerBasis,
    pub gen_degrees: Vec<MultiDegree>,
    /// Stabilization bound per coordinate.
    pub k: Vec<i64>,
    /// Smallest generator degree per coordinate.
    pub c: Vec<i64>,
    pieces: Mutex<HashMap<MultiDegree, Arc<Piece>>>,
    maps: Mutex<HashMap<(MultiDegree, MultiDegree), Arc<Matrix>>>,
}

/// Subsets of `0..s` of size `i` as bitmasks, increasing.
pub fn subsets_of_size(s: usize, i: usize) -> Vec<u64> {
    (0u64..(1u64 << s)).filter(|m| m.count_ones() as usize == i).collect()
}

impl FineEngine {
    pub fn new(p: &Presentation) -> Result<FineEngine> {
        let p = p
            .with_inferred_fine_degrees()
            .ok_or_else(|| Error::RegimeViolation("module has no fine multigrading".into()))?;
        let n = p.ring.nvars();
        let gen_degrees: Vec<MultiDegree> = p.free.degrees.iter().map(|d| d.fine.clone().unwrap()).collect();
        let gb = GroebnerBasis::of_presentation(&p);
        let mut k = vec![i64::MIN; n];
        let mut c = vec![i64::MAX; n];
        for d in &gen_degrees {
            for j in 0..n {
                k[j] = k[j].max(d.0[j]);
                c[j] = c[j].min(d.0[j]);
            }
        }
        for d in gb.element_degrees() {
            let f = d.fine.expect("fine module has fine relations");
            for j in 0..n {
                k[j] = k[j].max(f.0[j]);
            }
        }
        if gen_degrees.is_empty() {
            k = vec![0; n];
            c = vec![0; n];
        }
        Ok(FineEngine {
            ring: p.ring.clone(),
            gb,
            pres: p,
            gen_degrees,
            k,
            c,
            pieces: Mutex::new(HashMap::new()),
            maps: Mutex::new(HashMap::new()),
        })
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn is_zero_module(&self) -> bool {
        self.gb.is_whole() || self.gen_degrees.is_empty()
    }

    /// `u'` representing `(M_{x_S})_u`.
    pub fn clamp(&self, u: &MultiDegree, mask: u64) -> MultiDegree {
        MultiDegree(
            u.0.iter()
                .enumerate()
                .map(|(j, &v)| if mask >> j & 1 == 1 { v.max(self.k[j]) } else { v })
                .collect(),
        )
    }

    pub fn piece(&self, v: &MultiDegree) -> Arc<Piece> {
        if let Some(p) = self.pieces.lock().unwrap().get(v) {
            return p.clone();
        }
        let basis = self.gb.standard_in_fine(v);
        let index = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let p = Arc::new(Piece {
            degree: v.clone(),
            basis,
            index,
        });
        self.pieces.lock().unwrap().insert(v.clone(), p.clone());
        p
    }

    pub fn localized(&self, u: &MultiDegree, mask: u64) -> Arc<Piece> {
        self.piece(&self.clamp(u, mask))
    }

    /// Coordinates of `x^{mono} e_comp` in the basis of its degree.
    pub fn coords_of(&self, mono: &Monomial, comp: usize, target: &Piece) -> Vec<Scalar> {
        let nf = self.gb.reduce_term(mono, comp);
        let mut out = vec![self.ring.field.zero(); target.dim()];
        for t in &nf.terms {
            let i = target.index[&(t.mono.clone(), t.comp)];
            out[i] = t.coeff.clone();
        }
        out
    }

    /// Multiplication by `x^{w - v}` from `M_v` to `M_w`; columns index the
    /// source basis.
    pub fn mult_map(&self, v: &MultiDegree, w: &MultiDegree) -> Arc<Matrix> {
        let key = (v.clone(), w.clone());
        if let Some(m) = self.maps.lock().unwrap().get(&key) {
            return m.clone();
        }
        let src = self.piece(v);
        let dst = self.piece(w);
        let shift = Monomial::from_degree(&w.sub(v)).expect("target degree dominates source");
        let cols: Vec<Vec<Scalar>> = src
            .basis
            .iter()
            .map(|(a, g)| self.coords_of(&a.mul(&shift), *g, &dst))
            .collect();
        let m = Arc::new(Matrix::from_columns(self.ring.field, dst.dim(), &cols));
        self.maps.lock().unwrap().insert(key, m.clone());
        m
    }

    /// Natural map `(M_{x_S})_u -> (M_{x_T})_u` for `S` contained in `T`.
    pub fn localization_map(&self, u: &MultiDegree, from: u64, to: u64) -> Arc<Matrix> {
        self.mult_map(&self.clamp(u, from), &self.clamp(u, to))
    }

    /// Čech complex at degree `u` on the given generator supports, every
    /// term additionally localized at `extra`.
    pub fn complex(&self, supports: &[u64], extra: u64, u: &MultiDegree) -> CechComplex {
        let s = supports.len();
        let mask_of = |sigma: u64| {
            (0..s)
                .filter(|l| sigma >> l & 1 == 1)
                .fold(extra, |acc, l| acc | supports[l])
        };
        let mut terms: Vec<Vec<(u64, Arc<Piece>)>> = Vec::with_capacity(s + 1);
        for i in 0..=s {
            terms.push(
                subsets_of_size(s, i)
                    .into_iter()
                    .map(|sigma| (sigma, self.localized(u, mask_of(sigma))))
                    .collect(),
            );
        }
        let field = self.ring.field;
        let mut diffs = Vec::with_capacity(s);
        for i in 0..s {
            let rows: usize = terms[i + 1].iter().map(|(_, p)| p.dim()).sum();
            let cols: usize = terms[i].iter().map(|(_, p)| p.dim()).sum();
            let mut d = Matrix::zeros(field, rows, cols);
            let mut col_off = 0;
            for (sigma, src) in &terms[i] {
                let mut row_off = 0;
                for (tau, dst) in &terms[i + 1] {
                    if tau & sigma == *sigma {
                        let j = (tau & !sigma).trailing_zeros() as u64;
                        let below = (sigma & ((1u64 << j) - 1)).count_ones();
                        let m = self.localization_map(u, mask_of(*sigma), mask_of(*tau));
                        let neg = below % 2 == 1;
                        for r in 0..m.rows {
                            for c in 0..m.cols {
                                let x = m.get(r, c);
                                if !x.is_zero() {
                                    d.set(row_off + r, col_off + c, if neg { -x } else { x.clone() });
                                }
                            }
                        }
                    }
                    row_off += dst.dim();
                }
                col_off += src.dim();
            }
            diffs.push(d);
        }
        CechComplex {
            field,
            dims: terms
                .iter()
                .map(|t| t.iter().map(|(_, p)| p.dim()).sum())
                .collect(),
            terms: terms
                .into_iter()
                .map(|t| t.into_iter().map(|(sig, p)| (sig, mask_of(sig), p)).collect())
                .collect(),
            diffs,
        }
    }

    /// Chain map between the complexes at `u` localized at `extra_from` and
    /// at `extra_to`, blockwise by the localization maps.
    pub fn chain_map(&self, supports: &[u64], extra_from: u64, extra_to: u64, u: &MultiDegree, i: usize) -> Matrix {
        let s = supports.len();
        let mask_of = |sigma: u64, extra: u64| {
            (0..s)
                .filter(|l| sigma >> l & 1 == 1)
                .fold(extra, |acc, l| acc | supports[l])
        };
        let sigmas = subsets_of_size(s, i);
        let src_dims: Vec<usize> = sigmas
            .iter()
            .map(|&sg| self.localized(u, mask_of(sg, extra_from)).dim())
            .collect();
        let dst_dims: Vec<usize> = sigmas
            .iter()
            .map(|&sg| self.localized(u, mask_of(sg, extra_to)).dim())
            .collect();
        let mut out = Matrix::zeros(self.ring.field, dst_dims.iter().sum(), src_dims.iter().sum());
        let (mut ro, mut co) = (0, 0);
        for (k, &sg) in sigmas.iter().enumerate() {
            let m = self.localization_map(u, mask_of(sg, extra_from), mask_of(sg, extra_to));
            for r in 0..m.rows {
                for c in 0..m.cols {
                    out.set(ro + r, co + c, m.get(r, c).clone());
                }
            }
            ro += dst_dims[k];
            co += src_dims[k];
        }
        out
    }

    /// The finitely many representative degrees: per coordinate the values
    /// `c_j - 1` (standing for everything below `c_j`) through `K_j`
    /// (standing for everything from `K_j` up). `skip_low` and `skip_high`
    /// drop the extreme values on coordinates where they are known to vanish.
    pub fn types(&self, coords: &[usize], skip_low: &[bool], skip_high: &[bool]) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = vec![Vec::new()];
        for (idx, &j) in coords.iter().enumerate() {
            let lo = if skip_low[idx] { self.c[j] } else { self.c[j] - 1 };
            let hi = if skip_high[idx] { self.k[j] - 1 } else { self.k[j] };
            let mut next = Vec::new();
            for t in &out {
                for v in lo..=hi {
                    let mut t2 = t.clone();
                    t2.push(v);
                    next.push(t2);
                }
            }
            out = next;
        }
        out
    }

    /// Where a representative value sits: below the generators, in the
    /// middle, or in the stable top range.
    pub fn region(&self, j: usize, v: i64) -> Region {
        if v < self.c[j] {
            Region::Low
        } else if v >= self.k[j] {
            Region::High
        } else {
            Region::Exact
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Low,
    Exact,
    High,
}

pub struct CechComplex {
    pub field: crate::scalar::Field,
    pub dims: Vec<usize>,
    /// Per cohomological degree: `(sigma, localized support, piece)`.
    pub terms: Vec<Vec<(u64, u64, Arc<Piece>)>>,
    pub diffs: Vec<Matrix>,
}

impl CechComplex {
    fn rank_of(&self, i: isize) -> usize {
        if i < 0 || i as usize >= self.diffs.len() {
            0
        } else {
            self.diffs[i as usize].rank()
        }
    }

    pub fn cohomology_dim(&self, i: usize) -> usize {
        if i >= self.dims.len() {
            return 0;
        }
        self.dims[i] - self.rank_of(i as isize) - self.rank_of(i as isize - 1)
    }

    pub fn all_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.diffs.iter().map(Matrix::rank).collect();
        (0..self.dims.len())
            .map(|i| {
                let out = ranks.get(i).copied().unwrap_or(0);
                let inn = if i == 0 { 0 } else { ranks[i - 1] };
                self.dims[i] - out - inn
            })
            .collect()
    }

    pub fn is_complex(&self) -> bool {
        self.diffs.windows(2).all(|w| w[1].mul(&w[0]).is_zero())
    }

    /// Cycles in degree `i` as kernel vectors, boundaries as image columns.
    pub fn cycles_and_boundaries(&self, i: usize) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
        let n = self.dims[i];
        let cycles = match self.diffs.get(i) {
            Some(d) if d.rows > 0 => d.kernel(),
            _ => identity_columns(self.field, n),
        };
        let boundaries = if i == 0 {
            Vec::new()
        } else {
            let d = &self.diffs[i - 1];
            (0..d.cols).map(|c| d.column(c)).collect()
        };
        (cycles, boundaries)
    }
}

pub fn identity_columns(field: crate::scalar::Field, n: usize) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            v
        })
        .collect()
}
