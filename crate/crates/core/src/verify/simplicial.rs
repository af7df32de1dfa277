//! Simplicial complexes on `m` vertices, their Stanley–Reisner ideals and
//! reduced simplicial cohomology, and Hochster's formula for the fine pieces
//! of `H^i_m(k[Delta])`.

use crate::linalg::Matrix;
use crate::monomial::Monomial;
use crate::scalar::Field;

/// Faces are bitmasks over the vertices `0..m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub m: usize,
    pub facets: Vec<u64>,
}

impl SimplicialComplex {
    pub fn new(m: usize, facets: &[Vec<usize>]) -> SimplicialComplex {
        let masks: Vec<u64> = facets
            .iter()
            .map(|f| f.iter().fold(0u64, |a, &v| a | 1 << v))
            .collect();
        Self::from_masks(m, masks)
    }

    /// Keeps only the inclusion-maximal masks.
    pub fn from_masks(m: usize, masks: Vec<u64>) -> SimplicialComplex {
        let mut facets: Vec<u64> = masks
            .iter()
            .copied()
            .filter(|&a| !masks.iter().any(|&b| b != a && a & b == a))
            .collect();
        facets.sort_unstable();
        facets.dedup();
        SimplicialComplex { m, facets }
    }

    /// The complex whose faces contain none of the given squarefree
    /// monomial supports.
    pub fn from_squarefree_ideal(m: usize, gens: &[u64]) -> SimplicialComplex {
        let faces: Vec<u64> = (0u64..1 << m)
            .filter(|&s| gens.iter().all(|&g| g & s != g))
            .collect();
        Self::from_masks(m, faces)
    }

    pub fn is_face(&self, f: u64) -> bool {
        self.facets.iter().any(|&g| g & f == f)
    }

    /// All faces, the empty face included, by size then mask.
    pub fn faces(&self) -> Vec<u64> {
        let mut out: Vec<u64> = (0u64..1 << self.m).filter(|&f| self.is_face(f)).collect();
        out.sort_by_key(|&f| (f.count_ones(), f));
        out
    }

    /// Minimal non-faces, the generators of the Stanley–Reisner ideal.
    pub fn minimal_nonfaces(&self) -> Vec<u64> {
        let mut out: Vec<u64> = (0u64..1 << self.m)
            .filter(|&f| !self.is_face(f) && (0..self.m).all(|v| f >> v & 1 == 0 || self.is_face(f & !(1 << v))))
            .collect();
        out.sort_by_key(|&f| (f.count_ones(), f));
        out
    }

    /// Stanley–Reisner generators as monomials in `nvars` variables whose
    /// first `m` are the vertices.
    pub fn stanley_reisner(&self, nvars: usize) -> Vec<Monomial> {
        self.minimal_nonfaces()
            .into_iter()
            .map(|f| {
                let e: Vec<u32> = (0..nvars).map(|j| (j < 64 && f >> j & 1 == 1) as u32).collect();
                Monomial::from_exps(&e)
            })
            .collect()
    }

    pub fn link(&self, f: u64) -> SimplicialComplex {
        let faces: Vec<u64> = self
            .faces()
            .into_iter()
            .filter(|&g| g & f == 0 && self.is_face(g | f))
            .collect();
        Self::from_masks(self.m, faces)
    }

    /// `dim H~^k(Delta; field)`, with the empty face in dimension `-1`.
    pub fn reduced_cohomology(&self, field: Field, k: i64) -> usize {
        if k < -1 || self.facets.is_empty() {
            return 0;
        }
        let faces = self.faces();
        let of_dim = |d: i64| -> Vec<u64> { faces.iter().copied().filter(|f| f.count_ones() as i64 == d + 1).collect() };
        let coboundary_rank = |d: i64| -> usize {
            if d < -1 {
                return 0;
            }
            let src = of_dim(d);
            let dst = of_dim(d + 1);
            if src.is_empty() || dst.is_empty() {
                return 0;
            }
            let mut mat = Matrix::zeros(field, dst.len(), src.len());
            for (c, &s) in src.iter().enumerate() {
                for (r, &t) in dst.iter().enumerate() {
                    if t & s == s {
                        let v = (t & !s).trailing_zeros();
                        let below = (s & ((1u64 << v) - 1)).count_ones();
                        let x = if below % 2 == 0 { field.one() } else { -&field.one() };
                        mat.set(r, c, x);
                    }
                }
            }
            mat.rank()
        };
        of_dim(k).len() - coboundary_rank(k) - coboundary_rank(k - 1)
    }
}

/// `dim H^i_m(k[Delta])_u` by Hochster's formula: zero if `u` has a positive
/// coordinate or if `F = {j : u_j < 0}` is not a face, otherwise
/// `dim H~^{i - |F| - 1}(lk F)`.
pub fn hochster_dim(delta: &SimplicialComplex, field: Field, i: usize, u: &[i64]) -> usize {
    if u.iter().any(|&x| x > 0) {
        return 0;
    }
    let f = u
        .iter()
        .enumerate()
        .filter(|(_, &x)| x < 0)
        .fold(0u64, |a, (j, _)| a | 1 << j);
    if !delta.is_face(f) {
        return 0;
    }
    delta
        .link(f)
        .reduced_cohomology(field, i as i64 - f.count_ones() as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_points() {
        let d = SimplicialComplex::new(2, &[vec![0], vec![1]]);
        assert_eq!(hochster_dim(&d, Field::Rationals, 1, &[0, 0]), 1);
        assert_eq!(hochster_dim(&d, Field::Rationals, 0, &[0, 0]), 0);
        assert_eq!(d.minimal_nonfaces(), vec![0b11]);
    }

    #[test]
    fn full_edge() {
        let d = SimplicialComplex::new(2, &[vec![0, 1]]);
        assert_eq!(hochster_dim(&d, Field::Rationals, 2, &[-1, -1]), 1);
        assert_eq!(hochster_dim(&d, Field::Rationals, 2, &[-1, 0]), 0);
        assert!(d.minimal_nonfaces().is_empty());
    }

    #[test]
    fn circle_and_ideal_round_trip() {
        let d = SimplicialComplex::new(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(d.reduced_cohomology(Field::Rationals, 1), 1);
        assert_eq!(d.reduced_cohomology(Field::Rationals, 0), 0);
        let back = SimplicialComplex::from_squarefree_ideal(3, &d.minimal_nonfaces());
        assert_eq!(back, d);
    }
}
