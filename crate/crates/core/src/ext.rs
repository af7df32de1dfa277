//! `Ext^i(A, B)` as homology of `Hom(F, B)` for a free resolution `F` of `A`,
//! with grade and depth derived from it.

use crate::error::Result;
use crate::groebner::{syzygies_of, GroebnerBasis};
use crate::ideal::as_vectors;
use crate::module::{FreeModule, GenDegree, ModuleOrder, Presentation, VTerm, Vector};
use crate::poly::Polynomial;
use crate::resolution::ResolutionChain;
use crate::ring::Ring;

struct DualComplex {
    ring: Ring,
    b: Presentation,
    res: ResolutionChain,
}

impl DualComplex {
    /// `Hom(F_j, B)` lifted to the free module `F_B^{n_j}`; basis index
    /// `k * rank(B) + g`, degree `deg(g) - deg(F_j generator k)`.
    fn free(&self, j: usize) -> FreeModule {
        let Some(fj) = self.res.modules.get(j) else {
            return FreeModule::new(Vec::new());
        };
        let mut degrees = Vec::new();
        for k in &fj.degrees {
            for g in &self.b.free.degrees {
                degrees.push(GenDegree {
                    coarse: g.coarse - k.coarse,
                    fine: match (&g.fine, &k.fine) {
                        (Some(a), Some(b)) => Some(a.sub(b)),
                        _ => None,
                    },
                });
            }
        }
        FreeModule::new(degrees)
    }

    fn rank(&self, j: usize) -> usize {
        self.res.modules.get(j).map_or(0, |f| f.rank()) * self.b.rank()
    }

    /// `N_B^{n_j}`.
    fn relations(&self, j: usize) -> Vec<Vector> {
        let n = self.res.modules.get(j).map_or(0, |f| f.rank());
        let rb = self.b.rank();
        let mut out = Vec::new();
        for k in 0..n {
            for rel in &self.b.relations {
                out.push(shift_comps(rel, k * rb));
            }
        }
        out
    }

    /// Images of the basis of `Hom(F_{j-1}, B)` under `d_j^*`.
    fn dual_map(&self, j: usize) -> Vec<Vector> {
        let order = ModuleOrder::top(&self.ring);
        let rb = self.b.rank();
        let n_prev = self.res.modules.get(j - 1).map_or(0, |f| f.rank());
        let cols = self.res.maps.get(j - 1);
        let mut out = Vec::new();
        for r in 0..n_prev {
            for g in 0..rb {
                let mut terms = Vec::new();
                if let Some(cols) = cols {
                    for (k, col) in cols.iter().enumerate() {
                        for t in col.terms.iter().filter(|t| t.comp == r) {
                            terms.push(VTerm {
                                mono: t.mono.clone(),
                                comp: k * rb + g,
                                coeff: t.coeff.clone(),
                            });
                        }
                    }
                }
                out.push(Vector::from_terms(&order, terms));
            }
        }
        out
    }

    /// Generators of the cycles in `Hom(F_i, B)` lifted to `F_B^{n_i}`.
    fn cycles(&self, i: usize) -> Vec<Vector> {
        let n = self.rank(i);
        let phi = self.dual_map(i + 1);
        let target = self.relations(i + 1);
        if self.rank(i + 1) == 0 {
            return (0..n).map(|c| Vector::unit(&self.ring, c)).collect();
        }
        let mut all = phi;
        all.extend(target);
        let (_, syz) = syzygies_of(&self.ring, &self.free(i + 1), &all);
        syz.iter()
            .map(|s| Vector {
                terms: s.terms.iter().filter(|t| t.comp < n).cloned().collect(),
            })
            .filter(|v| !v.is_zero())
            .collect()
    }

    /// Generators of the boundaries plus `N_B^{n_i}`.
    fn boundaries(&self, i: usize) -> Vec<Vector> {
        let mut w = if i == 0 { Vec::new() } else { self.dual_map(i) };
        w.retain(|v| !v.is_zero());
        w.extend(self.relations(i));
        w
    }
}

fn shift_comps(v: &Vector, by: usize) -> Vector {
    Vector {
        terms: v
            .terms
            .iter()
            .map(|t| VTerm {
                mono: t.mono.clone(),
                comp: t.comp + by,
                coeff: t.coeff.clone(),
            })
            .collect(),
    }
}

fn dual_complex(a: &Presentation, b: &Presentation) -> Result<DualComplex> {
    let res = ResolutionChain::compute(a, a.ring.nvars() + 1)?;
    Ok(DualComplex {
        ring: a.ring.clone(),
        b: b.clone(),
        res,
    })
}

/// A presentation of `Ext^i(A, B)`.
pub fn ext_module(a: &Presentation, b: &Presentation, i: usize) -> Result<Presentation> {
    let dc = dual_complex(a, b)?;
    let ring = a.ring.clone();
    let z = dc.cycles(i);
    let w = dc.boundaries(i);
    let free_i = dc.free(i);
    let q = z.len();
    let mut all = z.clone();
    all.extend(w);
    let (_, syz) = syzygies_of(&ring, &free_i, &all);
    let relations: Vec<Vector> = syz
        .iter()
        .map(|s| Vector {
            terms: s.terms.iter().filter(|t| t.comp < q).cloned().collect(),
        })
        .filter(|v| !v.is_zero())
        .collect();
    let degrees = z
        .iter()
        .map(|v| {
            v.degree(&free_i, &ring)
                .map(|d| if v.is_fine_homogeneous(&free_i) { d } else { GenDegree::coarse(d.coarse) })
                .unwrap_or(GenDegree::coarse(0))
        })
        .collect();
    Ok(Presentation {
        ring,
        free: FreeModule::new(degrees),
        relations,
    })
}

/// `Ext^i(A, B) = 0`, decided by reducing the cycle generators modulo the
/// boundaries.
pub fn ext_is_zero(a: &Presentation, b: &Presentation, i: usize) -> Result<bool> {
    let dc = dual_complex(a, b)?;
    Ok(ext_vanishes(&dc, i))
}

fn ext_vanishes(dc: &DualComplex, i: usize) -> bool {
    if dc.rank(i) == 0 {
        return true;
    }
    let z = dc.cycles(i);
    let w = dc.boundaries(i);
    let gb = GroebnerBasis::compute_unchecked(&dc.ring, &dc.free(i), ModuleOrder::top(&dc.ring), &w, false);
    z.iter().all(|v| gb.contains(v))
}

/// Whether `b N = N`.
fn ideal_kills_quotient(ideal: &[Polynomial], n: &Presentation) -> bool {
    let gb = GroebnerBasis::of_presentation(&n.mod_ideal(ideal));
    gb.is_whole()
}

/// `grade_b(N) = min { i : Ext^i(R/b, N) != 0 }`; `None` when `bN = N`.
pub fn grade(ideal: &[Polynomial], n: &Presentation) -> Result<Option<usize>> {
    let ring = &n.ring;
    if ideal_kills_quotient(ideal, n) {
        return Ok(None);
    }
    let a = Presentation {
        ring: ring.clone(),
        free: crate::module::free_rank_one(ring),
        relations: as_vectors(ring, ideal),
    };
    let dc = dual_complex(&a, n)?;
    for i in 0..=ring.nvars() {
        if !ext_vanishes(&dc, i) {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Projective dimension; `None` for the zero module.
pub fn projective_dimension(n: &Presentation) -> Result<Option<usize>> {
    Ok(ResolutionChain::compute(n, n.ring.nvars() + 1)?.length())
}

/// `depth = (m + t) - pd` by Auslander–Buchsbaum.
pub fn depth_ab(n: &Presentation) -> Result<Option<i64>> {
    Ok(projective_dimension(n)?.map(|p| n.ring.nvars() as i64 - p as i64))
}

/// Depth as the grade of the homogeneous maximal ideal.
pub fn depth_via_ext(n: &Presentation) -> Result<Option<i64>> {
    let ring = &n.ring;
    let max: Vec<Polynomial> = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
    Ok(grade(&max, n)?.map(|g| g as i64))
}

/// `(grade_b(N), depth_AB(N))`.
pub fn grade_and_depth(ideal: &[Polynomial], n: &Presentation) -> Result<(Option<usize>, Option<i64>)> {
    Ok((grade(ideal, n)?, depth_ab(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::ring::RingSpec;
    use crate::scalar::Field;

    fn mono(ring: &Ring, e: &[u32]) -> Polynomial {
        Polynomial::monomial(ring, Monomial::from_exps(e))
    }

    #[test]
    fn hom_from_free_is_target() {
        let r = RingSpec::standard(Field::Rationals, 0, 2).unwrap();
        let b = Presentation::quotient(&r, &[mono(&r, &[1, 1])]).unwrap();
        let e = ext_module(&Presentation::ring_module(&r), &b, 0).unwrap();
        let gb = GroebnerBasis::of_presentation(&e);
        assert_eq!(e.rank(), 1);
        assert_eq!(gb.len(), 1);
        assert!(ext_is_zero(&Presentation::ring_module(&r), &b, 1).unwrap());
    }

    #[test]
    fn ext_one_of_principal_quotient() {
        let r = RingSpec::standard(Field::Rationals, 0, 1).unwrap();
        let a = Presentation::quotient(&r, &[mono(&r, &[1])]).unwrap();
        let e = ext_module(&a, &Presentation::ring_module(&r), 1).unwrap();
        let gb = GroebnerBasis::of_presentation(&e);
        assert_eq!(gb.render(), vec!["x1"]);
        assert_eq!(e.free.degrees[0].coarse, -1);
    }

    #[test]
    fn koszul_self_duality() {
        let r = RingSpec::standard(Field::Rationals, 0, 2).unwrap();
        let a = Presentation::quotient(&r, &[mono(&r, &[1, 0]), mono(&r, &[0, 1])]).unwrap();
        let rr = Presentation::ring_module(&r);
        assert!(ext_is_zero(&a, &rr, 0).unwrap());
        assert!(ext_is_zero(&a, &rr, 1).unwrap());
        assert!(!ext_is_zero(&a, &rr, 2).unwrap());
    }

    #[test]
    fn grades_and_depths() {
        let r = RingSpec::standard(Field::Rationals, 0, 2).unwrap();
        let max = [mono(&r, &[1, 0]), mono(&r, &[0, 1])];
        assert_eq!(grade(&max, &Presentation::ring_module(&r)).unwrap(), Some(2));
        let r1 = RingSpec::base_ring(Field::Rationals, 1);
        let y = [mono(&r1, &[1])];
        let k = Presentation::quotient(&r1, &y).unwrap();
        assert_eq!(grade(&y, &k).unwrap(), Some(0));
        let r3 = RingSpec::base_ring(Field::Rationals, 3);
        let i = [mono(&r3, &[1, 1, 0]), mono(&r3, &[0, 1, 1]), mono(&r3, &[1, 0, 1])];
        let q = Presentation::quotient(&r3, &i).unwrap();
        assert_eq!(depth_ab(&q).unwrap(), Some(1));
        assert_eq!(depth_via_ext(&q).unwrap(), Some(1));
    }
}
