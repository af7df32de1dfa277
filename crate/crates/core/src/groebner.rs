//! Buchberger's algorithm for submodules of graded free modules, normal
//! forms, Schreyer syzygies and graded pieces.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::module::{FreeModule, GenDegree, ModuleOrder, Presentation, VTerm, Vector};
use crate::monomial::{Monomial, MultiDegree};
use crate::ring::{Regime, Ring};

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub ring: Ring,
    pub free: FreeModule,
    pub order: ModuleOrder,
    /// Reduced and monic, sorted increasingly by leading term.
    pub elements: Vec<Vector>,
    /// `elements[i] = sum_j cofactors[i]_j * gens[j]` when tracking was requested.
    pub cofactors: Option<Vec<Vector>>,
    pub ngens: usize,
    by_comp: Vec<Vec<usize>>,
}

#[derive(Clone)]
struct Elem {
    v: Vector,
    cof: Option<Vector>,
}

fn find_divisor(basis: &[Elem], by_comp: &[Vec<usize>], t: &VTerm) -> Option<usize> {
    by_comp.get(t.comp)?.iter().copied().find(|&k| {
        let lt = basis[k].v.leading().unwrap();
        lt.mono.divides(&t.mono)
    })
}

/// Reduce `e` by `basis`. With `full` every term is reduced, otherwise only
/// the leading term.
fn reduce_elem(
    mut e: Elem,
    basis: &[Elem],
    by_comp: &[Vec<usize>],
    order: &ModuleOrder,
    cof_order: &ModuleOrder,
    full: bool,
) -> Elem {
    let mut done: Vec<VTerm> = Vec::new();
    let mut pos = 0;
    loop {
        let Some(t) = e.v.terms.get(pos).cloned() else { break };
        match find_divisor(basis, by_comp, &t) {
            Some(k) => {
                let b = &basis[k];
                let lt = b.v.leading().unwrap();
                let q = t.mono.div(&lt.mono);
                let c = -&(&t.coeff * &lt.coeff.inv());
                e.v = e.v.add(&b.v.mul_term(&q, &c), order);
                if let (Some(ec), Some(bc)) = (e.cof.as_mut(), b.cof.as_ref()) {
                    *ec = ec.add(&bc.mul_term(&q, &c), cof_order);
                }
            }
            None => {
                if !full {
                    break;
                }
                pos += 1;
            }
        }
        if pos > 0 && full {
            // terms before pos are irreducible; move them out to keep adds short
            done.extend(e.v.terms.drain(..pos));
            pos = 0;
        }
    }
    if !done.is_empty() {
        done.extend(e.v.terms.drain(..));
        e.v = Vector { terms: done };
    }
    e
}

fn make_monic(e: Elem) -> Elem {
    let c = e.v.leading().unwrap().coeff.inv();
    Elem {
        v: e.v.scale(&c),
        cof: e.cof.map(|x| x.scale(&c)),
    }
}

fn index_by_comp(basis: &[Elem], rank: usize) -> Vec<Vec<usize>> {
    let mut by = vec![Vec::new(); rank];
    for (i, e) in basis.iter().enumerate() {
        by[e.v.leading().unwrap().comp].push(i);
    }
    by
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of the submodule generated by `gens`, after
    /// checking that every generator is graded in `free`.
    pub fn compute(ring: &Ring, free: &FreeModule, gens: &[Vector], track: bool) -> Result<GroebnerBasis> {
        for (i, g) in gens.iter().enumerate() {
            if let Some(t) = g.terms.iter().find(|t| t.comp >= free.rank()) {
                return Err(Error::RankMismatch {
                    expected: free.rank(),
                    got: t.comp + 1,
                });
            }
            if !g.is_coarse_homogeneous(free, ring) {
                return Err(Error::Ungraded(format!("generator {} is not homogeneous", i + 1)));
            }
            if ring.regime == Regime::Multigraded && !g.is_fine_homogeneous(free) {
                return Err(Error::Ungraded(format!(
                    "generator {} is not fine-multihomogeneous",
                    i + 1
                )));
            }
        }
        Ok(Self::compute_unchecked(ring, free, ModuleOrder::top(ring), gens, track))
    }

    /// No gradedness check; used internally for inhomogeneous auxiliary
    /// computations such as radical membership.
    pub fn compute_unchecked(
        ring: &Ring,
        free: &FreeModule,
        order: ModuleOrder,
        gens: &[Vector],
        track: bool,
    ) -> GroebnerBasis {
        let rank = free.rank();
        let cof_order = ModuleOrder::top(ring);
        let weight = |t: &VTerm| t.mono.total_degree() as i64 + free.degrees[t.comp].weight();
        let mut basis: Vec<Elem> = Vec::new();
        let mut by_comp: Vec<Vec<usize>> = vec![Vec::new(); rank];
        let mut pairs: BTreeSet<(i64, usize, usize)> = BTreeSet::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();

        let insert = |e: Elem,
                      basis: &mut Vec<Elem>,
                      by_comp: &mut Vec<Vec<usize>>,
                      pairs: &mut BTreeSet<(i64, usize, usize)>,
                      pending: &mut HashSet<(usize, usize)>| {
            let e = make_monic(e);
            let lt = e.v.leading().unwrap().clone();
            let j = basis.len();
            for &i in &by_comp[lt.comp] {
                let li = basis[i].v.leading().unwrap();
                let l = li.mono.lcm(&lt.mono);
                let w = l.total_degree() as i64 + free.degrees[lt.comp].weight();
                pairs.insert((w, i, j));
                pending.insert((i, j));
            }
            by_comp[lt.comp].push(j);
            basis.push(e);
        };

        let mut initial: Vec<(usize, Vector)> = gens
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(j, g)| (j, g.resort(&order)))
            .collect();
        initial.sort_by_key(|(j, g)| (weight(g.leading().unwrap()), *j));
        for (j, g) in initial {
            let cof = track.then(|| Vector::unit(ring, j));
            let e = reduce_elem(Elem { v: g, cof }, &basis, &by_comp, &order, &cof_order, false);
            if !e.v.is_zero() {
                insert(e, &mut basis, &mut by_comp, &mut pairs, &mut pending);
            }
        }

        while let Some(&(w, i, j)) = pairs.iter().next() {
            pairs.remove(&(w, i, j));
            pending.remove(&(i, j));
            let (ti, tj) = (
                basis[i].v.leading().unwrap().clone(),
                basis[j].v.leading().unwrap().clone(),
            );
            let l = ti.mono.lcm(&tj.mono);
            if rank == 1 && ti.mono.is_coprime(&tj.mono) {
                continue;
            }
            let chain = by_comp[ti.comp].iter().any(|&k| {
                k != i
                    && k != j
                    && basis[k].v.leading().unwrap().mono.divides(&l)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let one = ring.field.one();
            let qi = l.div(&ti.mono);
            let qj = l.div(&tj.mono);
            let v = basis[i]
                .v
                .mul_term(&qi, &one)
                .add(&basis[j].v.mul_term(&qj, &-&one), &order);
            let cof = match (&basis[i].cof, &basis[j].cof) {
                (Some(a), Some(b)) => Some(a.mul_term(&qi, &one).add(&b.mul_term(&qj, &-&one), &cof_order)),
                _ => None,
            };
            let e = reduce_elem(Elem { v, cof }, &basis, &by_comp, &order, &cof_order, false);
            if !e.v.is_zero() {
                insert(e, &mut basis, &mut by_comp, &mut pairs, &mut pending);
            }
        }

        // minimalize: drop elements whose leading term is divisible by another's
        let mut keep: Vec<Elem> = Vec::new();
        for (i, e) in basis.iter().enumerate() {
            let lt = e.v.leading().unwrap();
            let redundant = basis.iter().enumerate().any(|(k, f)| {
                let lk = f.v.leading().unwrap();
                k != i
                    && lk.comp == lt.comp
                    && lk.mono.divides(&lt.mono)
                    && (lk.mono != lt.mono || k < i)
            });
            if !redundant {
                keep.push(e.clone());
            }
        }
        // tail-reduce each element against the others
        let mut reduced = Vec::with_capacity(keep.len());
        for i in 0..keep.len() {
            let others: Vec<Elem> = keep
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, e)| e.clone())
                .collect();
            let idx = index_by_comp(&others, rank);
            let e = reduce_elem(keep[i].clone(), &others, &idx, &order, &cof_order, true);
            reduced.push(make_monic(e));
        }
        reduced.sort_by(|a, b| {
            let (x, y) = (a.v.leading().unwrap(), b.v.leading().unwrap());
            order.cmp((&x.mono, x.comp), (&y.mono, y.comp))
        });
        let by_comp = index_by_comp(&reduced, rank);
        let cofactors = track.then(|| reduced.iter().map(|e| e.cof.clone().unwrap()).collect());
        GroebnerBasis {
            ring: ring.clone(),
            free: free.clone(),
            order,
            elements: reduced.into_iter().map(|e| e.v).collect(),
            cofactors,
            ngens: gens.len(),
            by_comp,
        }
    }

    /// Gröbner basis of the relations of a presentation.
    pub fn of_presentation(p: &Presentation) -> GroebnerBasis {
        Self::compute_unchecked(&p.ring, &p.free, p.order(), &p.relations, false)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Leading term of some element divides `(mono, comp)`.
    pub fn is_reducible(&self, mono: &Monomial, comp: usize) -> bool {
        self.by_comp.get(comp).is_some_and(|ks| {
            ks.iter()
                .any(|&k| self.elements[k].leading().unwrap().mono.divides(mono))
        })
    }

    pub fn normal_form(&self, v: &Vector) -> Result<Vector> {
        if let Some(t) = v.terms.iter().find(|t| t.comp >= self.free.rank()) {
            return Err(Error::RankMismatch {
                expected: self.free.rank(),
                got: t.comp + 1,
            });
        }
        Ok(self.reduce(v))
    }

    /// Full reduction; `v` must lie in the ambient free module.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let v = v.resort(&self.order);
        self.reduce_sorted(v)
    }

    fn reduce_sorted(&self, v: Vector) -> Vector {
        let mut done: Vec<VTerm> = Vec::new();
        let mut rest = v;
        while let Some(t) = rest.leading().cloned() {
            let div = self.by_comp.get(t.comp).and_then(|ks| {
                ks.iter()
                    .copied()
                    .find(|&k| self.elements[k].leading().unwrap().mono.divides(&t.mono))
            });
            match div {
                Some(k) => {
                    let g = &self.elements[k];
                    let q = t.mono.div(&g.leading().unwrap().mono);
                    rest = rest.add(&g.mul_term(&q, &-&t.coeff), &self.order);
                }
                None => {
                    done.push(t);
                    rest.terms.remove(0);
                }
            }
        }
        Vector { terms: done }
    }

    /// Normal form of a single term `mono * e_comp`.
    pub fn reduce_term(&self, mono: &Monomial, comp: usize) -> Vector {
        self.reduce_sorted(Vector::term(mono.clone(), comp, self.ring.field.one()))
    }

    /// Remainder together with quotients: `v = sum_k q_k * elements[k] + r`.
    pub fn reduce_with_quotients(&self, v: &Vector) -> (Vector, Vector) {
        let cof_order = ModuleOrder::top(&self.ring);
        let basis: Vec<Elem> = self
            .elements
            .iter()
            .enumerate()
            .map(|(k, g)| Elem {
                v: g.clone(),
                cof: Some(Vector::unit(&self.ring, k)),
            })
            .collect();
        let e = Elem {
            v: v.resort(&self.order),
            cof: Some(Vector::zero()),
        };
        let e = reduce_elem(e, &basis, &self.by_comp, &self.order, &cof_order, true);
        (e.v, e.cof.unwrap().scale(&-&self.ring.field.one()))
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// The submodule is everything: for an ideal, it contains a unit.
    pub fn is_whole(&self) -> bool {
        (0..self.free.rank()).all(|c| self.is_reducible(&self.ring.one(), c))
    }

    /// Degree of each element as a generator of a free module.
    pub fn element_degrees(&self) -> Vec<GenDegree> {
        self.elements
            .iter()
            .map(|g| {
                let t = g.leading().unwrap();
                let d = self.free.degrees[t.comp].offset(&t.mono, &self.ring);
                if g.is_fine_homogeneous(&self.free) {
                    d
                } else {
                    GenDegree::coarse(d.coarse)
                }
            })
            .collect()
    }

    /// Schreyer syzygies of the basis elements, as vectors in a free module
    /// with basis `elements`.
    pub fn syzygies(&self) -> (FreeModule, Vec<Vector>) {
        let free = FreeModule::new(self.element_degrees());
        let syz_order = ModuleOrder::top(&self.ring);
        let mut out = Vec::new();
        for ks in &self.by_comp {
            for (a, &i) in ks.iter().enumerate() {
                for &j in &ks[a + 1..] {
                    let (ti, tj) = (
                        self.elements[i].leading().unwrap(),
                        self.elements[j].leading().unwrap(),
                    );
                    let l = ti.mono.lcm(&tj.mono);
                    let one = self.ring.field.one();
                    let qi = l.div(&ti.mono);
                    let qj = l.div(&tj.mono);
                    let s = self.elements[i]
                        .mul_term(&qi, &one)
                        .add(&self.elements[j].mul_term(&qj, &-&one), &self.order);
                    let (r, quot) = self.reduce_with_quotients(&s);
                    debug_assert!(r.is_zero());
                    let mut syz = Vector::term(qi, i, one.clone())
                        .add(&Vector::term(qj, j, -&one), &syz_order);
                    syz = syz.add(&quot.scale(&-&one), &syz_order);
                    if !syz.is_zero() {
                        out.push(syz);
                    }
                }
            }
        }
        (free, out)
    }

    /// Standard monomials `(mono, comp)` of the quotient `F / span` in a
    /// fine degree.
    pub fn standard_in_fine(&self, u: &MultiDegree) -> Vec<(Monomial, usize)> {
        let mut out = Vec::new();
        for (c, d) in self.free.degrees.iter().enumerate() {
            let Some(f) = &d.fine else { continue };
            if let Some(mono) = Monomial::from_degree(&u.sub(f)) {
                if !self.is_reducible(&mono, c) {
                    out.push((mono, c));
                }
            }
        }
        out
    }

    /// Standard monomials in a coarse degree; requires `m = 0`.
    pub fn standard_in_coarse(&self, n: i64) -> Result<Vec<(Monomial, usize)>> {
        if self.ring.m() > 0 {
            return Err(Error::InfiniteDimensionalPiece(format!(
                "coarse degree {n} over a ring with base variables"
            )));
        }
        let mut out = Vec::new();
        for (c, d) in self.free.degrees.iter().enumerate() {
            for mono in monomials_of_degree(self.ring.nvars(), n - d.coarse) {
                if !self.is_reducible(&mono, c) {
                    out.push((mono, c));
                }
            }
        }
        Ok(out)
    }

    pub fn render(&self) -> Vec<String> {
        self.elements
            .iter()
            .map(|v| {
                if self.free.rank() == 1 {
                    v.coord(0, &self.ring).render(&self.ring)
                } else {
                    v.render(self.free.rank(), &self.ring)
                }
            })
            .collect()
    }
}

/// Degree argument for graded pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PieceDegree {
    Fine(MultiDegree),
    Coarse(i64),
}

/// Standard-monomial basis of `M_u`. Fine degrees need a fine module; coarse
/// degrees need `m = 0`.
pub fn graded_piece_basis(p: &Presentation, u: &PieceDegree) -> Result<Vec<(Monomial, usize)>> {
    match u {
        PieceDegree::Fine(d) => {
            let q = p
                .with_inferred_fine_degrees()
                .ok_or_else(|| Error::RegimeViolation("fine piece of a module without fine grading".into()))?;
            Ok(GroebnerBasis::of_presentation(&q).standard_in_fine(d))
        }
        PieceDegree::Coarse(n) => GroebnerBasis::of_presentation(p).standard_in_coarse(*n),
    }
}

/// All monomials in `n` variables of total degree `d` (empty if `d < 0`),
/// in decreasing lexicographic exponent order.
pub fn monomials_of_degree(n: usize, d: i64) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::from_exps(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(n, d as u32, &mut Vec::new(), &mut out);
    out
}

/// Syzygies of an arbitrary list of vectors in `free`, returned in a free
/// module with one basis element per input vector.
pub fn syzygies_of(ring: &Ring, free: &FreeModule, gens: &[Vector]) -> (FreeModule, Vec<Vector>) {
    let n = gens.len();
    let order = ModuleOrder::top(ring);
    let gens_sorted: Vec<Vector> = gens.iter().map(|g| g.resort(&order)).collect();
    let degrees: Vec<GenDegree> = gens_sorted
        .iter()
        .map(|g| match g.leading() {
            Some(t) => {
                let d = free.degrees[t.comp].offset(&t.mono, ring);
                if g.is_fine_homogeneous(free) {
                    d
                } else {
                    GenDegree::coarse(d.coarse)
                }
            }
            None => GenDegree::coarse(0),
        })
        .collect();
    let target = FreeModule::new(degrees);
    let gb = GroebnerBasis::compute_unchecked(ring, free, order.clone(), &gens_sorted, true);
    let cof = gb.cofactors.as_ref().unwrap();
    let (_, gsyz) = gb.syzygies();
    let mut out: Vec<Vector> = Vec::new();
    // T^t s for each basis syzygy s
    let pull = |s: &Vector| {
        let mut acc = Vector::zero();
        for t in &s.terms {
            acc = acc.add(&cof[t.comp].mul_term(&t.mono, &t.coeff), &order);
        }
        acc
    };
    for s in &gsyz {
        let v = pull(s);
        if !v.is_zero() {
            out.push(v);
        }
    }
    // e_j - T^t S_j for each input generator
    for (j, g) in gens_sorted.iter().enumerate() {
        let e = Vector::unit(ring, j);
        if g.is_zero() {
            out.push(e);
            continue;
        }
        let (r, quot) = gb.reduce_with_quotients(g);
        debug_assert!(r.is_zero());
        let v = e.add(&pull(&quot).scale(&-&ring.field.one()), &order);
        if !v.is_zero() {
            out.push(v);
        }
    }
    debug_assert!(out.iter().all(|v| v.terms.iter().all(|t| t.comp < n)));
    (target, dedup_vectors(out))
}

fn dedup_vectors(vs: Vec<Vector>) -> Vec<Vector> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for v in vs {
        let c = v.leading().unwrap().coeff.inv();
        let key = v.scale(&c);
        if seen.insert(key) {
            out.push(v);
        }
    }
    out
}

/// Evaluate `sum_j s_j * gens[j]`.
pub fn apply_combination(ring: &Ring, gens: &[Vector], s: &Vector) -> Vector {
    let order = ModuleOrder::top(ring);
    let mut acc = Vector::zero();
    for t in &s.terms {
        acc = acc.add(&gens[t.comp].resort(&order).mul_term(&t.mono, &t.coeff), &order);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::free_rank_one;
    use crate::poly::Polynomial;
    use crate::ring::{MonomialOrder, RingSpec};
    use crate::scalar::Field;

    fn ideal_gb(ring: &Ring, gens: &[Polynomial]) -> GroebnerBasis {
        let order = ModuleOrder::top(ring);
        let vs: Vec<Vector> = gens
            .iter()
            .map(|g| Vector::from_coords(&order, std::slice::from_ref(g)))
            .collect();
        GroebnerBasis::compute(ring, &free_rank_one(ring), &vs, true).unwrap()
    }

    fn mono(ring: &Ring, e: &[u32]) -> Polynomial {
        Polynomial::monomial(ring, Monomial::from_exps(e))
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = RingSpec::base_ring(Field::Rationals, 2);
        let gb = ideal_gb(&r, &[mono(&r, &[2, 0]), mono(&r, &[1, 1])]);
        assert_eq!(gb.render(), vec!["y1*y2", "y1^2"]);
        let (_, syz) = gb.syzygies();
        assert_eq!(syz.len(), 1);
    }

    #[test]
    fn reversed_variables_gain_one_element() {
        // positional variables named x3, x2, x1 so that x3 > x2 > x1
        let r = RingSpec::new(
            Field::Rationals,
            vec![],
            vec!["x3".into(), "x2".into(), "x1".into()],
        )
        .unwrap();
        let f = mono(&r, &[1, 0, 1]).sub(&mono(&r, &[0, 2, 0]), &r);
        let g = mono(&r, &[0, 0, 2]).sub(&mono(&r, &[1, 1, 0]), &r);
        let gb = ideal_gb(&r, &[f.clone(), g.clone()]);
        assert_eq!(gb.len(), 3);
        let cof = gb.cofactors.as_ref().unwrap();
        let order = ModuleOrder::top(&r);
        let gens = vec![
            Vector::from_coords(&order, &[f]),
            Vector::from_coords(&order, &[g]),
        ];
        for (k, c) in cof.iter().enumerate() {
            assert_eq!(apply_combination(&r, &gens, c), gb.elements[k]);
        }
    }

    #[test]
    fn lex_basis_has_four_elements() {
        let r = RingSpec::standard(Field::Rationals, 0, 3)
            .unwrap()
            .with_order(MonomialOrder::Lex);
        let f = mono(&r, &[1, 0, 1]).sub(&mono(&r, &[0, 2, 0]), &r);
        let g = mono(&r, &[2, 0, 0]).sub(&mono(&r, &[0, 1, 1]), &r);
        assert_eq!(ideal_gb(&r, &[f, g]).len(), 4);
    }

    #[test]
    fn grevlex_basis_is_unchanged() {
        let r = RingSpec::standard(Field::Rationals, 0, 3).unwrap();
        let f = mono(&r, &[1, 0, 1]).sub(&mono(&r, &[0, 2, 0]), &r);
        let g = mono(&r, &[2, 0, 0]).sub(&mono(&r, &[0, 1, 1]), &r);
        assert_eq!(ideal_gb(&r, &[f, g]).len(), 2);
    }

    #[test]
    fn normal_forms() {
        let r = RingSpec::base_ring(Field::Rationals, 2);
        let order = ModuleOrder::top(&r);
        let gb = ideal_gb(&r, &[mono(&r, &[2, 0])]);
        let v = Vector::from_coords(&order, &[mono(&r, &[2, 1])]);
        assert!(gb.normal_form(&v).unwrap().is_zero());
        let gb = ideal_gb(&r, &[mono(&r, &[1, 0])]);
        let v = Vector::from_coords(&order, &[mono(&r, &[0, 3])]);
        assert_eq!(gb.normal_form(&v).unwrap(), v);
        let r3 = RingSpec::standard(Field::Rationals, 0, 3)
            .unwrap()
            .with_order(MonomialOrder::Lex);
        let order3 = ModuleOrder::top(&r3);
        let f = mono(&r3, &[1, 0, 1]).sub(&mono(&r3, &[0, 2, 0]), &r3);
        let gb = ideal_gb(&r3, &[f]);
        let v = Vector::from_coords(&order3, &[mono(&r3, &[1, 0, 1])]);
        let nf = gb.normal_form(&v).unwrap();
        assert_eq!(nf.coord(0, &r3).render(&r3), "x2^2");
        let bad = Vector::unit(&r3, 3);
        assert!(matches!(gb.normal_form(&bad), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn koszul_syzygy() {
        let r = RingSpec::standard(Field::Rationals, 0, 2).unwrap();
        let gb = ideal_gb(&r, &[mono(&r, &[1, 0]), mono(&r, &[0, 1])]);
        let (free, syz) = gb.syzygies();
        assert_eq!(syz.len(), 1);
        assert_eq!(syz[0].degree(&free, &r).unwrap().coarse, 2);
        let r1 = RingSpec::base_ring(Field::Rationals, 1);
        let gb = ideal_gb(&r1, &[mono(&r1, &[1])]);
        assert!(gb.syzygies().1.is_empty());
    }

    #[test]
    fn piece_dimensions() {
        let r = RingSpec::standard(Field::Rationals, 0, 2).unwrap();
        let p = Presentation::quotient(&r, &[mono(&r, &[2, 0]), mono(&r, &[1, 1]), mono(&r, &[0, 2])]).unwrap();
        let dims: Vec<usize> = (0..3)
            .map(|n| graded_piece_basis(&p, &PieceDegree::Coarse(n)).unwrap().len())
            .collect();
        assert_eq!(dims, vec![1, 2, 0]);
        let free = Presentation::ring_module(&r);
        assert_eq!(graded_piece_basis(&free, &PieceDegree::Coarse(3)).unwrap().len(), 4);
        let r2 = RingSpec::standard(Field::Rationals, 1, 1).unwrap();
        let q = Presentation::quotient(&r2, &[mono(&r2, &[1, 1])]).unwrap();
        let fine = PieceDegree::Fine(MultiDegree(vec![1, 1]));
        assert!(graded_piece_basis(&q, &fine).unwrap().is_empty());
        assert!(matches!(
            graded_piece_basis(&q, &PieceDegree::Coarse(1)),
            Err(Error::InfiniteDimensionalPiece(_))
        ));
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(2, 3).len(), 4);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert!(monomials_of_degree(2, -1).is_empty());
    }
}
