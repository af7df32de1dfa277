//! Graded free modules, their elements, and module presentations.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MultiDegree};
use crate::poly::Polynomial;
use crate::ring::{Regime, Ring, RingSpec};
use crate::scalar::Scalar;

/// Degree of a free generator. A generator of `R(a)` sits in degree `-a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GenDegree {
    pub coarse: i64,
    pub fine: Option<MultiDegree>,
}

impl GenDegree {
    pub fn coarse(d: i64) -> GenDegree {
        GenDegree { coarse: d, fine: None }
    }

    pub fn fine(d: MultiDegree, ring: &RingSpec) -> GenDegree {
        GenDegree {
            coarse: d.coarse(ring.m()),
            fine: Some(d),
        }
    }

    /// The shift `a` with `R(a)` free on this generator.
    pub fn shift(&self) -> i64 {
        -self.coarse
    }

    pub fn offset(&self, mono: &Monomial, ring: &RingSpec) -> GenDegree {
        GenDegree {
            coarse: self.coarse + ring.coarse(mono),
            fine: self.fine.as_ref().map(|f| f.add(&mono.fine_degree())),
        }
    }

    /// Total weight used for pair selection: sum of fine entries, or the
    /// coarse degree when no fine degree is known.
    pub fn weight(&self) -> i64 {
        match &self.fine {
            Some(f) => f.0.iter().sum(),
            None => self.coarse,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeModule {
    pub degrees: Vec<GenDegree>,
}

impl FreeModule {
    pub fn new(degrees: Vec<GenDegree>) -> FreeModule {
        FreeModule { degrees }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_fine(&self) -> bool {
        self.degrees.iter().all(|d| d.fine.is_some())
    }

    pub fn shifts(&self) -> Vec<i64> {
        self.degrees.iter().map(GenDegree::shift).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VTerm {
    pub mono: Monomial,
    pub comp: usize,
    pub coeff: Scalar,
}

#[derive(Clone, Debug)]
pub enum OrderKind {
    /// Compare monomials first, then position (lower index is larger).
    TermOverPosition,
    /// Induced by leading terms of the images of the basis.
    Schreyer(Arc<Vec<(Monomial, usize)>>),
}

#[derive(Clone, Debug)]
pub struct ModuleOrder {
    pub ring: Ring,
    pub kind: OrderKind,
}

impl ModuleOrder {
    pub fn top(ring: &Ring) -> ModuleOrder {
        ModuleOrder {
            ring: ring.clone(),
            kind: OrderKind::TermOverPosition,
        }
    }

    pub fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        match &self.kind {
            OrderKind::TermOverPosition => {
                self.ring.cmp(a.0, b.0).then_with(|| b.1.cmp(&a.1))
            }
            OrderKind::Schreyer(leads) => {
                let (ma, ca) = &leads[a.1];
                let (mb, cb) = &leads[b.1];
                self.ring
                    .cmp(&a.0.mul(ma), &b.0.mul(mb))
                    .then_with(|| cb.cmp(ca))
                    .then_with(|| b.1.cmp(&a.1))
            }
        }
    }
}

/// An element of a free module: terms sorted decreasingly by a module order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    pub terms: Vec<VTerm>,
}

impl Vector {
    pub fn zero() -> Vector {
        Vector { terms: Vec::new() }
    }

    pub fn unit(ring: &RingSpec, comp: usize) -> Vector {
        Vector::term(ring.one(), comp, ring.field.one())
    }

    pub fn term(mono: Monomial, comp: usize, coeff: Scalar) -> Vector {
        if coeff.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: vec![VTerm { mono, comp, coeff }],
        }
    }

    pub fn from_terms(order: &ModuleOrder, terms: Vec<VTerm>) -> Vector {
        let mut acc: HashMap<(Monomial, usize), Scalar> = HashMap::new();
        for t in terms {
            let key = (t.mono, t.comp);
            match acc.get_mut(&key) {
                Some(v) => *v = &*v + &t.coeff,
                None => {
                    acc.insert(key, t.coeff);
                }
            }
        }
        let mut terms: Vec<VTerm> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((mono, comp), coeff)| VTerm { mono, comp, coeff })
            .collect();
        terms.sort_by(|a, b| order.cmp((&b.mono, b.comp), (&a.mono, a.comp)));
        Vector { terms }
    }

    pub fn from_coords(order: &ModuleOrder, coords: &[Polynomial]) -> Vector {
        let terms = coords
            .iter()
            .enumerate()
            .flat_map(|(comp, p)| {
                p.terms().iter().map(move |(m, c)| VTerm {
                    mono: m.clone(),
                    comp,
                    coeff: c.clone(),
                })
            })
            .collect();
        Vector::from_terms(order, terms)
    }

    pub fn coords(&self, rank: usize, ring: &RingSpec) -> Vec<Polynomial> {
        let mut per: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            per[t.comp].push((t.mono.clone(), t.coeff.clone()));
        }
        per.into_iter().map(|ts| Polynomial::from_terms(ring, ts)).collect()
    }

    pub fn coord(&self, comp: usize, ring: &RingSpec) -> Polynomial {
        Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .filter(|t| t.comp == comp)
                .map(|t| (t.mono.clone(), t.coeff.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&VTerm> {
        self.terms.first()
    }

    pub fn resort(&self, order: &ModuleOrder) -> Vector {
        Vector::from_terms(order, self.terms.clone())
    }

    pub fn add(&self, other: &Vector, order: &ModuleOrder) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.cmp((&a.mono, a.comp), (&b.mono, b.comp)) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.coeff + &b.coeff;
                    if !c.is_zero() {
                        out.push(VTerm {
                            mono: a.mono.clone(),
                            comp: a.comp,
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Vector { terms: out }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    mono: t.mono.clone(),
                    comp: t.comp,
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    /// Multiply by `c * mono`; monomial orders are multiplicative so the
    /// sort order is preserved.
    pub fn mul_term(&self, mono: &Monomial, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    mono: t.mono.mul(mono),
                    comp: t.comp,
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial, order: &ModuleOrder) -> Vector {
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = acc.add(&self.mul_term(m, c), order);
        }
        acc
    }

    /// `self + c * m * other`
    pub fn add_scaled(&self, other: &Vector, mono: &Monomial, c: &Scalar, order: &ModuleOrder) -> Vector {
        self.add(&other.mul_term(mono, c), order)
    }

    /// Degree of the element against the free module, if homogeneous.
    pub fn degree(&self, free: &FreeModule, ring: &RingSpec) -> Option<GenDegree> {
        let first = self.terms.first()?;
        let d = free.degrees[first.comp].offset(&first.mono, ring);
        Some(d)
    }

    pub fn is_coarse_homogeneous(&self, free: &FreeModule, ring: &RingSpec) -> bool {
        let Some(d) = self.degree(free, ring) else {
            return true;
        };
        self.terms
            .iter()
            .all(|t| free.degrees[t.comp].coarse + ring.coarse(&t.mono) == d.coarse)
    }

    pub fn is_fine_homogeneous(&self, free: &FreeModule) -> bool {
        let Some(first) = self.terms.first() else {
            return true;
        };
        let deg = |t: &VTerm| {
            free.degrees[t.comp]
                .fine
                .as_ref()
                .map(|f| f.add(&t.mono.fine_degree()))
        };
        let d = deg(first);
        d.is_some() && self.terms.iter().all(|t| deg(t) == d)
    }

    pub fn map_monomials(&self, order: &ModuleOrder, f: impl Fn(&Monomial) -> Monomial) -> Vector {
        Vector::from_terms(
            order,
            self.terms
                .iter()
                .map(|t| VTerm {
                    mono: f(&t.mono),
                    comp: t.comp,
                    coeff: t.coeff.clone(),
                })
                .collect(),
        )
    }

    pub fn render(&self, rank: usize, ring: &RingSpec) -> String {
        let parts: Vec<String> = self.coords(rank, ring).iter().map(|p| p.render(ring)).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// `M = F / (span of relation columns)`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub ring: Ring,
    pub free: FreeModule,
    pub relations: Vec<Vector>,
}

impl Presentation {
    /// Validate gradedness and build. In the multigraded regime every
    /// generator needs a fine degree and every entry must be a single term.
    pub fn new(ring: &Ring, free: FreeModule, relations: Vec<Vector>) -> Result<Presentation> {
        let order = ModuleOrder::top(ring);
        let relations: Vec<Vector> = relations.into_iter().map(|v| v.resort(&order)).collect();
        for (i, col) in relations.iter().enumerate() {
            if let Some(t) = col.terms.iter().find(|t| t.comp >= free.rank()) {
                return Err(Error::RankMismatch {
                    expected: free.rank(),
                    got: t.comp + 1,
                });
            }
            if !col.is_coarse_homogeneous(&free, ring) {
                return Err(Error::Ungraded(format!("column {} is not homogeneous", i + 1)));
            }
            if ring.regime == Regime::Multigraded {
                if !free.is_fine() {
                    return Err(Error::RegimeViolation(
                        "multigraded presentations need fine generator degrees".into(),
                    ));
                }
                if !col.is_fine_homogeneous(&free) {
                    return Err(Error::Ungraded(format!(
                        "column {} is not fine-multihomogeneous",
                        i + 1
                    )));
                }
            }
        }
        if ring.regime == Regime::Multigraded && !free.is_fine() {
            return Err(Error::RegimeViolation(
                "multigraded presentations need fine generator degrees".into(),
            ));
        }
        Ok(Presentation {
            ring: ring.clone(),
            free,
            relations,
        })
    }

    /// Free module of rank one generated in degree zero.
    pub fn ring_module(ring: &Ring) -> Presentation {
        Presentation::cyclic(ring, &[]).expect("ideal of monomials is graded")
    }

    /// `R / (generators)`; generators may be arbitrary polynomials in the
    /// general regime but must be terms in the multigraded one.
    pub fn quotient(ring: &Ring, gens: &[Polynomial]) -> Result<Presentation> {
        let free = FreeModule::new(vec![GenDegree::fine(MultiDegree::zero(ring.nvars()), ring)]);
        let order = ModuleOrder::top(ring);
        let cols = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| Vector::from_coords(&order, std::slice::from_ref(g)))
            .collect();
        Presentation::new(ring, free, cols)
    }

    /// `R / (monomials)`.
    pub fn cyclic(ring: &Ring, monos: &[Monomial]) -> Result<Presentation> {
        let gens: Vec<Polynomial> = monos
            .iter()
            .map(|m| Polynomial::monomial(ring, m.clone()))
            .collect();
        Presentation::quotient(ring, &gens)
    }

    pub fn rank(&self) -> usize {
        self.free.rank()
    }

    pub fn order(&self) -> ModuleOrder {
        ModuleOrder::top(&self.ring)
    }

    /// All entries are single terms and every generator has a fine degree
    /// making each column fine-homogeneous.
    pub fn is_fine(&self) -> bool {
        self.free.is_fine() && self.relations.iter().all(|c| c.is_fine_homogeneous(&self.free))
    }

    /// For a general-regime presentation whose columns are built from single
    /// terms, choose fine generator degrees refining the coarse ones so that
    /// every column becomes fine-homogeneous. Returns `None` if impossible.
    pub fn with_inferred_fine_degrees(&self) -> Option<Presentation> {
        if self.is_fine() {
            return Some(self.clone());
        }
        let n = self.ring.nvars();
        let m = self.ring.m();
        let r = self.rank();
        // column -> list of (generator, exponent); column degree D satisfies
        // D = deg(g) + exp for each entry
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); r];
        let mut entries: Vec<Vec<(usize, MultiDegree)>> = Vec::new();
        for (ci, col) in self.relations.iter().enumerate() {
            let mut per: Vec<(usize, MultiDegree)> = Vec::new();
            for t in &col.terms {
                if per.iter().any(|(g, _)| *g == t.comp) {
                    return None;
                }
                per.push((t.comp, t.mono.fine_degree()));
                adj[t.comp].push((ci, per.len() - 1));
            }
            entries.push(per);
        }
        let mut deg: Vec<Option<MultiDegree>> = vec![None; r];
        let mut col_deg: Vec<Option<MultiDegree>> = vec![None; self.relations.len()];
        for root in 0..r {
            if deg[root].is_some() {
                continue;
            }
            let mut d = MultiDegree::zero(n);
            if n > m {
                d.0[m] = self.free.degrees[root].coarse;
            } else if self.free.degrees[root].coarse != 0 {
                return None;
            }
            deg[root] = Some(d);
            let mut queue = VecDeque::from([root]);
            while let Some(g) = queue.pop_front() {
                let dg = deg[g].clone().unwrap();
                for &(ci, k) in &adj[g] {
                    let cd = dg.add(&entries[ci][k].1);
                    match &col_deg[ci] {
                        Some(existing) if *existing != cd => return None,
                        Some(_) => continue,
                        None => col_deg[ci] = Some(cd.clone()),
                    }
                    for (h, e) in &entries[ci] {
                        let dh = cd.sub(e);
                        match &deg[*h] {
                            Some(existing) if *existing != dh => return None,
                            Some(_) => {}
                            None => {
                                deg[*h] = Some(dh);
                                queue.push_back(*h);
                            }
                        }
                    }
                }
            }
        }
        let free = FreeModule::new(
            deg.into_iter()
                .map(|d| GenDegree::fine(d.unwrap(), &self.ring))
                .collect(),
        );
        let p = Presentation {
            ring: self.ring.clone(),
            free,
            relations: self.relations.clone(),
        };
        p.is_fine().then_some(p)
    }

    /// Shift every generator degree by `-a` (so the module becomes `M(a)`).
    pub fn twist(&self, a: &GenDegree) -> Presentation {
        let free = FreeModule::new(
            self.free
                .degrees
                .iter()
                .map(|d| GenDegree {
                    coarse: d.coarse - a.coarse,
                    fine: match (&d.fine, &a.fine) {
                        (Some(f), Some(g)) => Some(f.sub(g)),
                        _ => None,
                    },
                })
                .collect(),
        );
        Presentation {
            ring: self.ring.clone(),
            free,
            relations: self.relations.clone(),
        }
    }

    pub fn direct_sum(&self, other: &Presentation) -> Presentation {
        let r = self.rank();
        let mut degrees = self.free.degrees.clone();
        degrees.extend(other.free.degrees.iter().cloned());
        let mut relations = self.relations.clone();
        relations.extend(other.relations.iter().map(|v| Vector {
            terms: v
                .terms
                .iter()
                .map(|t| VTerm {
                    mono: t.mono.clone(),
                    comp: t.comp + r,
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }));
        Presentation {
            ring: self.ring.clone(),
            free: FreeModule::new(degrees),
            relations,
        }
    }

    /// `M / (gens) M`.
    pub fn mod_ideal(&self, gens: &[Polynomial]) -> Presentation {
        let order = self.order();
        let mut relations = self.relations.clone();
        for g in gens.iter().filter(|g| !g.is_zero()) {
            for comp in 0..self.rank() {
                relations.push(Vector::unit(&self.ring, comp).mul_poly(g, &order));
            }
        }
        Presentation {
            ring: self.ring.clone(),
            free: self.free.clone(),
            relations,
        }
    }

    /// Extend scalars to a larger ring via a monomial embedding.
    pub fn change_ring(
        &self,
        ring: &Ring,
        embed_mono: impl Fn(&Monomial) -> Monomial,
        embed_deg: impl Fn(&GenDegree) -> GenDegree,
    ) -> Presentation {
        let order = ModuleOrder::top(ring);
        Presentation {
            ring: ring.clone(),
            free: FreeModule::new(self.free.degrees.iter().map(&embed_deg).collect()),
            relations: self
                .relations
                .iter()
                .map(|v| v.map_monomials(&order, &embed_mono))
                .collect(),
        }
    }

    /// `M_0[x_1..x_t]` for a module over the base ring `k[y]`.
    pub fn polynomial_extension(&self, ring: &Ring) -> Presentation {
        let m = self.ring.m();
        assert_eq!(m, ring.m());
        let n = ring.nvars();
        let embed = |mono: &Monomial| {
            let mut e = mono.exps().to_vec();
            e.resize(n, 0);
            Monomial::from_exps(&e)
        };
        let embed_deg = |d: &GenDegree| {
            let f = d.fine.clone().map(|mut f| {
                f.0.resize(n, 0);
                f
            });
            GenDegree { coarse: 0, fine: f }
        };
        self.change_ring(ring, embed, embed_deg)
    }

    pub fn render(&self) -> String {
        let cols: Vec<String> = self
            .relations
            .iter()
            .map(|c| c.render(self.rank(), &self.ring))
            .collect();
        format!("coker {{ shifts: {:?}, columns: [{}] }}", self.free.shifts(), cols.join(", "))
    }
}

/// Convenience: the polynomial ring as a module over itself, graded in degree 0.
pub fn free_rank_one(ring: &Ring) -> FreeModule {
    FreeModule::new(vec![GenDegree::fine(MultiDegree::zero(ring.nvars()), ring)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    #[test]
    fn rejects_non_fine_entry() {
        let ring = RingSpec::standard(Field::Rationals, 1, 1).unwrap();
        let f = Polynomial::var(&ring, 0).add(&Polynomial::var(&ring, 1), &ring);
        let err = Presentation::quotient(&ring, &[f]).unwrap_err();
        assert!(matches!(err, Error::Ungraded(_)));
    }

    #[test]
    fn infers_fine_degrees() {
        let ring = RingSpec::standard(Field::Rationals, 0, 2).unwrap();
        let order = ModuleOrder::top(&ring);
        let free = FreeModule::new(vec![GenDegree::coarse(0), GenDegree::coarse(1)]);
        // column (x1^2, x2): deg(g0) + (2,0) = deg(g1) + (0,1)
        let col = Vector::from_terms(
            &order,
            vec![
                VTerm { mono: Monomial::from_exps(&[2, 0]), comp: 0, coeff: Field::Rationals.one() },
                VTerm { mono: Monomial::from_exps(&[0, 1]), comp: 1, coeff: Field::Rationals.one() },
            ],
        );
        let p = Presentation::new(&ring, free, vec![col]).unwrap();
        assert!(!p.is_fine());
        let q = p.with_inferred_fine_degrees().unwrap();
        assert!(q.is_fine());
        assert_eq!(q.free.degrees[1].coarse, 1);
    }
}
