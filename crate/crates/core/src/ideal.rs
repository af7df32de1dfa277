//! Ideal quotients, intersections, annihilators, Krull dimension and radical
//! membership, all reduced to syzygy and Gröbner computations.

use crate::groebner::{syzygies_of, GroebnerBasis};
use crate::module::{free_rank_one, FreeModule, ModuleOrder, Presentation, Vector};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

pub fn as_vectors(ring: &Ring, gens: &[Polynomial]) -> Vec<Vector> {
    let order = ModuleOrder::top(ring);
    gens.iter()
        .filter(|g| !g.is_zero())
        .map(|g| Vector::from_coords(&order, std::slice::from_ref(g)))
        .collect()
}

pub fn ideal_gb(ring: &Ring, gens: &[Polynomial]) -> GroebnerBasis {
    GroebnerBasis::compute_unchecked(
        ring,
        &free_rank_one(ring),
        ModuleOrder::top(ring),
        &as_vectors(ring, gens),
        false,
    )
}

fn gb_polys(gb: &GroebnerBasis) -> Vec<Polynomial> {
    gb.elements.iter().map(|v| v.coord(0, &gb.ring)).collect()
}

/// Reduced Gröbner basis of the ideal, as polynomials.
pub fn reduced_ideal(ring: &Ring, gens: &[Polynomial]) -> Vec<Polynomial> {
    gb_polys(&ideal_gb(ring, gens))
}

/// `(N : v) = { r : r v in N }` for a submodule `N` of `free` given by
/// generators.
pub fn submodule_quotient(ring: &Ring, free: &FreeModule, gens: &[Vector], v: &Vector) -> Vec<Polynomial> {
    let mut all: Vec<Vector> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let last = all.len();
    all.push(v.clone());
    let (_, syz) = syzygies_of(ring, free, &all);
    let coeffs: Vec<Polynomial> = syz.iter().map(|s| s.coord(last, ring)).collect();
    reduced_ideal(ring, &coeffs)
}

/// `(I : J)`.
pub fn quotient(ring: &Ring, i: &[Polynomial], j: &[Polynomial]) -> Vec<Polynomial> {
    let free = free_rank_one(ring);
    let gens = as_vectors(ring, i);
    let mut acc: Option<Vec<Polynomial>> = None;
    for g in as_vectors(ring, j) {
        let q = submodule_quotient(ring, &free, &gens, &g);
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(ring, &a, &q),
        });
    }
    acc.unwrap_or_else(|| vec![Polynomial::constant(ring, ring.field.one())])
}

pub fn intersect(ring: &Ring, a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let va = as_vectors(ring, a);
    let vb = as_vectors(ring, b);
    if va.is_empty() || vb.is_empty() {
        return Vec::new();
    }
    let n = va.len();
    let mut all = va.clone();
    all.extend(vb);
    let (_, syz) = syzygies_of(ring, &free_rank_one(ring), &all);
    let mut out = Vec::new();
    for s in &syz {
        let mut acc = Polynomial::zero();
        for t in s.terms.iter().filter(|t| t.comp < n) {
            let g = a.iter().filter(|g| !g.is_zero()).nth(t.comp).unwrap();
            acc = acc.add(&g.mul_term(&t.mono, &t.coeff), ring);
        }
        out.push(acc);
    }
    reduced_ideal(ring, &out)
}

/// `ann(M)` as the intersection over generators `g` of `(N : e_g)`.
pub fn annihilator(p: &Presentation) -> Vec<Polynomial> {
    let ring = &p.ring;
    let mut acc: Option<Vec<Polynomial>> = None;
    for c in 0..p.rank() {
        let q = submodule_quotient(ring, &p.free, &p.relations, &Vector::unit(ring, c));
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(ring, &a, &q),
        });
    }
    acc.unwrap_or_else(|| vec![Polynomial::constant(ring, ring.field.one())])
}

/// Largest set of variables containing the support of no leading monomial;
/// `None` when the ideal is the unit ideal.
pub fn dimension_from_leading(nvars: usize, leads: &[Monomial]) -> Option<usize> {
    if leads.iter().any(Monomial::is_one) {
        return None;
    }
    let supports: Vec<u64> = leads.iter().map(Monomial::support).collect();
    let mut best = 0;
    for s in 0u64..(1u64 << nvars) {
        let size = s.count_ones() as usize;
        if size > best && supports.iter().all(|&l| l & !s != 0) {
            best = size;
        }
    }
    Some(best)
}

/// `dim R/I`, `None` for the unit ideal.
pub fn ideal_dimension(ring: &Ring, gens: &[Polynomial]) -> Option<usize> {
    let gb = ideal_gb(ring, gens);
    let leads: Vec<Monomial> = gb.elements.iter().map(|v| v.leading().unwrap().mono.clone()).collect();
    dimension_from_leading(ring.nvars(), &leads)
}

/// Krull dimension of a presented module; `None` for the zero module.
pub fn krull_dimension(p: &Presentation) -> Option<usize> {
    ideal_dimension(&p.ring, &annihilator(p))
}

/// `f in rad(I)` via `1 in I + (1 - z f)` over one extra variable.
pub fn radical_membership(ring: &Ring, f: &Polynomial, gens: &[Polynomial]) -> bool {
    if f.is_zero() {
        return true;
    }
    let mut name = "z".to_string();
    while ring.var_index(&name).is_some() {
        name.push('_');
    }
    let big = ring.with_extra_base_var(&name);
    let embed = |p: &Polynomial| p.map_monomials(&big, |m| ring.embed_extra_base(m));
    let z = big.var(ring.m());
    let mut all: Vec<Polynomial> = gens.iter().map(embed).collect();
    let one = Polynomial::constant(&big, big.field.one());
    all.push(one.sub(&embed(f).mul_term(&z, &big.field.one()), &big));
    ideal_gb(&big, &all).is_whole()
}

/// `rad(I) = rad(J)`.
pub fn same_radical(ring: &Ring, i: &[Polynomial], j: &[Polynomial]) -> bool {
    i.iter().all(|f| radical_membership(ring, f, j)) && j.iter().all(|f| radical_membership(ring, f, i))
}
