//! Deterministic desk-scale instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::module::{FreeModule, GenDegree, ModuleOrder, Presentation, Vector};
use crate::monomial::{Monomial, MultiDegree};
use crate::poly::Polynomial;
use crate::ring::{Regime, Ring, RingSpec};
use crate::scalar::Field;

use super::simplicial::SimplicialComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// `R/I` over `k[x1,x2]` with homogeneous, possibly non-monomial `I`.
    GeneralCyclic,
    /// `M_0[x]` with `M_0 = k[y]/J`, `J` monomial.
    PolynomialModule,
    /// `M_0 = k[y]/J` with the `x` variables acting as zero.
    BaseModule,
    /// A presented module over `k[x1..x3]`, free when there are no relations.
    GeneralModule,
    /// Twisted sums of `R/J R` with `J` monomial in `k[y]`.
    BaseQuotientSum,
    /// A module presented by a matrix of terms.
    TermModule,
    /// `R` itself over a prime field.
    PrimeField,
}

const KINDS: [Kind; 7] = [
    Kind::GeneralCyclic,
    Kind::PolynomialModule,
    Kind::BaseModule,
    Kind::GeneralModule,
    Kind::BaseQuotientSum,
    Kind::TermModule,
    Kind::PrimeField,
];

#[derive(Clone, Debug)]
pub struct Instance {
    pub id: usize,
    pub kind: Kind,
    pub ring: Ring,
    pub module: Presentation,
    /// Generators of `a_0` as monomials of the full ring.
    pub a0: Vec<Monomial>,
    /// `M_0` when the module is `M_0[x]`.
    pub base: Option<Presentation>,
    /// `M_0` when the module is `M_0` with `x` acting as zero.
    pub x_zero: Option<Presentation>,
    /// The complex of `J` when `M_0 = k[y]/J` with `J` squarefree.
    pub complex: Option<SimplicialComplex>,
}

impl Instance {
    pub fn regime(&self) -> Regime {
        self.ring.regime
    }

    /// `a_0` as monomials of the base ring.
    pub fn a0_base(&self) -> Vec<Monomial> {
        let m = self.ring.m();
        self.a0
            .iter()
            .map(|g| Monomial::from_exps(&g.exps()[..m]))
            .collect()
    }

    pub fn base_ring(&self) -> Ring {
        self.ring.base_only()
    }

    pub fn describe(&self) -> String {
        let r = &self.ring;
        let vars: Vec<&str> = (0..r.nvars()).map(|j| r.var_name(j)).collect();
        let a0: Vec<String> = self.a0.iter().map(|g| r.render_monomial(g)).collect();
        format!(
            "#{} {:?} over {}[{}]: M = {}, a0 = ({})",
            self.id,
            self.kind,
            r.field,
            vars.join(","),
            self.module.render(),
            a0.join(", ")
        )
    }

    /// Statement ids this instance can exercise.
    pub fn statements(&self) -> Vec<&'static str> {
        let fine = self.module.is_fine() || self.module.with_inferred_fine_degrees().is_some();
        let mut out = vec!["Prop2.3", "Def2.10"];
        if self.x_zero.is_some() {
            out.push("Ex2.1");
        }
        if self.base.is_some() {
            out.extend(["Thm2.5", "Cor2.6", "Cor2.8", "Cor2.9"]);
        }
        if fine {
            out.extend(["Prop2.11", "Cor2.12i"]);
        }
        out.extend(["Cor2.12ii", "Thm2.13"]);
        if self.ring.m() == 0 {
            out.push("RegRes");
        }
        if matches!(self.ring.field, Field::Prime(_)) && self.base.is_some() {
            out.push("Cor3.5i");
        }
        if self.regime() == Regime::Multigraded {
            out.push("AstarEq");
        }
        super::checks::STATEMENTS
            .iter()
            .copied()
            .filter(|s| out.contains(s))
            .collect()
    }
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> u64 {
    rng.gen_range(1u64..(1 << n))
}

fn mask_monomial(nvars: usize, mask: u64, exp: u32) -> Monomial {
    let e: Vec<u32> = (0..nvars).map(|j| if mask >> j & 1 == 1 { exp } else { 0 }).collect();
    Monomial::from_exps(&e)
}

/// Up to `max` squarefree monomials on the first `m` of `nvars` variables.
fn squarefree_ideal(rng: &mut ChaCha8Rng, m: usize, nvars: usize, min: usize, max: usize) -> Vec<Monomial> {
    let count = rng.gen_range(min..=max);
    let mut masks: Vec<u64> = (0..count).map(|_| random_subset(rng, m)).collect();
    masks.sort_unstable();
    masks.dedup();
    masks.into_iter().map(|s| mask_monomial(nvars, s, 1)).collect()
}

/// A monomial ideal of `k[y]`, sometimes with squares.
fn base_monomial_ideal(rng: &mut ChaCha8Rng, m: usize, nvars: usize) -> Vec<Monomial> {
    let count = rng.gen_range(0..=2);
    let mut out: Vec<Monomial> = Vec::new();
    for _ in 0..count {
        let mut e = vec![0u32; nvars];
        let s = random_subset(rng, m);
        for (j, x) in e.iter_mut().enumerate().take(m) {
            if s >> j & 1 == 1 {
                *x = rng.gen_range(1..=2);
            }
        }
        let mono = Monomial::from_exps(&e);
        if !out.contains(&mono) {
            out.push(mono);
        }
    }
    out
}

fn scalar(rng: &mut ChaCha8Rng, field: Field) -> crate::scalar::Scalar {
    let choices = [-2i64, -1, 1, 2, 3];
    loop {
        let c = field.from_i64(*choices.choose(rng).unwrap());
        if !c.is_zero() {
            return c;
        }
    }
}

fn random_homogeneous(rng: &mut ChaCha8Rng, ring: &Ring, degree: i64, max_terms: usize) -> Polynomial {
    let monos = crate::groebner::monomials_of_degree(ring.nvars(), degree);
    if monos.is_empty() {
        return Polynomial::zero();
    }
    let k = rng.gen_range(1..=max_terms);
    let terms = (0..k)
        .map(|_| (monos.choose(rng).unwrap().clone(), scalar(rng, ring.field)))
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn monos_ideal(ring: &Ring, gens: &[Monomial]) -> Vec<Polynomial> {
    gens.iter().map(|g| Polynomial::monomial(ring, g.clone())).collect()
}

fn general_cyclic(rng: &mut ChaCha8Rng) -> Result<(Ring, Presentation)> {
    let ring = RingSpec::standard(Field::Rationals, 0, 2)?;
    let count = rng.gen_range(1..=3);
    let mut gens = Vec::new();
    for _ in 0..count {
        let d = rng.gen_range(1..=3);
        let f = random_homogeneous(rng, &ring, d, 2);
        if !f.is_zero() {
            gens.push(f);
        }
    }
    let p = Presentation::quotient(&ring, &gens)?;
    Ok((ring, p))
}

fn general_module(rng: &mut ChaCha8Rng) -> Result<(Ring, Presentation)> {
    let ring = RingSpec::standard(Field::Rationals, 0, 3)?;
    let rank = rng.gen_range(1..=3);
    let shifts: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=1)).collect();
    let free = FreeModule::new(shifts.iter().map(|&d| GenDegree::coarse(d)).collect());
    let order = ModuleOrder::top(&ring);
    let ncols = if rng.gen_bool(0.5) { 0 } else { rng.gen_range(1..=3) };
    let mut cols = Vec::new();
    for _ in 0..ncols {
        let top = shifts.iter().copied().max().unwrap();
        let d = top + rng.gen_range(1..=2);
        let coords: Vec<Polynomial> = shifts
            .iter()
            .map(|&s| {
                if rng.gen_bool(0.6) {
                    random_homogeneous(rng, &ring, d - s, 2)
                } else {
                    Polynomial::zero()
                }
            })
            .collect();
        let v = Vector::from_coords(&order, &coords);
        if !v.is_zero() {
            cols.push(v);
        }
    }
    Ok((ring.clone(), Presentation::new(&ring, free, cols)?))
}

fn term_module(rng: &mut ChaCha8Rng, ring: &Ring) -> Result<Presentation> {
    let n = ring.nvars();
    let rank = rng.gen_range(1..=2);
    let degs: Vec<Vec<i64>> = (0..rank)
        .map(|_| (0..n).map(|_| rng.gen_range(0..=1)).collect())
        .collect();
    let free = FreeModule::new(degs.iter().map(|d| GenDegree::fine(MultiDegree(d.clone()), ring)).collect());
    let order = ModuleOrder::top(ring);
    let mut cols = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let base = degs.choose(rng).unwrap().clone();
        let top: Vec<i64> = base.iter().map(|&b| b + rng.gen_range(0..=1)).collect();
        let mut coords = vec![Polynomial::zero(); rank];
        for (g, d) in degs.iter().enumerate() {
            if d.iter().zip(&top).all(|(a, b)| a <= b) && rng.gen_bool(0.7) {
                let e: Vec<u32> = d.iter().zip(&top).map(|(a, b)| (b - a) as u32).collect();
                coords[g] = Polynomial::term(Monomial::from_exps(&e), scalar(rng, ring.field));
            }
        }
        let v = Vector::from_coords(&order, &coords);
        if !v.is_zero() {
            cols.push(v);
        }
    }
    Presentation::new(ring, free, cols)
}

fn instance(rng: &mut ChaCha8Rng, id: usize, kind: Kind) -> Result<Instance> {
    let empty = |ring: &Ring, module: Presentation| Instance {
        id,
        kind,
        ring: ring.clone(),
        module,
        a0: Vec::new(),
        base: None,
        x_zero: None,
        complex: None,
    };
    match kind {
        Kind::GeneralCyclic => {
            let (ring, p) = general_cyclic(rng)?;
            Ok(empty(&ring, p))
        }
        Kind::GeneralModule => {
            let (ring, p) = general_module(rng)?;
            Ok(empty(&ring, p))
        }
        Kind::PolynomialModule | Kind::BaseModule | Kind::BaseQuotientSum | Kind::TermModule | Kind::PrimeField => {
            let field = if kind == Kind::PrimeField {
                Field::prime(*[2u64, 3].choose(rng).unwrap())?
            } else {
                Field::Rationals
            };
            let m = match kind {
                Kind::TermModule | Kind::BaseQuotientSum => rng.gen_range(1..=2),
                _ => rng.gen_range(1..=3),
            };
            let t = match kind {
                Kind::PrimeField => 1,
                _ => rng.gen_range(1..=2),
            };
            let ring = RingSpec::standard(field, m, t)?;
            let base = ring.base_only();
            let n = ring.nvars();
            let empty_a0 = match kind {
                Kind::BaseQuotientSum => true,
                Kind::PrimeField => rng.gen_bool(0.35),
                Kind::PolynomialModule => rng.gen_bool(0.25),
                _ => false,
            };
            let a0 = if empty_a0 {
                Vec::new()
            } else {
                squarefree_ideal(rng, m, n, 1, 3)
            };
            let mut inst = empty(&ring, Presentation::ring_module(&ring));
            inst.a0 = a0;
            match kind {
                Kind::PrimeField => {
                    inst.base = Some(Presentation::ring_module(&base));
                    inst.complex = Some(SimplicialComplex::from_squarefree_ideal(m, &[]));
                }
                Kind::PolynomialModule | Kind::BaseModule => {
                    let j = if rng.gen_bool(0.5) {
                        squarefree_ideal(rng, m, m, 0, 2)
                    } else {
                        base_monomial_ideal(rng, m, m)
                    };
                    let m0 = Presentation::quotient(&base, &monos_ideal(&base, &j))?;
                    if j.iter().all(Monomial::is_squarefree) {
                        let sup: Vec<u64> = j.iter().map(Monomial::support).collect();
                        inst.complex = Some(SimplicialComplex::from_squarefree_ideal(m, &sup));
                    }
                    let jx: Vec<Monomial> = j
                        .iter()
                        .map(|g| crate::cech::polymod::extend_monomial(g, n))
                        .collect();
                    if kind == Kind::PolynomialModule {
                        inst.module = Presentation::quotient(&ring, &monos_ideal(&ring, &jx))?;
                        inst.base = Some(m0);
                    } else {
                        let mut all = monos_ideal(&ring, &jx);
                        all.extend((m..n).map(|i| Polynomial::var(&ring, i)));
                        inst.module = Presentation::quotient(&ring, &all)?;
                        inst.x_zero = Some(m0);
                    }
                }
                Kind::BaseQuotientSum => {
                    let summands = rng.gen_range(1..=2);
                    let mut acc: Option<Presentation> = None;
                    for _ in 0..summands {
                        let j = base_monomial_ideal(rng, m, n);
                        let q = Presentation::quotient(&ring, &monos_ideal(&ring, &j))?;
                        let shift = rng.gen_range(0..=2);
                        let mut d = vec![0; n];
                        d[m] = shift;
                        let q = q.twist(&GenDegree::fine(MultiDegree(d), &ring));
                        acc = Some(match acc {
                            None => q,
                            Some(a) => a.direct_sum(&q),
                        });
                    }
                    inst.module = acc.unwrap();
                }
                Kind::TermModule => {
                    inst.module = term_module(rng, &ring)?;
                }
                _ => unreachable!(),
            }
            Ok(inst)
        }
    }
}

impl Instance {
    fn bare(id: usize, kind: Kind, module: Presentation) -> Instance {
        Instance {
            id,
            kind,
            ring: module.ring.clone(),
            module,
            a0: Vec::new(),
            base: None,
            x_zero: None,
            complex: None,
        }
    }

    /// `M_0[x_1..x_t]` for a module `M_0` over `k[y]`, with `a_0` given by
    /// base monomials.
    pub fn polynomial(id: usize, m0: &Presentation, a0: &[Monomial], t: usize) -> Result<Instance> {
        let ring = crate::cech::polymod::polynomial_ring_over(&m0.ring, t)?;
        let n = ring.nvars();
        let module = m0.polynomial_extension(&ring);
        let mut inst = Instance::bare(id, Kind::PolynomialModule, module);
        inst.a0 = a0.iter().map(|g| crate::cech::polymod::extend_monomial(g, n)).collect();
        inst.base = Some(m0.clone());
        Ok(inst)
    }

    /// `k[y_1..y_m]` with `x_1..x_t` acting as zero.
    pub fn base_module(id: usize, field: Field, m: usize, t: usize) -> Result<Instance> {
        let ring = RingSpec::standard(field, m, t)?;
        let xs: Vec<Polynomial> = (m..m + t).map(|i| Polynomial::var(&ring, i)).collect();
        let mut inst = Instance::bare(id, Kind::BaseModule, Presentation::quotient(&ring, &xs)?);
        inst.x_zero = Some(Presentation::ring_module(&ring.base_only()));
        Ok(inst)
    }

    /// Any presented module, with `a_0` given by monomials of its ring.
    pub fn general(id: usize, module: Presentation, a0: &[Monomial]) -> Instance {
        let kind = if module.ring.m() == 0 { Kind::GeneralModule } else { Kind::TermModule };
        let mut inst = Instance::bare(id, kind, module);
        inst.a0 = a0.to_vec();
        inst
    }
}

/// `size` instances from `seed`; instance `i` has kind `i mod 7`.
pub fn corpus(seed: u64, size: usize) -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..size).map(|i| instance(&mut rng, i, KINDS[i % KINDS.len()])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_instance_is_general_cyclic() {
        let c = corpus(0, 1).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].kind, Kind::GeneralCyclic);
        assert_eq!(c[0].regime(), Regime::General);
        assert_eq!(c[0].module.rank(), 1);
        assert_eq!(c[0].ring.nvars(), 2);
    }

    #[test]
    fn reproducible() {
        let a: Vec<String> = corpus(0, 14).unwrap().iter().map(Instance::describe).collect();
        let b: Vec<String> = corpus(0, 14).unwrap().iter().map(Instance::describe).collect();
        assert_eq!(a, b);
    }
}
