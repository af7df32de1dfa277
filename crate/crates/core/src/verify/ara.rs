//! Certified bounds on the arithmetic rank of a monomial ideal of `k[y]`.

use serde::Serialize;

use crate::error::Result;
use crate::ideal::{dimension_from_leading, radical_membership};
use crate::module::Presentation;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::resolution::ResolutionChain;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AraBound {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    /// The grouping behind the upper bound: sums of the squarefree radical
    /// generators in each group generate the ideal up to radical.
    pub groups: Vec<Vec<String>>,
}

fn squarefree(nvars: usize, mask: u64) -> Monomial {
    let e: Vec<u32> = (0..nvars).map(|j| (mask >> j & 1) as u32).collect();
    Monomial::from_exps(&e)
}

/// Minimal squarefree generators of `rad(a)`.
pub fn radical_supports(gens: &[Monomial]) -> Vec<u64> {
    let all: Vec<u64> = gens.iter().map(Monomial::support).collect();
    let mut out: Vec<u64> = all
        .iter()
        .copied()
        .filter(|&a| !all.iter().any(|&b| b & a == b && b != a))
        .collect();
    out.sort_by_key(|&s| (s.count_ones(), s));
    out.dedup();
    out
}

/// `cd_a(k[y]) = pd(k[y] / rad a)` for monomial `a`.
pub fn monomial_cd(base: &Ring, gens: &[Monomial]) -> Result<usize> {
    let sup = radical_supports(gens);
    if sup.is_empty() {
        return Ok(0);
    }
    let polys: Vec<Polynomial> = sup
        .iter()
        .map(|&s| Polynomial::monomial(base, squarefree(base.nvars(), s)))
        .collect();
    let q = Presentation::quotient(base, &polys)?;
    let res = ResolutionChain::compute(&q, base.nvars() + 1)?;
    Ok(res.length().unwrap_or(0))
}

/// Lower bound `max(cd, height, 1)`, upper bound from a greedy grouping of
/// the radical generators whose sums are checked to have the same radical.
pub fn ara_bound(base: &Ring, gens: &[Monomial]) -> Result<AraBound> {
    let n = base.nvars();
    let sup = radical_supports(gens);
    if sup.is_empty() {
        return Ok(AraBound {
            lower: 0,
            upper: 0,
            exact: true,
            groups: Vec::new(),
        });
    }
    let monos: Vec<Monomial> = sup.iter().map(|&s| squarefree(n, s)).collect();
    let polys: Vec<Polynomial> = monos.iter().map(|m| Polynomial::monomial(base, m.clone())).collect();
    if sup.contains(&0) {
        return Ok(AraBound {
            lower: 1,
            upper: 1,
            exact: true,
            groups: vec![vec!["1".into()]],
        });
    }
    let height = n - dimension_from_leading(n, &monos).unwrap_or(0);
    let lower = monomial_cd(base, gens)?.max(height).max(1);
    let sum_of = |g: &[usize]| {
        g.iter()
            .fold(Polynomial::zero(), |acc, &k| acc.add(&polys[k], base))
    };
    let certify = |groups: &[Vec<usize>]| {
        let sums: Vec<Polynomial> = groups.iter().map(|g| sum_of(g)).collect();
        polys.iter().all(|f| radical_membership(base, f, &sums))
    };
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for k in 0..polys.len() {
        let mut placed = false;
        for g in 0..groups.len() {
            let mut trial = groups.clone();
            trial[g].push(k);
            let rest_done: Vec<Vec<usize>> = trial
                .iter()
                .cloned()
                .chain((k + 1..polys.len()).map(|r| vec![r]))
                .collect();
            if certify(&rest_done) {
                groups = trial;
                placed = true;
                break;
            }
        }
        if !placed {
            groups.push(vec![k]);
        }
    }
    let upper = groups.len().min(sup.len());
    Ok(AraBound {
        lower,
        upper,
        exact: lower == upper,
        groups: groups
            .iter()
            .map(|g| g.iter().map(|&k| base.render_monomial(&monos[k])).collect())
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;
    use crate::scalar::Field;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn regular_sequences_are_exact() {
        let b = RingSpec::base_ring(Field::Rationals, 3);
        let a = ara_bound(&b, &[m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])]).unwrap();
        assert_eq!((a.lower, a.upper, a.exact), (3, 3, true));
        let a = ara_bound(&b, &[m(&[2, 0, 0])]).unwrap();
        assert_eq!((a.lower, a.upper), (1, 1));
        assert_eq!(ara_bound(&b, &[]).unwrap().upper, 0);
    }

    #[test]
    fn two_generated_up_to_radical() {
        let b = RingSpec::base_ring(Field::Rationals, 3);
        let a = ara_bound(&b, &[m(&[1, 1, 0]), m(&[0, 1, 1])]).unwrap();
        assert_eq!((a.lower, a.upper), (2, 2));
        let tri = ara_bound(&b, &[m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[1, 0, 1])]).unwrap();
        assert_eq!((tri.lower, tri.upper, tri.exact), (2, 2, true));
    }
}
