//! Minimal graded free resolutions and Betti tables.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::syzygies_of;
use crate::module::{FreeModule, ModuleOrder, Presentation, Vector};
use crate::monomial::MultiDegree;
use crate::ring::{MonomialOrder, Ring};

/// `0 -> F_p -> .. -> F_1 -> F_0 -> M -> 0`.
#[derive(Clone, Debug)]
pub struct ResolutionChain {
    pub ring: Ring,
    pub modules: Vec<FreeModule>,
    /// `maps[i]` holds the columns of `d_{i+1} : F_{i+1} -> F_i`.
    pub maps: Vec<Vec<Vector>>,
    /// Set when the computation stopped at `max_length` with a nonzero kernel left.
    pub truncated: bool,
}

/// Remove scalar entries by exact elimination. A unit `u` at row `r` of
/// column `c` makes row generator `r` redundant: clear row `r` from the other
/// columns, drop column `c`, drop generator `r` and (if given) the column `r`
/// of the previous map, whose element is thereby expressed by the others.
fn prune_units(ring: &Ring, rows: &mut FreeModule, cols: &mut Vec<Vector>, mut prev: Option<&mut Vec<Vector>>) {
    let order = ModuleOrder::top(ring);
    loop {
        cols.retain(|v| !v.is_zero());
        let found = cols.iter().enumerate().find_map(|(c, v)| {
            v.terms
                .iter()
                .filter(|t| t.mono.is_one())
                .map(|t| t.comp)
                .min()
                .map(|r| (c, r))
        });
        let Some((c, r)) = found else { break };
        let vc = cols.remove(c);
        let u = vc.coord(r, ring);
        let uinv = u.as_unit().expect("homogeneous constant entry is a scalar").inv();
        for col in cols.iter_mut() {
            let a = col.coord(r, ring);
            if a.is_zero() {
                continue;
            }
            let f = a.scalar_mul(&-&uinv);
            *col = col.add(&vc.mul_poly(&f, &order), &order);
        }
        for col in cols.iter_mut() {
            debug_assert!(col.terms.iter().all(|t| t.comp != r));
            for t in col.terms.iter_mut() {
                if t.comp > r {
                    t.comp -= 1;
                }
            }
        }
        rows.degrees.remove(r);
        if let Some(p) = prev.as_deref_mut() {
            p.remove(r);
        }
    }
}

impl ResolutionChain {
    pub fn compute(p: &Presentation, max_length: usize) -> Result<ResolutionChain> {
        let ring = p.ring.clone();
        let mut f0 = p.free.clone();
        let mut cols: Vec<Vector> = p.relations.iter().filter(|v| !v.is_zero()).cloned().collect();
        prune_units(&ring, &mut f0, &mut cols, None);
        let mut modules = vec![f0];
        let mut maps: Vec<Vec<Vector>> = Vec::new();
        if modules[0].rank() == 0 {
            return Ok(ResolutionChain {
                ring,
                modules: Vec::new(),
                maps,
                truncated: false,
            });
        }
        let mut truncated = false;
        let hard_cap = ring.nvars() + 2;
        while !cols.is_empty() {
            if maps.len() >= max_length {
                truncated = true;
                break;
            }
            if maps.len() > hard_cap {
                return Err(Error::ResolutionTooLong(maps.len()));
            }
            let src = modules.last().unwrap();
            let (mut next_free, mut syz) = syzygies_of(&ring, src, &cols);
            prune_units(&ring, &mut next_free, &mut syz, Some(&mut cols));
            // after pruning the columns of cols are a minimal generating set
            let deg_free = FreeModule::new(next_free.degrees.clone());
            maps.push(cols);
            modules.push(deg_free);
            cols = syz;
        }
        Ok(ResolutionChain {
            ring,
            modules,
            maps,
            truncated,
        })
    }

    /// Length `p`; `None` for the zero module.
    pub fn length(&self) -> Option<usize> {
        if self.modules.is_empty() {
            None
        } else {
            Some(self.modules.len() - 1)
        }
    }

    /// `a_i^j` with `F_i = sum_j R(a_i^j)`.
    pub fn shifts(&self) -> Vec<Vec<i64>> {
        self.modules.iter().map(FreeModule::shifts).collect()
    }

    pub fn fine_degrees(&self) -> Vec<Vec<Option<MultiDegree>>> {
        self.modules
            .iter()
            .map(|f| f.degrees.iter().map(|d| d.fine.clone()).collect())
            .collect()
    }

    /// `d_i o d_{i+1} = 0` for every `i`.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| {
            w[1].iter().all(|col| {
                let mut acc = Vector::zero();
                let order = ModuleOrder::top(&self.ring);
                for t in &col.terms {
                    acc = acc.add(&w[0][t.comp].mul_term(&t.mono, &t.coeff), &order);
                }
                acc.is_zero()
            })
        })
    }

    /// No differential has a nonzero scalar entry.
    pub fn is_minimal(&self) -> bool {
        self.maps
            .iter()
            .all(|m| m.iter().all(|v| v.terms.iter().all(|t| !t.mono.is_one())))
    }

    /// Every column of every differential is homogeneous of degree zero.
    pub fn is_graded(&self) -> bool {
        self.maps.iter().enumerate().all(|(i, m)| {
            m.iter().enumerate().all(|(j, col)| {
                let target = &self.modules[i];
                let deg = &self.modules[i + 1].degrees[j];
                col.is_coarse_homogeneous(target, &self.ring)
                    && col
                        .degree(target, &self.ring)
                        .is_none_or(|d| d.coarse == deg.coarse)
            })
        })
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable::from_shifts(&self.shifts())
    }

    /// `max_i (-min_j a_i^j - i)` on the coarse shifts.
    pub fn reg_thm213(&self) -> Result<i64> {
        reg_from_shifts(&self.shifts())
    }
}

pub fn reg_from_shifts(shifts: &[Vec<i64>]) -> Result<i64> {
    shifts
        .iter()
        .enumerate()
        .filter(|(_, row)| !row.is_empty())
        .map(|(i, row)| -row.iter().min().unwrap() - i as i64)
        .max()
        .ok_or(Error::EmptyChain)
}

/// Resolve after switching the ring to another monomial order.
pub fn resolve_with_order(p: &Presentation, order: MonomialOrder, max_length: usize) -> Result<ResolutionChain> {
    let ring = p.ring.with_order(order);
    let mo = ModuleOrder::top(&ring);
    let q = Presentation {
        ring: ring.clone(),
        free: p.free.clone(),
        relations: p.relations.iter().map(|v| v.resort(&mo)).collect(),
    };
    ResolutionChain::compute(&q, max_length)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    /// `(i, degree) -> multiplicity`, with degree `= -a`.
    pub entries: BTreeMap<(usize, i64), usize>,
    pub pd: Option<usize>,
}

impl BettiTable {
    pub fn from_shifts(shifts: &[Vec<i64>]) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, row) in shifts.iter().enumerate() {
            for a in row {
                *entries.entry((i, -a)).or_insert(0) += 1;
            }
        }
        let pd = shifts.iter().rposition(|r| !r.is_empty());
        BettiTable { entries, pd }
    }

    pub fn totals(&self) -> Vec<usize> {
        let n = self.pd.map_or(0, |p| p + 1);
        let mut out = vec![0; n];
        for (&(i, _), &v) in &self.entries {
            out[i] += v;
        }
        out
    }

    fn rows(&self) -> BTreeMap<i64, Vec<usize>> {
        let n = self.pd.map_or(0, |p| p + 1);
        let mut rows: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (&(i, d), &v) in &self.entries {
            rows.entry(d - i as i64).or_insert_with(|| vec![0; n])[i] += v;
        }
        rows
    }

    /// Macaulay2 layout: column `i`, row `degree - i`.
    pub fn render(&self) -> String {
        let totals = self.totals();
        let rows = self.rows();
        let labels: Vec<String> = rows.keys().map(|r| format!("{r}:")).collect();
        let lw = labels
            .iter()
            .map(String::len)
            .chain(std::iter::once("total:".len()))
            .max()
            .unwrap();
        let cw = self
            .entries
            .values()
            .chain(totals.iter())
            .map(|v| v.to_string().len())
            .chain((0..totals.len()).map(|i| i.to_string().len()))
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        let line = |label: &str, cells: Vec<String>| {
            let mut s = format!("{label:>lw$}");
            for c in cells {
                s.push_str(&format!(" {c:>cw$}"));
            }
            s.trim_end().to_string()
        };
        out.push_str(&line("", (0..totals.len()).map(|i| i.to_string()).collect()));
        out.push('\n');
        out.push_str(&line("total:", totals.iter().map(|v| v.to_string()).collect()));
        out.push('\n');
        for ((r, vals), label) in rows.iter().zip(&labels) {
            let _ = r;
            out.push_str(&line(
                label,
                vals.iter()
                    .map(|&v| if v == 0 { ".".to_string() } else { v.to_string() })
                    .collect(),
            ));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows()
            .into_iter()
            .map(|(r, vals)| serde_json::json!({ "row": r, "values": vals }))
            .collect();
        serde_json::json!({
            "pd": self.pd,
            "totals": self.totals(),
            "rows": rows,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::poly::Polynomial;
    use crate::ring::RingSpec;
    use crate::scalar::Field;

    fn cyclic(m: usize, t: usize, gens: &[&[u32]]) -> Presentation {
        let r = if t == 0 {
            RingSpec::base_ring(Field::Rationals, m)
        } else {
            RingSpec::standard(Field::Rationals, m, t).unwrap()
        };
        let monos: Vec<Monomial> = gens.iter().map(|e| Monomial::from_exps(e)).collect();
        Presentation::cyclic(&r, &monos).unwrap()
    }

    #[test]
    fn koszul_on_two_variables() {
        let p = cyclic(0, 2, &[&[1, 0], &[0, 1]]);
        let res = ResolutionChain::compute(&p, 10).unwrap();
        assert_eq!(res.shifts(), vec![vec![0], vec![-1, -1], vec![-2]]);
        assert_eq!(res.betti().totals(), vec![1, 2, 1]);
        assert!(res.is_complex() && res.is_minimal() && res.is_graded());
        assert_eq!(res.reg_thm213().unwrap(), 0);
    }

    #[test]
    fn free_module_has_length_zero() {
        let p = cyclic(0, 2, &[]);
        let res = ResolutionChain::compute(&p, 10).unwrap();
        assert_eq!(res.length(), Some(0));
        assert_eq!(res.shifts(), vec![vec![0]]);
    }

    #[test]
    fn square_of_maximal_ideal() {
        let p = cyclic(0, 2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let res = ResolutionChain::compute(&p, 10).unwrap();
        assert_eq!(res.shifts(), vec![vec![0], vec![-2, -2, -2], vec![-3, -3]]);
        assert_eq!(res.reg_thm213().unwrap(), 1);
        let t = res.betti().render();
        assert_eq!(t, "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n");
    }

    #[test]
    fn base_case_formula() {
        assert_eq!(reg_from_shifts(&[vec![-1, -3]]).unwrap(), 3);
        assert!(matches!(reg_from_shifts(&[]), Err(Error::EmptyChain)));
    }

    #[test]
    fn redundant_generators_are_pruned() {
        // R/(x1) presented as coker [x1, 2*x1, 1 on a second generator]
        let r = RingSpec::standard(Field::Rationals, 0, 1).unwrap();
        let x1 = Polynomial::var(&r, 0);
        let two = x1.scalar_mul(&Field::Rationals.from_i64(2));
        let p = Presentation::quotient(&r, &[x1, two]).unwrap();
        let res = ResolutionChain::compute(&p, 10).unwrap();
        assert_eq!(res.shifts(), vec![vec![0], vec![-1]]);
    }

    #[test]
    fn unit_ideal_gives_zero_module() {
        let r = RingSpec::standard(Field::Rationals, 0, 1).unwrap();
        let p = Presentation::quotient(&r, &[Polynomial::constant(&r, Field::Rationals.one())]).unwrap();
        let res = ResolutionChain::compute(&p, 10).unwrap();
        assert_eq!(res.length(), None);
    }
}
