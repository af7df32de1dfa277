//! End, a*, reg^k and cd from the exact type decomposition (fine modules)
//! or from graded local duality (coarse modules over `k[x]`).

use rayon::prelude::*;
use serde::Serialize;

use super::duality;
use super::engine::{FineEngine, Region};
use super::{CechSpec, EndValue, Status};
use crate::error::{Error, Result};
use crate::groebner::PieceDegree;
use crate::linalg::Matrix;
use crate::module::Presentation;
use crate::monomial::{Monomial, MultiDegree};
use crate::poly::Polynomial;
use crate::resolution::ResolutionChain;
use crate::ring::RingSpec;

#[derive(Clone, Debug)]
pub struct CechOptions {
    /// Lowest degree a downward scan may reach.
    pub floor: Option<i64>,
    /// Refuse analyses with more representative degrees than this.
    pub max_types: usize,
}

impl Default for CechOptions {
    fn default() -> Self {
        CechOptions {
            floor: None,
            max_types: 200_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    FineTypes,
    LocalDuality,
}

/// Per-index data of a full local cohomology computation.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub method: Method,
    pub ends: Vec<EndValue>,
    pub statuses: Vec<Status>,
    pub window: (EndValue, EndValue),
    /// Representative fine degrees with their cohomology dimensions.
    pub types: Vec<(Vec<i64>, Vec<usize>)>,
}

impl Analysis {
    fn zero(s: usize, method: Method) -> Analysis {
        Analysis {
            method,
            ends: vec![EndValue::MinusInfinity; s + 1],
            statuses: vec![Status::Certified; s + 1],
            window: (EndValue::MinusInfinity, EndValue::MinusInfinity),
            types: Vec::new(),
        }
    }

    pub fn cd(&self) -> EndValue {
        EndValue::from_option(
            self.ends
                .iter()
                .rposition(|e| !e.is_minus_infinity())
                .map(|i| i as i64),
        )
    }

    pub fn a_star(&self) -> EndValue {
        self.ends.iter().copied().max().unwrap_or(EndValue::MinusInfinity)
    }

    pub fn reg_level(&self, k: usize) -> EndValue {
        self.ends
            .iter()
            .enumerate()
            .skip(k)
            .map(|(i, e)| e.plus(i as i64))
            .max()
            .unwrap_or(EndValue::MinusInfinity)
    }

    pub fn status(&self) -> Status {
        self.statuses.iter().fold(Status::Certified, |a, b| a.worst(*b))
    }
}

/// Analyse a fine module through its finitely many representative degrees.
pub fn analyze_fine(eng: &FineEngine, c: &CechSpec, opts: &CechOptions) -> Result<Analysis> {
    let s = c.s();
    if eng.is_zero_module() || c.is_unit() {
        return Ok(Analysis::zero(s, Method::FineTypes));
    }
    let n = eng.nvars();
    let m = eng.ring.m();
    let sup = c.supports();
    let union = sup.iter().fold(0u64, |a, b| a | b);
    let coords: Vec<usize> = (0..n).collect();
    let skip_low: Vec<bool> = coords.iter().map(|&j| union >> j & 1 == 0).collect();
    let skip_high: Vec<bool> = coords.iter().map(|&j| sup.contains(&(1u64 << j))).collect();
    let count: usize = coords
        .iter()
        .map(|&j| {
            let lo = if skip_low[j] { eng.c[j] } else { eng.c[j] - 1 };
            let hi = if skip_high[j] { eng.k[j] - 1 } else { eng.k[j] };
            (hi - lo + 1).max(0) as usize
        })
        .try_fold(1usize, |a, b| a.checked_mul(b))
        .unwrap_or(usize::MAX);
    if count > opts.max_types {
        return Err(Error::Unsupported(format!(
            "{count} representative degrees exceed the limit {}",
            opts.max_types
        )));
    }
    let types = eng.types(&coords, &skip_low, &skip_high);
    let results: Vec<(Vec<i64>, Vec<usize>)> = types
        .into_par_iter()
        .map(|t| {
            let dims = eng.complex(&sup, 0, &MultiDegree(t.clone())).all_dims();
            (t, dims)
        })
        .collect();
    let value = |t: &[i64]| -> EndValue {
        let mut sum = 0;
        for j in m..n {
            if eng.region(j, t[j]) == Region::High {
                return EndValue::PlusInfinity;
            }
            sum += t[j];
        }
        EndValue::Finite(sum)
    };
    let mut ends = vec![EndValue::MinusInfinity; s + 1];
    for (t, dims) in &results {
        for (i, &d) in dims.iter().enumerate() {
            if d > 0 {
                ends[i] = ends[i].max(value(t));
            }
        }
    }
    let lo: i64 = (m..n).map(|j| eng.c[j] - 1).sum();
    let hi: i64 = (m..n).map(|j| eng.k[j]).sum();
    Ok(Analysis {
        method: Method::FineTypes,
        ends,
        statuses: vec![Status::Certified; s + 1],
        window: (EndValue::Finite(lo), EndValue::Finite(hi)),
        types: results.into_iter().filter(|(_, d)| d.iter().any(|&x| x > 0)).collect(),
    })
}

/// Full analysis of `H^*_C(M)`, choosing the route by the shape of `M`.
pub fn analyze(p: &Presentation, c: &CechSpec, opts: &CechOptions) -> Result<Analysis> {
    if c.is_unit() {
        return Ok(Analysis::zero(c.s(), Method::FineTypes));
    }
    if let Ok(eng) = FineEngine::new(p) {
        return analyze_fine(&eng, c, opts);
    }
    let ring = &p.ring;
    if ring.m() == 0 && c.contains_r_plus(ring) {
        return duality::analyze(p, c.s(), opts.floor);
    }
    Err(Error::RegimeViolation(
        "coarse-only modules support local cohomology only with respect to R+".into(),
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct EndEntry {
    pub i: usize,
    pub end: EndValue,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct CdReport {
    pub lower: EndValue,
    pub upper: EndValue,
    pub equal: bool,
    pub routes: Vec<(String, EndValue)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EndReport {
    pub ideal: String,
    pub method: Method,
    pub entries: Vec<EndEntry>,
    pub window: (EndValue, EndValue),
    pub a_star: EndValue,
    /// `a*` with respect to `R_+` alone, when the ideal contains `R_+`.
    pub a_star_r_plus: Option<EndValue>,
    pub a_star_equal: Option<bool>,
    pub level: usize,
    pub reg: EndValue,
    pub reg_by_level: Vec<EndValue>,
    pub cd: CdReport,
    pub status: Status,
}

fn cd_report(p: &Presentation, c: &CechSpec, a: &Analysis) -> Result<CdReport> {
    let main = a.cd();
    let mut routes = vec![("cech".to_string(), main)];
    if let Some(v) = lyubeznik_route(p, c)? {
        routes.push(("pd".to_string(), v));
    }
    let lower = routes.iter().map(|r| r.1).min().unwrap();
    let upper = routes.iter().map(|r| r.1).max().unwrap();
    Ok(CdReport {
        lower,
        upper,
        equal: lower == upper && a.status() == Status::Certified,
        routes,
    })
}

/// `cd_C(R) = pd(R / rad C)` for monomial `C` acting on a free cyclic module.
fn lyubeznik_route(p: &Presentation, c: &CechSpec) -> Result<Option<EndValue>> {
    let ring = &p.ring;
    let free_cyclic = p.rank() == 1 && p.relations.iter().all(|v| v.is_zero());
    if !free_cyclic || c.is_unit() {
        return Ok(None);
    }
    let gens: Vec<Polynomial> = c
        .supports()
        .iter()
        .map(|&s| {
            let e: Vec<u32> = (0..ring.nvars()).map(|j| (s >> j & 1) as u32).collect();
            Polynomial::monomial(ring, Monomial::from_exps(&e))
        })
        .collect();
    if gens.is_empty() {
        return Ok(Some(EndValue::Finite(0)));
    }
    let q = Presentation::quotient(ring, &gens)?;
    let res = ResolutionChain::compute(&q, ring.nvars() + 1)?;
    Ok(res.length().map(|l| EndValue::Finite(l as i64)))
}

pub fn reg_wrt(p: &Presentation, c: &CechSpec, k: usize, opts: &CechOptions) -> Result<EndReport> {
    let ring = &p.ring;
    let a = analyze(p, c, opts)?;
    let a_star = a.a_star();
    let (a_star_r_plus, a_star_equal) = if c.contains_r_plus(ring) && !c.is_r_plus(ring) {
        let r = analyze(p, &CechSpec::r_plus(ring), opts)?;
        let v = r.a_star();
        (Some(v), Some(v == a_star))
    } else if c.is_r_plus(ring) {
        (Some(a_star), Some(true))
    } else {
        (None, None)
    };
    let s = a.ends.len() - 1;
    let entries = (0..=s)
        .map(|i| EndEntry {
            i,
            end: a.ends[i],
            status: a.statuses[i],
        })
        .collect();
    let reg_by_level: Vec<EndValue> = (0..=s).map(|l| a.reg_level(l)).collect();
    let reg = if k <= s { reg_by_level[k] } else { EndValue::MinusInfinity };
    Ok(EndReport {
        ideal: c.render(ring),
        method: a.method,
        entries,
        window: a.window,
        a_star,
        a_star_r_plus,
        a_star_equal,
        level: k,
        reg,
        reg_by_level,
        cd: cd_report(p, c, &a)?,
        status: a.status(),
    })
}

pub fn end_of_cohomology(p: &Presentation, c: &CechSpec, i: usize, opts: &CechOptions) -> Result<(EndValue, Status)> {
    let a = analyze(p, c, opts)?;
    Ok(match a.ends.get(i) {
        Some(&e) => (e, a.statuses[i]),
        None => (EndValue::MinusInfinity, Status::Certified),
    })
}

pub fn cohomological_dimension(p: &Presentation, c: &CechSpec, opts: &CechOptions) -> Result<CdReport> {
    let a = analyze(p, c, opts)?;
    cd_report(p, c, &a)
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyPiece {
    pub i: usize,
    pub degree: String,
    pub dim: u64,
}

/// Number of integer points with the given per-coordinate bounds and sum
/// `n`; `None` when infinite.
fn count_points(bounds: &[(Option<i64>, Option<i64>)], n: i64) -> Option<u64> {
    let low_open = bounds.iter().any(|b| b.0.is_none());
    let high_open = bounds.iter().any(|b| b.1.is_none());
    if low_open && high_open {
        return None;
    }
    // shift to nonnegative variables v_j with sum N and optional caps
    let (caps, total): (Vec<Option<i64>>, i64) = if low_open {
        let hi_sum: i64 = bounds.iter().map(|b| b.1.unwrap()).sum();
        (
            bounds.iter().map(|b| b.0.map(|lo| b.1.unwrap() - lo)).collect(),
            hi_sum - n,
        )
    } else {
        let lo_sum: i64 = bounds.iter().map(|b| b.0.unwrap()).sum();
        (
            bounds.iter().map(|b| b.1.map(|hi| hi - b.0.unwrap())).collect(),
            n - lo_sum,
        )
    };
    if total < 0 || caps.iter().any(|c| c.is_some_and(|c| c < 0)) {
        return Some(0);
    }
    let total = total as usize;
    let mut ways = vec![0u64; total + 1];
    ways[0] = 1;
    for cap in caps {
        let cap = cap.map_or(total, |c| (c as usize).min(total));
        let mut next = vec![0u64; total + 1];
        for (s, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for v in 0..=cap.min(total - s) {
                next[s + v] += w;
            }
        }
        ways = next;
    }
    Some(ways[total])
}

pub fn cohomology_piece(
    p: &Presentation,
    c: &CechSpec,
    i: usize,
    deg: &PieceDegree,
    opts: &CechOptions,
) -> Result<CohomologyPiece> {
    let ring = &p.ring;
    let label = match deg {
        PieceDegree::Fine(u) => u.to_string(),
        PieceDegree::Coarse(n) => n.to_string(),
    };
    if i > c.s() || c.is_unit() {
        return Ok(CohomologyPiece { i, degree: label, dim: 0 });
    }
    match (FineEngine::new(p), deg) {
        (Ok(eng), PieceDegree::Fine(u)) => {
            if u.0.len() != ring.nvars() {
                return Err(Error::RankMismatch {
                    expected: ring.nvars(),
                    got: u.0.len(),
                });
            }
            let clamped = MultiDegree(
                u.0.iter()
                    .enumerate()
                    .map(|(j, &v)| v.clamp(eng.c[j] - 1, eng.k[j]))
                    .collect(),
            );
            let dims = eng.complex(&c.supports(), 0, &clamped).all_dims();
            Ok(CohomologyPiece {
                i,
                degree: label,
                dim: dims.get(i).copied().unwrap_or(0) as u64,
            })
        }
        (Ok(eng), PieceDegree::Coarse(n)) => {
            if ring.m() > 0 {
                return Err(Error::InfiniteDimensionalPiece(format!(
                    "coarse degree {n} with base variables"
                )));
            }
            let a = analyze_fine(&eng, c, opts)?;
            let mut total = 0u64;
            for (t, dims) in &a.types {
                let d = dims.get(i).copied().unwrap_or(0) as u64;
                if d == 0 {
                    continue;
                }
                let bounds: Vec<(Option<i64>, Option<i64>)> = t
                    .iter()
                    .enumerate()
                    .map(|(j, &v)| match eng.region(j, v) {
                        Region::Low => (None, Some(v)),
                        Region::High => (Some(v), None),
                        Region::Exact => (Some(v), Some(v)),
                    })
                    .collect();
                let cnt = count_points(&bounds, *n).ok_or_else(|| {
                    Error::InfiniteDimensionalPiece(format!("H^{i} in coarse degree {n}"))
                })?;
                total += d * cnt;
            }
            Ok(CohomologyPiece { i, degree: label, dim: total })
        }
        (Err(_), PieceDegree::Coarse(n)) if ring.m() == 0 && c.contains_r_plus(ring) => Ok(CohomologyPiece {
            i,
            degree: label,
            dim: duality::piece_dim(p, i, *n)?,
        }),
        (Err(e), _) => Err(e),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalizedPiece {
    pub sigma: Vec<usize>,
    pub degree: String,
    /// `k` with the piece equal to `M_{u + k deg f_sigma}`.
    pub stabilization: i64,
    pub dim: usize,
    /// Laurent representatives `x^a e_g`, rendered.
    pub basis: Vec<String>,
}

fn render_laurent(ring: &RingSpec, exps: &[i64], comp: usize, rank: usize) -> String {
    let mut parts = Vec::new();
    for (j, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.var_name(j).to_string()),
            _ => parts.push(format!("{}^{}", ring.var_name(j), e)),
        }
    }
    let mono = if parts.is_empty() { "1".to_string() } else { parts.join("*") };
    if rank == 1 {
        mono
    } else {
        format!("{mono}*e{}", comp + 1)
    }
}

/// Basis of `(M[1/f_sigma])_u`, with the stabilization confirmed by two
/// consecutive isomorphisms under multiplication by `f_sigma`.
pub fn localized_piece(p: &Presentation, c: &CechSpec, sigma: &[usize], deg: &PieceDegree) -> Result<LocalizedPiece> {
    let ring = &p.ring;
    let eng = FineEngine::new(p)?;
    let u = match deg {
        PieceDegree::Fine(u) => u.clone(),
        PieceDegree::Coarse(n) if ring.nvars() == 1 => MultiDegree(vec![*n]),
        PieceDegree::Coarse(n) if sigma.is_empty() && ring.m() == 0 => {
            let basis = crate::groebner::graded_piece_basis(p, deg)?;
            return Ok(LocalizedPiece {
                sigma: Vec::new(),
                degree: n.to_string(),
                stabilization: 0,
                dim: basis.len(),
                basis: basis
                    .iter()
                    .map(|(m, g)| {
                        let e: Vec<i64> = m.exps().iter().map(|&x| x as i64).collect();
                        render_laurent(ring, &e, *g, p.rank())
                    })
                    .collect(),
            });
        }
        PieceDegree::Coarse(n) => {
            return Err(Error::InfiniteDimensionalPiece(format!(
                "localized piece in coarse degree {n}"
            )))
        }
    };
    let mut f = ring.one();
    for &l in sigma {
        let g = c
            .gens
            .get(l)
            .ok_or_else(|| Error::Internal(format!("generator index {l} out of range")))?;
        f = f.mul(g);
    }
    let d = f.fine_degree();
    let mut k: i64 = 0;
    for j in 0..ring.nvars() {
        if d.0[j] > 0 {
            let need = eng.k[j] - u.0[j];
            if need > 0 {
                k = k.max((need + d.0[j] - 1) / d.0[j]);
            }
        }
    }
    let at = |k: i64| u.add(&d.scale(k));
    if !f.is_one() {
        for step in [k, k + 1] {
            let m: std::sync::Arc<Matrix> = eng.mult_map(&at(step), &at(step + 1));
            if m.rows != m.cols || m.rank() != m.rows {
                return Err(Error::StabilizationFailure(format!(
                    "multiplication by the localizing monomial is not bijective at step {step}"
                )));
            }
        }
    }
    let piece = eng.piece(&at(k));
    let shift = d.scale(k);
    let basis = piece
        .basis
        .iter()
        .map(|(a, g)| {
            let e: Vec<i64> = a
                .exps()
                .iter()
                .zip(&shift.0)
                .map(|(&x, &s)| x as i64 - s)
                .collect();
            render_laurent(ring, &e, *g, p.rank())
        })
        .collect();
    Ok(LocalizedPiece {
        sigma: sigma.to_vec(),
        degree: match deg {
            PieceDegree::Fine(u) => u.to_string(),
            PieceDegree::Coarse(n) => n.to_string(),
        },
        stabilization: k,
        dim: piece.dim(),
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Ring, RingSpec};
    use crate::scalar::Field;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    fn ring(m: usize, t: usize) -> Ring {
        RingSpec::standard(Field::Rationals, m, t).unwrap()
    }

    #[test]
    fn laurent_pieces() {
        let r = ring(0, 1);
        let p = Presentation::ring_module(&r);
        let c = CechSpec::r_plus(&r);
        let lp = localized_piece(&p, &c, &[0], &PieceDegree::Coarse(-3)).unwrap();
        assert_eq!(lp.dim, 1);
        assert_eq!(lp.basis, vec!["x1^-3"]);
        let r2 = ring(0, 2);
        let p2 = Presentation::ring_module(&r2);
        let c2 = CechSpec::r_plus(&r2);
        let lp = localized_piece(&p2, &c2, &[0, 1], &PieceDegree::Fine(MultiDegree(vec![-1, -1]))).unwrap();
        assert_eq!(lp.dim, 1);
    }

    #[test]
    fn torsion_dies_in_localization() {
        let r = ring(1, 1);
        let p = Presentation::cyclic(&r, &[mono(&[1, 1])]).unwrap();
        let c = CechSpec::r_plus(&r);
        let at = |u: Vec<i64>| localized_piece(&p, &c, &[0], &PieceDegree::Fine(MultiDegree(u))).unwrap().dim;
        assert_eq!(at(vec![1, -1]), 0);
        assert_eq!(at(vec![0, -1]), 1);
    }

    #[test]
    fn top_cohomology_of_the_plane() {
        let r = ring(0, 2);
        let p = Presentation::ring_module(&r);
        let c = CechSpec::r_plus(&r);
        let o = CechOptions::default();
        let piece = |i, u: Vec<i64>| {
            cohomology_piece(&p, &c, i, &PieceDegree::Fine(MultiDegree(u)), &o).unwrap().dim
        };
        assert_eq!(piece(2, vec![-1, -1]), 1);
        assert_eq!(piece(1, vec![-1, -1]), 0);
        assert_eq!(piece(1, vec![3, -2]), 0);
        assert_eq!(cohomology_piece(&p, &c, 2, &PieceDegree::Coarse(-3), &o).unwrap().dim, 2);
        assert_eq!(end_of_cohomology(&p, &c, 2, &o).unwrap(), (EndValue::Finite(-2), Status::Certified));
        assert_eq!(end_of_cohomology(&p, &c, 0, &o).unwrap().0, EndValue::MinusInfinity);
        let rep = reg_wrt(&p, &c, 0, &o).unwrap();
        assert_eq!(rep.reg, EndValue::Finite(0));
    }

    #[test]
    fn two_points_have_reduced_cohomology() {
        let r = RingSpec::base_ring(Field::Rationals, 2);
        let p = Presentation::cyclic(&r, &[mono(&[1, 1])]).unwrap();
        let c = CechSpec::new(&r, vec![mono(&[1, 0]), mono(&[0, 1])]).unwrap();
        let o = CechOptions::default();
        let d = cohomology_piece(&p, &c, 1, &PieceDegree::Fine(MultiDegree(vec![0, 0])), &o).unwrap();
        assert_eq!(d.dim, 1);
    }

    #[test]
    fn example_base_ring_with_zero_action() {
        // k[y1,y2] with x1 acting as zero: R/(x1) over k[y1,y2][x1]
        let r = ring(2, 1);
        let p = Presentation::cyclic(&r, &[mono(&[0, 0, 1])]).unwrap();
        let o = CechOptions::default();
        let max = CechSpec::plus_r_plus(&r, &[mono(&[1, 0, 0]), mono(&[0, 1, 0])]);
        let rep = reg_wrt(&p, &max, 0, &o).unwrap();
        assert_eq!(rep.reg, EndValue::Finite(2));
        assert_eq!(rep.entries[2].end, EndValue::Finite(0));
        let rp = reg_wrt(&p, &CechSpec::r_plus(&r), 0, &o).unwrap();
        assert_eq!(rp.reg, EndValue::Finite(0));
        assert_eq!(rep.a_star_equal, Some(true));
    }

    #[test]
    fn cohomological_dimensions() {
        let o = CechOptions::default();
        let r2 = RingSpec::base_ring(Field::Rationals, 2);
        let c = CechSpec::new(&r2, vec![mono(&[1, 0]), mono(&[0, 1])]).unwrap();
        let cd = cohomological_dimension(&Presentation::ring_module(&r2), &c, &o).unwrap();
        assert_eq!((cd.lower, cd.upper, cd.equal), (EndValue::Finite(2), EndValue::Finite(2), true));
        let r3 = RingSpec::base_ring(Field::Rationals, 3);
        let c3 = CechSpec::new(&r3, vec![mono(&[1, 1, 0]), mono(&[0, 1, 1]), mono(&[1, 0, 1])]).unwrap();
        let cd = cohomological_dimension(&Presentation::ring_module(&r3), &c3, &o).unwrap();
        assert_eq!((cd.lower, cd.upper, cd.equal), (EndValue::Finite(2), EndValue::Finite(2), true));
        let r1 = RingSpec::base_ring(Field::Rationals, 1);
        let k = Presentation::cyclic(&r1, &[mono(&[1])]).unwrap();
        let c1 = CechSpec::new(&r1, vec![mono(&[1])]).unwrap();
        let cd = cohomological_dimension(&k, &c1, &o).unwrap();
        assert_eq!((cd.lower, cd.upper, cd.equal), (EndValue::Finite(0), EndValue::Finite(0), true));
    }

    #[test]
    fn point_counts() {
        assert_eq!(count_points(&[(None, Some(-1)), (None, Some(-1))], -3), Some(2));
        assert_eq!(count_points(&[(Some(0), Some(0)), (Some(1), None)], 4), Some(1));
        assert_eq!(count_points(&[(None, Some(0)), (Some(0), None)], 0), None);
    }
}
