//! Polynomial modules `M_0[x_1..x_t]` and modules with a single nonvanishing
//! `H^g_{R_+}`, where `reg` reduces to cohomological dimensions over the base.

use rayon::prelude::*;
use serde::Serialize;

use super::engine::{subsets_of_size, CechComplex, FineEngine};
use super::report::{analyze, analyze_fine, CechOptions};
use super::{CechSpec, EndValue, Status};
use crate::error::{Error, Result};
use crate::ideal::dimension_from_leading;
use crate::linalg::{Matrix, Subquotient};
use crate::module::Presentation;
use crate::monomial::{Monomial, MultiDegree};
use crate::ring::{names, Ring, RingSpec};

/// `k[y_1..y_m][x_1..x_t]` over the given base ring.
pub fn polynomial_ring_over(base: &Ring, t: usize) -> Result<Ring> {
    RingSpec::new(base.field, base.base.clone(), names("x", t))
}

/// Pads a base monomial with zero exponents on the `x` block.
pub fn extend_monomial(mono: &Monomial, nvars: usize) -> Monomial {
    let mut e = mono.exps().to_vec();
    e.resize(nvars, 0);
    Monomial::from_exps(&e)
}

#[derive(Clone, Debug, Serialize)]
pub struct PolyModReport {
    /// `cd_{a_0}(M_0)`.
    pub cd: EndValue,
    pub status: Status,
    /// Predicted `end(H^i_{a_0 + R_+}(M_0[x]))` for `i = 0..=s`.
    pub predicted_ends: Vec<EndValue>,
}

/// `cd_{a_0}(M_0)` together with the end pattern it forces on `M_0[x]`.
pub fn reg_polynomial_module(m0: &Presentation, a0: &[Monomial], t: usize, opts: &CechOptions) -> Result<PolyModReport> {
    if m0.ring.t() != 0 {
        return Err(Error::RegimeViolation("expected a module over the base ring".into()));
    }
    let c = CechSpec::new(&m0.ring, a0.to_vec())?;
    let a = analyze(m0, &c, opts)?;
    let cd = a.cd();
    let s = a0.len() + t;
    let predicted_ends = (0..=s)
        .map(|i| {
            let hit = i >= t && a.ends.get(i - t).is_some_and(|e| !e.is_minus_infinity());
            if hit {
                EndValue::Finite(-(t as i64))
            } else {
                EndValue::MinusInfinity
            }
        })
        .collect();
    Ok(PolyModReport {
        cd,
        status: a.status(),
        predicted_ends,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop211Entry {
    /// Representative `x` part of the fine degree.
    pub x_degree: Vec<i64>,
    /// Coordinates whose representative stands for every smaller value.
    pub open_below: Vec<bool>,
    pub coarse: i64,
    /// `cd_{a_0}` of the base-ring module `H^g_{R_+}(M)_{(*, v)}`.
    pub cd: EndValue,
    /// Its Krull dimension over the base ring, from its annihilator.
    pub dim: EndValue,
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop211Report {
    pub g: usize,
    pub reg: EndValue,
    /// `sup{dim + n} + g`.
    pub reg_by_dim: EndValue,
    pub entries: Vec<Prop211Entry>,
}

fn mask_of(sigma: u64, sup: &[u64]) -> u64 {
    (0..sup.len())
        .filter(|l| sigma >> l & 1 == 1)
        .fold(0, |acc, l| acc | sup[l])
}

/// Čech cohomology over the base of `H^g` of the `x` complex at degree `u`.
fn nested(eng: &FineEngine, xs: &[u64], ys: &[u64], u: &MultiDegree, g: usize) -> Vec<usize> {
    let field = eng.ring.field;
    let sy = ys.len();
    let mut h: Vec<Vec<(u64, CechComplex, Subquotient)>> = Vec::with_capacity(sy + 1);
    for i in 0..=sy {
        let mut row = Vec::new();
        for tau in subsets_of_size(sy, i) {
            let cx = eng.complex(xs, mask_of(tau, ys), u);
            let (z, b) = cx.cycles_and_boundaries(g);
            let sq = Subquotient::new(field, cx.dims[g], &z, &b);
            row.push((tau, cx, sq));
        }
        h.push(row);
    }
    let dims: Vec<usize> = h.iter().map(|r| r.iter().map(|x| x.2.dim()).sum()).collect();
    let mut ranks = Vec::with_capacity(sy);
    for i in 0..sy {
        let mut d = Matrix::zeros(field, dims[i + 1], dims[i]);
        let mut col_off = 0;
        for (tau, _, src) in &h[i] {
            let mut row_off = 0;
            for (tau2, _, dst) in &h[i + 1] {
                if tau2 & tau == *tau {
                    let l = (tau2 & !tau).trailing_zeros() as u64;
                    let neg = (tau & ((1u64 << l) - 1)).count_ones() % 2 == 1;
                    let cm = eng.chain_map(xs, mask_of(*tau, ys), mask_of(*tau2, ys), u, g);
                    for (k, z) in src.basis.iter().enumerate() {
                        let img = cm.apply(z);
                        let coords = dst.coords(&img).expect("chain map preserves cycles");
                        for (r, x) in coords.into_iter().enumerate() {
                            if !x.is_zero() {
                                d.set(row_off + r, col_off + k, if neg { -&x } else { x });
                            }
                        }
                    }
                }
                row_off += dst.dim();
            }
            col_off += src.dim();
        }
        ranks.push(d.rank());
    }
    (0..=sy)
        .map(|i| {
            let out = ranks.get(i).copied().unwrap_or(0);
            let inn = if i == 0 { 0 } else { ranks[i - 1] };
            dims[i] - out - inn
        })
        .collect()
}

/// Multiplication by `y^a` from the `x` complex at `u` to the one at `u + a`.
fn mult_chain(eng: &FineEngine, xs: &[u64], u: &MultiDegree, a: &MultiDegree, i: usize) -> Matrix {
    let w = u.add(a);
    let blocks: Vec<std::sync::Arc<Matrix>> = subsets_of_size(xs.len(), i)
        .into_iter()
        .map(|sg| {
            let mask = mask_of(sg, xs);
            eng.mult_map(&eng.clamp(u, mask), &eng.clamp(&w, mask))
        })
        .collect();
    let rows = blocks.iter().map(|b| b.rows).sum();
    let cols = blocks.iter().map(|b| b.cols).sum();
    let mut out = Matrix::zeros(eng.ring.field, rows, cols);
    let (mut ro, mut co) = (0, 0);
    for b in blocks {
        for r in 0..b.rows {
            for c in 0..b.cols {
                out.set(ro + r, co + c, b.get(r, c).clone());
            }
        }
        ro += b.rows;
        co += b.cols;
    }
    out
}

/// Monomial generators of the annihilator of the base-ring module
/// `H^g_{R_+}(M)_{(*, v)}`; `ytypes` covers every base degree up to
/// stabilization.
fn layer_annihilator(eng: &FineEngine, xs: &[u64], v: &[i64], g: usize, ytypes: &[Vec<i64>]) -> Vec<Monomial> {
    let m = eng.ring.m();
    let n = eng.nvars();
    let field = eng.ring.field;
    let mut boxes: Vec<Vec<u32>> = vec![Vec::new()];
    for j in 0..m {
        let top = (eng.k[j] - eng.c[j] + 1).max(0) as u32;
        boxes = boxes
            .into_iter()
            .flat_map(|b| {
                (0..=top).map(move |e| {
                    let mut b = b.clone();
                    b.push(e);
                    b
                })
            })
            .collect();
    }
    boxes.sort_by_key(|b| (b.iter().sum::<u32>(), b.clone()));
    let homology = |u: &MultiDegree| {
        let cx = eng.complex(xs, 0, u);
        let (z, b) = cx.cycles_and_boundaries(g);
        Subquotient::new(field, cx.dims[g], &z, &b)
    };
    let mut gens: Vec<Monomial> = Vec::new();
    for a in boxes {
        let mono = Monomial::from_exps(&a);
        if gens.iter().any(|x| x.divides(&mono)) {
            continue;
        }
        let mut shift = a.iter().map(|&e| e as i64).collect::<Vec<_>>();
        shift.resize(n, 0);
        let shift = MultiDegree(shift);
        let kills = ytypes.iter().all(|w| {
            let mut u = w.clone();
            u.extend_from_slice(v);
            let u = MultiDegree(u);
            let hs = homology(&u);
            if hs.dim() == 0 {
                return true;
            }
            let hd = homology(&u.add(&shift));
            let chain = mult_chain(eng, xs, &u, &shift, g);
            hs.basis.iter().all(|z| {
                hd.coords(&chain.apply(z))
                    .expect("multiplication preserves cycles")
                    .iter()
                    .all(|x| x.is_zero())
            })
        });
        if kills {
            gens.push(mono);
        }
    }
    gens
}

/// `sup{cd_{a_0}(H^g_{R_+}(M)_n) + n} + g` for `M` relative Cohen–Macaulay
/// with respect to `R_+`.
pub fn prop211_reg(p: &Presentation, a0: &[Monomial]) -> Result<Prop211Report> {
    let ring = &p.ring;
    let (m, n) = (ring.m(), ring.nvars());
    let eng = FineEngine::new(p)?;
    let rp = analyze_fine(&eng, &CechSpec::r_plus(ring), &CechOptions::default())?;
    let nz: Vec<usize> = (0..rp.ends.len()).filter(|&i| !rp.ends[i].is_minus_infinity()).collect();
    let Some(&g) = nz.first() else {
        return Err(Error::Precondition("H_{R+}(M) vanishes identically".into()));
    };
    if nz.len() > 1 {
        return Err(Error::Precondition(format!(
            "not relative Cohen-Macaulay: H^i_(R+) is nonzero for i in {nz:?}"
        )));
    }
    let a0: Vec<Monomial> = a0.iter().map(|g| extend_monomial(g, n)).collect();
    let yspec = CechSpec::new(ring, a0)?;
    if yspec.is_unit() {
        return Ok(Prop211Report {
            g,
            reg: EndValue::MinusInfinity,
            reg_by_dim: EndValue::MinusInfinity,
            entries: Vec::new(),
        });
    }
    let ys = yspec.supports();
    let xs: Vec<u64> = (m..n).map(|j| 1u64 << j).collect();
    let x_coords: Vec<usize> = (m..n).collect();
    let xtypes = eng.types(&x_coords, &vec![false; n - m], &vec![true; n - m]);
    let y_coords: Vec<usize> = (0..m).collect();
    let yunion = ys.iter().fold(0u64, |a, b| a | b);
    let ytypes = eng.types(
        &y_coords,
        &y_coords.iter().map(|&j| yunion >> j & 1 == 0).collect::<Vec<_>>(),
        &y_coords.iter().map(|&j| ys.contains(&(1u64 << j))).collect::<Vec<_>>(),
    );
    let plain = eng.types(&y_coords, &vec![true; m], &vec![false; m]);
    let entries: Vec<Prop211Entry> = xtypes
        .par_iter()
        .map(|v| {
            let mut cd = EndValue::MinusInfinity;
            for w in &ytypes {
                let mut u = w.clone();
                u.extend_from_slice(v);
                let r = nested(&eng, &xs, &ys, &MultiDegree(u), g);
                if let Some(top) = r.iter().rposition(|&d| d > 0) {
                    cd = cd.max(EndValue::Finite(top as i64));
                }
            }
            let ann = layer_annihilator(&eng, &xs, v, g, &plain);
            let dim = EndValue::from_option(dimension_from_leading(m, &ann).map(|d| d as i64));
            Prop211Entry {
                x_degree: v.clone(),
                open_below: (m..n).map(|j| v[j - m] < eng.c[j]).collect(),
                coarse: v.iter().sum(),
                cd,
                dim,
            }
        })
        .collect();
    let sup = |f: fn(&Prop211Entry) -> EndValue| {
        entries
            .iter()
            .map(|e| f(e).plus(e.coarse))
            .max()
            .unwrap_or(EndValue::MinusInfinity)
            .plus(g as i64)
    };
    Ok(Prop211Report {
        g,
        reg: sup(|e| e.cd),
        reg_by_dim: sup(|e| e.dim),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cech::report::reg_wrt;
    use crate::scalar::Field;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn inverse_polynomials_over_a_line() {
        let r = RingSpec::standard(Field::Rationals, 1, 2).unwrap();
        let p = Presentation::ring_module(&r);
        let rep = prop211_reg(&p, &[mono(&[1])]).unwrap();
        assert_eq!(rep.g, 2);
        assert_eq!(rep.reg, EndValue::Finite(1));
        assert_eq!(rep.reg_by_dim, EndValue::Finite(1));
        let direct = reg_wrt(&p, &CechSpec::plus_r_plus(&r, &[mono(&[1, 0, 0])]), 0, &CechOptions::default()).unwrap();
        assert_eq!(direct.reg, EndValue::Finite(1));
    }

    #[test]
    fn degenerate_base() {
        let r = RingSpec::standard(Field::Rationals, 0, 2).unwrap();
        let rep = prop211_reg(&Presentation::ring_module(&r), &[]).unwrap();
        assert_eq!((rep.g, rep.reg), (2, EndValue::Finite(0)));
    }

    #[test]
    fn rejects_mixed_cohomology() {
        let r = RingSpec::standard(Field::Rationals, 1, 1).unwrap();
        let p = Presentation::cyclic(&r, &[mono(&[1, 1])]).unwrap();
        assert!(matches!(prop211_reg(&p, &[mono(&[1])]), Err(Error::Precondition(_))));
    }

    #[test]
    fn polynomial_module_cd() {
        let o = CechOptions::default();
        let b2 = RingSpec::base_ring(Field::Rationals, 2);
        let rep = reg_polynomial_module(&Presentation::ring_module(&b2), &[mono(&[1, 0]), mono(&[0, 1])], 1, &o).unwrap();
        assert_eq!(rep.cd, EndValue::Finite(2));
        assert_eq!(rep.predicted_ends[3], EndValue::Finite(-1));
        let b3 = RingSpec::base_ring(Field::Rationals, 3);
        let a0 = [mono(&[1, 1, 0]), mono(&[0, 1, 1]), mono(&[1, 0, 1])];
        let rep = reg_polynomial_module(&Presentation::ring_module(&b3), &a0, 2, &o).unwrap();
        assert_eq!(rep.cd, EndValue::Finite(2));
        let r = polynomial_ring_over(&b3, 2).unwrap();
        let a0x: Vec<Monomial> = a0.iter().map(|g| extend_monomial(g, 5)).collect();
        let direct = reg_wrt(&Presentation::ring_module(&r), &CechSpec::plus_r_plus(&r, &a0x), 0, &o).unwrap();
        assert_eq!(direct.reg, EndValue::Finite(2));
        for (e, p) in direct.entries.iter().zip(&rep.predicted_ends) {
            assert_eq!(e.end, *p);
        }
        let killed = Presentation::cyclic(&b2, &[mono(&[1, 0])]).unwrap();
        let rep = reg_polynomial_module(&killed, &[mono(&[1, 0])], 3, &o).unwrap();
        assert_eq!(rep.cd, EndValue::Finite(0));
    }
}
