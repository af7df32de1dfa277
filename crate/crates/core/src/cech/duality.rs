//! `H^i_{R_+}(M)` for modules over `k[x_1..x_t]` through graded local
//! duality: `dim H^i(M)_n = dim Ext^{t-i}(M, R)_{-n-t}`.

use rayon::prelude::*;

use super::report::{Analysis, Method};
use super::{EndValue, Status};
use crate::error::Result;
use crate::ext::ext_module;
use crate::groebner::GroebnerBasis;
use crate::module::Presentation;

struct Dual {
    end: EndValue,
    status: Status,
    window: Option<(i64, i64)>,
}

fn dual_end(p: &Presentation, i: usize, floor: Option<i64>) -> Result<Dual> {
    let t = p.ring.t() as i64;
    let none = Dual {
        end: EndValue::MinusInfinity,
        status: Status::Certified,
        window: None,
    };
    if i as i64 > t {
        return Ok(none);
    }
    let e = ext_module(p, &Presentation::ring_module(&p.ring), (t - i as i64) as usize)?;
    let gb = GroebnerBasis::of_presentation(&e);
    if e.rank() == 0 || gb.is_whole() {
        return Ok(none);
    }
    let lo = e.free.degrees.iter().map(|d| d.coarse).min().unwrap();
    let hi = e.free.degrees.iter().map(|d| d.coarse).max().unwrap();
    let window = Some((-hi - t, -lo - t));
    for d in lo..=hi {
        let n = -d - t;
        if floor.is_some_and(|f| n < f) {
            return Ok(Dual {
                end: EndValue::MinusInfinity,
                status: Status::WindowBounded,
                window,
            });
        }
        if !gb.standard_in_coarse(d)?.is_empty() {
            return Ok(Dual {
                end: EndValue::Finite(n),
                status: Status::Certified,
                window,
            });
        }
    }
    Ok(Dual { window, ..none })
}

pub fn analyze(p: &Presentation, s: usize, floor: Option<i64>) -> Result<Analysis> {
    let parts: Vec<Dual> = (0..=s)
        .into_par_iter()
        .map(|i| dual_end(p, i, floor))
        .collect::<Result<_>>()?;
    let lo = parts.iter().filter_map(|d| d.window.map(|w| w.0)).min();
    let hi = parts.iter().filter_map(|d| d.window.map(|w| w.1)).max();
    let lo = match (lo, floor) {
        (Some(l), Some(f)) => Some(l.max(f)),
        (l, _) => l,
    };
    Ok(Analysis {
        method: Method::LocalDuality,
        ends: parts.iter().map(|d| d.end).collect(),
        statuses: parts.iter().map(|d| d.status).collect(),
        window: (EndValue::from_option(lo), EndValue::from_option(hi)),
        types: Vec::new(),
    })
}

pub fn piece_dim(p: &Presentation, i: usize, n: i64) -> Result<u64> {
    let t = p.ring.t() as i64;
    if i as i64 > t {
        return Ok(0);
    }
    let e = ext_module(p, &Presentation::ring_module(&p.ring), (t - i as i64) as usize)?;
    let gb = GroebnerBasis::of_presentation(&e);
    Ok(gb.standard_in_coarse(-n - t)?.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{FreeModule, GenDegree, ModuleOrder, Vector};
    use crate::poly::Polynomial;
    use crate::ring::RingSpec;
    use crate::scalar::Field;

    #[test]
    fn plane_via_duality() {
        let r = RingSpec::standard(Field::Rationals, 0, 2).unwrap();
        let p = Presentation::ring_module(&r);
        let a = analyze(&p, 2, None).unwrap();
        assert_eq!(a.ends, vec![EndValue::MinusInfinity, EndValue::MinusInfinity, EndValue::Finite(-2)]);
        assert_eq!(piece_dim(&p, 2, -3).unwrap(), 2);
        assert_eq!(piece_dim(&p, 2, -1).unwrap(), 0);
    }

    #[test]
    fn non_fine_module_matches_its_twin() {
        // coker of x1 + x2 on R(0): isomorphic to k[t] as graded module
        let r = RingSpec::standard(Field::Rationals, 0, 2).unwrap();
        let f = Polynomial::var(&r, 0).add(&Polynomial::var(&r, 1), &r);
        let order = ModuleOrder::top(&r);
        let p = Presentation::new(
            &r,
            FreeModule::new(vec![GenDegree::coarse(0)]),
            vec![Vector::from_coords(&order, &[f])],
        )
        .unwrap();
        let a = analyze(&p, 2, None).unwrap();
        assert_eq!(a.ends[1], EndValue::Finite(-1));
        assert_eq!(a.ends[2], EndValue::MinusInfinity);
    }
}
