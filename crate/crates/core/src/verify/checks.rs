//! One executable check per statement.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::cech::polymod::{prop211_reg, reg_polynomial_module, Prop211Report};
use crate::cech::{cohomological_dimension, reg_wrt, CechOptions, CechSpec, EndReport, EndValue, Status};
use crate::error::{Error, Result};
use crate::ext::{depth_ab, depth_via_ext, grade, projective_dimension};
use crate::frobenius::f_depth_probe;
use crate::ideal::{krull_dimension, radical_membership};
use crate::module::Presentation;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::resolution::ResolutionChain;
use crate::ring::Ring;

use super::ara::{ara_bound, monomial_cd};
use super::corpus::Instance;

pub const STATEMENTS: [&str; 14] = [
    "Ex2.1",
    "Prop2.3",
    "Thm2.5",
    "Cor2.6",
    "Cor2.8",
    "Cor2.9",
    "Def2.10",
    "Prop2.11",
    "Cor2.12i",
    "Cor2.12ii",
    "Thm2.13",
    "RegRes",
    "Cor3.5i",
    "AstarEq",
];

const GRADED_LOCAL: &str = "local base (R0, m0) replaced by the graded k[y] with m0 = (y)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Holds,
    Fails,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub statement: String,
    pub instance: usize,
    pub description: String,
    pub verdict: Verdict,
    pub reason: Option<String>,
    pub left: Option<EndValue>,
    pub right: Option<EndValue>,
    pub detail: String,
    pub statuses: Vec<Status>,
    pub assumptions: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub cech: CechOptions,
    pub s_max: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            cech: CechOptions::default(),
            s_max: 4,
        }
    }
}

/// Lazily computed reports shared by the checks of one instance.
pub struct Context<'a> {
    pub inst: &'a Instance,
    pub opts: &'a VerifyOptions,
    r_plus: OnceLock<Result<EndReport>>,
    a0_plus: OnceLock<Result<EndReport>>,
    rel_cm: OnceLock<Result<Option<usize>>>,
}

impl<'a> Context<'a> {
    pub fn new(inst: &'a Instance, opts: &'a VerifyOptions) -> Context<'a> {
        Context {
            inst,
            opts,
            r_plus: OnceLock::new(),
            a0_plus: OnceLock::new(),
            rel_cm: OnceLock::new(),
        }
    }

    fn ring(&self) -> &Ring {
        &self.inst.ring
    }

    pub fn r_plus(&self) -> Result<&EndReport> {
        self.r_plus
            .get_or_init(|| reg_wrt(&self.inst.module, &CechSpec::r_plus(self.ring()), 0, &self.opts.cech))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn a0_plus(&self) -> Result<&EndReport> {
        self.a0_plus
            .get_or_init(|| {
                let c = CechSpec::plus_r_plus(self.ring(), &self.inst.a0);
                reg_wrt(&self.inst.module, &c, 0, &self.opts.cech)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `Some(g)` when `H^i_{R_+}(M)` is nonzero exactly for `i = g`.
    pub fn relative_cm(&self) -> Result<Option<usize>> {
        self.rel_cm
            .get_or_init(|| {
                let r = self.r_plus()?;
                let nz: Vec<usize> = r
                    .entries
                    .iter()
                    .filter(|e| !e.end.is_minus_infinity())
                    .map(|e| e.i)
                    .collect();
                Ok(if nz.len() == 1 { Some(nz[0]) } else { None })
            })
            .clone()
    }
}

struct Outcome {
    verdict: Verdict,
    reason: Option<String>,
    left: Option<EndValue>,
    right: Option<EndValue>,
    detail: String,
    statuses: Vec<Status>,
    graded_local: bool,
}

impl Outcome {
    fn compare(holds: bool, left: EndValue, right: EndValue, detail: String, statuses: Vec<Status>) -> Outcome {
        let certified = statuses.iter().all(|s| *s == Status::Certified);
        let (verdict, reason) = if !certified {
            (Verdict::Skipped, Some("uncertified window".to_string()))
        } else if holds {
            (Verdict::Holds, None)
        } else {
            (Verdict::Fails, None)
        };
        Outcome {
            verdict,
            reason,
            left: Some(left),
            right: Some(right),
            detail,
            statuses,
            graded_local: false,
        }
    }

    fn skip(reason: impl Into<String>) -> Outcome {
        Outcome {
            verdict: Verdict::Skipped,
            reason: Some(reason.into()),
            left: None,
            right: None,
            detail: String::new(),
            statuses: Vec::new(),
            graded_local: false,
        }
    }

    fn local(mut self) -> Outcome {
        self.graded_local = true;
        self
    }
}

fn fin(v: Option<usize>) -> EndValue {
    EndValue::from_option(v.map(|x| x as i64))
}

fn base_polys(base: &Ring, gens: &[Monomial]) -> Vec<Polynomial> {
    gens.iter().map(|g| Polynomial::monomial(base, g.clone())).collect()
}

fn is_ring_itself(p: &Presentation) -> bool {
    p.rank() == 1 && p.relations.iter().all(|v| v.is_zero()) && p.free.degrees[0].coarse == 0
}

fn ex21(cx: &Context) -> Result<Outcome> {
    let inst = cx.inst;
    let Some(m0) = &inst.x_zero else {
        return Ok(Outcome::skip("module is not a base module with x acting as zero"));
    };
    let ring = cx.ring();
    let maximal: Vec<Monomial> = (0..ring.m()).map(|j| ring.var(j)).collect();
    let big = reg_wrt(&inst.module, &CechSpec::plus_r_plus(ring, &maximal), 0, &cx.opts.cech)?;
    let rp = cx.r_plus()?;
    let d = fin(krull_dimension(m0));
    let holds = big.reg == d && rp.reg == EndValue::Finite(0);
    Ok(Outcome::compare(
        holds,
        big.reg,
        rp.reg,
        format!("reg wrt m0+R+ = {}, reg wrt R+ = {}, dim M0 = {d}", big.reg, rp.reg),
        vec![big.status, rp.status],
    )
    .local())
}

fn prop23(cx: &Context) -> Result<Outcome> {
    let inst = cx.inst;
    let base = inst.base_ring();
    let ara = ara_bound(&base, &inst.a0_base())?;
    let (a, r) = (cx.a0_plus()?, cx.r_plus()?);
    let right = r.reg.plus(ara.upper as i64);
    Ok(Outcome::compare(
        a.reg <= right,
        a.reg,
        right,
        format!(
            "reg wrt R+ = {}, ara in [{}, {}]{}",
            r.reg,
            ara.lower,
            ara.upper,
            if ara.exact { " (exact)" } else { " (upper bound used)" }
        ),
        vec![a.status, r.status],
    ))
}

fn thm25(cx: &Context) -> Result<Outcome> {
    let inst = cx.inst;
    let Some(m0) = &inst.base else {
        return Ok(Outcome::skip("module is not a polynomial module"));
    };
    let t = inst.ring.t();
    let a0 = inst.a0_base();
    let a = cx.a0_plus()?;
    let cd = cohomological_dimension(m0, &CechSpec::new(&m0.ring, a0.clone())?, &cx.opts.cech)?;
    let pm = reg_polynomial_module(m0, &a0, t, &cx.opts.cech)?;
    let g = grade(&base_polys(&m0.ring, &a0), m0)?;
    let ara = ara_bound(&m0.ring, &a0)?;
    let routes_agree = cd.lower == cd.upper;
    let pinched = a0.is_empty() || (fin(g) <= cd.lower && cd.upper <= EndValue::Finite(ara.upper as i64));
    let ends_ok = a
        .entries
        .iter()
        .all(|e| e.end.is_minus_infinity() || e.end == EndValue::Finite(-(t as i64)));
    let pattern_ok = a.entries.iter().map(|e| e.end).eq(pm.predicted_ends.iter().copied());
    let routes: Vec<String> = cd.routes.iter().map(|(n, v)| format!("{n} {v}")).collect();
    Ok(Outcome::compare(
        routes_agree && pinched && ends_ok && pattern_ok && a.reg == cd.lower,
        a.reg,
        cd.lower,
        format!(
            "cd routes: {}; grade {} <= cd <= ara {}; ends {}",
            routes.join(", "),
            fin(g),
            ara.upper,
            a.entries.iter().map(|e| e.end.to_string()).collect::<Vec<_>>().join(" ")
        ),
        vec![a.status, pm.status],
    ))
}

fn cor26(cx: &Context) -> Result<Outcome> {
    let inst = cx.inst;
    let Some(m0) = &inst.base else {
        return Ok(Outcome::skip("module is not a polynomial module"));
    };
    let a0 = inst.a0_base();
    let n = a0.len();
    if n == 0 {
        return Ok(Outcome::skip("a0 is zero"));
    }
    if grade(&base_polys(&m0.ring, &a0), m0)? != Some(n) {
        return Ok(Outcome::skip("a0 is not generated by an M0-regular sequence"));
    }
    let a = cx.a0_plus()?;
    let ara = ara_bound(&m0.ring, &a0)?;
    let n = EndValue::Finite(n as i64);
    Ok(Outcome::compare(
        a.reg == n && EndValue::Finite(ara.upper as i64) == n,
        a.reg,
        n,
        format!("ara bound [{}, {}], grade pins ara = {n}", ara.lower, ara.upper),
        vec![a.status],
    ))
}

fn cor28(cx: &Context) -> Result<Outcome> {
    let inst = cx.inst;
    let Some(m0) = &inst.base else {
        return Ok(Outcome::skip("module is not a polynomial module"));
    };
    if !is_ring_itself(m0) {
        return Ok(Outcome::skip("module is not R"));
    }
    let a0 = inst.a0_base();
    if !a0.iter().all(Monomial::is_squarefree) {
        return Ok(Outcome::skip("a0 is not squarefree"));
    }
    let base = &m0.ring;
    let a = cx.a0_plus()?;
    let q = Presentation::quotient(base, &base_polys(base, &a0))?;
    let pd = fin(projective_dimension(&q)?);
    let (d0, dq) = (depth_via_ext(m0)?, depth_via_ext(&q)?);
    let ab = depth_ab(&q)?;
    let diff = match (d0, dq) {
        (Some(x), Some(y)) => EndValue::Finite(x - y),
        _ => EndValue::MinusInfinity,
    };
    Ok(Outcome::compare(
        a.reg == pd && pd == diff && ab == dq,
        a.reg,
        diff,
        format!(
            "pd(R0/a0) = {pd}, depth R0 = {}, depth R0/a0 = {} (Auslander-Buchsbaum {})",
            fin(d0.map(|x| x as usize)),
            fin(dq.map(|x| x as usize)),
            fin(ab.map(|x| x as usize))
        ),
        vec![a.status],
    ))
}

fn cor29(cx: &Context) -> Result<Outcome> {
    let inst = cx.inst;
    let Some(m0) = &inst.base else {
        return Ok(Outcome::skip("module is not a polynomial module"));
    };
    let base = &m0.ring;
    let m = base.m();
    let a0 = base_polys(base, &inst.a0_base());
    let a = cx.a0_plus()?;
    let mut best = EndValue::MinusInfinity;
    let mut used = 0;
    for mask in 0u64..1 << m {
        let mut gens = a0.clone();
        let b0: Vec<Polynomial> = (0..m).filter(|j| mask >> j & 1 == 1).map(|j| Polynomial::var(base, j)).collect();
        gens.extend(b0.iter().cloned());
        if !(0..m).all(|j| radical_membership(base, &Polynomial::var(base, j), &gens)) {
            continue;
        }
        used += 1;
        best = best.max(fin(krull_dimension(&m0.mod_ideal(&b0))));
    }
    Ok(Outcome::compare(
        a.reg >= best,
        a.reg,
        best,
        format!("sup over {used} ideals b0 generated by variables with rad(a0 + b0) = m0"),
        vec![a.status],
    )
    .local())
}

fn def210(cx: &Context) -> Result<Outcome> {
    let inst = cx.inst;
    let ring = cx.ring();
    let rp: Vec<Polynomial> = (ring.m()..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
    let Some(g) = grade(&rp, &inst.module)? else {
        return Ok(Outcome::skip("R+ M = M"));
    };
    let r = cx.r_plus()?;
    let first = r.entries.iter().position(|e| !e.end.is_minus_infinity());
    let cd = r.cd.lower;
    let single = cx.relative_cm()?.is_some();
    let rel_cm = EndValue::Finite(g as i64) == cd;
    Ok(Outcome::compare(
        first == Some(g) && rel_cm == single,
        EndValue::Finite(g as i64),
        cd,
        format!(
            "grade_R+ = {g}, cd_R+ = {cd}: {}",
            if rel_cm { "relative Cohen-Macaulay" } else { "not relative Cohen-Macaulay" }
        ),
        vec![r.status],
    ))
}

fn prop211(cx: &Context, a0: &[Monomial]) -> Result<std::result::Result<Prop211Report, Outcome>> {
    let inst = cx.inst;
    if cx.relative_cm()?.is_none() {
        return Ok(Err(Outcome::skip("not relative Cohen-Macaulay with respect to R+")));
    }
    match prop211_reg(&inst.module, a0) {
        Ok(r) => Ok(Ok(r)),
        Err(Error::Precondition(s)) | Err(Error::RegimeViolation(s)) => Ok(Err(Outcome::skip(s))),
        Err(e) => Err(e),
    }
}

fn prop211_check(cx: &Context) -> Result<Outcome> {
    let r = match prop211(cx, &cx.inst.a0_base())? {
        Ok(r) => r,
        Err(o) => return Ok(o),
    };
    let a = cx.a0_plus()?;
    Ok(Outcome::compare(
        a.reg == r.reg,
        a.reg,
        r.reg,
        format!("g = {}, {} x-degree layers", r.g, r.entries.len()),
        vec![a.status],
    ))
}

fn cor212i(cx: &Context) -> Result<Outcome> {
    let inst = cx.inst;
    let ring = cx.ring();
    let m = ring.m();
    let maximal: Vec<Monomial> = (0..m).map(|j| Monomial::var(m, j)).collect();
    let r = match prop211(cx, &maximal)? {
        Ok(r) => r,
        Err(o) => return Ok(o),
    };
    let ys: Vec<Polynomial> = (0..m).map(|j| Polynomial::var(ring, j)).collect();
    let d = fin(krull_dimension(&inst.module.mod_ideal(&ys)));
    let full: Vec<Monomial> = (0..m).map(|j| ring.var(j)).collect();
    let direct = reg_wrt(&inst.module, &CechSpec::plus_r_plus(ring, &full), 0, &cx.opts.cech)?;
    let rp = cx.r_plus()?;
    let bound = d.plus(m as i64);
    let equal = EndValue::Finite(r.g as i64) == d && direct.reg == r.reg_by_dim;
    let printed = r.reg_by_dim <= bound;
    let via_pieces = r.reg_by_dim <= rp.reg.plus(m as i64);
    Ok(Outcome::compare(
        equal && printed,
        direct.reg,
        r.reg_by_dim,
        format!(
            "d = {d}, g = {}; equality {}; bound dim R0 + d = {bound} {}; bound dim R0 + reg wrt R+ = {} {}",
            r.g,
            if equal { "holds" } else { "fails" },
            if printed { "holds" } else { "fails" },
            rp.reg.plus(m as i64),
            if via_pieces { "holds" } else { "fails" }
        ),
        vec![direct.status, rp.status],
    )
    .local())
}

fn cor212ii(cx: &Context) -> Result<Outcome> {
    let (a, r) = (cx.a0_plus()?, cx.r_plus()?);
    let mut o = Outcome::compare(
        r.reg <= a.reg,
        r.reg,
        a.reg,
        String::new(),
        vec![a.status, r.status],
    );
    if cx.relative_cm()?.is_none() {
        o.detail = format!(
            "inequality {} outside the hypothesis",
            if o.verdict == Verdict::Fails { "fails" } else { "holds" }
        );
        o.verdict = Verdict::Skipped;
        o.reason = Some("not relative Cohen-Macaulay with respect to R+".into());
    }
    Ok(o.local())
}

fn thm213(cx: &Context) -> Result<Outcome> {
    let inst = cx.inst;
    let ring = cx.ring();
    let t = ring.t();
    if cx.relative_cm()? != Some(t) {
        return Ok(Outcome::skip(format!("M is not relative Cohen-Macaulay of rank {t} with respect to R+")));
    }
    let r = Presentation::ring_module(ring);
    let rr = reg_wrt(&r, &CechSpec::plus_r_plus(ring, &inst.a0), 0, &cx.opts.cech)?;
    if rr.reg != EndValue::Finite(0) {
        return Ok(Outcome::skip(format!("reg of R wrt a0+R+ is {}, not 0", rr.reg)));
    }
    let res = ResolutionChain::compute(&inst.module, ring.nvars() + 1)?;
    let formula = EndValue::Finite(res.reg_thm213()?);
    let a = cx.a0_plus()?;
    Ok(Outcome::compare(
        a.reg == formula,
        a.reg,
        formula,
        format!("pd = {}, shifts {:?}", fin(res.length()), res.shifts()),
        vec![a.status, rr.status],
    )
    .local())
}

fn reg_res(cx: &Context) -> Result<Outcome> {
    let inst = cx.inst;
    if inst.ring.m() != 0 {
        return Ok(Outcome::skip("base ring is not a field"));
    }
    let res = ResolutionChain::compute(&inst.module, inst.ring.nvars() + 1)?;
    let formula = EndValue::Finite(res.reg_thm213()?);
    let r = cx.r_plus()?;
    Ok(Outcome::compare(
        r.reg == formula,
        r.reg,
        formula,
        format!("betti totals {:?}", res.betti().totals()),
        vec![r.status],
    ))
}

fn cor35i(cx: &Context) -> Result<Outcome> {
    let inst = cx.inst;
    let Some(m0) = &inst.base else {
        return Ok(Outcome::skip("module is not a polynomial module"));
    };
    if !is_ring_itself(m0) {
        return Ok(Outcome::skip("module is not S"));
    }
    let base = &m0.ring;
    let a0 = inst.a0_base();
    let q = Presentation::quotient(base, &base_polys(base, &a0))?;
    let f = match f_depth_probe(&q, cx.opts.s_max) {
        Ok(f) => f,
        Err(Error::NonPrimeField(_)) => return Ok(Outcome::skip("characteristic zero")),
        Err(e) => return Err(e),
    };
    let a = cx.a0_plus()?;
    if !f.certified {
        let mut o = Outcome::skip(format!("F-depth undecided at s_max = {}", cx.opts.s_max));
        o.left = Some(a.reg);
        return Ok(o);
    }
    let m = base.m() as i64;
    let right = match f.f_depth {
        Some(fd) => EndValue::Finite(m - fd as i64),
        None => EndValue::MinusInfinity,
    };
    let cd = EndValue::Finite(monomial_cd(base, &a0)? as i64);
    Ok(Outcome::compare(
        a.reg == right && cd == right,
        a.reg,
        right,
        format!(
            "p = {}, F-depth(R0/a0) = {}, cd via pd = {cd}",
            f.p,
            fin(f.f_depth)
        ),
        vec![a.status],
    ))
}

fn astar(cx: &Context) -> Result<Outcome> {
    let (a, r) = (cx.a0_plus()?, cx.r_plus()?);
    Ok(Outcome::compare(
        a.a_star == r.a_star,
        a.a_star,
        r.a_star,
        "a* wrt a0+R+ against a* wrt R+".into(),
        vec![a.status, r.status],
    ))
}

fn run(statement: &str, cx: &Context) -> Result<Outcome> {
    match statement {
        "Ex2.1" => ex21(cx),
        "Prop2.3" => prop23(cx),
        "Thm2.5" => thm25(cx),
        "Cor2.6" => cor26(cx),
        "Cor2.8" => cor28(cx),
        "Cor2.9" => cor29(cx),
        "Def2.10" => def210(cx),
        "Prop2.11" => prop211_check(cx),
        "Cor2.12i" => cor212i(cx),
        "Cor2.12ii" => cor212ii(cx),
        "Thm2.13" => thm213(cx),
        "RegRes" => reg_res(cx),
        "Cor3.5i" => cor35i(cx),
        "AstarEq" => astar(cx),
        other => Err(Error::UnknownStatement(other.to_string())),
    }
}

pub fn verify_in(statement: &str, cx: &Context) -> Result<CheckResult> {
    let o = run(statement, cx)?;
    let mut assumptions = Vec::new();
    if o.graded_local && cx.inst.ring.m() > 0 {
        assumptions.push(GRADED_LOCAL.to_string());
    }
    Ok(CheckResult {
        statement: statement.to_string(),
        instance: cx.inst.id,
        description: cx.inst.describe(),
        verdict: o.verdict,
        reason: o.reason,
        left: o.left,
        right: o.right,
        detail: o.detail,
        statuses: o.statuses,
        assumptions,
    })
}

pub fn verify(statement: &str, inst: &Instance) -> Result<CheckResult> {
    verify_with(statement, inst, &VerifyOptions::default())
}

pub fn verify_with(statement: &str, inst: &Instance, opts: &VerifyOptions) -> Result<CheckResult> {
    verify_in(statement, &Context::new(inst, opts))
}

/// Every applicable statement on every instance, ordered by statement then
/// instance. `only` restricts to one statement id.
pub fn verify_all(instances: &[Instance], only: Option<&str>, opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    if let Some(s) = only {
        if !STATEMENTS.contains(&s) {
            return Err(Error::UnknownStatement(s.to_string()));
        }
    }
    let per: Vec<Vec<CheckResult>> = instances
        .par_iter()
        .map(|inst| {
            let cx = Context::new(inst, opts);
            inst.statements()
                .into_iter()
                .filter(|s| only.is_none_or(|o| o == *s))
                .map(|s| verify_in(s, &cx))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<CheckResult> = per.into_iter().flatten().collect();
    out.sort_by_key(|r| (STATEMENTS.iter().position(|s| *s == r.statement), r.instance));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::corpus::corpus;
    use super::*;
    use crate::ring::RingSpec;
    use crate::scalar::Field;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn base_module_example() {
        let inst = Instance::base_module(0, Field::Rationals, 2, 1).unwrap();
        let r = verify("Ex2.1", &inst).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!((r.left, r.right), (Some(EndValue::Finite(2)), Some(EndValue::Finite(0))));
    }

    #[test]
    fn triangle_polynomial_module() {
        let base = RingSpec::base_ring(Field::Rationals, 3);
        let a0 = [m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[1, 0, 1])];
        let inst = Instance::polynomial(0, &Presentation::ring_module(&base), &a0, 2).unwrap();
        let r = verify("Thm2.5", &inst).unwrap();
        assert_eq!(r.verdict, Verdict::Holds, "{}", r.detail);
        assert_eq!(r.left, Some(EndValue::Finite(2)));
    }

    #[test]
    fn regular_sequence_equality() {
        let base = RingSpec::base_ring(Field::Rationals, 2);
        let a0 = [m(&[1, 0]), m(&[0, 1])];
        let inst = Instance::polynomial(0, &Presentation::ring_module(&base), &a0, 1).unwrap();
        let r = verify("Cor2.6", &inst).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.left, Some(EndValue::Finite(2)));
    }

    #[test]
    fn unknown_statement() {
        let inst = Instance::base_module(0, Field::Rationals, 1, 1).unwrap();
        assert!(matches!(verify("Thm9.9", &inst), Err(Error::UnknownStatement(_))));
    }

    #[test]
    fn small_corpus_has_no_failures() {
        let c = corpus(0, 7).unwrap();
        let res = verify_all(&c, None, &VerifyOptions::default()).unwrap();
        for r in &res {
            assert_ne!(r.verdict, Verdict::Fails, "{} on {}: {}", r.statement, r.description, r.detail);
        }
    }

    #[test]
    fn thm213_eligible_count_is_frozen() {
        let c = corpus(1, 20).unwrap();
        let res = verify_all(&c, Some("Thm2.13"), &VerifyOptions::default()).unwrap();
        let eligible: Vec<usize> = res.iter().filter(|r| r.verdict != Verdict::Skipped).map(|r| r.instance).collect();
        assert_eq!(eligible, vec![4, 11, 15, 17, 18]);
        assert!(res.iter().all(|r| r.verdict != Verdict::Fails));
    }

    #[test]
    fn printed_bound_fails_on_finite_length_module() {
        let ring = RingSpec::standard(Field::Rationals, 0, 1).unwrap();
        let x3 = Polynomial::monomial(&ring, m(&[3]));
        let inst = Instance::general(0, Presentation::quotient(&ring, &[x3]).unwrap(), &[]);
        let r = verify("Cor2.12i", &inst).unwrap();
        assert_eq!(r.left, Some(EndValue::Finite(2)));
        assert_eq!(r.right, Some(EndValue::Finite(2)));
        assert_eq!(r.verdict, Verdict::Fails);
        assert!(r.detail.contains("equality holds"));
    }
}
