//! Text and JSON renderings of reports.

use regcd_core::cech::{EndReport, Method, Status};
use regcd_core::frobenius::{FDepthReport, FVerdict};
use regcd_core::verify::{CheckResult, Verdict};

use crate::exec::{Payload, Report, Summary};

pub fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

pub fn end_report(r: &EndReport) -> String {
    let method = match r.method {
        Method::FineTypes => "fine types",
        Method::LocalDuality => "local duality",
    };
    let mut out = format!("ideal {} via {method}\n", r.ideal);
    for e in &r.entries {
        out.push_str(&format!("H^{}: end = {} ({})\n", e.i, e.end, e.status));
    }
    if r.status == Status::WindowBounded {
        out.push_str(&format!("window: [{}, {}]\n", r.window.0, r.window.1));
    }
    out.push_str(&format!("a* = {}\n", r.a_star));
    if let (Some(a), Some(eq)) = (r.a_star_r_plus, r.a_star_equal) {
        out.push_str(&format!("a* wrt R+ = {a} ({})\n", if eq { "equal" } else { "different" }));
    }
    if r.level == 0 {
        out.push_str(&format!("reg = {}\n", r.reg));
    } else {
        out.push_str(&format!("reg^{} = {}\n", r.level, r.reg));
    }
    out.push_str(&format!("cd = {}\n", r.cd.upper));
    out.push_str(&format!("status: {}\n", r.status));
    out
}

fn fdepth(r: &FDepthReport) -> String {
    let mut out = format!("p = {}\n", r.p);
    for e in &r.entries {
        let v = match e.verdict {
            FVerdict::FNonvanishing => "F-nonvanishing".to_string(),
            FVerdict::FNilpotentAt(0) => "zero".to_string(),
            FVerdict::FNilpotentAt(s) => format!("F-nilpotent at s = {s}"),
            FVerdict::Undecided(s) => format!("undecided up to s = {s}"),
        };
        out.push_str(&format!("H^{}: {v}", e.i));
        if let Some(w) = &e.witness {
            out.push_str(&format!(" (witness in degree {:?}: {})", w.degree, w.terms.join(" + ")));
        }
        out.push('\n');
    }
    out.push_str(&format!(
        "F-depth = {}{}\n",
        opt(&r.f_depth),
        if r.certified { "" } else { " (not certified)" }
    ));
    out
}

/// Aligned table of check results; skipped rows show their reason.
pub fn checks(results: &[CheckResult]) -> String {
    let rows: Vec<[String; 5]> = results
        .iter()
        .map(|r| {
            let verdict = match r.verdict {
                Verdict::Holds => "HOLDS",
                Verdict::Fails => "FAILS",
                Verdict::Skipped => "SKIPPED",
            };
            let note = match (&r.reason, r.verdict) {
                (Some(reason), Verdict::Skipped) => reason.clone(),
                _ => r.detail.clone(),
            };
            [
                r.statement.clone(),
                format!("#{}", r.instance),
                verdict.to_string(),
                format!("{} | {}", opt(&r.left), opt(&r.right)),
                note,
            ]
        })
        .collect();
    let mut w = [0usize; 4];
    for r in &rows {
        for (k, wk) in w.iter_mut().enumerate() {
            *wk = (*wk).max(r[k].len());
        }
    }
    let mut out = String::new();
    for r in &rows {
        let line = format!(
            "{:w0$}  {:>w1$}  {:w2$}  {:w3$}  {}",
            r[0],
            r[1],
            r[2],
            r[3],
            r[4],
            w0 = w[0],
            w1 = w[1],
            w2 = w[2],
            w3 = w[3]
        );
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn summary(s: &Summary) -> String {
    format!("{} holds, {} fails, {} skipped\n", s.holds, s.fails, s.skipped)
}

pub fn text(r: &Report) -> String {
    let body = match &r.result {
        Payload::Gb { elements } => elements.iter().map(|e| format!("{e}\n")).collect(),
        Payload::Resolution { length, minimal, shifts } => {
            let mut s = format!("length {} ({})\n", opt(length), if *minimal { "minimal" } else { "not minimal" });
            for (i, row) in shifts.iter().enumerate() {
                s.push_str(&format!("F{i}: {row:?}\n"));
            }
            s
        }
        Payload::Betti { table } => table.render(),
        Payload::Reg(e) => end_report(e),
        Payload::End { i, end, status } => format!("H^{i}: end = {end} ({status})\n"),
        Payload::Cd(c) => {
            let routes: Vec<String> = c.routes.iter().map(|(n, v)| format!("{n} {v}")).collect();
            format!(
                "cd in [{}, {}] (routes: {}){}\n",
                c.lower,
                c.upper,
                routes.join(", "),
                if c.equal { ", certified" } else { "" }
            )
        }
        Payload::Grade { grade } => format!("grade = {}\n", opt(grade)),
        Payload::Fdepth(f) => fdepth(f),
        Payload::Verify { summary: s, results } => format!("{}{}", checks(results), summary(s)),
    };
    format!("> {}\n{body}", r.command)
}

pub fn reports(rs: &[Report], as_json: bool) -> String {
    if as_json {
        json(&rs)
    } else {
        rs.iter().map(text).collect::<Vec<_>>().join("\n")
    }
}
