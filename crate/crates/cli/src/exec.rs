//! Runs the commands of a checked session.

use serde::{Serialize, Serializer};

use regcd_core::cech::{
    cohomological_dimension, end_of_cohomology, reg_wrt, CdReport, CechOptions, CechSpec, EndReport, EndValue, Status,
};
use regcd_core::ext::grade;
use regcd_core::frobenius::{f_depth_probe, FDepthReport};
use regcd_core::groebner::GroebnerBasis;
use regcd_core::ideal::ideal_gb;
use regcd_core::resolution::{BettiTable, ResolutionChain};
use regcd_core::verify::{corpus, verify_all, CheckResult, Verdict, VerifyOptions};
use regcd_core::{Error, Presentation};

use crate::dsl::{Command, Pos};
use crate::session::Session;

#[derive(Clone, Debug, Default)]
pub struct Flags {
    pub json: bool,
    pub floor: Option<i64>,
    pub smax: Option<u32>,
}

impl Flags {
    pub fn cech(&self) -> CechOptions {
        CechOptions {
            floor: self.floor,
            ..CechOptions::default()
        }
    }

    pub fn verify(&self) -> VerifyOptions {
        let mut v = VerifyOptions {
            cech: self.cech(),
            ..VerifyOptions::default()
        };
        if let Some(s) = self.smax {
            v.s_max = s;
        }
        v
    }
}

fn betti_json<S: Serializer>(b: &BettiTable, s: S) -> Result<S::Ok, S::Error> {
    b.to_json().serialize(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub holds: usize,
    pub fails: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(results: &[CheckResult]) -> Summary {
        let count = |v: Verdict| results.iter().filter(|r| r.verdict == v).count();
        Summary {
            holds: count(Verdict::Holds),
            fails: count(Verdict::Fails),
            skipped: count(Verdict::Skipped),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Gb {
        elements: Vec<String>,
    },
    Resolution {
        length: Option<usize>,
        minimal: bool,
        shifts: Vec<Vec<i64>>,
    },
    Betti {
        #[serde(serialize_with = "betti_json")]
        table: BettiTable,
    },
    Reg(EndReport),
    End {
        i: usize,
        end: EndValue,
        status: Status,
    },
    Cd(CdReport),
    Grade {
        grade: Option<usize>,
    },
    Fdepth(FDepthReport),
    Verify {
        summary: Summary,
        results: Vec<CheckResult>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub line: usize,
    pub result: Payload,
}

#[derive(Debug, thiserror::Error)]
#[error("line {}: `{command}`: {source}", pos.line)]
pub struct CommandError {
    pub pos: Pos,
    pub command: String,
    pub source: Error,
}

impl Report {
    pub fn fails(&self) -> usize {
        match &self.result {
            Payload::Verify { summary, .. } => summary.fails,
            _ => 0,
        }
    }
}

pub fn run_verify(statement: &str, seed: u64, size: usize, flags: &Flags) -> Result<Vec<CheckResult>, Error> {
    let c = corpus(seed, size)?;
    let only = (statement != "all").then_some(statement);
    verify_all(&c, only, &flags.verify())
}

fn exec_one(s: &Session, c: &Command, flags: &Flags) -> Result<Payload, Error> {
    let module = |m| s.module(m).map_err(|e| Error::Precondition(e.to_string()));
    let ideal = |i| s.ideal(i).map_err(|e| Error::Precondition(e.to_string()));
    let ring = || s.ring.clone().expect("checked by the session");
    Ok(match c {
        Command::Gb(n, _) => {
            let elements = match s.ideals.get(n) {
                Some(g) => ideal_gb(&ring(), g).render(),
                None => GroebnerBasis::of_presentation(&s.modules[n]).render(),
            };
            Payload::Gb { elements }
        }
        Command::Resolve(m, len) => {
            let p: Presentation = module(m)?;
            let r = ResolutionChain::compute(&p, len.unwrap_or(p.ring.nvars() + 1))?;
            Payload::Resolution {
                length: r.length(),
                minimal: r.is_minimal(),
                shifts: r.shifts(),
            }
        }
        Command::Betti(m) => {
            let p = module(m)?;
            let r = ResolutionChain::compute(&p, p.ring.nvars() + 1)?;
            Payload::Betti { table: r.betti() }
        }
        Command::Reg { module: m, ideal: i, level } => {
            let p = module(m)?;
            let c = CechSpec::from_polys(&p.ring, &ideal(i)?)?;
            Payload::Reg(reg_wrt(&p, &c, level.unwrap_or(0), &flags.cech())?)
        }
        Command::End { module: m, ideal: i, i: k } => {
            let p = module(m)?;
            let c = CechSpec::from_polys(&p.ring, &ideal(i)?)?;
            let (end, status) = end_of_cohomology(&p, &c, *k, &flags.cech())?;
            Payload::End { i: *k, end, status }
        }
        Command::Cd { module: m, ideal: i } => {
            let p = module(m)?;
            let c = CechSpec::from_polys(&p.ring, &ideal(i)?)?;
            Payload::Cd(cohomological_dimension(&p, &c, &flags.cech())?)
        }
        Command::Grade { ideal: i, module: m } => Payload::Grade {
            grade: grade(&ideal(i)?, &module(m)?)?,
        },
        Command::Fdepth(m) => Payload::Fdepth(f_depth_probe(&module(m)?, flags.smax.unwrap_or(4))?),
        Command::Verify { statement, seed, size } => {
            let results = run_verify(statement, *seed, *size, flags)?;
            Payload::Verify {
                summary: Summary::of(&results),
                results,
            }
        }
    })
}

/// Runs every command in order; stops at the first engine error and returns
/// the reports produced so far alongside it.
pub fn execute(s: &Session, flags: &Flags) -> (Vec<Report>, Option<CommandError>) {
    let mut out = Vec::new();
    for (pos, c) in &s.commands {
        match exec_one(s, c, flags) {
            Ok(result) => out.push(Report {
                command: c.to_string(),
                line: pos.line,
                result,
            }),
            Err(source) => {
                return (
                    out,
                    Some(CommandError {
                        pos: *pos,
                        command: c.to_string(),
                        source,
                    }),
                )
            }
        }
    }
    (out, None)
}
