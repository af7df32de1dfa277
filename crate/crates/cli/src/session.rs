//! Semantic checks: builds the ring, ideals and modules of a script.

use std::collections::BTreeMap;

use regcd_core::ring::Regime;
use regcd_core::{
    DegreeMode, Field, FreeModule, GenDegree, ModuleOrder, MultiDegree, Polynomial, Presentation, Ring, RingSpec,
    Vector,
};

use crate::dsl::{Command, Decl, Expr, FieldDecl, IdealRef, ModuleRef, Pos, Script, Shift};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("semantic error at {pos}: {message}")]
pub struct SemanticError {
    pub pos: Pos,
    pub message: String,
}

fn err<T>(pos: Pos, message: impl Into<String>) -> Result<T, SemanticError> {
    Err(SemanticError {
        pos,
        message: message.into(),
    })
}

#[derive(Clone, Debug)]
pub struct Session {
    pub ring: Option<Ring>,
    pub ideals: BTreeMap<String, Vec<Polynomial>>,
    pub modules: BTreeMap<String, Presentation>,
    pub commands: Vec<(Pos, Command)>,
}

struct Builder {
    field: Field,
    base: Vec<String>,
    positive: Vec<String>,
    ring: Option<Ring>,
}

impl Builder {
    fn ring(&mut self, pos: Pos) -> Result<Ring, SemanticError> {
        if let Some(r) = &self.ring {
            return Ok(r.clone());
        }
        match RingSpec::new(self.field, self.base.clone(), self.positive.clone()) {
            Ok(r) => {
                self.ring = Some(r.clone());
                Ok(r)
            }
            Err(e) => err(pos, e.to_string()),
        }
    }
}

pub fn eval(ring: &Ring, e: &Expr) -> Result<Polynomial, SemanticError> {
    Ok(match e {
        Expr::Int(n) => Polynomial::constant(ring, ring.field.from_i64(*n)),
        Expr::Var(s, p) => match ring.var_index(s) {
            Some(i) => Polynomial::var(ring, i),
            None => return err(*p, format!("unknown variable `{s}`")),
        },
        Expr::Add(a, b) => eval(ring, a)?.add(&eval(ring, b)?, ring),
        Expr::Sub(a, b) => eval(ring, a)?.sub(&eval(ring, b)?, ring),
        Expr::Mul(a, b) => eval(ring, a)?.mul(&eval(ring, b)?, ring),
        Expr::Neg(a) => eval(ring, a)?.neg(),
        Expr::Pow(a, k) => eval(ring, a)?.pow(*k, ring),
    })
}

fn graded(ring: &Ring, f: &Polynomial, pos: Pos) -> Result<(), SemanticError> {
    let mode = match ring.regime {
        Regime::General => DegreeMode::Coarse,
        Regime::Multigraded => DegreeMode::Fine,
    };
    if f.degree(ring, mode) == regcd_core::Degree::NotHomogeneous {
        let what = match ring.regime {
            Regime::General => "homogeneous",
            Regime::Multigraded => "fine-multihomogeneous in the MULTIGRADED regime",
        };
        return err(pos, format!("generator {} is not {what}", f.render(ring)));
    }
    Ok(())
}

fn module(ring: &Ring, shifts: &[Shift], matrix: &[Vec<Expr>], pos: Pos) -> Result<Presentation, SemanticError> {
    let n = ring.nvars();
    let mut degrees = Vec::new();
    for s in shifts {
        degrees.push(match (s, ring.regime) {
            (Shift::Coarse(a), Regime::General) => GenDegree::coarse(-a),
            (Shift::Fine(v), _) if v.len() == n => GenDegree::fine(MultiDegree(v.iter().map(|a| -a).collect()), ring),
            (Shift::Fine(v), _) => return err(pos, format!("fine shift has {} entries, the ring has {n} variables", v.len())),
            (Shift::Coarse(_), Regime::Multigraded) => {
                return err(pos, "shifts must be fine tuples in the MULTIGRADED regime")
            }
        });
    }
    let rank = degrees.len();
    let ncols = matrix.first().map_or(0, Vec::len);
    if !matrix.is_empty() && (matrix.len() != rank || matrix.iter().any(|r| r.len() != ncols)) {
        return err(pos, format!("matrix must have {rank} rows of equal length"));
    }
    let order = ModuleOrder::top(ring);
    let mut cols = Vec::new();
    for c in 0..ncols {
        let coords = matrix
            .iter()
            .map(|row| eval(ring, &row[c]))
            .collect::<Result<Vec<_>, _>>()?;
        let v = Vector::from_coords(&order, &coords);
        if !v.is_zero() {
            cols.push(v);
        }
    }
    Presentation::new(ring, FreeModule::new(degrees), cols).map_err(|e| {
        let msg = e.to_string().replace("column", "matrix column");
        SemanticError { pos, message: msg }
    })
}

impl Session {
    pub fn build(script: &Script) -> Result<Session, SemanticError> {
        let mut b = Builder {
            field: Field::Rationals,
            base: Vec::new(),
            positive: Vec::new(),
            ring: None,
        };
        let mut ideals = BTreeMap::new();
        let mut modules = BTreeMap::new();
        let mut commands = Vec::new();
        for st in &script.stmts {
            let pos = st.pos;
            let frozen = b.ring.is_some();
            match &st.decl {
                Decl::Field(_) | Decl::Base(_) | Decl::Positive(_) if frozen => {
                    return err(pos, "ring declarations must precede ideals, modules and commands")
                }
                Decl::Field(FieldDecl::Rationals) => b.field = Field::Rationals,
                Decl::Field(FieldDecl::Prime(p)) => {
                    if *p < 2 {
                        return err(pos, format!("{p} is not prime"));
                    }
                    b.field = Field::prime(*p as u64).map_err(|e| SemanticError {
                        pos,
                        message: e.to_string(),
                    })?;
                }
                Decl::Base(v) => b.base = v.clone(),
                Decl::Positive(v) => b.positive = v.clone(),
                Decl::Ideal(name, gens) => {
                    let ring = b.ring(pos)?;
                    if name == "R" || ideals.contains_key(name) || modules.contains_key(name) {
                        return err(pos, format!("name `{name}` is already in use"));
                    }
                    let mut polys = Vec::new();
                    for g in gens {
                        let f = eval(&ring, g)?;
                        graded(&ring, &f, pos)?;
                        polys.push(f);
                    }
                    ideals.insert(name.clone(), polys);
                }
                Decl::Module { name, shifts, matrix } => {
                    let ring = b.ring(pos)?;
                    if name == "R" || ideals.contains_key(name) || modules.contains_key(name) {
                        return err(pos, format!("name `{name}` is already in use"));
                    }
                    modules.insert(name.clone(), module(&ring, shifts, matrix, pos)?);
                }
                Decl::Command(c) => {
                    if !matches!(c, Command::Verify { .. }) {
                        b.ring(pos)?;
                    }
                    commands.push((pos, c.clone()));
                }
            }
        }
        let s = Session {
            ring: b.ring,
            ideals,
            modules,
            commands,
        };
        for (pos, c) in &s.commands {
            s.check_command(*pos, c)?;
        }
        Ok(s)
    }

    fn check_command(&self, pos: Pos, c: &Command) -> Result<(), SemanticError> {
        match c {
            Command::Gb(n, p) => {
                if !self.ideals.contains_key(n) && !self.modules.contains_key(n) {
                    return err(*p, format!("unknown ideal or module `{n}`"));
                }
            }
            Command::Resolve(m, _) | Command::Betti(m) | Command::Fdepth(m) => {
                self.module(m)?;
            }
            Command::Reg { module, ideal, .. }
            | Command::End { module, ideal, .. }
            | Command::Cd { module, ideal }
            | Command::Grade { ideal, module } => {
                self.module(module)?;
                self.ideal(ideal)?;
            }
            Command::Verify { statement, .. } => {
                if statement != "all" && !regcd_core::verify::STATEMENTS.contains(&statement.as_str()) {
                    return err(pos, format!("unknown statement id `{statement}`"));
                }
            }
        }
        Ok(())
    }

    fn ring(&self) -> &Ring {
        self.ring.as_ref().expect("ring is built before any command that needs it")
    }

    pub fn module(&self, m: &ModuleRef) -> Result<Presentation, SemanticError> {
        let ring = self.ring();
        match m {
            ModuleRef::Ring => Ok(Presentation::ring_module(ring)),
            ModuleRef::Quotient(i, p) => match self.ideals.get(i) {
                Some(g) => Presentation::quotient(ring, g).map_err(|e| SemanticError {
                    pos: *p,
                    message: e.to_string(),
                }),
                None => err(*p, format!("unknown ideal `{i}`")),
            },
            ModuleRef::Named(n, p) => match self.modules.get(n) {
                Some(x) => Ok(x.clone()),
                None => err(*p, format!("unknown module `{n}`")),
            },
        }
    }

    pub fn ideal(&self, r: &IdealRef) -> Result<Vec<Polynomial>, SemanticError> {
        let ring = self.ring();
        Ok(match r {
            IdealRef::RPlus => (ring.m()..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect(),
            IdealRef::Named(n, p) => match self.ideals.get(n) {
                Some(g) => g.clone(),
                None => return err(*p, format!("unknown ideal `{n}`")),
            },
            IdealRef::Gens(g) => g.iter().map(|e| eval(ring, e)).collect::<Result<_, _>>()?,
            IdealRef::Sum(parts) => {
                let mut out = Vec::new();
                for p in parts {
                    out.extend(self.ideal(p)?);
                }
                out
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;

    fn build(src: &str) -> Result<Session, SemanticError> {
        Session::build(&parse(src).unwrap())
    }

    #[test]
    fn general_regime_ideal() {
        let s = build("field QQ; positive x1 x2; ideal I = [x1^2, x1*x2, x2^2];").unwrap();
        assert_eq!(s.ring.unwrap().regime, Regime::General);
        assert_eq!(s.ideals["I"].len(), 3);
    }

    #[test]
    fn rejects_composite_characteristic() {
        let e = build("field Fp 6; positive x1;").unwrap_err();
        assert!(e.message.contains("6 is not prime"), "{}", e.message);
    }

    #[test]
    fn rejects_mixed_entry_in_multigraded_regime() {
        let e = build("field QQ; base y1; positive x1; module M = coker { shifts: [(0,0)], matrix: [[y1 + x1]] };")
            .unwrap_err();
        assert!(e.message.contains("not"), "{}", e.message);
        assert_eq!(e.pos.col, 33);
    }

    #[test]
    fn unknown_names() {
        assert!(build("field QQ; positive x1; ideal I = [z];").is_err());
        let e = build("field QQ; positive x1; betti N;").unwrap_err();
        assert!(e.message.contains("unknown module"));
    }
}
