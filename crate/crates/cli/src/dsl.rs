//! Script syntax: lexer, recursive-descent parser and canonical printer.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at {pos}: expected {}, found {found}", expected.join(" or "))]
pub struct SyntaxError {
    pub pos: Pos,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Opt(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Opt(s) => write!(f, "`--{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

const SYMBOLS: &str = ";=[]{}(),+-*^:/";

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, SyntaxError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '.') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse::<i64>().map_err(|_| SyntaxError {
                pos,
                expected: vec!["an integer that fits in 64 bits".into()],
                found: format!("`{s}`"),
            })?;
            out.push((Tok::Int(n), pos));
        } else if c == '-' && chars.get(i + 1) == Some(&'-') && chars.get(i + 2).is_some_and(|c| c.is_ascii_alphabetic()) {
            i += 2;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '-') {
                i += 1;
            }
            out.push((Tok::Opt(chars[start + 2..i].iter().collect()), pos));
        } else if SYMBOLS.contains(c) {
            i += 1;
            out.push((Tok::Sym(c), pos));
        } else {
            return Err(SyntaxError {
                pos,
                expected: vec!["a token".into()],
                found: format!("`{c}`"),
            });
        }
        col += i - start;
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Var(String, Pos),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldDecl {
    Rationals,
    Prime(i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shift {
    Coarse(i64),
    Fine(Vec<i64>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealRef {
    RPlus,
    Named(String, Pos),
    Gens(Vec<Expr>),
    Sum(Vec<IdealRef>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleRef {
    Ring,
    Quotient(String, Pos),
    Named(String, Pos),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Gb(String, Pos),
    Resolve(ModuleRef, Option<usize>),
    Betti(ModuleRef),
    Reg { module: ModuleRef, ideal: IdealRef, level: Option<usize> },
    End { module: ModuleRef, ideal: IdealRef, i: usize },
    Cd { module: ModuleRef, ideal: IdealRef },
    Grade { ideal: IdealRef, module: ModuleRef },
    Fdepth(ModuleRef),
    Verify { statement: String, seed: u64, size: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Field(FieldDecl),
    Base(Vec<String>),
    Positive(Vec<String>),
    Ideal(String, Vec<Expr>),
    Module { name: String, shifts: Vec<Shift>, matrix: Vec<Vec<Expr>> },
    Command(Command),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stmt {
    pub pos: Pos,
    pub decl: Decl,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub stmts: Vec<Stmt>,
}

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_SIZE: usize = 20;

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

type PResult<T> = Result<T, SyntaxError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> PResult<T> {
        Err(SyntaxError {
            pos: self.pos(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        })
    }

    fn is_sym(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn sym(&mut self, c: char) -> PResult<()> {
        if self.is_sym(c) {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&format!("`{c}`")])
        }
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == w)
    }

    fn word(&mut self, w: &str) -> PResult<()> {
        if self.is_word(w) {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&format!("`{w}`")])
        }
    }

    fn ident(&mut self, what: &str) -> PResult<(String, Pos)> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                let p = self.pos();
                self.bump();
                Ok((s, p))
            }
            _ => self.fail(&[what]),
        }
    }

    fn int(&mut self) -> PResult<i64> {
        let neg = if self.is_sym('-') {
            self.bump();
            true
        } else {
            false
        };
        match *self.peek() {
            Tok::Int(n) => {
                self.bump();
                Ok(if neg { -n } else { n })
            }
            _ => self.fail(&["an integer"]),
        }
    }

    fn nat(&mut self) -> PResult<usize> {
        match *self.peek() {
            Tok::Int(n) => {
                self.bump();
                Ok(n as usize)
            }
            _ => self.fail(&["a non-negative integer"]),
        }
    }

    fn script(&mut self) -> PResult<Script> {
        let mut stmts = Vec::new();
        while *self.peek() != Tok::Eof {
            if self.is_sym(';') {
                self.bump();
                continue;
            }
            let pos = self.pos();
            let decl = self.decl()?;
            stmts.push(Stmt { pos, decl });
            if *self.peek() != Tok::Eof {
                self.sym(';')?;
            }
        }
        Ok(Script { stmts })
    }

    fn names(&mut self) -> PResult<Vec<String>> {
        let mut out = Vec::new();
        while let Tok::Ident(s) = self.peek().clone() {
            self.bump();
            out.push(s);
        }
        Ok(out)
    }

    fn decl(&mut self) -> PResult<Decl> {
        let Tok::Ident(kw) = self.peek().clone() else {
            return self.fail(&["a declaration or command"]);
        };
        self.bump();
        Ok(match kw.as_str() {
            "field" => {
                if self.is_word("QQ") {
                    self.bump();
                    Decl::Field(FieldDecl::Rationals)
                } else if self.is_word("Fp") {
                    self.bump();
                    Decl::Field(FieldDecl::Prime(self.int()?))
                } else {
                    return self.fail(&["`QQ`", "`Fp`"]);
                }
            }
            "base" => Decl::Base(self.names()?),
            "positive" => Decl::Positive(self.names()?),
            "ideal" => {
                let (name, _) = self.ident("an ideal name")?;
                self.sym('=')?;
                self.sym('[')?;
                let gens = self.expr_list(']')?;
                Decl::Ideal(name, gens)
            }
            "module" => {
                let (name, _) = self.ident("a module name")?;
                self.sym('=')?;
                self.word("coker")?;
                self.sym('{')?;
                self.word("shifts")?;
                self.sym(':')?;
                self.sym('[')?;
                let mut shifts = Vec::new();
                while !self.is_sym(']') {
                    if !shifts.is_empty() {
                        self.sym(',')?;
                    }
                    shifts.push(self.shift()?);
                }
                self.bump();
                self.sym(',')?;
                self.word("matrix")?;
                self.sym(':')?;
                self.sym('[')?;
                let mut matrix = Vec::new();
                while !self.is_sym(']') {
                    if !matrix.is_empty() {
                        self.sym(',')?;
                    }
                    self.sym('[')?;
                    matrix.push(self.expr_list(']')?);
                }
                self.bump();
                self.sym('}')?;
                Decl::Module { name, shifts, matrix }
            }
            "gb" => {
                let (name, p) = self.ident("an ideal or module name")?;
                Decl::Command(Command::Gb(name, p))
            }
            "resolve" => {
                let m = self.module_ref()?;
                let len = if matches!(self.peek(), Tok::Int(_)) { Some(self.nat()?) } else { None };
                Decl::Command(Command::Resolve(m, len))
            }
            "betti" => Decl::Command(Command::Betti(self.module_ref()?)),
            "reg" => {
                let module = self.module_ref()?;
                self.word("wrt")?;
                let ideal = self.ideal_ref()?;
                let level = if self.is_word("level") {
                    self.bump();
                    Some(self.nat()?)
                } else {
                    None
                };
                Decl::Command(Command::Reg { module, ideal, level })
            }
            "end" => {
                let module = self.module_ref()?;
                self.word("wrt")?;
                let ideal = self.ideal_ref()?;
                self.word("at")?;
                let i = self.nat()?;
                Decl::Command(Command::End { module, ideal, i })
            }
            "cd" => {
                let module = self.module_ref()?;
                self.word("wrt")?;
                let ideal = self.ideal_ref()?;
                Decl::Command(Command::Cd { module, ideal })
            }
            "grade" => {
                let ideal = self.ideal_ref()?;
                self.word("on")?;
                let module = self.module_ref()?;
                Decl::Command(Command::Grade { ideal, module })
            }
            "fdepth" => Decl::Command(Command::Fdepth(self.module_ref()?)),
            "verify" => {
                let (statement, _) = self.ident("a statement id or `all`")?;
                let (mut seed, mut size) = (DEFAULT_SEED, DEFAULT_SIZE);
                while let Tok::Opt(o) = self.peek().clone() {
                    self.bump();
                    match o.as_str() {
                        "seed" => seed = self.nat()? as u64,
                        "size" => size = self.nat()?,
                        _ => {
                            self.at -= 1;
                            return self.fail(&["`--seed`", "`--size`"]);
                        }
                    }
                }
                Decl::Command(Command::Verify { statement, seed, size })
            }
            _ => {
                self.at -= 1;
                return self.fail(&["a declaration or command"]);
            }
        })
    }

    fn shift(&mut self) -> PResult<Shift> {
        if self.is_sym('(') {
            self.bump();
            let mut v = vec![self.int()?];
            while self.is_sym(',') {
                self.bump();
                v.push(self.int()?);
            }
            self.sym(')')?;
            Ok(Shift::Fine(v))
        } else {
            Ok(Shift::Coarse(self.int()?))
        }
    }

    fn module_ref(&mut self) -> PResult<ModuleRef> {
        let (name, p) = self.ident("a module name, `R` or `R/<ideal>`")?;
        if name != "R" {
            return Ok(ModuleRef::Named(name, p));
        }
        if self.is_sym('/') {
            self.bump();
            let (i, ip) = self.ident("an ideal name")?;
            return Ok(ModuleRef::Quotient(i, ip));
        }
        Ok(ModuleRef::Ring)
    }

    fn ideal_ref(&mut self) -> PResult<IdealRef> {
        let mut parts = vec![self.ideal_atom()?];
        while self.is_sym('+') {
            self.bump();
            parts.push(self.ideal_atom()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { IdealRef::Sum(parts) })
    }

    fn ideal_atom(&mut self) -> PResult<IdealRef> {
        if self.is_sym('(') {
            self.bump();
            return Ok(IdealRef::Gens(self.expr_list(')')?));
        }
        let (name, p) = self.ident("an ideal name, `R+` or `(generators)`")?;
        if name == "R" {
            self.sym('+')?;
            return Ok(IdealRef::RPlus);
        }
        Ok(IdealRef::Named(name, p))
    }

    fn expr_list(&mut self, close: char) -> PResult<Vec<Expr>> {
        let mut out = Vec::new();
        while !self.is_sym(close) {
            if !out.is_empty() {
                self.sym(',')?;
            }
            out.push(self.expr()?);
        }
        self.bump();
        Ok(out)
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut e = self.term()?;
        loop {
            if self.is_sym('+') {
                self.bump();
                e = Expr::Add(Box::new(e), Box::new(self.term()?));
            } else if self.is_sym('-') {
                self.bump();
                e = Expr::Sub(Box::new(e), Box::new(self.term()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut e = self.factor()?;
        while self.is_sym('*') {
            self.bump();
            e = Expr::Mul(Box::new(e), Box::new(self.factor()?));
        }
        Ok(e)
    }

    fn factor(&mut self) -> PResult<Expr> {
        if self.is_sym('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Expr::Int(n)
            }
            Tok::Ident(s) => {
                let p = self.pos();
                self.bump();
                Expr::Var(s, p)
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.sym(')')?;
                e
            }
            _ => return self.fail(&["an integer", "a variable", "`(`", "`-`"]),
        };
        if self.is_sym('^') {
            self.bump();
            let e = self.nat()?;
            return Ok(Expr::Pow(Box::new(base), e as u32));
        }
        Ok(base)
    }
}

pub fn parse(src: &str) -> Result<Script, SyntaxError> {
    let toks = lex(src)?;
    Parser { toks, at: 0 }.script()
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Pow(..) => 4,
        Expr::Int(_) | Expr::Var(..) => 5,
    }
}

fn wrap(e: &Expr, min: u8) -> String {
    if prec(e) < min {
        format!("({e})")
    } else {
        e.to_string()
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Var(s, _) => write!(f, "{s}"),
            Expr::Add(a, b) => write!(f, "{} + {}", wrap(a, 1), wrap(b, 2)),
            Expr::Sub(a, b) => write!(f, "{} - {}", wrap(a, 1), wrap(b, 2)),
            Expr::Mul(a, b) => write!(f, "{}*{}", wrap(a, 2), wrap(b, 3)),
            Expr::Neg(a) => write!(f, "-{}", wrap(a, 3)),
            Expr::Pow(a, e) => write!(f, "{}^{e}", wrap(a, 5)),
        }
    }
}

fn list<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shift::Coarse(n) => write!(f, "{n}"),
            Shift::Fine(v) => write!(f, "({})", list(v)),
        }
    }
}

impl fmt::Display for IdealRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealRef::RPlus => write!(f, "R+"),
            IdealRef::Named(s, _) => write!(f, "{s}"),
            IdealRef::Gens(g) => write!(f, "({})", list(g)),
            IdealRef::Sum(parts) => write!(f, "{}", parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+")),
        }
    }
}

impl fmt::Display for ModuleRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleRef::Ring => write!(f, "R"),
            ModuleRef::Quotient(s, _) => write!(f, "R/{s}"),
            ModuleRef::Named(s, _) => write!(f, "{s}"),
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Gb(n, _) => write!(f, "gb {n}"),
            Command::Resolve(m, None) => write!(f, "resolve {m}"),
            Command::Resolve(m, Some(k)) => write!(f, "resolve {m} {k}"),
            Command::Betti(m) => write!(f, "betti {m}"),
            Command::Reg { module, ideal, level } => {
                write!(f, "reg {module} wrt {ideal}")?;
                match level {
                    Some(k) => write!(f, " level {k}"),
                    None => Ok(()),
                }
            }
            Command::End { module, ideal, i } => write!(f, "end {module} wrt {ideal} at {i}"),
            Command::Cd { module, ideal } => write!(f, "cd {module} wrt {ideal}"),
            Command::Grade { ideal, module } => write!(f, "grade {ideal} on {module}"),
            Command::Fdepth(m) => write!(f, "fdepth {m}"),
            Command::Verify { statement, seed, size } => write!(f, "verify {statement} --seed {seed} --size {size}"),
        }
    }
}

impl fmt::Display for Decl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decl::Field(FieldDecl::Rationals) => write!(f, "field QQ"),
            Decl::Field(FieldDecl::Prime(p)) => write!(f, "field Fp {p}"),
            Decl::Base(v) => write!(f, "base {}", v.join(" ")),
            Decl::Positive(v) => write!(f, "positive {}", v.join(" ")),
            Decl::Ideal(n, g) => write!(f, "ideal {n} = [{}]", list(g)),
            Decl::Module { name, shifts, matrix } => {
                let rows: Vec<String> = matrix.iter().map(|r| format!("[{}]", list(r))).collect();
                write!(f, "module {name} = coker {{ shifts: [{}], matrix: [{}] }}", list(shifts), rows.join(", "))
            }
            Decl::Command(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stmts {
            writeln!(f, "{};", s.decl)?;
        }
        Ok(())
    }
}
