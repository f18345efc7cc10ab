//! A small input language for rings and polynomials.
//!
//! ```text
//! ring R = semigroup(3,4);
//! g = s^7 + s^6*t + s^8*t^2;
//! ring A = quotient(R, (s^9, s^10, s^11));
//! ring B = quotient(R, ord>=12);
//! ring C = monomial(x, y; x^2, y^2);
//! h = x + y*t;
//! ```
//!
//! Statements end with `;` and `#` starts a comment. Polynomial bindings
//! belong to the most recently declared ring. Coefficients are integers read
//! mod p; the polynomial variable is `t`.

use std::collections::BTreeMap;
use std::fmt;

use crate::artin::{AlgElem, ArtinianAlgebra, SemigroupQuotient};
use crate::content::RingPoly;
use crate::error::{Error, Result};
use crate::exactla::PrimeField;
use crate::semiring::{Precision, SemigroupRing, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

fn parse_err(pos: Pos, msg: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        col: pos.col,
        msg: msg.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Sym(&'static str),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Sym(s) => write!(f, "`{s}`"),
        }
    }
}

const SYMBOLS: [&str; 10] = [">=", "(", ")", ",", ";", "=", "+", "-", "*", "^"];

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let pos = Pos { line: li + 1, col: i + 1 };
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n = s.parse().map_err(|_| parse_err(pos, format!("integer `{s}` is too large")))?;
                out.push((Tok::Int(n), pos));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
            } else {
                let rest: String = chars[i..].iter().take(2).collect();
                let sym = SYMBOLS
                    .iter()
                    .find(|s| rest.starts_with(**s))
                    .ok_or_else(|| parse_err(pos, format!("unexpected character `{c}`")))?;
                i += sym.len();
                out.push((Tok::Sym(sym), pos));
            }
        }
    }
    Ok(out)
}

/// Unevaluated polynomial expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Var(String, Pos),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Var(v, _) => write!(f, "{v}"),
            Expr::Neg(a) => write!(f, "-{}", Paren(a, 2)),
            Expr::Add(a, b) => write!(f, "{a} + {}", Paren(b, 1)),
            Expr::Sub(a, b) => write!(f, "{a} - {}", Paren(b, 1)),
            Expr::Mul(a, b) => write!(f, "{}*{}", Paren(a, 1), Paren(b, 2)),
            Expr::Pow(a, n) => write!(f, "{}^{n}", Paren(a, 3)),
        }
    }
}

struct Paren<'a>(&'a Expr, u8);

impl fmt::Display for Paren<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prec = match self.0 {
            Expr::Add(..) | Expr::Sub(..) => 0,
            Expr::Mul(..) => 1,
            Expr::Neg(..) => 2,
            Expr::Pow(..) => 3,
            Expr::Int(_) | Expr::Var(..) => 4,
        };
        if prec < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealExpr {
    Gens(Vec<Expr>),
    OrderAtLeast(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingExpr {
    Semigroup(Vec<u64>),
    Quotient { base: String, base_pos: Pos, ideal: IdealExpr },
    Monomial { vars: Vec<String>, relations: Vec<Expr> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Ring { name: String, def: RingExpr, pos: Pos },
    Poly { name: String, expr: Expr, pos: Pos },
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[Expr]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        match self {
            Stmt::Ring { name, def, .. } => {
                write!(f, "ring {name} = ")?;
                match def {
                    RingExpr::Semigroup(g) => {
                        let g: Vec<String> = g.iter().map(|x| x.to_string()).collect();
                        write!(f, "semigroup({})", g.join(","))?;
                    }
                    RingExpr::Quotient { base, ideal, .. } => match ideal {
                        IdealExpr::Gens(gens) => write!(f, "quotient({base}, ({}))", list(gens))?,
                        IdealExpr::OrderAtLeast(k) => write!(f, "quotient({base}, ord>={k})")?,
                    },
                    RingExpr::Monomial { vars, relations } => {
                        write!(f, "monomial({}; {})", vars.join(", "), list(relations))?;
                    }
                }
                write!(f, ";")
            }
            Stmt::Poly { name, expr, .. } => write!(f, "{name} = {expr};"),
        }
    }
}

/// Parsed but unevaluated input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Program {
    pub stmts: Vec<Stmt>,
}

impl Program {
    /// One statement per line, canonical spacing.
    pub fn normalized(&self) -> String {
        self.stmts.iter().map(|s| format!("{s}\n")).collect()
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn next(&mut self, what: &str) -> Result<(Tok, Pos)> {
        let t = self
            .toks
            .get(self.at)
            .cloned()
            .ok_or_else(|| parse_err(self.end, format!("unexpected end of input, expected {what}")))?;
        self.at += 1;
        Ok(t)
    }

    fn eat(&mut self, sym: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(s)) if *s == sym) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: &'static str) -> Result<Pos> {
        let (t, p) = self.next(&format!("`{sym}`"))?;
        match t {
            Tok::Sym(s) if s == sym => Ok(p),
            other => Err(parse_err(p, format!("expected `{sym}`, found {other}"))),
        }
    }

    fn ident(&mut self) -> Result<(String, Pos)> {
        match self.next("a name")? {
            (Tok::Ident(s), p) => Ok((s, p)),
            (other, p) => Err(parse_err(p, format!("expected a name, found {other}"))),
        }
    }

    fn int(&mut self) -> Result<(u64, Pos)> {
        match self.next("an integer")? {
            (Tok::Int(n), p) => Ok((n, p)),
            (other, p) => Err(parse_err(p, format!("expected an integer, found {other}"))),
        }
    }

    fn program(&mut self) -> Result<Program> {
        let mut stmts = Vec::new();
        while self.peek().is_some() {
            stmts.push(self.stmt()?);
        }
        Ok(Program { stmts })
    }

    fn stmt(&mut self) -> Result<Stmt> {
        let (head, pos) = self.ident()?;
        if head == "ring" {
            let (name, _) = self.ident()?;
            self.expect("=")?;
            let def = self.ring_expr()?;
            self.expect(";")?;
            Ok(Stmt::Ring { name, def, pos })
        } else {
            self.expect("=")?;
            let expr = self.expr()?;
            self.expect(";")?;
            Ok(Stmt::Poly { name: head, expr, pos })
        }
    }

    fn ring_expr(&mut self) -> Result<RingExpr> {
        let (kind, pos) = self.ident()?;
        self.expect("(")?;
        let def = match kind.as_str() {
            "semigroup" => {
                let mut gens = vec![self.int()?.0];
                while self.eat(",") {
                    gens.push(self.int()?.0);
                }
                RingExpr::Semigroup(gens)
            }
            "quotient" => {
                let (base, base_pos) = self.ident()?;
                self.expect(",")?;
                let ideal = if matches!(self.peek(), Some(Tok::Ident(s)) if s == "ord") {
                    self.at += 1;
                    self.expect(">=")?;
                    IdealExpr::OrderAtLeast(self.int()?.0)
                } else {
                    self.expect("(")?;
                    let gens = self.expr_list()?;
                    self.expect(")")?;
                    IdealExpr::Gens(gens)
                };
                RingExpr::Quotient { base, base_pos, ideal }
            }
            "monomial" => {
                let mut vars = vec![self.ident()?.0];
                while self.eat(",") {
                    vars.push(self.ident()?.0);
                }
                self.expect(";")?;
                let relations = self.expr_list()?;
                RingExpr::Monomial { vars, relations }
            }
            other => {
                return Err(parse_err(
                    pos,
                    format!("unknown ring constructor `{other}` (expected semigroup, quotient or monomial)"),
                ))
            }
        };
        self.expect(")")?;
        Ok(def)
    }

    fn expr_list(&mut self) -> Result<Vec<Expr>> {
        let mut xs = vec![self.expr()?];
        while self.eat(",") {
            xs.push(self.expr()?);
        }
        Ok(xs)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = if self.eat("-") {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat("+");
            self.term()?
        };
        loop {
            if self.eat("+") {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat("-") {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.power()?;
        while self.eat("*") {
            acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat("^") {
            let (n, p) = self.int()?;
            let n = u32::try_from(n).map_err(|_| parse_err(p, format!("exponent {n} is too large")))?;
            Ok(Expr::Pow(Box::new(base), n))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next("a term")? {
            (Tok::Int(n), _) => Ok(Expr::Int(n)),
            (Tok::Ident(v), p) => Ok(Expr::Var(v, p)),
            (Tok::Sym("("), _) => {
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            (other, p) => Err(parse_err(p, format!("expected a term, found {other}"))),
        }
    }
}

/// Parses without evaluating. Empty input is an error.
pub fn parse(text: &str) -> Result<Program> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(parse_err(Pos { line: 1, col: 1 }, "empty input"));
    }
    let end = {
        let lines = text.lines().count().max(1);
        let last = text.lines().last().unwrap_or("");
        Pos {
            line: lines,
            col: last.chars().count() + 1,
        }
    };
    Parser { toks, at: 0, end }.program()
}

/// A polynomial over the variables of a ring and `t`, before it is mapped
/// into the ring. Keys are (variable exponents, t exponent).
type Raw = BTreeMap<(Vec<u32>, u32), u32>;

fn raw_add(field: PrimeField, a: &Raw, b: &Raw, sign: bool) -> Raw {
    let mut out = a.clone();
    for (k, v) in b {
        let v = if sign { *v } else { field.neg(*v) };
        let e = out.entry(k.clone()).or_insert(0);
        *e = field.add(*e, v);
    }
    out.retain(|_, v| *v != 0);
    out
}

fn raw_mul(field: PrimeField, a: &Raw, b: &Raw) -> Raw {
    let mut out = Raw::new();
    for ((ea, ta), va) in a {
        for ((eb, tb), vb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry((e, ta + tb)).or_insert(0);
            *entry = field.add(*entry, field.mul(*va, *vb));
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Checks applied to each variable power as it is read.
trait Atoms {
    fn vars(&self) -> &[String];
    fn check_power(&self, _var: usize, _exp: u32, _pos: Pos) -> Result<()> {
        Ok(())
    }
}

struct SemigroupAtoms<'a>(&'a SemigroupRing, Vec<String>);

impl Atoms for SemigroupAtoms<'_> {
    fn vars(&self) -> &[String] {
        &self.1
    }

    fn check_power(&self, _var: usize, exp: u32, pos: Pos) -> Result<()> {
        if self.0.contains_degree(exp as usize) {
            Ok(())
        } else {
            Err(parse_err(
                pos,
                format!("exponent {exp} of s is not in the semigroup generated by {:?}", self.0.generators()),
            ))
        }
    }
}

struct PlainAtoms(Vec<String>);

impl Atoms for PlainAtoms {
    fn vars(&self) -> &[String] {
        &self.0
    }
}

fn eval_raw(field: PrimeField, atoms: &dyn Atoms, e: &Expr) -> Result<Raw> {
    let nv = atoms.vars().len();
    let constant = |c: u32| -> Raw {
        let mut r = Raw::new();
        if c != 0 {
            r.insert((vec![0; nv], 0), c);
        }
        r
    };
    let var_power = |name: &str, exp: u32, pos: Pos| -> Result<Raw> {
        if name == "t" {
            let mut r = Raw::new();
            r.insert((vec![0; nv], exp), 1);
            return Ok(r);
        }
        let i = atoms.vars().iter().position(|v| v == name).ok_or_else(|| {
            parse_err(
                pos,
                format!("unknown variable `{name}` (ring variables: {}, t)", atoms.vars().join(", ")),
            )
        })?;
        atoms.check_power(i, exp, pos)?;
        let mut key = vec![0; nv];
        key[i] = exp;
        let mut r = Raw::new();
        r.insert((key, 0), 1);
        Ok(r)
    };
    Ok(match e {
        Expr::Int(n) => constant((n % field.p() as u64) as u32),
        Expr::Var(v, p) => var_power(v, 1, *p)?,
        Expr::Pow(base, n) => match base.as_ref() {
            Expr::Var(v, p) => var_power(v, *n, *p)?,
            other => {
                let b = eval_raw(field, atoms, other)?;
                let mut acc = constant(1);
                for _ in 0..*n {
                    acc = raw_mul(field, &acc, &b);
                }
                acc
            }
        },
        Expr::Neg(a) => raw_add(field, &Raw::new(), &eval_raw(field, atoms, a)?, false),
        Expr::Add(a, b) => raw_add(field, &eval_raw(field, atoms, a)?, &eval_raw(field, atoms, b)?, true),
        Expr::Sub(a, b) => raw_add(field, &eval_raw(field, atoms, a)?, &eval_raw(field, atoms, b)?, false),
        Expr::Mul(a, b) => raw_mul(field, &eval_raw(field, atoms, a)?, &eval_raw(field, atoms, b)?),
    })
}

/// An evaluated ring declaration.
#[derive(Clone, Debug)]
pub enum RingValue {
    Semigroup(SemigroupRing),
    SemigroupQuotient { base: String, quotient: SemigroupQuotient },
    Monomial { vars: Vec<String>, algebra: ArtinianAlgebra },
}

impl RingValue {
    pub fn algebra(&self) -> Option<&ArtinianAlgebra> {
        match self {
            RingValue::Semigroup(_) => None,
            RingValue::SemigroupQuotient { quotient, .. } => Some(quotient.algebra()),
            RingValue::Monomial { algebra, .. } => Some(algebra),
        }
    }

    pub fn semigroup(&self) -> Option<&SemigroupRing> {
        match self {
            RingValue::Semigroup(r) => Some(r),
            _ => None,
        }
    }
}

/// A polynomial bound to the ring it was declared under.
#[derive(Clone, Debug)]
pub enum PolyValue {
    Semigroup(RingPoly<Series>),
    Algebra(RingPoly<AlgElem>),
}

#[derive(Clone, Debug)]
pub struct Binding {
    pub name: String,
    pub ring: String,
    pub value: PolyValue,
}

/// The result of evaluating a program.
#[derive(Clone, Debug)]
pub struct Session {
    pub program: Program,
    pub rings: Vec<(String, RingValue)>,
    pub polys: Vec<Binding>,
}

impl Session {
    pub fn ring(&self, name: &str) -> Option<&RingValue> {
        self.rings.iter().rev().find(|(n, _)| n == name).map(|(_, r)| r)
    }

    pub fn binding(&self, name: &str) -> Option<&Binding> {
        self.polys.iter().rev().find(|b| b.name == name)
    }

    /// Looks up a polynomial over a semigroup ring.
    pub fn semigroup_poly(&self, name: &str) -> Result<(&SemigroupRing, &RingPoly<Series>)> {
        let b = self
            .binding(name)
            .ok_or_else(|| Error::InvalidParameter(format!("no polynomial named `{name}`")))?;
        match (&b.value, self.ring(&b.ring)) {
            (PolyValue::Semigroup(p), Some(RingValue::Semigroup(r))) => Ok((r, p)),
            _ => Err(Error::InvalidParameter(format!("`{name}` is not over a semigroup ring"))),
        }
    }

    /// Looks up a polynomial over an Artinian algebra.
    pub fn algebra_poly(&self, name: &str) -> Result<(&ArtinianAlgebra, &RingPoly<AlgElem>)> {
        let b = self
            .binding(name)
            .ok_or_else(|| Error::InvalidParameter(format!("no polynomial named `{name}`")))?;
        match (&b.value, self.ring(&b.ring).and_then(|r| r.algebra())) {
            (PolyValue::Algebra(p), Some(a)) => Ok((a, p)),
            _ => Err(Error::InvalidParameter(format!("`{name}` is not over an Artinian algebra"))),
        }
    }
}

fn raw_to_series_poly(ring: &SemigroupRing, raw: &Raw) -> Result<RingPoly<Series>> {
    let top = raw.keys().map(|(_, t)| *t as usize).max().unwrap_or(0);
    let mut terms: Vec<Vec<(usize, i64)>> = vec![Vec::new(); top + 1];
    for ((e, t), v) in raw {
        terms[*t as usize].push((e[0] as usize, *v as i64));
    }
    let coeffs = terms.iter().map(|ts| ring.series(ts)).collect::<Result<Vec<_>>>()?;
    Ok(RingPoly::new(ring, coeffs))
}

fn raw_to_algebra_poly(alg: &ArtinianAlgebra, raw: &Raw, monomial: impl Fn(&[u32]) -> AlgElem) -> RingPoly<AlgElem> {
    let top = raw.keys().map(|(_, t)| *t as usize).max().unwrap_or(0);
    let mut coeffs = vec![alg.zero(); top + 1];
    for ((e, t), v) in raw {
        let m = alg.scale(*v, &monomial(e));
        coeffs[*t as usize] = alg.add(&coeffs[*t as usize], &m);
    }
    RingPoly::new(alg, coeffs)
}

fn no_t(raw: &Raw, pos: Pos) -> Result<()> {
    if raw.keys().any(|(_, t)| *t > 0) {
        Err(parse_err(pos, "ring elements here cannot involve t"))
    } else {
        Ok(())
    }
}

fn expr_pos(e: &Expr) -> Option<Pos> {
    match e {
        Expr::Int(_) => None,
        Expr::Var(_, p) => Some(*p),
        Expr::Neg(a) | Expr::Pow(a, _) => expr_pos(a),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => expr_pos(a).or_else(|| expr_pos(b)),
    }
}

/// Evaluates a parsed program over `F_p`.
pub fn evaluate(program: Program, field: PrimeField, precision: Precision) -> Result<Session> {
    let mut rings: Vec<(String, RingValue)> = Vec::new();
    let mut polys = Vec::new();
    let s_var = vec!["s".to_string()];
    for stmt in &program.stmts {
        match stmt {
            Stmt::Ring { name, def, pos } => {
                let value = match def {
                    RingExpr::Semigroup(gens) => {
                        let gens: Vec<usize> = gens.iter().map(|&g| g as usize).collect();
                        let r = SemigroupRing::new(field, &gens)
                            .and_then(|r| r.with_precision(precision))
                            .map_err(|e| parse_err(*pos, e.to_string()))?;
                        RingValue::Semigroup(r)
                    }
                    RingExpr::Quotient { base, base_pos, ideal } => {
                        let r = match rings.iter().rev().find(|(n, _)| n == base) {
                            Some((_, RingValue::Semigroup(r))) => r,
                            Some(_) => return Err(parse_err(*base_pos, format!("`{base}` is not a semigroup ring"))),
                            None => return Err(parse_err(*base_pos, format!("unknown ring `{base}`"))),
                        };
                        let q = match ideal {
                            IdealExpr::OrderAtLeast(k) => r.order_ideal(*k as usize)?,
                            IdealExpr::Gens(gens) => {
                                let atoms = SemigroupAtoms(r, s_var.clone());
                                let mut elems = Vec::new();
                                for g in gens {
                                    let raw = eval_raw(field, &atoms, g)?;
                                    no_t(&raw, expr_pos(g).unwrap_or(*pos))?;
                                    let p = raw_to_series_poly(r, &raw)?;
                                    elems.push(p.coeffs().first().cloned().unwrap_or_else(|| r.zero()));
                                }
                                r.ideal_span(&elems)?
                            }
                        };
                        let quotient = ArtinianAlgebra::from_quotient(r, &q).map_err(|e| parse_err(*pos, e.to_string()))?;
                        RingValue::SemigroupQuotient {
                            base: base.clone(),
                            quotient,
                        }
                    }
                    RingExpr::Monomial { vars, relations } => {
                        let atoms = PlainAtoms(vars.clone());
                        let mut rels = Vec::new();
                        for rel in relations {
                            let raw = eval_raw(field, &atoms, rel)?;
                            let rp = expr_pos(rel).unwrap_or(*pos);
                            no_t(&raw, rp)?;
                            if raw.len() != 1 {
                                return Err(parse_err(rp, "relations must be single monomials"));
                            }
                            let (e, _) = raw.keys().next().unwrap();
                            rels.push(e.iter().map(|&x| x as usize).collect());
                        }
                        let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
                        let algebra = ArtinianAlgebra::monomial(field, &names, &rels).map_err(|e| parse_err(*pos, e.to_string()))?;
                        RingValue::Monomial {
                            vars: vars.clone(),
                            algebra,
                        }
                    }
                };
                rings.push((name.clone(), value));
            }
            Stmt::Poly { name, expr, pos } => {
                let (rname, ring) = rings
                    .last()
                    .ok_or_else(|| parse_err(*pos, format!("`{name}` is defined before any ring")))?;
                let value = match ring {
                    RingValue::Semigroup(r) => {
                        let raw = eval_raw(field, &SemigroupAtoms(r, s_var.clone()), expr)?;
                        PolyValue::Semigroup(raw_to_series_poly(r, &raw)?)
                    }
                    RingValue::SemigroupQuotient { base, quotient } => {
                        let r = match rings.iter().rev().find(|(n, _)| n == base) {
                            Some((_, RingValue::Semigroup(r))) => r,
                            _ => return Err(Error::Internal(format!("base ring `{base}` vanished"))),
                        };
                        let raw = eval_raw(field, &SemigroupAtoms(r, s_var.clone()), expr)?;
                        let sp = raw_to_series_poly(r, &raw)?;
                        let alg = quotient.algebra();
                        PolyValue::Algebra(sp.map(alg, |c| quotient.reduce(c)))
                    }
                    RingValue::Monomial { vars, algebra } => {
                        let raw = eval_raw(field, &PlainAtoms(vars.clone()), expr)?;
                        let gens: Vec<AlgElem> = (0..vars.len())
                            .map(|i| {
                                let label = &vars[i];
                                let idx = algebra.labels().iter().position(|l| l == label);
                                // a variable killed by a linear relation is zero
                                idx.map(|j| algebra.basis(j)).unwrap_or_else(|| algebra.zero())
                            })
                            .collect();
                        PolyValue::Algebra(raw_to_algebra_poly(algebra, &raw, |e| {
                            let mut acc = algebra.one();
                            for (g, &k) in gens.iter().zip(e) {
                                for _ in 0..k {
                                    acc = algebra.mul(&acc, g);
                                }
                            }
                            acc
                        }))
                    }
                };
                polys.push(Binding {
                    name: name.clone(),
                    ring: rname.clone(),
                    value,
                });
            }
        }
    }
    Ok(Session { program, rings, polys })
}

/// [`parse`] followed by [`evaluate`].
pub fn parse_input(text: &str, field: PrimeField, precision: Precision) -> Result<Session> {
    evaluate(parse(text)?, field, precision)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::content::content;

    fn field() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn example_polynomial() {
        let s = parse_input("ring R = semigroup(3,4); g = s^7 + s^6*t + s^8*t^2;", field(), Precision::default()).unwrap();
        let (r, g) = s.semigroup_poly("g").unwrap();
        assert_eq!(g.degree(), Some(2));
        assert_eq!(r.mu(&content(r, g).unwrap()), 3);
        assert_eq!(
            s.program.normalized(),
            "ring R = semigroup(3,4);\ng = s^7 + s^6*t + s^8*t^2;\n"
        );
    }

    #[test]
    fn gap_exponent_is_reported() {
        let err = parse_input("ring R = semigroup(3,4);\nf = s^5;", field(), Precision::default()).unwrap_err();
        match err {
            Error::Parse { line, col, msg } => {
                assert_eq!((line, col), (2, 5));
                assert!(msg.contains("exponent 5"), "{msg}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_input() {
        assert!(matches!(parse("  # nothing\n"), Err(Error::Parse { msg, .. }) if msg == "empty input"));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("ring R = semigroup(3,4)\ng = s;") {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (2, 1)),
            other => panic!("unexpected {other:?}"),
        }
        match parse("ring R = cone(3);") {
            Err(Error::Parse { line, col, msg }) => {
                assert_eq!((line, col), (1, 10));
                assert!(msg.contains("cone"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_ring_in_quotient() {
        match parse_input("ring A = quotient(R, ord>=6);", field(), Precision::default()) {
            Err(Error::Parse { msg, .. }) => assert!(msg.contains("unknown ring")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn monomial_algebra_polynomials() {
        let s = parse_input("ring A = monomial(x, y; x^2, y^2);\ng = x + y*t;\nh = (x + y)^2;", field(), Precision::default()).unwrap();
        let (a, g) = s.algebra_poly("g").unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(g.degree(), Some(1));
        let (_, h) = s.algebra_poly("h").unwrap();
        // (x+y)^2 = 2xy
        assert_eq!(h.coeffs().len(), 1);
        assert_eq!(a.display_elem(&h.coeffs()[0]), "2*x*y");
    }

    #[test]
    fn semigroup_quotient_polynomials() {
        let text = "ring R = semigroup(3,4);\nring A = quotient(R, (s^9, s^10, s^11));\ng = s^3 + s^4*t + s^12*t^2;";
        let s = parse_input(text, field(), Precision::default()).unwrap();
        let (a, g) = s.algebra_poly("g").unwrap();
        assert_eq!(a.dim(), 6);
        // s^12 lies in the ideal
        assert_eq!(g.degree(), Some(1));
    }
}
