//! Name resolution, argument binding and homogeneity checks.

use std::collections::HashMap;

use homcert::arith::{Field, Poly, UniPoly};
use homcert::criteria::Property;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::ast::*;
use crate::diagnostic::Diagnostic;

pub const DEFAULT_PRIME: u64 = 32003;

/// Run-wide settings after options and command-line overrides.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Settings {
    pub field: Field,
    pub max_i: usize,
    pub series_order: usize,
    #[serde(serialize_with = "ser_rational")]
    pub tolerance: BigRational,
}

fn ser_rational<S: serde::Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            field: Field::Prime(DEFAULT_PRIME),
            max_i: 12,
            series_order: 12,
            tolerance: homcert::arith::default_tolerance(),
        }
    }
}

/// Command-line values that take precedence over `option` lines.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub field: Option<Field>,
    pub max_i: Option<usize>,
}

/// `Q`, `Fp` (the default prime), `F(p)` or `Fp` with `p` spelled out, e.g. `F101`.
pub fn parse_field(s: &str) -> Result<Field, String> {
    let s = s.trim();
    if s == "Q" {
        return Ok(Field::Rational);
    }
    if s == "Fp" {
        return Ok(Field::Prime(DEFAULT_PRIME));
    }
    let digits = s
        .strip_prefix("F(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| s.strip_prefix('F'))
        .ok_or_else(|| format!("unknown field `{s}`; expected Q, Fp or F(p)"))?;
    let p: u64 = digits.parse().map_err(|_| format!("bad characteristic `{digits}`"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

/// A positive rational written as an integer, decimal, `a/b` or in scientific notation.
pub fn parse_tolerance(s: &str) -> Result<BigRational, String> {
    let bad = || format!("bad tolerance `{s}`");
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(k) => (&s[..k], s[k + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let v = if let Some((a, b)) = mant.split_once('/') {
        let a: BigInt = a.parse().map_err(|_| bad())?;
        let b: BigInt = b.parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        BigRational::new(a, b)
    } else {
        let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        BigRational::new(digits, BigInt::from(10).pow(frac.len() as u32))
    };
    let scale = BigRational::from_integer(BigInt::from(10).pow(exp.unsigned_abs()));
    let v = if exp >= 0 { v * scale } else { v / scale };
    if !v.is_positive() {
        return Err(format!("tolerance must be positive, got `{s}`"));
    }
    Ok(v)
}

/// A declaration with its polynomials evaluated.
#[derive(Clone, Debug)]
pub enum Decl {
    Ring {
        name: String,
        field: Field,
        vars: Vec<String>,
        relations: Vec<Poly>,
    },
    Coker {
        name: String,
        ring: String,
        rows: Vec<Vec<Poly>>,
    },
    Residue {
        name: String,
        ring: String,
    },
    Syzygy {
        name: String,
        module: String,
        index: usize,
    },
    Deform {
        name: String,
        base: String,
        sequence: Vec<Poly>,
    },
}

impl Decl {
    pub fn name(&self) -> &str {
        match self {
            Decl::Ring { name, .. }
            | Decl::Coker { name, .. }
            | Decl::Residue { name, .. }
            | Decl::Syzygy { name, .. }
            | Decl::Deform { name, .. } => name,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Name(String),
    Int(i64),
    Poly(UniPoly),
    Property(Property),
    Bool(bool),
}

#[derive(Clone, Debug)]
pub struct BoundTask {
    pub kind: TaskKind,
    /// The task as written, in canonical form.
    pub text: String,
    /// Bound arguments by parameter name, in signature order.
    pub args: Vec<(&'static str, Value, String)>,
}

impl BoundTask {
    pub fn get(&self, key: &str) -> Option<&Value> {
        self.args.iter().find(|(k, _, _)| *k == key).map(|(_, v, _)| v)
    }

    pub fn name(&self, key: &str) -> &str {
        match self.get(key) {
            Some(Value::Name(s)) => s,
            _ => "",
        }
    }

    pub fn int(&self, key: &str) -> Option<i64> {
        match self.get(key) {
            Some(Value::Int(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn all_polys(&self, key: &str) -> Vec<UniPoly> {
        self.args
            .iter()
            .filter_map(|(k, v, _)| match v {
                Value::Poly(p) if *k == key => Some(p.clone()),
                _ => None,
            })
            .collect()
    }
}

/// A validated script, ready to run.
#[derive(Clone, Debug)]
pub struct Program {
    pub settings: Settings,
    pub decls: Vec<Decl>,
    pub tasks: Vec<BoundTask>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Sym {
    Ring,
    Module,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ParamKind {
    Ring,
    Module,
    RingOrModule,
    Property,
    Int,
    Poly,
    Bool,
}

struct Param {
    name: &'static str,
    kind: ParamKind,
    required: bool,
    repeat: bool,
}

const fn req(name: &'static str, kind: ParamKind) -> Param {
    Param {
        name,
        kind,
        required: true,
        repeat: false,
    }
}

const fn opt(name: &'static str, kind: ParamKind) -> Param {
    Param {
        name,
        kind,
        required: false,
        repeat: false,
    }
}

fn signature(kind: TaskKind) -> Vec<Param> {
    use ParamKind as K;
    match kind {
        TaskKind::Profile | TaskKind::KoszulAlgebra => vec![req("ring", K::Ring)],
        TaskKind::Hilbert => vec![req("of", K::RingOrModule), opt("terms", K::Int)],
        TaskKind::Betti => vec![req("of", K::RingOrModule), opt("max_i", K::Int)],
        TaskKind::Tor | TaskKind::Ext => vec![
            req("ring", K::Ring),
            req("m", K::Module),
            req("n", K::Module),
            opt("max_i", K::Int),
            opt("lo", K::Int),
            opt("hi", K::Int),
        ],
        TaskKind::Certify => vec![
            req("ring", K::Ring),
            req("property", K::Property),
            Param {
                name: "d",
                kind: K::Poly,
                required: false,
                repeat: true,
            },
            opt("golod", K::Bool),
        ],
        TaskKind::GoodFactorization => vec![req("d", K::Poly)],
        TaskKind::Selmer => vec![req("m", K::Int), opt("e", K::Int)],
    }
}

struct Checker {
    settings: Settings,
    symbols: HashMap<String, (Sym, Pos)>,
    /// Field and variable names of every ring, and the ring of every module.
    rings: HashMap<String, (Field, Vec<String>)>,
    module_ring: HashMap<String, String>,
}

pub fn eval_poly(e: &Expr, field: Field, vars: &[String]) -> Result<Poly, Diagnostic> {
    let n = vars.len();
    Ok(match e {
        Expr::Num(s, pos) => {
            let v: BigInt = s.parse().map_err(|_| Diagnostic::new(*pos, format!("bad integer `{s}`")))?;
            Poly::constant(n, field.from_bigint(&v))
        }
        Expr::Var(id) => {
            let i = vars.iter().position(|v| *v == id.name).ok_or_else(|| {
                Diagnostic::new(id.pos, format!("unknown variable `{}`; the ring has [{}]", id.name, vars.join(", ")))
            })?;
            Poly::var(n, field, i)
        }
        Expr::Neg(a, _) => eval_poly(a, field, vars)?.neg(),
        Expr::Pow(a, k, _) => eval_poly(a, field, vars)?.pow(*k),
        Expr::Bin(op, a, b, _) => {
            let (a, b) = (eval_poly(a, field, vars)?, eval_poly(b, field, vars)?);
            match op {
                BinOp::Add => a.add(&b),
                BinOp::Sub => a.sub(&b),
                BinOp::Mul => a.mul(&b),
            }
        }
    })
}

/// Evaluates an integer polynomial in the variable `z`.
pub fn eval_upoly(e: &Expr) -> Result<UniPoly, Diagnostic> {
    Ok(match e {
        Expr::Num(s, pos) => UniPoly::constant(
            s.parse()
                .map_err(|_| Diagnostic::new(*pos, format!("bad integer `{s}`")))?,
        ),
        Expr::Var(id) if id.name == "z" => UniPoly::z(),
        Expr::Var(id) => {
            return Err(Diagnostic::new(
                id.pos,
                format!("unknown variable `{}`; series polynomials use `z`", id.name),
            ))
        }
        Expr::Neg(a, _) => eval_upoly(a)?.neg(),
        Expr::Pow(a, k, _) => eval_upoly(a)?.pow(*k),
        Expr::Bin(op, a, b, _) => {
            let (a, b) = (eval_upoly(a)?, eval_upoly(b)?);
            match op {
                BinOp::Add => a.add(&b),
                BinOp::Sub => a.sub(&b),
                BinOp::Mul => a.mul(&b),
            }
        }
    })
}

fn eval_int(e: &Expr) -> Option<i64> {
    match e {
        Expr::Num(s, _) => s.parse().ok(),
        Expr::Neg(a, _) => eval_int(a).map(|v| -v),
        _ => None,
    }
}

impl Checker {
    fn declare(&mut self, id: &Ident, sym: Sym) -> Result<(), Diagnostic> {
        if let Some((_, first)) = self.symbols.get(&id.name) {
            let at = if first.line == 0 {
                "by a fixture".to_string()
            } else {
                format!("at {first}")
            };
            return Err(Diagnostic::new(id.pos, format!("`{}` is already declared {at}", id.name)));
        }
        self.symbols.insert(id.name.clone(), (sym, id.pos));
        Ok(())
    }

    fn lookup(&self, id: &Ident, want: Sym) -> Result<(), Diagnostic> {
        match self.symbols.get(&id.name) {
            Some((s, _)) if *s == want => Ok(()),
            Some((s, _)) => Err(Diagnostic::new(
                id.pos,
                format!("`{}` is a {:?}, expected a {:?}", id.name, s, want).to_lowercase(),
            )),
            None => Err(Diagnostic::new(id.pos, format!("unknown name `{}`", id.name))),
        }
    }

    fn homogeneous(&self, e: &Expr, ring: &str, what: &str) -> Result<Poly, Diagnostic> {
        let (field, vars) = &self.rings[ring];
        let p = eval_poly(e, *field, vars)?;
        if !p.is_homogeneous() {
            return Err(Diagnostic::new(e.pos(), format!("{what} `{e}` is not homogeneous")));
        }
        Ok(p)
    }

    fn ring(&mut self, r: &RingDecl) -> Result<Decl, Diagnostic> {
        self.declare(&r.name, Sym::Ring)?;
        let field = match r.field {
            FieldSpec::Rational => Field::Rational,
            FieldSpec::Prime(p) => Field::prime(p).map_err(|e| Diagnostic::new(r.name.pos, e.to_string()))?,
            FieldSpec::Default => self.settings.field,
        };
        let mut vars: Vec<String> = Vec::new();
        for v in &r.vars {
            if vars.contains(&v.name) {
                return Err(Diagnostic::new(v.pos, format!("variable `{}` listed twice", v.name)));
            }
            vars.push(v.name.clone());
        }
        self.rings.insert(r.name.name.clone(), (field, vars.clone()));
        let relations = r
            .relations
            .iter()
            .map(|g| self.homogeneous(g, &r.name.name, "relation"))
            .collect::<Result<Vec<_>, _>>()?;
        if relations.iter().any(|g| !g.is_zero() && g.degree() == Some(0)) {
            return Err(Diagnostic::new(r.name.pos, "a relation is a nonzero constant"));
        }
        Ok(Decl::Ring {
            name: r.name.name.clone(),
            field,
            vars,
            relations,
        })
    }

    fn module(&mut self, m: &ModuleDecl) -> Result<Decl, Diagnostic> {
        let name = m.name.name.clone();
        let (ring, decl) = match &m.body {
            ModuleExpr::Coker { ring, rows, matrix } => {
                self.lookup(ring, Sym::Ring)?;
                if matrix.len() != *rows {
                    return Err(Diagnostic::new(
                        ring.pos,
                        format!("rows={rows} but the matrix has {} rows", matrix.len()),
                    ));
                }
                let width = matrix.first().map_or(0, |r| r.len());
                let mut evaluated = Vec::new();
                for row in matrix {
                    if row.len() != width {
                        let pos = row.first().map_or(ring.pos, |e| e.pos());
                        return Err(Diagnostic::new(pos, format!("row has {} entries, expected {width}", row.len())));
                    }
                    evaluated.push(
                        row.iter()
                            .map(|e| self.homogeneous(e, &ring.name, "matrix entry"))
                            .collect::<Result<Vec<_>, _>>()?,
                    );
                }
                // generators sit in degree 0, so each column must be homogeneous
                for c in 0..width {
                    let mut deg = None;
                    for (r, row) in evaluated.iter().enumerate() {
                        if let Some(d) = row[c].degree() {
                            if deg.is_some_and(|d0| d0 != d) {
                                return Err(Diagnostic::new(
                                    matrix[r][c].pos(),
                                    format!("column {} mixes degrees {} and {d}", c + 1, deg.unwrap()),
                                ));
                            }
                            deg = Some(d);
                        }
                    }
                }
                (
                    ring.name.clone(),
                    Decl::Coker {
                        name: name.clone(),
                        ring: ring.name.clone(),
                        rows: evaluated,
                    },
                )
            }
            ModuleExpr::Residue { ring } => {
                self.lookup(ring, Sym::Ring)?;
                (
                    ring.name.clone(),
                    Decl::Residue {
                        name: name.clone(),
                        ring: ring.name.clone(),
                    },
                )
            }
            ModuleExpr::Syzygy { module, index } => {
                self.lookup(module, Sym::Module)?;
                (
                    self.module_ring[&module.name].clone(),
                    Decl::Syzygy {
                        name: name.clone(),
                        module: module.name.clone(),
                        index: *index,
                    },
                )
            }
        };
        self.declare(&m.name, Sym::Module)?;
        self.module_ring.insert(name, ring);
        Ok(decl)
    }

    fn deform(&mut self, d: &DeformDecl) -> Result<Decl, Diagnostic> {
        self.lookup(&d.base, Sym::Ring)?;
        let sequence = d
            .sequence
            .iter()
            .map(|f| self.homogeneous(f, &d.base.name, "sequence element"))
            .collect::<Result<Vec<_>, _>>()?;
        self.declare(&d.name, Sym::Ring)?;
        let base = self.rings[&d.base.name].clone();
        self.rings.insert(d.name.name.clone(), base);
        Ok(Decl::Deform {
            name: d.name.name.clone(),
            base: d.base.name.clone(),
            sequence,
        })
    }

    fn value(&self, p: &Param, e: &Expr) -> Result<Value, Diagnostic> {
        let name_of = |want: Sym| -> Result<Value, Diagnostic> {
            let id = e
                .as_ident()
                .ok_or_else(|| Diagnostic::new(e.pos(), format!("`{}` expects a name", p.name)))?;
            self.lookup(id, want)?;
            Ok(Value::Name(id.name.clone()))
        };
        match p.kind {
            ParamKind::Ring => name_of(Sym::Ring),
            ParamKind::Module => name_of(Sym::Module),
            ParamKind::RingOrModule => {
                let id = e
                    .as_ident()
                    .ok_or_else(|| Diagnostic::new(e.pos(), format!("`{}` expects a name", p.name)))?;
                match self.symbols.get(&id.name) {
                    Some(_) => Ok(Value::Name(id.name.clone())),
                    None => Err(Diagnostic::new(id.pos, format!("unknown name `{}`", id.name))),
                }
            }
            ParamKind::Property => {
                let id = e.as_ident().and_then(|id| Property::parse(&id.name).map(|p| (id, p)));
                match id {
                    Some((_, prop)) => Ok(Value::Property(prop)),
                    None => Err(Diagnostic::new(
                        e.pos(),
                        format!("unknown property `{e}`; expected tor_persistent, tor_friendly or ext_persistent"),
                    )),
                }
            }
            ParamKind::Int => eval_int(e)
                .map(Value::Int)
                .ok_or_else(|| Diagnostic::new(e.pos(), format!("`{}` expects an integer", p.name))),
            ParamKind::Bool => match e.as_ident().map(|i| i.name.as_str()) {
                Some("true") => Ok(Value::Bool(true)),
                Some("false") => Ok(Value::Bool(false)),
                _ => Err(Diagnostic::new(e.pos(), format!("`{}` expects true or false", p.name))),
            },
            ParamKind::Poly => {
                let u = eval_upoly(e)?;
                if u.is_zero() {
                    return Err(Diagnostic::new(e.pos(), "the zero polynomial is not a denominator"));
                }
                Ok(Value::Poly(u))
            }
        }
    }

    fn task(&self, t: &Task) -> Result<BoundTask, Diagnostic> {
        let sig = signature(t.kind);
        let mut bound: Vec<Option<Vec<(Value, String)>>> = vec![None; sig.len()];
        let mut next = 0;
        for a in &t.args {
            let k = match &a.name {
                None => {
                    // positional arguments fill parameters in order; a repeatable one absorbs the rest
                    while next < sig.len() && bound[next].is_some() && !sig[next].repeat {
                        next += 1;
                    }
                    if next >= sig.len() {
                        return Err(Diagnostic::new(
                            a.value.pos(),
                            format!("too many arguments for `{}`", t.kind.name()),
                        ));
                    }
                    next
                }
                Some(n) => sig.iter().position(|p| p.name == n.name).ok_or_else(|| {
                    let names: Vec<&str> = sig.iter().map(|p| p.name).collect();
                    Diagnostic::new(
                        n.pos,
                        format!("`{}` takes no argument `{}`; parameters are {}", t.kind.name(), n.name, names.join(", ")),
                    )
                })?,
            };
            let v = self.value(&sig[k], &a.value)?;
            match &mut bound[k] {
                Some(vs) if sig[k].repeat => vs.push((v, a.value.to_string())),
                Some(_) => {
                    return Err(Diagnostic::new(a.value.pos(), format!("`{}` given twice", sig[k].name)));
                }
                slot => *slot = Some(vec![(v, a.value.to_string())]),
            }
        }
        for (p, b) in sig.iter().zip(&bound) {
            if p.required && b.is_none() {
                return Err(Diagnostic::new(t.pos, format!("`{}` needs argument `{}`", t.kind.name(), p.name)));
            }
        }
        if matches!(t.kind, TaskKind::Tor | TaskKind::Ext) {
            let ring = |k: usize| match &bound[k] {
                Some(v) => match &v[0].0 {
                    Value::Name(n) => n.clone(),
                    _ => String::new(),
                },
                None => String::new(),
            };
            for k in [1, 2] {
                if self.module_ring[&ring(k)] != ring(0) {
                    let pos = t.args.get(k).map_or(t.pos, |a| a.value.pos());
                    return Err(Diagnostic::new(
                        pos,
                        format!("module `{}` is not over ring `{}`", ring(k), ring(0)),
                    ));
                }
            }
            if bound[4].is_some() != bound[5].is_some() {
                return Err(Diagnostic::new(t.pos, "give both `lo` and `hi` or neither"));
            }
        }
        let mut args = Vec::new();
        for (p, b) in sig.iter().zip(bound) {
            for (v, text) in b.into_iter().flatten() {
                args.push((p.name, v, text));
            }
        }
        Ok(BoundTask {
            kind: t.kind,
            text: Item::Task(t.clone()).to_string(),
            args,
        })
    }

    fn option(&mut self, o: &OptionDecl) -> Result<(), Diagnostic> {
        let at = |m: String| Diagnostic::new(o.key.pos, m);
        let s = &mut self.settings;
        match o.key.name.as_str() {
            "field" => s.field = parse_field(&o.value).map_err(at)?,
            "max_i" => s.max_i = o.value.parse().map_err(|_| at(format!("bad max_i `{}`", o.value)))?,
            "series_order" => {
                s.series_order = o
                    .value
                    .parse()
                    .map_err(|_| at(format!("bad series_order `{}`", o.value)))?
            }
            "tolerance" => s.tolerance = parse_tolerance(&o.value).map_err(at)?,
            other => {
                return Err(at(format!(
                    "unknown option `{other}`; expected field, max_i, series_order or tolerance"
                )))
            }
        }
        Ok(())
    }
}

/// Checks names, argument kinds and homogeneity, and evaluates polynomials.
///
/// Options apply to the whole script wherever they appear; `overrides` win.
pub fn compile(script: &Script, overrides: &Overrides) -> Result<Program, Diagnostic> {
    let mut ck = Checker {
        settings: Settings::default(),
        symbols: HashMap::new(),
        rings: HashMap::new(),
        module_ring: HashMap::new(),
    };
    for item in &script.items {
        if let Item::Option(o) = item {
            ck.option(o)?;
        }
    }
    if let Some(f) = overrides.field {
        ck.settings.field = f;
    }
    if let Some(m) = overrides.max_i {
        ck.settings.max_i = m;
    }
    let mut decls = Vec::new();
    let mut tasks = Vec::new();
    for item in &script.items {
        match item {
            Item::Ring(r) => decls.push(ck.ring(r)?),
            Item::Module(m) => decls.push(ck.module(m)?),
            Item::Deform(d) => decls.push(ck.deform(d)?),
            Item::Task(t) => tasks.push(ck.task(t)?),
            Item::Option(_) => {}
        }
    }
    Ok(Program {
        settings: ck.settings,
        decls,
        tasks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_syntax;
    use num_traits::One;

    fn check(src: &str) -> Result<Program, Diagnostic> {
        compile(&parse_syntax(src).unwrap(), &Overrides::default())
    }

    #[test]
    fn inhomogeneous_relation_is_located() {
        let e = check("\nring R = Q[x] / (x^2 - 1);").unwrap_err();
        assert_eq!(e.line(), 2);
        assert_eq!(e.col(), 18);
        assert!(e.message.contains("not homogeneous"));
    }

    #[test]
    fn names_are_checked() {
        assert!(check("task profile(R);").unwrap_err().message.contains("unknown name `R`"));
        let e = check("ring R = Q[x]; ring R = Q[y];").unwrap_err();
        assert!(e.message.contains("already declared at 1:6"));
        let e = check("ring R = Q[x]; module M = coker(R, rows=1, [[y]]);").unwrap_err();
        assert!(e.message.contains("unknown variable `y`"));
        let e = check("ring R = Q[x]; module M = coker(R, rows=1, [[x]]); task profile(M);").unwrap_err();
        assert!(e.message.contains("expected a ring"));
        let e = check("ring R = Q[x]; ring S = Q[x]; module M = residue(S); task tor(R, M, M);").unwrap_err();
        assert!(e.message.contains("not over ring"));
    }

    #[test]
    fn arguments_bind() {
        let p = check(
            "ring R = k[x,y] / (x^2, y^2); module M = coker(R, rows=1, [[x]]);\n\
             task tor(R, M, M, max_i=8); task certify(R, tor_friendly, 1 - z^2, d=1 + z);\n\
             task selmer(5, e=7); option max_i = 4; option field = Q;",
        )
        .unwrap();
        assert_eq!(p.settings.max_i, 4);
        assert_eq!(p.settings.field, Field::Rational);
        assert!(matches!(&p.decls[0], Decl::Ring { field: Field::Rational, .. }));
        assert_eq!(p.tasks[0].int("max_i"), Some(8));
        assert_eq!(p.tasks[1].all_polys("d").len(), 2);
        assert_eq!(p.tasks[2].int("e"), Some(7));
        assert!(check("ring R = Q[x]; task certify(R, tor_cheerful);").is_err());
        assert!(check("task selmer();").unwrap_err().message.contains("needs argument `m`"));
        assert!(check("task selmer(5, 6, 7);").unwrap_err().message.contains("too many"));
        assert!(check("task good_factorization(1 - w);").is_err());
    }

    #[test]
    fn matrix_shape() {
        let e = check("ring R = Q[x,y]; module M = coker(R, rows=2, [[x, y]]);").unwrap_err();
        assert!(e.message.contains("rows=2"));
        let e = check("ring R = Q[x,y]; module M = coker(R, rows=2, [[x], [y^2]]);").unwrap_err();
        assert!(e.message.contains("mixes degrees"));
        assert!(check("ring R = Q[x,y]; module M = coker(R, rows=2, [[x, 0], [y, x]]);").is_ok());
    }

    #[test]
    fn option_values() {
        assert_eq!(parse_field("F(101)").unwrap(), Field::Prime(101));
        assert_eq!(parse_field("F7").unwrap(), Field::Prime(7));
        assert_eq!(parse_field("Fp").unwrap(), Field::Prime(DEFAULT_PRIME));
        assert!(parse_field("F(100)").is_err());
        let t = parse_tolerance("1e-9").unwrap();
        assert_eq!(t, homcert::arith::default_tolerance());
        assert_eq!(parse_tolerance("0.5").unwrap(), BigRational::new(1.into(), 2.into()));
        assert_eq!(parse_tolerance("3/4").unwrap(), BigRational::new(3.into(), 4.into()));
        assert!(parse_tolerance("0").is_err());
        assert!(BigRational::one() == parse_tolerance("1").unwrap());
    }
}
