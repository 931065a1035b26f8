//! Recursive-descent parser for the script grammar.
//!
//! ```text
//! ring NAME = FIELD[v1, ..., vn] / (g1, ..., gm);     FIELD: Q | F(p) | k
//! module NAME = coker(RING, rows=k, [[a11, ...], ...]);
//! module NAME = residue(RING);
//! module NAME = syzygy(MODULE, i);
//! deform NAME = RING / (f1, ..., fc);
//! task KIND(arg, ..., key=value, ...);
//! option key = value;
//! ```

use crate::ast::*;
use crate::diagnostic::Diagnostic;
use crate::lexer::{tokenize, Tok, Token};

type PResult<T> = Result<T, Diagnostic>;

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.at + k).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, expected: &str) -> PResult<T> {
        let t = self.peek();
        Err(Diagnostic::new(t.pos, format!("expected {expected}, found {}", t.tok.describe())))
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.is_sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> PResult<Pos> {
        if self.is_sym(c) {
            Ok(self.bump().pos)
        } else {
            self.err(&format!("`{c}`"))
        }
    }

    fn ident(&mut self) -> PResult<Ident> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let id = Ident {
                    name: s.clone(),
                    pos: self.peek().pos,
                };
                self.bump();
                Ok(id)
            }
            _ => self.err("an identifier"),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<Pos> {
        match &self.peek().tok {
            Tok::Ident(s) if s == kw => Ok(self.bump().pos),
            _ => self.err(&format!("`{kw}`")),
        }
    }

    fn integer<T: std::str::FromStr>(&mut self, what: &str) -> PResult<T> {
        match &self.peek().tok {
            Tok::Number(s) if s.bytes().all(|b| b.is_ascii_digit()) => {
                let pos = self.peek().pos;
                let v = s
                    .parse()
                    .map_err(|_| Diagnostic::new(pos, format!("{what} `{s}` is out of range")))?;
                self.bump();
                Ok(v)
            }
            _ => self.err(what),
        }
    }

    fn list<T>(&mut self, close: char, mut item: impl FnMut(&mut Self) -> PResult<T>) -> PResult<Vec<T>> {
        let mut out = Vec::new();
        if self.eat_sym(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat_sym(close) {
                return Ok(out);
            }
            if !self.eat_sym(',') {
                return self.err(&format!("`,` or `{close}`"));
            }
        }
    }

    fn script(&mut self) -> PResult<Script> {
        let mut items = Vec::new();
        while self.peek().tok != Tok::Eof {
            items.push(self.item()?);
        }
        Ok(Script { items })
    }

    fn item(&mut self) -> PResult<Item> {
        let kw = match &self.peek().tok {
            Tok::Ident(s) => s.clone(),
            _ => return self.err("`ring`, `module`, `deform`, `task` or `option`"),
        };
        let item = match kw.as_str() {
            "ring" => Item::Ring(self.ring()?),
            "module" => Item::Module(self.module()?),
            "deform" => Item::Deform(self.deform()?),
            "task" => Item::Task(self.task()?),
            "option" => Item::Option(self.option()?),
            _ => return self.err("`ring`, `module`, `deform`, `task` or `option`"),
        };
        self.expect_sym(';')?;
        Ok(item)
    }

    fn ring(&mut self) -> PResult<RingDecl> {
        self.keyword("ring")?;
        let name = self.ident()?;
        self.expect_sym('=')?;
        let f = self.ident()?;
        let field = match f.name.as_str() {
            "Q" => FieldSpec::Rational,
            "k" => FieldSpec::Default,
            "F" => {
                self.expect_sym('(')?;
                let p = self.integer("a prime")?;
                self.expect_sym(')')?;
                FieldSpec::Prime(p)
            }
            other => {
                return Err(Diagnostic::new(
                    f.pos,
                    format!("unknown field `{other}`; expected Q, F(p) or k"),
                ))
            }
        };
        self.expect_sym('[')?;
        let vars = self.list(']', |p| p.ident())?;
        let relations = if self.eat_sym('/') {
            self.expect_sym('(')?;
            self.list(')', |p| p.expr())?
        } else {
            Vec::new()
        };
        Ok(RingDecl {
            name,
            field,
            vars,
            relations,
        })
    }

    fn module(&mut self) -> PResult<ModuleDecl> {
        self.keyword("module")?;
        let name = self.ident()?;
        self.expect_sym('=')?;
        let ctor = self.ident()?;
        self.expect_sym('(')?;
        let body = match ctor.name.as_str() {
            "coker" => {
                let ring = self.ident()?;
                self.expect_sym(',')?;
                self.keyword("rows")?;
                self.expect_sym('=')?;
                let rows = self.integer("a row count")?;
                self.expect_sym(',')?;
                self.expect_sym('[')?;
                let matrix = self.list(']', |p| {
                    p.expect_sym('[')?;
                    p.list(']', |q| q.expr())
                })?;
                ModuleExpr::Coker { ring, rows, matrix }
            }
            "residue" => ModuleExpr::Residue { ring: self.ident()? },
            "syzygy" => {
                let module = self.ident()?;
                self.expect_sym(',')?;
                let index = self.integer("a syzygy index")?;
                ModuleExpr::Syzygy { module, index }
            }
            other => {
                return Err(Diagnostic::new(
                    ctor.pos,
                    format!("unknown module constructor `{other}`; expected coker, residue or syzygy"),
                ))
            }
        };
        self.expect_sym(')')?;
        Ok(ModuleDecl { name, body })
    }

    fn deform(&mut self) -> PResult<DeformDecl> {
        self.keyword("deform")?;
        let name = self.ident()?;
        self.expect_sym('=')?;
        let base = self.ident()?;
        self.expect_sym('/')?;
        self.expect_sym('(')?;
        let sequence = self.list(')', |p| p.expr())?;
        Ok(DeformDecl { name, base, sequence })
    }

    fn task(&mut self) -> PResult<Task> {
        self.keyword("task")?;
        let k = self.ident()?;
        let kind = TaskKind::parse(&k.name).ok_or_else(|| {
            let all: Vec<&str> = TaskKind::ALL.iter().map(|k| k.name()).collect();
            Diagnostic::new(k.pos, format!("unknown task `{}`; expected one of {}", k.name, all.join(", ")))
        })?;
        self.expect_sym('(')?;
        let args = self.list(')', |p| {
            let named = matches!(p.peek().tok, Tok::Ident(_)) && *p.peek_at(1) == Tok::Sym('=');
            let name = if named {
                let id = p.ident()?;
                p.bump();
                Some(id)
            } else {
                None
            };
            Ok(Arg { name, value: p.expr()? })
        })?;
        Ok(Task { kind, pos: k.pos, args })
    }

    fn option(&mut self) -> PResult<OptionDecl> {
        self.keyword("option")?;
        let key = self.ident()?;
        self.expect_sym('=')?;
        let mut value = String::new();
        while !self.is_sym(';') && self.peek().tok != Tok::Eof {
            match self.bump().tok {
                Tok::Ident(s) | Tok::Number(s) => value.push_str(&s),
                Tok::Sym(c) => value.push(c),
                Tok::Eof => {}
            }
        }
        if value.is_empty() {
            return self.err("an option value");
        }
        Ok(OptionDecl { key, value })
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.is_sym('+') {
                BinOp::Add
            } else if self.is_sym('-') {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            self.bump();
            let rhs = self.term()?;
            let pos = lhs.pos();
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs), pos);
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let pos = lhs.pos();
            if self.eat_sym('*') {
                let rhs = self.unary()?;
                lhs = Expr::Bin(BinOp::Mul, Box::new(lhs), Box::new(rhs), pos);
            } else if matches!(self.peek().tok, Tok::Ident(_) | Tok::Sym('(')) {
                // juxtaposition, as in `2z` or `(1+z)(1-z)`
                let rhs = self.power()?;
                lhs = Expr::Bin(BinOp::Mul, Box::new(lhs), Box::new(rhs), pos);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        if self.is_sym('-') {
            let pos = self.bump().pos;
            return Ok(Expr::Neg(Box::new(self.unary()?), pos));
        }
        self.power()
    }

    fn power(&mut self) -> PResult<Expr> {
        let base = self.atom()?;
        if self.is_sym('^') {
            self.bump();
            let pos = base.pos();
            let e = self.integer("an exponent")?;
            return Ok(Expr::Pow(Box::new(base), e, pos));
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<Expr> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Number(s) => {
                if !s.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Diagnostic::new(t.pos, format!("`{s}` is not an integer")));
                }
                self.bump();
                Ok(Expr::Num(s, t.pos))
            }
            Tok::Ident(_) => Ok(Expr::Var(self.ident()?)),
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            _ => self.err("an expression"),
        }
    }
}

/// Parses the grammar only; names, kinds and homogeneity are checked by
/// [`crate::validate`].
pub fn parse_syntax(src: &str) -> Result<Script, Diagnostic> {
    let toks = tokenize(src)?;
    Parser { toks, at: 0 }.script()
}

/// Parses built-in text; its positions are blanked so diagnostics can tell
/// fixture declarations from the user's.
pub fn parse_fixture(src: &str) -> Result<Script, Diagnostic> {
    let mut toks = tokenize(src)?;
    for t in &mut toks {
        t.pos = Pos::default();
    }
    Parser { toks, at: 0 }.script()
}

/// Parses a polynomial expression on its own.
pub fn parse_expr(src: &str) -> Result<Expr, Diagnostic> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, at: 0 };
    let e = p.expr()?;
    if p.peek().tok != Tok::Eof {
        return p.err("end of expression");
    }
    Ok(e)
}
