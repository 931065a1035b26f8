//! Canonical text for scripts; reparsing the output gives an equal tree.

use std::fmt::{self, Display, Formatter};

use crate::ast::*;

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
        Expr::Bin(BinOp::Mul, ..) => 2,
        Expr::Neg(..) => 3,
        Expr::Pow(..) => 4,
        Expr::Num(..) | Expr::Var(_) => 5,
    }
}

fn wrap(f: &mut Formatter<'_>, e: &Expr, paren: bool) -> fmt::Result {
    if paren {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl Display for Expr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(s, _) => f.write_str(s),
            Expr::Var(id) => f.write_str(&id.name),
            Expr::Neg(a, _) => {
                f.write_str("-")?;
                wrap(f, a, prec(a) < 3)
            }
            Expr::Pow(a, e, _) => {
                wrap(f, a, prec(a) < 5)?;
                write!(f, "^{e}")
            }
            Expr::Bin(op, a, b, _) => {
                let p = prec(self);
                wrap(f, a, prec(a) < p)?;
                f.write_str(match op {
                    BinOp::Add => " + ",
                    BinOp::Sub => " - ",
                    BinOp::Mul => "*",
                })?;
                wrap(f, b, prec(b) <= p)
            }
        }
    }
}

fn join<T: Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

impl Display for Ident {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "F({p})"),
            FieldSpec::Default => f.write_str("k"),
        }
    }
}

impl Display for Arg {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        if let Some(n) = &self.name {
            write!(f, "{n}=")?;
        }
        write!(f, "{}", self.value)
    }
}

impl Display for Item {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Item::Ring(r) => {
                write!(f, "ring {} = {}[{}]", r.name, r.field, join(&r.vars))?;
                if !r.relations.is_empty() {
                    write!(f, " / ({})", join(&r.relations))?;
                }
            }
            Item::Module(m) => {
                write!(f, "module {} = ", m.name)?;
                match &m.body {
                    ModuleExpr::Coker { ring, rows, matrix } => {
                        let rows_text: Vec<String> = matrix.iter().map(|row| format!("[{}]", join(row))).collect();
                        write!(f, "coker({ring}, rows={rows}, [{}])", rows_text.join(", "))?;
                    }
                    ModuleExpr::Residue { ring } => write!(f, "residue({ring})")?,
                    ModuleExpr::Syzygy { module, index } => write!(f, "syzygy({module}, {index})")?,
                }
            }
            Item::Deform(d) => write!(f, "deform {} = {} / ({})", d.name, d.base, join(&d.sequence))?,
            Item::Task(t) => write!(f, "task {}({})", t.kind.name(), join(&t.args))?,
            Item::Option(o) => write!(f, "option {} = {}", o.key, o.value)?,
        }
        f.write_str(";")
    }
}

impl Display for Script {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            writeln!(f, "{item}")?;
        }
        Ok(())
    }
}
