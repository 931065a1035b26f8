//! Syntax tree of a certification script.

use std::fmt;

/// Source position, 1-based. Positions never take part in equality, so a
/// reparsed pretty-print compares equal to the original tree.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Pos) -> bool {
        true
    }
}

impl Eq for Pos {}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub pos: Pos,
}

impl Ident {
    pub fn new(name: &str) -> Self {
        Ident {
            name: name.to_string(),
            pos: Pos::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
}

/// A polynomial expression; every node records where its text starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Integer literal, kept as written.
    Num(String, Pos),
    Var(Ident),
    Neg(Box<Expr>, Pos),
    Bin(BinOp, Box<Expr>, Box<Expr>, Pos),
    Pow(Box<Expr>, u32, Pos),
}

impl Expr {
    pub fn pos(&self) -> Pos {
        match self {
            Expr::Num(_, p) | Expr::Neg(_, p) | Expr::Bin(_, _, _, p) | Expr::Pow(_, _, p) => *p,
            Expr::Var(id) => id.pos,
        }
    }

    pub fn as_ident(&self) -> Option<&Ident> {
        match self {
            Expr::Var(id) => Some(id),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
    /// `k`: the script's default field.
    Default,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub name: Ident,
    pub field: FieldSpec,
    pub vars: Vec<Ident>,
    pub relations: Vec<Expr>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleExpr {
    /// Cokernel of a matrix given row by row.
    Coker {
        ring: Ident,
        rows: usize,
        matrix: Vec<Vec<Expr>>,
    },
    /// The residue field `k` of a ring.
    Residue { ring: Ident },
    /// The `n`-th syzygy module in a minimal resolution.
    Syzygy { module: Ident, index: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecl {
    pub name: Ident,
    pub body: ModuleExpr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformDecl {
    pub name: Ident,
    pub base: Ident,
    pub sequence: Vec<Expr>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TaskKind {
    Profile,
    Hilbert,
    Betti,
    Tor,
    Ext,
    KoszulAlgebra,
    Certify,
    GoodFactorization,
    Selmer,
}

impl TaskKind {
    pub const ALL: [TaskKind; 9] = [
        TaskKind::Profile,
        TaskKind::Hilbert,
        TaskKind::Betti,
        TaskKind::Tor,
        TaskKind::Ext,
        TaskKind::KoszulAlgebra,
        TaskKind::Certify,
        TaskKind::GoodFactorization,
        TaskKind::Selmer,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TaskKind::Profile => "profile",
            TaskKind::Hilbert => "hilbert",
            TaskKind::Betti => "betti",
            TaskKind::Tor => "tor",
            TaskKind::Ext => "ext",
            TaskKind::KoszulAlgebra => "koszul_algebra",
            TaskKind::Certify => "certify",
            TaskKind::GoodFactorization => "good_factorization",
            TaskKind::Selmer => "selmer",
        }
    }

    pub fn parse(s: &str) -> Option<TaskKind> {
        TaskKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arg {
    pub name: Option<Ident>,
    pub value: Expr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Task {
    pub kind: TaskKind,
    pub pos: Pos,
    pub args: Vec<Arg>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptionDecl {
    pub key: Ident,
    /// The value's tokens, concatenated without spaces.
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Ring(RingDecl),
    Module(ModuleDecl),
    Deform(DeformDecl),
    Task(Task),
    Option(OptionDecl),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub items: Vec<Item>,
}

impl Script {
    pub fn tasks(&self) -> impl Iterator<Item = &Task> {
        self.items.iter().filter_map(|i| match i {
            Item::Task(t) => Some(t),
            _ => None,
        })
    }

    pub fn num_declarations(&self) -> usize {
        self.items
            .iter()
            .filter(|i| matches!(i, Item::Ring(_) | Item::Module(_) | Item::Deform(_)))
            .count()
    }
}
