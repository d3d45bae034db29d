//! Syntax tree. Spans compare equal to each other, so trees that differ
//! only in layout are `==`.

use std::fmt;

#[derive(Debug, Clone, Default, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl Span {
    pub fn new(line: usize, col: usize) -> Self {
        Span { line, col }
    }
}

impl PartialEq for Span {
    fn eq(&self, _: &Span) -> bool {
        true
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Name {
    pub text: String,
    pub span: Span,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeclKind {
    Universe,
    Set,
    Algebra,
    Proximity,
    Seq,
    Fn,
    FnSeq,
}

impl DeclKind {
    pub fn keyword(self) -> &'static str {
        match self {
            DeclKind::Universe => "universe",
            DeclKind::Set => "set",
            DeclKind::Algebra => "algebra",
            DeclKind::Proximity => "proximity",
            DeclKind::Seq => "seq",
            DeclKind::Fn => "fn",
            DeclKind::FnSeq => "fnseq",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Some(match s {
            "universe" => DeclKind::Universe,
            "set" => DeclKind::Set,
            "algebra" => DeclKind::Algebra,
            "proximity" => DeclKind::Proximity,
            "seq" => DeclKind::Seq,
            "fn" => DeclKind::Fn,
            "fnseq" => DeclKind::FnSeq,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Program {
    pub items: Vec<Item>,
}

impl Program {
    pub fn declarations(&self) -> impl Iterator<Item = &Decl> {
        self.items.iter().filter_map(|i| match i {
            Item::Decl(d) => Some(d),
            Item::Command(_) => None,
        })
    }

    pub fn commands(&self) -> impl Iterator<Item = &Command> {
        self.items.iter().filter_map(|i| match i {
            Item::Command(c) => Some(c),
            Item::Decl(_) => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Decl(Decl),
    Command(Command),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decl {
    pub name: Name,
    pub value: DeclValue,
}

impl Decl {
    pub fn kind(&self) -> DeclKind {
        match &self.value {
            DeclValue::Universe(_) => DeclKind::Universe,
            DeclValue::Set { .. } => DeclKind::Set,
            DeclValue::Algebra(_) => DeclKind::Algebra,
            DeclValue::Proximity(_) => DeclKind::Proximity,
            DeclValue::Seq(_) => DeclKind::Seq,
            DeclValue::Fn(_) => DeclKind::Fn,
            DeclValue::FnSeq(_) => DeclKind::FnSeq,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeclValue {
    Universe(UniverseLit),
    Set { expr: SetExpr, within: Option<UniverseRef> },
    Algebra(AlgebraExpr),
    Proximity(ProxExpr),
    Seq(SeqExpr),
    Fn(FnDecl),
    FnSeq(FnSeqExpr),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniverseLit {
    Finite(u32),
    Integers { with_infinity: bool },
    UnitInterval,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UniverseRef {
    Name(Name),
    Lit(UniverseLit, Span),
}

/// Integer or fraction `n/d`, possibly negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Num {
    pub numer: i64,
    pub denom: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointLit {
    Num(Num),
    Inf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersect,
    Difference,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetExpr {
    Points(Vec<PointLit>, Span),
    Periodic { period: u32, residues: Vec<u32>, span: Span },
    Interval { lo: Num, lo_closed: bool, hi: Num, hi_closed: bool, span: Span },
    Empty(Span),
    Full(Span),
    Ref(Name),
    Complement(Box<SetExpr>),
    Binary { op: SetOp, lhs: Box<SetExpr>, rhs: Box<SetExpr> },
}

impl SetExpr {
    pub fn span(&self) -> &Span {
        match self {
            SetExpr::Points(_, s)
            | SetExpr::Periodic { span: s, .. }
            | SetExpr::Interval { span: s, .. }
            | SetExpr::Empty(s)
            | SetExpr::Full(s) => s,
            SetExpr::Ref(n) => &n.span,
            SetExpr::Complement(e) => e.span(),
            SetExpr::Binary { lhs, .. } => lhs.span(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraExpr {
    Atoms { within: Option<UniverseRef>, sets: Vec<SetExpr>, span: Span },
    Generated { within: Option<UniverseRef>, sets: Vec<SetExpr>, span: Span },
    FiniteCofinite(UniverseRef),
    PowerSet(UniverseRef),
    Trivial(UniverseRef),
    /// `M_δ`
    FromProximity(Box<ProxExpr>),
    ProximallyBaire(Box<ProxExpr>),
    Ref(Name),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProxExpr {
    Discrete(UniverseRef),
    OnePoint(UniverseRef),
    Metric(UniverseRef),
    FromAlgebra(Box<AlgebraExpr>),
    Subspace(Box<ProxExpr>, SetExpr),
    Table { within: UniverseRef, pairs: Vec<(SetExpr, SetExpr)> },
    Coreflection(Box<ProxExpr>),
    Ref(Name),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeqExpr {
    Constant(SetExpr),
    Prefixes(SetExpr),
    ShrinkTail { core: SetExpr, tail: SetExpr },
    List { items: Vec<SetExpr>, tail: SetExpr },
    Neighborhoods(SetExpr),
    Exhaust { lo: Num, hi: Num, span: Span },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FnDecl {
    pub expr: FnExpr,
    pub signature: Option<(UniverseRef, UniverseRef)>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FnExpr {
    Table(Vec<(PointLit, PointLit)>),
    ResidueMap {
        period: u32,
        values: Vec<(u32, PointLit)>,
        exceptions: Vec<(i64, PointLit)>,
        at_infinity: Option<PointLit>,
    },
    Chi(SetExpr),
    Step(Vec<(SetExpr, PointLit)>),
    Constant(PointLit),
    Shift(i64),
    Identity,
    Decay(SetExpr, Option<u32>),
    Then(Name, Name),
    Ref(Name),
}

impl FnExpr {
    /// Whether the declaration must name its domain and codomain.
    pub fn needs_signature(&self) -> bool {
        matches!(self, FnExpr::Table(_) | FnExpr::ResidueMap { .. } | FnExpr::Step(_) | FnExpr::Constant(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FnSeqExpr {
    Powers(Name),
    Constant(Name),
    Eventually { items: Vec<Name>, limit: Name },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arg {
    Name(Name),
    AllAlgebras(u32, Span),
}

impl Arg {
    pub fn span(&self) -> &Span {
        match self {
            Arg::Name(n) => &n.span,
            Arg::AllAlgebras(_, s) => s,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealExpr {
    Principal(SetExpr),
    FiniteSets,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Check { law: Name, args: Vec<Arg>, find: bool },
    Stone { algebra: Name, ideal: Option<IdealExpr>, dot: Option<String>, span: Span },
    Report(Span),
}
