//! Recursive-descent parser with name and kind resolution.

use std::collections::HashMap;

use super::ast::*;
use super::lexer::{lex, Tok, Token};
use super::{DslError, ErrorKind};
use crate::laws;

pub fn parse(src: &str) -> Result<Program, DslError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, symbols: HashMap::new(), last_proximity: None };
    let mut items = Vec::new();
    loop {
        p.skip_newlines();
        if p.peek() == &Tok::Eof {
            break;
        }
        items.push(p.item()?);
        p.end_of_statement()?;
    }
    Ok(Program { items })
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    symbols: HashMap<String, DeclKind>,
    last_proximity: Option<Name>,
}

type PResult<T> = Result<T, DslError>;

const UNIVERSE_WORDS: [&str; 3] = ["finite", "integers", "unit_interval"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn span(&self) -> Span {
        self.toks[self.pos].span.clone()
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(DslError::syntax(self.span(), msg))
    }

    fn unexpected<T>(&self, wanted: &str) -> PResult<T> {
        self.error(format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> PResult<Span> {
        if self.peek() == &t {
            Ok(self.bump().span)
        } else {
            let wanted = t.describe();
            self.unexpected(&wanted)
        }
    }

    fn skip_newlines(&mut self) {
        while self.peek() == &Tok::Newline {
            self.bump();
        }
    }

    fn end_of_statement(&mut self) -> PResult<()> {
        match self.peek() {
            Tok::Newline | Tok::Eof => Ok(()),
            _ => self.unexpected("end of line"),
        }
    }

    fn ident(&mut self) -> PResult<Name> {
        match self.peek().clone() {
            Tok::Ident(text) => Ok(Name { text, span: self.bump().span }),
            _ => self.unexpected("an identifier"),
        }
    }

    fn keyword(&mut self, word: &str) -> PResult<Span> {
        match self.peek() {
            Tok::Ident(s) if s == word => Ok(self.bump().span),
            _ => self.unexpected(&format!("'{word}'")),
        }
    }

    fn peek_ident(&self) -> Option<&str> {
        match self.peek() {
            Tok::Ident(s) => Some(s),
            _ => None,
        }
    }

    /// `word(` at the cursor.
    fn at_call(&self, word: &str) -> bool {
        self.peek_ident() == Some(word) && self.peek_at(1) == &Tok::LParen
    }

    fn uint(&mut self) -> PResult<u32> {
        match *self.peek() {
            Tok::Int(n) if n <= u32::MAX as i64 => {
                self.bump();
                Ok(n as u32)
            }
            _ => self.unexpected("a nonnegative integer"),
        }
    }

    fn int(&mut self) -> PResult<i64> {
        let neg = self.eat(&Tok::Minus);
        match *self.peek() {
            Tok::Int(n) => {
                self.bump();
                Ok(if neg { -n } else { n })
            }
            _ => self.unexpected("an integer"),
        }
    }

    fn num(&mut self) -> PResult<Num> {
        let span = self.span();
        let numer = self.int()?;
        let denom = if self.eat(&Tok::Slash) { self.int()? } else { 1 };
        if denom == 0 {
            return Err(DslError::syntax(span, "zero denominator"));
        }
        Ok(Num { numer, denom })
    }

    fn point(&mut self) -> PResult<PointLit> {
        if self.peek_ident() == Some("inf") {
            self.bump();
            return Ok(PointLit::Inf);
        }
        Ok(PointLit::Num(self.num()?))
    }

    /// A declared name of the given kind.
    fn reference(&mut self, kind: DeclKind) -> PResult<Name> {
        let name = self.ident()?;
        self.resolve(&name, kind)?;
        Ok(name)
    }

    fn resolve(&self, name: &Name, kind: DeclKind) -> PResult<()> {
        match self.symbols.get(&name.text) {
            None => Err(DslError::new(name.span.clone(), ErrorKind::UnknownIdentifier(name.text.clone()))),
            Some(&found) if found != kind => Err(DslError::new(
                name.span.clone(),
                ErrorKind::WrongKind { name: name.text.clone(), expected: kind.keyword(), found: found.keyword() },
            )),
            Some(_) => Ok(()),
        }
    }

    fn item(&mut self) -> PResult<Item> {
        let head = self.ident()?;
        if let Some(kind) = DeclKind::from_keyword(&head.text) {
            return Ok(Item::Decl(self.declaration(kind)?));
        }
        let cmd = match head.text.as_str() {
            "check" => self.check(false)?,
            "find_counterexample" => self.check(true)?,
            "stone" => self.stone(head.span)?,
            "report" => Command::Report(head.span),
            other => {
                return Err(DslError::syntax(head.span, format!("unknown statement '{other}'")));
            }
        };
        Ok(Item::Command(cmd))
    }

    fn declaration(&mut self, kind: DeclKind) -> PResult<Decl> {
        let name = self.ident()?;
        if self.symbols.contains_key(&name.text) {
            return Err(DslError::new(name.span.clone(), ErrorKind::Duplicate(name.text.clone())));
        }
        self.expect(Tok::Eq)?;
        let value = match kind {
            DeclKind::Universe => DeclValue::Universe(self.universe_lit()?),
            DeclKind::Set => {
                let expr = self.set_expr()?;
                let within = if self.peek_ident() == Some("in") {
                    self.bump();
                    Some(self.universe_ref()?)
                } else {
                    None
                };
                DeclValue::Set { expr, within }
            }
            DeclKind::Algebra => DeclValue::Algebra(self.algebra_expr()?),
            DeclKind::Proximity => DeclValue::Proximity(self.prox_expr()?),
            DeclKind::Seq => DeclValue::Seq(self.seq_expr()?),
            DeclKind::Fn => DeclValue::Fn(self.fn_decl()?),
            DeclKind::FnSeq => DeclValue::FnSeq(self.fnseq_expr()?),
        };
        self.symbols.insert(name.text.clone(), kind);
        if kind == DeclKind::Proximity {
            self.last_proximity = Some(name.clone());
        }
        Ok(Decl { name, value })
    }

    fn universe_lit(&mut self) -> PResult<UniverseLit> {
        match self.peek_ident() {
            Some("finite") => {
                self.bump();
                self.expect(Tok::LParen)?;
                let n = self.uint()?;
                self.expect(Tok::RParen)?;
                Ok(UniverseLit::Finite(n))
            }
            Some("integers") => {
                self.bump();
                let with_infinity = self.peek_ident() == Some("with_infinity");
                if with_infinity {
                    self.bump();
                }
                Ok(UniverseLit::Integers { with_infinity })
            }
            Some("unit_interval") => {
                self.bump();
                Ok(UniverseLit::UnitInterval)
            }
            _ => self.unexpected("finite(N), integers or unit_interval"),
        }
    }

    fn at_universe(&self) -> bool {
        match self.peek_ident() {
            Some(w) if UNIVERSE_WORDS.contains(&w) => true,
            Some(w) => self.symbols.get(w) == Some(&DeclKind::Universe),
            None => false,
        }
    }

    fn universe_ref(&mut self) -> PResult<UniverseRef> {
        let span = self.span();
        match self.peek_ident() {
            Some(w) if UNIVERSE_WORDS.contains(&w) => Ok(UniverseRef::Lit(self.universe_lit()?, span)),
            _ => Ok(UniverseRef::Name(self.reference(DeclKind::Universe)?)),
        }
    }

    /// `U ;` prefix inside `atoms(...)` and friends.
    fn optional_universe_prefix(&mut self) -> PResult<Option<UniverseRef>> {
        if self.at_universe() {
            let u = self.universe_ref()?;
            self.expect(Tok::Semi)?;
            Ok(Some(u))
        } else {
            Ok(None)
        }
    }

    fn set_expr(&mut self) -> PResult<SetExpr> {
        let mut lhs = self.set_primary()?;
        loop {
            let op = match self.peek() {
                Tok::Plus | Tok::Union => SetOp::Union,
                Tok::Minus | Tok::Diff => SetOp::Difference,
                Tok::Inter => SetOp::Intersect,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.set_primary()?;
            lhs = SetExpr::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) };
        }
    }

    fn set_primary(&mut self) -> PResult<SetExpr> {
        let span = self.span();
        match self.peek().clone() {
            Tok::LBrace => {
                self.bump();
                let mut points = Vec::new();
                if !self.eat(&Tok::RBrace) {
                    loop {
                        points.push(self.point()?);
                        if self.eat(&Tok::RBrace) {
                            break;
                        }
                        self.expect(Tok::Comma)?;
                    }
                }
                Ok(SetExpr::Points(points, span))
            }
            Tok::LBracket => {
                self.bump();
                self.interval_rest(true, span)
            }
            Tok::LParen => {
                self.bump();
                if matches!(self.peek(), Tok::Int(_) | Tok::Minus) {
                    self.interval_rest(false, span)
                } else {
                    let e = self.set_expr()?;
                    self.expect(Tok::RParen)?;
                    Ok(e)
                }
            }
            Tok::Ident(word) => match word.as_str() {
                "periodic" if self.peek_at(1) == &Tok::LParen => {
                    self.bump();
                    self.bump();
                    self.keyword("p")?;
                    self.expect(Tok::Eq)?;
                    let period = self.uint()?;
                    self.expect(Tok::Comma)?;
                    self.keyword("residues")?;
                    self.expect(Tok::Eq)?;
                    self.expect(Tok::LBrace)?;
                    let mut residues = Vec::new();
                    if !self.eat(&Tok::RBrace) {
                        loop {
                            residues.push(self.uint()?);
                            if self.eat(&Tok::RBrace) {
                                break;
                            }
                            self.expect(Tok::Comma)?;
                        }
                    }
                    self.expect(Tok::RParen)?;
                    if period == 0 {
                        return Err(DslError::syntax(span, "period must be positive"));
                    }
                    Ok(SetExpr::Periodic { period, residues, span })
                }
                "empty" => {
                    self.bump();
                    Ok(SetExpr::Empty(span))
                }
                "full" => {
                    self.bump();
                    Ok(SetExpr::Full(span))
                }
                "complement" if self.peek_at(1) == &Tok::LParen => {
                    self.bump();
                    self.bump();
                    let e = self.set_expr()?;
                    self.expect(Tok::RParen)?;
                    Ok(SetExpr::Complement(Box::new(e)))
                }
                "union" | "intersect" | "difference" if self.peek_at(1) == &Tok::LParen => {
                    let op = match word.as_str() {
                        "union" => SetOp::Union,
                        "intersect" => SetOp::Intersect,
                        _ => SetOp::Difference,
                    };
                    self.bump();
                    self.bump();
                    let lhs = self.set_expr()?;
                    self.expect(Tok::Comma)?;
                    let rhs = self.set_expr()?;
                    self.expect(Tok::RParen)?;
                    Ok(SetExpr::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) })
                }
                _ => Ok(SetExpr::Ref(self.reference(DeclKind::Set)?)),
            },
            _ => self.unexpected("a set"),
        }
    }

    fn interval_rest(&mut self, lo_closed: bool, span: Span) -> PResult<SetExpr> {
        let lo = self.num()?;
        self.expect(Tok::Comma)?;
        let hi = self.num()?;
        let hi_closed = match self.peek() {
            Tok::RBracket => true,
            Tok::RParen => false,
            _ => return self.unexpected("']' or ')'"),
        };
        self.bump();
        Ok(SetExpr::Interval { lo, lo_closed, hi, hi_closed, span })
    }

    fn set_list(&mut self) -> PResult<Vec<SetExpr>> {
        let mut sets = vec![self.set_expr()?];
        while self.eat(&Tok::Comma) {
            sets.push(self.set_expr()?);
        }
        Ok(sets)
    }

    fn algebra_expr(&mut self) -> PResult<AlgebraExpr> {
        let span = self.span();
        let word = self.peek_ident().map(str::to_string);
        let e = match word.as_deref() {
            Some(w @ ("atoms" | "generated")) if self.at_call(w) => {
                let atoms = w == "atoms";
                self.bump();
                self.bump();
                let within = self.optional_universe_prefix()?;
                let sets = self.set_list()?;
                self.expect(Tok::RParen)?;
                if atoms {
                    AlgebraExpr::Atoms { within, sets, span }
                } else {
                    AlgebraExpr::Generated { within, sets, span }
                }
            }
            Some(w @ ("finite_cofinite" | "powerset" | "trivial")) if self.at_call(w) => {
                let w = w.to_string();
                self.bump();
                self.bump();
                let u = self.universe_ref()?;
                self.expect(Tok::RParen)?;
                match w.as_str() {
                    "finite_cofinite" => AlgebraExpr::FiniteCofinite(u),
                    "powerset" => AlgebraExpr::PowerSet(u),
                    _ => AlgebraExpr::Trivial(u),
                }
            }
            Some(w @ ("from_proximity" | "induced" | "proximally_baire")) if self.at_call(w) => {
                let baire = w == "proximally_baire";
                self.bump();
                self.bump();
                let d = Box::new(self.prox_expr()?);
                self.expect(Tok::RParen)?;
                if baire {
                    AlgebraExpr::ProximallyBaire(d)
                } else {
                    AlgebraExpr::FromProximity(d)
                }
            }
            _ => AlgebraExpr::Ref(self.reference(DeclKind::Algebra)?),
        };
        Ok(e)
    }

    fn prox_expr(&mut self) -> PResult<ProxExpr> {
        let word = self.peek_ident().map(str::to_string);
        let e = match word.as_deref() {
            Some(w @ ("discrete" | "one_point" | "metric")) if self.at_call(w) => {
                let w = w.to_string();
                self.bump();
                self.bump();
                let u = self.universe_ref()?;
                self.expect(Tok::RParen)?;
                match w.as_str() {
                    "discrete" => ProxExpr::Discrete(u),
                    "one_point" => ProxExpr::OnePoint(u),
                    _ => ProxExpr::Metric(u),
                }
            }
            Some("from_algebra") if self.at_call("from_algebra") => {
                self.bump();
                self.bump();
                let m = self.algebra_expr()?;
                self.expect(Tok::RParen)?;
                ProxExpr::FromAlgebra(Box::new(m))
            }
            Some("coreflection") if self.at_call("coreflection") => {
                self.bump();
                self.bump();
                let d = self.prox_expr()?;
                self.expect(Tok::RParen)?;
                ProxExpr::Coreflection(Box::new(d))
            }
            Some("subspace") if self.at_call("subspace") => {
                self.bump();
                self.bump();
                let d = self.prox_expr()?;
                self.expect(Tok::Comma)?;
                let s = self.set_expr()?;
                self.expect(Tok::RParen)?;
                ProxExpr::Subspace(Box::new(d), s)
            }
            Some("table") if self.at_call("table") => {
                self.bump();
                self.bump();
                let within = self.universe_ref()?;
                let mut pairs = Vec::new();
                if self.eat(&Tok::Semi) {
                    loop {
                        let a = self.set_expr()?;
                        self.expect(Tok::Tilde)?;
                        let b = self.set_expr()?;
                        pairs.push((a, b));
                        if !self.eat(&Tok::Comma) {
                            break;
                        }
                    }
                }
                self.expect(Tok::RParen)?;
                ProxExpr::Table { within, pairs }
            }
            _ => ProxExpr::Ref(self.reference(DeclKind::Proximity)?),
        };
        Ok(e)
    }

    fn seq_expr(&mut self) -> PResult<SeqExpr> {
        let span = self.span();
        let word = self.ident()?;
        self.expect(Tok::LParen)?;
        let e = match word.text.as_str() {
            "constant" => SeqExpr::Constant(self.set_expr()?),
            "prefixes" => SeqExpr::Prefixes(self.set_expr()?),
            "neighborhoods" => SeqExpr::Neighborhoods(self.set_expr()?),
            "shrink_tail" => {
                self.keyword("core")?;
                self.expect(Tok::Eq)?;
                let core = self.set_expr()?;
                self.expect(Tok::Comma)?;
                self.keyword("tail")?;
                self.expect(Tok::Eq)?;
                let tail = self.set_expr()?;
                SeqExpr::ShrinkTail { core, tail }
            }
            "list" => {
                let mut items = Vec::new();
                loop {
                    if self.peek_ident() == Some("tail") && self.peek_at(1) == &Tok::Eq {
                        self.bump();
                        self.bump();
                        break;
                    }
                    items.push(self.set_expr()?);
                    self.expect(Tok::Semi)?;
                }
                let tail = self.set_expr()?;
                SeqExpr::List { items, tail }
            }
            "exhaust" => {
                let lo = self.num()?;
                self.expect(Tok::Comma)?;
                let hi = self.num()?;
                SeqExpr::Exhaust { lo, hi, span }
            }
            other => {
                return Err(DslError::syntax(word.span, format!("unknown sequence form '{other}'")));
            }
        };
        self.expect(Tok::RParen)?;
        Ok(e)
    }

    fn fn_decl(&mut self) -> PResult<FnDecl> {
        let span = self.span();
        let expr = self.fn_expr()?;
        let signature = if self.eat(&Tok::Colon) {
            let dom = self.universe_ref()?;
            self.expect(Tok::Arrow)?;
            let cod = self.universe_ref()?;
            Some((dom, cod))
        } else {
            None
        };
        if signature.is_none() && expr.needs_signature() {
            return Err(DslError::syntax(span, "this map needs a signature ': DOMAIN -> CODOMAIN'"));
        }
        Ok(FnDecl { expr, signature, span })
    }

    fn braced<T>(&mut self, sep: Tok, mut entry: impl FnMut(&mut Self) -> PResult<T>) -> PResult<Vec<T>> {
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        if self.eat(&Tok::RBrace) {
            return Ok(out);
        }
        loop {
            out.push(entry(self)?);
            if self.eat(&Tok::RBrace) {
                return Ok(out);
            }
            self.expect(sep.clone())?;
        }
    }

    fn fn_expr(&mut self) -> PResult<FnExpr> {
        let word = self.peek_ident().map(str::to_string);
        let e = match word.as_deref() {
            Some("table") if self.peek_at(1) == &Tok::LBrace => {
                self.bump();
                FnExpr::Table(self.braced(Tok::Comma, |p| {
                    let x = p.point()?;
                    p.expect(Tok::Arrow)?;
                    Ok((x, p.point()?))
                })?)
            }
            Some("step") if self.peek_at(1) == &Tok::LBrace => {
                self.bump();
                FnExpr::Step(self.braced(Tok::Semi, |p| {
                    let s = p.set_expr()?;
                    p.expect(Tok::Arrow)?;
                    Ok((s, p.point()?))
                })?)
            }
            Some("residue_map") if self.peek_at(1) == &Tok::LBrace => {
                self.bump();
                self.bump();
                self.keyword("p")?;
                self.expect(Tok::Eq)?;
                let period = self.uint()?;
                self.expect(Tok::Semi)?;
                let mut values = Vec::new();
                loop {
                    let r = self.uint()?;
                    self.expect(Tok::Arrow)?;
                    values.push((r, self.point()?));
                    if !self.eat(&Tok::Comma) {
                        break;
                    }
                }
                let mut exceptions = Vec::new();
                let mut at_infinity = None;
                while self.eat(&Tok::Semi) {
                    match self.peek_ident() {
                        Some("except") => {
                            self.bump();
                            loop {
                                let k = self.int()?;
                                self.expect(Tok::Arrow)?;
                                exceptions.push((k, self.point()?));
                                if !self.eat(&Tok::Comma) {
                                    break;
                                }
                            }
                        }
                        Some("inf") => {
                            self.bump();
                            self.expect(Tok::Arrow)?;
                            at_infinity = Some(self.point()?);
                        }
                        _ => return self.unexpected("'except' or 'inf'"),
                    }
                }
                self.expect(Tok::RBrace)?;
                FnExpr::ResidueMap { period, values, exceptions, at_infinity }
            }
            Some("chi") if self.at_call("chi") => {
                self.bump();
                self.bump();
                let s = self.set_expr()?;
                self.expect(Tok::RParen)?;
                FnExpr::Chi(s)
            }
            Some("constant") if self.at_call("constant") => {
                self.bump();
                self.bump();
                let v = self.point()?;
                self.expect(Tok::RParen)?;
                FnExpr::Constant(v)
            }
            Some("shift") if self.at_call("shift") => {
                self.bump();
                self.bump();
                let k = self.int()?;
                self.expect(Tok::RParen)?;
                FnExpr::Shift(k)
            }
            Some("identity") => {
                self.bump();
                FnExpr::Identity
            }
            Some("decay") if self.at_call("decay") => {
                self.bump();
                self.bump();
                let s = self.set_expr()?;
                let n = if self.eat(&Tok::Comma) { Some(self.uint()?) } else { None };
                self.expect(Tok::RParen)?;
                FnExpr::Decay(s, n)
            }
            Some("then") if self.at_call("then") => {
                self.bump();
                self.bump();
                let f = self.reference(DeclKind::Fn)?;
                self.expect(Tok::Comma)?;
                let g = self.reference(DeclKind::Fn)?;
                self.expect(Tok::RParen)?;
                FnExpr::Then(f, g)
            }
            _ => FnExpr::Ref(self.reference(DeclKind::Fn)?),
        };
        Ok(e)
    }

    fn fnseq_expr(&mut self) -> PResult<FnSeqExpr> {
        let word = self.ident()?;
        self.expect(Tok::LParen)?;
        let e = match word.text.as_str() {
            "powers" => FnSeqExpr::Powers(self.reference(DeclKind::Fn)?),
            "constant" => FnSeqExpr::Constant(self.reference(DeclKind::Fn)?),
            "eventually" => {
                let mut items = Vec::new();
                loop {
                    if self.peek_ident() == Some("limit") && self.peek_at(1) == &Tok::Eq {
                        self.bump();
                        self.bump();
                        break;
                    }
                    items.push(self.reference(DeclKind::Fn)?);
                    self.expect(Tok::Semi)?;
                }
                FnSeqExpr::Eventually { items, limit: self.reference(DeclKind::Fn)? }
            }
            other => {
                return Err(DslError::syntax(word.span, format!("unknown function sequence form '{other}'")));
            }
        };
        self.expect(Tok::RParen)?;
        Ok(e)
    }

    fn check(&mut self, find: bool) -> PResult<Command> {
        let law_name = self.ident()?;
        let law = laws::law(&law_name.text)
            .map_err(|_| DslError::new(law_name.span.clone(), ErrorKind::UnknownLaw(law_name.text.clone())))?;
        let mut args = Vec::new();
        while !matches!(self.peek(), Tok::Newline | Tok::Eof) {
            if self.at_call("all_algebras") {
                let span = self.bump().span;
                self.bump();
                let n = self.uint()?;
                self.expect(Tok::RParen)?;
                if !(1..=6).contains(&n) {
                    return Err(DslError::syntax(span, "all_algebras(n) needs 1 ≤ n ≤ 6"));
                }
                args.push(Arg::AllAlgebras(n, span));
            } else {
                let name = self.ident()?;
                if !self.symbols.contains_key(&name.text) {
                    return Err(DslError::new(name.span.clone(), ErrorKind::UnknownIdentifier(name.text)));
                }
                args.push(Arg::Name(name));
            }
        }
        let kinds = |args: &[Arg], symbols: &HashMap<String, DeclKind>| -> Vec<Option<laws::Arg>> {
            args.iter()
                .map(|a| match a {
                    Arg::AllAlgebras(..) => Some(laws::Arg::Algebra),
                    Arg::Name(n) => kind_arg(symbols[&n.text]),
                })
                .collect()
        };
        let fits = |ks: &[Option<laws::Arg>]| {
            ks.len() <= law.args.len()
                && ks.len() + law.optional >= law.args.len()
                && ks.iter().zip(law.args).all(|(k, a)| k.as_ref() == Some(a))
        };
        if !fits(&kinds(&args, &self.symbols)) {
            // The proximity argument may be left implicit: the latest declared one.
            let implicit = match (&self.last_proximity, law.args.first()) {
                (Some(d), Some(laws::Arg::Proximity)) => {
                    let mut with = vec![Arg::Name(Name { text: d.text.clone(), span: law_name.span.clone() })];
                    with.extend(args.iter().cloned());
                    fits(&kinds(&with, &self.symbols)).then_some(with)
                }
                _ => None,
            };
            match implicit {
                Some(with) => args = with,
                None => {
                    return Err(DslError::new(
                        law_name.span.clone(),
                        ErrorKind::Arity { law: law.id.to_string(), expected: law.signature() },
                    ))
                }
            }
        }
        Ok(Command::Check { law: law_name, args, find })
    }

    fn stone(&mut self, span: Span) -> PResult<Command> {
        let algebra = self.reference(DeclKind::Algebra)?;
        let ideal = if self.eat(&Tok::Slash) {
            if self.at_call("principal") {
                self.bump();
                self.bump();
                let g = self.set_expr()?;
                self.expect(Tok::RParen)?;
                Some(IdealExpr::Principal(g))
            } else {
                self.keyword("finite_sets")?;
                Some(IdealExpr::FiniteSets)
            }
        } else {
            None
        };
        let mut dot = None;
        while let Tok::Flag(flag) = self.peek().clone() {
            let fspan = self.bump().span;
            match flag.as_str() {
                "dot" => match self.peek().clone() {
                    Tok::Str(path) => {
                        self.bump();
                        dot = Some(path);
                    }
                    Tok::Ident(path) => {
                        self.bump();
                        dot = Some(path);
                    }
                    _ => return self.unexpected("a path"),
                },
                other => return Err(DslError::syntax(fspan, format!("unknown flag '--{other}'"))),
            }
        }
        Ok(Command::Stone { algebra, ideal, dot, span })
    }
}

fn kind_arg(k: DeclKind) -> Option<laws::Arg> {
    Some(match k {
        DeclKind::Set => laws::Arg::Set,
        DeclKind::Algebra => laws::Arg::Algebra,
        DeclKind::Proximity => laws::Arg::Proximity,
        DeclKind::Seq => laws::Arg::Sequence,
        DeclKind::Fn => laws::Arg::Function,
        DeclKind::FnSeq => laws::Arg::FunctionSequence,
        DeclKind::Universe => return None,
    })
}
