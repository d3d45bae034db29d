//! Text format for declaring structures and running law checks.
//!
//! ```text
//! universe Z = integers
//! set E = periodic(p=2, residues={0})
//! proximity d = one_point(Z)
//! seq ZE = shrink_tail(core=E, tail=complement(E))
//! check thm.2.7 d ZE
//! ```

mod ast;
pub mod lexer;
mod parser;
mod render;
mod run;

use thiserror::Error;

pub use ast::*;
pub use parser::parse;
pub use render::{algebra_expr, prox_expr, render, set_expr, universe_lit};
pub use run::{elaborate, run, Env, RunOptions, RunOutput, Value};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown identifier {0}")]
    UnknownIdentifier(String),
    #[error("duplicate identifier {0}")]
    Duplicate(String),
    #[error("{name} is a {found}, expected a {expected}")]
    WrongKind { name: String, expected: &'static str, found: &'static str },
    #[error("unknown law id {0}")]
    UnknownLaw(String),
    #[error("law {law} expects {expected}")]
    Arity { law: String, expected: String },
    #[error("no universe declared before this literal")]
    NoUniverse,
    #[error("{name}: {0}", name = .0.name())]
    Eval(crate::Error),
}

/// A located error. Every variant maps to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {kind}")]
pub struct DslError {
    pub line: usize,
    pub col: usize,
    pub kind: ErrorKind,
}

impl DslError {
    pub fn new(span: Span, kind: ErrorKind) -> Self {
        DslError { line: span.line, col: span.col, kind }
    }

    pub fn syntax(span: Span, msg: impl Into<String>) -> Self {
        Self::new(span, ErrorKind::Syntax(msg.into()))
    }

    pub fn eval(span: &Span, err: crate::Error) -> Self {
        Self::new(span.clone(), ErrorKind::Eval(err))
    }
}
