//! Tokens with source positions.

use super::ast::Span;
use super::DslError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(i64),
    Str(String),
    /// `--name`
    Flag(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
    Eq,
    Plus,
    Minus,
    Slash,
    Arrow,
    Union,
    Inter,
    Diff,
    Tilde,
    Newline,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(n) => format!("'{n}'"),
            Tok::Str(s) => format!("\"{s}\""),
            Tok::Flag(s) => format!("'--{s}'"),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
            other => format!("'{}'", symbol(other)),
        }
    }
}

fn symbol(t: &Tok) -> &'static str {
    match t {
        Tok::LParen => "(",
        Tok::RParen => ")",
        Tok::LBrace => "{",
        Tok::RBrace => "}",
        Tok::LBracket => "[",
        Tok::RBracket => "]",
        Tok::Comma => ",",
        Tok::Semi => ";",
        Tok::Colon => ":",
        Tok::Eq => "=",
        Tok::Plus => "+",
        Tok::Minus => "-",
        Tok::Slash => "/",
        Tok::Arrow => "->",
        Tok::Union => "∪",
        Tok::Inter => "∩",
        Tok::Diff => "∖",
        Tok::Tilde => "~",
        _ => "?",
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

pub fn lex(src: &str) -> Result<Vec<Token>, DslError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let span = Span::new(line, col);
        let mut advance = 1;
        let tok = match c {
            '\n' => Some(Tok::Newline),
            ' ' | '\t' | '\r' => None,
            '#' => {
                while i + advance < chars.len() && chars[i + advance] != '\n' {
                    advance += 1;
                }
                None
            }
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            ';' => Some(Tok::Semi),
            ':' => Some(Tok::Colon),
            '=' => Some(Tok::Eq),
            '+' => Some(Tok::Plus),
            '/' => Some(Tok::Slash),
            '~' => Some(Tok::Tilde),
            '∪' | '|' => Some(Tok::Union),
            '∩' | '&' => Some(Tok::Inter),
            '∖' | '\\' => Some(Tok::Diff),
            '-' if chars.get(i + 1) == Some(&'>') => {
                advance = 2;
                Some(Tok::Arrow)
            }
            '-' if chars.get(i + 1) == Some(&'-') => {
                let start = i + 2;
                let mut j = start;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_' || chars[j] == '-') {
                    j += 1;
                }
                if j == start {
                    return Err(DslError::syntax(span, "expected a flag name after '--'"));
                }
                advance = j - i;
                Some(Tok::Flag(chars[start..j].iter().collect()))
            }
            '-' => Some(Tok::Minus),
            '"' => {
                let mut s = String::new();
                let mut j = i + 1;
                loop {
                    match chars.get(j) {
                        None | Some('\n') => return Err(DslError::syntax(span, "unterminated string")),
                        Some('"') => break,
                        Some('\\') if matches!(chars.get(j + 1), Some('"') | Some('\\')) => {
                            s.push(chars[j + 1]);
                            j += 2;
                        }
                        Some(&ch) => {
                            s.push(ch);
                            j += 1;
                        }
                    }
                }
                advance = j + 1 - i;
                Some(Tok::Str(s))
            }
            c if c.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let text: String = chars[i..j].iter().collect();
                let n = text.parse::<i64>().map_err(|_| DslError::syntax(span.clone(), "integer literal too large"))?;
                advance = j - i;
                Some(Tok::Int(n))
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_' || chars[j] == '.') {
                    j += 1;
                }
                advance = j - i;
                Some(Tok::Ident(chars[i..j].iter().collect()))
            }
            other => return Err(DslError::syntax(span, format!("unexpected character '{other}'"))),
        };
        if let Some(tok) = tok {
            out.push(Token { tok, span });
        }
        for _ in 0..advance {
            if chars[i] == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            i += 1;
        }
    }
    out.push(Token { tok: Tok::Eof, span: Span::new(line, col) });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_and_symbols() {
        let toks = lex("set E = periodic(p=2)\ncheck thm.2.1.4 M --dot \"a.dot\" # done").unwrap();
        let kinds: Vec<&Tok> = toks.iter().map(|t| &t.tok).collect();
        assert_eq!(kinds[0], &Tok::Ident("set".into()));
        assert!(kinds.contains(&&Tok::Ident("thm.2.1.4".into())));
        assert!(kinds.contains(&&Tok::Flag("dot".into())));
        assert!(kinds.contains(&&Tok::Str("a.dot".into())));
        let m = toks.iter().find(|t| t.tok == Tok::Ident("M".into())).unwrap();
        assert_eq!((m.span.line, m.span.col), (2, 17));
        assert!(lex("a $ b").is_err());
    }
}
