//! Recursive-descent parser for the ASCII formula grammar.
//!
//! Precedence `~` > `&` > `|` > `->` > `<->`; `->` and `<->` associate to
//! the right, `&` and `|` to the left; parentheses override. The Unicode
//! connectives `¬ ∧ ∨ → ↔` are accepted on input. `true` and `false` are
//! reserved constants.

use super::{Formula, Signature};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("undeclared atom `{name}` at offset {offset}")]
    UndeclaredAtom { name: String, offset: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Imp,
    Iff,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::True => "`true`".into(),
            Tok::False => "`false`".into(),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Imp => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

fn lex(text: &str) -> Result<(Vec<(Tok, usize)>, usize), ParseError> {
    let mut toks = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
            continue;
        }
        let tok = match c {
            '~' | '¬' => {
                it.next();
                Tok::Not
            }
            '&' | '∧' => {
                it.next();
                Tok::And
            }
            '|' | '∨' => {
                it.next();
                Tok::Or
            }
            '→' => {
                it.next();
                Tok::Imp
            }
            '↔' => {
                it.next();
                Tok::Iff
            }
            '(' => {
                it.next();
                Tok::LParen
            }
            ')' => {
                it.next();
                Tok::RParen
            }
            '-' => {
                it.next();
                match it.peek() {
                    Some(&(_, '>')) => {
                        it.next();
                        Tok::Imp
                    }
                    _ => {
                        return Err(ParseError::Syntax {
                            offset: i,
                            message: "expected `->`".into(),
                        })
                    }
                }
            }
            '<' => {
                it.next();
                let ok = matches!(it.peek(), Some(&(_, '-'))) && {
                    it.next();
                    matches!(it.peek(), Some(&(_, '>')))
                };
                if !ok {
                    return Err(ParseError::Syntax {
                        offset: i,
                        message: "expected `<->`".into(),
                    });
                }
                it.next();
                Tok::Iff
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&(_, c)) = it.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        it.next();
                    } else {
                        break;
                    }
                }
                match name.as_str() {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    _ => Tok::Ident(name),
                }
            }
            other => {
                return Err(ParseError::Syntax {
                    offset: i,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        toks.push((tok, i));
    }
    Ok((toks, text.len()))
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    eof: usize,
    sig: &'a Signature,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(Tok, usize)> {
        self.toks.get(self.pos)
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.eof, |&(_, o)| o)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, want: &Tok) -> bool {
        if self.peek().map(|(t, _)| t) == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let message = match self.peek() {
            Some((t, _)) => format!("expected {expected}, found {}", t.describe()),
            None => format!("expected {expected}, found end of input"),
        };
        ParseError::Syntax {
            offset: self.offset(),
            message,
        }
    }

    // iff := imp ('<->' iff)?
    fn iff(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.imp()?;
        if self.eat(&Tok::Iff) {
            Ok(Formula::iff(lhs, self.iff()?))
        } else {
            Ok(lhs)
        }
    }

    // imp := or ('->' imp)?
    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if self.eat(&Tok::Imp) {
            Ok(Formula::imp(lhs, self.imp()?))
        } else {
            Ok(lhs)
        }
    }

    // or := and ('|' and)*
    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Or) {
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    // and := unary ('&' unary)*
    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::And) {
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some((Tok::Not, _)) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some((Tok::LParen, _)) => {
                self.pos += 1;
                let inner = self.iff()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.unexpected("`)`"));
                }
                Ok(inner)
            }
            Some((Tok::True, _)) => {
                self.pos += 1;
                Ok(Formula::Top)
            }
            Some((Tok::False, _)) => {
                self.pos += 1;
                Ok(Formula::Bottom)
            }
            Some((Tok::Ident(_), _)) => {
                let (tok, offset) = self.bump().unwrap();
                let name = match tok {
                    Tok::Ident(n) => n,
                    _ => unreachable!(),
                };
                if self.sig.index_of(&name).is_none() {
                    return Err(ParseError::UndeclaredAtom { name, offset });
                }
                Ok(Formula::Atom(name))
            }
            _ => Err(self.unexpected("a formula")),
        }
    }
}

/// Parse `text` against `sig`; every atom must be declared.
pub fn parse_formula(text: &str, sig: &Signature) -> Result<Formula, ParseError> {
    let (toks, eof) = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        eof,
        sig,
    };
    let f = p.iff()?;
    match p.peek() {
        None => Ok(f),
        Some((t, o)) => Err(ParseError::Syntax {
            offset: *o,
            message: format!("unexpected trailing {}", t.describe()),
        }),
    }
}
