//! Recursive-descent parser for the formula grammar:
//!
//! ```text
//! formula := iff
//! iff     := imp ("<->" imp)*
//! imp     := or ("->" imp)?
//! or      := and ("|" and)*
//! and     := not ("&" not)*
//! not     := "!" not | atom
//! atom    := ident | "true" | "false" | "(" formula ")"
//! ```
//!
//! Whitespace is insignificant; identifiers match `[A-Za-z][A-Za-z0-9_]*`.

use crate::{Error, Result};

#[derive(Debug)]
pub(super) enum Ast {
    Const(bool),
    Var(String),
    Not(Box<Ast>),
    And(Box<Ast>, Box<Ast>),
    Or(Box<Ast>, Box<Ast>),
    Implies(Box<Ast>, Box<Ast>),
    Iff(Box<Ast>, Box<Ast>),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Ident(String),
    True,
    False,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Not => "`!`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Implies => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::Ident(name) => format!("identifier `{name}`"),
            Tok::True => "`true`".into(),
            Tok::False => "`false`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax { offset, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '!' => {
                toks.push((Tok::Not, i));
                i += 1;
            }
            '&' => {
                toks.push((Tok::And, i));
                i += 1;
            }
            '|' => {
                toks.push((Tok::Or, i));
                i += 1;
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((Tok::Implies, i));
                    i += 2;
                } else {
                    return Err(syntax(i, "expected `->`"));
                }
            }
            '<' => {
                if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                    toks.push((Tok::Iff, i));
                    i += 3;
                } else {
                    return Err(syntax(i, "expected `<->`"));
                }
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    _ => Tok::Ident(word.to_string()),
                };
                toks.push((tok, start));
            }
            _ => return Err(syntax(i, format!("unexpected character `{c}`"))),
        }
    }
    toks.push((Tok::End, bytes.len()));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(syntax(
                self.offset(),
                format!("expected {}, found {}", tok.describe(), self.peek().describe()),
            ))
        }
    }

    fn iff(&mut self) -> Result<Ast> {
        let mut left = self.imp()?;
        while *self.peek() == Tok::Iff {
            self.bump();
            let right = self.imp()?;
            left = Ast::Iff(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn imp(&mut self) -> Result<Ast> {
        let left = self.or()?;
        if *self.peek() == Tok::Implies {
            self.bump();
            let right = self.imp()?;
            return Ok(Ast::Implies(Box::new(left), Box::new(right)));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Ast> {
        let mut left = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let right = self.and()?;
            left = Ast::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Ast> {
        let mut left = self.not()?;
        while *self.peek() == Tok::And {
            self.bump();
            let right = self.not()?;
            left = Ast::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn not(&mut self) -> Result<Ast> {
        if *self.peek() == Tok::Not {
            self.bump();
            return Ok(Ast::Not(Box::new(self.not()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.bump() {
            Tok::Ident(name) => Ok(Ast::Var(name)),
            Tok::True => Ok(Ast::Const(true)),
            Tok::False => Ok(Ast::Const(false)),
            Tok::LParen => {
                let inner = self.iff()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            other => {
                self.pos -= 1;
                Err(syntax(
                    self.offset(),
                    format!("expected a formula, found {}", other.describe()),
                ))
            }
        }
    }
}

pub(super) fn parse(text: &str) -> Result<Ast> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let ast = p.iff()?;
    if *p.peek() != Tok::End {
        return Err(syntax(
            p.offset(),
            format!("expected end of input, found {}", p.peek().describe()),
        ));
    }
    Ok(ast)
}
