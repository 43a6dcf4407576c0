//! Lexer and recursive-descent parser for the ideal expression language.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr     := colonexp ('+' colonexp)*
//! colonexp := mulexp (('colon' | 'cap') mulexp)*
//! mulexp   := powexp (('*' | 'star') powexp)*
//! powexp   := atom ('^' INT)?
//! atom     := 'm' | '1' | VAR | NAME | 'closure' '(' expr ')'
//!           | '(' expr (',' expr)* ')'
//! ```
//!
//! A parenthesized list is the sum of its entries, so an ideal literal like
//! `(x^2, x*y, z)` means exactly the ideal generated by those monomials, and
//! a single parenthesized expression is plain grouping.

use startrans_core::{star_product, ExponentVector, MonomialIdeal};

use crate::session::{CliError, Workspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Ident(String),
    Int(u32),
    LParen,
    RParen,
    Comma,
    Plus,
    Star,
    Caret,
    Equals,
}

pub struct Lexer;

impl Lexer {
    /// Tokenizes a full line; each token carries its byte offset.
    pub fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, CliError> {
        let mut out = Vec::new();
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                ' ' | '\t' | '\r' | '\n' => i += 1,
                '(' => {
                    out.push((Token::LParen, i));
                    i += 1;
                }
                ')' => {
                    out.push((Token::RParen, i));
                    i += 1;
                }
                ',' => {
                    out.push((Token::Comma, i));
                    i += 1;
                }
                '+' => {
                    out.push((Token::Plus, i));
                    i += 1;
                }
                '*' => {
                    out.push((Token::Star, i));
                    i += 1;
                }
                '^' => {
                    out.push((Token::Caret, i));
                    i += 1;
                }
                '=' => {
                    out.push((Token::Equals, i));
                    i += 1;
                }
                '0'..='9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let lit = &text[start..i];
                    let val: u32 = lit.parse().map_err(|_| CliError::Parse {
                        pos: start,
                        msg: format!("exponent overflow: {lit}"),
                    })?;
                    out.push((Token::Int(val), start));
                }
                _ if c.is_ascii_alphabetic() || c == '_' => {
                    let start = i;
                    while i < bytes.len()
                        && (bytes[i].is_ascii_alphanumeric()
                            || bytes[i] == b'_'
                            || bytes[i] == b'?')
                    {
                        i += 1;
                    }
                    out.push((Token::Ident(text[start..i].to_string()), start));
                }
                _ => {
                    return Err(CliError::Parse {
                        pos: i,
                        msg: format!("unexpected character '{c}'"),
                    })
                }
            }
        }
        Ok(out)
    }
}

pub struct Parser<'a> {
    ws: &'a Workspace,
    tokens: &'a [(Token, usize)],
    pos: usize,
}

impl<'a> Parser<'a> {
    pub fn new(ws: &'a Workspace, tokens: &'a [(Token, usize)]) -> Self {
        Self { ws, tokens, pos: 0 }
    }

    pub fn at_end(&self) -> bool {
        self.pos == self.tokens.len()
    }

    pub fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|&(_, o)| o)
            .unwrap_or_else(|| self.tokens.last().map(|&(_, o)| o + 1).unwrap_or(0))
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn bump(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn fail(&self, msg: impl Into<String>) -> CliError {
        CliError::Parse {
            pos: self.offset(),
            msg: msg.into(),
        }
    }

    pub fn expect(&mut self, tok: &Token, what: &str) -> Result<(), CliError> {
        if self.peek() == Some(tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.fail(format!("expected {what}")))
        }
    }

    pub fn expect_ident(&mut self, what: &str) -> Result<String, CliError> {
        match self.bump() {
            Some(Token::Ident(s)) => Ok(s.clone()),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.fail(format!("expected {what}")))
            }
        }
    }

    pub fn expect_int(&mut self, what: &str) -> Result<u32, CliError> {
        match self.bump() {
            Some(Token::Int(v)) => Ok(*v),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.fail(format!("expected {what}")))
            }
        }
    }

    /// A full expression, evaluated on the fly.
    pub fn expr(&mut self) -> Result<MonomialIdeal, CliError> {
        let mut acc = self.colon_expr()?;
        while self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            let rhs = self.colon_expr()?;
            acc = self.lift("+", acc.sum(&rhs))?;
        }
        Ok(acc)
    }

    fn colon_expr(&mut self) -> Result<MonomialIdeal, CliError> {
        let mut acc = self.mul_expr()?;
        loop {
            match self.peek() {
                Some(Token::Ident(w)) if w == "colon" => {
                    self.pos += 1;
                    let rhs = self.mul_expr()?;
                    acc = self.lift("colon", acc.colon(&rhs))?;
                }
                Some(Token::Ident(w)) if w == "cap" => {
                    self.pos += 1;
                    let rhs = self.mul_expr()?;
                    acc = self.lift("cap", acc.intersect(&rhs))?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn mul_expr(&mut self) -> Result<MonomialIdeal, CliError> {
        let mut acc = self.pow_expr()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let rhs = self.pow_expr()?;
                    acc = self.lift("*", acc.product(&rhs))?;
                }
                Some(Token::Ident(w)) if w == "star" => {
                    self.pos += 1;
                    let rhs = self.pow_expr()?;
                    acc = self.lift("star", star_product(&acc, &rhs))?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn pow_expr(&mut self) -> Result<MonomialIdeal, CliError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let k = self.expect_int("an integer exponent")?;
            return self.lift("^", base.power(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MonomialIdeal, CliError> {
        let pos = self.offset();
        match self.bump().cloned() {
            Some(Token::LParen) => {
                let mut parts = vec![self.expr()?];
                while self.peek() == Some(&Token::Comma) {
                    self.pos += 1;
                    parts.push(self.expr()?);
                }
                self.expect(&Token::RParen, "')'")?;
                let mut acc = parts.remove(0);
                for p in parts {
                    acc = self.lift("ideal literal", acc.sum(&p))?;
                }
                Ok(acc)
            }
            Some(Token::Int(1)) => Ok(MonomialIdeal::unit(self.ws.dim()).expect("dim checked")),
            Some(Token::Int(_)) => Err(CliError::Parse {
                pos,
                msg: "only the monomial 1 may appear as a bare integer".into(),
            }),
            Some(Token::Ident(name)) => {
                if name == "m" {
                    return Ok(MonomialIdeal::maximal(self.ws.dim()).expect("dim checked"));
                }
                if name == "closure" {
                    self.expect(&Token::LParen, "'(' after closure")?;
                    let inner = self.expr()?;
                    self.expect(&Token::RParen, "')'")?;
                    return self.lift("closure", startrans_core::integral_closure(&inner));
                }
                if let Some(i) = self.ws.var_index(&name) {
                    let gen = ExponentVector::axis(self.ws.dim(), i, 1);
                    return Ok(MonomialIdeal::new(self.ws.dim(), vec![gen]).expect("valid"));
                }
                if let Some(bound) = self.ws.binding(&name) {
                    return Ok(bound.clone());
                }
                Err(CliError::Parse {
                    pos,
                    msg: format!("unknown variable or name '{name}'"),
                })
            }
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.fail("expected an ideal expression"))
            }
        }
    }

    /// A direction: one of the declared variables.
    pub fn direction(&mut self) -> Result<usize, CliError> {
        let pos = self.offset();
        let name = self.expect_ident("a direction variable")?;
        self.ws.var_index(&name).ok_or(CliError::Parse {
            pos,
            msg: format!("unknown variable '{name}'"),
        })
    }

    /// A comma-separated direction sequence, e.g. `x,y,y,z`.
    pub fn direction_sequence(&mut self) -> Result<Vec<usize>, CliError> {
        let mut dirs = vec![self.direction()?];
        while self.peek() == Some(&Token::Comma) {
            self.pos += 1;
            dirs.push(self.direction()?);
        }
        Ok(dirs)
    }

    fn lift(
        &self,
        op: &str,
        r: startrans_core::Result<MonomialIdeal>,
    ) -> Result<MonomialIdeal, CliError> {
        r.map_err(|e| CliError::Op {
            op: op.to_string(),
            input: None,
            source: e,
        })
    }
}

/// Parses and evaluates a standalone expression against a workspace.
pub fn eval_expr(ws: &Workspace, text: &str) -> Result<MonomialIdeal, CliError> {
    let tokens = Lexer::tokenize(text)?;
    let mut p = Parser::new(ws, &tokens);
    let v = p.expr()?;
    if !p.at_end() {
        return Err(CliError::Parse {
            pos: p.offset(),
            msg: "trailing input after expression".into(),
        });
    }
    Ok(v)
}
