//! Propositional formulas over linguistic truth-valued atoms.
//!
//! Concrete syntax, loosest binding first:
//!
//! ```text
//! formula := disj ( "->" formula )?        right-associative
//! disj    := conj ( "|" conj )*
//! conj    := unary ( "&" unary )*
//! unary   := ( "!" | "~" ) unary | atom | "(" formula ")"
//! atom    := [A-Za-z_][A-Za-z0-9_]*
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{AlgebraConfig, LinguisticValue};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Self {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text)?.parse_all()
    }

    /// Canonical text with the fewest parentheses that still parse back to
    /// the same tree.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out);
        out
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Not(_) | Formula::Atom(_) => 4,
        }
    }

    fn write_child(child: &Formula, parens: bool, out: &mut String) {
        if parens {
            out.push('(');
            child.write(out);
            out.push(')');
        } else {
            child.write(out);
        }
    }

    fn write(&self, out: &mut String) {
        let prec = self.precedence();
        match self {
            Formula::Atom(name) => out.push_str(name),
            Formula::Not(inner) => {
                out.push('!');
                Self::write_child(inner, inner.precedence() < prec, out);
            }
            Formula::And(l, r) | Formula::Or(l, r) => {
                let op = if matches!(self, Formula::And(..)) { " & " } else { " | " };
                Self::write_child(l, l.precedence() < prec, out);
                out.push_str(op);
                Self::write_child(r, r.precedence() <= prec, out);
            }
            Formula::Implies(l, r) => {
                Self::write_child(l, l.precedence() <= prec, out);
                out.push_str(" -> ");
                Self::write_child(r, r.precedence() < prec, out);
            }
        }
    }

    pub fn atoms(&self) -> BTreeSet<&str> {
        let mut set = BTreeSet::new();
        self.collect_atoms(&mut set);
        set
    }

    fn collect_atoms<'a>(&'a self, set: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Atom(name) => {
                set.insert(name);
            }
            Formula::Not(f) => f.collect_atoms(set),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.collect_atoms(set);
                r.collect_atoms(set);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Not(f) => 1 + f.depth(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Truth value under `val`, by structural recursion.
    pub fn evaluate(&self, val: &Valuation) -> Result<LinguisticValue> {
        let c = &val.config;
        Ok(match self {
            Formula::Atom(name) => val.get(name).ok_or_else(|| Error::UnassignedAtom(name.clone()))?,
            Formula::Not(f) => c.not(f.evaluate(val)?),
            Formula::And(l, r) => c.meet(l.evaluate(val)?, r.evaluate(val)?),
            Formula::Or(l, r) => c.join(l.evaluate(val)?, r.evaluate(val)?),
            Formula::Implies(l, r) => c.implies(l.evaluate(val)?, r.evaluate(val)?),
        })
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Formula::parse(s)
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Not,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
    Ident(String),
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Not => "`!`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Arrow => "`->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Ident(s) => format!("atom `{s}`"),
        }
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax { offset, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'!' | b'~' => Token::Not,
            b'&' => Token::And,
            b'|' => Token::Or,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                out.push((i, Token::Arrow));
                i += 2;
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(syntax(i, format!("unexpected character `{ch}`")));
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Self { tokens: lex(text)?, pos: 0, end: text.len() })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, tok: &Token) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_all(mut self) -> Result<Formula> {
        if self.tokens.is_empty() {
            return Err(syntax(0, "empty formula"));
        }
        let f = self.implication()?;
        match self.tokens.get(self.pos) {
            None => Ok(f),
            Some((o, Token::RParen)) => Err(syntax(*o, "unbalanced `)`")),
            Some((o, t)) => Err(syntax(*o, format!("unexpected {}", t.describe()))),
        }
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if self.eat(&Token::Arrow) {
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut f = self.conjunction()?;
        while self.eat(&Token::Or) {
            f = Formula::or(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut f = self.unary()?;
        while self.eat(&Token::And) {
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula> {
        let offset = self.offset();
        match self.tokens.get(self.pos).map(|(_, t)| t.clone()) {
            Some(Token::Not) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                Ok(Formula::Atom(name))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let f = self.implication()?;
                if !self.eat(&Token::RParen) {
                    return Err(syntax(self.offset(), "expected `)`"));
                }
                Ok(f)
            }
            Some(t) => Err(syntax(offset, format!("expected operand, found {}", t.describe()))),
            None => Err(syntax(offset, "expected operand, found end of input")),
        }
    }
}

/// A total assignment of truth values to atoms, for one configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    config: AlgebraConfig,
    assignment: BTreeMap<String, LinguisticValue>,
}

impl Valuation {
    pub fn new(config: AlgebraConfig) -> Self {
        Self { config, assignment: BTreeMap::new() }
    }

    pub fn config(&self) -> &AlgebraConfig {
        &self.config
    }

    pub fn assign(&mut self, atom: &str, value: LinguisticValue) -> Result<&mut Self> {
        if !is_identifier(atom) {
            return Err(Error::InvalidAssignment(format!("{atom}={value}")));
        }
        self.config.check(value)?;
        self.assignment.insert(atom.to_string(), value);
        Ok(self)
    }

    pub fn with(mut self, atom: &str, value: LinguisticValue) -> Result<Self> {
        self.assign(atom, value)?;
        Ok(self)
    }

    /// `NAME=v3T` (or `NAME=quite true` when labels are known).
    pub fn assign_text(&mut self, text: &str) -> Result<&mut Self> {
        let (name, value) = text
            .split_once('=')
            .ok_or_else(|| Error::InvalidAssignment(text.to_string()))?;
        let name = name.trim();
        if !is_identifier(name) {
            return Err(Error::InvalidAssignment(text.to_string()));
        }
        let value = self.config.parse_value(value)?;
        self.assign(name, value)
    }

    pub fn get(&self, atom: &str) -> Option<LinguisticValue> {
        self.assignment.get(atom).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, LinguisticValue)> {
        self.assignment.iter().map(|(k, v)| (k.as_str(), *v))
    }
}
