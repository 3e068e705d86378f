//! Concrete syntax for formulas, sequents and proofs.
//!
//! Formulas use an ASCII grammar. From tightest to loosest binding:
//!
//! | operators            | associativity |
//! |----------------------|---------------|
//! | `neg`, `coneg`       | prefix        |
//! | `*`                  | left          |
//! | `/\`                 | left          |
//! | `\/`                 | left          |
//! | `->`, `<-`           | right, left   |
//!
//! `->` and `<-` share the loosest level and may not be mixed without
//! parentheses. Constants are `1`, `0`, `top` and `bot`. On input the Unicode
//! spellings `⊗ ∧ ∨ → ← ¬ ¬′ ⊤ ⊥ ⊢` are accepted as well.

mod latex;
mod lexer;
mod proof;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::{Constant, Formula, Sequent};
use lexer::{tokenize, Spanned, Token};

pub use latex::{formula_latex, emit_latex, sequent_latex};
pub use proof::{parse_proof, parse_proof_json, print_proof, print_proof_json};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{line}:{column}: expected {expected}, found {found}")]
pub struct SourceError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
    pub found: String,
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn new(text: &str, line: usize, column: usize) -> Result<Parser, SourceError> {
        Ok(Parser { tokens: tokenize(text, line, column)?, pos: 0 })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos].token
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].token.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T, SourceError> {
        let here = &self.tokens[self.pos];
        Err(SourceError {
            line: here.line,
            column: here.column,
            expected: expected.to_string(),
            found: here.token.describe(),
        })
    }

    fn expect_end(&self) -> Result<(), SourceError> {
        match self.peek() {
            Token::End => Ok(()),
            _ => self.error("end of input"),
        }
    }

    fn formula(&mut self) -> Result<Formula, SourceError> {
        let first = self.disjunction()?;
        match self.peek() {
            Token::Arrow => {
                let mut operands = vec![first];
                while *self.peek() == Token::Arrow {
                    self.bump();
                    operands.push(self.disjunction()?);
                }
                if *self.peek() == Token::BackArrow {
                    return self.error("parentheses before mixing `->` and `<-`");
                }
                let mut acc = operands.pop().unwrap();
                while let Some(left) = operands.pop() {
                    acc = Formula::imp(left, acc);
                }
                Ok(acc)
            }
            Token::BackArrow => {
                let mut acc = first;
                while *self.peek() == Token::BackArrow {
                    self.bump();
                    acc = Formula::coimp(acc, self.disjunction()?);
                }
                if *self.peek() == Token::Arrow {
                    return self.error("parentheses before mixing `<-` and `->`");
                }
                Ok(acc)
            }
            _ => Ok(first),
        }
    }

    fn left_chain(
        &mut self,
        op: Token,
        next: fn(&mut Parser) -> Result<Formula, SourceError>,
        build: fn(Formula, Formula) -> Formula,
    ) -> Result<Formula, SourceError> {
        let mut acc = next(self)?;
        while *self.peek() == op {
            self.bump();
            acc = build(acc, next(self)?);
        }
        Ok(acc)
    }

    fn disjunction(&mut self) -> Result<Formula, SourceError> {
        self.left_chain(Token::Or, Parser::conjunction, Formula::plus)
    }

    fn conjunction(&mut self) -> Result<Formula, SourceError> {
        self.left_chain(Token::And, Parser::product, Formula::with)
    }

    fn product(&mut self) -> Result<Formula, SourceError> {
        self.left_chain(Token::Star, Parser::prefix, Formula::tensor)
    }

    fn prefix(&mut self) -> Result<Formula, SourceError> {
        match self.peek() {
            Token::Neg => {
                self.bump();
                Ok(Formula::neg(self.prefix()?))
            }
            Token::CoNeg => {
                self.bump();
                Ok(Formula::coneg(self.prefix()?))
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, SourceError> {
        let f = match self.peek().clone() {
            Token::Ident(name) => Formula::atom(&name),
            Token::One => Formula::Const(Constant::One),
            Token::Zero => Formula::Const(Constant::Zero),
            Token::Top => Formula::Const(Constant::Top),
            Token::Bot => Formula::Const(Constant::Bot),
            Token::LParen => {
                self.bump();
                let inner = self.formula()?;
                if *self.peek() != Token::RParen {
                    return self.error("`)`");
                }
                self.bump();
                return Ok(inner);
            }
            _ => return self.error("a formula"),
        };
        self.bump();
        Ok(f)
    }

    fn sequent(&mut self) -> Result<Sequent, SourceError> {
        let mut antecedent = Vec::new();
        if *self.peek() != Token::Turnstile {
            antecedent.push(self.formula()?);
            while *self.peek() == Token::Comma {
                self.bump();
                antecedent.push(self.formula()?);
            }
        }
        if *self.peek() != Token::Turnstile {
            return self.error("`,` or `|-`");
        }
        self.bump();
        let succedent = match self.peek() {
            Token::End => None,
            _ => Some(self.formula()?),
        };
        Ok(Sequent { antecedent, succedent })
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, SourceError> {
    let mut p = Parser::new(text, 1, 1)?;
    let f = p.formula()?;
    p.expect_end()?;
    Ok(f)
}

pub fn parse_sequent(text: &str) -> Result<Sequent, SourceError> {
    parse_sequent_at(text, 1, 1)
}

pub(crate) fn parse_sequent_at(text: &str, line: usize, column: usize) -> Result<Sequent, SourceError> {
    let mut p = Parser::new(text, line, column)?;
    let s = p.sequent()?;
    p.expect_end()?;
    Ok(s)
}

/// Non-blank lines that are not `#` comments, with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

/// A `.seq` document: one sequent per line, `#` comments.
pub fn parse_sequent_file(text: &str) -> Result<Vec<Sequent>, SourceError> {
    content_lines(text).map(|(n, l)| parse_sequent_at(l, n, 1)).collect()
}

/// One formula per line, `#` comments. Used for cut-formula pools.
pub fn parse_formula_file(text: &str) -> Result<Vec<Formula>, SourceError> {
    content_lines(text)
        .map(|(n, l)| {
            let mut p = Parser::new(l, n, 1)?;
            let f = p.formula()?;
            p.expect_end()?;
            Ok(f)
        })
        .collect()
}

/// Binding strength, loosest first.
fn level(f: &Formula) -> u8 {
    match f {
        Formula::Imp(..) | Formula::CoImp(..) => 1,
        Formula::Plus(..) => 2,
        Formula::With(..) => 3,
        Formula::Tensor(..) => 4,
        Formula::Neg(_) | Formula::CoNeg(_) => 5,
        Formula::Atom(_) | Formula::Const(_) => 6,
    }
}

/// Symbols used when printing; lets the ASCII and LaTeX printers share the
/// parenthesization logic.
pub(crate) struct Notation {
    pub one: &'static str,
    pub zero: &'static str,
    pub top: &'static str,
    pub bot: &'static str,
    pub neg: &'static str,
    pub coneg: &'static str,
    pub imp: &'static str,
    pub coimp: &'static str,
    pub tensor: &'static str,
    pub with: &'static str,
    pub plus: &'static str,
    pub atom: fn(&str) -> String,
}

pub(crate) const ASCII: Notation = Notation {
    one: "1",
    zero: "0",
    top: "top",
    bot: "bot",
    neg: "neg ",
    coneg: "coneg ",
    imp: " -> ",
    coimp: " <- ",
    tensor: " * ",
    with: " /\\ ",
    plus: " \\/ ",
    atom: str::to_string,
};

pub(crate) fn write_formula(out: &mut String, f: &Formula, n: &Notation) {
    let child = |out: &mut String, c: &Formula, parens: bool| {
        if parens {
            out.push('(');
            write_formula(out, c, n);
            out.push(')');
        } else {
            write_formula(out, c, n);
        }
    };
    let lv = level(f);
    match f {
        Formula::Atom(name) => out.push_str(&(n.atom)(name)),
        Formula::Const(Constant::One) => out.push_str(n.one),
        Formula::Const(Constant::Zero) => out.push_str(n.zero),
        Formula::Const(Constant::Top) => out.push_str(n.top),
        Formula::Const(Constant::Bot) => out.push_str(n.bot),
        Formula::Neg(a) | Formula::CoNeg(a) => {
            out.push_str(if matches!(f, Formula::Neg(_)) { n.neg } else { n.coneg });
            child(out, a, level(a) < lv);
        }
        Formula::Imp(a, b) => {
            child(out, a, level(a) <= lv);
            out.push_str(n.imp);
            child(out, b, matches!(**b, Formula::CoImp(..)));
        }
        Formula::CoImp(a, b) => {
            child(out, a, matches!(**a, Formula::Imp(..)));
            out.push_str(n.coimp);
            child(out, b, level(b) <= lv);
        }
        Formula::Tensor(a, b) | Formula::With(a, b) | Formula::Plus(a, b) => {
            let op = match f {
                Formula::Tensor(..) => n.tensor,
                Formula::With(..) => n.with,
                _ => n.plus,
            };
            child(out, a, level(a) < lv);
            out.push_str(op);
            child(out, b, level(b) <= lv);
        }
    }
}

pub fn print_formula(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(&mut out, f, &ASCII);
    out
}

pub fn print_sequent(s: &Sequent) -> String {
    let ant: Vec<String> = s.antecedent.iter().map(print_formula).collect();
    let mut out = ant.join(", ");
    if !out.is_empty() {
        out.push(' ');
    }
    out.push_str("|-");
    if let Some(f) = &s.succedent {
        out.push(' ');
        out.push_str(&print_formula(f));
    }
    out
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_formula(self))
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_sequent(self))
    }
}

impl FromStr for Formula {
    type Err = SourceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

impl FromStr for Sequent {
    type Err = SourceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_sequent(s)
    }
}
