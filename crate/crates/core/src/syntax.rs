//! ASCII surface syntax for [`SetTerm`].
//!
//! ```text
//! expr := term ('u' term)*
//! term := atom | 'P' '(' expr ')' | 'P^' INT '(' expr ')' | 'P^-' INT '(' expr ')' | 'Pinv' '(' expr ')'
//! atom := '{' [expr (',' expr)*] '}' | INT | 'N'
//! ```
//!
//! Integers denote von Neumann numerals. Elements of a set literal are evaluated while
//! parsing, so they must be finite Zermelo expressions: no `N` and no inverse powersets.
//! The printer is [`SetTerm`]'s `Display` impl.

use std::fmt;

use crate::error::{Error, Result};
use crate::hf::HfSet;
use crate::term::{normalize, Single, SetTerm, ZermeloPart};

pub const MAX_NUMERAL: u64 = 12;
pub const MAX_EXPONENT: u64 = 64;

/// Source position of a node: byte offsets plus the 1-based line and column of its start.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub column: usize,
}

/// Parse tree that still remembers `P^k` exponents and where every node came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceExpr {
    pub span: Span,
    pub kind: ExprKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Set(Vec<SourceExpr>),
    Numeral(usize),
    Nat,
    /// `P^k(e)`; plain `P(e)` has `k = 1`.
    Pow(usize, Box<SourceExpr>),
    /// `P^-k(e)`; `Pinv(e)` has `k = 1`.
    InvPow(usize, Box<SourceExpr>),
    Union(Vec<SourceExpr>),
}

pub fn parse(text: &str) -> Result<SetTerm> {
    parse_source(text)?.lower()
}

pub fn parse_source(text: &str) -> Result<SourceExpr> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.expr()?;
    match parser.peek() {
        Some(t) => Err(t.syntax(format!("unexpected {}", t.tok))),
        None => Ok(expr),
    }
}

/// Canonical text of a term.
pub fn print_term(t: &SetTerm) -> String {
    t.to_string()
}

impl SourceExpr {
    pub fn lower(&self) -> Result<SetTerm> {
        Ok(match &self.kind {
            ExprKind::Set(elems) => {
                let members = elems.iter().map(SourceExpr::element).collect::<Result<Vec<_>>>()?;
                SetTerm::lit(HfSet::new(members))
            }
            ExprKind::Numeral(n) => SetTerm::numeral(*n),
            ExprKind::Nat => SetTerm::Nat,
            ExprKind::Pow(k, inner) => SetTerm::pow_n(inner.lower()?, *k),
            ExprKind::InvPow(k, inner) => SetTerm::inv_pow_n(inner.lower()?, *k),
            ExprKind::Union(parts) => {
                SetTerm::union(parts.iter().map(SourceExpr::lower).collect::<Result<Vec<_>>>()?)
            }
        })
    }

    fn structural(&self, message: String) -> Error {
        Error::Structural { line: self.span.line, column: self.span.column, message }
    }

    fn first_non_zermelo(&self) -> Option<&SourceExpr> {
        match &self.kind {
            ExprKind::Nat | ExprKind::InvPow(..) => Some(self),
            ExprKind::Numeral(_) => None,
            ExprKind::Pow(_, inner) => inner.first_non_zermelo(),
            ExprKind::Set(parts) | ExprKind::Union(parts) => {
                parts.iter().find_map(SourceExpr::first_non_zermelo)
            }
        }
    }

    fn element(&self) -> Result<HfSet> {
        if let Some(bad) = self.first_non_zermelo() {
            let what = match bad.kind {
                ExprKind::Nat => "N is not hereditarily finite",
                _ => "inverse powersets are not allowed inside set literals",
            };
            return Err(bad.structural(what.to_string()));
        }
        let term = self.lower()?;
        match normalize(&term).map(|nf| nf.as_single()) {
            Ok(Some(Single::Zermelo(ZermeloPart::Finite(x)))) => Ok(x),
            Ok(_) => Err(self.structural(format!("{term} is not a finite set"))),
            Err(e) => Err(self.structural(e.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Caret,
    Minus,
    Int(u64),
    Ident(String),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    span: Span,
}

impl Token {
    fn syntax(&self, message: String) -> Error {
        Error::Syntax { line: self.span.line, column: self.span.column, message }
    }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&(start, c)) = chars.peek() {
        let (tok_line, tok_column) = (line, column);
        let mut end = start + c.len_utf8();
        let mut take = |chars: &mut std::iter::Peekable<std::str::CharIndices<'_>>| {
            let (_, c) = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        };
        let tok = match c {
            c if c.is_whitespace() => {
                take(&mut chars);
                continue;
            }
            '{' | '}' | '(' | ')' | ',' | '^' | '-' => {
                take(&mut chars);
                match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    '^' => Tok::Caret,
                    _ => Tok::Minus,
                }
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    end = i + 1;
                    take(&mut chars);
                }
                let n = digits.parse().map_err(|_| Error::Syntax {
                    line: tok_line,
                    column: tok_column,
                    message: format!("integer `{digits}` is too large"),
                })?;
                Tok::Int(n)
            }
            c if c.is_ascii_alphabetic() => {
                let mut ident = String::new();
                while let Some(&(i, a)) = chars.peek() {
                    if !a.is_ascii_alphanumeric() {
                        break;
                    }
                    ident.push(a);
                    end = i + 1;
                    take(&mut chars);
                }
                Tok::Ident(ident)
            }
            other => {
                return Err(Error::Syntax {
                    line: tok_line,
                    column: tok_column,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        let span = Span { start, end, line: tok_line, column: tok_column };
        tokens.push(Token { tok, span });
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self, expected: &str) -> Result<Token> {
        match self.tokens.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.clone())
            }
            None => Err(self.eof(expected)),
        }
    }

    fn eof(&self, expected: &str) -> Error {
        let (line, column) = self.tokens.last().map_or((1, 1), |t| {
            (t.span.line, t.span.column + (t.span.end - t.span.start))
        });
        Error::Syntax { line, column, message: format!("expected {expected}, found end of input") }
    }

    fn expect(&mut self, tok: Tok) -> Result<Token> {
        let t = self.next(&tok.to_string())?;
        if t.tok == tok {
            Ok(t)
        } else {
            Err(t.syntax(format!("expected {tok}, found {}", t.tok)))
        }
    }

    fn at_ident(&self, name: &str) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Ident(s), .. }) if s == name)
    }

    fn expr(&mut self) -> Result<SourceExpr> {
        let first = self.term()?;
        if !self.at_ident("u") {
            return Ok(first);
        }
        let mut parts = vec![first];
        while self.at_ident("u") {
            self.pos += 1;
            parts.push(self.term()?);
        }
        let span = join(parts[0].span, parts[parts.len() - 1].span);
        Ok(SourceExpr { span, kind: ExprKind::Union(parts) })
    }

    fn term(&mut self) -> Result<SourceExpr> {
        let t = self.next("an expression")?;
        match &t.tok {
            Tok::LBrace => self.set_literal(t.span),
            Tok::Int(n) => {
                if *n > MAX_NUMERAL {
                    return Err(t.syntax(format!("numeral {n} exceeds the limit {MAX_NUMERAL}")));
                }
                Ok(SourceExpr { span: t.span, kind: ExprKind::Numeral(*n as usize) })
            }
            Tok::Ident(s) if s == "N" => Ok(SourceExpr { span: t.span, kind: ExprKind::Nat }),
            Tok::Ident(s) if s == "Pinv" => self.application(t.span, |e| ExprKind::InvPow(1, e)),
            Tok::Ident(s) if s == "P" => {
                if !matches!(self.peek(), Some(Token { tok: Tok::Caret, .. })) {
                    return self.application(t.span, |e| ExprKind::Pow(1, e));
                }
                self.pos += 1;
                let inverse = matches!(self.peek(), Some(Token { tok: Tok::Minus, .. }));
                if inverse {
                    self.pos += 1;
                }
                let k = self.exponent()?;
                if inverse {
                    self.application(t.span, |e| ExprKind::InvPow(k, e))
                } else {
                    self.application(t.span, |e| ExprKind::Pow(k, e))
                }
            }
            other => Err(t.syntax(format!("expected an expression, found {other}"))),
        }
    }

    fn exponent(&mut self) -> Result<usize> {
        let t = self.next("an exponent")?;
        match &t.tok {
            &Tok::Int(k) if k <= MAX_EXPONENT => Ok(k as usize),
            Tok::Int(k) => Err(t.syntax(format!("exponent {k} exceeds the limit {MAX_EXPONENT}"))),
            other => Err(t.syntax(format!("expected an exponent, found {other}"))),
        }
    }

    fn application(
        &mut self,
        start: Span,
        build: impl FnOnce(Box<SourceExpr>) -> ExprKind,
    ) -> Result<SourceExpr> {
        self.expect(Tok::LParen)?;
        let inner = self.expr()?;
        let close = self.expect(Tok::RParen)?;
        Ok(SourceExpr { span: join(start, close.span), kind: build(Box::new(inner)) })
    }

    fn set_literal(&mut self, start: Span) -> Result<SourceExpr> {
        let mut elems = Vec::new();
        if let Some(Token { tok: Tok::RBrace, span }) = self.peek().cloned() {
            self.pos += 1;
            return Ok(SourceExpr { span: join(start, span), kind: ExprKind::Set(elems) });
        }
        loop {
            elems.push(self.expr()?);
            let t = self.next("`,` or `}`")?;
            match &t.tok {
                Tok::Comma => continue,
                Tok::RBrace => {
                    return Ok(SourceExpr { span: join(start, t.span), kind: ExprKind::Set(elems) })
                }
                other => return Err(t.syntax(format!("expected `,` or `}}`, found {other}"))),
            }
        }
    }
}

fn join(a: Span, b: Span) -> Span {
    Span { start: a.start, end: b.end, line: a.line, column: a.column }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hf::numeral;

    #[test]
    fn parse_examples() {
        let t = parse("P^-1(P({0,1,2}))").unwrap();
        assert_eq!(t, SetTerm::inv_pow(SetTerm::pow(SetTerm::numeral(3))));
        assert_eq!(parse("{}").unwrap(), SetTerm::lit(HfSet::empty()));
        let t = parse("3 u P^-2({1})").unwrap();
        let one = numeral(1).singleton();
        assert_eq!(
            t,
            SetTerm::union([SetTerm::numeral(3), SetTerm::inv_pow_n(SetTerm::lit(one), 2)])
        );
        assert_eq!(parse("Pinv(N)").unwrap(), SetTerm::inv_pow(SetTerm::Nat));
        assert_eq!(parse(" P ^ 2 ( 1 ) ").unwrap(), SetTerm::pow_n(SetTerm::numeral(1), 2));
        assert_eq!(
            parse("{P(1), 1 u {}}").unwrap(),
            SetTerm::lit(HfSet::new([numeral(1), numeral(2)]))
        );
    }

    #[test]
    fn structural_errors() {
        assert_eq!(
            parse("{P^-1(2)}"),
            Err(Error::Structural {
                line: 1,
                column: 2,
                message: "inverse powersets are not allowed inside set literals".into()
            })
        );
        assert!(matches!(parse("{0, N}"), Err(Error::Structural { line: 1, column: 5, .. })));
        assert!(matches!(
            parse("{\n  1,\n  Pinv(3)}"),
            Err(Error::Structural { line: 3, column: 3, .. })
        ));
        assert!(matches!(parse("{P^6(2)}"), Err(Error::Structural { .. })));
    }

    #[test]
    fn syntax_errors() {
        let pos = |s: &str| match parse(s) {
            Err(Error::Syntax { line, column, .. }) => (line, column),
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(pos(""), (1, 1));
        assert_eq!(pos("P(1"), (1, 4));
        assert_eq!(pos("13"), (1, 1));
        assert_eq!(pos("1 u"), (1, 4));
        assert_eq!(pos("Q(1)"), (1, 1));
        assert_eq!(pos("{1 2}"), (1, 4));
        assert_eq!(pos("P^65(1)"), (1, 3));
        assert_eq!(pos("1 )"), (1, 3));
        assert_eq!(pos("1\n  #"), (2, 3));
        assert_eq!(pos("P^-(1)"), (1, 4));
    }

    #[test]
    fn print_examples() {
        let t = parse("P^-1( P ( {0,1} ) )").unwrap();
        assert_eq!(print_term(&t), "P^-1(P({{},{{}}}))");
        assert_eq!(print_term(&SetTerm::lit(HfSet::empty())), "{}");
        let nf = normalize(&parse("P^-1({1}) u 3").unwrap()).unwrap();
        assert_eq!(print_term(&nf.to_term()), "{{},{{}},{{},{{}}}} u P^-1({{{}}})");
        assert_eq!(print_term(&parse("P^2(N) u Pinv(N)").unwrap()), "P(P(N)) u P^-1(N)");
    }

    #[test]
    fn spans() {
        let e = parse_source("1 u P(2)").unwrap();
        assert_eq!(e.span, Span { start: 0, end: 8, line: 1, column: 1 });
        let ExprKind::Union(parts) = &e.kind else { panic!() };
        assert_eq!(parts[1].span, Span { start: 4, end: 8, line: 1, column: 5 });
    }
}
