//! Lexer and recursive-descent parser for identity text.
//!
//! ```text
//! identity  = expr "==" expr ;
//! expr      = term { ("+"|"-") term } ;
//! term      = factor { ("*"|"/") factor } ;
//! factor    = ["-"] power ;
//! power     = atom [ "^" factor ] ;
//! atom      = integer | ident | "pi2" | "(" expr ")" | call ;
//! call      = ("binom"|"fact"|"dfact"|"catalan"|"trigamma_half") "(" expr {"," expr} ")"
//!           | "sum" "(" ident "=" expr ".." expr "," expr ")" ;
//! ```
//!
//! `#` starts a comment running to the end of the line.

use std::fmt;

use num_bigint::BigInt;

use super::ast::{BinOp, Expr, Func, IdentityAst};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
    UnknownFunction,
    UnboundVariable,
    Arity,
}

impl ParseErrorKind {
    fn as_str(self) -> &'static str {
        match self {
            ParseErrorKind::Lexical => "lexical error",
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::UnknownFunction => "unknown function",
            ParseErrorKind::UnboundVariable => "unbound variable",
            ParseErrorKind::Arity => "wrong number of arguments",
        }
    }
}

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}: {}: {}",
            self.line,
            self.col,
            self.kind.as_str(),
            self.message
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Assign,
    EqEq,
    DotDot,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Assign => "'='".into(),
            Tok::EqEq => "'=='".into(),
            Tok::DotDot => "'..'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str, line0: usize, col0: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let (mut line, mut col) = (line0, col0);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let single = match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {
                advance(1, &mut i, &mut col);
                continue;
            }
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    advance(1, &mut i, &mut col);
                }
                continue;
            }
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            tokens.push(Token {
                tok,
                line: tl,
                col: tc,
            });
            advance(1, &mut i, &mut col);
            continue;
        }
        let next = chars.get(i + 1).copied();
        let tok = match c {
            '=' if next == Some('=') => {
                advance(2, &mut i, &mut col);
                Tok::EqEq
            }
            '=' => {
                advance(1, &mut i, &mut col);
                Tok::Assign
            }
            '.' if next == Some('.') => {
                advance(2, &mut i, &mut col);
                Tok::DotDot
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    advance(1, &mut i, &mut col);
                }
                let digits: String = chars[start..i].iter().collect();
                Tok::Int(digits.parse().expect("ascii digits"))
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    advance(1, &mut i, &mut col);
                }
                Tok::Ident(chars[start..i].iter().collect())
            }
            other => {
                return Err(ParseError {
                    kind: ParseErrorKind::Lexical,
                    line: tl,
                    col: tc,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        tokens.push(Token {
            tok,
            line: tl,
            col: tc,
        });
    }
    tokens.push(Token {
        tok: Tok::End,
        line,
        col,
    });
    Ok(tokens)
}

fn advance(n: usize, i: &mut usize, col: &mut usize) {
    *i += n;
    *col += n;
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    scope: Vec<String>,
    depth: usize,
}

/// Nesting limit for parenthesized and operator subexpressions.
pub const MAX_DEPTH: usize = 256;

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, t: &Token, kind: ParseErrorKind, message: String) -> ParseError {
        ParseError {
            kind,
            line: t.line,
            col: t.col,
            message,
        }
    }

    fn expect(&mut self, want: Tok) -> Result<Token, ParseError> {
        let t = self.next();
        if t.tok == want {
            Ok(t)
        } else {
            Err(self.error_at(
                &t,
                ParseErrorKind::Syntax,
                format!("expected {}, found {}", want.describe(), t.tok.describe()),
            ))
        }
    }

    /// Counts one more level of tree depth; operator chains count one
    /// level per operator so the finished tree never exceeds [`MAX_DEPTH`].
    fn descend(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            let t = self.peek().clone();
            return Err(self.error_at(
                &t,
                ParseErrorKind::Syntax,
                "expression nested too deeply".into(),
            ));
        }
        Ok(())
    }

    fn identity(&mut self) -> Result<IdentityAst, ParseError> {
        let lhs = self.expr()?;
        self.expect(Tok::EqEq)?;
        let rhs = self.expr()?;
        self.expect(Tok::End)?;
        Ok(IdentityAst { lhs, rhs })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.descend()?;
        let e = self.expr_inner();
        self.depth -= 1;
        e
    }

    fn expr_inner(&mut self) -> Result<Expr, ParseError> {
        let saved = self.depth;
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek().tok {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => {
                    self.depth = saved;
                    return Ok(lhs);
                }
            };
            self.next();
            self.descend()?;
            let rhs = self.term()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let saved = self.depth;
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek().tok {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => {
                    self.depth = saved;
                    return Ok(lhs);
                }
            };
            self.next();
            self.descend()?;
            let rhs = self.factor()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        self.descend()?;
        let e = if self.peek().tok == Tok::Minus {
            self.next();
            self.power().map(Expr::negate)
        } else {
            self.power()
        };
        self.depth -= 1;
        e
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek().tok == Tok::Caret {
            self.next();
            let exp = self.factor()?;
            return Ok(Expr::binary(BinOp::Pow, base, exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let t = self.next();
        match t.tok.clone() {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let is_call = self.peek().tok == Tok::LParen;
                if name == "sum" {
                    if !is_call {
                        return Err(self.error_at(
                            &t,
                            ParseErrorKind::Syntax,
                            "sum needs arguments".into(),
                        ));
                    }
                    return self.sum();
                }
                if let Some(func) = Func::from_name(&name) {
                    if !is_call {
                        return Err(self.error_at(
                            &t,
                            ParseErrorKind::Syntax,
                            format!("function {name} used without arguments"),
                        ));
                    }
                    return self.call(func, &t);
                }
                if is_call {
                    return Err(self.error_at(
                        &t,
                        ParseErrorKind::UnknownFunction,
                        name.to_string(),
                    ));
                }
                if name == "pi2" {
                    return Ok(Expr::Pi2);
                }
                if !self.scope.contains(&name) {
                    return Err(self.error_at(
                        &t,
                        ParseErrorKind::UnboundVariable,
                        name.to_string(),
                    ));
                }
                Ok(Expr::Var(name))
            }
            other => Err(self.error_at(
                &t,
                ParseErrorKind::Syntax,
                format!("expected an operand, found {}", other.describe()),
            )),
        }
    }

    fn call(&mut self, func: Func, head: &Token) -> Result<Expr, ParseError> {
        self.expect(Tok::LParen)?;
        let mut args = vec![self.expr()?];
        while self.peek().tok == Tok::Comma {
            self.next();
            args.push(self.expr()?);
        }
        self.expect(Tok::RParen)?;
        if args.len() != func.arity() {
            return Err(self.error_at(
                head,
                ParseErrorKind::Arity,
                format!(
                    "{} takes {} argument(s), got {}",
                    func.name(),
                    func.arity(),
                    args.len()
                ),
            ));
        }
        Ok(Expr::Call(func, args))
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        self.expect(Tok::LParen)?;
        let t = self.next();
        let var = match t.tok {
            Tok::Ident(ref name)
                if name != "sum" && name != "pi2" && Func::from_name(name).is_none() =>
            {
                name.clone()
            }
            ref other => {
                return Err(self.error_at(
                    &t,
                    ParseErrorKind::Syntax,
                    format!("expected a summation variable, found {}", other.describe()),
                ))
            }
        };
        self.expect(Tok::Assign)?;
        let lo = self.expr()?;
        self.expect(Tok::DotDot)?;
        let hi = self.expr()?;
        self.expect(Tok::Comma)?;
        self.scope.push(var.clone());
        let body = self.expr();
        self.scope.pop();
        let body = body?;
        self.expect(Tok::RParen)?;
        Ok(Expr::Sum {
            var,
            lo: Box::new(lo),
            hi: Box::new(hi),
            body: Box::new(body),
        })
    }
}

/// Parses one identity; the only free variable allowed is `n`.
pub fn parse(text: &str) -> Result<IdentityAst, ParseError> {
    parse_at(text, 1, 1)
}

/// As [`parse`], reporting positions relative to `line`/`col`.
pub fn parse_at(text: &str, line: usize, col: usize) -> Result<IdentityAst, ParseError> {
    let tokens = lex(text, line, col)?;
    Parser {
        tokens,
        pos: 0,
        scope: vec!["n".to_string()],
        depth: 0,
    }
    .identity()
}

/// Parses a standalone expression (no `==`), with `n` free.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let tokens = lex(text, 1, 1)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        scope: vec!["n".to_string()],
        depth: 0,
    };
    let e = p.expr()?;
    p.expect(Tok::End)?;
    Ok(e)
}

/// An identity read from a file, with its optional `name:` label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedIdentity {
    pub name: Option<String>,
    pub line: usize,
    pub ast: IdentityAst,
}

impl NamedIdentity {
    /// The label, or the rendered identity when unnamed.
    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| self.ast.to_string())
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

/// Parses an identity file: one identity per line, each optionally
/// prefixed by `name:`; blank and comment-only lines are skipped.
pub fn parse_identity_file(text: &str) -> Result<Vec<NamedIdentity>, ParseError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let code = raw.split('#').next().unwrap_or("");
        if code.trim().is_empty() {
            continue;
        }
        let (name, body, col) = match raw.split_once(':') {
            Some((head, rest)) if is_ident(head.trim()) && !head.contains('#') => (
                Some(head.trim().to_string()),
                rest,
                head.chars().count() + 2,
            ),
            Some((head, _)) if !head.contains('#') => {
                return Err(ParseError {
                    kind: ParseErrorKind::Syntax,
                    line,
                    col: 1,
                    message: format!("invalid identity name {:?}", head.trim()),
                })
            }
            _ => (None, raw, 1),
        };
        let ast = parse_at(body, line, col)?;
        out.push(NamedIdentity { name, line, ast });
    }
    Ok(out)
}
