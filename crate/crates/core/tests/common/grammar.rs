//! Random expressions drawn from the identity-language grammar, with two
//! evaluators that do not share code with the crate parser: a direct walk of
//! the grammar tree, and a Pratt parser over the rendered text.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

#[derive(Debug, Clone)]
pub enum Atom {
    Int(u32),
    Paren(Box<GExpr>),
}

#[derive(Debug, Clone)]
pub struct Power {
    pub base: Atom,
    pub exp: Option<Box<Factor>>,
}

#[derive(Debug, Clone)]
pub struct Factor {
    pub neg: bool,
    pub power: Power,
}

/// `first (op factor)*` for terms, `first (op term)*` for expressions.
#[derive(Debug, Clone)]
pub struct Term {
    pub first: Factor,
    pub rest: Vec<(char, Factor)>,
}

#[derive(Debug, Clone)]
pub struct GExpr {
    pub first: Term,
    pub rest: Vec<(char, Term)>,
}

fn small_exponent() -> impl Strategy<Value = Factor> {
    (any::<bool>(), 0u32..=3, prop::option::of(0u32..=2)).prop_map(|(neg, b, e)| Factor {
        neg,
        power: Power {
            base: Atom::Int(b),
            exp: e.map(|e| {
                Box::new(Factor {
                    neg: false,
                    power: Power {
                        base: Atom::Int(e),
                        exp: None,
                    },
                })
            }),
        },
    })
}

fn factor_with(atom: BoxedStrategy<Atom>) -> impl Strategy<Value = Factor> {
    (
        any::<bool>(),
        atom,
        prop::option::weighted(0.3, small_exponent()),
    )
        .prop_map(|(neg, base, exp)| Factor {
            neg,
            power: Power {
                base,
                exp: exp.map(Box::new),
            },
        })
}

fn expr_with(atom: BoxedStrategy<Atom>) -> impl Strategy<Value = GExpr> {
    let factor = factor_with(atom).boxed();
    let term = (
        factor.clone(),
        prop::collection::vec((prop::sample::select(vec!['*', '/']), factor), 0..3),
    )
        .prop_map(|(first, rest)| Term { first, rest })
        .boxed();
    (
        term.clone(),
        prop::collection::vec((prop::sample::select(vec!['+', '-']), term), 0..3),
    )
        .prop_map(|(first, rest)| GExpr { first, rest })
}

pub fn expr() -> impl Strategy<Value = GExpr> {
    let leaf = (0u32..=9).prop_map(Atom::Int).boxed();
    let atom = leaf.prop_recursive(3, 24, 4, |inner| {
        prop_oneof![
            (0u32..=9).prop_map(Atom::Int),
            expr_with(inner).prop_map(|e| Atom::Paren(Box::new(e))),
        ]
        .boxed()
    });
    expr_with(atom.boxed())
}

impl std::fmt::Display for Atom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Atom::Int(v) => write!(f, "{v}"),
            Atom::Paren(e) => write!(f, "({e})"),
        }
    }
}

impl std::fmt::Display for Factor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.neg {
            f.write_str("-")?;
        }
        write!(f, "{}", self.power.base)?;
        if let Some(e) = &self.power.exp {
            write!(f, "^{e}")?;
        }
        Ok(())
    }
}

impl std::fmt::Display for Term {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.first)?;
        for (op, x) in &self.rest {
            write!(f, " {op} {x}")?;
        }
        Ok(())
    }
}

impl std::fmt::Display for GExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.first)?;
        for (op, x) in &self.rest {
            write!(f, " {op} {x}")?;
        }
        Ok(())
    }
}

type Q = BigRational;

fn pow(base: Q, exp: Q) -> Option<Q> {
    if !exp.is_integer() {
        return None;
    }
    let e = exp.to_integer().to_i32()?;
    if base.is_zero() && e < 0 {
        return None;
    }
    Some(num_traits::pow::Pow::pow(base, e))
}

fn div(a: Q, b: Q) -> Option<Q> {
    if b.is_zero() {
        None
    } else {
        Some(a / b)
    }
}

/// Direct evaluation of the grammar tree; `None` on division by zero or a
/// non-integer exponent.
pub fn eval_tree(e: &GExpr) -> Option<Q> {
    let mut acc = eval_term(&e.first)?;
    for (op, t) in &e.rest {
        let v = eval_term(t)?;
        acc = if *op == '+' { acc + v } else { acc - v };
    }
    Some(acc)
}

fn eval_term(t: &Term) -> Option<Q> {
    let mut acc = eval_factor(&t.first)?;
    for (op, f) in &t.rest {
        let v = eval_factor(f)?;
        acc = if *op == '*' { acc * v } else { div(acc, v)? };
    }
    Some(acc)
}

fn eval_factor(f: &Factor) -> Option<Q> {
    let base = match &f.power.base {
        Atom::Int(v) => Q::from_integer(BigInt::from(*v)),
        Atom::Paren(e) => eval_tree(e)?,
    };
    let v = match &f.power.exp {
        Some(e) => pow(base, eval_factor(e)?)?,
        None => base,
    };
    Some(if f.neg { -v } else { v })
}

/// Pratt evaluation of `text`, which must use only integers, parentheses and
/// `+ - * / ^`. Outer `Err` means the text does not parse; `Ok(None)` means
/// it parses but does not evaluate.
pub fn pratt_eval(text: &str) -> Result<Option<Q>, String> {
    let toks: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Pratt {
        toks,
        pos: 0,
        digits: Vec::new(),
    };
    let v = p.expr(0)?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing input at {}", p.pos));
    }
    Ok(v)
}

struct Pratt {
    toks: Vec<char>,
    pos: usize,
    digits: Vec<char>,
}

impl Pratt {
    fn peek(&self) -> Option<char> {
        self.toks.get(self.pos).copied()
    }

    // binding powers: + - 1, * / 2, prefix - 3, ^ 5 (right assoc)
    fn expr(&mut self, min_bp: u8) -> Result<Option<Q>, String> {
        let mut lhs = self.prefix()?;
        while let Some(op) = self.peek() {
            let (lbp, rbp) = match op {
                '+' | '-' => (1, 2),
                '*' | '/' => (3, 4),
                '^' => (7, 6),
                ')' => break,
                c => return Err(format!("unexpected {c}")),
            };
            if lbp < min_bp {
                break;
            }
            self.pos += 1;
            let rhs = self.expr(rbp)?;
            lhs = match (lhs, rhs) {
                (Some(a), Some(b)) => match op {
                    '+' => Some(a + b),
                    '-' => Some(a - b),
                    '*' => Some(a * b),
                    '/' => div(a, b),
                    _ => pow(a, b),
                },
                _ => None,
            };
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<Option<Q>, String> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                if self.peek() == Some('-') {
                    return Err("double minus".into());
                }
                // prefix minus binds looser than ^ and tighter than * /
                Ok(self.expr(5)?.map(|v| -v))
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr(0)?;
                if self.peek() != Some(')') {
                    return Err("missing )".into());
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                self.digits.clear();
                while let Some(d) = self.peek().filter(char::is_ascii_digit) {
                    self.digits.push(d);
                    self.pos += 1;
                }
                let s: String = self.digits.iter().collect();
                Ok(Some(Q::from_integer(s.parse::<BigInt>().unwrap())))
            }
            other => Err(format!("unexpected {other:?}")),
        }
    }
}

pub fn q_to_string(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        let (n, d) = (q.numer(), q.denom());
        debug_assert!(d.is_positive());
        format!("{n}/{d}")
    }
}

/// Inputs every one of which must be rejected with a positioned error.
pub const MALFORMED: &[&str] = &[
    "",
    "   ",
    "==",
    "1 ==",
    "== 1",
    "1 = 1",
    "1 == 1 == 1",
    "1 +",
    "1 + == 2",
    "(1 == 1",
    "1) == 1",
    "1 == (2",
    "()",
    "binom(2) == 1",
    "binom(1,2,3) == 1",
    "fact() == 1",
    "fact(1,2) == 1",
    "gamma(1) == 1",
    "foo == 1",
    "k == 1",
    "n + m == 1",
    "sum(k=0..n) == 1",
    "sum(k=0..n, k == 1",
    "sum(0..n, k) == 1",
    "sum(k=0.., k) == 1",
    "sum(k=..n, k) == 1",
    "sum(k 0..n, k) == 1",
    "sum(k=0..n, j) == 1",
    "sum(pi2=0..n, 1) == 1",
    "1.5 == 1",
    "1 .. 2 == 1",
    "2 ^ == 4",
    "--2 == 2",
    "1 * * 2 == 2",
    "1 / / 2 == 2",
    "n == 1 $",
    "n @ 1 == 1",
    "n == 1;",
    "é == 1",
    "n\u{0} == 1",
    "1 2 == 3",
    "pi2(1) == 1",
    "binom == 1",
    "binom(1,1",
    ",1 == 1",
    "1 == 1,",
    "#only a comment",
];

/// Corrupts `text` so it cannot parse: `salt` picks where a stray character
/// is inserted or which closing parenthesis is removed.
pub fn corrupt(text: &str, salt: usize) -> String {
    let chars: Vec<char> = text.chars().collect();
    let closers: Vec<usize> = chars
        .iter()
        .enumerate()
        .filter(|(_, c)| **c == ')')
        .map(|(i, _)| i)
        .collect();
    if salt.is_multiple_of(2) && !closers.is_empty() {
        let drop = closers[(salt / 2) % closers.len()];
        chars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != drop)
            .map(|(_, c)| c)
            .collect()
    } else {
        let at = (salt / 2) % (chars.len() + 1);
        let stray = ['@', '$', ';', '&', '{', '!'][salt % 6];
        let mut out: String = chars[..at].iter().collect();
        out.push(stray);
        out.extend(&chars[at..]);
        out
    }
}
