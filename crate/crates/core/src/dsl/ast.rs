use std::fmt;

use num_bigint::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Binom,
    Fact,
    Dfact,
    Catalan,
    TrigammaHalf,
}

impl Func {
    pub const ALL: [Func; 5] = [
        Func::Binom,
        Func::Fact,
        Func::Dfact,
        Func::Catalan,
        Func::TrigammaHalf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Binom => "binom",
            Func::Fact => "fact",
            Func::Dfact => "dfact",
            Func::Catalan => "catalan",
            Func::TrigammaHalf => "trigamma_half",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Binom => 2,
            _ => 1,
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

/// Expression tree. Integer literals are nonnegative; a leading minus is a
/// [`Expr::Neg`] node. Parentheses leave no trace in the tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Pi2,
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
    Sum {
        var: String,
        lo: Box<Expr>,
        hi: Box<Expr>,
        body: Box<Expr>,
    },
}

impl Expr {
    pub fn int(n: i64) -> Expr {
        Expr::Int(BigInt::from(n))
    }

    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Binary(op, Box::new(lhs), Box::new(rhs))
    }

    pub fn negate(e: Expr) -> Expr {
        Expr::Neg(Box::new(e))
    }
}

/// `lhs == rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdentityAst {
    pub lhs: Expr,
    pub rhs: Expr,
}

// Binding strength of each grammar level, loosest first.
const EXPR: u8 = 0;
const TERM: u8 = 1;
const FACTOR: u8 = 2;
const ATOM: u8 = 4;

fn level(e: &Expr) -> u8 {
    match e {
        Expr::Binary(BinOp::Add | BinOp::Sub, ..) => EXPR,
        Expr::Binary(BinOp::Mul | BinOp::Div, ..) => TERM,
        Expr::Neg(_) => FACTOR,
        Expr::Binary(BinOp::Pow, ..) => FACTOR + 1,
        _ => ATOM,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min_level: u8) -> fmt::Result {
    if level(e) < min_level {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Var(v) => f.write_str(v),
            Expr::Pi2 => f.write_str("pi2"),
            Expr::Neg(inner) => {
                // factor = "-" power: the operand must be a power or an atom
                f.write_str("-")?;
                write_at(f, inner, FACTOR + 1)
            }
            Expr::Binary(op, l, r) => match op {
                BinOp::Add | BinOp::Sub => {
                    write_at(f, l, EXPR)?;
                    write!(f, " {} ", op.symbol())?;
                    write_at(f, r, TERM)
                }
                BinOp::Mul | BinOp::Div => {
                    write_at(f, l, TERM)?;
                    write!(f, " {} ", op.symbol())?;
                    write_at(f, r, FACTOR)
                }
                BinOp::Pow => {
                    write_at(f, l, ATOM)?;
                    f.write_str("^")?;
                    write_at(f, r, FACTOR)
                }
            },
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Expr::Sum { var, lo, hi, body } => write!(f, "sum({var}={lo}..{hi}, {body})"),
        }
    }
}

impl fmt::Display for IdentityAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} == {}", self.lhs, self.rhs)
    }
}

/// Canonical text for `ast`; [`super::parse`] of the result yields an equal tree.
pub fn render(ast: &IdentityAst) -> String {
    ast.to_string()
}
