//! Formula AST and the ASCII pretty-printer.

use std::fmt;

/// Propositional formula over a signature's atoms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Top,
    Bottom,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Self {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::Iff(Box::new(a), Box::new(b))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum BinOp {
    And,
    Or,
    Imp,
    Iff,
}

impl BinOp {
    fn token(self) -> &'static str {
        match self {
            BinOp::And => "&",
            BinOp::Or => "|",
            BinOp::Imp => "->",
            BinOp::Iff => "<->",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Ctx {
    Top,
    UnderNot,
    Operand(BinOp),
}

/// ASCII rendering. Binary subformulas are parenthesized except at the top
/// level and inside same-operator `&`/`|` chains, so `{1,3}` over `[p, q]`
/// prints as `(~p&q)|(p&q)` and re-parses to an equivalent formula.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self, Ctx::Top)
    }
}

fn write_formula(f: &mut fmt::Formatter<'_>, node: &Formula, ctx: Ctx) -> fmt::Result {
    let bin = match node {
        Formula::Atom(name) => return f.write_str(name),
        Formula::Top => return f.write_str("true"),
        Formula::Bottom => return f.write_str("false"),
        Formula::Not(x) => {
            f.write_str("~")?;
            return write_formula(f, x, Ctx::UnderNot);
        }
        Formula::And(a, b) => (BinOp::And, a, b),
        Formula::Or(a, b) => (BinOp::Or, a, b),
        Formula::Imp(a, b) => (BinOp::Imp, a, b),
        Formula::Iff(a, b) => (BinOp::Iff, a, b),
    };
    let (op, a, b) = bin;
    let parens = match ctx {
        Ctx::Top => false,
        Ctx::UnderNot => true,
        Ctx::Operand(parent) => !(parent == op && matches!(op, BinOp::And | BinOp::Or)),
    };
    if parens {
        f.write_str("(")?;
    }
    write_formula(f, a, Ctx::Operand(op))?;
    f.write_str(op.token())?;
    write_formula(f, b, Ctx::Operand(op))?;
    if parens {
        f.write_str(")")?;
    }
    Ok(())
}
