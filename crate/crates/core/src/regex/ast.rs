use alloc::boxed::Box;
use core::fmt;

use crate::algebra::EdgePattern;

/// A regular path expression over edge patterns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PathExpr {
    /// `0`, the empty set.
    Empty,
    /// `e`, the set `{ε}`.
    Epsilon,
    Atom(EdgePattern),
    /// `A | B`
    Union(Box<PathExpr>, Box<PathExpr>),
    /// `A B` or `A . B`, concatenative join.
    Join(Box<PathExpr>, Box<PathExpr>),
    /// `A ~ B`, concatenative product.
    Product(Box<PathExpr>, Box<PathExpr>),
    /// `A*`
    Star(Box<PathExpr>),
    /// `A+`, sugar for `A A*`.
    Plus(Box<PathExpr>),
    /// `A?`, sugar for `A | e`.
    Optional(Box<PathExpr>),
    /// `A{n}`, sugar for the n-fold join; `n ≥ 1`.
    Repeat(Box<PathExpr>, u32),
}

impl PathExpr {
    pub fn atom(pattern: EdgePattern) -> Self {
        PathExpr::Atom(pattern)
    }

    pub fn union(a: PathExpr, b: PathExpr) -> Self {
        PathExpr::Union(Box::new(a), Box::new(b))
    }

    pub fn join(a: PathExpr, b: PathExpr) -> Self {
        PathExpr::Join(Box::new(a), Box::new(b))
    }

    pub fn product(a: PathExpr, b: PathExpr) -> Self {
        PathExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn star(a: PathExpr) -> Self {
        PathExpr::Star(Box::new(a))
    }

    pub fn plus(a: PathExpr) -> Self {
        PathExpr::Plus(Box::new(a))
    }

    pub fn optional(a: PathExpr) -> Self {
        PathExpr::Optional(Box::new(a))
    }

    pub fn repeat(a: PathExpr, n: u32) -> Self {
        PathExpr::Repeat(Box::new(a), n)
    }

    /// Rewrites `+`, `?` and `{n}` into union, join and star.
    pub fn desugar(&self) -> PathExpr {
        use PathExpr::*;
        match self {
            Empty => Empty,
            Epsilon => Epsilon,
            Atom(p) => Atom(p.clone()),
            Union(a, b) => PathExpr::union(a.desugar(), b.desugar()),
            Join(a, b) => PathExpr::join(a.desugar(), b.desugar()),
            Product(a, b) => PathExpr::product(a.desugar(), b.desugar()),
            Star(a) => PathExpr::star(a.desugar()),
            Plus(a) => {
                let a = a.desugar();
                PathExpr::join(a.clone(), PathExpr::star(a))
            }
            Optional(a) => PathExpr::union(a.desugar(), Epsilon),
            Repeat(a, n) => {
                let a = a.desugar();
                let mut acc = a.clone();
                for _ in 1..*n {
                    acc = PathExpr::join(acc, a.clone());
                }
                acc
            }
        }
    }

    pub fn is_desugared(&self) -> bool {
        use PathExpr::*;
        match self {
            Empty | Epsilon | Atom(_) => true,
            Union(a, b) | Join(a, b) | Product(a, b) => a.is_desugared() && b.is_desugared(),
            Star(a) => a.is_desugared(),
            Plus(_) | Optional(_) | Repeat(..) => false,
        }
    }

    /// True if the expression contains `*` or `+`, i.e. may denote paths of
    /// unbounded length.
    pub fn has_star(&self) -> bool {
        use PathExpr::*;
        match self {
            Empty | Epsilon | Atom(_) => false,
            Union(a, b) | Join(a, b) | Product(a, b) => a.has_star() || b.has_star(),
            Star(_) | Plus(_) => true,
            Optional(a) | Repeat(a, _) => a.has_star(),
        }
    }

    pub fn has_product(&self) -> bool {
        use PathExpr::*;
        match self {
            Empty | Epsilon | Atom(_) => false,
            Product(..) => true,
            Union(a, b) | Join(a, b) => a.has_product() || b.has_product(),
            Star(a) | Plus(a) | Optional(a) | Repeat(a, _) => a.has_product(),
        }
    }

    /// Longest path the expression can denote, counted in atoms; `None` when
    /// it contains a star.
    pub fn max_atoms(&self) -> Option<usize> {
        use PathExpr::*;
        match self {
            Empty | Epsilon => Some(0),
            Atom(_) => Some(1),
            Union(a, b) => Some(a.max_atoms()?.max(b.max_atoms()?)),
            Join(a, b) | Product(a, b) => Some(a.max_atoms()? + b.max_atoms()?),
            Star(_) | Plus(_) => None,
            Optional(a) => a.max_atoms(),
            Repeat(a, n) => Some(a.max_atoms()? * *n as usize),
        }
    }

    /// Nesting depth; leaves have depth 1.
    pub fn depth(&self) -> usize {
        use PathExpr::*;
        match self {
            Empty | Epsilon | Atom(_) => 1,
            Union(a, b) | Join(a, b) | Product(a, b) => 1 + a.depth().max(b.depth()),
            Star(a) | Plus(a) | Optional(a) | Repeat(a, _) => 1 + a.depth(),
        }
    }

    fn precedence(&self) -> u8 {
        use PathExpr::*;
        match self {
            Union(..) => 0,
            Join(..) | Product(..) => 1,
            Star(_) | Plus(_) | Optional(_) | Repeat(..) => 2,
            Empty | Epsilon | Atom(_) => 3,
        }
    }
}

struct Operand<'a>(&'a PathExpr, bool);

impl fmt::Display for Operand<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Prints the expression in the query syntax; the output parses back to the
/// same tree.
impl fmt::Display for PathExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PathExpr::*;
        let prec = self.precedence();
        // Binary operators are left-associative, so a right operand of equal
        // precedence needs parentheses.
        let left = |x: &'_ PathExpr| x.precedence() < prec;
        let right = |x: &'_ PathExpr| x.precedence() <= prec;
        match self {
            Empty => f.write_str("0"),
            Epsilon => f.write_str("e"),
            Atom(p) => write!(f, "{p}"),
            Union(a, b) => write!(f, "{} | {}", Operand(a, left(a)), Operand(b, right(b))),
            Join(a, b) => write!(f, "{} {}", Operand(a, left(a)), Operand(b, right(b))),
            Product(a, b) => write!(f, "{} ~ {}", Operand(a, left(a)), Operand(b, right(b))),
            Star(a) => write!(f, "{}*", Operand(a, left(a))),
            Plus(a) => write!(f, "{}+", Operand(a, left(a))),
            Optional(a) => write!(f, "{}?", Operand(a, left(a))),
            Repeat(a, n) => write!(f, "{}{{{n}}}", Operand(a, left(a))),
        }
    }
}
