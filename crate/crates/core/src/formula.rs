//! Core propositional syntax over `bot`, `->` and `&`.
//!
//! Every other connective is an abbreviation and is expanded by the
//! constructors below (and by the parser), so consumers only ever see the
//! four core node kinds.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Bot,
    /// `X_i`, `i >= 1`.
    Var(u32),
    Imp(Box<Formula>, Box<Formula>),
    /// Monoidal (strong) conjunction.
    Conj(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(i: u32) -> Formula {
        assert!(i >= 1, "variable indices start at 1");
        Formula::Var(i)
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn conj(a: Formula, b: Formula) -> Formula {
        Formula::Conj(Box::new(a), Box::new(b))
    }

    /// `bot -> bot`
    pub fn top() -> Formula {
        Formula::imp(Formula::Bot, Formula::Bot)
    }

    /// `a -> bot`
    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: Formula) -> Formula {
        Formula::imp(a, Formula::Bot)
    }

    /// Lattice meet: `a & (a -> b)`.
    pub fn wedge(a: Formula, b: Formula) -> Formula {
        Formula::conj(a.clone(), Formula::imp(a, b))
    }

    /// Lattice join: `((a -> b) -> b) /\ ((b -> a) -> a)`.
    pub fn vee(a: Formula, b: Formula) -> Formula {
        let left = Formula::imp(Formula::imp(a.clone(), b.clone()), b.clone());
        let right = Formula::imp(Formula::imp(b, a.clone()), a);
        Formula::wedge(left, right)
    }

    /// `(a -> b) & (b -> a)`
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::conj(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
    }

    /// Strong disjunction `!(!a & !b)`.
    pub fn oplus(a: Formula, b: Formula) -> Formula {
        Formula::neg(Formula::conj(Formula::neg(a), Formula::neg(b)))
    }

    /// `n*a`: `a (+) ... (+) a` with `n - 1` occurrences of `(+)`, folded left.
    pub fn multiple(n: u32, a: Formula) -> Formula {
        assert!(n >= 1, "multiples start at 1");
        let mut acc = a.clone();
        for _ in 1..n {
            acc = Formula::oplus(acc, a.clone());
        }
        acc
    }

    /// `a^n`: `a & ... & a` with `n - 1` occurrences of `&`, folded left.
    pub fn power(n: u32, a: Formula) -> Formula {
        assert!(n >= 1, "powers start at 1");
        let mut acc = a.clone();
        for _ in 1..n {
            acc = Formula::conj(acc, a.clone());
        }
        acc
    }

    /// Leaves have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Bot | Formula::Var(_) => 0,
            Formula::Imp(a, b) | Formula::Conj(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Bot | Formula::Var(_) => 1,
            Formula::Imp(a, b) | Formula::Conj(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn free_variables(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<u32>) {
        match self {
            Formula::Bot => {}
            Formula::Var(i) => {
                out.insert(*i);
            }
            Formula::Imp(a, b) | Formula::Conj(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Replaces every `Var(i)` by `f(i)`.
    pub fn substitute(&self, f: &impl Fn(u32) -> Formula) -> Formula {
        match self {
            Formula::Bot => Formula::Bot,
            Formula::Var(i) => f(*i),
            Formula::Imp(a, b) => Formula::imp(a.substitute(f), b.substitute(f)),
            Formula::Conj(a, b) => Formula::conj(a.substitute(f), b.substitute(f)),
        }
    }

    /// Fully parenthesized ASCII rendering; re-parses to the same tree.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Bot => write!(f, "bot"),
            Formula::Var(i) => write!(f, "X{i}"),
            Formula::Imp(a, b) => write!(f, "({a} -> {b})"),
            Formula::Conj(a, b) => write!(f, "({a} & {b})"),
        }
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::parser::parse_formula(s)
    }
}

/// One step of a basic literal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// `n*t`, `n >= 1`.
    Mult(u32),
    /// `t^n`, `n >= 2`.
    Pow(u32),
}

/// A one-variable term built by iterated multiples and powers of `X_var`.
/// Steps apply innermost-first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasicLiteral {
    pub var: u32,
    pub steps: Vec<Step>,
}

impl BasicLiteral {
    pub fn new(var: u32, steps: Vec<Step>) -> Result<BasicLiteral> {
        if var == 0 {
            return Err(Error::InvalidArgument("literal variable must be >= 1".into()));
        }
        for s in &steps {
            match *s {
                Step::Mult(0) => {
                    return Err(Error::InvalidArgument("Mult(0) is not a step".into()));
                }
                Step::Pow(n) if n < 2 => {
                    return Err(Error::InvalidArgument(format!("Pow({n}) is not a step")));
                }
                _ => {}
            }
        }
        Ok(BasicLiteral { var, steps })
    }

    pub fn bare(var: u32) -> BasicLiteral {
        BasicLiteral { var, steps: Vec::new() }
    }

    pub fn expand(&self) -> Formula {
        expand_basic_literal(self)
    }

    /// Merges runs of equal step kinds (`m*(n*t) = (mn)*t`, `(t^m)^n = t^(mn)`)
    /// and drops `Mult(1)`. The term function is unchanged.
    pub fn normalized(&self) -> BasicLiteral {
        let mut out: Vec<Step> = Vec::new();
        for s in &self.steps {
            match (out.last_mut(), *s) {
                (_, Step::Mult(1)) => {}
                (Some(Step::Mult(a)), Step::Mult(b)) => *a *= b,
                (Some(Step::Pow(a)), Step::Pow(b)) => *a *= b,
                (_, s) => out.push(s),
            }
        }
        BasicLiteral { var: self.var, steps: out }
    }

    /// Counts in `(n1,n2,...,nu)` notation: alternating multiple, power,
    /// multiple, ... starting with a multiple `n1 >= 1`.
    pub fn notation_counts(&self) -> Vec<u32> {
        let norm = self.normalized();
        let mut counts = Vec::new();
        let mut expect_mult = true;
        for s in norm.steps {
            match s {
                Step::Mult(n) => {
                    counts.push(n);
                    expect_mult = false;
                }
                Step::Pow(n) => {
                    if expect_mult {
                        counts.push(1);
                    }
                    counts.push(n);
                    expect_mult = true;
                }
            }
        }
        if counts.is_empty() {
            counts.push(1);
        }
        counts
    }

    /// Parses `(n1,n2,...,nu)X<i>`.
    pub fn parse(text: &str) -> Result<BasicLiteral> {
        let t = text.trim();
        let bad = |msg: &str| Error::Syntax { pos: 0, msg: format!("basic literal `{t}`: {msg}") };
        let rest = t.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
        let (counts, var) = rest.split_once(')').ok_or_else(|| bad("expected `)`"))?;
        let var = var
            .trim()
            .strip_prefix('X')
            .ok_or_else(|| bad("expected a variable X<i>"))?
            .parse::<u32>()
            .map_err(|_| bad("bad variable index"))?;
        let mut steps = Vec::new();
        for (k, c) in counts.split(',').enumerate() {
            let n: u32 = c.trim().parse().map_err(|_| bad("counts must be integers"))?;
            if k % 2 == 0 {
                if n == 0 {
                    return Err(bad("multiples must be >= 1"));
                }
                if n > 1 {
                    steps.push(Step::Mult(n));
                }
            } else {
                if n < 2 {
                    return Err(bad("powers must be > 1"));
                }
                steps.push(Step::Pow(n));
            }
        }
        BasicLiteral::new(var, steps)
    }
}

impl fmt::Display for BasicLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<String> = self.notation_counts().iter().map(u32::to_string).collect();
        write!(f, "({})X{}", counts.join(","), self.var)
    }
}

pub fn expand_basic_literal(l: &BasicLiteral) -> Formula {
    l.steps.iter().fold(Formula::var(l.var), |acc, s| match *s {
        Step::Mult(n) => Formula::multiple(n, acc),
        Step::Pow(n) => Formula::power(n, acc),
    })
}

pub fn free_variables(f: &Formula) -> BTreeSet<u32> {
    f.free_variables()
}

pub fn render_formula(f: &Formula) -> String {
    f.render()
}
