//! Exact piecewise-linear functions on `[0,1]`, used as the term functions of
//! one-variable basic literals over the standard MV-algebra.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::algebra::{Algebra, TruthValue};
use crate::error::{Error, Result};
use crate::formula::{BasicLiteral, Formula, Step};
use crate::rational::{ceil_log2, clamp01, fmt_rational, half, in_unit_interval, int, one, rat, to_json_parts, zero, Rational};
use crate::semantics::{eval, Valuation};

/// Continuous piecewise-linear map `[0,1] -> [0,1]` given by its breakpoints.
/// Collinear neighbours are merged, so the representation is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PwlFunction {
    breakpoints: Vec<(Rational, Rational)>,
}

impl PwlFunction {
    pub fn identity() -> PwlFunction {
        PwlFunction { breakpoints: vec![(zero(), zero()), (one(), one())] }
    }

    pub fn constant(c: Rational) -> Result<PwlFunction> {
        PwlFunction::new(vec![(zero(), c.clone()), (one(), c)])
    }

    /// Validates and canonicalizes a breakpoint list.
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<PwlFunction> {
        let bad = |m: &str| Error::InvalidArgument(format!("breakpoints: {m}"));
        if points.len() < 2 {
            return Err(bad("need at least two"));
        }
        if !points[0].0.is_zero() || points[points.len() - 1].0 != one() {
            return Err(bad("must start at x = 0 and end at x = 1"));
        }
        if points.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(bad("x must be strictly increasing"));
        }
        if points.iter().any(|(_, y)| !in_unit_interval(y)) {
            return Err(bad("y must lie in [0,1]"));
        }
        Ok(PwlFunction { breakpoints: merge_collinear(points) })
    }

    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.breakpoints
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if !in_unit_interval(x) {
            return Err(Error::InvalidArgument(format!("{} is outside [0,1]", fmt_rational(x))));
        }
        let k = self.breakpoints.iter().position(|(bx, _)| bx >= x).expect("last x is 1");
        let (x1, y1) = &self.breakpoints[k];
        if x1 == x {
            return Ok(y1.clone());
        }
        let (x0, y0) = &self.breakpoints[k - 1];
        Ok(y0 + (y1 - y0) * (x - x0) / (x1 - x0))
    }

    /// `x -> clamp(c*f(x) + d)`, with new breakpoints where the clamp kicks in.
    fn map_affine_clamped(&self, c: &Rational, d: &Rational) -> PwlFunction {
        let lift = |y: &Rational| c * y + d;
        let mut out: Vec<(Rational, Rational)> = Vec::new();
        for w in self.breakpoints.windows(2) {
            let ((x0, y0), (x1, y1)) = (&w[0], &w[1]);
            let (z0, z1) = (lift(y0), lift(y1));
            out.push((x0.clone(), clamp01(z0.clone())));
            let mut cuts: Vec<Rational> = [zero(), one()]
                .iter()
                .filter(|level| ((&z0 - *level) * (&z1 - *level)).is_negative())
                .map(|level| x0 + (level - &z0) / (&z1 - &z0) * (x1 - x0))
                .collect();
            cuts.sort();
            for x in cuts {
                let y = clamp01(lift(&self.eval(&x).expect("cut inside [0,1]")));
                out.push((x, y));
            }
        }
        let (xl, yl) = self.breakpoints.last().expect("nonempty");
        out.push((xl.clone(), clamp01(lift(yl))));
        PwlFunction { breakpoints: merge_collinear(out) }
    }

    /// Post-composes one literal step.
    pub fn then(&self, step: Step) -> PwlFunction {
        match step {
            Step::Mult(n) => self.map_affine_clamped(&int(n.into()), &zero()),
            Step::Pow(n) => self.map_affine_clamped(&int(n.into()), &(one() - int(n.into()))),
        }
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.breakpoints.windows(2).all(|w| w[0].1 <= w[1].1)
    }

    /// `[x_num, x_den, y_num, y_den]` per breakpoint.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.breakpoints
                .iter()
                .map(|(x, y)| {
                    let (xn, xd) = to_json_parts(x);
                    let (yn, yd) = to_json_parts(y);
                    Value::Array(vec![xn, xd, yn, yd])
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<PwlFunction> {
        let bad = || Error::InvalidArgument("expected an array of [x_num, x_den, y_num, y_den]".into());
        let part = |v: &Value| -> Result<num_bigint::BigInt> {
            match v {
                Value::Number(n) => n.as_i64().map(num_bigint::BigInt::from).ok_or_else(bad),
                Value::String(s) => s.parse().map_err(|_| bad()),
                _ => Err(bad()),
            }
        };
        let mut points = Vec::new();
        for item in v.as_array().ok_or_else(bad)? {
            let q = item.as_array().filter(|q| q.len() == 4).ok_or_else(bad)?;
            let (xn, xd, yn, yd) = (part(&q[0])?, part(&q[1])?, part(&q[2])?, part(&q[3])?);
            if xd.is_zero() || yd.is_zero() {
                return Err(bad());
            }
            points.push((Rational::new(xn, xd), Rational::new(yn, yd)));
        }
        PwlFunction::new(points)
    }
}

impl fmt::Display for PwlFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .breakpoints
            .iter()
            .map(|(x, y)| format!("({}, {})", fmt_rational(x), fmt_rational(y)))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn merge_collinear(points: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
    for p in points {
        if out.last().is_some_and(|q| q.0 == p.0) {
            continue;
        }
        if out.len() >= 2 {
            let (a, b) = (&out[out.len() - 2], &out[out.len() - 1]);
            if (&b.1 - &a.1) * (&p.0 - &b.0) == (&p.1 - &b.1) * (&b.0 - &a.0) {
                out.pop();
            }
        }
        out.push(p);
    }
    out
}

/// Term function of a basic literal on the standard MV-algebra.
pub fn literal_to_pwl(l: &BasicLiteral) -> PwlFunction {
    l.steps.iter().fold(PwlFunction::identity(), |f, s| f.then(*s))
}

/// Preimage of 0 under a nondecreasing function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZeroSet {
    Empty,
    /// Exactly `{0}`.
    Point0,
    /// `[0, t]` with `t > 0`.
    Interval(Rational),
}

impl ZeroSet {
    /// Largest point of the set, if any.
    pub fn sup(&self) -> Option<Rational> {
        match self {
            ZeroSet::Empty => None,
            ZeroSet::Point0 => Some(zero()),
            ZeroSet::Interval(t) => Some(t.clone()),
        }
    }
}

impl fmt::Display for ZeroSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZeroSet::Empty => write!(f, "empty"),
            ZeroSet::Point0 => write!(f, "{{0}}"),
            ZeroSet::Interval(t) => write!(f, "[0, {}]", fmt_rational(t)),
        }
    }
}

pub fn pwl_zero_set(f: &PwlFunction) -> Result<ZeroSet> {
    if let Some(w) = f.breakpoints.windows(2).find(|w| w[0].1 > w[1].1) {
        return Err(Error::NonMonotone(fmt_rational(&w[0].0)));
    }
    if f.breakpoints[0].1.is_positive() {
        return Ok(ZeroSet::Empty);
    }
    let t = f
        .breakpoints
        .iter()
        .take_while(|(_, y)| y.is_zero())
        .last()
        .map(|(x, _)| x.clone())
        .expect("f(0) = 0");
    Ok(if t.is_zero() { ZeroSet::Point0 } else { ZeroSet::Interval(t) })
}

/// Least `x` with `f(x) = 1` for nondecreasing `f`, if any.
pub fn pwl_one_set_start(f: &PwlFunction) -> Result<Option<Rational>> {
    if let Some(w) = f.breakpoints.windows(2).find(|w| w[0].1 > w[1].1) {
        return Err(Error::NonMonotone(fmt_rational(&w[0].0)));
    }
    Ok(f.breakpoints.iter().find(|(_, y)| *y == one()).map(|(x, _)| x.clone()))
}

pub const DEFAULT_STEP_BOUND: u32 = 16;

/// A literal in `X1` whose zero set is exactly `[0, h/k]`; the fraction is
/// reduced first.
///
/// Breadth-first search over the image `a/k` of `h/k`, which keeps the
/// denominator `k`: `Mult(m)` sends `a` to `ma` (needs `ma < k`), `Pow(n)`
/// sends it to `na - (n-1)k` (needs a positive result). The search stops once
/// `a/k = (n-1)/n` for some `n`, where a final `Pow(n)` lands exactly on 0.
/// Shortest paths win, then multiples before powers, then smaller counts.
pub fn threshold_literal(h: i64, k: i64, step_bound: u32) -> Result<BasicLiteral> {
    if k <= 0 || h <= 0 || h >= k {
        return Err(Error::InvalidArgument(format!("{h}/{k} is not strictly between 0 and 1")));
    }
    let target = rat(h, k);
    let (h, k) = (target.numer().to_i64().expect("fits"), target.denom().to_i64().expect("fits"));
    let bound = i64::from(step_bound.max(2));
    let mut prev: HashMap<i64, Option<(i64, Step)>> = HashMap::from([(h, None)]);
    let mut queue = VecDeque::from([h]);
    while let Some(a) = queue.pop_front() {
        if k % (k - a) == 0 && k / (k - a) >= 2 && k / (k - a) <= bound {
            let mut steps = vec![Step::Pow((k / (k - a)) as u32)];
            let mut cur = a;
            while let Some(Some((p, s))) = prev.get(&cur) {
                steps.push(*s);
                cur = *p;
            }
            steps.reverse();
            let lit = BasicLiteral::new(1, steps)?;
            let f = literal_to_pwl(&lit);
            if pwl_zero_set(&f)? != ZeroSet::Interval(target.clone()) || f.eval(&one())? != one() {
                return Err(Error::Invariant(format!("threshold literal {lit} misses {}", fmt_rational(&target))));
            }
            return Ok(lit);
        }
        let moves = (2..=bound)
            .map(|m| (a * m, Step::Mult(m as u32)))
            .chain((2..=bound).map(|n| (n * a - (n - 1) * k, Step::Pow(n as u32))));
        for (b, step) in moves {
            if b > 0 && b < k && !prev.contains_key(&b) {
                prev.insert(b, Some((a, step)));
                queue.push_back(b);
            }
        }
    }
    Err(Error::SearchExhausted { what: format!("literal with zero set [0, {}]", fmt_rational(&target)) })
}

/// A formula in one variable that is positive at `p` and zero at `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    /// Index of the separating variable (1-based).
    pub var: u32,
    /// Whether the formula is the negation of `literal`.
    pub negated: bool,
    pub literal: BasicLiteral,
    pub formula: Formula,
    /// Number of doubling steps before merging.
    pub raw_steps: usize,
    /// Upper bound on `raw_steps` from the descent analysis.
    pub step_bound: usize,
    /// Zero set of `literal` is `[0, threshold]` (ascending case); in the
    /// negated case `literal` equals 1 exactly on `[threshold, 1]`.
    pub threshold: Rational,
    pub value_p: Rational,
    pub value_q: Rational,
}

enum Double {
    Mult,
    Pow,
}

fn apply(d: &Double, x: &Rational) -> Rational {
    match d {
        Double::Mult => clamp01(x * int(2)),
        Double::Pow => clamp01(x * int(2) - one()),
    }
}

/// Separates `p` from `q` over the standard MV-algebra by a doubling descent
/// on one coordinate. The first coordinate with `q(i) < p(i)` is used if
/// any; then the literal sends `q(i)` to 0 and `p(i)` above 0. Otherwise a
/// coordinate with `p(j) < q(j)` gets a literal that is 1 at `q(j)` and below
/// 1 at `p(j)`, and its negation is returned.
pub fn separate_points(p: &[Rational], q: &[Rational]) -> Result<Separation> {
    if p.len() != q.len() || p.is_empty() {
        return Err(Error::InvalidArgument("points must have the same positive dimension".into()));
    }
    if let Some(x) = p.iter().chain(q).find(|x| !in_unit_interval(x)) {
        return Err(Error::InvalidArgument(format!("coordinate {} is outside [0,1]", fmt_rational(x))));
    }
    if p == q {
        return Err(Error::InvalidArgument("points are equal".into()));
    }
    let h = half();
    let (i, negated) = match (0..p.len()).find(|&i| q[i] < p[i]) {
        Some(i) => (i, false),
        None => ((0..p.len()).find(|&i| p[i] < q[i]).expect("p != q"), true),
    };
    let (lo0, hi0) = if negated { (p[i].clone(), q[i].clone()) } else { (q[i].clone(), p[i].clone()) };
    let (mut lo, mut hi) = (lo0.clone(), hi0.clone());
    let mut raw: Vec<Double> = Vec::new();
    loop {
        let (d, last) = if !negated {
            if lo <= h && hi > h {
                (Double::Pow, true)
            } else if hi <= h {
                (Double::Mult, false)
            } else {
                (Double::Pow, false)
            }
        } else if lo < h && hi >= h {
            (Double::Mult, true)
        } else if lo >= h {
            (Double::Pow, false)
        } else {
            (Double::Mult, false)
        };
        if last {
            let gap = one() / (&hi0 - &lo0);
            let step_bound = ceil_log2(&gap) as usize + ceil_log2(&(one() / &hi)) as usize + 2;
            raw.push(d);
            return finish(p, q, i, negated, raw, step_bound);
        }
        lo = apply(&d, &lo);
        hi = apply(&d, &hi);
        raw.push(d);
    }
}

fn finish(
    p: &[Rational],
    q: &[Rational],
    i: usize,
    negated: bool,
    raw: Vec<Double>,
    step_bound: usize,
) -> Result<Separation> {
    let var = i as u32 + 1;
    let steps = raw
        .iter()
        .map(|d| match d {
            Double::Mult => Step::Mult(2),
            Double::Pow => Step::Pow(2),
        })
        .collect();
    let literal = BasicLiteral::new(var, steps)?.normalized();
    let pwl = literal_to_pwl(&literal);
    let threshold = if negated {
        pwl_one_set_start(&pwl)?
    } else {
        pwl_zero_set(&pwl)?.sup()
    }
    .ok_or_else(|| Error::Invariant(format!("literal {literal} has no threshold")))?;
    let formula = if negated { Formula::neg(literal.expand()) } else { literal.expand() };

    let mvq = Algebra::standard_mv();
    let value_at = |pt: &[Rational]| -> Result<Rational> {
        let v = Valuation::new(pt.iter().enumerate().map(|(k, x)| (k as u32 + 1, mvq.embed(x).expect("in [0,1]"))))?;
        let tv = eval(&mvq, &v, &formula)?;
        let by_eval = mvq.real_value(&tv).expect("MVQ value");
        let lit = pwl.eval(&pt[i])?;
        let by_pwl = if negated { one() - lit } else { lit };
        if by_eval != by_pwl {
            return Err(Error::Invariant(format!("evaluation and PWL disagree on {formula}")));
        }
        Ok(by_eval)
    };
    let (value_p, value_q) = (value_at(p)?, value_at(q)?);
    if !value_p.is_positive() || !value_q.is_zero() {
        return Err(Error::Invariant(format!("{formula} does not separate the points")));
    }
    Ok(Separation { var, negated, literal, formula, raw_steps: raw.len(), step_bound, threshold, value_p, value_q })
}

/// Value of a separator at a point of the standard MV-algebra, by direct
/// evaluation.
pub fn eval_at_point(formula: &Formula, point: &[Rational]) -> Result<Rational> {
    let mvq = Algebra::standard_mv();
    let v = Valuation::new(
        point
            .iter()
            .enumerate()
            .map(|(k, x)| Ok((k as u32 + 1, mvq.embed(x)?)))
            .collect::<Result<Vec<(u32, TruthValue)>>>()?,
    )?;
    let tv = eval(&mvq, &v, formula)?;
    mvq.real_value(&tv).ok_or_else(|| Error::Invariant("non-canonical MVQ value".into()))
}
