//! Checkers for the two principles and their variants, witness
//! constructions, and structural classification of chains.
//!
//! P1: formulas with the same one-set are equivalent.
//! P2: distinct valuations `mu != nu` admit a formula `a` with
//! `mu(a) > 0 = nu(a)`. P2prime asks for `mu(a) < 1 = nu(a)` and
//! P2doubleprime for `mu(a) = 0` and `nu(a) = 1`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{enumerate_finite_chains, Algebra, Summand, TruthValue};
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::mcnaughton::separate_points;
use crate::rational::{ceil_int, one, rat, Rational};
use crate::semantics::{enumerate_classes, eval, Connectives, Grid, Valuation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Principle {
    P1,
    P2,
    P2prime,
    P2doubleprime,
}

impl Principle {
    pub const P2_FAMILY: [Principle; 3] = [Principle::P2, Principle::P2prime, Principle::P2doubleprime];

    pub fn name(&self) -> &'static str {
        match self {
            Principle::P1 => "P1",
            Principle::P2 => "P2",
            Principle::P2prime => "P2prime",
            Principle::P2doubleprime => "P2doubleprime",
        }
    }

    /// Separation condition on the values at `mu` and `nu`.
    fn separates(&self, mu: &TruthValue, nu: &TruthValue) -> bool {
        match self {
            Principle::P1 => false,
            Principle::P2 => !mu.is_bottom() && nu.is_bottom(),
            Principle::P2prime => !mu.is_top() && nu.is_top(),
            Principle::P2doubleprime => mu.is_bottom() && nu.is_top(),
        }
    }
}

impl fmt::Display for Principle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Principle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Principle> {
        match s.to_ascii_lowercase().as_str() {
            "p1" => Ok(Principle::P1),
            "p2" => Ok(Principle::P2),
            "p2prime" | "p2'" => Ok(Principle::P2prime),
            "p2doubleprime" | "p2''" => Ok(Principle::P2doubleprime),
            _ => Err(Error::InvalidArgument(format!("unknown principle `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    HoldsExhaustively,
    HoldsConstructively,
    FailsWithWitness,
    UndecidedAtDepth,
}

impl Verdict {
    /// `Some(true)` for both holding verdicts, `Some(false)` for a failure.
    pub fn holds(&self) -> Option<bool> {
        match self {
            Verdict::HoldsExhaustively | Verdict::HoldsConstructively => Some(true),
            Verdict::FailsWithWitness => Some(false),
            Verdict::UndecidedAtDepth => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Same one-set, different values at `valuation`.
    Formulas { alpha: Formula, beta: Formula, valuation: Valuation },
    /// A pair of valuations; with a separator for holding verdicts, without
    /// one for failures.
    Valuations { mu: Valuation, nu: Valuation },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipleReport {
    pub principle: Principle,
    pub algebra: Algebra,
    pub n_vars: usize,
    pub depth: usize,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub separator: Option<Formula>,
    /// Formula classes enumerated (P1, P2 failures) or valuation pairs
    /// separated (P2 holding).
    pub checked: usize,
    pub basis: String,
}

impl PrincipleReport {
    pub fn to_json(&self) -> Value {
        let alg = &self.algebra;
        let witness = match &self.witness {
            None => Value::Null,
            Some(Witness::Formulas { alpha, beta, valuation }) => {
                let val = |f: &Formula| eval(alg, valuation, f).map(|v| alg.format_value(&v)).unwrap_or_default();
                json!({
                    "alpha": alpha.render(),
                    "beta": beta.render(),
                    "valuation": valuation.format(alg),
                    "values": [val(alpha), val(beta)],
                })
            }
            Some(Witness::Valuations { mu, nu }) => {
                let mut w = json!({ "mu": mu.format(alg), "nu": nu.format(alg) });
                if let Some(s) = &self.separator {
                    let val = |v: &Valuation| eval(alg, v, s).map(|x| alg.format_value(&x)).unwrap_or_default();
                    w["values"] = json!([val(mu), val(nu)]);
                }
                w
            }
        };
        json!({
            "principle": self.principle,
            "algebra": alg.to_string(),
            "verdict": self.verdict,
            "witness": witness,
            "separator": self.separator.as_ref().map(Formula::render),
            "depth": self.depth,
            "n_vars": self.n_vars,
            "checked": self.checked,
            "basis": self.basis,
        })
    }
}

impl fmt::Display for PrincipleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alg = &self.algebra;
        writeln!(f, "{} on {}: {}", self.principle, alg, self.verdict)?;
        writeln!(f, "  variables: {}, depth: {}, checked: {}", self.n_vars, self.depth, self.checked)?;
        match &self.witness {
            Some(Witness::Formulas { alpha, beta, valuation }) => {
                writeln!(f, "  alpha: {alpha}")?;
                writeln!(f, "  beta: {beta}")?;
                writeln!(f, "  valuation: {}", valuation.format(alg))?;
            }
            Some(Witness::Valuations { mu, nu }) => {
                writeln!(f, "  mu: {}", mu.format(alg))?;
                writeln!(f, "  nu: {}", nu.format(alg))?;
            }
            None => {}
        }
        if let Some(s) = &self.separator {
            writeln!(f, "  separator: {s}")?;
        }
        write!(f, "  basis: {}", self.basis)
    }
}

fn vars_upto(n: usize) -> Vec<u32> {
    (1..=n as u32).collect()
}

fn check_params(n: usize, d: usize) -> Result<()> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("variable count and depth must be at least 1".into()));
    }
    Ok(())
}

/// An element `x` with `x * x != x`, if any.
fn non_idempotent_element(alg: &Algebra) -> Result<Option<TruthValue>> {
    if alg.is_finite() {
        let t = alg.table()?;
        let els = alg.elements()?;
        return Ok((0..t.len()).find(|&i| t.mul(i, i) != i).map(|i| els[i].clone()));
    }
    if alg.is_standard_godel() {
        return Ok(None);
    }
    Ok(alg.summands().iter().enumerate().find_map(|(k, s)| match s {
        Summand::FiniteMv(m) if *m >= 2 => Some(TruthValue::at(k, rat(1, i64::from(*m)))),
        Summand::RationalMv | Summand::Cancellative => Some(TruthValue::at(k, rat(1, 2))),
        _ => None,
    }))
}

/// Checks P1 with formulas over `X1..Xn` up to depth `d`.
///
/// The pair `(X1, X1 & X1)` is tried first: it has one-set `{X1 = 1}` on
/// every chain and differs at any non-idempotent element. Failing that, the
/// semantic classes of formulas are grouped by one-set over the full grid.
/// On infinite algebras only the fixed pair runs; if every element is
/// idempotent the verdict is constructive.
pub fn check_p1(alg: &Algebra, n: usize, d: usize) -> Result<PrincipleReport> {
    check_params(n, d)?;
    let x1 = Formula::var(1);
    let x1x1 = Formula::conj(x1.clone(), x1.clone());
    let mut report = PrincipleReport {
        principle: Principle::P1,
        algebra: alg.clone(),
        n_vars: n,
        depth: d,
        verdict: Verdict::UndecidedAtDepth,
        witness: None,
        separator: None,
        checked: 0,
        basis: String::new(),
    };

    if !alg.is_finite() {
        match non_idempotent_element(alg)? {
            Some(x) => {
                let mut assignment = vec![(1, x)];
                assignment.extend((2..=n as u32).map(|v| (v, TruthValue::Top)));
                report.verdict = Verdict::FailsWithWitness;
                report.witness =
                    Some(Witness::Formulas { alpha: x1, beta: x1x1, valuation: Valuation::new(assignment)? });
                report.basis = "x * x = 1 iff x = 1 on every chain, so X1 and X1 & X1 share a one-set; \
                                they differ at a non-idempotent element"
                    .into();
            }
            None => {
                report.verdict = Verdict::HoldsConstructively;
                report.basis = "every element is idempotent, so the t-norm is min and the logic \
                                extends Goedel logic"
                    .into();
            }
        }
        return Ok(report);
    }

    let vars = vars_upto(n);
    let grid = Grid::new(alg, &vars)?;
    let top = grid.table().top();
    let a = grid.eval_all(&x1)?;
    let b = grid.eval_all(&x1x1)?;
    if let Some(p) = a.iter().zip(&b).position(|(x, y)| x != y) {
        debug_assert!(a.iter().zip(&b).all(|(x, y)| (*x == top) == (*y == top)));
        report.verdict = Verdict::FailsWithWitness;
        report.witness = Some(Witness::Formulas { alpha: x1, beta: x1x1, valuation: grid.valuation(p) });
        report.checked = 2;
        report.basis = "fixed pair (X1, X1 & X1): equal one-sets, different values".into();
        return Ok(report);
    }

    let classes = enumerate_classes(grid.table(), &grid.columns(), grid.len(), d, Connectives::default());
    report.checked = classes.len();
    let mut by_one_set: HashMap<Vec<bool>, usize> = HashMap::new();
    for (k, c) in classes.iter().enumerate() {
        let ones: Vec<bool> = c.values.iter().map(|&v| v == top).collect();
        if let Some(&first) = by_one_set.get(&ones) {
            let other = &classes[first];
            let p = other.values.iter().zip(&c.values).position(|(x, y)| x != y).expect("distinct classes");
            report.verdict = Verdict::FailsWithWitness;
            report.witness = Some(Witness::Formulas {
                alpha: other.formula.clone(),
                beta: c.formula.clone(),
                valuation: grid.valuation(p),
            });
            report.basis = format!("two of {} formula classes share a one-set", classes.len());
            return Ok(report);
        }
        by_one_set.insert(ones, k);
    }
    if grid.table().is_godel() {
        report.verdict = Verdict::HoldsExhaustively;
        report.basis = format!(
            "all {} formula classes have distinct one-sets, and every element is idempotent",
            classes.len()
        );
    } else {
        report.basis = format!("no counterexample among {} formula classes", classes.len());
    }
    Ok(report)
}

/// Two constant valuations into the topmost summand that no formula tells
/// apart by being 0 at one and not the other. The topmost summand's bottom
/// and Top are used when it has a bottom, otherwise `1/2` and `1/3`.
pub fn indiscernible_pair(alg: &Algebra, n: usize) -> Result<(Valuation, Valuation)> {
    let (low, high) = indiscernible_values(alg)?;
    let vars = vars_upto(n.max(1));
    Ok((Valuation::constant(&vars, &low), Valuation::constant(&vars, &high)))
}

fn indiscernible_values(alg: &Algebra) -> Result<(TruthValue, TruthValue)> {
    if alg.is_standard_godel() {
        return Ok((TruthValue::at(0, rat(1, 2)), TruthValue::at(0, rat(1, 3))));
    }
    let summands = alg.summands();
    if summands.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "{alg} has a single summand, so every pair of distinct valuations is separable"
        )));
    }
    let k = summands.len() - 1;
    Ok(if summands[k].has_bottom() {
        (TruthValue::at(k, rat(0, 1)), TruthValue::Top)
    } else {
        (TruthValue::at(k, rat(1, 2)), TruthValue::at(k, rat(1, 3)))
    })
}

/// The pair reported as a failure witness for a P2-family principle.
fn failure_pair(alg: &Algebra, n: usize, variant: Principle) -> Result<(Valuation, Valuation)> {
    let (low, high) = indiscernible_values(alg)?;
    let vars = vars_upto(n);
    Ok(match variant {
        // all-top against a non-top value above the first summand
        Principle::P2prime => {
            let w = if low.is_top() { high } else { low };
            (Valuation::constant(&vars, &TruthValue::Top), Valuation::constant(&vars, &w))
        }
        _ => (Valuation::constant(&vars, &low), Valuation::constant(&vars, &high)),
    })
}

fn single_mv_summand(alg: &Algebra) -> bool {
    !alg.is_standard_godel()
        && matches!(alg.summands().as_slice(), [Summand::FiniteMv(_)] | [Summand::RationalMv])
}

fn real_point(alg: &Algebra, v: &Valuation) -> Result<Vec<Rational>> {
    v.iter()
        .map(|(_, x)| alg.real_value(x).ok_or_else(|| Error::Invariant(format!("no real value for {x}"))))
        .collect()
}

/// A formula meeting the variant's condition at `(p, q)` over the standard
/// MV-algebra. The P2 separator `a` comes from [`separate_points`];
/// P2prime uses `!a` and P2doubleprime `(!a)^k` with `k = ceil(1/a(p))`.
pub fn mv_separator(variant: Principle, p: &[Rational], q: &[Rational]) -> Result<Formula> {
    let sep = separate_points(p, q)?;
    Ok(match variant {
        Principle::P1 => return Err(Error::InvalidArgument("P1 has no separators".into())),
        Principle::P2 => sep.formula,
        Principle::P2prime => Formula::neg(sep.formula),
        Principle::P2doubleprime => {
            let k = ceil_int(&(one() / &sep.value_p));
            let k: u32 = k.try_into().map_err(|_| Error::Invariant("power count overflow".into()))?;
            Formula::power(k, Formula::neg(sep.formula))
        }
    })
}

/// Separates every given pair on a single-summand MV-chain (finite or
/// rational), re-checking each separator by evaluation in `alg`.
pub fn check_p2_on_pairs(
    alg: &Algebra,
    pairs: &[(Valuation, Valuation)],
    variant: Principle,
) -> Result<PrincipleReport> {
    if variant == Principle::P1 {
        return Err(Error::InvalidArgument("expected a P2-family principle".into()));
    }
    if !single_mv_summand(alg) {
        return Err(Error::InvalidArgument(format!("{alg} is not a single MV-chain")));
    }
    let mut first: Option<(Valuation, Valuation, Formula)> = None;
    for (mu, nu) in pairs {
        if mu == nu {
            return Err(Error::InvalidArgument("pair of equal valuations".into()));
        }
        if mu.support() != nu.support() {
            return Err(Error::InvalidArgument("valuations have different supports".into()));
        }
        let sep = mv_separator(variant, &real_point(alg, mu)?, &real_point(alg, nu)?)?;
        let (a, b) = (eval(alg, mu, &sep)?, eval(alg, nu, &sep)?);
        if !variant.separates(&a, &b) {
            return Err(Error::Invariant(format!("{sep} fails to separate {mu} from {nu}")));
        }
        if first.is_none() {
            first = Some((mu.clone(), nu.clone(), sep));
        }
    }
    let n_vars = pairs.first().map_or(0, |(mu, _)| mu.support().len());
    let (witness, separator) = match first {
        Some((mu, nu, s)) => (Some(Witness::Valuations { mu, nu }), Some(s)),
        None => (None, None),
    };
    Ok(PrincipleReport {
        principle: variant,
        algebra: alg.clone(),
        n_vars,
        depth: 0,
        verdict: Verdict::HoldsConstructively,
        witness,
        separator,
        checked: pairs.len(),
        basis: format!("explicit separators for all {} pairs, each re-evaluated", pairs.len()),
    })
}

/// Rationals with small denominators used as the sample carrier of `MVQ`:
/// the largest denominator bound `<= 5` keeping the grid within 121 points.
pub fn mvq_sample_values(n: usize) -> Result<Vec<Rational>> {
    for dmax in (1..=5i64).rev() {
        let mut vals: Vec<Rational> = (1..=dmax).flat_map(|k| (0..=k).map(move |j| rat(j, k))).collect();
        vals.sort();
        vals.dedup();
        if vals.len().checked_pow(n as u32).is_some_and(|p| p <= 121) {
            return Ok(vals);
        }
    }
    Err(Error::InvalidArgument(format!("too many variables ({n}) for the rational sample grid")))
}

fn ordered_pairs(points: &[Valuation]) -> Vec<(Valuation, Valuation)> {
    let mut out = Vec::new();
    for p in points {
        for q in points {
            if p != q {
                out.push((p.clone(), q.clone()));
            }
        }
    }
    out
}

/// Checks a P2-family principle with `n` variables.
///
/// Single-summand MV-chains: every ordered pair of distinct grid points (a
/// sample grid for `MVQ`) gets an explicit separator. Algebras with two or
/// more summands fail with [`indiscernible_pair`]-style constant
/// valuations, and all formula classes up to depth `d` are checked not to
/// separate them.
pub fn check_p2(alg: &Algebra, n: usize, d: usize, variant: Principle) -> Result<PrincipleReport> {
    check_params(n, d)?;
    if variant == Principle::P1 {
        return Err(Error::InvalidArgument("expected a P2-family principle".into()));
    }
    let vars = vars_upto(n);
    if single_mv_summand(alg) {
        let points: Vec<Valuation> = if alg.is_finite() {
            Grid::new(alg, &vars).map(|g| (0..g.len()).map(|p| g.valuation(p)).collect())?
        } else {
            let values = mvq_sample_values(n)?;
            let g = GridOf { values: values.iter().map(|r| alg.embed(r)).collect::<Result<_>>()?, vars: &vars };
            g.valuations()
        };
        let mut report = check_p2_on_pairs(alg, &ordered_pairs(&points), variant)?;
        report.n_vars = n;
        report.depth = d;
        report.basis = if alg.is_finite() {
            format!("explicit separators for all {} ordered pairs of distinct points", report.checked)
        } else {
            format!(
                "explicit separators for all {} ordered pairs over the sample values {{j/k : k <= {}}}",
                report.checked,
                mvq_sample_values(n)?.iter().map(|r| r.denom().clone()).max().expect("nonempty")
            )
        };
        return Ok(report);
    }

    let (mu, nu) = failure_pair(alg, n, variant)?;
    let columns: Vec<(u32, Vec<TruthValue>)> = vars
        .iter()
        .map(|&v| (v, vec![mu.get(v).expect("constant").clone(), nu.get(v).expect("constant").clone()]))
        .collect();
    let classes = enumerate_classes(alg, &columns, 2, d, Connectives::default());
    if let Some(c) = classes.iter().find(|c| variant.separates(&c.values[0], &c.values[1])) {
        return Err(Error::Invariant(format!("{} separates the indiscernible pair", c.formula)));
    }
    Ok(PrincipleReport {
        principle: variant,
        algebra: alg.clone(),
        n_vars: n,
        depth: d,
        verdict: Verdict::FailsWithWitness,
        witness: Some(Witness::Valuations { mu, nu }),
        separator: None,
        checked: classes.len(),
        basis: format!(
            "constant valuations into a summand above the first are indistinguishable by any formula; \
             confirmed on {} formula classes to depth {d}",
            classes.len()
        ),
    })
}

struct GridOf<'a> {
    values: Vec<TruthValue>,
    vars: &'a [u32],
}

impl GridOf<'_> {
    fn valuations(&self) -> Vec<Valuation> {
        let mut out = vec![Vec::new()];
        for &v in self.vars {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<(u32, TruthValue)>| {
                    self.values.iter().map(move |x| {
                        let mut p = prefix.clone();
                        p.push((v, x.clone()));
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(|p| Valuation::new(p).expect("distinct variables")).collect()
    }
}

/// Re-checks a report's witness by direct evaluation.
pub fn verify_report(r: &PrincipleReport) -> Result<()> {
    let alg = &r.algebra;
    let fail = |m: String| Err(Error::Invariant(m));
    match (&r.witness, r.verdict) {
        (Some(Witness::Formulas { alpha, beta, valuation }), Verdict::FailsWithWitness) => {
            if eval(alg, valuation, alpha)? == eval(alg, valuation, beta)? {
                return fail(format!("{alpha} and {beta} agree at {valuation}"));
            }
            if alg.is_finite() {
                let g = Grid::new(alg, &valuation.support())?;
                let top = g.table().top();
                let (a, b) = (g.eval_all(alpha)?, g.eval_all(beta)?);
                if a.iter().zip(&b).any(|(x, y)| (*x == top) != (*y == top)) {
                    return fail(format!("{alpha} and {beta} have different one-sets"));
                }
            } else if *beta != Formula::conj(alpha.clone(), alpha.clone()) || !matches!(alpha, Formula::Var(_)) {
                return fail("infinite-algebra P1 witness must be (X, X & X)".into());
            }
            Ok(())
        }
        (Some(Witness::Valuations { mu, nu }), verdict) => {
            if mu == nu {
                return fail("witness valuations are equal".into());
            }
            match (&r.separator, verdict.holds()) {
                (Some(s), Some(true)) => {
                    let (a, b) = (eval(alg, mu, s)?, eval(alg, nu, s)?);
                    if !r.principle.separates(&a, &b) {
                        return fail(format!("{s} does not separate the witness pair"));
                    }
                    Ok(())
                }
                (None, Some(false)) => {
                    let constant = |v: &Valuation| v.values().windows(2).all(|w| w[0] == w[1]);
                    if !constant(mu) || !constant(nu) || (mu.clone(), nu.clone()) != failure_pair(alg, mu.support().len(), r.principle)? {
                        return fail("failure witness is not the structural constant pair".into());
                    }
                    Ok(())
                }
                _ => fail("inconsistent P2 report".into()),
            }
        }
        (None, Verdict::HoldsExhaustively | Verdict::HoldsConstructively | Verdict::UndecidedAtDepth) => Ok(()),
        _ => fail("report witness does not match its verdict".into()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ChainClass {
    Classical,
    GodelExtension,
    LukasiewiczExtension,
    ProductLike,
    Other,
}

impl fmt::Display for ChainClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: ChainClass,
    pub summands: Vec<Summand>,
    /// Some `x` with `x * x != x`.
    pub non_idempotent: Option<TruthValue>,
    /// Some `x` with `!!x != x`.
    pub double_negation_failure: Option<TruthValue>,
}

impl Classification {
    pub fn to_json(&self, alg: &Algebra) -> Value {
        let summands: Vec<String> = self.summands.iter().map(Summand::token).collect();
        json!({
            "algebra": alg.to_string(),
            "verdict": self.verdict,
            "summands": summands,
            "non_idempotent": self.non_idempotent.as_ref().map(|v| alg.format_value(v)),
            "double_negation_failure": self.double_negation_failure.as_ref().map(|v| alg.format_value(v)),
        })
    }
}

fn double_negation_failure(alg: &Algebra) -> Result<Option<TruthValue>> {
    if alg.is_finite() {
        let t = alg.table()?;
        let els = alg.elements()?;
        return Ok((0..t.len()).find(|&i| t.neg(t.neg(i)) != i).map(|i| els[i].clone()));
    }
    if single_mv_summand(alg) {
        return Ok(None);
    }
    // the topmost summand has double negation 1 at every element
    let (low, _) = indiscernible_values(alg)?;
    Ok(Some(low))
}

/// Structural classification from the summand list, cross-checked against
/// the operation table for finite chains.
pub fn classify_chain(alg: &Algebra) -> Result<Classification> {
    let summands = alg.summands();
    let non_idempotent = non_idempotent_element(alg)?;
    let double_negation_failure = double_negation_failure(alg)?;
    let verdict = if alg.finite_sizes().as_deref() == Some(&[1]) {
        ChainClass::Classical
    } else if summands.iter().all(Summand::is_idempotent) {
        ChainClass::GodelExtension
    } else if single_mv_summand(alg) {
        ChainClass::LukasiewiczExtension
    } else if summands == [Summand::FiniteMv(1), Summand::Cancellative] {
        ChainClass::ProductLike
    } else {
        ChainClass::Other
    };
    if alg.is_finite() {
        let t = alg.table()?;
        let consistent = (verdict == ChainClass::Classical) == (t.len() == 2)
            && matches!(verdict, ChainClass::Classical | ChainClass::GodelExtension) == t.is_godel()
            && matches!(verdict, ChainClass::Classical | ChainClass::LukasiewiczExtension) == t.is_mv();
        if !consistent {
            return Err(Error::Invariant(format!("structural class {verdict:?} of {alg} contradicts its table")));
        }
    }
    Ok(Classification { verdict, summands, non_idempotent, double_negation_failure })
}

/// Checks that principle verdicts match the classification:
/// classical chains satisfy both principles, Goedel extensions only P1,
/// Lukasiewicz extensions only P2, and every other chain neither.
pub fn cross_validate(class: &Classification, p1: &PrincipleReport, p2: &PrincipleReport) -> Result<()> {
    let expected = match class.verdict {
        ChainClass::Classical => (true, true),
        ChainClass::GodelExtension => (true, false),
        ChainClass::LukasiewiczExtension => (false, true),
        ChainClass::ProductLike | ChainClass::Other => (false, false),
    };
    if (p1.verdict.holds(), p2.verdict.holds()) != (Some(expected.0), Some(expected.1)) {
        return Err(Error::Invariant(format!(
            "{} classified {:?} but P1 {:?}, {} {:?}",
            p1.algebra, class.verdict, p1.verdict, p2.principle, p2.verdict
        )));
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct CensusRow {
    pub algebra: Algebra,
    pub classification: Classification,
    pub p1: PrincipleReport,
    pub p2: PrincipleReport,
}

impl CensusRow {
    pub fn to_json(&self) -> Value {
        json!({
            "algebra": self.algebra.to_string(),
            "size": self.algebra.cardinality(),
            "classification": self.classification.to_json(&self.algebra),
            "p1": self.p1.to_json(),
            "p2": self.p2.to_json(),
        })
    }
}

/// Classification and both principle reports for every finite chain with
/// at most `n_max` elements, each row cross-validated.
pub fn census(n_max: usize, n_vars: usize, depth: usize) -> Result<Vec<CensusRow>> {
    if n_max < 2 {
        return Err(Error::InvalidArgument("census needs n_max >= 2".into()));
    }
    let mut rows = Vec::new();
    for n in 2..=n_max {
        for alg in enumerate_finite_chains(n)? {
            let classification = classify_chain(&alg)?;
            let p1 = check_p1(&alg, n_vars, depth)?;
            let p2 = check_p2(&alg, n_vars, depth, Principle::P2)?;
            verify_report(&p1)?;
            verify_report(&p2)?;
            cross_validate(&classification, &p1, &p2)?;
            rows.push(CensusRow { algebra: alg, classification, p1, p2 });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_formula;

    fn alg(s: &str) -> Algebra {
        s.parse().unwrap()
    }

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn p1_examples() {
        let r = check_p1(&alg("MV[1] (+) MV[1]"), 1, 3).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsExhaustively);
        verify_report(&r).unwrap();

        let r = check_p1(&alg("MV[2]"), 1, 2).unwrap();
        assert_eq!(r.verdict, Verdict::FailsWithWitness);
        let t2 = alg("MV[2]");
        assert_eq!(
            r.witness,
            Some(Witness::Formulas {
                alpha: f("X1"),
                beta: f("X1 & X1"),
                valuation: Valuation::parse(&t2, "X1=1/2").unwrap()
            })
        );
        verify_report(&r).unwrap();

        let r = check_p1(&alg("PQ"), 1, 3).unwrap();
        assert_eq!(r.verdict, Verdict::FailsWithWitness);
        verify_report(&r).unwrap();
        assert_eq!(check_p1(&alg("GQ"), 1, 3).unwrap().verdict, Verdict::HoldsConstructively);
        assert_eq!(check_p1(&alg("MVQ"), 1, 3).unwrap().verdict, Verdict::FailsWithWitness);
        assert!(check_p1(&alg("MV[1]"), 0, 3).is_err());
    }

    #[test]
    fn p2_examples() {
        let t2 = alg("MV[2]");
        let r = check_p2(&t2, 1, 3, Principle::P2).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsConstructively);
        assert_eq!(r.checked, 6);
        verify_report(&r).unwrap();

        let three = alg("MV[1] (+) MV[1]");
        let r = check_p2(&three, 1, 4, Principle::P2).unwrap();
        assert_eq!(r.verdict, Verdict::FailsWithWitness);
        let (mu, nu) = indiscernible_pair(&three, 1).unwrap();
        assert_eq!(mu.get(1), Some(&TruthValue::at(1, rat(0, 1))));
        assert_eq!(nu.get(1), Some(&TruthValue::Top));
        assert_eq!(r.witness, Some(Witness::Valuations { mu, nu }));
        verify_report(&r).unwrap();

        let pq = alg("PQ");
        let (mu, nu) = indiscernible_pair(&pq, 1).unwrap();
        assert_eq!(mu.get(1), Some(&TruthValue::at(1, rat(1, 2))));
        assert_eq!(nu.get(1), Some(&TruthValue::at(1, rat(1, 3))));
        assert_eq!(check_p2(&pq, 1, 3, Principle::P2).unwrap().verdict, Verdict::FailsWithWitness);
        assert!(indiscernible_pair(&alg("MV[3]"), 1).is_err());
    }

    #[test]
    fn p2_separator_example() {
        // p = 1, q = 1/2 on T2: X1 & X1 has values 1 and 0
        let t2 = alg("MV[2]");
        let mu = Valuation::parse(&t2, "X1=1").unwrap();
        let nu = Valuation::parse(&t2, "X1=1/2").unwrap();
        let r = check_p2_on_pairs(&t2, &[(mu, nu)], Principle::P2).unwrap();
        assert_eq!(r.separator, Some(f("X1 & X1")));
    }

    #[test]
    fn variants_on_mv_chains() {
        for m in 1..=3 {
            let a = Algebra::mv_chain(m);
            for v in Principle::P2_FAMILY {
                let r = check_p2(&a, 1, 2, v).unwrap();
                assert_eq!(r.verdict, Verdict::HoldsConstructively);
                verify_report(&r).unwrap();
            }
        }
    }

    #[test]
    fn mvq_sample() {
        assert_eq!(mvq_sample_values(1).unwrap().len(), 11);
        assert!(mvq_sample_values(2).unwrap().len().pow(2) <= 121);
        assert!(mvq_sample_values(7).is_err());
        let r = check_p2(&alg("MVQ"), 1, 1, Principle::P2doubleprime).unwrap();
        assert_eq!(r.checked, 110);
    }

    #[test]
    fn classification_examples() {
        let c = |s: &str| classify_chain(&alg(s)).unwrap().verdict;
        assert_eq!(c("MV[1]"), ChainClass::Classical);
        assert_eq!(c("MV[4]"), ChainClass::LukasiewiczExtension);
        assert_eq!(c("MV[2] (+) MV[1]"), ChainClass::Other);
        assert_eq!(c("MV[1] (+) MV[1] (+) MV[1]"), ChainClass::GodelExtension);
        assert_eq!(c("PQ"), ChainClass::ProductLike);
        assert_eq!(c("GQ"), ChainClass::GodelExtension);
        assert_eq!(c("MVQ"), ChainClass::LukasiewiczExtension);
        assert_eq!(c("2 (+) C (+) C"), ChainClass::Other);
        let cl = classify_chain(&alg("MV[2] (+) MV[1]")).unwrap();
        assert_eq!(cl.non_idempotent, Some(TruthValue::at(0, rat(1, 2))));
        assert!(cl.double_negation_failure.is_some());
    }

    #[test]
    fn census_small() {
        let rows = census(3, 1, 2).unwrap();
        let classes: Vec<ChainClass> = rows.iter().map(|r| r.classification.verdict).collect();
        assert_eq!(
            classes,
            vec![ChainClass::Classical, ChainClass::LukasiewiczExtension, ChainClass::GodelExtension]
        );
        assert_eq!(census(4, 1, 2).unwrap().len(), 7);
        assert!(census(1, 1, 1).is_err());
    }

    #[test]
    fn report_json_is_stable() {
        let r = check_p1(&alg("MV[2]"), 1, 2).unwrap();
        let j = r.to_json();
        assert_eq!(j["principle"], "P1");
        assert_eq!(j["verdict"], "FailsWithWitness");
        assert_eq!(j["witness"]["values"], json!(["1/2", "0"]));
        assert_eq!(j.to_string(), check_p1(&alg("MV[2]"), 1, 2).unwrap().to_json().to_string());
    }
}
