//! Valuations, evaluation, and brute-force semantic judgments over finite
//! algebras.
//!
//! Judgments run on the index tables of [`ChainTable`], evaluating a formula
//! on the whole valuation grid at once. Grid order is lexicographic with the
//! first listed variable most significant, so the first counterexample
//! reported is the lexicographically least one.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::hash::Hash;

use crate::algebra::{Algebra, ChainTable, TruthValue};
use crate::error::{Error, Result};
use crate::formula::Formula;

/// Assignment of truth values to a finite set of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valuation {
    assignment: BTreeMap<u32, TruthValue>,
}

impl Valuation {
    pub fn new(pairs: impl IntoIterator<Item = (u32, TruthValue)>) -> Result<Valuation> {
        let mut assignment = BTreeMap::new();
        for (i, v) in pairs {
            if i == 0 {
                return Err(Error::Valuation("variable indices start at 1".into()));
            }
            if assignment.insert(i, v).is_some() {
                return Err(Error::Valuation(format!("X{i} assigned twice")));
            }
        }
        Ok(Valuation { assignment })
    }

    /// Sends every listed variable to `v`.
    pub fn constant(vars: &[u32], v: &TruthValue) -> Valuation {
        Valuation { assignment: vars.iter().map(|&i| (i, v.clone())).collect() }
    }

    pub fn get(&self, var: u32) -> Option<&TruthValue> {
        self.assignment.get(&var)
    }

    pub fn support(&self) -> Vec<u32> {
        self.assignment.keys().copied().collect()
    }

    pub fn values(&self) -> Vec<TruthValue> {
        self.assignment.values().cloned().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &TruthValue)> {
        self.assignment.iter().map(|(k, v)| (*k, v))
    }

    /// Equal values on every variable both valuations assign.
    pub fn agrees_on_common_support(&self, other: &Valuation) -> bool {
        self.assignment
            .iter()
            .all(|(k, v)| other.assignment.get(k).is_none_or(|w| w == v))
    }

    /// Parses `X1=1/2, X2=top`; values use [`Algebra::parse_value`].
    pub fn parse(alg: &Algebra, text: &str) -> Result<Valuation> {
        let mut pairs = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (var, val) = item
                .split_once('=')
                .ok_or_else(|| Error::Valuation(format!("expected `X<i>=<value>`, got `{item}`")))?;
            let var = var
                .trim()
                .strip_prefix('X')
                .and_then(|d| d.parse::<u32>().ok())
                .ok_or_else(|| Error::Valuation(format!("bad variable `{}`", var.trim())))?;
            pairs.push((var, alg.parse_value(val)?));
        }
        Valuation::new(pairs)
    }

    /// Inverse of [`Valuation::parse`].
    pub fn format(&self, alg: &Algebra) -> String {
        let parts: Vec<String> =
            self.assignment.iter().map(|(k, v)| format!("X{k}={}", alg.format_value(v))).collect();
        parts.join(", ")
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.assignment.iter().map(|(k, v)| format!("X{k}={v}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Structural evaluation: `bot` is bottom, `&` the t-norm, `->` the residuum.
pub fn eval(alg: &Algebra, v: &Valuation, f: &Formula) -> Result<TruthValue> {
    for (_, x) in v.iter() {
        alg.check(x)?;
    }
    eval_checked(alg, v, f)
}

fn eval_checked(alg: &Algebra, v: &Valuation, f: &Formula) -> Result<TruthValue> {
    Ok(match f {
        Formula::Bot => alg.bottom(),
        Formula::Var(i) => v.get(*i).cloned().ok_or(Error::UnsupportedVariable(*i))?,
        Formula::Conj(a, b) => alg.tnorm_unchecked(&eval_checked(alg, v, a)?, &eval_checked(alg, v, b)?),
        Formula::Imp(a, b) => alg.residuum_unchecked(&eval_checked(alg, v, a)?, &eval_checked(alg, v, b)?),
    })
}

/// The full grid `T^n` of a finite algebra over a variable list.
#[derive(Debug, Clone)]
pub struct Grid {
    alg: Algebra,
    table: ChainTable,
    elements: Vec<TruthValue>,
    vars: Vec<u32>,
    points: usize,
}

impl Grid {
    pub fn new(alg: &Algebra, vars: &[u32]) -> Result<Grid> {
        let elements = alg.elements()?;
        let table = alg.table()?;
        let mut seen = BTreeSet::new();
        for &v in vars {
            if v == 0 || !seen.insert(v) {
                return Err(Error::Valuation(format!("bad or repeated variable X{v} in grid")));
            }
        }
        let points = elements
            .len()
            .checked_pow(vars.len() as u32)
            .filter(|&p| p <= 1 << 24)
            .ok_or_else(|| Error::InvalidArgument("valuation grid too large".into()))?;
        Ok(Grid { alg: alg.clone(), table, elements, vars: vars.to_vec(), points })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn table(&self) -> &ChainTable {
        &self.table
    }

    pub fn vars(&self) -> &[u32] {
        &self.vars
    }

    pub fn elements(&self) -> &[TruthValue] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points == 0
    }

    /// Element indices of grid point `p`, one per variable.
    pub fn point(&self, mut p: usize) -> Vec<usize> {
        let n = self.elements.len();
        let mut out = vec![0; self.vars.len()];
        for slot in out.iter_mut().rev() {
            *slot = p % n;
            p /= n;
        }
        out
    }

    pub fn valuation(&self, p: usize) -> Valuation {
        let idx = self.point(p);
        Valuation {
            assignment: self.vars.iter().zip(idx).map(|(&v, i)| (v, self.elements[i].clone())).collect(),
        }
    }

    /// Index of each variable's value at every grid point.
    pub fn columns(&self) -> Vec<(u32, Vec<usize>)> {
        let n = self.elements.len();
        let k = self.vars.len();
        self.vars
            .iter()
            .enumerate()
            .map(|(pos, &var)| {
                let stride = n.pow((k - 1 - pos) as u32);
                (var, (0..self.points).map(|p| (p / stride) % n).collect())
            })
            .collect()
    }

    pub fn covers(&self, f: &Formula) -> Result<()> {
        match f.free_variables().into_iter().find(|v| !self.vars.contains(v)) {
            Some(v) => Err(Error::UnsupportedVariable(v)),
            None => Ok(()),
        }
    }

    /// Value index of `f` at every grid point.
    pub fn eval_all(&self, f: &Formula) -> Result<Vec<usize>> {
        self.covers(f)?;
        let cols = self.columns();
        Ok(eval_columns(&self.table, &cols, self.points, f))
    }
}

fn eval_columns<A: PointOps>(ops: &A, cols: &[(u32, Vec<A::V>)], points: usize, f: &Formula) -> Vec<A::V> {
    match f {
        Formula::Bot => vec![ops.bot(); points],
        Formula::Var(i) => cols.iter().find(|(v, _)| v == i).expect("covered variable").1.clone(),
        Formula::Conj(a, b) | Formula::Imp(a, b) => {
            let x = eval_columns(ops, cols, points, a);
            let y = eval_columns(ops, cols, points, b);
            let conj = matches!(f, Formula::Conj(..));
            x.iter()
                .zip(&y)
                .map(|(p, q)| if conj { ops.mul(p, q) } else { ops.imp(p, q) })
                .collect()
        }
    }
}

/// Outcome of a universally quantified grid check; `witness` is the first
/// failing valuation in grid order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Judgment {
    pub holds: bool,
    pub witness: Option<Valuation>,
}

impl Judgment {
    fn from_first_failure(grid: &Grid, fail: Option<usize>) -> Judgment {
        Judgment { holds: fail.is_none(), witness: fail.map(|p| grid.valuation(p)) }
    }
}

/// Every valuation of `vars` into `alg`, lexicographic.
pub fn all_valuations(alg: &Algebra, vars: &[u32]) -> Result<impl Iterator<Item = Valuation>> {
    let grid = Grid::new(alg, vars)?;
    Ok((0..grid.len()).map(move |p| grid.valuation(p)))
}

pub fn is_tautology(alg: &Algebra, f: &Formula, vars: &[u32]) -> Result<Judgment> {
    let grid = Grid::new(alg, vars)?;
    let top = grid.table().top();
    let vals = grid.eval_all(f)?;
    Ok(Judgment::from_first_failure(&grid, vals.iter().position(|&x| x != top)))
}

pub fn are_equivalent(alg: &Algebra, f: &Formula, g: &Formula, vars: &[u32]) -> Result<Judgment> {
    let grid = Grid::new(alg, vars)?;
    let x = grid.eval_all(f)?;
    let y = grid.eval_all(g)?;
    Ok(Judgment::from_first_failure(&grid, x.iter().zip(&y).position(|(a, b)| a != b)))
}

pub fn semantic_consequence(
    alg: &Algebra,
    premises: &[Formula],
    f: &Formula,
    vars: &[u32],
) -> Result<Judgment> {
    let grid = Grid::new(alg, vars)?;
    let top = grid.table().top();
    let goal = grid.eval_all(f)?;
    let mut admissible = vec![true; grid.len()];
    for p in premises {
        for (slot, x) in admissible.iter_mut().zip(grid.eval_all(p)?) {
            *slot &= x == top;
        }
    }
    let fail = admissible.iter().zip(&goal).position(|(&ok, &g)| ok && g != top);
    Ok(Judgment::from_first_failure(&grid, fail))
}

/// The valuations (as value tuples in `vars` order) sending a formula to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneSet {
    pub vars: Vec<u32>,
    pub points: Vec<Vec<TruthValue>>,
}

impl OneSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn one_set(alg: &Algebra, f: &Formula, vars: &[u32]) -> Result<OneSet> {
    let grid = Grid::new(alg, vars)?;
    let top = grid.table().top();
    let vals = grid.eval_all(f)?;
    let points = vals
        .iter()
        .enumerate()
        .filter(|(_, &x)| x == top)
        .map(|(p, _)| grid.point(p).into_iter().map(|i| grid.elements()[i].clone()).collect())
        .collect();
    Ok(OneSet { vars: vars.to_vec(), points })
}

/// Pointwise operations shared by the index tables and by symbolic
/// algebras, so formula search can run on either.
pub trait PointOps {
    type V: Clone + Eq + Hash;
    fn bot(&self) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn imp(&self, a: &Self::V, b: &Self::V) -> Self::V;
}

impl PointOps for ChainTable {
    type V = usize;
    fn bot(&self) -> usize {
        0
    }
    fn mul(&self, a: &usize, b: &usize) -> usize {
        ChainTable::mul(self, *a, *b)
    }
    fn imp(&self, a: &usize, b: &usize) -> usize {
        ChainTable::imp(self, *a, *b)
    }
}

impl PointOps for Algebra {
    type V = TruthValue;
    fn bot(&self) -> TruthValue {
        self.bottom()
    }
    fn mul(&self, a: &TruthValue, b: &TruthValue) -> TruthValue {
        self.tnorm_unchecked(a, b)
    }
    fn imp(&self, a: &TruthValue, b: &TruthValue) -> TruthValue {
        self.residuum_unchecked(a, b)
    }
}

/// Which binary connectives formula enumeration may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Connectives {
    pub imp: bool,
    pub conj: bool,
}

impl Default for Connectives {
    fn default() -> Self {
        Connectives { imp: true, conj: true }
    }
}

/// A formula together with its values at the search points.
#[derive(Debug, Clone)]
pub struct FormulaClass<V> {
    pub formula: Formula,
    pub values: Vec<V>,
    pub depth: usize,
}

/// Level-by-level enumeration of core formulas up to `max_depth`, keeping
/// one representative per distinct value vector at the given points
/// (`columns` holds each variable's value at every point). Representatives
/// are the first formulas found, so every class reachable at depth `d` is
/// reached by a representative of depth `<= d`.
pub fn enumerate_classes<A: PointOps>(
    ops: &A,
    columns: &[(u32, Vec<A::V>)],
    points: usize,
    max_depth: usize,
    conn: Connectives,
) -> Vec<FormulaClass<A::V>> {
    let mut seen: HashSet<Vec<A::V>> = HashSet::new();
    let mut reps: Vec<FormulaClass<A::V>> = Vec::new();
    let mut push = |reps: &mut Vec<FormulaClass<A::V>>, formula: Formula, values: Vec<A::V>, depth| {
        if seen.insert(values.clone()) {
            reps.push(FormulaClass { formula, values, depth });
        }
    };
    push(&mut reps, Formula::Bot, vec![ops.bot(); points], 0);
    for (var, col) in columns {
        push(&mut reps, Formula::Var(*var), col.clone(), 0);
    }
    for depth in 1..=max_depth {
        let frozen = reps.len();
        let kinds = [(conn.imp, true), (conn.conj, false)];
        for (enabled, is_imp) in kinds {
            if !enabled {
                continue;
            }
            for i in 0..frozen {
                for j in 0..frozen {
                    if reps[i].depth != depth - 1 && reps[j].depth != depth - 1 {
                        continue;
                    }
                    let (a, b) = (&reps[i], &reps[j]);
                    let values: Vec<A::V> = a
                        .values
                        .iter()
                        .zip(&b.values)
                        .map(|(x, y)| if is_imp { ops.imp(x, y) } else { ops.mul(x, y) })
                        .collect();
                    let formula = if is_imp {
                        Formula::imp(a.formula.clone(), b.formula.clone())
                    } else {
                        Formula::conj(a.formula.clone(), b.formula.clone())
                    };
                    push(&mut reps, formula, values, depth);
                }
            }
        }
        if reps.len() == frozen {
            break;
        }
    }
    reps
}

/// Every core formula over `vars` with depth `<= max_depth`, each once, in
/// level order. With `dedup`, only the first formula of each semantic class
/// over that finite algebra is kept.
pub fn enumerate_formulas(
    vars: &[u32],
    max_depth: usize,
    conn: Connectives,
    dedup: Option<&Algebra>,
) -> Result<Vec<Formula>> {
    if let Some(alg) = dedup {
        let grid = Grid::new(alg, vars)?;
        let classes = enumerate_classes(grid.table(), &grid.columns(), grid.len(), max_depth, conn);
        return Ok(classes.into_iter().map(|c| c.formula).collect());
    }
    let mut levels: Vec<Vec<Formula>> = vec![std::iter::once(Formula::Bot)
        .chain(vars.iter().map(|&v| Formula::Var(v)))
        .collect()];
    for depth in 1..=max_depth {
        let all: Vec<&Formula> = levels.iter().flatten().collect();
        let fresh = |f: &Formula| f.depth() == depth - 1;
        let mut next = Vec::new();
        for (enabled, is_imp) in [(conn.imp, true), (conn.conj, false)] {
            if !enabled {
                continue;
            }
            for a in &all {
                for b in &all {
                    if !fresh(a) && !fresh(b) {
                        continue;
                    }
                    let (a, b) = ((*a).clone(), (*b).clone());
                    next.push(if is_imp { Formula::imp(a, b) } else { Formula::conj(a, b) });
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    Ok(levels.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_formula;
    use crate::rational::rat;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn three() -> Algebra {
        Algebra::from_sizes(&[1, 1]).unwrap()
    }

    #[test]
    fn eval_examples() {
        let mvq = Algebra::standard_mv();
        let v = Valuation::parse(&mvq, "X1=7/10").unwrap();
        assert_eq!(eval(&mvq, &v, &f("!X1")).unwrap(), TruthValue::at(0, rat(3, 10)));

        let e = TruthValue::at(1, rat(0, 1));
        let v = Valuation::new([(1, e.clone())]).unwrap();
        assert_eq!(eval(&three(), &v, &f("!!X1")).unwrap(), TruthValue::Top);
        assert!(eval(&three(), &v, &f("X1 \\/ !X1")).unwrap() < TruthValue::Top);
        assert_eq!(eval(&three(), &v, &f("X2")), Err(Error::UnsupportedVariable(2)));
    }

    #[test]
    fn grid_sizes() {
        assert_eq!(all_valuations(&Algebra::mv_chain(1), &[1, 2]).unwrap().count(), 4);
        assert_eq!(all_valuations(&Algebra::mv_chain(2), &[1]).unwrap().count(), 3);
        let vals: Vec<Valuation> = all_valuations(&three(), &[1, 2]).unwrap().collect();
        assert_eq!(vals.len(), 9);
        let distinct: BTreeSet<&Valuation> = vals.iter().collect();
        assert_eq!(distinct.len(), 9);
        assert!(vals.windows(2).all(|w| w[0] < w[1]), "lexicographic order");
        assert!(all_valuations(&Algebra::standard_mv(), &[1]).is_err());
    }

    #[test]
    fn tautology_examples() {
        assert!(is_tautology(&Algebra::mv_chain(2), &f("!!X1 -> X1"), &[1]).unwrap().holds);
        assert!(is_tautology(&three(), &f("X1 -> (X1 & X1)"), &[1]).unwrap().holds);
        let j = is_tautology(&Algebra::mv_chain(2), &f("X1 -> (X1 & X1)"), &[1]).unwrap();
        assert!(!j.holds);
        let w = j.witness.unwrap();
        assert_eq!(w.get(1), Some(&TruthValue::at(0, rat(1, 2))));
        assert_eq!(eval(&Algebra::mv_chain(2), &w, &f("X1 -> (X1 & X1)")).unwrap(), TruthValue::at(0, rat(1, 2)));
        assert_eq!(is_tautology(&three(), &f("X2"), &[1]), Err(Error::UnsupportedVariable(2)));
    }

    #[test]
    fn equivalence_examples() {
        assert!(are_equivalent(&three(), &f("X1"), &f("X1 & X1"), &[1]).unwrap().holds);
        let j = are_equivalent(&Algebra::mv_chain(2), &f("X1"), &f("X1 & X1"), &[1]).unwrap();
        assert_eq!(j.witness.unwrap().get(1), Some(&TruthValue::at(0, rat(1, 2))));
        let g = f("X1 -> X2 & X1");
        assert!(are_equivalent(&Algebra::mv_chain(3), &g, &g, &[1, 2]).unwrap().holds);
    }

    #[test]
    fn one_set_examples() {
        let t2 = Algebra::mv_chain(2);
        let top = vec![vec![TruthValue::Top]];
        assert_eq!(one_set(&t2, &f("X1"), &[1]).unwrap().points, top);
        assert_eq!(one_set(&t2, &f("X1 & X1"), &[1]).unwrap().points, top);
        assert!(one_set(&t2, &f("bot"), &[1]).unwrap().is_empty());
    }

    #[test]
    fn consequence_examples() {
        for alg in [Algebra::mv_chain(3), three(), Algebra::from_sizes(&[2, 1]).unwrap()] {
            let mp = semantic_consequence(&alg, &[f("X1 -> X2"), f("X1")], &f("X2"), &[1, 2]).unwrap();
            assert!(mp.holds);
            let g = f("X1 -> X2 -> X1");
            assert_eq!(
                semantic_consequence(&alg, &[], &g, &[1, 2]).unwrap(),
                is_tautology(&alg, &g, &[1, 2]).unwrap()
            );
        }
        let t2 = Algebra::mv_chain(2);
        assert!(semantic_consequence(&t2, &[f("X1")], &f("X1 & X1"), &[1]).unwrap().holds);
    }

    #[test]
    fn formula_enumeration_counts() {
        let d0 = enumerate_formulas(&[1], 0, Connectives::default(), None).unwrap();
        assert_eq!(d0, vec![Formula::Bot, Formula::Var(1)]);
        let d1 = enumerate_formulas(&[1], 1, Connectives::default(), None).unwrap();
        assert_eq!(d1.len(), 10);
        assert_eq!(d1.iter().collect::<BTreeSet<_>>().len(), 10);
        // 3 leaves, 3 + 2*3*3 at depth 1, then 2*(21^2 - 3^2) new at depth 2
        let d2 = enumerate_formulas(&[1, 2], 2, Connectives::default(), None).unwrap();
        assert_eq!(d2.len(), 21 + 2 * (21 * 21 - 3 * 3));
        assert!(d2.iter().all(|f| f.depth() <= 2));
        let only_imp = enumerate_formulas(&[1], 1, Connectives { imp: true, conj: false }, None).unwrap();
        assert_eq!(only_imp.len(), 6);

        let classes = enumerate_formulas(&[1], 1, Connectives::default(), Some(&Algebra::mv_chain(1))).unwrap();
        assert!(classes.len() <= 4);
    }

    #[test]
    fn dedup_classes_are_complete_and_distinct() {
        let alg = Algebra::from_sizes(&[2, 1]).unwrap();
        let grid = Grid::new(&alg, &[1]).unwrap();
        let raw = enumerate_formulas(&[1], 2, Connectives::default(), None).unwrap();
        let raw_classes: HashSet<Vec<usize>> = raw.iter().map(|g| grid.eval_all(g).unwrap()).collect();
        let reps = enumerate_formulas(&[1], 2, Connectives::default(), Some(&alg)).unwrap();
        let rep_classes: HashSet<Vec<usize>> = reps.iter().map(|g| grid.eval_all(g).unwrap()).collect();
        assert_eq!(reps.len(), rep_classes.len());
        assert_eq!(raw_classes, rep_classes);
    }

    #[test]
    fn grid_and_pointwise_eval_agree() {
        let alg = Algebra::from_sizes(&[2, 1]).unwrap();
        let grid = Grid::new(&alg, &[1, 2]).unwrap();
        let g = f("(X1 -> X2) \\/ (X2 & !X1)");
        let table_vals = grid.eval_all(&g).unwrap();
        for (p, v) in all_valuations(&alg, &[1, 2]).unwrap().enumerate() {
            assert_eq!(grid.elements()[table_vals[p]], eval(&alg, &v, &g).unwrap());
        }
    }

    #[test]
    fn valuation_literals() {
        let pq = Algebra::standard_product();
        let v = Valuation::parse(&pq, "X1=1/2, X2=top, X3=bot").unwrap();
        assert_eq!(v.support(), vec![1, 2, 3]);
        assert_eq!(v.format(&pq), "X1=1/2, X2=1, X3=0");
        assert_eq!(Valuation::parse(&pq, &v.format(&pq)).unwrap(), v);
        assert!(Valuation::parse(&pq, "X1=1/2, X1=1").is_err());
        assert!(Valuation::parse(&pq, "Y1=1").is_err());
        assert!(Valuation::parse(&Algebra::mv_chain(2), "X1=1/3").is_err());
        let a = Valuation::parse(&pq, "X1=1/2").unwrap();
        assert!(a.agrees_on_common_support(&v));
        assert!(!Valuation::parse(&pq, "X2=1/2").unwrap().agrees_on_common_support(&v));
    }
}
