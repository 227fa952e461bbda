//! Finite chains as index tables: elements are `0..n` in increasing order,
//! `0` is bottom and `n - 1` is top.

use std::collections::BTreeSet;

use super::{Algebra, TruthValue};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainTable {
    n: usize,
    mul: Vec<u16>,
    imp: Vec<u16>,
}

impl ChainTable {
    /// Tables computed pointwise through [`Algebra::tnorm`] and
    /// [`Algebra::residuum`].
    pub fn from_algebra(alg: &Algebra) -> Result<ChainTable> {
        alg.require_finite("operation table")?;
        let els = alg.elements()?;
        let n = els.len();
        let index = |v: &TruthValue| els.iter().position(|e| e == v).expect("closed operation");
        let mut mul = vec![0; n * n];
        let mut imp = vec![0; n * n];
        for (i, a) in els.iter().enumerate() {
            for (j, b) in els.iter().enumerate() {
                mul[i * n + j] = index(&alg.tnorm_unchecked(a, b)) as u16;
                imp[i * n + j] = index(&alg.residuum_unchecked(a, b)) as u16;
            }
        }
        Ok(ChainTable { n, mul, imp })
    }

    /// Closed-form tables of `FiniteMv(m_1) (+) ... (+) FiniteMv(m_r)`.
    pub fn from_sizes(sizes: &[u32]) -> Result<ChainTable> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidArgument("sizes must be a non-empty list of positive integers".into()));
        }
        let mut starts = Vec::with_capacity(sizes.len());
        let mut owner = Vec::new();
        for (k, &m) in sizes.iter().enumerate() {
            starts.push(owner.len());
            owner.extend(std::iter::repeat_n(k, m as usize));
        }
        let n = owner.len() + 1;
        let top = n - 1;
        let mut mul = vec![0; n * n];
        let mut imp = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let (p, r) = if a == top {
                    (b, if b == top { top } else { b })
                } else if b == top {
                    (a, top)
                } else if owner[a] == owner[b] {
                    let k = owner[a];
                    let (s, m) = (starts[k], sizes[k] as usize);
                    let (x, y) = (a - s, b - s);
                    let p = s + (x + y).saturating_sub(m);
                    let r = if a <= b { top } else { s + m - x + y };
                    (p, r)
                } else {
                    (a.min(b), if a < b { top } else { b })
                };
                mul[a * n + b] = p as u16;
                imp[a * n + b] = r as u16;
            }
        }
        Ok(ChainTable { n, mul, imp })
    }

    /// From a raw product table; the residuum is derived as
    /// `max{c : a*c <= b}`. All BL-chain axioms are checked.
    pub fn from_product_table(rows: &[Vec<usize>]) -> Result<ChainTable> {
        let n = rows.len();
        let mul = flatten(rows, n)?;
        let mut imp = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let best = (0..n).rev().find(|&c| mul[a * n + c] as usize <= b);
                let best = best.ok_or(Error::AxiomViolation { axiom: "bottom absorption", a, b, c: 0 })?;
                imp[a * n + b] = best as u16;
            }
        }
        let t = ChainTable { n, mul, imp };
        t.check_axioms()?;
        Ok(t)
    }

    /// From raw product and residuum tables, both checked.
    pub fn from_tables(mul: &[Vec<usize>], imp: &[Vec<usize>]) -> Result<ChainTable> {
        let n = mul.len();
        if imp.len() != n {
            return Err(Error::Table("product and residuum tables differ in size".into()));
        }
        let t = ChainTable { n, mul: flatten(mul, n)?, imp: flatten(imp, n)? };
        t.check_axioms()?;
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn top(&self) -> usize {
        self.n - 1
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.imp[a * self.n + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.imp(a, 0)
    }

    /// Exhaustive check of the BL-chain axioms over all triples. Reports the
    /// first failing axiom with its witness.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.n;
        let top = self.top();
        let fail = |axiom, a, b, c| Err(Error::AxiomViolation { axiom, a, b, c });
        for a in 0..n {
            if self.mul(top, a) != a || self.mul(a, top) != a {
                return fail("top is neutral", top, a, 0);
            }
            if self.mul(0, a) != 0 {
                return fail("bottom absorption", 0, a, 0);
            }
            for b in 0..n {
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("commutativity", a, b, 0);
                }
                if (self.imp(a, b) == top) != (a <= b) {
                    return fail("residuum determines order", a, b, 0);
                }
                if self.mul(a, self.imp(a, b)) != a.min(b) {
                    return fail("divisibility", a, b, 0);
                }
                if self.imp(a, b).max(self.imp(b, a)) != top {
                    return fail("prelinearity", a, b, 0);
                }
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("associativity", a, b, c);
                    }
                    if b <= c && self.mul(a, b) > self.mul(a, c) {
                        return fail("monotonicity", a, b, c);
                    }
                    if (self.mul(a, c) <= b) != (c <= self.imp(a, b)) {
                        return fail("residuation", a, b, c);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&e| self.mul(e, e) == e).collect()
    }

    pub fn is_mv(&self) -> bool {
        (0..self.n).all(|a| self.neg(self.neg(a)) == a)
    }

    pub fn is_godel(&self) -> bool {
        (0..self.n).all(|a| self.mul(a, a) == a)
    }

    /// Cuts the chain at its nontrivial idempotents and returns the sizes of
    /// the resulting MV-chains, bottom to top. Each segment is checked with
    /// the double-negation test relative to its local bottom, and the whole
    /// table is compared against the ordinal sum rebuilt from the sizes.
    pub fn decompose(&self) -> Result<Vec<u32>> {
        if self.n < 2 {
            return Err(Error::Table("a chain needs at least two elements".into()));
        }
        let idem = self.idempotents();
        let top = self.top();
        if idem.first() != Some(&0) || idem.last() != Some(&top) {
            return Err(Error::AxiomViolation { axiom: "bottom and top idempotent", a: 0, b: top, c: 0 });
        }
        let sizes: Vec<u32> = idem.windows(2).map(|w| (w[1] - w[0]) as u32).collect();
        for w in idem.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            for x in (lo..hi).chain(std::iter::once(top)) {
                let local_neg = self.imp(x, lo);
                if self.imp(local_neg, lo) != x {
                    return Err(Error::AxiomViolation { axiom: "segment double negation", a: x, b: lo, c: hi });
                }
            }
        }
        let rebuilt = ChainTable::from_sizes(&sizes)?;
        for a in 0..self.n {
            for b in 0..self.n {
                if rebuilt.mul(a, b) != self.mul(a, b) || rebuilt.imp(a, b) != self.imp(a, b) {
                    return Err(Error::AxiomViolation { axiom: "ordinal sum of MV-chains", a, b, c: 0 });
                }
            }
        }
        Ok(sizes)
    }

    pub fn subalgebra_generated(&self, seed: &[usize]) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = seed.iter().copied().collect();
        set.insert(0);
        set.insert(self.top());
        loop {
            let cur: Vec<usize> = set.iter().copied().collect();
            let before = set.len();
            for &a in &cur {
                for &b in &cur {
                    set.insert(self.mul(a, b));
                    set.insert(self.imp(a, b));
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    /// Induced operations on a subset (re-indexed in increasing order).
    /// Errors if the subset is not closed.
    pub fn restrict(&self, subset: &BTreeSet<usize>) -> Result<ChainTable> {
        let els: Vec<usize> = subset.iter().copied().collect();
        let m = els.len();
        let pos = |x: usize| {
            els.iter()
                .position(|&e| e == x)
                .ok_or_else(|| Error::Table(format!("subset is not closed: element {x} escapes")))
        };
        let mut mul = vec![0; m * m];
        let mut imp = vec![0; m * m];
        for (i, &a) in els.iter().enumerate() {
            for (j, &b) in els.iter().enumerate() {
                mul[i * m + j] = pos(self.mul(a, b))? as u16;
                imp[i * m + j] = pos(self.imp(a, b))? as u16;
            }
        }
        Ok(ChainTable { n: m, mul, imp })
    }

    pub fn product_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn residuum_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.imp(a, b)).collect()).collect()
    }
}

fn flatten(rows: &[Vec<usize>], n: usize) -> Result<Vec<u16>> {
    if n < 2 {
        return Err(Error::Table("a chain needs at least two elements".into()));
    }
    if n > u16::MAX as usize {
        return Err(Error::Table("table too large".into()));
    }
    let mut out = Vec::with_capacity(n * n);
    for (i, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(Error::Table(format!("row {i} has {} entries, expected {n}", r.len())));
        }
        for &x in r {
            if x >= n {
                return Err(Error::Table(format!("entry {x} in row {i} is out of range")));
            }
            out.push(x as u16);
        }
    }
    Ok(out)
}

/// Decomposes a raw product table (residuum derived).
pub fn decompose_table(rows: &[Vec<usize>]) -> Result<Vec<u32>> {
    ChainTable::from_product_table(rows)?.decompose()
}

/// All ordinal sums of finite MV-chains with exactly `n` elements, one per
/// isomorphism type: the compositions of `n - 1`.
pub fn enumerate_finite_chains(n: usize) -> Result<Vec<Algebra>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("chains have at least 2 elements, got {n}")));
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    compositions(n as u32 - 1, &mut cur, &mut out);
    out.iter().map(|s| Algebra::from_sizes(s)).collect()
}

fn compositions(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for first in (1..=rest).rev() {
        cur.push(first);
        compositions(rest - first, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_counts() {
        assert_eq!(enumerate_finite_chains(2).unwrap(), vec![Algebra::mv_chain(1)]);
        assert_eq!(
            enumerate_finite_chains(3).unwrap(),
            vec![Algebra::mv_chain(2), Algebra::from_sizes(&[1, 1]).unwrap()]
        );
        assert_eq!(enumerate_finite_chains(5).unwrap().len(), 8);
        for n in 2..=8 {
            assert_eq!(enumerate_finite_chains(n).unwrap().len(), 1 << (n - 2));
        }
        assert!(enumerate_finite_chains(1).is_err());
    }

    #[test]
    fn two_routes_agree() {
        for n in 2..=7 {
            for alg in enumerate_finite_chains(n).unwrap() {
                let sizes = alg.finite_sizes().unwrap();
                assert_eq!(ChainTable::from_algebra(&alg).unwrap(), ChainTable::from_sizes(&sizes).unwrap());
            }
        }
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(Algebra::mv_chain(2).decompose().unwrap(), vec![2]);
        assert_eq!(Algebra::from_sizes(&[1, 1]).unwrap().decompose().unwrap(), vec![1, 1]);
        let raw = ChainTable::from_sizes(&[2, 1]).unwrap().product_rows();
        assert_eq!(raw.len(), 4);
        assert_eq!(decompose_table(&raw).unwrap(), vec![2, 1]);
    }

    #[test]
    fn bad_tables_report_axiom() {
        // not commutative
        let rows = vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 0, 2]];
        assert!(matches!(decompose_table(&rows), Err(Error::AxiomViolation { .. })));
        // top not neutral
        let rows = vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 1]];
        assert!(matches!(decompose_table(&rows), Err(Error::AxiomViolation { axiom: "top is neutral", .. })));
        // drastic product on 4 elements: a t-norm, but not divisible
        let rows = vec![vec![0, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 0, 2], vec![0, 1, 2, 3]];
        assert!(matches!(decompose_table(&rows), Err(Error::AxiomViolation { axiom: "divisibility", .. })));
        assert!(matches!(decompose_table(&[vec![0, 5], vec![0, 1]]), Err(Error::Table(_))));
        assert!(matches!(decompose_table(&[vec![0]]), Err(Error::Table(_))));
    }

    #[test]
    fn restriction_of_generated_subalgebra_is_a_chain() {
        let t = ChainTable::from_sizes(&[2, 3, 1]).unwrap();
        for seed in 0..t.len() {
            let sub = t.subalgebra_generated(&[seed]);
            let r = t.restrict(&sub).unwrap();
            r.check_axioms().unwrap();
            r.decompose().unwrap();
        }
        assert!(t.restrict(&BTreeSet::from([0, 3, 6])).is_err());
    }
}
