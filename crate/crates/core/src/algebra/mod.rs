//! Algebras of truth values: finite MV-chains, the standard rational
//! MV/Gödel/Product algebras, and finite ordinal sums of basic hoops.
//!
//! An algebra is described by a list of summands, bottom to top. Elements
//! are tagged with the summand they live in; the shared top is a separate
//! variant. Within a summand the hoop's own operations apply; across
//! summands the product is the lower element and the residuum `a -> b`
//! (for `a > b`) is `b`.

mod finite;

pub use finite::{decompose_table, enumerate_finite_chains, ChainTable};

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_rational, one, parse_rational, zero, Rational};

/// A totally ordered basic hoop used as an ordinal-sum summand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Summand {
    /// Wajsberg hoop on `{0/m, ..., m/m}`. `FiniteMv(1)` is `{0, 1}`.
    FiniteMv(u32),
    /// Rationals in `[0, 1]` under the Łukasiewicz product.
    RationalMv,
    /// Rationals in `(0, 1]` under `min`; no bottom.
    GodelHoop,
    /// Rationals in `(0, 1]` under multiplication; no bottom.
    Cancellative,
}

impl Summand {
    pub fn is_finite(&self) -> bool {
        matches!(self, Summand::FiniteMv(_))
    }

    pub fn has_bottom(&self) -> bool {
        matches!(self, Summand::FiniteMv(_) | Summand::RationalMv)
    }

    /// Whether every element is idempotent.
    pub fn is_idempotent(&self) -> bool {
        matches!(self, Summand::FiniteMv(1) | Summand::GodelHoop)
    }

    /// Non-top local values: `[0,1)` for MV summands, `(0,1)` for the others.
    pub fn contains_local(&self, r: &Rational) -> bool {
        if r.is_negative() || *r >= one() {
            return false;
        }
        match self {
            Summand::FiniteMv(m) => {
                let scaled = r * Rational::from_integer((*m).into());
                scaled.is_integer()
            }
            Summand::RationalMv => true,
            Summand::GodelHoop | Summand::Cancellative => !r.is_zero(),
        }
    }

    /// Hoop product of two non-top local values.
    fn local_mul(&self, x: &Rational, y: &Rational) -> Rational {
        match self {
            Summand::FiniteMv(_) | Summand::RationalMv => {
                let s = x + y - one();
                if s.is_negative() {
                    zero()
                } else {
                    s
                }
            }
            Summand::GodelHoop => x.min(y).clone(),
            Summand::Cancellative => x * y,
        }
    }

    /// Hoop residuum of non-top local values with `x > y`.
    fn local_imp_gt(&self, x: &Rational, y: &Rational) -> Rational {
        match self {
            Summand::FiniteMv(_) | Summand::RationalMv => one() - x + y,
            Summand::GodelHoop => y.clone(),
            Summand::Cancellative => y / x,
        }
    }

    /// Descriptor spelling: `MV[m]`, `MVQ`, `GHQ` or `C`.
    pub fn token(&self) -> String {
        match self {
            Summand::FiniteMv(m) => format!("MV[{m}]"),
            Summand::RationalMv => "MVQ".into(),
            Summand::GodelHoop => "GHQ".into(),
            Summand::Cancellative => "C".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Sum(Vec<Summand>),
    /// `min` and its residuum on all rationals of `[0, 1]`, as one block.
    StandardGodel,
}

/// A BL-chain given by a descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Algebra {
    repr: Repr,
}

/// An element of an algebra. `Top` is the shared unit; every other element
/// is a non-top value of one summand. Derived ordering: all `At` values
/// below `Top`, `At` lexicographic by (summand, local value).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue {
    At { summand: usize, local: Rational },
    Top,
}

impl TruthValue {
    pub fn at(summand: usize, local: Rational) -> TruthValue {
        TruthValue::At { summand, local }
    }

    pub fn is_top(&self) -> bool {
        matches!(self, TruthValue::Top)
    }

    /// Local 0 of the first summand.
    pub fn is_bottom(&self) -> bool {
        matches!(self, TruthValue::At { summand: 0, local } if local.is_zero())
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruthValue::Top => write!(f, "1"),
            TruthValue::At { summand: 0, local } => write!(f, "{}", fmt_rational(local)),
            TruthValue::At { summand, local } => write!(f, "{summand}:{}", fmt_rational(local)),
        }
    }
}

impl Algebra {
    /// Ordinal sum, bottom to top. The first summand must have a bottom.
    pub fn ordinal_sum(summands: Vec<Summand>) -> Result<Algebra> {
        let first = summands
            .first()
            .ok_or_else(|| Error::Descriptor("an ordinal sum needs at least one summand".into()))?;
        if !first.has_bottom() {
            return Err(Error::Descriptor(format!(
                "the first summand must have a bottom element, got {}",
                first.token()
            )));
        }
        if let Some(Summand::FiniteMv(0)) = summands.iter().find(|s| **s == Summand::FiniteMv(0)) {
            return Err(Error::Descriptor("MV[m] needs m >= 1".into()));
        }
        Ok(Algebra { repr: Repr::Sum(summands) })
    }

    /// `{0/m, ..., m/m}` under the Łukasiewicz operations.
    pub fn mv_chain(m: u32) -> Algebra {
        assert!(m >= 1);
        Algebra { repr: Repr::Sum(vec![Summand::FiniteMv(m)]) }
    }

    pub fn standard_mv() -> Algebra {
        Algebra { repr: Repr::Sum(vec![Summand::RationalMv]) }
    }

    pub fn standard_godel() -> Algebra {
        Algebra { repr: Repr::StandardGodel }
    }

    /// `2 (+) C`.
    pub fn standard_product() -> Algebra {
        Algebra { repr: Repr::Sum(vec![Summand::FiniteMv(1), Summand::Cancellative]) }
    }

    /// Ordinal sum of finite MV-chains with the given sizes `m_k`.
    pub fn from_sizes(sizes: &[u32]) -> Result<Algebra> {
        Algebra::ordinal_sum(sizes.iter().map(|&m| Summand::FiniteMv(m)).collect())
    }

    /// Summand list; `GQ` reports itself as `2 (+) GHQ`, its isomorphic
    /// decomposition.
    pub fn summands(&self) -> Vec<Summand> {
        match &self.repr {
            Repr::Sum(s) => s.clone(),
            Repr::StandardGodel => vec![Summand::FiniteMv(1), Summand::GodelHoop],
        }
    }

    pub fn is_standard_godel(&self) -> bool {
        self.repr == Repr::StandardGodel
    }

    pub fn summand_count(&self) -> usize {
        self.summands().len()
    }

    pub fn is_finite(&self) -> bool {
        match &self.repr {
            Repr::Sum(s) => s.iter().all(Summand::is_finite),
            Repr::StandardGodel => false,
        }
    }

    /// Sizes `m_k` when every summand is a finite MV-chain.
    pub fn finite_sizes(&self) -> Option<Vec<u32>> {
        match &self.repr {
            Repr::Sum(s) => s
                .iter()
                .map(|x| match x {
                    Summand::FiniteMv(m) => Some(*m),
                    _ => None,
                })
                .collect(),
            Repr::StandardGodel => None,
        }
    }

    /// Number of elements, if finite: `1 + sum m_k`.
    pub fn cardinality(&self) -> Option<usize> {
        self.finite_sizes().map(|s| 1 + s.iter().map(|&m| m as usize).sum::<usize>())
    }

    pub(crate) fn require_finite(&self, op: &'static str) -> Result<Vec<u32>> {
        self.finite_sizes().ok_or_else(|| Error::InfiniteAlgebra { op, algebra: self.to_string() })
    }

    /// Whether the descriptor, read as a subalgebra of a real t-norm
    /// algebra (MV summands and GQ as their real completions), has a
    /// closed carrier. A bottomless summand is closed only when its
    /// infimum is the bottom of a two-element summand directly below it.
    /// Recorded as metadata; no computation depends on it.
    pub fn is_closed_realization(&self) -> bool {
        match &self.repr {
            Repr::StandardGodel => true,
            Repr::Sum(s) => s.iter().enumerate().all(|(k, x)| {
                x.has_bottom() || (k > 0 && s[k - 1] == Summand::FiniteMv(1))
            }),
        }
    }

    pub fn bottom(&self) -> TruthValue {
        TruthValue::at(0, zero())
    }

    pub fn top(&self) -> TruthValue {
        TruthValue::Top
    }

    fn summand_of(&self, k: usize) -> Option<Summand> {
        match &self.repr {
            Repr::Sum(s) => s.get(k).cloned(),
            // one block acting like an MV summand's domain [0,1) under min
            Repr::StandardGodel => (k == 0).then_some(Summand::GodelHoop),
        }
    }

    pub fn contains(&self, v: &TruthValue) -> bool {
        match v {
            TruthValue::Top => true,
            TruthValue::At { summand, local } => match &self.repr {
                Repr::StandardGodel => *summand == 0 && !local.is_negative() && *local < one(),
                Repr::Sum(s) => s.get(*summand).is_some_and(|x| x.contains_local(local)),
            },
        }
    }

    pub fn check(&self, v: &TruthValue) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::NotInCarrier { value: v.to_string(), algebra: self.to_string() })
        }
    }

    /// The t-norm `a * b`.
    pub fn tnorm(&self, a: &TruthValue, b: &TruthValue) -> Result<TruthValue> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.tnorm_unchecked(a, b))
    }

    /// The residuum `a -> b`.
    pub fn residuum(&self, a: &TruthValue, b: &TruthValue) -> Result<TruthValue> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.residuum_unchecked(a, b))
    }

    /// `a -> bot`
    pub fn negation(&self, a: &TruthValue) -> Result<TruthValue> {
        self.residuum(a, &self.bottom())
    }

    pub(crate) fn tnorm_unchecked(&self, a: &TruthValue, b: &TruthValue) -> TruthValue {
        use TruthValue::*;
        match (a, b) {
            (Top, x) | (x, Top) => x.clone(),
            (At { summand: i, local: x }, At { summand: j, local: y }) => {
                if i == j {
                    let s = self.summand_of(*i).expect("checked summand");
                    TruthValue::at(*i, s.local_mul(x, y))
                } else if i < j {
                    a.clone()
                } else {
                    b.clone()
                }
            }
        }
    }

    pub(crate) fn residuum_unchecked(&self, a: &TruthValue, b: &TruthValue) -> TruthValue {
        if a <= b {
            return TruthValue::Top;
        }
        match (a, b) {
            (TruthValue::At { summand: i, local: x }, TruthValue::At { summand: j, local: y })
                if i == j =>
            {
                let s = self.summand_of(*i).expect("checked summand");
                TruthValue::at(*i, s.local_imp_gt(x, y))
            }
            // `a` sits in a higher summand (or is Top)
            _ => b.clone(),
        }
    }

    /// Places a number of `[0,1]` in the algebra: `0` is bottom, `1` is top;
    /// otherwise the first summand if it holds the value, else the unique
    /// other summand that does.
    pub fn embed(&self, r: &Rational) -> Result<TruthValue> {
        let bad = |msg: String| Error::TruthValue { value: fmt_rational(r), msg };
        if r.is_one() {
            return Ok(TruthValue::Top);
        }
        if r.is_zero() {
            return Ok(self.bottom());
        }
        if r.is_negative() || *r > one() {
            return Err(bad("truth values lie in [0, 1]".into()));
        }
        if let Repr::StandardGodel = self.repr {
            return Ok(TruthValue::at(0, r.clone()));
        }
        let summands = self.summands();
        if summands[0].contains_local(r) {
            return Ok(TruthValue::at(0, r.clone()));
        }
        let candidates: Vec<usize> =
            (1..summands.len()).filter(|&k| summands[k].contains_local(r)).collect();
        match candidates.as_slice() {
            [k] => Ok(TruthValue::at(*k, r.clone())),
            [] => Err(Error::NotInCarrier { value: fmt_rational(r), algebra: self.to_string() }),
            _ => Err(bad(format!(
                "ambiguous in {self}; qualify it with a summand index, e.g. `{}:{}`",
                candidates[0],
                fmt_rational(r)
            ))),
        }
    }

    /// Parses `bot`, `top`, `p/q` or `k:p/q` and checks membership.
    pub fn parse_value(&self, text: &str) -> Result<TruthValue> {
        let t = text.trim();
        let v = match t {
            "bot" => self.bottom(),
            "top" => TruthValue::Top,
            _ => match t.split_once(':') {
                Some((k, r)) => {
                    let k: usize = k.trim().parse().map_err(|_| Error::TruthValue {
                        value: t.to_string(),
                        msg: "summand index must be a non-negative integer".into(),
                    })?;
                    let r = parse_rational(r)?;
                    if r.is_one() {
                        TruthValue::Top
                    } else {
                        TruthValue::at(k, r)
                    }
                }
                None => self.embed(&parse_rational(t)?)?,
            },
        };
        self.check(&v)?;
        Ok(v)
    }

    /// Shortest spelling of `v` that [`Algebra::parse_value`] maps back to `v`.
    pub fn format_value(&self, v: &TruthValue) -> String {
        match v {
            TruthValue::Top => "1".into(),
            TruthValue::At { summand, local } => {
                if self.embed(local).ok().as_ref() == Some(v) {
                    fmt_rational(local)
                } else {
                    format!("{summand}:{}", fmt_rational(local))
                }
            }
        }
    }

    /// The number in `[0,1]` an element stands for, when the algebra has a
    /// canonical placement in the unit interval: a single summand, or a
    /// bottomless summand stacked on `{0,1}` (standard Gödel/Product).
    pub fn real_value(&self, v: &TruthValue) -> Option<Rational> {
        let summands = self.summands();
        let canonical = self.is_standard_godel()
            || summands.len() == 1
            || (summands.len() == 2 && summands[0] == Summand::FiniteMv(1) && !summands[1].has_bottom());
        if !canonical {
            return None;
        }
        Some(match v {
            TruthValue::Top => one(),
            TruthValue::At { local, .. } => local.clone(),
        })
    }

    /// Elements in increasing order. Finite algebras only.
    pub fn elements(&self) -> Result<Vec<TruthValue>> {
        let sizes = self.require_finite("elements")?;
        let mut out = Vec::new();
        for (k, &m) in sizes.iter().enumerate() {
            for j in 0..m {
                out.push(TruthValue::at(k, Rational::new(j.into(), m.into())));
            }
        }
        out.push(TruthValue::Top);
        Ok(out)
    }

    pub fn table(&self) -> Result<ChainTable> {
        ChainTable::from_algebra(self)
    }

    /// Elements `e` with `e * e = e`.
    pub fn idempotents(&self) -> Result<Vec<TruthValue>> {
        let t = self.table()?;
        let els = self.elements()?;
        Ok(t.idempotents().into_iter().map(|i| els[i].clone()).collect())
    }

    /// `!!a = a` for every element.
    pub fn is_mv_chain(&self) -> Result<bool> {
        Ok(self.table()?.is_mv())
    }

    /// Every element idempotent.
    pub fn is_godel_chain(&self) -> Result<bool> {
        Ok(self.table()?.is_godel())
    }

    /// Sizes of the finite MV-chains this algebra splits into, recomputed
    /// from its operation table.
    pub fn decompose(&self) -> Result<Vec<u32>> {
        self.table()?.decompose()
    }

    /// Smallest subset containing `seed`, bottom and top, closed under the
    /// t-norm and residuum.
    pub fn subalgebra_generated(&self, seed: &[TruthValue]) -> Result<Vec<TruthValue>> {
        let els = self.elements()?;
        let mut idx = Vec::with_capacity(seed.len());
        for s in seed {
            self.check(s)?;
            idx.push(els.iter().position(|e| e == s).expect("member of a finite carrier"));
        }
        let t = self.table()?;
        Ok(t.subalgebra_generated(&idx).into_iter().map(|i| els[i].clone()).collect())
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::StandardGodel => write!(f, "GQ"),
            Repr::Sum(s) => {
                let parts: Vec<String> = s.iter().map(Summand::token).collect();
                write!(f, "{}", parts.join(" (+) "))
            }
        }
    }
}

impl FromStr for Algebra {
    type Err = Error;

    /// `MV[m]`, `MVQ`, `GQ`, `PQ`, `2`, `C`, `GHQ`, joined by `(+)`
    /// bottom to top.
    fn from_str(s: &str) -> Result<Algebra> {
        let parts: Vec<&str> = s.split("(+)").map(str::trim).collect();
        if parts.len() == 1 && parts[0] == "GQ" {
            return Ok(Algebra::standard_godel());
        }
        let mut summands = Vec::new();
        for p in parts {
            match p {
                "MVQ" => summands.push(Summand::RationalMv),
                "GQ" => summands.extend([Summand::FiniteMv(1), Summand::GodelHoop]),
                "PQ" => summands.extend([Summand::FiniteMv(1), Summand::Cancellative]),
                "2" => summands.push(Summand::FiniteMv(1)),
                "C" => summands.push(Summand::Cancellative),
                "GHQ" => summands.push(Summand::GodelHoop),
                _ => {
                    let m = p
                        .strip_prefix("MV[")
                        .and_then(|r| r.strip_suffix(']'))
                        .and_then(|m| m.trim().parse::<u32>().ok())
                        .ok_or_else(|| Error::Descriptor(format!("unknown summand `{p}`")))?;
                    if m == 0 {
                        return Err(Error::Descriptor("MV[m] needs m >= 1".into()));
                    }
                    summands.push(Summand::FiniteMv(m));
                }
            }
        }
        Algebra::ordinal_sum(summands)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn alg(s: &str) -> Algebra {
        s.parse().unwrap()
    }

    fn v(a: &Algebra, s: &str) -> TruthValue {
        a.parse_value(s).unwrap()
    }

    #[test]
    fn descriptors_round_trip() {
        for s in ["MV[3]", "MVQ", "GQ", "MV[1] (+) C", "MV[2] (+) MV[1] (+) GHQ", "MV[1] (+) C (+) C"] {
            assert_eq!(alg(s).to_string(), s);
        }
        assert_eq!(alg("PQ"), Algebra::standard_product());
        assert_eq!(alg("2 (+) 2"), Algebra::from_sizes(&[1, 1]).unwrap());
        assert!("C".parse::<Algebra>().is_err());
        assert!("GHQ (+) 2".parse::<Algebra>().is_err());
        assert!("MV[0]".parse::<Algebra>().is_err());
        assert!("MV[x]".parse::<Algebra>().is_err());
        assert!("".parse::<Algebra>().is_err());
    }

    #[test]
    fn tnorm_examples() {
        let mvq = Algebra::standard_mv();
        assert_eq!(mvq.tnorm(&v(&mvq, "7/10"), &v(&mvq, "1/2")).unwrap(), v(&mvq, "1/5"));
        let three = Algebra::from_sizes(&[1, 1]).unwrap();
        let e = TruthValue::at(1, zero());
        assert_eq!(three.tnorm(&e, &e).unwrap(), e);
        for a in three.elements().unwrap() {
            assert_eq!(three.tnorm(&TruthValue::Top, &a).unwrap(), a);
        }
    }

    #[test]
    fn residuum_examples() {
        let mvq = Algebra::standard_mv();
        assert_eq!(mvq.residuum(&v(&mvq, "7/10"), &v(&mvq, "1/2")).unwrap(), v(&mvq, "4/5"));
        let pq = Algebra::standard_product();
        assert_eq!(pq.residuum(&v(&pq, "2/3"), &v(&pq, "1/3")).unwrap(), v(&pq, "1/2"));
        let gq = Algebra::standard_godel();
        assert_eq!(gq.residuum(&v(&gq, "4/5"), &v(&gq, "3/10")).unwrap(), v(&gq, "3/10"));
        assert_eq!(gq.residuum(&v(&gq, "3/10"), &v(&gq, "4/5")).unwrap(), TruthValue::Top);
    }

    #[test]
    fn carrier_membership() {
        let t2 = Algebra::mv_chain(2);
        assert!(t2.tnorm(&TruthValue::at(0, rat(1, 3)), &TruthValue::Top).is_err());
        assert!(t2.parse_value("1/3").is_err());
        assert!(t2.parse_value("1:0").is_err());
        let pq = Algebra::standard_product();
        assert_eq!(v(&pq, "1/2"), TruthValue::at(1, rat(1, 2)));
        assert!(pq.parse_value("1:0").is_err());
        let sum = alg("2 (+) C (+) C");
        assert!(sum.parse_value("1/2").is_err());
        assert_eq!(v(&sum, "2:1/2"), TruthValue::at(2, rat(1, 2)));
        assert_eq!(v(&sum, "2:1"), TruthValue::Top);
    }

    #[test]
    fn value_formatting_round_trips() {
        for (a, s) in [("2 (+) C (+) C", "2:1/3"), ("PQ", "1/3"), ("MV[1] (+) MV[1]", "1:0"), ("MV[4]", "3/4")] {
            let a = alg(a);
            let x = v(&a, s);
            assert_eq!(a.format_value(&x), s);
            assert_eq!(a.parse_value(&a.format_value(&x)).unwrap(), x);
        }
    }

    #[test]
    fn ordinal_sum_cross_rows() {
        // 2 (+) C: 0 * c = 0, c -> 0 = 0, 0 -> c = 1
        let pq = Algebra::standard_product();
        let c = v(&pq, "1/2");
        let z = pq.bottom();
        assert_eq!(pq.tnorm(&c, &z).unwrap(), z);
        assert_eq!(pq.residuum(&c, &z).unwrap(), z);
        assert_eq!(pq.residuum(&z, &c).unwrap(), TruthValue::Top);
        // c -> c' in a higher summand of 2 (+) C (+) C
        let s = alg("2 (+) C (+) C");
        let low = v(&s, "1:1/2");
        let high = v(&s, "2:1/3");
        assert_eq!(s.residuum(&high, &low).unwrap(), low);
        assert_eq!(s.tnorm(&high, &low).unwrap(), low);
    }

    #[test]
    fn finite_structure_examples() {
        assert_eq!(Algebra::mv_chain(2).elements().unwrap().len(), 3);
        assert_eq!(Algebra::from_sizes(&[1, 1]).unwrap().elements().unwrap().len(), 3);
        assert_eq!(Algebra::from_sizes(&[2, 1]).unwrap().cardinality(), Some(4));

        assert_eq!(Algebra::mv_chain(2).idempotents().unwrap(), vec![TruthValue::at(0, zero()), TruthValue::Top]);
        assert_eq!(Algebra::from_sizes(&[1, 1]).unwrap().idempotents().unwrap().len(), 3);
        assert_eq!(Algebra::mv_chain(1).idempotents().unwrap().len(), 2);

        assert!(Algebra::mv_chain(4).is_mv_chain().unwrap());
        assert!(!Algebra::from_sizes(&[1, 1]).unwrap().is_mv_chain().unwrap());
        assert!(Algebra::mv_chain(1).is_mv_chain().unwrap());
        assert!(Algebra::from_sizes(&[1, 1]).unwrap().is_godel_chain().unwrap());
        assert!(!Algebra::mv_chain(2).is_godel_chain().unwrap());
        assert!(Algebra::mv_chain(1).is_godel_chain().unwrap());
    }

    #[test]
    fn subalgebra_examples() {
        let three = Algebra::from_sizes(&[1, 1]).unwrap();
        let e = TruthValue::at(1, zero());
        assert_eq!(three.subalgebra_generated(&[e]).unwrap().len(), 3);
        let t4 = Algebra::mv_chain(4);
        let half = t4.parse_value("2/4").unwrap();
        assert_eq!(
            t4.subalgebra_generated(std::slice::from_ref(&half)).unwrap(),
            vec![t4.bottom(), half, TruthValue::Top]
        );
        assert_eq!(Algebra::mv_chain(3).subalgebra_generated(&[]).unwrap().len(), 2);
        assert!(t4.subalgebra_generated(&[TruthValue::at(0, rat(1, 3))]).is_err());
    }

    #[test]
    fn infinite_algebras_reject_enumeration() {
        for a in [Algebra::standard_mv(), Algebra::standard_godel(), Algebra::standard_product()] {
            assert!(matches!(a.elements(), Err(Error::InfiniteAlgebra { .. })));
            assert!(matches!(a.idempotents(), Err(Error::InfiniteAlgebra { .. })));
            assert!(matches!(a.decompose(), Err(Error::InfiniteAlgebra { .. })));
        }
    }

    #[test]
    fn closedness_metadata() {
        assert!(Algebra::standard_product().is_closed_realization());
        assert!(Algebra::standard_godel().is_closed_realization());
        assert!(!alg("2 (+) C (+) C").is_closed_realization());
        assert!(!alg("MV[2] (+) C").is_closed_realization());
        assert!(alg("MV[2] (+) MV[3]").is_closed_realization());
    }
}
