use blchain::mcnaughton::{eval_at_point, literal_to_pwl, pwl_zero_set, separate_points, ZeroSet};
use blchain::rational::{rat, Rational};
use blchain::semantics::{eval, Valuation};
use blchain::{parse_formula, Algebra, BasicLiteral, Formula, Step, Summand, TruthValue};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![Just(Formula::Bot), (1u32..=4).prop_map(Formula::Var)];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::conj(a, b)),
        ]
    })
}

const DESCRIPTORS: [&str; 7] =
    ["MVQ", "GQ", "PQ", "2 (+) C (+) C", "MV[2] (+) MVQ (+) GHQ", "MV[3] (+) C", "MVQ (+) MV[1] (+) MVQ"];

/// An element picked by (summand, numerator, denominator, top?) raw draws.
fn element(alg: &Algebra, k: usize, num: i64, den: i64, top: bool) -> TruthValue {
    if top {
        return TruthValue::Top;
    }
    if alg.is_standard_godel() {
        return TruthValue::at(0, rat(num % den, den));
    }
    let summands = alg.summands();
    let k = k % summands.len();
    let local = match &summands[k] {
        Summand::FiniteMv(m) => rat(num % i64::from(*m), i64::from(*m)),
        Summand::RationalMv => rat(num % den, den),
        Summand::GodelHoop | Summand::Cancellative => rat(num % (den - 1) + 1, den),
    };
    TruthValue::at(k, local)
}

fn algebra_and_elements() -> impl Strategy<Value = (Algebra, Vec<TruthValue>)> {
    let raw = (0usize..4, 0i64..1000, 2i64..40, prop::bool::weighted(0.1));
    (prop::sample::select(DESCRIPTORS.to_vec()), prop::collection::vec(raw, 3)).prop_map(|(d, raws)| {
        let alg: Algebra = d.parse().unwrap();
        let els = raws.into_iter().map(|(k, n, den, t)| element(&alg, k, n, den, t)).collect();
        (alg, els)
    })
}

fn literal() -> impl Strategy<Value = BasicLiteral> {
    let step = prop_oneof![(1u32..=5).prop_map(Step::Mult), (2u32..=5).prop_map(Step::Pow)];
    prop::collection::vec(step, 0..=4).prop_map(|s| BasicLiteral::new(1, s).unwrap())
}

fn unit_point(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((0i64..=60, 1i64..=60), dim).prop_map(|v| v.into_iter().map(|(n, d)| rat(n % (d + 1), d)).collect())
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(f in formula()) {
        prop_assert_eq!(parse_formula(&f.render()).unwrap(), f);
    }

    #[test]
    fn literal_notation_round_trips(l in literal()) {
        let norm = l.normalized();
        prop_assert_eq!(BasicLiteral::parse(&l.to_string()).unwrap(), norm.clone());
        prop_assert_eq!(literal_to_pwl(&norm), literal_to_pwl(&l));
    }

    #[test]
    fn infinite_algebras_are_bl_chains((alg, els) in algebra_and_elements()) {
        let (a, b, c) = (&els[0], &els[1], &els[2]);
        for x in &els {
            prop_assert!(alg.contains(x));
        }
        let t = |x: &TruthValue, y: &TruthValue| alg.tnorm(x, y).unwrap();
        let r = |x: &TruthValue, y: &TruthValue| alg.residuum(x, y).unwrap();
        prop_assert_eq!(t(a, &TruthValue::Top), a.clone());
        prop_assert_eq!(t(a, b), t(b, a));
        prop_assert_eq!(t(&t(a, b), c), t(a, &t(b, c)));
        prop_assert_eq!(t(a, b) <= *c, *a <= r(b, c));
        prop_assert_eq!(t(a, &r(a, b)), a.clone().min(b.clone()));
        prop_assert!(r(a, b).is_top() || r(b, a).is_top());
        prop_assert_eq!(r(a, b).is_top(), a <= b);
    }

    #[test]
    fn lattice_connectives_are_min_and_max((alg, els) in algebra_and_elements()) {
        let v = Valuation::new([(1, els[0].clone()), (2, els[1].clone())]).unwrap();
        let wedge = eval(&alg, &v, &parse_formula("X1 /\\ X2").unwrap()).unwrap();
        let vee = eval(&alg, &v, &parse_formula("X1 \\/ X2").unwrap()).unwrap();
        prop_assert_eq!(wedge, els[0].clone().min(els[1].clone()));
        prop_assert_eq!(vee, els[0].clone().max(els[1].clone()));
    }

    #[test]
    fn literals_are_monotone_and_hit_their_zero_set(l in literal(), x in unit_point(1)) {
        let f = literal_to_pwl(&l);
        prop_assert!(f.is_nondecreasing());
        prop_assert_eq!(f.eval(&rat(1, 1)).unwrap(), rat(1, 1));
        let y = eval_at_point(&l.expand(), &x).unwrap();
        prop_assert_eq!(&y, &f.eval(&x[0]).unwrap());
        match pwl_zero_set(&f).unwrap() {
            ZeroSet::Empty => prop_assert!(y.is_positive()),
            ZeroSet::Point0 => prop_assert_eq!(y.is_zero(), x[0].is_zero()),
            ZeroSet::Interval(t) => prop_assert_eq!(y.is_zero(), x[0] <= t),
        }
    }

    #[test]
    fn separation_contract(p in unit_point(3), q in unit_point(3)) {
        prop_assume!(p != q);
        let s = separate_points(&p, &q).unwrap();
        prop_assert!(eval_at_point(&s.formula, &p).unwrap().is_positive());
        prop_assert!(eval_at_point(&s.formula, &q).unwrap().is_zero());
        prop_assert_eq!(s.formula.free_variables().len(), 1);
        prop_assert!(s.raw_steps <= s.step_bound);
    }

    #[test]
    fn valuation_literals_round_trip((alg, els) in algebra_and_elements()) {
        let v = Valuation::new(els.into_iter().enumerate().map(|(i, x)| (i as u32 + 1, x))).unwrap();
        prop_assert_eq!(Valuation::parse(&alg, &v.format(&alg)).unwrap(), v);
    }
}
