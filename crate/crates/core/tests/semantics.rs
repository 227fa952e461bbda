use blchain::algebra::decompose_table;
use blchain::rational::rat;
use blchain::semantics::{are_equivalent, enumerate_formulas, eval, is_tautology, Connectives, Valuation};
use blchain::{enumerate_finite_chains, parse_formula, Algebra, BasicLiteral, Formula, Step, TruthValue};

fn f(s: &str) -> Formula {
    parse_formula(s).unwrap()
}

fn three() -> Algebra {
    "MV[1] (+) MV[1]".parse().unwrap()
}

#[test]
fn operation_examples() {
    let mvq = Algebra::standard_mv();
    let (a, b) = (TruthValue::at(0, rat(7, 10)), TruthValue::at(0, rat(1, 2)));
    assert_eq!(mvq.tnorm(&a, &b).unwrap(), TruthValue::at(0, rat(1, 5)));
    assert_eq!(mvq.residuum(&a, &b).unwrap(), TruthValue::at(0, rat(4, 5)));

    let e = TruthValue::at(1, rat(0, 1));
    assert_eq!(three().tnorm(&e, &e).unwrap(), e);
    assert_eq!(three().tnorm(&TruthValue::Top, &e).unwrap(), e);

    let pq = Algebra::standard_product();
    let (x, y) = (pq.embed(&rat(2, 3)).unwrap(), pq.embed(&rat(1, 3)).unwrap());
    assert_eq!(pq.real_value(&pq.residuum(&x, &y).unwrap()), Some(rat(1, 2)));

    let gq = Algebra::standard_godel();
    let (x, y) = (gq.embed(&rat(4, 5)).unwrap(), gq.embed(&rat(3, 10)).unwrap());
    assert_eq!(gq.real_value(&gq.residuum(&x, &y).unwrap()), Some(rat(3, 10)));
}

#[test]
fn finite_structure_examples() {
    let t2 = Algebra::mv_chain(2);
    assert_eq!(t2.elements().unwrap().len(), 3);
    assert_eq!(three().elements().unwrap().len(), 3);
    assert_eq!(Algebra::from_sizes(&[2, 1]).unwrap().elements().unwrap().len(), 4);
    assert_eq!(t2.idempotents().unwrap(), vec![TruthValue::at(0, rat(0, 1)), TruthValue::Top]);
    assert_eq!(three().idempotents().unwrap().len(), 3);
    assert!(Algebra::mv_chain(4).is_mv_chain().unwrap());
    assert!(!three().is_mv_chain().unwrap());
    assert!(three().is_godel_chain().unwrap());
    assert!(!t2.is_godel_chain().unwrap());
    assert_eq!(t2.decompose().unwrap(), vec![2]);
    assert_eq!(three().decompose().unwrap(), vec![1, 1]);

    // MV[2] (+) MV[1] as a raw product table: 0 < 1/2 < e < 1
    let rows = vec![vec![0, 0, 0, 0], vec![0, 0, 1, 1], vec![0, 1, 2, 2], vec![0, 1, 2, 3]];
    assert_eq!(decompose_table(&rows).unwrap(), vec![2, 1]);

    assert_eq!(enumerate_finite_chains(2).unwrap(), vec![Algebra::mv_chain(1)]);
    assert_eq!(enumerate_finite_chains(3).unwrap(), vec![Algebra::mv_chain(2), three()]);
    assert_eq!(enumerate_finite_chains(5).unwrap().len(), 8);

    let e = TruthValue::at(1, rat(0, 1));
    assert_eq!(three().subalgebra_generated(&[e]).unwrap().len(), 3);
    let t4 = Algebra::mv_chain(4);
    let half = TruthValue::at(0, rat(2, 4));
    assert_eq!(
        t4.subalgebra_generated(std::slice::from_ref(&half)).unwrap(),
        vec![TruthValue::at(0, rat(0, 1)), half, TruthValue::Top]
    );
    assert_eq!(t4.subalgebra_generated(&[]).unwrap().len(), 2);
}

#[test]
fn literal_expansion_examples() {
    assert_eq!(BasicLiteral::bare(1).expand(), Formula::var(1));
    let x = Formula::var(1);
    assert_eq!(BasicLiteral::new(1, vec![Step::Pow(2)]).unwrap().expand(), Formula::conj(x.clone(), x.clone()));
    let nx = Formula::imp(x.clone(), Formula::Bot);
    let two_x = Formula::imp(Formula::conj(nx.clone(), nx), Formula::Bot);
    assert_eq!(
        BasicLiteral::new(1, vec![Step::Mult(2), Step::Pow(2)]).unwrap().expand(),
        Formula::conj(two_x.clone(), two_x)
    );
    let l = BasicLiteral::new(2, vec![Step::Mult(4), Step::Pow(2)]).unwrap();
    assert_eq!(l.expand().free_variables().into_iter().collect::<Vec<_>>(), vec![2]);
    assert_eq!(l.to_string(), "(4,2)X2");
}

#[test]
fn excluded_middle_fails_off_the_boolean_values() {
    for alg in (3..=5).flat_map(|n| enumerate_finite_chains(n).unwrap()) {
        for a in alg.elements().unwrap() {
            if a.is_bottom() || a.is_top() {
                continue;
            }
            let v = Valuation::new([(1, a)]).unwrap();
            assert!(!eval(&alg, &v, &f("X1 \\/ !X1")).unwrap().is_top());
        }
    }
}

/// Equivalence, validity of the biconditional, and validity of both
/// implications coincide on every pair of depth-1 formulas.
#[test]
fn equivalence_agrees_with_biconditional() {
    let fs = enumerate_formulas(&[1, 2], 1, Connectives::default(), None).unwrap();
    for alg in (2..=4).flat_map(|n| enumerate_finite_chains(n).unwrap()) {
        for a in &fs {
            for b in &fs {
                let eq = are_equivalent(&alg, a, b, &[1, 2]).unwrap().holds;
                let iff = is_tautology(&alg, &Formula::iff(a.clone(), b.clone()), &[1, 2]).unwrap().holds;
                let both = is_tautology(&alg, &Formula::imp(a.clone(), b.clone()), &[1, 2]).unwrap().holds
                    && is_tautology(&alg, &Formula::imp(b.clone(), a.clone()), &[1, 2]).unwrap().holds;
                assert_eq!(eq, iff, "{alg}: {a} vs {b}");
                assert_eq!(eq, both, "{alg}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn classical_chain_validates_tarski_and_lukasiewicz_axioms() {
    let two = Algebra::mv_chain(1);
    for s in ["!!X1 -> X1", "X1 -> X1 & X1", "X1 \\/ !X1", "(X1 -> X2) -> (X2 -> X3) -> X1 -> X3"] {
        assert!(is_tautology(&two, &f(s), &[1, 2, 3]).unwrap().holds, "{s}");
    }
}
