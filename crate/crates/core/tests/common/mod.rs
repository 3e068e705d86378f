#![allow(dead_code)]

pub mod oracle;

use std::path::PathBuf;

use lambek_core::{parse_proof, premise_candidates, Formula, ProofTree, Rule, Sequent, SymbolMap, SystemId};
use proptest::prelude::*;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn fixture(name: &str) -> ProofTree {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/mutations").join(name);
    parse_proof(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

pub fn corpus_proof(id: &str) -> ProofTree {
    let path = corpus_dir().join(format!("{id}.proof"));
    parse_proof(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

pub fn leaf() -> impl Strategy<Value = Formula> {
    prop_oneof![
        4 => prop::sample::select(vec!["A", "B", "C", "D", "x_1", "p'"]).prop_map(Formula::atom),
        1 => Just(Formula::one()),
        1 => Just(Formula::zero()),
        1 => Just(Formula::top()),
        1 => Just(Formula::bot()),
    ]
}

/// Formulas of depth at most `depth` over a handful of atoms.
pub fn formula(depth: u32) -> BoxedStrategy<Formula> {
    leaf().prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::neg),
            inner.clone().prop_map(Formula::coneg),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::coimp(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::tensor(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::with(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::plus(a, b)),
        ]
    })
    .boxed()
}

pub fn sequent_of(f: impl Strategy<Value = Formula> + Clone) -> impl Strategy<Value = Sequent> {
    (prop::collection::vec(f.clone(), 0..4), prop::option::weighted(0.8, f))
        .prop_map(|(ant, succ)| Sequent::new(ant, succ))
}

pub fn sequent(depth: u32) -> BoxedStrategy<Sequent> {
    sequent_of(formula(depth)).boxed()
}

/// Small sequents over two atoms, the kind whose cut-free search is cheap
/// and often succeeds.
pub fn small_sequent() -> impl Strategy<Value = Sequent> {
    let atom = prop_oneof![
        3 => prop::sample::select(vec!["A", "B"]).prop_map(Formula::atom),
        1 => prop::sample::select(vec![Formula::one(), Formula::zero(), Formula::top(), Formula::bot()]),
    ];
    let f = atom.prop_recursive(2, 8, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::neg),
            inner.clone().prop_map(Formula::coneg),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::coimp(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::tensor(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::with(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::plus(a, b)),
        ]
    });
    (prop::collection::vec(f.clone(), 0..3), prop::option::weighted(0.85, f))
        .prop_map(|(ant, succ)| Sequent::new(ant, succ))
}

/// Arbitrary trees with rule names from the table; not necessarily valid.
pub fn proof_tree() -> impl Strategy<Value = ProofTree> {
    let node = (prop::sample::select(Rule::ALL.to_vec()), sequent(3));
    node.clone()
        .prop_map(|(r, s)| ProofTree::leaf(r, s))
        .prop_recursive(4, 24, 3, move |inner| {
            (node.clone(), prop::collection::vec(inner, 1..3))
                .prop_map(|((r, s), ps)| ProofTree::new(r, s, ps))
        })
}

pub fn system() -> impl Strategy<Value = SystemId> {
    prop::sample::select(SystemId::ALL.to_vec())
}

/// Whether the node at the root of an `Fl` proof needs a displaced context
/// to be an `FlPrime` step once connectives are swapped.
pub fn needs_template(node: &ProofTree) -> bool {
    let rule = node.rule_id().expect("known rule");
    if rule == Rule::Cut {
        return false;
    }
    let conclusion = SymbolMap::SIGMA.apply_sequent(&node.conclusion);
    let premises: Vec<Sequent> = node.premises.iter().map(|p| SymbolMap::SIGMA.apply_sequent(&p.conclusion)).collect();
    let candidates = premise_candidates(SystemId::FlPrime, rule.sigma().name(), &conclusion).unwrap();
    !candidates.contains(&premises)
}
