//! Proof translations between the two calculi.
//!
//! [`embed_to_fl`] is a relabeling: every `FlPrime` rule is an `Fl` rule with
//! the extra contexts left empty, once implications and negations are
//! swapped.
//!
//! [`translate_to_flprime`] goes the other way by induction on the proof.
//! Steps that `FlPrime` can take directly are copied. A left step with a
//! nonempty context `G` in front of its principal formula is rebuilt as
//!
//! ```text
//!   (principal), rest |- curry(G, C)        G, curry(G, C) |- C
//!   ------------------------------------------------------------ cut
//!                   G, (principal), rest |- C
//! ```
//!
//! where the left premise abstracts `G` out of the translated premise proofs
//! and the right premise is the [`context_gadget`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::calculus::{check_proof, instances, CheckReport, ProofTree, Rule, SystemId};
use crate::formula::{Formula, Sequent, SymbolMap};

#[derive(Debug, Error)]
pub enum TranslateError {
    #[error("input proof is not a valid {system} proof: {report:?}")]
    InputRejected { system: SystemId, report: CheckReport },
    #[error("translated proof is not a valid flp proof: {report:?}")]
    OutputRejected { output: ProofTree, report: CheckReport },
    #[error("a context gadget needs a nonempty context")]
    EmptyContext,
}

/// How a displaced context is folded into the cut formula.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// `((a1 * a2) * ... * an) -> C`, one cut per displaced context.
    #[default]
    Tensor,
    /// `an -> ... -> a2 -> a1 -> C`, whose gadget needs `n - 1` further cuts.
    Curried,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Tensor => "tensor",
            Strategy::Curried => "curried",
        })
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tensor" => Ok(Strategy::Tensor),
            "curried" => Ok(Strategy::Curried),
            _ => Err(format!("unknown strategy `{s}` (expected `tensor` or `curried`)")),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TranslateOptions {
    pub strategy: Strategy,
    /// Keep connectives and rule names as they are instead of swapping
    /// implications and negations. The result is usually not an `FlPrime`
    /// proof; this exists to exhibit exactly that.
    pub literal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationTrace {
    pub output: ProofTree,
    /// Cuts created by the translation, not counting cuts copied from the input.
    pub cuts_introduced: usize,
    /// Path of each input node with the case used to translate it, pre-order.
    pub cases_applied: Vec<(Vec<usize>, String)>,
}

impl TranslationTrace {
    /// Input nodes that needed the cut template.
    pub fn templated_nodes(&self) -> usize {
        self.cases_applied.iter().filter(|(_, c)| c.ends_with("/curry")).count()
    }
}

/// Left-nested product of a nonempty context.
fn product(ctx: &[Formula]) -> Formula {
    let mut it = ctx.iter().cloned();
    let first = it.next().expect("nonempty context");
    it.fold(first, Formula::tensor)
}

/// `[] -> C`, `[a1] -> a1 -> C`, `[a1, ..., an] -> ((a1 * a2) * ... * an) -> C`.
///
/// The product nests to the left: `FlPrime` only decomposes a leftmost
/// tensor, so `(a1 * a2) * a3, ...` can be taken apart into `a1, a2, a3, ...`
/// without cut while `a1 * (a2 * a3), ...` cannot.
pub fn curry_context(ctx: &[Formula], goal: &Formula) -> Formula {
    if ctx.is_empty() {
        goal.clone()
    } else {
        Formula::imp(product(ctx), goal.clone())
    }
}

/// `[a1, ..., an] -> an -> ... -> a2 -> a1 -> C`.
pub fn curry_context_curried(ctx: &[Formula], goal: &Formula) -> Formula {
    ctx.iter().fold(goal.clone(), |acc, a| Formula::imp(a.clone(), acc))
}

fn id(f: &Formula) -> ProofTree {
    ProofTree::leaf(Rule::Id, Sequent::proves(vec![f.clone()], f.clone()))
}

fn product_proof(ctx: &[Formula]) -> ProofTree {
    match ctx {
        [single] => id(single),
        [init @ .., last] => ProofTree::new(
            Rule::TensR,
            Sequent::proves(ctx.to_vec(), product(ctx)),
            vec![product_proof(init), id(last)],
        ),
        [] => unreachable!("empty product"),
    }
}

/// Cut-free `FlPrime` proof of `ctx, curry_context(ctx, goal) |- goal`.
pub fn context_gadget(ctx: &[Formula], goal: &Formula) -> Result<ProofTree, TranslateError> {
    if ctx.is_empty() {
        return Err(TranslateError::EmptyContext);
    }
    let mut ant = ctx.to_vec();
    ant.push(curry_context(ctx, goal));
    Ok(ProofTree::new(
        Rule::ImpL,
        Sequent::proves(ant, goal.clone()),
        vec![product_proof(ctx), id(goal)],
    ))
}

/// `FlPrime` proof of `ctx, curry_context_curried(ctx, goal) |- goal`,
/// peeling one hypothesis per cut.
pub fn curried_gadget(ctx: &[Formula], goal: &Formula) -> Result<ProofTree, TranslateError> {
    let Some((last, init)) = ctx.split_last() else {
        return Err(TranslateError::EmptyContext);
    };
    let full = curry_context_curried(ctx, goal);
    let mut ant = ctx.to_vec();
    ant.push(full.clone());
    let conclusion = Sequent::proves(ant, goal.clone());
    let inner = curry_context_curried(init, goal);
    let peel = ProofTree::new(
        Rule::ImpL,
        Sequent::proves(vec![last.clone(), full], inner.clone()),
        vec![id(last), id(&inner)],
    );
    if init.is_empty() {
        return Ok(ProofTree { conclusion, ..peel });
    }
    Ok(ProofTree::new(Rule::Cut, conclusion, vec![peel, curried_gadget(init, goal)?]))
}

/// `FlPrime` proof to `Fl` proof of the swapped conclusion.
pub fn embed_to_fl(proof: &ProofTree) -> Result<ProofTree, TranslateError> {
    let report = check_proof(SystemId::FlPrime, proof);
    if !report.is_accepted() {
        return Err(TranslateError::InputRejected { system: SystemId::FlPrime, report });
    }
    let out = proof.rename(&SymbolMap::SIGMA);
    debug_assert!(check_proof(SystemId::Fl, &out).is_accepted());
    Ok(out)
}

struct Translator {
    map: SymbolMap,
    strategy: Strategy,
    cuts: usize,
    cases: Vec<(Vec<usize>, String)>,
}

impl Translator {
    fn curry(&self, ctx: &[Formula], goal: &Formula) -> Formula {
        match self.strategy {
            Strategy::Tensor => curry_context(ctx, goal),
            Strategy::Curried => curry_context_curried(ctx, goal),
        }
    }

    fn gadget(&self, ctx: &[Formula], goal: &Formula) -> ProofTree {
        match self.strategy {
            Strategy::Tensor => context_gadget(ctx, goal),
            Strategy::Curried => curried_gadget(ctx, goal),
        }
        .expect("templated contexts are nonempty")
    }

    /// Turns a proof of `G, rest |- C` with `|G| = n` into a proof of
    /// `rest |- curry(G, C)`.
    fn abstract_context(&self, proof: ProofTree, n: usize) -> ProofTree {
        let goal = proof.conclusion.succedent.clone().expect("left rules conclude a formula");
        let mut cur = proof;
        match self.strategy {
            Strategy::Tensor => {
                for _ in 1..n {
                    let ant = &cur.conclusion.antecedent;
                    let mut folded = vec![Formula::tensor(ant[0].clone(), ant[1].clone())];
                    folded.extend_from_slice(&ant[2..]);
                    cur = ProofTree::new(Rule::TensL, Sequent::proves(folded, goal.clone()), vec![cur]);
                }
                let ant = &cur.conclusion.antecedent;
                let abstracted = Sequent::proves(ant[1..].to_vec(), Formula::imp(ant[0].clone(), goal));
                ProofTree::new(Rule::ImpR, abstracted, vec![cur])
            }
            Strategy::Curried => {
                let mut acc = goal;
                for _ in 0..n {
                    let ant = &cur.conclusion.antecedent;
                    acc = Formula::imp(ant[0].clone(), acc);
                    let abstracted = Sequent::proves(ant[1..].to_vec(), acc.clone());
                    cur = ProofTree::new(Rule::ImpR, abstracted, vec![cur]);
                }
                cur
            }
        }
    }

    fn node(&mut self, p: &ProofTree, path: &mut Vec<usize>) -> ProofTree {
        let rule = p.rule_id().expect("input was checked");
        let case_index = self.cases.len();
        self.cases.push((path.clone(), String::new()));
        let mut premises = Vec::with_capacity(p.premises.len());
        for (i, q) in p.premises.iter().enumerate() {
            path.push(i);
            premises.push(self.node(q, path));
            path.pop();
        }
        let conclusion = self.map.apply_sequent(&p.conclusion);
        if rule == Rule::Cut {
            self.cases[case_index].1 = "cut".into();
            return ProofTree::new(Rule::Cut, conclusion, premises);
        }
        let inst = instances(SystemId::Fl, rule, &p.conclusion)
            .into_iter()
            .find(|inst| inst.premises.iter().eq(p.premises.iter().map(|q| &q.conclusion)))
            .expect("input was checked");
        let target = rule.rename(&self.map);
        let n = inst.forbidden_prefix;
        if n == 0 {
            self.cases[case_index].1 = "direct".into();
            return ProofTree::new(target, conclusion, premises);
        }

        self.cases[case_index].1 = format!("{rule}/curry");
        let ctx = &conclusion.antecedent[..n];
        let goal = conclusion.succedent.clone().expect("left rules conclude a formula");
        let cut_formula = self.curry(ctx, &goal);
        let inner_premises = match rule {
            Rule::BotL => vec![],
            Rule::ImpL | Rule::CoimpL => {
                let mut it = premises.into_iter();
                let argument = it.next().unwrap();
                let body = it.next().unwrap();
                vec![argument, self.abstract_context(body, n)]
            }
            _ => premises.into_iter().map(|q| self.abstract_context(q, n)).collect(),
        };
        let inner = ProofTree::new(
            target,
            Sequent::proves(conclusion.antecedent[n..].to_vec(), cut_formula),
            inner_premises,
        );
        let gadget = self.gadget(ctx, &goal);
        self.cuts += 1 + gadget.cut_count();
        ProofTree::new(Rule::Cut, conclusion, vec![inner, gadget])
    }
}

/// `Fl` proof to `FlPrime` proof of the swapped conclusion (or of the same
/// conclusion in literal mode).
pub fn translate_to_flprime(
    proof: &ProofTree,
    options: TranslateOptions,
) -> Result<TranslationTrace, TranslateError> {
    let report = check_proof(SystemId::Fl, proof);
    if !report.is_accepted() {
        return Err(TranslateError::InputRejected { system: SystemId::Fl, report });
    }
    let mut t = Translator {
        map: if options.literal { SymbolMap::IDENTITY } else { SymbolMap::SIGMA },
        strategy: options.strategy,
        cuts: 0,
        cases: Vec::new(),
    };
    let output = t.node(proof, &mut Vec::new());
    let report = check_proof(SystemId::FlPrime, &output);
    if !report.is_accepted() {
        return Err(TranslateError::OutputRejected { output, report });
    }
    Ok(TranslationTrace { output, cuts_introduced: t.cuts, cases_applied: t.cases })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::decide_cut_free;
    use crate::syntax::{parse_formula, parse_proof, parse_sequent};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn atoms(names: &[&str]) -> Vec<Formula> {
        names.iter().map(|n| Formula::atom(n)).collect()
    }

    #[test]
    fn curry_forms() {
        assert_eq!(curry_context(&atoms(&["a1", "a2"]), &f("C")), f("a1 * a2 -> C"));
        assert_eq!(curry_context(&[], &f("C")), f("C"));
        assert_eq!(curry_context(&atoms(&["a1"]), &f("C")), f("a1 -> C"));
        assert_eq!(curry_context(&atoms(&["a1", "a2", "a3"]), &f("C")), f("(a1 * a2) * a3 -> C"));
        assert_eq!(curry_context_curried(&atoms(&["a1", "a2"]), &f("C")), f("a2 -> a1 -> C"));
    }

    #[test]
    fn gadgets_check() {
        let g = context_gadget(&atoms(&["a1", "a2"]), &f("C")).unwrap();
        assert_eq!(g.conclusion, parse_sequent("a1, a2, a1 * a2 -> C |- C").unwrap());
        assert_eq!(g.rule, "impL");
        assert_eq!(g.premises[0].rule, "tensR");
        assert!(check_proof(SystemId::FlPrime, &g).is_accepted());
        assert!(g.is_cut_free());

        let g1 = context_gadget(&atoms(&["a1"]), &f("C")).unwrap();
        assert_eq!(g1.conclusion, parse_sequent("a1, a1 -> C |- C").unwrap());
        assert_eq!(g1.node_count(), 3);
        assert!(check_proof(SystemId::FlPrime, &g1).is_accepted());

        let g3 = context_gadget(&atoms(&["a1", "a2", "a3"]), &f("C")).unwrap();
        assert_eq!(g3.conclusion, parse_sequent("a1, a2, a3, (a1 * a2) * a3 -> C |- C").unwrap());
        assert!(check_proof(SystemId::FlPrime, &g3).is_accepted());

        assert!(matches!(context_gadget(&[], &f("C")), Err(TranslateError::EmptyContext)));
        assert!(matches!(curried_gadget(&[], &f("C")), Err(TranslateError::EmptyContext)));
    }

    #[test]
    fn curried_gadgets_check() {
        for n in 1..=4 {
            let ctx: Vec<Formula> = (1..=n).map(|i| Formula::atom(&format!("a{i}"))).collect();
            let g = curried_gadget(&ctx, &f("C")).unwrap();
            assert!(check_proof(SystemId::FlPrime, &g).is_accepted(), "n = {n}");
            assert_eq!(g.cut_count(), n - 1);
        }
    }

    #[test]
    fn embedding_relabels() {
        // `D |- A` is not an axiom
        let p = parse_proof("impL : D, A -> B |- B\n  id : D |- A\n  id : B |- B\n").unwrap();
        assert!(matches!(embed_to_fl(&p), Err(TranslateError::InputRejected { .. })));

        let p = parse_proof("impL : A, A -> B |- B\n  id : A |- A\n  id : B |- B\n").unwrap();
        let e = embed_to_fl(&p).unwrap();
        assert_eq!(e.rule, "coimpL");
        assert_eq!(e.conclusion, parse_sequent("A, A <- B |- B").unwrap());
        assert!(check_proof(SystemId::Fl, &e).is_accepted());
    }

    #[test]
    fn translating_tensl_with_displaced_context() {
        // a1, a2, A * B, D |- C  with  C = a1 * a2 * A * B * D
        let goal = parse_sequent("a1, a2, A * B, D |- a1 * a2 * A * B * D").unwrap();
        let p = decide_cut_free(SystemId::Fl, &goal).witness().unwrap().clone();
        assert_eq!(p.rule, "tensL");
        for strategy in [Strategy::Tensor, Strategy::Curried] {
            let t = translate_to_flprime(&p, TranslateOptions { strategy, literal: false }).unwrap();
            assert_eq!(t.output.conclusion, goal);
            assert!(check_proof(SystemId::FlPrime, &t.output).is_accepted());
            assert_eq!(t.templated_nodes(), 1);
        }
        let t = translate_to_flprime(&p, TranslateOptions::default()).unwrap();
        assert_eq!(t.cuts_introduced, 1);
        assert_eq!(t.output.premises[1], context_gadget(&atoms(&["a1", "a2"]), &goal.succedent.unwrap()).unwrap());
    }

    #[test]
    fn literal_mode_exposes_the_mismatch() {
        let p = decide_cut_free(SystemId::Fl, &parse_sequent("A -> B, A |- B").unwrap())
            .witness()
            .unwrap()
            .clone();
        let literal = translate_to_flprime(&p, TranslateOptions { literal: true, ..Default::default() });
        assert!(matches!(literal, Err(TranslateError::OutputRejected { .. })));
        let twisted = translate_to_flprime(&p, TranslateOptions::default()).unwrap();
        assert_eq!(twisted.output.conclusion, parse_sequent("A <- B, A |- B").unwrap());
        assert_eq!(twisted.cuts_introduced, 0);
    }
}
