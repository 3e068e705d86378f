use std::fmt;

use super::{instances, Rule, SystemId};
use crate::formula::{Sequent, SymbolMap};

/// A derivation: a rule label, the sequent it concludes, and its premises
/// left to right.
///
/// The label is kept as written so that proofs naming unknown rules can be
/// represented and rejected by the checker rather than by the parser.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProofTree {
    pub rule: String,
    pub conclusion: Sequent,
    pub premises: Vec<ProofTree>,
}

impl ProofTree {
    pub fn new(rule: Rule, conclusion: Sequent, premises: Vec<ProofTree>) -> ProofTree {
        ProofTree { rule: rule.name().to_string(), conclusion, premises }
    }

    pub fn leaf(rule: Rule, conclusion: Sequent) -> ProofTree {
        ProofTree::new(rule, conclusion, vec![])
    }

    pub fn rule_id(&self) -> Option<Rule> {
        self.rule.parse().ok()
    }

    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::node_count).sum::<usize>()
    }

    /// Height counting leaves, so a single axiom has height 1.
    pub fn height(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::height).max().unwrap_or(0)
    }

    pub fn cut_count(&self) -> usize {
        usize::from(self.rule == Rule::Cut.name())
            + self.premises.iter().map(ProofTree::cut_count).sum::<usize>()
    }

    pub fn is_cut_free(&self) -> bool {
        self.cut_count() == 0
    }

    /// Pre-order walk over all nodes.
    pub fn nodes(&self) -> Vec<&ProofTree> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(n) = stack.pop() {
            out.push(n);
            stack.extend(n.premises.iter().rev());
        }
        out
    }

    /// Node at a path of premise indices from the root.
    pub fn at(&self, path: &[usize]) -> Option<&ProofTree> {
        path.iter().try_fold(self, |node, &i| node.premises.get(i))
    }

    /// Applies a connective renaming to every sequent and relabels rules
    /// accordingly, so that a proof in one system becomes a proof of the
    /// renamed conclusion in the other.
    pub fn rename(&self, map: &SymbolMap) -> ProofTree {
        let rule = match self.rule_id() {
            Some(r) => r.rename(map).name().to_string(),
            None => self.rule.clone(),
        };
        ProofTree {
            rule,
            conclusion: map.apply_sequent(&self.conclusion),
            premises: self.premises.iter().map(|p| p.rename(map)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RejectReason {
    UnknownRule(String),
    WrongArity { rule: Rule, expected: usize, found: usize },
    /// No instantiation of the rule produces these premises.
    NoMatch(Rule),
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::UnknownRule(r) => write!(f, "unknown rule `{r}`"),
            RejectReason::WrongArity { rule, expected, found } => {
                write!(f, "`{rule}` takes {expected} premise(s), found {found}")
            }
            RejectReason::NoMatch(rule) => write!(f, "no instance of `{rule}` matches this step"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckReport {
    Accepted,
    Rejected {
        /// Premise indices from the root to the offending node.
        path: Vec<usize>,
        sequent: Sequent,
        reason: RejectReason,
    },
}

impl CheckReport {
    pub fn is_accepted(&self) -> bool {
        matches!(self, CheckReport::Accepted)
    }
}

/// Checks every node of `proof` against the rule table of `system`. The first
/// offending node in pre-order is reported.
pub fn check_proof(system: SystemId, proof: &ProofTree) -> CheckReport {
    let mut path = Vec::new();
    match check_node(system, proof, &mut path) {
        Ok(()) => CheckReport::Accepted,
        Err((sequent, reason)) => CheckReport::Rejected { path, sequent, reason },
    }
}

fn check_node(
    system: SystemId,
    node: &ProofTree,
    path: &mut Vec<usize>,
) -> Result<(), (Sequent, RejectReason)> {
    let reject = |reason| Err((node.conclusion.clone(), reason));
    let Some(rule) = node.rule_id() else {
        return reject(RejectReason::UnknownRule(node.rule.clone()));
    };
    if node.premises.len() != rule.arity() {
        return reject(RejectReason::WrongArity {
            rule,
            expected: rule.arity(),
            found: node.premises.len(),
        });
    }
    let premises: Vec<&Sequent> = node.premises.iter().map(|p| &p.conclusion).collect();
    let matched = if rule == Rule::Cut {
        is_cut_instance(premises[0], premises[1], &node.conclusion)
    } else {
        instances(system, rule, &node.conclusion)
            .iter()
            .any(|inst| inst.premises.iter().eq(premises.iter().copied()))
    };
    if !matched {
        return reject(RejectReason::NoMatch(rule));
    }
    for (i, p) in node.premises.iter().enumerate() {
        path.push(i);
        check_node(system, p, path)?;
        path.pop();
    }
    Ok(())
}

/// `G1 |- A` and `G2, A, G3 |- C` conclude `G2, G1, G3 |- C`.
fn is_cut_instance(left: &Sequent, right: &Sequent, conclusion: &Sequent) -> bool {
    let (Some(cut_formula), Some(_)) = (&left.succedent, &conclusion.succedent) else {
        return false;
    };
    if right.succedent != conclusion.succedent {
        return false;
    }
    let g1 = &left.antecedent;
    let ant = &conclusion.antecedent;
    if g1.len() > ant.len() || right.antecedent.len() != ant.len() - g1.len() + 1 {
        return false;
    }
    (0..=ant.len() - g1.len()).any(|start| {
        let end = start + g1.len();
        ant[start..end] == g1[..]
            && right.antecedent[..start] == ant[..start]
            && right.antecedent[start] == *cut_formula
            && right.antecedent[start + 1..] == ant[end..]
    })
}
