//! Backward proof search.
//!
//! Without cut every premise of every rule is strictly smaller than its
//! conclusion (see [`Sequent::size`]), so exhaustive backward search
//! terminates and decides derivability. With cut the premises are no longer
//! smaller and the search is bounded by proof height instead.

use std::collections::HashMap;

use thiserror::Error;

use crate::calculus::{check_proof, instances, rule_schemas, ProofTree, Rule, RuleSchema, SystemId};
use crate::formula::{Formula, Sequent, SymbolMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Provable(ProofTree),
    Unprovable,
    /// The height bound cut off at least one open branch.
    ResourceExceeded(String),
}

impl SearchOutcome {
    pub fn is_provable(&self) -> bool {
        matches!(self, SearchOutcome::Provable(_))
    }

    pub fn witness(&self) -> Option<&ProofTree> {
        match self {
            SearchOutcome::Provable(p) => Some(p),
            _ => None,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("cut budget depth must be at least 1")]
    ZeroDepth,
}

/// Cut formulas the bounded search may use, and the maximum proof height
/// (leaves included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutBudget {
    pool: Vec<Formula>,
    depth: usize,
}

impl CutBudget {
    pub fn new(pool: Vec<Formula>, depth: usize) -> Result<CutBudget, SearchError> {
        if depth == 0 {
            return Err(SearchError::ZeroDepth);
        }
        Ok(CutBudget { pool, depth })
    }

    pub fn pool(&self) -> &[Formula] {
        &self.pool
    }

    pub fn depth(&self) -> usize {
        self.depth
    }
}

#[derive(Clone, Copy, Debug)]
enum Status {
    /// Closed by the given rule, using its n-th instance.
    Proved(Rule, usize),
    Failed,
}

/// Cut-free decision procedure for one system.
///
/// Results are memoized per sequent and the memo persists across calls, so a
/// single value can answer many queries cheaply. The witness for a sequent
/// does not depend on what was asked before.
pub struct CutFreeSearch {
    system: SystemId,
    table: Vec<RuleSchema>,
    memo: HashMap<Sequent, Status>,
}

impl CutFreeSearch {
    pub fn new(system: SystemId) -> CutFreeSearch {
        let table = rule_schemas(system).into_iter().filter(|s| s.rule != Rule::Cut).collect();
        CutFreeSearch { system, table, memo: HashMap::new() }
    }

    pub fn system(&self) -> SystemId {
        self.system
    }

    pub fn is_provable(&mut self, goal: &Sequent) -> bool {
        matches!(self.status(goal), Status::Proved(..))
    }

    /// First proof in search order, if any.
    pub fn prove(&mut self, goal: &Sequent) -> Option<ProofTree> {
        if self.is_provable(goal) {
            Some(self.rebuild(goal))
        } else {
            None
        }
    }

    fn status(&mut self, goal: &Sequent) -> Status {
        if let Some(&s) = self.memo.get(goal) {
            return s;
        }
        let mut result = Status::Failed;
        'rules: for i in 0..self.table.len() {
            let schema = self.table[i];
            for (k, inst) in schema.instances(goal).iter().enumerate() {
                if inst.premises.iter().all(|p| self.is_provable(p)) {
                    result = Status::Proved(schema.rule, k);
                    break 'rules;
                }
            }
        }
        self.memo.insert(goal.clone(), result);
        result
    }

    fn rebuild(&mut self, goal: &Sequent) -> ProofTree {
        let Status::Proved(rule, k) = self.status(goal) else {
            unreachable!("rebuild called on an unprovable sequent");
        };
        let inst = instances(self.system, rule, goal).swap_remove(k);
        let premises = inst.premises.iter().map(|p| self.rebuild(p)).collect();
        ProofTree::new(rule, goal.clone(), premises)
    }
}

/// Decides cut-free derivability. Never returns `ResourceExceeded`.
pub fn decide_cut_free(system: SystemId, goal: &Sequent) -> SearchOutcome {
    match CutFreeSearch::new(system).prove(goal) {
        Some(p) => {
            debug_assert!(check_proof(system, &p).is_accepted());
            SearchOutcome::Provable(p)
        }
        None => SearchOutcome::Unprovable,
    }
}

#[derive(Clone, Debug)]
enum Attempt {
    Found(ProofTree),
    Failed { pruned: bool },
}

/// Height-bounded search that may also apply cut with formulas from a pool.
///
/// Before expanding a subgoal the search asks whether it is derivable at all:
/// `Fl` with cut derives exactly what it derives cut-free, and `FlPrime` with
/// cut derives a sequent exactly when `Fl` derives its connective-swapped
/// image. A subgoal failing that test is abandoned without counting as
/// pruned, which is what lets this mode report `Unprovable`.
struct CutSearch<'a> {
    system: SystemId,
    table: Vec<RuleSchema>,
    pool: &'a [Formula],
    reference: CutFreeSearch,
    memo: HashMap<(Sequent, usize), Attempt>,
}

impl CutSearch<'_> {
    fn derivable_at_all(&mut self, goal: &Sequent) -> bool {
        match self.system {
            SystemId::Fl => self.reference.is_provable(goal),
            SystemId::FlPrime => self.reference.is_provable(&SymbolMap::SIGMA.apply_sequent(goal)),
        }
    }

    fn prove(&mut self, goal: &Sequent, depth: usize) -> Attempt {
        if !self.derivable_at_all(goal) {
            return Attempt::Failed { pruned: false };
        }
        if depth == 0 {
            return Attempt::Failed { pruned: true };
        }
        let key = (goal.clone(), depth);
        if let Some(a) = self.memo.get(&key) {
            return a.clone();
        }
        let result = self.expand(goal, depth);
        self.memo.insert(key, result.clone());
        result
    }

    fn try_premises(&mut self, premises: &[Sequent], depth: usize, pruned: &mut bool) -> Option<Vec<ProofTree>> {
        let mut proofs = Vec::with_capacity(premises.len());
        for p in premises {
            match self.prove(p, depth - 1) {
                Attempt::Found(t) => proofs.push(t),
                Attempt::Failed { pruned: pr } => {
                    *pruned |= pr;
                    return None;
                }
            }
        }
        Some(proofs)
    }

    fn expand(&mut self, goal: &Sequent, depth: usize) -> Attempt {
        let mut pruned = false;
        for i in 0..self.table.len() {
            let schema = self.table[i];
            for inst in schema.instances(goal) {
                if let Some(proofs) = self.try_premises(&inst.premises, depth, &mut pruned) {
                    return Attempt::Found(ProofTree::new(schema.rule, goal.clone(), proofs));
                }
            }
        }
        let Some(succedent) = &goal.succedent else {
            return Attempt::Failed { pruned };
        };
        let ant = &goal.antecedent;
        for x in self.pool.iter() {
            for start in 0..=ant.len() {
                for end in start..=ant.len() {
                    let left = Sequent::proves(ant[start..end].to_vec(), x.clone());
                    let mut right_ant = ant[..start].to_vec();
                    right_ant.push(x.clone());
                    right_ant.extend_from_slice(&ant[end..]);
                    let right = Sequent::proves(right_ant, succedent.clone());
                    if let Some(proofs) = self.try_premises(&[left, right], depth, &mut pruned) {
                        return Attempt::Found(ProofTree::new(Rule::Cut, goal.clone(), proofs));
                    }
                }
            }
        }
        Attempt::Failed { pruned }
    }
}

/// Bounded search with cuts drawn from `budget.pool()`.
///
/// Returns `Unprovable` only when no branch was cut off by the height bound.
/// A returned witness has the least height among proofs using the pool.
pub fn search_with_cuts(system: SystemId, goal: &Sequent, budget: &CutBudget) -> SearchOutcome {
    let mut search = CutSearch {
        system,
        table: rule_schemas(system).into_iter().filter(|s| s.rule != Rule::Cut).collect(),
        pool: budget.pool(),
        reference: CutFreeSearch::new(SystemId::Fl),
        memo: HashMap::new(),
    };
    // iterative deepening, so the witness has the least possible height
    for depth in 1..=budget.depth() {
        match search.prove(goal, depth) {
            Attempt::Found(p) => {
                debug_assert!(check_proof(system, &p).is_accepted());
                return SearchOutcome::Provable(p);
            }
            Attempt::Failed { pruned: false } => return SearchOutcome::Unprovable,
            Attempt::Failed { pruned: true } => {}
        }
    }
    SearchOutcome::ResourceExceeded(format!("proof height limit {} reached", budget.depth()))
}
