//! Formulas, sequents and the connective correspondence between the two calculi.
//!
//! Equality is purely syntactic. Nothing here re-associates, commutes or
//! otherwise normalizes a formula: the calculi are sensitive to exactly those
//! differences.

use std::collections::BTreeSet;
use std::sync::Arc;

/// Propositional constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constant {
    /// `1`, unit of multiplicative conjunction.
    One,
    /// `0`, unit of the (absent) multiplicative disjunction.
    Zero,
    /// `top`, unit of additive conjunction.
    Top,
    /// `bot`, unit of additive disjunction.
    Bot,
}

/// A formula of the language.
///
/// Children are reference counted so formulas can be cloned cheaply and shared
/// across threads.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(Arc<str>),
    Const(Constant),
    /// Left negation `neg A`.
    Neg(Arc<Formula>),
    /// Right negation `coneg A`.
    CoNeg(Arc<Formula>),
    /// `A -> B`
    Imp(Arc<Formula>, Arc<Formula>),
    /// `A <- B`
    CoImp(Arc<Formula>, Arc<Formula>),
    /// Multiplicative conjunction `A * B`.
    Tensor(Arc<Formula>, Arc<Formula>),
    /// Additive conjunction `A /\ B`.
    With(Arc<Formula>, Arc<Formula>),
    /// Additive disjunction `A \/ B`.
    Plus(Arc<Formula>, Arc<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(Arc::from(name))
    }

    pub fn one() -> Formula {
        Formula::Const(Constant::One)
    }

    pub fn zero() -> Formula {
        Formula::Const(Constant::Zero)
    }

    pub fn top() -> Formula {
        Formula::Const(Constant::Top)
    }

    pub fn bot() -> Formula {
        Formula::Const(Constant::Bot)
    }

    pub fn neg(body: Formula) -> Formula {
        Formula::Neg(Arc::new(body))
    }

    pub fn coneg(body: Formula) -> Formula {
        Formula::CoNeg(Arc::new(body))
    }

    pub fn imp(left: Formula, right: Formula) -> Formula {
        Formula::Imp(Arc::new(left), Arc::new(right))
    }

    pub fn coimp(left: Formula, right: Formula) -> Formula {
        Formula::CoImp(Arc::new(left), Arc::new(right))
    }

    pub fn tensor(left: Formula, right: Formula) -> Formula {
        Formula::Tensor(Arc::new(left), Arc::new(right))
    }

    pub fn with(left: Formula, right: Formula) -> Formula {
        Formula::With(Arc::new(left), Arc::new(right))
    }

    pub fn plus(left: Formula, right: Formula) -> Formula {
        Formula::Plus(Arc::new(left), Arc::new(right))
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Const(_) => 1,
            Formula::Neg(a) | Formula::CoNeg(a) => 1 + a.size(),
            Formula::Imp(a, b)
            | Formula::CoImp(a, b)
            | Formula::Tensor(a, b)
            | Formula::With(a, b)
            | Formula::Plus(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Immediate subformulas, left to right.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Atom(_) | Formula::Const(_) => vec![],
            Formula::Neg(a) | Formula::CoNeg(a) => vec![a],
            Formula::Imp(a, b)
            | Formula::CoImp(a, b)
            | Formula::Tensor(a, b)
            | Formula::With(a, b)
            | Formula::Plus(a, b) => vec![a, b],
        }
    }

    /// Adds this formula and all of its subformulas to `out`.
    pub fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        if out.insert(self.clone()) {
            for child in self.children() {
                child.collect_subformulas(out);
            }
        }
    }

    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    pub fn is_const(&self, c: Constant) -> bool {
        matches!(self, Formula::Const(k) if *k == c)
    }
}

/// `antecedent |- succedent`. Antecedent order is significant and the
/// succedent holds at most one formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    pub antecedent: Vec<Formula>,
    pub succedent: Option<Formula>,
}

impl Sequent {
    pub fn new(antecedent: Vec<Formula>, succedent: Option<Formula>) -> Sequent {
        Sequent { antecedent, succedent }
    }

    /// `antecedent |- succedent` with a formula on the right.
    pub fn proves(antecedent: Vec<Formula>, succedent: Formula) -> Sequent {
        Sequent { antecedent, succedent: Some(succedent) }
    }

    /// `antecedent |-` with an empty right-hand side.
    pub fn refutes(antecedent: Vec<Formula>) -> Sequent {
        Sequent { antecedent, succedent: None }
    }

    /// Sum of formula sizes plus one for the turnstile.
    pub fn size(&self) -> usize {
        self.formulas().map(Formula::size).sum::<usize>() + 1
    }

    /// Antecedent formulas in order, then the succedent.
    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.antecedent.iter().chain(self.succedent.iter())
    }

    pub fn subformula_closure(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        for f in self.formulas() {
            f.collect_subformulas(&mut out);
        }
        out
    }
}

/// A renaming of connectives. Every map of this shape is an involution.
///
/// The two calculi name their implications and negations the other way round:
/// what one writes `A -> B` the other writes `A <- B`, and likewise for
/// `neg`/`coneg`. [`SymbolMap::SIGMA`] performs that swap;
/// [`SymbolMap::IDENTITY`] is the literal reading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymbolMap {
    pub swap_implications: bool,
    pub swap_negations: bool,
}

impl SymbolMap {
    pub const IDENTITY: SymbolMap = SymbolMap { swap_implications: false, swap_negations: false };
    pub const SIGMA: SymbolMap = SymbolMap { swap_implications: true, swap_negations: true };

    pub fn is_identity(&self) -> bool {
        !self.swap_implications && !self.swap_negations
    }

    pub fn apply(&self, f: &Formula) -> Formula {
        if self.is_identity() {
            return f.clone();
        }
        let go = |g: &Arc<Formula>| Arc::new(self.apply(g));
        match f {
            Formula::Atom(_) | Formula::Const(_) => f.clone(),
            Formula::Neg(a) if self.swap_negations => Formula::CoNeg(go(a)),
            Formula::CoNeg(a) if self.swap_negations => Formula::Neg(go(a)),
            Formula::Neg(a) => Formula::Neg(go(a)),
            Formula::CoNeg(a) => Formula::CoNeg(go(a)),
            Formula::Imp(a, b) if self.swap_implications => Formula::CoImp(go(a), go(b)),
            Formula::CoImp(a, b) if self.swap_implications => Formula::Imp(go(a), go(b)),
            Formula::Imp(a, b) => Formula::Imp(go(a), go(b)),
            Formula::CoImp(a, b) => Formula::CoImp(go(a), go(b)),
            Formula::Tensor(a, b) => Formula::Tensor(go(a), go(b)),
            Formula::With(a, b) => Formula::With(go(a), go(b)),
            Formula::Plus(a, b) => Formula::Plus(go(a), go(b)),
        }
    }

    pub fn apply_sequent(&self, s: &Sequent) -> Sequent {
        Sequent {
            antecedent: s.antecedent.iter().map(|f| self.apply(f)).collect(),
            succedent: s.succedent.as_ref().map(|f| self.apply(f)),
        }
    }
}
