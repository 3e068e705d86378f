//! The two rule systems as data.
//!
//! Both systems share one rule vocabulary. A rule name denotes a different
//! shape in each system: in `FlPrime` the left rules for `bot`, `1`, `*`,
//! `/\` and `\/` only fire on the leftmost antecedent formula, and the
//! implication-left rules carry no context in front of the principal formula.
//! `Fl` allows context on both sides.

mod check;
mod rules;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::{Sequent, SymbolMap};

pub use check::{check_proof, CheckReport, ProofTree, RejectReason};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CalculusError {
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("unknown system `{0}` (expected `fl` or `flp`)")]
    UnknownSystem(String),
}

/// Which calculus a proof or a search lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SystemId {
    /// Full Lambek calculus with two-sided contexts.
    Fl,
    /// The leftmost-principal variant.
    FlPrime,
}

impl SystemId {
    pub const ALL: [SystemId; 2] = [SystemId::Fl, SystemId::FlPrime];

    pub fn name(self) -> &'static str {
        match self {
            SystemId::Fl => "fl",
            SystemId::FlPrime => "flp",
        }
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SystemId {
    type Err = CalculusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "fl" => Ok(SystemId::Fl),
            "flp" | "flprime" | "fl'" => Ok(SystemId::FlPrime),
            _ => Err(CalculusError::UnknownSystem(s.to_string())),
        }
    }
}

/// Rule identifiers, declared in search order: axioms, unary right rules,
/// unary left rules, branching rules, then cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Id,
    OneR,
    ZeroL,
    TopR,
    BotL,
    ZeroW,
    ImpR,
    CoimpR,
    NegR,
    ConegR,
    OrR1,
    OrR2,
    OneW,
    TensL,
    AndL1,
    AndL2,
    NegL,
    ConegL,
    TensR,
    AndR,
    OrL,
    ImpL,
    CoimpL,
    Cut,
}

impl Rule {
    pub const ALL: [Rule; 24] = [
        Rule::Id,
        Rule::OneR,
        Rule::ZeroL,
        Rule::TopR,
        Rule::BotL,
        Rule::ZeroW,
        Rule::ImpR,
        Rule::CoimpR,
        Rule::NegR,
        Rule::ConegR,
        Rule::OrR1,
        Rule::OrR2,
        Rule::OneW,
        Rule::TensL,
        Rule::AndL1,
        Rule::AndL2,
        Rule::NegL,
        Rule::ConegL,
        Rule::TensR,
        Rule::AndR,
        Rule::OrL,
        Rule::ImpL,
        Rule::CoimpL,
        Rule::Cut,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Id => "id",
            Rule::OneR => "oneR",
            Rule::ZeroL => "zeroL",
            Rule::TopR => "topR",
            Rule::BotL => "botL",
            Rule::ZeroW => "zeroW",
            Rule::ImpR => "impR",
            Rule::CoimpR => "coimpR",
            Rule::NegR => "negR",
            Rule::ConegR => "conegR",
            Rule::OrR1 => "orR1",
            Rule::OrR2 => "orR2",
            Rule::OneW => "oneW",
            Rule::TensL => "tensL",
            Rule::AndL1 => "andL1",
            Rule::AndL2 => "andL2",
            Rule::NegL => "negL",
            Rule::ConegL => "conegL",
            Rule::TensR => "tensR",
            Rule::AndR => "andR",
            Rule::OrL => "orL",
            Rule::ImpL => "impL",
            Rule::CoimpL => "coimpL",
            Rule::Cut => "cut",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Rule::Id | Rule::OneR | Rule::ZeroL | Rule::TopR | Rule::BotL => 0,
            Rule::TensR | Rule::AndR | Rule::OrL | Rule::ImpL | Rule::CoimpL | Rule::Cut => 2,
            _ => 1,
        }
    }

    pub fn is_axiom(self) -> bool {
        self.arity() == 0
    }

    /// The rule name under the connective swap: an `impL` step of one system
    /// is a `coimpL` step of the other, and so on.
    pub fn sigma(self) -> Rule {
        match self {
            Rule::ImpL => Rule::CoimpL,
            Rule::CoimpL => Rule::ImpL,
            Rule::ImpR => Rule::CoimpR,
            Rule::CoimpR => Rule::ImpR,
            Rule::NegL => Rule::ConegL,
            Rule::ConegL => Rule::NegL,
            Rule::NegR => Rule::ConegR,
            Rule::ConegR => Rule::NegR,
            other => other,
        }
    }

    /// Relabeling that matches a connective renaming.
    pub fn rename(self, map: &SymbolMap) -> Rule {
        let swapped = match self {
            Rule::ImpL | Rule::CoimpL | Rule::ImpR | Rule::CoimpR => map.swap_implications,
            Rule::NegL | Rule::ConegL | Rule::NegR | Rule::ConegR => map.swap_negations,
            _ => false,
        };
        if swapped {
            self.sigma()
        } else {
            self
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = CalculusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rule::ALL
            .iter()
            .copied()
            .find(|r| r.name() == s)
            .ok_or_else(|| CalculusError::UnknownRule(s.to_string()))
    }
}

/// One backward reading of a rule at a given conclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub premises: Vec<Sequent>,
    /// Length of the antecedent prefix standing in front of the principal
    /// formula that `FlPrime` does not allow there. Always zero for
    /// `FlPrime` instances and for rules without such a context.
    pub forbidden_prefix: usize,
}

/// A named rule shape of one system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuleSchema {
    pub rule: Rule,
    pub system: SystemId,
}

impl RuleSchema {
    pub fn name(&self) -> &'static str {
        self.rule.name()
    }

    pub fn arity(&self) -> usize {
        self.rule.arity()
    }

    /// All instantiations with the given conclusion. Empty for `cut`.
    pub fn instances(&self, conclusion: &Sequent) -> Vec<Instance> {
        rules::instances(self.system, self.rule, conclusion)
    }
}

/// The full rule table of a system, in search order.
pub fn rule_schemas(system: SystemId) -> Vec<RuleSchema> {
    Rule::ALL.iter().map(|&rule| RuleSchema { rule, system }).collect()
}

/// Every premise list `P` such that `P / conclusion` instantiates `rule`.
///
/// `cut` yields no candidates: its premises cannot be enumerated without a
/// cut formula.
pub fn premise_candidates(
    system: SystemId,
    rule: &str,
    conclusion: &Sequent,
) -> Result<Vec<Vec<Sequent>>, CalculusError> {
    let rule: Rule = rule.parse()?;
    Ok(rules::instances(system, rule, conclusion)
        .into_iter()
        .map(|i| i.premises)
        .collect())
}

pub(crate) use rules::instances;
