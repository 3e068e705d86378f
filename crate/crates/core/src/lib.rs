//! Sequent calculi for non-commutative substructural logic.
//!
//! Two systems share one language and one rule vocabulary:
//!
//! * [`SystemId::Fl`], the Full Lambek calculus with contexts on both sides
//!   of a principal formula;
//! * [`SystemId::FlPrime`], a variant whose left rules only act on the
//!   leftmost antecedent formula.
//!
//! The crate checks proofs in either system, decides cut-free derivability,
//! searches for proofs with cut from a given pool of cut formulas, and
//! translates proofs between the two systems.
//!
//! ```
//! use lambek_core::{decide_cut_free, parse_sequent, SystemId};
//!
//! let assoc = parse_sequent("A*(B*C) |- (A*B)*C").unwrap();
//! assert!(decide_cut_free(SystemId::Fl, &assoc).is_provable());
//! assert!(!decide_cut_free(SystemId::FlPrime, &assoc).is_provable());
//! ```

pub mod calculus;
pub mod corpus;
pub mod formula;
pub mod search;
pub mod syntax;
pub mod translate;

pub use calculus::{check_proof, premise_candidates, rule_schemas, CheckReport, ProofTree, Rule, SystemId};
pub use formula::{Constant, Formula, Sequent, SymbolMap};
pub use search::{decide_cut_free, search_with_cuts, CutBudget, CutFreeSearch, SearchOutcome};
pub use syntax::{
    emit_latex, parse_formula, parse_proof, parse_proof_json, parse_sequent, print_formula, print_proof,
    print_proof_json, print_sequent, SourceError,
};
pub use translate::{embed_to_fl, translate_to_flprime, Strategy, TranslateOptions, TranslationTrace};
