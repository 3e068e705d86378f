//! Python bindings for the `lambek` proof checker and prover.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::path::PathBuf;

use lambek_core as core;
use lambek_core::corpus::run_corpus as run_corpus_dir;
use lambek_core::{CheckReport as CoreReport, SearchOutcome, SymbolMap, SystemId};
use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn system(name: &str) -> PyResult<SystemId> {
    name.parse().map_err(value_error)
}

fn hash_of(x: &impl Hash) -> u64 {
    let mut h = DefaultHasher::new();
    x.hash(&mut h);
    h.finish()
}

#[pyclass(name = "Formula", module = "lambek", frozen, from_py_object)]
#[derive(Clone)]
struct Formula(core::Formula);

#[pymethods]
impl Formula {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        core::parse_formula(text).map(Formula).map_err(value_error)
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    /// Image under the map swapping the two implications and the two negations.
    fn sigma(&self) -> Formula {
        Formula(SymbolMap::SIGMA.apply(&self.0))
    }

    fn latex(&self) -> String {
        core::syntax::formula_latex(&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Formula('{}')", self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        hash_of(&self.0)
    }
}

#[pyclass(name = "Sequent", module = "lambek", frozen, from_py_object)]
#[derive(Clone)]
struct Sequent(core::Sequent);

#[pymethods]
impl Sequent {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        core::parse_sequent(text).map(Sequent).map_err(value_error)
    }

    #[getter]
    fn antecedent(&self) -> Vec<Formula> {
        self.0.antecedent.iter().cloned().map(Formula).collect()
    }

    #[getter]
    fn succedent(&self) -> Option<Formula> {
        self.0.succedent.clone().map(Formula)
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn sigma(&self) -> Sequent {
        Sequent(SymbolMap::SIGMA.apply_sequent(&self.0))
    }

    fn subformula_closure(&self) -> Vec<Formula> {
        self.0.subformula_closure().into_iter().map(Formula).collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Sequent('{}')", self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        hash_of(&self.0)
    }
}

/// A sequent given either as a `Sequent` or as text.
#[derive(FromPyObject)]
enum SequentArg {
    Parsed(Sequent),
    Text(String),
}

impl SequentArg {
    fn get(self) -> PyResult<core::Sequent> {
        match self {
            SequentArg::Parsed(s) => Ok(s.0),
            SequentArg::Text(t) => core::parse_sequent(&t).map_err(value_error),
        }
    }
}

#[derive(FromPyObject)]
enum FormulaArg {
    Parsed(Formula),
    Text(String),
}

impl FormulaArg {
    fn get(self) -> PyResult<core::Formula> {
        match self {
            FormulaArg::Parsed(f) => Ok(f.0),
            FormulaArg::Text(t) => core::parse_formula(&t).map_err(value_error),
        }
    }
}

#[pyclass(name = "ProofTree", module = "lambek", frozen, from_py_object)]
#[derive(Clone)]
struct ProofTree(core::ProofTree);

#[pymethods]
impl ProofTree {
    /// Parses the indented text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        core::parse_proof(text).map(ProofTree).map_err(value_error)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        core::parse_proof_json(text).map(ProofTree).map_err(value_error)
    }

    #[getter]
    fn rule(&self) -> String {
        self.0.rule.clone()
    }

    #[getter]
    fn conclusion(&self) -> Sequent {
        Sequent(self.0.conclusion.clone())
    }

    #[getter]
    fn premises(&self) -> Vec<ProofTree> {
        self.0.premises.iter().cloned().map(ProofTree).collect()
    }

    fn node_count(&self) -> usize {
        self.0.node_count()
    }

    fn height(&self) -> usize {
        self.0.height()
    }

    fn cut_count(&self) -> usize {
        self.0.cut_count()
    }

    fn to_text(&self) -> String {
        core::print_proof(&self.0)
    }

    fn to_json(&self) -> String {
        core::print_proof_json(&self.0)
    }

    fn to_latex(&self) -> String {
        core::emit_latex(&self.0)
    }

    fn __str__(&self) -> String {
        core::print_proof(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("<ProofTree {} : {} ({} nodes)>", self.0.rule, self.0.conclusion, self.0.node_count())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

#[pyclass(name = "CheckReport", module = "lambek", frozen, get_all)]
struct CheckReport {
    accepted: bool,
    /// Child indices from the root to the first rejected node.
    path: Vec<usize>,
    sequent: Option<Sequent>,
    reason: Option<String>,
}

#[pymethods]
impl CheckReport {
    fn __bool__(&self) -> bool {
        self.accepted
    }

    fn __repr__(&self) -> String {
        match (&self.sequent, &self.reason) {
            (Some(s), Some(r)) => format!("<CheckReport rejected at {:?} `{}`: {r}>", self.path, s.0),
            _ => "<CheckReport accepted>".to_string(),
        }
    }
}

impl From<CoreReport> for CheckReport {
    fn from(r: CoreReport) -> Self {
        match r {
            CoreReport::Accepted => CheckReport { accepted: true, path: vec![], sequent: None, reason: None },
            CoreReport::Rejected { path, sequent, reason } => CheckReport {
                accepted: false,
                path,
                sequent: Some(Sequent(sequent)),
                reason: Some(reason.to_string()),
            },
        }
    }
}

#[pyclass(name = "SearchResult", module = "lambek", frozen, get_all)]
struct SearchResult {
    /// `"provable"`, `"unprovable"` or `"resource_exceeded"`.
    status: &'static str,
    proof: Option<ProofTree>,
    message: Option<String>,
}

#[pymethods]
impl SearchResult {
    fn __bool__(&self) -> bool {
        self.proof.is_some()
    }

    fn __repr__(&self) -> String {
        format!("<SearchResult {}>", self.status)
    }
}

impl From<SearchOutcome> for SearchResult {
    fn from(o: SearchOutcome) -> Self {
        match o {
            SearchOutcome::Provable(p) => {
                SearchResult { status: "provable", proof: Some(ProofTree(p)), message: None }
            }
            SearchOutcome::Unprovable => SearchResult { status: "unprovable", proof: None, message: None },
            SearchOutcome::ResourceExceeded(m) => {
                SearchResult { status: "resource_exceeded", proof: None, message: Some(m) }
            }
        }
    }
}

#[pyclass(name = "Translation", module = "lambek", frozen, get_all)]
struct Translation {
    output: ProofTree,
    cuts_introduced: usize,
    templated_nodes: usize,
}

#[pyfunction]
fn parse_formula(text: &str) -> PyResult<Formula> {
    Formula::new(text)
}

#[pyfunction]
fn parse_sequent(text: &str) -> PyResult<Sequent> {
    Sequent::new(text)
}

#[pyfunction]
fn parse_proof(text: &str) -> PyResult<ProofTree> {
    ProofTree::parse(text)
}

/// Checks `proof` under `"fl"` or `"flp"`.
#[pyfunction]
fn check_proof(system_name: &str, proof: &ProofTree) -> PyResult<CheckReport> {
    Ok(core::check_proof(system(system_name)?, &proof.0).into())
}

/// Rule premises for a conclusion: one list of sequents per instance.
#[pyfunction]
fn premise_candidates(system_name: &str, rule: &str, conclusion: SequentArg) -> PyResult<Vec<Vec<Sequent>>> {
    let all = core::premise_candidates(system(system_name)?, rule, &conclusion.get()?).map_err(value_error)?;
    Ok(all.into_iter().map(|ps| ps.into_iter().map(Sequent).collect()).collect())
}

#[pyfunction]
fn decide_cut_free(py: Python<'_>, system_name: &str, sequent: SequentArg) -> PyResult<SearchResult> {
    let (sys, goal) = (system(system_name)?, sequent.get()?);
    Ok(py.detach(|| core::decide_cut_free(sys, &goal)).into())
}

#[pyfunction]
#[pyo3(signature = (system_name, sequent, pool, depth))]
fn search_with_cuts(
    py: Python<'_>,
    system_name: &str,
    sequent: SequentArg,
    pool: Vec<FormulaArg>,
    depth: usize,
) -> PyResult<SearchResult> {
    let (sys, goal) = (system(system_name)?, sequent.get()?);
    let pool = pool.into_iter().map(FormulaArg::get).collect::<PyResult<Vec<_>>>()?;
    let budget = core::CutBudget::new(pool, depth).map_err(value_error)?;
    Ok(py.detach(|| core::search_with_cuts(sys, &goal, &budget)).into())
}

/// Translates an FL proof into an FL' proof of the swapped sequent.
#[pyfunction]
#[pyo3(signature = (proof, strategy = "tensor", literal = false))]
fn translate_to_flprime(proof: &ProofTree, strategy: &str, literal: bool) -> PyResult<Translation> {
    let strategy = strategy.parse().map_err(PyValueError::new_err)?;
    let trace = core::translate_to_flprime(&proof.0, core::TranslateOptions { strategy, literal })
        .map_err(value_error)?;
    Ok(Translation {
        templated_nodes: trace.templated_nodes(),
        cuts_introduced: trace.cuts_introduced,
        output: ProofTree(trace.output),
    })
}

#[pyfunction]
fn embed_to_fl(proof: &ProofTree) -> PyResult<ProofTree> {
    core::embed_to_fl(&proof.0).map(ProofTree).map_err(value_error)
}

type CorpusRow = (String, String, bool, bool);

/// Runs the corpus in `dir`; returns `(all_passed, [(id, system, accepted, passed), ...])`.
#[pyfunction]
fn run_corpus(dir: PathBuf) -> PyResult<(bool, Vec<CorpusRow>)> {
    let report = run_corpus_dir(&dir).map_err(|e| PyOSError::new_err(e.to_string()))?;
    let rows = report
        .entries
        .iter()
        .map(|e| (e.entry.id.clone(), e.entry.system.name().to_string(), e.report.is_accepted(), e.passed()))
        .collect();
    Ok((report.all_passed(), rows))
}

#[pymodule]
fn lambek(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Formula>()?;
    m.add_class::<Sequent>()?;
    m.add_class::<ProofTree>()?;
    m.add_class::<CheckReport>()?;
    m.add_class::<SearchResult>()?;
    m.add_class::<Translation>()?;
    m.add_function(wrap_pyfunction!(parse_formula, m)?)?;
    m.add_function(wrap_pyfunction!(parse_sequent, m)?)?;
    m.add_function(wrap_pyfunction!(parse_proof, m)?)?;
    m.add_function(wrap_pyfunction!(check_proof, m)?)?;
    m.add_function(wrap_pyfunction!(premise_candidates, m)?)?;
    m.add_function(wrap_pyfunction!(decide_cut_free, m)?)?;
    m.add_function(wrap_pyfunction!(search_with_cuts, m)?)?;
    m.add_function(wrap_pyfunction!(translate_to_flprime, m)?)?;
    m.add_function(wrap_pyfunction!(embed_to_fl, m)?)?;
    m.add_function(wrap_pyfunction!(run_corpus, m)?)?;
    Ok(())
}
