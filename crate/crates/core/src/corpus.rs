//! Regression corpus of worked proofs.
//!
//! A corpus directory holds `<id>.proof` files, a tab-separated `manifest`
//! with one line per entry
//!
//! ```text
//! id<TAB>system<TAB>expected<TAB>figure
//! ```
//!
//! and an optional tab-separated `errata` file of `id<TAB>note` lines recording
//! where an entry deviates from the figure it transcribes. Lines starting with
//! `#` are comments in both files.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::calculus::{check_proof, CheckReport, SystemId};
use crate::formula::Sequent;
use crate::search::CutFreeSearch;
use crate::syntax::{parse_proof, parse_sequent, SourceError};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("manifest line {line}: {message}")]
    Manifest { line: usize, message: String },
    #[error("no entries found in {0}")]
    NoEntries(PathBuf),
    #[error("entry `{id}`: proof file {path} is missing")]
    MissingProof { id: String, path: PathBuf },
    #[error("entry `{id}`: {source}")]
    Parse { id: String, source: SourceError },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Accepted,
    Rejected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: String,
    pub system: SystemId,
    pub path: PathBuf,
    pub expected: Expectation,
    pub figure: String,
    pub errata: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct EntryResult {
    pub entry: CorpusEntry,
    pub report: CheckReport,
}

impl EntryResult {
    pub fn passed(&self) -> bool {
        self.report.is_accepted() == (self.entry.expected == Expectation::Accepted)
    }
}

/// One cell of the cut-free derivability matrix.
#[derive(Clone, Debug)]
pub struct MatrixCell {
    pub sequent: Sequent,
    pub system: SystemId,
    pub expected: bool,
    pub provable: bool,
}

impl MatrixCell {
    pub fn passed(&self) -> bool {
        self.expected == self.provable
    }
}

/// `(sequent, provable in fl, provable in flp)`, all cut-free.
pub const DERIVABILITY_MATRIX: [(&str, bool, bool); 6] = [
    ("A*(B*C) |- (A*B)*C", true, false),
    ("(A*B)*C |- A*(B*C)", true, true),
    ("A*(B\\/C) |- (A*B)\\/(A*C)", true, false),
    ("(A*B)\\/(A*C) |- A*(B\\/C)", true, true),
    ("A -> B, A |- B", true, false),
    ("A <- B, A |- B", false, true),
];

#[derive(Clone, Debug)]
pub struct CorpusReport {
    pub entries: Vec<EntryResult>,
    pub matrix: Vec<MatrixCell>,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(EntryResult::passed) && self.matrix.iter().all(MatrixCell::passed)
    }
}

fn read(path: &Path) -> Result<String, CorpusError> {
    fs::read_to_string(path).map_err(|source| CorpusError::Io { path: path.to_path_buf(), source })
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
}

/// Reads the manifest and errata of a corpus directory.
pub fn load_corpus(dir: &Path) -> Result<Vec<CorpusEntry>, CorpusError> {
    let manifest = dir.join("manifest");
    if !manifest.exists() {
        return Err(CorpusError::NoEntries(dir.to_path_buf()));
    }
    let mut entries = Vec::new();
    for (line, text) in data_lines(&read(&manifest)?) {
        let fields: Vec<&str> = text.split('\t').collect();
        let bad = |message: String| CorpusError::Manifest { line, message };
        let [id, system, expected, figure] = fields[..] else {
            return Err(bad(format!("expected 4 tab-separated fields, found {}", fields.len())));
        };
        let system = system.parse().map_err(|e| bad(format!("{e}")))?;
        let expected = match expected {
            "Accepted" => Expectation::Accepted,
            "Rejected" => Expectation::Rejected,
            other => return Err(bad(format!("unknown verdict `{other}`"))),
        };
        entries.push(CorpusEntry {
            id: id.to_string(),
            system,
            path: dir.join(format!("{id}.proof")),
            expected,
            figure: figure.to_string(),
            errata: Vec::new(),
        });
    }
    if entries.is_empty() {
        return Err(CorpusError::NoEntries(dir.to_path_buf()));
    }
    let errata = dir.join("errata");
    if errata.exists() {
        for (line, text) in data_lines(&read(&errata)?) {
            let Some((id, note)) = text.split_once('\t') else {
                return Err(CorpusError::Manifest { line, message: "errata lines are `id<TAB>note`".into() });
            };
            if let Some(e) = entries.iter_mut().find(|e| e.id == id) {
                e.errata.push(note.to_string());
            }
        }
    }
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(entries)
}

pub fn check_entry(entry: &CorpusEntry) -> Result<EntryResult, CorpusError> {
    if !entry.path.exists() {
        return Err(CorpusError::MissingProof { id: entry.id.clone(), path: entry.path.clone() });
    }
    let proof = parse_proof(&read(&entry.path)?)
        .map_err(|source| CorpusError::Parse { id: entry.id.clone(), source })?;
    Ok(EntryResult { entry: entry.clone(), report: check_proof(entry.system, &proof) })
}

/// Decides every cell of [`DERIVABILITY_MATRIX`].
pub fn derivability_matrix() -> Vec<MatrixCell> {
    let mut searches = [CutFreeSearch::new(SystemId::Fl), CutFreeSearch::new(SystemId::FlPrime)];
    let mut out = Vec::new();
    for (text, fl, flp) in DERIVABILITY_MATRIX {
        let sequent = parse_sequent(text).expect("matrix sequents parse");
        for (search, expected) in searches.iter_mut().zip([fl, flp]) {
            out.push(MatrixCell {
                sequent: sequent.clone(),
                system: search.system(),
                expected,
                provable: search.is_provable(&sequent),
            });
        }
    }
    out
}

/// Checks every entry of the corpus in `dir` and recomputes the derivability
/// matrix. Entries are reported in id order.
pub fn run_corpus(dir: &Path) -> Result<CorpusReport, CorpusError> {
    let entries = load_corpus(dir)?
        .iter()
        .map(check_entry)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CorpusReport { entries, matrix: derivability_matrix() })
}
