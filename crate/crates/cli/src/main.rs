use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lambek_core::corpus::run_corpus;
use lambek_core::syntax::parse_formula_file;
use lambek_core::translate::TranslateError;
use lambek_core::{
    check_proof, decide_cut_free, embed_to_fl, emit_latex, parse_proof, parse_proof_json, parse_sequent,
    print_proof, print_proof_json, search_with_cuts, translate_to_flprime, CheckReport, CutBudget, ProofTree,
    SearchOutcome, Sequent, Strategy, SystemId, TranslateOptions,
};

const VALID: u8 = 0;
const INVALID: u8 = 1;
const USAGE: u8 = 2;
const EXCEEDED: u8 = 3;

#[derive(Parser)]
#[command(name = "lambek", version, about = "Proof checking and proof search for FL and FL'")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ProofInput {
    /// Proof file, indented text or JSON (`.json`)
    file: PathBuf,
    /// Read the proof as JSON whatever the extension
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check a proof under a system
    Check {
        #[arg(long, value_parser = parse_system)]
        system: SystemId,
        #[command(flatten)]
        input: ProofInput,
    },
    /// Search for a proof of a sequent
    Search {
        #[arg(long, value_parser = parse_system)]
        system: SystemId,
        /// Sequent text, or a `.seq` file holding one sequent
        sequent: String,
        /// Cut formulas, one per line; enables search with cut
        #[arg(long, value_name = "FILE")]
        cut_pool: Option<PathBuf>,
        /// Height bound for search with cut
        #[arg(long, value_name = "N")]
        depth: Option<usize>,
        /// Write the proof found here (JSON for `.json`)
        #[arg(long, value_name = "FILE")]
        emit: Option<PathBuf>,
        /// Write the proof found here as LaTeX
        #[arg(long, value_name = "FILE")]
        latex: Option<PathBuf>,
    },
    /// Translate a proof between the systems
    Translate {
        /// Target system
        #[arg(long, value_parser = parse_system)]
        to: SystemId,
        #[command(flatten)]
        input: ProofInput,
        #[arg(long, default_value = "tensor")]
        strategy: Strategy,
        /// Keep connectives as they are
        #[arg(long)]
        literal: bool,
        /// Print the result as JSON
        #[arg(long)]
        emit_json: bool,
    },
    /// Map an FL' proof to the FL proof of the swapped sequent
    Embed {
        #[command(flatten)]
        input: ProofInput,
        /// Print the result as JSON
        #[arg(long)]
        emit_json: bool,
    },
    /// Regression corpus
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Check every entry and the derivability matrix
    Run {
        #[arg(long, default_value = "corpus")]
        dir: PathBuf,
    },
}

fn parse_system(s: &str) -> Result<SystemId, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// Failure that ends the run with a message and an exit code.
struct Fail(u8, String);

fn usage(msg: impl std::fmt::Display) -> Fail {
    Fail(USAGE, msg.to_string())
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "json")
}

fn load_proof(input: &ProofInput) -> Result<ProofTree, Fail> {
    let text = read(&input.file)?;
    let parsed = if input.json || is_json(&input.file) { parse_proof_json(&text) } else { parse_proof(&text) };
    parsed.map_err(|e| usage(format!("{}:{e}", input.file.display())))
}

fn load_sequent(arg: &str) -> Result<Sequent, Fail> {
    let path = Path::new(arg);
    if path.extension().is_some_and(|e| e == "seq") && path.is_file() {
        let text = read(path)?;
        let mut all = lambek_core::syntax::parse_sequent_file(&text)
            .map_err(|e| usage(format!("{}:{e}", path.display())))?;
        return match all.len() {
            1 => Ok(all.remove(0)),
            n => Err(usage(format!("{}: expected one sequent, found {n}", path.display()))),
        };
    }
    parse_sequent(arg).map_err(|e| usage(format!("sequent:{e}")))
}

fn write(path: &Path, text: &str) -> Result<(), Fail> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn show(proof: &ProofTree, json: bool) -> String {
    if json {
        print_proof_json(proof)
    } else {
        print_proof(proof)
    }
}

fn report(system: SystemId, proof: &ProofTree) -> u8 {
    match check_proof(system, proof) {
        CheckReport::Accepted => {
            println!("accepted: valid {system} proof of {} ({} nodes)", proof.conclusion, proof.node_count());
            VALID
        }
        CheckReport::Rejected { path, sequent, reason } => {
            println!("rejected: node {path:?} `{sequent}`: {reason}");
            INVALID
        }
    }
}

fn search(
    system: SystemId,
    sequent: &str,
    cut_pool: Option<&Path>,
    depth: Option<usize>,
    emit: Option<&Path>,
    latex: Option<&Path>,
) -> Result<u8, Fail> {
    let goal = load_sequent(sequent)?;
    let outcome = match (cut_pool, depth) {
        (None, None) => decide_cut_free(system, &goal),
        (pool, depth) => {
            let pool = match pool {
                Some(p) => parse_formula_file(&read(p)?).map_err(|e| usage(format!("{}:{e}", p.display())))?,
                None => Vec::new(),
            };
            let depth = depth.ok_or_else(|| usage("--cut-pool needs --depth"))?;
            let budget = CutBudget::new(pool, depth).map_err(usage)?;
            search_with_cuts(system, &goal, &budget)
        }
    };
    match outcome {
        SearchOutcome::Provable(p) => {
            println!("provable in {system}: {goal}");
            print!("{}", print_proof(&p));
            if let Some(path) = emit {
                write(path, &show(&p, is_json(path)))?;
            }
            if let Some(path) = latex {
                write(path, &emit_latex(&p))?;
            }
            Ok(VALID)
        }
        SearchOutcome::Unprovable => {
            println!("unprovable in {system}: {goal}");
            Ok(INVALID)
        }
        SearchOutcome::ResourceExceeded(why) => {
            println!("undecided in {system}: {goal}: {why}");
            Ok(EXCEEDED)
        }
    }
}

fn translation_failure(e: TranslateError) -> Fail {
    match e {
        TranslateError::OutputRejected { output, report } => {
            let CheckReport::Rejected { path, sequent, reason } = report else {
                unreachable!("accepted output is not an error")
            };
            let msg = format!(
                "translated proof is not a valid flp proof: node {path:?} `{sequent}`: {reason}\n{}",
                print_proof(&output)
            );
            Fail(INVALID, msg)
        }
        other => Fail(INVALID, other.to_string()),
    }
}

fn run(cli: Cli) -> Result<u8, Fail> {
    match cli.command {
        Command::Check { system, input } => Ok(report(system, &load_proof(&input)?)),
        Command::Search { system, sequent, cut_pool, depth, emit, latex } => {
            search(system, &sequent, cut_pool.as_deref(), depth, emit.as_deref(), latex.as_deref())
        }
        Command::Translate { to: SystemId::Fl, input, emit_json, .. } | Command::Embed { input, emit_json } => {
            let out = embed_to_fl(&load_proof(&input)?).map_err(translation_failure)?;
            print!("{}", show(&out, emit_json));
            Ok(VALID)
        }
        Command::Translate { to: SystemId::FlPrime, input, strategy, literal, emit_json } => {
            let proof = load_proof(&input)?;
            let trace = translate_to_flprime(&proof, TranslateOptions { strategy, literal })
                .map_err(translation_failure)?;
            eprintln!(
                "cuts introduced: {}, templated nodes: {}",
                trace.cuts_introduced,
                trace.templated_nodes()
            );
            print!("{}", show(&trace.output, emit_json));
            Ok(VALID)
        }
        Command::Corpus { action: CorpusAction::Run { dir } } => {
            let report = run_corpus(&dir).map_err(usage)?;
            for e in &report.entries {
                let verdict = if e.report.is_accepted() { "Accepted" } else { "Rejected" };
                let mark = if e.passed() { "ok" } else { "FAILED" };
                println!("{mark:6} {:26} {:3} {verdict}", e.entry.id, e.entry.system.name());
                if let CheckReport::Rejected { path, sequent, reason } = &e.report {
                    println!("       node {path:?} `{sequent}`: {reason}");
                }
            }
            for c in &report.matrix {
                let mark = if c.passed() { "ok" } else { "FAILED" };
                let verdict = if c.provable { "provable" } else { "unprovable" };
                println!("{mark:6} matrix {:3} {verdict:10} {}", c.system.name(), c.sequent);
            }
            let passed = report.entries.iter().filter(|e| e.passed()).count();
            println!("{passed}/{} entries as expected", report.entries.len());
            Ok(if report.all_passed() { VALID } else { INVALID })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
