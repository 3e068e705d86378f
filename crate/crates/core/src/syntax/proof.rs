//! Proof documents.
//!
//! The text format is one node per line, `<rule> : <sequent>`, with each
//! premise indented two spaces deeper than its conclusion and premises listed
//! left to right:
//!
//! ```text
//! impL : A, A -> B |- B
//!   id : A |- A
//!   id : B |- B
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. The JSON format
//! nests objects with `rule`, `sequent` and `premises` fields.

use serde::{Deserialize, Serialize};

use super::{content_lines, parse_sequent, parse_sequent_at, print_sequent, SourceError};
use crate::calculus::ProofTree;

struct Line<'a> {
    number: usize,
    depth: usize,
    rule: &'a str,
    sequent_text: &'a str,
    sequent_column: usize,
}

fn error(line: usize, column: usize, expected: &str, found: impl Into<String>) -> SourceError {
    SourceError { line, column, expected: expected.into(), found: found.into() }
}

fn split_line(number: usize, raw: &str) -> Result<Line<'_>, SourceError> {
    let indent = raw.len() - raw.trim_start_matches(' ').len();
    let body = &raw[indent..];
    if body.starts_with('\t') {
        return Err(error(number, indent + 1, "space indentation", "a tab"));
    }
    if !indent.is_multiple_of(2) {
        return Err(error(number, indent + 1, "indentation in steps of two spaces", format!("{indent} spaces")));
    }
    let Some(colon) = body.find(':') else {
        return Err(error(number, indent + 1, "`<rule> : <sequent>`", format!("`{}`", body.trim_end())));
    };
    let rule = body[..colon].trim();
    if rule.is_empty() || rule.contains(char::is_whitespace) {
        return Err(error(number, indent + 1, "a rule name", format!("`{rule}`")));
    }
    let after = &body[colon + 1..];
    Ok(Line {
        number,
        depth: indent / 2,
        rule,
        sequent_text: after,
        sequent_column: indent + body[..colon + 1].chars().count() + 1,
    })
}

fn build(lines: &[Line<'_>], pos: &mut usize) -> Result<ProofTree, SourceError> {
    let line = &lines[*pos];
    let conclusion = parse_sequent_at(line.sequent_text, line.number, line.sequent_column)?;
    *pos += 1;
    let mut premises = Vec::new();
    while *pos < lines.len() && lines[*pos].depth > line.depth {
        let child = &lines[*pos];
        if child.depth != line.depth + 1 {
            return Err(error(
                child.number,
                1,
                &format!("indentation of {} spaces", 2 * (line.depth + 1)),
                format!("{} spaces", 2 * child.depth),
            ));
        }
        premises.push(build(lines, pos)?);
    }
    Ok(ProofTree { rule: line.rule.to_string(), conclusion, premises })
}

pub fn parse_proof(text: &str) -> Result<ProofTree, SourceError> {
    let lines = content_lines(text)
        .map(|(n, l)| split_line(n, l))
        .collect::<Result<Vec<_>, _>>()?;
    let Some(first) = lines.first() else {
        return Err(error(1, 1, "a proof", "an empty document"));
    };
    if first.depth != 0 {
        return Err(error(first.number, 1, "an unindented root", format!("{} spaces", 2 * first.depth)));
    }
    let mut pos = 0;
    let tree = build(&lines, &mut pos)?;
    if let Some(extra) = lines.get(pos) {
        return Err(error(extra.number, 1, "a single root", "a second unindented node"));
    }
    Ok(tree)
}

pub fn print_proof(proof: &ProofTree) -> String {
    fn go(out: &mut String, p: &ProofTree, depth: usize) {
        for _ in 0..depth {
            out.push_str("  ");
        }
        out.push_str(&p.rule);
        out.push_str(" : ");
        out.push_str(&print_sequent(&p.conclusion));
        out.push('\n');
        for q in &p.premises {
            go(out, q, depth + 1);
        }
    }
    let mut out = String::new();
    go(&mut out, proof, 0);
    out
}

#[derive(Serialize, Deserialize)]
struct JsonNode {
    rule: String,
    sequent: String,
    #[serde(default)]
    premises: Vec<JsonNode>,
}

fn to_json(p: &ProofTree) -> JsonNode {
    JsonNode {
        rule: p.rule.clone(),
        sequent: print_sequent(&p.conclusion),
        premises: p.premises.iter().map(to_json).collect(),
    }
}

fn from_json(node: JsonNode) -> Result<ProofTree, SourceError> {
    let conclusion = parse_sequent(&node.sequent).map_err(|e| SourceError {
        expected: format!("{} in sequent of `{}` node", e.expected, node.rule),
        ..e
    })?;
    Ok(ProofTree {
        rule: node.rule,
        conclusion,
        premises: node.premises.into_iter().map(from_json).collect::<Result<_, _>>()?,
    })
}

pub fn print_proof_json(proof: &ProofTree) -> String {
    let mut s = serde_json::to_string_pretty(&to_json(proof)).expect("proof nodes serialize");
    s.push('\n');
    s
}

/// Parses the JSON proof format. Positions inside an embedded sequent are
/// relative to that sequent string.
pub fn parse_proof_json(text: &str) -> Result<ProofTree, SourceError> {
    let node: JsonNode = serde_json::from_str(text).map_err(|e| SourceError {
        line: e.line(),
        column: e.column(),
        expected: "a proof object with `rule`, `sequent` and `premises`".into(),
        found: e.to_string(),
    })?;
    from_json(node)
}
