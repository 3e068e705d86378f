//! LaTeX output in the `\infer[label]{conclusion}{premises}` style of the
//! `proof` package.

use super::{write_formula, Notation};
use crate::calculus::{ProofTree, Rule};
use crate::formula::{Formula, Sequent};

fn latex_atom(name: &str) -> String {
    name.replace('_', "\\_")
}

const LATEX: Notation = Notation {
    one: "\\mathbf{1}",
    zero: "\\mathbf{0}",
    top: "\\top",
    bot: "\\bot",
    neg: "\\neg ",
    coneg: "\\neg' ",
    imp: " \\to ",
    coimp: " \\leftarrow ",
    tensor: " \\otimes ",
    with: " \\wedge ",
    plus: " \\vee ",
    atom: latex_atom,
};

pub fn formula_latex(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(&mut out, f, &LATEX);
    out
}

pub fn sequent_latex(s: &Sequent) -> String {
    let ant: Vec<String> = s.antecedent.iter().map(formula_latex).collect();
    let mut out = ant.join(", ");
    if !out.is_empty() {
        out.push(' ');
    }
    out.push_str("\\vdash");
    if let Some(f) = &s.succedent {
        out.push(' ');
        out.push_str(&formula_latex(f));
    }
    out
}

fn rule_label(rule: &str) -> String {
    let Ok(rule) = rule.parse::<Rule>() else {
        return format!("\\mathrm{{{}}}", latex_atom(rule));
    };
    match rule {
        Rule::Id => "\\mathit{id}",
        Rule::OneR => "\\mathbf{1} R",
        Rule::ZeroL => "\\mathbf{0} L",
        Rule::TopR => "\\top R",
        Rule::BotL => "\\bot L",
        Rule::ZeroW => "\\mathbf{0} W",
        Rule::OneW => "\\mathbf{1} W",
        Rule::ImpR => "{\\to} R",
        Rule::ImpL => "{\\to} L",
        Rule::CoimpR => "{\\leftarrow} R",
        Rule::CoimpL => "{\\leftarrow} L",
        Rule::NegR => "\\neg R",
        Rule::NegL => "\\neg L",
        Rule::ConegR => "\\neg' R",
        Rule::ConegL => "\\neg' L",
        Rule::TensL => "\\otimes L",
        Rule::TensR => "\\otimes R",
        Rule::AndL1 => "\\wedge L_1",
        Rule::AndL2 => "\\wedge L_2",
        Rule::AndR => "\\wedge R",
        Rule::OrL => "\\vee L",
        Rule::OrR1 => "\\vee R_1",
        Rule::OrR2 => "\\vee R_2",
        Rule::Cut => "\\mathit{Cut}",
    }
    .to_string()
}

/// Renders a proof as nested `\infer` commands. Leaves are written as bare
/// sequents.
pub fn emit_latex(proof: &ProofTree) -> String {
    fn go(out: &mut String, p: &ProofTree, depth: usize) {
        let pad = "  ".repeat(depth);
        if p.premises.is_empty() {
            out.push_str(&pad);
            out.push_str(&sequent_latex(&p.conclusion));
            return;
        }
        out.push_str(&format!(
            "{pad}\\infer[{}]{{{}}}{{\n",
            rule_label(&p.rule),
            sequent_latex(&p.conclusion)
        ));
        for (i, q) in p.premises.iter().enumerate() {
            if i > 0 {
                out.push_str(&format!("\n{pad}  &\n"));
            }
            go(out, q, depth + 1);
        }
        out.push_str(&format!("\n{pad}}}"));
    }
    let mut out = String::new();
    go(&mut out, proof, 0);
    out.push('\n');
    out
}
