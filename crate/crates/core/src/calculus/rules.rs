//! Backward reading of every rule schema.
//!
//! Instances are produced ordered by principal position, then by split point,
//! both ascending.

use super::{Instance, Rule, SystemId};
use crate::formula::{Constant, Formula, Sequent};

fn concat(parts: &[&[Formula]]) -> Vec<Formula> {
    parts.iter().flat_map(|p| p.iter().cloned()).collect()
}

fn plain(premises: Vec<Sequent>) -> Instance {
    Instance { premises, forbidden_prefix: 0 }
}

fn sequent(ant: Vec<Formula>, succ: Option<&Formula>) -> Sequent {
    Sequent::new(ant, succ.cloned())
}

/// Positions where a left rule may find its principal formula.
fn principal_positions(system: SystemId, len: usize) -> std::ops::Range<usize> {
    match system {
        SystemId::FlPrime => 0..len.min(1),
        SystemId::Fl => 0..len,
    }
}

pub(crate) fn instances(system: SystemId, rule: Rule, c: &Sequent) -> Vec<Instance> {
    let ant = &c.antecedent[..];
    let succ = c.succedent.as_ref();
    let n = ant.len();
    let mut out = Vec::new();

    match rule {
        Rule::Id => {
            if let ([a], Some(b)) = (ant, succ) {
                if a == b {
                    out.push(plain(vec![]));
                }
            }
        }
        Rule::OneR => {
            if ant.is_empty() && succ.is_some_and(|f| f.is_const(Constant::One)) {
                out.push(plain(vec![]));
            }
        }
        Rule::ZeroL => {
            if let ([z], None) = (ant, succ) {
                if z.is_const(Constant::Zero) {
                    out.push(plain(vec![]));
                }
            }
        }
        Rule::TopR => {
            if succ.is_some_and(|f| f.is_const(Constant::Top)) {
                out.push(plain(vec![]));
            }
        }
        Rule::BotL => {
            if succ.is_some() {
                for i in principal_positions(system, n) {
                    if ant[i].is_const(Constant::Bot) {
                        out.push(Instance { premises: vec![], forbidden_prefix: i });
                    }
                }
            }
        }
        Rule::ZeroW => {
            if succ.is_some_and(|f| f.is_const(Constant::Zero)) {
                out.push(plain(vec![Sequent::refutes(ant.to_vec())]));
            }
        }
        Rule::OneW => {
            if succ.is_some() {
                for i in principal_positions(system, n) {
                    if ant[i].is_const(Constant::One) {
                        let rest = concat(&[&ant[..i], &ant[i + 1..]]);
                        out.push(Instance {
                            premises: vec![sequent(rest, succ)],
                            forbidden_prefix: i,
                        });
                    }
                }
            }
        }
        Rule::ImpR | Rule::CoimpR => {
            // The implication whose hypothesis goes on the left of the context.
            let left_abstraction = match system {
                SystemId::FlPrime => Rule::ImpR,
                SystemId::Fl => Rule::CoimpR,
            };
            let body = match (rule, succ) {
                (Rule::ImpR, Some(Formula::Imp(a, b))) => Some((a, b)),
                (Rule::CoimpR, Some(Formula::CoImp(a, b))) => Some((a, b)),
                _ => None,
            };
            if let Some((a, b)) = body {
                let hyp = [(**a).clone()];
                let new_ant = if rule == left_abstraction {
                    concat(&[&hyp, ant])
                } else {
                    concat(&[ant, &hyp])
                };
                out.push(plain(vec![Sequent::proves(new_ant, (**b).clone())]));
            }
        }
        Rule::NegR | Rule::ConegR => {
            let left_abstraction = match system {
                SystemId::FlPrime => Rule::NegR,
                SystemId::Fl => Rule::ConegR,
            };
            let body = match (rule, succ) {
                (Rule::NegR, Some(Formula::Neg(a))) => Some(a),
                (Rule::ConegR, Some(Formula::CoNeg(a))) => Some(a),
                _ => None,
            };
            if let Some(a) = body {
                let hyp = [(**a).clone()];
                let new_ant = if rule == left_abstraction {
                    concat(&[&hyp, ant])
                } else {
                    concat(&[ant, &hyp])
                };
                out.push(plain(vec![Sequent::refutes(new_ant)]));
            }
        }
        Rule::NegL | Rule::ConegL => {
            // One negation is introduced at the right end of the antecedent,
            // the other at the left end.
            let at_right_end = match system {
                SystemId::FlPrime => Rule::NegL,
                SystemId::Fl => Rule::ConegL,
            };
            if succ.is_none() && n > 0 {
                let (pos, rest) = if rule == at_right_end {
                    (n - 1, &ant[..n - 1])
                } else {
                    (0, &ant[1..])
                };
                let body = match (rule, &ant[pos]) {
                    (Rule::NegL, Formula::Neg(a)) => Some(a),
                    (Rule::ConegL, Formula::CoNeg(a)) => Some(a),
                    _ => None,
                };
                if let Some(a) = body {
                    out.push(plain(vec![Sequent::proves(rest.to_vec(), (**a).clone())]));
                }
            }
        }
        Rule::OrR1 | Rule::OrR2 => {
            if let Some(Formula::Plus(a, b)) = succ {
                let pick = if rule == Rule::OrR1 { a } else { b };
                out.push(plain(vec![Sequent::proves(ant.to_vec(), (**pick).clone())]));
            }
        }
        Rule::TensL => {
            if succ.is_some() {
                for i in principal_positions(system, n) {
                    if let Formula::Tensor(a, b) = &ant[i] {
                        let mid = [(**a).clone(), (**b).clone()];
                        let new_ant = concat(&[&ant[..i], &mid, &ant[i + 1..]]);
                        out.push(Instance {
                            premises: vec![sequent(new_ant, succ)],
                            forbidden_prefix: i,
                        });
                    }
                }
            }
        }
        Rule::AndL1 | Rule::AndL2 => {
            if succ.is_some() {
                for i in principal_positions(system, n) {
                    if let Formula::With(a, b) = &ant[i] {
                        let pick = [if rule == Rule::AndL1 { (**a).clone() } else { (**b).clone() }];
                        let new_ant = concat(&[&ant[..i], &pick, &ant[i + 1..]]);
                        out.push(Instance {
                            premises: vec![sequent(new_ant, succ)],
                            forbidden_prefix: i,
                        });
                    }
                }
            }
        }
        Rule::OrL => {
            if succ.is_some() {
                for i in principal_positions(system, n) {
                    if let Formula::Plus(a, b) = &ant[i] {
                        let with = |x: &Formula| {
                            sequent(concat(&[&ant[..i], std::slice::from_ref(x), &ant[i + 1..]]), succ)
                        };
                        out.push(Instance {
                            premises: vec![with(a), with(b)],
                            forbidden_prefix: i,
                        });
                    }
                }
            }
        }
        Rule::TensR => {
            if let Some(Formula::Tensor(a, b)) = succ {
                for k in 0..=n {
                    out.push(plain(vec![
                        Sequent::proves(ant[..k].to_vec(), (**a).clone()),
                        Sequent::proves(ant[k..].to_vec(), (**b).clone()),
                    ]));
                }
            }
        }
        Rule::AndR => {
            if let Some(Formula::With(a, b)) = succ {
                out.push(plain(vec![
                    Sequent::proves(ant.to_vec(), (**a).clone()),
                    Sequent::proves(ant.to_vec(), (**b).clone()),
                ]));
            }
        }
        Rule::ImpL | Rule::CoimpL => {
            if succ.is_some() {
                implication_left(system, rule, ant, succ, &mut out);
            }
        }
        Rule::Cut => {}
    }
    out
}

/// Implication-left rules.
///
/// The implication whose hypothesis sits on its left takes the argument
/// context `G1` immediately before the principal formula; the other takes it
/// immediately after. In `FlPrime` the first has no context before `G1` and
/// the second has no context before the principal formula. In `Fl` a context
/// `G2` is allowed in front in both cases:
///
/// * `G2, G1, P, G3 |- C` from `G1 |- A` and `G2, B, G3 |- C` (hypothesis on the left),
/// * `G2, P, G1, G3 |- C` from `G1 |- A` and `G2, B, G3 |- C` (hypothesis on the right).
fn implication_left(
    system: SystemId,
    rule: Rule,
    ant: &[Formula],
    succ: Option<&Formula>,
    out: &mut Vec<Instance>,
) {
    let hypothesis_on_left = match system {
        SystemId::FlPrime => Rule::ImpL,
        SystemId::Fl => Rule::CoimpL,
    };
    let n = ant.len();
    for i in 0..n {
        let parts = match (rule, &ant[i]) {
            (Rule::ImpL, Formula::Imp(a, b)) => Some((a, b)),
            (Rule::CoimpL, Formula::CoImp(a, b)) => Some((a, b)),
            _ => None,
        };
        let Some((a, b)) = parts else { continue };
        let b = [(**b).clone()];
        if rule == hypothesis_on_left {
            // G1 = ant[j..i], G2 = ant[..j], G3 = ant[i+1..]
            let starts = match system {
                SystemId::FlPrime => 0..1,
                SystemId::Fl => 0..i + 1,
            };
            for j in starts {
                out.push(Instance {
                    premises: vec![
                        Sequent::proves(ant[j..i].to_vec(), (**a).clone()),
                        sequent(concat(&[&ant[..j], &b, &ant[i + 1..]]), succ),
                    ],
                    forbidden_prefix: j,
                });
            }
        } else {
            if system == SystemId::FlPrime && i > 0 {
                break;
            }
            // G2 = ant[..i], G1 = ant[i+1..k], G3 = ant[k..]
            for k in i + 1..=n {
                out.push(Instance {
                    premises: vec![
                        Sequent::proves(ant[i + 1..k].to_vec(), (**a).clone()),
                        sequent(concat(&[&ant[..i], &b, &ant[k..]]), succ),
                    ],
                    forbidden_prefix: i,
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::premise_candidates;
    use super::*;

    fn at(n: &str) -> Formula {
        Formula::atom(n)
    }

    fn seq(ant: &[Formula], succ: Option<Formula>) -> Sequent {
        Sequent::new(ant.to_vec(), succ)
    }

    #[test]
    fn tensl_leftmost_in_flprime() {
        let ab = Formula::tensor(at("A"), at("B"));
        let c = premise_candidates(SystemId::FlPrime, "tensL", &seq(&[ab.clone(), at("D")], Some(at("C"))));
        assert_eq!(c.unwrap(), vec![vec![seq(&[at("A"), at("B"), at("D")], Some(at("C")))]]);
        let c = premise_candidates(SystemId::FlPrime, "tensL", &seq(&[at("D"), ab.clone()], Some(at("C"))));
        assert!(c.unwrap().is_empty());
        let c = premise_candidates(SystemId::Fl, "tensL", &seq(&[at("D"), ab], Some(at("C"))));
        assert_eq!(c.unwrap(), vec![vec![seq(&[at("D"), at("A"), at("B")], Some(at("C")))]]);
    }

    #[test]
    fn tensr_enumerates_all_splits() {
        let goal = seq(&[at("A"), at("B")], Some(Formula::tensor(at("A"), at("B"))));
        let c = premise_candidates(SystemId::FlPrime, "tensR", &goal).unwrap();
        assert_eq!(
            c,
            vec![
                vec![seq(&[], Some(at("A"))), seq(&[at("A"), at("B")], Some(at("B")))],
                vec![seq(&[at("A")], Some(at("A"))), seq(&[at("B")], Some(at("B")))],
                vec![seq(&[at("A"), at("B")], Some(at("A"))), seq(&[], Some(at("B")))],
            ]
        );
    }

    #[test]
    fn implication_left_shapes() {
        let imp = Formula::imp(at("A"), at("B"));
        let coimp = Formula::coimp(at("A"), at("B"));
        // FL': G1, A->B, G2 |- C
        let c = premise_candidates(SystemId::FlPrime, "impL", &seq(&[at("A"), imp.clone()], Some(at("B"))));
        assert_eq!(c.unwrap(), vec![vec![seq(&[at("A")], Some(at("A"))), seq(&[at("B")], Some(at("B")))]]);
        let c = premise_candidates(SystemId::FlPrime, "impL", &seq(&[imp.clone(), at("A")], Some(at("B"))));
        assert_eq!(c.unwrap(), vec![vec![seq(&[], Some(at("A"))), seq(&[at("B"), at("A")], Some(at("B")))]]);
        // FL': A<-B, G1, G2 |- C
        let c = premise_candidates(SystemId::FlPrime, "coimpL", &seq(&[coimp.clone(), at("A")], Some(at("B"))));
        assert_eq!(c.unwrap()[1], vec![seq(&[at("A")], Some(at("A"))), seq(&[at("B")], Some(at("B")))]);
        // FL: G2, A->B, G1, G3 |- C
        let c = premise_candidates(SystemId::Fl, "impL", &seq(&[imp, at("A")], Some(at("B"))));
        assert_eq!(c.unwrap()[1], vec![seq(&[at("A")], Some(at("A"))), seq(&[at("B")], Some(at("B")))]);
        // FL: G2, G1, A<-B, G3 |- C
        let g = seq(&[at("D"), at("A"), coimp, at("E")], Some(at("C")));
        let inst = instances(SystemId::Fl, Rule::CoimpL, &g);
        assert_eq!(inst.len(), 3);
        assert_eq!(inst[1].forbidden_prefix, 1);
        assert_eq!(
            inst[1].premises,
            vec![seq(&[at("A")], Some(at("A"))), seq(&[at("D"), at("B"), at("E")], Some(at("C")))]
        );
    }

    #[test]
    fn negation_shapes() {
        let neg = Formula::neg(at("A"));
        let coneg = Formula::coneg(at("A"));
        // FL': G, neg A |-   and  coneg A, G |-
        assert_eq!(instances(SystemId::FlPrime, Rule::NegL, &seq(&[at("B"), neg.clone()], None)).len(), 1);
        assert!(instances(SystemId::FlPrime, Rule::NegL, &seq(&[neg.clone(), at("B")], None)).is_empty());
        assert_eq!(instances(SystemId::FlPrime, Rule::ConegL, &seq(&[coneg.clone(), at("B")], None)).len(), 1);
        // FL mirrors them
        assert_eq!(instances(SystemId::Fl, Rule::NegL, &seq(&[neg, at("B")], None)).len(), 1);
        assert_eq!(instances(SystemId::Fl, Rule::ConegL, &seq(&[at("B"), coneg], None)).len(), 1);
        // right rules
        let r = instances(SystemId::FlPrime, Rule::NegR, &seq(&[at("B")], Some(Formula::neg(at("A")))));
        assert_eq!(r[0].premises, vec![seq(&[at("A"), at("B")], None)]);
        let r = instances(SystemId::Fl, Rule::NegR, &seq(&[at("B")], Some(Formula::neg(at("A")))));
        assert_eq!(r[0].premises, vec![seq(&[at("B"), at("A")], None)]);
    }

    #[test]
    fn constants() {
        let bot_mid = seq(&[at("A"), Formula::bot()], Some(at("C")));
        assert!(instances(SystemId::FlPrime, Rule::BotL, &bot_mid).is_empty());
        assert_eq!(instances(SystemId::Fl, Rule::BotL, &bot_mid)[0].forbidden_prefix, 1);
        assert!(instances(SystemId::Fl, Rule::BotL, &seq(&[Formula::bot()], None)).is_empty());
        assert_eq!(instances(SystemId::Fl, Rule::TopR, &seq(&[at("A"), at("B")], Some(Formula::top()))).len(), 1);
        assert_eq!(instances(SystemId::Fl, Rule::OneR, &seq(&[], Some(Formula::one()))).len(), 1);
        assert_eq!(instances(SystemId::Fl, Rule::ZeroL, &seq(&[Formula::zero()], None)).len(), 1);
        let w = instances(SystemId::Fl, Rule::ZeroW, &seq(&[at("A")], Some(Formula::zero())));
        assert_eq!(w[0].premises, vec![seq(&[at("A")], None)]);
        let one_mid = seq(&[at("A"), Formula::one()], Some(at("A")));
        assert!(instances(SystemId::FlPrime, Rule::OneW, &one_mid).is_empty());
        assert_eq!(instances(SystemId::Fl, Rule::OneW, &one_mid)[0].premises, vec![seq(&[at("A")], Some(at("A")))]);
    }

    #[test]
    fn id_admits_compound_formulas() {
        let ab = Formula::tensor(at("A"), at("B"));
        assert_eq!(instances(SystemId::FlPrime, Rule::Id, &seq(std::slice::from_ref(&ab), Some(ab.clone()))).len(), 1);
        assert!(instances(SystemId::FlPrime, Rule::Id, &seq(&[at("A")], Some(at("B")))).is_empty());
    }
}
