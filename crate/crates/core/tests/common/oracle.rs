//! Forward saturation oracle for cut-free derivability.
//!
//! Starting from the axioms, every non-cut rule is applied forwards to the
//! sequents derived so far until nothing new of size at most `max_size`
//! appears. The rule shapes are written out again here from the rule tables,
//! independently of the library's backward enumerator.

use std::collections::{HashMap, HashSet};

use lambek_core::{Formula, Sequent, SystemId};

/// All formulas over the given atoms (and the four constants) by size.
/// `by_size[k]` holds the formulas of size `k`.
pub fn formulas_by_size(atoms: &[&str], max: usize) -> Vec<Vec<Formula>> {
    let mut by_size: Vec<Vec<Formula>> = vec![Vec::new(); max + 1];
    if max == 0 {
        return by_size;
    }
    by_size[1] = atoms
        .iter()
        .map(|a| Formula::atom(a))
        .chain([Formula::one(), Formula::zero(), Formula::top(), Formula::bot()])
        .collect();
    for k in 2..=max {
        let mut out = Vec::new();
        for f in &by_size[k - 1] {
            out.push(Formula::neg(f.clone()));
            out.push(Formula::coneg(f.clone()));
        }
        for l in 1..k - 1 {
            let r = k - 1 - l;
            for a in &by_size[l] {
                for b in &by_size[r] {
                    out.push(Formula::imp(a.clone(), b.clone()));
                    out.push(Formula::coimp(a.clone(), b.clone()));
                    out.push(Formula::tensor(a.clone(), b.clone()));
                    out.push(Formula::with(a.clone(), b.clone()));
                    out.push(Formula::plus(a.clone(), b.clone()));
                }
            }
        }
        by_size[k] = out;
    }
    by_size
}

/// Every formula list whose sizes sum to at most `budget`.
pub fn contexts(by_size: &[Vec<Formula>], budget: usize) -> Vec<Vec<Formula>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![(Vec::new(), 0usize)];
    while let Some((ctx, used)) = frontier.pop() {
        for (k, fs) in by_size.iter().enumerate().skip(1) {
            if used + k > budget {
                break;
            }
            for f in fs {
                let mut next: Vec<Formula> = ctx.clone();
                next.push(f.clone());
                out.push(next.clone());
                frontier.push((next, used + k));
            }
        }
    }
    out
}

/// Every sequent of size at most `max_size` over the atoms.
pub fn all_sequents(atoms: &[&str], max_size: usize) -> Vec<Sequent> {
    let budget = max_size - 1;
    let by_size = formulas_by_size(atoms, budget);
    let mut out = Vec::new();
    for ctx in contexts(&by_size, budget) {
        let used: usize = ctx.iter().map(Formula::size).sum();
        out.push(Sequent::new(ctx.clone(), None));
        for fs in by_size.iter().take(budget - used + 1) {
            for f in fs {
                out.push(Sequent::new(ctx.clone(), Some(f.clone())));
            }
        }
    }
    out
}

fn size(s: &Sequent) -> usize {
    s.antecedent.iter().chain(s.succedent.iter()).map(Formula::size).sum::<usize>() + 1
}

fn join(parts: &[&[Formula]]) -> Vec<Formula> {
    parts.concat()
}

pub struct Saturation {
    pub system: SystemId,
    pub max_size: usize,
    derived: HashSet<Sequent>,
}

impl Saturation {
    pub fn contains(&self, s: &Sequent) -> bool {
        assert!(size(s) <= self.max_size, "{s} is outside the saturated universe");
        self.derived.contains(s)
    }

    pub fn len(&self) -> usize {
        self.derived.len()
    }
}

struct Builder {
    fl: bool,
    max: usize,
    by_size: Vec<Vec<Formula>>,
    layers: Vec<Vec<Sequent>>,
    seen: HashSet<Sequent>,
}

impl Builder {
    fn add(&mut self, s: Sequent) {
        let n = size(&s);
        if n <= self.max && !self.seen.contains(&s) {
            self.seen.insert(s.clone());
            self.layers[n].push(s);
        }
    }

    /// Positions where a left rule may introduce its principal formula
    /// into an antecedent of length `len`.
    fn slots(&self, len: usize) -> std::ops::RangeInclusive<usize> {
        if self.fl {
            0..=len
        } else {
            0..=0
        }
    }

    fn axioms(&mut self) {
        let budget = self.max - 1;
        for k in 1..=budget / 2 {
            for a in self.by_size[k].clone() {
                self.add(Sequent::new(vec![a.clone()], Some(a)));
            }
        }
        self.add(Sequent::new(vec![], Some(Formula::one())));
        self.add(Sequent::new(vec![Formula::zero()], None));
        for ctx in contexts(&self.by_size, budget - 1) {
            self.add(Sequent::new(ctx, Some(Formula::top())));
        }
        // bottom with a formula on the right, anywhere in fl and first in flp
        for ctx in contexts(&self.by_size, budget - 2) {
            let used: usize = ctx.iter().map(Formula::size).sum();
            for i in self.slots(ctx.len()) {
                let ant = join(&[&ctx[..i], &[Formula::bot()], &ctx[i..]]);
                for k in 1..=budget - 1 - used {
                    for c in self.by_size[k].clone() {
                        self.add(Sequent::new(ant.clone(), Some(c)));
                    }
                }
            }
        }
    }

    /// Side formulas that fit next to a premise of size `n` under a binary
    /// connective.
    fn side(&self, n: usize) -> Vec<Formula> {
        let room = self.max.saturating_sub(n + 1);
        self.by_size.iter().take(room + 1).flatten().cloned().collect()
    }

    fn unary(&mut self, p: &Sequent) {
        let n = size(p);
        let ant = &p.antecedent;
        let len = ant.len();
        match &p.succedent {
            None => {
                self.add(Sequent::new(ant.clone(), Some(Formula::zero())));
                if len > 0 {
                    let (first, last) = (&ant[0], &ant[len - 1]);
                    let (head, tail) = (ant[1..].to_vec(), ant[..len - 1].to_vec());
                    // flp: neg binds a hypothesis on the left, coneg on the right; fl swaps them
                    let (neg_r, coneg_r) = if self.fl {
                        (Sequent::new(tail.clone(), Some(Formula::neg(last.clone()))),
                         Sequent::new(head.clone(), Some(Formula::coneg(first.clone()))))
                    } else {
                        (Sequent::new(head.clone(), Some(Formula::neg(first.clone()))),
                         Sequent::new(tail.clone(), Some(Formula::coneg(last.clone()))))
                    };
                    self.add(neg_r);
                    self.add(coneg_r);
                }
            }
            Some(c) => {
                // refutations from a proved formula
                let (neg_l, coneg_l) = if self.fl {
                    (join(&[&[Formula::neg(c.clone())], ant]), join(&[ant, &[Formula::coneg(c.clone())]]))
                } else {
                    (join(&[ant, &[Formula::neg(c.clone())]]), join(&[&[Formula::coneg(c.clone())], ant]))
                };
                self.add(Sequent::new(neg_l, None));
                self.add(Sequent::new(coneg_l, None));

                // right implications
                if len > 0 {
                    let (first, last) = (&ant[0], &ant[len - 1]);
                    let (head, tail) = (ant[1..].to_vec(), ant[..len - 1].to_vec());
                    if self.fl {
                        self.add(Sequent::new(tail, Some(Formula::imp(last.clone(), c.clone()))));
                        self.add(Sequent::new(head, Some(Formula::coimp(first.clone(), c.clone()))));
                    } else {
                        self.add(Sequent::new(head, Some(Formula::imp(first.clone(), c.clone()))));
                        self.add(Sequent::new(tail, Some(Formula::coimp(last.clone(), c.clone()))));
                    }
                }

                // disjunction right
                for x in self.side(n) {
                    self.add(Sequent::new(ant.clone(), Some(Formula::plus(c.clone(), x.clone()))));
                    self.add(Sequent::new(ant.clone(), Some(Formula::plus(x, c.clone()))));
                }

                // 1-weakening, additive conjunction left and tensor left
                for i in self.slots(len) {
                    self.add(Sequent::new(join(&[&ant[..i], &[Formula::one()], &ant[i..]]), Some(c.clone())));
                }
                for i in self.slots(len.saturating_sub(1)) {
                    if i >= len {
                        break;
                    }
                    for x in self.side(n) {
                        for w in [Formula::with(ant[i].clone(), x.clone()), Formula::with(x.clone(), ant[i].clone())] {
                            self.add(Sequent::new(join(&[&ant[..i], &[w], &ant[i + 1..]]), Some(c.clone())));
                        }
                    }
                }
                for i in self.slots(len.saturating_sub(2)) {
                    if i + 1 >= len {
                        break;
                    }
                    let t = Formula::tensor(ant[i].clone(), ant[i + 1].clone());
                    self.add(Sequent::new(join(&[&ant[..i], &[t], &ant[i + 2..]]), Some(c.clone())));
                }
            }
        }
    }

    /// Multiplicative two-premise rules with `p` and `q` in that order.
    fn multiplicative(&mut self, p: &Sequent, q: &Sequent) {
        let (Some(a), Some(b)) = (&p.succedent, &q.succedent) else { return };
        let (g, d) = (&p.antecedent, &q.antecedent);
        self.add(Sequent::new(join(&[g, d]), Some(Formula::tensor(a.clone(), b.clone()))));

        // implication left from `p: G1 |- A` and `q: ..., B, ... |- C`
        for j in 0..d.len() {
            let (before, after) = (&d[..j], &d[j + 1..]);
            let imp = Formula::imp(a.clone(), d[j].clone());
            let coimp = Formula::coimp(a.clone(), d[j].clone());
            if self.fl {
                // G2, A->B, G1, G3 |- C  and  G2, G1, A<-B, G3 |- C
                self.add(Sequent::new(join(&[before, &[imp], g, after]), Some(b.clone())));
                self.add(Sequent::new(join(&[before, g, &[coimp], after]), Some(b.clone())));
            } else if j == 0 {
                // G1, A->B, G2 |- C  and  A<-B, G1, G2 |- C
                self.add(Sequent::new(join(&[g, &[imp], after]), Some(b.clone())));
                self.add(Sequent::new(join(&[&[coimp], g, after]), Some(b.clone())));
            }
        }
    }

    /// Additive two-premise rules. `p` and `q` come from the same bucket.
    fn additive(&mut self, p: &Sequent, q: &Sequent) {
        let (Some(a), Some(b)) = (&p.succedent, &q.succedent) else { return };
        let (g, d) = (&p.antecedent, &q.antecedent);
        if g == d {
            self.add(Sequent::new(g.clone(), Some(Formula::with(a.clone(), b.clone()))));
        }
        if a == b && g.len() == d.len() {
            let positions = if self.fl { g.len() } else { g.len().min(1) };
            for i in 0..positions {
                if g[..i] == d[..i] && g[i + 1..] == d[i + 1..] {
                    let o = Formula::plus(g[i].clone(), d[i].clone());
                    self.add(Sequent::new(join(&[&g[..i], &[o], &g[i + 1..]]), Some(a.clone())));
                }
            }
        }
    }
}

/// Buckets in which two derived sequents may be the premises of `andR` or
/// `orL`: the whole sequent minus its succedent, or minus one antecedent
/// position.
fn additive_keys(s: &Sequent) -> Vec<(Vec<Formula>, Option<Formula>, usize)> {
    let mut keys = vec![(s.antecedent.clone(), None, usize::MAX)];
    for i in 0..s.antecedent.len() {
        let mut rest = s.antecedent.clone();
        rest.remove(i);
        keys.push((rest, s.succedent.clone(), i));
    }
    keys
}

/// Saturates the universe of sequents of size at most `max_size` over `atoms`.
pub fn saturate(system: SystemId, atoms: &[&str], max_size: usize) -> Saturation {
    let mut b = Builder {
        fl: system == SystemId::Fl,
        max: max_size,
        by_size: formulas_by_size(atoms, max_size - 1),
        layers: vec![Vec::new(); max_size + 1],
        seen: HashSet::new(),
    };
    b.axioms();
    let mut buckets: HashMap<(Vec<Formula>, Option<Formula>, usize), Vec<Sequent>> = HashMap::new();
    // Every conclusion is larger than each of its premises, so once all
    // layers below n are closed, layer n is final.
    for n in 1..max_size {
        let mut k = 0;
        while k < b.layers[n].len() {
            let p = b.layers[n][k].clone();
            b.unary(&p);
            for m in 1..=n.min(max_size - n) {
                let upto = if m == n { k + 1 } else { b.layers[m].len() };
                for i in 0..upto {
                    let q = b.layers[m][i].clone();
                    b.multiplicative(&p, &q);
                    b.multiplicative(&q, &p);
                }
            }
            for key in additive_keys(&p) {
                let bucket = buckets.entry(key).or_default();
                bucket.push(p.clone());
                for q in bucket.clone() {
                    b.additive(&p, &q);
                    b.additive(&q, &p);
                }
            }
            k += 1;
        }
    }
    Saturation { system, max_size, derived: b.seen }
}
