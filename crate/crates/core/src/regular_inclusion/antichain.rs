use std::cell::RefCell;

use super::{Run, RunOptions, Verdict};
use crate::automata::{Nfa, StateSet};
use crate::error::Result;
use crate::foundations::{insert_tagged, minor, tagged_sqsubseteq, Antichain, Kleene, Tagged};
use crate::symbol::{Symbol, Word};

/// One antichain of witness-tagged `A2`-state sets per state of `A1`.
pub type AntichainVector = Vec<Vec<Tagged<StateSet>>>;

/// `α(X) = ⌊{pre_u(F2) | u ∈ X}⌋` under `⊆`.
pub fn alpha<'a>(a2: &Nfa, xs: impl IntoIterator<Item = &'a Word>) -> Antichain<StateSet> {
    let subset = |x: &StateSet, y: &StateSet| x.is_subset(y);
    minor(xs.into_iter().map(|u| pre_lenient_word(a2, u, a2.finals())), &subset)
}

/// `v ∈ γ(S)`, i.e. some element of `S` is included in `pre_v(F2)`.
pub fn gamma_member(a2: &Nfa, s: &[StateSet], v: &[Symbol]) -> bool {
    let k = pre_lenient_word(a2, v, a2.finals());
    s.iter().any(|y| y.is_subset(&k))
}

fn pre_lenient_word(a2: &Nfa, u: &[Symbol], x: &StateSet) -> StateSet {
    u.iter().rev().fold(x.clone(), |s, &a| a2.pre_lenient(a, &s))
}

/// The two antichain domains: `⟨℘(Q2), ⊆⟩` with `pre`, and `⟨℘(Q2), ⊇⟩` with `cpre`.
#[derive(Clone, Copy)]
struct Domain<'a> {
    a2: &'a Nfa,
    dual: bool,
}

impl Domain<'_> {
    /// The domain order; `⊑` and minors are taken with respect to it.
    fn le(&self, x: &StateSet, y: &StateSet) -> bool {
        if self.dual {
            y.is_subset(x)
        } else {
            x.is_subset(y)
        }
    }

    fn base(&self) -> StateSet {
        if self.dual {
            self.a2.finals().complement()
        } else {
            self.a2.finals().clone()
        }
    }

    fn step(&self, a: Symbol, s: &StateSet) -> StateSet {
        if self.dual {
            self.a2.pre_lenient(a, &s.complement()).complement()
        } else {
            self.a2.pre_lenient(a, s)
        }
    }

    fn rejects(&self, s: &StateSet) -> bool {
        if self.dual {
            self.a2.initial().is_subset(s)
        } else {
            !s.intersects(self.a2.initial())
        }
    }

    fn pre(&self, a1: &Nfa, x: &AntichainVector, out: &mut AntichainVector) {
        for &(q, a, q2) in a1.transitions() {
            for e in &x[q2] {
                let mut w = Vec::with_capacity(e.witness.len() + 1);
                w.push(a);
                w.extend_from_slice(&e.witness);
                insert_tagged(&mut out[q], self.step(a, &e.key), w, |x, y| self.le(x, y));
            }
        }
    }

    fn run(&self, a1: &Nfa, opts: &RunOptions) -> Result<Run<AntichainVector>> {
        let n = a1.num_states();
        let base: AntichainVector = (0..n)
            .map(|q| match a1.finals().contains(q) {
                true => vec![Tagged { key: self.base(), witness: Vec::new() }],
                false => Vec::new(),
            })
            .collect();
        let f = |x: &AntichainVector| {
            let mut y = base.clone();
            self.pre(a1, x, &mut y);
            Ok(y)
        };
        let conv = |fx: &AntichainVector, x: &AntichainVector| {
            Ok(fx.iter().zip(x).all(|(fq, xq)| tagged_sqsubseteq(fq, xq, |a, b| self.le(a, b))))
        };
        let iterates = RefCell::new(Vec::new());
        let mut k =
            Kleene::new().cap(opts.cap).measure(|x: &AntichainVector| x.iter().map(Vec::len).max().unwrap_or(0));
        if opts.trace {
            k = k.observe(|x: &AntichainVector| iterates.borrow_mut().push(x.clone()));
        }
        let (fixpoint, stats) = k.run(conv, f, vec![Vec::new(); n])?;
        let witness = a1
            .initial()
            .iter()
            .flat_map(|q| fixpoint[q].iter())
            .find(|e| self.rejects(&e.key))
            .map(|e| e.witness.clone());
        Ok(Run {
            verdict: Verdict { included: witness.is_none(), witness, stats },
            fixpoint,
            iterates: iterates.into_inner(),
        })
    }
}

/// `Pre^{A2}_{A1}(X)_q = ⌊{pre_a(S) | q –a→ q', S ∈ X_{q'}}⌋`, propagating witness tags.
pub fn antichain_pre(a1: &Nfa, a2: &Nfa, x: &AntichainVector) -> AntichainVector {
    let mut out = vec![Vec::new(); a1.num_states()];
    Domain { a2, dual: false }.pre(a1, x, &mut out);
    out
}

/// Antichain inclusion check over `⟨℘(Q2), ⊆⟩`.
///
/// Symbols of `A1` missing from `A2` are allowed: their predecessor sets are empty.
pub fn fainc_antichain(a1: &Nfa, a2: &Nfa) -> Result<Verdict> {
    Ok(fainc_antichain_run(a1, a2, &RunOptions::default())?.verdict)
}

pub fn fainc_antichain_run(a1: &Nfa, a2: &Nfa, opts: &RunOptions) -> Result<Run<AntichainVector>> {
    Domain { a2, dual: false }.run(a1, opts)
}

/// The dual check over `⟨℘(Q2), ⊇⟩` with `cpre_a(S) = (pre_a(Sᶜ))ᶜ`.
pub fn fainc_antichain_dual(a1: &Nfa, a2: &Nfa) -> Result<Verdict> {
    Ok(fainc_antichain_dual_run(a1, a2, &RunOptions::default())?.verdict)
}

pub fn fainc_antichain_dual_run(a1: &Nfa, a2: &Nfa, opts: &RunOptions) -> Result<Run<AntichainVector>> {
    Domain { a2, dual: true }.run(a1, opts)
}
