use std::cell::RefCell;

use indexmap::IndexSet;

use super::{Run, RunOptions, Verdict};
use crate::automata::{Nfa, StateSet};
use crate::error::Result;
use crate::foundations::{try_minor, try_sqsubseteq, Kleene};
use crate::regular_orders::{Side, WordQuasiorder};
use crate::symbol::{Symbol, Word};

/// A finite set of words with deterministic (insertion) iteration order.
pub type WordSet = IndexSet<Word>;

/// One word set per state of `A1`.
pub type WordVector = Vec<WordSet>;

/// `{ε}` at the states of `at`, `∅` elsewhere.
pub fn epsilon_vector(n: usize, at: &StateSet) -> WordVector {
    (0..n).map(|q| if at.contains(q) { IndexSet::from([Vec::new()]) } else { IndexSet::new() }).collect()
}

/// `Pre(X)_q = ⋃_{q –a→ q'} a·X_{q'}`.
pub fn pre_transform(a1: &Nfa, x: &[WordSet]) -> WordVector {
    let mut out = vec![WordSet::new(); a1.num_states()];
    for &(q, a, q2) in a1.transitions() {
        for w in &x[q2] {
            let mut aw = Vec::with_capacity(w.len() + 1);
            aw.push(a);
            aw.extend_from_slice(w);
            out[q].insert(aw);
        }
    }
    out
}

/// `Post(X)_{q'} = ⋃_{q –a→ q'} X_q·a`.
pub fn post_transform(a1: &Nfa, x: &[WordSet]) -> WordVector {
    let mut out = vec![WordSet::new(); a1.num_states()];
    for &(q, a, q2) in a1.transitions() {
        for w in &x[q] {
            let mut wa = w.clone();
            wa.push(a);
            out[q2].insert(wa);
        }
    }
    out
}

/// `X ⊑ Y` for word sets. Words of `X` already in `Y` are covered by
/// reflexivity; the others are compared against `⌊Y⌋` only, which dominates `Y`.
pub(crate) fn covered(x: &WordSet, y: &WordSet, mut leq: impl FnMut(&Word, &Word) -> Result<bool>) -> Result<bool> {
    let mut fresh = x.iter().filter(|w| !y.contains(*w)).peekable();
    if fresh.peek().is_none() {
        return Ok(true);
    }
    let base = try_minor(y.iter(), |a: &&Word, b: &&Word| leq(a, b))?;
    try_sqsubseteq(fresh, base, leq)
}

/// Word-based inclusion check of `L(A1)` into the language decided by `l2_member`.
///
/// `qo` must be consistent with that language; its side selects a backward
/// (left) or forward (right) iteration.
pub fn fainc_word(
    a1: &Nfa,
    l2_member: impl Fn(&[Symbol]) -> bool,
    qo: &dyn WordQuasiorder,
    prune: bool,
) -> Result<Verdict> {
    Ok(fainc_word_run(a1, l2_member, qo, &RunOptions { prune, ..Default::default() })?.verdict)
}

/// [`fainc_word`] returning the fixpoint and, if requested, the iterates.
///
/// On failure the witness is the first failing word that is minimal, under
/// `qo`, among all failing words of the checked components.
pub fn fainc_word_run(
    a1: &Nfa,
    l2_member: impl Fn(&[Symbol]) -> bool,
    qo: &dyn WordQuasiorder,
    opts: &RunOptions,
) -> Result<Run<WordVector>> {
    let n = a1.num_states();
    let left = qo.side() != Side::Right;
    let (seed, checked) = if left { (a1.finals(), a1.initial()) } else { (a1.initial(), a1.finals()) };
    let base = epsilon_vector(n, seed);
    let leq = |u: &Word, v: &Word| qo.leq(u, v);

    let f = |x: &WordVector| -> Result<WordVector> {
        let step = if left { pre_transform(a1, x) } else { post_transform(a1, x) };
        let mut y = base.clone();
        for (yq, sq) in y.iter_mut().zip(step) {
            yq.extend(sq);
        }
        if opts.prune {
            for yq in y.iter_mut() {
                *yq = try_minor(std::mem::take(yq), leq)?.into_iter().collect();
            }
        }
        Ok(y)
    };
    let conv = |fx: &WordVector, x: &WordVector| -> Result<bool> {
        for (fq, xq) in fx.iter().zip(x) {
            if !covered(fq, xq, leq)? {
                return Ok(false);
            }
        }
        Ok(true)
    };

    let iterates = RefCell::new(Vec::new());
    let mut k = Kleene::new().cap(opts.cap).measure(|x: &WordVector| x.iter().map(|s| s.len()).max().unwrap_or(0));
    if opts.trace {
        k = k.observe(|x: &WordVector| iterates.borrow_mut().push(x.clone()));
    }
    let (fixpoint, stats) = k.run(conv, f, vec![WordSet::new(); n])?;

    let failing: Vec<Word> =
        checked.iter().flat_map(|q| fixpoint[q].iter()).filter(|w| !l2_member(w)).cloned().collect();
    let witness = match failing.is_empty() {
        true => None,
        false => try_minor(failing, leq)?.into_iter().next(),
    };
    Ok(Run {
        verdict: Verdict { included: witness.is_none(), witness, stats },
        fixpoint,
        iterates: iterates.into_inner(),
    })
}
