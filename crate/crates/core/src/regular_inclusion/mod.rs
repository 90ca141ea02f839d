//! Deciders for `L(A1) ⊆ L(A2)` (and, through [`fainc_word`], for any right-hand
//! language with a decidable consistent quasiorder).
//!
//! * [`fainc_word`]: Kleene iteration over finite word vectors, converging under a
//!   [`WordQuasiorder`](crate::regular_orders::WordQuasiorder). Left orders drive a
//!   backward (predecessor) iteration, right orders a forward one.
//! * [`fainc_antichain`] and [`fainc_antichain_dual`]: the same iteration
//!   abstracted to antichains of `A2`-state sets.
//! * [`fainc_gfp`]: a greatest-fixpoint iteration over regular languages.

mod antichain;
mod gfp;
mod word;

pub use antichain::{
    alpha, antichain_pre, fainc_antichain, fainc_antichain_dual, fainc_antichain_dual_run, fainc_antichain_run,
    gamma_member, AntichainVector,
};
pub use gfp::{fainc_gfp, fainc_gfp_run, normalize, wpre_transform};
pub(crate) use word::covered;
pub use word::{epsilon_vector, fainc_word, fainc_word_run, post_transform, pre_transform, WordSet, WordVector};

use crate::foundations::KleeneStats;
use crate::symbol::Word;

/// Outcome of an inclusion check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub included: bool,
    /// A word of the left language outside the right one, when `included` is false.
    pub witness: Option<Word>,
    pub stats: KleeneStats,
}

/// Knobs shared by the `*_run` entry points.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Replace every component by its minor after each round (word algorithms only).
    pub prune: bool,
    /// Fail after this many applications of the iterated function.
    pub cap: Option<usize>,
    /// Record every iterate in [`Run::iterates`].
    pub trace: bool,
}

impl RunOptions {
    pub fn pruned() -> Self {
        RunOptions { prune: true, ..Default::default() }
    }

    pub fn traced() -> Self {
        RunOptions { trace: true, ..Default::default() }
    }
}

/// A verdict together with the fixpoint reached and, optionally, every iterate.
#[derive(Debug, Clone)]
pub struct Run<V> {
    pub verdict: Verdict,
    /// The value returned by the Kleene procedure.
    pub fixpoint: V,
    /// `a, f(a), …, fixpoint` when tracing was requested.
    pub iterates: Vec<V>,
}
