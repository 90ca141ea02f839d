//! Word quasiorders consistent with a regular language `L(A)`.
//!
//! Left orders compare the sets `pre_u(F)`, right orders the sets `post_u(I)`.
//! The state-based orders compare them by inclusion, the simulation-based ones
//! through the `∀∃` lifting of a simulation, and the Nerode orders by inclusion
//! of the quotients they denote.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::automata::{forall_exists_leq, Nfa, StateRelation, StateSet};
use crate::error::{Error, Result};
use crate::regular_inclusion::fainc_antichain;
use crate::symbol::{Symbol, Word};

/// Which concatenation a quasiorder is monotone for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `u ≤ v ⇒ au ≤ av`.
    Left,
    /// `u ≤ v ⇒ ua ≤ va`.
    Right,
    /// Both of the above.
    Both,
}

/// A decidable quasiorder on words.
pub trait WordQuasiorder {
    fn side(&self) -> Side;
    fn name(&self) -> &'static str;
    /// `u ≤ v`. Fails on symbols the order knows nothing about.
    fn leq(&self, u: &[Symbol], v: &[Symbol]) -> Result<bool>;
}

impl<Q: WordQuasiorder + ?Sized> WordQuasiorder for &Q {
    fn side(&self) -> Side {
        (**self).side()
    }
    fn name(&self) -> &'static str {
        (**self).name()
    }
    fn leq(&self, u: &[Symbol], v: &[Symbol]) -> Result<bool> {
        (**self).leq(u, v)
    }
}

impl<Q: WordQuasiorder + ?Sized> WordQuasiorder for Box<Q> {
    fn side(&self) -> Side {
        (**self).side()
    }
    fn name(&self) -> &'static str {
        (**self).name()
    }
    fn leq(&self, u: &[Symbol], v: &[Symbol]) -> Result<bool> {
        (**self).leq(u, v)
    }
}

/// Memoized `pre_u(F)` (left) or `post_u(I)` (right). Each key is one step
/// away from the key of the word with its outer letter removed.
#[derive(Clone)]
struct StateKeys {
    nfa: Nfa,
    left: bool,
    memo: RefCell<HashMap<Word, StateSet>>,
}

impl StateKeys {
    fn new(nfa: &Nfa, left: bool) -> Self {
        StateKeys { nfa: nfa.clone(), left, memo: RefCell::default() }
    }

    fn key(&self, u: &[Symbol]) -> Result<StateSet> {
        if let Some(k) = self.memo.borrow().get(u) {
            return Ok(k.clone());
        }
        let k = match (u.split_first(), u.split_last()) {
            (None, _) if self.left => self.nfa.finals().clone(),
            (None, _) => self.nfa.initial().clone(),
            (Some((&a, rest)), _) if self.left => self.nfa.pre_step(a, &self.key(rest)?)?,
            (_, Some((&a, rest))) => self.nfa.post_step(a, &self.key(rest)?)?,
            _ => unreachable!(),
        };
        self.memo.borrow_mut().insert(u.to_vec(), k.clone());
        Ok(k)
    }

    fn side(&self) -> Side {
        if self.left {
            Side::Left
        } else {
            Side::Right
        }
    }
}

/// `u ≤ v ⟺ pre_u(F) ⊆ pre_v(F)` (left) or `post_u(I) ⊆ post_v(I)` (right).
#[derive(Clone)]
pub struct StateOrder {
    keys: StateKeys,
}

impl StateOrder {
    /// The state set abstracting `u`.
    pub fn key(&self, u: &[Symbol]) -> Result<StateSet> {
        self.keys.key(u)
    }
}

impl WordQuasiorder for StateOrder {
    fn side(&self) -> Side {
        self.keys.side()
    }
    fn name(&self) -> &'static str {
        "state"
    }
    fn leq(&self, u: &[Symbol], v: &[Symbol]) -> Result<bool> {
        Ok(self.keys.key(u)?.is_subset(&self.keys.key(v)?))
    }
}

/// Left state order of `A2`.
pub fn state_left(a2: &Nfa) -> StateOrder {
    StateOrder { keys: StateKeys::new(a2, true) }
}

/// Right state order of `A2`.
pub fn state_right(a2: &Nfa) -> StateOrder {
    StateOrder { keys: StateKeys::new(a2, false) }
}

/// `u ≤ v ⟺ key(u) ≼^{∀∃} key(v)` for a simulation `≼`.
#[derive(Clone)]
pub struct SimOrder {
    keys: StateKeys,
    sim: StateRelation,
}

impl SimOrder {
    pub fn key(&self, u: &[Symbol]) -> Result<StateSet> {
        self.keys.key(u)
    }

    pub fn simulation(&self) -> &StateRelation {
        &self.sim
    }
}

impl WordQuasiorder for SimOrder {
    fn side(&self) -> Side {
        self.keys.side()
    }
    fn name(&self) -> &'static str {
        "sim"
    }
    fn leq(&self, u: &[Symbol], v: &[Symbol]) -> Result<bool> {
        Ok(forall_exists_leq(&self.keys.key(u)?, &self.keys.key(v)?, &self.sim))
    }
}

/// Left simulation order, using the maximal simulation of the reversed automaton.
pub fn sim_left(a2: &Nfa) -> SimOrder {
    SimOrder { keys: StateKeys::new(a2, true), sim: a2.reverse().max_simulation() }
}

/// Right simulation order, using the maximal simulation of `A2`.
pub fn sim_right(a2: &Nfa) -> SimOrder {
    SimOrder { keys: StateKeys::new(a2, false), sim: a2.max_simulation() }
}

/// Nerode orders: `Lu⁻¹ ⊆ Lv⁻¹` (left) or `u⁻¹L ⊆ v⁻¹L` (right), decided by
/// antichain inclusion between copies of `A2` with moved final or initial states.
#[derive(Clone)]
pub struct NerodeOrder {
    keys: StateKeys,
    decided: RefCell<HashMap<(StateSet, StateSet), bool>>,
}

impl NerodeOrder {
    pub fn key(&self, u: &[Symbol]) -> Result<StateSet> {
        self.keys.key(u)
    }

    fn automaton(&self, k: &StateSet) -> Nfa {
        if self.keys.left {
            self.keys.nfa.with_finals(k)
        } else {
            self.keys.nfa.with_initial(k)
        }
    }

    fn keys_leq(&self, ku: StateSet, kv: StateSet) -> Result<bool> {
        if ku.is_subset(&kv) {
            return Ok(true);
        }
        let pair = (ku, kv);
        if let Some(&b) = self.decided.borrow().get(&pair) {
            return Ok(b);
        }
        let b = fainc_antichain(&self.automaton(&pair.0), &self.automaton(&pair.1))?.included;
        self.decided.borrow_mut().insert(pair, b);
        Ok(b)
    }
}

impl WordQuasiorder for NerodeOrder {
    fn side(&self) -> Side {
        self.keys.side()
    }
    fn name(&self) -> &'static str {
        "nerode"
    }
    fn leq(&self, u: &[Symbol], v: &[Symbol]) -> Result<bool> {
        self.keys_leq(self.keys.key(u)?, self.keys.key(v)?)
    }
}

/// Left Nerode order of `L(A2)`.
pub fn nerode_left(a2: &Nfa) -> NerodeOrder {
    NerodeOrder { keys: StateKeys::new(a2, true), decided: RefCell::default() }
}

/// Right Nerode order of `L(A2)`.
pub fn nerode_right(a2: &Nfa) -> NerodeOrder {
    NerodeOrder { keys: StateKeys::new(a2, false), decided: RefCell::default() }
}

/// Whether `q1.leq(u,v) ⇒ q2.leq(u,v)` for every pair of sampled words.
pub fn refines(q1: &dyn WordQuasiorder, q2: &dyn WordQuasiorder, samples: &[Word]) -> Result<bool> {
    for u in samples {
        for v in samples {
            if q1.leq(u, v)? && !q2.leq(u, v)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The regular-language order families, selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    State,
    Sim,
    Nerode,
}

impl OrderKind {
    pub const ALL: [OrderKind; 3] = [OrderKind::State, OrderKind::Sim, OrderKind::Nerode];

    /// Builds the order of this family for `A2` on the given side (`Both` is treated as `Left`).
    pub fn build(self, a2: &Nfa, side: Side) -> Box<dyn WordQuasiorder> {
        let left = side != Side::Right;
        match (self, left) {
            (OrderKind::State, true) => Box::new(state_left(a2)),
            (OrderKind::State, false) => Box::new(state_right(a2)),
            (OrderKind::Sim, true) => Box::new(sim_left(a2)),
            (OrderKind::Sim, false) => Box::new(sim_right(a2)),
            (OrderKind::Nerode, true) => Box::new(nerode_left(a2)),
            (OrderKind::Nerode, false) => Box::new(nerode_right(a2)),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            OrderKind::State => "state",
            OrderKind::Sim => "sim",
            OrderKind::Nerode => "nerode",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OrderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "state" => Ok(OrderKind::State),
            "sim" => Ok(OrderKind::Sim),
            "nerode" => Ok(OrderKind::Nerode),
            other => Err(Error::Invalid(format!("unknown order `{other}`"))),
        }
    }
}
