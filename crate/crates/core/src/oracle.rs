//! Brute-force reference deciders for differential testing.
//!
//! Nothing here uses the bit-set, antichain or quasiorder machinery: automata
//! are read through their transition lists into plain ordered sets.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use crate::automata::Nfa;
use crate::grammars::{Cfg, GSym};
use crate::ocn::{Config, Ocn};
use crate::symbol::{concat, shortlex, Symbol, Word};

/// Plain adjacency view of an automaton.
struct Raw {
    initial: BTreeSet<usize>,
    finals: BTreeSet<usize>,
    delta: BTreeMap<(usize, Symbol), BTreeSet<usize>>,
}

impl Raw {
    fn of(a: &Nfa) -> Raw {
        let mut delta: BTreeMap<(usize, Symbol), BTreeSet<usize>> = BTreeMap::new();
        for &(p, s, q) in a.transitions() {
            delta.entry((p, s)).or_default().insert(q);
        }
        Raw { initial: a.initial().iter().collect(), finals: a.finals().iter().collect(), delta }
    }

    fn step(&self, set: &BTreeSet<usize>, s: Symbol) -> BTreeSet<usize> {
        set.iter().filter_map(|&p| self.delta.get(&(p, s))).flatten().copied().collect()
    }

    fn accepts(&self, w: &[Symbol]) -> bool {
        let mut cur = self.initial.clone();
        for &s in w {
            cur = self.step(&cur, s);
        }
        cur.iter().any(|q| self.finals.contains(q))
    }
}

fn sorted_union(a: &[Symbol], b: &[Symbol]) -> Vec<Symbol> {
    a.iter().chain(b).copied().collect::<BTreeSet<_>>().into_iter().collect()
}

/// Decides `L(A1) ⊆ L(A2)` by breadth-first search of `A1 × det(A2)` for a pair
/// that is final in `A1` and non-final in the subset automaton of `A2`.
/// The witness is the shortest, then lexicographically least, counterexample.
pub fn oracle_nfa_inclusion(a1: &Nfa, a2: &Nfa) -> (bool, Option<Word>) {
    let (r1, r2) = (Raw::of(a1), Raw::of(a2));
    let sigma = sorted_union(a1.alphabet(), a2.alphabet());
    let mut seen: HashSet<(usize, BTreeSet<usize>)> = HashSet::new();
    let mut queue = VecDeque::new();
    for &q in &r1.initial {
        if seen.insert((q, r2.initial.clone())) {
            queue.push_back((q, r2.initial.clone(), Vec::new()));
        }
    }
    while let Some((q, d, w)) = queue.pop_front() {
        if r1.finals.contains(&q) && d.iter().all(|p| !r2.finals.contains(p)) {
            return (false, Some(w));
        }
        for &s in &sigma {
            let d2 = r2.step(&d, s);
            for &q2 in r1.delta.get(&(q, s)).into_iter().flatten() {
                if seen.insert((q2, d2.clone())) {
                    let mut ws = w.clone();
                    ws.push(s);
                    queue.push_back((q2, d2.clone(), ws));
                }
            }
        }
    }
    (true, None)
}

/// The left-hand language of a bounded check.
#[derive(Clone, Copy)]
pub enum Language<'a> {
    Nfa(&'a Nfa),
    Cfg(&'a Cfg),
    Ocn(&'a Ocn, Config),
}

/// Result of a bounded check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounded {
    pub included: bool,
    pub witness: Option<Word>,
    /// True when `included` only means that no short counterexample exists.
    pub inconclusive: bool,
}

/// Enumerates the words of `left` up to length `maxlen` in shortlex order and
/// returns the first one rejected by `l2_member`.
pub fn oracle_bounded(left: Language<'_>, l2_member: impl Fn(&[Symbol]) -> bool, maxlen: usize) -> Bounded {
    let mut words = language_up_to(left, maxlen);
    words.sort_by(|u, v| shortlex(u, v));
    match words.into_iter().find(|w| !l2_member(w)) {
        Some(w) => Bounded { included: false, witness: Some(w), inconclusive: false },
        None => Bounded { included: true, witness: None, inconclusive: true },
    }
}

/// All words of length at most `maxlen` in the language.
pub fn language_up_to(left: Language<'_>, maxlen: usize) -> Vec<Word> {
    match left {
        Language::Nfa(a) => nfa_words(a, maxlen),
        Language::Cfg(g) => cfg_words(g, maxlen).into_iter().collect(),
        Language::Ocn(o, c) => ocn_words(o, c, maxlen),
    }
}

fn nfa_words(a: &Nfa, maxlen: usize) -> Vec<Word> {
    let raw = Raw::of(a);
    let mut out = Vec::new();
    let mut layer: Vec<(Word, BTreeSet<usize>)> = vec![(Vec::new(), raw.initial.clone())];
    for len in 0..=maxlen {
        let mut next = Vec::new();
        for (w, set) in layer {
            if set.iter().any(|q| raw.finals.contains(q)) {
                out.push(w.clone());
            }
            if len == maxlen {
                continue;
            }
            for &s in a.alphabet() {
                let t = raw.step(&set, s);
                if !t.is_empty() {
                    let mut ws = w.clone();
                    ws.push(s);
                    next.push((ws, t));
                }
            }
        }
        layer = next;
    }
    out
}

/// Words derivable in a general grammar, by a length-bounded closure:
/// each variable's set grows until no production adds a word of length ≤ `maxlen`.
pub fn cfg_words(g: &Cfg, maxlen: usize) -> BTreeSet<Word> {
    let n = g.names().len();
    let mut sets: Vec<BTreeSet<Word>> = vec![BTreeSet::new(); n];
    loop {
        let mut changed = false;
        for (x, rhs) in g.productions() {
            let mut partial: BTreeSet<Word> = BTreeSet::from([Vec::new()]);
            for sym in rhs {
                let mut next = BTreeSet::new();
                for p in &partial {
                    match sym {
                        GSym::Term(a) if p.len() < maxlen => {
                            next.insert(concat(p, &[*a]));
                        }
                        GSym::Term(_) => {}
                        GSym::Var(v) => {
                            for w in &sets[*v] {
                                if p.len() + w.len() <= maxlen {
                                    next.insert(concat(p, w));
                                }
                            }
                        }
                    }
                }
                partial = next;
            }
            for w in partial {
                changed |= sets[*x].insert(w);
            }
        }
        if !changed {
            return std::mem::take(&mut sets[0]);
        }
    }
}

/// Explicit configuration search: the set of configurations reachable from `c`
/// on `u`. Counters never exceed `c.counter + |u|`.
pub fn ocn_configurations(o: &Ocn, c: Config, u: &[Symbol]) -> BTreeSet<(usize, u64)> {
    let mut cur = BTreeSet::from([(c.state, c.counter)]);
    for &s in u {
        let mut next = BTreeSet::new();
        for &(q, n) in &cur {
            for &(p, b, d, q2) in o.transitions() {
                if p == q && b == s {
                    let m = n as i64 + d as i64;
                    if m >= 0 {
                        next.insert((q2, m as u64));
                    }
                }
            }
        }
        cur = next;
    }
    cur
}

/// `u ∈ T(c)` by explicit configuration search.
pub fn ocn_trace_bfs(o: &Ocn, c: Config, u: &[Symbol]) -> bool {
    !ocn_configurations(o, c, u).is_empty()
}

fn ocn_words(o: &Ocn, c: Config, maxlen: usize) -> Vec<Word> {
    let sigma: Vec<Symbol> = o.alphabet().to_vec();
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..maxlen {
        let mut next = Vec::new();
        for w in &layer {
            for &s in &sigma {
                let ws = concat(w, &[s]);
                if ocn_trace_bfs(o, c, &ws) {
                    next.push(ws);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Membership by direct simulation over ordered sets.
pub fn nfa_accepts(a: &Nfa, w: &[Symbol]) -> bool {
    Raw::of(a).accepts(w)
}

/// Membership in a general grammar, by bounded derivation closure.
pub fn cfg_accepts(g: &Cfg, w: &[Symbol]) -> bool {
    cfg_words(g, w.len()).contains(w)
}
