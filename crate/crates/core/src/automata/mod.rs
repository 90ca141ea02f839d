//! Nondeterministic finite automata over token alphabets.
//!
//! States are dense indices; every state set is a [`StateSet`] bit vector.

mod stateset;

pub use stateset::{compose, forall_exists_leq, StateRelation, StateSet};

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::symbol::Symbol;

/// A finite automaton `⟨Q, Σ, δ, I, F⟩` without ε-transitions.
#[derive(Clone)]
pub struct Nfa {
    names: Vec<String>,
    alphabet: Vec<Symbol>,
    initial: StateSet,
    finals: StateSet,
    transitions: Vec<(usize, Symbol, usize)>,
    // Indexed by [symbol position][state].
    succ: Vec<Vec<StateSet>>,
    pred: Vec<Vec<StateSet>>,
}

impl PartialEq for Nfa {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
            && self.alphabet == other.alphabet
            && self.initial == other.initial
            && self.finals == other.finals
            && self.transitions == other.transitions
    }
}

impl Eq for Nfa {}

impl fmt::Debug for Nfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn sorted_alphabet(symbols: impl IntoIterator<Item = Symbol>) -> Vec<Symbol> {
    let set: BTreeSet<Symbol> = symbols.into_iter().collect();
    set.into_iter().collect()
}

impl Nfa {
    /// Builds an automaton from indexed parts. Transition labels must belong to `alphabet`.
    pub fn new(
        names: Vec<String>,
        alphabet: impl IntoIterator<Item = Symbol>,
        initial: impl IntoIterator<Item = usize>,
        finals: impl IntoIterator<Item = usize>,
        transitions: impl IntoIterator<Item = (usize, Symbol, usize)>,
    ) -> Result<Nfa> {
        let n = names.len();
        let mut seen = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if seen.insert(name.as_str(), i).is_some() {
                return Err(Error::Invalid(format!("duplicate state `{name}`")));
            }
        }
        let alphabet = sorted_alphabet(alphabet);
        let check = |q: usize| {
            if q < n {
                Ok(q)
            } else {
                Err(Error::Invalid(format!("state index {q} out of range")))
            }
        };
        let initial = StateSet::from_states(n, initial.into_iter().map(check).collect::<Result<Vec<_>>>()?);
        let finals = StateSet::from_states(n, finals.into_iter().map(check).collect::<Result<Vec<_>>>()?);
        let mut trans: Vec<(usize, Symbol, usize)> = Vec::new();
        for (p, a, q) in transitions {
            check(p)?;
            check(q)?;
            if !alphabet.contains(&a) {
                return Err(Error::UnknownSymbol(a.as_str().to_owned()));
            }
            trans.push((p, a, q));
        }
        trans.sort();
        trans.dedup();
        let mut succ = vec![vec![StateSet::empty(n); n]; alphabet.len()];
        let mut pred = vec![vec![StateSet::empty(n); n]; alphabet.len()];
        for &(p, a, q) in &trans {
            let i = alphabet.iter().position(|&b| b == a).unwrap();
            succ[i][p].insert(q);
            pred[i][q].insert(p);
        }
        Ok(Nfa { names, alphabet, initial, finals, transitions: trans, succ, pred })
    }

    pub fn builder() -> NfaBuilder {
        NfaBuilder::default()
    }

    /// The automaton with a single initial, accepting state looping on every symbol.
    pub fn universal(alphabet: &[Symbol]) -> Nfa {
        Nfa::new(vec!["u".into()], alphabet.iter().copied(), [0], [0], alphabet.iter().map(|&a| (0, a, 0)))
            .expect("well-formed")
    }

    /// An automaton accepting nothing.
    pub fn empty(alphabet: &[Symbol]) -> Nfa {
        Nfa::new(Vec::new(), alphabet.iter().copied(), [], [], []).expect("well-formed")
    }

    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    pub fn state_name(&self, q: usize) -> &str {
        &self.names[q]
    }

    pub fn state_names(&self) -> &[String] {
        &self.names
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `Σ`, sorted by token.
    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn initial(&self) -> &StateSet {
        &self.initial
    }

    pub fn finals(&self) -> &StateSet {
        &self.finals
    }

    /// Transitions sorted by source, label and target.
    pub fn transitions(&self) -> &[(usize, Symbol, usize)] {
        &self.transitions
    }

    pub fn empty_set(&self) -> StateSet {
        StateSet::empty(self.num_states())
    }

    fn sym_index(&self, a: Symbol) -> Option<usize> {
        self.alphabet.iter().position(|&b| b == a)
    }

    fn known(&self, a: Symbol) -> Result<usize> {
        self.sym_index(a).ok_or_else(|| Error::UnknownSymbol(a.as_str().to_owned()))
    }

    /// `δ(q, a)`; empty for symbols outside `Σ`.
    pub fn successors(&self, q: usize, a: Symbol) -> StateSet {
        match self.sym_index(a) {
            Some(i) => self.succ[i][q].clone(),
            None => self.empty_set(),
        }
    }

    /// `pre_a(X) = {q | δ(q,a) ∩ X ≠ ∅}`.
    pub fn pre_step(&self, a: Symbol, x: &StateSet) -> Result<StateSet> {
        let i = self.known(a)?;
        Ok(self.pre_at(i, x))
    }

    /// As [`Nfa::pre_step`], but a symbol outside `Σ` yields `∅`.
    pub fn pre_lenient(&self, a: Symbol, x: &StateSet) -> StateSet {
        match self.sym_index(a) {
            Some(i) => self.pre_at(i, x),
            None => self.empty_set(),
        }
    }

    fn pre_at(&self, i: usize, x: &StateSet) -> StateSet {
        let mut out = self.empty_set();
        for q in x.iter() {
            out.union_with(&self.pred[i][q]);
        }
        out
    }

    /// `post_a(X) = ⋃_{q∈X} δ(q,a)`.
    pub fn post_step(&self, a: Symbol, x: &StateSet) -> Result<StateSet> {
        let i = self.known(a)?;
        Ok(self.post_at(i, x))
    }

    /// As [`Nfa::post_step`], but a symbol outside `Σ` yields `∅`.
    pub fn post_lenient(&self, a: Symbol, x: &StateSet) -> StateSet {
        match self.sym_index(a) {
            Some(i) => self.post_at(i, x),
            None => self.empty_set(),
        }
    }

    fn post_at(&self, i: usize, x: &StateSet) -> StateSet {
        let mut out = self.empty_set();
        for q in x.iter() {
            out.union_with(&self.succ[i][q]);
        }
        out
    }

    /// `pre_u(X)`, folding [`Nfa::pre_step`] from the last symbol of `u` to the first.
    pub fn pre_word(&self, u: &[Symbol], x: &StateSet) -> Result<StateSet> {
        let mut s = x.clone();
        for &a in u.iter().rev() {
            s = self.pre_step(a, &s)?;
        }
        Ok(s)
    }

    /// `post_u(X)`.
    pub fn post_word(&self, u: &[Symbol], x: &StateSet) -> Result<StateSet> {
        let mut s = x.clone();
        for &a in u {
            s = self.post_step(a, &s)?;
        }
        Ok(s)
    }

    /// `u ∈ L(A)`. Words using symbols outside `Σ` are rejected.
    pub fn member(&self, u: &[Symbol]) -> bool {
        let mut s = self.initial.clone();
        for &a in u {
            s = self.post_lenient(a, &s);
            if s.is_empty() {
                return false;
            }
        }
        s.intersects(&self.finals)
    }

    pub fn accepts_epsilon(&self) -> bool {
        self.initial.intersects(&self.finals)
    }

    /// Flips every transition and swaps initial and final states.
    pub fn reverse(&self) -> Nfa {
        Nfa::new(
            self.names.clone(),
            self.alphabet.iter().copied(),
            self.finals.iter(),
            self.initial.iter(),
            self.transitions.iter().map(|&(p, a, q)| (q, a, p)),
        )
        .expect("reversal preserves well-formedness")
    }

    /// `ctx(u) = {(q,q') | q' ∈ post_u({q})}`.
    pub fn ctx(&self, u: &[Symbol]) -> Result<StateRelation> {
        let mut r = StateRelation::identity(self.num_states());
        for &a in u {
            self.known(a)?;
            r = r.compose(&self.ctx_lenient(a));
        }
        Ok(r)
    }

    /// `ctx(a)` for a single symbol; empty for symbols outside `Σ`.
    pub fn ctx_lenient(&self, a: Symbol) -> StateRelation {
        match self.sym_index(a) {
            Some(i) => StateRelation::from_rows(self.succ[i].clone()),
            None => StateRelation::empty(self.num_states()),
        }
    }

    /// The largest simulation: `p ≼ q` implies `p ∈ F ⇒ q ∈ F` and every
    /// `p –a→ p'` is matched by some `q –a→ q'` with `p' ≼ q'`.
    pub fn max_simulation(&self) -> StateRelation {
        let n = self.num_states();
        let mut rel = StateRelation::empty(n);
        for p in 0..n {
            for q in 0..n {
                if !self.finals.contains(p) || self.finals.contains(q) {
                    rel.insert(p, q);
                }
            }
        }
        loop {
            let mut changed = false;
            for p in 0..n {
                for q in rel.row(p).clone().iter() {
                    let matched = (0..self.alphabet.len())
                        .all(|i| self.succ[i][p].iter().all(|p2| rel.row(p2).intersects(&self.succ[i][q])));
                    if !matched {
                        rel.remove(p, q);
                        changed = true;
                    }
                }
            }
            if !changed {
                return rel;
            }
        }
    }

    /// The same automaton over `Σ ∪ extra`.
    pub fn with_alphabet(&self, extra: &[Symbol]) -> Nfa {
        Nfa::new(
            self.names.clone(),
            self.alphabet.iter().chain(extra).copied(),
            self.initial.iter(),
            self.finals.iter(),
            self.transitions.iter().copied(),
        )
        .expect("extension preserves well-formedness")
    }

    /// The same automaton with initial states `init`.
    pub fn with_initial(&self, init: &StateSet) -> Nfa {
        let mut a = self.clone();
        a.initial = init.clone();
        a
    }

    /// The same automaton with final states `fin`.
    pub fn with_finals(&self, fin: &StateSet) -> Nfa {
        let mut a = self.clone();
        a.finals = fin.clone();
        a
    }

    /// Accessible pair construction; `L = L(A) ∩ L(B)` over `Σ_A ∪ Σ_B`.
    pub fn product(&self, other: &Nfa) -> Nfa {
        let alphabet = sorted_alphabet(self.alphabet.iter().chain(&other.alphabet).copied());
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut pairs = Vec::new();
        let mut queue = VecDeque::new();
        let mut initial = Vec::new();
        for p in self.initial.iter() {
            for q in other.initial.iter() {
                index.insert((p, q), pairs.len());
                initial.push(pairs.len());
                pairs.push((p, q));
                queue.push_back((p, q));
            }
        }
        let mut trans = Vec::new();
        while let Some((p, q)) = queue.pop_front() {
            let src = index[&(p, q)];
            for &a in &alphabet {
                let ps = self.successors(p, a);
                let qs = other.successors(q, a);
                for p2 in ps.iter() {
                    for q2 in qs.iter() {
                        let dst = *index.entry((p2, q2)).or_insert_with(|| {
                            pairs.push((p2, q2));
                            queue.push_back((p2, q2));
                            pairs.len() - 1
                        });
                        trans.push((src, a, dst));
                    }
                }
            }
        }
        let finals: Vec<usize> = pairs
            .iter()
            .enumerate()
            .filter(|(_, &(p, q))| self.finals.contains(p) && other.finals.contains(q))
            .map(|(i, _)| i)
            .collect();
        let names = pairs.iter().map(|&(p, q)| format!("({},{})", self.names[p], other.names[q])).collect();
        Nfa::new(names, alphabet, initial, finals, trans).expect("product is well-formed")
    }

    /// `a⁻¹L(A)`, obtained by replacing `I` with `post_a(I)`.
    pub fn quotient_left(&self, a: Symbol) -> Nfa {
        self.with_initial(&self.post_lenient(a, &self.initial))
    }

    /// Accessible subset construction. Empty successor sets are omitted, so the
    /// result is deterministic but not necessarily complete.
    pub fn determinize(&self) -> Nfa {
        let mut index: HashMap<StateSet, usize> = HashMap::new();
        let mut subsets = vec![self.initial.clone()];
        index.insert(self.initial.clone(), 0);
        let mut trans = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            let s = subsets[i].clone();
            for (k, &a) in self.alphabet.iter().enumerate() {
                let t = self.post_at(k, &s);
                if t.is_empty() {
                    continue;
                }
                let dst = *index.entry(t.clone()).or_insert_with(|| {
                    subsets.push(t);
                    subsets.len() - 1
                });
                trans.push((i, a, dst));
            }
            i += 1;
        }
        let finals: Vec<usize> =
            subsets.iter().enumerate().filter(|(_, s)| s.intersects(&self.finals)).map(|(i, _)| i).collect();
        let names = subsets
            .iter()
            .map(|s| {
                let inner: Vec<&str> = s.iter().map(|q| self.names[q].as_str()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        Nfa::new(names, self.alphabet.iter().copied(), [0], finals, trans).expect("subset automaton is well-formed")
    }

    /// At most one initial state and at most one successor per state and symbol.
    pub fn is_deterministic(&self) -> bool {
        self.initial.len() <= 1 && self.succ.iter().all(|row| row.iter().all(|s| s.len() <= 1))
    }

    /// `Σ* ∖ L(D)` for a deterministic `D`; a sink state is added when `D` is incomplete.
    pub fn complement_dfa(&self) -> Result<Nfa> {
        if !self.is_deterministic() {
            return Err(Error::NotDeterministic);
        }
        let n = self.num_states();
        let complete = self.initial.len() == 1 && self.succ.iter().all(|row| row.iter().all(|s| s.len() == 1));
        let mut names = self.names.clone();
        let mut trans = self.transitions.clone();
        let mut initial: Vec<usize> = self.initial.iter().collect();
        let mut finals: Vec<usize> = self.finals.complement().iter().collect();
        if !complete {
            let mut sink = String::from("sink");
            while names.contains(&sink) {
                sink.push('\'');
            }
            names.push(sink);
            for (k, &a) in self.alphabet.iter().enumerate() {
                for q in 0..n {
                    if self.succ[k][q].is_empty() {
                        trans.push((q, a, n));
                    }
                }
                trans.push((n, a, n));
            }
            if initial.is_empty() {
                initial.push(n);
            }
            finals.push(n);
        }
        Nfa::new(names, self.alphabet.iter().copied(), initial, finals, trans)
    }

    /// Removes states that are not both reachable and co-reachable.
    pub fn trim(&self) -> Nfa {
        let forward = self.closure(&self.initial, |q, out| {
            for row in &self.succ {
                out.union_with(&row[q]);
            }
        });
        let backward = self.closure(&self.finals, |q, out| {
            for row in &self.pred {
                out.union_with(&row[q]);
            }
        });
        let keep = forward.intersection(&backward);
        let map: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, q)| (q, i)).collect();
        Nfa::new(
            keep.iter().map(|q| self.names[q].clone()).collect(),
            self.alphabet.iter().copied(),
            self.initial.iter().filter_map(|q| map.get(&q).copied()),
            self.finals.iter().filter_map(|q| map.get(&q).copied()),
            self.transitions.iter().filter_map(|&(p, a, q)| Some((*map.get(&p)?, a, *map.get(&q)?))),
        )
        .expect("trimming preserves well-formedness")
    }

    fn closure(&self, start: &StateSet, step: impl Fn(usize, &mut StateSet)) -> StateSet {
        let mut seen = start.clone();
        let mut stack: Vec<usize> = start.iter().collect();
        while let Some(q) = stack.pop() {
            let mut next = self.empty_set();
            step(q, &mut next);
            for r in next.iter() {
                if seen.insert(r) {
                    stack.push(r);
                }
            }
        }
        seen
    }

    /// Serializes to the line-oriented text format.
    pub fn to_text(&self) -> String {
        let mut out = String::from("alphabet");
        for a in &self.alphabet {
            out.push(' ');
            out.push_str(a.as_str());
        }
        out.push('\n');
        for (q, name) in self.names.iter().enumerate() {
            out.push_str("state ");
            out.push_str(name);
            if self.initial.contains(q) {
                out.push_str(" initial");
            }
            if self.finals.contains(q) {
                out.push_str(" final");
            }
            out.push('\n');
        }
        for &(p, a, q) in &self.transitions {
            out.push_str(&format!("trans {} {} {}\n", self.names[p], a, self.names[q]));
        }
        out
    }

    /// Parses the text format:
    /// `alphabet <tok>…`, `state <name> [initial] [final]`, `trans <src> <sym> <dst>`,
    /// with `#` starting a comment. Without an `alphabet` line the alphabet is
    /// the set of transition labels.
    pub fn parse(text: &str) -> Result<Nfa> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut alphabet: Option<Vec<Symbol>> = None;
        let mut initial = Vec::new();
        let mut finals = Vec::new();
        let mut trans = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let ln = ln + 1;
            let line = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = line.split_whitespace().collect();
            let Some((&kw, rest)) = toks.split_first() else { continue };
            match kw {
                "alphabet" => alphabet.get_or_insert_with(Vec::new).extend(rest.iter().map(|t| Symbol::intern(t))),
                "state" => {
                    let Some((&name, flags)) = rest.split_first() else {
                        return parse_err(ln, "expected `state <name> [initial] [final]`");
                    };
                    if index.contains_key(name) {
                        return parse_err(ln, format!("duplicate state `{name}`"));
                    }
                    let q = names.len();
                    names.push(name.to_owned());
                    index.insert(name.to_owned(), q);
                    for &flag in flags {
                        match flag {
                            "initial" => initial.push(q),
                            "final" => finals.push(q),
                            other => return parse_err(ln, format!("unknown state flag `{other}`")),
                        }
                    }
                }
                "trans" => {
                    let [src, sym, dst] = rest else {
                        return parse_err(ln, "expected `trans <src> <symbol> <dst>`");
                    };
                    let lookup = |s: &str| match index.get(s) {
                        Some(&q) => Ok(q),
                        None => parse_err(ln, format!("undeclared state `{s}`")),
                    };
                    let a = Symbol::intern(sym);
                    if let Some(al) = &alphabet {
                        if !al.contains(&a) {
                            return parse_err(ln, format!("symbol `{sym}` not in alphabet"));
                        }
                    }
                    trans.push((lookup(src)?, a, lookup(dst)?));
                }
                other => return parse_err(ln, format!("unknown directive `{other}`")),
            }
        }
        let alphabet = alphabet.unwrap_or_else(|| trans.iter().map(|t| t.1).collect());
        Nfa::new(names, alphabet, initial, finals, trans)
    }
}

impl FromStr for Nfa {
    type Err = Error;
    fn from_str(s: &str) -> Result<Nfa> {
        Nfa::parse(s)
    }
}

impl fmt::Display for Nfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Extends both automata to the union of their alphabets.
pub fn align(a: &Nfa, b: &Nfa) -> (Nfa, Nfa) {
    (a.with_alphabet(b.alphabet()), b.with_alphabet(a.alphabet()))
}

/// Name-based construction, mainly for fixtures and examples.
#[derive(Default, Debug, Clone)]
pub struct NfaBuilder {
    names: Vec<String>,
    alphabet: Vec<Symbol>,
    initial: Vec<usize>,
    finals: Vec<usize>,
    trans: Vec<(usize, Symbol, usize)>,
}

impl NfaBuilder {
    fn idx(&mut self, name: &str) -> usize {
        match self.names.iter().position(|n| n == name) {
            Some(q) => q,
            None => {
                self.names.push(name.to_owned());
                self.names.len() - 1
            }
        }
    }

    /// Declares symbols, whitespace-separated.
    pub fn symbols(mut self, toks: &str) -> Self {
        self.alphabet.extend(toks.split_whitespace().map(Symbol::intern));
        self
    }

    pub fn state(mut self, name: &str) -> Self {
        self.idx(name);
        self
    }

    pub fn initial(mut self, name: &str) -> Self {
        let q = self.idx(name);
        self.initial.push(q);
        self
    }

    pub fn accepting(mut self, name: &str) -> Self {
        let q = self.idx(name);
        self.finals.push(q);
        self
    }

    /// Adds `src –sym→ dst` for every whitespace-separated token in `syms`.
    pub fn trans(mut self, src: &str, syms: &str, dst: &str) -> Self {
        let (p, q) = (self.idx(src), self.idx(dst));
        for t in syms.split_whitespace() {
            let a = Symbol::intern(t);
            self.alphabet.push(a);
            self.trans.push((p, a, q));
        }
        self
    }

    pub fn build(self) -> Nfa {
        Nfa::new(self.names, self.alphabet, self.initial, self.finals, self.trans)
            .expect("builder input is well-formed")
    }
}
