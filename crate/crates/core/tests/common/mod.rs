//! Helpers shared by the integration test targets.
#![allow(dead_code)]

pub mod props;

use std::collections::BTreeSet;

use langinc::grammars::GrammarWordVector;
use langinc::regular_inclusion::WordSet;
use langinc::{format_word, word, Cfg, Nfa, Ocn, StateSet, Symbol};
use rand::Rng;

/// A word set rendered as strings, for comparisons against literals.
pub fn strings(ws: &WordSet) -> BTreeSet<String> {
    ws.iter().map(|w| format_word(w)).collect()
}

/// Literal words in canonical rendering (`""` becomes `ε`).
pub fn set(words: &[&str]) -> BTreeSet<String> {
    words.iter().map(|w| format_word(&word(w))).collect()
}

/// Every component of a word vector rendered as strings.
pub fn vector(v: &[WordSet]) -> Vec<BTreeSet<String>> {
    v.iter().map(strings).collect()
}

pub fn grammar_vector(v: &GrammarWordVector) -> Vec<BTreeSet<String>> {
    vector(v)
}

/// State set of `a` by state names.
pub fn states(a: &Nfa, names: &[&str]) -> StateSet {
    StateSet::from_states(a.num_states(), names.iter().map(|n| a.state_index(n).expect("known state")))
}

pub fn symbols(k: usize) -> Vec<Symbol> {
    ["a", "b", "c"][..k].iter().map(|s| Symbol::intern(s)).collect()
}

/// A random automaton over the given alphabet with `1..=max_states` states;
/// each possible transition is present with probability `density`.
pub fn random_nfa(rng: &mut impl Rng, max_states: usize, alphabet: &[Symbol], density: f64) -> Nfa {
    let n = rng.gen_range(1..=max_states);
    let names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    let mut initial: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
    if initial.is_empty() && rng.gen_bool(0.9) {
        initial.push(0);
    }
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    let mut trans = Vec::new();
    for p in 0..n {
        for &a in alphabet {
            for q in 0..n {
                if rng.gen_bool(density) {
                    trans.push((p, a, q));
                }
            }
        }
    }
    Nfa::new(names, alphabet.iter().copied(), initial, finals, trans).expect("generated automaton is valid")
}

/// A random grammar already in Chomsky normal form, with up to `max_vars`
/// variables, occasionally with `X0 → eps`.
pub fn random_cnf_text(rng: &mut impl Rng, max_vars: usize, alphabet: &[Symbol]) -> String {
    let n = rng.gen_range(1..=max_vars);
    let mut out = String::new();
    for i in 0..n {
        let mut alts: Vec<String> = Vec::new();
        for _ in 0..rng.gen_range(0..=3) {
            alts.push(format!("X{} X{}", rng.gen_range(0..n), rng.gen_range(0..n)));
        }
        for &a in alphabet {
            if rng.gen_bool(0.35) {
                alts.push(a.as_str().to_owned());
            }
        }
        if i == 0 && rng.gen_bool(0.15) {
            alts.push("eps".into());
        }
        if alts.is_empty() {
            alts.push(format!("X{i} X{i}"));
        }
        out.push_str(&format!("X{i} -> {}\n", alts.join(" | ")));
    }
    out
}

pub fn random_cfg(rng: &mut impl Rng, max_vars: usize, alphabet: &[Symbol]) -> Cfg {
    Cfg::parse(&random_cnf_text(rng, max_vars, alphabet)).expect("generated grammar parses")
}

/// A random one-counter net over `alphabet` with `1..=max_states` states.
pub fn random_ocn(rng: &mut impl Rng, max_states: usize, alphabet: &[Symbol]) -> Ocn {
    let n = rng.gen_range(1..=max_states);
    let mut text = String::from("alphabet");
    for a in alphabet {
        text.push(' ');
        text.push_str(a.as_str());
    }
    text.push('\n');
    for i in 0..n {
        text.push_str(&format!("state s{i}\n"));
    }
    for p in 0..n {
        for &a in alphabet {
            for q in 0..n {
                if rng.gen_bool(0.25) {
                    let d = ["-1", "0", "+1"][rng.gen_range(0..3)];
                    text.push_str(&format!("trans s{p} {a} {d} s{q}\n"));
                }
            }
        }
    }
    Ocn::parse(&text).expect("generated net parses")
}

/// Shorthand for `word` over a list of literals.
pub fn words(ws: &[&str]) -> Vec<langinc::Word> {
    ws.iter().map(|w| word(w)).collect()
}
