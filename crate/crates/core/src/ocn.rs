//! One-counter nets: finite automata with a nonnegative counter and no zero tests.
//!
//! After reading `u` from a configuration, only the largest counter value per
//! state matters: a larger counter can replay every run of a smaller one. A
//! [`MacroState`] records that maximum (or `⊥` when the state is unreachable).

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::automata::Nfa;
use crate::error::{parse_err, Error, Result};
use crate::regular_inclusion::{fainc_word_run, Run, RunOptions, Verdict, WordVector};
use crate::regular_orders::{Side, WordQuasiorder};
use crate::symbol::{Symbol, Word};

/// A one-counter net `⟨Q, Σ, δ⟩` with `δ ⊆ Q × Σ × {-1,0,+1} × Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ocn {
    names: Vec<String>,
    alphabet: Vec<Symbol>,
    transitions: Vec<(usize, Symbol, i8, usize)>,
}

/// A configuration `q n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Config {
    pub state: usize,
    pub counter: u64,
}

impl Ocn {
    pub fn new(
        names: Vec<String>,
        alphabet: impl IntoIterator<Item = Symbol>,
        transitions: Vec<(usize, Symbol, i8, usize)>,
    ) -> Result<Ocn> {
        let alphabet: Vec<Symbol> = alphabet.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        for &(p, a, d, q) in &transitions {
            if p >= names.len() || q >= names.len() {
                return Err(Error::Invalid("transition endpoint out of range".into()));
            }
            if !(-1..=1).contains(&d) {
                return Err(Error::Invalid(format!("counter update {d} not in {{-1,0,+1}}")));
            }
            if !alphabet.contains(&a) {
                return Err(Error::UnknownSymbol(a.as_str().to_owned()));
            }
        }
        Ok(Ocn { names, alphabet, transitions })
    }

    /// Parses `state <name>` and `trans <src> <symbol> <delta> <dst>` lines
    /// (`delta` in `-1`, `0`, `+1`), with optional `alphabet <tok>…` lines and `#` comments.
    pub fn parse(text: &str) -> Result<Ocn> {
        let mut names: Vec<String> = Vec::new();
        let mut alphabet: Vec<Symbol> = Vec::new();
        let mut trans = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let ln = ln + 1;
            let toks: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
            match toks.as_slice() {
                [] => {}
                ["alphabet", rest @ ..] => alphabet.extend(rest.iter().map(|t| Symbol::intern(t))),
                ["state", name] => {
                    if names.iter().any(|n| n == name) {
                        return parse_err(ln, format!("duplicate state `{name}`"));
                    }
                    names.push((*name).to_owned());
                }
                ["trans", src, sym, delta, dst] => {
                    let find = |s: &str| match names.iter().position(|n| n == s) {
                        Some(q) => Ok(q),
                        None => parse_err(ln, format!("undeclared state `{s}`")),
                    };
                    let d: i8 = match *delta {
                        "-1" => -1,
                        "0" | "+0" | "-0" => 0,
                        "1" | "+1" => 1,
                        other => return parse_err(ln, format!("counter update `{other}` not in -1, 0, +1")),
                    };
                    let a = Symbol::intern(sym);
                    alphabet.push(a);
                    trans.push((find(src)?, a, d, find(dst)?));
                }
                _ => return parse_err(ln, "expected `state <name>` or `trans <src> <symbol> <delta> <dst>`"),
            }
        }
        Ocn::new(names, alphabet, trans)
    }

    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    pub fn state_names(&self) -> &[String] {
        &self.names
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn transitions(&self) -> &[(usize, Symbol, i8, usize)] {
        &self.transitions
    }

    /// Parses a configuration `<state>:<counter>`.
    pub fn config(&self, text: &str) -> Result<Config> {
        let bad = || Error::Invalid(format!("expected `<state>:<counter>`, got `{text}`"));
        let (q, n) = text.rsplit_once(':').ok_or_else(bad)?;
        let state = self.state_index(q).ok_or_else(|| Error::Invalid(format!("unknown state `{q}`")))?;
        let counter = n.parse().map_err(|_| bad())?;
        Ok(Config { state, counter })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("alphabet");
        for a in &self.alphabet {
            out.push(' ');
            out.push_str(a.as_str());
        }
        out.push('\n');
        for n in &self.names {
            out.push_str(&format!("state {n}\n"));
        }
        for &(p, a, d, q) in &self.transitions {
            let d = if d > 0 { "+1".to_owned() } else { d.to_string() };
            out.push_str(&format!("trans {} {} {} {}\n", self.names[p], a, d, self.names[q]));
        }
        out
    }
}

impl FromStr for Ocn {
    type Err = Error;
    fn from_str(s: &str) -> Result<Ocn> {
        Ocn::parse(s)
    }
}

/// Largest counter value per state; `None` stands for `⊥`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MacroState(pub Vec<Option<u64>>);

impl MacroState {
    /// Pointwise `≤` with `⊥` below every number.
    pub fn le(&self, other: &MacroState) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| match (a, b) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(x), Some(y)) => x <= y,
        })
    }

    /// Whether some state is reachable.
    pub fn is_live(&self) -> bool {
        self.0.iter().any(Option::is_some)
    }
}

impl fmt::Display for MacroState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.0.iter().map(|c| c.map_or("⊥".to_owned(), |n| n.to_string())).collect();
        write!(f, "({})", cells.join(","))
    }
}

/// The macro state of the configuration set `{c}`.
pub fn macro_init(o: &Ocn, c: Config) -> MacroState {
    let mut m = vec![None; o.num_states()];
    m[c.state] = Some(c.counter);
    MacroState(m)
}

/// One step on `a`; fails on symbols outside `Σ` and on counter overflow.
pub fn macro_step(o: &Ocn, m: &MacroState, a: Symbol) -> Result<MacroState> {
    if !o.alphabet.contains(&a) {
        return Err(Error::UnknownSymbol(a.as_str().to_owned()));
    }
    step_lenient(o, m, a)
}

/// As [`macro_step`], but a symbol outside `Σ` leads to the all-`⊥` state.
fn step_lenient(o: &Ocn, m: &MacroState, a: Symbol) -> Result<MacroState> {
    let mut out = vec![None; o.num_states()];
    for &(p, b, d, q) in &o.transitions {
        if b != a {
            continue;
        }
        let Some(n) = m.0[p] else { continue };
        let next = match d {
            -1 if n == 0 => continue,
            -1 => n - 1,
            0 => n,
            _ => n.checked_add(1).ok_or(Error::CounterOverflow)?,
        };
        out[q] = Some(out[q].map_or(next, |v: u64| v.max(next)));
    }
    Ok(MacroState(out))
}

/// The macro state reached from `c` after reading `u`.
pub fn macro_word(o: &Ocn, c: Config, u: &[Symbol]) -> Result<MacroState> {
    let mut m = macro_init(o, c);
    for &a in u {
        m = step_lenient(o, &m, a)?;
    }
    Ok(m)
}

/// `u ∈ T(c)`: some run from `c` reads `u`. Words with symbols outside `Σ` are not traces.
pub fn trace_member(o: &Ocn, c: Config, u: &[Symbol]) -> bool {
    macro_word(o, c, u).map(|m| m.is_live()).unwrap_or(true)
}

/// The right quasiorder `u ≤ v ⟺ M_u ≤ M_v` pointwise.
#[derive(Clone)]
pub struct OcnOrder {
    ocn: Ocn,
    config: Config,
    memo: RefCell<HashMap<Word, MacroState>>,
}

impl OcnOrder {
    /// Memoized macro state of `u`, extending the one of its longest proper prefix.
    pub fn key(&self, u: &[Symbol]) -> Result<MacroState> {
        if let Some(m) = self.memo.borrow().get(u) {
            return Ok(m.clone());
        }
        let m = match u.split_last() {
            None => macro_init(&self.ocn, self.config),
            Some((&a, rest)) => step_lenient(&self.ocn, &self.key(rest)?, a)?,
        };
        self.memo.borrow_mut().insert(u.to_vec(), m.clone());
        Ok(m)
    }
}

impl WordQuasiorder for OcnOrder {
    fn side(&self) -> Side {
        Side::Right
    }
    fn name(&self) -> &'static str {
        "ocn"
    }
    fn leq(&self, u: &[Symbol], v: &[Symbol]) -> Result<bool> {
        Ok(self.key(u)?.le(&self.key(v)?))
    }
}

pub fn ocn_order(o: &Ocn, c: Config) -> OcnOrder {
    OcnOrder { ocn: o.clone(), config: c, memo: RefCell::default() }
}

/// Decides `L(A) ⊆ T(c)` by forward word iteration under [`ocn_order`], with pruning.
pub fn fainc_ocn(a: &Nfa, o: &Ocn, c: Config) -> Result<Verdict> {
    fainc_ocn_run(a, o, c, &RunOptions::pruned()).map(|r| r.verdict)
}

/// [`fainc_ocn`] with explicit options.
pub fn fainc_ocn_run(a: &Nfa, o: &Ocn, c: Config, opts: &RunOptions) -> Result<Run<WordVector>> {
    let qo = ocn_order(o, c);
    fainc_word_run(a, |w| trace_member(o, c, w), &qo, opts)
}
