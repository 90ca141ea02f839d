//! Interned alphabet symbols and words.
//!
//! Symbols are arbitrary whitespace-free tokens. They are interned in a
//! process-wide append-only table so that automata, grammars and nets parsed
//! independently agree on symbol identity. Symbols order by their token text.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

#[derive(Default)]
struct Interner {
    tokens: Vec<&'static str>,
    ids: HashMap<&'static str, u32>,
}

fn interner() -> &'static RwLock<Interner> {
    static TABLE: OnceLock<RwLock<Interner>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

/// An alphabet symbol.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Symbol(u32);

impl Symbol {
    /// Interns `token` and returns its symbol.
    pub fn intern(token: &str) -> Symbol {
        if let Some(&id) = interner().read().unwrap().ids.get(token) {
            return Symbol(id);
        }
        let mut table = interner().write().unwrap();
        if let Some(&id) = table.ids.get(token) {
            return Symbol(id);
        }
        let leaked: &'static str = Box::leak(token.to_owned().into_boxed_str());
        let id = table.tokens.len() as u32;
        table.tokens.push(leaked);
        table.ids.insert(leaked, id);
        Symbol(id)
    }

    pub fn as_str(self) -> &'static str {
        interner().read().unwrap().tokens[self.0 as usize]
    }

    /// A symbol whose token starts with `base` and differs from every symbol in `avoid`.
    pub fn fresh(base: &str, avoid: &[Symbol]) -> Symbol {
        let mut token = base.to_owned();
        loop {
            let s = Symbol::intern(&token);
            if !avoid.contains(&s) {
                return s;
            }
            token.push_str(base);
        }
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let table = interner().read().unwrap();
        table.tokens[self.0 as usize].cmp(table.tokens[other.0 as usize])
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A finite word. The empty vector is ε.
pub type Word = Vec<Symbol>;

/// Parses a word: comma-separated tokens if the text contains a comma,
/// otherwise one symbol per character. `""`, `ε` and `eps` denote the empty word.
pub fn word(text: &str) -> Word {
    let text = text.trim();
    if text.is_empty() || text == "ε" || text == "eps" {
        return Vec::new();
    }
    if text.contains(',') {
        text.split(',').map(|t| Symbol::intern(t.trim())).collect()
    } else {
        text.chars().map(|c| Symbol::intern(c.encode_utf8(&mut [0; 4]))).collect()
    }
}

/// Renders a word in the format accepted by [`word`].
pub fn format_word(w: &[Symbol]) -> String {
    if w.is_empty() {
        return "ε".to_owned();
    }
    let toks: Vec<&str> = w.iter().map(|s| s.as_str()).collect();
    if toks.iter().all(|t| t.chars().count() == 1) {
        toks.concat()
    } else {
        toks.join(",")
    }
}

/// Shortlex comparison: shorter first, then lexicographic by token.
pub fn shortlex(u: &[Symbol], v: &[Symbol]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}

/// Concatenation `u·v`.
pub fn concat(u: &[Symbol], v: &[Symbol]) -> Word {
    let mut w = Vec::with_capacity(u.len() + v.len());
    w.extend_from_slice(u);
    w.extend_from_slice(v);
    w
}

/// All words over `alphabet` of length at most `maxlen`, in shortlex order
/// when `alphabet` is sorted.
pub fn words_up_to(alphabet: &[Symbol], maxlen: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..maxlen {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for &a in alphabet {
                let mut x = w.clone();
                x.push(a);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
