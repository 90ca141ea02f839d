//! Quasiorders, the set lifting `⊑`, minors, antichains and Kleene iteration.

use crate::error::{Error, Result};
use crate::symbol::{shortlex, Word};

/// A decidable quasiorder (reflexive and transitive relation).
pub trait Quasiorder<T: ?Sized> {
    fn leq(&self, x: &T, y: &T) -> bool;
}

impl<T: ?Sized, F: Fn(&T, &T) -> bool> Quasiorder<T> for F {
    fn leq(&self, x: &T, y: &T) -> bool {
        self(x, y)
    }
}

/// `X ⊑ Y`: every `x ∈ X` has some `y ∈ Y` with `y ≤ x`.
pub fn sqsubseteq<'a, T: 'a>(xs: impl IntoIterator<Item = &'a T>, ys: &[T], order: &impl Quasiorder<T>) -> bool {
    xs.into_iter().all(|x| ys.iter().any(|y| order.leq(y, x)))
}

/// Fallible variant of [`sqsubseteq`] for orders whose decision may fail.
pub fn try_sqsubseteq<'a, T: 'a>(
    xs: impl IntoIterator<Item = &'a T>,
    ys: impl IntoIterator<Item = &'a T> + Clone,
    mut leq: impl FnMut(&T, &T) -> Result<bool>,
) -> Result<bool> {
    'outer: for x in xs {
        for y in ys.clone() {
            if leq(y, x)? {
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// A set of pairwise incomparable elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Antichain<T> {
    elements: Vec<T>,
}

impl<T> Default for Antichain<T> {
    fn default() -> Self {
        Antichain { elements: Vec::new() }
    }
}

impl<T> Antichain<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn into_vec(self) -> Vec<T> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.elements.iter()
    }

    /// Adds `x` unless an element below it is present; drops elements above it.
    /// Returns whether `x` was added.
    pub fn insert(&mut self, x: T, order: &impl Quasiorder<T>) -> bool {
        if self.elements.iter().any(|y| order.leq(y, &x)) {
            return false;
        }
        self.elements.retain(|y| !order.leq(&x, y));
        self.elements.push(x);
        true
    }
}

impl<'a, T> IntoIterator for &'a Antichain<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;
    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// The minor `⌊X⌋`. For equivalent elements the first one encountered is kept.
pub fn minor<T: Clone>(xs: impl IntoIterator<Item = T>, order: &impl Quasiorder<T>) -> Antichain<T> {
    let mut ac = Antichain::new();
    for x in xs {
        ac.insert(x, order);
    }
    ac
}

/// Fallible minor, for word quasiorders whose `leq` can fail.
pub fn try_minor<T>(xs: impl IntoIterator<Item = T>, mut leq: impl FnMut(&T, &T) -> Result<bool>) -> Result<Vec<T>> {
    let mut kept: Vec<T> = Vec::new();
    'next: for x in xs {
        for y in &kept {
            if leq(y, &x)? {
                continue 'next;
            }
        }
        let mut i = 0;
        while i < kept.len() {
            if leq(&x, &kept[i])? {
                kept.remove(i);
            } else {
                i += 1;
            }
        }
        kept.push(x);
    }
    Ok(kept)
}

/// An antichain element carrying the word that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tagged<K> {
    pub key: K,
    pub witness: Word,
}

/// Inserts into a tagged antichain ordered by the partial order `le`.
/// When `key` is already present the shortlex-smaller witness is kept.
pub fn insert_tagged<K: PartialEq>(
    ac: &mut Vec<Tagged<K>>,
    key: K,
    witness: Word,
    le: impl Fn(&K, &K) -> bool,
) -> bool {
    for e in ac.iter_mut() {
        if le(&e.key, &key) {
            if e.key == key && shortlex(&witness, &e.witness).is_lt() {
                e.witness = witness;
            }
            return false;
        }
    }
    ac.retain(|e| !le(&key, &e.key));
    ac.push(Tagged { key, witness });
    true
}

/// `X ⊑ Y` on tagged antichains: every key of `xs` is above some key of `ys`.
pub fn tagged_sqsubseteq<K>(xs: &[Tagged<K>], ys: &[Tagged<K>], le: impl Fn(&K, &K) -> bool) -> bool {
    xs.iter().all(|x| ys.iter().any(|y| le(&y.key, &x.key)))
}

/// Statistics of a Kleene iteration.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct KleeneStats {
    /// Number of applications of `f`.
    pub iterations: usize,
    /// Largest component size observed over all iterates.
    pub max_frontier: usize,
}

type Measure<'a, V> = Box<dyn Fn(&V) -> usize + 'a>;
type Observer<'a, V> = Box<dyn FnMut(&V) + 'a>;

/// Configurable Kleene iteration `x := a; while !conv(f(x), x) { x := f(x) }`.
pub struct Kleene<'a, V> {
    cap: Option<usize>,
    measure: Option<Measure<'a, V>>,
    observer: Option<Observer<'a, V>>,
}

impl<V> Default for Kleene<'_, V> {
    fn default() -> Self {
        Kleene { cap: None, measure: None, observer: None }
    }
}

impl<'a, V> Kleene<'a, V> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fails with [`Error::IterationCap`] after `cap` applications of `f`.
    pub fn cap(mut self, cap: Option<usize>) -> Self {
        self.cap = cap;
        self
    }

    /// Size function used to fill [`KleeneStats::max_frontier`].
    pub fn measure(mut self, m: impl Fn(&V) -> usize + 'a) -> Self {
        self.measure = Some(Box::new(m));
        self
    }

    /// Called on every iterate `a, f(a), …` up to and including the result.
    pub fn observe(mut self, o: impl FnMut(&V) + 'a) -> Self {
        self.observer = Some(Box::new(o));
        self
    }

    pub fn run(
        mut self,
        mut conv: impl FnMut(&V, &V) -> Result<bool>,
        mut f: impl FnMut(&V) -> Result<V>,
        a: V,
    ) -> Result<(V, KleeneStats)> {
        let mut stats = KleeneStats::default();
        let mut x = a;
        self.note(&x, &mut stats);
        loop {
            let fx = f(&x)?;
            stats.iterations += 1;
            if conv(&fx, &x)? {
                return Ok((x, stats));
            }
            if let Some(cap) = self.cap {
                if stats.iterations >= cap {
                    return Err(Error::IterationCap(cap));
                }
            }
            x = fx;
            self.note(&x, &mut stats);
        }
    }

    fn note(&mut self, x: &V, stats: &mut KleeneStats) {
        if let Some(m) = &self.measure {
            stats.max_frontier = stats.max_frontier.max(m(x));
        }
        if let Some(o) = &mut self.observer {
            o(x);
        }
    }
}

/// Kleene iteration without cap, measure or observer.
pub fn kleene<V>(
    conv: impl FnMut(&V, &V) -> Result<bool>,
    f: impl FnMut(&V) -> Result<V>,
    a: V,
) -> Result<(V, KleeneStats)> {
    Kleene::new().run(conv, f, a)
}
