use std::fmt;

const W: usize = 64;

/// A subset of `{0, …, n-1}` stored as a bit vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet {
    n: usize,
    bits: Vec<u64>,
}

impl StateSet {
    pub fn empty(n: usize) -> Self {
        StateSet { n, bits: vec![0; n.div_ceil(W)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn singleton(n: usize, q: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(q);
        s
    }

    pub fn from_states(n: usize, states: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for q in states {
            s.insert(q);
        }
        s
    }

    /// Size of the universe.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, q: usize) -> bool {
        assert!(q < self.n, "state {q} out of range {}", self.n);
        let (i, m) = (q / W, 1u64 << (q % W));
        let fresh = self.bits[i] & m == 0;
        self.bits[i] |= m;
        fresh
    }

    pub fn remove(&mut self, q: usize) {
        if q < self.n {
            self.bits[q / W] &= !(1u64 << (q % W));
        }
    }

    pub fn contains(&self, q: usize) -> bool {
        q < self.n && self.bits[q / W] & (1u64 << (q % W)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &StateSet) -> bool {
        self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0)
    }

    pub fn union_with(&mut self, other: &StateSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &StateSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= b;
        }
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &StateSet) -> StateSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn complement(&self) -> StateSet {
        let mut s = StateSet::empty(self.n);
        for q in 0..self.n {
            if !self.contains(q) {
                s.insert(q);
            }
        }
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * W + t)
            })
        })
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A binary relation on `{0, …, n-1}`, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateRelation {
    rows: Vec<StateSet>,
}

impl StateRelation {
    pub fn empty(n: usize) -> Self {
        StateRelation { rows: vec![StateSet::empty(n); n] }
    }

    pub fn identity(n: usize) -> Self {
        StateRelation { rows: (0..n).map(|q| StateSet::singleton(n, q)).collect() }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Self::empty(n);
        for (p, q) in pairs {
            r.insert(p, q);
        }
        r
    }

    pub fn from_rows(rows: Vec<StateSet>) -> Self {
        StateRelation { rows }
    }

    pub fn universe(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, p: usize, q: usize) {
        self.rows[p].insert(q);
    }

    pub fn remove(&mut self, p: usize, q: usize) {
        self.rows[p].remove(q);
    }

    pub fn contains(&self, p: usize, q: usize) -> bool {
        self.rows.get(p).is_some_and(|r| r.contains(q))
    }

    /// `{q | (p,q) ∈ R}`.
    pub fn row(&self, p: usize) -> &StateSet {
        &self.rows[p]
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(StateSet::is_empty)
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(StateSet::len).sum()
    }

    pub fn is_subset(&self, other: &StateRelation) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(p, r)| r.iter().map(move |q| (p, q)))
    }

    /// `R ∘ S = {(p,q) | ∃r, (p,r) ∈ R ∧ (r,q) ∈ S}`.
    pub fn compose(&self, s: &StateRelation) -> StateRelation {
        let n = self.universe();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut out = StateSet::empty(n);
                for r in row.iter() {
                    out.union_with(&s.rows[r]);
                }
                out
            })
            .collect();
        StateRelation { rows }
    }

    /// Whether some pair lies in `X × Y`.
    pub fn meets(&self, x: &StateSet, y: &StateSet) -> bool {
        x.iter().any(|p| self.rows[p].intersects(y))
    }
}

impl fmt::Debug for StateRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// `compose(R, S) = R ∘ S`.
pub fn compose(r: &StateRelation, s: &StateRelation) -> StateRelation {
    r.compose(s)
}

/// `X ≤^{∀∃} Y`: every `x ∈ X` is related to some `y ∈ Y`.
pub fn forall_exists_leq(x: &StateSet, y: &StateSet, rel: &StateRelation) -> bool {
    x.iter().all(|p| rel.row(p).intersects(y))
}
