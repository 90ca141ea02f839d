use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use super::{fainc_antichain, Run, RunOptions, Verdict};
use crate::automata::{Nfa, StateSet};
use crate::error::Result;
use crate::foundations::Kleene;
use crate::symbol::{Symbol, Word};

fn union_alphabet<'a>(parts: impl IntoIterator<Item = &'a Nfa>) -> Vec<Symbol> {
    let set: BTreeSet<Symbol> = parts.into_iter().flat_map(|a| a.alphabet().iter().copied()).collect();
    set.into_iter().collect()
}

/// Canonical form of `L(A)`: the minimal deterministic automaton without dead
/// states. Keeps iterate sizes bounded by the number of distinct languages.
pub fn normalize(a: &Nfa) -> Nfa {
    let d = a.determinize().trim();
    let n = d.num_states();
    let sigma = d.alphabet().to_vec();
    if n == 0 {
        return Nfa::empty(&sigma);
    }
    let target = |q: usize, a: Symbol| d.successors(q, a).iter().next();
    let mut class: Vec<usize> = (0..n).map(|q| d.finals().contains(q) as usize).collect();
    loop {
        let mut ids: HashMap<(usize, Vec<Option<usize>>), usize> = HashMap::new();
        let next: Vec<usize> = (0..n)
            .map(|q| {
                let sig = (class[q], sigma.iter().map(|&a| target(q, a).map(|t| class[t])).collect());
                let fresh = ids.len();
                *ids.entry(sig).or_insert(fresh)
            })
            .collect();
        let stable = ids.len() == class.iter().collect::<HashSet<_>>().len();
        class = next;
        if stable {
            break;
        }
    }
    let m = class.iter().max().map_or(0, |c| c + 1);
    let mut trans = Vec::new();
    for q in 0..n {
        for &a in &sigma {
            if let Some(t) = target(q, a) {
                trans.push((class[q], a, class[t]));
            }
        }
    }
    Nfa::new(
        (0..m).map(|c| format!("m{c}")).collect(),
        sigma.iter().copied(),
        d.initial().iter().map(|q| class[q]),
        d.finals().iter().map(|q| class[q]),
        trans,
    )
    .expect("quotient automaton is well-formed")
}

/// `P̃re(Y)_{q'} = ⋂_{q –a→ q'} a⁻¹Y_q`, with `Σ*` when `q'` has no incoming transition.
pub fn wpre_transform(a1: &Nfa, y: &[Nfa]) -> Vec<Nfa> {
    let sigma = union_alphabet(std::iter::once(a1).chain(y));
    let mut parts: Vec<Vec<Nfa>> = vec![Vec::new(); a1.num_states()];
    for &(q, a, q2) in a1.transitions() {
        parts[q2].push(y[q].quotient_left(a).with_alphabet(&sigma));
    }
    parts
        .into_iter()
        .map(|ps| {
            let mut it = ps.into_iter();
            match it.next() {
                None => Nfa::universal(&sigma),
                Some(first) => normalize(&it.fold(first, |acc, b| normalize(&acc.product(&b)))),
            }
        })
        .collect()
}

fn equivalent(a: &Nfa, b: &Nfa) -> Result<bool> {
    Ok(fainc_antichain(a, b)?.included && fainc_antichain(b, a)?.included)
}

/// Greatest-fixpoint inclusion check: iterate `Y ↦ L2^{I1} ∩ P̃re(Y)` from `⟨Σ*, …⟩`
/// and test `ε ∈ Y_q` for every final `q` of `A1`.
pub fn fainc_gfp(a1: &Nfa, a2: &Nfa) -> Result<Verdict> {
    Ok(fainc_gfp_run(a1, a2, &RunOptions::default())?.verdict)
}

/// [`fainc_gfp`] with options. Without an explicit cap, `|Q1|·2^|Q2| + 1` is used:
/// every component is closed for the left state order of `A2`, and a chain of
/// such sets has at most `2^|Q2| + 1` elements (from `Σ*` down to `∅`).
pub fn fainc_gfp_run(a1: &Nfa, a2: &Nfa, opts: &RunOptions) -> Result<Run<Vec<Nfa>>> {
    let sigma = union_alphabet([a1, a2]);
    let l2 = normalize(&a2.with_alphabet(&sigma));
    let n = a1.num_states();
    let cap = opts.cap.unwrap_or_else(|| {
        let steps = 1usize.checked_shl(a2.num_states() as u32).unwrap_or(usize::MAX);
        n.saturating_mul(steps).saturating_add(1)
    });
    let f = |y: &Vec<Nfa>| {
        let mut next = wpre_transform(a1, y);
        for q in a1.initial().iter() {
            next[q] = normalize(&l2.product(&next[q]));
        }
        Ok(next)
    };
    let conv = |fy: &Vec<Nfa>, y: &Vec<Nfa>| {
        for (a, b) in fy.iter().zip(y) {
            if !equivalent(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let iterates = RefCell::new(Vec::new());
    let mut k = Kleene::new().cap(Some(cap)).measure(|y: &Vec<Nfa>| y.iter().map(Nfa::num_states).max().unwrap_or(0));
    if opts.trace {
        k = k.observe(|y: &Vec<Nfa>| iterates.borrow_mut().push(y.clone()));
    }
    let (fixpoint, stats) = k.run(conv, f, vec![Nfa::universal(&sigma); n])?;
    let included = a1.finals().iter().all(|q| fixpoint[q].accepts_epsilon());
    let witness = if included { None } else { difference_witness(a1, a2) };
    Ok(Run { verdict: Verdict { included, witness, stats }, fixpoint, iterates: iterates.into_inner() })
}

/// Shortest, then lexicographically least, word of `L(A1) ∖ L(A2)`, by forward
/// search over pairs of an `A1` state and the `A2` states reached.
fn difference_witness(a1: &Nfa, a2: &Nfa) -> Option<Word> {
    let sigma = union_alphabet([a1, a2]);
    let mut seen: HashSet<(usize, StateSet)> = HashSet::new();
    let mut queue = VecDeque::new();
    for q in a1.initial().iter() {
        if seen.insert((q, a2.initial().clone())) {
            queue.push_back((q, a2.initial().clone(), Vec::new()));
        }
    }
    while let Some((q, s, w)) = queue.pop_front() {
        if a1.finals().contains(q) && !s.intersects(a2.finals()) {
            return Some(w);
        }
        for &a in &sigma {
            let t = a2.post_lenient(a, &s);
            for q2 in a1.successors(q, a).iter() {
                if seen.insert((q2, t.clone())) {
                    let mut wa = w.clone();
                    wa.push(a);
                    queue.push_back((q2, t.clone(), wa));
                }
            }
        }
    }
    None
}
