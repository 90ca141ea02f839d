//! Property checks shared by the proptest target and the acceptance runner.
#![allow(dead_code)]

use langinc::automata::StateRelation;
use langinc::foundations::{minor, sqsubseteq};
use langinc::ocn::{macro_init, macro_step, macro_word, ocn_order, trace_member, MacroState};
use langinc::oracle::ocn_trace_bfs;
use langinc::regular_orders::{nerode_left, nerode_right, sim_left, sim_right, state_left, state_right};
use langinc::{ctx_order, fixtures, myhill_order, Config, Nfa, Side, Symbol, Word, WordQuasiorder};
use proptest::prelude::*;
use proptest::test_runner::{Config as PtConfig, TestCaseError, TestError, TestRunner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{random_nfa, random_ocn, symbols};

pub const CASES: u32 = 1000;

pub fn config() -> PtConfig {
    PtConfig { cases: CASES, failure_persistence: None, ..PtConfig::default() }
}

/// Runs `test` on `CASES` inputs drawn from `strategy`, reporting the first failure.
pub fn check<S: Strategy>(strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new(config());
    runner.run(&strategy, test).map_err(|e| match e {
        TestError::Fail(why, input) => format!("{why} on {input:?}"),
        TestError::Abort(why) => why.to_string(),
    })
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Indices into an alphabet of size `k`, turned into a word.
fn to_word(alphabet: &[Symbol], ix: &[usize]) -> Word {
    ix.iter().map(|&i| alphabet[i % alphabet.len()]).collect()
}

fn word_ix() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..3, 0..=4)
}

// ---- minor laws ----------------------------------------------------------

/// Finite sets of subsets of an 8-element universe, under `⊆`.
pub fn minor_input() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(any::<u8>(), 0..12)
}

pub fn minor_laws(xs: Vec<u8>) -> Result<(), TestCaseError> {
    let le = |a: &u8, b: &u8| a & !b == 0;
    let m = minor(xs.iter().copied(), &le).into_vec();
    prop_assert!(sqsubseteq(&xs, &m, &le), "X ⊑ ⌊X⌋ fails");
    prop_assert!(sqsubseteq(&m, &xs, &le), "⌊X⌋ ⊑ X fails");
    for (i, a) in m.iter().enumerate() {
        prop_assert!(xs.contains(a), "minor element not drawn from X");
        for (j, b) in m.iter().enumerate() {
            prop_assert!(i == j || !le(a, b), "minor is not an antichain");
        }
    }
    let mm = minor(m.iter().copied(), &le).into_vec();
    prop_assert!(sqsubseteq(&mm, &m, &le) && sqsubseteq(&m, &mm, &le), "minor not idempotent");
    Ok(())
}

// ---- quasiorder laws and consistency -------------------------------------

/// Which order constructor a case exercises.
#[derive(Debug, Clone, Copy)]
pub enum OrderCase {
    StateL,
    StateR,
    SimL,
    SimR,
    NerodeL,
    NerodeR,
    Ctx,
    Myhill,
    Ocn,
}

pub const ORDER_CASES: [OrderCase; 9] = [
    OrderCase::StateL,
    OrderCase::StateR,
    OrderCase::SimL,
    OrderCase::SimR,
    OrderCase::NerodeL,
    OrderCase::NerodeR,
    OrderCase::Ctx,
    OrderCase::Myhill,
    OrderCase::Ocn,
];

pub fn order_input() -> impl Strategy<Value = (usize, u64, Vec<usize>, Vec<usize>, Vec<usize>, usize)> {
    (0..ORDER_CASES.len(), any::<u64>(), word_ix(), word_ix(), word_ix(), 0usize..3)
}

type Membership = Box<dyn Fn(&[Symbol]) -> bool>;

/// Reflexivity, transitivity, `L × ¬L` disjointness and monotonicity on the order's side.
pub fn order_laws(
    (which, seed, u, v, w, letter): (usize, u64, Vec<usize>, Vec<usize>, Vec<usize>, usize),
) -> Result<(), TestCaseError> {
    let case = ORDER_CASES[which];
    let mut r = rng(seed);
    let sigma = symbols(1 + (seed % 3) as usize);
    let (qo, member): (Box<dyn WordQuasiorder>, Membership) = match case {
        OrderCase::Ocn => {
            let o = random_ocn(&mut r, 4, &sigma);
            let c = Config { state: 0, counter: seed % 3 };
            let o2 = o.clone();
            (Box::new(ocn_order(&o, c)), Box::new(move |x: &[Symbol]| trace_member(&o2, c, x)))
        }
        _ => {
            let a = random_nfa(&mut r, 4, &sigma, 0.35);
            let qo: Box<dyn WordQuasiorder> = match case {
                OrderCase::StateL => Box::new(state_left(&a)),
                OrderCase::StateR => Box::new(state_right(&a)),
                OrderCase::SimL => Box::new(sim_left(&a)),
                OrderCase::SimR => Box::new(sim_right(&a)),
                OrderCase::NerodeL => Box::new(nerode_left(&a)),
                OrderCase::NerodeR => Box::new(nerode_right(&a)),
                OrderCase::Ctx => Box::new(ctx_order(&a)),
                _ => Box::new(myhill_order(&a)),
            };
            (qo, Box::new(move |x: &[Symbol]| a.member(x)))
        }
    };
    let (u, v, w) = (to_word(&sigma, &u), to_word(&sigma, &v), to_word(&sigma, &w));
    let a = sigma[letter % sigma.len()];
    let leq = |x: &Word, y: &Word| qo.leq(x, y).map_err(|e| TestCaseError::fail(e.to_string()));

    prop_assert!(leq(&u, &u)?, "{case:?}: not reflexive");
    if leq(&u, &v)? && leq(&v, &w)? {
        prop_assert!(leq(&u, &w)?, "{case:?}: not transitive");
    }
    if member(&u) && !member(&v) {
        prop_assert!(!leq(&u, &v)?, "{case:?}: relates a member below a non-member");
    }
    if leq(&u, &v)? {
        let side = qo.side();
        if side != Side::Right {
            let (au, av) = ([&[a][..], &u].concat(), [&[a][..], &v].concat());
            prop_assert!(leq(&au, &av)?, "{case:?}: not left-monotone");
        }
        if side != Side::Left {
            let (ua, va) = ([&u[..], &[a]].concat(), [&v[..], &[a]].concat());
            prop_assert!(leq(&ua, &va)?, "{case:?}: not right-monotone");
        }
    }
    Ok(())
}

// ---- refinement chain ----------------------------------------------------

pub fn refinement_input() -> impl Strategy<Value = (usize, bool, Vec<usize>, Vec<usize>)> {
    (0usize..7, any::<bool>(), word_ix(), word_ix())
}

/// `state ⊆ sim ⊆ nerode` on one word pair of a fixture automaton.
pub fn refinement_chain((fixture, left, u, v): (usize, bool, Vec<usize>, Vec<usize>)) -> Result<(), TestCaseError> {
    let a = fixtures::nfa_files()[fixture].1.clone();
    let sigma = a.alphabet().to_vec();
    let (u, v) = (to_word(&sigma, &u), to_word(&sigma, &v));
    let (s, m, n) = if left {
        (state_left(&a).leq(&u, &v), sim_left(&a).leq(&u, &v), nerode_left(&a).leq(&u, &v))
    } else {
        (state_right(&a).leq(&u, &v), sim_right(&a).leq(&u, &v), nerode_right(&a).leq(&u, &v))
    };
    let (s, m, n) = (s.unwrap(), m.unwrap(), n.unwrap());
    prop_assert!(!s || m, "state does not refine sim");
    prop_assert!(!m || n, "sim does not refine nerode");
    Ok(())
}

// ---- ctx composition -----------------------------------------------------

pub fn ctx_input() -> impl Strategy<Value = (u64, Vec<usize>, Vec<usize>)> {
    (any::<u64>(), prop::collection::vec(0usize..3, 0..=5), prop::collection::vec(0usize..3, 0..=5))
}

pub fn ctx_composition((seed, u, v): (u64, Vec<usize>, Vec<usize>)) -> Result<(), TestCaseError> {
    let sigma = symbols(1 + (seed % 3) as usize);
    let a: Nfa = random_nfa(&mut rng(seed), 6, &sigma, 0.3);
    let (u, v) = (to_word(&sigma, &u), to_word(&sigma, &v));
    let uv = [&u[..], &v[..]].concat();
    let lhs: StateRelation = a.ctx(&uv).unwrap();
    let rhs = a.ctx(&u).unwrap().compose(&a.ctx(&v).unwrap());
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

// ---- one-counter nets ----------------------------------------------------

pub fn macro_input() -> impl Strategy<Value = (u64, Vec<Option<u8>>, Vec<u8>, usize)> {
    (any::<u64>(), prop::collection::vec(prop::option::of(0u8..5), 4), prop::collection::vec(0u8..3, 4), 0usize..3)
}

/// `M ≤ M'` implies `step(M, a) ≤ step(M', a)`.
pub fn macro_monotone((seed, m, bump, letter): (u64, Vec<Option<u8>>, Vec<u8>, usize)) -> Result<(), TestCaseError> {
    let sigma = symbols(1 + (seed % 3) as usize);
    let o = random_ocn(&mut rng(seed), 4, &sigma);
    let n = o.num_states();
    // M' dominates M: every defined entry grows by `bump`, some ⊥ entries become defined.
    let lo = MacroState(m[..n].iter().map(|c| c.map(u64::from)).collect());
    let hi = MacroState(
        (0..n)
            .map(|q| match m[q] {
                Some(c) => Some(u64::from(c) + u64::from(bump[q])),
                None if bump[q] == 2 => Some(0),
                None => None,
            })
            .collect(),
    );
    prop_assert!(lo.le(&hi));
    let a = sigma[letter % sigma.len()];
    let (s1, s2) = (macro_step(&o, &lo, a).unwrap(), macro_step(&o, &hi, a).unwrap());
    prop_assert!(s1.le(&s2), "{} ≤ {} but {} ≰ {}", lo, hi, s1, s2);
    Ok(())
}

pub fn trace_input() -> impl Strategy<Value = (u64, u8, Vec<usize>)> {
    (any::<u64>(), 0u8..3, prop::collection::vec(0usize..3, 0..=6))
}

/// Macro-state membership equals explicit configuration search.
pub fn trace_equivalence((seed, counter, u): (u64, u8, Vec<usize>)) -> Result<(), TestCaseError> {
    let sigma = symbols(1 + (seed % 3) as usize);
    let o = random_ocn(&mut rng(seed), 4, &sigma);
    let c = Config { state: (seed as usize / 7) % o.num_states(), counter: u64::from(counter) };
    let u = to_word(&sigma, &u);
    prop_assert_eq!(trace_member(&o, c, &u), ocn_trace_bfs(&o, c, &u));
    // The macro state also records the exact maximal counter per state.
    let m = macro_word(&o, c, &u).unwrap();
    let cfgs = langinc::oracle::ocn_configurations(&o, c, &u);
    for q in 0..o.num_states() {
        let best = cfgs.iter().filter(|(p, _)| *p == q).map(|&(_, k)| k).max();
        prop_assert_eq!(m.0[q], best);
    }
    prop_assert_eq!(macro_init(&o, c).0[c.state], Some(c.counter));
    Ok(())
}
