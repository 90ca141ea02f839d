//! Deciders for `L(G) ⊆ L(A)` with `G` context-free and `A` finite.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::automata::{Nfa, StateRelation};
use crate::error::Result;
use crate::foundations::{insert_tagged, tagged_sqsubseteq, try_minor, Kleene, Tagged};
use crate::grammars::{base_vector, fn_g, CnfGrammar, GrammarWordVector};
use crate::regular_inclusion::{covered, fainc_antichain, Run, RunOptions, Verdict, WordSet};
use crate::regular_orders::{Side, WordQuasiorder};
use crate::symbol::{concat, Symbol, Word};

/// Memoized `ctx(A, u)`, each computed from the key of `u` without its last letter.
#[derive(Clone)]
struct CtxKeys {
    nfa: Nfa,
    memo: RefCell<HashMap<Word, StateRelation>>,
}

impl CtxKeys {
    fn key(&self, u: &[Symbol]) -> Result<StateRelation> {
        if let Some(r) = self.memo.borrow().get(u) {
            return Ok(r.clone());
        }
        let r = match u.split_last() {
            None => StateRelation::identity(self.nfa.num_states()),
            Some((&a, rest)) => {
                let prefix = self.key(rest)?;
                prefix.compose(&self.nfa.ctx(&[a])?)
            }
        };
        self.memo.borrow_mut().insert(u.to_vec(), r.clone());
        Ok(r)
    }
}

/// Two-sided quasiorders keyed by `ctx(A, u)`.
#[derive(Clone)]
pub struct CtxQuasiorder {
    keys: CtxKeys,
    myhill: Option<Myhill>,
}

#[derive(Clone)]
struct Myhill {
    sep: Symbol,
    decided: RefCell<HashMap<(StateRelation, StateRelation), bool>>,
}

/// `u ≤ v ⟺ ctx(A,u) ⊆ ctx(A,v)`.
pub fn ctx_order(a: &Nfa) -> CtxQuasiorder {
    CtxQuasiorder { keys: CtxKeys { nfa: a.clone(), memo: RefCell::default() }, myhill: None }
}

/// The Myhill order of `L(A)`: `u ≤ v ⟺ {(x,y) | xuy ∈ L} ⊆ {(x,y) | xvy ∈ L}`.
///
/// Decided by antichain inclusion between automata accepting `x#y` exactly when
/// `x·w·y ∈ L(A)`, for `w = u` and `w = v` and a separator `#` outside `Σ`.
pub fn myhill_order(a: &Nfa) -> CtxQuasiorder {
    let sep = Symbol::fresh("#", a.alphabet());
    CtxQuasiorder {
        keys: CtxKeys { nfa: a.clone(), memo: RefCell::default() },
        myhill: Some(Myhill { sep, decided: RefCell::default() }),
    }
}

impl CtxQuasiorder {
    /// `ctx(A, u)`.
    pub fn key(&self, u: &[Symbol]) -> Result<StateRelation> {
        self.keys.key(u)
    }

    /// Two copies of `A` joined by `#`-transitions along `r`.
    fn separated(&self, r: &StateRelation, sep: Symbol) -> Nfa {
        let a = &self.keys.nfa;
        let n = a.num_states();
        let names = (0..2 * n).map(|q| format!("{}.{}", a.state_name(q % n), q / n)).collect();
        let trans = a
            .transitions()
            .iter()
            .flat_map(|&(p, s, q)| [(p, s, q), (p + n, s, q + n)])
            .chain(r.pairs().map(|(p, q)| (p, sep, q + n)));
        Nfa::new(
            names,
            a.alphabet().iter().copied().chain([sep]),
            a.initial().iter(),
            a.finals().iter().map(|q| q + n),
            trans,
        )
        .expect("separated automaton is well-formed")
    }
}

impl WordQuasiorder for CtxQuasiorder {
    fn side(&self) -> Side {
        Side::Both
    }

    fn name(&self) -> &'static str {
        if self.myhill.is_some() {
            "myhill"
        } else {
            "ctx"
        }
    }

    fn leq(&self, u: &[Symbol], v: &[Symbol]) -> Result<bool> {
        let (ru, rv) = (self.keys.key(u)?, self.keys.key(v)?);
        if ru.is_subset(&rv) {
            return Ok(true);
        }
        let Some(m) = &self.myhill else { return Ok(false) };
        let pair = (ru, rv);
        if let Some(&b) = m.decided.borrow().get(&pair) {
            return Ok(b);
        }
        let b = fainc_antichain(&self.separated(&pair.0, m.sep), &self.separated(&pair.1, m.sep))?.included;
        m.decided.borrow_mut().insert(pair, b);
        Ok(b)
    }
}

/// Word-based check of `L(G)` against the language decided by `l2_member`.
pub fn cfginc_word(
    g: &CnfGrammar,
    l2_member: impl Fn(&[Symbol]) -> bool,
    qo: &dyn WordQuasiorder,
    prune: bool,
) -> Result<Verdict> {
    Ok(cfginc_word_run(g, l2_member, qo, &RunOptions { prune, ..Default::default() })?.verdict)
}

/// [`cfginc_word`] returning the fixpoint and, if requested, the iterates.
pub fn cfginc_word_run(
    g: &CnfGrammar,
    l2_member: impl Fn(&[Symbol]) -> bool,
    qo: &dyn WordQuasiorder,
    opts: &RunOptions,
) -> Result<Run<GrammarWordVector>> {
    let base = base_vector(g);
    let leq = |u: &Word, v: &Word| qo.leq(u, v);
    let f = |x: &GrammarWordVector| -> Result<GrammarWordVector> {
        let mut y = base.clone();
        for (yi, si) in y.iter_mut().zip(fn_g(g, x)) {
            yi.extend(si);
        }
        if opts.prune {
            for yi in y.iter_mut() {
                *yi = try_minor(std::mem::take(yi), leq)?.into_iter().collect();
            }
        }
        Ok(y)
    };
    let conv = |fx: &GrammarWordVector, x: &GrammarWordVector| -> Result<bool> {
        for (a, b) in fx.iter().zip(x) {
            if !covered(a, b, leq)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let iterates = RefCell::new(Vec::new());
    let mut k =
        Kleene::new().cap(opts.cap).measure(|x: &GrammarWordVector| x.iter().map(WordSet::len).max().unwrap_or(0));
    if opts.trace {
        k = k.observe(|x: &GrammarWordVector| iterates.borrow_mut().push(x.clone()));
    }
    let (fixpoint, stats) = k.run(conv, f, vec![WordSet::new(); g.num_vars()])?;
    let failing: Vec<Word> = fixpoint[0].iter().filter(|w| !l2_member(w)).cloned().collect();
    let witness = match failing.is_empty() {
        true => None,
        false => try_minor(failing, leq)?.into_iter().next(),
    };
    Ok(Run {
        verdict: Verdict { included: witness.is_none(), witness, stats },
        fixpoint,
        iterates: iterates.into_inner(),
    })
}

/// One antichain of witness-tagged relations per grammar variable.
pub type RelationAntichainVector = Vec<Vec<Tagged<StateRelation>>>;

fn rel_le(x: &StateRelation, y: &StateRelation) -> bool {
    x.is_subset(y)
}

/// `α(b)`: per variable, the minor of `ctx(A, β)` over its terminal and ε productions.
pub fn alpha_base(g: &CnfGrammar, a: &Nfa) -> RelationAntichainVector {
    base_vector(g)
        .iter()
        .map(|bi| {
            let mut ac = Vec::new();
            for beta in bi {
                let r = match beta.as_slice() {
                    [] => StateRelation::identity(a.num_states()),
                    [s] => a.ctx_lenient(*s),
                    _ => unreachable!("base words have length at most one"),
                };
                insert_tagged(&mut ac, r, beta.clone(), rel_le);
            }
            ac
        })
        .collect()
}

/// `Fn_G^A(X)_i = ⌊{R ∘ S | X_i → X_j X_k, R ∈ X_j, S ∈ X_k}⌋`, concatenating witnesses.
pub fn fn_g_abstract(g: &CnfGrammar, _a: &Nfa, x: &RelationAntichainVector) -> RelationAntichainVector {
    let mut out = vec![Vec::new(); g.num_vars()];
    compose_into(g, x, &mut out);
    out
}

fn compose_into(g: &CnfGrammar, x: &RelationAntichainVector, out: &mut RelationAntichainVector) {
    for &(i, j, k) in g.binary() {
        for r in &x[j] {
            for s in &x[k] {
                insert_tagged(&mut out[i], r.key.compose(&s.key), concat(&r.witness, &s.witness), rel_le);
            }
        }
    }
}

/// Relation-antichain check of `L(G) ⊆ L(A)`.
pub fn cfginc_antichain(g: &CnfGrammar, a: &Nfa) -> Result<Verdict> {
    Ok(cfginc_antichain_run(g, a, &RunOptions::default())?.verdict)
}

pub fn cfginc_antichain_run(g: &CnfGrammar, a: &Nfa, opts: &RunOptions) -> Result<Run<RelationAntichainVector>> {
    let base = alpha_base(g, a);
    let f = |x: &RelationAntichainVector| {
        let mut y = base.clone();
        compose_into(g, x, &mut y);
        Ok(y)
    };
    let conv = |fx: &RelationAntichainVector, x: &RelationAntichainVector| {
        Ok(fx.iter().zip(x).all(|(p, q)| tagged_sqsubseteq(p, q, rel_le)))
    };
    let iterates = RefCell::new(Vec::new());
    let mut k =
        Kleene::new().cap(opts.cap).measure(|x: &RelationAntichainVector| x.iter().map(Vec::len).max().unwrap_or(0));
    if opts.trace {
        k = k.observe(|x: &RelationAntichainVector| iterates.borrow_mut().push(x.clone()));
    }
    let (fixpoint, stats) = k.run(conv, f, vec![Vec::new(); g.num_vars()])?;
    let witness = fixpoint[0].iter().find(|e| !e.key.meets(a.initial(), a.finals())).map(|e| e.witness.clone());
    Ok(Run {
        verdict: Verdict { included: witness.is_none(), witness, stats },
        fixpoint,
        iterates: iterates.into_inner(),
    })
}
