//! Language inclusion via Kleene iteration over quasiorder-closed abstractions.
//!
//! The same fixpoint scheme decides `L(A1) ⊆ L(A2)` for finite automata (over
//! words, antichains of state sets or regular languages), `L(G) ⊆ L(A)` for
//! context-free grammars, and `L(A) ⊆ T(c)` for one-counter nets. Each decider
//! returns a [`Verdict`] with a counterexample on failure.
//!
//! ```
//! use langinc::{fainc_antichain, fixtures, format_word};
//!
//! let v = fainc_antichain(&fixtures::fig2_a1(), &fixtures::fig2_a2()).unwrap();
//! assert!(!v.included);
//! assert_eq!(format_word(&v.witness.unwrap()), "a");
//! ```

pub mod automata;
pub mod cfg_inclusion;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod foundations;
pub mod grammars;
pub mod ocn;
pub mod oracle;
pub mod regular_inclusion;
pub mod regular_orders;
pub mod symbol;

pub use automata::{align, Nfa, NfaBuilder, StateRelation, StateSet};
pub use cfg_inclusion::{cfginc_antichain, cfginc_word, ctx_order, myhill_order};
pub use error::{Error, Result};
pub use foundations::{kleene, minor, sqsubseteq, Antichain, Kleene, KleeneStats, Quasiorder};
pub use grammars::{cyk_member, to_cnf, Cfg, CnfGrammar};
pub use ocn::{fainc_ocn, trace_member, Config, Ocn};
pub use regular_inclusion::{fainc_antichain, fainc_antichain_dual, fainc_gfp, fainc_word, Run, RunOptions, Verdict};
pub use regular_orders::{OrderKind, Side, WordQuasiorder};
pub use symbol::{format_word, word, Symbol, Word};
