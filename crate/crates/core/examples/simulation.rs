//! Maximal simulation of an automaton and the quasiorder it induces.
//!
//! `cargo run --example simulation`

use langinc::regular_orders::{sim_left, state_left};
use langinc::symbol::words_up_to;
use langinc::{fixtures, format_word, WordQuasiorder};

fn main() -> langinc::Result<()> {
    let a = fixtures::fig2_a2().reverse();
    let sim = a.max_simulation();
    println!("simulation preorder of the reversed automaton:");
    for (p, q) in sim.pairs().filter(|(p, q)| p != q) {
        println!("  {} is simulated by {}", a.state_name(p), a.state_name(q));
    }

    // Simulation coarsens the plain state order: more pairs of words become comparable.
    let a2 = fixtures::fig2_a2();
    let (st, si) = (state_left(&a2), sim_left(&a2));
    let words = words_up_to(a2.alphabet(), 2);
    let mut gained = Vec::new();
    for u in &words {
        for v in &words {
            if u != v && si.leq(u, v)? && !st.leq(u, v)? {
                gained.push(format!("{} ≤ {}", format_word(u), format_word(v)));
            }
        }
    }
    println!("pairs related by simulation only: {}", gained.join(", "));
    Ok(())
}
