//! Antichain inclusion checks in both directions, with the final antichains.
//!
//! `cargo run --example antichain`

use langinc::regular_inclusion::{fainc_antichain_dual, fainc_antichain_run, RunOptions};
use langinc::{fixtures, format_word, Nfa};

fn show(a2: &Nfa, s: &langinc::StateSet) -> String {
    let names: Vec<&str> = s.iter().map(|q| a2.state_name(q)).collect();
    format!("{{{}}}", names.join(","))
}

fn main() -> langinc::Result<()> {
    for (name, a1, a2) in [
        ("a*(a+b+c) in fig2_a2", fixtures::fig2_a1(), fixtures::fig2_a2()),
        ("bgfp in fig1", fixtures::bgfp(), fixtures::fig1()),
    ] {
        let run = fainc_antichain_run(&a1, &a2, &RunOptions::default())?;
        let v = &run.verdict;
        println!("{name}: included = {} after {} iterations", v.included, v.stats.iterations);
        for (q, ac) in run.fixpoint.iter().enumerate() {
            let sets: Vec<String> =
                ac.iter().map(|e| format!("{} via {}", show(&a2, &e.key), format_word(&e.witness))).collect();
            println!("  {}: {}", a1.state_name(q), sets.join("; "));
        }
        // The forward variant works on post-images instead of pre-images.
        let dual = fainc_antichain_dual(&a1, &a2)?;
        assert_eq!(dual.included, v.included);
        if let Some(w) = v.witness.as_ref().or(dual.witness.as_ref()) {
            println!("  counterexample: {}", format_word(w));
        }
    }
    Ok(())
}
