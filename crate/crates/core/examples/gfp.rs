//! Greatest-fixpoint inclusion check, printing each iterate's languages.
//!
//! `cargo run --example gfp`

use langinc::regular_inclusion::{fainc_gfp_run, RunOptions};
use langinc::symbol::words_up_to;
use langinc::{fixtures, format_word};

fn main() -> langinc::Result<()> {
    let (a1, a2) = (fixtures::bgfp(), fixtures::fig1());
    let run = fainc_gfp_run(&a1, &a2, &RunOptions::traced())?;
    println!("included = {}, iterations = {}", run.verdict.included, run.verdict.stats.iterations);
    let sample = words_up_to(a1.alphabet(), 3);
    for (k, y) in run.iterates.iter().enumerate() {
        println!("iterate {k}:");
        for (q, lang) in y.iter().enumerate() {
            // Each component is a regular language, shown by its short members.
            let members: Vec<String> = sample.iter().filter(|w| lang.member(w)).map(|w| format_word(w)).collect();
            println!("  Y[{}] ∋ {}", a1.state_name(q), members.join(" "));
        }
    }
    Ok(())
}
