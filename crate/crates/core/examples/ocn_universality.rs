//! Checks whether a one-counter net accepts every word of a regular language.
//!
//! `cargo run --example ocn_universality`

use langinc::ocn::{fainc_ocn_run, macro_word};
use langinc::regular_inclusion::RunOptions;
use langinc::{fixtures, format_word, word};

fn main() -> langinc::Result<()> {
    let o = fixtures::fig3_ocn();
    let c = o.config("q1:0")?;
    println!("states {:?}; macro states from q1:0:", o.state_names());
    for u in ["", "a", "aa", "aaa", "aaaa"] {
        println!("  {:>5} -> {}", format_word(&word(u)), macro_word(&o, c, &word(u))?);
    }

    for (name, a) in [("a*", fixtures::a_star()), ("a*b", fixtures::a_star_b())] {
        let run = fainc_ocn_run(&a, &o, c, &RunOptions::traced())?;
        let v = &run.verdict;
        println!("{name} ⊆ T(q1:0): {} ({} iterations)", v.included, v.stats.iterations);
        if let Some(w) = &v.witness {
            println!("  not a trace: {}", format_word(w));
        }
    }
    Ok(())
}
