//! Word-based inclusion check with each of the three left quasiorders.
//!
//! `cargo run --example word_based`

use langinc::regular_inclusion::{fainc_word_run, RunOptions};
use langinc::regular_orders::{nerode_left, sim_left, state_left};
use langinc::{fixtures, format_word, WordQuasiorder};

fn main() -> langinc::Result<()> {
    let (a1, a2) = (fixtures::fig2_a1(), fixtures::fig2_a2());
    let orders: [Box<dyn WordQuasiorder>; 3] =
        [Box::new(state_left(&a2)), Box::new(sim_left(&a2)), Box::new(nerode_left(&a2))];
    let opts = RunOptions { trace: true, ..Default::default() };
    for qo in &orders {
        let run = fainc_word_run(&a1, |w| a2.member(w), qo.as_ref(), &opts)?;
        println!(
            "order {}: included = {}, iterations = {}",
            qo.name(),
            run.verdict.included,
            run.verdict.stats.iterations
        );
        for (q, ws) in run.fixpoint.iter().enumerate() {
            let mut words: Vec<String> = ws.iter().map(|w| format_word(w)).collect();
            words.sort();
            println!("  Y[{}] = {{{}}}", a1.state_name(q), words.join(", "));
        }
        if let Some(w) = &run.verdict.witness {
            println!("  witness: {}", format_word(w));
        }
    }
    Ok(())
}
