//! Inclusion of a context-free grammar in a regular language.
//!
//! `cargo run --example cfg_inclusion`

use langinc::cfg_inclusion::cfginc_word_run;
use langinc::regular_inclusion::RunOptions;
use langinc::{cfginc_antichain, ctx_order, cyk_member, fixtures, format_word, myhill_order, to_cnf, word};

fn main() -> langinc::Result<()> {
    let g = to_cnf(&fixtures::gex());
    let a = fixtures::fig4().with_alphabet(&g.terminals());
    println!("grammar:\n{g}");
    for w in ["b", "aba", "ab", "bb"] {
        println!("  {w}: in L(G) = {}, in L(A) = {}", cyk_member(&g, &word(w)), a.member(&word(w)));
    }

    for qo in [ctx_order(&a), myhill_order(&a)] {
        let run = cfginc_word_run(&g, |w| a.member(w), &qo, &RunOptions::default())?;
        let start: Vec<String> = run.fixpoint[0].iter().map(|w| format_word(w)).collect();
        println!(
            "word algorithm, {} order: included = {}, Y[{}] = {{{}}}, witness {:?}",
            langinc::WordQuasiorder::name(&qo),
            run.verdict.included,
            g.names()[0],
            start.join(", "),
            run.verdict.witness.as_deref().map(format_word),
        );
    }
    let v = cfginc_antichain(&g, &a)?;
    println!("relation antichain: included = {}, witness {:?}", v.included, v.witness.as_deref().map(format_word));
    Ok(())
}
