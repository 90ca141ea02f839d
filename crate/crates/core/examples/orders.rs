//! Compares the word quasiorders available for one automaton.
//!
//! For each order, counts how many pairs of short words it relates and checks
//! the refinement chain `state ⊆ simulation ⊆ nerode`.
//!
//! `cargo run --example orders`

use langinc::regular_orders::refines;
use langinc::symbol::words_up_to;
use langinc::{ctx_order, fixtures, myhill_order, OrderKind, Side, WordQuasiorder};

fn related(qo: &dyn WordQuasiorder, words: &[langinc::Word]) -> langinc::Result<usize> {
    let mut n = 0;
    for u in words {
        for v in words {
            n += usize::from(qo.leq(u, v)?);
        }
    }
    Ok(n)
}

fn main() -> langinc::Result<()> {
    let a = fixtures::fig4();
    let words = words_up_to(a.alphabet(), 3);
    println!("{} words up to length 3", words.len());
    for side in [Side::Left, Side::Right] {
        let built: Vec<_> = OrderKind::ALL.iter().map(|k| (k, k.build(&a, side))).collect();
        for (k, qo) in &built {
            println!("{side:?} {k}: {} related pairs", related(qo.as_ref(), &words)?);
        }
        for w in built.windows(2) {
            println!("  {} refines {}: {}", w[0].0, w[1].0, refines(w[0].1.as_ref(), w[1].1.as_ref(), &words)?);
        }
    }
    let (ctx, myhill) = (ctx_order(&a), myhill_order(&a));
    println!("two-sided ctx: {} related pairs", related(&ctx, &words)?);
    println!("two-sided myhill: {} related pairs", related(&myhill, &words)?);
    println!("ctx refines myhill: {}", refines(&ctx, &myhill, &words)?);
    Ok(())
}
