//! Acceptance runner: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{props, random_cfg, random_nfa, set, symbols, vector};
use langinc::cfg_inclusion::{cfginc_antichain_run, cfginc_word_run};
use langinc::grammars::base_vector;
use langinc::ocn::{macro_init, macro_word, ocn_order, MacroState};
use langinc::oracle::{oracle_bounded, oracle_nfa_inclusion, Language};
use langinc::regular_inclusion::{alpha, fainc_antichain_run, fainc_gfp_run, fainc_word_run, RunOptions};
use langinc::regular_orders::{nerode_left, sim_left, state_left};
use langinc::{
    align, ctx_order, cyk_member, fainc_antichain, fainc_antichain_dual, fainc_gfp, fainc_word, fixtures, format_word,
    myhill_order, to_cnf, word, Nfa, OrderKind, Side, Symbol, WordQuasiorder,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn no_prune() -> RunOptions {
    RunOptions { trace: true, ..RunOptions::default() }
}

fn wv(components: &[&[&str]]) -> Vec<BTreeSet<String>> {
    components.iter().map(|c| set(c)).collect()
}

fn c1_nerode_regression() -> Outcome {
    let t = Instant::now();
    let (a1, a2) = (fixtures::fig2_a1(), fixtures::fig2_a2());
    let run = fainc_word_run(&a1, |w| a2.member(w), &nerode_left(&a2), &no_prune()).map_err(err)?;
    let out = vector(&run.fixpoint);
    ensure!(out == wv(&[&["a", "b", "c"], &[""]]), "output {out:?}");
    ensure!(run.iterates.len() == 3, "stopped after {} iterates, expected Y(2) ⊑-check at Y(3)", run.iterates.len());
    ensure!(run.verdict.stats.iterations == 3, "{} applications", run.verdict.stats.iterations);
    ensure!(!run.verdict.included, "verdict true");
    let w = run.verdict.witness.as_deref().map(format_word);
    ensure!(w.as_deref() == Some("c"), "witness {w:?}");
    let el = t.elapsed();
    ensure!(el < Duration::from_secs(1), "took {el:?}");
    Ok(format!("⟨{{a,b,c}},{{ε}}⟩ after 3 applications, witness c, {:.1} ms", el.as_secs_f64() * 1e3))
}

fn c2_state_regression() -> Outcome {
    let (a1, a2) = (fixtures::fig2_a1(), fixtures::fig2_a2());
    let state = fainc_word_run(&a1, |w| a2.member(w), &state_left(&a2), &no_prune()).map_err(err)?;
    let nerode = fainc_word_run(&a1, |w| a2.member(w), &nerode_left(&a2), &no_prune()).map_err(err)?;
    let out = vector(&state.fixpoint);
    ensure!(out == wv(&[&["aa", "ab", "ac", "a", "b", "c"], &[""]]), "output {out:?}");
    ensure!(!state.verdict.included, "verdict true");
    let (s, n) = (state.verdict.stats.iterations, nerode.verdict.stats.iterations);
    ensure!(s == n + 1, "state-left {s} applications vs nerode-left {n}");
    Ok(format!("⟨{{aa,ab,ac,a,b,c}},{{ε}}⟩, {s} vs {n} applications"))
}

fn c3_simulation_regression() -> Outcome {
    let (a1, a2) = (fixtures::fig2_a1(), fixtures::fig2_a2());
    let run = fainc_word_run(&a1, |w| a2.member(w), &sim_left(&a2), &no_prune()).map_err(err)?;
    let out = vector(&run.fixpoint);
    ensure!(out == wv(&[&["a", "b", "c"], &[""]]), "output {out:?}");
    ensure!(!run.verdict.included, "verdict true");
    let r = a2.reverse();
    let sim = r.max_simulation();
    let q = |n: &str| r.state_index(n).unwrap();
    for p in ["q1", "q3", "q4"] {
        ensure!(sim.contains(q("q2"), q(p)), "q2 ≼ {p} missing");
    }
    Ok("⟨{a,b,c},{ε}⟩; q2 ≼ q1, q3, q4 in the reversed automaton".into())
}

fn c4_ocn_regression() -> Outcome {
    let o = fixtures::fig3_ocn();
    let c = o.config("q1:0").map_err(err)?;
    let table = |u: &str| macro_word(&o, c, &word(u)).map(|m| m.to_string()).map_err(err);
    let expected = [("", "(0,⊥,⊥)"), ("a", "(⊥,1,⊥)"), ("aa", "(⊥,⊥,1)"), ("aaa", "(0,⊥,2)")];
    for (u, m) in expected {
        let got = table(u)?;
        ensure!(got == m, "M after {u:?} is {got}, expected {m}");
    }
    ensure!(macro_init(&o, c) == MacroState(vec![Some(0), None, None]), "initial macro state");
    let qo = ocn_order(&o, c);
    let leq = |u: &str, v: &str| qo.leq(&word(u), &word(v)).map_err(err);
    ensure!(leq("aa", "aaa")? && leq("", "aaa")?, "aa ≤ aaa or ε ≤ aaa fails");
    for (u, v) in [("", "a"), ("", "aa"), ("a", "aa")] {
        ensure!(!leq(u, v)? && !leq(v, u)?, "{u:?} and {v:?} comparable");
    }
    let a = fixtures::a_star();
    let run = langinc::ocn::fainc_ocn_run(&a, &o, c, &RunOptions::traced()).map_err(err)?;
    ensure!(run.verdict.included, "a* ⊄ T(q1:0)");
    let its: Vec<_> = run.iterates.iter().map(|v| vector(v)).collect();
    let expect = vec![wv(&[&[]]), wv(&[&[""]]), wv(&[&["a", ""]]), wv(&[&["aa", "a", ""]])];
    ensure!(its == expect, "iterates {its:?}");
    Ok("macro tables for ε, a, aa, aaa; aa ≤ aaa, ε ≤ aaa; a* universal with iterates {ε},{a,ε},{aa,a,ε}".into())
}

fn c5_cfg_regression() -> Outcome {
    let g = to_cnf(&fixtures::gex());
    let a = fixtures::fig4().with_alphabet(&g.terminals());
    let b = vector(&base_vector(&g));
    ensure!(b == wv(&[&["b"], &["a"]]), "b = {b:?}");
    for (name, qo) in [("myhill", myhill_order(&a)), ("ctx", ctx_order(&a))] {
        let run = cfginc_word_run(&g, |w| a.member(w), &qo, &no_prune()).map_err(err)?;
        let out = vector(&run.fixpoint);
        ensure!(out == wv(&[&["ba", "ab", "b"], &["a"]]), "{name}: output {out:?}");
        ensure!(run.verdict.stats.iterations == 3, "{name}: {} applications", run.verdict.stats.iterations);
        let w = run.verdict.witness.as_deref().map(format_word);
        ensure!(w.as_deref() == Some("ab"), "{name}: witness {w:?}");
    }
    let s = cfginc_antichain_run(&g, &a, &RunOptions::default()).map_err(err)?.verdict;
    ensure!(!s.included, "relation antichain says included");
    let w = s.witness.ok_or("relation antichain gave no witness")?;
    ensure!(cyk_member(&g, &w) && !a.member(&w), "invalid witness {}", format_word(&w));
    Ok(format!(
        "b = ⟨{{b}},{{a}}⟩; ⟨{{ba,ab,b}},{{a}}⟩ at the 3rd application, witness ab; antichain witness {}",
        format_word(&w)
    ))
}

fn c6_gfp_regression() -> Outcome {
    let (b, a) = (fixtures::bgfp(), fixtures::fig1());
    let run = fainc_gfp_run(&b, &a, &RunOptions::traced()).map_err(err)?;
    ensure!(run.verdict.included, "verdict false");
    let n = run.verdict.stats.iterations;
    ensure!(n <= 4, "{n} iterations");
    let (q3, q4) = (b.state_index("q3").unwrap(), b.state_index("q4").unwrap());
    let equiv = |x: &Nfa, y: &Nfa| -> Result<bool, String> {
        let (x, y) = align(x, y);
        Ok(fainc_antichain(&x, &y).map_err(err)?.included && fainc_antichain(&y, &x).map_err(err)?.included)
    };
    // (b*a)⁺
    let plus = Nfa::builder()
        .initial("p")
        .accepting("r")
        .trans("p", "b", "p")
        .trans("p", "a", "r")
        .trans("r", "a b", "p")
        .trans("r", "a", "r")
        .build();
    let y4 = run.iterates.get(2).ok_or("fewer than two refinements")?;
    ensure!(equiv(&y4[q4], &plus)?, "Y4 after two refinements is not (b*a)⁺");
    ensure!(equiv(&run.fixpoint[q3], &a)?, "final Y3 differs from L(FIG1)");
    ensure!(equiv(&run.fixpoint[q4], &plus)?, "final Y4 differs from (b*a)⁺");
    Ok(format!("included; Y4⁽²⁾ ≡ (b*a)⁺, Y3 ≡ L(A); {n} iterations"))
}

fn c7_nfa_differential() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut pairs, mut negatives, mut runs) = (0, 0, 0);
    while pairs < 500 {
        let sigma = symbols(rng.gen_range(1..=3));
        let density = [0.1, 0.2, 0.3, 0.4, 0.5][pairs % 5];
        let a1 = random_nfa(&mut rng, 6, &sigma, density);
        let a2 = random_nfa(&mut rng, 6, &sigma, density);
        let (expect, _) = oracle_nfa_inclusion(&a1, &a2);
        let mut results = Vec::new();
        for kind in OrderKind::ALL {
            for side in [Side::Left, Side::Right] {
                let qo = kind.build(&a2, side);
                for prune in [true, false] {
                    let v = fainc_word(&a1, |w| a2.member(w), &*qo, prune).map_err(err)?;
                    results.push((format!("word {kind} {side:?} prune={prune}"), v));
                }
            }
        }
        results.push(("antichain".into(), fainc_antichain(&a1, &a2).map_err(err)?));
        results.push(("antichain-dual".into(), fainc_antichain_dual(&a1, &a2).map_err(err)?));
        let gfp = fainc_gfp(&a1, &a2).map_err(|e| format!("gfp on pair {pairs}: {e}\nA1:\n{a1}\nA2:\n{a2}"))?;
        results.push(("gfp".into(), gfp));
        for (name, v) in &results {
            ensure!(
                v.included == expect,
                "pair {pairs}: {name} says {}, oracle {expect}\nA1:\n{a1}\nA2:\n{a2}",
                v.included
            );
            if !v.included {
                let w = v.witness.as_ref().ok_or(format!("pair {pairs}: {name} gave no witness"))?;
                ensure!(a1.member(w) && !a2.member(w), "pair {pairs}: {name} witness {} invalid", format_word(w));
            }
        }
        runs += results.len();
        negatives += usize::from(!expect);
        pairs += 1;
    }
    let el = t.elapsed();
    ensure!(el < Duration::from_secs(60), "took {el:?}");
    Ok(format!(
        "{pairs} pairs ({negatives} non-inclusions), {runs} runs agree with the oracle in {:.1} s",
        el.as_secs_f64()
    ))
}

fn c8_cfg_differential() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut n, mut negatives) = (0, 0);
    while n < 200 {
        let sigma: Vec<Symbol> = symbols(rng.gen_range(1..=2));
        let cfg = random_cfg(&mut rng, 4, &sigma);
        let g = to_cnf(&cfg);
        let a = random_nfa(&mut rng, 5, &sigma, 0.3).with_alphabet(&g.terminals());
        let ctx = langinc::cfginc_word(&g, |w| a.member(w), &ctx_order(&a), true).map_err(err)?;
        let my = langinc::cfginc_word(&g, |w| a.member(w), &myhill_order(&a), true).map_err(err)?;
        let ac = langinc::cfginc_antichain(&g, &a).map_err(err)?;
        ensure!(
            ctx.included == my.included && my.included == ac.included,
            "instance {n}: ctx {} myhill {} antichain {}\n{cfg}\n{a}",
            ctx.included,
            my.included,
            ac.included
        );
        if ac.included {
            let b = oracle_bounded(Language::Cfg(&cfg), |w| a.member(w), 10);
            ensure!(b.included, "instance {n}: refuted by {}", format_word(&b.witness.unwrap_or_default()));
        } else {
            negatives += 1;
            let b = oracle_bounded(Language::Cfg(&cfg), |w| a.member(w), 8);
            ensure!(!b.included, "instance {n}: no counterexample up to length 8\n{cfg}\n{a}");
            for v in [&ctx, &my, &ac] {
                let w = v.witness.as_ref().ok_or(format!("instance {n}: missing witness"))?;
                ensure!(cyk_member(&g, w) && !a.member(w), "instance {n}: invalid witness {}", format_word(w));
            }
        }
        n += 1;
    }
    Ok(format!("{n} instances ({negatives} non-inclusions) agree, {:.1} s", t.elapsed().as_secs_f64()))
}

fn c9_properties() -> Outcome {
    props::check(props::minor_input(), props::minor_laws).map_err(|e| format!("minor laws: {e}"))?;
    props::check(props::order_input(), props::order_laws).map_err(|e| format!("quasiorder laws: {e}"))?;
    props::check(props::refinement_input(), props::refinement_chain).map_err(|e| format!("refinement: {e}"))?;
    props::check(props::ctx_input(), props::ctx_composition).map_err(|e| format!("ctx composition: {e}"))?;
    props::check(props::macro_input(), props::macro_monotone).map_err(|e| format!("macro monotonicity: {e}"))?;
    props::check(props::trace_input(), props::trace_equivalence).map_err(|e| format!("trace equivalence: {e}"))?;
    // The refinement chain is also checked exhaustively on short words.
    for (name, a) in fixtures::nfa_files() {
        let ws = langinc::symbol::words_up_to(a.alphabet(), 4);
        for side in [Side::Left, Side::Right] {
            let (s, m, n) =
                (OrderKind::State.build(&a, side), OrderKind::Sim.build(&a, side), OrderKind::Nerode.build(&a, side));
            ensure!(langinc::regular_orders::refines(&*s, &*m, &ws).map_err(err)?, "{name}: state ⊄ sim ({side:?})");
            ensure!(langinc::regular_orders::refines(&*m, &*n, &ws).map_err(err)?, "{name}: sim ⊄ nerode ({side:?})");
        }
    }
    Ok(format!("6 suites × {} cases, plus exhaustive refinement on words ≤ 4", props::CASES))
}

fn c10_lockstep() -> Outcome {
    let cases = [
        ("fig2", fixtures::fig2_a1(), fixtures::fig2_a2()),
        ("bgfp/fig1", fixtures::bgfp(), fixtures::fig1()),
        ("fig1/fig4", fixtures::fig1(), fixtures::fig4()),
        ("a*b/fig4", fixtures::a_star_b(), fixtures::fig4()),
        ("fig4/fig2a2", fixtures::fig4(), fixtures::fig2_a2()),
    ];
    let mut steps = 0;
    for (name, a1, a2) in cases {
        let (a1, a2) = align(&a1, &a2);
        let w = fainc_word_run(&a1, |u| a2.member(u), &state_left(&a2), &no_prune()).map_err(err)?;
        let s = fainc_antichain_run(&a1, &a2, &RunOptions::traced()).map_err(err)?;
        ensure!(
            w.iterates.len() == s.iterates.len(),
            "{name}: {} word iterates vs {} antichain iterates",
            w.iterates.len(),
            s.iterates.len()
        );
        for (n, (wi, si)) in w.iterates.iter().zip(&s.iterates).enumerate() {
            for q in 0..a1.num_states() {
                let lhs: BTreeSet<_> = alpha(&a2, wi[q].iter()).iter().map(|x| x.iter().collect::<Vec<_>>()).collect();
                let rhs: BTreeSet<_> = si[q].iter().map(|t| t.key.iter().collect::<Vec<_>>()).collect();
                ensure!(lhs == rhs, "{name}: iterate {n}, state {q}: α(word) {lhs:?} vs antichain {rhs:?}");
            }
        }
        ensure!(w.verdict.included == s.verdict.included, "{name}: verdicts differ");
        steps += w.iterates.len();
    }
    Ok(format!("5 instances, {steps} iterates match componentwise"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("nerode-left word iteration on the two-automaton fixture", c1_nerode_regression),
        ("state-left word iteration, one more step than nerode", c2_state_regression),
        ("simulation-left word iteration and reversed simulation", c3_simulation_regression),
        ("one-counter net macro states, order and universality", c4_ocn_regression),
        ("grammar inclusion regressions", c5_cfg_regression),
        ("greatest fixpoint regression", c6_gfp_regression),
        ("random automaton differential suite", c7_nfa_differential),
        ("random grammar differential suite", c8_cfg_differential),
        ("property suites", c9_properties),
        ("word/antichain lockstep", c10_lockstep),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
