mod common;

use common::{random_nfa, random_ocn, symbols, vector};
use langinc::ocn::{fainc_ocn_run, macro_init, macro_step, macro_word, ocn_order, MacroState};
use langinc::oracle::{oracle_bounded, Language};
use langinc::regular_inclusion::RunOptions;
use langinc::{fainc_ocn, fixtures, format_word, trace_member, word, Config, Error, Nfa, Ocn, Symbol, WordQuasiorder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fig3() -> (Ocn, Config) {
    let o = fixtures::fig3_ocn();
    let c = o.config("q1:0").unwrap();
    (o, c)
}

fn table(m: &MacroState) -> String {
    m.to_string()
}

#[test]
fn initial_macro_states() {
    let (o, c) = fig3();
    assert_eq!(table(&macro_init(&o, c)), "(0,⊥,⊥)");
    let five = Config { state: 2, counter: 5 };
    assert_eq!(macro_init(&o, five), MacroState(vec![None, None, Some(5)]));
    let inits: Vec<MacroState> = (0..3).map(|q| macro_init(&o, Config { state: q, counter: 0 })).collect();
    assert!(inits[0] != inits[1] && inits[1] != inits[2] && inits[0] != inits[2]);
}

#[test]
fn macro_steps_on_fig3() {
    let (o, c) = fig3();
    let a = Symbol::intern("a");
    let m1 = macro_step(&o, &macro_init(&o, c), a).unwrap();
    assert_eq!(table(&m1), "(⊥,1,⊥)");
    let m3 = macro_step(&o, &macro_step(&o, &m1, a).unwrap(), a).unwrap();
    assert_eq!(table(&m3), "(0,⊥,2)");
    assert_eq!(m3, macro_word(&o, c, &word("aaa")).unwrap());
    let dead = MacroState(vec![None; 3]);
    assert_eq!(macro_step(&o, &dead, a).unwrap(), dead);
}

#[test]
fn macro_step_rejects_foreign_symbols() {
    let (o, c) = fig3();
    let b = Symbol::intern("b");
    assert_eq!(macro_step(&o, &macro_init(&o, c), b), Err(Error::UnknownSymbol("b".into())));
}

#[test]
fn decrement_blocks_at_zero() {
    let o = Ocn::parse("state p\nstate q\ntrans p a -1 q\ntrans p a 0 p\n").unwrap();
    let m = macro_word(&o, Config { state: 0, counter: 0 }, &word("a")).unwrap();
    assert_eq!(m, MacroState(vec![Some(0), None]));
    let m = macro_word(&o, Config { state: 0, counter: 1 }, &word("a")).unwrap();
    assert_eq!(m, MacroState(vec![Some(1), Some(0)]));
}

#[test]
fn trace_membership() {
    let (o, c) = fig3();
    assert!(trace_member(&o, c, &word("aaa")));
    assert!(!trace_member(&o, c, &word("b")));
    for q in 0..3 {
        for n in [0, 3] {
            assert!(trace_member(&o, Config { state: q, counter: n }, &[]));
        }
    }
    // q1 –a→ q2 –a→ q3 –a→ q1 needs the counter to survive each -1.
    assert!(trace_member(&o, c, &word("aaaaaa")));
}

#[test]
fn order_examples() {
    let (o, c) = fig3();
    let qo = ocn_order(&o, c);
    let leq = |u: &str, v: &str| qo.leq(&word(u), &word(v)).unwrap();
    assert!(leq("aaa", "aaa"));
    assert!(leq("aa", "aaa") && leq("", "aaa"));
    for (u, v) in [("", "a"), ("", "aa"), ("a", "aa")] {
        assert!(!leq(u, v) && !leq(v, u), "{u:?} {v:?}");
    }
    assert_eq!(qo.side(), langinc::Side::Right);
}

#[test]
fn universality_of_fig3() {
    let (o, c) = fig3();
    let run = fainc_ocn_run(&fixtures::a_star(), &o, c, &RunOptions::traced()).unwrap();
    assert!(run.verdict.included);
    let its: Vec<_> = run.iterates.iter().map(|v| vector(v)).collect();
    assert_eq!(
        its[1..],
        [vec![common::set(&[""])], vec![common::set(&["a", ""])], vec![common::set(&["aa", "a", ""])]]
    );
    assert!(fainc_ocn(&fixtures::a_star(), &o, c).unwrap().included);
}

#[test]
fn empty_and_failing_left_languages() {
    let (o, c) = fig3();
    let empty = Nfa::builder().symbols("a").initial("p").build();
    assert!(fainc_ocn(&empty, &o, c).unwrap().included);
    let v = fainc_ocn(&fixtures::a_star_b(), &o, c).unwrap();
    assert!(!v.included);
    assert_eq!(v.witness.as_deref().map(format_word).as_deref(), Some("b"));
}

#[test]
fn random_instances_agree_with_bounded_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let (mut refuted, mut confirmed) = (0, 0);
    for _ in 0..100 {
        let sigma = symbols(rng.gen_range(1..=2));
        let a = random_nfa(&mut rng, 4, &sigma, 0.3);
        let o = random_ocn(&mut rng, 4, &sigma);
        let c = Config { state: rng.gen_range(0..o.num_states()), counter: rng.gen_range(0..3) };
        let v = fainc_ocn(&a, &o, c).unwrap();
        let b = oracle_bounded(Language::Nfa(&a), |w| trace_member(&o, c, w), 8);
        assert_eq!(v.included, b.included, "{}\n{}", a.to_text(), o.to_text());
        if let Some(w) = v.witness {
            assert!(a.member(&w) && !trace_member(&o, c, &w));
            refuted += 1;
        } else {
            confirmed += 1;
        }
    }
    assert!(refuted > 10 && confirmed > 10, "{refuted} refuted, {confirmed} confirmed");
}

#[test]
fn parsing_and_configurations() {
    let o = fixtures::fig3_ocn();
    assert_eq!(Ocn::parse(&o.to_text()).unwrap(), o);
    let e = Ocn::parse("state p\ntrans p a 2 p\n").unwrap_err();
    assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
    let e = Ocn::parse("state p\ntrans p a +1 q\n").unwrap_err();
    assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
    let e = Ocn::parse("state p\nstate p\n").unwrap_err();
    assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
    assert_eq!(o.config("q3:7").unwrap(), Config { state: 2, counter: 7 });
    assert!(o.config("q9:0").is_err());
    assert!(o.config("q1:-1").is_err());
    assert!(o.config("q1").is_err());
}
