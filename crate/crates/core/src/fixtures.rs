//! Small named instances used by tests, examples and documentation.

use crate::automata::Nfa;
use crate::grammars::Cfg;
use crate::ocn::Ocn;

/// `L = (b*a)*` over states `q1` (initial, final) and `q2`.
pub fn fig1() -> Nfa {
    Nfa::builder()
        .initial("q1")
        .accepting("q1")
        .trans("q1", "a", "q1")
        .trans("q1", "b", "q2")
        .trans("q2", "a", "q1")
        .trans("q2", "b", "q2")
        .build()
}

/// `L = a*(a+b+c)`.
pub fn fig2_a1() -> Nfa {
    Nfa::builder().initial("q1").state("q2").accepting("q2").trans("q1", "a", "q1").trans("q1", "a b c", "q2").build()
}

/// `L = a*(a(a+b)*a + a⁺c + ab + bb)`.
pub fn fig2_a2() -> Nfa {
    Nfa::builder()
        .initial("q1")
        .state("q2")
        .state("q3")
        .state("q4")
        .accepting("q5")
        .trans("q1", "a", "q1")
        .trans("q1", "a", "q2")
        .trans("q1", "a", "q3")
        .trans("q1", "a b", "q4")
        .trans("q2", "a", "q2")
        .trans("q2", "c", "q5")
        .trans("q3", "a b", "q3")
        .trans("q3", "a", "q5")
        .trans("q4", "b", "q5")
        .build()
}

/// `L = (b + ab*a)(a+b)*`.
pub fn fig4() -> Nfa {
    Nfa::builder()
        .initial("q1")
        .state("q2")
        .accepting("q3")
        .trans("q1", "a", "q2")
        .trans("q1", "b", "q3")
        .trans("q2", "b", "q2")
        .trans("q2", "a", "q3")
        .trans("q3", "a b", "q3")
        .build()
}

/// Two states `q3` (initial, final) and `q4`; `L = (b a⁺)*`.
pub fn bgfp() -> Nfa {
    Nfa::builder()
        .initial("q3")
        .accepting("q3")
        .trans("q3", "b", "q4")
        .trans("q4", "a", "q3")
        .trans("q4", "a", "q4")
        .symbols("a b")
        .build()
}

/// Single state accepting `a*`.
pub fn a_star() -> Nfa {
    Nfa::builder().initial("p").accepting("p").trans("p", "a", "p").build()
}

/// `L = a*b`.
pub fn a_star_b() -> Nfa {
    Nfa::builder().initial("p").accepting("r").trans("p", "a", "p").trans("p", "b", "r").build()
}

/// `X0 → X0 X1 | X1 X0 | b`, `X1 → a`; `L = a*ba*`.
pub fn gex() -> Cfg {
    Cfg::parse("X0 -> X0 X1 | X1 X0 | b\nX1 -> a\n").expect("fixture grammar parses")
}

/// Three-state one-counter net over `{a}`:
/// `q1 –a,+1→ q2`, `q2 –a,0→ q3`, `q3 –a,-1→ q1`, `q3 –a,+1→ q3`.
pub fn fig3_ocn() -> Ocn {
    Ocn::parse(
        "state q1\nstate q2\nstate q3\n\
         trans q1 a +1 q2\ntrans q2 a 0 q3\ntrans q3 a -1 q1\ntrans q3 a +1 q3\n",
    )
    .expect("fixture net parses")
}

/// Every fixture automaton paired with a file name.
pub fn nfa_files() -> Vec<(&'static str, Nfa)> {
    vec![
        ("fig1.nfa", fig1()),
        ("fig2_a1.nfa", fig2_a1()),
        ("fig2_a2.nfa", fig2_a2()),
        ("fig4.nfa", fig4()),
        ("bgfp.nfa", bgfp()),
        ("a_star.nfa", a_star()),
        ("a_star_b.nfa", a_star_b()),
    ]
}
