//! Context-free grammars, Chomsky normal form, the grammar function `Fn_G` and CYK.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use indexmap::IndexSet;

use crate::automata::StateSet;
use crate::error::{parse_err, Error, Result};
use crate::regular_inclusion::WordSet;
use crate::symbol::{concat, Symbol};

/// A right-hand-side symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GSym {
    Var(usize),
    Term(Symbol),
}

/// A context-free grammar. Variable 0 is the start symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cfg {
    names: Vec<String>,
    productions: Vec<(usize, Vec<GSym>)>,
}

impl Cfg {
    pub fn new(names: Vec<String>, productions: Vec<(usize, Vec<GSym>)>) -> Result<Cfg> {
        if names.is_empty() {
            return Err(Error::Invalid("grammar has no variables".into()));
        }
        for (x, rhs) in &productions {
            let bad = *x >= names.len() || rhs.iter().any(|s| matches!(s, GSym::Var(v) if *v >= names.len()));
            if bad {
                return Err(Error::Invalid("production refers to an undeclared variable".into()));
            }
        }
        Ok(Cfg { names, productions })
    }

    /// Parses rules `X -> A B | a | eps`, one left-hand side per line, `#` comments.
    /// Left-hand sides define the variables; the first one is the start symbol.
    pub fn parse(text: &str) -> Result<Cfg> {
        let mut rules: Vec<(usize, &str, Vec<Vec<&str>>)> = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((lhs, rhs)) = line.split_once("->") else {
                return parse_err(ln + 1, "expected `X -> …`");
            };
            let lhs = lhs.trim();
            if lhs.is_empty() || lhs.contains(char::is_whitespace) {
                return parse_err(ln + 1, "left-hand side must be a single variable");
            }
            let alts: Vec<Vec<&str>> = rhs.split('|').map(|alt| alt.split_whitespace().collect()).collect();
            for alt in &alts {
                if alt.is_empty() {
                    return parse_err(ln + 1, "empty alternative (write `eps`)");
                }
                if alt.len() > 1 && alt.contains(&"eps") {
                    return parse_err(ln + 1, "`eps` must stand alone");
                }
            }
            rules.push((ln + 1, lhs, alts));
        }
        if rules.is_empty() {
            return parse_err(1, "grammar has no rules");
        }
        let mut names: IndexSet<String> = IndexSet::new();
        for (_, lhs, _) in &rules {
            names.insert((*lhs).to_owned());
        }
        let mut productions = Vec::new();
        for (_, lhs, alts) in &rules {
            let x = names.get_index_of(*lhs).unwrap();
            for alt in alts {
                let rhs = match alt.as_slice() {
                    ["eps"] => Vec::new(),
                    toks => toks
                        .iter()
                        .map(|t| match names.get_index_of(*t) {
                            Some(v) => GSym::Var(v),
                            None => GSym::Term(Symbol::intern(t)),
                        })
                        .collect(),
                };
                productions.push((x, rhs));
            }
        }
        Cfg::new(names.into_iter().collect(), productions)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn productions(&self) -> &[(usize, Vec<GSym>)] {
        &self.productions
    }

    /// Terminals occurring in productions, sorted.
    pub fn terminals(&self) -> Vec<Symbol> {
        let set: BTreeSet<Symbol> = self
            .productions
            .iter()
            .flat_map(|(_, rhs)| rhs.iter())
            .filter_map(|s| match s {
                GSym::Term(a) => Some(*a),
                GSym::Var(_) => None,
            })
            .collect();
        set.into_iter().collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (x, name) in self.names.iter().enumerate() {
            let alts: Vec<String> = self
                .productions
                .iter()
                .filter(|(y, _)| *y == x)
                .map(|(_, rhs)| match rhs.is_empty() {
                    true => "eps".to_owned(),
                    false => rhs
                        .iter()
                        .map(|s| match s {
                            GSym::Var(v) => self.names[*v].clone(),
                            GSym::Term(a) => a.as_str().to_owned(),
                        })
                        .collect::<Vec<_>>()
                        .join(" "),
                })
                .collect();
            if !alts.is_empty() {
                out.push_str(&format!("{name} -> {}\n", alts.join(" | ")));
            }
        }
        out
    }
}

impl FromStr for Cfg {
    type Err = Error;
    fn from_str(s: &str) -> Result<Cfg> {
        Cfg::parse(s)
    }
}

impl fmt::Display for Cfg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A grammar in Chomsky normal form: `X → Y Z`, `X → a`, and possibly `X0 → ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfGrammar {
    names: Vec<String>,
    binary: Vec<(usize, usize, usize)>,
    unit: Vec<(usize, Symbol)>,
    start_eps: bool,
}

impl CnfGrammar {
    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Productions `X_i → X_j X_k` as `(i, j, k)`.
    pub fn binary(&self) -> &[(usize, usize, usize)] {
        &self.binary
    }

    /// Productions `X_i → a` as `(i, a)`.
    pub fn terminal_rules(&self) -> &[(usize, Symbol)] {
        &self.unit
    }

    /// Whether `X0 → ε` is a production.
    pub fn start_nullable(&self) -> bool {
        self.start_eps
    }

    pub fn terminals(&self) -> Vec<Symbol> {
        let set: BTreeSet<Symbol> = self.unit.iter().map(|&(_, a)| a).collect();
        set.into_iter().collect()
    }

    /// The same productions as a plain [`Cfg`].
    pub fn to_cfg(&self) -> Cfg {
        let mut prods: Vec<(usize, Vec<GSym>)> = Vec::new();
        if self.start_eps {
            prods.push((0, Vec::new()));
        }
        prods.extend(self.binary.iter().map(|&(i, j, k)| (i, vec![GSym::Var(j), GSym::Var(k)])));
        prods.extend(self.unit.iter().map(|&(i, a)| (i, vec![GSym::Term(a)])));
        prods.sort_by_key(|p| p.0);
        Cfg::new(self.names.clone(), prods).expect("well-formed")
    }
}

impl fmt::Display for CnfGrammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cfg().to_text())
    }
}

/// Working representation for the conversion: productions grouped per variable.
struct Work {
    names: Vec<String>,
    prods: Vec<IndexSet<Vec<GSym>>>,
}

impl Work {
    fn fresh(&mut self, base: &str) -> usize {
        let mut name = base.to_owned();
        let mut k = 1;
        while self.names.contains(&name) {
            name = format!("{base}_{k}");
            k += 1;
        }
        self.names.push(name);
        self.prods.push(IndexSet::new());
        self.names.len() - 1
    }

    fn nullable(&self) -> HashSet<usize> {
        let mut set = HashSet::new();
        loop {
            let before = set.len();
            for (x, ps) in self.prods.iter().enumerate() {
                if ps.iter().any(|rhs| rhs.iter().all(|s| matches!(s, GSym::Var(v) if set.contains(v)))) {
                    set.insert(x);
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    fn generating(&self) -> HashSet<usize> {
        let mut set = HashSet::new();
        loop {
            let before = set.len();
            for (x, ps) in self.prods.iter().enumerate() {
                if ps.iter().any(|rhs| {
                    rhs.iter().all(|s| matches!(s, GSym::Term(_)) || matches!(s, GSym::Var(v) if set.contains(v)))
                }) {
                    set.insert(x);
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    /// Drops non-generating and unreachable variables, renumbering with the start first.
    /// Returns false when the start symbol generates nothing.
    fn remove_useless(&mut self) -> bool {
        let gen = self.generating();
        if !gen.contains(&0) {
            return false;
        }
        for ps in self.prods.iter_mut() {
            ps.retain(|rhs| rhs.iter().all(|s| !matches!(s, GSym::Var(v) if !gen.contains(v))));
        }
        let mut order = vec![0];
        let mut seen = HashSet::from([0]);
        let mut i = 0;
        while i < order.len() {
            for rhs in &self.prods[order[i]] {
                for s in rhs {
                    if let GSym::Var(v) = s {
                        if seen.insert(*v) {
                            order.push(*v);
                        }
                    }
                }
            }
            i += 1;
        }
        order.sort_unstable();
        let map: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let rename = |rhs: &Vec<GSym>| -> Vec<GSym> {
            rhs.iter()
                .map(|s| match s {
                    GSym::Var(v) => GSym::Var(map[v]),
                    t => *t,
                })
                .collect()
        };
        self.prods = order.iter().map(|&x| self.prods[x].iter().map(rename).collect()).collect();
        self.names = order.iter().map(|&x| self.names[x].clone()).collect();
        true
    }
}

/// Converts to Chomsky normal form, preserving the language.
///
/// Steps: useless-symbol removal, start isolation (only when the start symbol is
/// nullable and occurs on a right-hand side), terminal lifting, binarization,
/// ε-elimination, unit elimination, and a final cleanup. Fresh variables are
/// named `S0`, `T_<a>` and `<X>_<k>`. A grammar already in normal form comes out
/// unchanged.
pub fn to_cnf(g: &Cfg) -> CnfGrammar {
    let mut w = Work { names: g.names.clone(), prods: vec![IndexSet::new(); g.names.len()] };
    for (x, rhs) in &g.productions {
        w.prods[*x].insert(rhs.clone());
    }
    let empty =
        || CnfGrammar { names: vec![g.names[0].clone()], binary: vec![(0, 0, 0)], unit: vec![], start_eps: false };
    if !w.remove_useless() {
        return empty();
    }

    // Start isolation.
    let start_on_rhs = w.prods.iter().flatten().flatten().any(|s| *s == GSym::Var(0));
    if start_on_rhs && w.nullable().contains(&0) {
        let s0 = w.fresh("S0");
        w.prods[s0].insert(vec![GSym::Var(0)]);
        // Move the new start to index 0.
        let n = w.names.len();
        let rot = |v: usize| if v == s0 { 0 } else { v + 1 };
        let mut prods: Vec<IndexSet<Vec<GSym>>> = vec![IndexSet::new(); n];
        let mut names = vec![String::new(); n];
        for x in 0..n {
            names[rot(x)] = w.names[x].clone();
            prods[rot(x)] = w.prods[x]
                .iter()
                .map(|rhs| {
                    rhs.iter()
                        .map(|s| match s {
                            GSym::Var(v) => GSym::Var(rot(*v)),
                            t => *t,
                        })
                        .collect()
                })
                .collect();
        }
        w.names = names;
        w.prods = prods;
    }

    // Terminal lifting.
    let mut lifted: HashMap<Symbol, usize> = HashMap::new();
    for x in 0..w.names.len() {
        let ps: Vec<Vec<GSym>> = w.prods[x].iter().cloned().collect();
        let mut out = IndexSet::new();
        for rhs in ps {
            if rhs.len() < 2 {
                out.insert(rhs);
                continue;
            }
            let new_rhs = rhs
                .iter()
                .map(|s| match s {
                    GSym::Term(a) => {
                        let v = match lifted.get(a) {
                            Some(&v) => v,
                            None => {
                                let v = w.fresh(&format!("T_{a}"));
                                w.prods[v].insert(vec![GSym::Term(*a)]);
                                lifted.insert(*a, v);
                                v
                            }
                        };
                        GSym::Var(v)
                    }
                    v => *v,
                })
                .collect();
            out.insert(new_rhs);
        }
        w.prods[x] = out;
    }

    // Binarization.
    for x in 0..w.names.len() {
        let ps: Vec<Vec<GSym>> = w.prods[x].iter().cloned().collect();
        let mut out = IndexSet::new();
        for rhs in ps {
            if rhs.len() <= 2 {
                out.insert(rhs);
                continue;
            }
            let base = w.names[x].clone();
            let mut head = rhs[0];
            let mut cur: Option<usize> = None;
            let mut rest = &rhs[1..];
            while rest.len() > 1 {
                let b = w.fresh(&base);
                let pair = vec![head, GSym::Var(b)];
                match cur {
                    None => {
                        out.insert(pair);
                    }
                    Some(c) => {
                        w.prods[c].insert(pair);
                    }
                }
                cur = Some(b);
                head = rest[0];
                rest = &rest[1..];
            }
            w.prods[cur.unwrap()].insert(vec![head, rest[0]]);
        }
        w.prods[x] = out;
    }

    // ε-elimination.
    let nullable = w.nullable();
    let start_eps = nullable.contains(&0);
    for x in 0..w.names.len() {
        let ps: Vec<Vec<GSym>> = w.prods[x].iter().cloned().collect();
        let mut out = IndexSet::new();
        for rhs in ps {
            match rhs.as_slice() {
                [] => {}
                [a, b] => {
                    out.insert(rhs.clone());
                    if matches!(b, GSym::Var(v) if nullable.contains(v)) {
                        out.insert(vec![*a]);
                    }
                    if matches!(a, GSym::Var(v) if nullable.contains(v)) {
                        out.insert(vec![*b]);
                    }
                }
                _ => {
                    out.insert(rhs);
                }
            }
        }
        w.prods[x] = out;
    }

    // Unit elimination.
    let n = w.names.len();
    let mut new_prods = vec![IndexSet::new(); n];
    for (x, out) in new_prods.iter_mut().enumerate() {
        let mut reach = vec![x];
        let mut seen = HashSet::from([x]);
        let mut i = 0;
        while i < reach.len() {
            for rhs in &w.prods[reach[i]] {
                if let [GSym::Var(v)] = rhs.as_slice() {
                    if seen.insert(*v) {
                        reach.push(*v);
                    }
                }
            }
            i += 1;
        }
        for y in reach {
            for rhs in &w.prods[y] {
                if !matches!(rhs.as_slice(), [GSym::Var(_)]) {
                    out.insert(rhs.clone());
                }
            }
        }
    }
    w.prods = new_prods;

    if start_eps {
        w.prods[0].insert(Vec::new());
    }
    if !w.remove_useless() {
        return empty();
    }
    if w.prods[0].len() == 1 && w.prods[0][0].is_empty() {
        // L = {ε}: the start's only production is X0 → ε.
        return CnfGrammar { names: w.names[..1].to_vec(), binary: vec![], unit: vec![], start_eps: true };
    }
    let mut binary = Vec::new();
    let mut unit = Vec::new();
    let mut eps = false;
    for (x, ps) in w.prods.iter().enumerate() {
        for rhs in ps {
            match rhs.as_slice() {
                [] => eps = true,
                [GSym::Term(a)] => unit.push((x, *a)),
                [GSym::Var(j), GSym::Var(k)] => binary.push((x, *j, *k)),
                other => unreachable!("non-normal production {other:?}"),
            }
        }
    }
    CnfGrammar { names: w.names, binary, unit, start_eps: eps }
}

/// One word set per variable.
pub type GrammarWordVector = Vec<WordSet>;

/// `b_i = {β | X_i → β, β ∈ Σ ∪ {ε}}`.
pub fn base_vector(g: &CnfGrammar) -> GrammarWordVector {
    let mut v = vec![WordSet::new(); g.num_vars()];
    if g.start_eps {
        v[0].insert(Vec::new());
    }
    for &(i, a) in &g.unit {
        v[i].insert(vec![a]);
    }
    v
}

/// `Fn_G(X)_i = ⋃_{X_i → X_j X_k} X_j · X_k`.
pub fn fn_g(g: &CnfGrammar, x: &[WordSet]) -> GrammarWordVector {
    let mut out = vec![WordSet::new(); g.num_vars()];
    for &(i, j, k) in &g.binary {
        for u in &x[j] {
            for v in &x[k] {
                out[i].insert(concat(u, v));
            }
        }
    }
    out
}

/// CYK membership `X0 ⇒* u`.
pub fn cyk_member(g: &CnfGrammar, u: &[Symbol]) -> bool {
    let n = u.len();
    if n == 0 {
        return g.start_eps;
    }
    let nv = g.num_vars();
    // table[len-1][i]: variables deriving u[i..i+len].
    let mut table: Vec<Vec<StateSet>> = Vec::with_capacity(n);
    table.push(u.iter().map(|&a| StateSet::from_states(nv, g.unit.iter().filter(|r| r.1 == a).map(|r| r.0))).collect());
    for len in 2..=n {
        let row = (0..=n - len)
            .map(|i| {
                let mut s = StateSet::empty(nv);
                for split in 1..len {
                    let (l, r) = (&table[split - 1][i], &table[len - split - 1][i + split]);
                    for &(x, j, k) in &g.binary {
                        if l.contains(j) && r.contains(k) {
                            s.insert(x);
                        }
                    }
                }
                s
            })
            .collect();
        table.push(row);
    }
    table[n - 1][0].contains(0)
}
