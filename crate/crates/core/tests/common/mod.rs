//! Shared test support: a random RDN graph generator and a brute-force
//! fixpoint oracle that shares no code with the engine.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use rdn::builder::AgentBuilder;
use rdn::engine::Rule;
use rdn::rdf::{ns, Graph, Iri, Literal, PrefixMap, Term, Triple};

pub const NS: &str = "https://example.org/rdn#";

pub fn iri(local: &str) -> Iri {
    Iri::new(format!("{NS}{local}")).unwrap()
}

pub fn term(local: &str) -> Term {
    iri(local).into()
}

pub const PROPERTIES: [&str; 5] =
    ["hasName", "assumesAgentRole", "providesAgentRole", "hasRoleUnderName", "hasNameAsString"];
pub const CLASSES: [&str; 3] = ["Agent", "AgentRole", "Name"];

/// Ten individuals: nine IRIs and one blank node.
pub fn universe() -> Vec<Term> {
    let mut u: Vec<Term> = (0..9).map(|i| term(&format!("e{i}"))).collect();
    u.push(Term::blank("b9").unwrap());
    u
}

/// A graph of at most 30 triples over [`universe`], the five pattern
/// properties and occasional `rdf:type` triples. `hasNameAsString` and, rarely,
/// other properties get literal objects.
pub fn random_graph(rng: &mut StdRng) -> Graph {
    let u = universe();
    let n = rng.gen_range(0..=30);
    let mut g = Graph::with_prefixes(PrefixMap::standard(&Iri::new(NS).unwrap()));
    for _ in 0..n {
        let s = u.choose(rng).unwrap().clone();
        let t = if rng.gen_bool(0.15) {
            Triple::new(s, ns::rdf_type(), term(CLASSES.choose(rng).unwrap())).unwrap()
        } else {
            let p = *PROPERTIES.choose(rng).unwrap();
            let o = if p == "hasNameAsString" || rng.gen_bool(0.03) {
                Literal::string(format!("n{}", rng.gen_range(0..3))).into()
            } else {
                u.choose(rng).unwrap().clone()
            };
            Triple::new(s, iri(p), o).unwrap()
        };
        g.insert(t);
    }
    g
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

type Fact = (String, String, String);

fn fact(t: &Triple) -> Fact {
    (t.subject().to_string(), format!("<{}>", t.predicate().as_str()), t.object().to_string())
}

/// Fixpoint of the eight RDN rules computed by looping every rule over every
/// pair of facts until nothing changes. Works on N-Triples strings.
pub fn oracle_fixpoint(g: &Graph) -> BTreeSet<Fact> {
    let p = |local: &str| format!("<{NS}{local}>");
    let ty = format!("<{}>", ns::rdf_type().as_str());
    let (agent, role, name) = (p("Agent"), p("AgentRole"), p("Name"));
    let (has_name, assumes, provides, under, as_string) =
        (p("hasName"), p("assumesAgentRole"), p("providesAgentRole"), p("hasRoleUnderName"), p("hasNameAsString"));

    let mut facts: BTreeSet<Fact> = g.iter().map(fact).collect();
    loop {
        let mut new: Vec<Fact> = Vec::new();
        let snapshot: Vec<Fact> = facts.iter().cloned().collect();
        for (s, pr, o) in &snapshot {
            // single-premise rules: R7, R8, R10, R11
            if *pr == under || *pr == has_name {
                new.push((o.clone(), ty.clone(), name.clone()));
            }
            if *pr == provides {
                new.push((o.clone(), ty.clone(), role.clone()));
            }
            if *pr == as_string {
                new.push((s.clone(), ty.clone(), name.clone()));
            }
            for (s2, pr2, o2) in &snapshot {
                // R3: assumes(x,y) ∧ type(y,AgentRole) ⇒ type(x,Agent)
                if *pr == assumes && *pr2 == ty && s2 == o && *o2 == role {
                    new.push((s.clone(), ty.clone(), agent.clone()));
                }
                // R5: type(x,Agent) ∧ assumes(x,y) ⇒ type(y,AgentRole)
                if *pr == ty && *o == agent && *pr2 == assumes && s2 == s {
                    new.push((o2.clone(), ty.clone(), role.clone()));
                }
                // R15: assumes(a,r) ∧ under(r,n) ⇒ hasName(a,n)
                if *pr == assumes && *pr2 == under && s2 == o {
                    new.push((s.clone(), has_name.clone(), o2.clone()));
                }
                // R16: hasName(a,n) ∧ under(r,n) ⇒ assumes(a,r)
                if *pr == has_name && *pr2 == under && o2 == o {
                    new.push((s.clone(), assumes.clone(), s2.clone()));
                }
            }
        }
        let before = facts.len();
        // literal subjects are not expressible as triples
        facts.extend(new.into_iter().filter(|(s, _, _)| !s.starts_with('"')));
        if facts.len() == before {
            return facts;
        }
    }
}

pub fn facts(g: &Graph) -> BTreeSet<Fact> {
    g.iter().map(fact).collect()
}

/// Applies randomly chosen rules one at a time, adding conclusions
/// immediately, until every rule is exhausted.
pub fn chaotic_fixpoint(g: &Graph, rules: &[Rule], rng: &mut StdRng) -> Graph {
    let mut g = g.clone();
    loop {
        let mut order: Vec<&Rule> = rules.iter().collect();
        order.shuffle(rng);
        let mut changed = false;
        for rule in order {
            for firing in rule.fire(&g) {
                changed |= g.insert(firing.conclusion);
            }
        }
        if !changed {
            return g;
        }
    }
}

/// A random builder satisfying the builder invariants.
pub fn random_builder(rng: &mut StdRng, tag: usize) -> AgentBuilder {
    let id = |kind: &str, i: usize| format!("{NS}{kind}{tag}_{i}");
    let mut b = AgentBuilder::new(&id("agent", 0)).unwrap();
    let names: Vec<String> = (0..rng.gen_range(1..=4)).map(|i| id("name", i)).collect();
    for (i, n) in names.iter().enumerate() {
        let s: String = (0..rng.gen_range(0..6)).map(|_| rng.gen_range(b'a'..=b'z') as char).collect();
        b = b.with_name(n, &format!("{s}{}", if i % 2 == 0 { "" } else { " \"q\"" })).unwrap();
    }
    for r in 0..rng.gen_range(0..=4) {
        let provider = match rng.gen_range(0..4) {
            0 => None,
            1 => Some(id("work", r)),
            2 => Some(id("work", 0)),
            _ => Some(names.choose(rng).unwrap().clone()),
        };
        let under = if rng.gen_bool(0.7) { Some(names.choose(rng).unwrap().clone()) } else { None };
        b = b.with_role(&id("role", r), provider.as_deref(), under.as_deref()).unwrap();
    }
    b
}
