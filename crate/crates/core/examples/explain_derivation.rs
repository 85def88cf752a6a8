//! Prints proof trees for a few triples of the materialized example.

use rdn::engine::Explanation;
use rdn::rdf::{ns, Iri, Triple};
use rdn::{corpus, materialize, turtle};

fn main() {
    let base = Iri::new(ns::DEFAULT_BASE).unwrap();
    let graph = corpus::lewis_min();
    let prefixes = graph.prefixes().clone();
    let (_, trace) = materialize(&graph);

    let goals = [
        ":csLewis a :Agent .",
        ":csLewis :assumesAgentRole :goAuthorRole .",
        ":csLewis :hasName :csLewisNameCV .",
        ":csLewis :hasName :notAName .",
    ];
    for text in goals {
        let goal: Triple = turtle::parse(text, &base).unwrap().iter().next().unwrap().clone();
        match trace.explain(&goal) {
            Explanation::Derived(tree) => print!("{}", tree.render(&prefixes)),
            Explanation::Asserted => println!("{}  [asserted]", turtle::format_triple(&goal, &prefixes)),
            Explanation::Absent => println!("{}  [not derivable]", turtle::format_triple(&goal, &prefixes)),
        }
        println!();
    }
}
