//! Lists the sixteen pattern axioms and the rules compiled from them, then
//! prints the OWL rendering.

use rdn::engine::rdn_rules;
use rdn::vocab::tbox_graph;
use rdn::{tbox, turtle, Vocabulary};

fn main() {
    for axiom in tbox() {
        println!("({:>2}) {:<28} {}", axiom.index, format!("{:?}", axiom.kind), axiom.dl);
    }
    let vocab = Vocabulary::default();
    println!();
    for rule in rdn_rules(&vocab) {
        println!("{rule}");
    }
    println!();
    print!("{}", turtle::serialize(&tbox_graph(&vocab)));
}
