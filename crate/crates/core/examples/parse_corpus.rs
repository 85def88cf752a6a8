//! Parses the bundled C. S. Lewis data and prints it back in canonical form.

use rdn::rdf::{ns, Iri};
use rdn::{corpus, turtle};

fn main() {
    let base = Iri::new(ns::DEFAULT_BASE).unwrap();
    let (graph, warnings) = turtle::parse_with_warnings(&corpus::lewis_full_text(), &base).unwrap();
    for w in warnings {
        eprintln!("{w}");
    }
    println!("# {} triples", graph.len());
    print!("{}", turtle::serialize(&graph));

    match turtle::parse(":csLewis :hasName", &base) {
        Ok(_) => unreachable!(),
        Err(e) => println!("\n# truncated input: {e}"),
    }
}
