//! Computes the fixpoint of the RDN rules over the example and lists what was
//! inferred, round by round.

use rdn::engine::{Materializer, Strategy};
use rdn::{corpus, turtle};

fn main() {
    let graph = corpus::lewis_full();
    let (closed, trace) = Materializer::default().strategy(Strategy::SemiNaive).run(&graph);
    println!("{} asserted, {} inferred", graph.len(), closed.len() - graph.len());
    for line in trace.render_lines(graph.prefixes()) {
        println!("{line}");
    }

    // drop the two assumesAgentRole triples; the chain rule puts them back
    let min = corpus::lewis_min();
    let (recovered, _) = Materializer::default().run(&min);
    println!("\nwithout assumesAgentRole: {} asserted, fixpoint equal: {}", min.len(), recovered == closed);
    print!("{}", turtle::serialize(&recovered));
}
