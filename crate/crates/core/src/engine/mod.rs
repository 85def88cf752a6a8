//! Forward-chaining materialization of the RDN rules.
//!
//! Eight of the sixteen axioms are Horn rules over triples (class membership
//! is an ordinary `rdf:type` triple). [`Materializer`] runs them to the least
//! fixpoint in rounds: everything derived in round `k` becomes visible in
//! round `k + 1`. Naive evaluation re-joins every rule against the whole
//! graph each round and is the reference semantics; semi-naive evaluation
//! (the default) only considers joins touching the previous round's delta.

mod rule;
mod trace;

use std::collections::BTreeSet;

use crate::rdf::{Graph, Triple};
use crate::vocab::{tbox, Vocabulary};

pub use rule::{compile, Atom, CompileError, Firing, Rule, RuleId, Slot, Var};
pub use trace::{Derivation, DerivationTrace, Explanation, ProofTree};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Strategy {
    Naive,
    #[default]
    SemiNaive,
}

/// The compiled RDN rules for `vocab`.
pub fn rdn_rules(vocab: &Vocabulary) -> Vec<Rule> {
    compile(&tbox(), vocab).expect("the built-in TBox compiles")
}

/// Materializes `graph` with the default vocabulary and semi-naive evaluation.
pub fn materialize(graph: &Graph) -> (Graph, DerivationTrace) {
    Materializer::default().run(graph)
}

/// Triples one round of rule application derives that are not yet in `graph`.
pub fn step(graph: &Graph, rules: &[Rule]) -> BTreeSet<Triple> {
    let mut out = Vec::new();
    for rule in rules {
        rule.fire_into(graph, None, &mut out);
    }
    out.into_iter().map(|f| f.conclusion).filter(|t| !graph.contains(t)).collect()
}

#[derive(Debug, Clone)]
pub struct Materializer {
    rules: Vec<Rule>,
    strategy: Strategy,
}

impl Default for Materializer {
    fn default() -> Self {
        Materializer::new(rdn_rules(&Vocabulary::default()))
    }
}

impl Materializer {
    pub fn new(rules: Vec<Rule>) -> Self {
        Materializer { rules, strategy: Strategy::default() }
    }

    pub fn for_vocabulary(vocab: &Vocabulary) -> Self {
        Materializer::new(rdn_rules(vocab))
    }

    pub fn strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Computes the fixpoint of `graph` and the first derivation of every
    /// inferred triple. The input is left untouched.
    pub fn run(&self, graph: &Graph) -> (Graph, DerivationTrace) {
        let mut full = graph.clone();
        let mut trace = DerivationTrace::new(graph);
        // round 1 has no previous round, so every premise ranges over the input
        let mut delta: Option<Graph> = None;
        let mut round = 0;
        loop {
            round += 1;
            let mut new = Graph::new();
            let mut firings = Vec::new();
            for rule in &self.rules {
                match (&delta, self.strategy) {
                    (Some(d), Strategy::SemiNaive) => {
                        for i in 0..rule.premises.len() {
                            rule.fire_into(&full, Some((d, i)), &mut firings);
                        }
                    }
                    _ => rule.fire_into(&full, None, &mut firings),
                }
                for Firing { conclusion, premises } in firings.drain(..) {
                    if !full.contains(&conclusion) && !new.contains(&conclusion) {
                        trace.record(conclusion.clone(), rule.id, premises, round);
                        new.insert(conclusion);
                    }
                }
            }
            if new.is_empty() {
                break;
            }
            full.extend(new.iter().cloned());
            delta = Some(new);
        }
        (full, trace)
    }
}
