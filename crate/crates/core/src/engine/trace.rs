use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::rdf::{Graph, PrefixMap, Triple};
use crate::turtle::format_triple;

use super::RuleId;

/// How a triple was first derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub rule: RuleId,
    pub premises: Vec<Triple>,
    pub round: usize,
}

/// Records the asserted triples of a materialization run and the first
/// derivation of every inferred one.
///
/// Premises of a round-`k` derivation are asserted or were derived in an
/// earlier round, so following premises always terminates at asserted triples.
#[derive(Debug, Clone, Default)]
pub struct DerivationTrace {
    asserted: BTreeSet<Triple>,
    derived: BTreeMap<Triple, Derivation>,
}

/// Result of [`DerivationTrace::explain`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Explanation {
    Asserted,
    Derived(ProofTree),
    /// Neither asserted nor derivable.
    Absent,
}

/// A derivation tree. Leaves (`rule == None`) are asserted triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofTree {
    pub triple: Triple,
    pub rule: Option<RuleId>,
    pub round: usize,
    pub premises: Vec<ProofTree>,
}

impl DerivationTrace {
    pub(crate) fn new(asserted: &Graph) -> Self {
        DerivationTrace { asserted: asserted.triples().clone(), derived: BTreeMap::new() }
    }

    pub(crate) fn record(&mut self, triple: Triple, rule: RuleId, premises: Vec<Triple>, round: usize) {
        debug_assert!(premises.iter().all(|p| self.asserted.contains(p) || self.derived.contains_key(p)));
        self.derived.entry(triple).or_insert(Derivation { rule, premises, round });
    }

    pub fn is_derived(&self, t: &Triple) -> bool {
        self.derived.contains_key(t)
    }

    pub fn is_asserted(&self, t: &Triple) -> bool {
        self.asserted.contains(t)
    }

    pub fn derivation(&self, t: &Triple) -> Option<&Derivation> {
        self.derived.get(t)
    }

    /// Number of derived triples.
    pub fn len(&self) -> usize {
        self.derived.len()
    }

    pub fn is_empty(&self) -> bool {
        self.derived.is_empty()
    }

    /// Derived triples ordered by round, then triple.
    pub fn derivations(&self) -> Vec<(&Triple, &Derivation)> {
        let mut all: Vec<_> = self.derived.iter().collect();
        all.sort_by(|a, b| a.1.round.cmp(&b.1.round).then_with(|| a.0.cmp(b.0)));
        all
    }

    pub fn explain(&self, t: &Triple) -> Explanation {
        if self.asserted.contains(t) {
            Explanation::Asserted
        } else if self.derived.contains_key(t) {
            Explanation::Derived(self.tree(t))
        } else {
            Explanation::Absent
        }
    }

    fn tree(&self, t: &Triple) -> ProofTree {
        match self.derived.get(t) {
            Some(d) if !self.asserted.contains(t) => ProofTree {
                triple: t.clone(),
                rule: Some(d.rule),
                round: d.round,
                premises: d.premises.iter().map(|p| self.tree(p)).collect(),
            },
            _ => ProofTree { triple: t.clone(), rule: None, round: 0, premises: Vec::new() },
        }
    }

    /// One `DERIVED [t] BY Rn FROM [p1] [p2]` line per derived triple.
    pub fn render_lines(&self, prefixes: &PrefixMap) -> Vec<String> {
        self.derivations()
            .into_iter()
            .map(|(t, d)| {
                let mut line = format!("DERIVED [{}] BY {} FROM", format_triple(t, prefixes), d.rule);
                for p in &d.premises {
                    let _ = write!(line, " [{}]", format_triple(p, prefixes));
                }
                line
            })
            .collect()
    }
}

impl ProofTree {
    pub fn depth(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::depth).max().unwrap_or(0)
    }

    pub fn leaves(&self) -> Vec<&Triple> {
        if self.premises.is_empty() {
            return vec![&self.triple];
        }
        self.premises.iter().flat_map(ProofTree::leaves).collect()
    }

    /// Indented rendering, two spaces per level.
    pub fn render(&self, prefixes: &PrefixMap) -> String {
        let mut out = String::new();
        self.render_into(prefixes, 0, &mut out);
        out
    }

    fn render_into(&self, prefixes: &PrefixMap, depth: usize, out: &mut String) {
        let note = match self.rule {
            Some(rule) => format!("{rule}, round {}", self.round),
            None => "asserted".to_owned(),
        };
        let _ = writeln!(out, "{}{}  [{note}]", "  ".repeat(depth), format_triple(&self.triple, prefixes));
        for p in &self.premises {
            p.render_into(prefixes, depth + 1, out);
        }
    }
}
