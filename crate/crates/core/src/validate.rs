//! Closed-world checking of the constraint axioms.
//!
//! | id | axiom | check |
//! |---|---|---|
//! | C1 | `Agent ⊑ ∃hasName.Name` | every `Agent` has a `hasName` successor |
//! | C4 | `AgentRole ⊑ ≤1 assumesAgentRole⁻.Agent` | at most one `assumesAgentRole` predecessor |
//! | C9 | `Name ⊑ ≤1 hasName⁻.Agent` | at most one `hasName` predecessor |
//! | C12–C14 | pairwise disjointness | no individual has two of the three classes |
//!
//! Missing facts count as false and distinct terms as distinct individuals.
//! With `unique_names` off, C4 and C9 are not evaluated at all (no equality
//! reasoning is attempted). By default the graph is materialized first so
//! inferred class memberships are checked too.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::engine::Materializer;
use crate::rdf::{Graph, Iri, Term, Triple, TriplePattern};
use crate::vocab::{tbox, AxiomKind, Symbol, Vocabulary};

/// Constraint identifier; `C4` comes from axiom 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConstraintId(pub u8);

impl fmt::Display for ConstraintId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.0)
    }
}

impl Serialize for ConstraintId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Check {
    /// Members of `class` need a `property` edge (reversed when `inverse`).
    SomeEdge {
        class: Iri,
        property: Iri,
        inverse: bool,
    },
    /// Members of `class` have at most one `property` predecessor
    /// (successor when `inverse` is false).
    AtMostOne {
        class: Iri,
        property: Iri,
        inverse: bool,
    },
    Disjoint {
        first: Iri,
        second: Iri,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub id: ConstraintId,
    pub axiom_index: u8,
    pub description: String,
    check: Check,
}

impl Constraint {
    /// Whether this constraint depends on the unique name assumption.
    pub fn needs_unique_names(&self) -> bool {
        matches!(self.check, Check::AtMostOne { .. })
    }
}

/// The six constraints for the default vocabulary, in id order.
pub fn constraints() -> Vec<Constraint> {
    constraints_for(&Vocabulary::default())
}

pub fn constraints_for(vocab: &Vocabulary) -> Vec<Constraint> {
    let class = |s: Symbol| match s {
        Symbol::Class(c) => vocab.class(c).clone(),
        other => panic!("expected class, found {other}"),
    };
    let property = |s: Symbol| match s {
        Symbol::Property(p) => (vocab.property(p).clone(), false),
        Symbol::InverseOf(p) => (vocab.property(p).clone(), true),
        other => panic!("expected property, found {other}"),
    };
    tbox()
        .into_iter()
        .filter(|a| a.kind.is_constraint())
        .map(|a| {
            let ps = a.participants;
            let check = match a.kind {
                AxiomKind::ExistentialConstraint => {
                    let (property, inverse) = property(ps[1]);
                    Check::SomeEdge { class: class(ps[0]), property, inverse }
                }
                AxiomKind::InverseFunctionalConstraint => {
                    let (property, inverse) = property(ps[1]);
                    Check::AtMostOne { class: class(ps[0]), property, inverse }
                }
                AxiomKind::DisjointnessConstraint => Check::Disjoint { first: class(ps[0]), second: class(ps[1]) },
                _ => unreachable!("filtered by is_constraint"),
            };
            Constraint { id: ConstraintId(a.index), axiom_index: a.index, description: a.dl.to_owned(), check }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CheckOptions {
    pub materialize_first: bool,
    pub unique_names: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { materialize_first: true, unique_names: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub constraint: ConstraintId,
    pub focus: Term,
    /// Triples of the checked graph that together exhibit the breach.
    pub witnesses: Vec<Triple>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationReport {
    /// Sorted by constraint id, then focus.
    pub violations: Vec<Violation>,
    pub checked_graph_size: usize,
    pub options: CheckOptions,
    /// Constraints skipped under the selected options.
    pub not_evaluated: Vec<ConstraintId>,
}

/// Checks `graph` against the RDN constraints with the default vocabulary.
pub fn check(graph: &Graph, options: CheckOptions) -> ViolationReport {
    Validator::default().check(graph, options)
}

#[derive(Debug, Clone)]
pub struct Validator {
    vocab: Vocabulary,
    constraints: Vec<Constraint>,
}

impl Default for Validator {
    fn default() -> Self {
        Validator::new(Vocabulary::default())
    }
}

impl Validator {
    pub fn new(vocab: Vocabulary) -> Self {
        let constraints = constraints_for(&vocab);
        Validator { vocab, constraints }
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn check(&self, graph: &Graph, options: CheckOptions) -> ViolationReport {
        let materialized;
        let checked = if options.materialize_first {
            materialized = Materializer::for_vocabulary(&self.vocab).run(graph).0;
            &materialized
        } else {
            graph
        };
        let mut violations = Vec::new();
        let mut not_evaluated = Vec::new();
        for c in &self.constraints {
            if c.needs_unique_names() && !options.unique_names {
                not_evaluated.push(c.id);
                continue;
            }
            self.evaluate(c, checked, &mut violations);
        }
        violations.sort_by(|a, b| (a.constraint, &a.focus).cmp(&(b.constraint, &b.focus)));
        ViolationReport { violations, checked_graph_size: checked.len(), options, not_evaluated }
    }

    /// Sorted members of `class`.
    fn members(&self, graph: &Graph, class: &Iri) -> Vec<Term> {
        let class = Term::Iri(class.clone());
        let mut out: Vec<Term> = graph.subjects(&self.vocab.rdf_type, &class).cloned().collect();
        out.sort();
        out
    }

    fn type_triple(&self, x: &Term, class: &Iri) -> Triple {
        Triple::new(x.clone(), self.vocab.rdf_type.clone(), class.clone()).expect("subjects are never literals")
    }

    fn evaluate(&self, c: &Constraint, graph: &Graph, out: &mut Vec<Violation>) {
        match &c.check {
            Check::SomeEdge { class, property, inverse } => {
                for x in &self.members(graph, class) {
                    let has_edge = if *inverse {
                        graph.subjects(property, x).next().is_some()
                    } else {
                        graph.objects(x, property).next().is_some()
                    };
                    if !has_edge {
                        out.push(Violation {
                            constraint: c.id,
                            focus: x.clone(),
                            witnesses: vec![self.type_triple(x, class)],
                            message: format!("{x} is a {class} but has no {property} value"),
                        });
                    }
                }
            }
            Check::AtMostOne { class, property, inverse } => {
                for x in &self.members(graph, class) {
                    let pattern = if *inverse {
                        TriplePattern::new(None, Some(property.clone()), Some(x.clone()))
                    } else {
                        TriplePattern::new(Some(x.clone()), Some(property.clone()), None)
                    };
                    let edges = graph.matching(&pattern);
                    if edges.len() > 1 {
                        let direction = if *inverse { "subjects" } else { "objects" };
                        out.push(Violation {
                            constraint: c.id,
                            focus: x.clone(),
                            message: format!(
                                "{x} is a {class} with {} {property} {direction}; at most one is allowed",
                                edges.len()
                            ),
                            witnesses: edges,
                        });
                    }
                }
            }
            Check::Disjoint { first, second } => {
                for x in &self.members(graph, first) {
                    let t2 = self.type_triple(x, second);
                    if graph.contains(&t2) {
                        out.push(Violation {
                            constraint: c.id,
                            focus: x.clone(),
                            witnesses: vec![self.type_triple(x, first), t2],
                            message: format!("{x} is both a {first} and a {second}, which are disjoint"),
                        });
                    }
                }
            }
        }
    }
}

impl ViolationReport {
    pub fn conforms(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violation counts per constraint.
    pub fn counts(&self) -> BTreeMap<ConstraintId, usize> {
        let mut out = BTreeMap::new();
        for v in &self.violations {
            *out.entry(v.constraint).or_insert(0) += 1;
        }
        out
    }

    /// One `<constraint-id> <focus> <n-witnesses>` line per violation.
    pub fn to_text(&self) -> String {
        self.violations
            .iter()
            .map(|v| format!("{} {} {}\n", v.constraint, focus_string(&v.focus), v.witnesses.len()))
            .collect()
    }

    /// Versioned JSON rendering.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct JsonViolation<'a> {
            constraint: ConstraintId,
            focus: String,
            witnesses: Vec<String>,
            message: &'a str,
        }
        #[derive(Serialize)]
        struct JsonReport<'a> {
            version: u32,
            conforms: bool,
            checked_graph_size: usize,
            materialize_first: bool,
            unique_names: bool,
            not_evaluated: &'a [ConstraintId],
            violations: Vec<JsonViolation<'a>>,
        }
        let report = JsonReport {
            version: 1,
            conforms: self.conforms(),
            checked_graph_size: self.checked_graph_size,
            materialize_first: self.options.materialize_first,
            unique_names: self.options.unique_names,
            not_evaluated: &self.not_evaluated,
            violations: self
                .violations
                .iter()
                .map(|v| JsonViolation {
                    constraint: v.constraint,
                    focus: focus_string(&v.focus),
                    witnesses: v.witnesses.iter().map(Triple::to_string).collect(),
                    message: &v.message,
                })
                .collect(),
        };
        serde_json::to_value(report).expect("report serializes")
    }
}

/// IRIs print bare, blank nodes as `_:label`.
fn focus_string(t: &Term) -> String {
    match t {
        Term::Iri(i) => i.as_str().to_owned(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::rdf::ns;

    fn term(local: &str) -> Term {
        Term::iri(format!("{}{local}", ns::DEFAULT_BASE)).unwrap()
    }

    fn typed(x: &str, class: &str) -> Triple {
        Triple::new(term(x), ns::rdf_type(), term(class)).unwrap()
    }

    fn ids(r: &ViolationReport) -> Vec<(String, Term)> {
        r.violations.iter().map(|v| (v.constraint.to_string(), v.focus.clone())).collect()
    }

    #[test]
    fn six_constraints_in_order() {
        let cs = constraints();
        let names: Vec<String> = cs.iter().map(|c| c.id.to_string()).collect();
        assert_eq!(names, ["C1", "C4", "C9", "C12", "C13", "C14"]);
        assert_eq!(cs[1].axiom_index, 4);
        assert!(cs.iter().all(|c| c.id.0 == c.axiom_index));
    }

    #[test]
    fn lewis_conforms() {
        let r = check(&corpus::lewis_full(), CheckOptions::default());
        assert!(r.conforms(), "{:?}", r.violations);
        assert_eq!(r.checked_graph_size, 18);
    }

    #[test]
    fn empty_graph_conforms() {
        assert!(check(&Graph::new(), CheckOptions::default()).conforms());
    }

    #[test]
    fn tolkien_claim_breaks_c4_and_c9() {
        let r = check(&corpus::lewis_plus_tolkien(), CheckOptions::default());
        assert_eq!(ids(&r), vec![("C4".to_owned(), term("sibAuthorRole")), ("C9".to_owned(), term("csLewisNameCV"))]);
        for v in &r.violations {
            assert_eq!(v.witnesses.len(), 2);
            assert!(v.witnesses.iter().all(|w| w.object() == &v.focus));
        }
    }

    #[test]
    fn unique_names_off_skips_cardinality() {
        let opts = CheckOptions { unique_names: false, ..CheckOptions::default() };
        let r = check(&corpus::lewis_plus_tolkien(), opts);
        assert!(r.conforms());
        assert_eq!(r.not_evaluated, vec![ConstraintId(4), ConstraintId(9)]);
    }

    #[test]
    fn agent_and_name_is_c13() {
        let g: Graph = [typed("x", "Agent"), typed("x", "Name")].into_iter().collect();
        let r = check(&g, CheckOptions { materialize_first: false, ..Default::default() });
        // C1 also fires: :x is an Agent without a name
        assert_eq!(r.counts().get(&ConstraintId(13)), Some(&1));
        assert_eq!(r.counts().get(&ConstraintId(12)), None);
        assert_eq!(r.counts().get(&ConstraintId(14)), None);
    }

    #[test]
    fn nameless_agent_is_c1_only_without_materialization_support() {
        let g: Graph = [typed("x", "Agent")].into_iter().collect();
        let r = check(&g, CheckOptions::default());
        assert_eq!(ids(&r), vec![("C1".to_owned(), term("x"))]);
        assert_eq!(r.violations[0].witnesses, vec![typed("x", "Agent")]);
    }

    #[test]
    fn inferred_agent_needs_materialization_to_be_checked() {
        // :r is a role by R8 and :x assumes it, so :x is an Agent by R3, with no name
        let text = ":p :providesAgentRole :r . :x :assumesAgentRole :r .";
        let g = crate::turtle::parse(text, &Iri::new(ns::DEFAULT_BASE).unwrap()).unwrap();
        let r = check(&g, CheckOptions::default());
        assert_eq!(ids(&r), vec![("C1".to_owned(), term("x"))]);
        let r = check(&g, CheckOptions { materialize_first: false, ..Default::default() });
        assert!(r.conforms());
        assert_eq!(r.checked_graph_size, 2);
    }

    #[test]
    fn text_and_json_renderings() {
        let r = check(&corpus::lewis_plus_tolkien(), CheckOptions::default());
        assert_eq!(
            r.to_text(),
            "C4 https://example.org/rdn#sibAuthorRole 2\nC9 https://example.org/rdn#csLewisNameCV 2\n"
        );
        let json = r.to_json();
        assert_eq!(json["version"], 1);
        assert_eq!(json["conforms"], false);
        let v = &json["violations"][0];
        assert_eq!(v["constraint"], "C4");
        assert_eq!(v["focus"], "https://example.org/rdn#sibAuthorRole");
        assert_eq!(v["witnesses"].as_array().unwrap().len(), 2);
        assert!(v["message"].as_str().unwrap().contains("at most one"));
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 4);
    }
}
