use crate::rdf::{ns, BlankNode, Graph, Iri, Literal, PrefixMap, Term, Triple};

use super::{tbox, Axiom, AxiomKind, Class, Property, Symbol, Vocabulary};

/// The TBox as an OWL 2 graph (RDF mapping with labelled blank nodes for
/// restrictions, inverse property expressions and chain lists).
///
/// The result stays inside the Turtle subset this crate reads, so it can be
/// parsed back as well as handed to external OWL tools.
pub fn tbox_graph(vocab: &Vocabulary) -> Graph {
    let mut prefixes = PrefixMap::standard(&vocab.namespace);
    prefixes.insert("", vocab.namespace.clone());
    let mut out = OwlWriter { vocab, graph: Graph::with_prefixes(prefixes) };

    for class in Class::ALL {
        out.add(vocab.class(class).clone().into(), "rdf", "type", owl("Class"));
    }
    for property in Property::ALL {
        let kind = if property.is_datatype_property() { "DatatypeProperty" } else { "ObjectProperty" };
        out.add(vocab.property(property).clone().into(), "rdf", "type", owl(kind));
    }
    for axiom in tbox() {
        out.axiom(&axiom);
    }
    out.graph
}

fn iri(ns: &str, local: &str) -> Iri {
    Iri::new(format!("{ns}{local}")).expect("static IRI")
}

fn owl(local: &str) -> Term {
    iri(ns::OWL, local).into()
}

fn blank(label: String) -> Term {
    BlankNode::new(label).expect("generated label").into()
}

fn non_negative(n: u32) -> Term {
    Literal::new(n.to_string(), iri(ns::XSD, "nonNegativeInteger")).into()
}

struct OwlWriter<'a> {
    vocab: &'a Vocabulary,
    graph: Graph,
}

impl OwlWriter<'_> {
    fn add(&mut self, s: Term, pred_ns: &str, pred_local: &str, o: Term) {
        let ns = match pred_ns {
            "rdf" => ns::RDF,
            "rdfs" => ns::RDFS,
            _ => ns::OWL,
        };
        self.graph.insert(Triple::new(s, iri(ns, pred_local), o).expect("subject is never a literal"));
    }

    fn term(&self, s: Symbol) -> Term {
        self.vocab.resolve(s).clone().into()
    }

    /// A property expression; inverses get a fresh `owl:inverseOf` node.
    fn property_expression(&mut self, s: Symbol, label: String) -> Term {
        match s {
            Symbol::InverseOf(p) => {
                let node = blank(label);
                self.add(node.clone(), "owl", "inverseOf", self.vocab.property(p).clone().into());
                node
            }
            other => self.term(other),
        }
    }

    fn restriction(&mut self, axiom: &Axiom, property: Symbol) -> Term {
        let node = blank(format!("ax{}", axiom.index));
        let prop = self.property_expression(property, format!("ax{}inv", axiom.index));
        self.add(node.clone(), "rdf", "type", owl("Restriction"));
        self.add(node.clone(), "owl", "onProperty", prop);
        node
    }

    fn axiom(&mut self, axiom: &Axiom) {
        let ps = axiom.participants;
        match axiom.kind {
            AxiomKind::ExistentialConstraint | AxiomKind::ScopedRangeRule => {
                let r = self.restriction(axiom, ps[1]);
                let filler =
                    if axiom.kind == AxiomKind::ExistentialConstraint { "someValuesFrom" } else { "allValuesFrom" };
                self.add(r.clone(), "owl", filler, self.term(ps[2]));
                self.add(self.term(ps[0]), "rdfs", "subClassOf", r);
            }
            AxiomKind::StructuralTautology | AxiomKind::InverseFunctionalConstraint => {
                let r = self.restriction(axiom, ps[1]);
                let (bound, n) = if axiom.kind == AxiomKind::StructuralTautology {
                    ("minQualifiedCardinality", 0)
                } else {
                    ("maxQualifiedCardinality", 1)
                };
                self.add(r.clone(), "owl", bound, non_negative(n));
                self.add(r.clone(), "owl", "onClass", self.term(ps[2]));
                self.add(self.term(ps[0]), "rdfs", "subClassOf", r);
            }
            AxiomKind::ScopedDomainRule => {
                let r = self.restriction(axiom, ps[0]);
                self.add(r.clone(), "owl", "someValuesFrom", self.term(ps[1]));
                self.add(r, "rdfs", "subClassOf", self.term(ps[2]));
            }
            AxiomKind::GlobalRangeRule => self.add(self.term(ps[0]), "rdfs", "range", self.term(ps[1])),
            AxiomKind::GlobalDomainRule => self.add(self.term(ps[0]), "rdfs", "domain", self.term(ps[1])),
            AxiomKind::DisjointnessConstraint => self.add(self.term(ps[0]), "owl", "disjointWith", self.term(ps[1])),
            AxiomKind::PropertyChainRule => {
                let first = self.property_expression(ps[0], format!("ax{}inv0", axiom.index));
                let second = self.property_expression(ps[1], format!("ax{}inv1", axiom.index));
                let head = blank(format!("ax{}list0", axiom.index));
                let tail = blank(format!("ax{}list1", axiom.index));
                self.add(head.clone(), "rdf", "first", first);
                self.add(head.clone(), "rdf", "rest", tail.clone());
                self.add(tail.clone(), "rdf", "first", second);
                self.add(tail, "rdf", "rest", iri(ns::RDF, "nil").into());
                self.add(self.term(ps[2]), "owl", "propertyChainAxiom", head);
            }
        }
    }
}
