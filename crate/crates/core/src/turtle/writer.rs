use std::fmt::Write as _;

use crate::rdf::{escape_string, ns, Graph, Iri, PrefixMap, Term, Triple};

/// Writes `graph` as Turtle.
///
/// Output is a pure function of the triple set and prefix map: prefix
/// directives in prefix order, then one block per subject in term order with
/// predicates and objects sorted and grouped with `;` and `,`.
pub fn serialize(graph: &Graph) -> String {
    let prefixes = graph.prefixes();
    let mut out = String::new();
    for (prefix, namespace) in prefixes.iter() {
        let _ = writeln!(out, "@prefix {prefix}: <{}> .", namespace.as_str());
    }

    let rdf_type = ns::rdf_type();
    let mut current_subject: Option<&Term> = None;
    let mut current_predicate: Option<&Iri> = None;
    for t in graph.iter() {
        if current_subject != Some(t.subject()) {
            if current_subject.is_some() {
                out.push_str(" .\n");
            }
            out.push('\n');
            out.push_str(&format_term(t.subject(), prefixes));
            out.push(' ');
            current_subject = Some(t.subject());
        } else if current_predicate == Some(t.predicate()) {
            out.push_str(", ");
            out.push_str(&format_term(t.object(), prefixes));
            continue;
        } else {
            out.push_str(" ;\n    ");
        }
        if t.predicate() == &rdf_type {
            out.push('a');
        } else {
            out.push_str(&format_iri(t.predicate(), prefixes));
        }
        out.push(' ');
        out.push_str(&format_term(t.object(), prefixes));
        current_predicate = Some(t.predicate());
    }
    if current_subject.is_some() {
        out.push_str(" .\n");
    }
    out
}

fn format_iri(iri: &Iri, prefixes: &PrefixMap) -> String {
    prefixes.compact(iri).unwrap_or_else(|| format!("<{}>", iri.as_str()))
}

/// Compact Turtle form of a single term under `prefixes`.
pub fn format_term(term: &Term, prefixes: &PrefixMap) -> String {
    match term {
        Term::Iri(iri) => format_iri(iri, prefixes),
        Term::BlankNode(b) => format!("_:{}", b.label()),
        Term::Literal(l) => {
            format!("\"{}\"^^{}", escape_string(l.lexical_form()), format_iri(l.datatype(), prefixes))
        }
    }
}

/// `subject predicate object` in compact form, without a terminator.
pub fn format_triple(t: &Triple, prefixes: &PrefixMap) -> String {
    format!(
        "{} {} {}",
        format_term(t.subject(), prefixes),
        format_iri(t.predicate(), prefixes),
        format_term(t.object(), prefixes)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::{Literal, TriplePattern};
    use crate::turtle::parse;
    use proptest::prelude::*;

    fn base() -> Iri {
        Iri::new(ns::DEFAULT_BASE).unwrap()
    }

    #[test]
    fn empty_graph_is_prefixes_only() {
        let g = parse("", &base()).unwrap();
        let text = serialize(&g);
        assert!(text.lines().all(|l| l.starts_with("@prefix ")));
        assert_eq!(text.lines().count(), 5);
    }

    #[test]
    fn groups_and_sorts() {
        let g = parse(":s :q :b , :a ; :p :c . :r a :T .", &base()).unwrap();
        let text = serialize(&g);
        let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('@') && !l.is_empty()).collect();
        assert_eq!(body, vec![":r a :T .", ":s :p :c ;", "    :q :a, :b ."]);
    }

    #[test]
    fn uncompactable_iris_are_bracketed() {
        let g = parse("<http://x/a/b> <http://x/p#q> \"v\" .", &base()).unwrap();
        let text = serialize(&g);
        assert!(text.contains("<http://x/a/b> <http://x/p#q> \"v\"^^xsd:string ."));
        assert_eq!(parse(&text, &base()).unwrap(), g);
    }

    #[test]
    fn literal_with_awkward_characters_round_trips() {
        let s = Term::iri("http://x/s").unwrap();
        let p = Iri::new("http://x/p").unwrap();
        let lit = Literal::string("quote \" slash \\ nl \n tab \t cr \r # ; , .");
        let g = Graph::with_prefixes(PrefixMap::standard(&base())).with(Triple::new(s, p, lit).unwrap());
        assert_eq!(parse(&serialize(&g), &base()).unwrap(), g);
    }

    #[test]
    fn format_helpers() {
        let pm = PrefixMap::standard(&base());
        let t = Triple::new(
            Term::iri(format!("{}csLewis", ns::DEFAULT_BASE)).unwrap(),
            ns::rdf_type(),
            Term::iri(format!("{}Agent", ns::DEFAULT_BASE)).unwrap(),
        )
        .unwrap();
        assert_eq!(format_triple(&t, &pm), ":csLewis rdf:type :Agent");
        let g = Graph::new().with(t);
        assert_eq!(g.matching(&TriplePattern::any()).len(), 1);
    }

    fn arb_term(subject: bool) -> impl Strategy<Value = Term> {
        let iri = prop_oneof![
            "[a-zA-Z_][a-zA-Z0-9_]{0,5}".prop_map(|l| Term::iri(format!("{}{l}", ns::DEFAULT_BASE)).unwrap()),
            "[a-z]{1,4}(/[a-z]{1,3}){0,2}".prop_map(|l| Term::iri(format!("http://ex.org/{l}")).unwrap()),
        ];
        let blank = "[a-zA-Z0-9_]{1,4}".prop_map(|l| Term::blank(l).unwrap());
        if subject {
            prop_oneof![iri, blank].boxed()
        } else {
            let lit = "[ -~\n\t\"\\\\é]{0,8}".prop_map(|s| Term::Literal(Literal::string(s)));
            prop_oneof![iri, blank, lit].boxed()
        }
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        let pred = "[a-z]{1,3}".prop_map(|l| Iri::new(format!("{}{l}", ns::DEFAULT_BASE)).unwrap());
        prop::collection::vec((arb_term(true), pred, arb_term(false)), 0..20).prop_map(|ts| {
            let mut g = Graph::with_prefixes(PrefixMap::standard(&base()));
            g.extend(ts.into_iter().map(|(s, p, o)| Triple::new(s, p, o).unwrap()));
            g
        })
    }

    proptest! {
        #[test]
        fn serialize_then_parse_is_identity(g in arb_graph()) {
            let text = serialize(&g);
            let back = parse(&text, &base()).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(serialize(&back), text);
        }
    }
}
