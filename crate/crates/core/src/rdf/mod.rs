//! Term model, prefix handling and the in-memory triple graph.

mod graph;
mod prefix;
mod term;

pub use graph::{Graph, TriplePattern};
pub use prefix::{ExpandError, PrefixMap};
pub use term::{BlankNode, Iri, Literal, Term, TermError, Triple};

pub(crate) use term::escape_string;

/// Well-known namespaces.
pub mod ns {
    use super::Iri;

    pub const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    pub const RDFS: &str = "http://www.w3.org/2000/01/rdf-schema#";
    pub const OWL: &str = "http://www.w3.org/2002/07/owl#";
    pub const XSD: &str = "http://www.w3.org/2001/XMLSchema#";

    /// Namespace bound to the empty prefix unless a document says otherwise.
    pub const DEFAULT_BASE: &str = "https://example.org/rdn#";

    pub fn rdf_type() -> Iri {
        Iri::new(format!("{RDF}type")).expect("static IRI")
    }

    pub fn xsd_string() -> Iri {
        Iri::new(format!("{XSD}string")).expect("static IRI")
    }
}
