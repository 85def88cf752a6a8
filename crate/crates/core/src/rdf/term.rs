use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use super::ns;

/// Errors raised when constructing terms or triples from invalid parts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("invalid IRI {0:?}: {1}")]
    InvalidIri(String, &'static str),
    #[error("invalid blank node label {0:?}")]
    InvalidBlankNode(String),
    #[error("literal cannot be used as a triple subject")]
    LiteralSubject,
    #[error("predicate must be an IRI")]
    NonIriPredicate,
}

/// An absolute IRI.
///
/// Cloning is cheap; the string is shared.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Iri(Arc<str>);

impl Iri {
    /// Validates `s` as an absolute IRI: a scheme followed by `:`, no
    /// whitespace and none of the characters Turtle forbids inside `<...>`.
    pub fn new(s: impl AsRef<str>) -> Result<Self, TermError> {
        let s = s.as_ref();
        if s.is_empty() {
            return Err(TermError::InvalidIri(s.to_owned(), "empty"));
        }
        if s.chars().any(|c| c.is_whitespace() || c.is_control()) {
            return Err(TermError::InvalidIri(s.to_owned(), "contains whitespace"));
        }
        if s.chars().any(|c| matches!(c, '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\')) {
            return Err(TermError::InvalidIri(s.to_owned(), "contains a forbidden character"));
        }
        let scheme_end = s.find(':').ok_or_else(|| TermError::InvalidIri(s.to_owned(), "missing scheme"))?;
        let scheme = &s[..scheme_end];
        let mut chars = scheme.chars();
        let scheme_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'));
        if !scheme_ok {
            return Err(TermError::InvalidIri(s.to_owned(), "malformed scheme"));
        }
        Ok(Iri(Arc::from(s)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

impl TryFrom<&str> for Iri {
    type Error = TermError;

    fn try_from(s: &str) -> Result<Self, Self::Error> {
        Iri::new(s)
    }
}

/// A labelled blank node. Labels match `[A-Za-z0-9_]+`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlankNode(Arc<str>);

impl BlankNode {
    pub fn new(label: impl AsRef<str>) -> Result<Self, TermError> {
        let label = label.as_ref();
        if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(TermError::InvalidBlankNode(label.to_owned()));
        }
        Ok(BlankNode(Arc::from(label)))
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for BlankNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "_:{}", self.0)
    }
}

/// A typed literal. Two literals are equal iff lexical form and datatype match.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    lexical: Arc<str>,
    datatype: Iri,
}

impl Literal {
    pub fn new(lexical: impl AsRef<str>, datatype: Iri) -> Self {
        Literal { lexical: Arc::from(lexical.as_ref()), datatype }
    }

    /// A literal typed `xsd:string`.
    pub fn string(lexical: impl AsRef<str>) -> Self {
        Literal::new(lexical, ns::xsd_string())
    }

    pub fn lexical_form(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> &Iri {
        &self.datatype
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}^^{}", self.lexical, self.datatype)
    }
}

/// An RDF term. The derived ordering (IRIs, then blank nodes, then literals,
/// each by string) is the canonical order used for serialization and reports.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Iri(Iri),
    BlankNode(BlankNode),
    Literal(Literal),
}

impl Term {
    pub fn iri(s: impl AsRef<str>) -> Result<Self, TermError> {
        Iri::new(s).map(Term::Iri)
    }

    pub fn blank(label: impl AsRef<str>) -> Result<Self, TermError> {
        BlankNode::new(label).map(Term::BlankNode)
    }

    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Term::Literal(_))
    }
}

impl From<Iri> for Term {
    fn from(iri: Iri) -> Self {
        Term::Iri(iri)
    }
}

impl From<BlankNode> for Term {
    fn from(b: BlankNode) -> Self {
        Term::BlankNode(b)
    }
}

impl From<Literal> for Term {
    fn from(l: Literal) -> Self {
        Term::Literal(l)
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(i) => fmt::Debug::fmt(i, f),
            Term::BlankNode(b) => fmt::Debug::fmt(b, f),
            Term::Literal(l) => fmt::Debug::fmt(l, f),
        }
    }
}

/// N-Triples style rendering: `<iri>`, `_:label`, `"lex"^^<dt>`.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(i) => write!(f, "<{}>", i.as_str()),
            Term::BlankNode(b) => write!(f, "_:{}", b.label()),
            Term::Literal(l) => {
                write!(f, "\"{}\"^^<{}>", escape_string(l.lexical_form()), l.datatype().as_str())
            }
        }
    }
}

pub(crate) fn escape_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c => out.push(c),
        }
    }
    out
}

/// A subject–predicate–object statement.
///
/// Subjects are IRIs or blank nodes, predicates are IRIs; this is enforced at
/// construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    subject: Term,
    predicate: Iri,
    object: Term,
}

impl Triple {
    pub fn new(subject: impl Into<Term>, predicate: Iri, object: impl Into<Term>) -> Result<Self, TermError> {
        let subject = subject.into();
        if subject.is_literal() {
            return Err(TermError::LiteralSubject);
        }
        Ok(Triple { subject, predicate, object: object.into() })
    }

    /// Builds a triple from three arbitrary terms, checking the predicate is an IRI.
    pub fn from_terms(subject: Term, predicate: Term, object: Term) -> Result<Self, TermError> {
        match predicate {
            Term::Iri(p) => Triple::new(subject, p, object),
            _ => Err(TermError::NonIriPredicate),
        }
    }

    pub fn subject(&self) -> &Term {
        &self.subject
    }

    pub fn predicate(&self) -> &Iri {
        &self.predicate
    }

    pub fn object(&self) -> &Term {
        &self.object
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {:?} {:?}", self.subject, self.predicate, self.object)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <{}> {} .", self.subject, self.predicate.as_str(), self.object)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iri_validation() {
        assert!(Iri::new("https://example.org/rdn#csLewis").is_ok());
        assert!(Iri::new("urn:x").is_ok());
        assert!(Iri::new("").is_err());
        assert!(Iri::new("not an iri").is_err());
        assert!(Iri::new("relative/path").is_err());
        assert!(Iri::new("1http://x").is_err());
        assert!(Iri::new("http://x/<y>").is_err());
    }

    #[test]
    fn blank_node_labels() {
        assert!(BlankNode::new("b0").is_ok());
        assert!(BlankNode::new("a_B_9").is_ok());
        assert!(BlankNode::new("").is_err());
        assert!(BlankNode::new("a-b").is_err());
    }

    #[test]
    fn literal_subject_rejected() {
        let p = Iri::new("http://x/p").unwrap();
        let err = Triple::new(Literal::string("x"), p.clone(), Term::iri("http://x/o").unwrap());
        assert_eq!(err, Err(TermError::LiteralSubject));
        let err = Triple::from_terms(
            Term::iri("http://x/s").unwrap(),
            Term::blank("p").unwrap(),
            Term::iri("http://x/o").unwrap(),
        );
        assert_eq!(err, Err(TermError::NonIriPredicate));
    }

    #[test]
    fn literals_compare_by_lexical_form_and_datatype() {
        let a = Literal::string("1");
        let b = Literal::new("1", Iri::new("http://www.w3.org/2001/XMLSchema#integer").unwrap());
        assert_ne!(a, b);
        assert_eq!(a, Literal::string("1"));
    }

    #[test]
    fn term_order_puts_iris_first() {
        let i = Term::iri("z:z").unwrap();
        let b = Term::blank("a").unwrap();
        let l = Term::Literal(Literal::string("a"));
        assert!(i < b && b < l);
    }
}
