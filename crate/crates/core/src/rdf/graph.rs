use std::collections::{BTreeSet, HashMap};

use super::{Iri, PrefixMap, Term, Triple};

/// A triple pattern; `None` positions are wildcards.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TriplePattern {
    pub subject: Option<Term>,
    pub predicate: Option<Iri>,
    pub object: Option<Term>,
}

impl TriplePattern {
    pub fn any() -> Self {
        Self::default()
    }

    pub fn new(subject: Option<Term>, predicate: Option<Iri>, object: Option<Term>) -> Self {
        TriplePattern { subject, predicate, object }
    }

    pub fn matches(&self, t: &Triple) -> bool {
        self.subject.as_ref().is_none_or(|s| s == t.subject())
            && self.predicate.as_ref().is_none_or(|p| p == t.predicate())
            && self.object.as_ref().is_none_or(|o| o == t.object())
    }
}

/// A set of triples with subject, predicate and object indexes, plus the
/// prefix map used when the graph is written out.
///
/// Equality compares triple sets only; prefixes are presentation.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    triples: BTreeSet<Triple>,
    by_subject: HashMap<Term, BTreeSet<Triple>>,
    by_predicate: HashMap<Iri, BTreeSet<Triple>>,
    by_object: HashMap<Term, BTreeSet<Triple>>,
    prefixes: PrefixMap,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_prefixes(prefixes: PrefixMap) -> Self {
        Graph { prefixes, ..Self::default() }
    }

    /// Inserts `t`; returns `false` if it was already present.
    pub fn insert(&mut self, t: Triple) -> bool {
        if self.triples.contains(&t) {
            return false;
        }
        self.by_subject.entry(t.subject().clone()).or_default().insert(t.clone());
        self.by_predicate.entry(t.predicate().clone()).or_default().insert(t.clone());
        self.by_object.entry(t.object().clone()).or_default().insert(t.clone());
        self.triples.insert(t);
        true
    }

    /// Value-style insert: returns a new graph containing `t`.
    pub fn with(mut self, t: Triple) -> Self {
        self.insert(t);
        self
    }

    pub fn remove(&mut self, t: &Triple) -> bool {
        if !self.triples.remove(t) {
            return false;
        }
        for (index, key) in [(&mut self.by_subject, t.subject()), (&mut self.by_object, t.object())] {
            if let Some(set) = index.get_mut(key) {
                set.remove(t);
                if set.is_empty() {
                    index.remove(key);
                }
            }
        }
        if let Some(set) = self.by_predicate.get_mut(t.predicate()) {
            set.remove(t);
            if set.is_empty() {
                self.by_predicate.remove(t.predicate());
            }
        }
        true
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.triples.contains(t)
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Triples in canonical (subject, predicate, object) order.
    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }

    pub fn triples(&self) -> &BTreeSet<Triple> {
        &self.triples
    }

    pub fn prefixes(&self) -> &PrefixMap {
        &self.prefixes
    }

    pub fn prefixes_mut(&mut self) -> &mut PrefixMap {
        &mut self.prefixes
    }

    /// Every triple unifying with `pattern`, in canonical order.
    pub fn matching(&self, pattern: &TriplePattern) -> Vec<Triple> {
        self.matching_iter(pattern).cloned().collect()
    }

    /// Like [`Graph::matching`] but borrows. Scans the smallest bound index.
    pub fn matching_iter<'a>(&'a self, pattern: &'a TriplePattern) -> impl Iterator<Item = &'a Triple> + 'a {
        let empty: Option<&BTreeSet<Triple>> = None;
        let mut candidates: Option<&BTreeSet<Triple>> = None;
        let mut missing = false;
        let mut consider = |set: Option<&'a BTreeSet<Triple>>| match set {
            None => missing = true,
            Some(s) => {
                if candidates.is_none_or(|c| s.len() < c.len()) {
                    candidates = Some(s);
                }
            }
        };
        if let Some(s) = &pattern.subject {
            consider(self.by_subject.get(s));
        }
        if let Some(p) = &pattern.predicate {
            consider(self.by_predicate.get(p));
        }
        if let Some(o) = &pattern.object {
            consider(self.by_object.get(o));
        }
        let source = if missing { empty } else { Some(candidates.unwrap_or(&self.triples)) };
        source.into_iter().flatten().filter(move |t| pattern.matches(t))
    }

    /// Objects `o` with `(subject, predicate, o)` in the graph.
    pub fn objects<'a>(&'a self, subject: &'a Term, predicate: &'a Iri) -> impl Iterator<Item = &'a Term> + 'a {
        self.by_subject
            .get(subject)
            .into_iter()
            .flatten()
            .filter(move |t| t.predicate() == predicate)
            .map(Triple::object)
    }

    /// Subjects `s` with `(s, predicate, object)` in the graph.
    pub fn subjects<'a>(&'a self, predicate: &'a Iri, object: &'a Term) -> impl Iterator<Item = &'a Term> + 'a {
        self.by_object
            .get(object)
            .into_iter()
            .flatten()
            .filter(move |t| t.predicate() == predicate)
            .map(Triple::subject)
    }

    /// Every distinct term occurring in the graph.
    pub fn terms(&self) -> BTreeSet<Term> {
        let mut out = BTreeSet::new();
        for t in &self.triples {
            out.insert(t.subject().clone());
            out.insert(Term::Iri(t.predicate().clone()));
            out.insert(t.object().clone());
        }
        out
    }

    pub fn is_subset(&self, other: &Graph) -> bool {
        self.triples.is_subset(&other.triples)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.triples == other.triples
    }
}

impl Eq for Graph {}

impl Extend<Triple> for Graph {
    fn extend<I: IntoIterator<Item = Triple>>(&mut self, iter: I) {
        for t in iter {
            self.insert(t);
        }
    }
}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        let mut g = Graph::new();
        g.extend(iter);
        g
    }
}

impl<'a> IntoIterator for &'a Graph {
    type Item = &'a Triple;
    type IntoIter = std::collections::btree_set::Iter<'a, Triple>;

    fn into_iter(self) -> Self::IntoIter {
        self.triples.iter()
    }
}
