use std::collections::BTreeMap;

use thiserror::Error;

use super::{ns, Iri, TermError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpandError {
    #[error("unknown prefix `{0}:`")]
    UnknownPrefix(String),
    #[error("`{0}` is not a prefixed name")]
    NotPrefixed(String),
    #[error(transparent)]
    Iri(#[from] TermError),
}

/// Association from prefix labels (`""` for the default prefix) to namespace IRIs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrefixMap {
    map: BTreeMap<String, Iri>,
}

impl PrefixMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// `:` bound to `base`, plus `rdf`, `rdfs`, `owl` and `xsd`.
    pub fn standard(base: &Iri) -> Self {
        let mut map = PrefixMap::new();
        map.insert("", base.clone());
        for (p, ns) in [("rdf", ns::RDF), ("rdfs", ns::RDFS), ("owl", ns::OWL), ("xsd", ns::XSD)] {
            map.insert(p, Iri::new(ns).expect("static namespace"));
        }
        map
    }

    /// Binds `prefix`, returning the namespace it replaced.
    pub fn insert(&mut self, prefix: impl Into<String>, namespace: Iri) -> Option<Iri> {
        self.map.insert(prefix.into(), namespace)
    }

    pub fn get(&self, prefix: &str) -> Option<&Iri> {
        self.map.get(prefix)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Prefixes in sorted order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &Iri)> {
        self.map.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Expands `prefix:local` against the map.
    pub fn expand(&self, prefixed: &str) -> Result<Iri, ExpandError> {
        let (prefix, local) = prefixed.split_once(':').ok_or_else(|| ExpandError::NotPrefixed(prefixed.to_owned()))?;
        let ns = self.get(prefix).ok_or_else(|| ExpandError::UnknownPrefix(prefix.to_owned()))?;
        Ok(Iri::new(format!("{}{}", ns.as_str(), local))?)
    }

    /// Shortest `prefix:local` form of `iri` whose local part is a plain
    /// name, if any namespace matches.
    pub fn compact(&self, iri: &Iri) -> Option<String> {
        self.map
            .iter()
            .filter_map(|(p, ns)| {
                let local = iri.as_str().strip_prefix(ns.as_str())?;
                is_plain_local(local).then(|| (ns.as_str().len(), p, local))
            })
            .max_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(a.1)))
            .map(|(_, p, local)| format!("{p}:{local}"))
    }
}

/// Local names the Turtle reader accepts without escapes.
pub(crate) fn is_plain_local(local: &str) -> bool {
    let mut chars = local.chars();
    match chars.next() {
        None => return true,
        Some(c) if c.is_ascii_alphanumeric() || c == '_' => {}
        Some(_) => return false,
    }
    local.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.')) && !local.ends_with('.')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_known_prefixes() {
        let mut pm = PrefixMap::new();
        pm.insert("xsd", Iri::new(ns::XSD).unwrap());
        assert_eq!(pm.expand("xsd:string").unwrap().as_str(), "http://www.w3.org/2001/XMLSchema#string");

        let base = Iri::new("https://example.org/rdn#").unwrap();
        let pm = PrefixMap::standard(&base);
        assert_eq!(pm.expand(":csLewis").unwrap().as_str(), "https://example.org/rdn#csLewis");
    }

    #[test]
    fn expand_unknown_prefix_names_it() {
        let err = PrefixMap::new().expand("foo:x").unwrap_err();
        assert_eq!(err, ExpandError::UnknownPrefix("foo".into()));
        assert!(err.to_string().contains("foo"));
    }

    #[test]
    fn compact_prefers_longest_namespace() {
        let mut pm = PrefixMap::new();
        pm.insert("a", Iri::new("http://x/").unwrap());
        pm.insert("b", Iri::new("http://x/y/").unwrap());
        assert_eq!(pm.compact(&Iri::new("http://x/y/z").unwrap()).as_deref(), Some("b:z"));
        assert_eq!(pm.compact(&Iri::new("http://x/q").unwrap()).as_deref(), Some("a:q"));
        // '/' is not a plain local character
        assert_eq!(pm.compact(&Iri::new("http://x/q/r/s").unwrap()), None);
        assert_eq!(pm.compact(&Iri::new("http://x/q.").unwrap()), None);
    }
}
