//! Typed construction of conforming RDN instance data.
//!
//! ```
//! use rdn::builder::AgentBuilder;
//!
//! let graph = AgentBuilder::new("https://example.org/rdn#csLewis")?
//!     .with_name("https://example.org/rdn#csLewisNameCV", "Clive Hamilton")?
//!     .with_role(
//!         "https://example.org/rdn#sibAuthorRole",
//!         Some("https://example.org/rdn#spiritInBondage"),
//!         Some("https://example.org/rdn#csLewisNameCV"),
//!     )?
//!     .to_graph()?;
//! assert!(rdn::check(&graph, Default::default()).conforms());
//! # Ok::<(), rdn::builder::BuildError>(())
//! ```

use thiserror::Error;

use crate::rdf::{Graph, Iri, Literal, PrefixMap, TermError, Triple};
use crate::vocab::Vocabulary;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    InvalidIri(#[from] TermError),
    #[error("{0} is already used in this builder")]
    DuplicateId(Iri),
    #[error("role {role} refers to name {name}, which was not added with with_name")]
    DanglingName { role: Iri, name: Iri },
    #[error("agent {0} has no name")]
    NoName(Iri),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct NameRecord {
    id: Iri,
    string: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct RoleRecord {
    id: Iri,
    provider: Option<Iri>,
    under_name: Option<Iri>,
}

/// Builds the triples describing one agent, its names and its roles.
///
/// Name and role ids are unique within a builder and differ from the agent
/// id; a role's `under_name` must be one of the agent's names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgentBuilder {
    agent: Iri,
    names: Vec<NameRecord>,
    roles: Vec<RoleRecord>,
}

impl AgentBuilder {
    pub fn new(agent: &str) -> Result<Self, BuildError> {
        Ok(AgentBuilder { agent: Iri::new(agent)?, names: Vec::new(), roles: Vec::new() })
    }

    pub fn agent(&self) -> &Iri {
        &self.agent
    }

    pub fn name_count(&self) -> usize {
        self.names.len()
    }

    pub fn role_count(&self) -> usize {
        self.roles.len()
    }

    fn is_used(&self, id: &Iri) -> bool {
        *id == self.agent || self.names.iter().any(|n| n.id == *id) || self.roles.iter().any(|r| r.id == *id)
    }

    fn fresh(&self, id: &str) -> Result<Iri, BuildError> {
        let id = Iri::new(id)?;
        if self.is_used(&id) {
            return Err(BuildError::DuplicateId(id));
        }
        Ok(id)
    }

    /// Adds a name. Any string is accepted, including the empty one.
    pub fn with_name(mut self, name: &str, string: &str) -> Result<Self, BuildError> {
        let id = self.fresh(name)?;
        self.names.push(NameRecord { id, string: string.to_owned() });
        Ok(self)
    }

    /// Adds a role, optionally with the thing providing it and the name it
    /// is assumed under.
    pub fn with_role(
        mut self,
        role: &str,
        provider: Option<&str>,
        under_name: Option<&str>,
    ) -> Result<Self, BuildError> {
        let id = self.fresh(role)?;
        let provider = provider.map(Iri::new).transpose()?;
        let under_name = under_name.map(Iri::new).transpose()?;
        if let Some(name) = &under_name {
            if !self.names.iter().any(|n| n.id == *name) {
                return Err(BuildError::DanglingName { role: id, name: name.clone() });
            }
        }
        self.roles.push(RoleRecord { id, provider, under_name });
        Ok(self)
    }

    /// Renders with the default vocabulary.
    pub fn to_graph(&self) -> Result<Graph, BuildError> {
        self.to_graph_with(&Vocabulary::default())
    }

    /// Emits the pattern triples plus explicit class memberships. An agent
    /// without any name cannot satisfy the existential name axiom and is
    /// rejected.
    pub fn to_graph_with(&self, vocab: &Vocabulary) -> Result<Graph, BuildError> {
        if self.names.is_empty() {
            return Err(BuildError::NoName(self.agent.clone()));
        }
        let mut g = Graph::with_prefixes(PrefixMap::standard(&vocab.namespace));
        let mut add = |s: &Iri, p: &Iri, o: crate::rdf::Term| {
            g.insert(Triple::new(s.clone(), p.clone(), o).expect("IRI subject"));
        };
        add(&self.agent, &vocab.rdf_type, vocab.agent.clone().into());
        for n in &self.names {
            add(&self.agent, &vocab.has_name, n.id.clone().into());
            add(&n.id, &vocab.rdf_type, vocab.name.clone().into());
            add(&n.id, &vocab.has_name_as_string, Literal::string(&n.string).into());
        }
        for r in &self.roles {
            add(&self.agent, &vocab.assumes_agent_role, r.id.clone().into());
            add(&r.id, &vocab.rdf_type, vocab.agent_role.clone().into());
            if let Some(p) = &r.provider {
                add(p, &vocab.provides_agent_role, r.id.clone().into());
            }
            if let Some(n) = &r.under_name {
                add(&r.id, &vocab.has_role_under_name, n.clone().into());
            }
        }
        Ok(g)
    }
}

/// The C. S. Lewis example expressed through the builder.
pub fn lewis() -> AgentBuilder {
    let ex = |local: &str| format!("{}{local}", crate::rdf::ns::DEFAULT_BASE);
    AgentBuilder::new(&ex("csLewis"))
        .and_then(|b| b.with_name(&ex("csLewisNameCV"), "Clive Hamilton"))
        .and_then(|b| b.with_name(&ex("csLewisNameNWC"), "N. W. Clerk"))
        .and_then(|b| b.with_name(&ex("csLewisNameCSL"), "C. S. Lewis"))
        .and_then(|b| b.with_role(&ex("sibAuthorRole"), Some(&ex("spiritInBondage")), Some(&ex("csLewisNameCV"))))
        .and_then(|b| b.with_role(&ex("goAuthorRole"), Some(&ex("griefObserved")), Some(&ex("csLewisNameNWC"))))
        .expect("static example is valid")
}
