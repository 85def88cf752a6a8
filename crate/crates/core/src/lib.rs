//! Role-Dependent Names (RDN) ontology pattern toolkit.
//!
//! The RDN pattern links an `Agent`, the `AgentRole`s it assumes and the
//! `Name`s it carries, so that a role can record which of the agent's names
//! it was performed under (`hasRoleUnderName`). This crate provides:
//!
//! - [`rdf`]: terms, triples and an indexed in-memory graph.
//! - [`turtle`]: a reader and deterministic writer for a small Turtle subset.
//! - [`vocab`]: the pattern vocabulary and its sixteen TBox axioms as data.
//! - [`engine`]: axiom-to-rule compilation and forward-chaining
//!   materialization with derivation traces.
//! - [`validate`]: closed-world checking of the pattern's cardinality,
//!   existential and disjointness axioms.
//! - [`builder`]: a typed API producing conforming instance graphs.
//! - [`corpus`]: the C. S. Lewis pseudonym example used throughout the docs.
//!
//! ```
//! use rdn::{corpus, engine, validate};
//!
//! let graph = corpus::lewis_full();
//! let (closed, _trace) = engine::materialize(&graph);
//! assert_eq!(closed.len(), 18);
//! assert!(validate::check(&graph, validate::CheckOptions::default()).conforms());
//! ```

pub mod builder;
pub mod corpus;
pub mod engine;
pub mod rdf;
pub mod turtle;
pub mod validate;
pub mod vocab;

pub use builder::AgentBuilder;
pub use engine::{materialize, DerivationTrace, Explanation, Rule, RuleId};
pub use rdf::{Graph, Iri, Literal, Term, Triple, TriplePattern};
pub use validate::{check, CheckOptions, ConstraintId, Violation, ViolationReport};
pub use vocab::{tbox, Axiom, AxiomKind, Vocabulary};
