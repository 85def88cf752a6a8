//! The RDN vocabulary and its TBox.
//!
//! The sixteen axioms are plain data. Each carries an [`AxiomKind`] telling
//! the engine and validator what to do with it, and a participant list whose
//! layout is fixed per kind (see [`AxiomKind`]).

mod owl;

use std::fmt;

use crate::rdf::{ns, Iri, TermError};

pub use owl::tbox_graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    Agent,
    AgentRole,
    Name,
}

impl Class {
    pub const ALL: [Class; 3] = [Class::Agent, Class::AgentRole, Class::Name];

    pub fn local_name(self) -> &'static str {
        match self {
            Class::Agent => "Agent",
            Class::AgentRole => "AgentRole",
            Class::Name => "Name",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    HasName,
    AssumesAgentRole,
    ProvidesAgentRole,
    HasRoleUnderName,
    /// The only datatype property.
    HasNameAsString,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::HasName,
        Property::AssumesAgentRole,
        Property::ProvidesAgentRole,
        Property::HasRoleUnderName,
        Property::HasNameAsString,
    ];

    pub fn local_name(self) -> &'static str {
        match self {
            Property::HasName => "hasName",
            Property::AssumesAgentRole => "assumesAgentRole",
            Property::ProvidesAgentRole => "providesAgentRole",
            Property::HasRoleUnderName => "hasRoleUnderName",
            Property::HasNameAsString => "hasNameAsString",
        }
    }

    pub fn is_datatype_property(self) -> bool {
        self == Property::HasNameAsString
    }
}

/// A symbol occurring in an axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Class(Class),
    Property(Property),
    /// The inverse of a property, e.g. `hasRoleUnderName⁻`.
    InverseOf(Property),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Class(c) => f.write_str(c.local_name()),
            Symbol::Property(p) => f.write_str(p.local_name()),
            Symbol::InverseOf(p) => write!(f, "{}⁻", p.local_name()),
        }
    }
}

/// Operational kind of an axiom.
///
/// Participant layouts (`C`, `D` classes; `p` a property or inverse):
///
/// | kind | participants | reading |
/// |---|---|---|
/// | `ExistentialConstraint` | `[C, p, D]` | `C ⊑ ∃p.D` |
/// | `StructuralTautology` | `[C, p, D]` | `C ⊑ ≥0 p.D` |
/// | `ScopedDomainRule` | `[p, D, C]` | `∃p.D ⊑ C` |
/// | `InverseFunctionalConstraint` | `[C, p⁻, D]` | `C ⊑ ≤1 p⁻.D` |
/// | `ScopedRangeRule` | `[C, p, D]` | `C ⊑ ∀p.D` |
/// | `GlobalRangeRule` | `[p, D]` | `⊤ ⊑ ∀p.D` |
/// | `GlobalDomainRule` | `[p, C]` | `∃p.⊤ ⊑ C` |
/// | `DisjointnessConstraint` | `[C, D]` | `C ⊓ D ⊑ ⊥` |
/// | `PropertyChainRule` | `[p, q, r]` | `p ∘ q ⊑ r` |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxiomKind {
    ExistentialConstraint,
    StructuralTautology,
    ScopedDomainRule,
    InverseFunctionalConstraint,
    ScopedRangeRule,
    GlobalRangeRule,
    GlobalDomainRule,
    DisjointnessConstraint,
    PropertyChainRule,
}

impl AxiomKind {
    pub fn generates_rule(self) -> bool {
        matches!(
            self,
            AxiomKind::ScopedDomainRule
                | AxiomKind::ScopedRangeRule
                | AxiomKind::GlobalRangeRule
                | AxiomKind::GlobalDomainRule
                | AxiomKind::PropertyChainRule
        )
    }

    pub fn is_constraint(self) -> bool {
        matches!(
            self,
            AxiomKind::ExistentialConstraint
                | AxiomKind::InverseFunctionalConstraint
                | AxiomKind::DisjointnessConstraint
        )
    }

    /// `≥0` restrictions: recorded, but entail nothing and check nothing.
    pub fn is_inert(self) -> bool {
        self == AxiomKind::StructuralTautology
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axiom {
    pub index: u8,
    pub kind: AxiomKind,
    pub participants: &'static [Symbol],
    /// Description-logic rendering.
    pub dl: &'static str,
}

use Class::{Agent, AgentRole, Name};
use Property::{AssumesAgentRole, HasName, HasNameAsString, HasRoleUnderName, ProvidesAgentRole};

const fn c(class: Class) -> Symbol {
    Symbol::Class(class)
}

const fn p(property: Property) -> Symbol {
    Symbol::Property(property)
}

const fn inv(property: Property) -> Symbol {
    Symbol::InverseOf(property)
}

static TBOX: [Axiom; 16] = [
    Axiom {
        index: 1,
        kind: AxiomKind::ExistentialConstraint,
        participants: &[c(Agent), p(HasName), c(Name)],
        dl: "Agent ⊑ ∃hasName.Name",
    },
    Axiom {
        index: 2,
        kind: AxiomKind::StructuralTautology,
        participants: &[c(Agent), p(AssumesAgentRole), c(AgentRole)],
        dl: "Agent ⊑ ≥0 assumesAgentRole.AgentRole",
    },
    Axiom {
        index: 3,
        kind: AxiomKind::ScopedDomainRule,
        participants: &[p(AssumesAgentRole), c(AgentRole), c(Agent)],
        dl: "∃assumesAgentRole.AgentRole ⊑ Agent",
    },
    Axiom {
        index: 4,
        kind: AxiomKind::InverseFunctionalConstraint,
        participants: &[c(AgentRole), inv(AssumesAgentRole), c(Agent)],
        dl: "AgentRole ⊑ ≤1 assumesAgentRole⁻.Agent",
    },
    Axiom {
        index: 5,
        kind: AxiomKind::ScopedRangeRule,
        participants: &[c(Agent), p(AssumesAgentRole), c(AgentRole)],
        dl: "Agent ⊑ ∀assumesAgentRole.AgentRole",
    },
    Axiom {
        index: 6,
        kind: AxiomKind::StructuralTautology,
        participants: &[c(AgentRole), p(HasRoleUnderName), c(Name)],
        dl: "AgentRole ⊑ ≥0 hasRoleUnderName.Name",
    },
    Axiom {
        index: 7,
        kind: AxiomKind::GlobalRangeRule,
        participants: &[p(HasRoleUnderName), c(Name)],
        dl: "⊤ ⊑ ∀hasRoleUnderName.Name",
    },
    Axiom {
        index: 8,
        kind: AxiomKind::GlobalRangeRule,
        participants: &[p(ProvidesAgentRole), c(AgentRole)],
        dl: "⊤ ⊑ ∀providesAgentRole.AgentRole",
    },
    Axiom {
        index: 9,
        kind: AxiomKind::InverseFunctionalConstraint,
        participants: &[c(Name), inv(HasName), c(Agent)],
        dl: "Name ⊑ ≤1 hasName⁻.Agent",
    },
    Axiom {
        index: 10,
        kind: AxiomKind::GlobalRangeRule,
        participants: &[p(HasName), c(Name)],
        dl: "⊤ ⊑ ∀hasName.Name",
    },
    Axiom {
        index: 11,
        kind: AxiomKind::GlobalDomainRule,
        participants: &[p(HasNameAsString), c(Name)],
        dl: "∃hasNameAsString.⊤ ⊑ Name",
    },
    Axiom {
        index: 12,
        kind: AxiomKind::DisjointnessConstraint,
        participants: &[c(AgentRole), c(Agent)],
        dl: "AgentRole ⊓ Agent ⊑ ⊥",
    },
    Axiom {
        index: 13,
        kind: AxiomKind::DisjointnessConstraint,
        participants: &[c(Agent), c(Name)],
        dl: "Agent ⊓ Name ⊑ ⊥",
    },
    Axiom {
        index: 14,
        kind: AxiomKind::DisjointnessConstraint,
        participants: &[c(Name), c(AgentRole)],
        dl: "Name ⊓ AgentRole ⊑ ⊥",
    },
    Axiom {
        index: 15,
        kind: AxiomKind::PropertyChainRule,
        participants: &[p(AssumesAgentRole), p(HasRoleUnderName), p(HasName)],
        dl: "assumesAgentRole ∘ hasRoleUnderName ⊑ hasName",
    },
    Axiom {
        index: 16,
        kind: AxiomKind::PropertyChainRule,
        participants: &[p(HasName), inv(HasRoleUnderName), p(AssumesAgentRole)],
        dl: "hasName ∘ hasRoleUnderName⁻ ⊑ assumesAgentRole",
    },
];

/// The sixteen RDN axioms in index order.
pub fn tbox() -> Vec<Axiom> {
    TBOX.to_vec()
}

/// Looks up one axiom by its 1-based index.
pub fn axiom(index: u8) -> Option<&'static Axiom> {
    TBOX.iter().find(|a| a.index == index)
}

/// IRIs of the pattern's classes and properties under one namespace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    pub namespace: Iri,
    pub agent: Iri,
    pub agent_role: Iri,
    pub name: Iri,
    pub has_name: Iri,
    pub assumes_agent_role: Iri,
    pub provides_agent_role: Iri,
    pub has_role_under_name: Iri,
    pub has_name_as_string: Iri,
    pub rdf_type: Iri,
}

impl Vocabulary {
    pub fn new(namespace: Iri) -> Result<Self, TermError> {
        let mk = |local: &str| Iri::new(format!("{}{local}", namespace.as_str()));
        Ok(Vocabulary {
            agent: mk(Agent.local_name())?,
            agent_role: mk(AgentRole.local_name())?,
            name: mk(Name.local_name())?,
            has_name: mk(HasName.local_name())?,
            assumes_agent_role: mk(AssumesAgentRole.local_name())?,
            provides_agent_role: mk(ProvidesAgentRole.local_name())?,
            has_role_under_name: mk(HasRoleUnderName.local_name())?,
            has_name_as_string: mk(HasNameAsString.local_name())?,
            rdf_type: ns::rdf_type(),
            namespace,
        })
    }

    pub fn class(&self, class: Class) -> &Iri {
        match class {
            Agent => &self.agent,
            AgentRole => &self.agent_role,
            Name => &self.name,
        }
    }

    pub fn property(&self, property: Property) -> &Iri {
        match property {
            HasName => &self.has_name,
            AssumesAgentRole => &self.assumes_agent_role,
            ProvidesAgentRole => &self.provides_agent_role,
            HasRoleUnderName => &self.has_role_under_name,
            HasNameAsString => &self.has_name_as_string,
        }
    }

    /// The IRI a symbol names (the underlying property for inverses).
    pub fn resolve(&self, symbol: Symbol) -> &Iri {
        match symbol {
            Symbol::Class(c) => self.class(c),
            Symbol::Property(p) | Symbol::InverseOf(p) => self.property(p),
        }
    }

    /// `rdf:type` plus the eight pattern IRIs.
    pub fn all_iris(&self) -> [&Iri; 9] {
        [
            &self.rdf_type,
            &self.agent,
            &self.agent_role,
            &self.name,
            &self.has_name,
            &self.assumes_agent_role,
            &self.provides_agent_role,
            &self.has_role_under_name,
            &self.has_name_as_string,
        ]
    }
}

impl Default for Vocabulary {
    fn default() -> Self {
        Vocabulary::new(Iri::new(ns::DEFAULT_BASE).expect("static IRI")).expect("static IRIs")
    }
}
