use std::fmt;

use thiserror::Error;

use crate::rdf::{Graph, Iri, Term, Triple, TriplePattern};
use crate::vocab::{Axiom, AxiomKind, Symbol, Vocabulary};

/// Rule identifier; `R3` is the rule compiled from axiom 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RuleId(pub u8);

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompileError {
    #[error("axiom {index} ({kind:?}): {reason}")]
    MalformedAxiom { index: u8, kind: AxiomKind, reason: &'static str },
}

/// Rule variable, indexed from zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Var(pub u8);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Slot {
    Var(Var),
    Const(Term),
}

/// A triple template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub subject: Slot,
    pub predicate: Iri,
    pub object: Slot,
}

/// A Horn rule: when every premise matches under one binding, the conclusion holds.
///
/// Conclusion variables always occur in some premise, so rules never
/// introduce new terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub id: RuleId,
    pub premises: Vec<Atom>,
    pub conclusion: Atom,
}

fn local_name(iri: &Iri) -> &str {
    let s = iri.as_str();
    s.rfind(['#', '/']).map_or(s, |i| &s[i + 1..])
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Var(Var(v)) => write!(f, "?{}", ["x", "y", "z"].get(*v as usize).copied().unwrap_or("v")),
            Slot::Const(Term::Iri(iri)) => f.write_str(local_name(iri)),
            Slot::Const(t) => write!(f, "{t}"),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}, {})", local_name(&self.predicate), self.subject, self.object)
    }
}

/// `R3: assumesAgentRole(?x, ?y) ∧ type(?y, AgentRole) ⇒ type(?x, Agent)`
impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.id)?;
        for (i, p) in self.premises.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∧ ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, " ⇒ {}", self.conclusion)
    }
}

type Binding = [Option<Term>; 3];

/// One rule firing: the instantiated conclusion and the premises it used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Firing {
    pub conclusion: Triple,
    pub premises: Vec<Triple>,
}

impl Rule {
    fn var_count(&self) -> usize {
        let mut n = 0;
        for atom in self.premises.iter().chain(std::iter::once(&self.conclusion)) {
            for slot in [&atom.subject, &atom.object] {
                if let Slot::Var(Var(v)) = slot {
                    n = n.max(*v as usize + 1);
                }
            }
        }
        n
    }

    /// Every firing against `graph`.
    pub fn fire(&self, graph: &Graph) -> Vec<Firing> {
        let mut out = Vec::new();
        self.fire_into(graph, None, &mut out);
        out
    }

    /// Firings in which premise `delta.1` matches a triple of `delta.0` and
    /// every other premise matches `full`. With `delta = None` all premises
    /// match `full`.
    pub(crate) fn fire_into(&self, full: &Graph, delta: Option<(&Graph, usize)>, out: &mut Vec<Firing>) {
        debug_assert!(self.var_count() <= 3);
        let mut binding: Binding = Default::default();
        let mut used = Vec::with_capacity(self.premises.len());
        self.join(0, full, delta, &mut binding, &mut used, out);
    }

    fn join(
        &self,
        i: usize,
        full: &Graph,
        delta: Option<(&Graph, usize)>,
        binding: &mut Binding,
        used: &mut Vec<Triple>,
        out: &mut Vec<Firing>,
    ) {
        let Some(atom) = self.premises.get(i) else {
            let subject = instantiate(&self.conclusion.subject, binding);
            let object = instantiate(&self.conclusion.object, binding);
            // a literal can land in subject position (e.g. the range rules
            // over `hasName "x"`); such conclusions are not RDF and are skipped
            if let Ok(conclusion) = Triple::new(subject, self.conclusion.predicate.clone(), object) {
                out.push(Firing { conclusion, premises: used.clone() });
            }
            return;
        };
        let source = match delta {
            Some((d, k)) if k == i => d,
            _ => full,
        };
        let pattern = TriplePattern::new(
            bound(&atom.subject, binding),
            Some(atom.predicate.clone()),
            bound(&atom.object, binding),
        );
        for t in source.matching_iter(&pattern) {
            let saved = binding.clone();
            if bind(&atom.subject, t.subject(), binding) && bind(&atom.object, t.object(), binding) {
                used.push(t.clone());
                self.join(i + 1, full, delta, binding, used, out);
                used.pop();
            }
            *binding = saved;
        }
    }
}

fn bound(slot: &Slot, binding: &Binding) -> Option<Term> {
    match slot {
        Slot::Const(t) => Some(t.clone()),
        Slot::Var(Var(v)) => binding[*v as usize].clone(),
    }
}

fn bind(slot: &Slot, term: &Term, binding: &mut Binding) -> bool {
    match slot {
        Slot::Const(t) => t == term,
        Slot::Var(Var(v)) => match &binding[*v as usize] {
            Some(existing) => existing == term,
            None => {
                binding[*v as usize] = Some(term.clone());
                true
            }
        },
    }
}

fn instantiate(slot: &Slot, binding: &Binding) -> Term {
    match slot {
        Slot::Const(t) => t.clone(),
        Slot::Var(Var(v)) => binding[*v as usize].clone().expect("conclusion variables occur in premises"),
    }
}

const X: Slot = Slot::Var(Var(0));
const Y: Slot = Slot::Var(Var(1));
const Z: Slot = Slot::Var(Var(2));

/// Compiles the rule-kind axioms of `axioms`; constraints and structural
/// tautologies contribute nothing.
pub fn compile(axioms: &[Axiom], vocab: &Vocabulary) -> Result<Vec<Rule>, CompileError> {
    let mut rules = Vec::new();
    for axiom in axioms {
        if let Some(rule) = compile_axiom(axiom, vocab)? {
            rules.push(rule);
        }
    }
    Ok(rules)
}

fn compile_axiom(axiom: &Axiom, vocab: &Vocabulary) -> Result<Option<Rule>, CompileError> {
    if !axiom.kind.generates_rule() {
        return Ok(None);
    }
    let malformed = |reason| CompileError::MalformedAxiom { index: axiom.index, kind: axiom.kind, reason };
    let class = |s: Symbol| match s {
        Symbol::Class(c) => Ok(Slot::Const(vocab.class(c).clone().into())),
        _ => Err(malformed("expected a class")),
    };
    // property expression applied to (s, o); inverses swap the arguments
    let edge = |sym: Symbol, s: Slot, o: Slot| match sym {
        Symbol::Property(p) => Ok(Atom { subject: s, predicate: vocab.property(p).clone(), object: o }),
        Symbol::InverseOf(p) => Ok(Atom { subject: o, predicate: vocab.property(p).clone(), object: s }),
        Symbol::Class(_) => Err(malformed("expected a property")),
    };
    let is_a = |s: Slot, c: Slot| Atom { subject: s, predicate: vocab.rdf_type.clone(), object: c };
    let ps = axiom.participants;
    let arity = match axiom.kind {
        AxiomKind::GlobalRangeRule | AxiomKind::GlobalDomainRule => 2,
        _ => 3,
    };
    if ps.len() != arity {
        return Err(malformed("wrong number of participants"));
    }

    let (premises, conclusion) = match axiom.kind {
        // ∃p.D ⊑ C
        AxiomKind::ScopedDomainRule => (vec![edge(ps[0], X, Y)?, is_a(Y, class(ps[1])?)], is_a(X, class(ps[2])?)),
        // C ⊑ ∀p.D
        AxiomKind::ScopedRangeRule => (vec![is_a(X, class(ps[0])?), edge(ps[1], X, Y)?], is_a(Y, class(ps[2])?)),
        // ⊤ ⊑ ∀p.D
        AxiomKind::GlobalRangeRule => (vec![edge(ps[0], X, Y)?], is_a(Y, class(ps[1])?)),
        // ∃p.⊤ ⊑ C
        AxiomKind::GlobalDomainRule => (vec![edge(ps[0], X, Y)?], is_a(X, class(ps[1])?)),
        // p ∘ q ⊑ r
        AxiomKind::PropertyChainRule => (vec![edge(ps[0], X, Y)?, edge(ps[1], Y, Z)?], edge(ps[2], X, Z)?),
        _ => unreachable!("filtered by generates_rule"),
    };
    Ok(Some(Rule { id: RuleId(axiom.index), premises, conclusion }))
}
