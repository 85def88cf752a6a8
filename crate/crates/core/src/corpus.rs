//! The C. S. Lewis example: two books published under two different
//! pseudonyms, encoded first without and then with role-dependent names.

use crate::rdf::{ns, Graph, Iri};
use crate::turtle;

/// Role and name triples with no link between them; ten triples.
pub const LEWIS_NAIVE: &str = r#":spiritInBondage :providesAgentRole :sibAuthorRole .
:griefObserved   :providesAgentRole :goAuthorRole .
:csLewis         :assumesAgentRole  :sibAuthorRole ,
                                    :goAuthorRole ;
                 :hasName           :csLewisNameCV ,
                                    :csLewisNameNWC ,
                                    :csLewisNameCSL .
:csLewisNameNWC  :hasNameAsString   "N. W. Clerk"^^xsd:string .
:csLewisNameCV   :hasNameAsString   "Clive Hamilton"^^xsd:string .
:csLewisNameCSL  :hasNameAsString   "C. S. Lewis"^^xsd:string .
"#;

/// The two triples tying each authorship role to the pseudonym used.
pub const LEWIS_ROLE_NAMES: &str = r#":sibAuthorRole  :hasRoleUnderName  :csLewisNameCV .
:goAuthorRole   :hasRoleUnderName  :csLewisNameNWC .
"#;

/// A second agent claiming the *Spirit in Bondage* authorship role.
pub const TOLKIEN_CLAIM: &str = ":jrrTolkien :assumesAgentRole :sibAuthorRole .\n";

fn base() -> Iri {
    Iri::new(ns::DEFAULT_BASE).expect("static IRI")
}

fn load(text: &str) -> Graph {
    turtle::parse(text, &base()).expect("bundled corpus parses")
}

/// Full Turtle text of the twelve-triple example.
pub fn lewis_full_text() -> String {
    format!("{LEWIS_NAIVE}{LEWIS_ROLE_NAMES}")
}

pub fn lewis_naive() -> Graph {
    load(LEWIS_NAIVE)
}

/// The twelve-triple example.
pub fn lewis_full() -> Graph {
    load(&lewis_full_text())
}

/// [`lewis_full`] without the two `assumesAgentRole` triples; the chain
/// rules recover them.
pub fn lewis_min() -> Graph {
    let text = lewis_full_text().replace(
        ":csLewis         :assumesAgentRole  :sibAuthorRole ,\n                                    :goAuthorRole ;\n                 :hasName",
        ":csLewis         :hasName",
    );
    load(&text)
}

/// [`lewis_full`] plus a conflicting claim on `:sibAuthorRole`.
pub fn lewis_plus_tolkien() -> Graph {
    load(&format!("{}{TOLKIEN_CLAIM}", lewis_full_text()))
}
