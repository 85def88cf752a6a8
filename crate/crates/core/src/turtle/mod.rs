//! Reader and writer for the Turtle subset used by RDN instance data.
//!
//! Supported: `@prefix` directives, `<absolute-IRI>`s, prefixed names,
//! labelled blank nodes (`_:x`), single-line string literals with an optional
//! `^^datatype` (plain strings are `xsd:string`), the `a` keyword, `;` and
//! `,` lists, and `#` comments. Escapes inside strings are limited to `\"`,
//! `\\`, `\n` and `\t`.
//!
//! Not supported: `[]` blank nodes, collections, language tags, numeric and
//! boolean shorthand, long (triple-quoted) strings.

mod parser;
mod writer;

pub use parser::{parse, parse_term, parse_with_warnings, ParseError, ParseErrorKind, ParseWarning};
pub use writer::{format_term, format_triple, serialize};
