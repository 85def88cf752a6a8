use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::rdf::{ns, BlankNode, Graph, Iri, Literal, PrefixMap, Term, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedToken,
    UnknownPrefix,
    UnterminatedString,
    MalformedIri,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::UnexpectedToken => "unexpected token",
            ParseErrorKind::UnknownPrefix => "unknown prefix",
            ParseErrorKind::UnterminatedString => "unterminated string",
            ParseErrorKind::MalformedIri => "malformed IRI",
        })
    }
}

/// A syntax error. `line` and `column` are 1-based and point at the first
/// offending character (or one past the end of input).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub kind: ParseErrorKind,
}

/// Non-fatal findings, currently only prefix redefinitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: warning: {}", self.line, self.column, self.message)
    }
}

/// Parses `text`. The empty prefix defaults to `base`; `rdf`, `rdfs`, `owl`
/// and `xsd` are predeclared. Either the whole document parses or nothing does.
pub fn parse(text: &str, base: &Iri) -> Result<Graph, ParseError> {
    parse_with_warnings(text, base).map(|(g, _)| g)
}

pub fn parse_with_warnings(text: &str, base: &Iri) -> Result<(Graph, Vec<ParseWarning>), ParseError> {
    let mut p = Parser::new(text, PrefixMap::standard(base));
    p.document()?;
    let mut graph = Graph::with_prefixes(p.prefixes);
    graph.extend(p.triples);
    Ok((graph, p.warnings))
}

/// Parses a single term (IRI, prefixed name, blank node or literal).
pub fn parse_term(text: &str, prefixes: &PrefixMap) -> Result<Term, ParseError> {
    let mut p = Parser::new(text, prefixes.clone());
    p.skip_ws();
    let term = p.term(Position::Object)?;
    p.skip_ws();
    if p.peek().is_some() {
        return Err(p.error(ParseErrorKind::UnexpectedToken, "trailing input after term"));
    }
    Ok(term)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Position {
    Subject,
    Predicate,
    Object,
    Datatype,
}

impl Position {
    fn name(self) -> &'static str {
        match self {
            Position::Subject => "subject",
            Position::Predicate => "predicate",
            Position::Object => "object",
            Position::Datatype => "datatype IRI",
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    prefixes: PrefixMap,
    declared: HashSet<String>,
    triples: Vec<Triple>,
    warnings: Vec<ParseWarning>,
}

#[derive(Clone, Copy)]
struct Mark {
    line: usize,
    column: usize,
}

impl Parser {
    fn new(text: &str, prefixes: PrefixMap) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            column: 1,
            prefixes,
            declared: HashSet::new(),
            triples: Vec::new(),
            warnings: Vec::new(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn mark(&self) -> Mark {
        Mark { line: self.line, column: self.column }
    }

    fn error(&self, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        self.error_at(self.mark(), kind, message)
    }

    fn error_at(&self, at: Mark, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError { line: at.line, column: at.column, message: message.into(), kind }
    }

    fn found(&self) -> String {
        match self.peek() {
            None => "end of input".to_owned(),
            Some(c) => format!("{c:?}"),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, c: char, what: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(ParseErrorKind::UnexpectedToken, format!("expected {what}, found {}", self.found())))
        }
    }

    fn document(&mut self) -> Result<(), ParseError> {
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Ok(()),
                Some('@') => self.prefix_directive()?,
                Some(_) => self.statement()?,
            }
        }
    }

    fn prefix_directive(&mut self) -> Result<(), ParseError> {
        let start = self.mark();
        self.bump();
        let word = self.name_chars();
        if word != "prefix" {
            return Err(self.error_at(
                start,
                ParseErrorKind::UnexpectedToken,
                format!("unsupported directive @{word}"),
            ));
        }
        self.skip_ws();
        let at = self.mark();
        let prefix = self.name_chars();
        if self.peek() != Some(':') {
            return Err(self
                .error(ParseErrorKind::UnexpectedToken, format!("expected ':' after prefix, found {}", self.found())));
        }
        self.bump();
        self.skip_ws();
        if self.peek() != Some('<') {
            return Err(
                self.error(ParseErrorKind::UnexpectedToken, format!("expected namespace IRI, found {}", self.found()))
            );
        }
        let namespace = self.iri_ref()?;
        self.expect('.', "'.' after @prefix")?;
        let old = self.prefixes.insert(prefix.clone(), namespace.clone());
        if !self.declared.insert(prefix.clone()) {
            if let Some(old) = old.filter(|old| *old != namespace) {
                self.warnings.push(ParseWarning {
                    line: at.line,
                    column: at.column,
                    message: format!("prefix `{prefix}:` redefined from {old} to {namespace}"),
                });
            }
        }
        Ok(())
    }

    fn statement(&mut self) -> Result<(), ParseError> {
        let subject = self.term(Position::Subject)?;
        loop {
            self.skip_ws();
            let predicate = self.term(Position::Predicate)?;
            loop {
                self.skip_ws();
                let object = self.term(Position::Object)?;
                let t = Triple::from_terms(subject.clone(), predicate.clone(), object)
                    .expect("positions are checked while parsing");
                self.triples.push(t);
                self.skip_ws();
                if self.peek() == Some(',') {
                    self.bump();
                } else {
                    break;
                }
            }
            self.skip_ws();
            match self.peek() {
                Some(';') => {
                    // `;` may be repeated or trail before the final `.`
                    while self.peek() == Some(';') {
                        self.bump();
                        self.skip_ws();
                    }
                    if self.peek() == Some('.') {
                        self.bump();
                        return Ok(());
                    }
                }
                Some('.') => {
                    self.bump();
                    return Ok(());
                }
                _ => {
                    return Err(self.error(
                        ParseErrorKind::UnexpectedToken,
                        format!("expected ',', ';' or '.', found {}", self.found()),
                    ))
                }
            }
        }
    }

    fn term(&mut self, position: Position) -> Result<Term, ParseError> {
        self.skip_ws();
        let start = self.mark();
        let unexpected = |p: &Self| {
            p.error_at(
                start,
                ParseErrorKind::UnexpectedToken,
                format!("expected {}, found {}", position.name(), p.found()),
            )
        };
        match self.peek() {
            None | Some('.' | ';' | ',') => Err(unexpected(self)),
            Some('<') => Ok(Term::Iri(self.iri_ref()?)),
            Some('_') if self.peek_at(1) == Some(':') => {
                if matches!(position, Position::Predicate | Position::Datatype) {
                    return Err(self.error_at(
                        start,
                        ParseErrorKind::UnexpectedToken,
                        format!("blank node cannot be a {}", position.name()),
                    ));
                }
                self.bump();
                self.bump();
                let label = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                BlankNode::new(&label)
                    .map(Term::BlankNode)
                    .map_err(|_| self.error(ParseErrorKind::UnexpectedToken, "expected blank node label"))
            }
            Some('"') => {
                if position != Position::Object {
                    return Err(self.error_at(
                        start,
                        ParseErrorKind::UnexpectedToken,
                        format!("literal cannot be a {}", position.name()),
                    ));
                }
                self.literal()
            }
            Some(c) if c.is_ascii_alphabetic() || c == ':' => {
                let prefix = self.name_chars();
                if self.peek() != Some(':') {
                    if position == Position::Predicate && prefix == "a" {
                        return Ok(Term::Iri(ns::rdf_type()));
                    }
                    return Err(self.error_at(
                        start,
                        ParseErrorKind::UnexpectedToken,
                        format!("expected {}, found bare word {prefix:?}", position.name()),
                    ));
                }
                self.bump();
                let local = self.local_name();
                let ns = self.prefixes.get(&prefix).ok_or_else(|| {
                    self.error_at(start, ParseErrorKind::UnknownPrefix, format!("unknown prefix `{prefix}:`"))
                })?;
                Iri::new(format!("{}{}", ns.as_str(), local))
                    .map(Term::Iri)
                    .map_err(|e| self.error_at(start, ParseErrorKind::MalformedIri, e.to_string()))
            }
            Some(_) => Err(unexpected(self)),
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|&c| pred(c)) {
            s.push(c);
            self.bump();
        }
        s
    }

    /// Prefix label or directive keyword.
    fn name_chars(&mut self) -> String {
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            return String::new();
        }
        let mut s = self.take_while(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'));
        // a trailing '.' terminates the statement
        while s.ends_with('.') {
            s.pop();
            self.unbump();
        }
        s
    }

    fn local_name(&mut self) -> String {
        if !self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            return String::new();
        }
        let mut s = self.take_while(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'));
        while s.ends_with('.') {
            s.pop();
            self.unbump();
        }
        s
    }

    // only ever used to give back '.' characters, which never span lines
    fn unbump(&mut self) {
        self.pos -= 1;
        self.column -= 1;
    }

    fn iri_ref(&mut self) -> Result<Iri, ParseError> {
        self.bump(); // '<'
        let content_start = self.mark();
        let mut s = String::new();
        loop {
            match self.peek() {
                Some('>') => {
                    self.bump();
                    break;
                }
                None => return Err(self.error(ParseErrorKind::MalformedIri, "unterminated IRI")),
                Some(c) if c.is_whitespace() || matches!(c, '<' | '"' | '{' | '}' | '|' | '^' | '`' | '\\') => {
                    return Err(self.error(ParseErrorKind::MalformedIri, format!("character {c:?} not allowed in IRI")));
                }
                Some(c) => {
                    s.push(c);
                    self.bump();
                }
            }
        }
        Iri::new(&s).map_err(|e| self.error_at(content_start, ParseErrorKind::MalformedIri, e.to_string()))
    }

    fn literal(&mut self) -> Result<Term, ParseError> {
        let start = self.mark();
        self.bump(); // '"'
        let mut lexical = String::new();
        loop {
            match self.peek() {
                None | Some('\n') => {
                    return Err(self.error_at(
                        start,
                        ParseErrorKind::UnterminatedString,
                        "string literal is not closed",
                    ))
                }
                Some('"') => {
                    self.bump();
                    break;
                }
                Some('\\') => {
                    let esc = self.mark();
                    self.bump();
                    let c = match self.peek() {
                        Some('"') => '"',
                        Some('\\') => '\\',
                        Some('n') => '\n',
                        Some('t') => '\t',
                        None | Some('\n') => {
                            return Err(self.error_at(
                                start,
                                ParseErrorKind::UnterminatedString,
                                "string literal is not closed",
                            ))
                        }
                        Some(other) => {
                            return Err(self.error_at(
                                esc,
                                ParseErrorKind::UnexpectedToken,
                                format!("unsupported escape \\{other}"),
                            ))
                        }
                    };
                    self.bump();
                    lexical.push(c);
                }
                Some(c) => {
                    lexical.push(c);
                    self.bump();
                }
            }
        }
        if self.peek() == Some('^') {
            if self.peek_at(1) != Some('^') {
                self.bump();
                return Err(self.error(ParseErrorKind::UnexpectedToken, "expected '^^'"));
            }
            self.bump();
            self.bump();
            match self.term(Position::Datatype)? {
                Term::Iri(dt) => Ok(Term::Literal(Literal::new(lexical, dt))),
                _ => unreachable!("datatype position only yields IRIs"),
            }
        } else if self.peek() == Some('@') {
            Err(self.error(ParseErrorKind::UnexpectedToken, "language tags are not supported"))
        } else {
            Ok(Term::Literal(Literal::string(lexical)))
        }
    }
}
