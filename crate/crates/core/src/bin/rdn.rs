use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rdn::corpus;
use rdn::engine::{Explanation, Materializer};
use rdn::rdf::{ns, Graph, Iri, Term, Triple};
use rdn::turtle::{self, format_triple};
use rdn::validate::{CheckOptions, Validator};
use rdn::vocab::{tbox_graph, Vocabulary};

const SUCCESS: u8 = 0;
const FINDINGS: u8 = 1;
const PARSE_ERROR: u8 = 2;
const USAGE_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rdn",
    version,
    about = "Role-Dependent Names pattern: materialize, validate and explain RDF instance data"
)]
struct Cli {
    /// Namespace bound to the empty prefix (and used for the pattern vocabulary)
    #[arg(long, global = true, value_name = "IRI", default_value = ns::DEFAULT_BASE)]
    base: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a document and print it in canonical form
    Parse { path: PathBuf },
    /// Print the fixpoint of the RDN rules over a document
    Materialize {
        path: PathBuf,
        /// Write the result to a file instead of standard output
        #[arg(short = 'o', value_name = "OUT")]
        out: Option<PathBuf>,
        /// Print one DERIVED line per inferred triple on standard error
        #[arg(long)]
        trace: bool,
    },
    /// Check a document against the RDN constraints
    Validate {
        path: PathBuf,
        /// Check the document as written, without inferred triples
        #[arg(long)]
        no_materialize: bool,
        /// Drop the unique name assumption (skips C4 and C9)
        #[arg(long)]
        no_una: bool,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Show how a triple follows from a document
    Explain { path: PathBuf, subject: String, predicate: String, object: String },
    /// Print the sixteen pattern axioms as OWL in Turtle
    Tbox,
    /// Print the C. S. Lewis example data
    Example,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE_ERROR } else { SUCCESS });
        }
    };
    ExitCode::from(match run(cli) {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            eprintln!("error: {message}");
            code
        }
    })
}

struct Failure(u8, String);

fn usage(message: impl Into<String>) -> Failure {
    Failure(USAGE_ERROR, message.into())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let base = Iri::new(&cli.base).map_err(|e| usage(format!("--base: {e}")))?;
    let vocab = Vocabulary::new(base.clone()).map_err(|e| usage(format!("--base: {e}")))?;
    match cli.command {
        Command::Parse { path } => {
            let graph = load(&path, &base)?;
            print!("{}", turtle::serialize(&graph));
            eprintln!("{} triples", graph.len());
            Ok(SUCCESS)
        }
        Command::Materialize { path, out, trace } => {
            let graph = load(&path, &base)?;
            let (closed, derivations) = Materializer::for_vocabulary(&vocab).run(&graph);
            if trace {
                for line in derivations.render_lines(closed.prefixes()) {
                    eprintln!("{line}");
                }
            }
            let text = turtle::serialize(&closed);
            match out {
                Some(out) => fs::write(&out, text).map_err(|e| usage(format!("{}: {e}", out.display())))?,
                None => print!("{text}"),
            }
            Ok(SUCCESS)
        }
        Command::Validate { path, no_materialize, no_una, json } => {
            let graph = load(&path, &base)?;
            let options = CheckOptions { materialize_first: !no_materialize, unique_names: !no_una };
            let report = Validator::new(vocab).check(&graph, options);
            if json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("JSON value"));
            } else {
                print!("{}", report.to_text());
                if !report.not_evaluated.is_empty() {
                    let ids: Vec<String> = report.not_evaluated.iter().map(ToString::to_string).collect();
                    eprintln!("note: {} not evaluated (unique name assumption disabled)", ids.join(", "));
                }
                eprintln!("{} violation(s) in {} checked triples", report.violations.len(), report.checked_graph_size);
            }
            Ok(if report.conforms() { SUCCESS } else { FINDINGS })
        }
        Command::Explain { path, subject, predicate, object } => {
            let graph = load(&path, &base)?;
            let prefixes = graph.prefixes();
            let term = |text: &str| {
                turtle::parse_term(text, prefixes).map_err(|e| usage(format!("cannot parse term {text:?}: {e}")))
            };
            // `a` is accepted for rdf:type as in Turtle
            let predicate = if predicate == "a" { Term::Iri(ns::rdf_type()) } else { term(&predicate)? };
            let goal = Triple::from_terms(term(&subject)?, predicate, term(&object)?)
                .map_err(|e| usage(format!("not a triple: {e}")))?;
            let (_, trace) = Materializer::for_vocabulary(&vocab).run(&graph);
            match trace.explain(&goal) {
                Explanation::Asserted => {
                    println!("{}  [asserted]", format_triple(&goal, prefixes));
                    Ok(SUCCESS)
                }
                Explanation::Derived(tree) => {
                    print!("{}", tree.render(prefixes));
                    Ok(SUCCESS)
                }
                Explanation::Absent => {
                    println!("{}  [not derivable]", format_triple(&goal, prefixes));
                    Ok(FINDINGS)
                }
            }
        }
        Command::Tbox => {
            print!("{}", turtle::serialize(&tbox_graph(&vocab)));
            Ok(SUCCESS)
        }
        Command::Example => {
            let text = corpus::lewis_full_text();
            let graph = turtle::parse(&text, &base).expect("bundled corpus parses");
            print!("{}", turtle::serialize(&graph));
            Ok(SUCCESS)
        }
    }
}

fn load(path: &Path, base: &Iri) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let (graph, warnings) = turtle::parse_with_warnings(&text, base)
        .map_err(|e| Failure(PARSE_ERROR, format!("{}:{e}", path.display())))?;
    for w in warnings {
        eprintln!("{}:{w}", path.display());
    }
    Ok(graph)
}
