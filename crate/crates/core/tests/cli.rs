use std::path::PathBuf;
use std::process::{Command, Output};

use rdn::rdf::{ns, Iri};
use rdn::turtle;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn rdn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rdn")).args(args).output().expect("run rdn")
}

fn rdn_on(cmd: &str, file: &str, extra: &[&str]) -> Output {
    let path = data(file);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    rdn(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn base() -> Iri {
    Iri::new(ns::DEFAULT_BASE).unwrap()
}

#[test]
fn validate_exit_codes() {
    let ok = rdn_on("validate", "lewis-full.ttl", &[]);
    assert_eq!(ok.status.code(), Some(0), "{}", stderr(&ok));
    assert_eq!(stdout(&ok), "");

    let bad = rdn_on("validate", "lewis-plus-tolkien.ttl", &[]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(
        stdout(&bad),
        "C4 https://example.org/rdn#sibAuthorRole 2\nC9 https://example.org/rdn#csLewisNameCV 2\n"
    );

    let trunc = rdn_on("validate", "truncated.ttl", &[]);
    assert_eq!(trunc.status.code(), Some(2));
    assert!(stderr(&trunc).contains("truncated.ttl:5:1"), "{}", stderr(&trunc));
}

#[test]
fn validate_flags() {
    let no_una = rdn_on("validate", "lewis-plus-tolkien.ttl", &["--no-una"]);
    assert_eq!(no_una.status.code(), Some(0));
    assert!(stderr(&no_una).contains("C4, C9 not evaluated"));

    // without inferred typing nothing in the naive corpus is typed at all
    let raw = rdn_on("validate", "lewis-plus-tolkien.ttl", &["--no-materialize"]);
    assert_eq!(raw.status.code(), Some(0));

    let json = rdn_on("validate", "lewis-plus-tolkien.ttl", &["--json"]);
    assert_eq!(json.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["violations"].as_array().unwrap().len(), 2);
    for key in ["constraint", "focus", "witnesses", "message"] {
        assert!(v["violations"][0].get(key).is_some(), "{key}");
    }

    let bogus = rdn_on("validate", "lewis-full.ttl", &["--frobnicate"]);
    assert_eq!(bogus.status.code(), Some(3));
    assert_eq!(rdn(&["validate"]).status.code(), Some(3));
    assert_eq!(rdn(&["nonsense"]).status.code(), Some(3));
    assert_eq!(rdn(&["validate", "/nonexistent/file.ttl"]).status.code(), Some(3));
    assert_eq!(rdn(&["--help"]).status.code(), Some(0));
}

#[test]
fn materialize_output() {
    let out = rdn_on("materialize", "lewis-full.ttl", &[]);
    assert_eq!(out.status.code(), Some(0));
    let g = turtle::parse(&stdout(&out), &base()).unwrap();
    assert_eq!(g.len(), 18);
    let again = rdn_on("materialize", "lewis-full.ttl", &[]);
    assert_eq!(out.stdout, again.stdout);

    let empty = rdn_on("materialize", "empty.ttl", &[]);
    assert_eq!(empty.status.code(), Some(0));
    assert!(stdout(&empty).lines().all(|l| l.starts_with("@prefix")));

    assert_eq!(rdn_on("materialize", "truncated.ttl", &[]).status.code(), Some(2));
}

#[test]
fn materialize_trace_and_output_file() {
    let dir = std::env::temp_dir().join(format!("rdn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("closed.ttl");
    let out = rdn_on("materialize", "lewis-min.ttl", &["--trace", "-o", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "");
    let lines: Vec<String> = stderr(&out).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 8);
    assert!(lines.iter().all(|l| l.starts_with("DERIVED [") && l.contains(" BY R") && l.contains(" FROM [")));
    assert!(lines.contains(
        &"DERIVED [:csLewis :assumesAgentRole :goAuthorRole] BY R16 FROM [:csLewis :hasName :csLewisNameNWC] [:goAuthorRole :hasRoleUnderName :csLewisNameNWC]".to_owned()
    ));
    let written = std::fs::read_to_string(&target).unwrap();
    assert_eq!(turtle::parse(&written, &base()).unwrap().len(), 18);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn explain_cases() {
    let derived = rdn_on("explain", "lewis-min.ttl", &[":csLewis", ":assumesAgentRole", ":goAuthorRole"]);
    assert_eq!(derived.status.code(), Some(0));
    assert_eq!(
        stdout(&derived),
        ":csLewis :assumesAgentRole :goAuthorRole  [R16, round 1]\n  \
         :csLewis :hasName :csLewisNameNWC  [asserted]\n  \
         :goAuthorRole :hasRoleUnderName :csLewisNameNWC  [asserted]\n"
    );

    let asserted = rdn_on("explain", "lewis-full.ttl", &[":csLewis", ":hasName", ":csLewisNameCV"]);
    assert_eq!(asserted.status.code(), Some(0));
    assert!(stdout(&asserted).contains("asserted"));

    let literal =
        rdn_on("explain", "lewis-full.ttl", &[":csLewisNameNWC", ":hasNameAsString", "\"N. W. Clerk\"^^xsd:string"]);
    assert_eq!(literal.status.code(), Some(0));

    let typed = rdn_on("explain", "lewis-full.ttl", &[":csLewis", "a", ":Agent"]);
    assert_eq!(typed.status.code(), Some(0));
    let spelled = rdn_on("explain", "lewis-full.ttl", &[":csLewis", "rdf:type", ":Agent"]);
    assert_eq!(spelled.stdout, typed.stdout);
    assert!(stdout(&typed).starts_with(":csLewis rdf:type :Agent  [R3, round 2]\n"));
    assert_eq!(rdn_on("explain", "lewis-full.ttl", &["a", ":p", ":Agent"]).status.code(), Some(3));

    let absent = rdn_on("explain", "lewis-full.ttl", &[":x", ":y", ":z"]);
    assert_eq!(absent.status.code(), Some(1));
    assert!(stdout(&absent).contains("not derivable"));

    assert_eq!(rdn_on("explain", "lewis-full.ttl", &[":x", "\"lit\"", ":z"]).status.code(), Some(3));
    assert_eq!(rdn_on("explain", "lewis-full.ttl", &["nope:x", ":y", ":z"]).status.code(), Some(3));
    assert_eq!(rdn_on("explain", "lewis-full.ttl", &[":x", ":y"]).status.code(), Some(3));
}

#[test]
fn example_and_tbox() {
    let ex = rdn(&["example"]);
    assert_eq!(ex.status.code(), Some(0));
    let g = turtle::parse(&stdout(&ex), &base()).unwrap();
    assert_eq!(g, rdn::corpus::lewis_full());
    assert_eq!(ex.stdout, rdn(&["example"]).stdout);

    let tbox = rdn(&["tbox"]);
    assert_eq!(tbox.status.code(), Some(0));
    let text = stdout(&tbox);
    assert_eq!(text.matches("owl:propertyChainAxiom").count(), 2);
    assert_eq!(text.matches("owl:disjointWith").count(), 3);
    let parsed = turtle::parse(&text, &base()).unwrap();
    assert_eq!(parsed, rdn::vocab::tbox_graph(&rdn::Vocabulary::default()));
}

#[test]
fn custom_base() {
    let ex = rdn(&["--base", "http://other.example/ns#", "example"]);
    assert!(stdout(&ex).contains("@prefix : <http://other.example/ns#> ."));
    assert_eq!(rdn(&["--base", "no scheme", "example"]).status.code(), Some(3));
}
