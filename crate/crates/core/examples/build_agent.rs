//! Describes an agent with the builder and checks the result.

use rdn::{check, materialize, turtle, AgentBuilder, CheckOptions};

const NS: &str = "https://example.org/rdn#";

fn ex(local: &str) -> String {
    format!("{NS}{local}")
}

fn main() -> Result<(), rdn::builder::BuildError> {
    let agent = AgentBuilder::new(&ex("maryAnnEvans"))?
        .with_name(&ex("evansName"), "Mary Ann Evans")?
        .with_name(&ex("eliotName"), "George Eliot")?
        .with_role(&ex("middlemarchAuthorRole"), Some(&ex("middlemarch")), Some(&ex("eliotName")))?
        .with_role(&ex("translatorRole"), Some(&ex("lifeOfJesus")), None)?;

    let graph = agent.to_graph()?;
    print!("{}", turtle::serialize(&graph));

    let (closed, _) = materialize(&graph);
    println!("\nconforms after materialization: {}", check(&closed, CheckOptions::default()).conforms());

    match AgentBuilder::new(&ex("anon"))?.with_role(&ex("r"), None, Some(&ex("missing"))) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
