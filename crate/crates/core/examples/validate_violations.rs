//! Validates the example with and without a conflicting authorship claim.

use rdn::{check, corpus, CheckOptions};

fn main() {
    let clean = check(&corpus::lewis_full(), CheckOptions::default());
    println!("Lewis example conforms: {}", clean.conforms());

    let conflicted = corpus::lewis_plus_tolkien();
    let report = check(&conflicted, CheckOptions::default());
    for v in &report.violations {
        println!("{} {}: {}", v.constraint, v.focus, v.message);
        for w in &v.witnesses {
            println!("    {w}");
        }
    }

    let open = check(&conflicted, CheckOptions { unique_names: false, ..CheckOptions::default() });
    println!("\nwithout unique names: {} violations, skipped {:?}", open.violations.len(), open.not_evaluated);

    println!("\n{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
}
