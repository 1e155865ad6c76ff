//! Running the verification suites on the default corpora.
//!
//!     cargo run --release --example verify_claims

use ccpart::verify::{all_passed, run_suite, Claim, SuiteOptions};

fn main() -> ccpart::Result<()> {
    let opts = SuiteOptions::defaults()?;
    for c in &opts.corpora {
        println!("corpus {}: {} graphs", c.label, c.graphs.len());
    }
    let records = run_suite(&Claim::ALL, &opts)?;
    for r in &records {
        print!("{}", r.to_text());
    }
    println!("all passed: {}", all_passed(&records));
    Ok(())
}
