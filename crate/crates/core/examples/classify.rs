//! Coalition-graph histograms and the catalog they are classified against.
//!
//!     cargo run --release --example classify

use ccpart::iso::{classify, Catalog};
use ccpart::{classify_and_count, mobius_ladder, named_graph, prism, EnumerationConfig};

fn main() -> ccpart::Result<()> {
    println!("{} catalog classes:", Catalog::theorem_classes().len());
    for e in Catalog::theorem_classes().entries() {
        print!(" {}", e.name);
    }
    println!();
    println!("a star with 7 leaves is {}", classify(&named_graph("S_8")?));

    let cfg = EnumerationConfig::exact();
    for g in [mobius_ladder(8)?, prism(8)?] {
        let r = classify_and_count(&g, &cfg)?;
        print!("{}", r.to_text());
    }
    Ok(())
}
