//! Listing the connected coalition partitions of a graph.
//!
//!     cargo run --example enumerate_partitions [name]

use ccpart::{build_ccg, enumerate_partitions, named_graph, EnumerationConfig};

fn main() -> ccpart::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "C_5".to_string());
    let g = named_graph(&name)?;
    let parts = enumerate_partitions(&g, &EnumerationConfig::exact())?;
    println!("{name}: {} valid partitions", parts.len());
    for p in parts.iter().take(20) {
        let h = build_ccg(&g, p)?;
        println!("  {p:<20} coalition graph {} edges {:?}", h.classify(), h.edges());
    }
    if parts.len() > 20 {
        println!("  ...");
    }
    Ok(())
}
