//! Connected dominating sets and the size bound for subcubic graphs.
//!
//!     cargo run --example domination

use ccpart::domination::{all_cds, complement_max_degree, is_cds, lemma1_equality_holds, min_cds_size};
use ccpart::{named_graph, VertexSet};

fn main() -> ccpart::Result<()> {
    let c5 = named_graph("C_5")?;
    println!("C_5: {{0,1,2}} is a CDS: {}", is_cds(&c5, VertexSet::from([0, 1, 2]))?);
    println!("C_5: {{0,2}} is a CDS: {}", is_cds(&c5, VertexSet::from([0, 2]))?);

    for name in ["M_6", "Pr_6", "M_8", "Pr_8", "C_6"] {
        let g = named_graph(name)?;
        let n = g.order();
        let sets = all_cds(&g);
        let smallest = min_cds_size(&g)?;
        let tight: Vec<VertexSet> = sets.iter().copied().filter(|d| 2 * d.len() + 2 == n).collect();
        println!(
            "{name}: {} CDS, smallest {smallest}, n/2-1 = {}, {} of that size",
            sets.len(),
            n as f64 / 2.0 - 1.0,
            tight.len()
        );
        for d in tight.iter().take(2) {
            println!(
                "  {{{d}}}: rest has max degree {}, equality structure {}",
                complement_max_degree(&g, *d),
                lemma1_equality_holds(&g, *d)?
            );
        }
    }
    Ok(())
}
