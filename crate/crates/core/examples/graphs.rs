//! Building graphs: generators, names, graph6 and edge lists.
//!
//!     cargo run --example graphs

use ccpart::graph6;
use ccpart::{mobius_ladder, named_graph, prism, Graph};

fn main() -> ccpart::Result<()> {
    let m8 = mobius_ladder(8)?;
    let pr8 = prism(8)?;
    println!("M_8  {}  edges={} cubic={}", graph6::encode(&m8), m8.edge_count(), m8.is_cubic());
    println!("Pr_8 {}  edges={} cubic={}", graph6::encode(&pr8), pr8.edge_count(), pr8.is_cubic());

    // Names are normalised: these three are the same graph.
    for name in ["K_{3,3}", "K3,3"] {
        println!("{name:8} -> {}", graph6::encode(&named_graph(name)?));
    }
    let g = named_graph("2C3+e")?;
    println!("2C_3+e degrees {:?}", g.degree_sequence());

    // Round trips.
    let back = graph6::decode(&graph6::encode(&m8))?;
    assert_eq!(back, m8);
    let text = pr8.to_edge_list();
    print!("{text}");
    assert_eq!(Graph::from_edge_list(&text)?, pr8);
    Ok(())
}
