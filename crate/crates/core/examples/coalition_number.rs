//! The connected coalition number of named graphs and of all small cubic graphs.
//!
//!     cargo run --release --example coalition_number

use std::collections::BTreeMap;

use ccpart::coalition::{part_count_bound, render_cc};
use ccpart::corpus::cubic_graphs;
use ccpart::{cc_number, named_graph};

fn main() -> ccpart::Result<()> {
    for name in ["K_4", "C_4", "C_7", "P_3", "K_{3,3}", "Pr_6", "M_8", "Pr_10"] {
        let g = named_graph(name)?;
        println!("CC({name}) = {}", render_cc(cc_number(&g)?));
    }
    for n in [4, 6, 8, 10] {
        let mut by_cc = BTreeMap::new();
        for g in cubic_graphs(n)? {
            *by_cc.entry(cc_number(&g)?).or_insert(0) += 1;
        }
        println!("cubic n={n}: bound {} distribution {by_cc:?}", part_count_bound(n));
    }
    Ok(())
}
