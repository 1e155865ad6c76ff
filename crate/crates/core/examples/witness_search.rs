//! Finding graphs that realise a coalition graph, and graphs attaining the
//! part-count bound.
//!
//!     cargo run --release --example witness_search

use ccpart::graph6;
use ccpart::verify::{sharpness_witness, witness_search, Family};

fn main() -> ccpart::Result<()> {
    for (target, family, lo, hi) in [
        ("K_{2,3}", Family::Cubic, 10, 10),
        ("C_5", Family::Ladders, 10, 10),
        ("C_4+e", Family::Subcubic, 1, 10),
        ("S_7", Family::StarGadget, 4, 16),
    ] {
        match witness_search(target, family, lo, hi) {
            Ok(w) => println!("{target:8} {family:11} {} {}", graph6::encode(&w.graph), w.partition),
            Err(e) => println!("{target:8} {family:11} {e}"),
        }
    }
    match witness_search("C_4+e", Family::Ladders, 10, 12) {
        Ok(_) => println!("C_4+e unexpectedly realised by a large ladder"),
        Err(e) => println!("C_4+e    ladders     {e}"),
    }
    for n in [6, 8, 10, 11, 12, 13] {
        let (w, cc) = sharpness_witness(n, false)?;
        println!("n={n:2} CC={cc} {} {}", graph6::encode(&w.graph), w.partition);
    }
    Ok(())
}
