//! Recomputing the reference count tables and diffing them cell by cell.
//!
//!     cargo run --release --example reproduce_tables

use ccpart::tables::{reproduce, TableId};
use ccpart::EnumerationConfig;

fn main() -> ccpart::Result<()> {
    let cfg = EnumerationConfig::exact();
    for (id, max_n) in [(TableId::Mobius, 12), (TableId::Prisms, 12), (TableId::CubicCc, 10)] {
        let r = reproduce(id, max_n, &cfg)?;
        println!("{}", r.to_markdown());
    }
    Ok(())
}
