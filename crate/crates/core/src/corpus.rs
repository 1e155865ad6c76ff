//! Isomorph-free generation of small connected graphs with bounded degree.
//!
//! Every connected graph has a vertex whose removal leaves it connected, so
//! all connected graphs of order `n` arise by joining a new vertex to some
//! connected graph of order `n - 1`. Children are deduplicated by certificate
//! and each class is represented by its canonical form.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::certificate::{certificate, Certificate};
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`enumerate_connected_graphs`].
pub const MAX_CORPUS_ORDER: usize = 12;

/// One canonical representative per isomorphism class of connected graphs of
/// order `n` with maximum degree at most `max_degree`, sorted by certificate.
pub fn enumerate_connected_graphs(n: usize, max_degree: usize) -> Result<Vec<Graph>> {
    Ok(connected_classes(n, max_degree)?
        .into_iter()
        .map(|c| c.to_graph())
        .collect())
}

/// Connected cubic graphs of order `n`.
pub fn cubic_graphs(n: usize) -> Result<Vec<Graph>> {
    if n % 2 == 1 {
        return Ok(Vec::new());
    }
    Ok(enumerate_connected_graphs(n, 3)?
        .into_iter()
        .filter(|g| g.is_regular(3))
        .collect())
}

/// All connected subcubic graphs with `1 <= order <= max_n`, by order then certificate.
pub fn subcubic_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut layer = connected_classes(1, 3)?;
    for n in 1..=max_n {
        if n > 1 {
            layer = augment(&layer, 3, n)?;
        }
        out.extend(layer.iter().map(|c| c.to_graph()));
    }
    Ok(out)
}

fn connected_classes(n: usize, max_degree: usize) -> Result<Vec<Certificate>> {
    if n == 0 || n > MAX_CORPUS_ORDER {
        return Err(Error::OutOfRange(format!(
            "corpus order {n} not in 1..={MAX_CORPUS_ORDER}"
        )));
    }
    let mut layer = vec![certificate(&Graph::new(1, &[])?)?];
    for order in 2..=n {
        layer = augment(&layer, max_degree, order)?;
    }
    Ok(layer)
}

fn augment(parents: &[Certificate], max_degree: usize, order: usize) -> Result<Vec<Certificate>> {
    let found: Vec<Vec<Certificate>> = parents
        .par_iter()
        .map(|parent| {
            let g = parent.to_graph();
            let open: VertexSet = (0..g.order())
                .filter(|&v| g.degree(v) < max_degree)
                .collect();
            let mut local = BTreeSet::new();
            for s in open.subsets() {
                if s.is_empty() || s.len() > max_degree {
                    continue;
                }
                let child = g.with_new_vertex(s)?;
                local.insert(certificate(&child)?);
            }
            Ok(local.into_iter().collect())
        })
        .collect::<Result<_>>()?;
    let all: BTreeSet<Certificate> = found.into_iter().flatten().collect();
    debug_assert!(all.iter().all(|c| c.order() == order));
    Ok(all.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        // Connected graphs on 1..=6 vertices: 1, 1, 2, 6, 21, 112.
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_connected_graphs(n, n.saturating_sub(1).max(1)).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn cubic_counts() {
        assert_eq!(cubic_graphs(4).unwrap().len(), 1);
        assert_eq!(cubic_graphs(6).unwrap().len(), 2);
        assert_eq!(cubic_graphs(8).unwrap().len(), 5);
        assert!(cubic_graphs(7).unwrap().is_empty());
    }

    #[test]
    fn paths_and_cycles_only_for_degree_two() {
        for n in 3..=8 {
            let gs = enumerate_connected_graphs(n, 2).unwrap();
            assert_eq!(gs.len(), 2, "P_n and C_n for n={n}");
        }
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_connected_graphs(0, 3).is_err());
        assert!(enumerate_connected_graphs(MAX_CORPUS_ORDER + 1, 3).is_err());
    }
}
