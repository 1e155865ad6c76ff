//! Dominating, connected and connected dominating sets.
//!
//! The empty set is never dominating: every graph here has at least one vertex.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Closed neighbourhood of a set, `N[S]`.
#[inline]
pub fn closed_neighborhood(g: &Graph, s: VertexSet) -> VertexSet {
    let mut out = s;
    for v in s {
        out |= g.neighbors(v);
    }
    out
}

#[inline]
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    closed_neighborhood(g, s) == g.vertices()
}

pub fn is_connected_induced(g: &Graph, s: VertexSet) -> Result<bool> {
    let v = s.min().ok_or(Error::EmptySet)?;
    Ok(g.component_of(v, s) == s)
}

pub fn is_cds(g: &Graph, s: VertexSet) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(cds(g, s))
}

/// [`is_cds`] without the emptiness check; the empty set is not a CDS.
#[inline]
pub fn cds(g: &Graph, s: VertexSet) -> bool {
    match s.min() {
        None => false,
        Some(v) => is_dominating(g, s) && g.component_of(v, s) == s,
    }
}

/// Maximum degree of `G[V \ d]`; zero when `d` covers every vertex.
pub fn complement_max_degree(g: &Graph, d: VertexSet) -> usize {
    let rest = g.vertices() - d;
    rest.iter()
        .map(|v| (g.neighbors(v) & rest).len())
        .max()
        .unwrap_or(0)
}

/// For a CDS `d`: every vertex of `d` has degree 3, `G[d]` is a tree, and each
/// vertex outside `d` has exactly one neighbour in `d`.
pub fn lemma1_equality_holds(g: &Graph, d: VertexSet) -> Result<bool> {
    if !is_cds(g, d)? {
        return Err(Error::NotCds);
    }
    let all_cubic = d.iter().all(|v| g.degree(v) == 3);
    let inner_edges: usize = d.iter().map(|v| (g.neighbors(v) & d).len()).sum::<usize>() / 2;
    let is_tree = inner_edges + 1 == d.len();
    let single_link = (g.vertices() - d)
        .iter()
        .all(|v| (g.neighbors(v) & d).len() == 1);
    Ok(all_cubic && is_tree && single_link)
}

/// Size of a smallest connected dominating set, by subset search in
/// increasing size.
pub fn min_cds_size(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::PreconditionViolated(
            "minimum CDS needs a connected graph".into(),
        ));
    }
    let n = g.order();
    for size in 1..=n {
        if combinations(n, size).any(|s| cds(g, s)) {
            return Ok(size);
        }
    }
    unreachable!("V(G) is a CDS of a connected graph")
}

/// All `size`-subsets of `0..n` in increasing numeric order (Gosper's hack).
pub fn combinations(n: usize, size: usize) -> impl Iterator<Item = VertexSet> {
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let first = if size == 0 {
        Some(0)
    } else if size > n {
        None
    } else {
        Some(VertexSet::full(size).bits())
    };
    std::iter::successors(first, move |&x| {
        if x == 0 {
            return None;
        }
        let c = x & x.wrapping_neg();
        let r = x.checked_add(c)?;
        let next = (((r ^ x) >> 2) / c) | r;
        (next <= limit && next.count_ones() as usize == size).then_some(next)
    })
    .map(VertexSet::from_bits)
}

/// Every connected dominating set of `g`, in increasing mask order.
pub fn all_cds(g: &Graph) -> Vec<VertexSet> {
    g.vertices().subsets().filter(|&s| cds(g, s)).collect()
}

/// Precomputed CDS membership for every subset of a graph of order at most
/// [`CdsTable::MAX_ORDER`].
pub struct CdsTable {
    words: Vec<u64>,
}

impl CdsTable {
    pub const MAX_ORDER: usize = 24;

    pub fn new(g: &Graph) -> Option<CdsTable> {
        let n = g.order();
        if n > Self::MAX_ORDER {
            return None;
        }
        let size = 1usize << n;
        let mut words = vec![0u64; size.div_ceil(64)];
        for mask in 1..size as u64 {
            if cds(g, VertexSet::from_bits(mask)) {
                words[(mask >> 6) as usize] |= 1 << (mask & 63);
            }
        }
        Some(CdsTable { words })
    }

    #[inline]
    pub fn get(&self, s: VertexSet) -> bool {
        let m = s.bits();
        self.words[(m >> 6) as usize] >> (m & 63) & 1 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::named_graph;

    fn g(name: &str) -> Graph {
        named_graph(name).unwrap()
    }

    #[test]
    fn dominating_examples() {
        assert!(is_dominating(&g("K_4"), VertexSet::from([0])));
        assert!(!is_dominating(&g("C_5"), VertexSet::from([0, 1])));
        assert!(is_dominating(&g("M_6"), VertexSet::from([0, 1])));
        assert!(!is_dominating(&g("K_4"), VertexSet::EMPTY));
    }

    #[test]
    fn connected_examples() {
        let c5 = g("C_5");
        for v in 0..5 {
            assert!(is_connected_induced(&c5, VertexSet::singleton(v)).unwrap());
        }
        assert!(!is_connected_induced(&c5, VertexSet::from([0, 2])).unwrap());
        assert!(is_connected_induced(&c5, VertexSet::from([0, 1, 2])).unwrap());
        assert_eq!(is_connected_induced(&c5, VertexSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn cds_examples() {
        assert!(is_cds(&g("C_5"), VertexSet::from([0, 1, 2])).unwrap());
        assert!(is_cds(&g("Pr_6"), VertexSet::from([0, 3])).unwrap());
        assert!(is_cds(&g("K_4"), VertexSet::from([0])).unwrap());
        assert_eq!(is_cds(&g("K_4"), VertexSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn complement_degree_examples() {
        let m6 = g("M_6");
        let d = VertexSet::from([0, 1]);
        assert!(cds(&m6, d));
        assert!(complement_max_degree(&m6, d) <= 2);
        assert_eq!(complement_max_degree(&g("K_4"), VertexSet::EMPTY), 3);
        assert_eq!(complement_max_degree(&g("C_5"), VertexSet::from([0, 1, 2])), 1);
        assert_eq!(complement_max_degree(&g("C_5"), VertexSet::full(5)), 0);
    }

    #[test]
    fn lemma1_equality_examples() {
        assert!(lemma1_equality_holds(&g("M_6"), VertexSet::from([0, 1])).unwrap());
        assert!(!lemma1_equality_holds(&g("C_6"), VertexSet::from([0, 1, 2, 3])).unwrap());
        assert_eq!(
            lemma1_equality_holds(&g("C_6"), VertexSet::from([0, 3])),
            Err(Error::NotCds)
        );
    }

    #[test]
    fn min_cds_examples() {
        assert_eq!(min_cds_size(&g("K_4")).unwrap(), 1);
        assert_eq!(min_cds_size(&g("C_5")).unwrap(), 3);
        assert!(min_cds_size(&g("M_8")).unwrap() >= 3);
        assert!(min_cds_size(&g("2K_2")).is_err());
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(6, 3).count(), 20);
        assert_eq!(combinations(5, 0).count(), 1);
        assert_eq!(combinations(3, 4).count(), 0);
        assert!(combinations(7, 2).all(|s| s.len() == 2 && s.is_subset(VertexSet::full(7))));
    }

    #[test]
    fn table_matches_predicate() {
        let m8 = g("M_8");
        let t = CdsTable::new(&m8).unwrap();
        for s in m8.vertices().subsets() {
            assert_eq!(t.get(s), cds(&m8, s));
        }
    }
}
