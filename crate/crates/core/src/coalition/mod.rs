//! Connected coalitions, connected coalition partitions and coalition graphs.

mod enumerate;
mod report;

use std::fmt;
use std::str::FromStr;

use crate::domination::cds;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::catalog::classify;
use crate::vertex_set::VertexSet;

pub use enumerate::{
    enumerate_partitions, find_valid, for_each_valid, EnumerationConfig, Mode, ValidPartition,
    DEFAULT_EXACT_CAP, LONG_RUNNING_CAP,
};
pub use report::{cc_number, cc_number_with, classify_and_count, render_cc, EnumerationReport};

/// `max{6, floor((n + 7) / 3)}`, the largest part count a subcubic graph of
/// order `n` admits.
pub fn part_count_bound(n: usize) -> usize {
    6.max((n + 7) / 3)
}

/// Disjoint nonempty parts covering `0..n`, ordered by their minimum vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<VertexSet>,
}

impl Partition {
    /// Sorts the parts into canonical order; checks disjointness and nonemptiness.
    pub fn new(mut parts: Vec<VertexSet>) -> Result<Partition> {
        let mut seen = VertexSet::EMPTY;
        for &p in &parts {
            if p.is_empty() {
                return Err(Error::NotAPartition("empty part".into()));
            }
            if !p.is_disjoint(seen) {
                return Err(Error::NotAPartition("parts overlap".into()));
            }
            seen |= p;
        }
        parts.sort_by_key(|&p| VertexSet::min(p));
        Ok(Partition { parts })
    }

    /// From a restricted-growth or arbitrary labelling: vertex `v` goes to part `labels[v]`.
    pub fn from_labels(labels: &[usize]) -> Result<Partition> {
        let k = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut parts = vec![VertexSet::EMPTY; k];
        for (v, &l) in labels.iter().enumerate() {
            parts[l].insert(v);
        }
        parts.retain(|p| !p.is_empty());
        Partition::new(parts)
    }

    pub(crate) fn from_canonical(parts: Vec<VertexSet>) -> Partition {
        debug_assert!(parts.windows(2).all(|w| w[0].min() < w[1].min()));
        Partition { parts }
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn union(&self) -> VertexSet {
        self.parts.iter().fold(VertexSet::EMPTY, |a, &p| a | p)
    }

    /// Checks that the parts cover exactly the vertices of `g`.
    pub fn check_covers(&self, g: &Graph) -> Result<()> {
        if self.union() != g.vertices() {
            return Err(Error::NotAPartition(format!(
                "parts cover {{{}}}, graph has {} vertices",
                self.union(),
                g.order()
            )));
        }
        Ok(())
    }
}

/// Parts separated by `|`, vertices by `,`, e.g. `0,3|1,2|4`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let mut parts = Vec::new();
        for chunk in s.trim().split('|') {
            let mut part = VertexSet::EMPTY;
            for tok in chunk.split(',') {
                let v: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::MalformedInput(format!("bad vertex `{tok}` in `{s}`")))?;
                if v >= 64 {
                    return Err(Error::OutOfRange(format!("vertex {v}")));
                }
                if part.contains(v) {
                    return Err(Error::NotAPartition(format!("vertex {v} repeated")));
                }
                part.insert(v);
            }
            parts.push(part);
        }
        Partition::new(parts)
    }
}

/// Two disjoint sets form a connected coalition when neither is a connected
/// dominating set but their union is.
pub fn is_coalition(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    if !a.is_disjoint(b) {
        return Err(Error::Overlap);
    }
    Ok(!cds(g, a) && !cds(g, b) && cds(g, a | b))
}

/// True iff every part is a single-vertex CDS or forms a coalition with another part.
pub fn validate_partition(g: &Graph, p: &Partition) -> Result<bool> {
    p.check_covers(g)?;
    let parts = p.parts();
    let is_cds: Vec<bool> = parts.iter().map(|&s| cds(g, s)).collect();
    Ok((0..parts.len()).all(|i| {
        (is_cds[i] && parts[i].len() == 1)
            || (0..parts.len()).any(|j| {
                j != i && !is_cds[i] && !is_cds[j] && cds(g, parts[i] | parts[j])
            })
    }))
}

/// The coalition graph of a partition: one vertex per part, edges at coalitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalitionGraph {
    graph: Graph,
    part_sizes: Vec<usize>,
}

impl CoalitionGraph {
    pub(crate) fn from_masks(adj: &[u64], parts: &[VertexSet]) -> CoalitionGraph {
        CoalitionGraph {
            graph: Graph::from_adjacency_unchecked(
                adj.iter().map(|&m| VertexSet::from_bits(m)).collect(),
            ),
            part_sizes: parts.iter().map(|p| p.len()).collect(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges().collect()
    }

    pub fn classify(&self) -> String {
        classify(&self.graph)
    }
}

pub fn build_ccg(g: &Graph, p: &Partition) -> Result<CoalitionGraph> {
    if !validate_partition(g, p)? {
        return Err(Error::InvalidPartition);
    }
    let parts = p.parts();
    let k = parts.len();
    let mut adj = vec![0u64; k];
    for i in 0..k {
        for j in i + 1..k {
            if is_coalition(g, parts[i], parts[j])? {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    Ok(CoalitionGraph::from_masks(&adj, parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::named_graph;

    fn g(name: &str) -> Graph {
        named_graph(name).unwrap()
    }

    fn singletons(n: usize) -> Partition {
        Partition::new((0..n).map(VertexSet::singleton).collect()).unwrap()
    }

    #[test]
    fn partition_text_format() {
        let p: Partition = "1,2|0,3|4".parse().unwrap();
        assert_eq!(p.to_string(), "0,3|1,2|4");
        assert_eq!(p.len(), 3);
        assert!("0,1|1".parse::<Partition>().is_err());
        assert!("0,,1".parse::<Partition>().is_err());
        assert!("0,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        assert_eq!(Partition::from_labels(&[0, 1, 1, 0, 2]).unwrap(), p);
    }

    #[test]
    fn coalition_examples() {
        let pr6 = g("Pr_6");
        let (a, b) = (VertexSet::from([0]), VertexSet::from([3]));
        assert!(is_coalition(&pr6, a, b).unwrap());
        assert!(!is_coalition(&g("K_4"), VertexSet::from([0]), VertexSet::from([1])).unwrap());
        assert_eq!(is_coalition(&pr6, a, a), Err(Error::Overlap));
        assert_eq!(is_coalition(&pr6, a, VertexSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn validate_examples() {
        assert!(validate_partition(&g("K_1"), &singletons(1)).unwrap());
        assert!(validate_partition(&g("M_6"), &singletons(6)).unwrap());
        let p3 = g("P_3");
        for s in ["0|1|2", "0,1|2", "0,2|1", "0|1,2", "0,1,2"] {
            assert!(!validate_partition(&p3, &s.parse().unwrap()).unwrap(), "{s}");
        }
        assert!(matches!(
            validate_partition(&p3, &"0|1".parse().unwrap()),
            Err(Error::NotAPartition(_))
        ));
    }

    #[test]
    fn ccg_examples() {
        let h = build_ccg(&g("M_6"), &singletons(6)).unwrap();
        assert_eq!(h.classify(), "K_{3,3}");
        assert_eq!(h.part_sizes(), &[1; 6]);
        assert_eq!(build_ccg(&g("Pr_6"), &singletons(6)).unwrap().classify(), "3K_2");
        assert_eq!(build_ccg(&g("K_3"), &singletons(3)).unwrap().classify(), "Kbar_3");
        assert_eq!(
            build_ccg(&g("P_3"), &singletons(3)),
            Err(Error::InvalidPartition)
        );
    }

    #[test]
    fn bound_values() {
        assert_eq!(part_count_bound(6), 6);
        assert_eq!(part_count_bound(10), 6);
        assert_eq!(part_count_bound(11), 6);
        assert_eq!(part_count_bound(14), 7);
        assert_eq!(part_count_bound(18), 8);
    }
}
