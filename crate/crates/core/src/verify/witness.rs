//! Witness search: graphs from a family together with a valid partition whose
//! coalition graph has a given class.

use std::fmt;
use std::str::FromStr;

use crate::coalition::{
    build_ccg, cc_number_with, find_valid, part_count_bound, EnumerationConfig, Partition,
};
use crate::corpus::{cubic_graphs, subcubic_graphs_up_to};
use crate::error::{Error, Result};
use crate::graph::{mobius_ladder, prism, Graph};
use crate::iso::catalog::{classify, is_unknown, star_order, Classifier};
use crate::named::named_graph;
use crate::vertex_set::VertexSet;

/// Graph families searched for witnesses and used as verification corpora.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Connected graphs of maximum degree at most 3.
    Subcubic,
    /// Möbius ladders `M_n`.
    Ladders,
    /// Prisms `Pr_n`.
    Prisms,
    /// Connected cubic graphs.
    Cubic,
    /// Two disjoint paths plus singleton vertices joined to both, with the
    /// planted partition {paths, singletons...}. Only realises stars.
    StarGadget,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Subcubic,
        Family::Ladders,
        Family::Prisms,
        Family::Cubic,
        Family::StarGadget,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Subcubic => "subcubic",
            Family::Ladders => "ladders",
            Family::Prisms => "prisms",
            Family::Cubic => "cubic",
            Family::StarGadget => "star-gadget",
        }
    }

    /// Default order range when none is given.
    pub fn default_range(self) -> (usize, usize) {
        match self {
            Family::Subcubic => (1, 7),
            Family::Ladders | Family::Prisms => (6, 12),
            Family::Cubic => (4, 10),
            Family::StarGadget => (4, 13),
        }
    }

    /// Members of order `n`, in a fixed order. Ladders and prisms of odd or
    /// small order are simply absent.
    pub fn graphs_of_order(self, n: usize) -> Result<Vec<Graph>> {
        Ok(match self {
            Family::Subcubic => subcubic_graphs_up_to(n)?
                .into_iter()
                .filter(|g| g.order() == n)
                .collect(),
            Family::Ladders => ladder_like(n, mobius_ladder)?,
            Family::Prisms => ladder_like(n, prism)?,
            Family::Cubic => cubic_graphs(n)?,
            Family::StarGadget => star_gadgets_of_order(n)
                .into_iter()
                .map(|(g, _)| g)
                .collect(),
        })
    }

    /// Members with order in `min_n..=max_n`, by order.
    pub fn graphs(self, min_n: usize, max_n: usize) -> Result<Vec<Graph>> {
        if self == Family::Subcubic {
            return Ok(subcubic_graphs_up_to(max_n)?
                .into_iter()
                .filter(|g| g.order() >= min_n)
                .collect());
        }
        let mut out = Vec::new();
        for n in min_n..=max_n {
            out.extend(self.graphs_of_order(n)?);
        }
        Ok(out)
    }
}

fn ladder_like(n: usize, make: fn(usize) -> Result<Graph>) -> Result<Vec<Graph>> {
    if n < 6 || n % 2 == 1 {
        return Ok(Vec::new());
    }
    Ok(vec![make(n)?])
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.trim().to_ascii_lowercase().as_str() {
            "subcubic" => Ok(Family::Subcubic),
            "ladders" | "ladder" | "mobius" => Ok(Family::Ladders),
            "prisms" | "prism" => Ok(Family::Prisms),
            "cubic" => Ok(Family::Cubic),
            "star-gadget" | "star-gadgets" | "gadget" => Ok(Family::StarGadget),
            _ => Err(Error::MalformedInput(format!(
                "unknown family `{s}` (expected subcubic, ladders, prisms, cubic or star-gadget)"
            ))),
        }
    }
}

/// A graph, a valid partition of it, and the class of its coalition graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub graph: Graph,
    pub partition: Partition,
    pub class: String,
}

/// Resolves a class name (any accepted spelling) to its catalog name.
pub fn target_class(target: &str) -> Result<String> {
    let class = classify(&named_graph(target)?);
    if is_unknown(&class) {
        return Err(Error::UnknownName(format!(
            "{target} is not a coalition graph of a subcubic graph"
        )));
    }
    Ok(class)
}

/// First graph of `family` with order in `min_n..=max_n` (by order, then
/// family order) that has a valid partition whose coalition graph is
/// `target`, with the first such partition in enumeration order.
pub fn witness_search(target: &str, family: Family, min_n: usize, max_n: usize) -> Result<Witness> {
    let class = target_class(target)?;
    let target_order = named_graph(target)?.order();
    if family == Family::StarGadget {
        return star_gadget_witness(&class, target_order, min_n, max_n);
    }
    let cfg = EnumerationConfig::exact();
    let mut classifier = Classifier::new();
    for n in min_n.max(target_order)..=max_n {
        for g in family.graphs_of_order(n)? {
            let hit = find_valid(&g, &cfg, |vp| {
                vp.len() == target_order && classifier.classify_masks(vp.ccg) == class
            })?;
            if let Some(partition) = hit {
                return Ok(Witness {
                    graph: g,
                    partition,
                    class,
                });
            }
        }
    }
    Err(Error::NotFound(format!(
        "no {family} graph of order {min_n}..={max_n} realises {class}"
    )))
}

fn star_gadget_witness(class: &str, k: usize, min_n: usize, max_n: usize) -> Result<Witness> {
    if star_order(&named_graph(class)?).is_none() {
        return Err(Error::PreconditionViolated(format!(
            "star gadgets only realise stars, not {class}"
        )));
    }
    for n in min_n..=max_n {
        for (graph, partition) in star_gadgets(k, n) {
            if let Ok(h) = build_ccg(&graph, &partition) {
                if h.classify() == class {
                    return Ok(Witness {
                        graph,
                        partition,
                        class: class.to_string(),
                    });
                }
            }
        }
    }
    Err(Error::NotFound(format!(
        "no star gadget of order {min_n}..={max_n} realises {class}"
    )))
}

/// Star gadgets of order `n` with `k` planted parts: `k - 1` singleton
/// vertices, each joined to one vertex of a path `A` and one vertex of a
/// path `B`, and the part `A ∪ B`. Degrees stay at most 3. The planted
/// partition is returned unchecked.
pub fn star_gadgets(k: usize, n: usize) -> Vec<(Graph, Partition)> {
    let mut out = Vec::new();
    if k < 2 || n < k + 1 {
        return out;
    }
    let leaves = k - 1;
    let rest = n - leaves;
    for a in 1..=rest / 2 {
        let b = rest - a;
        if a + 2 < leaves || b + 2 < leaves {
            continue;
        }
        for on_a in attachments(a, leaves, None) {
            for on_b in attachments(b, leaves, Some(&on_a)) {
                out.push(build_gadget(leaves, a, b, &on_a, &on_b));
            }
        }
    }
    out
}

fn star_gadgets_of_order(n: usize) -> Vec<(Graph, Partition)> {
    (2..n).flat_map(|k| star_gadgets(k, n)).collect()
}

fn path_capacity(len: usize, i: usize) -> usize {
    match len {
        1 => 3,
        _ if i == 0 || i == len - 1 => 2,
        _ => 1,
    }
}

/// Maps from leaves to path vertices respecting the free degree of each path
/// vertex. Without `group`, only non-decreasing maps (leaves are
/// interchangeable); with it, non-decreasing within each run of leaves that
/// `group` sends to the same vertex.
fn attachments(len: usize, leaves: usize, group: Option<&[usize]>) -> Vec<Vec<usize>> {
    fn go(
        len: usize,
        leaves: usize,
        group: Option<&[usize]>,
        cur: &mut Vec<usize>,
        used: &mut [usize],
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = cur.len();
        if i == leaves {
            out.push(cur.clone());
            return;
        }
        let same_run = i > 0 && group.is_none_or(|g| g[i] == g[i - 1]);
        let start = if same_run { cur[i - 1] } else { 0 };
        for v in start..len {
            if used[v] < path_capacity(len, v) {
                used[v] += 1;
                cur.push(v);
                go(len, leaves, group, cur, used, out);
                cur.pop();
                used[v] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    go(len, leaves, group, &mut Vec::new(), &mut vec![0; len], &mut out);
    out
}

fn build_gadget(leaves: usize, a: usize, b: usize, on_a: &[usize], on_b: &[usize]) -> (Graph, Partition) {
    let (a0, b0) = (leaves, leaves + a);
    let mut edges = Vec::new();
    edges.extend((1..a).map(|i| (a0 + i - 1, a0 + i)));
    edges.extend((1..b).map(|i| (b0 + i - 1, b0 + i)));
    for l in 0..leaves {
        edges.push((l, a0 + on_a[l]));
        edges.push((l, b0 + on_b[l]));
    }
    let g = Graph::new(leaves + a + b, &edges).expect("gadget edges are in range");
    let mut parts: Vec<VertexSet> = (0..leaves).map(VertexSet::singleton).collect();
    parts.push((a0..a0 + a + b).collect());
    (g, Partition::new(parts).expect("planted parts are disjoint"))
}

/// A subcubic graph of order `n` attaining `CC(G) = max{6, ⌊(n+7)/3⌋}`,
/// a partition with that many parts, and the exact `CC(G)`.
///
/// Orders 6 and 8 use the prism and the Möbius ladder, order 10 the cubic
/// graphs, and orders from 11 on the star gadgets. `CC(G)` is always computed
/// by exact enumeration; a value different from the bound is reported as is.
pub fn sharpness_witness(n: usize, long_running: bool) -> Result<(Witness, usize)> {
    let k = part_count_bound(n);
    let cfg = EnumerationConfig::exact().with_long_running(long_running);
    let candidates: Vec<Graph> = match n {
        6 => vec![prism(6)?],
        8 => vec![mobius_ladder(8)?],
        10 => cubic_graphs(10)?,
        n if n >= 11 => {
            for (graph, partition) in star_gadgets(k, n) {
                let Ok(h) = build_ccg(&graph, &partition) else {
                    continue;
                };
                let cc = cc_number_with(&graph, &cfg)?;
                let w = Witness {
                    graph,
                    partition,
                    class: h.classify(),
                };
                return Ok((w, cc));
            }
            return Err(Error::NotFound(format!("no star gadget of order {n} with {k} parts")));
        }
        _ => {
            return Err(Error::PreconditionViolated(format!(
                "the bound is only claimed sharp for n = 6, 8 and n >= 10, not {n}"
            )))
        }
    };
    for g in candidates {
        let cc = cc_number_with(&g, &cfg)?;
        if cc == k {
            let partition = find_valid(&g, &cfg, |vp| vp.len() == k)?
                .expect("a partition with CC(G) parts exists");
            let class = build_ccg(&g, &partition)?.classify();
            return Ok((
                Witness {
                    graph: g,
                    partition,
                    class,
                },
                cc,
            ));
        }
    }
    Err(Error::NotFound(format!("no graph of order {n} with CC = {k}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::validate_partition;

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("trees".parse::<Family>().is_err());
    }

    #[test]
    fn ladders_found_and_missing() {
        let w = witness_search("K4", Family::Ladders, 6, 12).unwrap();
        assert_eq!(w.graph.order(), 8);
        assert_eq!(w.class, "K_4");
        assert!(validate_partition(&w.graph, &w.partition).unwrap());
        assert!(matches!(
            witness_search("K4", Family::Ladders, 10, 12),
            Err(Error::NotFound(_))
        ));
        assert!(matches!(
            witness_search("P_6", Family::Ladders, 6, 8),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn gadget_shapes() {
        // Five singletons need paths of at least three vertices each.
        assert!(star_gadgets(6, 10).is_empty());
        let gs = star_gadgets(6, 11);
        assert!(!gs.is_empty());
        for (g, p) in &gs {
            assert!(g.is_subcubic() && g.is_connected());
            assert_eq!(p.len(), 6);
        }
        let w = witness_search("S_6", Family::StarGadget, 4, 13).unwrap();
        assert_eq!(w.graph.order(), 11);
        assert!(matches!(
            witness_search("C_4", Family::StarGadget, 4, 8),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn sharpness_small_orders() {
        assert_eq!(sharpness_witness(6, false).unwrap().1, 6);
        assert_eq!(sharpness_witness(8, false).unwrap().1, 6);
        assert!(sharpness_witness(7, false).is_err());
    }
}
