//! Undirected simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one [`VertexSet`] per vertex, so neighbourhood
//! unions and intersections are single word operations.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub const MAX_ORDER: usize = 64;

/// An immutable undirected simple graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OutOfRange(format!("order {n} not in 1..=64")));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::OutOfRange(format!(
                    "edge ({u},{v}) has an endpoint >= {n}"
                )));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from neighbourhood masks, checking every invariant.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OutOfRange(format!("order {n} not in 1..=64")));
        }
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if nb.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            if !nb.is_subset(all) {
                return Err(Error::OutOfRange(format!("neighbour of {v} is >= {n}")));
            }
            for u in nb {
                if !adj[u].contains(v) {
                    return Err(Error::MalformedInput(format!(
                        "asymmetric adjacency between {u} and {v}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Callers guarantee the invariants.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, &[])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_full_vertex(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.n
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.is_full_vertex(v))
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0, self.vertices()) == self.vertices()
    }

    /// Connected with maximum degree at most 3.
    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3 && self.is_connected()
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3) && self.is_connected()
    }

    /// Vertices reachable from `start` inside `within`. `start` must lie in `within`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next & within - seen;
            seen |= frontier;
        }
        seen
    }

    /// Number of connected components of the subgraph induced by `s`.
    pub fn component_count(&self, s: VertexSet) -> usize {
        let mut rest = s;
        let mut count = 0;
        while let Some(v) = rest.min() {
            rest = rest - self.component_of(v, s);
            count += 1;
        }
        count
    }

    /// The subgraph induced by `s`, relabelled by increasing vertex index.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let verts: Vec<usize> = s.iter().collect();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|u| index[u]).collect())
            .collect();
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::MalformedInput("permutation length differs from order".into()));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(Error::MalformedInput("not a permutation".into()));
            }
            seen.insert(p);
        }
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (v, nb) in self.adj.iter().enumerate() {
            adj[perm[v]] = nb.iter().map(|u| perm[u]).collect();
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// A copy with one extra vertex `n` joined to `neighbors`.
    pub fn with_new_vertex(&self, neighbors: VertexSet) -> Result<Graph> {
        if self.n == MAX_ORDER {
            return Err(Error::OutOfRange("graph already has 64 vertices".into()));
        }
        if !neighbors.is_subset(self.vertices()) {
            return Err(Error::OutOfRange("neighbour outside the graph".into()));
        }
        let n = self.n;
        let mut adj = self.adj.clone();
        for v in neighbors {
            adj[v].insert(n);
        }
        adj.push(neighbors);
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::OutOfRange(format!("union has order {n} > 64")));
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nb| VertexSet::from_bits(nb.bits() << shift)),
        );
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// One `u v` pair per line, 0-based, preceded by a `# n=<order>` comment.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# n={}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list format. Without a `# n=` header the order is one
    /// more than the largest endpoint.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut declared = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(v) = comment.trim().strip_prefix("n=") {
                    declared = Some(v.trim().parse::<usize>().map_err(|_| {
                        Error::MalformedInput(format!("line {}: bad order", lineno + 1))
                    })?);
                }
                continue;
            }
            let mut it = line.split_whitespace().map(str::parse::<usize>);
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
                _ => {
                    return Err(Error::MalformedInput(format!(
                        "line {}: expected `u v`",
                        lineno + 1
                    )))
                }
            }
        }
        let n = match declared {
            Some(n) => n,
            None => edges
                .iter()
                .map(|&(u, v)| u.max(v) + 1)
                .max()
                .ok_or_else(|| Error::MalformedInput("no edges and no order".into()))?,
        };
        Graph::new(n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

fn check_ladder_order(n: usize) -> Result<()> {
    if n % 2 == 1 || n < 6 || n > MAX_ORDER {
        return Err(Error::BadOrder(n));
    }
    Ok(())
}

/// Möbius ladder: the cycle `0..n` plus chords `(i, i + n/2)`.
pub fn mobius_ladder(n: usize) -> Result<Graph> {
    check_ladder_order(n)?;
    let half = n / 2;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..half).map(|i| (i, i + half)));
    Graph::new(n, &edges)
}

/// Prism: two `n/2`-cycles on `0..n/2` and `n/2..n` joined by rungs `(i, i + n/2)`.
pub fn prism(n: usize) -> Result<Graph> {
    check_ladder_order(n)?;
    let half = n / 2;
    let mut edges = Vec::with_capacity(3 * half);
    for i in 0..half {
        edges.push((i, (i + 1) % half));
        edges.push((half + i, half + (i + 1) % half));
        edges.push((i, i + half));
    }
    Graph::new(n, &edges)
}
