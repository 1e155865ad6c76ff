//! Brute-force reference implementations used by the integration tests.
//!
//! Nothing here touches the crate's bitsets, tables or search code: graphs are
//! read through their edge list into boolean matrices and everything else is
//! done by plain loops.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use ccpart::{Graph, Partition};

pub type Parts = Vec<Vec<usize>>;

pub struct Oracle {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Oracle {
        let n = g.order();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Oracle { n, adj }
    }

    pub fn dominating(&self, s: &[usize]) -> bool {
        (0..self.n).all(|v| s.contains(&v) || s.iter().any(|&u| self.adj[u][v]))
    }

    pub fn connected(&self, s: &[usize]) -> bool {
        let Some(&start) = s.first() else {
            return false;
        };
        let mut seen = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in s {
                if self.adj[u][w] && !seen.contains(&w) {
                    seen.push(w);
                    queue.push_back(w);
                }
            }
        }
        seen.len() == s.len()
    }

    pub fn cds(&self, s: &[usize]) -> bool {
        !s.is_empty() && self.dominating(s) && self.connected(s)
    }

    pub fn coalition(&self, a: &[usize], b: &[usize]) -> bool {
        let union: Vec<usize> = a.iter().chain(b).copied().collect();
        !self.cds(a) && !self.cds(b) && self.cds(&union)
    }

    pub fn valid(&self, parts: &Parts) -> bool {
        parts.iter().enumerate().all(|(i, p)| {
            (p.len() == 1 && self.cds(p))
                || parts
                    .iter()
                    .enumerate()
                    .any(|(j, q)| i != j && self.coalition(p, q))
        })
    }

    /// Every set partition of the vertices, found by running through all
    /// `n^n` labelings.
    pub fn all_partitions(&self) -> BTreeSet<Parts> {
        let n = self.n;
        let mut out = BTreeSet::new();
        let mut labels = vec![0usize; n];
        loop {
            let mut parts: Parts = vec![Vec::new(); n];
            for (v, &l) in labels.iter().enumerate() {
                parts[l].push(v);
            }
            out.insert(normalise(parts));
            let mut i = 0;
            while i < n && labels[i] == n - 1 {
                labels[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            labels[i] += 1;
        }
        out
    }

    pub fn valid_partitions(&self) -> BTreeSet<Parts> {
        self.all_partitions().into_iter().filter(|p| self.valid(p)).collect()
    }

    pub fn cc(&self) -> Option<usize> {
        self.valid_partitions().iter().map(Vec::len).max()
    }

    /// Edges of the coalition graph of `parts`, as index pairs.
    pub fn coalition_edges(&self, parts: &Parts) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if self.coalition(&parts[i], &parts[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn all_subsets(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (1u32..1 << self.n).map(move |m| (0..self.n).filter(|&v| m >> v & 1 == 1).collect())
    }

    pub fn min_cds(&self) -> Option<usize> {
        self.all_subsets().filter(|s| self.cds(s)).map(|s| s.len()).min()
    }
}

pub fn normalise(parts: Parts) -> Parts {
    let mut parts: Parts = parts.into_iter().filter(|p| !p.is_empty()).collect();
    for p in &mut parts {
        p.sort_unstable();
    }
    parts.sort();
    parts
}

pub fn parts_of(p: &Partition) -> Parts {
    normalise(p.parts().iter().map(|s| s.iter().collect()).collect())
}

/// Brute-force isomorphism test over all vertex permutations.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.order();
    let (oa, ob) = (Oracle::new(a), Oracle::new(b));
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        (0..n).all(|u| (0..n).all(|v| oa.adj[u][v] == ob.adj[p[u]][p[v]]))
    })
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == p.len() {
        return f(p);
    }
    for i in k..p.len() {
        p.swap(k, i);
        if permutations(p, k + 1, f) {
            p.swap(k, i);
            return true;
        }
        p.swap(k, i);
    }
    false
}
