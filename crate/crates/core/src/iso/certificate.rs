//! Canonical certificates by individualisation and refinement.
//!
//! The ordered partition of the vertices is refined to an equitable one using
//! only cell positions and neighbour counts, so the search tree of a relabelled
//! graph is the relabelled search tree. The certificate is the minimum
//! upper-triangle adjacency string over all leaves of that tree, which makes
//! it a complete invariant.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`certificate`]; the upper triangle fits in a `u128`.
pub const MAX_CERT_ORDER: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate {
    order: u8,
    bits: u128,
}

impl Certificate {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Upper-triangle bits in graph6 column order; the first pair is the most
    /// significant bit.
    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn to_hex(&self) -> String {
        format!("{:02x}:{:x}", self.order, self.bits)
    }

    pub fn from_hex(s: &str) -> Result<Certificate> {
        let bad = || Error::MalformedInput(format!("bad certificate `{s}`"));
        let (o, b) = s.split_once(':').ok_or_else(bad)?;
        let order = u8::from_str_radix(o, 16).map_err(|_| bad())?;
        let bits = u128::from_str_radix(b, 16).map_err(|_| bad())?;
        if order == 0 || order as usize > MAX_CERT_ORDER {
            return Err(bad());
        }
        Ok(Certificate { order, bits })
    }

    /// The canonical representative, whose adjacency string is the certificate.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let pairs = n * (n - 1) / 2;
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (pairs - 1 - k) & 1 == 1 {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
                k += 1;
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate({})", self.to_hex())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub fn certificate(g: &Graph) -> Result<Certificate> {
    canonical_labeling(g).map(|(c, _)| c)
}

/// Canonical form as a graph.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    certificate(g).map(|c| c.to_graph())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return Ok(false);
    }
    Ok(certificate(a)? == certificate(b)?)
}

/// Returns the certificate and a labelling `perm` with `perm[v]` the canonical
/// position of `v`.
pub fn canonical_labeling(g: &Graph) -> Result<(Certificate, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CERT_ORDER {
        return Err(Error::TooLarge {
            n,
            limit: MAX_CERT_ORDER,
            what: "canonical certificates",
        });
    }
    let mut initial = vec![(0..n).collect::<Vec<usize>>()];
    refine(g, &mut initial);
    let mut best: Option<(u128, Vec<usize>)> = None;
    search(g, initial, &mut best);
    let (bits, perm) = best.expect("search visits at least one leaf");
    Ok((
        Certificate {
            order: n as u8,
            bits,
        },
        perm,
    ))
}

type Cells = Vec<Vec<usize>>;

fn search(g: &Graph, cells: Cells, best: &mut Option<(u128, Vec<usize>)>) {
    let target = cells.iter().position(|c| c.len() > 1);
    let Some(t) = target else {
        let mut perm = vec![0; g.order()];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let code = code_of(g, &perm);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, perm));
        }
        return;
    };
    for &v in &cells[t] {
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..t]);
        child.push(vec![v]);
        child.push(cells[t].iter().copied().filter(|&u| u != v).collect());
        child.extend_from_slice(&cells[t + 1..]);
        refine(g, &mut child);
        search(g, child, best);
    }
}

fn code_of(g: &Graph, perm: &[usize]) -> u128 {
    let n = g.order();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut code = 0u128;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | g.has_edge(inv[i], inv[j]) as u128;
        }
    }
    code
}

/// Refines `cells` to the coarsest equitable ordered partition below it.
fn refine(g: &Graph, cells: &mut Cells) {
    'outer: loop {
        for w in 0..cells.len() {
            let splitter: VertexSet = cells[w].iter().copied().collect();
            for x in 0..cells.len() {
                if cells[x].len() == 1 {
                    continue;
                }
                let count = |v: usize| (g.neighbors(v) & splitter).len();
                let first = count(cells[x][0]);
                if cells[x].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> =
                    cells[x].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut parts: Cells = Vec::new();
                let mut last = usize::MAX;
                for (k, v) in keyed {
                    if k != last {
                        parts.push(Vec::new());
                        last = k;
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(x..=x, parts);
                continue 'outer;
            }
        }
        break;
    }
}
