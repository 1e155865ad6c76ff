//! Ordinary (not necessarily induced) subgraph containment and matching number.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// True iff some injection of `pattern` into `host` maps every pattern edge
/// onto a host edge.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    if pattern.order() > host.order() || pattern.edge_count() > host.edge_count() {
        return false;
    }
    // Place high-degree pattern vertices first, each after a placed neighbour when possible.
    let mut order: Vec<usize> = Vec::with_capacity(pattern.order());
    let mut placed = VertexSet::EMPTY;
    while order.len() < pattern.order() {
        let next = (0..pattern.order())
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| ((pattern.neighbors(v) & placed).len(), pattern.degree(v), usize::MAX - v))
            .expect("unplaced vertex exists");
        order.push(next);
        placed.insert(next);
    }
    let mut image = vec![usize::MAX; pattern.order()];
    extend(host, pattern, &order, 0, VertexSet::EMPTY, &mut image)
}

fn extend(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    used: VertexSet,
    image: &mut [usize],
) -> bool {
    let Some(&p) = order.get(depth) else {
        return true;
    };
    let mut candidates = host.vertices() - used;
    for q in pattern.neighbors(p) {
        if image[q] != usize::MAX {
            candidates &= host.neighbors(image[q]);
        }
    }
    for h in candidates {
        if host.degree(h) < pattern.degree(p) {
            continue;
        }
        image[p] = h;
        if extend(host, pattern, order, depth + 1, used.with(h), image) {
            return true;
        }
    }
    image[p] = usize::MAX;
    false
}

/// Maximum number of pairwise disjoint edges.
pub fn matching_number(h: &Graph) -> usize {
    best_matching(h, h.vertices())
}

fn best_matching(h: &Graph, alive: VertexSet) -> usize {
    // Lowest live vertex that still has a live neighbour.
    let Some(v) = alive.iter().find(|&v| !(h.neighbors(v) & alive).is_empty()) else {
        return 0;
    };
    let rest = alive - VertexSet::singleton(v);
    let mut best = best_matching(h, rest);
    for u in h.neighbors(v) & rest {
        let m = 1 + best_matching(h, rest - VertexSet::singleton(u));
        best = best.max(m);
        if 2 * best >= alive.len() {
            break;
        }
    }
    best
}
