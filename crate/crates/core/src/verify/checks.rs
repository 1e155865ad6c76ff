//! Single-instance checks. Each returns `None` when the claim's hypothesis
//! does not apply, `Some(Ok(()))` when it holds and `Some(Err(detail))` on a
//! violation.

use std::collections::HashMap;

use super::Claim;
use crate::coalition::part_count_bound;
use crate::domination::{complement_max_degree, is_dominating, lemma1_equality_holds};
use crate::graph::Graph;
use crate::iso::catalog::{classify, is_unknown, star_order, FORBIDDEN_PATTERNS, NON_STAR_CLASSES};
use crate::iso::certificate::{is_isomorphic, MAX_CERT_ORDER};
use crate::iso::subgraph::{contains_subgraph, matching_number};
use crate::named::named_graph;
use crate::vertex_set::VertexSet;

pub(crate) type Outcome = Option<Result<(), String>>;

const UP_TO_FOUR: [&str; 14] = [
    "K_1", "K_2", "Kbar_2", "P_3", "C_3", "Kbar_3", "2K_2", "S_4", "P_4", "C_4", "C_3+e",
    "K_4-e", "K_4", "Kbar_4",
];

const FIVE: [&str; 9] = [
    "P_2uP_3", "S_{1,2}", "S_5", "P_5", "C_3+e+e", "C_3+2e", "C_4+e", "C_5", "K_{2,3}",
];

const SIX_OR_MORE: [&str; 3] = ["K_{3,3}", "3K_2", "S_{2,2}"];

/// Classes realised by only finitely many subcubic graphs, all of order at most 10.
pub const FINITE_CLASSES: [&str; 9] = [
    "K_1", "Kbar_2", "Kbar_3", "K_4", "Kbar_4", "C_5", "3K_2", "K_{2,3}", "K_{3,3}",
];

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    Some(if ok { Ok(()) } else { Err(detail()) })
}

/// Facts about the host graph used by several partition checks.
pub(crate) struct HostFacts<'g> {
    pub g: &'g Graph,
    pub n: usize,
    pub complete: bool,
    pub is_k33: bool,
    pub is_pr6: bool,
}

impl<'g> HostFacts<'g> {
    pub fn new(g: &'g Graph) -> HostFacts<'g> {
        let iso = |name: &str| {
            g.order() == 6 && is_isomorphic(g, &named_graph(name).expect("fixed name")).unwrap_or(false)
        };
        HostFacts {
            g,
            n: g.order(),
            complete: g.is_complete(),
            is_k33: iso("K_{3,3}"),
            is_pr6: iso("Pr_6"),
        }
    }
}

/// Isomorphism-invariant data of one coalition graph.
pub(crate) struct ClassInfo {
    pub name: String,
    pub order: usize,
    pub alpha: usize,
    pub star: Option<usize>,
    pub edgeless: bool,
    pub has_isolated: bool,
    /// Forbidden patterns found as subgraphs.
    pub forbidden: Vec<&'static str>,
}

impl ClassInfo {
    pub fn new(h: &Graph) -> ClassInfo {
        let patterns = forbidden_patterns();
        ClassInfo {
            name: classify(h),
            order: h.order(),
            alpha: matching_number(h),
            star: star_order(h),
            edgeless: h.edge_count() == 0,
            has_isolated: (0..h.order()).any(|v| h.degree(v) == 0),
            forbidden: FORBIDDEN_PATTERNS
                .iter()
                .zip(patterns)
                .filter(|(_, p)| contains_subgraph(h, p))
                .map(|(&name, _)| name)
                .collect(),
        }
    }
}

fn forbidden_patterns() -> &'static [Graph] {
    static PATTERNS: std::sync::OnceLock<Vec<Graph>> = std::sync::OnceLock::new();
    PATTERNS.get_or_init(|| {
        FORBIDDEN_PATTERNS
            .iter()
            .map(|p| named_graph(p).expect("fixed name"))
            .collect()
    })
}

/// [`ClassInfo`] memoised by labelled adjacency, for coalition graphs given as masks.
#[derive(Default)]
pub(crate) struct ClassCache {
    cache: HashMap<(usize, u128), std::rc::Rc<ClassInfo>>,
}

impl ClassCache {
    pub fn get(&mut self, adj: &[u64]) -> std::rc::Rc<ClassInfo> {
        let k = adj.len();
        let build = || {
            let h = Graph::from_adjacency_unchecked(adj.iter().map(|&m| VertexSet::from_bits(m)).collect());
            std::rc::Rc::new(ClassInfo::new(&h))
        };
        if k > MAX_CERT_ORDER {
            return build();
        }
        let mut code = 0u128;
        for j in 1..k {
            for i in 0..j {
                code = code << 1 | (adj[i] >> j & 1) as u128;
            }
        }
        self.cache.entry((k, code)).or_insert_with(build).clone()
    }
}

/// Checks one claim on one valid partition with coalition graph `adj`.
pub(crate) fn check_partition(
    claim: Claim,
    host: &HostFacts,
    parts: &[VertexSet],
    adj: &[u64],
    h: &ClassInfo,
) -> Outcome {
    let n = host.n;
    let k = h.order;
    let name = h.name.as_str();
    match claim {
        Claim::Lemma2 => {
            if h.alpha > 3 {
                return Some(Err(format!("matching number {} > 3", h.alpha)));
            }
            if h.alpha < 3 {
                return Some(Ok(()));
            }
            verdict(
                (host.is_k33 && name == "K_{3,3}") || (host.is_pr6 && name == "3K_2"),
                || format!("matching number 3 with coalition graph {name} on a graph of order {n}"),
            )
        }
        Claim::Lemma3 => {
            if !h.has_isolated {
                return None;
            }
            verdict(n == k && k <= 4 && host.complete && h.edgeless, || {
                format!(
                    "isolated vertex but n={n}, k={k}, complete={}, {name}",
                    host.complete
                )
            })
        }
        Claim::Lemma4 => {
            let big: Vec<usize> = (0..k).filter(|&i| adj[i].count_ones() >= 4).collect();
            if big.is_empty() {
                return None;
            }
            for i in big {
                let p = parts[i];
                let connected = host.g.component_of(p.min().expect("parts are nonempty"), p) == p;
                if !is_dominating(host.g, p) || connected {
                    return Some(Err(format!(
                        "part {{{p}}} has degree {} but dominating={}, connected={connected}",
                        adj[i].count_ones(),
                        is_dominating(host.g, p)
                    )));
                }
            }
            Some(Ok(()))
        }
        Claim::Lemma5 => {
            if h.alpha != 1 {
                return None;
            }
            let star_ok = h.star.is_some_and(|s| s <= (n + 7) / 3);
            verdict(name == "C_3" || star_ok, || {
                format!("matching number 1 but coalition graph is {name} at n={n}")
            })
        }
        Claim::Lemma6 => {
            if k > 4 {
                return None;
            }
            verdict(UP_TO_FOUR.contains(&name), || format!("{k} parts give {name}"))
        }
        Claim::Lemma7 => verdict(h.forbidden.is_empty(), || {
            format!("{name} contains {}", h.forbidden.join(", "))
        }),
        Claim::Lemma8 => {
            if k != 5 {
                return None;
            }
            verdict(FIVE.contains(&name), || format!("5 parts give {name}"))
        }
        Claim::Lemma9 => {
            if k < 6 {
                return None;
            }
            verdict(SIX_OR_MORE.contains(&name) || h.star == Some(k), || {
                format!("{k} parts give {name}")
            })
        }
        Claim::Thm1 => verdict(
            !is_unknown(name) && (h.star.is_some() || NON_STAR_CLASSES.contains(&name)),
            || format!("coalition graph {name} is outside the catalog"),
        ),
        Claim::Thm3Bound => {
            let bound = part_count_bound(n);
            if k > bound {
                return Some(Err(format!("{k} parts exceed the bound {bound} at n={n}")));
            }
            verdict(k <= 6 || h.star == Some(k), || {
                format!("{k} > 6 parts with coalition graph {name}")
            })
        }
        Claim::Prop1Bound => {
            if !FINITE_CLASSES.contains(&name) {
                return None;
            }
            verdict(n <= 10, || format!("{name} realised at order {n} > 10"))
        }
        _ => None,
    }
}

/// Size bound and equality structure for one connected dominating set `d`.
pub(crate) fn check_lemma1(g: &Graph, d: VertexSet) -> Outcome {
    let n = g.order();
    if 2 * d.len() + 2 < n {
        return Some(Err(format!("|D| = {} < n/2 - 1", d.len())));
    }
    let rest_degree = complement_max_degree(g, d);
    if rest_degree > 2 {
        return Some(Err(format!("G - D has maximum degree {rest_degree}")));
    }
    let tight = 2 * d.len() + 2 == n;
    let structure = lemma1_equality_holds(g, d).expect("d is a CDS");
    verdict(tight == structure, || {
        format!("|D| = n/2 - 1 is {tight} but the equality structure is {structure}")
    })
}

fn is_path_or_cycle(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| (g.neighbors(v) & s).len() <= 2)
        && g.component_of(s.min().expect("nonempty"), s) == s
}

fn is_path(g: &Graph, s: VertexSet) -> bool {
    let edges: usize = s.iter().map(|v| (g.neighbors(v) & s).len()).sum::<usize>() / 2;
    is_path_or_cycle(g, s) && edges + 1 == s.len()
}

/// Size sum and shape of two disjoint connected dominating sets.
pub(crate) fn check_cor1(g: &Graph, d1: VertexSet, d2: VertexSet) -> Outcome {
    let n = g.order();
    let total = d1.len() + d2.len();
    if total + 2 < n {
        return Some(Err(format!("|D1| + |D2| = {total} < n - 2")));
    }
    if !is_path_or_cycle(g, d1) || !is_path_or_cycle(g, d2) {
        return Some(Err("an induced subgraph is neither a path nor a cycle".into()));
    }
    if total + 2 > n {
        return Some(Ok(()));
    }
    let half = n / 2 - 1;
    let matched = |a: VertexSet, b: VertexSet| a.iter().all(|v| (g.neighbors(v) & b).len() == 1);
    verdict(
        n % 2 == 0
            && d1.len() == half
            && d2.len() == half
            && is_path(g, d1)
            && is_path(g, d2)
            && matched(d1, d2)
            && matched(d2, d1),
        || "equality without two paths joined by a perfect matching".into(),
    )
}

/// Three pairwise disjoint connected dominating sets force `Pr_6` or `K_{3,3}`.
pub(crate) fn check_cor2(host: &HostFacts, sets: [VertexSet; 3]) -> Outcome {
    if host.n < 5 {
        return None;
    }
    verdict(
        sets.iter().all(|s| s.len() == 2) && (host.is_pr6 || host.is_k33),
        || {
            format!(
                "three disjoint CDS of sizes {:?} in a graph of order {}",
                sets.map(|s| s.len()),
                host.n
            )
        },
    )
}
