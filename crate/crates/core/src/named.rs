//! Named small graphs with fixed labelled representatives.
//!
//! Names are matched after normalisation, so `K_{3,3}`, `K33` and `K3,3` all
//! resolve to the same graph; `Kbar_k` (also `coK_k` or `K̄_k`) is the
//! edgeless graph and `A u B` (also `A ∪ B`) a disjoint union. A leading
//! multiplier such as `3K_2` repeats the graph.

use crate::error::{Error, Result};
use crate::graph::{mobius_ladder, prism, Graph};

/// Families and fixed names accepted by [`named_graph`], for help texts.
pub const NAME_FORMS: &[&str] = &[
    "K_k", "Kbar_k", "P_k", "C_k", "S_k", "K_{p,q}", "S_{a,b}", "M_n", "Pr_n", "mX", "X u Y",
    "C_3+e", "C_3+2e", "C_3+e+e", "C_4+e", "K_4-e", "2C_3+e",
];

pub fn normalize(name: &str) -> String {
    let mut out = String::with_capacity(name.len());
    let mut chars = name.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '_' | '{' | '}' | '$' | '\\' => {}
            c if c.is_whitespace() => {}
            '∪' | 'U' => out.push('u'),
            '−' | '–' => out.push('-'),
            'K' if chars.peek() == Some(&'\u{0304}') => {
                chars.next();
                out.push_str("Kbar");
            }
            c => out.push(c),
        }
    }
    if let Some(rest) = out.strip_prefix("co-").or_else(|| out.strip_prefix("co")) {
        if rest.starts_with('K') {
            return format!("Kbar{}", &rest[1..]);
        }
    }
    out.replace("overlineK", "Kbar")
}

/// Looks up a concrete labelled representative for a catalog or family name.
pub fn named_graph(name: &str) -> Result<Graph> {
    let key = normalize(name);
    parse(&key).ok_or_else(|| Error::UnknownName(name.to_string()))?
}

fn parse(key: &str) -> Option<Result<Graph>> {
    if let Some(g) = fixed(key) {
        return Some(g);
    }
    if key.contains('u') {
        let mut acc: Option<Graph> = None;
        for piece in key.split('u') {
            let g = match parse(piece)? {
                Ok(g) => g,
                Err(e) => return Some(Err(e)),
            };
            acc = Some(match acc {
                None => g,
                Some(a) => match a.disjoint_union(&g) {
                    Ok(u) => u,
                    Err(e) => return Some(Err(e)),
                },
            });
        }
        return acc.map(Ok);
    }
    let digits = key.bytes().take_while(u8::is_ascii_digit).count();
    if digits > 0 {
        let m: usize = key[..digits].parse().ok()?;
        let base = match parse(&key[digits..])? {
            Ok(g) => g,
            Err(e) => return Some(Err(e)),
        };
        if m == 0 {
            return None;
        }
        let mut acc = base.clone();
        for _ in 1..m {
            acc = match acc.disjoint_union(&base) {
                Ok(u) => u,
                Err(e) => return Some(Err(e)),
            };
        }
        return Some(Ok(acc));
    }
    family(key)
}

fn fixed(key: &str) -> Option<Result<Graph>> {
    let (n, edges): (usize, &[(usize, usize)]) = match key {
        "C3+e" => (4, &[(0, 1), (0, 2), (1, 2), (0, 3)]),
        "C3+2e" => (5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]),
        "C3+e+e" => (5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]),
        "C4+e" => (5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
        "K4-e" => (4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        // K4-e with its degree-3 vertex 0 identified with an end of K2.
        "2C3+e" => (5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)]),
        _ => return None,
    };
    Some(Graph::new(n, edges))
}

fn number(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn pair(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once(',')?;
    Some((number(a)?, number(b)?))
}

fn family(key: &str) -> Option<Result<Graph>> {
    if let Some(rest) = key.strip_prefix("Kbar") {
        let k = number(rest)?;
        return Some(Graph::empty(k));
    }
    if let Some(rest) = key.strip_prefix("Pr") {
        return Some(prism(number(rest)?));
    }
    let (head, rest) = key.split_at(key.chars().next()?.len_utf8());
    match head {
        "K" => {
            if let Some((p, q)) = pair(rest) {
                return Some(complete_bipartite(p, q));
            }
            let k = number(rest)?;
            let edges: Vec<_> = (0..k)
                .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
                .collect();
            Some(Graph::new(k, &edges))
        }
        "P" => {
            let k = number(rest)?;
            let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
            Some(Graph::new(k, &edges))
        }
        "C" => {
            let k = number(rest)?;
            if k < 3 {
                return Some(Err(Error::OutOfRange(format!("cycle of order {k}"))));
            }
            let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            Some(Graph::new(k, &edges))
        }
        "S" => {
            if let Some((a, b)) = pair(rest) {
                return Some(double_star(a, b));
            }
            let k = number(rest)?;
            let edges: Vec<_> = (1..k).map(|i| (0, i)).collect();
            Some(Graph::new(k, &edges))
        }
        "M" => Some(mobius_ladder(number(rest)?)),
        _ => None,
    }
}

fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..p)
        .flat_map(|u| (p..p + q).map(move |v| (u, v)))
        .collect();
    Graph::new(p + q, &edges)
}

/// Two adjacent centres `0` and `1` carrying `a` and `b` leaves respectively.
fn double_star(a: usize, b: usize) -> Result<Graph> {
    let mut edges = vec![(0, 1)];
    edges.extend((0..a).map(|i| (0, 2 + i)));
    edges.extend((0..b).map(|i| (1, 2 + a + i)));
    Graph::new(2 + a + b, &edges)
}
