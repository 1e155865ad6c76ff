//! The catalog of coalition graphs realisable by subcubic graphs, and
//! classification of coalition graphs against it.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::certificate::{certificate, Certificate, MAX_CERT_ORDER};
use crate::named::named_graph;
use crate::vertex_set::VertexSet;

/// The 22 non-star coalition graphs of order at most 6, in the order they are
/// usually listed.
pub const NON_STAR_CLASSES: [&str; 22] = [
    "K_1", "Kbar_2", "Kbar_3", "Kbar_4", "C_3", "2K_2", "P_4", "C_4", "C_3+e", "K_4-e", "K_4",
    "P_2uP_3", "S_{1,2}", "P_5", "C_3+e+e", "C_3+2e", "C_4+e", "C_5", "S_{2,2}", "3K_2",
    "K_{2,3}", "K_{3,3}",
];

/// Patterns that never occur as subgraphs of a coalition graph.
pub const FORBIDDEN_PATTERNS: [&str; 3] = ["K_2uK_3", "K_2uS_4", "2C_3+e"];

const AUXILIARY: [&str; 3] = FORBIDDEN_PATTERNS;

pub const CATALOG_HEADER: &str = "# ccpart coalition-graph catalog v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    pub certificate: Certificate,
}

impl CatalogEntry {
    pub fn new(name: &str) -> Result<CatalogEntry> {
        let graph = named_graph(name)?;
        let certificate = certificate(&graph)?;
        Ok(CatalogEntry {
            name: name.to_string(),
            graph,
            certificate,
        })
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

/// Name used for the star of order `k`; the two smallest stars go by their
/// usual names.
pub fn star_name(k: usize) -> String {
    match k {
        2 => "K_2".to_string(),
        3 => "P_3".to_string(),
        k if k < 10 => format!("S_{k}"),
        k => format!("S_{{{k}}}"),
    }
}

/// If `h` is a star of order `k >= 2`, returns `k`.
pub fn star_order(h: &Graph) -> Option<usize> {
    let k = h.order();
    if k < 2 || h.edge_count() != k - 1 {
        return None;
    }
    let centres = (0..k).filter(|&v| h.degree(v) == k - 1).count();
    let leaves = (0..k).filter(|&v| h.degree(v) == 1).count();
    match k {
        2 => (leaves == 2).then_some(2),
        _ => (centres == 1 && leaves == k - 1).then_some(k),
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// The 22 non-star classes.
    pub fn theorem_classes() -> &'static Catalog {
        static CAT: OnceLock<Catalog> = OnceLock::new();
        CAT.get_or_init(|| {
            Catalog::from_names(&NON_STAR_CLASSES).expect("built-in names are valid")
        })
    }

    /// The 22 classes, the stars of order 2 to 6 and the forbidden patterns.
    pub fn extended() -> Catalog {
        let mut names: Vec<String> = NON_STAR_CLASSES.iter().map(|s| s.to_string()).collect();
        names.extend((2..=6).map(star_name));
        names.extend(AUXILIARY.iter().map(|s| s.to_string()));
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Catalog::from_names(&refs).expect("built-in names are valid")
    }

    pub fn from_names(names: &[&str]) -> Result<Catalog> {
        let entries = names
            .iter()
            .map(|n| CatalogEntry::new(n))
            .collect::<Result<Vec<_>>>()?;
        Catalog::from_entries(entries)
    }

    fn from_entries(entries: Vec<CatalogEntry>) -> Result<Catalog> {
        for (i, a) in entries.iter().enumerate() {
            for b in &entries[..i] {
                if a.name == b.name {
                    return Err(Error::MalformedInput(format!("duplicate name {}", a.name)));
                }
                if a.certificate == b.certificate {
                    return Err(Error::MalformedInput(format!(
                        "{} and {} are isomorphic",
                        a.name, b.name
                    )));
                }
            }
        }
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn lookup(&self, cert: &Certificate) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.certificate == *cert)
    }

    /// Versioned text form: `name<TAB>order<TAB>edges<TAB>certificate`.
    pub fn to_text(&self) -> String {
        let mut out = String::from(CATALOG_HEADER);
        out.push('\n');
        for e in &self.entries {
            let edges: Vec<String> = e.graph.edges().map(|(u, v)| format!("{u}-{v}")).collect();
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                e.name,
                e.order(),
                edges.join(","),
                e.certificate.to_hex()
            ));
        }
        out
    }

    /// Parses [`Catalog::to_text`] output, re-deriving and checking every certificate.
    pub fn from_text(text: &str) -> Result<Catalog> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        if lines.next().map(str::trim) != Some(CATALOG_HEADER) {
            return Err(Error::MalformedInput("missing catalog header".into()));
        }
        let mut entries = Vec::new();
        for line in lines {
            let fields: Vec<&str> = line.split('\t').collect();
            let [name, order, edges, cert] = fields[..] else {
                return Err(Error::MalformedInput(format!("bad catalog line `{line}`")));
            };
            let n: usize = order
                .parse()
                .map_err(|_| Error::MalformedInput(format!("bad order `{order}`")))?;
            let mut list = Vec::new();
            for e in edges.split(',').filter(|e| !e.is_empty()) {
                let parsed = e
                    .split_once('-')
                    .and_then(|(u, v)| Some((u.parse().ok()?, v.parse().ok()?)));
                list.push(parsed.ok_or_else(|| Error::MalformedInput(format!("bad edge `{e}`")))?);
            }
            let graph = Graph::new(n, &list)?;
            let certificate = certificate(&graph)?;
            if certificate != Certificate::from_hex(cert)? {
                return Err(Error::MalformedInput(format!("certificate mismatch for {name}")));
            }
            entries.push(CatalogEntry {
                name: name.to_string(),
                graph,
                certificate,
            });
        }
        Catalog::from_entries(entries)
    }
}

/// Classifies a coalition graph: stars first (any order), then the catalog by
/// certificate; anything else is reported as `unknown(<certificate>)`.
pub fn classify(h: &Graph) -> String {
    if let Some(k) = star_order(h) {
        return star_name(k);
    }
    if h.order() > MAX_CERT_ORDER {
        return format!("unknown(order {})", h.order());
    }
    let cert = certificate(h).expect("order checked");
    match Catalog::theorem_classes().lookup(&cert) {
        Some(e) => e.name.clone(),
        None => format!("unknown({})", cert.to_hex()),
    }
}

pub fn is_unknown(class: &str) -> bool {
    class.starts_with("unknown(")
}

/// Memoising classifier keyed by the labelled adjacency of small graphs.
#[derive(Default)]
pub struct Classifier {
    cache: HashMap<(usize, u128), String>,
    overflow: String,
}

impl Classifier {
    pub fn new() -> Classifier {
        Classifier::default()
    }

    pub fn classify(&mut self, h: &Graph) -> &str {
        let masks: Vec<u64> = h.adjacency().iter().map(|s| s.bits()).collect();
        self.classify_masks(&masks)
    }

    /// Same as [`Classifier::classify`] for a graph given by neighbourhood bit masks.
    pub fn classify_masks(&mut self, adj: &[u64]) -> &str {
        let k = adj.len();
        let build = || {
            Graph::from_adjacency_unchecked(adj.iter().map(|&m| VertexSet::from_bits(m)).collect())
        };
        if k > MAX_CERT_ORDER {
            self.overflow = classify(&build());
            return &self.overflow;
        }
        let mut code = 0u128;
        for j in 1..k {
            for i in 0..j {
                code = code << 1 | (adj[i] >> j & 1) as u128;
            }
        }
        self.cache
            .entry((k, code))
            .or_insert_with(|| classify(&build()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_consistent() {
        let cat = Catalog::theorem_classes();
        assert_eq!(cat.len(), 22);
        assert!(cat.entries().iter().all(|e| e.order() <= 6));
        // No catalog entry is a star.
        assert!(cat.entries().iter().all(|e| star_order(&e.graph).is_none()));
        assert_eq!(Catalog::extended().len(), 22 + 5 + 3);
    }

    #[test]
    fn catalog_text_round_trip() {
        let cat = Catalog::extended();
        let back = Catalog::from_text(&cat.to_text()).unwrap();
        assert_eq!(back.entries(), cat.entries());
        let tampered = cat.to_text().replace("C_4\t4\t0-1,0-3,1-2,2-3", "C_4\t4\t0-1,0-3,1-2");
        assert!(Catalog::from_text(&tampered).is_err());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&named_graph("K_{3,3}").unwrap()), "K_{3,3}");
        assert_eq!(classify(&named_graph("3K_2").unwrap()), "3K_2");
        assert_eq!(classify(&named_graph("S_8").unwrap()), "S_8");
        assert_eq!(classify(&named_graph("S_12").unwrap()), "S_{12}");
        assert_eq!(classify(&named_graph("K_2").unwrap()), "K_2");
        assert_eq!(classify(&named_graph("P_3").unwrap()), "P_3");
        assert_eq!(classify(&named_graph("K_3").unwrap()), "C_3");
        assert!(is_unknown(&classify(&named_graph("P_6").unwrap())));
        assert!(is_unknown(&classify(&named_graph("C_20").unwrap())));
    }

    #[test]
    fn memoised_classifier_agrees() {
        let mut c = Classifier::new();
        for name in ["C_4+e", "K_{2,3}", "S_5", "P_5", "C_4+e"] {
            let g = named_graph(name).unwrap();
            let masks: Vec<u64> = g.adjacency().iter().map(|s| s.bits()).collect();
            assert_eq!(c.classify(&g), classify(&g));
            assert_eq!(c.classify_masks(&masks), classify(&g));
        }
    }
}
