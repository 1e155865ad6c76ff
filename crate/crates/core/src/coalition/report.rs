use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use super::enumerate::{run_sharded, EnumerationConfig};
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6;
use crate::iso::catalog::Classifier;

/// Coalition-graph histogram of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    /// graph6 of the input graph.
    pub graph_id: String,
    pub total_valid: u64,
    /// Class name (or `unknown(<certificate>)`) to number of partitions.
    pub histogram: BTreeMap<String, u64>,
    /// Largest part count seen; 0 when there is no valid partition.
    pub cc_number: usize,
}

impl EnumerationReport {
    pub fn count(&self, class: &str) -> u64 {
        self.histogram.get(class).copied().unwrap_or(0)
    }

    /// Rows `graph_id,ccg_class,count`, classes in name order, with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("graph_id,ccg_class,count\n");
        out.push_str(&self.csv_rows());
        out
    }

    pub fn csv_rows(&self) -> String {
        let mut out = String::new();
        for (class, count) in &self.histogram {
            out.push_str(&format!("{},{},{}\n", csv_field(&self.graph_id), csv_field(class), count));
        }
        out
    }

    /// Two-column markdown table, rows ordered like `row_order` (unlisted classes last).
    pub fn to_markdown(&self, title: &str, row_order: &[&str]) -> String {
        let mut out = format!("| CCG | {title} |\n|---|---:|\n");
        let mut rows: Vec<(&str, u64)> = row_order
            .iter()
            .filter_map(|&r| self.histogram.get(r).map(|&c| (r, c)))
            .collect();
        rows.extend(
            self.histogram
                .iter()
                .filter(|(k, _)| !row_order.contains(&k.as_str()))
                .map(|(k, &c)| (k.as_str(), c)),
        );
        for (class, count) in rows {
            out.push_str(&format!("| {class} | {count} |\n"));
        }
        out.push_str(&format!("| total | {} |\n", self.total_valid));
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "graph {}: {} valid partitions, CC = {}\n",
            self.graph_id,
            self.total_valid,
            render_cc(self.cc_number)
        );
        for (class, count) in &self.histogram {
            out.push_str(&format!("  {class:<10} {count}\n"));
        }
        out
    }
}

/// `CC(G)` as printed: `undefined` when there is no valid partition.
pub fn render_cc(cc: usize) -> String {
    if cc == 0 {
        "undefined".to_string()
    } else {
        cc.to_string()
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Enumerates every valid partition and counts coalition graphs by class.
pub fn classify_and_count(g: &Graph, cfg: &EnumerationConfig) -> Result<EnumerationReport> {
    let shards = run_sharded(
        g,
        cfg,
        None,
        Classifier::new,
        || (BTreeMap::<String, u64>::new(), 0u64, 0usize),
        |classifier, (hist, total, cc), vp| {
            let class = classifier.classify_masks(vp.ccg);
            match hist.get_mut(class) {
                Some(c) => *c += 1,
                None => {
                    hist.insert(class.to_string(), 1);
                }
            }
            *total += 1;
            *cc = (*cc).max(vp.len());
        },
    )?;
    let mut histogram = BTreeMap::new();
    let mut total_valid = 0;
    let mut cc_number = 0;
    for (hist, total, cc) in shards {
        for (k, c) in hist {
            *histogram.entry(k).or_insert(0) += c;
        }
        total_valid += total;
        cc_number = cc_number.max(cc);
    }
    Ok(EnumerationReport {
        graph_id: graph6::encode(g),
        total_valid,
        histogram,
        cc_number,
    })
}

/// `CC(G)`: the largest part count of a valid partition, 0 if none exists.
pub fn cc_number(g: &Graph) -> Result<usize> {
    cc_number_with(g, &EnumerationConfig::exact())
}

/// [`cc_number`] with explicit configuration. Branches that cannot beat the
/// best part count found so far are skipped.
pub fn cc_number_with(g: &Graph, cfg: &EnumerationConfig) -> Result<usize> {
    let best = AtomicUsize::new(0);
    run_sharded(
        g,
        cfg,
        Some(&best),
        || (),
        || (),
        |_, _, vp| {
            best.fetch_max(vp.len() + 1, Ordering::Relaxed);
        },
    )?;
    // `best` holds the floor for pruning, one above the best count.
    Ok(best.load(Ordering::Relaxed).saturating_sub(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::named_graph;

    fn g(name: &str) -> Graph {
        named_graph(name).unwrap()
    }

    #[test]
    fn pr6_histogram() {
        let r = classify_and_count(&g("Pr_6"), &EnumerationConfig::exact()).unwrap();
        let expected: BTreeMap<String, u64> = [
            ("K_2", 3),
            ("P_3", 18),
            ("C_3", 8),
            ("S_4", 6),
            ("2K_2", 3),
            ("P_4", 18),
            ("C_4", 3),
            ("K_4-e", 6),
            ("P_2uP_3", 6),
            ("S_{1,2}", 6),
            ("3K_2", 1),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
        assert_eq!(r.histogram, expected);
        assert_eq!(r.total_valid, expected.values().sum::<u64>());
        assert_eq!(r.cc_number, 6);
    }

    #[test]
    fn cc_examples() {
        assert_eq!(cc_number(&g("K_4")).unwrap(), 4);
        assert_eq!(cc_number(&g("Pr_6")).unwrap(), 6);
        assert_eq!(cc_number(&g("M_6")).unwrap(), 6);
        assert_eq!(cc_number(&g("C_5")).unwrap(), 3);
        assert_eq!(cc_number(&g("C_4")).unwrap(), 4);
        assert_eq!(cc_number(&g("P_3")).unwrap(), 0);
    }

    #[test]
    fn cc_matches_histogram_maximum() {
        for name in ["M_8", "Pr_8", "C_7", "K_{3,3}", "S_{2,2}"] {
            let graph = g(name);
            let r = classify_and_count(&graph, &EnumerationConfig::exact()).unwrap();
            assert_eq!(cc_number(&graph).unwrap(), r.cc_number, "{name}");
        }
    }

    #[test]
    fn renderings() {
        let r = classify_and_count(&g("M_6"), &EnumerationConfig::exact()).unwrap();
        let csv = r.to_csv();
        assert!(csv.starts_with(&format!("graph_id,ccg_class,count\n{},", r.graph_id)));
        assert!(csv.contains("\"K_{2,3}\",6"));
        let md = r.to_markdown("M_6", &["K_2", "P_3"]);
        assert!(md.contains("| K_2 | 1 |") && md.contains("| total | 25 |"));
        assert_eq!(render_cc(0), "undefined");
    }
}
