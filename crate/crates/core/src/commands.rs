//! The command-line front end, independent of argument parsing.
//!
//! Every command returns an [`Output`]: text for standard output and an exit
//! status. Status 0 means success, 1 a reproduction mismatch, a claim
//! violation or a witness that was not found, and 2 a usage or input error.

use std::fs;
use std::path::{Path, PathBuf};

use crate::coalition::{cc_number_with, classify_and_count, render_cc, EnumerationConfig};
use crate::corpus::{cubic_graphs, enumerate_connected_graphs};
use crate::error::{Error, Result};
use crate::graph::{mobius_ladder, prism, Graph};
use crate::graph6;
use crate::iso::catalog::{Catalog, NON_STAR_CLASSES};
use crate::named::named_graph;
use crate::tables::{reproduce, TableId};
use crate::verify::{
    all_passed, counterexamples_to_csv, run_suite, verdicts_to_csv, witness_search, Claim, Corpus,
    Family, SuiteOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub status: i32,
}

impl Output {
    fn ok(stdout: String) -> Output {
        Output {
            stdout,
            status: EXIT_OK,
        }
    }

    fn with_status(stdout: String, pass: bool) -> Output {
        Output {
            stdout,
            status: if pass { EXIT_OK } else { EXIT_MISMATCH },
        }
    }
}

/// Exit status for an error that aborted a command.
pub fn exit_status(err: &Error) -> i32 {
    match err {
        Error::NotFound(_) => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

/// Where input graphs come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    Graph6(String),
    /// A file of graph6 lines, or an edge list when it starts with `#` or
    /// its first line is a pair of integers.
    File(PathBuf),
    Named(String),
    Mobius(usize),
    Prism(usize),
}

impl GraphSource {
    pub fn label(&self) -> String {
        match self {
            GraphSource::Graph6(s) => format!("graph6 {s}"),
            GraphSource::File(p) => format!("file {}", p.display()),
            GraphSource::Named(n) => n.clone(),
            GraphSource::Mobius(n) => format!("M_{n}"),
            GraphSource::Prism(n) => format!("Pr_{n}"),
        }
    }

    pub fn load(&self) -> Result<Vec<Graph>> {
        match self {
            GraphSource::Graph6(s) => Ok(vec![graph6::decode(s)?]),
            GraphSource::File(p) => read_graph_file(p),
            GraphSource::Named(n) => Ok(vec![named_graph(n)?]),
            GraphSource::Mobius(n) => Ok(vec![mobius_ladder(*n)?]),
            GraphSource::Prism(n) => Ok(vec![prism(*n)?]),
        }
    }
}

pub fn read_graph_file(path: &Path) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::MalformedInput(format!("{}: {e}", path.display())))?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    let edge_list = first.starts_with('#')
        || first.split_whitespace().count() == 2
            && first.split_whitespace().all(|t| t.parse::<usize>().is_ok());
    let graphs = if edge_list {
        vec![Graph::from_edge_list(&text)?]
    } else {
        graph6::decode_lines(&text)?
    };
    if graphs.is_empty() {
        return Err(Error::MalformedInput(format!("{}: no graphs", path.display())));
    }
    Ok(graphs)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    Csv,
    Markdown,
    #[default]
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            "text" => Ok(Format::Text),
            _ => Err(Error::MalformedInput(format!("unknown format `{s}`"))),
        }
    }
}

/// What `gen` emits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenSpec {
    Mobius(usize),
    Prism(usize),
    Named(String),
    /// Connected graphs of order `n`, all with maximum degree at most
    /// `max_degree`, or only the cubic ones.
    Corpus {
        n: usize,
        max_degree: usize,
        cubic: bool,
    },
}

/// One graph6 line per graph.
pub fn cmd_gen(spec: &GenSpec) -> Result<Output> {
    let graphs = match spec {
        GenSpec::Mobius(n) => vec![mobius_ladder(*n)?],
        GenSpec::Prism(n) => vec![prism(*n)?],
        GenSpec::Named(name) => vec![named_graph(name)?],
        GenSpec::Corpus { n, cubic: true, .. } => cubic_graphs(*n)?,
        GenSpec::Corpus { n, max_degree, .. } => enumerate_connected_graphs(*n, *max_degree)?,
    };
    Ok(Output::ok(graph6_lines(&graphs)))
}

fn graph6_lines(graphs: &[Graph]) -> String {
    graphs.iter().map(|g| graph6::encode(g) + "\n").collect()
}

/// Coalition-graph histogram of each input graph.
pub fn cmd_enumerate(source: &GraphSource, cfg: &EnumerationConfig, format: Format) -> Result<Output> {
    let graphs = source.load()?;
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("graph_id,ccg_class,count\n");
    }
    for g in &graphs {
        let report = classify_and_count(g, cfg)?;
        if report.total_valid == 0 && format != Format::Csv {
            out.push_str(&format!("graph {}: no valid partitions\n", report.graph_id));
            continue;
        }
        match format {
            Format::Csv => out.push_str(&report.csv_rows()),
            Format::Markdown => {
                out.push_str(&report.to_markdown(&report.graph_id, &table_row_order()));
                out.push('\n');
            }
            Format::Text => out.push_str(&report.to_text()),
        }
    }
    Ok(Output::ok(out))
}

fn table_row_order() -> Vec<&'static str> {
    let mut rows = vec!["K_2", "P_3", "C_3", "S_4"];
    for r in NON_STAR_CLASSES {
        if !rows.contains(&r) {
            rows.push(r);
        }
    }
    rows
}

/// Recomputes a reference table up to `max_n` and diffs it.
pub fn cmd_reproduce(table: TableId, max_n: usize, cfg: &EnumerationConfig) -> Result<Output> {
    let r = reproduce(table, max_n, cfg)?;
    Ok(Output::with_status(r.to_markdown(), r.matches()))
}

/// `CC(G)` of each input graph, `undefined` when no valid partition exists.
/// A single graph prints the bare value; several print `graph6 value` lines.
pub fn cmd_ccn(source: &GraphSource, cfg: &EnumerationConfig) -> Result<Output> {
    let graphs = source.load()?;
    let mut out = String::new();
    for g in &graphs {
        let cc = render_cc(cc_number_with(g, cfg)?);
        if graphs.len() == 1 {
            out.push_str(&format!("{cc}\n"));
        } else {
            out.push_str(&format!("{} {cc}\n", graph6::encode(g)));
        }
    }
    Ok(Output::ok(out))
}

#[derive(Clone, Debug, Default)]
pub struct VerifyArgs {
    /// Claim ids or prefixes; empty means all.
    pub claims: Vec<String>,
    /// Corpus families; empty means the default corpora.
    pub families: Vec<Family>,
    /// Caps every corpus order.
    pub max_n: Option<usize>,
    /// Extra graphs to check, as an additional corpus.
    pub graphs: Option<GraphSource>,
    pub long_running: bool,
    pub format: Format,
    /// Writes the verdict CSV here.
    pub out: Option<PathBuf>,
    /// Writes counterexamples as CSV here.
    pub counterexamples: Option<PathBuf>,
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Output> {
    let mut claims = Vec::new();
    for name in &args.claims {
        claims.extend(Claim::select(name)?);
    }
    if claims.is_empty() {
        claims = Claim::ALL.to_vec();
    }
    let mut corpora = if args.families.is_empty() {
        if args.graphs.is_some() {
            Vec::new()
        } else {
            Corpus::defaults(args.max_n)?
        }
    } else {
        args.families
            .iter()
            .map(|&f| {
                let (lo, hi) = f.default_range();
                Corpus::family(f, lo, args.max_n.unwrap_or(hi))
            })
            .collect::<Result<_>>()?
    };
    if let Some(src) = &args.graphs {
        corpora.push(Corpus::from_graphs(src.label(), src.load()?));
    }
    let opts = SuiteOptions {
        corpora,
        long_running: args.long_running,
    };
    let records = run_suite(&claims, &opts)?;
    let csv = verdicts_to_csv(&records);
    if let Some(path) = &args.out {
        write_file(path, &csv)?;
    }
    if let Some(path) = &args.counterexamples {
        write_file(path, &counterexamples_to_csv(&records))?;
    }
    let stdout = match args.format {
        Format::Csv => csv,
        _ => {
            let mut s: String = records.iter().map(|r| r.to_text()).collect();
            let failed = records.iter().filter(|r| !r.passed()).count();
            s.push_str(&format!(
                "{} claims, {} failed\n",
                records.len(),
                failed
            ));
            s
        }
    };
    Ok(Output::with_status(stdout, all_passed(&records)))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::MalformedInput(format!("{}: {e}", path.display())))
}

/// The first graph of the family with a partition realising `target`.
pub fn cmd_witness(target: &str, family: Family, min_n: usize, max_n: usize) -> Result<Output> {
    match witness_search(target, family, min_n, max_n) {
        Ok(w) => Ok(Output::ok(format!(
            "found {}\ngraph6 {}\npartition {}\n",
            w.class,
            graph6::encode(&w.graph),
            w.partition
        ))),
        Err(Error::NotFound(msg)) => Ok(Output {
            stdout: format!("not found: {msg}\n"),
            status: EXIT_MISMATCH,
        }),
        Err(e) => Err(e),
    }
}

/// The 22 non-star classes in the versioned catalog text format.
pub fn cmd_catalog() -> Result<Output> {
    Ok(Output::ok(Catalog::theorem_classes().to_text()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_outputs() {
        let out = cmd_gen(&GenSpec::Mobius(6)).unwrap();
        assert_eq!(out.stdout.lines().count(), 1);
        let cubic4 = cmd_gen(&GenSpec::Corpus { n: 4, max_degree: 3, cubic: true }).unwrap();
        assert_eq!(cubic4.stdout, "C~\n");
        let k4e = graph6::decode(cmd_gen(&GenSpec::Named("K4-e".into())).unwrap().stdout.trim()).unwrap();
        assert_eq!((k4e.order(), k4e.edge_count()), (4, 5));
    }

    #[test]
    fn enumerate_formats() {
        let cfg = EnumerationConfig::exact();
        let src = GraphSource::Mobius(6);
        let md = cmd_enumerate(&src, &cfg, Format::Markdown).unwrap().stdout;
        assert_eq!(md.lines().filter(|l| l.starts_with("| ") && !l.starts_with("| CCG") && !l.starts_with("| total")).count(), 6);
        assert!(md.contains("| total | 25 |"));
        let p3 = cmd_enumerate(&GraphSource::Named("P3".into()), &cfg, Format::Text).unwrap();
        assert!(p3.stdout.contains("no valid partitions") && p3.status == 0);
        let csv = cmd_enumerate(&src, &cfg, Format::Csv).unwrap().stdout;
        assert!(csv.starts_with("graph_id,ccg_class,count\n"));
    }

    #[test]
    fn ccn_values() {
        let cfg = EnumerationConfig::exact();
        let cc = |n: &str| cmd_ccn(&GraphSource::Named(n.into()), &cfg).unwrap().stdout;
        assert_eq!(cc("C4"), "4\n");
        assert_eq!(cc("C7"), "3\n");
        assert_eq!(cc("P3"), "undefined\n");
    }

    #[test]
    fn witness_status() {
        assert_eq!(cmd_witness("C3", Family::Ladders, 8, 8).unwrap().status, 0);
        assert_eq!(cmd_witness("K4", Family::Ladders, 10, 12).unwrap().status, 1);
        assert_eq!(exit_status(&cmd_witness("nope", Family::Ladders, 6, 8).unwrap_err()), 2);
    }

    #[test]
    fn verify_selection() {
        let out = cmd_verify(&VerifyArgs {
            claims: vec!["lemma7".into()],
            families: vec![Family::Ladders],
            max_n: Some(10),
            ..Default::default()
        })
        .unwrap();
        assert_eq!(out.status, 0, "{}", out.stdout);
        assert!(out.stdout.starts_with("PASS lemma7"));
        assert!(cmd_verify(&VerifyArgs { claims: vec!["lemma99".into()], ..Default::default() }).is_err());
    }

    #[test]
    fn reproduce_small() {
        let out = cmd_reproduce(TableId::Prisms, 8, &EnumerationConfig::exact()).unwrap();
        assert_eq!(out.status, 0, "{}", out.stdout);
        assert!(out.stdout.contains("all 28 cells match"));
    }

    #[test]
    fn catalog_text() {
        let out = cmd_catalog().unwrap().stdout;
        assert_eq!(out.lines().count(), 23);
    }
}
