//! Reference count tables and their reproduction.
//!
//! Table 1 counts coalition graphs over all valid partitions of the Möbius
//! ladders `M_n`, Table 2 the same for prisms `Pr_n`, and Table 3 the number
//! of connected cubic graphs of order `n` with `CC(G) = k`. Reference values
//! ship as CSV files under `data/`, with absent entries stored as 0.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::coalition::{cc_number_with, classify_and_count, EnumerationConfig};
use crate::corpus::cubic_graphs;
use crate::error::{Error, Result};
use crate::graph::{mobius_ladder, prism};

const TABLE1: &str = include_str!("../data/table1.csv");
const TABLE2: &str = include_str!("../data/table2.csv");
const TABLE3: &str = include_str!("../data/table3.csv");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableId {
    /// Coalition-graph counts for Möbius ladders.
    Mobius,
    /// Coalition-graph counts for prisms.
    Prisms,
    /// Cubic graphs by connected coalition number.
    CubicCc,
}

impl TableId {
    pub const ALL: [TableId; 3] = [TableId::Mobius, TableId::Prisms, TableId::CubicCc];

    pub fn number(self) -> u8 {
        match self {
            TableId::Mobius => 1,
            TableId::Prisms => 2,
            TableId::CubicCc => 3,
        }
    }

    fn source(self) -> &'static str {
        match self {
            TableId::Mobius => TABLE1,
            TableId::Prisms => TABLE2,
            TableId::CubicCc => TABLE3,
        }
    }

    fn column_label(self, n: usize) -> String {
        match self {
            TableId::Mobius => format!("M_{n}"),
            TableId::Prisms => format!("Pr_{n}"),
            TableId::CubicCc => format!("n={n}"),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<TableId> {
        match s.trim() {
            "1" => Ok(TableId::Mobius),
            "2" => Ok(TableId::Prisms),
            "3" => Ok(TableId::CubicCc),
            _ => Err(Error::MalformedInput(format!("table must be 1, 2 or 3, not `{s}`"))),
        }
    }
}

/// Integer counts indexed by row label and column order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub id: TableId,
    /// Header of the row-label column: `class` or `k`.
    pub row_header: String,
    pub rows: Vec<String>,
    pub columns: Vec<usize>,
    /// `cells[r][c]` for `rows[r]` and `columns[c]`.
    pub cells: Vec<Vec<u64>>,
}

impl CountTable {
    pub fn get(&self, row: &str, n: usize) -> Option<u64> {
        let r = self.rows.iter().position(|x| x == row)?;
        let c = self.columns.iter().position(|&x| x == n)?;
        Some(self.cells[r][c])
    }

    /// The column for order `n` as `(row, count)` pairs.
    pub fn column(&self, n: usize) -> Option<Vec<(&str, u64)>> {
        let c = self.columns.iter().position(|&x| x == n)?;
        Some(
            self.rows
                .iter()
                .zip(&self.cells)
                .map(|(r, cells)| (r.as_str(), cells[c]))
                .collect(),
        )
    }

    /// Only the listed columns, in the given order.
    pub fn restrict(&self, columns: &[usize]) -> Result<CountTable> {
        let idx: Vec<usize> = columns
            .iter()
            .map(|&n| {
                self.columns.iter().position(|&x| x == n).ok_or_else(|| {
                    Error::OutOfRange(format!("table {} has no column for n={n}", self.id))
                })
            })
            .collect::<Result<_>>()?;
        Ok(CountTable {
            id: self.id,
            row_header: self.row_header.clone(),
            rows: self.rows.clone(),
            columns: columns.to_vec(),
            cells: self
                .cells
                .iter()
                .map(|row| idx.iter().map(|&i| row[i]).collect())
                .collect(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.row_header.clone();
        for n in &self.columns {
            out.push_str(&format!(",{n}"));
        }
        out.push('\n');
        for (r, row) in self.rows.iter().zip(&self.cells) {
            out.push_str(&csv_field(r));
            for c in row {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        out
    }

    fn parse(id: TableId, text: &str) -> Result<(CountTable, Vec<usize>)> {
        let mut default_columns = Vec::new();
        let mut lines = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(rest) = comment.trim().strip_prefix("default:") {
                    let list = rest.split(';').next().unwrap_or("");
                    default_columns = parse_numbers(list)?;
                }
            } else {
                lines.push(line);
            }
        }
        let (header, body) = lines
            .split_first()
            .ok_or_else(|| Error::MalformedInput("empty table".into()))?;
        let mut head = split_csv(header).into_iter();
        let row_header = head.next().unwrap_or_default();
        let columns = head
            .map(|c| c.parse().map_err(|_| Error::MalformedInput(format!("bad column `{c}`"))))
            .collect::<Result<Vec<usize>>>()?;
        let mut rows = Vec::new();
        let mut cells = Vec::new();
        for line in body {
            let mut fields = split_csv(line).into_iter();
            rows.push(fields.next().unwrap_or_default());
            let row: Vec<u64> = fields
                .map(|c| c.parse().map_err(|_| Error::MalformedInput(format!("bad count `{c}`"))))
                .collect::<Result<_>>()?;
            if row.len() != columns.len() {
                return Err(Error::MalformedInput(format!("row `{line}` has {} cells", row.len())));
            }
            cells.push(row);
        }
        Ok((
            CountTable {
                id,
                row_header,
                rows,
                columns,
                cells,
            },
            default_columns,
        ))
    }
}

fn parse_numbers(list: &str) -> Result<Vec<usize>> {
    list.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse()
                .map_err(|_| Error::MalformedInput(format!("bad column number `{t}`")))
        })
        .collect()
}

/// Splits one CSV line, honouring double quotes.
fn split_csv(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut chars = line.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '"' if quoted && chars.peek() == Some(&'"') => {
                cur.push('"');
                chars.next();
            }
            '"' => quoted = !quoted,
            ',' if !quoted => out.push(std::mem::take(&mut cur)),
            c => cur.push(c),
        }
    }
    out.push(cur);
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Reference values, and the columns reproduced without `long_running`.
pub fn golden(id: TableId) -> &'static (CountTable, Vec<usize>) {
    use std::sync::OnceLock;
    static TABLES: [OnceLock<(CountTable, Vec<usize>)>; 3] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let slot = &TABLES[id.number() as usize - 1];
    slot.get_or_init(|| CountTable::parse(id, id.source()).expect("shipped table parses"))
}

pub fn golden_table(id: TableId) -> &'static CountTable {
    &golden(id).0
}

/// Columns reproduced by default; the rest need the long-running flag.
pub fn default_columns(id: TableId) -> &'static [usize] {
    &golden(id).1
}

/// Computes the listed columns. Rows follow the reference table; classes or
/// values of `k` missing from it are appended.
pub fn compute(id: TableId, columns: &[usize], cfg: &EnumerationConfig) -> Result<CountTable> {
    let reference = golden_table(id);
    let mut per_column: Vec<BTreeMap<String, u64>> = Vec::new();
    for &n in columns {
        per_column.push(match id {
            TableId::Mobius => classify_and_count(&mobius_ladder(n)?, cfg)?.histogram,
            TableId::Prisms => classify_and_count(&prism(n)?, cfg)?.histogram,
            TableId::CubicCc => cc_distribution(n, cfg)?,
        });
    }
    let mut rows = reference.rows.clone();
    let extra: BTreeSet<&String> = per_column
        .iter()
        .flat_map(|c| c.keys())
        .filter(|k| !rows.contains(k))
        .collect();
    let extra: Vec<String> = extra.into_iter().cloned().collect();
    rows.extend(extra);
    let cells = rows
        .iter()
        .map(|r| per_column.iter().map(|c| c.get(r).copied().unwrap_or(0)).collect())
        .collect();
    Ok(CountTable {
        id,
        row_header: reference.row_header.clone(),
        rows,
        columns: columns.to_vec(),
        cells,
    })
}

/// Number of connected cubic graphs of order `n` by `CC(G)`, plus a `total` row.
pub fn cc_distribution(n: usize, cfg: &EnumerationConfig) -> Result<BTreeMap<String, u64>> {
    let graphs = cubic_graphs(n)?;
    let single = EnumerationConfig {
        workers: 1,
        ..cfg.clone()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::PreconditionViolated(format!("thread pool: {e}")))?;
    let ccs: Vec<usize> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| cc_number_with(g, &single))
            .collect::<Result<_>>()
    })?;
    let mut out = BTreeMap::new();
    for cc in ccs {
        *out.entry(cc.to_string()).or_insert(0) += 1;
    }
    out.insert("total".to_string(), graphs.len() as u64);
    Ok(out)
}

/// One cell where computation and reference disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellMismatch {
    pub row: String,
    pub n: usize,
    pub expected: u64,
    pub actual: u64,
}

/// A computed table next to the reference values for the same columns.
#[derive(Clone, Debug)]
pub struct Reproduction {
    pub computed: CountTable,
    pub expected: CountTable,
    pub mismatches: Vec<CellMismatch>,
    pub cells_compared: usize,
}

impl Reproduction {
    pub fn matches(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// The computed table with mismatching cells shown as `got (want)`, then
    /// a one-line verdict.
    pub fn to_markdown(&self) -> String {
        let t = &self.computed;
        let mut out = format!("| {} |", t.row_header);
        for &n in &t.columns {
            out.push_str(&format!(" {} |", t.id.column_label(n)));
        }
        out.push('\n');
        out.push_str(&format!("|---|{}\n", "---:|".repeat(t.columns.len())));
        let defaults = default_columns(t.id);
        for (r, row) in t.rows.iter().zip(&t.cells) {
            out.push_str(&format!("| {r} |"));
            for (&n, &got) in t.columns.iter().zip(row) {
                let want = self.expected.get(r, n).unwrap_or(0);
                if got == want {
                    out.push_str(&format!(" {got} |"));
                } else {
                    out.push_str(&format!(" **{got}** ({want}) |"));
                }
            }
            out.push('\n');
        }
        let long: Vec<usize> = t.columns.iter().copied().filter(|n| !defaults.contains(n)).collect();
        if !long.is_empty() {
            out.push_str(&format!("\nlong-running columns: {long:?}\n"));
        }
        out.push_str(&self.verdict_line());
        out
    }

    pub fn verdict_line(&self) -> String {
        if self.matches() {
            format!(
                "table {}: all {} cells match\n",
                self.computed.id, self.cells_compared
            )
        } else {
            let mut s = format!(
                "table {}: {} of {} cells differ\n",
                self.computed.id,
                self.mismatches.len(),
                self.cells_compared
            );
            for m in &self.mismatches {
                s.push_str(&format!("  {} n={}: got {}, want {}\n", m.row, m.n, m.actual, m.expected));
            }
            s
        }
    }
}

/// Cell-exact comparison over the union of rows.
pub fn compare(computed: &CountTable, expected: &CountTable) -> Reproduction {
    let mut mismatches = Vec::new();
    let mut rows: Vec<&String> = expected.rows.iter().collect();
    rows.extend(computed.rows.iter().filter(|r| !expected.rows.contains(r)));
    let mut cells = 0;
    for r in rows {
        for &n in &computed.columns {
            let want = expected.get(r, n).unwrap_or(0);
            let got = computed.get(r, n).unwrap_or(0);
            cells += 1;
            if want != got {
                mismatches.push(CellMismatch {
                    row: r.clone(),
                    n,
                    expected: want,
                    actual: got,
                });
            }
        }
    }
    Reproduction {
        computed: computed.clone(),
        expected: expected.clone(),
        mismatches,
        cells_compared: cells,
    }
}

/// Reference columns with `n <= max_n`. Columns outside the default range
/// are refused unless `cfg.long_running` is set.
pub fn columns_up_to(id: TableId, max_n: usize, long_running: bool) -> Result<Vec<usize>> {
    let defaults = default_columns(id);
    let cols: Vec<usize> = golden_table(id)
        .columns
        .iter()
        .copied()
        .filter(|&n| n <= max_n)
        .collect();
    if cols.is_empty() {
        return Err(Error::OutOfRange(format!(
            "table {id} has no column with n <= {max_n}"
        )));
    }
    if let Some(&n) = cols.iter().find(|n| !defaults.contains(n)) {
        if !long_running {
            return Err(Error::PreconditionViolated(format!(
                "column n={n} of table {id} is long-running; pass the long-running flag"
            )));
        }
    }
    Ok(cols)
}

/// Recomputes every reference column up to `max_n` and diffs it cell by cell.
pub fn reproduce(id: TableId, max_n: usize, cfg: &EnumerationConfig) -> Result<Reproduction> {
    let columns = columns_up_to(id, max_n, cfg.long_running)?;
    let computed = compute(id, &columns, cfg)?;
    let expected = golden_table(id).restrict(&columns)?;
    Ok(compare(&computed, &expected))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_tables_parse() {
        let t1 = golden_table(TableId::Mobius);
        assert_eq!(t1.columns, vec![6, 8, 10, 12, 14, 16, 18]);
        assert_eq!(t1.rows.len(), 21);
        assert_eq!(t1.get("K_{3,3}", 6), Some(1));
        assert_eq!(t1.get("S_{2,2}", 8), Some(4));
        assert_eq!(default_columns(TableId::Mobius), &[6, 8, 10, 12]);
        let t2 = golden_table(TableId::Prisms);
        assert_eq!(t2.rows.len(), 14);
        assert_eq!(t2.get("3K_2", 6), Some(1));
        let t3 = golden_table(TableId::CubicCc);
        assert_eq!(t3.get("total", 10), Some(19));
        assert_eq!(t3.get("7", 14), Some(137));
        assert_eq!(default_columns(TableId::CubicCc), &[4, 6, 8, 10]);
    }

    #[test]
    fn column_sums_match_totals() {
        let t3 = golden_table(TableId::CubicCc);
        for &n in &t3.columns {
            let col = t3.column(n).unwrap();
            let sum: u64 = col.iter().filter(|(r, _)| *r != "total").map(|(_, c)| c).sum();
            assert_eq!(Some(sum), t3.get("total", n));
        }
    }

    #[test]
    fn csv_round_trip() {
        let t1 = golden_table(TableId::Mobius);
        let (back, _) = CountTable::parse(TableId::Mobius, &t1.to_csv()).unwrap();
        assert_eq!(&back, t1);
        assert_eq!(split_csv("\"S_{1,2}\",1,\"a\"\"b\""), vec!["S_{1,2}", "1", "a\"b"]);
    }

    #[test]
    fn small_reproductions() {
        let r = reproduce(TableId::Mobius, 8, &EnumerationConfig::exact()).unwrap();
        assert!(r.matches(), "{}", r.verdict_line());
        assert_eq!(r.cells_compared, 21 * 2);
        let r = reproduce(TableId::CubicCc, 8, &EnumerationConfig::exact()).unwrap();
        assert!(r.matches(), "{}", r.verdict_line());
        assert!(r.to_markdown().contains("| total | 1 | 2 | 5 |"));
    }

    #[test]
    fn mismatches_are_reported() {
        let mut computed = golden_table(TableId::Prisms).restrict(&[6]).unwrap();
        computed.cells[0][0] += 1;
        let r = compare(&computed, &golden_table(TableId::Prisms).restrict(&[6]).unwrap());
        assert_eq!(
            r.mismatches,
            vec![CellMismatch { row: "K_2".into(), n: 6, expected: 3, actual: 4 }]
        );
        assert!(r.to_markdown().contains("**4** (3)"));
    }

    #[test]
    fn long_running_columns_need_the_flag() {
        assert!(columns_up_to(TableId::Mobius, 14, false).is_err());
        assert_eq!(columns_up_to(TableId::Mobius, 14, true).unwrap(), vec![6, 8, 10, 12, 14]);
        assert!(columns_up_to(TableId::CubicCc, 3, false).is_err());
    }
}
