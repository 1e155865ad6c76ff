//! Verification suites: every structural claim about connected coalitions in
//! subcubic graphs, checked instance by instance against exhaustive
//! enumeration, plus witness search.
//!
//! Enumeration here always runs in exact mode, so no claim is checked against
//! an enumeration that already assumes it.

mod checks;
mod witness;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::coalition::{
    build_ccg, cc_number_with, classify_and_count, for_each_valid, part_count_bound,
    EnumerationConfig, Partition,
};
use crate::domination::all_cds;
use crate::error::{Error, Result};
use crate::graph::{mobius_ladder, Graph};
use crate::graph6;
use crate::vertex_set::VertexSet;

use checks::{check_cor1, check_cor2, check_lemma1, check_partition, ClassCache, ClassInfo, HostFacts};
pub use checks::FINITE_CLASSES;
pub use witness::{
    sharpness_witness, star_gadgets, target_class, witness_search, Family, Witness,
};

/// One verifiable claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// A CDS has at least `n/2 - 1` vertices, leaves a graph of maximum degree
    /// at most 2, and meets the bound exactly iff it is a tree of cubic
    /// vertices with every other vertex attached once.
    Lemma1,
    /// Two disjoint CDS: sizes sum to at least `n - 2`, each induces a path or
    /// cycle, and at equality they are two paths joined by a perfect matching.
    Cor1,
    /// Three disjoint CDS with `n >= 5` force sizes 2 and `G ≅ Pr_6` or `K_{3,3}`.
    Cor2,
    /// Coalition graphs have matching number at most 3, with 3 only for
    /// `K_{3,3}` from `M_6` and `3K_2` from `Pr_6`.
    Lemma2,
    /// An isolated vertex in the coalition graph forces `G ≅ K_n`, `n <= 4`.
    Lemma3,
    /// A part of coalition degree at least 4 dominates but is disconnected.
    Lemma4,
    /// Matching number 1 means `K_3` or a star `S_k` with `k <= ⌊(n+7)/3⌋`.
    Lemma5,
    /// Coalition graphs with at most four vertices.
    Lemma6,
    /// No coalition graph contains `K_2 ∪ K_3`, `K_2 ∪ S_4` or `2C_3+e`.
    Lemma7,
    /// Coalition graphs with five vertices.
    Lemma8,
    /// Coalition graphs with six or more vertices.
    Lemma9,
    /// Every coalition graph is a star or one of the 22 catalog graphs.
    Thm1,
    /// At most `max{6, ⌊(n+7)/3⌋}` parts, and more than 6 parts only as a star.
    Thm3Bound,
    /// The part-count bound is attained at orders 6, 8, 10, 11, 12, 13.
    Thm3Sharpness,
    /// The finitely realisable classes never appear above order 10.
    Prop1Bound,
    /// The finitely realisable classes do appear.
    Prop1Realized,
    /// The remaining classes appear in every ladder of a range, and in
    /// arbitrarily large gadgets for stars.
    Prop2,
}

impl Claim {
    pub const ALL: [Claim; 17] = [
        Claim::Lemma1,
        Claim::Cor1,
        Claim::Cor2,
        Claim::Lemma2,
        Claim::Lemma3,
        Claim::Lemma4,
        Claim::Lemma5,
        Claim::Lemma6,
        Claim::Lemma7,
        Claim::Lemma8,
        Claim::Lemma9,
        Claim::Thm1,
        Claim::Thm3Bound,
        Claim::Thm3Sharpness,
        Claim::Prop1Bound,
        Claim::Prop1Realized,
        Claim::Prop2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Lemma1 => "lemma1",
            Claim::Cor1 => "cor1",
            Claim::Cor2 => "cor2",
            Claim::Lemma2 => "lemma2",
            Claim::Lemma3 => "lemma3",
            Claim::Lemma4 => "lemma4",
            Claim::Lemma5 => "lemma5",
            Claim::Lemma6 => "lemma6",
            Claim::Lemma7 => "lemma7",
            Claim::Lemma8 => "lemma8",
            Claim::Lemma9 => "lemma9",
            Claim::Thm1 => "thm1",
            Claim::Thm3Bound => "thm3.bound",
            Claim::Thm3Sharpness => "thm3.sharpness",
            Claim::Prop1Bound => "prop1.bound",
            Claim::Prop1Realized => "prop1.realized",
            Claim::Prop2 => "prop2",
        }
    }

    /// Claims checked on every valid partition of every corpus graph.
    fn on_partitions(self) -> bool {
        matches!(
            self,
            Claim::Lemma2
                | Claim::Lemma3
                | Claim::Lemma4
                | Claim::Lemma5
                | Claim::Lemma6
                | Claim::Lemma7
                | Claim::Lemma8
                | Claim::Lemma9
                | Claim::Thm1
                | Claim::Thm3Bound
                | Claim::Prop1Bound
        )
    }

    /// Claims checked on connected dominating sets of corpus graphs.
    fn on_cds(self) -> bool {
        matches!(self, Claim::Lemma1 | Claim::Cor1 | Claim::Cor2)
    }

    /// Claims selected by a name: an exact id, or a prefix before `.` such
    /// as `thm3` or `prop1`.
    pub fn select(name: &str) -> Result<Vec<Claim>> {
        let name = name.trim().to_ascii_lowercase();
        let hits: Vec<Claim> = Claim::ALL
            .into_iter()
            .filter(|c| c.id() == name || c.id().split('.').next() == Some(name.as_str()))
            .collect();
        if hits.is_empty() {
            return Err(Error::MalformedInput(format!("unknown claim `{name}`")));
        }
        Ok(hits)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Claim> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s.trim())
            .ok_or_else(|| Error::MalformedInput(format!("unknown claim `{s}`")))
    }
}

/// A failing instance: the graph, the sets or partition involved (in
/// partition text form), and what went wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub graph6: String,
    pub witness: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerdictRecord {
    pub claim_id: String,
    /// What the claim was checked on.
    pub scope: String,
    /// Instances on which the claim's hypothesis held and the conclusion was tested.
    pub checked: u64,
    pub violations: Vec<Counterexample>,
}

pub const VERDICT_CSV_HEADER: &str = "claim_id,scope,checked,violations";

impl VerdictRecord {
    pub fn new(claim: Claim, scope: impl Into<String>) -> VerdictRecord {
        VerdictRecord {
            claim_id: claim.id().to_string(),
            scope: scope.into(),
            checked: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, outcome: Option<std::result::Result<(), String>>, g6: &str, witness: impl FnOnce() -> String) {
        match outcome {
            None => {}
            Some(Ok(())) => self.checked += 1,
            Some(Err(detail)) => {
                self.checked += 1;
                self.violations.push(Counterexample {
                    graph6: g6.to_string(),
                    witness: witness(),
                    detail,
                });
            }
        }
    }

    fn absorb(&mut self, other: VerdictRecord) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }

    /// `PASS claim (checked N) scope`, then one indented line per counterexample.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} (checked {}) {}\n",
            if self.passed() { "PASS" } else { "FAIL" },
            self.claim_id,
            self.checked,
            self.scope
        );
        for c in &self.violations {
            out.push_str(&format!("  {} {} : {}\n", c.graph6, c.witness, c.detail));
        }
        out
    }

    /// One CSV row; `violations` is the number of counterexamples.
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.claim_id,
            csv_field(&self.scope),
            self.checked,
            self.violations.len()
        )
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn verdicts_to_csv(records: &[VerdictRecord]) -> String {
    let mut out = format!("{VERDICT_CSV_HEADER}\n");
    for r in records {
        out.push_str(&r.to_csv_row());
        out.push('\n');
    }
    out
}

/// `claim_id,graph6,witness,detail` for every counterexample, for replay.
pub fn counterexamples_to_csv(records: &[VerdictRecord]) -> String {
    let mut out = String::from("claim_id,graph6,witness,detail\n");
    for r in records {
        for c in &r.violations {
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.claim_id,
                csv_field(&c.graph6),
                csv_field(&c.witness),
                csv_field(&c.detail)
            ));
        }
    }
    out
}

/// A labelled list of connected subcubic graphs.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub label: String,
    pub graphs: Vec<Graph>,
}

impl Corpus {
    /// Members of `family` with order in `min_n..=max_n`.
    pub fn family(family: Family, min_n: usize, max_n: usize) -> Result<Corpus> {
        if family == Family::StarGadget {
            return Err(Error::PreconditionViolated(
                "star gadgets are a witness family, not a corpus".into(),
            ));
        }
        Ok(Corpus {
            label: format!("{family} n={min_n}..{max_n}"),
            graphs: family.graphs(min_n, max_n)?,
        })
    }

    pub fn from_graphs(label: impl Into<String>, graphs: Vec<Graph>) -> Corpus {
        Corpus {
            label: label.into(),
            graphs,
        }
    }

    /// Subcubic graphs up to order 7, ladders and prisms of order 6 to 12,
    /// cubic graphs up to order 10. `max_n` lowers every upper limit.
    pub fn defaults(max_n: Option<usize>) -> Result<Vec<Corpus>> {
        [Family::Subcubic, Family::Ladders, Family::Prisms, Family::Cubic]
            .into_iter()
            .map(|f| {
                let (lo, hi) = f.default_range();
                Corpus::family(f, lo, max_n.map_or(hi, |m| m.min(hi)))
            })
            .collect()
    }

    fn check_subcubic(&self) -> Result<()> {
        match self.graphs.iter().find(|g| !g.is_subcubic() || !g.is_connected()) {
            Some(g) => Err(Error::PreconditionViolated(format!(
                "{} is not a connected subcubic graph",
                graph6::encode(g)
            ))),
            None => Ok(()),
        }
    }
}

/// Runs the CDS and partition claims among `claims` over one corpus. All
/// selected partition claims share a single enumeration per graph. Records
/// come back in `claims` order.
pub fn verify_corpus(corpus: &Corpus, claims: &[Claim]) -> Result<Vec<VerdictRecord>> {
    corpus.check_subcubic()?;
    let claims: Vec<Claim> = claims
        .iter()
        .copied()
        .filter(|c| c.on_cds() || c.on_partitions())
        .collect();
    let per_graph: Vec<Vec<VerdictRecord>> = corpus
        .graphs
        .par_iter()
        .map(|g| verify_graph(g, &claims, &corpus.label))
        .collect::<Result<_>>()?;
    let mut out: Vec<VerdictRecord> = claims
        .iter()
        .map(|&c| VerdictRecord::new(c, scope_of(c, &corpus.label)))
        .collect();
    for records in per_graph {
        for (acc, r) in out.iter_mut().zip(records) {
            acc.absorb(r);
        }
    }
    Ok(out)
}

fn scope_of(claim: Claim, label: &str) -> String {
    match claim {
        Claim::Cor2 => format!("{label}, orders 5..8"),
        Claim::Lemma1 | Claim::Cor1 => format!("{label}, every CDS"),
        _ => format!("{label}, every valid partition"),
    }
}

/// Orders above which three disjoint CDS are not searched for.
const COR2_MAX_ORDER: usize = 8;

fn verify_graph(g: &Graph, claims: &[Claim], label: &str) -> Result<Vec<VerdictRecord>> {
    let g6 = graph6::encode(g);
    let host = HostFacts::new(g);
    let mut records: Vec<VerdictRecord> = claims
        .iter()
        .map(|&c| VerdictRecord::new(c, scope_of(c, label)))
        .collect();
    if claims.iter().any(|c| c.on_cds()) {
        let sets = all_cds(g);
        for (&claim, rec) in claims.iter().zip(records.iter_mut()) {
            match claim {
                Claim::Lemma1 => {
                    for &d in &sets {
                        rec.record(check_lemma1(g, d), &g6, || d.to_string());
                    }
                }
                Claim::Cor1 => {
                    for (i, &a) in sets.iter().enumerate() {
                        for &b in &sets[i + 1..] {
                            if a.is_disjoint(b) {
                                rec.record(check_cor1(g, a, b), &g6, || format!("{a}|{b}"));
                            }
                        }
                    }
                }
                Claim::Cor2 if host.n <= COR2_MAX_ORDER => {
                    for (i, &a) in sets.iter().enumerate() {
                        for (j, &b) in sets.iter().enumerate().skip(i + 1) {
                            if !a.is_disjoint(b) {
                                continue;
                            }
                            for &c in &sets[j + 1..] {
                                if c.is_disjoint(a | b) {
                                    rec.record(check_cor2(&host, [a, b, c]), &g6, || {
                                        format!("{a}|{b}|{c}")
                                    });
                                }
                            }
                        }
                    }
                }
                _ => {}
            }
        }
    }
    if claims.iter().any(|c| c.on_partitions()) {
        let mut cache = ClassCache::default();
        for_each_valid(g, &EnumerationConfig::exact(), |vp| {
            let info = cache.get(vp.ccg);
            for (&claim, rec) in claims.iter().zip(records.iter_mut()) {
                if claim.on_partitions() {
                    let outcome = check_partition(claim, &host, vp.parts, vp.ccg, &info);
                    rec.record(outcome, &g6, || vp.to_partition().to_string());
                }
            }
        })?;
    }
    Ok(records)
}

/// Re-runs one claim on one instance from its serialised form: the graph in
/// graph6 and the witness in partition text (one, two or three sets for the
/// CDS claims, a full partition otherwise). Returns the violation detail, or
/// `None` when the instance satisfies the claim.
pub fn replay(claim: Claim, graph6_text: &str, witness: &str) -> Result<Option<String>> {
    let g = graph6::decode(graph6_text)?;
    let sets: Partition = witness.parse()?;
    let host = HostFacts::new(&g);
    let cds_sets = |count: usize| -> Result<Vec<VertexSet>> {
        let s = sets.parts().to_vec();
        if s.len() != count {
            return Err(Error::MalformedInput(format!("{claim} needs {count} sets")));
        }
        for &d in &s {
            if !crate::domination::is_cds(&g, d)? {
                return Err(Error::NotCds);
            }
        }
        Ok(s)
    };
    let outcome = match claim {
        Claim::Lemma1 => check_lemma1(&g, cds_sets(1)?[0]),
        Claim::Cor1 => {
            let s = cds_sets(2)?;
            check_cor1(&g, s[0], s[1])
        }
        Claim::Cor2 => {
            let s = cds_sets(3)?;
            check_cor2(&host, [s[0], s[1], s[2]])
        }
        c if c.on_partitions() => {
            let h = build_ccg(&g, &sets)?;
            let adj: Vec<u64> = h.graph().adjacency().iter().map(|s| s.bits()).collect();
            let info = ClassInfo::new(h.graph());
            check_partition(c, &host, sets.parts(), &adj, &info)
        }
        c => {
            return Err(Error::PreconditionViolated(format!(
                "{c} is not checked instance by instance"
            )))
        }
    };
    Ok(outcome.and_then(|r| r.err()))
}

/// Options for [`run_suite`].
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub corpora: Vec<Corpus>,
    /// Adds larger ladders and sharpness orders that take minutes.
    pub long_running: bool,
}

impl SuiteOptions {
    pub fn defaults() -> Result<SuiteOptions> {
        Ok(SuiteOptions {
            corpora: Corpus::defaults(None)?,
            long_running: false,
        })
    }
}

/// Runs the selected claims; one record per claim, in [`Claim::ALL`] order,
/// each merged over all corpora.
pub fn run_suite(claims: &[Claim], opts: &SuiteOptions) -> Result<Vec<VerdictRecord>> {
    let mut selected: Vec<Claim> = claims.to_vec();
    selected.sort();
    selected.dedup();
    let mut by_corpus = Vec::new();
    for corpus in &opts.corpora {
        by_corpus.push(verify_corpus(corpus, &selected)?);
    }
    let labels: Vec<&str> = opts.corpora.iter().map(|c| c.label.as_str()).collect();
    let mut out = Vec::new();
    for claim in selected {
        let rec = match claim {
            Claim::Thm3Sharpness => verify_sharpness(opts.long_running)?,
            Claim::Prop1Realized => verify_finite_realized()?,
            Claim::Prop2 => verify_infinite_realized(opts.long_running)?,
            _ => {
                let mut rec = VerdictRecord::new(claim, scope_of(claim, &labels.join("; ")));
                for records in &by_corpus {
                    if let Some(r) = records.iter().find(|r| r.claim_id == claim.id()) {
                        rec.absorb(r.clone());
                    }
                }
                rec
            }
        };
        out.push(rec);
    }
    Ok(out)
}

/// Every record passed.
pub fn all_passed(records: &[VerdictRecord]) -> bool {
    records.iter().all(VerdictRecord::passed)
}

/// CDS size bound over a corpus.
pub fn verify_lemma1(corpus: &Corpus) -> Result<VerdictRecord> {
    single(corpus, Claim::Lemma1)
}

/// Matching number of coalition graphs over a corpus.
pub fn verify_matching_bound(corpus: &Corpus) -> Result<VerdictRecord> {
    single(corpus, Claim::Lemma2)
}

/// Forbidden subgraphs of coalition graphs over a corpus.
pub fn verify_forbidden_subgraphs(corpus: &Corpus) -> Result<VerdictRecord> {
    single(corpus, Claim::Lemma7)
}

/// Isolated coalition-graph vertices over a corpus.
pub fn verify_isolated_vertex(corpus: &Corpus) -> Result<VerdictRecord> {
    single(corpus, Claim::Lemma3)
}

/// Parts of coalition degree four or more over a corpus.
pub fn verify_degree4(corpus: &Corpus) -> Result<VerdictRecord> {
    single(corpus, Claim::Lemma4)
}

/// Coalition graphs with matching number 1 over a corpus.
pub fn verify_alpha1(corpus: &Corpus) -> Result<VerdictRecord> {
    single(corpus, Claim::Lemma5)
}

/// Allowed coalition graphs by part count over a corpus.
pub fn verify_part_count_lists(corpus: &Corpus) -> Result<Vec<VerdictRecord>> {
    verify_corpus(corpus, &[Claim::Lemma6, Claim::Lemma8, Claim::Lemma9])
}

/// Every coalition graph is a star or a catalog class, over a corpus.
pub fn verify_theorem1(corpus: &Corpus) -> Result<VerdictRecord> {
    single(corpus, Claim::Thm1)
}

/// The part-count bound over a corpus, and its sharpness.
pub fn verify_theorem3(corpus: &Corpus, long_running: bool) -> Result<Vec<VerdictRecord>> {
    Ok(vec![single(corpus, Claim::Thm3Bound)?, verify_sharpness(long_running)?])
}

fn single(corpus: &Corpus, claim: Claim) -> Result<VerdictRecord> {
    Ok(verify_corpus(corpus, &[claim])?.remove(0))
}

/// Orders at which sharpness of the part-count bound is demonstrated.
pub fn sharpness_orders(long_running: bool) -> Vec<usize> {
    let mut orders = vec![6, 8, 10, 11, 12, 13];
    if long_running {
        orders.extend([14, 15]);
    }
    orders
}

fn verify_sharpness(long_running: bool) -> Result<VerdictRecord> {
    let orders = sharpness_orders(long_running);
    let mut rec = VerdictRecord::new(
        Claim::Thm3Sharpness,
        format!("CC(G) = max{{6, floor((n+7)/3)}} attained for n in {orders:?}"),
    );
    for n in orders {
        let k = part_count_bound(n);
        match sharpness_witness(n, long_running) {
            Ok((w, cc)) => {
                let g6 = graph6::encode(&w.graph);
                rec.record(
                    Some(if cc == k { Ok(()) } else { Err(format!("CC = {cc}, expected {k}")) }),
                    &g6,
                    || w.partition.to_string(),
                );
            }
            Err(Error::NotFound(msg)) => rec.record(Some(Err(msg)), "", || format!("n={n}")),
            Err(e) => return Err(e),
        }
    }
    Ok(rec)
}

/// Where each finitely realisable class is looked for.
const FINITE_SEARCH: [(Family, usize, usize); 4] = [
    (Family::Subcubic, 1, 7),
    (Family::Ladders, 6, 12),
    (Family::Prisms, 6, 12),
    (Family::Cubic, 4, 10),
];

fn verify_finite_realized() -> Result<VerdictRecord> {
    let mut rec = VerdictRecord::new(
        Claim::Prop1Realized,
        "each finitely realisable class has a witness among subcubic n<=7, ladders, prisms, cubic n<=10; K_{2,3} also at cubic n=10",
    );
    for class in FINITE_CLASSES {
        let found = FINITE_SEARCH
            .iter()
            .find_map(|&(f, lo, hi)| witness_search(class, f, lo, hi).ok());
        rec.record(
            Some(found.map(|_| ()).ok_or_else(|| format!("{class} not realised"))),
            "",
            || class.to_string(),
        );
    }
    let cubic10 = witness_search("K_{2,3}", Family::Cubic, 10, 10);
    rec.record(
        Some(cubic10.map(|_| ()).map_err(|e| e.to_string())),
        "",
        || "K_{2,3}".into(),
    );
    Ok(rec)
}

/// Classes realised by infinitely many subcubic graphs, other than stars and `C_4+e`.
pub const LADDER_CLASSES: [&str; 12] = [
    "C_3", "2K_2", "P_4", "C_4", "C_3+e", "K_4-e", "P_2uP_3", "S_{1,2}", "P_5", "C_3+e+e",
    "C_3+2e", "S_{2,2}",
];

/// Ladder orders used as the finite stand-in for "infinitely many".
pub fn ladder_orders(long_running: bool) -> Vec<usize> {
    if long_running {
        vec![10, 12, 14]
    } else {
        vec![10, 12]
    }
}

/// Star orders checked on gadgets, each at three consecutive graph orders.
pub fn gadget_star_orders(long_running: bool) -> std::ops::RangeInclusive<usize> {
    if long_running {
        6..=10
    } else {
        6..=8
    }
}

fn verify_infinite_realized(long_running: bool) -> Result<VerdictRecord> {
    let orders = ladder_orders(long_running);
    let stars = gadget_star_orders(long_running);
    let mut rec = VerdictRecord::new(
        Claim::Prop2,
        format!(
            "every M_n, n in {orders:?}, realises each class and K_2, P_3, S_4, S_5; C_4+e by a subcubic graph n<=10; S_k, k in {}..{}, by star gadgets of orders 3k-7..3k-5",
            stars.start(),
            stars.end()
        ),
    );
    let cfg = EnumerationConfig::exact().with_long_running(long_running);
    for n in orders {
        let g = mobius_ladder(n)?;
        let g6 = graph6::encode(&g);
        let report = classify_and_count(&g, &cfg)?;
        for class in LADDER_CLASSES.iter().chain(&["K_2", "P_3", "S_4", "S_5"]) {
            let count = report.count(class);
            rec.record(
                Some(if count > 0 { Ok(()) } else { Err(format!("{class} absent from M_{n}")) }),
                &g6,
                || class.to_string(),
            );
        }
    }
    let c4e = witness_search("C_4+e", Family::Subcubic, 1, 10);
    rec.record(
        Some(c4e.map(|_| ()).map_err(|e| e.to_string())),
        "",
        || "C_4+e".into(),
    );
    for k in stars {
        for n in 3 * k - 7..=3 * k - 5 {
            let w = witness_search(&format!("S_{k}"), Family::StarGadget, n, n);
            rec.record(
                Some(w.map(|_| ()).map_err(|e| e.to_string())),
                "",
                || format!("S_{k} n={n}"),
            );
        }
    }
    Ok(rec)
}

/// `CC(G)` by exact enumeration, for claims that need it.
pub fn exact_cc(g: &Graph, long_running: bool) -> Result<usize> {
    cc_number_with(g, &EnumerationConfig::exact().with_long_running(long_running))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::named_graph;

    #[test]
    fn claim_ids_and_selection() {
        for c in Claim::ALL {
            assert_eq!(c.id().parse::<Claim>().unwrap(), c);
        }
        assert_eq!(Claim::select("thm3").unwrap(), vec![Claim::Thm3Bound, Claim::Thm3Sharpness]);
        assert_eq!(Claim::select("lemma7").unwrap(), vec![Claim::Lemma7]);
        assert!(Claim::select("lemma10").is_err());
    }

    #[test]
    fn lemma1_on_small_corpora() {
        let corpus = Corpus::family(Family::Subcubic, 1, 6).unwrap();
        let rec = verify_lemma1(&corpus).unwrap();
        assert!(rec.passed() && rec.checked > 0, "{}", rec.to_text());
        let m8 = Corpus::from_graphs("M_8", vec![named_graph("M_8").unwrap()]);
        assert!(verify_lemma1(&m8).unwrap().checked > 0);
        let bad = Corpus::from_graphs("K_5", vec![named_graph("K_5").unwrap()]);
        assert!(matches!(verify_lemma1(&bad), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn matching_bound_on_six_vertex_ladders() {
        let m6 = Corpus::from_graphs("M_6", vec![named_graph("M_6").unwrap()]);
        let rec = verify_matching_bound(&m6).unwrap();
        assert!(rec.passed());
        assert_eq!(rec.checked, 25);
    }

    #[test]
    fn isolated_vertex_fires_on_triangle() {
        let k3 = Corpus::from_graphs("K_3", vec![named_graph("K_3").unwrap()]);
        let rec = verify_isolated_vertex(&k3).unwrap();
        assert!(rec.passed());
        assert_eq!(rec.checked, 1);
    }

    #[test]
    fn replay_accepts_and_rejects() {
        let m6 = graph6::encode(&named_graph("M_6").unwrap());
        assert_eq!(replay(Claim::Lemma2, &m6, "0|1|2|3|4|5").unwrap(), None);
        assert_eq!(replay(Claim::Lemma1, &m6, "0,1").unwrap(), None);
        assert!(replay(Claim::Lemma1, &m6, "0").is_err());
        assert!(replay(Claim::Prop2, &m6, "0").is_err());
        // A partition that is valid but claimed against the wrong host.
        let pr6 = graph6::encode(&named_graph("Pr_6").unwrap());
        assert_eq!(replay(Claim::Lemma2, &pr6, "0|1|2|3|4|5").unwrap(), None);
    }

    #[test]
    fn verdict_rendering() {
        let mut rec = VerdictRecord::new(Claim::Lemma7, "demo, x");
        rec.record(Some(Err("bad".into())), "C~", || "0|1".into());
        assert!(!rec.passed());
        assert!(rec.to_text().starts_with("FAIL lemma7 (checked 1) demo, x\n  C~ 0|1 : bad"));
        assert_eq!(
            verdicts_to_csv(&[rec.clone()]),
            "claim_id,scope,checked,violations\nlemma7,\"demo, x\",1,1\n"
        );
        assert!(counterexamples_to_csv(&[rec]).contains("lemma7,C~,0|1,bad"));
    }
}
