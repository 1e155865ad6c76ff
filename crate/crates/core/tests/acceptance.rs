//! Acceptance criteria. Each prints one PASS or FAIL line; any FAIL makes the
//! target exit non-zero.
//!
//!     cargo test --release -p ccpart --test acceptance

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use ccpart::corpus::{cubic_graphs, subcubic_graphs_up_to};
use ccpart::verify::{all_passed, run_suite, sharpness_witness, witness_search, Claim, Corpus, Family, SuiteOptions};
use ccpart::{
    build_ccg, cc_number, classify_and_count, enumerate_partitions, mobius_ladder, named_graph, prism,
    EnumerationConfig, Error, Graph, Partition,
};

use common::{isomorphic, parts_of, Oracle};

const ORDERS: [usize; 4] = [6, 8, 10, 12];
const CUBIC_ORDERS: [usize; 4] = [4, 6, 8, 10];

const MOBIUS: &[(&str, [u64; 4])] = &[
    ("K_2", [1, 21, 176, 1089]),
    ("P_3", [6, 238, 3890, 42282]),
    ("C_3", [0, 184, 1825, 10830]),
    ("S_4", [2, 108, 2500, 23380]),
    ("2K_2", [0, 50, 905, 9816]),
    ("P_4", [0, 288, 2370, 12624]),
    ("C_3+e", [0, 184, 970, 3048]),
    ("C_4", [9, 37, 110, 207]),
    ("K_4-e", [0, 32, 10, 12]),
    ("K_4", [0, 6, 0, 0]),
    ("S_5", [0, 2, 70, 948]),
    ("P_2uP_3", [0, 48, 280, 960]),
    ("S_{1,2}", [0, 40, 250, 804]),
    ("P_5", [0, 48, 120, 156]),
    ("C_3+2e", [0, 0, 10, 24]),
    ("C_3+e+e", [0, 16, 20, 24]),
    ("C_4+e", [0, 8, 0, 0]),
    ("C_5", [0, 8, 2, 0]),
    ("K_{2,3}", [6, 0, 0, 0]),
    ("S_{2,2}", [0, 4, 5, 6]),
    ("K_{3,3}", [1, 0, 0, 0]),
];

const PRISMS: &[(&str, [u64; 4])] = &[
    ("K_2", [3, 28, 190, 1112]),
    ("P_3", [18, 312, 4140, 42988]),
    ("C_3", [8, 216, 1870, 10826]),
    ("S_4", [6, 140, 2660, 24268]),
    ("2K_2", [3, 63, 775, 9913]),
    ("P_4", [18, 264, 2350, 14208]),
    ("C_3+e", [0, 240, 1180, 4740]),
    ("C_4", [3, 15, 45, 219]),
    ("K_4-e", [6, 48, 165, 246]),
    ("K_4", [0, 14, 0, 0]),
    ("S_5", [0, 6, 130, 1362]),
    ("P_2uP_3", [6, 0, 0, 0]),
    ("S_{1,2}", [6, 0, 0, 0]),
    ("3K_2", [1, 0, 0, 0]),
];

const CUBIC_CC: &[(&str, [u64; 4])] = &[
    ("2", [0, 0, 0, 0]),
    ("3", [0, 0, 0, 1]),
    ("4", [1, 0, 0, 1]),
    ("5", [0, 0, 4, 15]),
    ("6", [0, 2, 1, 2]),
    ("7", [0, 0, 0, 0]),
    ("total", [1, 2, 5, 19]),
];

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn histogram_table(name: &str, make: fn(usize) -> ccpart::Result<Graph>, expected: &[(&str, [u64; 4])]) -> Check {
    let cfg = EnumerationConfig::exact();
    let mut cells = 0;
    for (c, &n) in ORDERS.iter().enumerate() {
        let report = classify_and_count(&make(n).map_err(err)?, &cfg).map_err(err)?;
        for &(class, row) in expected {
            let got = report.count(class);
            ensure(got == row[c], || format!("{name}_{n} {class}: got {got}, want {}", row[c]))?;
            cells += 1;
        }
        let listed: u64 = expected.iter().map(|(_, row)| row[c]).sum();
        ensure(report.total_valid == listed, || {
            format!("{name}_{n}: {} partitions but the table lists {listed}", report.total_valid)
        })?;
    }
    Ok(format!("{cells} cells exact, no unlisted classes"))
}

fn table_mobius() -> Check {
    histogram_table("M", mobius_ladder, MOBIUS)
}

fn table_prisms() -> Check {
    histogram_table("Pr", prism, PRISMS)
}

fn table_cubic_cc() -> Check {
    for (c, &n) in CUBIC_ORDERS.iter().enumerate() {
        let mut counts: BTreeMap<String, u64> = BTreeMap::new();
        let graphs = cubic_graphs(n).map_err(err)?;
        for g in &graphs {
            *counts.entry(cc_number(g).map_err(err)?.to_string()).or_default() += 1;
        }
        counts.insert("total".into(), graphs.len() as u64);
        for &(k, row) in CUBIC_CC {
            let got = counts.get(k).copied().unwrap_or(0);
            ensure(got == row[c], || format!("n={n} k={k}: got {got}, want {}", row[c]))?;
        }
    }
    Ok(format!("{} cells exact", CUBIC_CC.len() * CUBIC_ORDERS.len()))
}

fn lemma_suite() -> Check {
    let claims: Vec<Claim> = Claim::ALL
        .into_iter()
        .filter(|c| !matches!(c, Claim::Thm3Sharpness | Claim::Prop1Realized | Claim::Prop2))
        .collect();
    let opts = SuiteOptions {
        corpora: vec![
            Corpus::family(Family::Subcubic, 1, 7).map_err(err)?,
            Corpus::family(Family::Ladders, 6, 12).map_err(err)?,
            Corpus::family(Family::Prisms, 6, 12).map_err(err)?,
        ],
        long_running: false,
    };
    let records = run_suite(&claims, &opts).map_err(err)?;
    ensure(records.len() == claims.len(), || "missing verdicts".into())?;
    if !all_passed(&records) {
        let failed: Vec<String> = records.iter().filter(|r| !r.passed()).map(|r| r.to_text()).collect();
        return Err(failed.join(""));
    }
    let vacuous: Vec<&str> = records.iter().filter(|r| r.checked == 0).map(|r| r.claim_id.as_str()).collect();
    ensure(vacuous.is_empty(), || format!("never exercised: {vacuous:?}"))?;
    Ok(format!("{} claims, 0 violations", records.len()))
}

fn enumeration_oracle() -> Check {
    let graphs = subcubic_graphs_up_to(6).map_err(err)?;
    let mut partitions = 0;
    for g in &graphs {
        let oracle = Oracle::new(g);
        let want = oracle.valid_partitions();
        let got: std::collections::BTreeSet<_> = enumerate_partitions(g, &EnumerationConfig::exact())
            .map_err(err)?
            .iter()
            .map(parts_of)
            .collect();
        ensure(got == want, || {
            format!(
                "{}: {} partitions, oracle {}",
                ccpart::graph6::encode(g),
                got.len(),
                want.len()
            )
        })?;
        partitions += want.len();
    }
    Ok(format!("{} graphs, {partitions} partitions identical", graphs.len()))
}

fn point_facts() -> Check {
    for (name, want) in [("K_4", 4), ("C_4", 4), ("C_7", 3)] {
        let g = named_graph(name).map_err(err)?;
        let got = cc_number(&g).map_err(err)?;
        ensure(got == want, || format!("CC({name}) = {got}, want {want}"))?;
        ensure(Oracle::new(&g).cc() == Some(want), || format!("oracle disagrees on CC({name})"))?;
    }
    let p3 = named_graph("P_3").map_err(err)?;
    ensure(enumerate_partitions(&p3, &EnumerationConfig::exact()).map_err(err)?.is_empty(), || {
        "P_3 has a valid partition".into()
    })?;
    ensure(Oracle::new(&p3).cc().is_none(), || "oracle finds a partition of P_3".into())?;
    for (g, want) in [(mobius_ladder(6), "K_{3,3}"), (prism(6), "3K_2")] {
        let g = g.map_err(err)?;
        let singletons = Partition::from_labels(&(0..g.order()).collect::<Vec<_>>()).map_err(err)?;
        let class = build_ccg(&g, &singletons).map_err(err)?.classify();
        ensure(class == want, || format!("singleton coalition graph is {class}, want {want}"))?;
        let parts = parts_of(&singletons);
        let h = Graph::new(parts.len(), &Oracle::new(&g).coalition_edges(&parts)).map_err(err)?;
        ensure(isomorphic(&h, &named_graph(want).map_err(err)?), || {
            format!("oracle coalition graph is not {want}")
        })?;
    }
    Ok("CC(K_4)=4 CC(C_4)=4 CC(C_7)=3, P_3 none, M_6 -> K_{3,3}, Pr_6 -> 3K_2".into())
}

/// Confirms a witness with the oracle: valid partition, coalition graph isomorphic to `target`.
fn confirm(target: &str, g: &Graph, p: &Partition) -> Result<(), String> {
    let oracle = Oracle::new(g);
    let parts = parts_of(p);
    ensure(oracle.valid(&parts), || format!("{target}: witness partition {p} is not valid"))?;
    let h = Graph::new(parts.len(), &oracle.coalition_edges(&parts)).map_err(err)?;
    ensure(isomorphic(&h, &named_graph(target).map_err(err)?), || {
        format!("{target}: witness coalition graph is wrong")
    })
}

fn witnesses() -> Check {
    let w = witness_search("K_{2,3}", Family::Cubic, 10, 10).map_err(err)?;
    ensure(w.graph.order() == 10 && w.graph.is_cubic(), || "K_{2,3} witness is not cubic of order 10".into())?;
    confirm("K_{2,3}", &w.graph, &w.partition)?;

    let m10 = mobius_ladder(10).map_err(err)?;
    let w = witness_search("C_5", Family::Ladders, 10, 10).map_err(err)?;
    ensure(w.graph == m10, || "C_5 witness is not M_10".into())?;
    confirm("C_5", &w.graph, &w.partition)?;

    match witness_search("C_4+e", Family::Ladders, 10, 12) {
        Err(Error::NotFound(_)) => {}
        Ok(w) => return Err(format!("C_4+e realised by a ladder of order {}", w.graph.order())),
        Err(e) => return Err(err(e)),
    }
    let w = witness_search("C_4+e", Family::Subcubic, 1, 10).map_err(err)?;
    ensure(w.graph.order() <= 10 && w.graph.is_subcubic() && w.graph.is_connected(), || {
        "C_4+e witness out of range".into()
    })?;
    confirm("C_4+e", &w.graph, &w.partition)?;
    Ok(format!("K_{{2,3}} cubic n=10, C_5 in M_10, C_4+e absent from M_10/M_12 and present at n={}", w.graph.order()))
}

fn sharpness() -> Check {
    let mut found = Vec::new();
    for n in [11, 12, 13] {
        let want = 6.max((n + 7) / 3);
        let (w, cc) = sharpness_witness(n, false).map_err(err)?;
        let g = &w.graph;
        ensure(g.order() == n && g.is_connected() && g.is_subcubic(), || format!("n={n}: bad witness graph"))?;
        ensure(cc == want, || format!("n={n}: CC = {cc}, want {want}"))?;
        ensure(w.partition.len() == want, || format!("n={n}: witness has {} parts", w.partition.len()))?;
        ensure(Oracle::new(g).valid(&parts_of(&w.partition)), || format!("n={n}: oracle rejects witness"))?;
        found.push(format!("n={n} {}", ccpart::graph6::encode(g)));
    }
    Ok(format!("CC = 6 at {}", found.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("table-mobius M_6..M_12", table_mobius),
        ("table-prisms Pr_6..Pr_12", table_prisms),
        ("table-cubic-cc n=4..10", table_cubic_cc),
        ("lemma-suite subcubic<=7, ladders and prisms 6..12", lemma_suite),
        ("enumeration-oracle subcubic n<=6", enumeration_oracle),
        ("point-facts", point_facts),
        ("witnesses", witnesses),
        ("sharpness n=11,12,13", sharpness),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
