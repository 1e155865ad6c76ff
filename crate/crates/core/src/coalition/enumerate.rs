//! Exhaustive enumeration of connected coalition partitions.
//!
//! Vertices are assigned in index order to parts in restricted-growth order,
//! so vertex 0 always lies in part 0 and every partition is produced once, in
//! lexicographic order of its growth string. A superset of a connected
//! dominating set is again one, so as soon as a part with two or more vertices
//! is a CDS the branch is dead: that part can never be a singleton CDS nor a
//! member of a coalition. Bounded mode additionally caps the part count at
//! [`part_count_bound`]; it is meant for table reproduction only.
//!
//! Work is sharded by fixed-depth prefixes of the assignment. Shard results
//! are returned in prefix order, so output does not depend on worker count.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{part_count_bound, CoalitionGraph, Partition};
use crate::domination::CdsTable;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_EXACT_CAP: usize = 14;
/// Largest order accepted in bounded mode with `long_running` set.
pub const LONG_RUNNING_CAP: usize = 18;

const SHARD_DEPTH: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Bounded,
}

#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    pub mode: Mode,
    /// Largest order enumerated without `long_running`.
    pub exact_cap: usize,
    /// Permits bounded-mode runs up to [`LONG_RUNNING_CAP`].
    pub long_running: bool,
    pub workers: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            mode: Mode::Exact,
            exact_cap: DEFAULT_EXACT_CAP,
            long_running: false,
            workers: 1,
        }
    }
}

impl EnumerationConfig {
    pub fn exact() -> Self {
        Self::default()
    }

    pub fn bounded() -> Self {
        EnumerationConfig {
            mode: Mode::Bounded,
            ..Self::default()
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_long_running(mut self, on: bool) -> Self {
        self.long_running = on;
        self
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        let n = g.order();
        if self.workers == 0 {
            return Err(Error::OutOfRange("worker count must be at least 1".into()));
        }
        let limit = match self.mode {
            Mode::Exact => self.exact_cap,
            Mode::Bounded if self.long_running => self.exact_cap.max(LONG_RUNNING_CAP),
            Mode::Bounded => self.exact_cap,
        }
        .min(CdsTable::MAX_ORDER);
        if n > limit {
            return Err(Error::TooLarge {
                n,
                limit,
                what: match self.mode {
                    Mode::Exact => "exact enumeration",
                    Mode::Bounded => "bounded enumeration",
                },
            });
        }
        if !g.is_connected() {
            return Err(Error::PreconditionViolated(
                "partition enumeration needs a connected graph".into(),
            ));
        }
        Ok(())
    }

    fn max_parts(&self, n: usize) -> usize {
        match self.mode {
            Mode::Exact => n,
            Mode::Bounded => part_count_bound(n).min(n),
        }
    }
}

/// A valid partition as seen during enumeration: the parts in canonical order
/// and the coalition graph as neighbourhood masks over part indices.
#[derive(Debug)]
pub struct ValidPartition<'a> {
    pub parts: &'a [VertexSet],
    pub ccg: &'a [u64],
}

impl ValidPartition<'_> {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_canonical(self.parts.to_vec())
    }

    pub fn coalition_graph(&self) -> CoalitionGraph {
        CoalitionGraph::from_masks(self.ccg, self.parts)
    }
}

struct Search<'g> {
    n: usize,
    table: CdsTable,
    max_parts: usize,
    floor: Option<&'g AtomicUsize>,
    halt: Option<&'g AtomicBool>,
}

impl<'g> Search<'g> {
    fn new(g: &Graph, cfg: &EnumerationConfig, floor: Option<&'g AtomicUsize>) -> Result<Self> {
        cfg.check(g)?;
        Ok(Search {
            n: g.order(),
            table: CdsTable::new(g).expect("order checked against the table limit"),
            max_parts: cfg.max_parts(g.order()),
            floor,
            halt: None,
        })
    }

    /// All assignments of the first `depth` vertices that survive pruning, in order.
    fn prefixes(&self, depth: usize) -> Vec<Vec<VertexSet>> {
        let mut out = Vec::new();
        let mut parts = vec![VertexSet::singleton(0)];
        self.collect_prefixes(1, depth.clamp(1, self.n), &mut parts, &mut out);
        out
    }

    fn collect_prefixes(
        &self,
        v: usize,
        depth: usize,
        parts: &mut Vec<VertexSet>,
        out: &mut Vec<Vec<VertexSet>>,
    ) {
        if v == depth {
            out.push(parts.clone());
            return;
        }
        self.branch(v, parts, &mut |s, parts| s.collect_prefixes(v + 1, depth, parts, out));
    }

    /// Calls `next` once per admissible placement of vertex `v`.
    #[inline]
    fn branch(&self, v: usize, parts: &mut Vec<VertexSet>, next: &mut dyn FnMut(&Self, &mut Vec<VertexSet>)) {
        for j in 0..parts.len() {
            let old = parts[j];
            let grown = old.with(v);
            if self.table.get(grown) {
                continue;
            }
            parts[j] = grown;
            next(self, parts);
            parts[j] = old;
        }
        if parts.len() < self.max_parts {
            parts.push(VertexSet::singleton(v));
            next(self, parts);
            parts.pop();
        }
    }

    fn run<C, T>(&self, v: usize, parts: &mut Vec<VertexSet>, ctx: &mut C, acc: &mut T, visit: &(impl Fn(&mut C, &mut T, &ValidPartition) + ?Sized)) {
        if let Some(floor) = self.floor {
            if parts.len() + (self.n - v) < floor.load(Ordering::Relaxed) {
                return;
            }
        }
        if self.halt.is_some_and(|h| h.load(Ordering::Relaxed)) {
            return;
        }
        if v == self.n {
            self.leaf(parts, ctx, acc, visit);
            return;
        }
        for j in 0..parts.len() {
            let old = parts[j];
            let grown = old.with(v);
            if self.table.get(grown) {
                continue;
            }
            parts[j] = grown;
            self.run(v + 1, parts, ctx, acc, visit);
            parts[j] = old;
        }
        if parts.len() < self.max_parts {
            parts.push(VertexSet::singleton(v));
            self.run(v + 1, parts, ctx, acc, visit);
            parts.pop();
        }
    }

    #[inline]
    fn leaf<C, T>(&self, parts: &[VertexSet], ctx: &mut C, acc: &mut T, visit: &(impl Fn(&mut C, &mut T, &ValidPartition) + ?Sized)) {
        let k = parts.len();
        let mut is_cds = 0u64;
        for (i, &p) in parts.iter().enumerate() {
            if self.table.get(p) {
                is_cds |= 1 << i;
            }
        }
        let mut adj = [0u64; 64];
        for i in 0..k {
            if is_cds >> i & 1 == 1 {
                continue;
            }
            for j in i + 1..k {
                if is_cds >> j & 1 == 0 && self.table.get(parts[i] | parts[j]) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        // A CDS part is a singleton here: larger CDS parts were cut.
        if (0..k).all(|i| is_cds >> i & 1 == 1 || adj[i] != 0) {
            visit(
                ctx,
                acc,
                &ValidPartition {
                    parts,
                    ccg: &adj[..k],
                },
            );
        }
    }
}

/// Runs the search over prefix shards; results come back in shard order.
pub(crate) fn run_sharded<C, T>(
    g: &Graph,
    cfg: &EnumerationConfig,
    floor: Option<&AtomicUsize>,
    ctx_init: impl Fn() -> C + Sync + Send,
    shard_init: impl Fn() -> T + Sync,
    visit: impl Fn(&mut C, &mut T, &ValidPartition) + Sync,
) -> Result<Vec<T>>
where
    T: Send,
{
    let search = Search::new(g, cfg, floor)?;
    let depth = if cfg.workers > 1 { SHARD_DEPTH } else { 1 };
    let prefixes = search.prefixes(depth);
    let start = depth.clamp(1, search.n);
    let run_one = |ctx: &mut C, prefix: &Vec<VertexSet>| {
        let mut acc = shard_init();
        let mut parts = prefix.clone();
        search.run(start, &mut parts, ctx, &mut acc, &visit);
        acc
    };
    if cfg.workers == 1 {
        let mut ctx = ctx_init();
        return Ok(prefixes.iter().map(|p| run_one(&mut ctx, p)).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::PreconditionViolated(format!("thread pool: {e}")))?;
    Ok(pool.install(|| prefixes.par_iter().map_init(&ctx_init, run_one).collect()))
}

/// Every valid connected coalition partition, in canonical order.
pub fn enumerate_partitions(g: &Graph, cfg: &EnumerationConfig) -> Result<Vec<Partition>> {
    let shards = run_sharded(
        g,
        cfg,
        None,
        || (),
        Vec::new,
        |_, acc: &mut Vec<Partition>, vp| acc.push(vp.to_partition()),
    )?;
    Ok(shards.into_iter().flatten().collect())
}

/// Visits every valid partition in canonical order on the calling thread.
pub fn for_each_valid(
    g: &Graph,
    cfg: &EnumerationConfig,
    mut f: impl FnMut(&ValidPartition),
) -> Result<()> {
    let search = Search::new(g, cfg, None)?;
    let mut parts = vec![VertexSet::singleton(0)];
    let cell = std::cell::RefCell::new(&mut f);
    let visit = |_: &mut (), _: &mut (), vp: &ValidPartition| (cell.borrow_mut())(vp);
    search.run(1, &mut parts, &mut (), &mut (), &visit);
    Ok(())
}

/// The first valid partition in canonical order accepted by `accept`, if any.
/// The search stops as soon as one is found.
pub fn find_valid(
    g: &Graph,
    cfg: &EnumerationConfig,
    mut accept: impl FnMut(&ValidPartition) -> bool,
) -> Result<Option<Partition>> {
    let halt = AtomicBool::new(false);
    let mut search = Search::new(g, cfg, None)?;
    search.halt = Some(&halt);
    let mut parts = vec![VertexSet::singleton(0)];
    let found = std::cell::RefCell::new(None);
    let cell = std::cell::RefCell::new(&mut accept);
    let visit = |_: &mut (), _: &mut (), vp: &ValidPartition| {
        if !halt.load(Ordering::Relaxed) && (cell.borrow_mut())(vp) {
            *found.borrow_mut() = Some(vp.to_partition());
            halt.store(true, Ordering::Relaxed);
        }
    };
    search.run(1, &mut parts, &mut (), &mut (), &visit);
    Ok(found.into_inner())
}
