use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ccpart::commands::{self, Format, GenSpec, GraphSource, Output, VerifyArgs};
use ccpart::tables::TableId;
use ccpart::verify::Family;
use ccpart::{EnumerationConfig, Result};

/// Connected coalition partitions of small subcubic graphs.
#[derive(Parser)]
#[command(name = "ccpart", version)]
struct Cli {
    /// Accepted for compatibility; every algorithm is deterministic.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print graphs as graph6 lines.
    Gen {
        #[command(subcommand)]
        what: GenWhat,
    },
    /// Count coalition graphs over all valid partitions.
    Enumerate {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Recompute a reference table and diff it cell by cell.
    Reproduce {
        #[arg(value_parser = ["1", "2", "3"])]
        table: String,
        /// Largest column order (default 12 for tables 1 and 2, 10 for table 3).
        #[arg(long)]
        max_n: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check claims against exhaustive enumeration.
    Verify {
        /// Claim ids (lemma1, cor2, thm3.bound, ...) or prefixes (thm3, prop1).
        claims: Vec<String>,
        /// Run every claim (the default when none is named).
        #[arg(long)]
        all: bool,
        /// Caps the order of every corpus.
        #[arg(long)]
        max_n: Option<usize>,
        /// Corpus family; repeat for several. Defaults to all four.
        #[arg(long, value_enum)]
        family: Vec<FamilyArg>,
        /// Extra graphs to check (graph6 lines or an edge list).
        #[arg(long)]
        graphs: Option<PathBuf>,
        #[arg(long)]
        long_running: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Write the verdict CSV here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write counterexamples as CSV here.
        #[arg(long)]
        counterexamples: Option<PathBuf>,
    },
    /// Print the connected coalition number, or `undefined`.
    Ccn {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Find a graph and partition whose coalition graph is TARGET.
    Witness {
        target: String,
        #[arg(long, value_enum, default_value_t = FamilyArg::Ladders)]
        family: FamilyArg,
        /// Search this order only.
        #[arg(long, conflicts_with_all = ["min_n", "max_n"])]
        n: Option<usize>,
        #[arg(long)]
        min_n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Print the coalition-graph catalog.
    Catalog,
}

#[derive(Subcommand)]
enum GenWhat {
    /// Möbius ladder of order N.
    Mobius { n: usize },
    /// Prism of order N.
    Prism { n: usize },
    /// A graph by name, e.g. K_{3,3}, C3+e, 2K2.
    Named { name: String },
    /// All connected graphs of one order up to isomorphism.
    Corpus {
        #[arg(long)]
        n: usize,
        /// Only cubic graphs.
        #[arg(long)]
        cubic: bool,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// A graph in graph6.
    #[arg(long)]
    graph6: Option<String>,
    /// A file of graph6 lines or an edge list.
    #[arg(long)]
    file: Option<PathBuf>,
    /// A graph by name.
    #[arg(long)]
    named: Option<String>,
    /// Möbius ladder of this order.
    #[arg(long)]
    mobius: Option<usize>,
    /// Prism of this order.
    #[arg(long)]
    prism: Option<usize>,
}

impl SourceArgs {
    fn source(&self) -> GraphSource {
        if let Some(s) = &self.graph6 {
            GraphSource::Graph6(s.clone())
        } else if let Some(p) = &self.file {
            GraphSource::File(p.clone())
        } else if let Some(n) = &self.named {
            GraphSource::Named(n.clone())
        } else if let Some(n) = self.mobius {
            GraphSource::Mobius(n)
        } else {
            GraphSource::Prism(self.prism.expect("one source is required"))
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// `bounded` caps the part count by the proven bound.
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
    /// Worker threads (default: available cores).
    #[arg(long, value_parser = clap::value_parser!(usize))]
    workers: Option<usize>,
    /// Allow orders beyond the default size caps.
    #[arg(long)]
    long_running: bool,
}

impl RunArgs {
    fn config(&self) -> EnumerationConfig {
        let workers = self
            .workers
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        let base = match self.mode {
            ModeArg::Exact => EnumerationConfig::exact(),
            ModeArg::Bounded => EnumerationConfig::bounded(),
        };
        base.with_workers(workers).with_long_running(self.long_running)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Bounded,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Markdown,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Markdown => Format::Markdown,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Subcubic,
    Ladders,
    Prisms,
    Cubic,
    StarGadget,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Subcubic => Family::Subcubic,
            FamilyArg::Ladders => Family::Ladders,
            FamilyArg::Prisms => Family::Prisms,
            FamilyArg::Cubic => Family::Cubic,
            FamilyArg::StarGadget => Family::StarGadget,
        }
    }
}

fn run(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Gen { what } => commands::cmd_gen(&match what {
            GenWhat::Mobius { n } => GenSpec::Mobius(n),
            GenWhat::Prism { n } => GenSpec::Prism(n),
            GenWhat::Named { name } => GenSpec::Named(name),
            GenWhat::Corpus {
                n,
                cubic,
                max_degree,
            } => GenSpec::Corpus { n, max_degree, cubic },
        }),
        Command::Enumerate {
            source,
            run,
            format,
        } => commands::cmd_enumerate(&source.source(), &run.config(), format.into()),
        Command::Reproduce { table, max_n, run } => {
            let id: TableId = table.parse()?;
            let max_n = max_n.unwrap_or(if id == TableId::CubicCc { 10 } else { 12 });
            commands::cmd_reproduce(id, max_n, &run.config())
        }
        Command::Verify {
            claims,
            all,
            max_n,
            family,
            graphs,
            long_running,
            format,
            out,
            counterexamples,
        } => commands::cmd_verify(&VerifyArgs {
            claims: if all { Vec::new() } else { claims },
            families: family.into_iter().map(Family::from).collect(),
            max_n,
            graphs: graphs.map(GraphSource::File),
            long_running,
            format: format.into(),
            out,
            counterexamples,
        }),
        Command::Ccn { source, run } => commands::cmd_ccn(&source.source(), &run.config()),
        Command::Witness {
            target,
            family,
            n,
            min_n,
            max_n,
        } => {
            let family = Family::from(family);
            let (lo, hi) = family.default_range();
            let (lo, hi) = match n {
                Some(n) => (n, n),
                None => (min_n.unwrap_or(lo), max_n.unwrap_or(hi.max(min_n.unwrap_or(lo)))),
            };
            commands::cmd_witness(&target, family, lo, hi)
        }
        Command::Catalog => commands::cmd_catalog(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = cli.seedless;
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_status(&e) as u8)
        }
    }
}
