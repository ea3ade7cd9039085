//! `mostar`: compute, construct, enumerate, aggregate and verify.
//!
//! Data goes to standard output (or `--out`), diagnostics to standard error.
//! Exit codes: 0 success, 1 generic failure, 2 malformed input,
//! 3 not realizable, 4 unknown, 5 out of range.

mod input;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use log::info;
use mostar_core::analytics::ClaimKind;
use mostar_core::{
    chemical_witness, cycle_even_witness, decode_graph6_stream, edge_reports, encode_graph6, generate_connected,
    layered_even, mostar_index, structural_profile, three_layer, transmissions, tree_witness, wiener_index, witness,
    Census, Error, FirstRealizer, Graph, GraphStream, Histogram, StatsRow, Suite, WitnessPlan, ENUM_MAX_ORDER,
};
use serde_json::{json, Value};

use input::{parse_graphs, parse_inline_edges, read_source, InputFormat};
use output::{Format, Table};

#[derive(Parser)]
#[command(name = "mostar", version, about = "Mostar index toolkit")]
struct Cli {
    /// Record format.
    #[arg(long, value_enum, default_value = "tsv", global = true)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// More diagnostics on standard error; repeat for more.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    /// Write records to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-graph index, transmissions, edge reports or structure.
    Compute(ComputeArgs),
    /// Certified graph with a prescribed Mostar index.
    Witness(WitnessArgs),
    /// All connected graphs of one order, as graph6 lines.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Min / max / mode / average of the index over a graph stream.
    Stats(StatsArgs),
    /// Number of graphs per (index, order) pair.
    Table2 {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        mo_max: u64,
    },
    /// Smallest order realizing each index, up to an order cap.
    FirstRealizer {
        #[arg(required = true)]
        targets: Vec<u64>,
        #[arg(long, default_value_t = 9)]
        n_max: usize,
    },
    /// Check a suite of claims exhaustively over small graphs.
    Verify {
        /// Suite id, or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n_max: usize,
    },
    /// Convert between edge lists and graph6.
    Codec(CodecArgs),
}

#[derive(Args)]
#[group(id = "source", required = true, multiple = false)]
struct Source {
    /// Graph file, or `-` for standard input.
    #[arg(long = "in", group = "source")]
    input: Option<String>,
    /// One graph6 record.
    #[arg(long, group = "source")]
    graph6: Option<String>,
    /// Inline edge list `N:u-v,u-v,...`.
    #[arg(long, group = "source")]
    edges: Option<String>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: Source,
    /// Format of `--in` data.
    #[arg(long, value_enum, default_value = "auto")]
    input_format: InputFormat,
    #[arg(long, value_enum, default_value = "summary")]
    report: Report,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Report {
    Summary,
    Transmissions,
    Edges,
    Profile,
}

#[derive(Args)]
struct WitnessArgs {
    /// Target indices.
    #[arg(required = true)]
    targets: Vec<u64>,
    /// Maximum degree at most 4.
    #[arg(long, group = "kind")]
    chemical: bool,
    /// Chemical tree (even targets only).
    #[arg(long, group = "kind")]
    tree: bool,
    /// Three-layer graph on 3p vertices.
    #[arg(long, group = "kind")]
    three_layer: bool,
    /// Cycle with pendants or a shared triangle (even targets).
    #[arg(long, group = "kind")]
    cycle_even: bool,
    /// Layered construction with clique size m+1 and 4k+4 levels; the
    /// target must be 2m.
    #[arg(long, group = "kind", num_args = 2, value_names = ["M", "K"])]
    layered_even: Option<Vec<usize>>,
}

#[derive(Args)]
#[group(id = "stats_source", required = true, multiple = false)]
struct StatsSource {
    /// Enumerate one order.
    #[arg(long)]
    n: Option<usize>,
    /// Enumerate every order from 1 to this cap, one row each.
    #[arg(long)]
    n_max: Option<usize>,
    /// graph6 stream of a single order, or `-`.
    #[arg(long = "in")]
    input: Option<String>,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    source: StatsSource,
    /// Emit the full value distribution instead of the summary row.
    #[arg(long)]
    histogram: bool,
}

#[derive(Args)]
#[group(id = "direction", required = true, multiple = false)]
struct CodecArgs {
    /// Edge lists in, graph6 out.
    #[arg(long, group = "direction")]
    encode: bool,
    /// graph6 in, edge lists out.
    #[arg(long, group = "direction")]
    decode: bool,
    /// Input file, default standard input.
    #[arg(long = "in", default_value = "-")]
    input: String,
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
    /// Claims with counterexamples; the report has already been written.
    ClaimsFailed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e {
                Error::NotRealizable(_) | Error::OddTarget(_) => 3,
                Error::Unknown(_) => 4,
                Error::OutOfRange { .. } => 5,
                Error::CertificationFailure { .. } => 1,
                _ => 2,
            },
            CliError::Io(_) | CliError::ClaimsFailed(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Io(m) | CliError::ClaimsFailed(m) => m.clone(),
        }
    }
}

/// What a command produces: a table, or preformatted text.
enum Emit {
    Table(Table),
    Text(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).format_timestamp(None).init();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global() {
            eprintln!("mostar: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mostar: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let started = Instant::now();
    let (emit, deferred) = match &cli.command {
        Command::Compute(args) => (compute(args)?, None),
        Command::Witness(args) => (witnesses(args)?, None),
        Command::Enumerate { n } => (enumerate(*n)?, None),
        Command::Stats(args) => (stats(args)?, None),
        Command::Table2 { n_max, mo_max } => (table2(*n_max, *mo_max)?, None),
        Command::FirstRealizer { targets, n_max } => (first_realizer(targets, *n_max)?, None),
        Command::Verify { suite, n_max } => {
            let (table, failure) = verify(suite, *n_max)?;
            (table, failure)
        }
        Command::Codec(args) => (codec(args)?, None),
    };
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match emit {
        Emit::Table(t) => t.write(cli.format, &mut out)?,
        Emit::Text(s) => out.write_all(s.as_bytes())?,
    }
    out.flush()?;
    info!("done in {:.2?}", started.elapsed());
    deferred.map_or(Ok(()), Err)
}

fn load(source: &Source, format: InputFormat) -> Result<Vec<Graph>, CliError> {
    if let Some(path) = &source.input {
        parse_graphs(&read_source(path)?, format)
    } else if let Some(record) = &source.graph6 {
        Ok(vec![mostar_core::decode_graph6(record)?])
    } else {
        let spec = source.edges.as_deref().expect("clap enforces one source");
        Ok(vec![parse_inline_edges(spec)?])
    }
}

fn compute(args: &ComputeArgs) -> Result<Emit, CliError> {
    let graphs = load(&args.source, args.input_format)?;
    let table = match args.report {
        Report::Summary => {
            let mut t = Table::new(["graph", "order", "size", "mo", "wiener", "graph6"]);
            for (i, g) in graphs.iter().enumerate() {
                t.push(vec![
                    json!(i),
                    json!(g.order()),
                    json!(g.size()),
                    json!(mostar_index(g)?),
                    json!(wiener_index(g)?),
                    json!(encode_graph6(g)),
                ]);
            }
            t
        }
        Report::Transmissions => {
            let mut t = Table::new(["graph", "vertex", "transmission"]);
            for (i, g) in graphs.iter().enumerate() {
                for (v, tr) in transmissions(g)?.into_iter().enumerate() {
                    t.push(vec![json!(i), json!(v), json!(tr)]);
                }
            }
            t
        }
        Report::Edges => {
            let mut t = Table::new(["graph", "u", "v", "n_u", "n_v", "eq", "phi"]);
            for (i, g) in graphs.iter().enumerate() {
                for r in edge_reports(g)? {
                    t.push(vec![json!(i), json!(r.u), json!(r.v), json!(r.n_u), json!(r.n_v), json!(r.eq), json!(r.phi)]);
                }
            }
            t
        }
        Report::Profile => {
            let mut t = Table::new([
                "graph",
                "order",
                "size",
                "min_degree",
                "max_degree",
                "connected",
                "tree",
                "regular",
                "chemical",
                "bipartite",
                "pendant",
                "triangle",
                "diameter",
                "bridges",
                "cut_vertices",
                "two_connected",
                "two_edge_connected",
            ]);
            for (i, g) in graphs.iter().enumerate() {
                let p = structural_profile(g);
                let bridges: Vec<String> = p.bridges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                t.push(vec![
                    json!(i),
                    json!(p.order),
                    json!(p.size),
                    json!(p.min_degree),
                    json!(p.max_degree),
                    json!(p.is_connected),
                    json!(p.is_tree),
                    json!(p.is_regular),
                    json!(p.is_chemical),
                    json!(p.is_bipartite),
                    json!(p.has_pendant_vertex),
                    json!(p.has_triangle),
                    json!(p.diameter),
                    json!(bridges),
                    json!(p.cut_vertices),
                    json!(p.is_two_connected),
                    json!(p.is_two_edge_connected),
                ]);
            }
            t
        }
    };
    Ok(Emit::Table(table))
}

fn one_witness(p: u64, args: &WitnessArgs) -> Result<WitnessPlan, CliError> {
    let plan = if args.chemical {
        chemical_witness(p)?
    } else if args.tree {
        tree_witness(p)?
    } else if args.three_layer {
        let p = usize::try_from(p).map_err(|_| Error::BadParams(format!("target {p} too large")))?;
        three_layer(p)?
    } else if args.cycle_even {
        cycle_even_witness(p)?
    } else if let Some(mk) = &args.layered_even {
        let (m, k) = (mk[0], mk[1]);
        if 2 * m as u64 != p {
            return Err(Error::BadParams(format!("layered construction with m={m} realizes {}, not {p}", 2 * m)).into());
        }
        layered_even(m, k)?
    } else {
        witness(p)?
    };
    Ok(plan)
}

fn witnesses(args: &WitnessArgs) -> Result<Emit, CliError> {
    let mut t = Table::new(["target", "family", "params", "order", "graph6", "certified_mo"]);
    for &p in &args.targets {
        let rec = one_witness(p, args)?.record();
        t.push(vec![
            json!(rec.target),
            json!(rec.family.tag()),
            json!(rec.params),
            json!(rec.order),
            json!(rec.graph6),
            json!(rec.certified_mo),
        ]);
    }
    Ok(Emit::Table(t))
}

fn check_enum_order(n: usize) -> Result<(), CliError> {
    if n == 0 || n > ENUM_MAX_ORDER {
        return Err(Error::OutOfRange {
            what: "order",
            value: n as u64,
            limit: ENUM_MAX_ORDER as u64,
        }
        .into());
    }
    Ok(())
}

fn enumerate(n: usize) -> Result<Emit, CliError> {
    check_enum_order(n)?;
    let stream = generate_connected(n)?;
    info!("order {n}: {} graphs", stream.len());
    let mut text = String::with_capacity(stream.len() * (n * n / 12 + 3));
    for g in stream.iter() {
        text.push_str(&encode_graph6(g));
        text.push('\n');
    }
    Ok(Emit::Text(text))
}

fn stats_table(rows: &[(StatsRow, Histogram)], histogram: bool) -> Table {
    if histogram {
        let mut t = Table::new(["n", "mo", "count"]);
        for (row, h) in rows {
            for (v, c) in h.iter() {
                t.push(vec![json!(row.order), json!(v), json!(c)]);
            }
        }
        t
    } else {
        let mut t = Table::new(StatsRow::FIELDS);
        for (row, _) in rows {
            t.push(row.fields().into_iter().map(cell).collect());
        }
        t
    }
}

/// Numeric strings become JSON numbers so every format agrees.
fn cell(s: String) -> Value {
    s.parse::<u64>().map_or(Value::String(s), Value::from)
}

fn stats(args: &StatsArgs) -> Result<Emit, CliError> {
    let mut rows = Vec::new();
    if let Some(path) = &args.source.input {
        let stream = GraphStream::from_graphs(decode_graph6_stream(&read_source(path)?)?)?;
        let h = mostar_core::mo_histogram(&stream)?;
        rows.push((StatsRow::from_histogram(stream.order(), &h)?, h));
    } else {
        let (lo, hi) = match (args.source.n, args.source.n_max) {
            (Some(n), _) => (n, n),
            (_, Some(m)) => (1, m),
            _ => unreachable!("clap enforces one source"),
        };
        check_enum_order(hi)?;
        check_enum_order(lo)?;
        let census = Census::generate(hi)?;
        for n in lo..=hi {
            let h = census.histogram(n)?;
            rows.push((StatsRow::from_histogram(n, &h)?, h));
        }
    }
    Ok(Emit::Table(stats_table(&rows, args.histogram)))
}

fn table2(n_max: usize, mo_max: u64) -> Result<Emit, CliError> {
    let table = mostar_core::realizer_table(n_max, mo_max)?;
    let mut header = vec!["mo".to_string()];
    header.extend(table.orders.iter().map(|n| format!("n{n}")));
    let mut t = Table::new(header);
    for (v, counts) in table.values.iter().zip(&table.counts) {
        let mut row = vec![json!(v)];
        row.extend(counts.iter().map(|&c| json!(c)));
        t.push(row);
    }
    Ok(Emit::Table(t))
}

fn first_realizer(targets: &[u64], n_max: usize) -> Result<Emit, CliError> {
    check_enum_order(n_max)?;
    if let Some(&p) = targets.iter().find(|&&p| p < 2) {
        return Err(Error::BadParams(format!("first realizer order is defined for p >= 2, got {p}")).into());
    }
    let census = Census::generate(n_max)?;
    let mut t = Table::new(["mo", "n_max", "first_order"]);
    for &p in targets {
        let first = match census.first_realizer_order(p) {
            FirstRealizer::Order(n) => json!(n),
            FirstRealizer::NotFoundBelowCap => json!("not_found_below_cap"),
        };
        t.push(vec![json!(p), json!(n_max), first]);
    }
    Ok(Emit::Table(t))
}

fn verify(suite: &str, n_max: usize) -> Result<(Emit, Option<CliError>), CliError> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    check_enum_order(n_max)?;
    let census = Census::generate(n_max)?;
    let mut t = Table::new(["suite", "id", "kind", "checked", "counterexamples", "first_counterexample"]);
    let mut failed = Vec::new();
    for s in suites {
        let report = census.verify(s)?;
        for c in &report.claims {
            if c.kind == ClaimKind::Theorem && !c.holds() {
                failed.push(format!("{s}/{}", c.id));
            }
            t.push(vec![
                json!(s.id()),
                json!(c.id),
                json!(c.kind.to_string()),
                json!(c.checked),
                json!(c.counterexamples),
                json!(c.first_counterexample),
            ]);
        }
        for (key, value) in &report.observations {
            t.push(vec![json!(s.id()), json!(key), json!("observation"), json!(value), Value::Null, Value::Null]);
        }
    }
    let failure = (!failed.is_empty()).then(|| CliError::ClaimsFailed(format!("claims failed: {}", failed.join(", "))));
    Ok((Emit::Table(t), failure))
}

fn codec(args: &CodecArgs) -> Result<Emit, CliError> {
    let text = read_source(&args.input)?;
    let mut out = String::new();
    if args.encode {
        for g in parse_graphs(&text, InputFormat::EdgeList)? {
            out.push_str(&encode_graph6(&g));
            out.push('\n');
        }
    } else {
        for g in decode_graph6_stream(&text)? {
            out.push_str(&g.to_edge_list());
        }
    }
    Ok(Emit::Text(out))
}
