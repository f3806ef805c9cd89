use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context as _};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use kmeasure::bijection::{phi_traced, psi_traced, MapOutcome, SelectionStrategy};
use kmeasure::counting::{
    distinct_odd_count, signed_excess, table_a, table_b_durfee, table_by_length, table_c, table_d,
    table_polygon_order, CountTable,
};
use kmeasure::statistics::{
    contains_km_polygon, durfee_polygon_order, durfee_side, k_measure, km_polygon_shape,
    render_ferrers, Gap,
};
use kmeasure::verify::{self, VerificationReport};
use kmeasure::{Error, Partition};

const USAGE_ERROR: u8 = 2;
const VERIFY_FAILED: u8 = 1;

#[derive(Parser, Debug)]
#[command(name = "kmeasure", version, about = "Partition k-measures, Durfee polygons and their identities")]
struct Cli {
    /// Worker threads for counting and verification [default: available parallelism]
    #[arg(long, global = true, env = "WORKBENCH_WORKERS")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// k-measure, Durfee side and (k,m)-Durfee polygon order of a partition
    Stats(StatsArgs),
    /// Apply phi (or psi with --inverse) to a partition
    Map(MapArgs),
    /// Shape of the (k,m)-polygon, optionally drawn inside a partition
    Polygon(PolygonArgs),
    /// Exact counting tables
    Count(CountArgs),
    /// Run verification suites
    Verify(VerifyArgs),
    /// Signed excess of l + 2-measure parity against distinct odd parts
    Excess(ExcessArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout
    #[arg(long, short)]
    output: Option<PathBuf>,
}

impl Output {
    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    fn emit(&self, text: &str) -> anyhow::Result<()> {
        match &self.output {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                std::io::stdout().write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }
}

#[derive(Args, Debug)]
struct StatsArgs {
    /// Parts separated by ',' or '+', any order; "" is the empty partition
    partition: String,
    #[arg(short, long)]
    k: u64,
    /// Draw the Ferrers diagram with the (k, order)-polygon marked
    #[arg(long)]
    diagram: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct MapArgs {
    partition: String,
    #[arg(short, long)]
    k: u64,
    #[arg(short, long)]
    m: usize,
    #[arg(long, default_value = "greedy-top", value_parser = parse_strategy)]
    strategy: SelectionStrategy,
    /// Apply psi instead of phi
    #[arg(long)]
    inverse: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct PolygonArgs {
    #[arg(short, long)]
    k: u64,
    #[arg(short, long)]
    m: usize,
    /// Partition to draw the polygon inside
    partition: Option<String>,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    A,
    B,
    C,
    D,
    PolygonOrder,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(short, long, default_value_t = 2)]
    k: u64,
    #[arg(long, default_value_t = 30)]
    n_max: u64,
    /// Refine by number of parts (kinds a and polygon-order)
    #[arg(long)]
    by_length: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Theorem1,
    Theorem2,
    TheoremGeneral,
    Theorem3,
    K1Corollaries,
    StrategySearch,
    Remark9,
    MeasureOracle,
    DurfeeGf,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long = "suite", value_enum, required = true)]
    suites: Vec<Suite>,
    #[arg(long, default_value_t = 5)]
    k_max: u64,
    #[arg(long, default_value_t = 30)]
    n_max: u64,
    /// Strategies for strategy-search [default: all]
    #[arg(long = "strategy", value_parser = parse_strategy)]
    strategies: Vec<SelectionStrategy>,
    /// Exit 0 even if strategy-search records findings
    #[arg(long)]
    findings_ok: bool,
    /// Leave elapsed_ms out so reports compare byte-for-byte
    #[arg(long)]
    no_timing: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct ExcessArgs {
    #[arg(long, default_value_t = 30)]
    n_max: u64,
    #[command(flatten)]
    out: Output,
}

fn parse_strategy(s: &str) -> Result<SelectionStrategy, String> {
    s.parse().map_err(|e: Error| {
        let names: Vec<_> = SelectionStrategy::ALL.iter().map(|s| s.name()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

/// Input problems exit with the usage code; everything else is an I/O or
/// internal failure.
#[derive(Debug)]
enum Failure {
    Usage(anyhow::Error),
    Verify,
    Other(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.into())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    Ok(s.parse::<Partition>()?)
}

fn stats(args: StatsArgs) -> Result<(), Failure> {
    let p = parse_partition(&args.partition)?;
    let k = Gap::new(args.k)?;
    let measure = k_measure(&p, k);
    let side = durfee_side(&p);
    let order = durfee_polygon_order(&p, k);
    let text = match args.out.format_or(Format::Json) {
        Format::Json => {
            let mut doc = json!({
                "partition": p,
                "k": k,
                "k_measure": measure,
                "durfee_side": side,
                "durfee_polygon_order": order,
            });
            if args.diagram {
                doc["diagram"] = json!(render_ferrers(&p, Some(&km_polygon_shape(k, order))));
            }
            format!("{}\n", serde_json::to_string_pretty(&doc).map_err(anyhow::Error::from)?)
        }
        Format::Csv => format!(
            "partition,k,k_measure,durfee_side,durfee_polygon_order\n\"{p}\",{k},{measure},{side},{order}\n"
        ),
        Format::Text => {
            let mut s = format!(
                "partition: {p}\nk: {k}\nk_measure: {measure}\ndurfee_side: {side}\ndurfee_polygon_order: {order}\n"
            );
            if args.diagram {
                s.push_str(&render_ferrers(&p, Some(&km_polygon_shape(k, order))));
            }
            s
        }
    };
    args.out.emit(&text)?;
    Ok(())
}

fn map(args: MapArgs) -> Result<(), Failure> {
    let p = parse_partition(&args.partition)?;
    let k = Gap::new(args.k)?;
    let outcome: MapOutcome = if args.inverse {
        psi_traced(&p, k, args.m, args.strategy)?
    } else {
        phi_traced(&p, k, args.m, args.strategy)?
    };
    let direction = if args.inverse { "psi" } else { "phi" };
    let text = match args.out.format_or(Format::Text) {
        Format::Json => {
            let doc = json!({
                "map": direction,
                "k": k,
                "m": args.m,
                "strategy": args.strategy,
                "input": p,
                "image": outcome.image,
                "selected_indices": outcome.selected,
                "selected_values": outcome.selected_values,
                "offsets": outcome.offsets,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).map_err(anyhow::Error::from)?)
        }
        Format::Csv => format!("input,image\n\"{p}\",\"{}\"\n", outcome.image),
        Format::Text => {
            let list = |v: Vec<String>| v.join(",");
            format!(
                "{}\n{direction} k={k} m={} strategy={}\nselected indices: {}\nselected values: {}\noffsets: {}\n",
                outcome.image,
                args.m,
                args.strategy,
                list(outcome.selected.indices().iter().map(ToString::to_string).collect()),
                list(outcome.selected_values.iter().map(ToString::to_string).collect()),
                list(outcome.offsets.iter().map(|d| format!("{d:+}")).collect()),
            )
        }
    };
    args.out.emit(&text)?;
    Ok(())
}

fn polygon(args: PolygonArgs) -> Result<(), Failure> {
    let k = Gap::new(args.k)?;
    let shape = km_polygon_shape(k, args.m);
    let p = args.partition.as_deref().map(parse_partition).transpose()?;
    let text = match args.out.format_or(Format::Text) {
        Format::Json => {
            let mut doc = json!({ "k": k, "m": args.m, "rows": shape, "nodes": shape.node_count() });
            if let Some(p) = &p {
                doc["partition"] = json!(p);
                doc["contained"] = json!(contains_km_polygon(p, k, args.m));
            }
            format!("{}\n", serde_json::to_string_pretty(&doc).map_err(anyhow::Error::from)?)
        }
        Format::Csv => {
            let mut s = String::from("row,length\n");
            for (i, r) in shape.row_lengths().iter().enumerate() {
                s.push_str(&format!("{},{r}\n", i + 1));
            }
            s
        }
        Format::Text => {
            let rows: Vec<String> = shape.row_lengths().iter().map(ToString::to_string).collect();
            let mut s = format!("({k},{})-polygon rows: {}\n", args.m, rows.join(","));
            if let Some(p) = &p {
                s.push_str(&format!("contained in {p}: {}\n", contains_km_polygon(p, k, args.m)));
                s.push_str(&render_ferrers(p, Some(&shape)));
            }
            s
        }
    };
    args.out.emit(&text)?;
    Ok(())
}

fn count(args: CountArgs) -> Result<(), Failure> {
    let k = Gap::new(args.k)?;
    let table: CountTable = match (args.kind, args.by_length) {
        (Kind::A, false) => table_a(k, args.n_max),
        (Kind::B, false) => table_b_durfee(args.n_max),
        (Kind::C, false) => table_c(k, args.n_max),
        (Kind::D, false) => table_d(k, args.n_max),
        (Kind::PolygonOrder, false) => table_polygon_order(k, args.n_max),
        (Kind::A, true) => table_by_length(k, args.n_max).measure,
        (Kind::PolygonOrder, true) => table_by_length(k, args.n_max).polygon,
        (kind, true) => {
            return Err(Failure::Usage(anyhow!(
                "--by-length is available for kinds a and polygon-order, not {kind:?}"
            )))
        }
    };
    let text = match args.out.format_or(Format::Csv) {
        Format::Json => format!("{}\n", table.to_json()),
        Format::Csv | Format::Text => table.to_csv(),
    };
    args.out.emit(&text)?;
    Ok(())
}

fn run_suite(suite: Suite, args: &VerifyArgs, strategies: &[SelectionStrategy]) -> VerificationReport {
    match suite {
        Suite::Theorem1 => verify::check_theorem_1(args.n_max),
        Suite::Theorem2 => verify::check_theorem_2(args.n_max),
        Suite::TheoremGeneral => verify::check_theorem_general(args.k_max, args.n_max),
        Suite::Theorem3 => verify::check_theorem_3(args.n_max),
        Suite::K1Corollaries => verify::check_k1_corollaries(args.n_max),
        Suite::StrategySearch => verify::strategy_search(args.k_max, args.n_max, strategies),
        Suite::Remark9 => verify::check_remark_9(args.n_max),
        Suite::MeasureOracle => verify::check_measure_oracle(args.k_max, args.n_max),
        Suite::DurfeeGf => verify::check_durfee_gf(7, args.n_max),
        Suite::All => unreachable!("expanded before dispatch"),
    }
}

const ALL_SUITES: [Suite; 9] = [
    Suite::Theorem1,
    Suite::Theorem2,
    Suite::TheoremGeneral,
    Suite::Theorem3,
    Suite::K1Corollaries,
    Suite::StrategySearch,
    Suite::Remark9,
    Suite::MeasureOracle,
    Suite::DurfeeGf,
];

fn verify_cmd(args: VerifyArgs) -> Result<(), Failure> {
    if args.k_max == 0 {
        return Err(Error::ZeroGap.into());
    }
    let strategies =
        if args.strategies.is_empty() { SelectionStrategy::ALL.to_vec() } else { args.strategies.clone() };
    let mut suites = Vec::new();
    for &s in &args.suites {
        let expanded = if s == Suite::All { ALL_SUITES.to_vec() } else { vec![s] };
        for e in expanded {
            if !suites.contains(&e) {
                suites.push(e);
            }
        }
    }
    let mut reports = Vec::new();
    let mut fatal = false;
    for suite in suites {
        let mut report = run_suite(suite, &args, &strategies);
        if args.no_timing {
            report = report.without_timing();
        }
        if !report.passed() && !(suite == Suite::StrategySearch && args.findings_ok) {
            fatal = true;
        }
        reports.push(report);
    }
    let text = match args.out.format_or(Format::Json) {
        Format::Json => {
            let doc = json!({ "status": if fatal { "fail" } else { "pass" }, "reports": reports });
            format!("{}\n", serde_json::to_string_pretty(&doc).map_err(anyhow::Error::from)?)
        }
        Format::Csv => {
            let mut s = String::from("suite,sub_check,status,checks_run,failures\n");
            for r in &reports {
                for c in &r.sub_checks {
                    let status = serde_json::to_value(c.status).map_err(anyhow::Error::from)?;
                    s.push_str(&format!(
                        "{},\"{}\",{},{},{}\n",
                        r.suite,
                        c.name,
                        status.as_str().unwrap_or_default(),
                        c.checks_run,
                        c.failures
                    ));
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let failing = r.sub_checks.iter().filter(|c| c.failures > 0).count();
                s.push_str(&format!(
                    "{} {}: {} checks, {failing} of {} sub-checks failing\n",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.suite,
                    r.checks_run,
                    r.sub_checks.len()
                ));
                if let Some(c) = r.counterexamples.first() {
                    s.push_str(&format!(
                        "  first counterexample [{}]: inputs={} expected={} actual={}\n",
                        c.check, c.inputs, c.expected, c.actual
                    ));
                }
            }
            s
        }
    };
    args.out.emit(&text)?;
    if fatal {
        Err(Failure::Verify)
    } else {
        Ok(())
    }
}

fn excess(args: ExcessArgs) -> Result<(), Failure> {
    let signed = signed_excess(args.n_max);
    let odd = distinct_odd_count(args.n_max);
    let text = match args.out.format_or(Format::Csv) {
        Format::Json => {
            let rows: Vec<_> = (0..signed.len())
                .map(|n| json!({ "n": n, "signed_excess": signed[n] as i64, "distinct_odd": odd[n] as i64 }))
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&rows).map_err(anyhow::Error::from)?)
        }
        Format::Csv | Format::Text => {
            let mut s = String::from("n,signed_excess,distinct_odd\n");
            for n in 0..signed.len() {
                s.push_str(&format!("{n},{},{}\n", signed[n], odd[n]));
            }
            s
        }
    };
    args.out.emit(&text)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global() {
            eprintln!("error: cannot configure {workers} workers: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    }
    let result = match cli.command {
        Command::Stats(a) => stats(a),
        Command::Map(a) => map(a),
        Command::Polygon(a) => polygon(a),
        Command::Count(a) => count(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Excess(a) => excess(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(VERIFY_FAILED),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE_ERROR)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
