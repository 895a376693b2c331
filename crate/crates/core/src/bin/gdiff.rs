//! Command-line front end: invariant records, `R(G)`, family generation and
//! proposition checks over graphs, families and the census.
//!
//! Exit codes: 0 all checks pass, 1 some check failed, 2 usage or input
//! error, 3 a search ran out of its node budget.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gdiff_core::codec::Format;
use gdiff_core::families::{generate, random_connected, FamilySpec, KINDS};
use gdiff_core::harness::{
    exit_code, parse_props, reports_to_csv, run_census, run_instances, summary_to_csv, CheckReport,
    CheckStatus, Header, PropId, ReportDocument,
};
use gdiff_core::solvers::{full_record, InvariantRecord, DEFAULT_BUDGET};
use gdiff_core::{build_r, Error, Graph, SearchOptions};

#[derive(Parser)]
#[command(name = "gdiff", version, about = "Exact graph differential computations and checks")]
struct Cli {
    /// Node budget for each exhaustive search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariant record of each input graph.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Emit R(G) for each input graph.
    Roper {
        #[command(flatten)]
        input: InputArgs,
        /// Output format (defaults to the input format).
        #[arg(long, value_enum)]
        out_format: Option<IoFormat>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a member of a named family.
    Family {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(KINDS))]
        kind: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = IoFormat::Graph6)]
        format: IoFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run proposition checks on input graphs, families or random graphs.
    Verify {
        /// Read graphs from a file or `-` for stdin.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = IoFormat::Graph6)]
        format: IoFormat,
        /// Family spec such as `wheel:6` or `complete_bipartite:2,3` (repeatable).
        #[arg(long = "family")]
        families: Vec<String>,
        /// Number of random connected graphs to check.
        #[arg(long)]
        random: Option<usize>,
        /// Seed for `--random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest order for `--random` (orders are drawn from 3..=nmax).
        #[arg(long, default_value_t = 7)]
        nmax: usize,
        /// Edge probability for `--random`.
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        #[command(flatten)]
        check: CheckArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run checks over every connected graph of order 3..=nmax.
    Census {
        #[arg(long)]
        nmax: usize,
        /// Required for nmax = 7, which adds 853 graphs to the 141 of orders 3..=6.
        #[arg(long)]
        allow_n7: bool,
        #[command(flatten)]
        check: CheckArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// With --json, include every report, not just the summary.
        #[arg(long)]
        reports: bool,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Input file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = IoFormat::Graph6)]
    format: IoFormat,
}

#[derive(Args)]
struct CheckArgs {
    /// `all` or a comma-separated list such as `P01,P11`.
    #[arg(long, default_value = "all")]
    props: String,
    /// Worker threads (0 = all cores).
    #[arg(long, env = "GDIFF_JOBS", default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON.
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV.
    #[arg(long)]
    csv: bool,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum IoFormat {
    Graph6,
    Edgelist,
}

impl From<IoFormat> for Format {
    fn from(f: IoFormat) -> Format {
        match f {
            IoFormat::Graph6 => Format::Graph6,
            IoFormat::Edgelist => Format::EdgeList,
        }
    }
}

/// Failure with the exit code it maps to.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(2, e.to_string())
    }
}

fn read_text(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure(2, format!("stdin: {e}")))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Failure(2, format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn read_graphs(path: &str, format: IoFormat) -> Result<Vec<Graph>, Failure> {
    let graphs = Format::from(format).parse_many(&read_text(path)?)?;
    if graphs.is_empty() {
        return Err(Failure(2, format!("{path}: no graphs in input")));
    }
    Ok(graphs)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure(2, format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure(2, format!("stdout: {e}"))),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize") + "\n"
}

fn record_csv(records: &[InvariantRecord]) -> String {
    fn cell<T: ToString>(f: &gdiff_core::solvers::Field<T>) -> String {
        f.value().map(T::to_string).unwrap_or_default()
    }
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    let mut out = String::from("n,m,diff,diff_r,gamma,tau,alpha,roman,psi,lambda,mu,delta_min,delta_max\n");
    for r in records {
        let row = [
            r.n.to_string(),
            r.m.to_string(),
            cell(&r.diff),
            cell(&r.diff_r),
            cell(&r.gamma),
            cell(&r.tau),
            cell(&r.alpha),
            cell(&r.roman),
            cell(&r.psi),
            cell(&r.lambda),
            cell(&r.mu),
            opt(r.delta_min),
            opt(r.delta_max),
        ];
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn text_reports(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!("{} {:<8} {:<8} {}\n", r.prop, r.status, r.instance_g6, r.note));
    }
    out
}

fn write_reports(
    output: &OutputArgs,
    reports: &[CheckReport],
    started: Instant,
) -> Result<(), Failure> {
    let text = if output.json {
        json(&ReportDocument {
            header: Header::now(started.elapsed()),
            summary: None,
            reports,
        })
    } else if output.csv {
        reports_to_csv(reports)?
    } else {
        text_reports(reports)
    };
    emit(&output.out, &text)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let opts = SearchOptions::default().with_budget(cli.budget);
    let started = Instant::now();
    match cli.command {
        Command::Compute { input, output } => {
            let graphs = read_graphs(&input.input, input.format)?;
            let records = graphs
                .iter()
                .map(|g| full_record(g, &opts))
                .collect::<Result<Vec<_>, _>>()?;
            let text = if output.csv {
                record_csv(&records)
            } else {
                records
                    .iter()
                    .map(|r| serde_json::to_string(r).expect("records serialize") + "\n")
                    .collect()
            };
            emit(&output.out, &text)?;
            Ok(if records.iter().any(InvariantRecord::has_budget_skip) { 3 } else { 0 })
        }
        Command::Roper { input, out_format, out } => {
            let graphs = read_graphs(&input.input, input.format)?;
            let format = Format::from(out_format.unwrap_or(input.format));
            let mut text = String::new();
            for g in &graphs {
                text.push_str(&format.write(build_r(g)?.total()));
            }
            emit(&out, &text)?;
            Ok(0)
        }
        Command::Family { kind, n, p, q, r, format, out } => {
            let spec = FamilySpec::from_parts(&kind, n, p, q, r)?;
            emit(&out, &Format::from(format).write(&generate(&spec)?))?;
            Ok(0)
        }
        Command::Verify {
            input,
            format,
            families,
            random,
            seed,
            nmax,
            edge_prob,
            check,
            output,
        } => {
            let props = parse_props(&check.props)?;
            let mut graphs = Vec::new();
            if let Some(path) = &input {
                graphs.extend(read_graphs(path, format)?);
            }
            for f in &families {
                graphs.push(generate(&f.parse::<FamilySpec>()?)?);
            }
            if let Some(count) = random {
                if nmax < 3 {
                    return Err(Failure(2, "--nmax must be at least 3 for --random".into()));
                }
                for i in 0..count as u64 {
                    let s = seed.wrapping_add(i.wrapping_mul(0x9E37_79B9_7F4A_7C15));
                    let n = 3 + (s % (nmax as u64 - 2)) as usize;
                    graphs.push(random_connected(n, edge_prob, s)?);
                }
            }
            if graphs.is_empty() {
                return Err(Failure(2, "nothing to verify: give --input, --family or --random".into()));
            }
            let reports = run_instances(&graphs, &props, &opts, check.jobs)?;
            write_reports(&output, &reports, started)?;
            Ok(exit_code(&reports) as u8)
        }
        Command::Census {
            nmax,
            allow_n7,
            check,
            output,
            reports: include_reports,
        } => {
            if nmax >= 7 && !allow_n7 {
                return Err(Failure(2, "--nmax 7 checks 994 graphs; pass --allow-n7 to confirm".into()));
            }
            let props = parse_props(&check.props)?;
            let run = run_census(nmax, &props, &opts, check.jobs)?;
            let text = if output.json {
                let none: &[CheckReport] = &[];
                json(&ReportDocument {
                    header: Header::now(run.summary.runtime),
                    summary: Some(&run.summary),
                    reports: if include_reports { &run.reports } else { none },
                })
            } else if output.csv {
                summary_to_csv(&run.summary)?
            } else {
                let mut t = format!(
                    "census n=3..{} instances={} runtime={:.2}s\n",
                    nmax,
                    run.summary.instances,
                    run.summary.runtime.as_secs_f64()
                );
                for (prop, c) in &run.summary.counts {
                    let id: PropId = prop.parse()?;
                    t.push_str(&format!(
                        "{prop} pass={} fail={} vacuous={} skipped={}  {}\n",
                        c.pass,
                        c.fail,
                        c.vacuous,
                        c.skipped,
                        id.title()
                    ));
                }
                for r in run.reports.iter().filter(|r| r.status == CheckStatus::Fail) {
                    t.push_str(&format!("FAIL {} {} {:?} {}\n", r.prop, r.instance_g6, r.witness_sets, r.note));
                }
                t
            };
            emit(&output.out, &text)?;
            Ok(exit_code(&run.reports) as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("gdiff: {msg}");
            ExitCode::from(code)
        }
    }
}
