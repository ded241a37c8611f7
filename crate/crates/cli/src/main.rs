//! `zdgenus`: describe finite rings, emit their zero-divisor graphs, compute
//! genus with certificates and run the verification campaigns.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use zdgenus::classify::{
    summarize, verify_catalog, verify_exclusions, verify_presentation_isomorphisms, EntryReport,
};
use zdgenus::finring::realize_text;
use zdgenus::genus::{genus, Certificate, Verdict, DEFAULT_BUDGET, REFUTATION_BUDGET};
use zdgenus::zdg::{
    decode_graph6, export_dot, export_graph6, export_json, reduce, zero_divisor_graph, Graph, GraphError,
};

const EXIT_REJECT: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_FORMAT_LIMIT: u8 = 3;
const EXIT_INCONCLUSIVE: u8 = 4;

#[derive(Parser)]
#[command(name = "zdgenus", version, about = "Zero-divisor graphs of finite rings and their genus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Realize a ring presentation and print its description as JSON.
    Ring { spec: String },
    /// Print the zero-divisor graph of a ring.
    Graph {
        spec: String,
        /// Delete degree-1 vertices first.
        #[arg(long)]
        reduced: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compute the genus of a ring's zero-divisor graph or of a graph6 graph.
    Genus {
        #[arg(required_unless_present = "graph6", conflicts_with = "graph6")]
        spec: Option<String>,
        #[arg(long, value_name = "STR")]
        graph6: Option<String>,
        /// Node-expansion cap, e.g. 500000, 250k or 2M.
        #[arg(long, value_parser = parse_budget)]
        budget: Option<u64>,
        /// Use the refutation budget when no explicit budget is given.
        #[arg(long)]
        long_running: bool,
        /// Write the rotation-system certificate here.
        #[arg(long, value_name = "PATH")]
        cert: Option<PathBuf>,
    },
    /// Run a verification campaign and print one JSON line per entry.
    Verify {
        scope: Scope,
        #[arg(long, value_parser = parse_budget)]
        budget: Option<u64>,
        /// Worker thread cap.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        long_running: bool,
    },
    /// Certificate tools.
    Cert {
        #[command(subcommand)]
        action: CertAction,
    },
}

#[derive(Subcommand)]
enum CertAction {
    /// Recompute faces and compare with the claimed genus.
    Check { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scope {
    Tables,
    Exclusions,
    Isomorphisms,
    All,
}

/// Plain integer with an optional `k` or `M` suffix.
fn parse_budget(text: &str) -> Result<u64, String> {
    let (digits, scale) = match text.strip_suffix('k') {
        Some(d) => (d, 1_000),
        None => match text.strip_suffix('M') {
            Some(d) => (d, 1_000_000),
            None => (text, 1),
        },
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("expected an integer with optional k/M suffix, got {text:?}"));
    }
    let value: u64 = digits.parse().map_err(|e| format!("{e}"))?;
    let value = value.checked_mul(scale).ok_or("budget overflows")?;
    if value == 0 {
        return Err("budget must be at least 1".into());
    }
    Ok(value)
}

/// Writes one line to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{text}").is_err() {
        std::process::exit(0);
    }
}

fn fail(code: u8, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn ring_graph(spec: &str) -> Result<Graph, ExitCode> {
    let ring = realize_text(spec).map_err(|e| fail(EXIT_INPUT, e))?;
    Ok(zero_divisor_graph(&ring))
}

fn cmd_ring(spec: &str) -> ExitCode {
    match realize_text(spec) {
        Ok(ring) => {
            emit(&serde_json::to_string_pretty(&ring.describe()).expect("serializable"));
            ExitCode::SUCCESS
        }
        Err(e) => fail(EXIT_INPUT, e),
    }
}

fn cmd_graph(spec: &str, reduced: bool, format: Format) -> ExitCode {
    let mut graph = match ring_graph(spec) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if reduced {
        graph = reduce(&graph);
    }
    if graph.vertex_count() == 0 {
        eprintln!("warning: the ring has no nonzero zero-divisors; the graph is empty");
    }
    match format {
        Format::Json => emit(&serde_json::to_string_pretty(&export_json(&graph)).expect("serializable")),
        Format::Dot => emit(export_dot(&graph).trim_end()),
        Format::Graph6 => match export_graph6(&graph) {
            Ok(s) => emit(&s),
            Err(e @ GraphError::TooLarge(_)) => return fail(EXIT_FORMAT_LIMIT, e),
            Err(e) => return fail(EXIT_INPUT, e),
        },
    }
    ExitCode::SUCCESS
}

fn cmd_genus(
    spec: Option<&str>,
    graph6: Option<&str>,
    budget: Option<u64>,
    long_running: bool,
    cert: Option<&PathBuf>,
) -> ExitCode {
    let graph = match (spec, graph6) {
        (_, Some(text)) => match decode_graph6(text) {
            Ok(g) => g,
            Err(e) => return fail(EXIT_INPUT, e),
        },
        (Some(spec), None) => match ring_graph(spec) {
            Ok(g) => g,
            Err(code) => return code,
        },
        (None, None) => return fail(EXIT_INPUT, "a ring spec or --graph6 is required"),
    };
    let budget = budget.unwrap_or(if long_running { REFUTATION_BUDGET } else { DEFAULT_BUDGET });
    let result = genus(&graph, budget);
    let mut report = json!({
        "lower": result.lower,
        "upper": result.upper,
        "exact": result.exact().is_some(),
        "methods": result.methods,
    });
    if let (Some(path), Some(rot)) = (cert, &result.certificate) {
        let certificate = match Certificate::new(&graph, rot, result.upper.expect("certificate implies upper bound")) {
            Ok(c) => c,
            Err(e) => return fail(EXIT_FORMAT_LIMIT, e),
        };
        if let Err(e) = std::fs::write(path, certificate.to_json()) {
            return fail(EXIT_INPUT, format!("cannot write {}: {e}", path.display()));
        }
        report["certificate_path"] = json!(path.display().to_string());
    }
    emit(&report.to_string());
    if result.exact().is_some() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INCONCLUSIVE)
    }
}

fn run_scope(scope: Scope, budget: u64) -> Vec<EntryReport> {
    match scope {
        Scope::Tables => verify_catalog(budget),
        Scope::Exclusions => verify_exclusions(budget),
        Scope::Isomorphisms => verify_presentation_isomorphisms(),
        Scope::All => {
            let mut all = verify_catalog(budget);
            all.extend(verify_exclusions(budget));
            all.extend(verify_presentation_isomorphisms());
            all
        }
    }
}

fn cmd_verify(scope: Scope, budget: Option<u64>, jobs: Option<usize>, long_running: bool) -> ExitCode {
    let budget = budget.unwrap_or(if long_running { REFUTATION_BUDGET } else { DEFAULT_BUDGET });
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        if n == 0 {
            return fail(EXIT_INPUT, "--jobs must be at least 1");
        }
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let reports = pool.install(|| run_scope(scope, budget));
    for r in &reports {
        emit(&serde_json::to_string(r).expect("serializable"));
    }
    let summary = summarize(&reports);
    emit(&serde_json::to_string(&summary).expect("serializable"));
    if summary.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_REJECT)
    }
}

fn cmd_cert_check(path: &PathBuf) -> ExitCode {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_INPUT, format!("cannot read {}: {e}", path.display())),
    };
    let verdict = Certificate::from_json(&text).and_then(|c| c.verify().map(|v| (c, v)));
    match verdict {
        Ok((c, Verdict::Accept)) => {
            emit(&json!({ "verdict": "accept", "claimed_genus": c.claimed_genus }).to_string());
            ExitCode::SUCCESS
        }
        Ok((c, Verdict::Reject { computed })) => {
            emit(&json!({ "verdict": "reject", "claimed_genus": c.claimed_genus, "computed_genus": computed }).to_string());
            ExitCode::from(EXIT_REJECT)
        }
        Err(e) => fail(EXIT_INPUT, e),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match &cli.command {
        Command::Ring { spec } => cmd_ring(spec),
        Command::Graph { spec, reduced, format } => cmd_graph(spec, *reduced, *format),
        Command::Genus { spec, graph6, budget, long_running, cert } => {
            cmd_genus(spec.as_deref(), graph6.as_deref(), *budget, *long_running, cert.as_ref())
        }
        Command::Verify { scope, budget, jobs, long_running } => cmd_verify(*scope, *budget, *jobs, *long_running),
        Command::Cert { action: CertAction::Check { path } } => cmd_cert_check(path),
    }
}

#[cfg(test)]
mod tests {
    use super::parse_budget;

    #[test]
    fn budgets() {
        assert_eq!(parse_budget("1000"), Ok(1000));
        assert_eq!(parse_budget("250k"), Ok(250_000));
        assert_eq!(parse_budget("2M"), Ok(2_000_000));
        for bad in ["1e6", "", "k", "0", "-5", "1.5M", "10K"] {
            assert!(parse_budget(bad).is_err(), "{bad}");
        }
    }
}
