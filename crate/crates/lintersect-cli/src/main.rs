//! Command-line front end: bound tables, constructions, family
//! verification, exact solves and conjecture scans, with a persistent
//! result cache for the expensive commands.
//!
//! Exit codes: 0 success, 1 validation error, 2 verification failure,
//! 3 resource cap or timeout.

mod cache;
mod record;

use std::path::PathBuf;
use std::time::Duration;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use lintersect::bounds::{best_bound, bound_main};
use lintersect::constructions::{projective_plane, star, sunflower};
use lintersect::error::CoreError;
use lintersect::io::{family_to_text, parse_family};
use lintersect::lemmas::{decompose, helly_witness, trace_bound_check, union_size_check};
use lintersect::solver::{
    enumerate_maximum, max_family, scan_conjecture, ScanOptions, SolveOptions, SolverError,
};
use lintersect::{BlockSet, Family, LSpec};

use cache::Cache;
use record::{
    render_table, CheckResult, EnumerationRecord, FamilySummary, Payload, RunRecord, VerifyReport,
};

const EXIT_VALIDATION: i32 = 1;
const EXIT_VERIFICATION: i32 = 2;
const EXIT_RESOURCE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "lintersect",
    version,
    about = "Exact workbench for k-uniform, L-intersecting set families"
)]
struct Cli {
    /// Emit the machine-readable run record as JSON on stdout
    #[arg(long, global = true)]
    json: bool,
    /// Directory for cached solve/scan records
    #[arg(long, global = true, env = "LINTERSECT_CACHE_DIR", value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Bypass the result cache entirely
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every upper bound for (n, k, L) with its applicability
    Bound {
        #[arg(short = 'n', long)]
        n: u64,
        #[arg(short = 'k', long)]
        k: u64,
        /// Allowed intersection sizes, comma-separated (e.g. "1,2")
        #[arg(short = 'L', long = "ell", value_name = "LIST")]
        ell: String,
    },
    /// Generate an extremal family and print its verification summary
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Check a family file: uniformity, intersections, kernel, lemma checks
    Verify(VerifyArgs),
    /// Compute the exact maximum family size by clique branch-and-bound
    Solve {
        #[arg(short = 'n', long)]
        n: u32,
        #[arg(short = 'k', long)]
        k: u32,
        /// Allowed intersection sizes, comma-separated positive integers
        #[arg(short = 'L', long = "ell", value_name = "LIST")]
        ell: String,
        #[command(flatten)]
        solver: SolverArgs,
        /// Also enumerate every maximum family
        #[arg(long)]
        enumerate: bool,
        /// Cap on enumerated maximum families
        #[arg(long, default_value_t = 50_000)]
        enum_cap: usize,
        /// Write the witness family file here
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Scan n = from..=to, comparing true optima against C(n-l1, s)
    Scan {
        #[arg(short = 'k', long)]
        k: u32,
        /// Allowed intersection sizes, comma-separated positive integers
        #[arg(short = 'L', long = "ell", value_name = "LIST")]
        ell: String,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[command(flatten)]
        solver: SolverArgs,
        /// Cap on enumerated maximum families per n (kernel checks)
        #[arg(long, default_value_t = 50_000)]
        enum_cap: usize,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// All k-subsets of [n] containing {1..t}
    Star {
        #[arg(short = 'n', long)]
        n: u32,
        #[arg(short = 'k', long)]
        k: u32,
        #[arg(short = 't', long)]
        t: u32,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// m blocks sharing the core {1..lambda}, petals pairwise disjoint
    Sunflower {
        #[arg(short = 'n', long)]
        n: u32,
        #[arg(short = 'k', long)]
        k: u32,
        #[arg(short = 'l', long)]
        lambda: u32,
        #[arg(short = 'm', long)]
        m: u32,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// The lines of PG(2, q), q a prime power at most 16
    Plane {
        #[arg(short = 'q', long)]
        q: u32,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Also write "point line" incidence pairs here
        #[arg(long, value_name = "FILE")]
        incidence_out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Family file to check
    file: PathBuf,
    /// Check k-uniformity
    #[arg(short = 'k', long)]
    k: Option<u32>,
    /// Check the family is L-intersecting
    #[arg(short = 'L', long = "ell", value_name = "LIST")]
    ell: Option<String>,
    /// Search for a small empty-intersection subfamily (needs -k)
    #[arg(long)]
    helly: bool,
    /// Check the union-size inequality (needs -k)
    #[arg(long)]
    union: bool,
    /// Check the trace inequality against this block (needs --l1)
    #[arg(long, value_name = "ELEMS")]
    trace: Option<String>,
    /// Decompose over (l1+1)-subsets of this set (needs --l1)
    #[arg(long, value_name = "ELEMS")]
    decompose: Option<String>,
    /// The l1 parameter for --trace / --decompose
    #[arg(long)]
    l1: Option<u32>,
}

#[derive(Args)]
struct SolverArgs {
    /// Refuse instances with more than this many k-subset vertices
    #[arg(long, default_value_t = lintersect::solver::DEFAULT_VERTEX_CAP)]
    cap: u64,
    /// Wall-clock budget in seconds
    #[arg(long, value_name = "SECS")]
    timeout_seconds: Option<f64>,
    /// Worker threads for the branch-and-bound
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Force single-worker mode (deterministic witness)
    #[arg(long)]
    deterministic: bool,
    /// Disable the symmetry anchor
    #[arg(long)]
    no_anchor: bool,
}

impl SolverArgs {
    fn to_options(&self) -> SolveOptions {
        SolveOptions {
            vertex_cap: self.cap,
            timeout: self.timeout_seconds.map(Duration::from_secs_f64),
            workers: if self.deterministic {
                1
            } else {
                self.workers.max(1)
            },
            anchor: !self.no_anchor,
        }
    }
}

struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn validation(msg: impl Into<String>) -> Self {
        Self {
            code: EXIT_VALIDATION,
            msg: msg.into(),
        }
    }
    fn verification(msg: impl Into<String>) -> Self {
        Self {
            code: EXIT_VERIFICATION,
            msg: msg.into(),
        }
    }
    fn resource(msg: impl Into<String>) -> Self {
        Self {
            code: EXIT_RESOURCE,
            msg: msg.into(),
        }
    }
}

fn solver_failure(err: SolverError) -> Failure {
    match &err {
        SolverError::VertexCapExceeded { .. } | SolverError::Timeout { .. } => {
            Failure::resource(err.to_string())
        }
        _ => Failure::validation(err.to_string()),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_VALIDATION,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(failure) = run(cli) {
        eprintln!("error: {}", failure.msg);
        std::process::exit(failure.code);
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cache = Cache::new(cli.cache_dir.clone(), !cli.no_cache);
    match &cli.command {
        Command::Bound { n, k, ell } => cmd_bound(&cli, *n, *k, ell),
        Command::Construct { kind } => cmd_construct(&cli, kind),
        Command::Verify(args) => cmd_verify(&cli, args),
        Command::Solve {
            n,
            k,
            ell,
            solver,
            enumerate,
            enum_cap,
            out,
        } => cmd_solve(
            &cli,
            &cache,
            *n,
            *k,
            ell,
            solver,
            *enumerate,
            *enum_cap,
            out.as_deref(),
        ),
        Command::Scan {
            k,
            ell,
            from,
            to,
            solver,
            enum_cap,
        } => cmd_scan(&cli, &cache, *k, ell, *from, *to, solver, *enum_cap),
    }
}

/// Parses "1,2,3" into an LSpec; warns about dropped duplicates.
fn parse_ell(text: &str, require_positive: bool) -> Result<LSpec, Failure> {
    let mut values = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let v: u32 = token.parse().map_err(|_| {
            Failure::validation(format!(
                "invalid L value '{token}' (expected comma-separated integers, e.g. -L 1,2)"
            ))
        })?;
        values.push(v);
    }
    let (spec, had_duplicates) =
        LSpec::from_unsorted(values).map_err(|e| Failure::validation(format!("invalid L: {e}")))?;
    if had_duplicates {
        eprintln!("warning: duplicate L values ignored");
    }
    if require_positive && !spec.is_positive() {
        return Err(Failure::validation(
            "L must contain only positive integers for this command",
        ));
    }
    Ok(spec)
}

fn parse_block(text: &str, family: &Family, what: &str) -> Result<BlockSet, Failure> {
    let mut elems = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let v: u32 = token
            .parse()
            .map_err(|_| Failure::validation(format!("invalid element '{token}' in {what}")))?;
        elems.push(v);
    }
    BlockSet::from_elements(family.ground(), elems)
        .map_err(|e| Failure::validation(format!("{what}: {e}")))
}

fn emit(cli: &Cli, record: &RunRecord, human: impl FnOnce()) -> Result<(), Failure> {
    if cli.json {
        let text = serde_json::to_string(record)
            .map_err(|e| Failure::validation(format!("serialization failed: {e}")))?;
        println!("{text}");
    } else {
        human();
    }
    Ok(())
}

fn cmd_bound(cli: &Cli, n: u64, k: u64, ell_text: &str) -> Result<(), Failure> {
    if n == 0 || k == 0 || k > n {
        return Err(Failure::validation(format!(
            "need 1 <= k <= n (got n = {n}, k = {k}); usage: lintersect bound -n <N> -k <K> -L <LIST>"
        )));
    }
    let ell = parse_ell(ell_text, false)?;
    let survey = best_bound(n, k, &ell);

    let params = json!({ "n": n, "k": k, "L": ell.values() });
    let record = RunRecord::new(
        "bound",
        params,
        Payload::Bounds {
            survey: survey.clone(),
        },
    );
    emit(cli, &record, || {
        let mut rows = Vec::new();
        for report in &survey.reports {
            rows.push(vec![
                report.name.clone(),
                report.value.to_string(),
                report.applicable.to_string(),
                report.condition.clone(),
                report.citation.clone(),
            ]);
        }
        for (name, error) in &survey.errors {
            rows.push(vec![
                name.clone(),
                "-".into(),
                "error".into(),
                error.clone(),
                String::new(),
            ]);
        }
        print!(
            "{}",
            render_table(
                &["bound", "value", "applicable", "condition", "citation"],
                &rows
            )
        );
        match &survey.best {
            Some(best) => println!("minimum applicable bound: {} = {}", best.name, best.value),
            None => println!("no applicable bounds for these parameters"),
        }
    })
}

fn write_family_outputs(
    cli: &Cli,
    label: &str,
    family: &Family,
    out: Option<&std::path::Path>,
    record: &RunRecord,
    summary: &FamilySummary,
) -> Result<(), Failure> {
    let text = family_to_text(family);
    if let Some(path) = out {
        std::fs::write(path, &text)
            .map_err(|e| Failure::validation(format!("cannot write {}: {e}", path.display())))?;
    }
    if cli.json {
        return emit(cli, record, || {});
    }
    match out {
        Some(path) => {
            println!("{label}: wrote {}", path.display());
            println!("{}", summary.render());
        }
        None => {
            // family file on stdout, summary on stderr so the output stays a
            // valid family file
            print!("{text}");
            eprintln!("{label}: {}", summary.render());
        }
    }
    Ok(())
}

fn cmd_construct(cli: &Cli, kind: &ConstructKind) -> Result<(), Failure> {
    let (label, family, params, out, incidence) = match kind {
        ConstructKind::Star { n, k, t, out } => {
            let family = star(*n, *k, *t).map_err(|e| Failure::validation(e.to_string()))?;
            (
                format!("star(n={n}, k={k}, t={t})"),
                family,
                json!({ "kind": "star", "n": n, "k": k, "t": t }),
                out.clone(),
                None,
            )
        }
        ConstructKind::Sunflower {
            n,
            k,
            lambda,
            m,
            out,
        } => {
            let family =
                sunflower(*n, *k, *lambda, *m).map_err(|e| Failure::validation(e.to_string()))?;
            (
                format!("sunflower(n={n}, k={k}, lambda={lambda}, m={m})"),
                family,
                json!({ "kind": "sunflower", "n": n, "k": k, "lambda": lambda, "m": m }),
                out.clone(),
                None,
            )
        }
        ConstructKind::Plane {
            q,
            out,
            incidence_out,
        } => {
            let plane = projective_plane(*q).map_err(|e| Failure::validation(e.to_string()))?;
            let incidence = incidence_out.as_ref().map(|path| {
                let pairs = plane.incidence_pairs();
                let mut text = String::new();
                for (point, line) in pairs {
                    text.push_str(&format!("{point} {line}\n"));
                }
                (path.clone(), text)
            });
            (
                format!("plane(q={q})"),
                plane.into_lines(),
                json!({ "kind": "plane", "q": q }),
                out.clone(),
                incidence,
            )
        }
    };

    if let Some((path, text)) = incidence {
        std::fs::write(&path, text)
            .map_err(|e| Failure::validation(format!("cannot write {}: {e}", path.display())))?;
        if !cli.json {
            eprintln!("incidence pairs written to {}", path.display());
        }
    }

    let summary = FamilySummary::of(&family);
    let record = RunRecord::new(
        "construct",
        params,
        Payload::Construct {
            family: family_to_text(&family),
            summary: summary.clone(),
        },
    );
    write_family_outputs(cli, &label, &family, out.as_deref(), &record, &summary)
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<(), Failure> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| Failure::validation(format!("cannot read {}: {e}", args.file.display())))?;
    let family = parse_family(&text)
        .map_err(|e| Failure::validation(format!("{}: {e}", args.file.display())))?;

    let mut checks: Vec<CheckResult> = Vec::new();
    let mut resource_failure: Option<String> = None;

    if let Some(k) = args.k {
        let passed = family.is_uniform(k);
        let detail = match family.check_uniform(k) {
            Ok(()) => format!("every block has {k} elements"),
            Err(e) => e.to_string(),
        };
        checks.push(CheckResult {
            name: format!("uniform k={k}"),
            passed,
            detail,
        });
    }
    if let Some(ell_text) = &args.ell {
        let ell = parse_ell(ell_text, false)?;
        let passed = family.is_l_intersecting(&ell);
        let detail = if passed {
            format!("all pairwise intersection sizes lie in {ell}")
        } else {
            let sizes = family
                .intersection_sizes()
                .map(|s| format!("{s:?}"))
                .unwrap_or_else(|e| e.to_string());
            format!("intersection sizes {sizes} not contained in {ell}")
        };
        checks.push(CheckResult {
            name: format!("L-intersecting L={ell}"),
            passed,
            detail,
        });
    }
    if args.helly {
        let k = args
            .k
            .ok_or_else(|| Failure::validation("--helly requires -k"))?;
        match helly_witness(&family, k) {
            Ok(None) => checks.push(CheckResult {
                name: "helly".into(),
                passed: true,
                detail: format!(
                    "kernel {}; no witness needed",
                    family.kernel().map(|b| b.to_string()).unwrap_or_default()
                ),
            }),
            Ok(Some(witness)) => {
                let blocks: Vec<String> = witness.iter().map(|b| b.to_string()).collect();
                checks.push(CheckResult {
                    name: "helly".into(),
                    passed: true,
                    detail: format!(
                        "empty-intersection subfamily of {} blocks: {}",
                        witness.len(),
                        blocks.join(" ")
                    ),
                });
            }
            Err(e @ CoreError::CapExceeded { .. }) => resource_failure = Some(e.to_string()),
            Err(e) => checks.push(CheckResult {
                name: "helly".into(),
                passed: false,
                detail: e.to_string(),
            }),
        }
    }
    if args.union {
        let k = args
            .k
            .ok_or_else(|| Failure::validation("--union requires -k"))?;
        match union_size_check(&family, k) {
            Ok(r) => checks.push(CheckResult {
                name: "union-size".into(),
                passed: r.holds,
                detail: format!("|union| = {} vs bound {}", r.union_size, r.bound),
            }),
            Err(e) => checks.push(CheckResult {
                name: "union-size".into(),
                passed: false,
                detail: e.to_string(),
            }),
        }
    }
    if let Some(trace_text) = &args.trace {
        let l1 = args
            .l1
            .ok_or_else(|| Failure::validation("--trace requires --l1"))?;
        let block = parse_block(trace_text, &family, "--trace")?;
        match trace_bound_check(&family, &block, l1) {
            Ok(r) => checks.push(CheckResult {
                name: "trace-bound".into(),
                passed: r.holds,
                detail: format!("|union ∩ F| = {} vs l1+1 = {}", r.trace_size, l1 + 1),
            }),
            Err(e) => checks.push(CheckResult {
                name: "trace-bound".into(),
                passed: false,
                detail: e.to_string(),
            }),
        }
    }
    if let Some(decompose_text) = &args.decompose {
        let l1 = args
            .l1
            .ok_or_else(|| Failure::validation("--decompose requires --l1"))?;
        let m_set = parse_block(decompose_text, &family, "--decompose")?;
        match decompose(&family, &m_set, l1) {
            Ok(parts) => {
                let covered: usize = {
                    let mut seen = std::collections::BTreeSet::new();
                    for part in parts.values() {
                        for block in part.iter() {
                            seen.insert(block.to_vec());
                        }
                    }
                    seen.len()
                };
                checks.push(CheckResult {
                    name: "decompose".into(),
                    passed: covered == family.len(),
                    detail: format!(
                        "{} nonempty parts cover {covered} of {} blocks",
                        parts.len(),
                        family.len()
                    ),
                });
            }
            Err(e) => checks.push(CheckResult {
                name: "decompose".into(),
                passed: false,
                detail: e.to_string(),
            }),
        }
    }

    let report = VerifyReport {
        n: family.ground().n(),
        m: family.len() as u64,
        intersection_sizes: family
            .intersection_sizes()
            .map(|s| s.into_iter().collect())
            .unwrap_or_default(),
        kernel: family.kernel().ok().map(|k| k.to_vec()),
        passed: checks.iter().all(|c| c.passed),
        checks,
    };

    let params = json!({
        "file": args.file.display().to_string(),
        "k": args.k,
        "L": args.ell,
        "helly": args.helly,
        "union": args.union,
        "trace": args.trace,
        "decompose": args.decompose,
        "l1": args.l1,
    });
    let passed = report.passed;
    let record = RunRecord::new("verify", params, Payload::Verify { report });
    emit(cli, &record, || {
        let Payload::Verify { report } = &record.result else {
            unreachable!()
        };
        println!("n = {}, {} blocks", report.n, report.m);
        if report.m >= 2 {
            println!("intersection sizes: {:?}", report.intersection_sizes);
        }
        match &report.kernel {
            Some(kernel) => println!("kernel: {kernel:?}"),
            None => println!("kernel: n/a (empty family)"),
        }
        for check in &report.checks {
            println!(
                "[{}] {}: {}",
                if check.passed { "ok" } else { "FAIL" },
                check.name,
                check.detail
            );
        }
    })?;

    if let Some(msg) = resource_failure {
        return Err(Failure::resource(msg));
    }
    if !passed {
        return Err(Failure::verification("one or more checks failed"));
    }
    Ok(())
}

/// Prints a stored or fresh record and returns it; on cache hit the stored
/// payload is reproduced byte-identically in JSON mode and marked as cached.
fn emit_cached(
    cli: &Cli,
    cache: &Cache,
    command: &str,
    params: &serde_json::Value,
    fresh: impl FnOnce() -> Result<RunRecord, Failure>,
    human: impl FnOnce(&RunRecord, bool),
) -> Result<RunRecord, Failure> {
    use std::io::Write;
    let key = Cache::key(command, params);
    if let Some(bytes) = cache.load(command, &key) {
        if let Ok(record) = serde_json::from_slice::<RunRecord>(&bytes) {
            eprintln!("cache hit: {}", cache.path_for(command, &key).display());
            if cli.json {
                // stored payload, byte-identical
                std::io::stdout()
                    .write_all(&bytes)
                    .map_err(|e| Failure::validation(e.to_string()))?;
            } else {
                human(&record, true);
            }
            return Ok(record);
        }
    }
    let record = fresh()?;
    let bytes = serde_json::to_vec(&record)
        .map_err(|e| Failure::validation(format!("serialization failed: {e}")))?;
    if let Ok(path) = cache.store(command, &key, &bytes) {
        eprintln!("cached: {}", path.display());
    }
    if cli.json {
        std::io::stdout()
            .write_all(&bytes)
            .map_err(|e| Failure::validation(e.to_string()))?;
    } else {
        human(&record, false);
    }
    Ok(record)
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve(
    cli: &Cli,
    cache: &Cache,
    n: u32,
    k: u32,
    ell_text: &str,
    solver: &SolverArgs,
    enumerate: bool,
    enum_cap: usize,
    out: Option<&std::path::Path>,
) -> Result<(), Failure> {
    let ell = parse_ell(ell_text, true)?;
    let opts = solver.to_options();
    let params = json!({
        "n": n,
        "k": k,
        "L": ell.values(),
        "cap": opts.vertex_cap,
        "timeout_ms": opts.timeout.map(|t| t.as_millis() as u64),
        "workers": opts.workers,
        "anchor": opts.anchor,
        "enumerate": enumerate,
        "enum_cap": enum_cap,
    });

    let ell_for_run = ell.clone();
    let record = emit_cached(
        cli,
        cache,
        "solve",
        &params.clone(),
        move || {
            let certificate = max_family(n, k, &ell_for_run, &opts).map_err(solver_failure)?;
            let enumeration = if enumerate {
                let e = enumerate_maximum(n, k, &ell_for_run, enum_cap, &opts)
                    .map_err(solver_failure)?;
                Some(EnumerationRecord {
                    optimum: e.optimum,
                    count: e.families.len() as u64,
                    complete: e.complete,
                    families: e.families.iter().map(family_to_text).collect(),
                })
            } else {
                None
            };
            Ok(RunRecord::new(
                "solve",
                params,
                Payload::Solve {
                    certificate,
                    enumeration,
                },
            ))
        },
        |record, cached| {
            let Payload::Solve {
                certificate,
                enumeration,
            } = &record.result
            else {
                return;
            };
            if cached {
                println!("[cached]");
            }
            println!("optimum {}", certificate.optimum);
            println!(
                "upper bound used: {} = {}",
                certificate.upper_bound_used.name, certificate.upper_bound_used.value
            );
            match bound_main(n as u64, k as u64, &ell) {
                Ok(main) => println!(
                    "optimum {} vs main-bound {} (applicable {})",
                    certificate.optimum, main.value, main.applicable
                ),
                Err(e) => println!("main-bound unavailable: {e}"),
            }
            println!(
                "nodes explored: {}, elapsed: {} ms",
                certificate.nodes_explored,
                certificate.elapsed.as_millis()
            );
            if certificate.witness.len() <= 50 {
                for block in certificate.witness.sorted_blocks() {
                    println!("  {block}");
                }
            } else {
                println!(
                    "  witness has {} blocks (use --out)",
                    certificate.witness.len()
                );
            }
            if let Some(e) = enumeration {
                println!(
                    "maximum families: {}{}",
                    e.count,
                    if e.complete { "" } else { " (incomplete)" }
                );
            }
        },
    )?;

    if let Some(path) = out {
        if let Payload::Solve { certificate, .. } = &record.result {
            std::fs::write(path, family_to_text(&certificate.witness)).map_err(|e| {
                Failure::validation(format!("cannot write {}: {e}", path.display()))
            })?;
            eprintln!("witness written to {}", path.display());
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_scan(
    cli: &Cli,
    cache: &Cache,
    k: u32,
    ell_text: &str,
    from: u32,
    to: u32,
    solver: &SolverArgs,
    enum_cap: usize,
) -> Result<(), Failure> {
    let ell = parse_ell(ell_text, true)?;
    let opts = ScanOptions {
        solve: solver.to_options(),
        enum_cap,
    };
    let params = json!({
        "k": k,
        "L": ell.values(),
        "from": from,
        "to": to,
        "cap": opts.solve.vertex_cap,
        "timeout_ms": opts.solve.timeout.map(|t| t.as_millis() as u64),
        "workers": opts.solve.workers,
        "anchor": opts.solve.anchor,
        "enum_cap": enum_cap,
    });

    let ell_for_run = ell.clone();
    emit_cached(
        cli,
        cache,
        "scan",
        &params.clone(),
        move || {
            let report =
                scan_conjecture(k, &ell_for_run, from, to, &opts).map_err(solver_failure)?;
            Ok(RunRecord::new("scan", params, Payload::Scan { report }))
        },
        |record, cached| {
            let Payload::Scan { report } = &record.result else {
                return;
            };
            if cached {
                println!("[cached]");
            }
            let mut rows = Vec::new();
            for row in &report.rows {
                match (&row.entry, &row.error) {
                    (Some(entry), _) => {
                        let kernel_sizes = entry
                            .extremal_kernel_sizes
                            .iter()
                            .map(|c| format!("{}x{}", c.size, c.count))
                            .collect::<Vec<_>>()
                            .join(" ");
                        rows.push(vec![
                            row.n.to_string(),
                            entry.optimum.to_string(),
                            entry.conjectured_bound.to_string(),
                            if entry.bound_holds { "yes" } else { "NO" }.to_string(),
                            if entry.bound_attained { "yes" } else { "no" }.to_string(),
                            entry.conjecture_kernel_holds.to_string(),
                            format!(
                                "{}{}",
                                entry.enumerated_optima,
                                if entry.enumeration_complete { "" } else { "+" }
                            ),
                            kernel_sizes,
                        ]);
                    }
                    (None, Some(error)) => {
                        rows.push(vec![
                            row.n.to_string(),
                            "-".into(),
                            "-".into(),
                            "-".into(),
                            "-".into(),
                            "-".into(),
                            "-".into(),
                            format!("error: {error}"),
                        ]);
                    }
                    (None, None) => {}
                }
            }
            print!(
                "{}",
                render_table(
                    &[
                        "n",
                        "optimum",
                        "bound",
                        "holds",
                        "attained",
                        "kernel",
                        "optima",
                        "kernel sizes"
                    ],
                    &rows
                )
            );
        },
    )?;
    Ok(())
}
