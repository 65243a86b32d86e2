//! Command-line harness over the verification libraries: renders the
//! comparison-sign table, sweeps the cancellation congruence over boundary
//! splittings, cross-checks reordering signs against brute-force
//! permutations, checks the open-closed dimension bookkeeping, and runs
//! the cubic-pencil counting experiment.
//!
//! Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage,
//! 3 genericity exhaustion in the numerical experiment.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pencil_enum::{invariance_experiment, ExperimentSummary, PencilError, Tolerances};
use perm_oracle::{reversal_sign, sigma_pair_signs, split_reordering_sign};
use sign_calculus::{
    ab_table_entry, admissible_splittings, open_closed_dimension_check,
    open_closed_marked_point_bound, reference_table_entry, theorem_invariance_check, CountMode,
    OpenClosedProblem, SignValue,
};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NON_GENERIC: u8 = 3;

#[derive(Parser)]
#[command(
    name = "disc-count",
    about = "Signed counts of real rational curves: sign tables, cancellation sweeps, and cubic-pencil experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    A,
    B,
}

impl From<Mode> for CountMode {
    fn from(m: Mode) -> CountMode {
        match m {
            Mode::A => CountMode::A,
            Mode::B => CountMode::B,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the comparison-sign table for A- and B-counts
    Table {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Re-derive every cell and fail on any mismatch with the reference grid
        #[arg(long)]
        check: bool,
    },
    /// Sweep the cancellation congruence over all admissible splittings
    Cancel {
        #[arg(long, value_enum, ignore_case = true)]
        mode: Mode,
        /// Dimension of the Lagrangian
        #[arg(long)]
        n: u32,
        /// Largest number of boundary point conditions to sweep
        #[arg(long, default_value_t = 25)]
        kmax: u32,
    },
    /// List the admissible splittings of a k-point boundary degeneration
    Splittings {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Cross-check closed-form reordering signs against brute-force permutations
    VerifySigns {
        #[arg(long, default_value_t = 12)]
        kmax: u32,
    },
    /// Check the open-closed dimension formula and the marked-point bound
    OpenClosed {
        #[arg(long)]
        n: u32,
        /// Maslov index of the disc class (must be even)
        #[arg(long)]
        mu: i64,
        /// Boundary marked points
        #[arg(long, default_value_t = 0)]
        k: u32,
        /// Degrees of the interior constraints, comma separated
        #[arg(long = "deg-q", value_delimiter = ',', required = true)]
        deg_q: Vec<u32>,
        /// Minimal Chern number of the ambient manifold
        #[arg(long)]
        mc: u32,
    },
    /// Count signed singular members of cubic pencils through random points
    CountCubics {
        /// Number of real point conditions
        #[arg(long)]
        real: u32,
        /// Number of conjugate pairs of point conditions
        #[arg(long)]
        pairs: u32,
        #[arg(long, default_value_t = 20)]
        trials: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Report path; defaults to DISC_COUNT_OUT_DIR or the working directory
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Interpolation residual tolerance (default 1e-10)
        #[arg(long)]
        tol_interp: Option<f64>,
        /// Discriminant root residual tolerance (default 1e-8)
        #[arg(long)]
        tol_root: Option<f64>,
        /// Chordal distance under which parameters count as one member (default 1e-5)
        #[arg(long)]
        tol_cluster: Option<f64>,
        /// Scaled Hessian determinant threshold for node classification (default 1e-8)
        #[arg(long)]
        tol_hess: Option<f64>,
    },
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Table { format, check } => cmd_table(format, check),
        Command::Cancel { mode, n, kmax } => cmd_cancel(mode.into(), n, kmax),
        Command::Splittings { n, k } => cmd_splittings(n, k),
        Command::VerifySigns { kmax } => cmd_verify_signs(kmax),
        Command::OpenClosed {
            n,
            mu,
            k,
            deg_q,
            mc,
        } => cmd_open_closed(n, mu, k, deg_q, mc),
        Command::CountCubics {
            real,
            pairs,
            trials,
            seed,
            out,
            format,
            tol_interp,
            tol_root,
            tol_cluster,
            tol_hess,
        } => {
            let mut tol = Tolerances::default();
            if let Some(v) = tol_interp {
                tol.interp_residual = v;
            }
            if let Some(v) = tol_root {
                tol.root_residual = v;
            }
            if let Some(v) = tol_cluster {
                tol.cluster = v;
            }
            if let Some(v) = tol_hess {
                tol.hessian = v;
            }
            cmd_count_cubics(real, pairs, trials, seed, out, format, &tol)
        }
    }
}

fn glyph(v: SignValue) -> &'static str {
    match v {
        SignValue::Plus => "1",
        SignValue::Minus => "-1",
        SignValue::Undefined => "X",
    }
}

fn cmd_table(format: Format, check: bool) -> ExitCode {
    match format {
        Format::Text => {
            let mut text = String::new();
            let _ = writeln!(text, "        |        A counts        |        B counts");
            let _ = writeln!(
                text,
                " dim(L) |  k=0   k=1   k=2   k=3 |  k=0   k=1   k=2   k=3"
            );
            let _ = writeln!(
                text,
                "--------+------------------------+------------------------"
            );
            for n in 0..4u32 {
                let _ = write!(text, "{n:>7} |");
                for mode in [CountMode::A, CountMode::B] {
                    for k in 0..4u32 {
                        let _ = write!(text, "{:>5} ", glyph(ab_table_entry(n, k, mode)));
                    }
                    if let CountMode::A = mode {
                        let _ = write!(text, "|");
                    }
                }
                text.truncate(text.trim_end().len());
                let _ = writeln!(text);
            }
            print!("{text}");
        }
        Format::Json => {
            let mut records = Vec::with_capacity(32);
            for mode in [CountMode::A, CountMode::B] {
                for n in 0..4u32 {
                    for k in 0..4u32 {
                        let derived = ab_table_entry(n, k, mode);
                        records.push(serde_json::json!({
                            "dimL": n,
                            "k": k,
                            "mode": match mode { CountMode::A => "A", CountMode::B => "B" },
                            "value": derived.as_int(),
                            "derivationMatches": derived == reference_table_entry(n, k, mode),
                        }));
                    }
                }
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&records).expect("table records serialize")
            );
        }
        Format::Csv => {
            println!("dimL,k,mode,value,derivationMatches");
            for mode in [CountMode::A, CountMode::B] {
                for n in 0..4u32 {
                    for k in 0..4u32 {
                        let derived = ab_table_entry(n, k, mode);
                        println!(
                            "{n},{k},{},{},{}",
                            match mode {
                                CountMode::A => "A",
                                CountMode::B => "B",
                            },
                            glyph(derived),
                            derived == reference_table_entry(n, k, mode)
                        );
                    }
                }
            }
        }
    }

    if check {
        let mut mismatches = 0u32;
        for mode in [CountMode::A, CountMode::B] {
            for n in 0..4u32 {
                for k in 0..4u32 {
                    let derived = ab_table_entry(n, k, mode);
                    let reference = reference_table_entry(n, k, mode);
                    if derived != reference {
                        eprintln!(
                            "cell mismatch at dim(L)={n}, k={k}, mode {}: derived {}, reference {}",
                            match mode {
                                CountMode::A => "A",
                                CountMode::B => "B",
                            },
                            glyph(derived),
                            glyph(reference)
                        );
                        mismatches += 1;
                    }
                }
            }
        }
        if mismatches > 0 {
            return ExitCode::from(EXIT_CHECK_FAILED);
        }
        println!("table check: all 32 cells re-derived and matching");
    }
    ExitCode::SUCCESS
}

fn cmd_cancel(mode: CountMode, n: u32, kmax: u32) -> ExitCode {
    if n == 0 {
        eprintln!("error: --n must be at least 1");
        return ExitCode::from(EXIT_USAGE);
    }
    let report = theorem_invariance_check(mode, n, kmax);
    println!(
        "mode {:?}, dim(L) = {n}, k <= {kmax}: {} splittings checked, {} failing",
        report.mode,
        report.splittings_checked,
        report.failures.len()
    );
    for f in &report.failures {
        println!(
            "  k={}: (k1={}, mu1={}) | (k2={}, mu2={}) fails on {:?}",
            f.k, f.k1, f.mu1, f.k2, f.mu2, f.side
        );
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn cmd_splittings(n: u32, k: u32) -> ExitCode {
    let splits = match admissible_splittings(n, k) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    println!(
        "dim(L) = {n}, k = {k}: {} splittings in the dimension windows",
        splits.len()
    );
    for s in &splits {
        println!(
            "  (k1={}, mu1={:>3}) | (k2={}, mu2={:>3})  attach i={}  {}{}",
            s.k1,
            s.mu1,
            s.k2,
            s.mu2,
            s.i,
            if s.admissible { "admissible" } else { "excluded" },
            if s.is_geometric() { ", geometric" } else { "" }
        );
    }
    ExitCode::SUCCESS
}

fn cmd_verify_signs(kmax: u32) -> ExitCode {
    let mut checked = 0u64;
    let mut failures = 0u64;

    // Reversal against its closed form.
    for k in 1..=kmax as usize {
        let brute = reversal_sign(k).expect("k >= 1");
        let closed = pow_neg_one(((k as i64 - 1) * (k as i64 - 2)) / 2);
        checked += 1;
        if brute != closed {
            eprintln!("reversal sign mismatch at k={k}: brute {brute}, closed {closed}");
            failures += 1;
        }
    }

    // Splitting reorderings against (-1)^{(i-1)(k2+1)}.
    for k in 1..=kmax as usize {
        for k1 in 0..=k {
            let k2 = k - k1;
            for i in 1..=k1 + 1 {
                let s = split_reordering_sign(k, k1, k2, i).expect("sizes add up");
                let closed = pow_neg_one((i as i64 - 1) * (k2 as i64 + 1));
                checked += 1;
                if s.sign != closed {
                    eprintln!(
                        "split reordering mismatch at k={k}, k1={k1}, k2={k2}, i={i}: \
                         brute {}, closed {closed}",
                        s.sign
                    );
                    failures += 1;
                }
            }
        }
    }

    // sigma2 is the reversal that fixes the glued point.
    for k2 in 0..kmax as usize {
        let pair = sigma_pair_signs(k2 + 1, 1, k2, 1).expect("sizes add up");
        let reversal = reversal_sign(k2 + 1).expect("k2 + 1 >= 1");
        checked += 1;
        if pair.sigma2_sign != reversal {
            eprintln!(
                "sigma2 mismatch at k2={k2}: sigma2 {}, reversal {reversal}",
                pair.sigma2_sign
            );
            failures += 1;
        }
    }

    println!("verified {checked} sign identities, {failures} failing");
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn pow_neg_one(e: i64) -> i8 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn cmd_open_closed(n: u32, mu: i64, k: u32, deg_q: Vec<u32>, mc: u32) -> ExitCode {
    let problem = match OpenClosedProblem::new(n, mu, k, deg_q, mc) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let deg_sum: i64 = problem.deg_q.iter().map(|&d| i64::from(d)).sum();
    let residual = i64::from(problem.n) + problem.mu + i64::from(problem.k)
        - i64::from(problem.k) * i64::from(problem.n)
        - deg_sum
        + problem.delta();
    let dim_ok = open_closed_dimension_check(&problem);
    let bound_ok = open_closed_marked_point_bound(problem.l, problem.mu, problem.minimal_chern);
    println!(
        "n={n}, mu={mu}, k={k}, l={}, sum deg Q = {deg_sum}, delta = {}",
        problem.l,
        problem.delta()
    );
    println!(
        "dimension residual: {residual} ({})",
        if dim_ok { "zero-dimensional" } else { "not zero-dimensional" }
    );
    println!(
        "marked-point bound l <= min((mu-2)/2, {}): {}",
        problem.minimal_chern,
        if bound_ok { "satisfied" } else { "violated" }
    );
    if dim_ok && bound_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn cmd_count_cubics(
    r: u32,
    c: u32,
    trials: u32,
    seed: u64,
    out: Option<PathBuf>,
    format: Format,
    tol: &Tolerances,
) -> ExitCode {
    if r + 2 * c != 8 {
        eprintln!("error: point conditions must satisfy real + 2*pairs = 8, got {r} + 2*{c}");
        return ExitCode::from(EXIT_USAGE);
    }
    if r == 0 {
        eprintln!("error: at least one real point is required");
        return ExitCode::from(EXIT_USAGE);
    }

    let summary = match invariance_experiment(seed, r, c, trials, tol) {
        Ok(s) => s,
        Err(PencilError::TooFewTrials { min, got }) => {
            eprintln!("error: need at least {min} trials, got {got}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(e @ PencilError::GenericityExhausted { .. }) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_NON_GENERIC);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CHECK_FAILED);
        }
    };

    let json_path = out.unwrap_or_else(|| {
        let dir = std::env::var_os("DISC_COUNT_OUT_DIR")
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from("."));
        dir.join(format!("count-cubics-r{r}c{c}-seed{seed}.json"))
    });
    let csv_path = json_path.with_extension("csv");
    let json = serde_json::to_string_pretty(&summary).expect("summary serializes");
    if let Err(e) = std::fs::write(&json_path, format!("{json}\n")) {
        eprintln!("error: cannot write {}: {e}", json_path.display());
        return ExitCode::from(EXIT_CHECK_FAILED);
    }
    if let Err(e) = std::fs::write(&csv_path, csv_summary(&summary)) {
        eprintln!("error: cannot write {}: {e}", csv_path.display());
        return ExitCode::from(EXIT_CHECK_FAILED);
    }

    match format {
        Format::Text => {
            println!("configuration: {r} real points, {c} conjugate pairs, seed {seed}");
            for t in &summary.trials {
                println!(
                    "  trial seed {}: signed count {:>3}, {} complex members, {} resamples",
                    t.trial_seed, t.signed_count, t.complex_count, t.resamples
                );
            }
            match summary.common_value {
                Some(v) if summary.pass => {
                    println!("signed count {v} is constant across {trials} trials");
                }
                _ => println!("signed counts DISAGREE across trials"),
            }
            println!("report: {}", json_path.display());
        }
        Format::Json => println!("{json}"),
        Format::Csv => print!("{}", csv_summary(&summary)),
    }

    if summary.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn csv_summary(summary: &ExperimentSummary) -> String {
    let mut csv = String::from("trialSeed,signedCount,complexCount,pass\n");
    for t in &summary.trials {
        let trial_pass = t.complex_count == 12 && summary.common_value == Some(t.signed_count);
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            t.trial_seed, t.signed_count, t.complex_count, trial_pass
        );
    }
    csv
}
