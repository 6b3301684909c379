//! Command-line front end.
//!
//! Subcommands: `exact`, `constants`, `asym`, `saddle`, `compare`, `plot`.
//! Exit codes: 0 on success, 1 on domain or validation errors, 2 on internal
//! or numeric failures. Output is deterministic: the same arguments and cache
//! state produce byte-identical stdout and files.

use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::analysis::{self, AnalysisError, ComparisonRow};
use crate::asymptotics::{self, AsymptoticsError};
use crate::cache::{self, CacheError};
use crate::constants::{constants_bundle, ConstantsError};
use crate::counts::{self, CountsError, PartitionKind, PartitionTable};
use crate::primes::PrimesError;
use crate::saddle::{self, SaddleError};

#[derive(Debug)]
pub enum CliError {
    /// Bad input, bad path, malformed cache: exit code 1.
    Validation(String),
    /// Numeric or I/O failure after validation: exit code 2.
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Internal(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<PrimesError> for CliError {
    fn from(e: PrimesError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<CountsError> for CliError {
    fn from(e: CountsError) -> Self {
        match e {
            CountsError::TableTooLarge(_) => CliError::Internal(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<ConstantsError> for CliError {
    fn from(e: ConstantsError) -> Self {
        match e {
            ConstantsError::ToleranceDomain(_) => CliError::Validation(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<AsymptoticsError> for CliError {
    fn from(e: AsymptoticsError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<SaddleError> for CliError {
    fn from(e: SaddleError) -> Self {
        match e {
            SaddleError::BetaNotPositive(_)
            | SaddleError::BetaOutOfUnitRange(_)
            | SaddleError::EnergyDomain(_)
            | SaddleError::ToleranceDomain(_) => CliError::Validation(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<CacheError> for CliError {
    fn from(e: CacheError) -> Self {
        CliError::Validation(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "prime-partitions",
    version,
    about = "Exact and asymptotic counting of integer partitions into primes"
)]
struct Cli {
    /// Report table-build progress on stderr.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    /// Distinct primes (each prime at most once).
    Distinct,
    /// Unrestricted repetitions.
    All,
}

impl From<KindArg> for PartitionKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Distinct => PartitionKind::DistinctPrimes,
            KindArg::All => PartitionKind::UnrestrictedPrimes,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    /// Leading-order exponential.
    Q0,
    /// Corrected distinct-prime form.
    Qas,
    /// Corrected unrestricted-prime form.
    Pas,
}

#[derive(Subcommand)]
enum Command {
    /// Print an exact counting table as space-separated decimal integers.
    Exact {
        #[arg(long, value_enum, default_value_t = KindArg::Distinct)]
        kind: KindArg,
        #[arg(long)]
        nmax: usize,
        /// Table cache file: read when present and large enough, written
        /// otherwise.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Print the constants bundle, aligned and as CSV.
    Constants,
    /// Evaluate an asymptotic counting form at n.
    Asym {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum)]
        form: FormArg,
    },
    /// Solve the saddle-point equation at energy n.
    Saddle {
        #[arg(long)]
        n: u64,
        /// Residual and truncation tolerance.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Tabulate exact vs asymptotic counts; report crossing and error trend.
    Compare {
        #[arg(long, default_value_t = 2)]
        nmin: usize,
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 1)]
        step: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Distinct)]
        kind: KindArg,
        /// Write the comparison rows to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Emit prebaked figure data (and optionally a gnuplot script).
    Plot {
        /// 1: counts to 2000; 2: counts on [20000, 100000]; 3: relative
        /// difference vs 1/n on [20000, 100000].
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        figure: u8,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        script: Option<PathBuf>,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

/// Parse arguments, dispatch, and translate errors to exit codes.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Exact { kind, nmax, cache } => {
            cmd_exact(kind.into(), nmax, cache.as_deref(), cli.verbose)
        }
        Command::Constants => cmd_constants(),
        Command::Asym { n, form } => cmd_asym(n, form),
        Command::Saddle { n, tol } => cmd_saddle(n, tol),
        Command::Compare {
            nmin,
            nmax,
            step,
            kind,
            csv,
            cache,
        } => cmd_compare(
            nmin,
            nmax,
            step,
            kind.into(),
            csv.as_deref(),
            cache.as_deref(),
            cli.verbose,
        ),
        Command::Plot {
            figure,
            out,
            script,
            cache,
        } => cmd_plot(figure, &out, script.as_deref(), cache.as_deref(), cli.verbose),
    }
}

/// Fetch a table from the cache when possible, otherwise build it (and
/// refresh the cache). A cached table of the right kind that is at least as
/// large as requested is truncated to the requested prefix, which is
/// identical to a fresh build.
fn obtain_table(
    kind: PartitionKind,
    n_max: usize,
    cache_path: Option<&Path>,
    verbose: bool,
) -> Result<PartitionTable, CliError> {
    if let Some(path) = cache_path {
        if path.exists() {
            let cached = cache::load_table(path)?;
            if cached.kind() != kind {
                return Err(CliError::Validation(format!(
                    "cache {} holds kind={}, requested kind={}",
                    path.display(),
                    cached.kind().label(),
                    kind.label()
                )));
            }
            if cached.n_max() >= n_max {
                return Ok(cached.prefix(n_max)?);
            }
            if verbose {
                eprintln!(
                    "cache {} only reaches n_max={}, rebuilding to {}",
                    path.display(),
                    cached.n_max(),
                    n_max
                );
            }
        }
        let table = build_table(kind, n_max, verbose)?;
        cache::save_table(&table, path)?;
        return Ok(table);
    }
    build_table(kind, n_max, verbose)
}

fn build_table(
    kind: PartitionKind,
    n_max: usize,
    verbose: bool,
) -> Result<PartitionTable, CliError> {
    let table = if verbose {
        let mut report = |decade: usize| eprintln!("counts final through n={decade}");
        counts::count_table(kind, n_max, Some(&mut report))?
    } else {
        counts::count_table(kind, n_max, None)?
    };
    Ok(table)
}

fn cmd_exact(
    kind: PartitionKind,
    n_max: usize,
    cache_path: Option<&Path>,
    verbose: bool,
) -> Result<(), CliError> {
    let table = obtain_table(kind, n_max, cache_path, verbose)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let write = |out: &mut BufWriter<_>| -> io::Result<()> {
        for (n, count) in table.counts().iter().enumerate() {
            if n > 0 {
                write!(out, " ")?;
            }
            write!(out, "{count}")?;
        }
        writeln!(out)
    };
    write(&mut out).map_err(|e| CliError::Internal(format!("stdout: {e}")))?;
    out.flush().map_err(|e| CliError::Internal(format!("stdout: {e}")))?;
    Ok(())
}

fn cmd_constants() -> Result<(), CliError> {
    let b = constants_bundle()?;
    let named = [
        ("gamma", b.gamma),
        ("alt_log_series", b.alt_log_series),
        ("log_series", b.log_series),
        ("F1", b.fermi_c1),
        ("F2", b.fermi_c2),
        ("f1", b.bose_c1),
        ("f2", b.bose_c2),
        ("bF", b.b_fermi),
        ("bB", b.b_bose),
    ];
    for (name, value) in named {
        println!("{name:<16}{value:>18.10}");
    }
    println!("{:<16}{:>18.3e}", "err_bound", b.err_bound);
    println!();
    println!("name,value,error_bound");
    for (name, value) in named {
        println!("{name},{value:.16e},{:.3e}", b.err_bound);
    }
    Ok(())
}

fn cmd_asym(n: u64, form: FormArg) -> Result<(), CliError> {
    let x = n as f64;
    let ln_value = match form {
        FormArg::Q0 => asymptotics::ln_q0(x)?,
        FormArg::Qas => asymptotics::ln_q_as(x, &constants_bundle()?)?,
        FormArg::Pas => asymptotics::ln_p_as(x, &constants_bundle()?)?,
    };
    println!("ln_value {ln_value:.12}");
    println!("value {}", asymptotics::value_of(ln_value));
    Ok(())
}

fn cmd_saddle(n: u64, tol: f64) -> Result<(), CliError> {
    let sol = saddle::solve_saddle(n as f64, tol)?;
    println!("beta0 {:.12}", sol.beta0);
    println!("entropy {:.10}", sol.entropy);
    println!("s2 {:.6e}", sol.s2);
    println!("ln_rho {:.10}", sol.ln_rho);
    println!("residual {:.3e}", sol.residual);
    println!("iterations {}", sol.iterations);
    Ok(())
}

fn cmd_compare(
    n_min: usize,
    n_max: usize,
    step: usize,
    kind: PartitionKind,
    csv: Option<&Path>,
    cache_path: Option<&Path>,
    verbose: bool,
) -> Result<(), CliError> {
    let table = obtain_table(kind, n_max, cache_path, verbose)?;
    let bundle = constants_bundle()?;
    let cmp = analysis::build_comparison(&table, n_min, n_max, step, &bundle)?;
    if let Some(path) = csv {
        write_comparison_csv(&cmp.rows, path)?;
    }
    println!("rows {}", cmp.rows.len());
    println!("skipped {}", cmp.skipped_zero);
    if cmp.rows.len() >= 2 {
        match analysis::find_crossing(&cmp.rows)? {
            Some(report) => println!("crossing {} {}", report.bracket_low, report.bracket_high),
            None => println!("crossing none"),
        }
    }
    if cmp.rows.len() >= 3 {
        let (max_abs_rel, trend) = analysis::summarize_error(&cmp.rows)?;
        println!("max_abs_rel {max_abs_rel:.6e}");
        println!("trend {}", trend.label());
    }
    Ok(())
}

/// Figure presets: sampling ranges for the emitted data files.
fn figure_range(figure: u8) -> (usize, usize, usize, PlotStyle) {
    match figure {
        1 => (2, 2_000, 1, PlotStyle::LogCounts),
        2 => (20_000, 100_000, 100, PlotStyle::LogCounts),
        _ => (20_000, 100_000, 100, PlotStyle::RelDiffVsReciprocal),
    }
}

fn cmd_plot(
    figure: u8,
    out: &Path,
    script: Option<&Path>,
    cache_path: Option<&Path>,
    verbose: bool,
) -> Result<(), CliError> {
    let (n_min, n_max, step, style) = figure_range(figure);
    let table = obtain_table(PartitionKind::DistinctPrimes, n_max, cache_path, verbose)?;
    let bundle = constants_bundle()?;
    let cmp = analysis::build_comparison(&table, n_min, n_max, step, &bundle)?;
    emit_plot_data(&cmp.rows, out, script, style)?;
    println!("wrote {}", out.display());
    if let Some(path) = script {
        println!("wrote {}", path.display());
    }
    Ok(())
}

/// Which rendering a generated gnuplot script asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotStyle {
    /// Log-counts against n: exact dots, leading-order and corrected lines.
    LogCounts,
    /// Relative difference against 1/n.
    RelDiffVsReciprocal,
}

/// Columns: `n,ln_exact,ln_q0,ln_qas,rel_diff`, floats with 12 significant
/// digits, LF endings, written atomically (no partial file on failure).
fn write_comparison_csv(rows: &[ComparisonRow], path: &Path) -> Result<(), CliError> {
    write_atomic(path, |out| {
        writeln!(out, "n,ln_exact,ln_q0,ln_qas,rel_diff")?;
        for r in rows {
            writeln!(
                out,
                "{},{:.11e},{:.11e},{:.11e},{:.11e}",
                r.n, r.ln_exact, r.ln_q0, r.ln_qas, r.rel_diff
            )?;
        }
        Ok(())
    })
}

/// Write comparison rows as CSV plus an optional gnuplot script rendering
/// them in the requested style.
pub fn emit_plot_data(
    rows: &[ComparisonRow],
    out_path: &Path,
    script: Option<&Path>,
    style: PlotStyle,
) -> Result<(), CliError> {
    if rows.is_empty() {
        return Err(CliError::Validation("no rows to emit".into()));
    }
    write_comparison_csv(rows, out_path)?;
    if let Some(script_path) = script {
        let data_name = out_path
            .file_name()
            .map(|f| f.to_string_lossy().into_owned())
            .unwrap_or_else(|| out_path.display().to_string());
        let body = match style {
            PlotStyle::LogCounts => format!(
                "set datafile separator \",\"\n\
                 set key left top\n\
                 set xlabel \"n\"\n\
                 set ylabel \"ln count\"\n\
                 plot \"{data_name}\" using 1:2 with points pointtype 7 pointsize 0.3 title \"exact\", \\\n\
                 \t\"{data_name}\" using 1:3 with lines dashtype 2 title \"leading order\", \\\n\
                 \t\"{data_name}\" using 1:4 with lines title \"corrected\"\n"
            ),
            PlotStyle::RelDiffVsReciprocal => format!(
                "set datafile separator \",\"\n\
                 set key right bottom\n\
                 set xlabel \"1/n\"\n\
                 set ylabel \"relative log difference\"\n\
                 plot \"{data_name}\" using (1/$1):5 with lines title \"corrected vs exact\", \\\n\
                 \t0 with lines dashtype 3 notitle\n"
            ),
        };
        write_atomic(script_path, |out| out.write_all(body.as_bytes()))?;
    }
    Ok(())
}

/// Create-and-rename file write. Failure to create the temporary file is a
/// validation error (bad path, missing permission) and leaves nothing
/// behind; failures after that are internal errors and the temporary file is
/// removed.
fn write_atomic(
    path: &Path,
    body: impl FnOnce(&mut BufWriter<fs::File>) -> io::Result<()>,
) -> Result<(), CliError> {
    let tmp = path.with_extension("tmp~");
    let file = fs::File::create(&tmp).map_err(|e| {
        CliError::Validation(format!("cannot create {}: {e}", tmp.display()))
    })?;
    let mut out = BufWriter::new(file);
    let written = body(&mut out).and_then(|()| out.flush());
    if let Err(e) = written {
        let _ = fs::remove_file(&tmp);
        return Err(CliError::Internal(format!(
            "writing {} failed: {e}",
            tmp.display()
        )));
    }
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        CliError::Internal(format!("renaming over {} failed: {e}", path.display()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_kinds_map_to_exit_codes() {
        assert_eq!(CliError::Validation("x".into()).exit_code(), 1);
        assert_eq!(CliError::Internal("x".into()).exit_code(), 2);
        let e: CliError = SaddleError::EnergyDomain(1.0).into();
        assert_eq!(e.exit_code(), 1);
        let e: CliError = SaddleError::Quadrature {
            a: 0.0,
            b: 1.0,
            tol: 1e-9,
        }
        .into();
        assert_eq!(e.exit_code(), 2);
        let e: CliError = CountsError::TableTooLarge(usize::MAX).into();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn figure_presets() {
        assert_eq!(figure_range(1), (2, 2_000, 1, PlotStyle::LogCounts));
        assert_eq!(figure_range(2), (20_000, 100_000, 100, PlotStyle::LogCounts));
        assert_eq!(
            figure_range(3),
            (20_000, 100_000, 100, PlotStyle::RelDiffVsReciprocal)
        );
    }
}
