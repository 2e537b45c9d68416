//! Command-line front end for the nmpauli library.
//!
//! Subcommands:
//! - `figure <id>` — emit one curve's worth of figure data (CSV or JSON);
//! - `measure` — both non-Markovianity measures for one dephasing channel;
//! - `check` — CP/NCP verdict for one intermediate window;
//! - `sweep` — measure reports over an α grid.
//!
//! Exit codes: 0 success (and CP verdicts), 1 usage or I/O error,
//! 2 NCP verdict, 3 singular window.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use nmpauli::channels::{alpha_pm, kappa_toy, ChannelFamily, ChannelParams, TimeParam};
use nmpauli::dynmap::{
    channel_intermediate, choi, intermediate_kraus, lambda_closed_form, IntermediateWindow,
};
use nmpauli::measures::{n_blp, rate_profile, trace_distance_pair, MeasureReport};
use nmpauli::pauli::Sign;
use nmpauli::Error as LibError;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

const EXIT_USAGE: u8 = 1;
const EXIT_NCP: u8 = 2;
const EXIT_SINGULAR: u8 = 3;

/// Default θ-grid resolution behind the BLP optimization.
const THETA_GRID: usize = 201;

#[derive(Parser)]
#[command(
    name = "nmpauli",
    version,
    about = "Non-Markovian Pauli channel toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one figure's data to a file or stdout
    Figure(FigureArgs),
    /// Report both non-Markovianity measures for a dephasing channel
    Measure(MeasureArgs),
    /// CP/NCP verdict for an intermediate window
    Check(CheckArgs),
    /// Measure reports over an alpha grid
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FigureId {
    /// Intermediate-map Choi eigenvalues, window opening below the crossover
    Crossover,
    /// Same curves with the window opening past the crossover (NCP region)
    NcpWindow,
    /// Canonical decoherence rate with its singularity
    GammaRate,
    /// Normalized HCLA and BLP measures as functions of alpha
    MeasuresVsAlpha,
    /// Equatorial trace distance per alpha series
    TraceDistance,
    /// Oscillating toy mixing parameter
    ToyKappa,
}

impl FigureId {
    fn label(self) -> &'static str {
        match self {
            FigureId::Crossover => "crossover",
            FigureId::NcpWindow => "ncp-window",
            FigureId::GammaRate => "gamma-rate",
            FigureId::MeasuresVsAlpha => "measures-vs-alpha",
            FigureId::TraceDistance => "trace-distance",
            FigureId::ToyKappa => "toy-kappa",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Dephasing,
    Depolarizing,
    Toysine,
}

#[derive(Args)]
struct FigureArgs {
    #[arg(value_enum)]
    id: FigureId,
    /// Channel strength; repeat the flag for multi-series figures
    #[arg(long = "alpha")]
    alpha: Vec<f64>,
    /// Toy-channel strength
    #[arg(long, default_value_t = 0.5)]
    eta: f64,
    /// Toy-channel frequency
    #[arg(long, default_value_t = 50.0)]
    omega: f64,
    /// Lower window edge p_lo (defaults depend on the figure)
    #[arg(long = "p-lo")]
    p_lo: Option<f64>,
    /// Upper sweep limit (defaults to 1/2)
    #[arg(long = "p-hi")]
    p_hi: Option<f64>,
    /// Points per curve
    #[arg(long, default_value_t = 500)]
    grid: usize,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct MeasureArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long, value_enum, default_value_t = Family::Dephasing)]
    family: Family,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, default_value_t = 0.3)]
    alpha: f64,
    #[arg(long, value_enum, default_value_t = Family::Dephasing)]
    family: Family,
    #[arg(long, default_value_t = 0.5)]
    eta: f64,
    #[arg(long, default_value_t = 50.0)]
    omega: f64,
    #[arg(long = "p-lo")]
    p_lo: f64,
    #[arg(long = "p-hi")]
    p_hi: f64,
}

#[derive(Args)]
struct SweepArgs {
    /// Number of alpha grid points over [0.05, 1.0]
    #[arg(long, default_value_t = 20)]
    grid: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

enum AppError {
    Lib(LibError),
    Io(io::Error),
    Usage(String),
}

impl From<LibError> for AppError {
    fn from(e: LibError) -> Self {
        AppError::Lib(e)
    }
}

impl From<io::Error> for AppError {
    fn from(e: io::Error) -> Self {
        AppError::Io(e)
    }
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Lib(LibError::MapNonInvertible { .. })
            | AppError::Lib(LibError::SingularWindow { .. }) => EXIT_SINGULAR,
            _ => EXIT_USAGE,
        }
    }

    fn message(&self) -> String {
        match self {
            AppError::Lib(e) => e.to_string(),
            AppError::Io(e) => e.to_string(),
            AppError::Usage(msg) => msg.clone(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Figure(args) => cmd_figure(args),
        Command::Measure(args) => cmd_measure(args),
        Command::Check(args) => cmd_check(args),
        Command::Sweep(args) => cmd_sweep(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

/// One emitted table line: data values, or a deliberate blank separating
/// curve branches across a singularity.
enum Row {
    Data(Vec<f64>),
    Gap,
}

struct Table {
    meta: Vec<(String, String)>,
    header: Vec<String>,
    rows: Vec<Row>,
}

/// 12-significant-digit scientific formatting; fixed so that repeated
/// runs produce byte-identical data files.
fn fmt_sig(x: f64) -> String {
    format!("{x:.11e}")
}

fn write_csv(w: &mut dyn Write, table: &Table) -> io::Result<()> {
    for (key, value) in &table.meta {
        writeln!(w, "# {key}: {value}")?;
    }
    writeln!(w, "{}", table.header.join(","))?;
    for row in &table.rows {
        match row {
            Row::Data(values) => {
                let cells: Vec<String> = values.iter().map(|&x| fmt_sig(x)).collect();
                writeln!(w, "{}", cells.join(","))?;
            }
            Row::Gap => writeln!(w)?,
        }
    }
    Ok(())
}

fn write_json(w: &mut dyn Write, table: &Table) -> io::Result<()> {
    let mut meta = serde_json::Map::new();
    for (key, value) in &table.meta {
        // Numeric metadata stays numeric in JSON.
        let parsed = value
            .parse::<f64>()
            .map(|x| serde_json::json!(x))
            .unwrap_or_else(|_| serde_json::json!(value));
        meta.insert(key.replace(' ', "_"), parsed);
    }
    let rows: Vec<serde_json::Value> = table
        .rows
        .iter()
        .filter_map(|row| match row {
            Row::Data(values) => {
                let mut record = serde_json::Map::new();
                for (name, &x) in table.header.iter().zip(values) {
                    record.insert(name.clone(), serde_json::json!(x));
                }
                Some(serde_json::Value::Object(record))
            }
            Row::Gap => None,
        })
        .collect();
    let doc = serde_json::json!({ "metadata": meta, "rows": rows });
    writeln!(w, "{}", serde_json::to_string_pretty(&doc)?)
}

fn emit(out: Option<&PathBuf>, format: Format, table: &Table) -> io::Result<()> {
    let mut sink: Box<dyn Write> = match out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    match format {
        Format::Csv => write_csv(&mut sink, table),
        Format::Json => write_json(&mut sink, table),
    }
}

fn base_meta(figure: FigureId) -> Vec<(String, String)> {
    vec![
        ("tool".into(), "nmpauli".into()),
        ("version".into(), env!("CARGO_PKG_VERSION").into()),
        ("figure".into(), figure.label().into()),
    ]
}

fn single_alpha(args: &FigureArgs, default: f64) -> Result<f64, AppError> {
    match args.alpha.len() {
        0 => Ok(default),
        1 => Ok(args.alpha[0]),
        n => Err(AppError::Usage(format!(
            "figure {} takes a single --alpha, got {n}",
            args.id.label()
        ))),
    }
}

fn grid_point(lo: f64, hi: f64, i: usize, n: usize) -> f64 {
    if n <= 1 {
        return lo;
    }
    (lo + (hi - lo) * i as f64 / (n - 1) as f64).clamp(lo.min(hi), hi.max(lo))
}

fn cmd_figure(args: FigureArgs) -> Result<u8, AppError> {
    if args.grid < 2 {
        return Err(AppError::Usage(format!(
            "--grid must be at least 2, got {}",
            args.grid
        )));
    }
    let table = match args.id {
        FigureId::Crossover => eigenvalue_figure(&args, -0.2)?,
        FigureId::NcpWindow => eigenvalue_figure(&args, 0.03)?,
        FigureId::GammaRate => gamma_figure(&args)?,
        FigureId::MeasuresVsAlpha => measures_figure(&args)?,
        FigureId::TraceDistance => trace_distance_figure(&args)?,
        FigureId::ToyKappa => toy_figure(&args)?,
    };
    emit(args.out.as_ref(), args.format, &table)?;
    Ok(0)
}

/// Figures 1 and 2: both Choi eigenvalues of the intermediate map as the
/// upper window edge sweeps from p_lo to 1/2. `offset` places the default
/// lower edge relative to the crossover.
fn eigenvalue_figure(args: &FigureArgs, offset: f64) -> Result<Table, AppError> {
    let alpha = single_alpha(args, 0.3)?;
    let (a_minus, _) = alpha_pm(alpha)?;
    let p_lo = args.p_lo.unwrap_or(a_minus + offset);
    TimeParam::new(p_lo)?;
    let sweep_to = args.p_hi.unwrap_or(0.5);
    TimeParam::new(sweep_to)?;

    let mut rows = Vec::with_capacity(args.grid);
    for i in 0..args.grid {
        let p_hi = grid_point(p_lo, sweep_to, i, args.grid);
        // A lower edge on alpha_minus makes both eigenvalues diverge;
        // lambda_closed_form reports that as a singular window.
        let (lambda_i, lambda_z) = lambda_closed_form(alpha, p_hi, p_lo)?;
        rows.push(Row::Data(vec![p_hi, lambda_i, lambda_z]));
    }
    let mut meta = base_meta(args.id);
    meta.push(("family".into(), "dephasing".into()));
    meta.push(("alpha".into(), format!("{alpha}")));
    meta.push(("alpha minus".into(), fmt_sig(a_minus)));
    meta.push(("p lo".into(), fmt_sig(p_lo)));
    meta.push(("grid".into(), format!("{}", args.grid)));
    Ok(Table {
        meta,
        header: vec!["p_star_hi".into(), "lambda_i".into(), "lambda_z".into()],
        rows,
    })
}

/// Decoherence rate γ(p) with a blank gap row where the curve crosses its
/// singularity.
fn gamma_figure(args: &FigureArgs) -> Result<Table, AppError> {
    let alpha = single_alpha(args, 0.7)?;
    ChannelParams::dephasing(alpha)?;
    let profile = rate_profile(alpha, args.grid)?;
    let mut rows = Vec::with_capacity(profile.samples.len() + 1);
    let mut previous_p: Option<f64> = None;
    for sample in &profile.samples {
        if let (Some(singularity), Some(prev)) = (profile.singularity, previous_p) {
            if prev < singularity && sample.p > singularity {
                rows.push(Row::Gap);
            }
        }
        rows.push(Row::Data(vec![sample.p, sample.gamma]));
        previous_p = Some(sample.p);
    }
    let mut meta = base_meta(args.id);
    meta.push(("family".into(), "dephasing".into()));
    meta.push(("alpha".into(), format!("{alpha}")));
    if let Some(singularity) = profile.singularity {
        meta.push(("alpha minus".into(), fmt_sig(singularity)));
    }
    meta.push(("grid".into(), format!("{}", args.grid)));
    Ok(Table {
        meta,
        header: vec!["p".into(), "gamma".into()],
        rows,
    })
}

/// Both measures over an α grid.
fn measures_figure(args: &FigureArgs) -> Result<Table, AppError> {
    if !args.alpha.is_empty() {
        return Err(AppError::Usage(
            "figure measures-vs-alpha sweeps alpha itself; drop --alpha".into(),
        ));
    }
    let mut rows = Vec::with_capacity(args.grid);
    for i in 0..args.grid {
        let alpha = grid_point(0.05, 1.0, i, args.grid);
        let report = n_blp(alpha, THETA_GRID)?;
        rows.push(Row::Data(vec![
            alpha,
            report.n_hcla_normalized,
            report.n_blp,
        ]));
    }
    let mut meta = base_meta(args.id);
    meta.push(("family".into(), "dephasing".into()));
    meta.push(("grid".into(), format!("{}", args.grid)));
    Ok(Table {
        meta,
        header: vec!["alpha".into(), "n_hcla_normalized".into(), "n_blp".into()],
        rows,
    })
}

/// Equatorial trace distance, one column per α series.
fn trace_distance_figure(args: &FigureArgs) -> Result<Table, AppError> {
    let alphas = if args.alpha.is_empty() {
        vec![0.0, 0.5, 0.9]
    } else {
        args.alpha.clone()
    };
    for &alpha in &alphas {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(AppError::Usage(format!(
                "--alpha must lie in [0, 1], got {alpha}"
            )));
        }
    }
    let mut header = vec!["p".to_string()];
    header.extend(alphas.iter().map(|a| format!("td_alpha_{a}")));
    let mut rows = Vec::with_capacity(args.grid);
    for i in 0..args.grid {
        let p = grid_point(0.0, 0.5, i, args.grid);
        let mut values = vec![p];
        values.extend(
            alphas
                .iter()
                .map(|&alpha| trace_distance_pair(alpha, p, std::f64::consts::FRAC_PI_2)),
        );
        rows.push(Row::Data(values));
    }
    let mut meta = base_meta(args.id);
    meta.push(("family".into(), "dephasing".into()));
    meta.push((
        "alphas".into(),
        alphas
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    ));
    meta.push(("theta".into(), "pi/2".into()));
    meta.push(("grid".into(), format!("{}", args.grid)));
    Ok(Table { meta, header, rows })
}

/// κ(p) of the toy channel.
fn toy_figure(args: &FigureArgs) -> Result<Table, AppError> {
    let params = ChannelParams::toy_sine(args.eta, args.omega)?;
    let mut rows = Vec::with_capacity(args.grid);
    for i in 0..args.grid {
        let p = grid_point(0.0, 0.5, i, args.grid);
        rows.push(Row::Data(vec![
            p,
            kappa_toy(TimeParam::new(p)?, params.eta(), params.omega()),
        ]));
    }
    let mut meta = base_meta(args.id);
    meta.push(("family".into(), "toysine".into()));
    meta.push(("eta".into(), format!("{}", args.eta)));
    meta.push(("omega".into(), format!("{}", args.omega)));
    meta.push(("grid".into(), format!("{}", args.grid)));
    Ok(Table {
        meta,
        header: vec!["p".into(), "kappa".into()],
        rows,
    })
}

fn report_record(report: &MeasureReport) -> String {
    format!(
        "RECORD alpha={} alpha_minus={} n_hcla={} n_blp={} theta_opt={} witness_lo={} witness_hi={}",
        fmt_sig(report.alpha),
        fmt_sig(report.alpha_minus),
        fmt_sig(report.n_hcla_normalized),
        fmt_sig(report.n_blp),
        fmt_sig(report.theta_opt),
        fmt_sig(report.witness_interval.0),
        fmt_sig(report.witness_interval.1),
    )
}

fn cmd_measure(args: MeasureArgs) -> Result<u8, AppError> {
    if args.family != Family::Dephasing {
        return Err(AppError::Usage(
            "closed-form rate and trace-distance measures are defined for the \
             dephasing family only; use `check` for other families"
                .into(),
        ));
    }
    ChannelParams::dephasing(args.alpha)?;
    let report = n_blp(args.alpha, THETA_GRID)?;
    println!("family:        dephasing");
    println!("alpha:         {}", args.alpha);
    if args.alpha == 0.0 {
        println!("note:          Markovian (empty witness interval, all measures vanish)");
    } else {
        println!("alpha_minus:   {:.6}", report.alpha_minus);
    }
    println!("N'_HCLA:       {:.6}", report.n_hcla_normalized);
    println!("N_BLP:         {:.6}", report.n_blp);
    println!("theta_opt:     {:.6}", report.theta_opt);
    println!(
        "witness:       ({:.6}, {:.6}]",
        report.witness_interval.0, report.witness_interval.1
    );
    println!("{}", report_record(&report));
    Ok(0)
}

fn cmd_check(args: CheckArgs) -> Result<u8, AppError> {
    let params = match args.family {
        Family::Dephasing => ChannelParams::dephasing(args.alpha)?,
        Family::Depolarizing => ChannelParams::depolarizing(args.alpha)?,
        Family::Toysine => ChannelParams::toy_sine(args.eta, args.omega)?,
    };
    let window = IntermediateWindow::from_values(args.p_lo, args.p_hi)?;
    let intermediate = channel_intermediate(&params, window).map_err(|e| match e {
        // Name the singularity in the diagnostic when the family has one.
        LibError::MapNonInvertible { p } if params.family() == ChannelFamily::Dephasing => {
            match alpha_pm(args.alpha) {
                Ok((a_minus, _)) => AppError::Lib(LibError::SingularWindow {
                    p_lo: p,
                    alpha_minus: a_minus,
                }),
                Err(_) => AppError::Lib(LibError::MapNonInvertible { p }),
            }
        }
        other => AppError::Lib(other),
    })?;
    let choi_matrix = choi(&intermediate);
    let eigs = choi_matrix.eigenvalues();
    let kraus = intermediate_kraus(&choi_matrix)?;

    println!("family:      {}", params.family().label());
    match params.family() {
        ChannelFamily::ToySine => {
            println!("eta:         {}", params.eta());
            println!("omega:       {}", params.omega());
        }
        _ => println!("alpha:       {}", params.alpha()),
    }
    println!("window:      [{}, {}]", args.p_lo, args.p_hi);
    println!(
        "choi eigs:   {}",
        eigs.iter()
            .map(|&e| fmt_sig(e))
            .collect::<Vec<_>>()
            .join(" ")
    );
    for element in kraus.elements() {
        let sign = match element.sign {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        };
        println!(
            "kraus:       {sign} * {} * {}",
            fmt_sig(element.coeff),
            element.pauli.label().to_uppercase()
        );
    }
    if choi_matrix.is_cp() {
        println!("verdict:     CP");
        Ok(0)
    } else {
        println!("verdict:     NCP (non-Markovianity witnessed)");
        Ok(EXIT_NCP)
    }
}

fn cmd_sweep(args: SweepArgs) -> Result<u8, AppError> {
    if args.grid < 2 {
        return Err(AppError::Usage(format!(
            "--grid must be at least 2, got {}",
            args.grid
        )));
    }
    let mut rows = Vec::with_capacity(args.grid);
    for i in 0..args.grid {
        let alpha = grid_point(0.05, 1.0, i, args.grid);
        let report = n_blp(alpha, THETA_GRID)?;
        rows.push(Row::Data(vec![
            report.alpha,
            report.alpha_minus,
            report.n_hcla_normalized,
            report.n_blp,
            report.theta_opt,
            report.witness_interval.0,
            report.witness_interval.1,
        ]));
    }
    let timestamp = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let table = Table {
        meta: vec![
            ("tool".into(), "nmpauli".into()),
            ("version".into(), env!("CARGO_PKG_VERSION").into()),
            ("sweep".into(), "alpha 0.05..1.0".into()),
            ("family".into(), "dephasing".into()),
            ("grid".into(), format!("{}", args.grid)),
            ("timestamp".into(), format!("{timestamp}")),
        ],
        header: vec![
            "alpha".into(),
            "alpha_minus".into(),
            "n_hcla_normalized".into(),
            "n_blp".into(),
            "theta_opt".into(),
            "witness_lo".into(),
            "witness_hi".into(),
        ],
        rows,
    };
    emit(args.out.as_ref(), args.format, &table)?;
    Ok(0)
}
