//! The `proca` command line: JSON configuration in, CSV or JSON out.
//!
//! Exit codes: 0 success, 1 failed invariant, 2 invalid input, 3 I/O failure.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use proca_core::example::{eigenvalue_map, integrate_flowline, ExampleParams, FlowLine, GridSpec};
use proca_core::field::FieldConfigSpec;
use proca_core::spin::{eigenmodes_w0, eigenmodes_w3, SpinKind, SpinSpectrum};
use proca_core::verify::{self, Fault, Level};
use proca_core::{export, FourVector};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Io(String),
    #[error("invariant check failed: {0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl From<proca_core::Error> for CliError {
    fn from(e: proca_core::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "proca",
    version,
    about = "Spin, stress-energy and flow-line analysis of Proca fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Io {
    /// JSON configuration; omitted fields take their defaults.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the W³ and W⁰ eigenmodes of a plane wave (JSON report).
    Modes {
        #[command(flatten)]
        io: Io,
        /// Wave vector: three spatial components (with --mass) or four.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        k: Option<Vec<f64>>,
        #[arg(long)]
        mass: Option<f64>,
    },
    /// Sample a superposition of plane-wave modes at a list of events (CSV).
    Field {
        #[command(flatten)]
        io: Io,
    },
    /// Eigenvalue landscape of the standing-wave example (CSV).
    Eigenmap {
        #[command(flatten)]
        io: Io,
    },
    /// Energy-momentum flow lines of the standing-wave example (CSV).
    Flowlines {
        #[command(flatten)]
        io: Io,
    },
    /// Run the invariant audit and print a JSON report.
    Verify {
        #[arg(long, value_enum, default_value = "fast")]
        level: LevelArg,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "none", hide = true)]
        inject_fault: FaultArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum LevelArg {
    Fast,
    Full,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FaultArg {
    None,
    DualSign,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ModesConfig {
    pub k: Option<Vec<f64>>,
    pub mass: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct FieldRun {
    /// Explicit modes; the standing-wave example of `example` when absent.
    pub field: Option<FieldConfigSpec>,
    pub example: ExampleParams,
    pub events: Vec<[f64; 4]>,
}

impl Default for FieldRun {
    fn default() -> Self {
        let p = ExampleParams::default();
        let n = 16;
        let events = (0..n)
            .map(|i| [0.0, p.period() * i as f64 / n as f64, 0.0, 0.0])
            .collect();
        FieldRun {
            field: None,
            example: p,
            events,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct EigenmapRun {
    pub params: ExampleParams,
    /// One period at 200 × 200 when absent.
    pub grid: Option<GridSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct FlowlinesRun {
    pub params: ExampleParams,
    /// Seeds (t, x¹, x²); a ring around the minimum at (π/2k₁, π/2k₂) when absent.
    pub seeds: Option<Vec<[f64; 3]>>,
    pub dtau: f64,
    pub steps: usize,
}

impl Default for FlowlinesRun {
    fn default() -> Self {
        FlowlinesRun {
            params: ExampleParams::default(),
            seeds: None,
            dtau: 0.05,
            steps: 2000,
        }
    }
}

impl FlowlinesRun {
    pub fn seeds(&self) -> Vec<[f64; 3]> {
        self.seeds.clone().unwrap_or_else(|| {
            let p = &self.params;
            let c = [
                std::f64::consts::FRAC_PI_2 / p.k1.abs(),
                std::f64::consts::FRAC_PI_2 / p.k2.abs(),
            ];
            [0.25, 0.5, 1.0, 1.5]
                .iter()
                .map(|r| [0.0, c[0] + r, c[1]])
                .collect()
        })
    }
}

fn read_config<T: DeserializeOwned + Default>(path: Option<&Path>) -> Result<T, CliError> {
    let Some(path) = path else {
        return Ok(T::default());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn check_finite(values: impl IntoIterator<Item = f64>, what: &str) -> Result<(), CliError> {
    if values.into_iter().all(f64::is_finite) {
        Ok(())
    } else {
        Err(CliError::Invalid(format!("{what} must be finite")))
    }
}

/// Writes through a buffer to the file or standard output; the file is only
/// replaced once the whole payload has been produced.
fn emit(
    out: Option<&Path>,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), CliError> {
    let mut buf = Vec::new();
    body(&mut buf).map_err(|e| CliError::Io(e.to_string()))?;
    match out {
        Some(path) => {
            let f = File::create(path)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
            let mut w = BufWriter::new(f);
            w.write_all(&buf)
                .and_then(|_| w.flush())
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            let mut w = io::stdout().lock();
            match w.write_all(&buf).and_then(|_| w.flush()) {
                // A closed reader (`proca eigenmap | head`) is not a failure.
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
                r => r.map_err(|e| CliError::Io(e.to_string())),
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ModeEntry {
    pub eigenvalue: f64,
    pub kind: SpinKind,
    pub physical: bool,
    /// [re, im] pairs, unit hermitian length.
    pub polarization: [[f64; 2]; 4],
}

#[derive(Debug, Serialize)]
pub struct ModesReport {
    pub k: [f64; 4],
    pub mass: f64,
    pub w3: Vec<ModeEntry>,
    pub w0: Vec<ModeEntry>,
    pub w3_degenerate: bool,
    pub w0_degenerate: bool,
}

fn entries(s: &SpinSpectrum) -> Vec<ModeEntry> {
    s.modes
        .iter()
        .map(|m| ModeEntry {
            eigenvalue: m.eigenvalue,
            kind: m.kind,
            physical: m.physical,
            polarization: m.normalized.0.map(|z| [z.re, z.im]),
        })
        .collect()
}

/// Relative tolerance on k·k = m² for a four-component wave vector.
pub const SHELL_TOLERANCE: f64 = 1e-10;

pub fn wave_vector(k: &[f64], mass: Option<f64>) -> Result<FourVector, CliError> {
    check_finite(k.iter().copied().chain(mass), "wave vector and mass")?;
    if let Some(m) = mass {
        if m <= 0.0 {
            return Err(CliError::Invalid(format!("mass must be positive, got {m}")));
        }
    }
    match (k.len(), mass) {
        (3, Some(m)) => Ok(FourVector::new(
            (k.iter().map(|x| x * x).sum::<f64>() + m * m).sqrt(),
            k[0],
            k[1],
            k[2],
        )),
        (3, None) => Err(CliError::Invalid(
            "a spatial wave vector needs --mass".into(),
        )),
        (4, _) => {
            let v = FourVector::new(k[0], k[1], k[2], k[3]);
            if v[0] <= 0.0 {
                return Err(CliError::Invalid(format!(
                    "k⁰ must be positive, got {}",
                    v[0]
                )));
            }
            if let Some(m) = mass {
                let off = v.norm2() - m * m;
                if off.abs() > SHELL_TOLERANCE * v.euclidean_norm().powi(2) {
                    return Err(proca_core::Error::OffShell(off).into());
                }
            }
            Ok(v)
        }
        (n, _) => Err(CliError::Invalid(format!(
            "wave vector needs 3 or 4 components, got {n}"
        ))),
    }
}

pub fn modes_report(k: &FourVector) -> Result<ModesReport, CliError> {
    let w3 = eigenmodes_w3(k)?;
    let w0 = eigenmodes_w0(k)?;
    Ok(ModesReport {
        k: k.0,
        mass: k.norm2().sqrt(),
        w3: entries(&w3),
        w0: entries(&w0),
        w3_degenerate: w3.degenerate,
        w0_degenerate: w0.degenerate,
    })
}

pub fn flowlines(run: &FlowlinesRun) -> Result<Vec<FlowLine>, CliError> {
    run.params.validate()?;
    let seeds = run.seeds();
    check_finite(
        seeds.iter().flatten().copied().chain([run.dtau]),
        "seeds and dtau",
    )?;
    if run.dtau.is_nan() || run.dtau <= 0.0 {
        return Err(CliError::Invalid(format!(
            "dtau must be positive, got {}",
            run.dtau
        )));
    }
    seeds
        .iter()
        .map(|s| integrate_flowline(&run.params, *s, run.dtau, run.steps))
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::from)
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Modes { io, k, mass } => {
            let cfg: ModesConfig = read_config(io.config.as_deref())?;
            let k_in = k.or(cfg.k).ok_or_else(|| {
                CliError::Invalid("no wave vector given (--k or config \"k\")".into())
            })?;
            let k = wave_vector(&k_in, mass.or(cfg.mass))?;
            let report = modes_report(&k)?;
            emit(io.out.as_deref(), |w| {
                serde_json::to_writer_pretty(&mut *w, &report)?;
                w.write_all(b"\n")
            })
        }
        Command::Field { io } => {
            let cfg: FieldRun = read_config(io.config.as_deref())?;
            let field = match &cfg.field {
                Some(cfg) => cfg.build()?,
                None => cfg.example.field()?,
            };
            check_finite(cfg.events.iter().flatten().copied(), "events")?;
            let events: Vec<FourVector> = cfg.events.iter().map(|&e| FourVector(e)).collect();
            emit(io.out.as_deref(), |w| {
                export::write_field(&field, &events, w)
            })
        }
        Command::Eigenmap { io } => {
            let cfg: EigenmapRun = read_config(io.config.as_deref())?;
            let grid = cfg
                .grid
                .unwrap_or_else(|| GridSpec::one_period(&cfg.params, 200));
            let map = eigenvalue_map(&cfg.params, &grid)?;
            emit(io.out.as_deref(), |w| export::write_eigenmap(&map, w))
        }
        Command::Flowlines { io } => {
            let cfg: FlowlinesRun = read_config(io.config.as_deref())?;
            let lines = flowlines(&cfg)?;
            emit(io.out.as_deref(), |w| export::write_flowlines(&lines, w))
        }
        Command::Verify {
            level,
            out,
            inject_fault,
        } => {
            let level = match level {
                LevelArg::Fast => Level::Fast,
                LevelArg::Full => Level::Full,
            };
            let fault = match inject_fault {
                FaultArg::None => Fault::None,
                FaultArg::DualSign => Fault::DualSign,
            };
            let report = verify::run(level, fault);
            emit(out.as_deref(), |w| {
                serde_json::to_writer_pretty(&mut *w, &report)?;
                w.write_all(b"\n")
            })?;
            let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::Failed(failed.join(", ")))
            }
        }
    }
}
