//! The `graychroma` command-line tool.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 invalid arguments, 3 solver
//! verification failure.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::color::{max_chroma_color, Rgb};
use crate::error::Error;
use crate::export::{write_fig3_csv, write_sweep_summary, write_sweep_table, PaletteDocument};
use crate::optimize::{reference_grid16, sweep, Objective, SweepSpec, DEFAULT_GRID_STEP};
use crate::oracle::{verify_solver_with, OracleConfig};
use crate::scale::{build_scale, chroma_one_curve, ScaleSpec, DEFAULT_SAMPLES};

/// Chroma-gap threshold for `verify`.
pub const VERIFY_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(
    name = "graychroma",
    version,
    about = "Grayscale-safe color scales with maximal average chroma"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Ppm,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Max,
    Min,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Self {
        match o {
            ObjectiveArg::Max => Objective::Max,
            ObjectiveArg::Min => Objective::Min,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the scale with the given start hue, hue span and intensity range.
    Generate {
        #[arg(long, allow_negative_numbers = true)]
        theta_start: f64,
        #[arg(long, allow_negative_numbers = true)]
        theta_span: f64,
        #[arg(long)]
        i_min: f64,
        #[arg(long)]
        i_max: f64,
        #[arg(long, default_value_t = 256)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Height in pixels of each band of the PPM swatch.
        #[arg(long, default_value_t = 32)]
        swatch_height: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find the start hue that maximizes (or minimizes) average chroma.
    Optimize {
        #[arg(long, allow_negative_numbers = true)]
        theta_span: f64,
        #[arg(long)]
        i_min: f64,
        #[arg(long)]
        i_max: f64,
        #[arg(long, value_enum)]
        objective: ObjectiveArg,
        #[arg(long, default_value_t = DEFAULT_GRID_STEP)]
        grid_step: f64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Write the average chroma of every candidate start hue here.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Optimize all 16 combinations of i_min {0, 0.1}, i_max {0.9, 1} and
    /// span {-360, -300, 300, 360}; write swatches and summary.csv.
    Sweep16 {
        #[arg(long, value_enum)]
        objective: ObjectiveArg,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[arg(long, default_value_t = DEFAULT_GRID_STEP)]
        grid_step: f64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Columns of each swatch image.
        #[arg(long, default_value_t = 256)]
        swatch_samples: usize,
        #[arg(long, default_value_t = 32)]
        swatch_height: usize,
    },
    /// Intensity of the chroma-one color against hue, optionally with the
    /// optimal full-range scales overlaid.
    Fig3 {
        #[arg(long, default_value_t = 60)]
        samples_per_sector: usize,
        /// Overlay the chroma-maximizing scale with this span (repeatable).
        #[arg(long, allow_negative_numbers = true)]
        overlay_span: Vec<f64>,
        #[arg(long, default_value_t = 0.0)]
        i_min: f64,
        #[arg(long, default_value_t = 1.0)]
        i_max: f64,
        #[arg(long, default_value_t = DEFAULT_GRID_STEP)]
        grid_step: f64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the closed-form solver against the brute-force oracle.
    Verify {
        #[arg(long, default_value_t = 360)]
        grid_hue: usize,
        #[arg(long, default_value_t = 101)]
        grid_i: usize,
        #[arg(long, default_value_t = 101)]
        oracle_resolution: usize,
        /// Scale the solver's red channel by (1 - x); exercises the failure path.
        #[arg(long, hide = true, default_value_t = 0.0)]
        perturb: f64,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
    Verify(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Generate {
            theta_start,
            theta_span,
            i_min,
            i_max,
            samples,
            format,
            swatch_height,
            out,
        } => {
            let spec = ScaleSpec::new(theta_start, theta_span, i_min, i_max, samples)?;
            if swatch_height == 0 {
                return Err(CliError::Usage("swatch height must be positive".into()));
            }
            let doc = PaletteDocument::from_scale(&build_scale(spec));
            with_output(out.as_deref(), |w| match format {
                Format::Csv => doc.write_csv(w),
                Format::Json => doc.write_json(w),
                Format::Ppm => doc.write_ppm(w, swatch_height),
            })
        }
        Command::Optimize {
            theta_span,
            i_min,
            i_max,
            objective,
            grid_step,
            samples,
            table,
        } => {
            let spec = SweepSpec::new(
                theta_span,
                i_min,
                i_max,
                objective.into(),
                grid_step,
                samples,
            )?;
            let result = sweep(&spec);
            if let Some(path) = table {
                with_output(Some(&path), |w| write_sweep_table(w, &result))?;
            }
            println!(
                "theta_start={:.6} avg_chroma={:.6}",
                result.best_theta_start, result.best_avg_chroma
            );
            Ok(())
        }
        Command::Sweep16 {
            objective,
            out_dir,
            grid_step,
            samples,
            swatch_samples,
            swatch_height,
        } => {
            SweepSpec::new(360.0, 0.0, 1.0, objective.into(), grid_step, samples)?;
            if swatch_samples < 2 || swatch_height == 0 {
                return Err(CliError::Usage(
                    "swatch needs at least 2 samples and positive height".into(),
                ));
            }
            let objective: Objective = objective.into();
            let results = reference_grid16(grid_step, samples, objective)?;
            fs::create_dir_all(&out_dir)?;
            for (j, r) in results.iter().enumerate() {
                let name = format!(
                    "{objective}_{j:02}_imin{:.1}_imax{:.1}_span{}.ppm",
                    r.spec.i_min(),
                    r.spec.i_max(),
                    r.spec.theta_span()
                );
                let swatch = build_scale(r.best_scale.spec().with_samples(swatch_samples)?);
                with_output(Some(&out_dir.join(name)), |w| {
                    PaletteDocument::from_scale(&swatch).write_ppm(w, swatch_height)
                })?;
            }
            with_output(Some(&out_dir.join("summary.csv")), |w| {
                write_sweep_summary(w, &results)
            })
        }
        Command::Fig3 {
            samples_per_sector,
            overlay_span,
            i_min,
            i_max,
            grid_step,
            samples,
            out,
        } => {
            if samples_per_sector == 0 {
                return Err(CliError::Usage(
                    "samples per sector must be at least 1".into(),
                ));
            }
            let specs = overlay_span
                .iter()
                .map(|&span| SweepSpec::new(span, i_min, i_max, Objective::Max, grid_step, samples))
                .collect::<Result<Vec<_>, _>>()?;
            let overlays: Vec<ScaleSpec> =
                specs.iter().map(|s| *sweep(s).best_scale.spec()).collect();
            let curve = chroma_one_curve(samples_per_sector);
            with_output(out.as_deref(), |w| write_fig3_csv(w, &curve, &overlays))
        }
        Command::Verify {
            grid_hue,
            grid_i,
            oracle_resolution,
            perturb,
        } => {
            let cfg = OracleConfig::new(oracle_resolution, 1e-6, 1e-12)?;
            let solver = |h: f64, i: f64| {
                let c = max_chroma_color(h, i);
                if perturb == 0.0 {
                    c
                } else {
                    Rgb::new((c.r() * (1.0 - perturb)).clamp(0.0, 1.0), c.g(), c.b()).unwrap_or(c)
                }
            };
            let report = verify_solver_with(solver, grid_hue, grid_i, &cfg)?;
            println!(
                "points={} max_abs_chroma_gap={:.3e} max_rgb_gap={:.3e} worst_hue={:.6} worst_intensity={:.6}",
                report.points,
                report.max_abs_chroma_gap,
                report.max_rgb_gap,
                report.worst_point.0,
                report.worst_point.1
            );
            if report.max_abs_chroma_gap < VERIFY_THRESHOLD {
                Ok(())
            } else {
                Err(CliError::Verify(format!(
                    "chroma gap {:.3e} exceeds {VERIFY_THRESHOLD:e}",
                    report.max_abs_chroma_gap
                )))
            }
        }
    }
}

/// Writes a whole file (or standard output) through `f`.
fn with_output<F>(path: Option<&Path>, f: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match path {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            f(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            f(&mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}
