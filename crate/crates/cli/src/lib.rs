//! Command-line frontend for `fatpoint-core`: configuration files, command
//! dispatch and reproducible JSON reports.

pub mod config;
pub mod report;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fatpoint_core::exact::Rng;
use fatpoint_core::syzygy::{conjecture_harness, HarnessOptions, DEFAULT_RUNS};
use fatpoint_core::systems::{index_sweep, linear_system, unexpectedness_probe, IndexValue, Verdict, MIN_TRIALS};
use fatpoint_core::witness::{run_section, Check, Section};
use serde_json::{json, Value};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_CHECK_FAILED: u8 = 2;
pub const EXIT_UNSTABLE: u8 = 3;

pub const DEFAULT_SEED: u64 = 0;

#[derive(Parser, Debug)]
#[command(name = "fatpoint", version, about = "Exact fat-point linear systems and unexpected hypersurfaces")]
pub struct Cli {
    /// JSON output (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Plain-text summary instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,
    /// Include wall-clock time in the JSON report, which makes it nondeterministic.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SectionArg {
    B3,
    Dual2,
    Fermat,
    Theorem1,
    Param,
    Syzygy,
    All,
}

impl SectionArg {
    fn sections(self) -> Vec<Section> {
        match self {
            SectionArg::All => Section::ALL.to_vec(),
            other => vec![Section::from_name(other.name()).expect("every section has a name")],
        }
    }

    fn name(self) -> &'static str {
        match self {
            SectionArg::B3 => "b3",
            SectionArg::Dual2 => "dual2",
            SectionArg::Fermat => "fermat",
            SectionArg::Theorem1 => "theorem1",
            SectionArg::Param => "param",
            SectionArg::Syzygy => "syzygy",
            SectionArg::All => "all",
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension of the degree-d forms through a configuration.
    Dim {
        config: PathBuf,
        #[arg(long)]
        degree: u32,
        /// Also print a basis of the forms.
        #[arg(long)]
        kernel: bool,
    },
    /// Does a general point of the given multiplicity impose too few conditions?
    Unexpected {
        config: PathBuf,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        mult: u32,
        #[arg(long, default_value_t = MIN_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Multiplicity and speciality indices.
    Indices {
        config: PathBuf,
        #[arg(long, default_value_t = 6)]
        jmax: u32,
        #[arg(long, default_value_t = MIN_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Run the built-in verification checks.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = SectionArg::All)]
        section: SectionArg,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Syzygy harness for reduced configurations in P^3.
    Syzygy {
        config: PathBuf,
        #[arg(long, default_value_t = 8)]
        tmax: u32,
        /// Points of the plane probed for independence of the two maps.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_RUNS)]
        runs: usize,
        #[arg(long, default_value_t = 6)]
        max_image_degree: u32,
        #[arg(long, default_value_t = 4)]
        jmax: u32,
        /// Accept configurations above the desk-scale limit. The 31-point
        /// Fermat configuration needs degree-31 products and can run for hours.
        #[arg(long)]
        allow_large: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Print a configuration in canonical form.
    ExportConfig {
        /// Configuration file to normalize.
        #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
        config: Option<PathBuf>,
        /// A built-in configuration: b3, fermat_w, coord4plus or empty.
        #[arg(long)]
        builtin: Option<String>,
        /// Write to a file instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// What a command produced: the report, its text form and an exit code.
pub struct Outcome {
    pub report: Value,
    pub text: String,
    pub code: u8,
}

fn envelope(command: &str, args: Value, result: Value) -> Value {
    json!({
        "tool": "fatpoint",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "args": args,
        "result": result,
    })
}

fn path_text(p: &Path) -> String {
    p.display().to_string()
}

fn index_text(v: IndexValue) -> String {
    match v {
        IndexValue::Found(j) => j.to_string(),
        IndexValue::NotFound { jmax } => format!("not found up to {jmax}"),
    }
}

fn checks_text(checks: &[Check]) -> String {
    let mut s = String::new();
    for c in checks {
        let tag = if c.informational {
            "INFO"
        } else if c.passed {
            "PASS"
        } else {
            "FAIL"
        };
        let _ = writeln!(s, "{tag} {} {}", c.name, c.detail);
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let _ = writeln!(s, "{} checks, {failed} failed", checks.len());
    s
}

pub fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Dim { config, degree, kernel } => {
            let z = config::load_config(config)?;
            let r = linear_system(&z, *degree)?;
            let text = format!(
                "{}: degree {} vdim {} (expected projective dimension {}, {} conditions of rank {}){}\n",
                z.label(),
                r.degree,
                r.vdim_actual,
                r.edim,
                r.condition_rows,
                r.conditions_rank,
                if r.special { ", special" } else { "" }
            );
            let report = envelope(
                "dim",
                json!({ "config": path_text(config), "degree": degree, "kernel": kernel }),
                json!({ "config": report::config_summary(&z), "system": report::linear_system(&r, *kernel) }),
            );
            Ok(Outcome { report, text, code: EXIT_OK })
        }
        Command::Unexpected { config, degree, mult, trials, seed } => {
            let z = config::load_config(config)?;
            let mut rng = Rng::new(*seed);
            let p = unexpectedness_probe(&z, *degree, *mult, *trials, &mut rng)?;
            let verdict = match p.verdict {
                Verdict::Unexpected => "UNEXPECTED",
                Verdict::NotUnexpected => "NOT UNEXPECTED",
            };
            let mut text = format!(
                "{}: degree {degree} mult {mult}: {verdict} (vdim {}, edim {})\n",
                z.label(),
                p.generic.result.vdim_actual,
                p.edim
            );
            let code = if p.generic.stable { EXIT_OK } else { EXIT_UNSTABLE };
            if code == EXIT_UNSTABLE {
                text.push_str("trials disagree; the generic value is not established\n");
            }
            let report = envelope(
                "unexpected",
                json!({ "config": path_text(config), "degree": degree, "mult": mult, "trials": trials, "seed": seed }),
                json!({ "config": report::config_summary(&z), "probe": report::probe(&p) }),
            );
            Ok(Outcome { report, text, code })
        }
        Command::Indices { config, jmax, trials, seed } => {
            let z = config::load_config(config)?;
            let mut rng = Rng::new(*seed);
            let r = index_sweep(&z, *jmax, *trials, &mut rng)?;
            let mut text = format!(
                "{}: multiplicity index {}, speciality index {} (strict) {} (clamped)\n",
                z.label(),
                index_text(r.multiplicity_index),
                index_text(r.speciality_index_strict),
                index_text(r.speciality_index_clamped)
            );
            for row in &r.rows {
                let _ = writeln!(
                    text,
                    "  j {} degree {} vdim {} count {}{}",
                    row.j,
                    row.degree,
                    row.vdim,
                    row.independent_count,
                    if row.stable { "" } else { " unstable" }
                );
            }
            let code = if r.stable { EXIT_OK } else { EXIT_UNSTABLE };
            let report = envelope(
                "indices",
                json!({ "config": path_text(config), "jmax": jmax, "trials": trials, "seed": seed }),
                json!({ "config": report::config_summary(&z), "indices": report::indices(&r) }),
            );
            Ok(Outcome { report, text, code })
        }
        Command::VerifyPaper { section, seed } => {
            let mut rng = Rng::new(*seed);
            let mut all = Vec::new();
            let mut sections = serde_json::Map::new();
            for s in section.sections() {
                // Each section gets its own stream so selecting one never changes another.
                let mut sub = Rng::new(rng.next_u64());
                let checks = run_section(s, &mut sub)?;
                sections.insert(s.name().to_owned(), report::checks(&checks));
                all.extend(checks);
            }
            let code = if all.iter().all(|c| c.passed) { EXIT_OK } else { EXIT_CHECK_FAILED };
            let summary = report::checks(&all);
            let report = envelope(
                "verify-paper",
                json!({ "section": section.name(), "seed": seed }),
                json!({
                    "passed": summary["passed"],
                    "failed": summary["failed"],
                    "total": summary["total"],
                    "sections": sections,
                }),
            );
            Ok(Outcome { report, text: checks_text(&all), code })
        }
        Command::Syzygy { config, tmax, samples, runs, max_image_degree, jmax, allow_large, seed } => {
            let z = config::load_config(config)?;
            let opts = HarnessOptions {
                tmax: *tmax,
                samples: *samples,
                runs: *runs,
                max_image_degree: *max_image_degree,
                index_jmax: *jmax,
                allow_large: *allow_large,
            };
            let mut rng = Rng::new(*seed);
            let h = conjecture_harness(&z, &opts, &mut rng)?;
            let mut text = format!(
                "{}: {} points, f of degree {}; m_Z {} u_Z {} (strict) {} (clamped)\n",
                h.label,
                h.points,
                h.f_degree,
                index_text(h.multiplicity_index),
                index_text(h.speciality_index_strict),
                index_text(h.speciality_index_clamped)
            );
            for (k, r) in h.runs.iter().enumerate() {
                let _ = writeln!(
                    text,
                    "run {}: plane {:?} pair {} degrees {:?}/{:?} koszul {:?} lines {}",
                    k + 1,
                    r.line.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    r.pair_status.name(),
                    r.syzygy_degree,
                    r.second_degree,
                    r.koszul_trivial,
                    if r.lines_hold() { "holds" } else { "fails" }
                );
                if let Some(im) = &r.image {
                    let _ = writeln!(
                        text,
                        "  image: degree {:?}, {} surfaces, orders {}",
                        im.degree,
                        im.surfaces_in_degree,
                        im.incidence
                            .iter()
                            .map(|i| format!("{}={}", i.label, i.order))
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                }
            }
            let report = envelope(
                "syzygy",
                json!({
                    "config": path_text(config),
                    "tmax": tmax,
                    "samples": samples,
                    "runs": runs,
                    "max_image_degree": max_image_degree,
                    "jmax": jmax,
                    "allow_large": allow_large,
                    "seed": seed,
                }),
                report::harness(&h),
            );
            Ok(Outcome { report, text, code: EXIT_OK })
        }
        Command::ExportConfig { config, builtin, output } => {
            let z = match (config, builtin) {
                (Some(path), None) => config::load_config(path)?,
                (None, Some(name)) => match config::builtin(name) {
                    Some(z) => z,
                    None => bail!("unknown built-in configuration {name:?}"),
                },
                _ => bail!("give either a configuration file or --builtin"),
            };
            let text = config::export_config(&z);
            if let Some(path) = output {
                std::fs::write(path, &text)?;
            }
            let report = serde_json::from_str(&text)?;
            Ok(Outcome { report, text, code: EXIT_OK })
        }
    }
}

/// Run a parsed command line, returning the exit code. Reports go to stdout,
/// diagnostics and timing to stderr.
pub fn run(cli: &Cli) -> u8 {
    let start = Instant::now();
    match execute(&cli.command) {
        Ok(mut out) => {
            let elapsed = start.elapsed();
            let export = matches!(cli.command, Command::ExportConfig { .. });
            if export {
                if !matches!(cli.command, Command::ExportConfig { output: Some(_), .. }) {
                    print!("{}", out.text);
                }
            } else if cli.text {
                print!("{}", out.text);
            } else {
                if cli.timing {
                    out.report["elapsed_ms"] = json!(elapsed.as_millis() as u64);
                }
                println!("{}", serde_json::to_string_pretty(&out.report).expect("report serializes"));
            }
            if !export {
                eprintln!("elapsed {:.3}s", elapsed.as_secs_f64());
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}
