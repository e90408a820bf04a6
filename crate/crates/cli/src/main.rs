use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use wph_core::aut::{forced_involution, involution_check, stabilizer_dim};
use wph_core::chow::nef_invariance_check;
use wph_core::report::{parse_seed_range, scroll_model, DEFAULT_COEFFICIENT_BOUND};
use wph_core::strata::{quasi_smooth_probe, singular_curves};
use wph_core::{
    analyze, consistency_suite, random_member, AnalyzeOptions, Error, HypersurfaceFamily, Preset,
    WeightSystem,
};

const EXIT_PARSE: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;
const EXIT_INCONSISTENT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "wph",
    version,
    about = "Exact invariants of weighted Calabi-Yau hypersurfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum PresetArg {
    X8,
    X12,
    X14,
    Quintic,
}

impl From<PresetArg> for Preset {
    fn from(p: PresetArg) -> Self {
        match p {
            PresetArg::X8 => Preset::X8,
            PresetArg::X12 => Preset::X12,
            PresetArg::X14 => Preset::X14,
            PresetArg::Quintic => Preset::Quintic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    X8,
    X12,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one family.
    Analyze {
        /// Comma-separated weights, e.g. 1,1,2,2,2.
        #[arg(long, conflicts_with = "preset", requires = "degree")]
        weights: Option<String>,
        #[arg(long, requires = "weights")]
        degree: Option<u32>,
        #[arg(long, value_enum)]
        preset: Option<PresetArg>,
        /// Inclusive seed range `a..b`, or a single seed.
        #[arg(long, default_value = "0..19")]
        seeds: String,
        #[arg(long, default_value_t = DEFAULT_COEFFICIENT_BOUND)]
        bound: u32,
        /// Skip the stabilizer survey and the smoothness probes.
        #[arg(long)]
        no_aut: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the consistency suite.
    Check {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Nef-cone invariance criterion on a scroll model.
    Nef {
        #[arg(long, value_enum)]
        preset: ModelArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Stabilizer and involution data for one seeded member.
    Aut {
        #[arg(long, value_enum)]
        preset: PresetArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_COEFFICIENT_BOUND)]
        bound: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("writing {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("value serializes") + "\n"
}

fn code_of(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidWeights(_) => EXIT_PARSE,
        Error::UnsupportedSingularity(_) => EXIT_UNSUPPORTED,
        _ => 1,
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("wph: {e}");
    ExitCode::from(code_of(e))
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Analyze {
            weights,
            degree,
            preset,
            seeds,
            bound,
            no_aut,
            format,
            out,
        } => {
            let fam = match (weights, degree, preset) {
                (_, _, Some(p)) => Preset::from(p).family(),
                (Some(w), Some(d), None) => {
                    match WeightSystem::parse(&w).and_then(|w| HypersurfaceFamily::new(w, d)) {
                        Ok(f) => f,
                        Err(e) => return fail(&e),
                    }
                }
                _ => {
                    eprintln!("wph: give --preset or both --weights and --degree");
                    return ExitCode::from(EXIT_PARSE);
                }
            };
            let seeds = match parse_seed_range(&seeds) {
                Ok(s) => s,
                Err(e) => return fail(&e),
            };
            let opts = AnalyzeOptions {
                seeds,
                coefficient_bound: bound,
                skip_automorphisms: no_aut,
            };
            let report = match analyze(fam.weights.as_slice(), fam.degree, &opts) {
                Ok(r) => r,
                Err(e) => return fail(&e),
            };
            let body = match format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
            };
            if let Err(e) = emit(&body, out.as_ref()) {
                eprintln!("wph: {e}");
                return ExitCode::FAILURE;
            }
            if let Some(u) = &report.unsupported_singularity {
                eprintln!("wph: {u}");
                ExitCode::from(EXIT_UNSUPPORTED)
            } else if !report.all_consistent() {
                ExitCode::from(EXIT_INCONSISTENT)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Check { format, out } => {
            let rows = consistency_suite();
            let body = match format {
                Format::Json => json(serde_json::json!({
                    "schema_version": wph_core::report::SCHEMA_VERSION,
                    "rows": rows,
                })),
                Format::Text => rows
                    .iter()
                    .map(|r| {
                        format!(
                            "{} {:>2} {}: {} [{} ms]\n",
                            if r.passed { "PASS" } else { "FAIL" },
                            r.id,
                            r.name,
                            r.detail,
                            r.millis
                        )
                    })
                    .collect(),
            };
            if let Err(e) = emit(&body, out.as_ref()) {
                eprintln!("wph: {e}");
                return ExitCode::FAILURE;
            }
            if rows.iter().all(|r| r.passed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_INCONSISTENT)
            }
        }
        Command::Nef { preset, format } => {
            let p = match preset {
                ModelArg::X8 => Preset::X8,
                ModelArg::X12 => Preset::X12,
            };
            let model = scroll_model(&p.family()).expect("preset has a model");
            let v = match nef_invariance_check(&model) {
                Ok(v) => v,
                Err(e) => return fail(&e),
            };
            let body = match format {
                Format::Json => json(serde_json::json!({
                    "preset": p.name(),
                    "model": model.kind,
                    "scroll_twists": model.ambient.twists(),
                    "nef": v,
                })),
                Format::Text => format!(
                    "{}: criterion holds {} (c2 kernel {:?}, cubic there {})\n",
                    p.name(),
                    v.holds,
                    v.kernel,
                    v.cubic_at_kernel
                ),
            };
            print!("{body}");
            ExitCode::SUCCESS
        }
        Command::Aut {
            preset,
            seed,
            bound,
            format,
        } => {
            let p = Preset::from(preset);
            let fam = p.family();
            let result = (|| -> wph_core::Result<serde_json::Value> {
                let member = random_member(&fam, seed, bound)?;
                let mut probes = Vec::new();
                for c in singular_curves(&fam)? {
                    if let Ok(smooth) = quasi_smooth_probe(&member, &c.stratum) {
                        probes.push(serde_json::json!({
                            "vanishing_set": c.stratum.vanishing_set,
                            "smooth": smooth,
                        }));
                    }
                }
                Ok(serde_json::json!({
                    "preset": p.name(),
                    "seed": seed,
                    "coefficient_bound": bound,
                    "terms": member.num_terms(),
                    "stabilizer_dim": stabilizer_dim(&member)?,
                    "forced_involution": forced_involution(&fam)?,
                    "involution": involution_check(&member, &fam)?,
                    "quasi_smooth_probe": probes,
                }))
            })();
            let v = match result {
                Ok(v) => v,
                Err(e) => return fail(&e),
            };
            let body = match format {
                Format::Json => json(v),
                Format::Text => format!(
                    "{} seed {}: stabilizer dim {}, forced involution {}, involution {}\n",
                    p.name(),
                    seed,
                    v["stabilizer_dim"],
                    v["forced_involution"],
                    v["involution"]
                ),
            };
            print!("{body}");
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
