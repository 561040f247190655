use clap::Parser;
use mcglab::config::{ConfigError, FileConfig, ScanConfig, ScanKind, SurfaceKind};
use mcglab::report::write_outputs;
use mcglab::scans::run_scan;
use mcglab_core::profile::CalibrationProfile;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "mcglab", version, about = "curve-complex laboratory scans")]
struct Cli {
    /// Which scan to run.
    #[arg(value_enum)]
    scan: ScanKind,
    #[arg(long, value_enum)]
    surface: Option<SurfaceKind>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long)]
    radius: Option<u32>,
    #[arg(long)]
    threshold: Option<i64>,
    #[arg(long)]
    word_length: Option<u32>,
    #[arg(long)]
    window: Option<u32>,
    /// CSV output path; the JSON sidecar lands next to it.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Calibration profile JSON; defaults to the built-in profile.
    #[arg(long)]
    profile: Option<PathBuf>,
    /// JSON config file mirroring the flags; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Worker threads (defaults to the rayon heuristic).
    #[arg(long)]
    workers: Option<usize>,
}

fn merge(cli: &Cli, file: FileConfig) -> Result<ScanConfig, ConfigError> {
    let need = |what: &str| ConfigError::Invalid(format!("missing required {what}"));
    let cfg = ScanConfig {
        scan: cli.scan,
        surface: cli
            .surface
            .or(file.surface)
            .ok_or_else(|| need("--surface"))?,
        seed: cli.seed.or(file.seed).unwrap_or(0),
        samples: cli.samples.or(file.samples).unwrap_or(100),
        radius: cli.radius.or(file.radius),
        threshold: cli.threshold.or(file.threshold),
        word_length: cli.word_length.or(file.word_length),
        window: cli.window.or(file.window),
        out: cli
            .out
            .clone()
            .or(file.out)
            .ok_or_else(|| need("--out"))?,
    };
    if let Some(scan) = file.scan {
        if scan != cli.scan {
            return Err(ConfigError::Invalid(format!(
                "config file names scan {} but the command line ran {}",
                scan.name(),
                cli.scan.name()
            )));
        }
    }
    cfg.validate()?;
    Ok(cfg)
}

fn real_main() -> Result<bool, String> {
    let cli = Cli::parse();
    let file: FileConfig = match &cli.config {
        Some(p) => {
            let body = std::fs::read_to_string(p).map_err(|e| format!("config file: {e}"))?;
            serde_json::from_str(&body).map_err(|e| format!("config file: {e}"))?
        }
        None => FileConfig::default(),
    };
    let cfg = merge(&cli, file).map_err(|e| e.to_string())?;
    let profile = match &cli.profile {
        Some(p) => {
            let body = std::fs::read_to_string(p).map_err(|e| format!("profile file: {e}"))?;
            CalibrationProfile::from_json(&body).map_err(|e| format!("profile file: {e}"))?
        }
        None => CalibrationProfile::default(),
    };
    profile.validate().map_err(|e| format!("profile: {e}"))?;

    let run = || run_scan(&cfg, &profile);
    let report = match cli.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| format!("worker pool: {e}"))?
            .install(run),
        None => run(),
    };
    write_outputs(&report, &cfg, &profile).map_err(|e| format!("writing outputs: {e}"))?;
    if cfg.scan == ScanKind::Calibrate {
        let fitted = mcglab::scans::calibrate::profile_from_rows(&report.rows);
        let path = cfg.out.with_extension("profile.json");
        std::fs::write(&path, fitted.to_json()).map_err(|e| format!("writing profile: {e}"))?;
    }
    for f in &report.failures {
        eprintln!("assertion failed: {f}");
    }
    Ok(report.passed)
}

fn main() -> ExitCode {
    match real_main() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
