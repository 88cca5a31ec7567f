use std::process::ExitCode;

use clap::Parser;

use specscan_cli::args::{Cli, Command};
use specscan_cli::{run_suite, SuiteOptions};
use specscan_core::scan::{run_scan, ScanConfig};
use specscan_core::SpectrumStatus;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Scan(args) => {
            let mut config = ScanConfig::new(args.operator, args.re, args.im);
            config.grid_n = args.grid_n;
            config.tol = args.tol;
            config.csv_path = args.csv;
            config.pgm_path = args.pgm;
            config.channel = args.channel.into();
            let scan = match run_scan(&config) {
                Ok(scan) => scan,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let mut resolved = 0usize;
            let mut indeterminate = 0usize;
            let mut spectral = 0usize;
            for cell in &scan.cells {
                match cell.status {
                    SpectrumStatus::Resolved => resolved += 1,
                    SpectrumStatus::Indeterminate => indeterminate += 1,
                    SpectrumStatus::Spectral => spectral += 1,
                }
            }
            println!(
                "scanned {}x{} cells: {} resolved, {} indeterminate, {} spectral",
                scan.width(),
                scan.height(),
                resolved,
                indeterminate,
                spectral
            );
            if let Some(path) = &config.csv_path {
                println!("wrote {}", path.display());
            }
            if let Some(path) = &config.pgm_path {
                println!("wrote {}", path.display());
            }
            ExitCode::SUCCESS
        }
        Command::Suite(args) => {
            if !(args.tol_scale >= 0.0) || !args.tol_scale.is_finite() {
                eprintln!(
                    "error: --tol-scale must be a nonnegative finite number, got {}",
                    args.tol_scale
                );
                return ExitCode::from(2);
            }
            let options = SuiteOptions {
                seed: cli.seed,
                tol_scale: args.tol_scale,
            };
            let report = run_suite(args.name, &options);
            print!("{}", report.render());
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            println!(
                "suite {}: {} checks, {} failed",
                args.name.name(),
                report.checks.len(),
                failed
            );
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
