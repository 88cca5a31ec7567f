//! Argument grammar for the `specscan` binary.
//!
//! Ranges are written `min:max:steps`, operators by name
//! (`example1`, `example2`, `example3`, `shift_full`, `shift_restricted`)
//! or as an explicit atom list `custom-dirac:t=re[,im];t=re[,im];...`.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use specscan_core::scan::{AxisRange, HeatmapChannel, OperatorSpec};
use specscan_core::{DEFAULT_GRID_N, DEFAULT_SPECTRAL_TOL};

use crate::suite::SuiteKind;

#[derive(Parser, Debug)]
#[command(
    name = "specscan",
    version,
    about = "Spectrum scans and certified resolvent bounds for a family of partial operators"
)]
pub struct Cli {
    /// Seed for every randomized check; fixed seeds make runs reproducible.
    #[arg(long, global = true, default_value_t = 17)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a rectangle of the complex plane and write CSV or PGM output.
    Scan(ScanArgs),
    /// Run an invariant suite and report each check as PASS or FAIL.
    Suite(SuiteArgs),
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    /// Operator to scan: example1 | example2 | example3 | shift_full |
    /// shift_restricted | custom-dirac:t=re[,im];...
    #[arg(long, value_parser = parse_operator)]
    pub operator: OperatorSpec,

    /// Real axis as min:max:steps.
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub re: AxisRange,

    /// Imaginary axis as min:max:steps.
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub im: AxisRange,

    /// Sampling grid size for function-space operators; must be 1 mod 4.
    #[arg(long, default_value_t = DEFAULT_GRID_N)]
    pub grid_n: usize,

    /// Spectral tolerance on |A(zeta)|.
    #[arg(long, default_value_t = DEFAULT_SPECTRAL_TOL)]
    pub tol: f64,

    /// CSV output path.
    #[arg(long)]
    pub csv: Option<PathBuf>,

    /// PGM heatmap output path.
    #[arg(long)]
    pub pgm: Option<PathBuf>,

    /// Heatmap channel for the PGM output.
    #[arg(long, value_enum, default_value_t = ChannelArg::Status)]
    pub channel: ChannelArg,
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    /// Which suite to run.
    #[arg(value_parser = parse_suite)]
    pub name: SuiteKind,

    /// Scales every error tolerance; 0 is a deliberate fault injection
    /// that makes the suite demonstrate it can fail.
    #[arg(long, default_value_t = 1.0)]
    pub tol_scale: f64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChannelArg {
    Status,
    Norm,
}

impl From<ChannelArg> for HeatmapChannel {
    fn from(c: ChannelArg) -> Self {
        match c {
            ChannelArg::Status => HeatmapChannel::Status,
            ChannelArg::Norm => HeatmapChannel::Norm,
        }
    }
}

pub fn parse_range(s: &str) -> Result<AxisRange, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected min:max:steps, got {s:?}"));
    }
    let min: f64 = parts[0]
        .parse()
        .map_err(|_| format!("bad range minimum {:?}", parts[0]))?;
    let max: f64 = parts[1]
        .parse()
        .map_err(|_| format!("bad range maximum {:?}", parts[1]))?;
    let steps: usize = parts[2]
        .parse()
        .map_err(|_| format!("bad step count {:?}", parts[2]))?;
    AxisRange::new(min, max, steps).map_err(|e| e.to_string())
}

pub fn parse_operator(s: &str) -> Result<OperatorSpec, String> {
    match s {
        "example1" => return Ok(OperatorSpec::Example1),
        "example2" => return Ok(OperatorSpec::Example2),
        "example3" => return Ok(OperatorSpec::Example3),
        "shift_full" => return Ok(OperatorSpec::ShiftFull),
        "shift_restricted" => return Ok(OperatorSpec::ShiftRestricted),
        _ => {}
    }
    let Some(body) = s.strip_prefix("custom-dirac:") else {
        return Err(format!(
            "unknown operator {s:?}; expected example1, example2, example3, \
             shift_full, shift_restricted or custom-dirac:t=re[,im];..."
        ));
    };
    let mut atoms = Vec::new();
    for atom in body.split(';').filter(|a| !a.is_empty()) {
        let (t, w) = atom
            .split_once('=')
            .ok_or_else(|| format!("atom {atom:?} is not of the form t=re[,im]"))?;
        let t: f64 = t.parse().map_err(|_| format!("bad atom point {t:?}"))?;
        let weight = match w.split_once(',') {
            Some((re, im)) => Complex64::new(
                re.parse().map_err(|_| format!("bad weight {re:?}"))?,
                im.parse().map_err(|_| format!("bad weight {im:?}"))?,
            ),
            None => Complex64::new(
                w.parse().map_err(|_| format!("bad weight {w:?}"))?,
                0.0,
            ),
        };
        atoms.push((t, weight));
    }
    if atoms.is_empty() {
        return Err("custom-dirac needs at least one atom (use example1 for the null functional)"
            .to_string());
    }
    Ok(OperatorSpec::CustomDirac(atoms))
}

pub fn parse_suite(s: &str) -> Result<SuiteKind, String> {
    match s {
        "neumann" => Ok(SuiteKind::Neumann),
        "graph" => Ok(SuiteKind::Graph),
        "cfunc" => Ok(SuiteKind::Cfunc),
        "shift" => Ok(SuiteKind::Shift),
        "all" => Ok(SuiteKind::All),
        other => Err(format!(
            "unknown suite {other:?}; expected neumann, graph, cfunc, shift or all"
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse_and_reject() {
        let r = parse_range("-1:1:41").unwrap();
        assert_eq!((r.min, r.max, r.steps), (-1.0, 1.0, 41));
        assert!(parse_range("1:2").is_err());
        assert!(parse_range("2:1:10").is_err());
        assert!(parse_range("0:1:1").is_err());
        assert!(parse_range("a:b:c").is_err());
    }

    #[test]
    fn named_operators_parse() {
        assert_eq!(parse_operator("example1").unwrap(), OperatorSpec::Example1);
        assert_eq!(
            parse_operator("shift_restricted").unwrap(),
            OperatorSpec::ShiftRestricted
        );
        assert!(parse_operator("example9").is_err());
    }

    #[test]
    fn custom_atoms_parse() {
        let op = parse_operator("custom-dirac:0.5=1;0=-1").unwrap();
        assert_eq!(
            op,
            OperatorSpec::CustomDirac(vec![
                (0.5, Complex64::new(1.0, 0.0)),
                (0.0, Complex64::new(-1.0, 0.0)),
            ])
        );
        let op = parse_operator("custom-dirac:0.25=0,1").unwrap();
        assert_eq!(
            op,
            OperatorSpec::CustomDirac(vec![(0.25, Complex64::new(0.0, 1.0))])
        );
        assert!(parse_operator("custom-dirac:").is_err());
        assert!(parse_operator("custom-dirac:0.5").is_err());
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!(parse_suite("all").unwrap(), SuiteKind::All);
        assert!(parse_suite("everything").is_err());
    }

    #[test]
    fn command_line_round_trip() {
        use clap::Parser;
        let cli = Cli::parse_from([
            "specscan", "scan", "--operator", "example3", "--re", "-1:1:241", "--im",
            "-30:30:241", "--grid-n", "101", "--tol", "1e-9", "--channel", "norm",
        ]);
        match cli.command {
            Command::Scan(args) => {
                assert_eq!(args.grid_n, 101);
                assert_eq!(args.channel, ChannelArg::Norm);
                assert_eq!(args.re.steps, 241);
            }
            _ => panic!("expected a scan command"),
        }
        assert_eq!(cli.seed, 17);
    }
}
