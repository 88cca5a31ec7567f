//! Rectangular rasters over the complex plane with CSV and PGM output.
//!
//! Every cell of the raster is classified independently (Resolved,
//! Spectral or Indeterminate) and annotated with whatever certified data
//! the operator offers: |A(zeta)| or a witness defect, a resolvent norm
//! lower bound, and closed form envelopes where those exist. Cells are
//! stored row-major with the top row at the largest imaginary part, and
//! all output is written single-threaded in that order so repeated runs
//! are byte-identical.

use std::fmt::Write as _;
use std::path::PathBuf;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::cfunc::{
    closed_form_bounds, example2_witness, project_to_kernel, resolvent_norm_lower,
    NEAR_SPECTRAL_ABS_A,
};
use crate::dirac::DiracFunctional;
use crate::error::{Error, Result};
use crate::grid::GridFunction;
use crate::shift::{
    classify_restricted, classify_shift, lp_norm, resolvent_shift, restricted_resolvent_at_zero,
    shift_apply, SeqVector, WITNESS_LEN,
};
use crate::exponent::Exponent;
use crate::graph::Normed;
use crate::types::SpectrumStatus;

/// Which operator a scan rasterises.
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorSpec {
    /// Derivative restricted by the null functional (everything spectral).
    Example1,
    /// Derivative restricted by evaluation at 0 (empty spectrum).
    Example2,
    /// Derivative restricted by the difference of evaluations at 1/2 and 0
    /// (spectrum 4 pi i Z).
    Example3,
    /// Left shift on the full sequence space (spectrum: closed unit disk).
    ShiftFull,
    /// Left shift restricted to sequences with x_0 = 0.
    ShiftRestricted,
    /// Derivative restricted by an arbitrary atom list.
    CustomDirac(Vec<(f64, Complex64)>),
}

impl OperatorSpec {
    fn functional(&self) -> Result<Option<DiracFunctional>> {
        Ok(match self {
            OperatorSpec::Example1 => Some(DiracFunctional::null()),
            OperatorSpec::Example2 => Some(DiracFunctional::delta(0.0)?),
            OperatorSpec::Example3 => Some(DiracFunctional::delta_diff(0.5, 0.0)?),
            OperatorSpec::CustomDirac(atoms) => Some(DiracFunctional::new(atoms.clone())?),
            OperatorSpec::ShiftFull | OperatorSpec::ShiftRestricted => None,
        })
    }
}

/// One inclusive sampling axis: `steps` evenly spaced points from min to max.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AxisRange {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl AxisRange {
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self> {
        if !min.is_finite() || !max.is_finite() || min >= max {
            return Err(Error::InvalidArgument(format!(
                "axis range needs finite min < max, got {min}..{max}"
            )));
        }
        if steps < 2 {
            return Err(Error::InvalidArgument(format!(
                "axis range needs at least 2 steps, got {steps}"
            )));
        }
        Ok(AxisRange { min, max, steps })
    }

    pub fn step(&self) -> f64 {
        (self.max - self.min) / (self.steps - 1) as f64
    }

    pub fn value(&self, i: usize) -> f64 {
        self.min + i as f64 * self.step()
    }
}

/// PGM channel selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeatmapChannel {
    /// Resolved 255, Indeterminate 128, Spectral 0.
    Status,
    /// 255 * min(1, 1/(1 + lower bound)); Spectral cells are 0.
    Norm,
}

/// Everything a scan needs: the operator, both axes, the quadrature grid
/// size for function-space operators, the spectral tolerance and optional
/// output destinations.
#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub operator: OperatorSpec,
    pub re: AxisRange,
    pub im: AxisRange,
    pub grid_n: usize,
    pub tol: f64,
    pub csv_path: Option<PathBuf>,
    pub pgm_path: Option<PathBuf>,
    pub channel: HeatmapChannel,
}

impl ScanConfig {
    pub fn new(operator: OperatorSpec, re: AxisRange, im: AxisRange) -> Self {
        ScanConfig {
            operator,
            re,
            im,
            grid_n: crate::cfunc::DEFAULT_GRID_N,
            tol: crate::cfunc::DEFAULT_SPECTRAL_TOL,
            csv_path: None,
            pgm_path: None,
            channel: HeatmapChannel::Status,
        }
    }

    fn validate(&self) -> Result<()> {
        // Grid sizes congruent to 1 mod 4 put 0, 1/4, 1/2 and 1 on nodes.
        if self.grid_n < 5 || self.grid_n % 4 != 1 {
            return Err(Error::InvalidArgument(format!(
                "grid_n must be >= 5 and congruent to 1 mod 4, got {}",
                self.grid_n
            )));
        }
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "tolerance must be positive and finite, got {}",
                self.tol
            )));
        }
        Ok(())
    }
}

/// One classified raster cell.
#[derive(Clone, Debug)]
pub struct CellRecord {
    pub zeta: Complex64,
    pub status: SpectrumStatus,
    /// |A(zeta)| for functional operators, a witness defect for the shift,
    /// absent where neither applies.
    pub abs_a: Option<f64>,
    /// Certified lower bound on the resolvent norm, where one was computed.
    pub norm_lower: Option<f64>,
    /// Closed form envelope, present only for catalogued examples at real
    /// zeta > 0.
    pub bound_lower: Option<f64>,
    pub bound_upper: Option<f64>,
}

/// A completed raster. Cells are row-major; row 0 carries the largest
/// imaginary part.
#[derive(Clone, Debug)]
pub struct SpectrumScan {
    pub re: AxisRange,
    pub im: AxisRange,
    pub cells: Vec<CellRecord>,
}

impl SpectrumScan {
    pub fn width(&self) -> usize {
        self.re.steps
    }

    pub fn height(&self) -> usize {
        self.im.steps
    }

    pub fn cell(&self, row: usize, col: usize) -> &CellRecord {
        &self.cells[row * self.re.steps + col]
    }

    /// CSV with a fixed header and one row per cell in storage order.
    /// Numeric fields carry 17 significant digits; absent fields are empty.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::with_capacity(self.cells.len() * 64 + 64);
        out.push_str("re,im,status,abs_A,norm_lower,bound_lower,bound_upper\n");
        for cell in &self.cells {
            let _ = write!(
                out,
                "{},{},{},{},{},{},{}\n",
                fmt17(cell.zeta.re),
                fmt17(cell.zeta.im),
                cell.status,
                opt17(cell.abs_a),
                opt17(cell.norm_lower),
                opt17(cell.bound_lower),
                opt17(cell.bound_upper),
            );
        }
        out
    }

    /// Binary 8-bit PGM (P5, maxval 255) of the selected channel.
    pub fn to_pgm_bytes(&self, channel: HeatmapChannel) -> Vec<u8> {
        let header = format!("P5\n{} {}\n255\n", self.width(), self.height());
        let mut bytes = Vec::with_capacity(header.len() + self.cells.len());
        bytes.extend_from_slice(header.as_bytes());
        for cell in &self.cells {
            bytes.push(match channel {
                HeatmapChannel::Status => match cell.status {
                    SpectrumStatus::Resolved => 255,
                    SpectrumStatus::Indeterminate => 128,
                    SpectrumStatus::Spectral => 0,
                },
                HeatmapChannel::Norm => norm_shade(cell),
            });
        }
        bytes
    }
}

/// Norm channel shade: spectral cells are black (the resolvent blows up),
/// otherwise 255 * min(1, 1/(1 + lower bound)) rounded half up, with a
/// missing bound treated as zero.
fn norm_shade(cell: &CellRecord) -> u8 {
    if cell.status == SpectrumStatus::Spectral {
        return 0;
    }
    let lower = cell.norm_lower.unwrap_or(0.0);
    let v = 255.0 * (1.0 / (1.0 + lower)).min(1.0);
    (v + 0.5).floor() as u8
}

fn fmt17(x: f64) -> String {
    format!("{:.16e}", x)
}

fn opt17(x: Option<f64>) -> String {
    x.map(fmt17).unwrap_or_default()
}

/// Classifies every cell of the configured raster and writes the requested
/// outputs. Cell evaluation is data parallel; output order is fixed by the
/// storage layout, so repeated runs produce identical bytes.
pub fn run_scan(config: &ScanConfig) -> Result<SpectrumScan> {
    config.validate()?;
    let functional = config.operator.functional()?;
    let witnesses = match &functional {
        Some(l) => dirac_witnesses(l, config.grid_n),
        None => Vec::new(),
    };

    let width = config.re.steps;
    let height = config.im.steps;
    let cells: Vec<CellRecord> = (0..width * height)
        .into_par_iter()
        .map(|idx| {
            let row = idx / width;
            let col = idx % width;
            let zeta = Complex64::new(
                config.re.value(col),
                config.im.value(height - 1 - row),
            );
            match (&config.operator, &functional) {
                (_, Some(l)) => dirac_cell(&config.operator, l, &witnesses, zeta, config.tol),
                (OperatorSpec::ShiftFull, None) => shift_cell(zeta, config.tol),
                (OperatorSpec::ShiftRestricted, None) => restricted_cell(zeta),
                _ => unreachable!("operator kinds are covered above"),
            }
        })
        .collect();

    let scan = SpectrumScan {
        re: config.re,
        im: config.im,
        cells,
    };
    if let Some(path) = &config.csv_path {
        std::fs::write(path, scan.to_csv_string())?;
    }
    if let Some(path) = &config.pgm_path {
        std::fs::write(path, scan.to_pgm_bytes(config.channel))?;
    }
    Ok(scan)
}

/// Fixed witness family for resolvent norm lower bounds, projected into
/// the kernel of the scanned functional. Projection failures simply drop
/// the witness; the null functional keeps none (nothing is resolved there
/// anyway).
fn dirac_witnesses(l: &DiracFunctional, grid_n: usize) -> Vec<GridFunction> {
    let mut family = Vec::new();
    if let Ok(f) = example2_witness(grid_n) {
        family.push(f);
    }
    if let Ok(f) = GridFunction::from_fn(grid_n, |x| {
        Complex64::new((2.0 * std::f64::consts::PI * x).sin(), 0.0)
    }) {
        family.push(f);
    }
    family
        .into_iter()
        .filter_map(|f| project_to_kernel(l, &f).ok())
        .filter(|f| f.sup_norm() > 0.0)
        .collect()
}

fn dirac_cell(
    operator: &OperatorSpec,
    l: &DiracFunctional,
    witnesses: &[GridFunction],
    zeta: Complex64,
    tol: f64,
) -> CellRecord {
    let abs_a = l.apply_exp(zeta).norm();
    let status = if abs_a <= tol {
        SpectrumStatus::Spectral
    } else if abs_a <= NEAR_SPECTRAL_ABS_A {
        SpectrumStatus::Indeterminate
    } else {
        SpectrumStatus::Resolved
    };
    let norm_lower = if status == SpectrumStatus::Resolved && !witnesses.is_empty() {
        resolvent_norm_lower(l, zeta, witnesses, tol).ok()
    } else {
        None
    };
    let (bound_lower, bound_upper) = match operator {
        OperatorSpec::Example2 if zeta.im == 0.0 && zeta.re > 0.0 => {
            match closed_form_bounds(2, zeta.re) {
                Ok(b) => (Some(b.lower), b.upper),
                Err(_) => (None, None),
            }
        }
        OperatorSpec::Example3 if zeta.im == 0.0 && zeta.re > 0.0 => {
            match closed_form_bounds(3, zeta.re) {
                Ok(b) => (Some(b.lower), b.upper),
                Err(_) => (None, None),
            }
        }
        _ => (None, None),
    };
    CellRecord {
        zeta,
        status,
        abs_a: Some(abs_a),
        norm_lower,
        bound_lower,
        bound_upper,
    }
}

fn shift_cell(zeta: Complex64, tol: f64) -> CellRecord {
    let cls = classify_shift(zeta);
    let abs_a = cls
        .witness
        .as_ref()
        .map(|w| shift_apply(w).sub(&w.scale(zeta)).norm());
    let norm_lower = if cls.status == SpectrumStatus::Resolved {
        // Unimodular geometric witness aligned with zeta, a certified
        // ratio close to 1/(|zeta| - 1).
        let direction = zeta / zeta.norm();
        SeqVector::geometric(direction, WITNESS_LEN, Exponent::TWO)
            .ok()
            .and_then(|w| {
                resolvent_shift(zeta, &w, tol)
                    .ok()
                    .map(|y| lp_norm(&y) / lp_norm(&w))
            })
    } else {
        None
    };
    CellRecord {
        zeta,
        status: cls.status,
        abs_a,
        norm_lower,
        bound_lower: None,
        bound_upper: None,
    }
}

fn restricted_cell(zeta: Complex64) -> CellRecord {
    let cls = classify_restricted(zeta);
    let norm_lower = if cls.status == SpectrumStatus::Resolved {
        let e0 = SeqVector::basis0(Exponent::TWO);
        let image = restricted_resolvent_at_zero(&e0);
        Some(lp_norm(&image) / lp_norm(&e0))
    } else {
        None
    };
    CellRecord {
        zeta,
        status: cls.status,
        abs_a: None,
        norm_lower,
        bound_lower: None,
        bound_upper: None,
    }
}
