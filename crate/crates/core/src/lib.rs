//! Certified spectral computations for a family of concretely realisable
//! unbounded operators.
//!
//! The crate has four layers:
//!
//! * finite dimensional machinery: complex matrices under the induced
//!   1, 2 and sup norms, and geometric series inversion with certified
//!   error bounds ([`matrix`], [`neumann`]);
//! * graph norms and a numerical closedness probe for partially defined
//!   operators ([`graph`]);
//! * two worked operator families with exactly known spectra: the
//!   derivative on continuous functions restricted by a point functional
//!   ([`cfunc`], [`dirac`], [`grid`]) and the left shift on truncated
//!   sequence spaces ([`shift`]);
//! * a raster engine that classifies rectangles of the complex plane and
//!   renders the result as CSV or PGM ([`scan`]).
//!
//! Everything is deterministic: no global state, no hidden randomness,
//! and raster output is byte-identical across runs.

pub mod cfunc;
pub mod dirac;
pub mod error;
pub mod exponent;
pub mod graph;
pub mod grid;
pub mod matrix;
pub mod neumann;
pub mod scan;
pub mod shift;
pub mod types;

pub use error::{Error, Result};
pub use exponent::Exponent;
pub use types::SpectrumStatus;

pub use cfunc::{ClosedFormBounds, ResolveRecord, DEFAULT_GRID_N, DEFAULT_SPECTRAL_TOL};
pub use dirac::DiracFunctional;
pub use graph::{ClosednessStatus, ClosednessVerdict, GraphNormValue, Normed};
pub use grid::GridFunction;
pub use matrix::{MatrixOperator, NormKind};
pub use neumann::{NeumannBounds, NeumannResult};
pub use scan::{
    AxisRange, CellRecord, HeatmapChannel, OperatorSpec, ScanConfig, SpectrumScan,
};
pub use shift::{SeqVector, SpectralClassification};
