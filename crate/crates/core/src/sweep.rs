//! Deterministic scenario runner: mean QFI of the W/GHZ superposition over
//! grids of the superposition weight `alpha` and the channel strength `p`.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::channels::{apply_uniform, make_channel, ChannelKind};
use crate::error::{Error, GridViolation, Result};
use crate::qfi::max_mean_qfi;
use crate::states::{to_density, wghz_superposition};
use crate::QUBIT_CAP;

/// Grid resolution used when no explicit grid is given (step 0.01).
pub const DEFAULT_GRID_POINTS: usize = 101;

/// Default register size.
pub const DEFAULT_N_QUBITS: usize = 3;

/// Two neighboring samples closer than this in value do not count as a
/// strict descent for extremum detection.
pub const MINIMUM_STRICTNESS_TOL: f64 = 1e-12;

/// What to sweep: which channels, which `alpha` and `p` grids, and the
/// register size.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub channels: Vec<ChannelKind>,
    pub alpha_grid: Vec<f64>,
    pub p_grid: Vec<f64>,
    pub n_qubits: usize,
}

impl SweepSpec {
    pub fn new(
        channels: Vec<ChannelKind>,
        alpha_grid: Vec<f64>,
        p_grid: Vec<f64>,
        n_qubits: usize,
    ) -> Result<Self> {
        let spec = SweepSpec { channels, alpha_grid, p_grid, n_qubits };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.channels.is_empty() {
            return Err(Error::InvalidGrid { name: "channels", violation: GridViolation::Empty });
        }
        check_grid("alpha", &self.alpha_grid)?;
        check_grid("p", &self.p_grid)?;
        if self.n_qubits < 2 {
            return Err(Error::TooFew { name: "n_qubits", value: self.n_qubits, min: 2 });
        }
        if self.n_qubits > QUBIT_CAP {
            return Err(Error::Capacity { n_qubits: self.n_qubits, cap: QUBIT_CAP });
        }
        Ok(())
    }

    /// Number of rows a run will produce.
    pub fn row_count(&self) -> usize {
        self.channels.len() * self.alpha_grid.len() * self.p_grid.len()
    }
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            channels: ChannelKind::ALL.to_vec(),
            alpha_grid: uniform_grid(DEFAULT_GRID_POINTS),
            p_grid: uniform_grid(DEFAULT_GRID_POINTS),
            n_qubits: DEFAULT_N_QUBITS,
        }
    }
}

fn check_grid(name: &'static str, grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid { name, violation: GridViolation::Empty });
    }
    for (i, &v) in grid.iter().enumerate() {
        if !(0.0..=1.0).contains(&v) || v.is_nan() {
            return Err(Error::InvalidGrid { name, violation: GridViolation::OutOfRange { value: v } });
        }
        if i > 0 && grid[i - 1] >= v {
            return Err(Error::InvalidGrid { name, violation: GridViolation::NotAscending { index: i } });
        }
    }
    Ok(())
}

/// `points` uniform samples of `[0, 1]` inclusive; a single point is 0.
pub fn uniform_grid(points: usize) -> Vec<f64> {
    assert!(points >= 1, "grid needs at least one point");
    if points == 1 {
        return alloc::vec![0.0];
    }
    (0..points).map(|i| i as f64 / (points - 1) as f64).collect()
}

/// One sweep sample.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResultRow {
    pub channel: ChannelKind,
    pub alpha: f64,
    pub p: f64,
    pub mean_qfi: f64,
    pub chi_squared: f64,
}

/// Evaluates a single grid cell: build the superposition, push it through
/// the channel at strength `p`, and optimize the QFI over directions.
pub fn evaluate_row(channel: ChannelKind, alpha: f64, p: f64, n_qubits: usize) -> Result<ResultRow> {
    let psi = wghz_superposition(alpha, n_qubits)?;
    let rho = to_density(&psi);
    let noisy = apply_uniform(&rho, &make_channel(channel, p)?)?;
    let result = max_mean_qfi(&noisy)?;
    Ok(ResultRow { channel, alpha, p, mean_qfi: result.mean_qfi, chi_squared: result.chi_squared })
}

/// Runs the full Cartesian product in deterministic order: channel
/// outermost, then `alpha`, then `p`. Failures carry the offending cell.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<ResultRow>> {
    spec.validate()?;
    let mut rows = Vec::with_capacity(spec.row_count());
    for &channel in &spec.channels {
        for &alpha in &spec.alpha_grid {
            for &p in &spec.p_grid {
                let row = evaluate_row(channel, alpha, p, spec.n_qubits).map_err(|source| {
                    Error::Sweep { channel, alpha, p, source: Box::new(source) }
                })?;
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

/// Interior strict local minima of a series sorted by its first component.
///
/// A sample counts when both neighbors exceed it by more than
/// [`MINIMUM_STRICTNESS_TOL`]; plateaus of equal values are not minima and
/// endpoints are never reported.
pub fn find_interior_local_minima(series: &[(f64, f64)]) -> Result<Vec<f64>> {
    if series.len() < 3 {
        return Err(Error::SeriesTooShort { len: series.len() });
    }
    let mut minima = Vec::new();
    for i in 1..series.len() - 1 {
        let (_, prev) = series[i - 1];
        let (alpha, here) = series[i];
        let (_, next) = series[i + 1];
        if prev > here + MINIMUM_STRICTNESS_TOL && next > here + MINIMUM_STRICTNESS_TOL {
            minima.push(alpha);
        }
    }
    Ok(minima)
}
