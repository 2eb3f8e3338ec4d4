//! Parallel sweep evaluation. Grid cells are independent pure-function
//! evaluations, so they fan out across threads and reassemble in the same
//! deterministic (channel, alpha, p) order the serial runner produces;
//! outputs are bit-identical to `qfi_core::run_sweep`.

use rayon::prelude::*;

use qfi_core::{evaluate_row, ChannelKind, Error, ResultRow, SweepSpec};

pub fn run_sweep_parallel(spec: &SweepSpec) -> Result<Vec<ResultRow>, Error> {
    spec.validate()?;
    let cells: Vec<(ChannelKind, f64, f64)> = spec
        .channels
        .iter()
        .flat_map(|&channel| {
            spec.alpha_grid.iter().flat_map(move |&alpha| {
                spec.p_grid.iter().map(move |&p| (channel, alpha, p))
            })
        })
        .collect();
    cells
        .into_par_iter()
        .map(|(channel, alpha, p)| {
            evaluate_row(channel, alpha, p, spec.n_qubits).map_err(|source| Error::Sweep {
                channel,
                alpha,
                p,
                source: Box::new(source),
            })
        })
        .collect()
}
