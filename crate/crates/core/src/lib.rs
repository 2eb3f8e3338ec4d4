//! Quantum Fisher information (QFI) of small qubit registers under
//! single-qubit decoherence channels.
//!
//! The crate computes the rotation-direction-optimized mean QFI of an
//! N-qubit density matrix from its spectral decomposition: the QFI along a
//! unit direction `n` is the quadratic form `n C nᵀ` of a 3×3 symmetric
//! matrix built from collective spin operators, and the optimum over all
//! directions is the largest eigenvalue of that matrix. On top of the
//! kernel sit the states of interest (W, GHZ, and their real superposition),
//! the three standard noise channels in Kraus form, and a deterministic
//! scenario runner that sweeps the superposition weight and the channel
//! strength.
//!
//! The crate is `no_std` (with `alloc`); everything that does IO lives in
//! the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod channels;
pub mod error;
pub mod linalg;
pub mod qfi;
pub mod spin;
pub mod states;
pub mod sweep;

pub use channels::{apply_to_qubit, apply_uniform, make_channel, ChannelKind, QubitChannel};
pub use error::{Error, Result};
pub use linalg::{hermitian_eigendecompose, kron, Complex64, ComplexMatrix, HermitianEigen};
pub use qfi::{
    c_matrix, chi_squared, cramer_rao_bound, directional_qfi, max_mean_qfi, pure_qfi_oracle,
    CMatrix, ChiSquared, QfiResult,
};
pub use spin::{collective_j, directional_j, pauli, Axis, Direction};
pub use states::{basis_state, ghz_state, to_density, w_state, wghz_superposition, DensityMatrix, PureState};
pub use sweep::{
    evaluate_row, find_interior_local_minima, run_sweep, uniform_grid, ResultRow, SweepSpec,
};

/// Largest supported register size. Density matrices are stored densely, so
/// the cap keeps allocations at or below 1024×1024 complex entries.
pub const QUBIT_CAP: usize = 10;

/// Largest dense matrix dimension any operator construction may produce.
pub const MAX_DENSE_DIM: usize = 1 << QUBIT_CAP;
