//! Error type shared by every module of the crate.

use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use crate::channels::ChannelKind;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors reported by constructors and numerical operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An operation that requires a square matrix received a rectangular one.
    NotSquare { rows: usize, cols: usize },
    /// Input deviates from its own adjoint by more than the tolerance.
    NotHermitian { max_deviation: f64, tol: f64 },
    /// The eigensolver could not reduce the off-diagonal mass.
    NoConvergence { dim: usize, sweeps: usize },
    /// A register larger than [`crate::QUBIT_CAP`] qubits was requested.
    Capacity { n_qubits: usize, cap: usize },
    /// A Kronecker product would exceed the dense-storage cap.
    KronTooLarge { rows: usize, cols: usize, max_dim: usize },
    /// A matrix entry is NaN or infinite.
    NonFinite,
    /// Scalar argument outside its closed valid range.
    Domain { name: &'static str, value: f64, min: f64, max: f64 },
    /// Scalar argument that must be strictly positive was not.
    NonPositive { name: &'static str, value: f64 },
    /// Integer argument below its minimum.
    TooFew { name: &'static str, value: usize, min: usize },
    /// A direction vector is not unit length.
    NotUnit { norm: f64 },
    /// A basis label contains a character other than '0' or '1'.
    InvalidBits { position: usize },
    /// Qubit index outside the register.
    QubitIndex { index: usize, n_qubits: usize },
    /// Unrecognized channel name.
    UnknownChannel { name: String },
    /// A density matrix violates one of its invariants.
    InvalidDensity(DensityViolation),
    /// A quantity that must be real kept a significant imaginary residue.
    ImaginaryResidue { residue: f64, tol: f64 },
    /// A directional QFI evaluated below the allowed round-off band.
    NegativeQfi { value: f64 },
    /// A sweep grid is empty, not strictly ascending, or out of range.
    InvalidGrid { name: &'static str, violation: GridViolation },
    /// Extremum detection needs at least three samples.
    SeriesTooShort { len: usize },
    /// Failure while evaluating one sweep cell, with the cell attached.
    Sweep { channel: ChannelKind, alpha: f64, p: f64, source: Box<Error> },
}

/// How a density matrix failed validation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DensityViolation {
    Trace { trace: f64, tol: f64 },
    NotPositive { min_eigenvalue: f64, tol: f64 },
    BadDimension { dim: usize },
}

/// How a sweep grid failed validation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridViolation {
    Empty,
    NotAscending { index: usize },
    OutOfRange { value: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows}x{cols}")
            }
            Error::NotHermitian { max_deviation, tol } => write!(
                f,
                "matrix is not Hermitian: max |a - a\u{2020}| entry {max_deviation:e} exceeds tolerance {tol:e}"
            ),
            Error::NoConvergence { dim, sweeps } => write!(
                f,
                "eigensolver did not converge on a {dim}x{dim} matrix after {sweeps} sweeps"
            ),
            Error::Capacity { n_qubits, cap } => write!(
                f,
                "register of {n_qubits} qubits exceeds the cap of {cap} (valid range 1..={cap})"
            ),
            Error::KronTooLarge { rows, cols, max_dim } => write!(
                f,
                "Kronecker product of size {rows}x{cols} exceeds the dense cap of {max_dim}"
            ),
            Error::NonFinite => write!(f, "matrix entry is NaN or infinite"),
            Error::Domain { name, value, min, max } => {
                write!(f, "{name} = {value} outside the valid range [{min}, {max}]")
            }
            Error::NonPositive { name, value } => {
                write!(f, "{name} = {value} must be > 0")
            }
            Error::TooFew { name, value, min } => {
                write!(f, "{name} = {value} must be at least {min}")
            }
            Error::NotUnit { norm } => {
                write!(f, "direction vector has norm {norm}, expected 1 within 1e-12")
            }
            Error::InvalidBits { position } => {
                write!(f, "basis label may contain only '0' and '1' (offending position {position})")
            }
            Error::QubitIndex { index, n_qubits } => {
                write!(f, "qubit index {index} out of range for a {n_qubits}-qubit register")
            }
            Error::UnknownChannel { name } => write!(
                f,
                "unknown channel \"{name}\" (expected amplitude_damping, phase_damping, or depolarizing)"
            ),
            Error::InvalidDensity(v) => write!(f, "invalid density matrix: {v}"),
            Error::ImaginaryResidue { residue, tol } => write!(
                f,
                "imaginary residue {residue:e} of a real-valued result exceeds tolerance {tol:e}"
            ),
            Error::NegativeQfi { value } => {
                write!(f, "directional QFI {value:e} is below the round-off band; input state is broken")
            }
            Error::InvalidGrid { name, violation } => write!(f, "invalid {name} grid: {violation}"),
            Error::SeriesTooShort { len } => {
                write!(f, "extremum detection needs at least 3 samples, got {len}")
            }
            Error::Sweep { channel, alpha, p, source } => write!(
                f,
                "sweep cell (channel={channel}, alpha={alpha}, p={p}) failed: {source}"
            ),
        }
    }
}

impl fmt::Display for DensityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DensityViolation::Trace { trace, tol } => {
                write!(f, "trace {trace} differs from 1 by more than {tol:e}")
            }
            DensityViolation::NotPositive { min_eigenvalue, tol } => {
                write!(f, "minimum eigenvalue {min_eigenvalue:e} is below -{tol:e}")
            }
            DensityViolation::BadDimension { dim } => {
                write!(f, "dimension {dim} is not a power of two >= 2")
            }
        }
    }
}

impl fmt::Display for GridViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridViolation::Empty => write!(f, "grid is empty"),
            GridViolation::NotAscending { index } => {
                write!(f, "grid is not strictly ascending at index {index}")
            }
            GridViolation::OutOfRange { value } => {
                write!(f, "grid value {value} outside [0, 1]")
            }
        }
    }
}
