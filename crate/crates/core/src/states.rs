//! Pure states of interest and their density operators.
//!
//! Basis convention: amplitude index `b` is the computational basis ket
//! `|b⟩` with qubit 0 as the most significant bit. All downstream results
//! for the symmetric states built here are invariant under qubit
//! reordering; the convention exists so that per-qubit channel application
//! has one tested meaning.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{DensityViolation, Error, Result};
use crate::linalg::{hermitian_eigendecompose, Complex64, ComplexMatrix};
use crate::QUBIT_CAP;

/// Tolerance on `Σ |amplitude|² = 1`.
pub const NORM_TOL: f64 = 1e-12;
/// Hermiticity tolerance accepted for density matrices.
pub const DENSITY_HERMITICITY_TOL: f64 = 1e-10;
/// Tolerance on `trace = 1` for density matrices.
pub const DENSITY_TRACE_TOL: f64 = 1e-10;
/// Eigenvalues of a density matrix may round off to at worst `-PSD_TOL`.
pub const DENSITY_PSD_TOL: f64 = 1e-9;

/// Unit-norm pure state of an N-qubit register.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Wraps an amplitude vector after checking length, finiteness, and
    /// unit norm (within [`NORM_TOL`]).
    pub fn new(n_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_register_size(n_qubits, 1)?;
        if amplitudes.len() != 1 << n_qubits {
            return Err(Error::TooFew {
                name: "amplitudes",
                value: amplitudes.len(),
                min: 1 << n_qubits,
            });
        }
        if !amplitudes.iter().all(|a| a.re.is_finite() && a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let psi = PureState { n_qubits, amplitudes };
        let norm = psi.norm();
        if (norm - 1.0).abs() > NORM_TOL || norm.is_nan() {
            return Err(Error::NotUnit { norm });
        }
        Ok(psi)
    }

    pub(crate) fn from_amplitudes(n_qubits: usize, amplitudes: Vec<Complex64>) -> Self {
        debug_assert_eq!(amplitudes.len(), 1 << n_qubits);
        PureState { n_qubits, amplitudes }
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Trace-one positive-semidefinite Hermitian operator on the register.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    n_qubits: usize,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Wraps a matrix after checking every density-matrix invariant
    /// (Hermiticity, unit trace, positive semidefiniteness).
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let dim = matrix.rows();
        if matrix.cols() != dim {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        let n_qubits = dim.trailing_zeros() as usize;
        if dim < 2 || dim != (1 << n_qubits) {
            return Err(Error::InvalidDensity(DensityViolation::BadDimension { dim }));
        }
        if n_qubits > QUBIT_CAP {
            return Err(Error::Capacity { n_qubits, cap: QUBIT_CAP });
        }
        let rho = DensityMatrix { n_qubits, matrix };
        rho.validate()?;
        Ok(rho)
    }

    /// Internal constructor for operators that preserve the invariants by
    /// construction.
    pub(crate) fn from_parts(n_qubits: usize, matrix: ComplexMatrix) -> Self {
        debug_assert_eq!(matrix.rows(), 1 << n_qubits);
        DensityMatrix { n_qubits, matrix }
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Re-checks Hermiticity, unit trace, and positive semidefiniteness.
    pub fn validate(&self) -> Result<()> {
        if !self.matrix.is_finite() {
            return Err(Error::NonFinite);
        }
        let deviation = self.matrix.max_hermiticity_deviation();
        if deviation > DENSITY_HERMITICITY_TOL {
            return Err(Error::NotHermitian { max_deviation: deviation, tol: DENSITY_HERMITICITY_TOL });
        }
        let trace = self.matrix.trace().re;
        if (trace - 1.0).abs() > DENSITY_TRACE_TOL {
            return Err(Error::InvalidDensity(DensityViolation::Trace {
                trace,
                tol: DENSITY_TRACE_TOL,
            }));
        }
        let eig = hermitian_eigendecompose(&self.matrix, DENSITY_HERMITICITY_TOL)?;
        let min = eig.eigenvalues()[0];
        if min < -DENSITY_PSD_TOL {
            return Err(Error::InvalidDensity(DensityViolation::NotPositive {
                min_eigenvalue: min,
                tol: DENSITY_PSD_TOL,
            }));
        }
        Ok(())
    }
}

fn check_register_size(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::TooFew { name: "n_qubits", value: n, min });
    }
    if n > QUBIT_CAP {
        return Err(Error::Capacity { n_qubits: n, cap: QUBIT_CAP });
    }
    Ok(())
}

/// Computational basis state labeled by a bit string, e.g. `"010"`.
pub fn basis_state(bits: &str) -> Result<PureState> {
    let n = bits.len();
    check_register_size(n, 1)?;
    let mut index = 0usize;
    for (position, ch) in bits.chars().enumerate() {
        index <<= 1;
        match ch {
            '0' => {}
            '1' => index |= 1,
            _ => return Err(Error::InvalidBits { position }),
        }
    }
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
    amplitudes[index] = Complex64::new(1.0, 0.0);
    Ok(PureState::from_amplitudes(n, amplitudes))
}

/// Equal superposition of all single-excitation basis states,
/// amplitude `1/√n` wherever exactly one qubit is `|1⟩`.
pub fn w_state(n: usize) -> Result<PureState> {
    check_register_size(n, 2)?;
    let amp = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
    for q in 0..n {
        amplitudes[1 << (n - 1 - q)] = amp;
    }
    Ok(PureState::from_amplitudes(n, amplitudes))
}

/// `(|0…0⟩ + |1…1⟩)/√2`.
pub fn ghz_state(n: usize) -> Result<PureState> {
    check_register_size(n, 2)?;
    let amp = Complex64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
    amplitudes[0] = amp;
    amplitudes[(1 << n) - 1] = amp;
    Ok(PureState::from_amplitudes(n, amplitudes))
}

/// `alpha · W + √(1 − alpha²) · GHZ` for `alpha ∈ [0, 1]`.
///
/// The two components have disjoint supports, so the result is unit norm
/// with no renormalization.
pub fn wghz_superposition(alpha: f64, n: usize) -> Result<PureState> {
    if !(0.0..=1.0).contains(&alpha) || alpha.is_nan() {
        return Err(Error::Domain { name: "alpha", value: alpha, min: 0.0, max: 1.0 });
    }
    let w = w_state(n)?;
    let g = ghz_state(n)?;
    let beta = (1.0 - alpha * alpha).sqrt();
    let amplitudes = w
        .amplitudes
        .iter()
        .zip(&g.amplitudes)
        .map(|(aw, ag)| aw.scale(alpha) + ag.scale(beta))
        .collect();
    Ok(PureState::from_amplitudes(n, amplitudes))
}

/// Rank-one projector `|ψ⟩⟨ψ|`.
pub fn to_density(psi: &PureState) -> DensityMatrix {
    let dim = psi.dim();
    let mut matrix = ComplexMatrix::zeros(dim, dim);
    for (i, ai) in psi.amplitudes.iter().enumerate() {
        if *ai == Complex64::new(0.0, 0.0) {
            continue;
        }
        for (j, aj) in psi.amplitudes.iter().enumerate() {
            matrix.set(i, j, ai * aj.conj());
        }
    }
    DensityMatrix::from_parts(psi.n_qubits, matrix)
}
