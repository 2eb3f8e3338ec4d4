//! Quantum Fisher information from the spectral decomposition of a density
//! matrix.
//!
//! For a state with eigenvalues `p_i` and eigenvectors `|i⟩`, the QFI along
//! a rotation direction `n` generated by the collective spin `J_n` is
//!
//! ```text
//! F(ρ, J_n) = Σ_{i≠j} 2 (p_i - p_j)² / (p_i + p_j) |⟨i|J_n|j⟩|² = n C nᵀ,
//! ```
//!
//! where the 3×3 symmetric matrix `C` collects the same sums over the axis
//! pairs. The direction-optimal value is the largest eigenvalue of `C`; the
//! per-particle figure of merit is that eigenvalue divided by the register
//! size, and a state beats the shot-noise limit exactly when its inverse
//! (reported as `chi_squared`) is below one.
//!
//! Two independent evaluation routes are kept on purpose:
//! [`directional_qfi`] computes the double sum directly (never through `C`)
//! so that the quadratic-form identity is a cross-check rather than a
//! tautology, and [`pure_qfi_oracle`] evaluates pure states from state
//! vector expectation values alone, with no density matrix and no iterative
//! eigensolver anywhere in its path.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{DensityViolation, Error, Result};
use crate::linalg::{hermitian_eigendecompose, Complex64, ComplexMatrix, HermitianEigen};
use crate::spin::{collective_j, directional_j, Axis, Direction};
use crate::states::{DensityMatrix, PureState, DENSITY_HERMITICITY_TOL, DENSITY_PSD_TOL, DENSITY_TRACE_TOL};

/// Eigenvalue pairs with `p_i + p_j` below this are skipped: their weight
/// in the spectral sums vanishes continuously, and skipping avoids 0/0.
pub const DEFAULT_SPECTRUM_TOL: f64 = 1e-12;

/// Largest imaginary residue tolerated in the (mathematically real)
/// spectral sums before the input is declared broken.
pub const IMAGINARY_RESIDUE_TOL: f64 = 1e-10;

/// Directional QFI values in `[-NEGATIVE_QFI_BAND, 0)` are clamped to zero;
/// anything lower is reported as an error.
pub const NEGATIVE_QFI_BAND: f64 = 1e-8;

/// Below this the mean QFI is treated as zero and `chi_squared` becomes the
/// infinity sentinel.
pub const MEAN_QFI_FLOOR: f64 = 1e-15;

/// 3×3 real symmetric matrix whose quadratic form in a unit direction is
/// the directional QFI. Axis order is (x, y, z).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CMatrix {
    entries: [[f64; 3]; 3],
}

impl CMatrix {
    pub fn entries(&self) -> &[[f64; 3]; 3] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, k: usize, l: usize) -> f64 {
        self.entries[k][l]
    }

    /// `n C nᵀ` for a unit direction.
    pub fn quadratic_form(&self, dir: &Direction) -> f64 {
        let n = dir.components();
        let mut sum = 0.0;
        for k in 0..3 {
            for l in 0..3 {
                sum += n[k] * self.entries[k][l] * n[l];
            }
        }
        sum
    }

    fn to_complex(self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(3, 3);
        for k in 0..3 {
            for l in 0..3 {
                m.set(k, l, Complex64::new(self.entries[k][l], 0.0));
            }
        }
        m
    }
}

/// Direction-optimized QFI of a state.
#[derive(Clone, Debug)]
pub struct QfiResult {
    /// Largest eigenvalue of the C matrix divided by the register size.
    pub mean_qfi: f64,
    /// `n_qubits * mean_qfi`.
    pub total_qfi: f64,
    /// Unit eigenvector attached to the largest eigenvalue. For a
    /// degenerate top eigenvalue this is an arbitrary member of the top
    /// eigenspace; `mean_qfi` is unaffected by the choice.
    pub optimal_direction: Direction,
    /// `1 / mean_qfi`, or infinity when the mean QFI is zero.
    pub chi_squared: f64,
}

/// Shot-noise usefulness verdict derived from a [`QfiResult`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChiSquared {
    pub value: f64,
    /// True exactly when `value < 1`, i.e. mean QFI above one.
    pub useful: bool,
}

/// Eigendecomposes ρ and re-checks the density-matrix invariants that the
/// decomposition makes cheap to verify.
fn validated_spectrum(rho: &DensityMatrix) -> Result<HermitianEigen> {
    let trace = rho.matrix().trace().re;
    if (trace - 1.0).abs() > DENSITY_TRACE_TOL || trace.is_nan() {
        return Err(Error::InvalidDensity(DensityViolation::Trace {
            trace,
            tol: DENSITY_TRACE_TOL,
        }));
    }
    let eigen = hermitian_eigendecompose(rho.matrix(), DENSITY_HERMITICITY_TOL)?;
    let min = eigen.eigenvalues()[0];
    if min < -DENSITY_PSD_TOL {
        return Err(Error::InvalidDensity(DensityViolation::NotPositive {
            min_eigenvalue: min,
            tol: DENSITY_PSD_TOL,
        }));
    }
    Ok(eigen)
}

/// Conjugates an operator into the eigenbasis: `V† J V`.
fn into_eigenbasis(op: &ComplexMatrix, eigen: &HermitianEigen) -> ComplexMatrix {
    eigen.eigenvectors().adjoint().matmul(op).matmul(eigen.eigenvectors())
}

/// Builds the C matrix of a state from its spectral decomposition.
///
/// Eigenvalue pairs with `p_i + p_j < spectrum_tol` are skipped. The
/// bracketed sum is real up to round-off; its imaginary residue is checked
/// against [`IMAGINARY_RESIDUE_TOL`] and discarded.
pub fn c_matrix(rho: &DensityMatrix, spectrum_tol: f64) -> Result<CMatrix> {
    let eigen = &validated_spectrum(rho)?;
    let n = rho.n_qubits();
    let dim = rho.dim();

    let basis: Vec<ComplexMatrix> = {
        let mut out = Vec::with_capacity(3);
        for axis in Axis::ALL {
            out.push(into_eigenbasis(&collective_j(axis, n)?, eigen));
        }
        out
    };
    let values = eigen.eigenvalues();

    let mut entries = [[0.0f64; 3]; 3];
    for k in 0..3 {
        for l in k..3 {
            let mut sum = Complex64::new(0.0, 0.0);
            for i in 0..dim {
                for j in 0..dim {
                    if i == j {
                        continue;
                    }
                    let pi = values[i];
                    let pj = values[j];
                    if pi + pj < spectrum_tol {
                        continue;
                    }
                    let weight = (pi - pj) * (pi - pj) / (pi + pj);
                    let term =
                        basis[k].get(i, j) * basis[l].get(j, i) + basis[l].get(i, j) * basis[k].get(j, i);
                    sum += term.scale(weight);
                }
            }
            if sum.im.abs() > IMAGINARY_RESIDUE_TOL {
                return Err(Error::ImaginaryResidue {
                    residue: sum.im.abs(),
                    tol: IMAGINARY_RESIDUE_TOL,
                });
            }
            entries[k][l] = sum.re;
            entries[l][k] = sum.re;
        }
    }
    Ok(CMatrix { entries })
}

/// Directional QFI evaluated as the direct spectral double sum, not through
/// the C matrix.
pub fn directional_qfi(rho: &DensityMatrix, dir: &Direction, spectrum_tol: f64) -> Result<f64> {
    let eigen = &validated_spectrum(rho)?;
    let jn = into_eigenbasis(&directional_j(dir, rho.n_qubits())?, eigen);
    let values = eigen.eigenvalues();
    let dim = rho.dim();

    let mut sum = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            if i == j {
                continue;
            }
            let pi = values[i];
            let pj = values[j];
            if pi + pj < spectrum_tol {
                continue;
            }
            sum += 2.0 * (pi - pj) * (pi - pj) / (pi + pj) * jn.get(i, j).norm_sqr();
        }
    }
    if sum < -NEGATIVE_QFI_BAND {
        return Err(Error::NegativeQfi { value: sum });
    }
    Ok(sum.max(0.0))
}

/// Direction-optimized mean QFI: the largest eigenvalue of the C matrix
/// divided by the register size, together with the optimizing direction and
/// the shot-noise figure `chi_squared`.
pub fn max_mean_qfi(rho: &DensityMatrix) -> Result<QfiResult> {
    let c = c_matrix(rho, DEFAULT_SPECTRUM_TOL)?;
    let eigen = hermitian_eigendecompose(&c.to_complex(), 1e-10)?;
    let lambda_max = eigen.eigenvalues()[2].max(0.0);
    let top = eigen.eigenvector(2);
    let optimal_direction = Direction::normalized(top[0].re, top[1].re, top[2].re)?;

    let n = rho.n_qubits() as f64;
    let mean_qfi = lambda_max / n;
    let chi_squared = if mean_qfi < MEAN_QFI_FLOOR { f64::INFINITY } else { 1.0 / mean_qfi };
    Ok(QfiResult { mean_qfi, total_qfi: lambda_max, optimal_direction, chi_squared })
}

/// `1 / mean_qfi` with the usefulness flag; infinite when the mean QFI is
/// zero, and the `chi_squared < 1` boundary itself does not count as useful.
pub fn chi_squared(result: &QfiResult) -> ChiSquared {
    let value =
        if result.mean_qfi < MEAN_QFI_FLOOR { f64::INFINITY } else { 1.0 / result.mean_qfi };
    ChiSquared { value, useful: value < 1.0 }
}

/// Phase-uncertainty floor `1/√(n_measurements · total_qfi)` after
/// `n_measurements` independent repetitions.
pub fn cramer_rao_bound(total_qfi: f64, n_measurements: u64) -> Result<f64> {
    if total_qfi <= 0.0 || total_qfi.is_nan() {
        return Err(Error::NonPositive { name: "total_qfi", value: total_qfi });
    }
    if n_measurements < 1 {
        return Err(Error::TooFew { name: "n_measurements", value: 0, min: 1 });
    }
    Ok(1.0 / (n_measurements as f64 * total_qfi).sqrt())
}

/// Independent mean-QFI oracle for pure states.
///
/// Works entirely on the state vector: applies each collective spin
/// operator by bit manipulation, forms the covariance matrix
/// `2(⟨J_k J_l + J_l J_k⟩ - 2⟨J_k⟩⟨J_l⟩)`, and takes its largest eigenvalue
/// by the closed-form solution for symmetric 3×3 matrices. No density
/// matrix and no iterative eigensolver are involved, so this is a genuinely
/// independent check of the spectral path.
pub fn pure_qfi_oracle(psi: &PureState) -> f64 {
    let n = psi.n_qubits();
    let applied = [
        apply_collective(psi, Axis::X),
        apply_collective(psi, Axis::Y),
        apply_collective(psi, Axis::Z),
    ];

    let mut means = [0.0f64; 3];
    for (k, phi) in applied.iter().enumerate() {
        means[k] = psi
            .amplitudes()
            .iter()
            .zip(phi)
            .map(|(a, b)| (a.conj() * b).re)
            .sum();
    }

    let mut c = [[0.0f64; 3]; 3];
    for k in 0..3 {
        for l in k..3 {
            let overlap: f64 = applied[k]
                .iter()
                .zip(&applied[l])
                .map(|(a, b)| (a.conj() * b).re)
                .sum();
            let value = 4.0 * (overlap - means[k] * means[l]);
            c[k][l] = value;
            c[l][k] = value;
        }
    }
    sym3_max_eigenvalue(&c).max(0.0) / n as f64
}

/// `J_axis |ψ⟩` by direct bit manipulation (qubit 0 = most significant bit).
fn apply_collective(psi: &PureState, axis: Axis) -> Vec<Complex64> {
    let n = psi.n_qubits();
    let dim = psi.dim();
    let amps = psi.amplitudes();
    let mut out = alloc::vec![Complex64::new(0.0, 0.0); dim];
    match axis {
        Axis::X => {
            for b in 0..dim {
                let a = amps[b];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for q in 0..n {
                    out[b ^ (1 << (n - 1 - q))] += a.scale(0.5);
                }
            }
        }
        Axis::Y => {
            for b in 0..dim {
                let a = amps[b];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for q in 0..n {
                    let mask = 1 << (n - 1 - q);
                    // σ_y sends |0⟩ to i|1⟩ and |1⟩ to -i|0⟩.
                    let coeff = if b & mask == 0 {
                        Complex64::new(0.0, 0.5)
                    } else {
                        Complex64::new(0.0, -0.5)
                    };
                    out[b ^ mask] += a * coeff;
                }
            }
        }
        Axis::Z => {
            for b in 0..dim {
                let weight = (n as f64 - 2.0 * (b.count_ones() as f64)) / 2.0;
                out[b] = amps[b].scale(weight);
            }
        }
    }
    out
}

/// Largest eigenvalue of a symmetric 3×3 matrix via the trigonometric
/// closed form for the characteristic cubic.
fn sym3_max_eigenvalue(m: &[[f64; 3]; 3]) -> f64 {
    let p1 = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
    if p1 == 0.0 {
        return m[0][0].max(m[1][1]).max(m[2][2]);
    }
    let q = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
    let p2 = (m[0][0] - q) * (m[0][0] - q)
        + (m[1][1] - q) * (m[1][1] - q)
        + (m[2][2] - q) * (m[2][2] - q)
        + 2.0 * p1;
    let p = (p2 / 6.0).sqrt();
    if p == 0.0 {
        return q;
    }
    let b = [
        [(m[0][0] - q) / p, m[0][1] / p, m[0][2] / p],
        [m[0][1] / p, (m[1][1] - q) / p, m[1][2] / p],
        [m[0][2] / p, m[1][2] / p, (m[2][2] - q) / p],
    ];
    let det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1])
        - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
        + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    let r = (det / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    q + 2.0 * p * phi.cos()
}
