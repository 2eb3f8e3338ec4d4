//! Pauli matrices, collective angular-momentum operators, and rotation
//! directions.
//!
//! Conventions: σ_x = [[0,1],[1,0]], σ_y = [[0,-i],[i,0]],
//! σ_z = [[1,0],[0,-1]], with |0⟩ the +1 eigenvector of σ_z. The collective
//! operator along an axis is half the sum of that Pauli over all qubits.

use num_complex::Complex64;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{kron, ComplexMatrix};
use crate::QUBIT_CAP;

/// Tolerance on `nx² + ny² + nz² = 1` for rotation directions.
pub const DIRECTION_UNIT_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];
}

/// Unit vector fixing a rotation axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Direction {
    nx: f64,
    ny: f64,
    nz: f64,
}

impl Direction {
    /// Accepts a vector that is already unit length within
    /// [`DIRECTION_UNIT_TOL`].
    pub fn new(nx: f64, ny: f64, nz: f64) -> Result<Self> {
        let norm = (nx * nx + ny * ny + nz * nz).sqrt();
        if (norm - 1.0).abs() > DIRECTION_UNIT_TOL || norm.is_nan() {
            return Err(Error::NotUnit { norm });
        }
        Ok(Direction { nx, ny, nz })
    }

    /// Normalizes an arbitrary nonzero vector.
    pub fn normalized(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if norm <= 0.0 || !norm.is_finite() {
            return Err(Error::NotUnit { norm });
        }
        Ok(Direction { nx: x / norm, ny: y / norm, nz: z / norm })
    }

    pub fn axis(axis: Axis) -> Self {
        match axis {
            Axis::X => Direction { nx: 1.0, ny: 0.0, nz: 0.0 },
            Axis::Y => Direction { nx: 0.0, ny: 1.0, nz: 0.0 },
            Axis::Z => Direction { nx: 0.0, ny: 0.0, nz: 1.0 },
        }
    }

    #[inline]
    pub fn x(&self) -> f64 {
        self.nx
    }

    #[inline]
    pub fn y(&self) -> f64 {
        self.ny
    }

    #[inline]
    pub fn z(&self) -> f64 {
        self.nz
    }

    pub fn components(&self) -> [f64; 3] {
        [self.nx, self.ny, self.nz]
    }
}

/// The 2×2 Pauli matrix for an axis.
pub fn pauli(axis: Axis) -> ComplexMatrix {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    match axis {
        Axis::X => ComplexMatrix::two_by_two(zero, one, one, zero),
        Axis::Y => ComplexMatrix::two_by_two(
            zero,
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            zero,
        ),
        Axis::Z => ComplexMatrix::two_by_two(one, zero, zero, -one),
    }
}

/// Lifts a single-qubit operator to the full register with the operator at
/// `qubit` (qubit 0 = most significant bit).
pub(crate) fn lift_to_register(op: &ComplexMatrix, qubit: usize, n: usize) -> Result<ComplexMatrix> {
    let left = ComplexMatrix::identity(1 << qubit);
    let right = ComplexMatrix::identity(1 << (n - 1 - qubit));
    kron(&kron(&left, op)?, &right)
}

/// Collective operator `Σ_q σ_axis^(q) / 2` on an `n`-qubit register.
pub fn collective_j(axis: Axis, n: usize) -> Result<ComplexMatrix> {
    if n < 1 {
        return Err(Error::TooFew { name: "n_qubits", value: n, min: 1 });
    }
    if n > QUBIT_CAP {
        return Err(Error::Capacity { n_qubits: n, cap: QUBIT_CAP });
    }
    let half_pauli = pauli(axis).scale(Complex64::new(0.5, 0.0));
    let mut sum = ComplexMatrix::zeros(1 << n, 1 << n);
    for q in 0..n {
        sum = sum.add(&lift_to_register(&half_pauli, q, n)?);
    }
    Ok(sum)
}

/// Collective operator along an arbitrary unit direction:
/// `nx·J_x + ny·J_y + nz·J_z`.
pub fn directional_j(dir: &Direction, n: usize) -> Result<ComplexMatrix> {
    let jx = collective_j(Axis::X, n)?;
    let jy = collective_j(Axis::Y, n)?;
    let jz = collective_j(Axis::Z, n)?;
    Ok(jx
        .scale(Complex64::new(dir.x(), 0.0))
        .add(&jy.scale(Complex64::new(dir.y(), 0.0)))
        .add(&jz.scale(Complex64::new(dir.z(), 0.0))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_eigendecompose;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pauli_matrices() {
        let sx = pauli(Axis::X);
        assert_eq!(sx.get(0, 1), c(1.0, 0.0));
        assert_eq!(sx.get(1, 0), c(1.0, 0.0));
        assert_eq!(sx.get(0, 0), c(0.0, 0.0));

        let sz = pauli(Axis::Z);
        assert_eq!(sz.get(0, 0), c(1.0, 0.0));
        assert_eq!(sz.get(1, 1), c(-1.0, 0.0));

        let sy = pauli(Axis::Y);
        assert_eq!(sy.get(0, 1), c(0.0, -1.0));
        assert_eq!(sy.get(1, 0), c(0.0, 1.0));
        // y² = I, Hermitian, traceless.
        assert!(sy.matmul(&sy).frobenius_distance(&ComplexMatrix::identity(2)) <= 1e-15);
        assert_eq!(sy.max_hermiticity_deviation(), 0.0);
        assert_eq!(sy.trace(), c(0.0, 0.0));
    }

    #[test]
    fn collective_z_is_diagonal_in_excitation_count() {
        let jz = collective_j(Axis::Z, 1).unwrap();
        assert_eq!(jz.get(0, 0), c(0.5, 0.0));
        assert_eq!(jz.get(1, 1), c(-0.5, 0.0));

        let jz = collective_j(Axis::Z, 3).unwrap();
        for b in 0..8usize {
            let expected = (3.0 - 2.0 * b.count_ones() as f64) / 2.0;
            assert!((jz.get(b, b).re - expected).abs() <= 1e-15, "index {b}");
        }
        assert!((jz.get(0, 0).re - 1.5).abs() <= 1e-15);
        assert!((jz.get(7, 7).re + 1.5).abs() <= 1e-15);
    }

    #[test]
    fn collective_x_flips_single_bits() {
        let jx = collective_j(Axis::X, 2).unwrap();
        let e0 = [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let out = jx.mul_vec(&e0);
        assert_eq!(out[0], c(0.0, 0.0));
        assert!((out[1].re - 0.5).abs() <= 1e-15);
        assert!((out[2].re - 0.5).abs() <= 1e-15);
        assert_eq!(out[3], c(0.0, 0.0));
    }

    #[test]
    fn directional_axis_cases() {
        let d = Direction::new(0.0, 0.0, 1.0).unwrap();
        let jn = directional_j(&d, 3).unwrap();
        let jz = collective_j(Axis::Z, 3).unwrap();
        assert!(jn.frobenius_distance(&jz) <= 1e-15);

        let d = Direction::new(1.0, 0.0, 0.0).unwrap();
        let jn = directional_j(&d, 1).unwrap();
        let half_sx = pauli(Axis::X).scale(c(0.5, 0.0));
        assert!(jn.frobenius_distance(&half_sx) <= 1e-15);
    }

    #[test]
    fn tilted_direction_keeps_spin_half_spectrum() {
        let inv = core::f64::consts::FRAC_1_SQRT_2;
        let d = Direction::new(inv, 0.0, inv).unwrap();
        let jn = directional_j(&d, 1).unwrap();
        let eig = hermitian_eigendecompose(&jn, 1e-10).unwrap();
        assert!((eig.eigenvalues()[0] + 0.5).abs() <= 1e-12);
        assert!((eig.eigenvalues()[1] - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn spectrum_is_direction_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for n in 1..=3usize {
            let reference = hermitian_eigendecompose(&collective_j(Axis::Z, n).unwrap(), 1e-10)
                .unwrap()
                .eigenvalues()
                .to_vec();
            for _ in 0..5 {
                let d = Direction::normalized(
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                )
                .unwrap();
                let eig = hermitian_eigendecompose(&directional_j(&d, n).unwrap(), 1e-10).unwrap();
                for (a, b) in eig.eigenvalues().iter().zip(&reference) {
                    assert!((a - b).abs() <= 1e-10, "n={n} dir={d:?}");
                }
            }
        }
    }

    #[test]
    fn commutator_closes_cyclically() {
        for n in 1..=4usize {
            let jx = collective_j(Axis::X, n).unwrap();
            let jy = collective_j(Axis::Y, n).unwrap();
            let jz = collective_j(Axis::Z, n).unwrap();
            let pairs = [(&jx, &jy, &jz), (&jy, &jz, &jx), (&jz, &jx, &jy)];
            for (a, b, expected) in pairs {
                let commutator = a.matmul(b).sub(&b.matmul(a));
                let i_expected = expected.scale(c(0.0, 1.0));
                for (l, r) in commutator.entries().iter().zip(i_expected.entries()) {
                    assert!((l - r).norm() <= 1e-10);
                }
            }
        }
    }

    #[test]
    fn directional_is_the_exact_linear_combination() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let n = 3;
        let jx = collective_j(Axis::X, n).unwrap();
        let jy = collective_j(Axis::Y, n).unwrap();
        let jz = collective_j(Axis::Z, n).unwrap();
        for _ in 0..10 {
            let d = Direction::normalized(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            )
            .unwrap();
            let combo = jx
                .scale(c(d.x(), 0.0))
                .add(&jy.scale(c(d.y(), 0.0)))
                .add(&jz.scale(c(d.z(), 0.0)));
            assert_eq!(directional_j(&d, n).unwrap().entries(), combo.entries());
        }
    }

    #[test]
    fn direction_validation() {
        assert!(matches!(Direction::new(1.0, 1.0, 0.0), Err(Error::NotUnit { .. })));
        assert!(matches!(Direction::normalized(0.0, 0.0, 0.0), Err(Error::NotUnit { .. })));
        let d = Direction::normalized(3.0, 4.0, 0.0).unwrap();
        assert!((d.x() - 0.6).abs() <= 1e-15 && (d.y() - 0.8).abs() <= 1e-15);
    }

    #[test]
    fn collective_respects_cap() {
        assert!(matches!(collective_j(Axis::Z, QUBIT_CAP + 1), Err(Error::Capacity { .. })));
        assert!(matches!(collective_j(Axis::Z, 0), Err(Error::TooFew { .. })));
    }
}
