//! Dense complex matrices and a Hermitian eigensolver.
//!
//! Storage is row-major `Vec<Complex64>`. The eigensolver is a cyclic
//! complex Jacobi iteration: each rotation first removes the phase of the
//! targeted off-diagonal entry and then applies the classic symmetric
//! 2×2 rotation, so the working matrix stays exactly Hermitian (the
//! mirrored entries are bit-for-bit conjugates). The iteration order is
//! fixed, which makes the output deterministic for identical input bits.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::MAX_DENSE_DIM;

pub use num_complex::Complex64;

/// Default tolerance on `max |a - a†|` accepted by the eigensolver.
pub const DEFAULT_HERMITICITY_TOL: f64 = 1e-10;

const MAX_JACOBI_SWEEPS: usize = 100;

/// Dense complex matrix with deterministic row-major addressing.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        ComplexMatrix { rows, cols, entries: vec![Complex64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from a row-major entry list, rejecting wrong entry
    /// counts and non-finite values.
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        if entries.len() != rows * cols {
            return Err(Error::TooFew { name: "entries", value: entries.len(), min: rows * cols });
        }
        let m = ComplexMatrix { rows, cols, entries };
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(m)
    }

    /// 2×2 matrix from the row-major entries `[[a, b], [c, d]]`.
    pub fn two_by_two(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        ComplexMatrix { rows: 2, cols: 2, entries: vec![a, b, c, d] }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn add(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        ComplexMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sub");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        ComplexMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, factor: Complex64) -> ComplexMatrix {
        let entries = self.entries.iter().map(|a| a * factor).collect();
        ComplexMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn matmul(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch in matmul");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.entries[i * self.cols + k];
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let out_row = &mut out.entries[i * rhs.cols..(i + 1) * rhs.cols];
                let rhs_row = &rhs.entries[k * rhs.cols..(k + 1) * rhs.cols];
                for (o, b) in out_row.iter_mut().zip(rhs_row) {
                    *o += aik * b;
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.entries[i * self.cols + j].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        assert_eq!(self.rows, self.cols, "trace requires a square matrix");
        (0..self.rows).map(|i| self.entries[i * self.cols + i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn frobenius_distance(&self, rhs: &ComplexMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in distance");
        self.entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len(), "vector length mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                self.entries[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, x)| a * x)
                    .sum()
            })
            .collect()
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|e| e.re.is_finite() && e.im.is_finite())
    }

    /// Largest entrywise deviation from the adjoint, `max |a_ij - conj(a_ji)|`.
    pub fn max_hermiticity_deviation(&self) -> f64 {
        assert_eq!(self.rows, self.cols, "Hermiticity is defined for square matrices");
        let n = self.rows;
        let mut max = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let dev = (self.entries[i * n + j] - self.entries[j * n + i].conj()).norm();
                max = max.max(dev);
            }
        }
        max
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let e = self.get(i, j);
                write!(f, "{:+.4}{:+.4}i ", e.re, e.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Kronecker product; block `(i, j)` of the result equals `a[i, j] * b`.
///
/// Dimensions beyond [`MAX_DENSE_DIM`] in either direction are refused so
/// that register-size mistakes fail fast instead of exhausting memory.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let cap_err = || Error::KronTooLarge {
        rows: a.rows.saturating_mul(b.rows),
        cols: a.cols.saturating_mul(b.cols),
        max_dim: MAX_DENSE_DIM,
    };
    let rows = a.rows.checked_mul(b.rows).ok_or_else(cap_err)?;
    let cols = a.cols.checked_mul(b.cols).ok_or_else(cap_err)?;
    if rows > MAX_DENSE_DIM || cols > MAX_DENSE_DIM {
        return Err(cap_err());
    }
    let mut out = ComplexMatrix::zeros(rows, cols);
    for ia in 0..a.rows {
        for ja in 0..a.cols {
            let factor = a.get(ia, ja);
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            for ib in 0..b.rows {
                let row = ia * b.rows + ib;
                for jb in 0..b.cols {
                    out.entries[row * cols + ja * b.cols + jb] = factor * b.get(ib, jb);
                }
            }
        }
    }
    Ok(out)
}

/// Eigensystem of a Hermitian matrix.
///
/// Eigenvalues are real and sorted ascending; column `i` of `eigenvectors`
/// is the unit eigenvector paired with `eigenvalues[i]`. The eigenvector
/// basis inside a degenerate eigenvalue cluster is an arbitrary orthonormal
/// choice.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    eigenvalues: Vec<f64>,
    eigenvectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    /// Copy of the `i`-th eigenvector.
    pub fn eigenvector(&self, i: usize) -> Vec<Complex64> {
        let n = self.eigenvectors.rows();
        (0..n).map(|k| self.eigenvectors.get(k, i)).collect()
    }

    /// Rebuilds `Σ λ_i v_i v_i†`; the residual against the input is the
    /// decomposition's own quality certificate.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.eigenvectors.rows();
        let mut out = ComplexMatrix::zeros(n, n);
        for (i, &lambda) in self.eigenvalues.iter().enumerate() {
            for r in 0..n {
                let vr = self.eigenvectors.get(r, i);
                for c in 0..n {
                    let vc = self.eigenvectors.get(c, i).conj();
                    out.entries[r * n + c] += vr * vc * lambda;
                }
            }
        }
        out
    }
}

/// Diagonalizes a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// The input must be square and Hermitian within `tol`
/// (see [`DEFAULT_HERMITICITY_TOL`]); it is symmetrized once up front so
/// that drift within the tolerance cannot leak into the iteration.
pub fn hermitian_eigendecompose(a: &ComplexMatrix, tol: f64) -> Result<HermitianEigen> {
    if a.rows != a.cols {
        return Err(Error::NotSquare { rows: a.rows, cols: a.cols });
    }
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    let deviation = a.max_hermiticity_deviation();
    if deviation > tol {
        return Err(Error::NotHermitian { max_deviation: deviation, tol });
    }

    let n = a.rows;
    // Symmetrized working copy: m = (a + a†)/2 with an exactly real diagonal.
    let mut m: Vec<Complex64> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                m.push(Complex64::new(a.get(i, i).re, 0.0));
            } else {
                m.push((a.get(i, j) + a.get(j, i).conj()).scale(0.5));
            }
        }
    }
    let mut v: Vec<Complex64> = ComplexMatrix::identity(n).entries;

    let scale = m.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt();
    let target = scale * f64::EPSILON * (n as f64);

    let mut sweeps = 0;
    while sweeps < MAX_JACOBI_SWEEPS {
        let off = off_diagonal_norm(&m, n);
        if off <= target {
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                jacobi_rotate(&mut m, &mut v, n, p, q);
            }
        }
        sweeps += 1;
    }
    if off_diagonal_norm(&m, n) > scale.max(1.0) * 1e-10 {
        return Err(Error::NoConvergence { dim: n, sweeps });
    }

    // Sort ascending; ties keep the iteration's column order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i * n + i].re.total_cmp(&m[j * n + j].re));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| m[i * n + i].re).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            eigenvectors.set(row, new_col, v[row * n + old_col]);
        }
    }

    Ok(HermitianEigen { eigenvalues, eigenvectors })
}

fn off_diagonal_norm(m: &[Complex64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += m[i * n + j].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// One Jacobi rotation zeroing the (p, q) entry of the Hermitian matrix `m`
/// while accumulating the similarity transform into `v`.
fn jacobi_rotate(m: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = m[p * n + q];
    let r = apq.norm();
    if r < 1e-306 {
        return;
    }
    let app = m[p * n + p].re;
    let aqq = m[q * n + q].re;
    // Unit phase u makes the pivot real: conj(u) * apq = r.
    let u = apq.unscale(r);
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (tau - (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let ucp = u.scale(c);
    let usp = u.scale(s);

    // Column update: M <- M J with J[p][p]=u*c, J[p][q]=u*s, J[q][p]=-s, J[q][q]=c.
    for k in 0..n {
        let mkp = m[k * n + p];
        let mkq = m[k * n + q];
        m[k * n + p] = mkp * ucp - mkq.scale(s);
        m[k * n + q] = mkp * usp + mkq.scale(c);
    }
    // Row update: M <- J† M.
    for k in 0..n {
        let mpk = m[p * n + k];
        let mqk = m[q * n + k];
        m[p * n + k] = ucp.conj() * mpk - mqk.scale(s);
        m[q * n + k] = usp.conj() * mpk + mqk.scale(c);
    }
    // The pivot pair is zero analytically and the new diagonal values are
    // real; write them directly instead of keeping the rounding noise.
    m[p * n + q] = Complex64::new(0.0, 0.0);
    m[q * n + p] = Complex64::new(0.0, 0.0);
    m[p * n + p] = Complex64::new(app - t * r, 0.0);
    m[q * n + q] = Complex64::new(aqq + t * r, 0.0);

    // Accumulate V <- V J.
    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = vkp * ucp - vkq.scale(s);
        v[k * n + q] = vkp * usp + vkq.scale(c);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn approx_eq(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> bool {
        a.frobenius_distance(b) <= tol
    }

    fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c(rng.gen_range(-1.0..1.0), 0.0));
            for j in (i + 1)..n {
                let e = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                m.set(i, j, e);
                m.set(j, i, e.conj());
            }
        }
        m
    }

    #[test]
    fn kron_identities() {
        let i2 = ComplexMatrix::identity(2);
        let i4 = kron(&i2, &i2).unwrap();
        assert!(approx_eq(&i4, &ComplexMatrix::identity(4), 0.0));

        let sz = ComplexMatrix::two_by_two(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0));
        let sz_i = kron(&sz, &i2).unwrap();
        let expected = {
            let mut m = ComplexMatrix::zeros(4, 4);
            for (i, d) in [1.0, 1.0, -1.0, -1.0].iter().enumerate() {
                m.set(i, i, c(*d, 0.0));
            }
            m
        };
        assert!(approx_eq(&sz_i, &expected, 0.0));
    }

    #[test]
    fn kron_bit_flips_both_qubits() {
        let sx = ComplexMatrix::two_by_two(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0));
        let xx = kron(&sx, &sx).unwrap();
        let e0 = [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let out = xx.mul_vec(&e0);
        assert_eq!(out[3], c(1.0, 0.0));
        assert!(out[..3].iter().all(|&x| x == c(0.0, 0.0)));
    }

    #[test]
    fn kron_rejects_oversized_result() {
        let big = ComplexMatrix::identity(MAX_DENSE_DIM);
        let err = kron(&big, &ComplexMatrix::identity(2)).unwrap_err();
        assert!(matches!(err, Error::KronTooLarge { .. }));
    }

    #[test]
    fn kron_is_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random_hermitian(2, &mut rng);
        let b = random_hermitian(3, &mut rng);
        let d = random_hermitian(2, &mut rng);
        let left = kron(&kron(&a, &b).unwrap(), &d).unwrap();
        let right = kron(&a, &kron(&b, &d).unwrap()).unwrap();
        assert_eq!((left.rows(), left.cols()), (right.rows(), right.cols()));
        for (x, y) in left.entries().iter().zip(right.entries()) {
            assert!((x - y).norm() <= 1e-12);
        }
    }

    #[test]
    fn eigendecompose_identity() {
        let eig = hermitian_eigendecompose(&ComplexMatrix::identity(8), 1e-10).unwrap();
        for &lambda in eig.eigenvalues() {
            assert!((lambda - 1.0).abs() <= 1e-14);
        }
    }

    #[test]
    fn eigendecompose_pauli_z() {
        let sz = ComplexMatrix::two_by_two(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0));
        let eig = hermitian_eigendecompose(&sz, 1e-10).unwrap();
        assert!((eig.eigenvalues()[0] + 1.0).abs() <= 1e-14);
        assert!((eig.eigenvalues()[1] - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn eigendecompose_reconstructs_random_hermitian() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = random_hermitian(8, &mut rng);
        let eig = hermitian_eigendecompose(&a, 1e-10).unwrap();

        assert!(approx_eq(&eig.reconstruct(), &a, 1e-10));

        // V† V = I within 1e-10 (Frobenius).
        let vtv = eig.eigenvectors().adjoint().matmul(eig.eigenvectors());
        assert!(approx_eq(&vtv, &ComplexMatrix::identity(8), 1e-10));

        // A v_i = λ_i v_i per column, relative to ||A||.
        let norm = a.frobenius_norm();
        for (i, &lambda) in eig.eigenvalues().iter().enumerate() {
            let vi = eig.eigenvector(i);
            let av = a.mul_vec(&vi);
            let residual: f64 = av
                .iter()
                .zip(&vi)
                .map(|(l, r)| (l - r.scale(lambda)).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(residual <= 1e-10 * norm.max(1.0), "column {i} residual {residual:e}");
        }

        // Ascending order.
        for w in eig.eigenvalues().windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn eigendecompose_is_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let a = random_hermitian(16, &mut rng);
        let e1 = hermitian_eigendecompose(&a, 1e-10).unwrap();
        let e2 = hermitian_eigendecompose(&a, 1e-10).unwrap();
        assert_eq!(e1.eigenvalues(), e2.eigenvalues());
        assert_eq!(e1.eigenvectors().entries(), e2.eigenvectors().entries());
    }

    #[test]
    fn eigenvalue_sum_matches_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let a = random_hermitian(8, &mut rng);
            let eig = hermitian_eigendecompose(&a, 1e-10).unwrap();
            let sum: f64 = eig.eigenvalues().iter().sum();
            let tr = a.trace().re;
            assert!((sum - tr).abs() <= 1e-9 * tr.abs().max(1.0));
        }
    }

    #[test]
    fn unitary_similarity_preserves_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_hermitian(8, &mut rng);
        // The eigenvector matrix of an unrelated Hermitian matrix is unitary.
        let u = hermitian_eigendecompose(&random_hermitian(8, &mut rng), 1e-10)
            .unwrap()
            .eigenvectors()
            .clone();
        let rotated = u.matmul(&a).matmul(&u.adjoint());
        let e1 = hermitian_eigendecompose(&a, 1e-10).unwrap();
        let e2 = hermitian_eigendecompose(&rotated, 1e-8).unwrap();
        for (l1, l2) in e1.eigenvalues().iter().zip(e2.eigenvalues()) {
            assert!((l1 - l2).abs() <= 1e-9 * l1.abs().max(1.0));
        }
    }

    #[test]
    fn eigendecompose_rejects_non_square() {
        let m = ComplexMatrix::zeros(2, 3);
        assert!(matches!(
            hermitian_eigendecompose(&m, 1e-10),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn eigendecompose_rejects_non_hermitian() {
        let mut m = ComplexMatrix::identity(2);
        m.set(0, 1, c(1.0, 0.0));
        let err = hermitian_eigendecompose(&m, 1e-10).unwrap_err();
        match err {
            Error::NotHermitian { max_deviation, .. } => {
                assert!((max_deviation - 1.0).abs() < 1e-12)
            }
            other => panic!("expected NotHermitian, got {other:?}"),
        }
    }

    #[test]
    fn from_vec_rejects_non_finite() {
        let err = ComplexMatrix::from_vec(1, 2, vec![c(1.0, 0.0), c(f64::NAN, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::NonFinite));
    }
}
