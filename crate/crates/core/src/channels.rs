//! Single-qubit Kraus channels and their per-qubit application to a
//! register density matrix.
//!
//! Kraus conventions, with decoherence strength `p ∈ [0, 1]`:
//!
//! - amplitude damping (decay toward `|0⟩`):
//!   `K0 = [[1, 0], [0, √(1-p)]]`, `K1 = [[0, √p], [0, 0]]`
//! - phase damping:
//!   `K0 = [[1, 0], [0, √(1-p)]]`, `K1 = [[0, 0], [0, √p]]`
//! - depolarizing (fully mixing at `p = 1`):
//!   `{√(1-3p/4)·I, √(p/4)·σ_x, √(p/4)·σ_y, √(p/4)·σ_z}`,
//!   i.e. `ρ → (1-p)ρ + p·I/2` on one qubit.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_complex::Complex64;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::spin::{lift_to_register, pauli, Axis};
use crate::states::DensityMatrix;

/// Tolerance on the completeness relation `Σ K† K = I`.
pub const COMPLETENESS_TOL: f64 = 1e-12;

/// The three supported single-qubit noise channels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    AmplitudeDamping,
    PhaseDamping,
    Depolarizing,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 3] =
        [ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping, ChannelKind::Depolarizing];

    /// Canonical lowercase name used in CSV, JSON, and CLI flags.
    pub fn as_str(self) -> &'static str {
        match self {
            ChannelKind::AmplitudeDamping => "amplitude_damping",
            ChannelKind::PhaseDamping => "phase_damping",
            ChannelKind::Depolarizing => "depolarizing",
        }
    }
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ChannelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ChannelKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::UnknownChannel { name: s.into() })
    }
}

/// A single-qubit completely positive trace-preserving map in Kraus form.
#[derive(Clone, Debug)]
pub struct QubitChannel {
    kind: ChannelKind,
    p: f64,
    kraus: Vec<ComplexMatrix>,
}

impl QubitChannel {
    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn kraus(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    /// Largest entrywise deviation of `Σ K† K` from the identity.
    pub fn completeness_defect(&self) -> f64 {
        let mut sum = ComplexMatrix::zeros(2, 2);
        for k in &self.kraus {
            sum = sum.add(&k.adjoint().matmul(k));
        }
        sum.sub(&ComplexMatrix::identity(2))
            .entries()
            .iter()
            .map(|e| e.norm())
            .fold(0.0, f64::max)
    }
}

/// Builds the Kraus set for a channel kind at strength `p`.
pub fn make_channel(kind: ChannelKind, p: f64) -> Result<QubitChannel> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(Error::Domain { name: "p", value: p, min: 0.0, max: 1.0 });
    }
    let z = Complex64::new(0.0, 0.0);
    let re = |x: f64| Complex64::new(x, 0.0);
    let kraus = match kind {
        ChannelKind::AmplitudeDamping => vec![
            ComplexMatrix::two_by_two(re(1.0), z, z, re((1.0 - p).sqrt())),
            ComplexMatrix::two_by_two(z, re(p.sqrt()), z, z),
        ],
        ChannelKind::PhaseDamping => vec![
            ComplexMatrix::two_by_two(re(1.0), z, z, re((1.0 - p).sqrt())),
            ComplexMatrix::two_by_two(z, z, z, re(p.sqrt())),
        ],
        ChannelKind::Depolarizing => {
            let mut set = vec![ComplexMatrix::identity(2).scale(re((1.0 - 3.0 * p / 4.0).sqrt()))];
            let weight = re((p / 4.0).sqrt());
            for axis in Axis::ALL {
                set.push(pauli(axis).scale(weight));
            }
            set
        }
    };
    let channel = QubitChannel { kind, p, kraus };
    debug_assert!(channel.completeness_defect() <= COMPLETENESS_TOL);
    Ok(channel)
}

/// Applies the channel to one qubit: `ρ → Σ_k K̃_k ρ K̃_k†` with each Kraus
/// operator lifted to the full register at position `qubit`.
pub fn apply_to_qubit(rho: &DensityMatrix, ch: &QubitChannel, qubit: usize) -> Result<DensityMatrix> {
    let n = rho.n_qubits();
    if qubit >= n {
        return Err(Error::QubitIndex { index: qubit, n_qubits: n });
    }
    let dim = rho.dim();
    let mut out = ComplexMatrix::zeros(dim, dim);
    for k in &ch.kraus {
        let lifted = lift_to_register(k, qubit, n)?;
        out = out.add(&lifted.matmul(rho.matrix()).matmul(&lifted.adjoint()));
    }
    Ok(DensityMatrix::from_parts(n, out))
}

/// Applies the same channel to every qubit in turn. The per-qubit maps act
/// on disjoint qubits and commute, so the order does not matter; qubits are
/// visited in index order for determinism.
pub fn apply_uniform(rho: &DensityMatrix, ch: &QubitChannel) -> Result<DensityMatrix> {
    let mut out = rho.clone();
    for qubit in 0..rho.n_qubits() {
        out = apply_to_qubit(&out, ch, qubit)?;
    }
    Ok(out)
}
