//! Simulation toolkit for pairs of coupled three-Josephson-junction flux
//! qubits (3JJQs).
//!
//! The pipeline, end to end:
//! 1. [`circuit`] turns a declarative [`circuit::CircuitSpec`] into capacitance
//!    matrices and their renormalized inverse blocks.
//! 2. [`hamiltonian`] builds charge-basis Hamiltonians (single qubit, coupled
//!    pair, and a 1D reduced model) at a given Cooper-pair-number cutoff.
//! 3. [`numerics`] diagonalizes them (dense or Lanczos).
//! 4. [`effective`] projects onto the two-level subspaces via exact or
//!    perturbative Schrieffer-Wolff transformations and expresses the result
//!    as Pauli coefficients.
//! 5. [`harmonic`] provides closed-form harmonic-approximation predictions
//!    used as semi-quantitative cross-checks.
//! 6. [`plan`] drives config-defined parameter sweeps with CSV/JSONL output.

pub mod circuit;
pub mod effective;
pub mod hamiltonian;
pub mod harmonic;
pub mod numerics;
pub mod plan;
