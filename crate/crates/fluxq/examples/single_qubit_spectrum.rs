//! Single flux-qubit spectrum in the charge basis.
//!
//! Builds one three-junction flux qubit at frustration (f = 1/2), diagonalizes
//! it at increasing charge cutoffs to show convergence, and prints the qubit
//! gap together with the persistent-current matrix element that defines the
//! sigma-x axis.
//!
//! Run with: cargo run --release --example single_qubit_spectrum

use fluxq::circuit::{capacitance_network, CircuitSpec, QubitParams};
use fluxq::hamiltonian::{build_hamiltonians, converged_cutoff};
use fluxq::numerics::{eigh_dense_lowest, C64};
use nalgebra::DVector;

fn main() {
    let (alpha, r) = (0.7, 50.0);
    let spec = CircuitSpec::single(QubitParams::new(alpha, r, 0.0, 0.5, 0));
    let network = capacitance_network(&spec).expect("valid circuit");

    println!("# single 3JJQ: alpha={alpha}, r={r}, f=1/2 (energies in E_J)");
    println!("{:>6} {:>8} {:>16} {:>16} {:>14}", "cutoff", "dim", "E0", "E1", "gap");
    for cutoff in 2..=8 {
        let pair = build_hamiltonians(&spec, &network, cutoff).expect("build");
        let h = &pair.single_qubit[0];
        let spectrum = eigh_dense_lowest(&h.matrix.to_dense(), 2).expect("eigensolve");
        println!(
            "{:>6} {:>8} {:>16.10} {:>16.10} {:>14.6e}",
            cutoff,
            h.space.total_dim(),
            spectrum.eigenvalues[0],
            spectrum.eigenvalues[1],
            spectrum.gap()
        );
    }

    let auto = converged_cutoff(&spec).expect("auto cutoff");
    println!("\nautomatic cutoff choice: N = {auto}");

    // The persistent-current operator -alpha sin(phi_loop - 2 pi f) couples
    // the two qubit states off-diagonally; its diagonal elements vanish by
    // parity at frustration. This element fixes the sigma-x axis of the qubit.
    let pair = build_hamiltonians(&spec, &network, 8).expect("build");
    let spectrum =
        eigh_dense_lowest(&pair.single_qubit[0].matrix.to_dense(), 2).expect("eigensolve");
    let v0: DVector<C64> = spectrum.eigenvectors.column(0).into();
    let v1: DVector<C64> = spectrum.eigenvectors.column(1).into();
    let current = &pair.current_single[0].matrix;
    println!("\npersistent-current matrix elements at N=8:");
    println!("  <0|I|0> = {:.3e}   (parity-forbidden)", v0.dotc(&current.matvec(&v0)).norm());
    println!("  <1|I|1> = {:.3e}   (parity-forbidden)", v1.dotc(&current.matvec(&v1)).norm());
    println!("  |<0|I|1>| = {:.6}", v0.dotc(&current.matvec(&v1)).norm());
}
