//! Josephson-junction coupling: strong sigma-x sigma-x interaction.
//!
//! A weak junction between the two qubits couples their persistent currents,
//! producing a J_xx term that dominates J_yy and J_zz by two to three orders
//! of magnitude — the opposite hierarchy of the capacitive coupler. At strong
//! coupling the low and high subspaces hybridize and the Schrieffer-Wolff
//! extraction correctly refuses to produce numbers (SubspaceMismatch).
//!
//! Run with: cargo run --release --example junction_coupling

use fluxq::circuit::{capacitance_network, CircuitSpec, CouplerSpec, QubitParams};
use fluxq::effective::{pauli_decompose, qubit_projector, swt_effective, SolverSettings};
use fluxq::hamiltonian::build_hamiltonians;

fn main() {
    let settings = SolverSettings::default();
    let cutoff = 4;

    let q = QubitParams::new(0.7, 50.0, 0.0, 0.5, 0);
    println!("# junction-coupled pair: alpha=0.7, r=50, cutoff N={cutoff} (couplings in E_J)");
    println!(
        "{:>8} {:>13} {:>13} {:>13} {:>12}",
        "gamma", "J_xx", "J_yy", "J_zz", "xx-dominance"
    );
    for gamma in [1e-3, 3e-3, 1e-2, 3e-2, 1e-1] {
        let spec = CircuitSpec::pair(q, q, vec![CouplerSpec::junction(gamma, (0, 2), (1, 1))]);
        let network = capacitance_network(&spec).expect("valid circuit");
        let pair = build_hamiltonians(&spec, &network, cutoff).expect("build");
        let sub = qubit_projector(&pair).expect("qubit subspace");
        let p = pauli_decompose(&swt_effective(&pair.h, &sub, settings).expect("SWT"))
            .expect("pauli");
        let dominance = p.pair[0][0].abs() / p.pair[1][1].abs().max(p.pair[2][2].abs());
        println!(
            "{:>8.0e} {:>13.4e} {:>13.4e} {:>13.4e} {:>12.1}",
            gamma,
            p.pair[0][0],
            p.pair[1][1],
            p.pair[2][2],
            dominance
        );
    }

    // With both qubits grounded at an inner loop node and a strong junction
    // between the remaining outer nodes, the coupled ground manifold stops
    // resembling a tensor product of qubit states.
    println!("\n# strong coupling between inner-grounded qubits: hybridization breakdown");
    let qa = QubitParams::new(0.7, 50.0, 0.0, 0.5, 1);
    let qb = QubitParams::new(0.7, 50.0, 0.0, 0.5, 2);
    for gamma in [0.5, 1.0, 2.0] {
        let spec = CircuitSpec::pair(qa, qb, vec![CouplerSpec::junction(gamma, (0, 0), (1, 0))]);
        let network = capacitance_network(&spec).expect("valid circuit");
        let pair = build_hamiltonians(&spec, &network, cutoff).expect("build");
        let sub = qubit_projector(&pair).expect("qubit subspace");
        match swt_effective(&pair.h, &sub, settings) {
            Ok(eff) => {
                let p = pauli_decompose(&eff).expect("pauli");
                println!("  gamma={gamma}: J_xx = {:.4e}", p.pair[0][0]);
            }
            Err(e) => println!("  gamma={gamma}: {e}"),
        }
    }
}
