//! Perturbative vs exact effective Hamiltonians.
//!
//! For a weakly junction-coupled pair, compares the exact Schrieffer-Wolff
//! effective Hamiltonian with its order-1 and order-2 perturbative
//! counterparts. The residuals shrink as gamma^2 and gamma^3, which is the
//! defining order structure of the expansion; the fitted log-log slopes are
//! printed at the end.
//!
//! Run with: cargo run --release --example perturbative_orders

use fluxq::circuit::{capacitance_network, CircuitSpec, CouplerSpec, QubitParams};
use fluxq::effective::{
    perturbative_effective_auto, qubit_projector, swt_effective, Method, SolverSettings,
};
use fluxq::hamiltonian::build_hamiltonians;

fn log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.ln()).collect();
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let num: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}

fn main() {
    let q = QubitParams::new(0.7, 50.0, 0.0, 0.5, 0);
    let settings = SolverSettings {
        method: Method::Dense,
        ..SolverSettings::default()
    };
    let gammas = [2e-3, 1e-3, 5e-4, 2.5e-4];
    let mut d1 = Vec::new();
    let mut d2 = Vec::new();

    println!("# junction-coupled pair, cutoff N=2 (norms in E_J)");
    println!("{:>10} {:>14} {:>14}", "gamma", "|SWT - H1|", "|SWT - H2|");
    for &gamma in &gammas {
        let spec = CircuitSpec::pair(q, q, vec![CouplerSpec::junction(gamma, (0, 2), (1, 1))]);
        let network = capacitance_network(&spec).expect("valid circuit");
        let pair = build_hamiltonians(&spec, &network, 2).expect("build");
        let sub = qubit_projector(&pair).expect("qubit subspace");
        let swt = swt_effective(&pair.h, &sub, settings).expect("SWT");
        let h1 = perturbative_effective_auto(&pair, &sub, 1.0, 1).expect("order 1");
        let h2 = perturbative_effective_auto(&pair, &sub, 1.0, 2).expect("order 2");
        let r1 = (swt.matrix.matrix() - h1.matrix.matrix()).norm();
        let r2 = (swt.matrix.matrix() - h2.matrix.matrix()).norm();
        println!("{gamma:>10.2e} {r1:>14.4e} {r2:>14.4e}");
        d1.push(r1);
        d2.push(r2);
    }

    println!(
        "\nfitted log-log slopes: order-1 residual {:.4} (expect 2), order-2 residual {:.4} (expect 3)",
        log_slope(&gammas, &d1),
        log_slope(&gammas, &d2)
    );
}
