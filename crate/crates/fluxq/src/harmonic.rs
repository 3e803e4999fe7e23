//! Closed-form harmonic-approximation analytics for the double-well qubit
//! potential `U(phi) = -2 cos phi + alpha cos 2phi` (valid for alpha > 0.5).
//!
//! The two minima sit at `+-phi* = +-arccos(1/(2 alpha))`; expanding around
//! them gives an oscillator of mass `m` (the loaded 1D mass) and frequency
//! `omega = sqrt((4 alpha^2 - 1)/(alpha m))`, whose Gaussian ground states
//! supply overlaps, the tunneling gap, and dipole matrix elements in closed
//! form. These serve as semi-quantitative oracles for the numerical pipeline.

use crate::hamiltonian::loaded_mass_1d;
use nalgebra::{Matrix2, Vector2};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarmonicError {
    #[error("harmonic approximation undefined for alpha = {0} (requires alpha > 0.5)")]
    OutOfRegime(f64),
    #[error("parameter {name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
}

fn check_regime(alpha: f64, r: f64, gamma: f64) -> Result<(), HarmonicError> {
    if !(alpha > 0.5) {
        return Err(HarmonicError::OutOfRegime(alpha));
    }
    if !(r > 0.0) {
        return Err(HarmonicError::NonPositive {
            name: "r",
            value: r,
        });
    }
    if !(gamma >= 0.0) {
        return Err(HarmonicError::NonPositive {
            name: "gamma",
            value: gamma,
        });
    }
    Ok(())
}

/// 1D harmonic model of one (possibly capacitively loaded) qubit.
#[derive(Debug, Clone, Copy)]
pub struct HarmonicModel1D {
    /// Loaded dimensionless mass.
    pub m: f64,
    /// Oscillator frequency in E_J units.
    pub omega: f64,
    /// Position of the potential minima, radians.
    pub phi_star: f64,
    /// Gaussian width `1/sqrt(m omega)`.
    pub sigma: f64,
    /// Ground-state overlap `<g_L|g_R> = exp(-m omega phi*^2)`.
    pub overlap: f64,
    /// Tunneling gap prediction, E_J units.
    pub gap: f64,
    /// Flux dipole element epsilon (coefficient of the sigma-x response to a
    /// flux perturbation).
    pub epsilon: f64,
    /// Voltage dipole element eta (only nonzero under capacitive loading).
    pub eta: f64,
}

/// Evaluates every 1D closed form at (alpha, r, gamma).
pub fn harmonic_1d(alpha: f64, r: f64, gamma: f64) -> Result<HarmonicModel1D, HarmonicError> {
    check_regime(alpha, r, gamma)?;
    let d = 2.0 * alpha + 1.0 + gamma * (alpha + 1.0);
    let m = loaded_mass_1d(alpha, r, gamma);
    let omega = ((4.0 * alpha * alpha - 1.0) / (alpha * m)).sqrt();
    let phi_star = (1.0 / (2.0 * alpha)).acos();
    let mw = m * omega;
    let sigma = 1.0 / mw.sqrt();
    let overlap = (-mw * phi_star * phi_star).exp();
    // Gap: -2 <g_L|(H - E_harm)|g_R> style matrix element between the two
    // well ground states, all Gaussian integrals done in closed form.
    let gap = -2.0
        * ((omega / 4.0 - mw * omega * phi_star * phi_star / 2.0)
            + alpha * (-1.0 / mw).exp()
            - 2.0 * (-1.0 / (4.0 * mw)).exp())
        * overlap;
    let epsilon = PI * (4.0 * alpha * alpha - 1.0).sqrt() / alpha * (-1.0 / mw).exp();
    let eta = 4.0 * (alpha * gamma / (r * d)) * mw * phi_star * (-mw * phi_star * phi_star).exp();
    Ok(HarmonicModel1D {
        m,
        omega,
        phi_star,
        sigma,
        overlap,
        gap,
        epsilon,
        eta,
    })
}

/// 2D harmonic model in the (phi_plus, phi_minus) frame.
#[derive(Debug, Clone, Copy)]
pub struct HarmonicModel2D {
    /// Kinetic coefficient matrix.
    pub t: Matrix2<f64>,
    /// Potential curvature matrix (diagonal).
    pub v: Matrix2<f64>,
    /// Rotation angle decoupling the kinetic term after the V^{1/2} scaling.
    pub theta: f64,
    /// Exponent matrix of the Gaussian ground state.
    pub a: Matrix2<f64>,
    /// Overlap between the two intra-cell minima (separation (2 phi*, 0)).
    pub overlap_intra: f64,
    /// Overlap toward the nearest minimum of a neighboring cell.
    pub overlap_inter: f64,
}

/// Double-well potential of the two-mode qubit in the (phi_plus, phi_minus)
/// frame at frustration, used to locate inter-cell saddle paths.
fn potential_2d(alpha: f64, phi_p: f64, phi_m: f64) -> f64 {
    -2.0 * phi_p.cos() * phi_m.cos() + alpha * (2.0 * phi_p).cos()
}

/// Evaluates the 2D harmonic model at (alpha, r, gamma).
pub fn harmonic_2d(alpha: f64, r: f64, gamma: f64) -> Result<HarmonicModel2D, HarmonicError> {
    check_regime(alpha, r, gamma)?;
    let d = 2.0 * alpha + 1.0 + gamma * (alpha + 1.0);
    let t = Matrix2::new(gamma + 2.0, gamma, gamma, 4.0 * alpha + 2.0 + gamma)
        .scale(2.0 / (r * d));
    let v = Matrix2::new((4.0 * alpha * alpha - 1.0) / alpha, 0.0, 0.0, 1.0 / alpha);

    // Scale by V^{1/2}, rotate to diagonalize the scaled kinetic matrix.
    let v_sqrt = Matrix2::new(v[(0, 0)].sqrt(), 0.0, 0.0, v[(1, 1)].sqrt());
    let t1 = v_sqrt * t * v_sqrt;
    let theta = 0.5 * (t1[(0, 1)] + t1[(1, 0)]).atan2(t1[(1, 1)] - t1[(0, 0)]);
    let rot = Matrix2::new(theta.cos(), -theta.sin(), theta.sin(), theta.cos());
    let t2 = rot * t1 * rot.transpose();
    // T2 is diagonal up to roundoff; its inverse square root sets the widths.
    let t2_inv_sqrt = Matrix2::new(1.0 / t2[(0, 0)].sqrt(), 0.0, 0.0, 1.0 / t2[(1, 1)].sqrt());
    let a = v_sqrt * rot.transpose() * t2_inv_sqrt * rot * v_sqrt;

    let phi_star = (1.0 / (2.0 * alpha)).acos();
    let overlap_of = |dphi: Vector2<f64>| (-0.25 * (dphi.transpose() * a * dphi)[(0, 0)]).exp();
    let overlap_intra = overlap_of(Vector2::new(2.0 * phi_star, 0.0));

    // Inter-cell: the potential is periodic with lattice vectors (pi, +-pi)
    // in (phi_plus, phi_minus). Among the images of the partner minimum in
    // neighboring cells, pick the displacement whose straight path crosses
    // the lowest barrier, then apply the Gaussian overlap formula to it.
    let minima = [
        Vector2::new(phi_star, 0.0),
        Vector2::new(-phi_star, 0.0),
    ];
    let from = Vector2::new(phi_star, 0.0);
    let mut best: Option<(f64, Vector2<f64>)> = None;
    for sp in [-1.0, 1.0] {
        for sm in [-1.0, 1.0] {
            let shift = Vector2::new(sp * PI, sm * PI);
            for m in minima {
                let target = m + shift;
                let dphi = target - from;
                if dphi.norm() < 1e-12 {
                    continue;
                }
                // Highest potential along the straight segment.
                let barrier = (0..=200)
                    .map(|i| {
                        let s = i as f64 / 200.0;
                        let p = from + dphi.scale(s);
                        potential_2d(alpha, p[0], p[1])
                    })
                    .fold(f64::NEG_INFINITY, f64::max);
                let better = match best {
                    None => true,
                    Some((b, bd)) => {
                        barrier < b - 1e-12 || (barrier < b + 1e-12 && dphi.norm() < bd.norm())
                    }
                };
                if better {
                    best = Some((barrier, dphi));
                }
            }
        }
    }
    let overlap_inter = overlap_of(best.expect("candidate displacements exist").1);

    Ok(HarmonicModel2D {
        t,
        v,
        theta,
        a,
        overlap_intra,
        overlap_inter,
    })
}

/// Which coupling element an estimate is for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CouplingKind {
    MutualInductance,
    Junction,
    Capacitor,
}

/// Harmonic-order estimate of the two-qubit Pauli coefficients one coupler
/// should produce. Only the terms the harmonic analysis predicts are set.
#[derive(Debug, Clone, Copy, Default)]
pub struct CouplingEstimate {
    pub j_xx: f64,
    pub j_yy: f64,
    pub j_zz: f64,
    /// `<0|sin phi|1>` single-qubit dipole entering the junction estimate.
    pub sin_element: f64,
    /// `(<1|cos phi|1> - <0|cos phi|0>)/2` entering the sigma-z channel.
    pub z_element: f64,
}

/// Interaction-coefficient prefactor of the capacitive coupler,
/// `A(alpha, gamma)`, from the cross block of the inverse capacitance matrix.
pub fn capacitive_prefactor(alpha: f64, gamma: f64) -> f64 {
    -2.0 * (2.0 * alpha * alpha + 2.0 * alpha + 1.0) * gamma
        / (4.0 * alpha * alpha * gamma + 4.0 * alpha * alpha
            + 6.0 * alpha * gamma
            + 4.0 * alpha
            + 2.0 * gamma
            + 1.0)
}

/// Estimates coupling strengths for one coupler kind between identical qubits.
/// `strength` is gamma for capacitor/junction kinds and M I_c^2 / E_J for
/// mutual inductance.
pub fn coupling_estimate(
    kind: CouplingKind,
    alpha: f64,
    r: f64,
    strength: f64,
) -> Result<CouplingEstimate, HarmonicError> {
    let mut est = CouplingEstimate::default();
    match kind {
        CouplingKind::MutualInductance => {
            let model = harmonic_1d(alpha, r, 0.0)?;
            let mw = model.m * model.omega;
            // <0|sin 2phi|1> = sin(2 phi*) exp(-1/(m omega)).
            let sin2 = (2.0 * model.phi_star).sin() * (-1.0 / mw).exp();
            est.j_xx = 2.0 * strength * alpha * alpha * sin2 * sin2;
        }
        CouplingKind::Junction => {
            let model = harmonic_1d(alpha, r, 0.0)?;
            let mw = model.m * model.omega;
            // <0|sin phi|1> = sin(phi*) exp(-1/(4 m omega)).
            est.sin_element = model.phi_star.sin() * (-1.0 / (4.0 * mw)).exp();
            // (<1|cos phi|1> - <0|cos phi|0>)/2 = <g_L|g_R> exp(-1/(4 m omega)).
            est.z_element = model.overlap * (-1.0 / (4.0 * mw)).exp();
            est.j_xx = strength * est.sin_element * est.sin_element;
            est.j_zz = strength * est.z_element * est.z_element;
        }
        CouplingKind::Capacitor => {
            let model = harmonic_1d(alpha, r, strength)?;
            est.j_yy = capacitive_prefactor(alpha, strength) / r * model.eta * model.eta;
        }
    }
    Ok(est)
}
