//! Declarative circuit descriptions and their capacitance networks.
//!
//! Each three-junction flux qubit has nodes {0,1,2} with junction branches
//! a:(0-1), b:(0-2) of unit capacitance and c:(1-2) of capacitance `alpha`,
//! plus an optional shunt `beta` in parallel with c. One node per qubit is
//! grounded and eliminated, leaving two active node variables per qubit.
//! Capacitive couplers and load capacitors add `gamma` (in units of C) to the
//! network; junction and mutual-inductance couplers carry no capacitance and
//! enter only through the potential.

use nalgebra::DMatrix;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CircuitError {
    #[error("qubit {index}: {message}")]
    InvalidQubit { index: usize, message: String },
    #[error("coupler {index}: {message}")]
    InvalidCoupler { index: usize, message: String },
    #[error("circuit must contain 1 or 2 qubits, got {0}")]
    BadQubitCount(usize),
    #[error("capacitance network is singular or not positive definite")]
    SingularNetwork,
}

/// A capacitor from one qubit node to ground, used to model loading of a
/// single qubit by external circuitry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoadCapacitor {
    pub node: usize,
    pub gamma: f64,
}

/// Parameters of one three-junction flux qubit. Energies are expressed in
/// units of E_J with E_C = E_J / r; capacitances in units of C.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitParams {
    /// Small-junction ratio (junction c has Josephson energy alpha * E_J).
    pub alpha: f64,
    /// E_J / E_C.
    pub r: f64,
    /// Shunt capacitance ratio, in parallel with junction c.
    pub beta: f64,
    /// External flux in units of the flux quantum; 0.5 is the frustration point.
    pub f: f64,
    /// Which of the three nodes is grounded (0, 1, or 2).
    pub ground_node: usize,
    /// Optional load capacitor to ground.
    pub load: Option<LoadCapacitor>,
}

impl QubitParams {
    pub fn new(alpha: f64, r: f64, beta: f64, f: f64, ground_node: usize) -> Self {
        Self {
            alpha,
            r,
            beta,
            f,
            ground_node,
            load: None,
        }
    }

    pub fn with_load(mut self, node: usize, gamma: f64) -> Self {
        self.load = Some(LoadCapacitor { node, gamma });
        self
    }

    /// The two non-ground nodes, ascending.
    pub fn active_nodes(&self) -> [usize; 2] {
        match self.ground_node {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        }
    }

    fn validate(&self, index: usize) -> Result<(), CircuitError> {
        let fail = |message: String| CircuitError::InvalidQubit { index, message };
        if !(self.alpha > 0.0) {
            return Err(fail(format!("alpha must be positive, got {}", self.alpha)));
        }
        if !(self.r > 0.0) {
            return Err(fail(format!("r must be positive, got {}", self.r)));
        }
        if !(self.beta >= 0.0) {
            return Err(fail(format!("beta must be non-negative, got {}", self.beta)));
        }
        if !self.f.is_finite() {
            return Err(fail("flux f must be finite".into()));
        }
        if self.ground_node > 2 {
            return Err(fail(format!(
                "ground_node must be 0, 1 or 2, got {}",
                self.ground_node
            )));
        }
        if let Some(load) = self.load {
            if load.node > 2 || load.node == self.ground_node {
                return Err(fail(format!(
                    "load node {} must be a non-ground node",
                    load.node
                )));
            }
            if !(load.gamma >= 0.0) {
                return Err(fail(format!(
                    "load gamma must be non-negative, got {}",
                    load.gamma
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CouplerKind {
    Capacitor,
    Junction,
    MutualInductance,
}

/// A two-qubit coupling element. `gamma` scales capacitor (gamma * C) and
/// junction (gamma * E_J) couplers; `mutual` is M * I_c^2 / E_J for the
/// mutual-inductance kind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplerSpec {
    pub kind: CouplerKind,
    pub gamma: f64,
    pub mutual: f64,
    /// (qubit index, node index) endpoints on distinct qubits.
    pub from: (usize, usize),
    pub to: (usize, usize),
}

impl CouplerSpec {
    pub fn capacitor(gamma: f64, from: (usize, usize), to: (usize, usize)) -> Self {
        Self {
            kind: CouplerKind::Capacitor,
            gamma,
            mutual: 0.0,
            from,
            to,
        }
    }

    pub fn junction(gamma: f64, from: (usize, usize), to: (usize, usize)) -> Self {
        Self {
            kind: CouplerKind::Junction,
            gamma,
            mutual: 0.0,
            from,
            to,
        }
    }

    pub fn mutual_inductance(mutual: f64) -> Self {
        Self {
            kind: CouplerKind::MutualInductance,
            gamma: 0.0,
            mutual,
            from: (0, 1),
            to: (1, 1),
        }
    }
}

/// A full circuit: one or two qubits plus couplers between them.
#[derive(Debug, Clone, PartialEq)]
pub struct CircuitSpec {
    pub qubits: Vec<QubitParams>,
    pub couplers: Vec<CouplerSpec>,
}

impl CircuitSpec {
    pub fn single(qubit: QubitParams) -> Self {
        Self {
            qubits: vec![qubit],
            couplers: vec![],
        }
    }

    pub fn pair(q1: QubitParams, q2: QubitParams, couplers: Vec<CouplerSpec>) -> Self {
        Self {
            qubits: vec![q1, q2],
            couplers,
        }
    }

    /// The reference coupled circuit: two identical qubits grounded at node 0,
    /// one capacitor gamma between node 2 of qubit 0 and node 1 of qubit 1.
    pub fn capacitive_reference(alpha: f64, r: f64, beta: f64, gamma: f64) -> Self {
        let q = QubitParams::new(alpha, r, beta, 0.5, 0);
        Self::pair(q, q, vec![CouplerSpec::capacitor(gamma, (0, 2), (1, 1))])
    }

    pub fn validate(&self) -> Result<(), CircuitError> {
        if self.qubits.is_empty() || self.qubits.len() > 2 {
            return Err(CircuitError::BadQubitCount(self.qubits.len()));
        }
        for (i, q) in self.qubits.iter().enumerate() {
            q.validate(i)?;
        }
        let mut mutual_count = 0usize;
        for (i, c) in self.couplers.iter().enumerate() {
            let fail = |message: String| CircuitError::InvalidCoupler { index: i, message };
            if !(c.gamma >= 0.0) {
                return Err(fail(format!("gamma must be non-negative, got {}", c.gamma)));
            }
            if c.kind == CouplerKind::MutualInductance {
                mutual_count += 1;
                if mutual_count > 1 {
                    return Err(fail("at most one mutual-inductance coupler allowed".into()));
                }
            }
            for &(q, node) in [&c.from, &c.to] {
                if q >= self.qubits.len() {
                    return Err(fail(format!("endpoint references missing qubit {q}")));
                }
                if node > 2 {
                    return Err(fail(format!("endpoint node {node} out of range")));
                }
                if node == self.qubits[q].ground_node {
                    return Err(fail(format!(
                        "endpoint (qubit {q}, node {node}) is a ground node"
                    )));
                }
            }
            if c.from.0 == c.to.0 {
                return Err(fail("endpoints must be on distinct qubits".into()));
            }
        }
        Ok(())
    }

    /// Global index of (qubit, node) in the eliminated-node ordering: qubit 0
    /// active nodes ascending, then qubit 1.
    pub fn global_index(&self, qubit: usize, node: usize) -> Option<usize> {
        let active = self.qubits[qubit].active_nodes();
        let local = active.iter().position(|&n| n == node)?;
        Some(2 * qubit + local)
    }
}

/// Capacitance matrix of the circuit, its inverse, and the per-qubit and
/// cross-qubit inverse blocks that set the kinetic terms of the Hamiltonian.
#[derive(Debug, Clone)]
pub struct CapacitanceNetwork {
    /// Symmetric positive-definite matrix over all non-ground nodes, units of C.
    pub full: DMatrix<f64>,
    /// Inverse of `full`, units of 1/C. Empty until [`invert_blocks`] runs.
    pub inverse: DMatrix<f64>,
    /// Per-qubit 2x2 renormalized inverse blocks of `inverse`.
    pub qubit_blocks: Vec<DMatrix<f64>>,
    /// Cross-qubit 2x2 block of `inverse` (qubit-0 rows, qubit-1 columns);
    /// empty for a single qubit, zero when no capacitive coupler exists.
    pub mutual_block: DMatrix<f64>,
    /// Determinant of each qubit's (loaded) 2x2 diagonal block of `full`.
    pub det_single: Vec<f64>,
}

/// Builds the full capacitance matrix by the node-sum rule: each diagonal
/// entry sums every capacitance touching that node, each off-diagonal entry is
/// minus the capacitance connecting the two nodes.
pub fn assemble_capacitance(spec: &CircuitSpec) -> Result<CapacitanceNetwork, CircuitError> {
    spec.validate()?;
    let n = 2 * spec.qubits.len();
    let mut full = DMatrix::<f64>::zeros(n, n);

    for (qi, q) in spec.qubits.iter().enumerate() {
        // Branch capacitances within one qubit: (node pair, value).
        let branches = [
            ((0usize, 1usize), 1.0),
            ((0, 2), 1.0),
            ((1, 2), q.alpha + q.beta),
        ];
        for ((a, b), value) in branches {
            let ia = spec.global_index(qi, a);
            let ib = spec.global_index(qi, b);
            if let Some(i) = ia {
                full[(i, i)] += value;
            }
            if let Some(i) = ib {
                full[(i, i)] += value;
            }
            if let (Some(i), Some(j)) = (ia, ib) {
                full[(i, j)] -= value;
                full[(j, i)] -= value;
            }
        }
        if let Some(load) = q.load {
            let i = spec
                .global_index(qi, load.node)
                .expect("validated non-ground load node");
            full[(i, i)] += load.gamma;
        }
    }

    for c in &spec.couplers {
        if c.kind != CouplerKind::Capacitor {
            continue;
        }
        let i = spec
            .global_index(c.from.0, c.from.1)
            .expect("validated endpoint");
        let j = spec
            .global_index(c.to.0, c.to.1)
            .expect("validated endpoint");
        full[(i, i)] += c.gamma;
        full[(j, j)] += c.gamma;
        full[(i, j)] -= c.gamma;
        full[(j, i)] -= c.gamma;
    }

    if full.clone().cholesky().is_none() {
        return Err(CircuitError::SingularNetwork);
    }

    Ok(CapacitanceNetwork {
        full,
        inverse: DMatrix::zeros(0, 0),
        qubit_blocks: Vec::new(),
        mutual_block: DMatrix::zeros(0, 0),
        det_single: Vec::new(),
    })
}

/// Inverts the assembled matrix and extracts the partitioned blocks.
pub fn invert_blocks(mut network: CapacitanceNetwork) -> Result<CapacitanceNetwork, CircuitError> {
    let n = network.full.nrows();
    let chol = network
        .full
        .clone()
        .cholesky()
        .ok_or(CircuitError::SingularNetwork)?;
    let inverse = chol.inverse();
    // Symmetrize away inversion roundoff.
    let inverse = (&inverse + inverse.transpose()).scale(0.5);

    let qubits = n / 2;
    let mut qubit_blocks = Vec::with_capacity(qubits);
    let mut det_single = Vec::with_capacity(qubits);
    for q in 0..qubits {
        qubit_blocks.push(inverse.view((2 * q, 2 * q), (2, 2)).into());
        let block: DMatrix<f64> = network.full.view((2 * q, 2 * q), (2, 2)).into();
        det_single.push(block[(0, 0)] * block[(1, 1)] - block[(0, 1)] * block[(1, 0)]);
    }
    let mutual_block = if qubits == 2 {
        inverse.view((0, 2), (2, 2)).into()
    } else {
        DMatrix::zeros(0, 0)
    };

    network.inverse = inverse;
    network.qubit_blocks = qubit_blocks;
    network.mutual_block = mutual_block;
    network.det_single = det_single;
    Ok(network)
}

/// Assembly and inversion in one step.
pub fn capacitance_network(spec: &CircuitSpec) -> Result<CapacitanceNetwork, CircuitError> {
    invert_blocks(assemble_capacitance(spec)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn appendix_fixture_two_qubits() {
        // Two qubits grounded at node 0, beta shunt, one capacitor gamma
        // between (q0, node2) and (q1, node1).
        let (alpha, beta, gamma) = (0.7, 0.1, 0.5);
        let q = QubitParams::new(alpha, 50.0, beta, 0.5, 0);
        let spec = CircuitSpec::pair(q, q, vec![CouplerSpec::capacitor(gamma, (0, 2), (1, 1))]);
        let net = assemble_capacitance(&spec).unwrap();
        let s = alpha + beta;
        let expected = DMatrix::from_row_slice(
            4,
            4,
            &[
                1.0 + s, -s, 0.0, 0.0,
                -s, 1.0 + s + gamma, -gamma, 0.0,
                0.0, -gamma, 1.0 + s + gamma, -s,
                0.0, 0.0, -s, 1.0 + s,
            ],
        );
        assert_eq!(net.full, expected);
    }

    #[test]
    fn single_qubit_matrix_and_inverse() {
        let alpha = 0.7;
        let spec = CircuitSpec::single(QubitParams::new(alpha, 50.0, 0.0, 0.5, 0));
        let net = capacitance_network(&spec).unwrap();
        let expected = DMatrix::from_row_slice(2, 2, &[1.0 + alpha, -alpha, -alpha, 1.0 + alpha]);
        assert_eq!(net.full, expected);
        // Closed-form 2x2 inverse: 1/(1+2a) * [[1+a, a],[a, 1+a]].
        let d = 1.0 + 2.0 * alpha;
        for (i, j, want) in [
            (0, 0, (1.0 + alpha) / d),
            (0, 1, alpha / d),
            (1, 0, alpha / d),
            (1, 1, (1.0 + alpha) / d),
        ] {
            assert_abs_diff_eq!(net.inverse[(i, j)], want, epsilon = 1e-14);
        }
        assert_abs_diff_eq!(net.det_single[0], d, epsilon = 1e-14);
    }

    #[test]
    fn loaded_qubit_determinant() {
        let (alpha, gamma) = (0.7, 0.5);
        let spec = CircuitSpec::single(
            QubitParams::new(alpha, 50.0, 0.0, 0.5, 0).with_load(2, gamma),
        );
        let net = capacitance_network(&spec).unwrap();
        // d = 2*alpha + 1 + gamma*(alpha + 1) = 3.25 at these values.
        assert_abs_diff_eq!(
            net.det_single[0],
            2.0 * alpha + 1.0 + gamma * (alpha + 1.0),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(net.det_single[0], 3.25, epsilon = 1e-14);
    }

    #[test]
    fn uncoupled_pair_is_block_diagonal() {
        let spec = CircuitSpec::capacitive_reference(0.7, 50.0, 0.0, 0.0);
        let net = capacitance_network(&spec).unwrap();
        for i in 0..2 {
            for j in 2..4 {
                assert_eq!(net.full[(i, j)], 0.0);
                assert_abs_diff_eq!(net.inverse[(i, j)], 0.0, epsilon = 1e-14);
            }
        }
        assert!(net.mutual_block.amax() < 1e-14);
    }

    #[test]
    fn full_times_inverse_is_identity() {
        let spec = CircuitSpec::capacitive_reference(0.7, 50.0, 0.1, 0.5);
        let net = capacitance_network(&spec).unwrap();
        let product = &net.full * &net.inverse;
        assert!((product - DMatrix::<f64>::identity(4, 4)).amax() < 1e-12);
        // Symmetry of both matrices.
        assert!((&net.full - net.full.transpose()).amax() < 1e-14);
        assert!((&net.inverse - net.inverse.transpose()).amax() < 1e-14);
    }

    #[test]
    fn gamma_zero_limit_matches_uncoupled_blocks() {
        let coupled = CircuitSpec::capacitive_reference(0.7, 50.0, 0.0, 1e-13);
        let uncoupled = CircuitSpec::single(QubitParams::new(0.7, 50.0, 0.0, 0.5, 0));
        let net_c = capacitance_network(&coupled).unwrap();
        let net_u = capacitance_network(&uncoupled).unwrap();
        assert!((&net_c.qubit_blocks[0] - &net_u.inverse).amax() < 1e-12);
    }

    #[test]
    fn rejects_ground_endpoint() {
        let q = QubitParams::new(0.7, 50.0, 0.0, 0.5, 0);
        let spec = CircuitSpec::pair(q, q, vec![CouplerSpec::capacitor(0.5, (0, 0), (1, 1))]);
        assert!(matches!(
            spec.validate(),
            Err(CircuitError::InvalidCoupler { .. })
        ));
    }

    #[test]
    fn rejects_same_qubit_endpoints() {
        let q = QubitParams::new(0.7, 50.0, 0.0, 0.5, 0);
        let spec = CircuitSpec::pair(q, q, vec![CouplerSpec::capacitor(0.5, (0, 1), (0, 2))]);
        assert!(matches!(
            spec.validate(),
            Err(CircuitError::InvalidCoupler { .. })
        ));
    }

    #[test]
    fn alternative_grounding_changes_node_set() {
        let q = QubitParams::new(0.7, 50.0, 0.0, 0.5, 1);
        assert_eq!(q.active_nodes(), [0, 2]);
        let spec = CircuitSpec::single(q);
        let net = assemble_capacitance(&spec).unwrap();
        // Node 0 touches junctions a and b (both unit); node 2 touches b and c.
        assert_abs_diff_eq!(net.full[(0, 0)], 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(net.full[(1, 1)], 1.7, epsilon = 1e-14);
        // Nodes 0 and 2 are joined by junction b only.
        assert_abs_diff_eq!(net.full[(0, 1)], -1.0, epsilon = 1e-14);
    }
}
