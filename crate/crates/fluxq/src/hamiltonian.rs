//! Charge-basis Hamiltonian builders.
//!
//! Each circuit node variable becomes one mode with Cooper-pair number
//! `n = -N..N` (dimension `2N+1`). In this basis the charging energy is
//! diagonal and `e^{i phi}` is the lowering ladder `|n-1><n|`, so every
//! junction cosine is a banded shift operator. All energies are in units of
//! E_J.

use crate::circuit::{
    capacitance_network, CapacitanceNetwork, CircuitError, CircuitSpec, CouplerKind, QubitParams,
};
use crate::numerics::{eigh_dense_lowest, NumericsError, SparseHermitian, C64};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HamiltonianError {
    #[error("charge cutoff N={cutoff} too small: operator needs shifts up to {needed}")]
    CutoffTooSmall { cutoff: usize, needed: usize },
    #[error("mode {mode} out of range for a {modes}-mode space")]
    ModeOutOfRange { mode: usize, modes: usize },
    #[error("cutoff must be at least 1")]
    ZeroCutoff,
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// A truncated multi-mode Cooper-pair-number basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModeSpace {
    pub modes: usize,
    /// Charge cutoff N; each mode runs n = -N..N.
    pub cutoff: usize,
}

impl ModeSpace {
    pub fn new(modes: usize, cutoff: usize) -> Result<Self, HamiltonianError> {
        if cutoff == 0 {
            return Err(HamiltonianError::ZeroCutoff);
        }
        Ok(Self { modes, cutoff })
    }

    pub fn dim_per_mode(&self) -> usize {
        2 * self.cutoff + 1
    }

    pub fn total_dim(&self) -> usize {
        self.dim_per_mode().pow(self.modes as u32)
    }

    /// Mixed-radix decomposition of a basis index into per-mode charge
    /// numbers, mode 0 most significant.
    pub fn charges(&self, index: usize) -> Vec<i64> {
        let dpm = self.dim_per_mode();
        let n = self.cutoff as i64;
        let mut rem = index;
        let mut out = vec![0i64; self.modes];
        for m in (0..self.modes).rev() {
            out[m] = (rem % dpm) as i64 - n;
            rem /= dpm;
        }
        out
    }

    pub fn index_of(&self, charges: &[i64]) -> usize {
        let dpm = self.dim_per_mode();
        let n = self.cutoff as i64;
        charges
            .iter()
            .fold(0usize, |acc, &q| acc * dpm + (q + n) as usize)
    }
}

/// Sparse column-map representation used during operator assembly; not
/// necessarily Hermitian. `cols[c]` lists the (row, value) entries of column c.
#[derive(Debug, Clone)]
struct ColMap {
    dim: usize,
    cols: Vec<Vec<(usize, C64)>>,
}

impl ColMap {
    fn zero(dim: usize) -> Self {
        Self {
            dim,
            cols: vec![Vec::new(); dim],
        }
    }

    fn diagonal(space: &ModeSpace, f: impl Fn(&[i64]) -> f64) -> Self {
        let dim = space.total_dim();
        let mut out = Self::zero(dim);
        for c in 0..dim {
            let v = f(&space.charges(c));
            if v != 0.0 {
                out.cols[c].push((c, C64::new(v, 0.0)));
            }
        }
        out
    }

    /// `e^{i(sum_m k_m phi_m - theta)}`: shifts each mode's charge down by
    /// `k_m`, annihilating states pushed past the truncation boundary.
    fn branch_exp(space: &ModeSpace, weights: &[i64], theta: f64) -> Self {
        let dim = space.total_dim();
        let n = space.cutoff as i64;
        let value = C64::new(0.0, -theta).exp();
        let mut out = Self::zero(dim);
        'col: for c in 0..dim {
            let mut charges = space.charges(c);
            for (m, &k) in weights.iter().enumerate() {
                charges[m] -= k;
                if charges[m] < -n || charges[m] > n {
                    continue 'col;
                }
            }
            out.cols[c].push((space.index_of(&charges), value));
        }
        out
    }

    fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                out.cols[r].push((c, v.conj()));
            }
        }
        out
    }

    fn scale(&self, s: C64) -> Self {
        let mut out = self.clone();
        for col in &mut out.cols {
            for entry in col {
                entry.1 *= s;
            }
        }
        out
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (c, col) in other.cols.iter().enumerate() {
            out.cols[c].extend_from_slice(col);
        }
        out.merge();
        out
    }

    /// Matrix product `self * other`.
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dim);
        for (c, col) in other.cols.iter().enumerate() {
            for &(mid, v1) in col {
                for &(r, v2) in &self.cols[mid] {
                    out.cols[c].push((r, v2 * v1));
                }
            }
        }
        out.merge();
        out
    }

    fn merge(&mut self) {
        for col in &mut self.cols {
            if col.len() < 2 {
                continue;
            }
            col.sort_by_key(|&(r, _)| r);
            let mut merged: Vec<(usize, C64)> = Vec::with_capacity(col.len());
            for &(r, v) in col.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == r => last.1 += v,
                    _ => merged.push((r, v)),
                }
            }
            *col = merged;
        }
    }

    /// Folds a (structurally Hermitian) column map into triplet storage by
    /// keeping the upper triangle; the mirror entries are implicit.
    fn into_sparse(self) -> Result<SparseHermitian, NumericsError> {
        let mut triplets = Vec::new();
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                if r <= c {
                    triplets.push((r, c, v));
                }
            }
        }
        SparseHermitian::from_triplets(self.dim, triplets)
    }
}

/// A Hermitian operator on a truncated charge basis, in units of E_J.
#[derive(Debug, Clone)]
pub struct ChargeBasisOperator {
    pub space: ModeSpace,
    pub matrix: SparseHermitian,
}

impl ChargeBasisOperator {
    fn from_colmap(space: ModeSpace, map: ColMap) -> Result<Self, HamiltonianError> {
        Ok(Self {
            space,
            matrix: map.into_sparse()?,
        })
    }
}

/// The number operator on one mode plus the `e^{i phi}` lowering ladder for
/// that mode (returned as raw column-major entries `(row, col, value)`, since
/// the ladder is not Hermitian).
pub fn mode_operators(
    space: &ModeSpace,
    mode: usize,
) -> Result<(ChargeBasisOperator, Vec<(usize, usize, C64)>), HamiltonianError> {
    if mode >= space.modes {
        return Err(HamiltonianError::ModeOutOfRange {
            mode,
            modes: space.modes,
        });
    }
    let number = ColMap::diagonal(space, |q| q[mode] as f64);
    let mut weights = vec![0i64; space.modes];
    weights[mode] = 1;
    let lower = ColMap::branch_exp(space, &weights, 0.0);
    let mut lower_entries = Vec::new();
    for (c, col) in lower.cols.iter().enumerate() {
        for &(r, v) in col {
            lower_entries.push((r, c, v));
        }
    }
    Ok((
        ChargeBasisOperator::from_colmap(*space, number)?,
        lower_entries,
    ))
}

fn check_weights(space: &ModeSpace, weights: &[i64]) -> Result<(), HamiltonianError> {
    let max = weights.iter().map(|k| k.unsigned_abs() as usize).max();
    if let Some(needed) = max {
        if needed > 2 * space.cutoff {
            return Err(HamiltonianError::CutoffTooSmall {
                cutoff: space.cutoff,
                needed,
            });
        }
    }
    Ok(())
}

/// `cos(sum_m k_m phi_m - theta)` as a Hermitian shift operator.
pub fn branch_cosine(
    space: &ModeSpace,
    weights: &[i64],
    theta: f64,
) -> Result<ChargeBasisOperator, HamiltonianError> {
    check_weights(space, weights)?;
    let e = ColMap::branch_exp(space, weights, theta);
    let op = e.scale(C64::new(0.5, 0.0)).add(&e.adjoint().scale(C64::new(0.5, 0.0)));
    ChargeBasisOperator::from_colmap(*space, op)
}

/// `sin(sum_m k_m phi_m - theta)` as a Hermitian shift operator.
pub fn branch_sine(
    space: &ModeSpace,
    weights: &[i64],
    theta: f64,
) -> Result<ChargeBasisOperator, HamiltonianError> {
    check_weights(space, weights)?;
    let e = ColMap::branch_exp(space, weights, theta);
    // (E - E^H) / 2i
    let op = e
        .scale(C64::new(0.0, -0.5))
        .add(&e.adjoint().scale(C64::new(0.0, 0.5)));
    ChargeBasisOperator::from_colmap(*space, op)
}

/// The three junction branches of one qubit as (weight per node, flux offset,
/// Josephson energy factor). Node weights are over nodes {0,1,2}; the ground
/// node's entry is dropped when mapping to modes.
fn junction_branches(q: &QubitParams) -> [([i64; 3], f64, f64); 3] {
    [
        // a: nodes 0-1, unit energy.
        ([1, -1, 0], 0.0, 1.0),
        // b: nodes 0-2, unit energy.
        ([1, 0, -1], 0.0, 1.0),
        // c: small junction, nodes 1-2, carries the external flux.
        ([0, 1, -1], 2.0 * PI * q.f, q.alpha),
    ]
}

/// Maps node-indexed weights to mode-indexed weights for qubit `qi` inside a
/// space that allots two modes per qubit.
fn node_weights_to_modes(
    spec: &CircuitSpec,
    qi: usize,
    node_weights: &[i64; 3],
    modes: usize,
) -> Vec<i64> {
    let mut out = vec![0i64; modes];
    for (node, &w) in node_weights.iter().enumerate() {
        if w == 0 {
            continue;
        }
        if let Some(g) = spec.global_index(qi, node) {
            out[g] = w;
        }
        // Ground-node phases are identically zero: weight dropped.
    }
    out
}

/// Potential energy of one qubit: minus the sum of its three junction
/// cosines, as a column map on `space` (which may host both qubits).
fn qubit_potential(
    spec: &CircuitSpec,
    qi: usize,
    space: &ModeSpace,
) -> Result<ColMap, HamiltonianError> {
    let q = &spec.qubits[qi];
    let mut total = ColMap::zero(space.total_dim());
    for (node_weights, theta, energy) in junction_branches(q) {
        let weights = node_weights_to_modes(spec, qi, &node_weights, space.modes);
        check_weights(space, &weights)?;
        let e = ColMap::branch_exp(space, &weights, theta);
        let cos = e
            .scale(C64::new(0.5, 0.0))
            .add(&e.adjoint().scale(C64::new(0.5, 0.0)));
        total = total.add(&cos.scale(C64::new(-energy, 0.0)));
    }
    Ok(total)
}

/// Kinetic (charging) energy from an inverse-capacitance coefficient matrix
/// `k` over the space's modes: `sum_ij k[i][j] n_i n_j`, diagonal in charge.
fn kinetic_diagonal(space: &ModeSpace, k: &nalgebra::DMatrix<f64>) -> ColMap {
    ColMap::diagonal(space, |q| {
        let mut acc = 0.0;
        for i in 0..space.modes {
            for j in 0..space.modes {
                let kij = k[(i, j)];
                if kij != 0.0 {
                    acc += kij * (q[i] * q[j]) as f64;
                }
            }
        }
        acc
    })
}

/// Uncoupled, coupled, and per-qubit Hamiltonians for one circuit.
#[derive(Debug, Clone)]
pub struct HamiltonianPair {
    /// Sum of renormalized uncoupled qubit Hamiltonians on the full space.
    pub h0: ChargeBasisOperator,
    /// Full interacting Hamiltonian.
    pub h: ChargeBasisOperator,
    /// Each qubit's renormalized Hamiltonian on its own 2-mode space.
    pub single_qubit: Vec<ChargeBasisOperator>,
    /// Each qubit's persistent-current operator `-alpha sin(phi_loop - 2 pi f)`
    /// on the same 2-mode space; fixes the qubit-state gauge so current maps
    /// to sigma-x and charge to sigma-y.
    pub current_single: Vec<ChargeBasisOperator>,
}

/// Builds H0, H, and the single-qubit Hamiltonians in the charge basis.
///
/// H0 carries each qubit's renormalized kinetic block and junction cosines.
/// The interaction adds, per coupler kind: the cross-charge capacitive term,
/// `-gamma cos(phi_i - phi'_j)` for junctions, and the product of
/// persistent-current operators (prefactor `2 M I_c^2 / E_J`) for mutual
/// inductance.
pub fn build_hamiltonians(
    spec: &CircuitSpec,
    network: &CapacitanceNetwork,
    cutoff: usize,
) -> Result<HamiltonianPair, HamiltonianError> {
    spec.validate()?;
    let nq = spec.qubits.len();
    let space = ModeSpace::new(2 * nq, cutoff)?;
    let dim = space.total_dim();

    // H0 = sum over qubits of renormalized kinetic + junction potential.
    let mut k0 = nalgebra::DMatrix::<f64>::zeros(2 * nq, 2 * nq);
    for (qi, q) in spec.qubits.iter().enumerate() {
        let block = &network.qubit_blocks[qi];
        for i in 0..2 {
            for j in 0..2 {
                k0[(2 * qi + i, 2 * qi + j)] = (4.0 / q.r) * block[(i, j)];
            }
        }
    }
    let mut h0_map = kinetic_diagonal(&space, &k0);
    for qi in 0..nq {
        h0_map = h0_map.add(&qubit_potential(spec, qi, &space)?);
    }

    // Interaction terms.
    let mut h_map = h0_map.clone();
    if nq == 2 {
        // Capacitive cross-charge term from the inverse-matrix cross block;
        // identically zero when no capacitor coupler is present.
        let r0 = spec.qubits[0].r;
        let r1 = spec.qubits[1].r;
        let prefactor = 4.0 * (1.0 / r0 + 1.0 / r1) / 2.0;
        let mut kc = nalgebra::DMatrix::<f64>::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                let c = network.mutual_block[(i, j)];
                // Both (i, j') and (j', i) orderings of the quadratic form.
                kc[(i, 2 + j)] = prefactor * c;
                kc[(2 + j, i)] = prefactor * c;
            }
        }
        if kc.amax() > 0.0 {
            h_map = h_map.add(&kinetic_diagonal(&space, &kc));
        }
    }
    for coupler in &spec.couplers {
        match coupler.kind {
            CouplerKind::Capacitor => {} // handled via the inverse cross block
            CouplerKind::Junction => {
                if coupler.gamma == 0.0 {
                    continue;
                }
                let mut weights = vec![0i64; space.modes];
                weights[spec
                    .global_index(coupler.from.0, coupler.from.1)
                    .expect("validated endpoint")] = 1;
                weights[spec
                    .global_index(coupler.to.0, coupler.to.1)
                    .expect("validated endpoint")] = -1;
                check_weights(&space, &weights)?;
                let e = ColMap::branch_exp(&space, &weights, 0.0);
                let cos = e
                    .scale(C64::new(0.5, 0.0))
                    .add(&e.adjoint().scale(C64::new(0.5, 0.0)));
                h_map = h_map.add(&cos.scale(C64::new(-coupler.gamma, 0.0)));
            }
            CouplerKind::MutualInductance => {
                if coupler.mutual == 0.0 {
                    continue;
                }
                // Persistent-current operator per qubit:
                // I_p / I_c = -alpha sin(phi_1 - phi_2 - 2 pi f),
                // the full phase across the small junction.
                let mut currents = Vec::with_capacity(2);
                for (qi, q) in spec.qubits.iter().enumerate() {
                    let weights =
                        node_weights_to_modes(spec, qi, &[0, 1, -1], space.modes);
                    check_weights(&space, &weights)?;
                    let e = ColMap::branch_exp(&space, &weights, 2.0 * PI * q.f);
                    let sin = e
                        .scale(C64::new(0.0, -0.5))
                        .add(&e.adjoint().scale(C64::new(0.0, 0.5)));
                    currents.push(sin.scale(C64::new(-q.alpha, 0.0)));
                }
                let product = currents[0].mul(&currents[1]);
                h_map = h_map.add(&product.scale(C64::new(2.0 * coupler.mutual, 0.0)));
            }
        }
    }

    // Per-qubit Hamiltonians and persistent-current operators on their own
    // 2-mode spaces.
    let mut single_qubit = Vec::with_capacity(nq);
    let mut current_single = Vec::with_capacity(nq);
    for (qi, q) in spec.qubits.iter().enumerate() {
        let sub = ModeSpace::new(2, cutoff)?;
        let single_spec = CircuitSpec::single(*q);
        let mut k = nalgebra::DMatrix::<f64>::zeros(2, 2);
        for i in 0..2 {
            for j in 0..2 {
                k[(i, j)] = (4.0 / q.r) * network.qubit_blocks[qi][(i, j)];
            }
        }
        let mut map = kinetic_diagonal(&sub, &k);
        map = map.add(&qubit_potential(&single_spec, 0, &sub)?);
        single_qubit.push(ChargeBasisOperator::from_colmap(sub, map)?);

        let weights = node_weights_to_modes(&single_spec, 0, &[0, 1, -1], 2);
        check_weights(&sub, &weights)?;
        let e = ColMap::branch_exp(&sub, &weights, 2.0 * PI * q.f);
        let sin = e
            .scale(C64::new(0.0, -0.5))
            .add(&e.adjoint().scale(C64::new(0.0, 0.5)));
        current_single.push(ChargeBasisOperator::from_colmap(
            sub,
            sin.scale(C64::new(-q.alpha, 0.0)),
        )?);
    }

    debug_assert_eq!(h_map.dim, dim);
    Ok(HamiltonianPair {
        h0: ChargeBasisOperator::from_colmap(space, h0_map)?,
        h: ChargeBasisOperator::from_colmap(space, h_map)?,
        single_qubit,
        current_single,
    })
}

/// Loaded effective mass of the reduced 1D model:
/// `m = r (2 alpha + 1 + gamma (alpha + 1)) / (2 gamma + 4)`.
pub fn loaded_mass_1d(alpha: f64, r: f64, gamma: f64) -> f64 {
    r * (2.0 * alpha + 1.0 + gamma * (alpha + 1.0)) / (2.0 * gamma + 4.0)
}

/// The reduced single-mode model `H/E_J = n^2/(2m) - 2 cos phi + alpha cos 2phi`.
pub fn build_1d(
    alpha: f64,
    r: f64,
    gamma: f64,
    cutoff: usize,
) -> Result<ChargeBasisOperator, HamiltonianError> {
    if cutoff < 2 {
        return Err(HamiltonianError::CutoffTooSmall {
            cutoff,
            needed: 2,
        });
    }
    let space = ModeSpace::new(1, cutoff)?;
    let m = loaded_mass_1d(alpha, r, gamma);
    let kinetic = ColMap::diagonal(&space, |q| (q[0] * q[0]) as f64 / (2.0 * m));
    let cos1 = ColMap::branch_exp(&space, &[1], 0.0);
    let cos1 = cos1
        .scale(C64::new(0.5, 0.0))
        .add(&cos1.adjoint().scale(C64::new(0.5, 0.0)));
    let cos2 = ColMap::branch_exp(&space, &[2], 0.0);
    let cos2 = cos2
        .scale(C64::new(0.5, 0.0))
        .add(&cos2.adjoint().scale(C64::new(0.5, 0.0)));
    let map = kinetic
        .add(&cos1.scale(C64::new(-2.0, 0.0)))
        .add(&cos2.scale(C64::new(alpha, 0.0)));
    ChargeBasisOperator::from_colmap(space, map)
}

/// Voltage perturbation applied through a load capacitor: a gate voltage
/// `delta_v` (dimensionless) on qubit `qi`'s load node shifts the charging
/// energy by
/// `-(4 gamma delta_v / r) sum_{i != a} c_{a i} n_i + (gamma^2 delta_v^2 / r) c_{a a}`,
/// with `c` the qubit's renormalized inverse capacitance block and `a` the
/// loaded mode. Diagonal in the charge basis.
pub fn voltage_perturbation(
    spec: &CircuitSpec,
    network: &CapacitanceNetwork,
    cutoff: usize,
    qi: usize,
    delta_v: f64,
) -> Result<ChargeBasisOperator, HamiltonianError> {
    spec.validate()?;
    let q = &spec.qubits[qi];
    let load = q.load.ok_or_else(|| {
        HamiltonianError::Circuit(CircuitError::InvalidQubit {
            index: qi,
            message: "voltage perturbation requires a load capacitor".into(),
        })
    })?;
    let space = ModeSpace::new(2 * spec.qubits.len(), cutoff)?;
    let block = &network.qubit_blocks[qi];
    let active = q.active_nodes();
    let a = active
        .iter()
        .position(|&n| n == load.node)
        .expect("validated load node is active");
    let gamma = load.gamma;
    let shift = (gamma * delta_v).powi(2) / q.r * block[(a, a)];
    let mut linear = [0.0f64; 2];
    for i in 0..2 {
        if i != a {
            linear[i] = -(4.0 * gamma * delta_v / q.r) * block[(a, i)];
        }
    }
    let map = ColMap::diagonal(&space, |charges| {
        let mut acc = shift;
        for i in 0..2 {
            acc += linear[i] * charges[2 * qi + i] as f64;
        }
        acc
    });
    ChargeBasisOperator::from_colmap(space, map)
}

/// Auto-selects the charge cutoff: starts at N=4 and increases in steps of 2
/// until the first qubit's gap is stable to relative 1e-6, capped at N=16.
pub fn converged_cutoff(spec: &CircuitSpec) -> Result<usize, HamiltonianError> {
    let network = capacitance_network(spec)?;
    let mut previous_gap: Option<f64> = None;
    let mut n = 4usize;
    loop {
        let pair = build_hamiltonians(spec, &network, n)?;
        let spectrum = eigh_dense_lowest(&pair.single_qubit[0].matrix.to_dense(), 2)?;
        let gap = spectrum.gap();
        if let Some(prev) = previous_gap {
            if (gap - prev).abs() <= 1e-6 * gap.abs().max(f64::MIN_POSITIVE) {
                return Ok(n);
            }
        }
        if n >= 16 {
            return Ok(16);
        }
        previous_gap = Some(gap);
        n += 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::CouplerSpec;
    use crate::numerics::eigh_dense;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn number_operator_n1() {
        let space = ModeSpace::new(1, 1).unwrap();
        let (number, _) = mode_operators(&space, 0).unwrap();
        let dense = number.matrix.to_dense();
        for (i, want) in [-1.0, 0.0, 1.0].iter().enumerate() {
            assert_eq!(dense.matrix()[(i, i)], c(*want, 0.0));
        }
    }

    #[test]
    fn lowering_ladder_n1() {
        let space = ModeSpace::new(1, 1).unwrap();
        let (_, lower) = mode_operators(&space, 0).unwrap();
        let mut entries = lower.clone();
        entries.sort_by_key(|&(r, c, _)| (r, c));
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[0], (0, 1, c(1.0, 0.0)));
        assert_eq!(entries[1], (1, 2, c(1.0, 0.0)));
    }

    #[test]
    fn cosine_n1_matches_half_shift() {
        let space = ModeSpace::new(1, 1).unwrap();
        let op = branch_cosine(&space, &[1], 0.0).unwrap();
        let dense = op.matrix.to_dense();
        let want = [
            [0.0, 0.5, 0.0],
            [0.5, 0.0, 0.5],
            [0.0, 0.5, 0.0],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(dense.matrix()[(i, j)], c(want[i][j], 0.0));
            }
        }
    }

    #[test]
    fn cosine_single_mode_of_two_is_tensor_identity() {
        let space2 = ModeSpace::new(2, 1).unwrap();
        let op = branch_cosine(&space2, &[1, 0], 0.0).unwrap();
        let dense = op.matrix.to_dense();
        // cos(phi_1) x I: entry between (n1, n2) and (n1 - 1, n2) only.
        let space1 = ModeSpace::new(1, 1).unwrap();
        let single = branch_cosine(&space1, &[1], 0.0).unwrap().matrix.to_dense();
        for r in 0..9 {
            for cidx in 0..9 {
                let (r1, r2) = (r / 3, r % 3);
                let (c1, c2) = (cidx / 3, cidx % 3);
                let want = if r2 == c2 {
                    single.matrix()[(r1, c1)]
                } else {
                    c(0.0, 0.0)
                };
                assert_eq!(dense.matrix()[(r, cidx)], want);
            }
        }
    }

    #[test]
    fn cosine_pi_offset_negates() {
        let space = ModeSpace::new(2, 2).unwrap();
        let plain = branch_cosine(&space, &[1, 1], 0.0).unwrap().matrix.to_dense();
        let offset = branch_cosine(&space, &[1, 1], PI).unwrap().matrix.to_dense();
        assert!((plain.matrix() + offset.matrix()).norm() < 1e-14);
    }

    #[test]
    fn double_winding_occupies_shift_two_diagonals() {
        let space = ModeSpace::new(1, 2).unwrap();
        let op = branch_cosine(&space, &[2], 0.0).unwrap();
        for &(r, c_, v) in op.matrix.triplets() {
            assert_eq!(c_ - r, 2);
            assert_eq!(v, c(0.5, 0.0));
        }
        assert_eq!(op.matrix.nnz(), 3);
    }

    #[test]
    fn cutoff_guard() {
        let space = ModeSpace::new(1, 1).unwrap();
        assert!(matches!(
            branch_cosine(&space, &[3], 0.0),
            Err(HamiltonianError::CutoffTooSmall { .. })
        ));
        assert!(matches!(
            build_1d(0.7, 50.0, 0.0, 1),
            Err(HamiltonianError::CutoffTooSmall { .. })
        ));
    }

    #[test]
    fn uncoupled_pair_has_no_interaction() {
        let spec = CircuitSpec::capacitive_reference(0.7, 50.0, 0.0, 0.0);
        let network = capacitance_network(&spec).unwrap();
        let pair = build_hamiltonians(&spec, &network, 2).unwrap();
        assert_abs_diff_eq!(pair.h.matrix.frobenius_distance(&pair.h0.matrix), 0.0);
    }

    #[test]
    fn single_qubit_spectrum_is_anharmonic() {
        let spec = CircuitSpec::single(QubitParams::new(0.7, 50.0, 0.0, 0.5, 0));
        let network = capacitance_network(&spec).unwrap();
        let pair = build_hamiltonians(&spec, &network, 8).unwrap();
        let h = pair.single_qubit[0].matrix.to_dense();
        assert_eq!(h.dim(), 289);
        let s = eigh_dense(&h);
        let gap01 = s.eigenvalues[1] - s.eigenvalues[0];
        let gap12 = s.eigenvalues[2] - s.eigenvalues[1];
        assert!(gap01 > 0.0);
        assert!(gap01 * 5.0 < gap12, "tunneling splitting should sit well below the plasma gap");
    }

    #[test]
    fn loaded_mass_values() {
        assert_abs_diff_eq!(loaded_mass_1d(0.7, 50.0, 0.0), 30.0, epsilon = 1e-12);
        assert_abs_diff_eq!(loaded_mass_1d(0.7, 50.0, 0.5), 32.5, epsilon = 1e-12);
    }

    #[test]
    fn gap_1d_decreases_with_loading() {
        let mut previous = f64::INFINITY;
        for g in [0.0, 2.0, 4.0, 6.0, 8.0, 10.0] {
            let h = build_1d(0.7, 50.0, g, 10).unwrap();
            let s = eigh_dense(&h.matrix.to_dense());
            let gap = s.eigenvalues[1] - s.eigenvalues[0];
            assert!(gap < previous, "gap must fall as gamma grows");
            previous = gap;
        }
    }

    #[test]
    fn flux_periodicity() {
        let base = CircuitSpec::single(QubitParams::new(0.7, 50.0, 0.0, 0.37, 0));
        let shifted = CircuitSpec::single(QubitParams::new(0.7, 50.0, 0.0, 1.37, 0));
        let net = capacitance_network(&base).unwrap();
        let h_a = build_hamiltonians(&base, &net, 5).unwrap();
        let h_b = build_hamiltonians(&shifted, &net, 5).unwrap();
        let s_a = eigh_dense_lowest(&h_a.h.matrix.to_dense(), 4).unwrap();
        let s_b = eigh_dense_lowest(&h_b.h.matrix.to_dense(), 4).unwrap();
        for i in 0..4 {
            assert_abs_diff_eq!(s_a.eigenvalues[i], s_b.eigenvalues[i], epsilon = 1e-10);
        }
    }

    #[test]
    fn junction_coupler_adds_single_cosine() {
        let q = QubitParams::new(0.7, 50.0, 0.0, 0.5, 0);
        let spec = CircuitSpec::pair(q, q, vec![CouplerSpec::junction(0.3, (0, 2), (1, 1))]);
        let network = capacitance_network(&spec).unwrap();
        let pair = build_hamiltonians(&spec, &network, 2).unwrap();
        let diff_dense = {
            let h = pair.h.matrix.to_dense();
            let h0 = pair.h0.matrix.to_dense();
            h.matrix() - h0.matrix()
        };
        // The difference must equal -0.3 cos(phi_{0,2} - phi_{1,1}).
        let space = ModeSpace::new(4, 2).unwrap();
        let cos = branch_cosine(&space, &[0, 1, -1, 0], 0.0).unwrap();
        let want = cos.matrix.to_dense();
        assert!((diff_dense + want.matrix().scale(0.3)).norm() < 1e-14);
    }

    #[test]
    fn converged_cutoff_single_qubit() {
        let spec = CircuitSpec::single(QubitParams::new(0.7, 50.0, 0.0, 0.5, 0));
        let n = converged_cutoff(&spec).unwrap();
        assert!((4..=16).contains(&n));
        // The selected cutoff must reproduce the N+2 gap to 1e-8.
        let network = capacitance_network(&spec).unwrap();
        let gap_at = |cutoff| {
            let pair = build_hamiltonians(&spec, &network, cutoff).unwrap();
            eigh_dense_lowest(&pair.single_qubit[0].matrix.to_dense(), 2)
                .unwrap()
                .gap()
        };
        assert_abs_diff_eq!(gap_at(n), gap_at(n + 2), epsilon = 1e-8);
    }
}
