//! Config-driven experiment plans: parse a JSON document, run a parameter
//! sweep over the full pipeline, and emit CSV or JSON-lines tables.
//!
//! Sweeps are embarrassingly parallel; grid points run on worker threads and
//! rows are merged in grid order, so repeated runs of one plan are
//! byte-identical. A failed point carries status flags instead of aborting
//! the sweep.

use crate::circuit::{
    capacitance_network, CircuitError, CircuitSpec, CouplerKind, CouplerSpec, QubitParams,
};
use crate::effective::{
    pauli_decompose, qubit_projector, solve_lowest, swt_from_spectrum, EffectiveError, Method,
    PauliCoefficients, SolverSettings, StoquasticVerdict,
};
use crate::hamiltonian::{build_hamiltonians, converged_cutoff, voltage_perturbation};
use crate::harmonic::harmonic_1d;
use crate::numerics::LANCZOS_SEED;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::io::Write;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PlanError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid config at {path}: {message}")]
    Validation { path: String, message: String },
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepPath {
    Alpha,
    R,
    Beta,
    Gamma,
    F,
    DeltaF,
    #[serde(rename = "delta_V")]
    DeltaV,
    #[serde(rename = "M")]
    Mutual,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SweepGrid {
    Explicit(Vec<f64>),
    Range {
        start: f64,
        stop: f64,
        points: usize,
        #[serde(default = "default_scale")]
        scale: GridScale,
    },
}

fn default_scale() -> GridScale {
    GridScale::Linear
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GridScale {
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub path: SweepPath,
    pub grid: SweepGrid,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CutoffPolicy {
    Fixed(usize),
    Auto(AutoKeyword),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AutoKeyword {
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodConfig {
    Dense,
    Lanczos,
    Auto,
}

impl From<MethodConfig> for Method {
    fn from(m: MethodConfig) -> Self {
        match m {
            MethodConfig::Dense => Method::Dense,
            MethodConfig::Lanczos => Method::Lanczos,
            MethodConfig::Auto => Method::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverConfig {
    #[serde(default = "default_cutoff")]
    pub cutoff: CutoffPolicy,
    #[serde(default = "default_method")]
    pub method: MethodConfig,
    #[serde(default = "default_tol")]
    pub tol: f64,
}

fn default_cutoff() -> CutoffPolicy {
    CutoffPolicy::Auto(AutoKeyword::Auto)
}
fn default_method() -> MethodConfig {
    MethodConfig::Auto
}
fn default_tol() -> f64 {
    1e-10
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            cutoff: default_cutoff(),
            method: default_method(),
            tol: default_tol(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OutputSpec {
    Named(OutputName),
    SpectrumK {
        spectrum_k: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputName {
    SpectrumK,
    Pauli,
    Harmonic,
    Stoquastic,
}

fn default_outputs() -> Vec<OutputSpec> {
    vec![
        OutputSpec::Named(OutputName::SpectrumK),
        OutputSpec::Named(OutputName::Pauli),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoadConfig {
    pub node: usize,
    pub gamma: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QubitConfig {
    pub alpha: f64,
    pub r: f64,
    #[serde(default)]
    pub beta: f64,
    #[serde(default = "default_flux")]
    pub f: f64,
    #[serde(default)]
    pub ground: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub load: Option<LoadConfig>,
}

fn default_flux() -> f64 {
    0.5
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CouplerKindConfig {
    Capacitor,
    Junction,
    MutualInductance,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CouplerConfig {
    pub kind: CouplerKindConfig,
    #[serde(default)]
    pub gamma: f64,
    #[serde(default)]
    pub mutual: f64,
    pub from: [usize; 2],
    pub to: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitConfig {
    pub qubits: Vec<QubitConfig>,
    #[serde(default)]
    pub couplers: Vec<CouplerConfig>,
}

/// A parsed, validated experiment description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentPlan {
    pub circuit: CircuitConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepConfig>,
    #[serde(default)]
    pub solver: SolverConfig,
    #[serde(default = "default_outputs")]
    pub outputs: Vec<OutputSpec>,
    #[serde(default)]
    pub seed: u64,
}

impl ExperimentPlan {
    pub fn circuit_spec(&self) -> CircuitSpec {
        let qubits = self
            .circuit
            .qubits
            .iter()
            .map(|q| {
                let mut params = QubitParams::new(q.alpha, q.r, q.beta, q.f, q.ground);
                if let Some(load) = q.load {
                    params = params.with_load(load.node, load.gamma);
                }
                params
            })
            .collect();
        let couplers = self
            .circuit
            .couplers
            .iter()
            .map(|c| CouplerSpec {
                kind: match c.kind {
                    CouplerKindConfig::Capacitor => CouplerKind::Capacitor,
                    CouplerKindConfig::Junction => CouplerKind::Junction,
                    CouplerKindConfig::MutualInductance => CouplerKind::MutualInductance,
                },
                gamma: c.gamma,
                mutual: c.mutual,
                from: (c.from[0], c.from[1]),
                to: (c.to[0], c.to[1]),
            })
            .collect();
        CircuitSpec { qubits, couplers }
    }

    /// Number of energies emitted per row.
    pub fn spectrum_k(&self) -> usize {
        for out in &self.outputs {
            if let OutputSpec::SpectrumK { spectrum_k } = out {
                return *spectrum_k;
            }
        }
        if self.wants(OutputName::SpectrumK) {
            4
        } else {
            0
        }
    }

    pub fn wants(&self, name: OutputName) -> bool {
        self.outputs.iter().any(|o| match o {
            OutputSpec::Named(n) => *n == name,
            OutputSpec::SpectrumK { .. } => name == OutputName::SpectrumK,
        })
    }

    /// Materialized sweep grid.
    pub fn grid(&self) -> Vec<f64> {
        match &self.sweep {
            None => vec![],
            Some(sweep) => match &sweep.grid {
                SweepGrid::Explicit(values) => values.clone(),
                SweepGrid::Range {
                    start,
                    stop,
                    points,
                    scale,
                } => {
                    let n = (*points).max(1);
                    (0..n)
                        .map(|i| {
                            let t = if n == 1 {
                                0.0
                            } else {
                                i as f64 / (n - 1) as f64
                            };
                            match scale {
                                GridScale::Linear => start + t * (stop - start),
                                GridScale::Log => {
                                    (start.ln() + t * (stop.ln() - start.ln())).exp()
                                }
                            }
                        })
                        .collect()
                }
            },
        }
    }

    /// FNV-1a hash of the canonical serialized plan, recorded in outputs.
    pub fn hash(&self) -> u64 {
        let text = serde_json::to_string(self).expect("plan serializes");
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for byte in text.as_bytes() {
            h ^= *byte as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        h
    }

    pub fn validate(&self) -> Result<(), PlanError> {
        let spec = self.circuit_spec();
        spec.validate().map_err(|e| match &e {
            CircuitError::InvalidQubit { index, .. } => PlanError::Validation {
                path: format!("circuit.qubits[{index}]"),
                message: e.to_string(),
            },
            CircuitError::InvalidCoupler { index, .. } => PlanError::Validation {
                path: format!("circuit.couplers[{index}]"),
                message: e.to_string(),
            },
            _ => PlanError::Validation {
                path: "circuit".into(),
                message: e.to_string(),
            },
        })?;
        if let Some(sweep) = &self.sweep {
            let grid = self.grid();
            if grid.is_empty() {
                return Err(PlanError::Validation {
                    path: "sweep.grid".into(),
                    message: "grid must be non-empty".into(),
                });
            }
            if grid.windows(2).any(|w| w[1] <= w[0]) {
                return Err(PlanError::Validation {
                    path: "sweep.grid".into(),
                    message: "grid must be strictly increasing".into(),
                });
            }
            match sweep.path {
                SweepPath::Gamma => {
                    let has_gamma = self
                        .circuit
                        .couplers
                        .iter()
                        .any(|c| c.kind != CouplerKindConfig::MutualInductance)
                        || self.circuit.qubits.iter().any(|q| q.load.is_some());
                    if !has_gamma {
                        return Err(PlanError::Validation {
                            path: "sweep.path".into(),
                            message: "gamma sweep needs a capacitor/junction coupler or a load"
                                .into(),
                        });
                    }
                }
                SweepPath::Mutual => {
                    if !self
                        .circuit
                        .couplers
                        .iter()
                        .any(|c| c.kind == CouplerKindConfig::MutualInductance)
                    {
                        return Err(PlanError::Validation {
                            path: "sweep.path".into(),
                            message: "M sweep needs a mutual_inductance coupler".into(),
                        });
                    }
                }
                SweepPath::DeltaV => {
                    if !self.circuit.qubits.iter().any(|q| q.load.is_some()) {
                        return Err(PlanError::Validation {
                            path: "sweep.path".into(),
                            message: "delta_V sweep needs a qubit with a load capacitor".into(),
                        });
                    }
                }
                _ => {}
            }
        }
        if let CutoffPolicy::Fixed(n) = self.solver.cutoff {
            if n < 2 {
                return Err(PlanError::Validation {
                    path: "solver.cutoff".into(),
                    message: format!("cutoff must be at least 2, got {n}"),
                });
            }
        }
        if !(self.solver.tol > 0.0) {
            return Err(PlanError::Validation {
                path: "solver.tol".into(),
                message: "tol must be positive".into(),
            });
        }
        Ok(())
    }
}

/// Parses and validates a JSON experiment document.
pub fn parse_config(text: &str) -> Result<ExperimentPlan, PlanError> {
    let plan: ExperimentPlan =
        serde_json::from_str(text).map_err(|e| PlanError::Parse(e.to_string()))?;
    plan.validate()?;
    Ok(plan)
}

/// One evaluated grid point. Failed points carry `flags` and `None` fields.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub sweep_value: f64,
    pub cutoff: Option<usize>,
    pub energies: Vec<Option<f64>>,
    pub delta1: Option<f64>,
    pub delta2: Option<f64>,
    pub pauli: Option<PauliCoefficients>,
    pub h_gap: Option<f64>,
    pub h_overlap: Option<f64>,
    pub stoquastic: Option<StoquasticVerdict>,
    pub flags: Vec<String>,
}

fn flag_of_effective(e: &EffectiveError) -> String {
    match e {
        EffectiveError::SubspaceMismatch(_) => "SubspaceMismatch".into(),
        EffectiveError::DegenerateSpectrum(_) => "DegenerateSpectrum".into(),
        EffectiveError::DegenerateQubit { .. } => "DegenerateQubit".into(),
        EffectiveError::InsufficientExcitedBasis { .. } => "InsufficientExcitedBasis".into(),
        EffectiveError::Numerics(n) => flag_of_numerics(n),
        _ => "Error".into(),
    }
}

fn flag_of_numerics(e: &crate::numerics::NumericsError) -> String {
    match e {
        crate::numerics::NumericsError::NoConvergence(_) => "NoConvergence".into(),
        _ => "Error".into(),
    }
}

/// Applies the sweep parameter to the circuit; returns the specialized spec
/// plus the voltage offset (for delta_V sweeps, applied after assembly).
fn specialize(spec: &CircuitSpec, path: SweepPath, value: f64) -> (CircuitSpec, f64) {
    let mut spec = spec.clone();
    let mut delta_v = 0.0;
    match path {
        SweepPath::Alpha => spec.qubits.iter_mut().for_each(|q| q.alpha = value),
        SweepPath::R => spec.qubits.iter_mut().for_each(|q| q.r = value),
        SweepPath::Beta => spec.qubits.iter_mut().for_each(|q| q.beta = value),
        SweepPath::F => spec.qubits.iter_mut().for_each(|q| q.f = value),
        SweepPath::DeltaF => spec.qubits.iter_mut().for_each(|q| q.f += value),
        SweepPath::Gamma => {
            spec.couplers
                .iter_mut()
                .filter(|c| c.kind != CouplerKind::MutualInductance)
                .for_each(|c| c.gamma = value);
            spec.qubits.iter_mut().for_each(|q| {
                if let Some(load) = &mut q.load {
                    load.gamma = value;
                }
            });
        }
        SweepPath::Mutual => spec
            .couplers
            .iter_mut()
            .filter(|c| c.kind == CouplerKind::MutualInductance)
            .for_each(|c| c.mutual = value),
        SweepPath::DeltaV => delta_v = value,
    }
    (spec, delta_v)
}

fn evaluate_point(plan: &ExperimentPlan, value: f64) -> SweepRow {
    let k = plan.spectrum_k();
    let mut row = SweepRow {
        sweep_value: value,
        cutoff: None,
        energies: vec![None; k],
        delta1: None,
        delta2: None,
        pauli: None,
        h_gap: None,
        h_overlap: None,
        stoquastic: None,
        flags: Vec::new(),
    };
    let path = plan.sweep.as_ref().map(|s| s.path);
    let (spec, delta_v) = match path {
        Some(p) => specialize(&plan.circuit_spec(), p, value),
        None => (plan.circuit_spec(), 0.0),
    };

    if plan.wants(OutputName::Harmonic) {
        let q = &spec.qubits[0];
        let load_gamma = q.load.map_or(0.0, |l| l.gamma);
        match harmonic_1d(q.alpha, q.r, load_gamma) {
            Ok(model) => {
                row.h_gap = Some(model.gap);
                row.h_overlap = Some(model.overlap);
            }
            Err(_) => row.flags.push("HarmonicOutOfRegime".into()),
        }
    }

    let cutoff = match plan.solver.cutoff {
        CutoffPolicy::Fixed(n) => Ok(n),
        CutoffPolicy::Auto(_) => converged_cutoff(&spec),
    };
    let cutoff = match cutoff {
        Ok(n) => n,
        Err(e) => {
            row.flags.push(format!("CutoffSelection:{e}"));
            return row;
        }
    };
    row.cutoff = Some(cutoff);

    let network = match capacitance_network(&spec) {
        Ok(n) => n,
        Err(e) => {
            row.flags.push(format!("Circuit:{e}"));
            return row;
        }
    };
    let mut pair = match build_hamiltonians(&spec, &network, cutoff) {
        Ok(p) => p,
        Err(e) => {
            row.flags.push(format!("Hamiltonian:{e}"));
            return row;
        }
    };
    if delta_v != 0.0 {
        let loaded = spec
            .qubits
            .iter()
            .position(|q| q.load.is_some())
            .expect("validated delta_V sweep");
        match voltage_perturbation(&spec, &network, cutoff, loaded, delta_v) {
            Ok(vp) => match pair.h.matrix.add_scaled(&vp.matrix, 1.0) {
                Ok(h) => pair.h.matrix = h,
                Err(e) => {
                    row.flags.push(flag_of_numerics(&e));
                    return row;
                }
            },
            Err(e) => {
                row.flags.push(format!("Hamiltonian:{e}"));
                return row;
            }
        }
    }

    let settings = SolverSettings {
        method: plan.solver.method.into(),
        tol: plan.solver.tol,
        seed: LANCZOS_SEED ^ plan.seed,
    };

    let sub = match qubit_projector(&pair) {
        Ok(s) => s,
        Err(e) => {
            row.flags.push(flag_of_effective(&e));
            return row;
        }
    };
    let d = sub.dim();
    let want = k.max(d + 1).min(pair.h.space.total_dim());
    let spectrum = match solve_lowest(&pair.h.matrix, want, settings) {
        Ok(s) => s,
        Err(e) => {
            row.flags.push(flag_of_numerics(&e));
            return row;
        }
    };
    for i in 0..k.min(spectrum.eigenvalues.len()) {
        row.energies[i] = Some(spectrum.eigenvalues[i]);
    }

    if plan.wants(OutputName::Pauli) || plan.wants(OutputName::Stoquastic) {
        let boundary_gap = spectrum.eigenvalues[d] - spectrum.eigenvalues[d - 1];
        if boundary_gap < 1e-12 * pair.h.matrix.norm_bound() {
            row.flags.push("DegenerateSpectrum".into());
            return row;
        }
        match swt_from_spectrum(&spectrum, &sub) {
            Ok(eff) => {
                if plan.wants(OutputName::Stoquastic) {
                    row.stoquastic = Some(crate::effective::stoquastic_test(&eff.matrix, 1e-10));
                }
                if plan.wants(OutputName::Pauli) {
                    match pauli_decompose(&eff) {
                        Ok(p) => {
                            row.delta1 = p.single.first().copied();
                            row.delta2 = p.single.get(1).copied();
                            row.pauli = Some(p);
                        }
                        Err(e) => row.flags.push(flag_of_effective(&e)),
                    }
                }
            }
            Err(e) => row.flags.push(flag_of_effective(&e)),
        }
    }
    row
}

/// Relative change beyond which a sign flip between adjacent sweep points is
/// reported as PhaseInstability.
const PHASE_FLIP_REL: f64 = 0.5;

fn mark_phase_instability(rows: &mut [SweepRow]) {
    for i in 1..rows.len() {
        let (head, tail) = rows.split_at_mut(i);
        let (prev, current) = (&head[i - 1], &mut tail[0]);
        let (Some(p), Some(c)) = (&prev.pauli, &current.pauli) else {
            continue;
        };
        let mut unstable = false;
        for a in 0..3 {
            for b in 0..3 {
                let (x, y) = (p.pair[a][b], c.pair[a][b]);
                let scale = x.abs().max(y.abs());
                if scale > 1e-12
                    && x * y < 0.0
                    && (x - y).abs() > PHASE_FLIP_REL * scale
                {
                    unstable = true;
                }
            }
        }
        if unstable {
            current.flags.push("PhaseInstability".into());
        }
    }
}

/// Runs every grid point (in parallel) and merges rows in grid order.
pub fn run_sweep(plan: &ExperimentPlan) -> Result<Vec<SweepRow>, PlanError> {
    plan.validate()?;
    if plan.sweep.is_none() {
        return Err(PlanError::Validation {
            path: "sweep".into(),
            message: "plan has no sweep section".into(),
        });
    }
    let grid = plan.grid();
    let mut rows: Vec<SweepRow> = grid
        .par_iter()
        .map(|&value| evaluate_point(plan, value))
        .collect();
    mark_phase_instability(&mut rows);
    Ok(rows)
}

/// Evaluates the circuit as-is (no sweep applied); used by single-point runs.
pub fn run_single(plan: &ExperimentPlan) -> Result<SweepRow, PlanError> {
    plan.validate()?;
    let mut stripped = plan.clone();
    stripped.sweep = None;
    Ok(evaluate_point(&stripped, f64::NAN))
}

fn fmt_opt(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v:.12e}"),
        None => "NA".into(),
    }
}

fn verdict_str(v: StoquasticVerdict) -> &'static str {
    match v {
        StoquasticVerdict::Stoquastic => "stoquastic",
        StoquasticVerdict::NonStoquastic => "non_stoquastic",
        StoquasticVerdict::Boundary => "boundary",
    }
}

/// Fixed CSV column order shared by both output formats.
pub fn columns(k: usize) -> Vec<String> {
    let mut cols = vec!["sweep_value".to_string()];
    for i in 0..k {
        cols.push(format!("E{i}"));
    }
    cols.extend(
        [
            "delta1", "delta2", "J_xx", "J_xy", "J_xz", "J_yx", "J_yy", "J_yz", "J_zx", "J_zy",
            "J_zz", "J_xI", "J_yI", "J_zI", "J_Ix", "J_Iy", "J_Iz", "offset", "h_gap",
            "h_overlap", "stoquastic", "flags",
        ]
        .iter()
        .map(|s| s.to_string()),
    );
    cols
}

fn row_fields(row: &SweepRow, k: usize) -> Vec<String> {
    let mut fields = Vec::with_capacity(k + 22);
    fields.push(if row.sweep_value.is_nan() {
        "NA".into()
    } else {
        format!("{:.12e}", row.sweep_value)
    });
    for i in 0..k {
        fields.push(fmt_opt(row.energies.get(i).copied().flatten()));
    }
    fields.push(fmt_opt(row.delta1));
    fields.push(fmt_opt(row.delta2));
    match &row.pauli {
        Some(p) => {
            for a in 0..3 {
                for b in 0..3 {
                    fields.push(fmt_opt(Some(p.pair[a][b])));
                }
            }
            for i in 0..3 {
                fields.push(fmt_opt(Some(p.left[i])));
            }
            for i in 0..3 {
                fields.push(fmt_opt(Some(p.right[i])));
            }
            fields.push(fmt_opt(Some(p.offset)));
        }
        None => fields.extend(std::iter::repeat("NA".to_string()).take(16)),
    }
    fields.push(fmt_opt(row.h_gap));
    fields.push(fmt_opt(row.h_overlap));
    fields.push(match row.stoquastic {
        Some(v) => verdict_str(v).to_string(),
        None => "NA".into(),
    });
    fields.push(row.flags.join(";"));
    fields
}

/// RFC-4180 CSV with a leading `#` metadata block.
pub fn write_csv(
    plan: &ExperimentPlan,
    rows: &[SweepRow],
    out: &mut dyn Write,
) -> Result<(), PlanError> {
    let k = plan.spectrum_k();
    writeln!(out, "# plan_hash={:016x}", plan.hash())?;
    writeln!(out, "# seed={}", plan.seed)?;
    let cutoffs: Vec<String> = rows
        .iter()
        .map(|r| r.cutoff.map_or("NA".into(), |c| c.to_string()))
        .collect();
    writeln!(out, "# cutoffs={}", cutoffs.join(","))?;
    writeln!(out, "{}", columns(k).join(","))?;
    for row in rows {
        writeln!(out, "{}", row_fields(row, k).join(","))?;
    }
    Ok(())
}

/// JSON-lines mirror: one metadata object, then one object per row.
pub fn write_jsonl(
    plan: &ExperimentPlan,
    rows: &[SweepRow],
    out: &mut dyn Write,
) -> Result<(), PlanError> {
    let k = plan.spectrum_k();
    let meta = serde_json::json!({
        "plan_hash": format!("{:016x}", plan.hash()),
        "seed": plan.seed,
    });
    writeln!(out, "{meta}")?;
    let cols = columns(k);
    for row in rows {
        let fields = row_fields(row, k);
        let mut obj = serde_json::Map::new();
        for (name, value) in cols.iter().zip(fields.iter()) {
            obj.insert(name.clone(), serde_json::Value::String(value.clone()));
        }
        writeln!(out, "{}", serde_json::Value::Object(obj))?;
    }
    Ok(())
}
