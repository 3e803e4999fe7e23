//! Hermitian eigensolvers (dense and iterative) and a small dense SVD.
//!
//! Everything here operates on explicit complex matrices. Two storage formats
//! are provided: [`DenseHermitian`] for small matrices (effective Hamiltonians,
//! overlap matrices) and [`SparseHermitian`] in upper-triangular triplet form
//! for charge-basis Hamiltonians, whose dimension grows as `(2N+1)^modes`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

pub type C64 = Complex<f64>;

/// Absolute tolerance for Hermiticity checks on dense inputs.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Relative eigenvalue spacing below which a spectrum is flagged degenerate.
pub const DEGENERACY_REL_TOL: f64 = 1e-12;

/// Seed of the deterministic Lanczos starting vector. Fixed so that repeated
/// runs (and parallel sweep workers) produce bit-identical spectra.
pub const LANCZOS_SEED: u64 = 0x9E37_79B9_7F4A_7C15;

const LANCZOS_MAX_ITER: usize = 1200;

#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("matrix is not Hermitian: max deviation {0:.3e}")]
    NonHermitianInput(f64),
    #[error("no convergence after {0} Lanczos iterations")]
    NoConvergence(usize),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension must be at least 1")]
    EmptyDimension,
    #[error("triplet index ({row},{col}) out of bounds for dimension {dim}")]
    IndexOutOfBounds { row: usize, col: usize, dim: usize },
    #[error("requested {k} eigenpairs from an operator of dimension {dim}")]
    TooManyEigenpairs { k: usize, dim: usize },
    #[error("svd_small supports dimension <= {limit}, got {dim}")]
    DimensionTooLarge { dim: usize, limit: usize },
    #[error("tolerance must be positive, got {0}")]
    NonPositiveTolerance(f64),
}

/// A dense Hermitian matrix, validated on construction.
#[derive(Debug, Clone)]
pub struct DenseHermitian {
    matrix: DMatrix<C64>,
}

impl DenseHermitian {
    /// Validates squareness and Hermiticity (within [`HERMITICITY_TOL`]).
    pub fn new(matrix: DMatrix<C64>) -> Result<Self, NumericsError> {
        if matrix.nrows() != matrix.ncols() {
            return Err(NumericsError::NotSquare {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
            });
        }
        if matrix.nrows() == 0 {
            return Err(NumericsError::EmptyDimension);
        }
        let dev = hermiticity_deviation(&matrix);
        if dev > HERMITICITY_TOL {
            return Err(NumericsError::NonHermitianInput(dev));
        }
        Ok(Self { matrix })
    }

    /// Symmetrizes `(M + M^H)/2` first; for matrices assembled from products
    /// whose roundoff may exceed the strict tolerance.
    pub fn from_hermitian_part(matrix: DMatrix<C64>) -> Result<Self, NumericsError> {
        let sym = (&matrix + matrix.adjoint()).scale(0.5);
        Self::new(sym)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<C64> {
        self.matrix
    }
}

/// Largest absolute deviation of `M` from its own adjoint.
pub fn hermiticity_deviation(m: &DMatrix<C64>) -> f64 {
    let n = m.nrows();
    let mut dev = 0.0f64;
    for i in 0..n {
        for j in i..n {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev
}

/// A sparse Hermitian matrix storing only the upper triangle (row <= col);
/// the mirror entry is implicitly the conjugate.
#[derive(Debug, Clone)]
pub struct SparseHermitian {
    dim: usize,
    triplets: Vec<(usize, usize, C64)>,
}

impl SparseHermitian {
    /// Assembles from raw triplets in any order. Lower-triangle entries are
    /// folded onto the upper triangle as conjugates, duplicates are summed,
    /// and exact zeros are dropped.
    pub fn from_triplets(
        dim: usize,
        raw: impl IntoIterator<Item = (usize, usize, C64)>,
    ) -> Result<Self, NumericsError> {
        if dim == 0 {
            return Err(NumericsError::EmptyDimension);
        }
        let mut canonical: Vec<(usize, usize, C64)> = Vec::new();
        for (row, col, value) in raw {
            if row >= dim || col >= dim {
                return Err(NumericsError::IndexOutOfBounds { row, col, dim });
            }
            if row <= col {
                canonical.push((row, col, value));
            } else {
                canonical.push((col, row, value.conj()));
            }
        }
        canonical.sort_by_key(|&(r, c, _)| (r, c));
        let mut triplets: Vec<(usize, usize, C64)> = Vec::with_capacity(canonical.len());
        for (r, c, v) in canonical {
            match triplets.last_mut() {
                Some(last) if last.0 == r && last.1 == c => last.2 += v,
                _ => triplets.push((r, c, v)),
            }
        }
        triplets.retain(|&(_, _, v)| v.norm_sqr() > 0.0);
        for &(r, c, v) in &triplets {
            if r == c && v.im.abs() > HERMITICITY_TOL {
                return Err(NumericsError::NonHermitianInput(v.im.abs()));
            }
        }
        Ok(Self { dim, triplets })
    }

    pub fn zero(dim: usize) -> Result<Self, NumericsError> {
        Self::from_triplets(dim, std::iter::empty())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.triplets.len()
    }

    pub fn triplets(&self) -> &[(usize, usize, C64)] {
        &self.triplets
    }

    /// `self * scale`, with a real scale so Hermiticity is preserved.
    pub fn scaled(&self, scale: f64) -> Self {
        let triplets = self
            .triplets
            .iter()
            .map(|&(r, c, v)| (r, c, v * scale))
            .collect();
        Self {
            dim: self.dim,
            triplets,
        }
    }

    /// Sum of several operators on the same space.
    pub fn sum(terms: &[&SparseHermitian]) -> Result<Self, NumericsError> {
        let dim = terms.first().map_or(0, |t| t.dim);
        Self::from_triplets(
            dim.max(1),
            terms
                .iter()
                .flat_map(|t| t.triplets.iter().copied())
                .collect::<Vec<_>>(),
        )
    }

    /// `self + other * scale`.
    pub fn add_scaled(&self, other: &SparseHermitian, scale: f64) -> Result<Self, NumericsError> {
        Self::from_triplets(
            self.dim,
            self.triplets
                .iter()
                .copied()
                .chain(other.triplets.iter().map(|&(r, c, v)| (r, c, v * scale))),
        )
    }

    pub fn matvec(&self, x: &DVector<C64>) -> DVector<C64> {
        let mut y = DVector::from_element(self.dim, C64::new(0.0, 0.0));
        for &(r, c, v) in &self.triplets {
            y[r] += v * x[c];
            if r != c {
                y[c] += v.conj() * x[r];
            }
        }
        y
    }

    pub fn to_dense(&self) -> DenseHermitian {
        let mut m = DMatrix::from_element(self.dim, self.dim, C64::new(0.0, 0.0));
        for &(r, c, v) in &self.triplets {
            m[(r, c)] += v;
            if r != c {
                m[(c, r)] += v.conj();
            }
        }
        DenseHermitian::new(m).expect("triplet storage is Hermitian by construction")
    }

    /// Gershgorin upper bound on the operator norm.
    pub fn norm_bound(&self) -> f64 {
        let mut row_sums = vec![0.0f64; self.dim];
        for &(r, c, v) in &self.triplets {
            let a = v.norm();
            row_sums[r] += a;
            if r != c {
                row_sums[c] += a;
            }
        }
        row_sums.into_iter().fold(0.0, f64::max)
    }

    /// Frobenius norm difference to another operator on the same space.
    pub fn frobenius_distance(&self, other: &SparseHermitian) -> f64 {
        let diff = self
            .add_scaled(other, -1.0)
            .expect("same-dimension operators");
        let mut sq = 0.0;
        for &(r, c, v) in &diff.triplets {
            let n2 = v.norm_sqr();
            sq += if r == c { n2 } else { 2.0 * n2 };
        }
        sq.sqrt()
    }
}

/// Ordered eigenvalues with phase-fixed orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Ascending eigenvalues.
    pub eigenvalues: Vec<f64>,
    /// One column per eigenvalue, phase-fixed via [`fix_phase`].
    pub eigenvectors: DMatrix<C64>,
    /// Exact residual norms `||Hv - lambda v||` per pair.
    pub residual_norms: Vec<f64>,
    /// True if two computed eigenvalues are closer than
    /// [`DEGENERACY_REL_TOL`] times the operator norm estimate.
    pub degenerate: bool,
}

impl Spectrum {
    pub fn gap(&self) -> f64 {
        self.eigenvalues[1] - self.eigenvalues[0]
    }
}

/// Multiplies a vector by the unit scalar that makes its largest-magnitude
/// entry real positive; ties broken by lowest index. This pins the arbitrary
/// eigenvector phase so downstream Pauli coefficients are reproducible.
pub fn fix_phase(v: &mut DVector<C64>) {
    let mut best = 0usize;
    let mut best_norm = 0.0f64;
    for (i, entry) in v.iter().enumerate() {
        let n = entry.norm();
        if n > best_norm {
            best_norm = n;
            best = i;
        }
    }
    if best_norm == 0.0 {
        return;
    }
    let scale = v[best].conj() / best_norm;
    for entry in v.iter_mut() {
        *entry *= scale;
    }
}

fn degeneracy_flag(eigenvalues: &[f64], scale: f64) -> bool {
    eigenvalues
        .windows(2)
        .any(|w| (w[1] - w[0]).abs() < DEGENERACY_REL_TOL * scale.max(f64::MIN_POSITIVE))
}

/// Full dense Hermitian eigendecomposition, eigenvalues ascending.
pub fn eigh_dense(h: &DenseHermitian) -> Spectrum {
    let n = h.dim();
    let eig = h.matrix.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut eigenvectors = DMatrix::from_element(n, n, C64::new(0.0, 0.0));
    for (dst, &src) in order.iter().enumerate() {
        let mut col: DVector<C64> = eig.eigenvectors.column(src).into();
        fix_phase(&mut col);
        eigenvectors.set_column(dst, &col);
    }

    let residual_norms: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|i| {
            let v: DVector<C64> = eigenvectors.column(i).into();
            (&h.matrix * &v - v.scale(eigenvalues[i])).norm()
        })
        .collect();

    let scale = eigenvalues
        .iter()
        .fold(0.0f64, |acc, &e| acc.max(e.abs()));
    let degenerate = degeneracy_flag(&eigenvalues, scale);
    Spectrum {
        eigenvalues,
        eigenvectors,
        residual_norms,
        degenerate,
    }
}

/// Convenience: dense solve keeping only the `k` lowest pairs.
pub fn eigh_dense_lowest(h: &DenseHermitian, k: usize) -> Result<Spectrum, NumericsError> {
    if k > h.dim() {
        return Err(NumericsError::TooManyEigenpairs { k, dim: h.dim() });
    }
    let full = eigh_dense(h);
    Ok(Spectrum {
        eigenvalues: full.eigenvalues[..k].to_vec(),
        eigenvectors: full.eigenvectors.columns(0, k).into(),
        residual_norms: full.residual_norms[..k].to_vec(),
        degenerate: degeneracy_flag(
            &full.eigenvalues[..k],
            full.eigenvalues
                .iter()
                .fold(0.0f64, |acc, &e| acc.max(e.abs())),
        ),
    })
}

/// Lanczos iteration with full reorthogonalization for the `k` lowest
/// eigenpairs of a sparse Hermitian operator.
///
/// The starting vector is pseudo-random with the fixed seed [`LANCZOS_SEED`],
/// making results bit-reproducible. Residuals are verified explicitly against
/// `tol * ||H||`, with the operator norm estimated from the Ritz values.
pub fn lanczos_lowest(
    h: &SparseHermitian,
    k: usize,
    tol: f64,
) -> Result<Spectrum, NumericsError> {
    lanczos_lowest_seeded(h, k, tol, LANCZOS_SEED)
}

pub fn lanczos_lowest_seeded(
    h: &SparseHermitian,
    k: usize,
    tol: f64,
    seed: u64,
) -> Result<Spectrum, NumericsError> {
    let n = h.dim();
    if k > n {
        return Err(NumericsError::TooManyEigenpairs { k, dim: n });
    }
    if !(tol > 0.0) {
        return Err(NumericsError::NonPositiveTolerance(tol));
    }
    if k == 0 {
        return Ok(Spectrum {
            eigenvalues: vec![],
            eigenvectors: DMatrix::from_element(n, 0, C64::new(0.0, 0.0)),
            residual_norms: vec![],
            degenerate: false,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_unit = |rng: &mut ChaCha8Rng| {
        let mut v = DVector::from_fn(n, |_, _| {
            C64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
        });
        v /= C64::new(v.norm(), 0.0);
        v
    };

    let max_iter = n.min(LANCZOS_MAX_ITER);
    let mut basis: Vec<DVector<C64>> = vec![random_unit(&mut rng)];
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let norm_floor = h.norm_bound().max(1.0) * 1e-14;

    let reorthogonalize = |w: &mut DVector<C64>, basis: &[DVector<C64>]| {
        for _ in 0..2 {
            for b in basis {
                let c = b.dotc(w);
                w.axpy(-c, b, C64::new(1.0, 0.0));
            }
        }
    };

    let mut next_check = k + 2;
    loop {
        let j = alphas.len();
        let mut w = h.matvec(&basis[j]);
        let alpha = basis[j].dotc(&w).re;
        alphas.push(alpha);
        reorthogonalize(&mut w, &basis);
        let beta = w.norm();
        let exhausted = basis.len() == n || alphas.len() >= max_iter;

        let m = alphas.len();
        let check_now = exhausted || (m >= k + 1 && m >= next_check);
        if check_now {
            if m >= next_check {
                // Geometric schedule keeps the O(m^3) tridiagonal solves cheap.
                next_check = (m + 4).max((m as f64 * 1.25) as usize);
            }
            let (theta, s) = tridiagonal_eigen(&alphas, &betas);
            let hnorm = theta[0]
                .abs()
                .max(theta[m - 1].abs())
                .max(f64::MIN_POSITIVE);
            let bound_ok = m >= k
                && (0..k).all(|i| (beta * s[(m - 1, i)]).abs() <= tol * hnorm);
            if bound_ok || exhausted {
                let spectrum =
                    assemble_ritz(h, &basis, &theta, &s, k, hnorm, tol)?;
                if let Some(sp) = spectrum {
                    return Ok(sp);
                }
                if exhausted {
                    return Err(NumericsError::NoConvergence(m));
                }
            }
        }

        if beta <= norm_floor {
            // Invariant subspace hit; restart with a fresh direction.
            let mut fresh = random_unit(&mut rng);
            reorthogonalize(&mut fresh, &basis);
            let norm = fresh.norm();
            if norm <= 1e-10 {
                return Err(NumericsError::NoConvergence(alphas.len()));
            }
            betas.push(0.0);
            basis.push(fresh / C64::new(norm, 0.0));
        } else {
            betas.push(beta);
            basis.push(w / C64::new(beta, 0.0));
        }
    }
}

/// Forms Ritz vectors for the `k` lowest Ritz values, verifies the true
/// residuals, and packages a `Spectrum`. Returns `Ok(None)` if a residual
/// check fails (caller keeps iterating).
fn assemble_ritz(
    h: &SparseHermitian,
    basis: &[DVector<C64>],
    theta: &[f64],
    s: &DMatrix<f64>,
    k: usize,
    hnorm: f64,
    tol: f64,
) -> Result<Option<Spectrum>, NumericsError> {
    let n = h.dim();
    let m = theta.len();
    let mut eigenvectors = DMatrix::from_element(n, k, C64::new(0.0, 0.0));
    for i in 0..k {
        let mut x = DVector::from_element(n, C64::new(0.0, 0.0));
        for (j, b) in basis.iter().take(m).enumerate() {
            x.axpy(C64::new(s[(j, i)], 0.0), b, C64::new(1.0, 0.0));
        }
        let norm = x.norm();
        x /= C64::new(norm, 0.0);
        fix_phase(&mut x);
        eigenvectors.set_column(i, &x);
    }
    let mut residual_norms = Vec::with_capacity(k);
    for i in 0..k {
        let v: DVector<C64> = eigenvectors.column(i).into();
        let r = (h.matvec(&v) - v.scale(theta[i])).norm();
        if r > tol * hnorm {
            return Ok(None);
        }
        residual_norms.push(r);
    }
    let eigenvalues: Vec<f64> = theta[..k].to_vec();
    let degenerate = degeneracy_flag(&eigenvalues, hnorm);
    Ok(Some(Spectrum {
        eigenvalues,
        eigenvectors,
        residual_norms,
        degenerate,
    }))
}

/// Eigendecomposition of the real symmetric tridiagonal matrix defined by
/// `alphas` (diagonal) and `betas` (sub-diagonal), ascending eigenvalues.
fn tridiagonal_eigen(alphas: &[f64], betas: &[f64]) -> (Vec<f64>, DMatrix<f64>) {
    let m = alphas.len();
    let mut t = DMatrix::<f64>::zeros(m, m);
    for i in 0..m {
        t[(i, i)] = alphas[i];
        if i + 1 < m {
            t[(i, i + 1)] = betas[i];
            t[(i + 1, i)] = betas[i];
        }
    }
    let eig = t.symmetric_eigen();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let theta: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = DMatrix::<f64>::zeros(m, m);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    (theta, vectors)
}

/// Unitary factors of a small (d <= 16) complex matrix: `left * diag(singulars)
/// * right^H` reconstructs the input; singular values non-increasing.
#[derive(Debug, Clone)]
pub struct SvdFactors {
    pub left: DMatrix<C64>,
    pub singulars: Vec<f64>,
    pub right: DMatrix<C64>,
}

pub const SVD_SMALL_LIMIT: usize = 16;

/// SVD of a small square complex matrix (not necessarily Hermitian).
pub fn svd_small(b: &DMatrix<C64>) -> Result<SvdFactors, NumericsError> {
    if b.nrows() != b.ncols() {
        return Err(NumericsError::NotSquare {
            rows: b.nrows(),
            cols: b.ncols(),
        });
    }
    let d = b.nrows();
    if d == 0 {
        return Err(NumericsError::EmptyDimension);
    }
    if d > SVD_SMALL_LIMIT {
        return Err(NumericsError::DimensionTooLarge {
            dim: d,
            limit: SVD_SMALL_LIMIT,
        });
    }
    let svd = b.clone().svd(true, true);
    let u = svd.u.expect("requested U");
    let v_t = svd.v_t.expect("requested V^H");
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    let singulars: Vec<f64> = order.iter().map(|&i| svd.singular_values[i]).collect();
    let mut left = DMatrix::from_element(d, d, C64::new(0.0, 0.0));
    let mut right = DMatrix::from_element(d, d, C64::new(0.0, 0.0));
    for (dst, &src) in order.iter().enumerate() {
        left.set_column(dst, &u.column(src));
        right.set_column(dst, &v_t.row(src).adjoint());
    }
    Ok(SvdFactors {
        left,
        singulars,
        right,
    })
}

impl SvdFactors {
    pub fn min_singular(&self) -> f64 {
        self.singulars.last().copied().unwrap_or(0.0)
    }

    /// The unitary polar factor `W * V^H` of the decomposed matrix.
    pub fn polar_unitary(&self) -> DMatrix<C64> {
        &self.left * self.right.adjoint()
    }
}
