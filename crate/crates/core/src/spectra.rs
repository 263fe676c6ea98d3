//! `A_alpha = alpha D + (1 - alpha) A`, the signless Laplacian, and their
//! dominant eigenpairs.
//!
//! The dominant eigenpair comes from power iteration on `M + sigma I` with
//! `sigma = 1 + max_i M_ii`. For a symmetric nonnegative `M` the smallest
//! eigenvalue is at least `-lambda_max`, so after the shift the top eigenvalue
//! is strictly largest in modulus even for bipartite adjacency matrices. The
//! all-ones start vector is positive and therefore never orthogonal to the
//! Perron vector of an irreducible nonnegative matrix.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Convergence threshold on the change of successive Rayleigh quotients,
/// relative to `1 + |rho|`.
pub const RAYLEIGH_TOL: f64 = 1e-13;
/// Convergence threshold on `||M x - rho x||_2`.
pub const RESIDUAL_TOL: f64 = 1e-10;
pub const MAX_ITERATIONS: usize = 1_000_000;
/// Off-diagonal Frobenius norm at which the Jacobi oracle stops.
pub const JACOBI_TOL: f64 = 1e-12;
pub const ORACLE_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("alpha = {0} is outside [0, 1]")]
    AlphaOutOfRange(f64),
    #[error("alpha = 1 makes A_alpha the degree matrix; the Perron vector is not unique")]
    AlphaIsOne,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix has a negative entry at ({0}, {1})")]
    Negative(usize, usize),
    #[error("power iteration did not converge in {iterations} steps (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("order {order} exceeds the oracle limit {max}")]
    TooLarge { order: usize, max: usize },
}

/// Dense symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymMatrix { dim, data: vec![0.0; dim * dim] }
    }

    /// Checks symmetry exactly.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, SpectralError> {
        let dim = rows.len();
        let mut m = SymMatrix::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "matrix must be square");
            m.data[i * dim..(i + 1) * dim].copy_from_slice(row);
        }
        m.check_symmetric()?;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    fn set_pair(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.dim + j] = value;
        self.data[j * self.dim + i] = value;
    }

    pub fn scaled(&self, factor: f64) -> Self {
        SymMatrix { dim: self.dim, data: self.data.iter().map(|x| x * factor).collect() }
    }

    fn check_symmetric(&self) -> Result<(), SpectralError> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.get(i, j) != self.get(j, i) {
                    return Err(SpectralError::NotSymmetric(i, j));
                }
            }
        }
        Ok(())
    }

    fn mul_vec(&self, x: &[f64], out: &mut [f64]) {
        for (row, o) in self.data.chunks_exact(self.dim).zip(out.iter_mut()) {
            *o = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }
}

pub fn check_alpha(alpha: f64) -> Result<(), SpectralError> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(SpectralError::AlphaOutOfRange(alpha))
    }
}

pub fn build_a_alpha(g: &Graph, alpha: f64) -> Result<SymMatrix, SpectralError> {
    check_alpha(alpha)?;
    let mut m = SymMatrix::zeros(g.order());
    for v in 0..g.order() {
        m.set_pair(v, v, alpha * g.degree(v) as f64);
    }
    for &(u, v) in g.edges() {
        m.set_pair(u, v, 1.0 - alpha);
    }
    Ok(m)
}

/// `D + A`.
pub fn build_signless_laplacian(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.order());
    for v in 0..g.order() {
        m.set_pair(v, v, g.degree(v) as f64);
    }
    for &(u, v) in g.edges() {
        m.set_pair(u, v, 1.0);
    }
    m
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub radius: f64,
    /// Unit eigenvector for `radius`, oriented to have a positive sum.
    pub perron: Vec<f64>,
    pub iterations: usize,
    pub residual: f64,
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    x.iter_mut().for_each(|v| *v /= norm);
}

/// Largest eigenvalue of a symmetric nonnegative matrix with its unit
/// eigenvector. With `connected` set, the vector is checked to be positive,
/// as Perron-Frobenius guarantees for an irreducible matrix.
pub fn dominant_eigpair(m: &SymMatrix, connected: bool) -> Result<SpectralResult, SpectralError> {
    m.check_symmetric()?;
    let n = m.dim();
    for i in 0..n {
        for j in 0..n {
            if m.get(i, j) < 0.0 {
                return Err(SpectralError::Negative(i, j));
            }
        }
    }
    if n == 0 {
        return Ok(SpectralResult { radius: 0.0, perron: vec![], iterations: 0, residual: 0.0 });
    }

    let shift = 1.0 + (0..n).map(|i| m.get(i, i)).fold(f64::MIN, f64::max);
    let mut x = vec![1.0; n];
    normalize(&mut x);
    let mut mx = vec![0.0; n];
    let mut prev_rho = f64::NAN;
    let mut calm_steps = 0;
    let mut residual = f64::INFINITY;

    for iteration in 1..=MAX_ITERATIONS {
        m.mul_vec(&x, &mut mx);
        let rho: f64 = x.iter().zip(&mx).map(|(a, b)| a * b).sum();
        residual = mx.iter().zip(&x).map(|(a, b)| (a - rho * b).powi(2)).sum::<f64>().sqrt();

        if (rho - prev_rho).abs() <= RAYLEIGH_TOL * (1.0 + rho.abs()) {
            calm_steps += 1;
        } else {
            calm_steps = 0;
        }
        if calm_steps >= 2 && residual <= RESIDUAL_TOL {
            if x.iter().sum::<f64>() < 0.0 {
                x.iter_mut().for_each(|v| *v = -*v);
            }
            if connected && x.iter().any(|&v| v <= 0.0) {
                // A vanishing component means the matrix was reducible.
                return Err(SpectralError::Disconnected);
            }
            return Ok(SpectralResult { radius: rho, perron: x, iterations: iteration, residual });
        }
        prev_rho = rho;

        for (xi, mi) in x.iter_mut().zip(&mx) {
            *xi = mi + shift * *xi;
        }
        normalize(&mut x);
    }
    Err(SpectralError::NoConvergence { iterations: MAX_ITERATIONS, residual })
}

/// `rho_alpha(G)` with its Perron vector.
pub fn alpha_spectral_radius(g: &Graph, alpha: f64) -> Result<SpectralResult, SpectralError> {
    check_alpha(alpha)?;
    if alpha == 1.0 {
        return Err(SpectralError::AlphaIsOne);
    }
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    dominant_eigpair(&build_a_alpha(g, alpha)?, true)
}

/// Largest `A_alpha` eigenvalue without requiring connectivity.
pub fn alpha_radius_any(g: &Graph, alpha: f64) -> Result<f64, SpectralError> {
    check_alpha(alpha)?;
    Ok(dominant_eigpair(&build_a_alpha(g, alpha)?, false)?.radius)
}

pub fn signless_laplacian_radius(g: &Graph) -> Result<f64, SpectralError> {
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    Ok(dominant_eigpair(&build_signless_laplacian(g), true)?.radius)
}

/// All eigenvalues, ascending, by cyclic Jacobi rotations. Used as an
/// independent check on [`dominant_eigpair`].
pub fn full_spectrum_oracle(m: &SymMatrix) -> Result<Vec<f64>, SpectralError> {
    let n = m.dim();
    if n > ORACLE_MAX_ORDER {
        return Err(SpectralError::TooLarge { order: n, max: ORACLE_MAX_ORDER });
    }
    m.check_symmetric()?;
    let mut a: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j)).collect()).collect();
    let off_norm = |a: &Vec<Vec<f64>>| {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };

    for _sweep in 0..100 {
        if off_norm(&a) <= JACOBI_TOL {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(eigenvalues)
}
