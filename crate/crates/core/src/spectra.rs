//! Dense symmetric matrices built from graphs and their real spectra.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weights::WeightVector;

/// Convergence threshold: off-diagonal Frobenius norm relative to `‖M‖_F`.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// Eigenpairs whose residual is measured after convergence.
const RESIDUAL_SAMPLES: usize = 32;

/// Dense real symmetric matrix, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Rejects ragged input and any pair `M[i][j] != M[j][i]`.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    actual: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        let m = SymMatrix { n, data };
        m.check_symmetric()?;
        Ok(m)
    }

    fn check_symmetric(&self) -> Result<()> {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    fn set_pair(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n.max(1)).map(<[f64]>::to_vec).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum()
    }
}

pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.order());
    for (u, v) in g.edges() {
        m.set_pair(u, v, 1.0);
    }
    m
}

/// `diag(w) + sign·A(G)`.
fn weighted(g: &Graph, w: &WeightVector, sign: f64) -> Result<SymMatrix> {
    if w.len() != g.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            actual: w.len(),
        });
    }
    let mut m = SymMatrix::zeros(g.order());
    for (i, &wi) in w.values().iter().enumerate() {
        m.set_pair(i, i, wi);
    }
    for (u, v) in g.edges() {
        m.set_pair(u, v, sign);
    }
    Ok(m)
}

/// `L_ω(G) = diag(ω) − A(G)`.
pub fn weighted_laplacian(g: &Graph, w: &WeightVector) -> Result<SymMatrix> {
    weighted(g, w, -1.0)
}

/// `L†_ω(G) = diag(ω) + A(G)`.
pub fn signless_weighted_laplacian(g: &Graph, w: &WeightVector) -> Result<SymMatrix> {
    weighted(g, w, 1.0)
}

/// Eigenvalues of a symmetric matrix, in descending order, together with
/// convergence diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    max_residual: f64,
    sweeps: usize,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Largest `‖Mv − λv‖∞` over the checked eigenpairs.
    pub fn max_residual(&self) -> f64 {
        self.max_residual
    }

    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }

    /// `Σ |λ_i − shift|`.
    pub fn absolute_deviation_sum(&self, shift: f64) -> f64 {
        self.values.iter().map(|x| (x - shift).abs()).sum()
    }
}

/// Cyclic-by-row Jacobi eigenvalue iteration.
///
/// Each sweep visits every upper-triangular position `(p, q)` in row order
/// and annihilates it with a plane rotation. Iteration stops once the
/// off-diagonal Frobenius norm is at most `JACOBI_TOLERANCE · ‖M‖_F`, or
/// fails after `MAX_SWEEPS` sweeps.
pub fn symmetric_eigenvalues(m: &SymMatrix) -> Result<Spectrum> {
    m.check_symmetric()?;
    let n = m.n;
    let mut a = m.data.clone();
    let mut vt = vec![0.0; n * n];
    for i in 0..n {
        vt[i * n + i] = 1.0;
    }

    let threshold = JACOBI_TOLERANCE * m.frobenius_norm_sq().sqrt();
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut vt, n, p, q);
            }
        }
        sweeps += 1;
    }

    let mut pairs: Vec<(f64, usize)> = (0..n).map(|i| (a[i * n + i], i)).collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));

    let stride = n.div_ceil(RESIDUAL_SAMPLES).max(1);
    let max_residual = pairs
        .iter()
        .step_by(stride)
        .map(|&(lambda, col)| residual(m, &vt, lambda, col))
        .fold(0.0, f64::max);

    Ok(Spectrum {
        values: pairs.into_iter().map(|(x, _)| x).collect(),
        max_residual,
        sweeps,
    })
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Applies `A ← JᵀAJ` for the rotation zeroing `A[p][q]` and accumulates
/// it into the eigenvectors. `vt` holds eigenvectors as rows. Only rows `p`
/// and `q` are read; the updated values are mirrored into the columns so
/// the working copy stays exactly symmetric.
fn rotate(a: &mut [f64], vt: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let (akp, akq) = (a[p * n + k], a[q * n + k]);
        let new_p = c * akp - s * akq;
        let new_q = s * akp + c * akq;
        a[p * n + k] = new_p;
        a[k * n + p] = new_p;
        a[q * n + k] = new_q;
        a[k * n + q] = new_q;
    }
    a[p * n + p] -= t * apq;
    a[q * n + q] += t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;

    for k in 0..n {
        let (vp, vq) = (vt[p * n + k], vt[q * n + k]);
        vt[p * n + k] = c * vp - s * vq;
        vt[q * n + k] = s * vp + c * vq;
    }
}

fn residual(m: &SymMatrix, vt: &[f64], lambda: f64, col: usize) -> f64 {
    let n = m.n;
    let v = &vt[col * n..(col + 1) * n];
    (0..n)
        .map(|i| {
            let mv: f64 = m.data[i * n..(i + 1) * n].iter().zip(v).map(|(x, y)| x * y).sum();
            (mv - lambda * v[i]).abs()
        })
        .fold(0.0, f64::max)
}
