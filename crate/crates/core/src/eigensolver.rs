//! Dense symmetric eigendecomposition via cyclic Jacobi rotations.
//!
//! One solver serves the whole crate: full spectra are cheap at the
//! matrix sizes that occur here and the Loewner checks need the
//! complete eigenvalue list anyway.

use crate::error::{Error, Result};
use crate::graph::{build_laplacian, Graph, TestVector};
use crate::matrix::Matrix;

/// Maximum number of cyclic sweeps before giving up.
pub const MAX_SWEEPS: usize = 50;

/// Default convergence threshold on the off-diagonal Frobenius norm,
/// relative to the matrix norm.
pub const DEFAULT_TOL: f64 = 1e-14;

/// Slack for "is this eigenvalue zero" decisions (connectivity etc).
pub const EIG_ZERO_TOL: f64 = 1e-9;

/// Full spectrum of a symmetric matrix, sorted ascending.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    /// Column k is the eigenvector for eigenvalues[k].
    eigenvectors: Matrix,
    residual: f64,
    sweeps: usize,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvector(&self, k: usize) -> Vec<f64> {
        let n = self.eigenvectors.dim();
        (0..n).map(|i| self.eigenvectors.get(i, k)).collect()
    }

    /// max_k ||A v_k - lambda_k v_k|| / ||A||
    pub fn residual(&self) -> f64 {
        self.residual
    }

    pub fn sweeps(&self) -> usize {
        self.sweeps
    }
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let v = a.get(i, j);
                s += v * v;
            }
        }
    }
    s.sqrt()
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.
///
/// Each rotation annihilates one off-diagonal entry; sweeps repeat in
/// row-major order until the off-diagonal Frobenius norm drops below
/// `tol * ||A||`. Errors on asymmetric input and on non-convergence
/// within [`MAX_SWEEPS`].
pub fn eig_symmetric(a: &Matrix, tol: f64) -> Result<Spectrum> {
    a.check_symmetric(1e-12)?;
    let n = a.dim();
    let norm = a.norm();
    let threshold = tol * norm.max(1e-300);

    let mut work = a.clone();
    let mut vecs = Matrix::identity(n);
    let mut sweeps = 0;

    while off_diagonal_norm(&work) > threshold {
        if sweeps >= MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off_diagonal_norm(&work),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = work.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = work.get(p, p);
                let aqq = work.get(q, q);
                // rotation angle per the classical Jacobi recipe
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // A <- JᵀAJ on rows/columns p, q
                for i in 0..n {
                    let aip = work.get(i, p);
                    let aiq = work.get(i, q);
                    work.set(i, p, c * aip - s * aiq);
                    work.set(i, q, s * aip + c * aiq);
                }
                for i in 0..n {
                    let api = work.get(p, i);
                    let aqi = work.get(q, i);
                    work.set(p, i, c * api - s * aqi);
                    work.set(q, i, s * api + c * aqi);
                }
                // keep exact symmetry in the rotated pair
                work.set(p, q, 0.0);
                work.set(q, p, 0.0);

                for i in 0..n {
                    let vip = vecs.get(i, p);
                    let viq = vecs.get(i, q);
                    vecs.set(i, p, c * vip - s * viq);
                    vecs.set(i, q, s * vip + c * viq);
                }
            }
        }
    }

    // sort ascending, carrying eigenvectors along
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| work.get(i, i).partial_cmp(&work.get(j, j)).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| work.get(i, i)).collect();
    let mut eigenvectors = Matrix::zeros(n);
    for (new, &old) in order.iter().enumerate() {
        for i in 0..n {
            eigenvectors.set(i, new, vecs.get(i, old));
        }
    }

    // residual check against the original matrix
    let mut residual = 0.0f64;
    for (k, &lambda) in eigenvalues.iter().enumerate() {
        let v: Vec<f64> = (0..n).map(|i| eigenvectors.get(i, k)).collect();
        let av = a.mul_vec(&v);
        let r: f64 = av
            .iter()
            .zip(&v)
            .map(|(x, y)| {
                let d = x - lambda * y;
                d * d
            })
            .sum::<f64>()
            .sqrt();
        residual = residual.max(if norm > 0.0 { r / norm } else { r });
    }

    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
        residual,
        sweeps,
    })
}

/// Laplacian spectrum of a graph.
pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    eig_symmetric(build_laplacian(g).matrix(), DEFAULT_TOL)
}

/// Second-smallest Laplacian eigenvalue (algebraic connectivity).
/// Positive exactly when the graph is connected.
pub fn lambda2(g: &Graph) -> Result<f64> {
    if g.num_vertices() == 1 {
        // a single vertex has spectrum {0}; treat lambda2 as 0
        return Ok(0.0);
    }
    Ok(laplacian_spectrum(g)?.eigenvalues()[1])
}

/// Unit eigenvector for lambda2, orthogonal to the all-ones vector.
/// Errors on disconnected graphs, where the eigenvector is not pinned
/// down by the contract.
pub fn fiedler_vector(g: &Graph) -> Result<TestVector> {
    if !g.is_connected() {
        return Err(Error::Disconnected(
            "Fiedler vector requested for a disconnected graph".into(),
        ));
    }
    let spec = laplacian_spectrum(g)?;
    Ok(TestVector::new(spec.eigenvector(1), "fiedler"))
}
