//! Core graph representation and Laplacian quadratic forms.
//!
//! Vertices are labeled 1..=N externally (matching the usual convention for
//! these graph families); indices are converted to 0-based internally.
//!
//! The Laplacian is built as L = D - M so that the quadratic form
//! xᵀLx = Σ w(a,b) (x(a) - x(b))² is nonnegative.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// Absolute tolerance for zero tests (row sums, orthogonality).
pub const ZERO_TOL: f64 = 1e-12;

/// A weighted undirected edge between 1-based vertex ids.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        Edge { u, v, w: 1.0 }
    }

    pub fn weighted(u: usize, v: usize, w: f64) -> Self {
        Edge { u, v, w }
    }
}

/// Undirected weighted graph on vertices 1..=N.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Validates and builds a graph. Rejects out-of-range ids, self loops,
    /// duplicate undirected edges, and nonpositive weights.
    pub fn new(num_vertices: usize, edges: Vec<Edge>) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::InvalidGraph(
                "graph must have at least one vertex".into(),
            ));
        }
        let mut seen = HashSet::new();
        for e in &edges {
            if e.u < 1 || e.u > num_vertices || e.v < 1 || e.v > num_vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) out of range 1..={}",
                    e.u, e.v, num_vertices
                )));
            }
            if e.u == e.v {
                return Err(Error::InvalidGraph(format!("self loop at vertex {}", e.u)));
            }
            if e.w.is_nan() || e.w <= 0.0 {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) has nonpositive weight {}",
                    e.u, e.v, e.w
                )));
            }
            let key = (e.u.min(e.v), e.u.max(e.v));
            if !seen.insert(key) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({}, {})",
                    key.0, key.1
                )));
            }
        }
        Ok(Graph {
            num_vertices,
            edges,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Weighted degree of a vertex (1-based).
    pub fn degree(&self, v: usize) -> f64 {
        self.edges
            .iter()
            .filter(|e| e.u == v || e.v == v)
            .map(|e| e.w)
            .sum()
    }

    /// Sorted degree sequence, for isomorphism sanity checks.
    pub fn degree_sequence(&self) -> Vec<f64> {
        let mut d: Vec<f64> = (1..=self.num_vertices).map(|v| self.degree(v)).collect();
        d.sort_by(|a, b| a.partial_cmp(b).unwrap());
        d
    }

    /// Connectivity via breadth-first traversal, independent of the spectrum.
    pub fn is_connected(&self) -> bool {
        if self.num_vertices == 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.num_vertices + 1];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        let mut visited = vec![false; self.num_vertices + 1];
        let mut queue = std::collections::VecDeque::from([1usize]);
        visited[1] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if !visited[u] {
                    visited[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.num_vertices
    }

    /// Returns a copy without the given undirected edge, if present.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let edges = self
            .edges
            .iter()
            .filter(|e| !((e.u == u && e.v == v) || (e.u == v && e.v == u)))
            .copied()
            .collect();
        Graph {
            num_vertices: self.num_vertices,
            edges,
        }
    }

    /// Same edges on a larger vertex set (extra vertices isolated).
    /// Used to compare graphs of different sizes in the Loewner order.
    pub fn padded(&self, num_vertices: usize) -> Result<Graph> {
        if num_vertices < self.num_vertices {
            return Err(Error::InvalidParameter(format!(
                "cannot pad {} vertices down to {}",
                self.num_vertices, num_vertices
            )));
        }
        Ok(Graph {
            num_vertices,
            edges: self.edges.clone(),
        })
    }
}

/// Dense symmetric Laplacian with zero row sums.
#[derive(Debug, Clone)]
pub struct LaplacianMatrix {
    matrix: Matrix,
}

impl LaplacianMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    /// Largest absolute row sum; zero (within tolerance) by construction.
    pub fn max_row_sum(&self) -> f64 {
        let n = self.matrix.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.matrix.get(i, j)).sum::<f64>().abs())
            .fold(0.0, f64::max)
    }
}

/// Adjacency matrix: M(a,b) = w(a,b) on edges, 0 elsewhere.
pub fn build_adjacency(g: &Graph) -> Matrix {
    let n = g.num_vertices();
    let mut m = Matrix::zeros(n);
    for e in g.edges() {
        m.set(e.u - 1, e.v - 1, e.w);
        m.set(e.v - 1, e.u - 1, e.w);
    }
    m
}

/// Degree matrix: D(a,a) = Σ w(a,b) over incident edges.
pub fn build_degree(g: &Graph) -> Matrix {
    let n = g.num_vertices();
    let mut d = Matrix::zeros(n);
    for e in g.edges() {
        d.add_to(e.u - 1, e.u - 1, e.w);
        d.add_to(e.v - 1, e.v - 1, e.w);
    }
    d
}

/// Laplacian L = D - M. Positive semidefinite with L·1 = 0.
pub fn build_laplacian(g: &Graph) -> LaplacianMatrix {
    let n = g.num_vertices();
    let mut l = Matrix::zeros(n);
    for e in g.edges() {
        l.set(e.u - 1, e.v - 1, -e.w);
        l.set(e.v - 1, e.u - 1, -e.w);
        l.add_to(e.u - 1, e.u - 1, e.w);
        l.add_to(e.v - 1, e.v - 1, e.w);
    }
    LaplacianMatrix { matrix: l }
}

/// Real vector over the vertices, used to certify eigenvalue upper bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct TestVector {
    values: Vec<f64>,
    label: String,
}

impl TestVector {
    pub fn new(values: Vec<f64>, label: impl Into<String>) -> Self {
        TestVector {
            values,
            label: label.into(),
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == 0.0)
    }

    pub fn is_constant(&self) -> bool {
        self.values
            .windows(2)
            .all(|w| (w[0] - w[1]).abs() <= ZERO_TOL)
    }

    /// |Σx| ≤ ZERO_TOL · N · max|x|, the orthogonality contract against 1.
    pub fn is_zero_sum(&self) -> bool {
        let max = self.values.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        self.sum().abs() <= ZERO_TOL * self.len() as f64 * max.max(1.0)
    }
}

/// xᵀLx via the matrix product, cross-checked against the edge sum
/// Σ w(a,b)(x(a) - x(b))² in tests.
pub fn quadratic_form(l: &LaplacianMatrix, x: &TestVector) -> Result<f64> {
    if l.dim() != x.len() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            got: x.len(),
        });
    }
    Ok(l.matrix.quad(x.values()))
}

/// Σ w(a,b)(x(a) - x(b))², the edge-sum route to the same quantity.
pub fn quadratic_form_edge_sum(g: &Graph, x: &TestVector) -> Result<f64> {
    if g.num_vertices() != x.len() {
        return Err(Error::DimensionMismatch {
            expected: g.num_vertices(),
            got: x.len(),
        });
    }
    let v = x.values();
    Ok(g.edges()
        .iter()
        .map(|e| {
            let d = v[e.u - 1] - v[e.v - 1];
            e.w * d * d
        })
        .sum())
}

/// xᵀLx / xᵀx. Errors on the zero vector.
pub fn rayleigh_quotient(l: &LaplacianMatrix, x: &TestVector) -> Result<f64> {
    if x.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(quadratic_form(l, x)? / x.norm_sq())
}

/// Mean-centers x so (x, 1) = 0, returning the centered vector and the
/// shift magnitude that was removed. Errors if the input is constant
/// (centering would collapse it to zero).
pub fn orthogonalize(x: &TestVector) -> Result<(TestVector, f64)> {
    if x.is_zero() || x.is_constant() {
        return Err(Error::ConstantVector);
    }
    let mean = x.sum() / x.len() as f64;
    if mean.abs() <= ZERO_TOL {
        return Ok((x.clone(), 0.0));
    }
    let values = x.values().iter().map(|v| v - mean).collect();
    Ok((TestVector::new(values, x.label().to_string()), mean.abs()))
}
