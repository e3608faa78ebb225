//! Numeric certification of Loewner order relations between graph
//! Laplacians, and the complete-graph domination route to lower bounds
//! on algebraic connectivity.

use crate::eigensolver::{eig_symmetric, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::families::complete;
use crate::graph::{build_laplacian, Graph};

/// Slack for calling the difference matrix positive semidefinite.
pub const PSD_TOL: f64 = 1e-9;

/// Outcome of a PSD check on c*L(lhs) - L(rhs).
#[derive(Debug, Clone)]
pub struct OrderCertificate {
    pub lhs_desc: String,
    pub rhs_desc: String,
    pub scale_c: f64,
    pub min_eig_of_difference: f64,
    pub holds: bool,
}

/// Certifies whether c*L(g1) >= L(g2) in the Loewner order by computing
/// the minimum eigenvalue of the difference. Both graphs must live on
/// the same vertex set.
pub fn loewner_geq(g1: &Graph, g2: &Graph, c: f64) -> Result<OrderCertificate> {
    if g1.num_vertices() != g2.num_vertices() {
        return Err(Error::DimensionMismatch {
            expected: g1.num_vertices(),
            got: g2.num_vertices(),
        });
    }
    let diff = build_laplacian(g1)
        .matrix()
        .scale(c)
        .sub(build_laplacian(g2).matrix())?;
    let spec = eig_symmetric(&diff, DEFAULT_TOL)?;
    let min_eig = spec.eigenvalues()[0];
    let holds = min_eig >= -PSD_TOL * diff.norm().max(1.0);
    Ok(OrderCertificate {
        lhs_desc: format!("{}*G1(N={})", c, g1.num_vertices()),
        rhs_desc: format!("G2(N={})", g2.num_vertices()),
        scale_c: c,
        min_eig_of_difference: min_eig,
        holds,
    })
}

/// The path inequality |P| * P_{a,b} >= G_{a,b}: a path on len+1 vertices
/// from a to b, scaled by its edge count, dominates the single edge (a,b)
/// on the same vertex set.
pub fn path_inequality_check(len: usize) -> Result<OrderCertificate> {
    if len < 1 {
        return Err(Error::InvalidParameter("path length must be >= 1".into()));
    }
    let p = crate::families::path(len + 1)?;
    let single = Graph::new(len + 1, vec![crate::graph::Edge::new(1, len + 1)])?;
    let mut cert = loewner_geq(&p, &single, len as f64)?;
    cert.lhs_desc = format!("{}*P(1..{})", len, len + 1);
    cert.rhs_desc = format!("edge(1,{})", len + 1);
    Ok(cert)
}

/// Certifies K_N <= c*g and returns N/c, a lower bound on lambda2(g).
/// On the zero-sum subspace L(K_N) acts as N*I, so the certificate is
/// exactly the statement lambda2(g) >= N/c. Errors (carrying the
/// violating eigenvalue) when the PSD check fails, emitting no bound.
pub fn domination_lower_bound(g: &Graph, c: f64) -> Result<f64> {
    if c.is_nan() || c <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "domination scale must be positive, got {c}"
        )));
    }
    let n = g.num_vertices();
    let kn = complete(n)?;
    let cert = loewner_geq(g, &kn, c)?;
    if !cert.holds {
        return Err(Error::CertificationFailed {
            min_eig: cert.min_eig_of_difference,
        });
    }
    Ok(n as f64 / c)
}
