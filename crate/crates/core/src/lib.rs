//! Spectral analysis of bridge graphs: dense blocks joined by sparse
//! connections, their algebraic connectivity, and certified bounds on it.
//!
//! The crate builds the graph families (clique/star/tree blocks joined by
//! paths, cross-edge bundles, or chains), computes Laplacian spectra with
//! a cyclic Jacobi solver, certifies upper bounds on the second-smallest
//! eigenvalue through Rayleigh quotients of explicit test vectors, and
//! certifies lower bounds through positive-semidefinite domination by
//! scaled complete graphs. A registry of closed-form bound claims — some
//! of which exist in two conflicting versions — is audited numerically
//! over parameter grids, producing a CSV report and an errata table.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, and the `bridge-spectra` binary for the command-line
//! surface (gen / eig / bound / loewner / sweep).

pub mod bounds;
pub mod cli;
pub mod eigensolver;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod loewner;
pub mod matrix;
pub mod test_vectors;

pub use eigensolver::{eig_symmetric, fiedler_vector, lambda2, laplacian_spectrum, Spectrum};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{
    build_laplacian, orthogonalize, quadratic_form, rayleigh_quotient, Edge, Graph, TestVector,
};
pub use loewner::{domination_lower_bound, loewner_geq, path_inequality_check, OrderCertificate};
pub use test_vectors::certified_upper_bound;
