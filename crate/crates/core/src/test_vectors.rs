//! Explicit test vectors for each bridge-graph family and the certified
//! Rayleigh-quotient upper bounds they induce.
//!
//! Each constructor reproduces a known piecewise vector for its family.
//! Some of the star-case vectors do not sum to zero as printed; the
//! certification step mean-centers them and records the applied shift,
//! which keeps the upper bound valid (orthogonality against the all-ones
//! vector is the only requirement).

use crate::error::{Error, Result};
use crate::families::tree_height;
use crate::graph::{build_laplacian, orthogonalize, rayleigh_quotient, Graph, TestVector};

/// A Rayleigh quotient certified as an upper bound on lambda2, together
/// with the orthogonalization shift that was needed to make it valid.
#[derive(Debug, Clone)]
pub struct CertifiedUpperBound {
    pub value: f64,
    pub vector_label: String,
    pub shift_applied: f64,
    pub paper_closed_form: Option<f64>,
}

/// Piecewise vector for D_n^m: m-1 on the first clique, a linear ramp
/// 2n+m-1-2i down the path, 1-m on the second clique. Sums to zero.
pub fn dumbbell_vector(n: usize, m: usize) -> Result<TestVector> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidParameter(format!(
            "dumbbell_vector needs n >= 2 and m >= 2, got n = {n}, m = {m}"
        )));
    }
    let total = 2 * n + m - 2;
    let ramp = |i: usize| (2 * n + m) as f64 - 1.0 - 2.0 * i as f64;
    // overlapping branch formulas must agree at the shared vertices
    assert_eq!(ramp(n), (m - 1) as f64);
    assert_eq!(ramp(n + m - 1), 1.0 - m as f64);
    let values = (1..=total)
        .map(|i| {
            if i < n {
                (m - 1) as f64
            } else if i < n + m - 1 {
                ramp(i)
            } else {
                1.0 - m as f64
            }
        })
        .collect();
    Ok(TestVector::new(values, format!("dumbbell(n={n},m={m})")))
}

/// Block vector for D_n^{2xk}: +1 on the first copy, -1 on the second.
pub fn dumbbell_multi_vector(n: usize) -> Result<TestVector> {
    if n < 1 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    let mut values = vec![1.0; n];
    values.extend(vec![-1.0; n]);
    Ok(TestVector::new(values, format!("block_split(n={n})")))
}

/// Case dispatch for the star-bridge vectors. Cases 1-3 require odd n,
/// cases 4-6 even n; cases within a parity share one vector and differ
/// only in which graph attachments they are meant for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarCase {
    /// n odd, both attachments are centers.
    Case1,
    /// n odd, exactly one attachment is a center.
    Case2,
    /// n odd, both attachments are leaves.
    Case3,
    /// n even, both attachments are centers.
    Case4,
    /// n even, exactly one attachment is a center.
    Case5,
    /// n even, both attachments are leaves.
    Case6,
}

impl StarCase {
    pub fn needs_odd(self) -> bool {
        matches!(self, StarCase::Case1 | StarCase::Case2 | StarCase::Case3)
    }

    pub fn label(self) -> &'static str {
        match self {
            StarCase::Case1 => "star_case1",
            StarCase::Case2 => "star_case2",
            StarCase::Case3 => "star_case3",
            StarCase::Case4 => "star_case4",
            StarCase::Case5 => "star_case5",
            StarCase::Case6 => "star_case6",
        }
    }
}

/// Star-bridge vector, evaluated branch by branch in printed order
/// (first match wins); indices outside every branch get 0. The printed
/// vectors do not always sum to zero; certification repairs that.
pub fn star_vector(n: usize, m: usize, case: StarCase) -> Result<TestVector> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidParameter(format!(
            "star_vector needs n >= 2 and m >= 2, got n = {n}, m = {m}"
        )));
    }
    if case.needs_odd() != (n % 2 == 1) {
        return Err(Error::InvalidParameter(format!(
            "{} requires n {} but n = {n}",
            case.label(),
            if case.needs_odd() { "odd" } else { "even" },
        )));
    }
    let total = 2 * n + m - 2;
    let odd = case.needs_odd();
    // bounds like (n-1)/2 are taken as real inequalities: 2i <= n-1 etc.
    let values = (1..=total)
        .map(|i| {
            if i == 1 || i == n + m - 1 {
                1.0
            } else if (odd && (i == n || i == 2 * n)) || (i > n && i <= n + m - 2) {
                // middle leaves (odd case) and path interior
                0.0
            } else if i >= 2 && 2 * i < n {
                1.0
            } else if 2 * i > n && i <= if odd { n - 1 } else { n } {
                -1.0
            } else if i >= if odd { n + m } else { n + m - 1 } && 2 * i <= 3 * n + 2 * m - 3 {
                1.0
            } else if 2 * i >= 3 * n + 2 * m - 1 && i <= if odd { 2 * n - 1 } else { 2 * n } {
                -1.0
            } else {
                0.0
            }
        })
        .collect();
    Ok(TestVector::new(
        values,
        format!("{}(n={n},m={m})", case.label()),
    ))
}

/// Case dispatch for the tree-bridge vectors, keyed by where the path
/// attaches. `j` and `k` are local BFS labels within their trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeCase {
    /// Path runs root to root.
    Case1,
    /// Path runs from one root to a non-root vertex (same vector as case 1).
    Case2,
    /// Both attachments are non-root vertices.
    Case3 { j: usize, k: usize },
}

/// True when `v` lies in the subtree rooted at `root` (BFS labels),
/// excluding `root` itself.
fn is_descendant(mut v: usize, root: usize) -> bool {
    if v <= root {
        return false;
    }
    while v > root {
        v /= 2;
    }
    v == root
}

/// True when `v` is a strict ancestor of `u` in BFS labels.
fn is_ancestor(v: usize, u: usize) -> bool {
    is_descendant(u, v)
}

/// Tree-bridge vector: zeros on both roots and the path interior, +1 on
/// one designated subtree per side, -1 on the rest. Sums to zero for
/// cases 1 and 2 (each side splits (n-1)/2 against (n-1)/2).
pub fn tree_vector(n: usize, m: usize, case: TreeCase) -> Result<TestVector> {
    tree_height(n)?;
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "tree_vector needs m >= 2, got m = {m}"
        )));
    }
    if let TreeCase::Case3 { j, k } = case {
        if j < 2 || j > n || k < 2 || k > n {
            return Err(Error::InvalidParameter(format!(
                "case 3 attachments must be non-root tree vertices in 2..={n}, got j = {j}, k = {k}"
            )));
        }
    }
    let total = 2 * n + m - 2;
    let offset2 = n + m - 2; // second tree occupies offset2+1 ..= total
    let local = |i: usize| -> Option<(usize, bool)> {
        // (local label, is_second_tree); None for path interior
        if i <= n {
            Some((i, false))
        } else if i > offset2 {
            Some((i - offset2, true))
        } else {
            None
        }
    };
    let label = match case {
        TreeCase::Case1 => format!("tree_case1(n={n},m={m})"),
        TreeCase::Case2 => format!("tree_case2(n={n},m={m})"),
        TreeCase::Case3 { j, k } => format!("tree_case3(n={n},m={m},j={j},k={k})"),
    };
    let values = (1..=total)
        .map(|i| {
            if i == 1 || i == n + m - 1 {
                return 0.0;
            }
            if i > n && i <= n + m - 2 {
                return 0.0;
            }
            let (t, second) = local(i).expect("non-path vertex");
            let plus = match case {
                TreeCase::Case1 | TreeCase::Case2 => t == 2 || is_descendant(t, 2),
                TreeCase::Case3 { j, k } => {
                    let anchor = if second { k } else { j };
                    t == anchor || is_descendant(t, anchor) || is_ancestor(t, anchor)
                }
            };
            if plus {
                1.0
            } else {
                -1.0
            }
        })
        .collect();
    Ok(TestVector::new(values, label))
}

/// T_n^{2xk} vector: zeros at the two roots, +1 on the subtree of each
/// root's first child, -1 on the rest. Sums to zero.
pub fn tree_multi_vector(n: usize) -> Result<TestVector> {
    tree_height(n)?;
    let side = |t: usize| -> f64 {
        if t == 1 {
            0.0
        } else if t == 2 || is_descendant(t, 2) {
            1.0
        } else {
            -1.0
        }
    };
    let mut values: Vec<f64> = (1..=n).map(side).collect();
    values.extend((1..=n).map(side));
    Ok(TestVector::new(values, format!("tree_multi(n={n})")))
}

/// T_{nxl}^2 vector: per copy, 0 at the root, +1 on the first child's
/// subtree, -1 on the rest. Rayleigh quotient on the chain is 2/(n-1).
pub fn tree_chain_vector(n: usize, l: usize) -> Result<TestVector> {
    tree_height(n)?;
    if l < 2 {
        return Err(Error::InvalidParameter(format!(
            "tree_chain_vector needs l >= 2, got l = {l}"
        )));
    }
    let side = |t: usize| -> f64 {
        if t == 1 {
            0.0
        } else if t == 2 || is_descendant(t, 2) {
            1.0
        } else {
            -1.0
        }
    };
    let mut values = Vec::with_capacity(n * l);
    for _ in 0..l {
        values.extend((1..=n).map(side));
    }
    Ok(TestVector::new(values, format!("tree_chain(n={n},l={l})")))
}

/// Split vector for B_{nxl}^2: l-1 on the first copy, -1 on the rest.
/// Zero-sum by construction; only the first bridge edge contributes to
/// the quadratic form, giving quotient l/(n(l-1)) (tight at n = 1, l = 2).
pub fn chain_split_vector(n: usize, l: usize) -> Result<TestVector> {
    if n < 1 || l < 2 {
        return Err(Error::InvalidParameter(format!(
            "chain_split_vector needs n >= 1 and l >= 2, got n = {n}, l = {l}"
        )));
    }
    let mut values = vec![(l - 1) as f64; n];
    values.extend(vec![-1.0; n * (l - 1)]);
    Ok(TestVector::new(values, format!("chain_split(n={n},l={l})")))
}

/// Orthogonalizes x and returns its Rayleigh quotient on g, which is a
/// certified upper bound on lambda2(g) by the min-max characterization.
pub fn certified_upper_bound(g: &Graph, x: &TestVector) -> Result<CertifiedUpperBound> {
    if x.len() != g.num_vertices() {
        return Err(Error::DimensionMismatch {
            expected: g.num_vertices(),
            got: x.len(),
        });
    }
    let (centered, shift) = orthogonalize(x)?;
    let value = rayleigh_quotient(&build_laplacian(g), &centered)?;
    Ok(CertifiedUpperBound {
        value,
        vector_label: x.label().to_string(),
        shift_applied: shift,
        paper_closed_form: None,
    })
}
