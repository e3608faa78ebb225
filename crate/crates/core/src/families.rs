//! Constructors for the bridge-graph families and their building blocks.
//!
//! Labeling conventions (all 1-based):
//! * `dumbbell(n, m)`: first K_n on 1..=n, path n, n+1, ..., n+m-1,
//!   second K_n on n+m-1..=2n+m-2.
//! * multi forms (`*_multi`, `general_bridge2k`): blocks on 1..=n and
//!   n+1..=2n, cross edges given by the pairing.
//! * trees: BFS labeling, children of local vertex i are 2i and 2i+1.
//! * chains: copy j occupies (j-1)n+1..=jn; the first bridge edge of a
//!   `bridge_chain` is always (n, n+1).

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use serde::{Deserialize, Serialize};

/// Returns the tree height h when n = 2^h - 1, else an error.
pub fn tree_height(n: usize) -> Result<usize> {
    let mut h = 0;
    let mut size = 0;
    while size < n {
        h += 1;
        size = (1usize << h) - 1;
    }
    if size == n && h >= 1 {
        Ok(h)
    } else {
        Err(Error::InvalidParameter(format!(
            "tree size must be 2^h - 1, got n = {n}"
        )))
    }
}

/// Complete graph K_n with C(n,2) edges.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "complete graph needs n >= 1".into(),
        ));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 1..=n {
        for v in (u + 1)..=n {
            edges.push(Edge::new(u, v));
        }
    }
    Graph::new(n, edges)
}

/// Path graph P_m on m vertices (m - 1 edges).
pub fn path(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::InvalidParameter("path graph needs m >= 1".into()));
    }
    let edges = (1..m).map(|i| Edge::new(i, i + 1)).collect();
    Graph::new(m, edges)
}

/// Star S_n: center vertex 1, leaves 2..=n.
pub fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("star graph needs n >= 1".into()));
    }
    let edges = (2..=n).map(|v| Edge::new(1, v)).collect();
    Graph::new(n, edges)
}

/// Full binary tree of height h: 2^h - 1 vertices, BFS labeling.
pub fn full_binary_tree(h: usize) -> Result<Graph> {
    if h < 1 {
        return Err(Error::InvalidParameter("tree height must be >= 1".into()));
    }
    let n = (1usize << h) - 1;
    Graph::new(n, tree_edges(n, 0))
}

/// BFS-labeled binary tree edges with every label shifted by `offset`.
fn tree_edges(n: usize, offset: usize) -> Vec<Edge> {
    let mut edges = Vec::new();
    for i in 1..=n {
        if 2 * i <= n {
            edges.push(Edge::new(offset + i, offset + 2 * i));
        }
        if 2 * i < n {
            edges.push(Edge::new(offset + i, offset + 2 * i + 1));
        }
    }
    edges
}

fn clique_edges(vertices: impl Iterator<Item = usize> + Clone) -> Vec<Edge> {
    let vs: Vec<usize> = vertices.collect();
    let mut edges = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            edges.push(Edge::new(u, v));
        }
    }
    edges
}

/// Interior path edges connecting `attach1` through m-2 fresh vertices
/// n+1..=n+m-2 to `attach2`. For m = 2 this is the single edge
/// (attach1, attach2).
fn bridge_path_edges(n: usize, m: usize, attach1: usize, attach2: usize) -> Vec<Edge> {
    if m == 2 {
        return vec![Edge::new(attach1, attach2)];
    }
    let mut edges = vec![Edge::new(attach1, n + 1)];
    for j in 1..(m - 2) {
        edges.push(Edge::new(n + j, n + j + 1));
    }
    edges.push(Edge::new(n + m - 2, attach2));
    edges
}

/// Dumbbell D_n^m: two K_n joined by a path on m vertices whose endpoints
/// are clique vertices. |V| = 2n + m - 2, |E| = 2 C(n,2) + m - 1.
pub fn dumbbell(n: usize, m: usize) -> Result<Graph> {
    if m == 1 {
        return Err(Error::InvalidParameter(
            "m = 1 is ambiguous; use dumbbell_multi(n, 1) for a single bridge edge".into(),
        ));
    }
    if n < 2 || m < 2 {
        return Err(Error::InvalidParameter(format!(
            "dumbbell needs n >= 2 and m >= 2, got n = {n}, m = {m}"
        )));
    }
    let total = 2 * n + m - 2;
    let mut edges = clique_edges(1..=n);
    for j in 0..(m - 1) {
        edges.push(Edge::new(n + j, n + j + 1));
    }
    edges.extend(clique_edges((n + m - 1)..=total));
    Graph::new(total, edges)
}

fn check_k_range(n: usize, k: usize) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::InvalidParameter(format!(
            "cross-edge count k must satisfy 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    Ok(())
}

/// Default mirror-symmetric pairing (n-i+1, n+i) for i = 1..=k.
/// Requires k <= n.
pub fn default_pairing(n: usize, k: usize) -> Result<Vec<(usize, usize)>> {
    check_k_range(n, k)?;
    Ok((1..=k).map(|i| (n - i + 1, n + i)).collect())
}

fn validate_pairing(n: usize, k: usize, pairing: &[(usize, usize)]) -> Result<()> {
    check_k_range(n, k)?;
    if pairing.len() != k {
        return Err(Error::InvalidParameter(format!(
            "pairing has {} pairs, expected k = {k}",
            pairing.len()
        )));
    }
    let mut left = std::collections::HashSet::new();
    let mut right = std::collections::HashSet::new();
    for &(u, v) in pairing {
        if u < 1 || u > n {
            return Err(Error::InvalidParameter(format!(
                "pairing endpoint {u} not in first block 1..={n}"
            )));
        }
        if v <= n || v > 2 * n {
            return Err(Error::InvalidParameter(format!(
                "pairing endpoint {v} not in second block {}..={}",
                n + 1,
                2 * n
            )));
        }
        if !left.insert(u) || !right.insert(v) {
            return Err(Error::InvalidParameter(format!(
                "repeated pairing endpoint in ({u}, {v})"
            )));
        }
    }
    Ok(())
}

/// D_n^{2xk}: two K_n joined by k distinct cross edges. 2n vertices,
/// 2 C(n,2) + k edges. `pairing = None` uses the default mirror pairing.
pub fn dumbbell_multi(n: usize, k: usize, pairing: Option<&[(usize, usize)]>) -> Result<Graph> {
    let default;
    let pairs = match pairing {
        Some(p) => p,
        None => {
            default = default_pairing(n, k)?;
            &default
        }
    };
    validate_pairing(n, k, pairs)?;
    let mut edges = clique_edges(1..=n);
    edges.extend(clique_edges((n + 1)..=(2 * n)));
    edges.extend(pairs.iter().map(|&(u, v)| Edge::new(u, v)));
    Graph::new(2 * n, edges)
}

/// S_n^m: two stars joined by a path on m vertices. Centers are 1 and
/// n+m-1; attachment vertices may be centers or leaves.
pub fn star_bridge(n: usize, m: usize, attach1: usize, attach2: usize) -> Result<Graph> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidParameter(format!(
            "star_bridge needs n >= 2 and m >= 2, got n = {n}, m = {m}"
        )));
    }
    let total = 2 * n + m - 2;
    let center2 = n + m - 1;
    if attach1 < 1 || attach1 > n {
        return Err(Error::InvalidParameter(format!(
            "attach1 = {attach1} outside first star 1..={n}"
        )));
    }
    if attach2 < center2 || attach2 > total {
        return Err(Error::InvalidParameter(format!(
            "attach2 = {attach2} outside second star {center2}..={total}"
        )));
    }
    let mut edges: Vec<Edge> = (2..=n).map(|v| Edge::new(1, v)).collect();
    edges.extend(((center2 + 1)..=total).map(|v| Edge::new(center2, v)));
    edges.extend(bridge_path_edges(n, m, attach1, attach2));
    Graph::new(total, edges)
}

/// T_n^m: two full binary trees (n = 2^h - 1) joined by a path on m
/// vertices. Second tree is rooted at n+m-1.
pub fn tree_bridge(n: usize, m: usize, attach1: usize, attach2: usize) -> Result<Graph> {
    tree_height(n)?;
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "tree_bridge needs m >= 2, got m = {m}"
        )));
    }
    let total = 2 * n + m - 2;
    let offset2 = n + m - 2;
    if attach1 < 1 || attach1 > n {
        return Err(Error::InvalidParameter(format!(
            "attach1 = {attach1} outside first tree 1..={n}"
        )));
    }
    if attach2 <= offset2 || attach2 > total {
        return Err(Error::InvalidParameter(format!(
            "attach2 = {attach2} outside second tree {}..={total}",
            offset2 + 1
        )));
    }
    let mut edges = tree_edges(n, 0);
    edges.extend(tree_edges(n, offset2));
    edges.extend(bridge_path_edges(n, m, attach1, attach2));
    Graph::new(total, edges)
}

/// T_n^{2xk}: two full binary trees joined by k distinct cross edges.
pub fn tree_multi(n: usize, k: usize, pairing: Option<&[(usize, usize)]>) -> Result<Graph> {
    tree_height(n)?;
    let default;
    let pairs = match pairing {
        Some(p) => p,
        None => {
            default = default_pairing(n, k)?;
            &default
        }
    };
    validate_pairing(n, k, pairs)?;
    let mut edges = tree_edges(n, 0);
    edges.extend(tree_edges(n, n));
    edges.extend(pairs.iter().map(|&(u, v)| Edge::new(u, v)));
    Graph::new(2 * n, edges)
}

/// T_{nxl}^2: l full binary trees chained root to root.
/// nl vertices, l(n-1) + l - 1 edges.
pub fn tree_chain(n: usize, l: usize) -> Result<Graph> {
    tree_height(n)?;
    if l < 2 {
        return Err(Error::InvalidParameter(format!(
            "tree_chain needs l >= 2, got l = {l}"
        )));
    }
    let mut edges = Vec::new();
    for j in 0..l {
        edges.extend(tree_edges(n, j * n));
    }
    for j in 1..l {
        edges.push(Edge::new((j - 1) * n + 1, j * n + 1));
    }
    Graph::new(n * l, edges)
}

/// Permutation of 1..=n sending `from` to label `to`, identity elsewhere
/// (a transposition). `p[v]` is the new label of old vertex v.
fn relabel(p: &mut [usize], from: usize, to: usize) {
    let cur = p[from];
    if cur == to {
        return;
    }
    let holder = (1..p.len()).find(|&v| p[v] == to).unwrap();
    p[holder] = cur;
    p[from] = to;
}

/// B_{nxl}^2: l identical copies of a connected base graph chained by
/// single edges. Copies are relabeled so the first bridge edge is
/// exactly (n, n+1): copy j's `out_v` attaches to copy j+1's `in_v`.
pub fn bridge_chain(base: &Graph, l: usize, out_v: usize, in_v: usize) -> Result<Graph> {
    let n = base.num_vertices();
    if l < 2 {
        return Err(Error::InvalidParameter(format!(
            "bridge_chain needs l >= 2, got l = {l}"
        )));
    }
    if out_v < 1 || out_v > n || in_v < 1 || in_v > n {
        return Err(Error::InvalidParameter(format!(
            "attachment vertices must be in 1..={n}, got out = {out_v}, in = {in_v}"
        )));
    }
    if !base.is_connected() {
        return Err(Error::Disconnected(
            "bridge_chain requires a connected base graph".into(),
        ));
    }
    let mut edges = Vec::new();
    let mut perms: Vec<Vec<usize>> = Vec::with_capacity(l);
    for j in 0..l {
        let mut p: Vec<usize> = (0..=n).collect();
        if j > 0 {
            relabel(&mut p, in_v, 1);
        }
        if j < l - 1 && (j == 0 || out_v != in_v) {
            relabel(&mut p, out_v, n);
        }
        let offset = j * n;
        for e in base.edges() {
            edges.push(Edge::weighted(offset + p[e.u], offset + p[e.v], e.w));
        }
        perms.push(p);
    }
    for j in 0..(l - 1) {
        edges.push(Edge::new(
            j * n + perms[j][out_v],
            (j + 1) * n + perms[j + 1][in_v],
        ));
    }
    Graph::new(n * l, edges)
}

/// B_n^{2xk}: two identical copies of a connected base graph joined by
/// k distinct cross edges. Coincides with D_n^{2xk} when the base is K_n.
pub fn general_bridge2k(
    base: &Graph,
    k: usize,
    pairing: Option<&[(usize, usize)]>,
) -> Result<Graph> {
    let n = base.num_vertices();
    if !base.is_connected() {
        return Err(Error::Disconnected(
            "general_bridge2k requires a connected base graph".into(),
        ));
    }
    let default;
    let pairs = match pairing {
        Some(p) => p,
        None => {
            default = default_pairing(n, k)?;
            &default
        }
    };
    validate_pairing(n, k, pairs)?;
    let mut edges: Vec<Edge> = base.edges().to_vec();
    for e in base.edges() {
        edges.push(Edge::weighted(n + e.u, n + e.v, e.w));
    }
    edges.extend(pairs.iter().map(|&(u, v)| Edge::new(u, v)));
    Graph::new(2 * n, edges)
}

/// Family tag plus parameters; the CLI- and sweep-facing description of
/// one graph instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete {
        n: usize,
    },
    Path {
        m: usize,
    },
    Star {
        n: usize,
    },
    FullBinaryTree {
        h: usize,
    },
    Dumbbell {
        n: usize,
        m: usize,
    },
    DumbbellMulti {
        n: usize,
        k: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        pairing: Option<Vec<(usize, usize)>>,
    },
    StarBridge {
        n: usize,
        m: usize,
        attach1: usize,
        attach2: usize,
    },
    TreeBridge {
        n: usize,
        m: usize,
        attach1: usize,
        attach2: usize,
    },
    TreeMulti {
        n: usize,
        k: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        pairing: Option<Vec<(usize, usize)>>,
    },
    TreeChain {
        n: usize,
        l: usize,
    },
    BridgeChain {
        base: Graph,
        l: usize,
        out_v: usize,
        in_v: usize,
    },
    GeneralBridge2k {
        base: Graph,
        k: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        pairing: Option<Vec<(usize, usize)>>,
    },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Complete { n } => complete(*n),
            FamilySpec::Path { m } => path(*m),
            FamilySpec::Star { n } => star(*n),
            FamilySpec::FullBinaryTree { h } => full_binary_tree(*h),
            FamilySpec::Dumbbell { n, m } => dumbbell(*n, *m),
            FamilySpec::DumbbellMulti { n, k, pairing } => {
                dumbbell_multi(*n, *k, pairing.as_deref())
            }
            FamilySpec::StarBridge {
                n,
                m,
                attach1,
                attach2,
            } => star_bridge(*n, *m, *attach1, *attach2),
            FamilySpec::TreeBridge {
                n,
                m,
                attach1,
                attach2,
            } => tree_bridge(*n, *m, *attach1, *attach2),
            FamilySpec::TreeMulti { n, k, pairing } => tree_multi(*n, *k, pairing.as_deref()),
            FamilySpec::TreeChain { n, l } => tree_chain(*n, *l),
            FamilySpec::BridgeChain {
                base,
                l,
                out_v,
                in_v,
            } => bridge_chain(base, *l, *out_v, *in_v),
            FamilySpec::GeneralBridge2k { base, k, pairing } => {
                general_bridge2k(base, *k, pairing.as_deref())
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Star { .. } => "star",
            FamilySpec::FullBinaryTree { .. } => "full_binary_tree",
            FamilySpec::Dumbbell { .. } => "dumbbell",
            FamilySpec::DumbbellMulti { .. } => "dumbbell_multi",
            FamilySpec::StarBridge { .. } => "star_bridge",
            FamilySpec::TreeBridge { .. } => "tree_bridge",
            FamilySpec::TreeMulti { .. } => "tree_multi",
            FamilySpec::TreeChain { .. } => "tree_chain",
            FamilySpec::BridgeChain { .. } => "bridge_chain",
            FamilySpec::GeneralBridge2k { .. } => "general_bridge2k",
        }
    }
}
