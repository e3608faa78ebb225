//! Property tests: invariants that must hold for arbitrary graphs and
//! vectors, not just the named families.

use bridge_spectra::eigensolver::{lambda2, laplacian_spectrum};
use bridge_spectra::graph::{
    build_laplacian, orthogonalize, quadratic_form, quadratic_form_edge_sum, rayleigh_quotient,
    Edge, Graph, TestVector,
};
use bridge_spectra::loewner::loewner_geq;
use proptest::prelude::*;

/// Random connected graph: a random spanning-tree skeleton plus random
/// extra edges, up to `max_n` vertices.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let tree = proptest::collection::vec(0..1_000_000usize, n - 1);
            let extras = proptest::collection::vec((1..=n, 1..=n), 0..2 * n);
            (Just(n), tree, extras)
        })
        .prop_map(|(n, tree, extras)| {
            let mut edges = Vec::new();
            let mut seen = std::collections::HashSet::new();
            for (i, r) in tree.iter().enumerate() {
                let v = i + 2;
                let u = 1 + r % (v - 1);
                edges.push(Edge::new(u, v));
                seen.insert((u.min(v), u.max(v)));
            }
            for (u, v) in extras {
                if u != v && seen.insert((u.min(v), u.max(v))) {
                    edges.push(Edge::new(u, v));
                }
            }
            Graph::new(n, edges).unwrap()
        })
}

fn vector_for(n: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(-100.0..100.0f64, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn laplacian_is_symmetric_psd_with_zero_row_sums(g in connected_graph(30)) {
        let l = build_laplacian(&g);
        let m = l.matrix();
        let n = m.dim();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(m.get(i, j), m.get(j, i));
            }
        }
        prop_assert!(l.max_row_sum() <= 1e-12 * m.norm().max(1.0));
        let spec = laplacian_spectrum(&g).unwrap();
        prop_assert!(spec.eigenvalues()[0] >= -1e-9 * m.norm().max(1.0));
        prop_assert!(spec.residual() <= 1e-8);
    }

    #[test]
    fn quadratic_form_agrees_with_edge_sum(
        g in connected_graph(20),
        seed in any::<u64>(),
    ) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let values: Vec<f64> = (0..g.num_vertices()).map(|_| rng.gen_range(-50.0..50.0)).collect();
        let x = TestVector::new(values, "random");
        let by_matrix = quadratic_form(&build_laplacian(&g), &x).unwrap();
        let by_edges = quadratic_form_edge_sum(&g, &x).unwrap();
        let scale = by_edges.abs().max(1.0);
        prop_assert!((by_matrix - by_edges).abs() <= 1e-10 * scale,
            "matrix {} vs edge sum {}", by_matrix, by_edges);
    }

    #[test]
    fn any_centered_vector_bounds_lambda2_from_above(
        g in connected_graph(20),
        raw in vector_for(20),
    ) {
        let n = g.num_vertices();
        let x = TestVector::new(raw[..n].to_vec(), "raw");
        if let Ok((centered, _)) = orthogonalize(&x) {
            let rq = rayleigh_quotient(&build_laplacian(&g), &centered).unwrap();
            let l2 = lambda2(&g).unwrap();
            prop_assert!(l2 <= rq + 1e-9, "lambda2 {} above Rayleigh quotient {}", l2, rq);
        }
    }

    #[test]
    fn adding_an_edge_never_decreases_lambda2(
        g in connected_graph(15),
        pick in (0..1_000_000usize, 0..1_000_000usize),
    ) {
        let n = g.num_vertices();
        let u = 1 + pick.0 % n;
        let v = 1 + pick.1 % n;
        prop_assume!(u != v);
        prop_assume!(!g.edges().iter().any(|e|
            (e.u == u && e.v == v) || (e.u == v && e.v == u)));
        let mut edges = g.edges().to_vec();
        edges.push(Edge::new(u, v));
        let bigger = Graph::new(n, edges).unwrap();
        let before = lambda2(&g).unwrap();
        let after = lambda2(&bigger).unwrap();
        prop_assert!(after >= before - 1e-9, "lambda2 dropped {} -> {}", before, after);
        // the supergraph also dominates in the Loewner order at c = 1
        prop_assert!(loewner_geq(&bigger, &g, 1.0).unwrap().holds);
    }

    #[test]
    fn loewner_transitivity_spot_check(g in connected_graph(12), drop2 in proptest::collection::vec(0..1_000_000usize, 2)) {
        // build a chain g ⪰ mid ⪰ small by removing edges one at a time
        prop_assume!(g.num_edges() >= 3);
        let pick = |g: &Graph, r: usize| {
            let e = g.edges()[r % g.num_edges()];
            g.without_edge(e.u, e.v)
        };
        let mid = pick(&g, drop2[0]);
        let small = pick(&mid, drop2[1]);
        prop_assert!(loewner_geq(&g, &mid, 1.0).unwrap().holds);
        prop_assert!(loewner_geq(&mid, &small, 1.0).unwrap().holds);
        prop_assert!(loewner_geq(&g, &small, 1.0).unwrap().holds);
    }
}
