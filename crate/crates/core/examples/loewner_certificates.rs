//! Positive-semidefinite certificates in the Loewner order: the path
//! inequality, subgraph domination, and the complete-graph route to
//! certified lower bounds on lambda2.

use bridge_spectra::families::{dumbbell, tree_chain};
use bridge_spectra::{domination_lower_bound, lambda2, path_inequality_check};

fn main() {
    // |P| * L(path a..b) >= L(edge ab)
    for len in [1usize, 3, 10] {
        let cert = path_inequality_check(len).unwrap();
        println!(
            "path inequality len={len:>2}: {} (min eig of difference = {:+.3e})",
            if cert.holds { "holds" } else { "fails" },
            cert.min_eig_of_difference
        );
    }

    // K_N <= c * G certifies lambda2(G) >= N/c
    let g = dumbbell(4, 2).unwrap();
    let n = g.num_vertices();
    let c = (n * (n - 1) / 2) as f64 * 3.0; // C(N,2) * (m+1)
    let bound = domination_lower_bound(&g, c).unwrap();
    println!(
        "dumbbell(4,2): certified lambda2 >= {bound:.6}, actual {:.6}",
        lambda2(&g).unwrap()
    );

    let g = tree_chain(7, 3).unwrap();
    let n = g.num_vertices();
    let factor = 3.0 * 6f64.log2() - 1.0; // l*log2(n-1) - 1
    let c = (n * (n - 1) / 2) as f64 * factor;
    let bound = domination_lower_bound(&g, c).unwrap();
    println!(
        "tree_chain(7,3): certified lambda2 >= {bound:.6}, actual {:.6}",
        lambda2(&g).unwrap()
    );

    // a failing certificate carries the violating eigenvalue
    let sparse = bridge_spectra::Graph::new(3, vec![bridge_spectra::Edge::new(1, 2)]).unwrap();
    match domination_lower_bound(&sparse, 1.0) {
        Err(e) => println!("expected failure on a disconnected graph: {e}"),
        Ok(_) => unreachable!(),
    }
}
