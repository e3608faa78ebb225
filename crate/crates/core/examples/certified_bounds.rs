//! Certifies upper bounds on lambda2 through explicit test vectors: the
//! Rayleigh quotient of any vector orthogonal to all-ones bounds lambda2
//! from above.

use bridge_spectra::families::{dumbbell, dumbbell_multi, tree_chain};
use bridge_spectra::test_vectors::{
    chain_split_vector, dumbbell_multi_vector, dumbbell_vector, tree_chain_vector,
};
use bridge_spectra::{certified_upper_bound, lambda2};

fn main() {
    // piecewise ramp vector on the dumbbell
    let g = dumbbell(8, 3).unwrap();
    let x = dumbbell_vector(8, 3).unwrap();
    let ub = certified_upper_bound(&g, &x).unwrap();
    let l2 = lambda2(&g).unwrap();
    println!(
        "dumbbell(8,3):        lambda2 = {l2:.8} <= {:.8}  [{}]",
        ub.value,
        x.label()
    );

    // +-1 block split: Rayleigh quotient is exactly 2k/n
    let g = dumbbell_multi(8, 2, None).unwrap();
    let x = dumbbell_multi_vector(8).unwrap();
    let ub = certified_upper_bound(&g, &x).unwrap();
    let l2 = lambda2(&g).unwrap();
    println!(
        "dumbbell_multi(8,2):  lambda2 = {l2:.8} <= {:.8}  (= 2k/n)",
        ub.value
    );

    // subtree split on a chain of binary trees: exactly 2/(n-1)
    let g = tree_chain(7, 3).unwrap();
    let x = tree_chain_vector(7, 3).unwrap();
    let ub = certified_upper_bound(&g, &x).unwrap();
    let l2 = lambda2(&g).unwrap();
    println!(
        "tree_chain(7,3):      lambda2 = {l2:.8} <= {:.8}  (= 2/(n-1))",
        ub.value
    );

    // the chain bound 2 is tight on P_2, built as a chain of 1-vertex blocks
    let single = bridge_spectra::Graph::new(1, vec![]).unwrap();
    let p2 = bridge_spectra::families::bridge_chain(&single, 2, 1, 1).unwrap();
    let x = chain_split_vector(1, 2).unwrap();
    let ub = certified_upper_bound(&p2, &x).unwrap();
    println!(
        "bridge_chain(P_2):    lambda2 = {:.8} <= {:.8}  (tight)",
        lambda2(&p2).unwrap(),
        ub.value
    );
}
