//! The Fiedler vector's sign pattern recovers the natural two-block
//! partition of a bridge graph.

use bridge_spectra::families::dumbbell;
use bridge_spectra::{fiedler_vector, lambda2};

fn main() {
    let g = dumbbell(5, 4).unwrap();
    let v = fiedler_vector(&g).unwrap();
    println!("lambda2 = {:.8}", lambda2(&g).unwrap());
    println!("vertex  fiedler      side");
    for (i, x) in v.values().iter().enumerate() {
        let side = if *x > 1e-9 {
            "first clique side"
        } else if *x < -1e-9 {
            "second clique side"
        } else {
            "cut"
        };
        println!("{:>5}  {:>9.5}   {side}", i + 1, x);
    }
}
