//! Builds one instance of each graph family and prints its size and
//! algebraic connectivity.

use bridge_spectra::families::FamilySpec;
use bridge_spectra::lambda2;

fn main() {
    let base = bridge_spectra::families::star(5).unwrap();
    let specs = vec![
        FamilySpec::Dumbbell { n: 8, m: 3 },
        FamilySpec::DumbbellMulti {
            n: 8,
            k: 2,
            pairing: None,
        },
        FamilySpec::GeneralBridge2k {
            base: base.clone(),
            k: 2,
            pairing: None,
        },
        FamilySpec::StarBridge {
            n: 9,
            m: 3,
            attach1: 1,
            attach2: 11,
        },
        FamilySpec::TreeBridge {
            n: 7,
            m: 3,
            attach1: 1,
            attach2: 9,
        },
        FamilySpec::TreeMulti {
            n: 7,
            k: 2,
            pairing: None,
        },
        FamilySpec::TreeChain { n: 7, l: 3 },
        FamilySpec::BridgeChain {
            base,
            l: 3,
            out_v: 1,
            in_v: 1,
        },
    ];

    println!("{:<20}{:>6}{:>7}{:>14}", "family", "|V|", "|E|", "lambda2");
    for spec in specs {
        let g = spec.build().unwrap();
        let l2 = lambda2(&g).unwrap();
        println!(
            "{:<20}{:>6}{:>7}{:>14.8}",
            spec.name(),
            g.num_vertices(),
            g.num_edges(),
            l2
        );
    }
}
