//! Runs the bound audit over a small parameter grid and prints the CSV
//! report plus the aggregated errata table. Several registered claims
//! exist in a "statement" and a differing "proof" version; the audit
//! records verdicts for both instead of picking a winner.

use bridge_spectra::bounds::{
    errata_report, errata_table, to_csv, verify, GridInstance, InstanceParams,
};
use bridge_spectra::families::FamilySpec;

fn main() {
    let mut grid = Vec::new();
    for n in [4usize, 8] {
        for k in 1..=n.min(4) {
            grid.push(GridInstance {
                spec: FamilySpec::DumbbellMulti {
                    n,
                    k,
                    pairing: None,
                },
                params: InstanceParams {
                    n: Some(n),
                    k: Some(k),
                    ..Default::default()
                },
            });
        }
    }
    let reports = verify(&grid);
    print!("{}", to_csv(&reports));
    println!();
    print!("{}", errata_table(&errata_report(&reports)));
}
