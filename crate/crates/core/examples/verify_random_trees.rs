//! Runs the identity harness over random Prüfer trees.
//!
//! ```bash
//! cargo run -p hosoya --release --example verify_random_trees -- 200 1000 7
//! ```

use std::env;
use std::time::Instant;

use hosoya::tree::verify_identities;

fn arg(i: usize, default: u64) -> u64 {
    env::args().nth(i).map_or(default, |s| s.parse().expect("integer argument"))
}

fn main() {
    let (n_max, trials, seed) = (arg(1, 100) as usize, arg(2, 200) as usize, arg(3, 1));
    let start = Instant::now();
    let report = verify_identities(n_max, trials, seed);
    println!(
        "checked {} trees (n <= {n_max}, seed {seed}) in {:.2?}: {} failures",
        report.trees_checked,
        start.elapsed(),
        report.failures.len()
    );
    for f in &report.failures {
        println!("  trial {} n={} {}: expected {} got {}", f.trial, f.n, f.identity, f.expected, f.actual);
    }
}
