//! Closed-form edge descriptors of regular dendrimers, checked against
//! brute force on the generated trees.
//!
//! ```bash
//! cargo run -p hosoya --release --example dendrimer_closed_forms
//! ```

use hosoya::dendrimer::{
    dendrimer_edge_hosoya_closed, dendrimer_edge_hyper_wiener_closed, dendrimer_edge_wiener_closed,
    generate_dendrimer, DendrimerParams,
};
use hosoya::indices::{edge_hosoya_polynomial, edge_hyper_wiener, edge_wiener};

fn main() {
    println!("{:>2} {:>2} {:>6} {:>12} {:>14}  brute force", "d", "k", "n", "W_e", "WW_e");
    for d in 3..=5 {
        for k in 0..=4 {
            let p = DendrimerParams::new(k, d).unwrap();
            let we = dendrimer_edge_wiener_closed(p).unwrap();
            let wwe = dendrimer_edge_hyper_wiener_closed(p).unwrap();
            let t = generate_dendrimer(p);
            let agrees = dendrimer_edge_hosoya_closed(p).unwrap() == edge_hosoya_polynomial(&t)
                && we == edge_wiener(&t)
                && wwe == edge_hyper_wiener(&t);
            println!(
                "{d:>2} {k:>2} {:>6} {we:>12} {wwe:>14}  {}",
                t.n(),
                if agrees { "agrees" } else { "MISMATCH" }
            );
        }
    }
    let p = DendrimerParams::new(2, 3).unwrap();
    println!("\nH_e(T(2,3), x) = {}", dendrimer_edge_hosoya_closed(p).unwrap());
    print!("T(2,3) edge list:\n{}", generate_dendrimer(p).to_edge_list());
}
