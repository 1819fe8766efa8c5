//! Wiener-type indices of a few hydrogen-suppressed molecular graphs, each
//! computed by direct pair sums and re-derived from the Hosoya polynomials.
//!
//! ```bash
//! cargo run -p hosoya --example index_report
//! ```

use hosoya::edgelist::parse_edge_list;
use hosoya::IndexReport;

const MOLECULES: &[(&str, &str)] = &[
    ("n-hexane", "1 2\n2 3\n3 4\n4 5\n5 6\n"),
    ("2,2-dimethylbutane", "1 2\n2 3\n2 4\n2 5\n5 6\n"),
    ("cyclohexane", "1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n"),
    ("methylcyclopentane", "1 2\n2 3\n3 4\n4 5\n5 1\n1 6\n"),
];

fn main() {
    println!(
        "{:<20} {:>4} {:>6} {:>4} {:>6}  routes",
        "molecule", "W", "W_e", "WW", "WW_e"
    );
    for (name, edges) in MOLECULES {
        let g = parse_edge_list(edges).expect("valid edge list");
        let r = IndexReport::compute(&g);
        let routes = if r.verify().is_empty() { "agree" } else { "DISAGREE" };
        println!(
            "{:<20} {:>4} {:>6} {:>4} {:>6}  {}",
            name, r.wiener, r.edge_wiener, r.hyper_wiener, r.edge_hyper_wiener, routes
        );
    }
    let hexane = parse_edge_list(MOLECULES[0].1).unwrap();
    println!("\nn-hexane as JSON:\n{}", serde_json::to_string_pretty(&IndexReport::compute(&hexane)).unwrap());
}
