//! Hosoya and edge-Hosoya polynomials of a graph read from an edge list.
//!
//! ```bash
//! cargo run -p hosoya --example hosoya_polynomial
//! cargo run -p hosoya --example hosoya_polynomial -- crates/core/data/t23.edges
//! ```

use std::{env, fs};

use hosoya::edgelist::parse_edge_list;
use hosoya::indices::{edge_hosoya_polynomial, hosoya_polynomial};

// Carbon skeleton of 2-methylbutane (isopentane).
const ISOPENTANE: &str = "\
C1 C2
C2 C3
C3 C4
C2 C5
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match env::args().nth(1) {
        Some(path) => fs::read_to_string(path)?,
        None => ISOPENTANE.to_string(),
    };
    let g = parse_edge_list(&text)?;
    println!("n = {}, m = {}", g.n(), g.m());
    println!("d(G,k)   = {:?}", g.distance_distribution().counts());
    println!("H(G,x)   = {}", hosoya_polynomial(&g));
    println!("H_e(G,x) = {}", edge_hosoya_polynomial(&g));
    Ok(())
}
