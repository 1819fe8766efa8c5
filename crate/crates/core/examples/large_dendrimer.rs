//! Closed forms stay exact far beyond 64-bit range, where building the
//! tree is no longer practical.
//!
//! ```bash
//! cargo run -p hosoya --example large_dendrimer -- 40 4
//! ```

use std::env;

use hosoya::dendrimer::{
    dendrimer_edge_hosoya_closed, dendrimer_edge_hyper_wiener_closed, dendrimer_edge_wiener_closed,
    DendrimerParams,
};
use hosoya::indices::{hyper_wiener_from_polynomial, wiener_from_polynomial};

fn main() {
    let k = env::args().nth(1).map_or(30, |s| s.parse().unwrap());
    let d = env::args().nth(2).map_or(3, |s| s.parse().unwrap());
    let p = DendrimerParams::new(k, d).expect("degree must be at least 3");
    let he = dendrimer_edge_hosoya_closed(p).unwrap();
    let we = dendrimer_edge_wiener_closed(p).unwrap();
    let wwe = dendrimer_edge_hyper_wiener_closed(p).unwrap();
    println!("T({k}, {d}): {} vertices", p.vertex_count());
    println!("W_e  = {we}");
    println!("WW_e = {wwe}");
    println!("W_e  from H_e'(1):              {}", wiener_from_polynomial(&he) == we);
    println!("WW_e from H_e'(1) + H_e''(1)/2: {}", hyper_wiener_from_polynomial(&he).unwrap() == wwe);
    println!("top coefficient of H_e: {}", he.coeffs().last().unwrap());
}
