//! For trees, edge descriptors follow from vertex descriptors:
//! `H_e = (H - n)/x`, `W_e = W - C(n,2)`, `WW_e = WW - W`.
//! The same shortcut fails as soon as there is a cycle.
//!
//! ```bash
//! cargo run -p hosoya --example tree_identities
//! ```

use hosoya::edgelist::parse_edge_list;
use hosoya::indices::{edge_hosoya_polynomial, hosoya_polynomial, IndexReport};
use hosoya::tree::{
    edge_hosoya_from_hosoya, edge_hyper_wiener_from_hyper, edge_wiener_from_wiener, random_tree,
    tree_identity_holds, verify_distance_shift,
};

fn main() {
    let t = random_tree(25, 42);
    let h = hosoya_polynomial(&t);
    let shortcut = edge_hosoya_from_hosoya(&h, t.n()).unwrap();
    let line = edge_hosoya_polynomial(&t);
    println!("random tree on {} vertices", t.n());
    println!("  H(T,x)             = {h}");
    println!("  (H(T,x) - n)/x     = {shortcut}");
    println!("  H(L(T),x)          = {line}");
    println!("  polynomials equal: {}", shortcut == line);
    println!("  d(T,k) = d_e(T,k-1): {}", verify_distance_shift(&t));

    let r = IndexReport::compute(&t);
    let we = edge_wiener_from_wiener(&r.wiener, t.n()).unwrap();
    let wwe = edge_hyper_wiener_from_hyper(&r.hyper_wiener, &r.wiener).unwrap();
    println!("  W_e  = {} (from W: {we})", r.edge_wiener);
    println!("  WW_e = {} (from WW and W: {wwe})", r.edge_hyper_wiener);

    let c3 = parse_edge_list("a b\nb c\nc a\n").unwrap();
    let h = hosoya_polynomial(&c3);
    println!("\ntriangle");
    println!("  (H - 3)/x = {}", edge_hosoya_from_hosoya(&h, 3).unwrap());
    println!("  H_e       = {}", edge_hosoya_polynomial(&c3));
    println!("  identity holds: {}", tree_identity_holds(&c3));
}
