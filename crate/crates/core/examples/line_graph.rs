//! Line graph construction and edge distances.
//!
//! ```bash
//! cargo run -p hosoya --example line_graph
//! ```

use hosoya::edgelist::parse_edge_list;

fn main() {
    // A triangle with a pendant vertex ("paw").
    let g = parse_edge_list("a b\nb c\nc a\nc d\n").unwrap();
    let (lg, map) = g.line_graph().unwrap();

    println!("L(G) has {} vertices and {} edges", lg.n(), lg.m());
    for (i, e) in map.iter().enumerate() {
        let (u, v) = e.endpoints();
        println!("  {} = {}{}  (degree {} in L(G))", lg.label(i), g.label(u), g.label(v), lg.degree(i));
    }
    println!("edges of L(G):");
    print!("{}", lg.to_edge_list());

    let ab = 0;
    let dist = lg.bfs_distances(ab);
    for (i, d) in dist.iter().enumerate() {
        let (u, v) = map[i].endpoints();
        println!("d(ab, {}{}) = {d}", g.label(u), g.label(v));
    }
    println!("d_e(G,k) = {:?}", g.edge_distance_distribution().unwrap().counts());
}
