//! Brute-force oracles that share nothing with the library's BFS and
//! line-graph code: Floyd-Warshall on an adjacency matrix, and edge
//! distances taken as `1 + min` endpoint distance.

#![allow(dead_code, clippy::needless_range_loop)]

use hosoya::Graph;

pub const INF: usize = usize::MAX / 4;

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for e in g.edges() {
        let (a, b) = e.endpoints();
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Distance between edges `e` and `f`: 0 if equal, otherwise one more than
/// the closest pair of their endpoints.
pub fn edge_distances(g: &Graph) -> Vec<Vec<usize>> {
    let d = floyd_warshall(g);
    let edges = g.edges();
    let m = edges.len();
    let mut out = vec![vec![0; m]; m];
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let (a, b) = edges[i].endpoints();
            let (x, y) = edges[j].endpoints();
            out[i][j] = 1 + d[a][x].min(d[a][y]).min(d[b][x]).min(d[b][y]);
        }
    }
    out
}

/// Counts by distance with coincident pairs at 0, trimmed.
pub fn distribution(dist: &[Vec<usize>]) -> Vec<u64> {
    let n = dist.len();
    let mut counts = vec![n as u64];
    for i in 0..n {
        for j in i + 1..n {
            let k = dist[i][j];
            if k >= counts.len() {
                counts.resize(k + 1, 0);
            }
            counts[k] += 1;
        }
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

/// `(sum d, sum d(d+1)/2)` over unordered pairs.
pub fn pair_sums(dist: &[Vec<usize>]) -> (u128, u128) {
    let n = dist.len();
    let (mut w, mut ww) = (0u128, 0u128);
    for i in 0..n {
        for j in i + 1..n {
            let d = dist[i][j] as u128;
            w += d;
            ww += d * (d + 1) / 2;
        }
    }
    (w, ww)
}

pub fn cycle(n: usize) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_indexed((0..n).map(|i| i.to_string()).collect(), &pairs).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    Graph::from_indexed((0..n).map(|i| i.to_string()).collect(), &pairs).unwrap()
}

/// Every connected labelled graph on `n` vertices.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    (0u64..1 << slots.len())
        .filter_map(|mask| {
            let pairs: Vec<(usize, usize)> = slots
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            if n == 1 {
                return Some(Graph::single_vertex("0"));
            }
            Graph::from_indexed(labels.clone(), &pairs).ok()
        })
        .collect()
}
