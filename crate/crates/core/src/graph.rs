//! Immutable simple connected graphs, BFS distances, line graphs and
//! distance distributions.
//!
//! A [`Graph`] is validated once at construction: it is simple (no loops,
//! no parallel edges) and connected. Every other operation in the crate
//! relies on that, so distances are always finite.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Errors raised while building a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}` -- `{1}`")]
    DuplicateEdge(String, String),
    #[error("graph is disconnected: vertex `{unreachable}` is not reachable from `{root}` ({components} components)")]
    Disconnected {
        root: String,
        unreachable: String,
        components: usize,
    },
    #[error("graph has no edges")]
    EmptyEdgeSet,
}

/// An undirected edge, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    lo: usize,
    hi: usize,
}

impl Edge {
    /// Panics if `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "edge endpoints must differ");
        Edge {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.lo, self.hi)
    }

    pub fn contains(self, v: usize) -> bool {
        self.lo == v || self.hi == v
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.contains(other.lo) || self.contains(other.hi)
    }
}

/// Undirected simple connected graph with external vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph from label pairs. Internal indices follow the order in
    /// which labels first appear; edges keep their input order.
    pub fn from_edge_list<S: AsRef<str>>(pairs: &[(S, S)]) -> Result<Self, GraphError> {
        let mut labels = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut intern = |label: &str| -> usize {
            if let Some(&i) = index.get(label) {
                return i;
            }
            let i = labels.len();
            labels.push(label.to_string());
            index.insert(label.to_string(), i);
            i
        };
        let mut raw = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let (a, b) = (a.as_ref(), b.as_ref());
            if a == b {
                return Err(GraphError::SelfLoop(a.to_string()));
            }
            raw.push((intern(a), intern(b)));
        }
        Self::from_indexed(labels, &raw)
    }

    /// The one-vertex graph.
    pub fn single_vertex(label: impl Into<String>) -> Self {
        let label = label.into();
        Graph {
            adjacency: vec![Vec::new()],
            index: HashMap::from([(label.clone(), 0)]),
            labels: vec![label],
            edges: Vec::new(),
        }
    }

    /// Builds a graph on `labels.len()` vertices from index pairs.
    pub fn from_indexed(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let n = labels.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            let prev = index.insert(l.clone(), i);
            assert!(prev.is_none(), "duplicate vertex label `{l}`");
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(pairs.len());
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            assert!(a < n && b < n, "edge endpoint out of range");
            if a == b {
                return Err(GraphError::SelfLoop(labels[a].clone()));
            }
            let e = Edge::new(a, b);
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(labels[a].clone(), labels[b].clone()));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
            edges.push(e);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let g = Graph {
            adjacency,
            labels,
            index,
            edges,
        };
        g.check_connected()?;
        Ok(g)
    }

    fn check_connected(&self) -> Result<(), GraphError> {
        let n = self.n();
        let mut component = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if component[start] != usize::MAX {
                continue;
            }
            component[start] = count;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if component[v] == usize::MAX {
                        component[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        if count > 1 {
            let unreachable = component.iter().position(|&c| c != 0).unwrap();
            return Err(GraphError::Disconnected {
                root: self.labels[0].clone(),
                unreachable: self.labels[unreachable].clone(),
                components: count,
            });
        }
        Ok(())
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Connected graphs are trees exactly when `m = n - 1`.
    pub fn is_tree(&self) -> bool {
        self.m() + 1 == self.n()
    }

    /// Shortest-path distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        self.bfs_into(source, &mut dist, &mut VecDeque::new());
        dist
    }

    fn bfs_into(&self, source: usize, dist: &mut [usize], queue: &mut VecDeque<usize>) {
        dist.fill(usize::MAX);
        dist[source] = 0;
        queue.clear();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
    }

    /// Calls `visit(source, distances)` for every source vertex, reusing one
    /// distance buffer.
    pub fn for_each_bfs(&self, mut visit: impl FnMut(usize, &[usize])) {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::with_capacity(self.n());
        for s in 0..self.n() {
            self.bfs_into(s, &mut dist, &mut queue);
            visit(s, &dist);
        }
    }

    /// Number of unordered vertex pairs at each distance, with the
    /// coincident pairs `{v, v}` counted at distance 0.
    pub fn distance_distribution(&self) -> DistanceDistribution {
        let mut counts = vec![0u64; 1];
        counts[0] = self.n() as u64;
        self.for_each_bfs(|s, dist| {
            for &d in &dist[s + 1..] {
                if d >= counts.len() {
                    counts.resize(d + 1, 0);
                }
                counts[d] += 1;
            }
        });
        DistanceDistribution::from_counts(counts)
    }

    /// The line graph, together with the edge of `self` each of its
    /// vertices stands for. Line-graph vertex `i` is edge `self.edges()[i]`
    /// and is labelled `e{i}`.
    pub fn line_graph(&self) -> Result<(Graph, Vec<Edge>), GraphError> {
        if self.m() == 0 {
            return Err(GraphError::EmptyEdgeSet);
        }
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n()];
        for (i, e) in self.edges.iter().enumerate() {
            incident[e.lo].push(i);
            incident[e.hi].push(i);
        }
        // In a simple graph two distinct edges share at most one endpoint,
        // so each adjacent pair is produced exactly once.
        let mut pairs = Vec::new();
        for inc in &incident {
            for (x, &a) in inc.iter().enumerate() {
                for &b in &inc[x + 1..] {
                    pairs.push((a, b));
                }
            }
        }
        let labels = (0..self.m()).map(|i| format!("e{i}")).collect();
        let lg = Graph::from_indexed(labels, &pairs)?;
        Ok((lg, self.edges.clone()))
    }

    /// Pair-distance distribution of the edges, i.e. of the line graph.
    /// Counts start with `m` coincident pairs at distance 0.
    pub fn edge_distance_distribution(&self) -> Result<DistanceDistribution, GraphError> {
        let (lg, _) = self.line_graph()?;
        Ok(lg.distance_distribution())
    }

    /// Writes the graph in edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        if self.m() == 0 {
            out.push_str(&self.labels[0]);
            out.push('\n');
        }
        for e in &self.edges {
            out.push_str(&self.labels[e.lo]);
            out.push(' ');
            out.push_str(&self.labels[e.hi]);
            out.push('\n');
        }
        out
    }
}

/// Counts of unordered pairs by distance. `counts[0]` is the number of
/// objects (coincident pairs); the last entry is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DistanceDistribution {
    counts: Vec<u64>,
}

impl DistanceDistribution {
    pub fn from_counts(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        DistanceDistribution { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `d(G, k)`; zero beyond the diameter.
    pub fn get(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    /// Largest distance with a nonzero count, `None` when empty.
    pub fn diameter(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }

    /// Number of pairs at positive distance.
    pub fn pair_count(&self) -> u64 {
        self.counts.iter().skip(1).sum()
    }
}

/// Random connected graph: a uniformly random labelled tree on `n` vertices
/// plus up to `extra_edges` further distinct random edges.
pub fn random_connected_graph(n: usize, extra_edges: usize, seed: u64) -> Graph {
    let tree = crate::tree::random_tree(n, seed);
    let mut pairs: Vec<(usize, usize)> = tree
        .graph()
        .edges()
        .iter()
        .map(|e| e.endpoints())
        .collect();
    let max_edges = n * n.saturating_sub(1) / 2;
    let target = (pairs.len() + extra_edges).min(max_edges);
    let mut present: HashSet<Edge> = tree.graph().edges().iter().copied().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    while pairs.len() < target {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b && present.insert(Edge::new(a, b)) {
            pairs.push((a, b));
        }
    }
    Graph::from_indexed(tree.graph().labels().to_vec(), &pairs).expect("supergraph of a tree is connected")
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edge_list(&[("a", "b"), ("b", "c")]).unwrap()
    }

    fn star() -> Graph {
        Graph::from_edge_list(&[("c", "x"), ("c", "y"), ("c", "z")]).unwrap()
    }

    fn t23() -> Graph {
        let pairs = [
            ("0", "1"), ("0", "2"), ("0", "3"),
            ("1", "4"), ("1", "5"), ("2", "6"), ("2", "7"), ("3", "8"), ("3", "9"),
        ];
        Graph::from_edge_list(&pairs).unwrap()
    }

    #[test]
    fn construction() {
        let p = path3();
        assert_eq!((p.n(), p.m()), (3, 2));
        let s = star();
        assert_eq!((s.n(), s.m()), (4, 3));
        assert_eq!(s.vertex("c"), Some(0));
        assert_eq!(s.label(3), "z");
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edge_list(&[("a", "b"), ("a", "b")]),
            Err(GraphError::DuplicateEdge("a".into(), "b".into()))
        );
        assert_eq!(
            Graph::from_edge_list(&[("a", "b"), ("b", "a")]),
            Err(GraphError::DuplicateEdge("b".into(), "a".into()))
        );
        assert_eq!(
            Graph::from_edge_list(&[("a", "a")]),
            Err(GraphError::SelfLoop("a".into()))
        );
        let err = Graph::from_edge_list(&[("a", "b"), ("c", "d")]).unwrap_err();
        assert_eq!(
            err,
            GraphError::Disconnected {
                root: "a".into(),
                unreachable: "c".into(),
                components: 2
            }
        );
        let empty: [(&str, &str); 0] = [];
        assert_eq!(Graph::from_edge_list(&empty), Err(GraphError::Empty));
    }

    #[test]
    fn trees() {
        assert!(star().is_tree());
        assert!(Graph::single_vertex("v").is_tree());
        let c3 = Graph::from_edge_list(&[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        assert!(!c3.is_tree());
    }

    #[test]
    fn bfs() {
        assert_eq!(path3().bfs_distances(0), vec![0, 1, 2]);
        let s = star();
        assert_eq!(s.bfs_distances(0), vec![0, 1, 1, 1]);
        assert_eq!(s.bfs_distances(1), vec![1, 0, 2, 2]);
    }

    #[test]
    fn distributions() {
        assert_eq!(star().distance_distribution().counts(), &[4, 3, 3]);
        assert_eq!(path3().distance_distribution().counts(), &[3, 2, 1]);
        assert_eq!(t23().distance_distribution().counts(), &[10, 9, 12, 12, 12]);
        assert_eq!(Graph::single_vertex("v").distance_distribution().counts(), &[1]);

        assert_eq!(star().edge_distance_distribution().unwrap().counts(), &[3, 3]);
        assert_eq!(path3().edge_distance_distribution().unwrap().counts(), &[2, 1]);
        assert_eq!(t23().edge_distance_distribution().unwrap().counts(), &[9, 12, 12, 12]);
        assert_eq!(
            Graph::single_vertex("v").edge_distance_distribution(),
            Err(GraphError::EmptyEdgeSet)
        );
    }

    #[test]
    fn line_graphs() {
        let (lg, map) = star().line_graph().unwrap();
        assert_eq!((lg.n(), lg.m()), (3, 3));
        assert_eq!(map.len(), 3);
        let (lg, _) = path3().line_graph().unwrap();
        assert_eq!((lg.n(), lg.m()), (2, 1));

        let g = t23();
        let (lg, map) = g.line_graph().unwrap();
        let expected: usize = (0..g.n()).map(|v| g.degree(v) * (g.degree(v).saturating_sub(1)) / 2).sum();
        assert_eq!(expected, 12);
        assert_eq!((lg.n(), lg.m()), (9, 12));
        for i in 0..lg.n() {
            for j in 0..lg.n() {
                if i != j {
                    assert_eq!(lg.has_edge(i, j), map[i].shares_endpoint(map[j]));
                }
            }
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = t23();
        let text = g.to_edge_list();
        let pairs: Vec<(String, String)> = text
            .lines()
            .map(|l| {
                let mut it = l.split_whitespace();
                (it.next().unwrap().to_string(), it.next().unwrap().to_string())
            })
            .collect();
        assert_eq!(Graph::from_edge_list(&pairs).unwrap(), g);
    }

    #[test]
    fn random_graphs_are_connected() {
        for seed in 0..20 {
            let g = random_connected_graph(15, 10, seed);
            assert_eq!(g.n(), 15);
            assert_eq!(g.m(), 24);
        }
        assert_eq!(random_connected_graph(4, 100, 1).m(), 6);
    }
}
