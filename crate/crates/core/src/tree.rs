//! Trees and the identities tying their vertex and edge descriptors together.
//!
//! For a tree `T` on `n` vertices the vertex pairs at distance `k >= 1` are
//! in bijection with the edge pairs at distance `k - 1`: send `{x, y}` to
//! the first and last edge of the `x`-`y` path. Counted, that gives
//!
//! ```text
//! H_e(T, x) = (H(T, x) - n) / x
//! W_e(T)    = W(T) - C(n, 2)
//! WW_e(T)   = WW(T) - W(T)
//! ```
//!
//! so edge-Hosoya data of a tree follows from its Hosoya polynomial without
//! building the line graph. The identities are tree-only; the triangle
//! already breaks the first one.

use std::ops::Deref;

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{DistanceDistribution, Graph};
use crate::indices::{hyper_wiener_from_polynomial, pair_sums, wiener_from_polynomial, PairSums};
use crate::polynomial::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("not a tree: {n} vertices and {m} edges")]
    NotATree { n: usize, m: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("constant term {found} does not match vertex count {expected}")]
    ConstantTermMismatch { expected: usize, found: BigInt },
    #[error("identity produced a negative value ({0}); inputs are inconsistent")]
    NegativeResult(BigInt),
}

/// A connected graph with `m = n - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree(Graph);

impl Tree {
    pub fn new(graph: Graph) -> Result<Self, TreeError> {
        if graph.is_tree() {
            Ok(Tree(graph))
        } else {
            Err(TreeError::NotATree {
                n: graph.n(),
                m: graph.m(),
            })
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }
}

impl Deref for Tree {
    type Target = Graph;
    fn deref(&self) -> &Graph {
        &self.0
    }
}

impl TryFrom<Graph> for Tree {
    type Error = TreeError;
    fn try_from(g: Graph) -> Result<Self, TreeError> {
        Tree::new(g)
    }
}

fn choose2(n: usize) -> BigInt {
    let n = BigInt::from(n);
    (&n * (&n - 1u32)) / 2u32
}

/// `(H(T, x) - n) / x`. The constant term of `h` must be exactly `n`.
pub fn edge_hosoya_from_hosoya(h: &Polynomial, n: usize) -> Result<Polynomial, IdentityError> {
    let constant = h.coeff(0);
    if constant != BigInt::from(n) {
        return Err(IdentityError::ConstantTermMismatch {
            expected: n,
            found: constant,
        });
    }
    Ok(h
        .add_constant(-BigInt::from(n))
        .shift_down()
        .expect("constant term removed"))
}

/// `W(T) - C(n, 2)`.
pub fn edge_wiener_from_wiener(w: &BigInt, n: usize) -> Result<BigInt, IdentityError> {
    let r = w - choose2(n);
    if r.is_negative() {
        return Err(IdentityError::NegativeResult(r));
    }
    Ok(r)
}

/// `WW(T) - W(T)`.
pub fn edge_hyper_wiener_from_hyper(ww: &BigInt, w: &BigInt) -> Result<BigInt, IdentityError> {
    let r = ww - w;
    if r.is_negative() {
        return Err(IdentityError::NegativeResult(r));
    }
    Ok(r)
}

/// Checks `d(T,0) = n` and `d(T,k) = d_e(T,k-1)` for `k >= 1`, with the
/// vertex counts from BFS on the tree and the edge counts from BFS on its
/// line graph.
pub fn verify_distance_shift(t: &Tree) -> bool {
    let vertex = t.distance_distribution();
    let edge = t.edge_distance_distribution().unwrap_or_default();
    distance_shift_holds(t.n(), &vertex, &edge)
}

fn distance_shift_holds(n: usize, vertex: &DistanceDistribution, edge: &DistanceDistribution) -> bool {
    if vertex.get(0) != n as u64 {
        return false;
    }
    let len = vertex.counts().len().max(edge.counts().len() + 1);
    (1..len).all(|k| vertex.get(k) == edge.get(k - 1))
}

/// Whether `(H(G) - n) / x = H_e(G)` holds for an arbitrary graph. True on
/// every tree; used as the negative control on graphs with cycles.
pub fn tree_identity_holds(g: &Graph) -> bool {
    let h = crate::indices::hosoya_polynomial(g);
    let he = crate::indices::edge_hosoya_polynomial(g);
    edge_hosoya_from_hosoya(&h, g.n()).is_ok_and(|p| p == he)
}

/// Uniform random labelled tree on `n` vertices, labelled `"0"..`.
///
/// The generator is ChaCha8 seeded with `seed_from_u64(seed)`; the `n - 2`
/// Prüfer entries are drawn in order with `gen_range(0..n)` and decoded in
/// linear time. Identical `(n, seed)` always gives the identical tree.
pub fn random_tree(n: usize, seed: u64) -> Tree {
    assert!(n >= 1, "a tree needs at least one vertex");
    if n == 1 {
        return Tree(Graph::single_vertex("0"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let pairs = decode_prufer(n, &code);
    let labels = (0..n).map(|i| i.to_string()).collect();
    Tree(Graph::from_indexed(labels, &pairs).expect("Prüfer decoding yields a tree"))
}

/// Linear-time Prüfer decoding. `code` has length `n - 2`, entries `< n`.
pub fn decode_prufer(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    assert!(n >= 2 && code.len() == n - 2);
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    let mut pairs = Vec::with_capacity(n - 1);
    for &v in code {
        pairs.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    pairs.push((leaf, n - 1));
    pairs
}

/// One identity that did not hold on one random tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub identity: &'static str,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub trees_checked: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Per-trial tree size and tree seed, drawn sequentially from a ChaCha8
/// stream seeded with `seed`: `n = gen_range(1..=n_max)`, then `next_u64()`.
pub fn trial_plan(n_max: usize, trials: usize, seed: u64) -> Vec<(usize, u64)> {
    assert!(n_max >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let n = rng.gen_range(1..=n_max);
            (n, rng.next_u64())
        })
        .collect()
}

/// Checks every tree identity on `trials` random trees with sizes in
/// `1..=n_max`. Trials run in parallel; failures are ordered by trial.
pub fn verify_identities(n_max: usize, trials: usize, seed: u64) -> VerificationReport {
    let plan = trial_plan(n_max, trials, seed);
    let failures = plan
        .par_iter()
        .enumerate()
        .map(|(trial, &(n, tree_seed))| check_tree(trial, tree_seed, &random_tree(n, tree_seed)))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    VerificationReport {
        trees_checked: plan.len(),
        failures,
    }
}

/// Runs every identity on one tree.
pub fn check_tree(trial: usize, seed: u64, t: &Tree) -> Vec<Failure> {
    let n = t.n();
    let mut failures = Vec::new();
    let mut record = |identity, expected: String, actual: String| {
        if expected != actual {
            failures.push(Failure {
                trial,
                seed,
                n,
                identity,
                expected,
                actual,
            });
        }
    };

    let vertex: PairSums = pair_sums(t);
    let edge: PairSums = match t.line_graph() {
        Ok((lg, _)) => pair_sums(&lg),
        Err(_) => PairSums {
            distribution: DistanceDistribution::default(),
            distance_sum: BigInt::from(0),
            hyper_sum: BigInt::from(0),
        },
    };
    let h = Polynomial::from_distribution(&vertex.distribution);
    let he = Polynomial::from_distribution(&edge.distribution);
    let nb = BigInt::from(n);

    let shifted = edge_hosoya_from_hosoya(&h, n).map_or_else(|e| e.to_string(), |p| p.to_string());
    record("edge_hosoya_shift", he.to_string(), shifted);

    record(
        "distance_shift",
        "true".into(),
        distance_shift_holds(n, &vertex.distribution, &edge.distribution).to_string(),
    );

    let w = wiener_from_polynomial(&h);
    let ww = hyper_wiener_from_polynomial(&h);
    record(
        "edge_wiener",
        edge.distance_sum.to_string(),
        edge_wiener_from_wiener(&w, n).map_or_else(|e| e.to_string(), |v| v.to_string()),
    );
    record(
        "edge_hyper_wiener",
        edge.hyper_sum.to_string(),
        match &ww {
            Ok(ww) => edge_hyper_wiener_from_hyper(ww, &w).map_or_else(|e| e.to_string(), |v| v.to_string()),
            Err(e) => e.to_string(),
        },
    );

    let h1 = h.evaluate_at_one();
    let dh = h.derivative();
    let dh1 = dh.evaluate_at_one();
    let ddh1 = dh.derivative().evaluate_at_one();
    let dhe = he.derivative();
    record(
        "edge_hosoya_first_derivative_at_1",
        (&dh1 - &h1 + &nb).to_string(),
        dhe.evaluate_at_one().to_string(),
    );
    record(
        "edge_hosoya_second_derivative_at_1",
        (&ddh1 - &dh1 * 2u32 + &h1 * 2u32 - &nb * 2u32).to_string(),
        dhe.derivative().evaluate_at_one().to_string(),
    );
    record("hosoya_at_1", (choose2(n) + &nb).to_string(), h1.to_string());

    failures
}
