//! Hosoya polynomials and the Wiener / hyper-Wiener index family.
//!
//! Each index has two routes: a direct sum over pair distances, and a
//! derivative of the corresponding Hosoya polynomial evaluated at 1:
//!
//! * `W = H'(1)`, `W_e = H_e'(1)`
//! * `WW = H'(1) + H''(1)/2`, `WW_e = H_e'(1) + H_e''(1)/2`
//!
//! The half in the hyper-Wiener index never needs rationals. Directly it is
//! summed per pair as `d(d+1)/2`; on the polynomial side `H''(1)` counts
//! `d(d-1)` per pair, which is even.
//!
//! Edge quantities are taken over the line graph. For the one-vertex graph
//! they are all zero and the edge-Hosoya polynomial is the zero polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{DistanceDistribution, Graph};
use crate::polynomial::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("H''(1) = {0} is odd; input is not a Hosoya polynomial")]
    OddSecondDerivative(BigInt),
    #[error("negative coefficient; input is not a Hosoya polynomial")]
    NegativeCoefficient,
}

/// Everything one all-pairs BFS sweep yields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSums {
    pub distribution: DistanceDistribution,
    /// `sum d(u,v)` over unordered pairs.
    pub distance_sum: BigInt,
    /// `sum d(u,v)(d(u,v)+1)/2` over unordered pairs.
    pub hyper_sum: BigInt,
}

pub fn pair_sums(g: &Graph) -> PairSums {
    let mut counts = vec![g.n() as u64];
    let mut distance_sum: u128 = 0;
    let mut hyper_sum: u128 = 0;
    g.for_each_bfs(|s, dist| {
        for &d in &dist[s + 1..] {
            if d >= counts.len() {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
            let d = d as u128;
            distance_sum += d;
            hyper_sum += d * (d + 1) / 2;
        }
    });
    PairSums {
        distribution: DistanceDistribution::from_counts(counts),
        distance_sum: distance_sum.into(),
        hyper_sum: hyper_sum.into(),
    }
}

fn edge_pair_sums(g: &Graph) -> PairSums {
    match g.line_graph() {
        Ok((lg, _)) => pair_sums(&lg),
        Err(_) => PairSums {
            distribution: DistanceDistribution::default(),
            distance_sum: BigInt::zero(),
            hyper_sum: BigInt::zero(),
        },
    }
}

pub fn hosoya_polynomial(g: &Graph) -> Polynomial {
    Polynomial::from_distribution(&g.distance_distribution())
}

/// `H(L(G), x)`, or zero when `G` has no edges.
pub fn edge_hosoya_polynomial(g: &Graph) -> Polynomial {
    match g.line_graph() {
        Ok((lg, _)) => hosoya_polynomial(&lg),
        Err(_) => Polynomial::zero(),
    }
}

/// Direct pair sum.
pub fn wiener(g: &Graph) -> BigInt {
    pair_sums(g).distance_sum
}

/// Direct pair sum over the line graph.
pub fn edge_wiener(g: &Graph) -> BigInt {
    edge_pair_sums(g).distance_sum
}

/// Direct sum of `d(d+1)/2` over pairs.
pub fn hyper_wiener(g: &Graph) -> BigInt {
    pair_sums(g).hyper_sum
}

pub fn edge_hyper_wiener(g: &Graph) -> BigInt {
    edge_pair_sums(g).hyper_sum
}

/// `H'(1)`.
pub fn wiener_from_polynomial(h: &Polynomial) -> BigInt {
    h.derivative().evaluate_at_one()
}

/// `H'(1) + H''(1)/2`, rejecting inputs that cannot be Hosoya polynomials.
pub fn hyper_wiener_from_polynomial(h: &Polynomial) -> Result<BigInt, IndexError> {
    if h.has_negative_coefficient() {
        return Err(IndexError::NegativeCoefficient);
    }
    let first = h.derivative();
    let second = first.derivative().evaluate_at_one();
    let (half, rem) = second.div_rem(&BigInt::from(2));
    if !rem.is_zero() {
        return Err(IndexError::OddSecondDerivative(second));
    }
    Ok(first.evaluate_at_one() + half)
}

fn decimal<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// All six descriptors of a graph. Indices are the direct pair sums.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub n: usize,
    pub m: usize,
    #[serde(serialize_with = "decimal")]
    pub wiener: BigInt,
    #[serde(serialize_with = "decimal")]
    pub edge_wiener: BigInt,
    #[serde(serialize_with = "decimal")]
    pub hyper_wiener: BigInt,
    #[serde(serialize_with = "decimal")]
    pub edge_hyper_wiener: BigInt,
    pub hosoya: Polynomial,
    pub edge_hosoya: Polynomial,
}

/// A disagreement between the direct and the derivative route.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub index: &'static str,
    #[serde(serialize_with = "decimal")]
    pub direct: BigInt,
    pub derived: String,
}

impl IndexReport {
    /// One BFS sweep over `g` and one over its line graph.
    pub fn compute(g: &Graph) -> Self {
        let v = pair_sums(g);
        let e = edge_pair_sums(g);
        IndexReport {
            n: g.n(),
            m: g.m(),
            wiener: v.distance_sum,
            edge_wiener: e.distance_sum,
            hyper_wiener: v.hyper_sum,
            edge_hyper_wiener: e.hyper_sum,
            hosoya: Polynomial::from_distribution(&v.distribution),
            edge_hosoya: Polynomial::from_distribution(&e.distribution),
        }
    }

    /// Re-derives every index from the polynomials and lists mismatches.
    pub fn verify(&self) -> Vec<Discrepancy> {
        let mut out = Vec::new();
        let mut check = |index, direct: &BigInt, derived: Result<BigInt, IndexError>| match derived {
            Ok(v) if &v == direct => {}
            Ok(v) => out.push(Discrepancy {
                index,
                direct: direct.clone(),
                derived: v.to_string(),
            }),
            Err(e) => out.push(Discrepancy {
                index,
                direct: direct.clone(),
                derived: e.to_string(),
            }),
        };
        check("wiener", &self.wiener, Ok(wiener_from_polynomial(&self.hosoya)));
        check("edge_wiener", &self.edge_wiener, Ok(wiener_from_polynomial(&self.edge_hosoya)));
        check("hyper_wiener", &self.hyper_wiener, hyper_wiener_from_polynomial(&self.hosoya));
        check(
            "edge_hyper_wiener",
            &self.edge_hyper_wiener,
            hyper_wiener_from_polynomial(&self.edge_hosoya),
        );
        out
    }
}
