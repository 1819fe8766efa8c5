//! Regular dendrimers `T(k, d)` and closed forms for their edge descriptors.
//!
//! `T(0, d)` is a single vertex and `T(1, d)` the star on `d + 1` vertices.
//! Each further generation hangs `d - 1` new leaves on every current leaf,
//! so all internal vertices have degree `d` and every leaf sits at depth `k`.
//!
//! The closed forms are evaluated entirely in big integers. Each division is
//! checked to be exact; a remainder means the formula was mistyped, and is
//! reported as [`DendrimerError::NonIntegralResult`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{pow, One, Zero};
use thiserror::Error;

use crate::graph::Graph;
use crate::indices::hosoya_polynomial;
use crate::polynomial::Polynomial;
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DendrimerError {
    #[error("dendrimer degree must be at least 3, got {0}")]
    DegreeTooSmall(u32),
    #[error("{formula}: {numerator} is not divisible by {denominator}")]
    NonIntegralResult {
        formula: &'static str,
        numerator: BigInt,
        denominator: BigInt,
    },
}

/// Generation count `k >= 0` and degree `d >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DendrimerParams {
    k: u32,
    d: u32,
}

impl DendrimerParams {
    pub fn new(k: u32, d: u32) -> Result<Self, DendrimerError> {
        if d < 3 {
            return Err(DendrimerError::DegreeTooSmall(d));
        }
        Ok(DendrimerParams { k, d })
    }

    pub fn k(self) -> u32 {
        self.k
    }

    pub fn d(self) -> u32 {
        self.d
    }

    /// `1 + d((d-1)^k - 1)/(d-2)`.
    pub fn vertex_count(self) -> BigInt {
        let d = BigInt::from(self.d);
        let b = BigInt::from(self.d - 1);
        BigInt::one() + &d * (pow(b, self.k as usize) - 1u32) / (&d - 2u32)
    }

    /// `d(d-1)^(k-1)` for `k >= 1`; the single vertex of `T(0, d)` otherwise.
    pub fn leaf_count(self) -> BigInt {
        if self.k == 0 {
            return BigInt::one();
        }
        BigInt::from(self.d) * pow(BigInt::from(self.d - 1), self.k as usize - 1)
    }
}

/// Builds `T(k, d)` breadth-first from the center. Labels are `"0"` for the
/// center and then consecutive integers in generation order; children of a
/// vertex are numbered consecutively.
pub fn generate_dendrimer(p: DendrimerParams) -> Tree {
    if p.k == 0 {
        return Tree::new(Graph::single_vertex("0")).unwrap();
    }
    let d = p.d as usize;
    let mut pairs = Vec::new();
    let mut next = 1usize;
    let mut frontier: Vec<usize> = Vec::new();
    for _ in 0..d {
        pairs.push((0, next));
        frontier.push(next);
        next += 1;
    }
    for _ in 1..p.k {
        let mut grown = Vec::with_capacity(frontier.len() * (d - 1));
        for &leaf in &frontier {
            for _ in 0..d - 1 {
                pairs.push((leaf, next));
                grown.push(next);
                next += 1;
            }
        }
        frontier = grown;
    }
    let labels = (0..next).map(|i| i.to_string()).collect();
    Tree::new(Graph::from_indexed(labels, &pairs).expect("dendrimer is connected"))
        .expect("dendrimer is a tree")
}

fn exact_div(formula: &'static str, numerator: BigInt, denominator: BigInt) -> Result<BigInt, DendrimerError> {
    let (q, r) = numerator.div_rem(&denominator);
    if !r.is_zero() {
        return Err(DendrimerError::NonIntegralResult {
            formula,
            numerator,
            denominator,
        });
    }
    Ok(q)
}

/// Closed-form edge-Hosoya polynomial. For `k >= 1` its degree is `2k - 1`:
///
/// ```text
/// [x^(2i)]   = (d-1)^(2i) d ((d-1)^(k-i) - 1)/(d-2)
/// [x^(2i+1)] = (d-1)^(2i) C(d,2) (d ((d-1)^(k-i-1) - 1)/(d-2) + 1)
/// ```
///
/// for `i` in `0..k`.
pub fn dendrimer_edge_hosoya_closed(p: DendrimerParams) -> Result<Polynomial, DendrimerError> {
    let d = BigInt::from(p.d);
    let b = BigInt::from(p.d - 1);
    let dm2 = BigInt::from(p.d - 2);
    let choose = &d * &b / 2u32;
    let k = p.k as usize;
    let mut coeffs = vec![BigInt::zero(); 2 * k];
    for i in 0..k {
        let scale = pow(b.clone(), 2 * i);
        let even = exact_div("edge-Hosoya even term", pow(b.clone(), k - i) - 1u32, dm2.clone())?;
        coeffs[2 * i] = &scale * &d * even;
        let odd = exact_div("edge-Hosoya odd term", pow(b.clone(), k - i - 1) - 1u32, dm2.clone())?;
        coeffs[2 * i + 1] = &scale * &choose * (&d * odd + 1u32);
    }
    Ok(Polynomial::new(coeffs))
}

/// Closed-form edge-Wiener index,
/// `d (2 - 2d + (d-1)^k (d^2 + 4d - 4) + (d-1)^(2k) (2 - d(d+2) + 2(d-2)dk)) / (2(d-2)^3)`.
pub fn dendrimer_edge_wiener_closed(p: DendrimerParams) -> Result<BigInt, DendrimerError> {
    let d = BigInt::from(p.d);
    let k = BigInt::from(p.k);
    let b = BigInt::from(p.d - 1);
    let dm2 = BigInt::from(p.d - 2);
    let bk = pow(b.clone(), p.k as usize);
    let b2k = &bk * &bk;
    let numerator = &d
        * (BigInt::from(2) - 2 * &d
            + &bk * (&d * &d + 4 * &d - 4)
            + &b2k * (BigInt::from(2) - &d * (&d + 2) + 2 * &dm2 * &d * &k));
    exact_div("edge-Wiener", numerator, 2 * pow(dm2, 3))
}

/// Closed-form edge-hyper-Wiener index, the sum of
/// `d (2(d-1) + (d-1)^k (4 - 5d^2)) / (2(d-2)^4)` and
/// `d (d-1)^(2k) (-2 - 8k + d(-2 + 5d + 16k - d(d+4)k + 2(d-2)^2 k^2)) / (2(d-2)^4)`,
/// taken over the common denominator.
pub fn dendrimer_edge_hyper_wiener_closed(p: DendrimerParams) -> Result<BigInt, DendrimerError> {
    let d = BigInt::from(p.d);
    let k = BigInt::from(p.k);
    let b = BigInt::from(p.d - 1);
    let dm2 = BigInt::from(p.d - 2);
    let bk = pow(b.clone(), p.k as usize);
    let b2k = &bk * &bk;
    let first = 2 * &b + &bk * (BigInt::from(4) - 5 * &d * &d);
    let inner = BigInt::from(-2) + 5 * &d + 16 * &k - &d * (&d + 4) * &k + 2 * &dm2 * &dm2 * &k * &k;
    let second = &b2k * (BigInt::from(-2) - 8 * &k + &d * inner);
    let numerator = &d * (first + second);
    exact_div("edge-hyper-Wiener", numerator, 2 * pow(dm2, 4))
}

/// `W(G, x) = H(G, x) - n`: the Hosoya polynomial without coincident pairs.
pub fn wiener_polynomial(g: &Graph) -> Polynomial {
    hosoya_polynomial(g).add_constant(-BigInt::from(g.n()))
}
