//! Lattice points of the dilated standard 2-simplex `kΔ₂`, their cover graph,
//! and the Gaussian binomial `[k+2, 2]_q` that grades it.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, LabeledGraph};
use crate::partition::Partition;
use crate::poly::IntPolynomial;
use crate::tableaux::grassmannian_from_partition;

/// `(a₁, a₂)` with `a₁ + a₂ <= k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    a1: usize,
    a2: usize,
    k: usize,
}

impl LatticePoint {
    pub fn new(a1: usize, a2: usize, k: usize) -> Result<Self> {
        if a1 + a2 > k {
            return Err(Error::Parse(format!("({a1},{a2}) lies outside {k}Δ₂")));
        }
        Ok(LatticePoint { a1, a2, k })
    }

    pub fn a1(&self) -> usize {
        self.a1
    }

    pub fn a2(&self) -> usize {
        self.a2
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

impl Ord for LatticePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.k, weight(self), self.a1).cmp(&(other.k, weight(other), other.a1))
    }
}

impl PartialOrd for LatticePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a1, self.a2)
    }
}

impl Serialize for LatticePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All points of `kΔ₂ ∩ ℤ²`, by weight then `a₁`.
pub fn enumerate_lattice_points(k: usize) -> Vec<LatticePoint> {
    let mut out = Vec::with_capacity((k + 1) * (k + 2) / 2);
    for a1 in 0..=k {
        for a2 in 0..=k - a1 {
            out.push(LatticePoint { a1, a2, k });
        }
    }
    out.sort();
    out
}

/// `C(k+2, 2)`.
pub fn ehrhart(k: usize) -> u64 {
    let k = k as u64;
    (k + 2) * (k + 1) / 2
}

/// `m_a = a₁ + 2a₂`.
pub fn weight(a: &LatticePoint) -> usize {
    a.a1 + 2 * a.a2
}

/// `(a₁ + a₂, a₂)`.
pub fn fitted_partition(a: &LatticePoint) -> Partition {
    Partition::new(vec![a.a1 + a.a2, a.a2]).expect("a₁ + a₂ >= a₂")
}

/// Inverse of [`fitted_partition`] on the `k×2` rectangle.
pub fn point_from_partition(lambda: &Partition, k: usize) -> Result<LatticePoint> {
    if !lambda.fits(2, k) {
        return Err(Error::PartitionDoesNotFit {
            partition: lambda.to_string(),
            rows: k,
        });
    }
    LatticePoint::new(lambda.part(1) - lambda.part(2), lambda.part(2), k)
}

/// Directed cover `a → b`: `b - a` is `(1, 0)` or `(1, -1)`.
pub fn lattice_covers(a: &LatticePoint, b: &LatticePoint) -> Result<bool> {
    if a.k != b.k {
        return Err(Error::SizeMismatch {
            left: a.k,
            right: b.k,
        });
    }
    Ok(b.a1 == a.a1 + 1 && (b.a2 == a.a2 || b.a2 + 1 == a.a2))
}

/// Underlying graph of the cover digraph on `kΔ₂`. Payloads are the fitted
/// partitions.
pub fn build_lattice_graph(k: usize) -> Result<LabeledGraph> {
    let points = enumerate_lattice_points(k);
    let mut g = LabeledGraph::new();
    for p in &points {
        g.add_vertex(p.to_string(), Some(fitted_partition(p).to_string()));
    }
    for a in &points {
        for b in &points {
            if lattice_covers(a, b)? {
                g.add_edge(&a.to_string(), &b.to_string(), EdgeKind::Cover)?;
            }
        }
    }
    Ok(g)
}

/// Young's lattice on partitions with at most two parts of size at most `k`.
pub fn young_lattice_rectangle(k: usize) -> Result<LabeledGraph> {
    let all = Partition::in_two_row_rectangle(k);
    let mut g = LabeledGraph::new();
    for p in &all {
        g.add_vertex(p.to_string(), None);
    }
    for a in &all {
        for b in &all {
            if b.size() == a.size() + 1 && a.contained_in(b) {
                g.add_edge(&a.to_string(), &b.to_string(), EdgeKind::Cover)?;
            }
        }
    }
    Ok(g)
}

/// `N_m = #{a : m_a = m}` for `m = 0..=2k`.
pub fn slice_counts(k: usize) -> Vec<u64> {
    let mut counts = vec![0u64; 2 * k + 1];
    for p in enumerate_lattice_points(k) {
        counts[weight(&p)] += 1;
    }
    counts
}

fn one_minus_q_pow(e: usize) -> IntPolynomial {
    IntPolynomial::one()
        .checked_sub(&IntPolynomial::monomial(1, e))
        .expect("unit coefficients")
}

/// `(1 - q^{k+2})(1 - q^{k+1}) / ((1 - q)(1 - q²))` by exact division.
pub fn q_binomial_closed(k: usize) -> Result<IntPolynomial> {
    let num = one_minus_q_pow(k + 2).checked_mul(&one_minus_q_pow(k + 1))?;
    let den = one_minus_q_pow(1).checked_mul(&one_minus_q_pow(2))?;
    num.div_exact(&den)
}

/// `f(t) = (1 - tⁿ)(1 - t^{n-1}) / ((1 - t)(1 - t²))`, evaluated as
/// `[n]_t [n-1]_t / [2]_t`.
pub fn hilbert_series(n: usize) -> Result<IntPolynomial> {
    if n < 2 {
        return Err(Error::FamilyRange(n));
    }
    IntPolynomial::q_integer(n)
        .checked_mul(&IntPolynomial::q_integer(n - 1))?
        .div_exact(&IntPolynomial::q_integer(2))
}

/// `Σ_m N_m q^m`, checked against the closed q-binomial and `f(t)` with
/// `n = k + 2`.
pub fn gaussian_binomial_k2(k: usize) -> Result<IntPolynomial> {
    let slices = IntPolynomial::new(slice_counts(k).into_iter().map(|c| c as i64).collect());
    let closed = q_binomial_closed(k)?;
    let hilbert = hilbert_series(k + 2)?;
    if slices != closed || slices != hilbert {
        return Err(Error::CriterionMismatch(format!(
            "k = {k}: slices {slices}, closed {closed}, f(t) {hilbert}"
        )));
    }
    Ok(slices)
}

/// Coefficients of `t^0..=t^order` in `Π_{i=0}^{2} 1/(1 - qⁱt)`.
pub fn product_expansion(order: usize) -> Result<Vec<IntPolynomial>> {
    let mut series = vec![IntPolynomial::zero(); order + 1];
    series[0] = IntPolynomial::one();
    for i in 0..=2 {
        // Multiply by Σ_j q^{ij} t^j.
        let mut next = vec![IntPolynomial::zero(); order + 1];
        for (a, coeff) in series.iter().enumerate() {
            for j in 0..=order - a {
                next[a + j] = next[a + j].checked_add(&coeff.shift(i * j))?;
            }
        }
        series = next;
    }
    Ok(series)
}

/// The `t^k` coefficient of the product expansion equals
/// `gaussian_binomial_k2(k)` for every `k <= order`.
pub fn product_expansion_check(order: usize) -> Result<bool> {
    let series = product_expansion(order)?;
    for (k, coeff) in series.iter().enumerate() {
        if *coeff != gaussian_binomial_k2(k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Each cover changes the weight by exactly one, `(0,0)` is the unique
/// minimum, `(0,k)` the unique maximum at rank `2k`, and the rank polynomial
/// is the Gaussian binomial.
pub fn lattice_rank_check(k: usize) -> Result<bool> {
    let points = enumerate_lattice_points(k);
    let g = build_lattice_graph(k)?;
    let by_key = |s: &str| points.iter().find(|p| p.to_string() == s).copied();
    for (a, b, _) in g.edges() {
        let (pa, pb) = (by_key(a).unwrap(), by_key(b).unwrap());
        if weight(&pa).abs_diff(weight(&pb)) != 1 {
            return Ok(false);
        }
    }
    let mut minima = Vec::new();
    let mut maxima = Vec::new();
    for p in &points {
        let nbrs: Vec<LatticePoint> = g
            .neighbors(&p.to_string())
            .into_iter()
            .map(|s| by_key(s).unwrap())
            .collect();
        if nbrs.iter().all(|q| weight(q) > weight(p)) {
            minima.push(*p);
        }
        if nbrs.iter().all(|q| weight(q) < weight(p)) {
            maxima.push(*p);
        }
    }
    let rank_poly = {
        let mut coeffs = vec![0i64; 2 * k + 1];
        for p in &points {
            coeffs[weight(p)] += 1;
        }
        IntPolynomial::new(coeffs)
    };
    Ok(minima == [LatticePoint { a1: 0, a2: 0, k }]
        && maxima == [LatticePoint { a1: 0, a2: k, k }]
        && weight(&maxima[0]) == 2 * k
        && rank_poly == gaussian_binomial_k2(k)?)
}

/// `ℓ(w(fitted_partition(a))) = m_a` for every point, with `n = k + 2`.
pub fn lattice_length_check(k: usize) -> Result<bool> {
    for a in enumerate_lattice_points(k) {
        let w = grassmannian_from_partition(&fitted_partition(&a), k + 2)?;
        if w.length() != weight(&a) {
            return Ok(false);
        }
    }
    Ok(true)
}
