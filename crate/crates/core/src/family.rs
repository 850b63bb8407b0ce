//! The permutations `ₙw = [n, 1, 2, ..., n-4, n-2, n-1, n-3]` (`n >= 4`), the
//! closed forms predicted for their move graphs, and brute-force counterparts.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::perm::{binomial, Permutation};
use crate::poly::IntPolynomial;
use crate::words::{self, Word};

/// Default exhaustive-verification bound on `n`.
pub const DEFAULT_MAX_N: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyBudget {
    pub max_n: usize,
}

impl Default for FamilyBudget {
    fn default() -> Self {
        FamilyBudget {
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl FamilyBudget {
    fn check(&self, n: usize) -> Result<()> {
        check_n(n)?;
        if n > self.max_n {
            return Err(Error::FamilyBound { n, max: self.max_n });
        }
        Ok(())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::FamilyRange(n));
    }
    Ok(())
}

fn c2(m: usize) -> i64 {
    (m * m.saturating_sub(1) / 2) as i64
}

pub fn family_permutation(n: usize) -> Result<Permutation> {
    check_n(n)?;
    let mut values = vec![n];
    values.extend(1..=n - 4);
    values.extend([n - 2, n - 1, n - 3]);
    Permutation::new(values)
}

/// `½ · n! / ((n-2)! 1! 1!)`.
pub fn predicted_order(n: usize) -> Result<u64> {
    check_n(n)?;
    let multinomial = (n as u64)
        .checked_mul(n as u64 - 1)
        .ok_or(Error::Overflow("multinomial"))?;
    Ok(multinomial / 2)
}

/// `2d + (n-2)d² + (2n-6)d³ + C(n-3,2)d⁴`.
pub fn predicted_degree_polynomial(n: usize) -> Result<IntPolynomial> {
    check_n(n)?;
    let n = n as i64;
    Ok(IntPolynomial::new(vec![
        0,
        2,
        n - 2,
        2 * n - 6,
        c2(n as usize - 3),
    ]))
}

pub fn predicted_four_cycles(n: usize) -> Result<u64> {
    check_n(n)?;
    binomial(n as u64 - 2, 2)
}

/// `4 · C(n-1, 2)`.
pub fn predicted_degree_sum(n: usize) -> Result<u64> {
    check_n(n)?;
    Ok(4 * binomial(n as u64 - 1, 2)?)
}

pub fn predicted_braid_vertices(n: usize) -> Result<u64> {
    check_n(n)?;
    Ok(2 * (n as u64 - 2))
}

pub fn family_words(n: usize, budget: FamilyBudget) -> Result<BTreeSet<Word>> {
    budget.check(n)?;
    Ok(words::enumerate_reduced_words(&family_permutation(n)?))
}

pub fn family_graph(n: usize, budget: FamilyBudget) -> Result<LabeledGraph> {
    budget.check(n)?;
    words::build_word_graph(&family_permutation(n)?)
}

pub fn actual_degree_polynomial(n: usize, budget: FamilyBudget) -> Result<IntPolynomial> {
    Ok(family_graph(n, budget)?.degree_histogram())
}

pub fn actual_four_cycles(n: usize, budget: FamilyBudget) -> Result<u64> {
    Ok(family_graph(n, budget)?.count_4cycles() as u64)
}

/// Vertices of the move graph that admit at least one braid move.
pub fn braid_vertex_count(n: usize, budget: FamilyBudget) -> Result<u64> {
    let words = family_words(n, budget)?;
    Ok(words
        .iter()
        .filter(|w| words::braid_move_count(w) > 0)
        .count() as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CornerWords {
    pub top: String,
    pub bottom: String,
    pub middle: String,
}

/// The three corner vertices of the triangular drawing of the move graph:
/// top `(n-1)(n-2)⋯1(n-2)(n-1)`, bottom `(n-3)(n-2)(n-1)(n-2)⋯1`, and
/// middle `(n-3)(n-1)(n-2)⋯1(n-1)`.
pub fn corner_word_letters(n: usize) -> Result<[Word; 3]> {
    check_n(n)?;
    let down: Word = (1..n).rev().collect();
    let mut top = down.clone();
    top.extend([n - 2, n - 1]);
    let mut bottom = vec![n - 3, n - 2];
    bottom.extend(&down);
    let mut middle = vec![n - 3];
    middle.extend(&down);
    middle.push(n - 1);
    Ok([top, bottom, middle])
}

pub fn corner_words(n: usize) -> Result<CornerWords> {
    let [top, bottom, middle] = corner_word_letters(n)?;
    Ok(CornerWords {
        top: words::word_key(&top, n),
        bottom: words::word_key(&bottom, n),
        middle: words::word_key(&middle, n),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReverseLengths {
    pub length: usize,
    pub reverse_length: usize,
    pub total: usize,
    pub holds: bool,
}

/// `ℓ(ₙw) + ℓ(reverse(ₙw)) = C(n,2) = r(ₙw)`.
pub fn reverse_length_identity(n: usize) -> Result<ReverseLengths> {
    let w = family_permutation(n)?;
    let length = w.length();
    let reverse_length = w.reverse().length();
    let total = length + reverse_length;
    let expected = binomial(n as u64, 2)?;
    Ok(ReverseLengths {
        length,
        reverse_length,
        total,
        holds: total as u64 == expected && predicted_order(n)? == expected,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralChecks {
    pub length_is_n_plus_1: bool,
    pub cycle_type_hook: bool,
    pub fixed_points: bool,
    pub two_descents: bool,
    pub reverse_identity: bool,
}

impl StructuralChecks {
    pub fn all(&self) -> bool {
        self.length_is_n_plus_1
            && self.cycle_type_hook
            && self.fixed_points
            && self.two_descents
            && self.reverse_identity
    }
}

/// Length `n+1`, cycle type `(n-2,1,1)`, fixed points `{n-2, n-1}`, descents
/// exactly `{1, n-1}`, and the reverse-length identity. No enumeration needed.
pub fn structural_checks(n: usize) -> Result<StructuralChecks> {
    let w = family_permutation(n)?;
    let rev = w.reverse();
    Ok(StructuralChecks {
        length_is_n_plus_1: w.length() == n + 1,
        cycle_type_hook: w.cycle_type().parts() == [n - 2, 1, 1],
        fixed_points: w.fixed_points() == BTreeSet::from([n - 2, n - 1]),
        two_descents: w.descent_set() == BTreeSet::from([1, n - 1]),
        reverse_identity: w.length() + rev.length() == n * (n - 1) / 2
            && 2 * rev.length() == n * n - 3 * n - 2,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub n: usize,
    pub permutation: Permutation,
    pub order_predicted: u64,
    pub order_actual: u64,
    pub degree_poly_predicted: IntPolynomial,
    pub degree_poly_actual: IntPolynomial,
    pub four_cycles_predicted: u64,
    pub four_cycles_actual: u64,
    pub degree_sum_predicted: u64,
    pub degree_sum: u64,
    pub braid_vertices_predicted: u64,
    pub braid_vertex_count: u64,
    pub max_degree: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub ascent_pattern_ok: bool,
    pub pass: bool,
}

/// Builds the move graph of `ₙw` and compares every closed form with its
/// brute-force counterpart.
pub fn verify_family(n: usize, budget: FamilyBudget) -> Result<FamilyReport> {
    let words = family_words(n, budget)?;
    let graph = family_graph(n, budget)?;
    let actual_poly = graph.degree_histogram();
    let braid = words
        .iter()
        .filter(|w| words::braid_move_count(w) > 0)
        .count() as u64;
    let ascent_pattern_ok = words
        .iter()
        .all(|w| words::word_ascents(w).len() == 2 && words::word_descents(w).len() == n - 2);

    let mut report = FamilyReport {
        n,
        permutation: family_permutation(n)?,
        order_predicted: predicted_order(n)?,
        order_actual: words.len() as u64,
        degree_poly_predicted: predicted_degree_polynomial(n)?,
        degree_poly_actual: actual_poly.clone(),
        four_cycles_predicted: predicted_four_cycles(n)?,
        four_cycles_actual: graph.count_4cycles() as u64,
        degree_sum_predicted: predicted_degree_sum(n)?,
        degree_sum: graph.degree_sum() as u64,
        braid_vertices_predicted: predicted_braid_vertices(n)?,
        braid_vertex_count: braid,
        max_degree: actual_poly.degree().unwrap_or(0),
        connected: graph.is_connected(),
        bipartite: graph.is_bipartite(),
        ascent_pattern_ok,
        pass: false,
    };
    report.pass = report.order_predicted == report.order_actual
        && report.degree_poly_predicted == report.degree_poly_actual
        && report.four_cycles_predicted == report.four_cycles_actual
        && report.degree_sum_predicted == report.degree_sum
        && report.braid_vertices_predicted == report.braid_vertex_count
        && report.max_degree <= 4
        && report.connected
        && report.bipartite
        && report.ascent_pattern_ok;
    Ok(report)
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |f: &mut fmt::Formatter<'_>, name: &str, pred: String, act: String| {
            let mark = if pred == act { "ok" } else { "MISMATCH" };
            writeln!(f, "{name:<16} {pred:<34} {act:<34} {mark}")
        };
        writeln!(f, "family n = {}  w = {}", self.n, self.permutation)?;
        writeln!(
            f,
            "{:<16} {:<34} {:<34} status",
            "quantity", "predicted", "actual"
        )?;
        row(
            f,
            "order",
            self.order_predicted.to_string(),
            self.order_actual.to_string(),
        )?;
        row(
            f,
            "degree poly",
            self.degree_poly_predicted.display("d"),
            self.degree_poly_actual.display("d"),
        )?;
        row(
            f,
            "degree sum",
            self.degree_sum_predicted.to_string(),
            self.degree_sum.to_string(),
        )?;
        row(
            f,
            "4-cycles",
            self.four_cycles_predicted.to_string(),
            self.four_cycles_actual.to_string(),
        )?;
        row(
            f,
            "braid vertices",
            self.braid_vertices_predicted.to_string(),
            self.braid_vertex_count.to_string(),
        )?;
        writeln!(f, "{:<16} {}", "max degree", self.max_degree)?;
        writeln!(f, "{:<16} {}", "connected", self.connected)?;
        writeln!(f, "{:<16} {}", "bipartite", self.bipartite)?;
        writeln!(f, "{:<16} {}", "2 ascents each", self.ascent_pattern_ok)?;
        writeln!(
            f,
            "{:<16} {}",
            "result",
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

/// A power series in `z` whose coefficients are polynomials in `d`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DSeries {
    terms: Vec<IntPolynomial>,
}

impl DSeries {
    pub fn new(mut terms: Vec<IntPolynomial>) -> Self {
        while terms.last().is_some_and(IntPolynomial::is_zero) {
            terms.pop();
        }
        DSeries { terms }
    }

    /// From `(coefficient, d-power, z-power)` monomials.
    pub fn from_monomials(monomials: &[(i64, usize, usize)]) -> Result<Self> {
        let mut terms = Vec::new();
        for &(c, dp, zp) in monomials {
            if terms.len() <= zp {
                terms.resize(zp + 1, IntPolynomial::zero());
            }
            terms[zp] = terms[zp].checked_add(&IntPolynomial::monomial(c, dp))?;
        }
        Ok(Self::new(terms))
    }

    pub fn coeff(&self, zpow: usize) -> IntPolynomial {
        self.terms.get(zpow).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &[IntPolynomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn z_degree(&self) -> Option<usize> {
        self.terms.len().checked_sub(1)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let len = self.terms.len().max(other.terms.len());
        let terms = (0..len)
            .map(|i| self.coeff(i).checked_sub(&other.coeff(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(terms))
    }

    /// Product with a polynomial in `z` alone, truncated below `z^order`.
    pub fn mul_z_poly(&self, zpoly: &IntPolynomial, order: usize) -> Result<Self> {
        let mut terms = vec![IntPolynomial::zero(); order];
        for (i, t) in self.terms.iter().enumerate() {
            for (j, &c) in zpoly.coeffs().iter().enumerate() {
                if i + j < order && c != 0 {
                    terms[i + j] = terms[i + j].checked_add(&t.checked_scale(c)?)?;
                }
            }
        }
        Ok(Self::new(terms))
    }

    /// Expands `self / (1 - z)^3` through `z^(order-1)` using
    /// `1/(1-z)^3 = Σ C(m+2, 2) z^m`.
    pub fn over_one_minus_z_cubed(&self, order: usize) -> Result<Self> {
        let kernel = IntPolynomial::new((0..order).map(|m| c2(m + 2)).collect());
        self.mul_z_poly(&kernel, order)
    }

    pub fn display(&self) -> String {
        let mut parts = Vec::new();
        for (i, t) in self.terms.iter().enumerate() {
            if t.is_zero() {
                continue;
            }
            let zs = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            parts.push(if zs.is_empty() {
                format!("({})", t.display("d"))
            } else {
                format!("({}){}", t.display("d"), zs)
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Printed numerator of the published generating series, already multiplied
/// by its `z³` factor; the denominator is `(1 - z)³`.
pub fn published_series_numerator() -> DSeries {
    // (d⁴z² − 2d³z² − d²z³ + 2d³z + 3d²z² + 2dz³ − 4d²z − 4dz² + 2d² + 2dz) · z³
    DSeries::from_monomials(&[
        (1, 4, 5),
        (-2, 3, 5),
        (-1, 2, 6),
        (2, 3, 4),
        (3, 2, 5),
        (2, 1, 6),
        (-4, 2, 4),
        (-4, 1, 5),
        (2, 2, 3),
        (2, 1, 4),
    ])
    .expect("small literal coefficients")
}

/// `Σ_{n=4}^{max_n} P_n(d) zⁿ` straight from the closed-form degree polynomial.
pub fn termwise_series(max_n: usize) -> Result<DSeries> {
    let mut terms = vec![IntPolynomial::zero(); max_n + 1];
    for (n, slot) in terms.iter_mut().enumerate().skip(4) {
        *slot = predicted_degree_polynomial(n)?;
    }
    Ok(DSeries::new(terms))
}

/// Numerator `N(d, z)` with `Σ_{n≥4} P_n(d) zⁿ = N / (1 - z)³`, obtained by
/// multiplying the termwise series by `(1 - z)³`.
///
/// `P_n` is quadratic in `n`, so the product is a polynomial of `z`-degree at
/// most 6. The sum is taken far enough past that degree to make the
/// truncation exact, and the vanishing tail is asserted.
pub fn derived_series_numerator() -> Result<DSeries> {
    const HORIZON: usize = 16;
    let cube = IntPolynomial::new(vec![1, -3, 3, -1]);
    let product = termwise_series(HORIZON)?.mul_z_poly(&cube, HORIZON + 1)?;
    if product.z_degree().is_some_and(|deg| deg > 6) {
        return Err(Error::InexactDivision);
    }
    Ok(product)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesRow {
    pub n: usize,
    pub predicted: IntPolynomial,
    pub derived: IntPolynomial,
    pub published: IntPolynomial,
    pub derived_agrees: bool,
    pub published_agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub max_n: usize,
    pub published_numerator: String,
    pub derived_numerator: String,
    /// Published series minus derived series, through `z^max_n`.
    pub difference: String,
    pub difference_series: DSeries,
    pub rows: Vec<SeriesRow>,
    /// Every derived coefficient for `n = 4..=max_n` equals the closed form.
    pub derived_matches_predicted: bool,
    /// The difference is exactly `2d²z³`.
    pub difference_is_2d2z3: bool,
}

/// Expands both the published rational generating function and the one
/// derived from the closed-form degree polynomials, and compares them.
pub fn generating_series_check(max_n: usize) -> Result<SeriesReport> {
    check_n(max_n)?;
    let order = max_n + 1;
    let published = published_series_numerator().over_one_minus_z_cubed(order)?;
    let derived_num = derived_series_numerator()?;
    let derived = derived_num.over_one_minus_z_cubed(order)?;
    let difference = published.checked_sub(&derived)?;
    let expected_diff = DSeries::from_monomials(&[(2, 2, 3)])?;

    let mut rows = Vec::new();
    for n in 4..=max_n {
        let predicted = predicted_degree_polynomial(n)?;
        rows.push(SeriesRow {
            n,
            derived_agrees: derived.coeff(n) == predicted,
            published_agrees: published.coeff(n) == predicted,
            derived: derived.coeff(n),
            published: published.coeff(n),
            predicted,
        });
    }
    Ok(SeriesReport {
        max_n,
        published_numerator: published_series_numerator().display(),
        derived_numerator: derived_num.display(),
        difference: difference.display(),
        derived_matches_predicted: rows.iter().all(|r| r.derived_agrees),
        difference_is_2d2z3: difference == expected_diff,
        difference_series: difference,
        rows,
    })
}

impl fmt::Display for SeriesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "published numerator: [{}] / (1 - z)^3",
            self.published_numerator
        )?;
        writeln!(
            f,
            "derived numerator:   [{}] / (1 - z)^3",
            self.derived_numerator
        )?;
        writeln!(f, "published - derived: {}", self.difference)?;
        writeln!(
            f,
            "{:<4} {:<34} {:<9} published",
            "n", "closed form", "derived"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<4} {:<34} {:<9} {}",
                r.n,
                r.predicted.display("d"),
                if r.derived_agrees { "ok" } else { "MISMATCH" },
                if r.published_agrees { "ok" } else { "MISMATCH" },
            )?;
        }
        writeln!(
            f,
            "difference is exactly 2d^2 z^3: {}",
            if self.difference_is_2d2z3 {
                "yes"
            } else {
                "no"
            }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> FamilyBudget {
        FamilyBudget::default()
    }

    #[test]
    fn permutations() {
        assert_eq!(family_permutation(4).unwrap().to_string(), "4231");
        assert_eq!(family_permutation(5).unwrap().to_string(), "51342");
        assert_eq!(family_permutation(6).unwrap().to_string(), "612453");
        assert_eq!(family_permutation(3), Err(Error::FamilyRange(3)));
    }

    #[test]
    fn structural_properties_up_to_20() {
        for n in 4..=20 {
            assert!(structural_checks(n).unwrap().all(), "n = {n}");
        }
    }

    #[test]
    fn orders() {
        assert_eq!(predicted_order(4).unwrap(), 6);
        assert_eq!(predicted_order(5).unwrap(), 10);
        assert_eq!(predicted_order(9).unwrap(), 36);
        assert_eq!(family_words(9, budget()).unwrap().len(), 36);
        assert!(predicted_order(2).is_err());
    }

    #[test]
    fn degree_polynomials() {
        assert_eq!(
            predicted_degree_polynomial(4).unwrap().coeffs(),
            &[0, 2, 2, 2]
        );
        assert_eq!(
            predicted_degree_polynomial(5).unwrap().coeffs(),
            &[0, 2, 3, 4, 1]
        );
        assert_eq!(
            predicted_degree_polynomial(7).unwrap().coeffs(),
            &[0, 2, 5, 8, 6]
        );
        assert_eq!(
            actual_degree_polynomial(7, budget()).unwrap().coeffs(),
            &[0, 2, 5, 8, 6]
        );
        assert_eq!(
            actual_degree_polynomial(6, budget()).unwrap().coeffs(),
            &[0, 2, 4, 6, 3]
        );
        for n in 4..=12 {
            let p = predicted_degree_polynomial(n).unwrap();
            assert_eq!(p.eval(1).unwrap(), c2(n));
            let weighted: i64 = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| i as i64 * c)
                .sum();
            assert_eq!(weighted, 4 * c2(n - 1));
        }
    }

    #[test]
    fn four_cycle_counts() {
        assert_eq!(actual_four_cycles(4, budget()).unwrap(), 1);
        assert_eq!(actual_four_cycles(5, budget()).unwrap(), 3);
        assert_eq!(actual_four_cycles(6, budget()).unwrap(), 6);
        let g = family_graph(4, budget()).unwrap();
        for (a, b) in [
            ("13231", "31231"),
            ("31231", "31213"),
            ("31213", "13213"),
            ("13213", "13231"),
        ] {
            assert!(g.has_edge(a, b));
        }
    }

    #[test]
    fn corners() {
        let c = corner_words(4).unwrap();
        assert_eq!(
            (c.top.as_str(), c.bottom.as_str(), c.middle.as_str()),
            ("32123", "12321", "13213")
        );
        let c = corner_words(5).unwrap();
        assert_eq!(
            (c.top.as_str(), c.bottom.as_str(), c.middle.as_str()),
            ("432134", "234321", "243214")
        );
        for n in 4..=9 {
            let g = family_graph(n, budget()).unwrap();
            let c = corner_words(n).unwrap();
            assert_eq!(
                (g.degree(&c.top), g.degree(&c.bottom), g.degree(&c.middle)),
                (1, 1, 2),
                "n = {n}"
            );
        }
    }

    #[test]
    fn braid_vertices() {
        assert_eq!(braid_vertex_count(4, budget()).unwrap(), 4);
        let g4: Vec<String> = family_words(4, budget())
            .unwrap()
            .iter()
            .filter(|w| words::braid_move_count(w) > 0)
            .map(|w| words::word_key(w, 4))
            .collect();
        assert_eq!(g4, ["12321", "13231", "31213", "32123"]);
        assert_eq!(braid_vertex_count(5, budget()).unwrap(), 6);
        assert_eq!(braid_vertex_count(6, budget()).unwrap(), 8);
    }

    #[test]
    fn reverse_lengths() {
        let r = reverse_length_identity(5).unwrap();
        assert_eq!(
            (r.length, r.reverse_length, r.total, r.holds),
            (6, 4, 10, true)
        );
        let r = reverse_length_identity(4).unwrap();
        assert_eq!((r.length, r.reverse_length), (5, 1));
        let r = reverse_length_identity(8).unwrap();
        assert_eq!((r.length, r.reverse_length, r.holds), (9, 19, true));
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            verify_family(10, budget()),
            Err(Error::FamilyBound { n: 10, max: 9 })
        );
        assert!(verify_family(10, FamilyBudget { max_n: 10 }).unwrap().pass);
    }

    #[test]
    fn reports_pass() {
        for n in 4..=9 {
            let r = verify_family(n, budget()).unwrap();
            assert!(r.pass, "{r}");
        }
        let r = verify_family(5, budget()).unwrap();
        assert_eq!(r.order_actual, 10);
        assert_eq!(r.degree_poly_actual.display("d"), "2d + 3d^2 + 4d^3 + d^4");
    }

    #[test]
    fn series_expansion() {
        let rep = generating_series_check(12).unwrap();
        assert!(rep.derived_matches_predicted);
        assert!(rep.difference_is_2d2z3, "{}", rep.difference);
        assert_eq!(rep.rows[0].published.coeffs(), &[0, 2, 2, 2]);
        assert_eq!(rep.rows[1].derived.coeffs(), &[0, 2, 3, 4, 1]);
        // Published numerator = derived numerator + 2d²z³(1 - z)³.
        let extra =
            DSeries::from_monomials(&[(2, 2, 3), (-6, 2, 4), (6, 2, 5), (-2, 2, 6)]).unwrap();
        let gap = published_series_numerator()
            .checked_sub(&derived_series_numerator().unwrap())
            .unwrap();
        assert_eq!(gap, extra);
    }

    #[test]
    fn termwise_series_oracle() {
        // Direct geometric-series expansion of z^4 · P-coefficients, checked against
        // the rational expansion of the derived numerator.
        let direct = termwise_series(12).unwrap();
        let rational = derived_series_numerator()
            .unwrap()
            .over_one_minus_z_cubed(13)
            .unwrap();
        assert_eq!(direct, rational);
    }
}
