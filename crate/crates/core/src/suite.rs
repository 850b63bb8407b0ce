//! The one-shot verification suite behind `verify all`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::chain::{brute_confirm, isomorphism_chain};
use crate::error::Result;
use crate::family::{self, FamilyBudget};
use crate::perm::{all_permutations, poincare_polynomial, Permutation};
use crate::poly::IntPolynomial;
use crate::simplex;
use crate::tableaux;
use crate::words;

/// Default upper end of the enumerated `n` ranges.
pub const DEFAULT_SUITE_MAX_N: usize = 9;

/// Vertex bound used by the brute-force isomorphism oracle in the suite. The
/// `n = 6` graphs have 15 vertices.
pub const SUITE_ISO_BOUND: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{mark}] {:>2}. {:<26} {}",
            self.id, self.name, self.detail
        )
    }
}

type Check = fn(usize) -> Result<(bool, String)>;

const CHECKS: [(&str, Check); 11] = [
    ("exact word sets", exact_sets),
    ("r(654231) = 64064", big_count),
    ("family order", family_order),
    ("degree polynomial", degree_polynomial),
    ("generating series audit", series_audit),
    ("word/tableau bijection", bijection),
    ("tableau poset", poset),
    ("simplex and q-binomials", simplex_suite),
    ("isomorphism chain", chain),
    ("braid vertices", braid_vertices),
    ("background checks", background),
];

/// Runs every check with `n` ranges truncated at `max_n`. Errors count as
/// failures.
pub fn run_all(max_n: usize) -> Vec<Outcome> {
    CHECKS
        .iter()
        .enumerate()
        .map(|(i, (name, check))| {
            let (pass, detail) = match check(max_n) {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            Outcome {
                id: i + 1,
                name,
                pass,
                detail,
            }
        })
        .collect()
}

fn keys(set: &BTreeSet<words::Word>, n: usize) -> BTreeSet<String> {
    set.iter().map(|w| words::word_key(w, n)).collect()
}

fn str_set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn upto(max_n: usize, cap: usize) -> std::ops::RangeInclusive<usize> {
    4..=max_n.min(cap)
}

fn exact_sets(_: usize) -> Result<(bool, String)> {
    let a: Permutation = "35124".parse()?;
    let b: Permutation = "4231".parse()?;
    let ra = keys(&words::enumerate_reduced_words(&a), 5);
    let rb = keys(&words::enumerate_reduced_words(&b), 4);
    let ok = ra == str_set(&["42312", "24312", "42132", "24132", "21432"])
        && rb == str_set(&["32123", "31213", "13213", "31231", "13231", "12321"]);
    Ok((
        ok,
        format!("|R(35124)| = {}, |R(4231)| = {}", ra.len(), rb.len()),
    ))
}

fn big_count(_: usize) -> Result<(bool, String)> {
    let w: Permutation = "654231".parse()?;
    let listed = words::enumerate_reduced_words_capped(&w, words::DEFAULT_WORD_CAP)?.len() as u64;
    let counted = words::count_reduced_words(&w)?;
    Ok((
        listed == 64064 && counted == 64064,
        format!("enumerated {listed}, recursion {counted}"),
    ))
}

fn family_order(max_n: usize) -> Result<(bool, String)> {
    let mut ok = true;
    let budget = FamilyBudget { max_n };
    for n in upto(max_n, 9) {
        ok &= family::family_words(n, budget)?.len() as u64 == (n * (n - 1) / 2) as u64;
    }
    Ok((ok, format!("n = 4..={}", max_n.min(9))))
}

fn degree_polynomial(max_n: usize) -> Result<(bool, String)> {
    let mut ok = true;
    let budget = FamilyBudget { max_n };
    for n in upto(max_n, 9) {
        let g = family::family_graph(n, budget)?;
        ok &= g.degree_histogram() == family::predicted_degree_polynomial(n)?;
        ok &= g.degree_sum() as u64 == family::predicted_degree_sum(n)?;
        if n <= 8 {
            ok &= g.count_4cycles() as u64 == family::predicted_four_cycles(n)?;
        }
    }
    Ok((
        ok,
        format!(
            "histogram, degree sum, 4-cycles for n = 4..={}",
            max_n.min(9)
        ),
    ))
}

fn series_audit(_: usize) -> Result<(bool, String)> {
    let r = family::generating_series_check(12)?;
    Ok((
        r.difference_is_2d2z3 && r.derived_matches_predicted,
        format!("published - derived = {}", r.difference),
    ))
}

fn bijection(max_n: usize) -> Result<(bool, String)> {
    let mut ok = true;
    for n in upto(max_n, 9) {
        ok &= tableaux::check_bijection(n)?.pass;
    }
    for (word, tab) in [
        ("234321", "345|2|1"),
        ("432134", "123|5|4"),
        ("423241", "135|4|2"),
    ] {
        let t: tableaux::RecordingTableau = tab.parse()?;
        ok &= tableaux::word_to_tableau(&words::parse_word(word)?, 5)? == t;
        ok &= words::word_key(&tableaux::tableau_to_word(&t)?, 5) == word;
    }
    Ok((ok, format!("n = 4..={}, 3 anchor pairs", max_n.min(9))))
}

fn poset(max_n: usize) -> Result<(bool, String)> {
    let mut ok = true;
    for n in upto(max_n, 7) {
        // Errors if the two cover criteria ever disagree.
        tableaux::tableau_cover_pairs(n)?;
    }
    for n in upto(max_n, 9) {
        let readings: Vec<Permutation> = tableaux::readings(n)?.into_keys().collect();
        let min = readings.iter().min_by_key(|w| w.length()).unwrap();
        let max = readings.iter().max_by_key(|w| w.length()).unwrap();
        let mut top = vec![n - 1, n];
        top.extend(1..=n - 2);
        ok &= min.is_identity() && max.values() == top;
        ok &= tableaux::rank_polynomial(n)? == simplex::gaussian_binomial_k2(n - 2)?;
    }
    Ok((
        ok,
        format!(
            "covers n = 4..={}, ranks n = 4..={}",
            max_n.min(7),
            max_n.min(9)
        ),
    ))
}

fn simplex_suite(_: usize) -> Result<(bool, String)> {
    let mut ok = true;
    for k in 0..=10 {
        ok &= simplex::enumerate_lattice_points(k).len() as u64 == simplex::ehrhart(k);
        simplex::gaussian_binomial_k2(k)?;
        ok &= simplex::lattice_length_check(k)?;
    }
    ok &= simplex::product_expansion_check(10)?;
    let g = simplex::build_lattice_graph(3)?;
    let fig: BTreeSet<(String, String)> = [
        ("(0,2)", "(1,1)"),
        ("(1,1)", "(2,0)"),
        ("(1,0)", "(2,0)"),
        ("(0,0)", "(1,0)"),
        ("(0,3)", "(1,2)"),
        ("(1,2)", "(2,1)"),
        ("(2,1)", "(3,0)"),
        ("(2,0)", "(3,0)"),
        ("(0,1)", "(1,0)"),
        ("(0,1)", "(1,1)"),
        ("(0,2)", "(1,2)"),
        ("(1,1)", "(2,1)"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    ok &= g.edge_set() == fig;
    Ok((ok, "k = 0..=10, 3Δ₂ has 12 edges".to_string()))
}

fn chain(max_n: usize) -> Result<(bool, String)> {
    let mut ok = true;
    for n in upto(max_n, 8) {
        ok &= isomorphism_chain(n, FamilyBudget { max_n })?.report.pass;
    }
    for n in upto(max_n, 6) {
        ok &= brute_confirm(n, SUITE_ISO_BOUND)?;
    }
    let pts: Vec<String> = simplex::enumerate_lattice_points(3)
        .iter()
        .rev()
        .map(ToString::to_string)
        .collect();
    let lattice = [
        "(0,3)", "(1,2)", "(0,2)", "(2,1)", "(1,1)", "(3,0)", "(0,1)", "(2,0)", "(1,0)", "(0,0)",
    ];
    let parts = [
        "(3,3)", "(3,2)", "(2,2)", "(3,1)", "(2,1)", "(3)", "(1,1)", "(2)", "(1)", "∅",
    ];
    let perms = [
        "45123", "35124", "34125", "25134", "24135", "15234", "23145", "14235", "13245", "12345",
    ];
    ok &= str_set(&lattice) == pts.into_iter().collect::<BTreeSet<_>>();
    for i in 0..10 {
        let (a1, a2) = parse_point(lattice[i]);
        let p = simplex::LatticePoint::new(a1, a2, 3)?;
        let lambda = simplex::fitted_partition(&p);
        ok &= lambda.to_string() == parts[i];
        ok &= tableaux::grassmannian_from_partition(&lambda, 5)?.to_string() == perms[i];
    }
    Ok((
        ok,
        format!(
            "links n = 4..={}, brute n = 4..={}",
            max_n.min(8),
            max_n.min(6)
        ),
    ))
}

fn parse_point(s: &str) -> (usize, usize) {
    let inner = s.trim_matches(|c| c == '(' || c == ')');
    let (a, b) = inner.split_once(',').expect("point literal");
    (a.parse().unwrap(), b.parse().unwrap())
}

fn braid_vertices(max_n: usize) -> Result<(bool, String)> {
    let mut ok = true;
    for n in upto(max_n, 9) {
        ok &= family::braid_vertex_count(n, FamilyBudget { max_n })? == 2 * (n as u64 - 2);
    }
    Ok((ok, format!("n = 4..={}", max_n.min(9))))
}

fn background(_: usize) -> Result<(bool, String)> {
    let mut ok = poincare_polynomial(4)? == IntPolynomial::new(vec![1, 3, 5, 6, 5, 3, 1]);
    for n in 1..=6 {
        let mut hist = vec![0i64; n * (n - 1) / 2 + 1];
        for w in all_permutations(n) {
            hist[w.length()] += 1;
        }
        ok &= poincare_polynomial(n)? == IntPolynomial::new(hist);
    }
    for (n, expected) in [(3, 2u64), (4, 16), (5, 768)] {
        let w0 = Permutation::longest_element(n)?;
        ok &= words::r_longest(n)? == expected
            && words::enumerate_reduced_words(&w0).len() as u64 == expected;
    }
    for n in 4..=20 {
        ok &= family::structural_checks(n)?.all();
    }
    Ok((
        ok,
        "Poincaré n ≤ 6, r(w₀) n = 3..5, structure n = 4..20".to_string(),
    ))
}
