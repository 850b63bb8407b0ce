//! Acceptance suite. Runs without the test harness so that every criterion
//! prints exactly one PASS/FAIL line; the process fails if any criterion does.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rwgraph::chain::{brute_confirm, isomorphism_chain};
use rwgraph::family::{self, FamilyBudget};
use rwgraph::graph::LabeledGraph;
use rwgraph::perm::{all_permutations, poincare_polynomial};
use rwgraph::simplex::{self, LatticePoint};
use rwgraph::tableaux::{self, RecordingTableau};
use rwgraph::words::{self, Word};
use rwgraph::{IntPolynomial, Partition, Permutation};

type Criterion = fn() -> String;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 11] = [
        ("exact reduced-word sets", c01_exact_sets),
        ("r(654231) = 64064", c02_big_count),
        ("family order n(n-1)/2", c03_order),
        ("degree polynomial and 4-cycles", c04_degrees),
        ("generating series audit", c05_series),
        ("word/tableau bijection", c06_bijection),
        ("tableau poset", c07_poset),
        ("simplex and q-binomials", c08_simplex),
        ("isomorphism chain", c09_chain),
        ("braid vertices 2(n-2)", c10_braid),
        ("background checks", c11_background),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS  {:>2}  {name:<32} {secs:>7.3}s  {detail}", i + 1),
            Err(payload) => {
                failed += 1;
                let msg = payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL  {:>2}  {name:<32} {secs:>7.3}s  {msg}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

// ---------------------------------------------------------------- helpers

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn strings(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn edge_set(pairs: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    pairs
        .iter()
        .map(|&(a, b)| {
            if a < b {
                (a.into(), b.into())
            } else {
                (b.into(), a.into())
            }
        })
        .collect()
}

fn budget() -> FamilyBudget {
    FamilyBudget { max_n: 9 }
}

/// Every word of length `len` over `1..n` whose left-to-right product is `w`,
/// by odometer over all `(n-1)^len` words.
fn brute_reduced_words(w: &Permutation) -> BTreeSet<String> {
    let n = w.n();
    let len = w.length();
    let mut out = BTreeSet::new();
    let mut word = vec![1usize; len];
    loop {
        let mut v: Vec<usize> = (1..=n).collect();
        for &a in &word {
            v.swap(a - 1, a);
        }
        if v == w.values() {
            out.insert(word.iter().map(|a| a.to_string()).collect::<String>());
        }
        let mut i = 0;
        loop {
            if i == len {
                return out;
            }
            word[i] += 1;
            if word[i] < n {
                break;
            }
            word[i] = 1;
            i += 1;
        }
    }
}

fn binom2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// Unordered 4-cycles by scanning every 4-set and its three cyclic orders.
fn four_cycles_by_quadruples(g: &LabeledGraph) -> usize {
    let v: Vec<&str> = g.vertices().collect();
    let e = |a: usize, b: usize| g.has_edge(v[a], v[b]);
    let mut count = 0;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            for c in b + 1..v.len() {
                for d in c + 1..v.len() {
                    count += usize::from(e(a, b) && e(b, c) && e(c, d) && e(d, a));
                    count += usize::from(e(a, b) && e(b, d) && e(d, c) && e(c, a));
                    count += usize::from(e(a, c) && e(c, b) && e(b, d) && e(d, a));
                }
            }
        }
    }
    count
}

/// Gaussian binomial `[m, 2]_q` by the q-Pascal rule, as plain coefficient lists.
fn q_pascal_2(m: usize) -> Vec<i64> {
    let add = |a: &[i64], b: &[i64], shift: usize| {
        let mut out = vec![0i64; a.len().max(b.len() + shift)];
        for (i, &x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, &x) in b.iter().enumerate() {
            out[i + shift] += x;
        }
        out
    };
    let mut row: Vec<Vec<i64>> = vec![vec![1]];
    for size in 1..=m {
        let mut next = vec![vec![1i64]; size + 1];
        for j in 1..size {
            next[j] = add(&row[j - 1], &row[j], j);
        }
        row = next;
    }
    let mut c = row[2].clone();
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

// ---------------------------------------------------------------- criteria

fn c01_exact_sets() -> String {
    let expected_a = strings(&["42312", "24312", "42132", "24132", "21432"]);
    let expected_b = strings(&["32123", "31213", "13213", "31231", "13231", "12321"]);
    for (p, n, expected) in [("35124", 5, &expected_a), ("4231", 4, &expected_b)] {
        let w = perm(p);
        let got: BTreeSet<String> = words::enumerate_reduced_words(&w)
            .iter()
            .map(|x| words::word_key(x, n))
            .collect();
        assert_eq!(&got, expected, "R({p})");
        assert_eq!(&brute_reduced_words(&w), expected, "odometer R({p})");
    }
    // Move graphs as drawn.
    let g = words::build_word_graph(&perm("35124")).unwrap();
    assert_eq!(
        g.edge_set(),
        edge_set(&[
            ("21432", "24132"),
            ("24132", "24312"),
            ("24312", "42312"),
            ("42312", "42132"),
            ("42132", "24132")
        ])
    );
    let g = words::build_word_graph(&perm("4231")).unwrap();
    assert_eq!(
        g.edge_set(),
        edge_set(&[
            ("13231", "13213"),
            ("32123", "31213"),
            ("13231", "31231"),
            ("31231", "31213"),
            ("31213", "13213"),
            ("12321", "13231"),
        ])
    );
    "R(35124) 5 words, R(4231) 6 words, both graphs as drawn".into()
}

fn c02_big_count() -> String {
    let w = perm("654231");
    let start = Instant::now();
    let listed = words::enumerate_reduced_words(&w);
    assert_eq!(listed.len(), 64064);
    assert!(listed.iter().all(|x| words::evaluate(x, 6).unwrap() == w));
    let closure = words::move_closure(&words::some_reduced_word(&w), 6).unwrap();
    assert_eq!(closure.len(), 64064, "move closure");
    assert!(start.elapsed().as_secs() <= 30, "over the 30 s budget");
    "recursion and move closure both give 64064".into()
}

fn c03_order() -> String {
    for n in 4..=9 {
        let w = family::family_permutation(n).unwrap();
        let listed = words::enumerate_reduced_words(&w);
        assert_eq!(listed.len(), n * (n - 1) / 2, "n = {n}");
        let [top, _, _] = family::corner_word_letters(n).unwrap();
        assert_eq!(
            words::move_closure(&top, n).unwrap(),
            listed,
            "closure n = {n}"
        );
    }
    "n = 4..=9".into()
}

fn c04_degrees() -> String {
    for n in 4..=9 {
        let g = family::family_graph(n, budget()).unwrap();
        let mut hist = BTreeMap::new();
        for v in g.vertices() {
            *hist.entry(g.neighbors(v).len()).or_insert(0usize) += 1;
        }
        let expected = BTreeMap::from([(1, 2), (2, n - 2), (3, 2 * n - 6), (4, binom2(n - 3))]);
        let expected: BTreeMap<usize, usize> =
            expected.into_iter().filter(|&(_, c)| c > 0).collect();
        assert_eq!(hist, expected, "histogram n = {n}");
        assert_eq!(
            g.degree_histogram(),
            family::predicted_degree_polynomial(n).unwrap()
        );
        assert_eq!(2 * g.edge_count(), 4 * binom2(n - 1), "degree sum n = {n}");
        assert_eq!(g.degree_sum(), 4 * binom2(n - 1));
        if n <= 8 {
            let quads = four_cycles_by_quadruples(&g);
            assert_eq!(quads, binom2(n - 2), "4-cycles n = {n}");
            assert_eq!(g.count_4cycles(), quads);
        }
    }
    "histogram and degree sum n = 4..=9, 4-cycles n = 4..=8".into()
}

/// Power series in `z` with coefficients polynomial in `d`: `s[z][d]`.
type Series2 = Vec<Vec<i64>>;

fn series_from_monomials(terms: &[(i64, usize, usize)], zlen: usize) -> Series2 {
    let mut s = vec![vec![0i64; 5]; zlen];
    for &(c, dp, zp) in terms {
        if zp < zlen {
            s[zp][dp] += c;
        }
    }
    s
}

/// `s / (1 - z)^3` by repeated division by `(1 - z)`, i.e. three prefix sums.
fn divide_by_one_minus_z_cubed(mut s: Series2) -> Series2 {
    for _ in 0..3 {
        for z in 1..s.len() {
            let prev = s[z - 1].clone();
            for (c, p) in s[z].iter_mut().zip(prev) {
                *c += p;
            }
        }
    }
    s
}

fn c05_series() -> String {
    let zlen = 13;
    // Printed numerator times z³.
    let printed = series_from_monomials(
        &[
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
        ],
        zlen,
    );
    let published = divide_by_one_minus_z_cubed(printed);
    let mut termwise = vec![vec![0i64; 5]; zlen];
    for (n, row) in termwise.iter_mut().enumerate().skip(4) {
        let n = n as i64;
        *row = vec![0, 2, n - 2, 2 * n - 6, (n - 3) * (n - 4) / 2];
    }
    for z in 0..zlen {
        let diff: Vec<i64> = (0..5).map(|d| published[z][d] - termwise[z][d]).collect();
        let expected = if z == 3 {
            vec![0, 0, 2, 0, 0]
        } else {
            vec![0; 5]
        };
        assert_eq!(diff, expected, "z^{z}");
    }
    let report = family::generating_series_check(12).unwrap();
    assert!(report.difference_is_2d2z3);
    assert!(report.derived_matches_predicted);
    for row in &report.rows {
        assert_eq!(
            row.derived.coeffs(),
            IntPolynomial::new(termwise[row.n].clone()).coeffs()
        );
    }
    format!(
        "published - derived = {}, derived matches n = 4..=12",
        report.difference
    )
}

fn c06_bijection() -> String {
    for n in 4..=9 {
        let all = family::family_words(n, budget()).unwrap();
        let mut expected = BTreeSet::new();
        for hi in 1..=n {
            for lo in 1..hi {
                let row: Vec<usize> = (1..=n).filter(|&v| v != hi && v != lo).collect();
                expected.insert(RecordingTableau::new(row, hi, lo).unwrap());
            }
        }
        let mut image = BTreeSet::new();
        for w in &all {
            let t = tableaux::word_to_tableau(w, n).unwrap();
            assert_eq!(
                &tableaux::tableau_to_word_in(&t, &all).unwrap(),
                w,
                "round trip"
            );
            image.insert(t);
        }
        assert_eq!(image.len(), all.len(), "injective n = {n}");
        assert_eq!(image, expected, "onto n = {n}");
    }
    for (word, tab) in [
        ("234321", "345|2|1"),
        ("432134", "123|5|4"),
        ("423241", "135|4|2"),
    ] {
        let t: RecordingTableau = tab.parse().unwrap();
        assert_eq!(
            tableaux::word_to_tableau(&words::parse_word(word).unwrap(), 5).unwrap(),
            t
        );
        assert_eq!(
            words::word_key(&tableaux::tableau_to_word(&t).unwrap(), 5),
            word
        );
    }
    "n = 4..=9 bijective, anchors reproduced".into()
}

fn c07_poset() -> String {
    for n in 4..=7 {
        let all = tableaux::enumerate_recording(n).unwrap();
        let leq = |a: &RecordingTableau, b: &RecordingTableau| tableaux::tableau_leq(a, b).unwrap();
        let lt = |a: &RecordingTableau, b: &RecordingTableau| a != b && leq(a, b);
        let mut by_def = BTreeSet::new();
        let mut by_len = BTreeSet::new();
        for a in &all {
            for b in &all {
                if lt(a, b) && !all.iter().any(|c| lt(a, c) && lt(c, b)) {
                    by_def.insert((a.to_string(), b.to_string()));
                }
                if leq(a, b) && tableaux::rank(b) == tableaux::rank(a) + 1 {
                    by_len.insert((a.to_string(), b.to_string()));
                }
            }
        }
        assert_eq!(by_def, by_len, "n = {n}");
        let lib: BTreeSet<(String, String)> = tableaux::tableau_cover_pairs(n)
            .unwrap()
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        assert_eq!(lib, by_def);
    }
    for n in 4..=9 {
        let readings: Vec<Permutation> = tableaux::readings(n).unwrap().into_keys().collect();
        let min_len = readings.iter().map(Permutation::length).min().unwrap();
        let max_len = readings.iter().map(Permutation::length).max().unwrap();
        let mins: Vec<_> = readings.iter().filter(|w| w.length() == min_len).collect();
        let maxs: Vec<_> = readings.iter().filter(|w| w.length() == max_len).collect();
        let mut top = vec![n - 1, n];
        top.extend(1..=n - 2);
        assert_eq!(mins.len(), 1);
        assert_eq!(maxs.len(), 1);
        assert_eq!(mins[0].values(), (1..=n).collect::<Vec<_>>());
        assert_eq!(maxs[0].values(), top);
        assert_eq!(
            tableaux::rank_polynomial(n).unwrap().coeffs(),
            q_pascal_2(n),
            "n = {n}"
        );
    }
    let h4 = tableaux::build_reading_hasse(4).unwrap();
    assert_eq!(
        h4.edge_set(),
        edge_set(&[
            ("1324", "1423"),
            ("3412", "2413"),
            ("1324", "2314"),
            ("2314", "2413"),
            ("2413", "1423"),
            ("1234", "1324"),
        ])
    );
    "covers agree n = 4..=7, extremes and rank polynomial n = 4..=9".into()
}

fn c08_simplex() -> String {
    for k in 0..=10 {
        let mut brute = 0u64;
        let mut slices = vec![0i64; 2 * k + 1];
        for a1 in 0..=k {
            for a2 in 0..=k {
                if a1 + a2 <= k {
                    brute += 1;
                    slices[a1 + 2 * a2] += 1;
                }
            }
        }
        assert_eq!(simplex::ehrhart(k), brute);
        assert_eq!(simplex::enumerate_lattice_points(k).len() as u64, brute);
        let g = simplex::gaussian_binomial_k2(k).unwrap();
        assert_eq!(g.coeffs(), slices.as_slice(), "slices k = {k}");
        assert_eq!(simplex::q_binomial_closed(k).unwrap(), g);
        assert_eq!(simplex::hilbert_series(k + 2).unwrap(), g);
        assert_eq!(g.coeffs(), q_pascal_2(k + 2).as_slice());
        assert!(simplex::lattice_length_check(k).unwrap());
        assert!(simplex::lattice_rank_check(k).unwrap());
    }
    assert!(simplex::product_expansion_check(10).unwrap());
    let g = simplex::build_lattice_graph(3).unwrap();
    assert_eq!(
        g.edge_set(),
        edge_set(&[
            ("(0,2)", "(1,1)"),
            ("(1,1)", "(2,0)"),
            ("(2,0)", "(1,0)"),
            ("(1,0)", "(0,0)"),
            ("(0,3)", "(1,2)"),
            ("(1,2)", "(2,1)"),
            ("(2,1)", "(3,0)"),
            ("(3,0)", "(2,0)"),
            ("(1,0)", "(0,1)"),
            ("(0,1)", "(1,1)"),
            ("(0,2)", "(1,2)"),
            ("(1,1)", "(2,1)"),
        ])
    );
    let y = simplex::young_lattice_rectangle(3).unwrap();
    assert_eq!(
        y.edge_set(),
        edge_set(&[
            ("∅", "(1)"),
            ("(1)", "(1,1)"),
            ("(1,1)", "(2,1)"),
            ("(2,1)", "(2,2)"),
            ("(2,2)", "(3,2)"),
            ("(3,2)", "(3,3)"),
            ("(1)", "(2)"),
            ("(2)", "(3)"),
            ("(3)", "(3,1)"),
            ("(3,1)", "(3,2)"),
            ("(2)", "(2,1)"),
            ("(2,1)", "(3,1)"),
        ])
    );
    "k = 0..=10, lattice graph of 3Δ₂ has its 12 edges".into()
}

fn c09_chain() -> String {
    for n in 4..=8 {
        let chain = isomorphism_chain(n, budget()).unwrap();
        assert!(chain.report.pass, "n = {n}\n{}", chain.report);
        assert!(chain.report.links.iter().all(|l| l.holds));
    }
    for n in 4..=6 {
        assert!(brute_confirm(n, 16).unwrap(), "brute n = {n}");
    }
    // The five aligned vertex lists for n = 5.
    let points = [
        (0, 3),
        (1, 2),
        (0, 2),
        (2, 1),
        (1, 1),
        (3, 0),
        (0, 1),
        (2, 0),
        (1, 0),
        (0, 0),
    ];
    let parts = [
        "(3,3)", "(3,2)", "(2,2)", "(3,1)", "(2,1)", "(3)", "(1,1)", "(2)", "(1)", "∅",
    ];
    let perms = [
        "45123", "35124", "34125", "25134", "24135", "15234", "23145", "14235", "13245", "12345",
    ];
    let tabs = [
        "123|5|4", "124|5|3", "125|4|3", "134|5|2", "135|4|2", "234|5|1", "145|3|2", "235|4|1",
        "245|3|1", "345|2|1",
    ];
    let word_list = [
        "432134", "432314", "432341", "423214", "423241", "243214", "423421", "243241", "243421",
        "234321",
    ];
    let listed: BTreeSet<(usize, usize)> = simplex::enumerate_lattice_points(3)
        .iter()
        .map(|p| (p.a1(), p.a2()))
        .collect();
    assert_eq!(listed, points.iter().copied().collect());
    let chain = isomorphism_chain(5, budget()).unwrap();
    let links = &chain.report.links;
    for i in 0..10 {
        let p = LatticePoint::new(points[i].0, points[i].1, 3).unwrap();
        let lambda = simplex::fitted_partition(&p);
        assert_eq!(lambda.to_string(), parts[i]);
        assert_eq!(lambda, parts[i].parse::<Partition>().unwrap());
        let w = tableaux::grassmannian_from_partition(&lambda, 5).unwrap();
        assert_eq!(w.to_string(), perms[i]);
        assert_eq!(links[0].map[word_list[i]], tabs[i]);
        assert_eq!(links[1].map[tabs[i]], perms[i]);
        assert_eq!(links[2].map[perms[i]], parts[i]);
        assert_eq!(links[3].map[parts[i]], p.to_string());
    }
    "links n = 4..=8, brute oracle n = 4..=6, n = 5 lists aligned".into()
}

fn has_braid(w: &Word) -> bool {
    w.windows(3)
        .any(|t| t[0] == t[2] && t[0].abs_diff(t[1]) == 1)
}

fn c10_braid() -> String {
    for n in 4..=9 {
        let all = family::family_words(n, budget()).unwrap();
        let count = all.iter().filter(|w| has_braid(w)).count();
        assert_eq!(count, 2 * (n - 2), "n = {n}");
        assert_eq!(
            family::braid_vertex_count(n, budget()).unwrap(),
            count as u64
        );
    }
    "n = 4..=9".into()
}

fn c11_background() -> String {
    assert_eq!(
        poincare_polynomial(4).unwrap().coeffs(),
        &[1, 3, 5, 6, 5, 3, 1]
    );
    for n in 1..=6 {
        let mut hist = vec![0i64; binom2(n) + 1];
        for w in all_permutations(n) {
            let inv = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| w.values()[i] > w.values()[j])
                .count();
            hist[inv] += 1;
        }
        assert_eq!(
            poincare_polynomial(n).unwrap().coeffs(),
            hist.as_slice(),
            "n = {n}"
        );
    }
    for (n, expected) in [(3, 2u64), (4, 16), (5, 768)] {
        assert_eq!(words::r_longest(n).unwrap(), expected);
        let w0 = Permutation::longest_element(n).unwrap();
        assert_eq!(words::enumerate_reduced_words(&w0).len() as u64, expected);
    }
    for n in 4..=20 {
        let w = family::family_permutation(n).unwrap();
        let v = w.values();
        let inv = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| v[i] > v[j])
            .count();
        assert_eq!(inv, n + 1, "length n = {n}");
        let descents: Vec<usize> = (1..n).filter(|&i| v[i - 1] > v[i]).collect();
        assert_eq!(descents, [1, n - 1], "descents n = {n}");
        let fixed: Vec<usize> = (1..=n).filter(|&i| v[i - 1] == i).collect();
        assert_eq!(fixed, [n - 2, n - 1]);
        assert_eq!(w.cycle_type().parts(), &[n - 2, 1, 1]);
        let rev: Vec<usize> = v.iter().rev().copied().collect();
        let rev_inv = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| rev[i] > rev[j])
            .count();
        assert_eq!(inv + rev_inv, binom2(n));
        assert!(family::structural_checks(n).unwrap().all());
    }
    // Strong Bruhat Hasse diagram of S4.
    let fig1 = edge_set(&[
        ("1234", "1243"),
        ("1234", "1324"),
        ("1234", "2134"),
        ("1243", "1423"),
        ("1243", "1342"),
        ("1243", "2143"),
        ("1324", "1423"),
        ("1324", "1342"),
        ("1324", "3124"),
        ("1324", "2314"),
        ("2134", "2143"),
        ("2134", "3124"),
        ("2134", "2314"),
        ("1423", "1432"),
        ("1423", "4123"),
        ("1423", "2413"),
        ("1342", "1432"),
        ("1342", "3142"),
        ("1342", "2341"),
        ("2143", "4123"),
        ("2143", "2413"),
        ("2143", "3142"),
        ("2143", "2341"),
        ("3124", "4123"),
        ("3124", "3142"),
        ("3124", "3214"),
        ("2314", "2413"),
        ("2314", "3214"),
        ("2314", "2341"),
        ("1432", "4132"),
        ("1432", "3412"),
        ("1432", "2431"),
        ("4123", "4132"),
        ("4123", "4213"),
        ("2413", "4213"),
        ("2413", "3412"),
        ("2413", "2431"),
        ("3142", "4132"),
        ("3142", "3412"),
        ("3142", "3241"),
        ("3214", "4213"),
        ("3214", "3412"),
        ("3214", "3241"),
        ("2341", "2431"),
        ("2341", "3241"),
        ("4132", "4312"),
        ("4132", "4231"),
        ("4213", "4312"),
        ("4213", "4231"),
        ("3412", "4312"),
        ("3412", "3421"),
        ("2431", "3421"),
        ("2431", "4231"),
        ("3241", "4231"),
        ("3241", "3421"),
        ("4312", "4321"),
        ("4231", "4321"),
        ("3421", "4321"),
    ]);
    let mut covers = BTreeSet::new();
    for w in all_permutations(4) {
        for up in w.bruhat_covers() {
            let (a, b) = (w.to_string(), up.to_string());
            covers.insert(if a < b { (a, b) } else { (b, a) });
        }
    }
    assert_eq!(covers, fig1);
    "Poincaré n ≤ 6, r(w₀) = 2, 16, 768, structure n = 4..=20, S4 Bruhat diagram".into()
}
