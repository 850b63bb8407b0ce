//! Row-strict tableaux of hook shape `(n-2, 1, 1)`, the recording tableaux
//! among them, their bijection with `R(ₙw)`, and the poset they form.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::family_permutation;
use crate::graph::{EdgeKind, LabeledGraph};
pub use crate::partition::Partition;
use crate::perm::Permutation;
use crate::poly::IntPolynomial;
use crate::words::{self, Word};

/// A bijective filling of the hook `(n-2, 1, 1)` with strictly increasing
/// first row. No condition on the first column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HookTableau {
    first_row: Vec<usize>,
    box2: usize,
    box3: usize,
}

impl HookTableau {
    pub fn new(first_row: Vec<usize>, box2: usize, box3: usize) -> Result<Self> {
        let n = first_row.len() + 2;
        if n < 4 {
            return Err(Error::InvalidTableau(format!(
                "first row needs at least 2 entries, got {}",
                first_row.len()
            )));
        }
        if first_row.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::InvalidTableau(format!(
                "first row {first_row:?} is not strictly increasing"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in first_row.iter().chain([&box2, &box3]) {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidTableau(format!(
                    "entries are not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(HookTableau {
            first_row,
            box2,
            box3,
        })
    }

    pub fn n(&self) -> usize {
        self.first_row.len() + 2
    }

    pub fn first_row(&self) -> &[usize] {
        &self.first_row
    }

    pub fn box2(&self) -> usize {
        self.box2
    }

    pub fn box3(&self) -> usize {
        self.box3
    }

    /// The first column strictly decreases downward.
    pub fn is_recording(&self) -> bool {
        self.box2 > self.box3
    }
}

fn write_tableau(f: &mut fmt::Formatter<'_>, t: &HookTableau) -> fmt::Result {
    let sep = if t.n() > 9 { "," } else { "" };
    let row: Vec<String> = t.first_row.iter().map(|v| v.to_string()).collect();
    write!(f, "{}|{}|{}", row.join(sep), t.box2, t.box3)
}

impl fmt::Display for HookTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tableau(f, self)
    }
}

impl FromStr for HookTableau {
    type Err = Error;

    /// `"345|2|1"`, or with a comma-separated first row when `n >= 10`.
    fn from_str(s: &str) -> Result<Self> {
        let pieces: Vec<&str> = s.trim().split('|').collect();
        let [row, b2, b3] = pieces[..] else {
            return Err(Error::Parse(format!(
                "tableau {s:?} needs the form row|box|box"
            )));
        };
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("tableau entry {t:?}: {e}")))
        };
        let first_row = if row.contains(',') {
            row.split(',').map(num).collect::<Result<Vec<_>>>()?
        } else {
            row.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("tableau entry {c:?} is not a digit")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        HookTableau::new(first_row, num(b2)?, num(b3)?)
    }
}

/// A hook tableau whose first column decreases: `box2 > box3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RecordingTableau(HookTableau);

impl RecordingTableau {
    pub fn new(first_row: Vec<usize>, box2: usize, box3: usize) -> Result<Self> {
        HookTableau::new(first_row, box2, box3)?.try_into()
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn first_row(&self) -> &[usize] {
        &self.0.first_row
    }

    pub fn box2(&self) -> usize {
        self.0.box2
    }

    pub fn box3(&self) -> usize {
        self.0.box3
    }

    pub fn as_hook(&self) -> &HookTableau {
        &self.0
    }
}

impl TryFrom<HookTableau> for RecordingTableau {
    type Error = Error;

    fn try_from(t: HookTableau) -> Result<Self> {
        if !t.is_recording() {
            return Err(Error::InvalidTableau(format!(
                "{t}: first column must decrease downward"
            )));
        }
        Ok(RecordingTableau(t))
    }
}

impl fmt::Display for RecordingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tableau(f, &self.0)
    }
}

impl FromStr for RecordingTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<HookTableau>()?.try_into()
    }
}

// Lexicographic on the serialized form.
impl Ord for RecordingTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_string().cmp(&other.to_string())
    }
}

impl PartialOrd for RecordingTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for RecordingTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::FamilyRange(n));
    }
    Ok(())
}

/// Every row-strict filling of the hook; `n(n-1)` of them.
pub fn enumerate_rst(n: usize) -> Result<Vec<HookTableau>> {
    check_n(n)?;
    let mut out = Vec::with_capacity(n * (n - 1));
    for box2 in 1..=n {
        for box3 in (1..=n).filter(|&b| b != box2) {
            let first_row = (1..=n).filter(|&v| v != box2 && v != box3).collect();
            out.push(HookTableau::new(first_row, box2, box3)?);
        }
    }
    out.sort_by_key(|t| t.to_string());
    Ok(out)
}

pub fn is_recording(first_row: &[usize], box2: usize, box3: usize) -> Result<bool> {
    Ok(HookTableau::new(first_row.to_vec(), box2, box3)?.is_recording())
}

/// The set `C_{n-2,1,1}`, sorted; `n(n-1)/2` tableaux.
pub fn enumerate_recording(n: usize) -> Result<Vec<RecordingTableau>> {
    let mut out: Vec<RecordingTableau> = enumerate_rst(n)?
        .into_iter()
        .filter(HookTableau::is_recording)
        .map(RecordingTableau)
        .collect();
    out.sort();
    Ok(out)
}

fn check_family_word(word: &[usize], n: usize) -> Result<()> {
    let target = family_permutation(n)?;
    if word.len() != target.length() || words::evaluate(word, n)? != target {
        return Err(Error::NotReduced(format!(
            "{} is not a reduced word of {target}",
            words::word_key(word, n)
        )));
    }
    Ok(())
}

/// First row records the descent positions of the word, the column its two
/// ascent positions with the larger one on top.
pub fn word_to_tableau(word: &[usize], n: usize) -> Result<RecordingTableau> {
    check_family_word(word, n)?;
    let first_row: Vec<usize> = words::word_descents(word).into_iter().collect();
    let asc: Vec<usize> = words::word_ascents(word).into_iter().collect();
    let [low, high] = asc[..] else {
        return Err(Error::BijectionFailure(format!(
            "{} has {} ascents",
            words::word_key(word, n),
            asc.len()
        )));
    };
    RecordingTableau::new(first_row, high, low)
}

/// The unique word of `candidates` whose descent and ascent positions match
/// `τ`.
pub fn tableau_to_word_in(t: &RecordingTableau, candidates: &BTreeSet<Word>) -> Result<Word> {
    let n = t.n();
    let descents: BTreeSet<usize> = t.first_row().iter().copied().collect();
    let ascents = BTreeSet::from([t.box2(), t.box3()]);
    let mut hits = candidates
        .iter()
        .filter(|w| words::word_descents(w) == descents && words::word_ascents(w) == ascents);
    match (hits.next(), hits.next()) {
        (Some(w), None) => Ok(w.clone()),
        (None, _) => Err(Error::BijectionFailure(format!(
            "no word of R({n}w) matches {t}"
        ))),
        (Some(a), Some(b)) => Err(Error::BijectionFailure(format!(
            "{t} matches both {} and {}",
            words::word_key(a, n),
            words::word_key(b, n)
        ))),
    }
}

pub fn tableau_to_word(t: &RecordingTableau) -> Result<Word> {
    let w = family_permutation(t.n())?;
    tableau_to_word_in(t, &words::enumerate_reduced_words(&w))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub n: usize,
    pub words: usize,
    pub tableaux: usize,
    pub injective: bool,
    pub round_trip: bool,
    pub pass: bool,
}

/// Checks that `word_to_tableau` is a bijection onto `C_{n-2,1,1}` with
/// `tableau_to_word` as inverse.
pub fn check_bijection(n: usize) -> Result<BijectionReport> {
    let all = words::enumerate_reduced_words(&family_permutation(n)?);
    let tableaux = enumerate_recording(n)?;
    let mut image = BTreeSet::new();
    let mut round_trip = true;
    for w in &all {
        let t = word_to_tableau(w, n)?;
        round_trip &= tableau_to_word_in(&t, &all)? == *w;
        image.insert(t);
    }
    let injective = image.len() == all.len();
    let onto = image.iter().eq(tableaux.iter());
    Ok(BijectionReport {
        n,
        words: all.len(),
        tableaux: tableaux.len(),
        injective,
        round_trip,
        pass: injective && onto && round_trip,
    })
}

/// Reading rows bottom to top: `(box3, box2, first_row...)`.
pub fn row_reading(t: &RecordingTableau) -> Permutation {
    let mut values = vec![t.box3(), t.box2()];
    values.extend_from_slice(t.first_row());
    Permutation::new(values).expect("a tableau filling is a permutation")
}

/// Inverse of [`row_reading`].
pub fn tableau_from_reading(w: &Permutation) -> Result<RecordingTableau> {
    if w.n() < 4 {
        return Err(Error::FamilyRange(w.n()));
    }
    let v = w.values();
    RecordingTableau::new(v[2..].to_vec(), v[1], v[0])
}

pub fn rank(t: &RecordingTableau) -> usize {
    row_reading(t).length()
}

/// `Σ_τ q^{rank τ}` over `C_{n-2,1,1}`.
pub fn rank_polynomial(n: usize) -> Result<IntPolynomial> {
    let mut coeffs = vec![0i64; 2 * n];
    for t in enumerate_recording(n)? {
        coeffs[rank(&t)] += 1;
    }
    Ok(IntPolynomial::new(coeffs))
}

/// The partition of a permutation: non-increasing rearrangement of the
/// nonzero entries of its Lehmer code.
pub fn lehmer_partition(w: &Permutation) -> Partition {
    Partition::from_unsorted(w.lehmer_code())
}

pub fn tableau_partition(t: &RecordingTableau) -> Partition {
    lehmer_partition(&row_reading(t))
}

/// The Grassmannian permutation of `λ ⊆ (n-2)×2`: `w₁ = 1 + λ₂`,
/// `w₂ = 2 + λ₁`, remaining values increasing.
pub fn grassmannian_from_partition(lambda: &Partition, n: usize) -> Result<Permutation> {
    if n < 2 || !lambda.fits(2, n - 2) {
        return Err(Error::PartitionDoesNotFit {
            partition: lambda.to_string(),
            rows: n.saturating_sub(2),
        });
    }
    let w1 = 1 + lambda.part(2);
    let w2 = 2 + lambda.part(1);
    let mut values = vec![w1, w2];
    values.extend((1..=n).filter(|&v| v != w1 && v != w2));
    Permutation::new(values)
}

fn same_n(a: &RecordingTableau, b: &RecordingTableau) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

/// `τ₁ ≤ τ₂` iff `mᵢ ≥ m′ᵢ` along the first row, `box2 ≤ box2′` and
/// `box3 ≤ box3′`.
pub fn tableau_leq(a: &RecordingTableau, b: &RecordingTableau) -> Result<bool> {
    same_n(a, b)?;
    Ok(a.first_row()
        .iter()
        .zip(b.first_row())
        .all(|(m, m2)| m >= m2)
        && a.box2() <= b.box2()
        && a.box3() <= b.box3())
}

fn lt(a: &RecordingTableau, b: &RecordingTableau) -> bool {
    a != b && tableau_leq(a, b).unwrap_or(false)
}

/// `b` covers `a`: `a < b` with nothing of `universe` strictly between.
pub fn covers_by_definition(
    a: &RecordingTableau,
    b: &RecordingTableau,
    universe: &[RecordingTableau],
) -> Result<bool> {
    same_n(a, b)?;
    Ok(lt(a, b) && !universe.iter().any(|c| lt(a, c) && lt(c, b)))
}

/// `a ≤ b` and the row readings differ in length by exactly one.
pub fn covers_by_length(a: &RecordingTableau, b: &RecordingTableau) -> Result<bool> {
    Ok(tableau_leq(a, b)? && rank(b) == rank(a) + 1)
}

/// Cover test computed both ways; disagreement is an error.
pub fn tableau_covers(a: &RecordingTableau, b: &RecordingTableau) -> Result<bool> {
    let universe = enumerate_recording(a.n())?;
    covers_checked(a, b, &universe)
}

fn covers_checked(
    a: &RecordingTableau,
    b: &RecordingTableau,
    universe: &[RecordingTableau],
) -> Result<bool> {
    let by_def = covers_by_definition(a, b, universe)?;
    let by_len = covers_by_length(a, b)?;
    if by_def != by_len {
        return Err(Error::CriterionMismatch(format!(
            "{a} -> {b}: definition {by_def}, length {by_len}"
        )));
    }
    Ok(by_def)
}

/// All cover pairs `(lower, upper)` of `C_{n-2,1,1}`.
pub fn tableau_cover_pairs(n: usize) -> Result<Vec<(RecordingTableau, RecordingTableau)>> {
    let universe = enumerate_recording(n)?;
    let mut out = Vec::new();
    for a in &universe {
        for b in &universe {
            if covers_checked(a, b, &universe)? {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}

/// Hasse diagram of `C_{n-2,1,1}`. Keys are tableau strings, payloads the
/// row readings.
pub fn build_tableau_hasse(n: usize) -> Result<LabeledGraph> {
    let mut g = LabeledGraph::new();
    for t in enumerate_recording(n)? {
        g.add_vertex(t.to_string(), Some(row_reading(&t).to_string()));
    }
    for (a, b) in tableau_cover_pairs(n)? {
        g.add_edge(&a.to_string(), &b.to_string(), EdgeKind::Cover)?;
    }
    Ok(g)
}

/// The row readings of `C_{n-2,1,1}`, keyed by reading.
pub fn readings(n: usize) -> Result<BTreeMap<Permutation, RecordingTableau>> {
    Ok(enumerate_recording(n)?
        .into_iter()
        .map(|t| (row_reading(&t), t))
        .collect())
}

/// Permutations of `S_n` with no descent outside position 2, by brute scan.
pub fn grassmannian_at_two(n: usize) -> BTreeSet<Permutation> {
    crate::perm::all_permutations(n)
        .filter(|w| w.descent_set().iter().all(|&d| d == 2))
        .collect()
}

/// Hasse diagram of the row readings under strong Bruhat order.
pub fn build_reading_hasse(n: usize) -> Result<LabeledGraph> {
    let set = readings(n)?;
    let mut g = LabeledGraph::new();
    for w in set.keys() {
        g.add_vertex(w.to_string(), Some(lehmer_partition(w).to_string()));
    }
    for w in set.keys() {
        for up in w.bruhat_covers() {
            if set.contains_key(&up) {
                g.add_edge(&w.to_string(), &up.to_string(), EdgeKind::Cover)?;
            }
        }
    }
    Ok(g)
}

/// One row of `tableaux list`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableauRecord {
    pub tableau: String,
    pub first_row: Vec<usize>,
    pub box2: usize,
    pub box3: usize,
    pub recording: bool,
    pub reading: Option<String>,
    pub rank: Option<usize>,
}

impl TableauRecord {
    pub fn from_hook(t: &HookTableau) -> Self {
        let rec = RecordingTableau::try_from(t.clone()).ok();
        TableauRecord {
            tableau: t.to_string(),
            first_row: t.first_row.clone(),
            box2: t.box2,
            box3: t.box3,
            recording: rec.is_some(),
            reading: rec.as_ref().map(|r| row_reading(r).to_string()),
            rank: rec.as_ref().map(rank),
        }
    }
}
