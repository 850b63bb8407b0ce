//! Reduced words, braid and commutation moves, and the move graph of a permutation.
//!
//! A word `a₁a₂⋯a_p` denotes the product `s_{a₁} s_{a₂} ⋯ s_{a_p}`, evaluated
//! left to right by swapping adjacent positions of the identity.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, LabeledGraph};
use crate::perm::Permutation;

/// Default cap on `|R(w)|` before enumeration refuses to proceed.
pub const DEFAULT_WORD_CAP: u64 = 2_000_000;

pub type Word = Vec<usize>;

/// A word verified to be reduced in `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord {
    letters: Word,
    n: usize,
}

impl ReducedWord {
    pub fn new(letters: Word, n: usize) -> Result<Self> {
        if !is_reduced(&letters, n)? {
            return Err(Error::NotReduced(word_key(&letters, n)));
        }
        Ok(ReducedWord { letters, n })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn permutation(&self) -> Permutation {
        evaluate(&self.letters, self.n).expect("letters validated on construction")
    }

    pub fn key(&self) -> String {
        word_key(&self.letters, self.n)
    }
}

fn check_letters(word: &[usize], n: usize) -> Result<()> {
    match word.iter().find(|&&a| a == 0 || a >= n) {
        Some(&letter) => Err(Error::LetterOutOfRange { letter, n }),
        None => Ok(()),
    }
}

/// The permutation `s_{a₁} ⋯ s_{a_p}` in `S_n`.
pub fn evaluate(word: &[usize], n: usize) -> Result<Permutation> {
    check_letters(word, n)?;
    let mut values: Vec<usize> = (1..=n).collect();
    for &a in word {
        values.swap(a - 1, a);
    }
    Permutation::new(values)
}

pub fn is_reduced(word: &[usize], n: usize) -> Result<bool> {
    check_letters(word, n)?;
    if word.windows(2).any(|w| w[0] == w[1]) {
        return Ok(false);
    }
    Ok(evaluate(word, n)?.length() == word.len())
}

/// Positions `j` (1-based) with `a_j > a_{j+1}`.
pub fn word_descents(word: &[usize]) -> BTreeSet<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(j, _)| j + 1)
        .collect()
}

/// Positions `j` (1-based) with `a_j < a_{j+1}`.
pub fn word_ascents(word: &[usize]) -> BTreeSet<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] < w[1])
        .map(|(j, _)| j + 1)
        .collect()
}

/// Digit string when every letter is a single digit (`n <= 10`), dash-separated otherwise.
pub fn word_key(word: &[usize], n: usize) -> String {
    if n <= 10 {
        word.iter().map(|a| char::from(b'0' + *a as u8)).collect()
    } else {
        let parts: Vec<String> = word.iter().map(|a| a.to_string()).collect();
        parts.join("-")
    }
}

/// Inverse of [`word_key`]; accepts `"432134"` or `"12-11-3"`.
pub fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains('-') || s.contains(',') {
        s.split(['-', ','])
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("letter {p:?} is not a natural number")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("character {c:?} is not a digit")))
            })
            .collect()
    }
}

/// Every word reachable by one commutation or one braid move.
///
/// The result is sorted by word and free of duplicates.
pub fn move_neighbors(word: &[usize], n: usize) -> Result<Vec<(Word, EdgeKind)>> {
    if !is_reduced(word, n)? {
        return Err(Error::NotReduced(word_key(word, n)));
    }
    Ok(move_neighbors_unchecked(word))
}

fn move_neighbors_unchecked(word: &[usize]) -> Vec<(Word, EdgeKind)> {
    let mut out = BTreeMap::new();
    for j in 0..word.len().saturating_sub(1) {
        let (a, b) = (word[j], word[j + 1]);
        if a.abs_diff(b) > 1 {
            let mut next = word.to_vec();
            next.swap(j, j + 1);
            out.insert(next, EdgeKind::Commutation);
        }
    }
    for j in 0..word.len().saturating_sub(2) {
        let (a, b, c) = (word[j], word[j + 1], word[j + 2]);
        if a == c && a.abs_diff(b) == 1 {
            let mut next = word.to_vec();
            next[j] = b;
            next[j + 1] = a;
            next[j + 2] = b;
            out.insert(next, EdgeKind::Braid);
        }
    }
    out.into_iter().collect()
}

/// Number of braid moves available in a word (factors `aba` with `|a - b| = 1`).
pub fn braid_move_count(word: &[usize]) -> usize {
    word.windows(3)
        .filter(|w| w[0] == w[2] && w[0].abs_diff(w[1]) == 1)
        .count()
}

/// Memoized enumerator of reduced words. Not shared between threads; build one
/// per worker instead.
#[derive(Debug, Default)]
pub struct ReducedWordEnumerator {
    words: HashMap<Permutation, std::rc::Rc<Vec<Word>>>,
    counts: HashMap<Permutation, u64>,
}

impl ReducedWordEnumerator {
    pub fn new() -> Self {
        Self::default()
    }

    /// `r(w)` by the descent recursion `r(w) = Σ_{i ∈ Des(w)} r(w s_i)`.
    pub fn count(&mut self, w: &Permutation) -> Result<u64> {
        if w.is_identity() {
            return Ok(1);
        }
        if let Some(&c) = self.counts.get(w) {
            return Ok(c);
        }
        let mut total: u64 = 0;
        for i in w.descent_set() {
            let below = w.times_simple(i)?;
            total = total
                .checked_add(self.count(&below)?)
                .ok_or(Error::Overflow("reduced word count"))?;
        }
        self.counts.insert(w.clone(), total);
        Ok(total)
    }

    /// `R(w)` in lexicographic order, via `R(w) = ⋃_{i ∈ Des(w)} R(w s_i)·i`.
    pub fn words(&mut self, w: &Permutation) -> Vec<Word> {
        let mut out = (*self.words_rc(w)).clone();
        out.sort();
        out
    }

    fn words_rc(&mut self, w: &Permutation) -> std::rc::Rc<Vec<Word>> {
        if let Some(hit) = self.words.get(w) {
            return hit.clone();
        }
        let result = if w.is_identity() {
            vec![Vec::new()]
        } else {
            let mut acc = Vec::new();
            for i in w.descent_set() {
                let below = w.times_simple(i).expect("descent positions are in range");
                for prefix in self.words_rc(&below).iter() {
                    let mut word = Vec::with_capacity(prefix.len() + 1);
                    word.extend_from_slice(prefix);
                    word.push(i);
                    acc.push(word);
                }
            }
            acc
        };
        let rc = std::rc::Rc::new(result);
        self.words.insert(w.clone(), rc.clone());
        rc
    }
}

/// `R(w)` as a sorted set.
pub fn enumerate_reduced_words(w: &Permutation) -> BTreeSet<Word> {
    ReducedWordEnumerator::new().words(w).into_iter().collect()
}

/// Like [`enumerate_reduced_words`] but refuses when `r(w)` exceeds `cap`.
pub fn enumerate_reduced_words_capped(w: &Permutation, cap: u64) -> Result<BTreeSet<Word>> {
    let mut e = ReducedWordEnumerator::new();
    let count = e.count(w)?;
    if count > cap {
        return Err(Error::BudgetExceeded { count, cap });
    }
    Ok(e.words(w).into_iter().collect())
}

pub fn count_reduced_words(w: &Permutation) -> Result<u64> {
    ReducedWordEnumerator::new().count(w)
}

/// Some reduced word for `w`: repeatedly strip the last descent.
pub fn some_reduced_word(w: &Permutation) -> Word {
    let mut cur = w.clone();
    let mut rev = Vec::with_capacity(w.length());
    while let Some(&i) = cur.descent_set().iter().next() {
        rev.push(i);
        cur = cur.times_simple(i).expect("descent in range");
    }
    rev.reverse();
    rev
}

/// The closure of `start` under braid and commutation moves.
pub fn move_closure(start: &[usize], n: usize) -> Result<BTreeSet<Word>> {
    if !is_reduced(start, n)? {
        return Err(Error::NotReduced(word_key(start, n)));
    }
    let mut seen: BTreeSet<Word> = BTreeSet::from([start.to_vec()]);
    let mut queue = VecDeque::from([start.to_vec()]);
    while let Some(word) = queue.pop_front() {
        for (next, _) in move_neighbors_unchecked(&word) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// The graph `G_w`: vertices are reduced words, edges single moves.
pub fn build_word_graph(w: &Permutation) -> Result<LabeledGraph> {
    build_word_graph_capped(w, DEFAULT_WORD_CAP)
}

pub fn build_word_graph_capped(w: &Permutation, cap: u64) -> Result<LabeledGraph> {
    let n = w.n();
    let words = enumerate_reduced_words_capped(w, cap)?;
    let mut g = LabeledGraph::new();
    for word in &words {
        g.add_vertex(word_key(word, n), None);
    }
    for word in &words {
        let key = word_key(word, n);
        for (next, kind) in move_neighbors_unchecked(word) {
            g.add_edge(&key, &word_key(&next, n), kind)?;
        }
    }
    Ok(g)
}

/// Number of reduced words of the longest element `w₀ ∈ S_n`:
/// `C(n,2)! / (1^{n-1} 3^{n-2} ⋯ (2n-3)^1)`.
///
/// Evaluated through prime exponents so intermediates never overflow; only a
/// result beyond `u64` is an error.
pub fn r_longest(n: usize) -> Result<u64> {
    if n < 1 {
        return Err(Error::InvalidPermutation("n must be at least 1".into()));
    }
    let top = n * (n - 1) / 2;
    let mut exponents: BTreeMap<usize, i64> = BTreeMap::new();
    for k in 2..=top {
        for (p, e) in factorize(k) {
            *exponents.entry(p).or_default() += e as i64;
        }
    }
    // Denominator: (2i - 1)^(n - i) for i = 1..n-1.
    for i in 1..n {
        let base = 2 * i - 1;
        for (p, e) in factorize(base) {
            *exponents.entry(p).or_default() -= (e * (n - i)) as i64;
        }
    }
    let mut acc: u64 = 1;
    for (p, e) in exponents {
        if e < 0 {
            return Err(Error::Overflow("r_longest: non-integral quotient"));
        }
        for _ in 0..e {
            acc = acc
                .checked_mul(p as u64)
                .ok_or(Error::Overflow("r_longest"))?;
        }
    }
    Ok(acc)
}

fn factorize(mut k: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= k {
        let mut e = 0;
        while k.is_multiple_of(p) {
            k /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if k > 1 {
        out.push((k, 1));
    }
    out
}
