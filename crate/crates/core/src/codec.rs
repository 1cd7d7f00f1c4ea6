//! The record code: a bijection between Cayley trees on `[n]₀` (`n ≥ 1`) and
//! sequences in `[n]₀^{n−1}`.
//!
//! Encoding writes the parent of every non-record `i < n` in position `i`,
//! then fills the record positions, in increasing order, with the attachment
//! sequence. Decoding first recovers which positions were records by walking
//! `i ↦ c_i`: a non-record's walk follows genuine parent edges until it meets
//! a larger label, while a record's walk never does.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::tree::{CayleyTree, ROOT};

/// A record code of order `n ≥ 1`: `n − 1` entries, each in `[0, n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RecordCode {
    order: usize,
    entries: Vec<usize>,
}

impl RecordCode {
    pub fn new(order: usize, entries: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyTree);
        }
        if entries.len() != order - 1 {
            return Err(Error::BadCodeLength {
                order,
                expected: order - 1,
                got: entries.len(),
            });
        }
        if let Some((idx, &value)) = entries.iter().enumerate().find(|(_, &c)| c > order) {
            return Err(Error::EntryOutOfRange {
                position: idx + 1,
                value,
                order,
            });
        }
        Ok(Self { order, entries })
    }

    /// The code whose base-`(n+1)` reading is `rank`.
    pub fn from_rank(order: usize, mut rank: u64) -> Self {
        assert!(order >= 1);
        let base = order as u64 + 1;
        let mut entries = vec![0; order - 1];
        for slot in entries.iter_mut().rev() {
            *slot = (rank % base) as usize;
            rank /= base;
        }
        assert_eq!(rank, 0, "rank out of range for order {order}");
        Self { order, entries }
    }

    /// Position of this code in lexicographic order (`0` smallest).
    pub fn rank(&self) -> u64 {
        rank_of(self.order, &self.entries)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `c_i` for `i` in `1..n`.
    pub fn get(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    /// `c_i ≤ i` for every position.
    pub fn is_subexceedant(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &c)| c <= i + 1)
    }
}

impl PartialOrd for RecordCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by `n`, then lexicographically with `0` the smallest symbol.
impl Ord for RecordCode {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl fmt::Display for RecordCode {
    /// Canonical text form: `n c_1 … c_{n−1}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.order)?;
        for c in &self.entries {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

fn rank_of(order: usize, entries: &[usize]) -> u64 {
    let base = order as u64 + 1;
    entries.iter().fold(0u64, |acc, &c| acc * base + c as u64)
}

/// Number of codes (equivalently trees) of order `n`: `(n+1)^{n−1}`, and 1
/// for the bare root.
pub fn code_count(order: usize) -> u64 {
    if order == 0 {
        1
    } else {
        (order as u64 + 1).pow(order as u32 - 1)
    }
}

pub fn encode(tree: &CayleyTree) -> Result<RecordCode> {
    let n = tree.order();
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    let records = tree.records();
    debug_assert_eq!(tree.parent(records[0]), ROOT);
    let mut entries = vec![0; n - 1];
    let mut is_record = vec![false; n + 1];
    for &r in &records {
        is_record[r] = true;
    }
    for i in (1..n).filter(|&i| !is_record[i]) {
        entries[i - 1] = tree.parent(i);
    }
    // record slots, in order, hold the parents of the 2nd, 3rd, … records
    for pair in records.windows(2) {
        entries[pair[0] - 1] = tree.parent(pair[1]);
    }
    Ok(RecordCode { order: n, entries })
}

/// Record/non-record split of `[n]` recovered from a code alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub records: Vec<usize>,
    pub non_records: Vec<usize>,
}

pub fn classify(code: &RecordCode) -> Classification {
    let n = code.order;
    let mut records = Vec::new();
    let mut non_records = Vec::new();
    for i in 1..n {
        if walk_exceeds(code, i) {
            non_records.push(i);
        } else {
            records.push(i);
        }
    }
    records.push(n);
    Classification {
        records,
        non_records,
    }
}

/// Whether the walk `i, c_i, c_{c_i}, …` reaches a label above `i` within
/// `n` steps. The walk stops at the root.
fn walk_exceeds(code: &RecordCode, i: usize) -> bool {
    let mut v = i;
    for _ in 0..code.order {
        v = code.entries[v - 1];
        if v > i {
            return true;
        }
        if v == ROOT {
            return false;
        }
    }
    false
}

pub fn decode(code: &RecordCode) -> CayleyTree {
    let n = code.order;
    let Classification { records, .. } = classify(code);
    let mut parents = code.entries.clone();
    parents.push(0);
    // records take their parents from the code slot of the previous record
    parents[records[0] - 1] = ROOT;
    for pair in records.windows(2) {
        parents[pair[1] - 1] = code.entries[pair[0] - 1];
    }
    debug_assert_eq!(parents.len(), n);
    CayleyTree::from_parents(parents).expect("decoding always yields a rooted tree")
}

/// Every `i ∈ [n]` occurs in the code as often as it has children, and `0`
/// one time fewer than the root's degree.
pub fn multiplicity_check(tree: &CayleyTree) -> Result<bool> {
    let code = encode(tree)?;
    let mut multiplicity = vec![0usize; tree.order() + 1];
    for &c in code.entries() {
        multiplicity[c] += 1;
    }
    let children = tree.children_counts();
    Ok(multiplicity[ROOT] + 1 == children[ROOT]
        && (1..=tree.order()).all(|i| multiplicity[i] == children[i]))
}

/// Lexicographic bounds `0^{k−1} 1^{n−k}` and `0^{k−1} k n^{n−k−1}`, both cut
/// to length `n − 1`.
pub fn lex_range(n: usize, k: usize) -> Result<(RecordCode, RecordCode)> {
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { n, k });
    }
    let mut lower = vec![0; k - 1];
    lower.extend(std::iter::repeat_n(1, n - k));
    let mut upper = vec![0; k - 1];
    upper.push(k);
    upper.extend(std::iter::repeat_n(n, n.saturating_sub(k + 1)));
    upper.truncate(n - 1);
    Ok((RecordCode::new(n, lower)?, RecordCode::new(n, upper)?))
}

/// Whether `decode(code)` has first-record set exactly `[k]`.
///
/// The test is coordinatewise against the two [`lex_range`] bounds: the
/// first `k − 1` entries are `0`, entry `k` lies in `[1, k]`, and the rest in
/// `[1, n]`. The plain lexicographic interval between the same bounds is a
/// strict superset once `n ≥ 4` (it admits e.g. `0 2 0` for `n = 4, k = 2`).
pub fn lex_range_membership(code: &RecordCode, k: usize) -> Result<bool> {
    let (lower, upper) = lex_range(code.order, k)?;
    Ok(code
        .entries
        .iter()
        .zip(lower.entries.iter().zip(&upper.entries))
        .all(|(c, (lo, hi))| lo <= c && c <= hi))
}

/// Whether `code` lies in the plain lexicographic interval between the
/// [`lex_range`] bounds.
pub fn lex_interval_contains(code: &RecordCode, k: usize) -> Result<bool> {
    let (lower, upper) = lex_range(code.order, k)?;
    Ok(lower <= *code && *code <= upper)
}

/// Number of codes in the plain lexicographic interval, from the ranks of its
/// endpoints.
pub fn lex_interval_size(n: usize, k: usize) -> Result<u64> {
    let (lower, upper) = lex_range(n, k)?;
    Ok(upper.rank() - lower.rank() + 1)
}

/// Labels of a path graph from the root's neighbour to the far end.
pub fn path_word(tree: &CayleyTree) -> Result<Vec<usize>> {
    let n = tree.order();
    let children = tree.children();
    if n == 0 || children.iter().skip(1).any(|c| c.len() > 1) || children[ROOT].len() > 2 {
        return Err(Error::NotAPath);
    }
    if children[ROOT].len() != 1 {
        return Err(Error::WrongEndpoints { n });
    }
    let mut word = Vec::with_capacity(n);
    let mut v = children[ROOT][0];
    loop {
        word.push(v);
        match children[v].first() {
            Some(&c) => v = c,
            None => break,
        }
    }
    if v != n {
        return Err(Error::WrongEndpoints { n });
    }
    Ok(word)
}

/// Foata's fundamental transformation: cut the word before each
/// left-to-right maximum and read every block as a cycle.
pub fn foata(word: &[usize]) -> Result<Permutation> {
    Permutation::from_word(word.to_vec())?;
    let mut image = vec![0; word.len()];
    let mut start = 0;
    let mut best = 0;
    for end in 0..=word.len() {
        let cut = end == word.len() || word[end] > best;
        if cut && end > start {
            let block = &word[start..end];
            for (idx, &v) in block.iter().enumerate() {
                image[v - 1] = block[(idx + 1) % block.len()];
            }
            start = end;
        }
        if end < word.len() {
            best = best.max(word[end]);
        }
    }
    Permutation::from_word(image)
}

/// For a path with endpoints `0` and `n`, the record code read as a word is
/// the inverse of Foata's transform of the path word (with `n` dropped).
pub fn verify_foata(tree: &CayleyTree) -> Result<bool> {
    let mut word = path_word(tree)?;
    word.pop();
    let code = encode(tree)?;
    let Ok(code_perm) = Permutation::from_word(code.entries().to_vec()) else {
        return Ok(false);
    };
    Ok(code_perm == foata(&word)?.inverse())
}
