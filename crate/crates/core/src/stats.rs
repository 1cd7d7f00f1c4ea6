//! Statistics on parking functions and Cayley trees, and the hexads whose
//! distributions agree under `rho`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::parking::{lucky_set, weary_permutation, ParkingFunction};
use crate::tree::{CayleyTree, ROOT};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PfStats {
    pub rec_set: Vec<usize>,
    pub len: usize,
    pub lucky: usize,
    /// Total failed attempts.
    pub dis: u64,
    /// All attempts, successful or not.
    pub probes: u64,
    pub ones: usize,
    /// Values of `[n+1]` that never occur; `n + 1` always counts.
    pub absent: usize,
    /// `mult[i]` = number of values of `[n+1]` occurring exactly `i` times.
    pub mult: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeStats {
    pub rec_set: Vec<usize>,
    pub ord: usize,
    /// `Σ (i − parent(i))` over non-root vertices.
    pub diff: i64,
    pub deg_root: usize,
    /// Childless non-root vertices.
    pub leaves: usize,
    /// `chseq[i]` = number of vertices, root included, with exactly `i` children.
    pub chseq: Vec<usize>,
    /// Vertices `x` whose parent is `x − 1`.
    pub sasc: usize,
    pub wait: u64,
    pub psa: usize,
}

pub fn pf_stats(pf: &ParkingFunction) -> PfStats {
    let n = pf.len();
    let omega = pf.birds_eye();
    let dis: u64 = omega
        .word()
        .iter()
        .enumerate()
        .map(|(spot, &car)| (spot + 1 - pf.get(car)) as u64)
        .sum();
    let mut occurrences = vec![0usize; n + 2];
    for &a in pf.prefs() {
        occurrences[a] += 1;
    }
    let mut mult = vec![0usize; n + 1];
    for &count in &occurrences[1..=n + 1] {
        mult[count] += 1;
    }
    PfStats {
        rec_set: omega.records(),
        len: n,
        lucky: lucky_set(pf).len(),
        dis,
        probes: dis + n as u64,
        ones: occurrences.get(1).copied().unwrap_or(0),
        absent: mult[0],
        mult,
    }
}

pub fn diff(tree: &CayleyTree) -> i64 {
    tree.parents()
        .iter()
        .enumerate()
        .map(|(i, &p)| (i + 1) as i64 - p as i64)
        .sum()
}

pub fn small_ascents(tree: &CayleyTree) -> usize {
    tree.parents()
        .iter()
        .enumerate()
        .filter(|&(i, &p)| p == i)
        .count()
}

pub fn children_sequence(tree: &CayleyTree) -> Vec<usize> {
    let mut chseq = vec![0usize; tree.order() + 1];
    for count in tree.children_counts() {
        chseq[count] += 1;
    }
    chseq
}

/// Relabels every vertex by the step at which priority-first search visits it.
pub fn priority_tree(tree: &CayleyTree) -> CayleyTree {
    let position = weary_permutation(tree).position_table();
    tree.relabel(&position)
}

pub fn tree_stats(tree: &CayleyTree) -> TreeStats {
    let counts = tree.children_counts();
    let pt = priority_tree(tree);
    let wait = diff(&pt);
    debug_assert!(wait >= 0);
    TreeStats {
        rec_set: tree.records(),
        ord: tree.order(),
        diff: diff(tree),
        deg_root: counts[ROOT],
        leaves: counts[1..].iter().filter(|&&c| c == 0).count(),
        chseq: children_sequence(tree),
        sasc: small_ascents(tree),
        wait: wait as u64,
        psa: small_ascents(&pt),
    }
}

/// The aligned six-tuple compared across the two sides:
/// `(Rec, wait, psa, deg_root, chseq, ord)` for trees and
/// `(Rec, probes, lucky, ones, mult, len)` for parking functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StatHexad {
    pub rec_set: Vec<usize>,
    pub stat2: u64,
    pub stat3: usize,
    pub stat4: usize,
    pub seq5: Vec<usize>,
    pub stat6: usize,
}

impl fmt::Display for StatHexad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}} {} {} {} ({}) {}",
            join(&self.rec_set, ","),
            self.stat2,
            self.stat3,
            self.stat4,
            join(&self.seq5, ","),
            self.stat6
        )
    }
}

pub(crate) fn join(values: &[usize], sep: &str) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

impl From<&TreeStats> for StatHexad {
    fn from(s: &TreeStats) -> Self {
        Self {
            rec_set: s.rec_set.clone(),
            stat2: s.wait,
            stat3: s.psa,
            stat4: s.deg_root,
            seq5: s.chseq.clone(),
            stat6: s.ord,
        }
    }
}

impl From<&PfStats> for StatHexad {
    fn from(s: &PfStats) -> Self {
        Self {
            rec_set: s.rec_set.clone(),
            stat2: s.probes,
            stat3: s.lucky,
            stat4: s.ones,
            seq5: s.mult.clone(),
            stat6: s.len,
        }
    }
}

pub fn hexad_tree(tree: &CayleyTree) -> StatHexad {
    StatHexad::from(&tree_stats(tree))
}

pub fn hexad_pf(pf: &ParkingFunction) -> StatHexad {
    StatHexad::from(&pf_stats(pf))
}

/// Multiset of hexads. Merging is associative and commutative.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Histogram(pub BTreeMap<StatHexad, u64>);

impl Histogram {
    pub fn add(&mut self, hexad: StatHexad) {
        *self.0.entry(hexad).or_default() += 1;
    }

    pub fn merge(&mut self, other: Histogram) {
        for (hexad, count) in other.0 {
            *self.0.entry(hexad).or_default() += count;
        }
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.0.len()
    }
}

impl FromIterator<StatHexad> for Histogram {
    fn from_iter<I: IntoIterator<Item = StatHexad>>(iter: I) -> Self {
        let mut h = Histogram::default();
        for hexad in iter {
            h.add(hexad);
        }
        h
    }
}

// Serialized as a list of `[hexad, count]` pairs since JSON keys must be strings.
impl Serialize for Histogram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}

impl<'de> Deserialize<'de> for Histogram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<(StatHexad, u64)> = Vec::deserialize(deserializer)?;
        Ok(Histogram(pairs.into_iter().collect()))
    }
}
