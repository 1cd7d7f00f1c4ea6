//! Rooted labelled trees on `{0} ∪ [n]`, where `0` is the root.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The root label.
pub const ROOT: usize = 0;

/// A Cayley tree on `[n]₀`, stored as the parent of each vertex `1..=n`.
///
/// Values are immutable once validated; every constructor checks that each
/// vertex reaches the root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CayleyTree {
    parents: Vec<usize>,
}

impl CayleyTree {
    /// The bare root, `n = 0`.
    pub fn bare_root() -> Self {
        Self {
            parents: Vec::new(),
        }
    }

    /// Builds a tree from `parents[i - 1] = parent(i)`.
    pub fn from_parents(parents: Vec<usize>) -> Result<Self> {
        let n = parents.len();
        for (idx, &p) in parents.iter().enumerate() {
            if p > n {
                return Err(Error::BadDomain(format!(
                    "parent {p} of vertex {} is outside [0, {n}]",
                    idx + 1
                )));
            }
        }
        if let Some(vertex) = find_unrooted(&parents) {
            return Err(Error::CycleDetected { vertex });
        }
        Ok(Self { parents })
    }

    /// Builds a tree from an explicit map; its keys must be exactly `[n]`.
    pub fn from_map(map: &BTreeMap<usize, usize>) -> Result<Self> {
        let n = map.len();
        if map.keys().copied().ne(1..=n) {
            return Err(Error::BadDomain(format!(
                "keys {:?} are not exactly 1..={n}",
                map.keys().collect::<Vec<_>>()
            )));
        }
        Self::from_parents(map.values().copied().collect())
    }

    /// Skips validation. Callers guarantee the parent map is rooted.
    pub(crate) fn from_parents_unchecked(parents: Vec<usize>) -> Self {
        debug_assert!(find_unrooted(&parents).is_none());
        Self { parents }
    }

    pub fn order(&self) -> usize {
        self.parents.len()
    }

    /// Parent of vertex `v` in `1..=n`.
    pub fn parent(&self, v: usize) -> usize {
        self.parents[v - 1]
    }

    /// `parents()[i - 1]` is the parent of `i`.
    pub fn parents(&self) -> &[usize] {
        &self.parents
    }

    pub fn to_map(&self) -> BTreeMap<usize, usize> {
        self.parents
            .iter()
            .enumerate()
            .map(|(i, &p)| (i + 1, p))
            .collect()
    }

    /// Number of children of every vertex, indexed by `0..=n`.
    pub fn children_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.order() + 1];
        for &p in &self.parents {
            counts[p] += 1;
        }
        counts
    }

    /// Children of every vertex, each list ascending.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut children = vec![Vec::new(); self.order() + 1];
        for (i, &p) in self.parents.iter().enumerate() {
            children[p].push(i + 1);
        }
        children
    }

    /// Vertices whose label exceeds every proper non-root ancestor, ascending.
    pub fn records(&self) -> Vec<usize> {
        let max_ancestor = self.max_proper_ancestors();
        (1..=self.order())
            .filter(|&v| v > max_ancestor[v])
            .collect()
    }

    /// Entry `v` says whether `v` is a record, for `v` in `0..=n`; the root never is.
    pub fn record_mask(&self) -> Vec<bool> {
        let max_ancestor = self.max_proper_ancestors();
        let mut mask = vec![false; self.order() + 1];
        for v in 1..=self.order() {
            mask[v] = v > max_ancestor[v];
        }
        mask
    }

    /// Largest label among the proper ancestors of each vertex, with the root
    /// counting as 0.
    fn max_proper_ancestors(&self) -> Vec<usize> {
        let n = self.order();
        // usize::MAX marks "not yet computed"
        let mut best = vec![usize::MAX; n + 1];
        best[ROOT] = 0;
        let mut stack = Vec::new();
        for start in 1..=n {
            let mut v = start;
            while best[v] == usize::MAX {
                stack.push(v);
                v = self.parents[v - 1];
            }
            while let Some(u) = stack.pop() {
                let p = self.parents[u - 1];
                best[u] = best[p].max(p);
            }
        }
        best
    }

    /// Every non-root vertex has a smaller parent.
    pub fn is_increasing(&self) -> bool {
        self.parents.iter().enumerate().all(|(i, &p)| p < i + 1)
    }

    /// The root has exactly one child.
    pub fn is_planted(&self) -> bool {
        self.parents.iter().filter(|&&p| p == ROOT).count() == 1
    }

    /// Applies a relabelling `v ↦ map[v]` (with `map[0] = 0`) to every vertex.
    pub(crate) fn relabel(&self, map: &[usize]) -> Self {
        let mut parents = vec![0; self.order()];
        for (i, &p) in self.parents.iter().enumerate() {
            parents[map[i + 1] - 1] = map[p];
        }
        Self::from_parents_unchecked(parents)
    }
}

impl fmt::Display for CayleyTree {
    /// Canonical text form: `n p_1 … p_n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.order())?;
        for p in &self.parents {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

/// Returns some vertex whose parent chain never reaches the root.
fn find_unrooted(parents: &[usize]) -> Option<usize> {
    let n = parents.len();
    // 0 = unknown, 1 = on current walk, 2 = reaches root
    let mut state = vec![0u8; n + 1];
    state[ROOT] = 2;
    let mut walk = Vec::new();
    for start in 1..=n {
        let mut v = start;
        while state[v] == 0 {
            state[v] = 1;
            walk.push(v);
            v = parents[v - 1];
        }
        if state[v] == 1 {
            return Some(start);
        }
        for u in walk.drain(..) {
            state[u] = 2;
        }
    }
    None
}
