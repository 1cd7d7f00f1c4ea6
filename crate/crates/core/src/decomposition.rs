//! Record decomposition: cutting a tree at its records into bonsais, plus the
//! attachment sequence that glues them back together.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tree::{CayleyTree, ROOT};

/// A rooted tree on an arbitrary finite set of positive labels whose root is
/// its only record. The root maps to the sentinel `0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bonsai {
    root: usize,
    parent: BTreeMap<usize, usize>,
}

impl Bonsai {
    /// Checks that `root` is the maximum label, maps to `0`, and every other
    /// label reaches it.
    pub fn new(root: usize, parent: BTreeMap<usize, usize>) -> Result<Self> {
        if parent.get(&root) != Some(&ROOT) {
            return Err(Error::InvalidBonsai(format!(
                "root {root} must map to the sentinel 0"
            )));
        }
        if parent.keys().next_back() != Some(&root) {
            return Err(Error::InvalidBonsai(format!(
                "root {root} is not the largest label"
            )));
        }
        if parent.contains_key(&ROOT) {
            return Err(Error::InvalidBonsai("label 0 is reserved".into()));
        }
        for (&v, &p) in &parent {
            if v != root && !parent.contains_key(&p) {
                return Err(Error::InvalidBonsai(format!(
                    "parent {p} of {v} is not in the bonsai"
                )));
            }
        }
        for &start in parent.keys() {
            let mut v = start;
            for _ in 0..parent.len() {
                if v == root {
                    break;
                }
                v = parent[&v];
            }
            if v != root {
                return Err(Error::InvalidBonsai(format!(
                    "{start} never reaches {root}"
                )));
            }
        }
        Ok(Self { root, parent })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Parent map with the root sent to `0`.
    pub fn parent_map(&self) -> &BTreeMap<usize, usize> {
        &self.parent
    }

    pub fn labels(&self) -> impl Iterator<Item = usize> + '_ {
        self.parent.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// The forest left after the root is relabelled as `0` and removed,
    /// expressed as a tree on the remaining labels rooted at `0`.
    pub(crate) fn without_root(&self) -> BTreeMap<usize, usize> {
        self.parent
            .iter()
            .filter(|(&v, _)| v != self.root)
            .map(|(&v, &p)| (v, if p == self.root { ROOT } else { p }))
            .collect()
    }
}

/// Bonsais ordered by root label, plus the parents of the 2nd, 3rd, … roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordDecomposition {
    pub bonsais: Vec<Bonsai>,
    pub attachments: Vec<usize>,
}

pub fn bonsai_decomposition(tree: &CayleyTree) -> Result<RecordDecomposition> {
    if tree.order() == 0 {
        return Err(Error::EmptyTree);
    }
    let (bonsais, attachments) = decompose_labelled(&tree.to_map());
    Ok(RecordDecomposition {
        bonsais,
        attachments,
    })
}

pub fn reassemble(decomposition: &RecordDecomposition) -> Result<CayleyTree> {
    let RecordDecomposition {
        bonsais,
        attachments,
    } = decomposition;
    if bonsais.is_empty() {
        return Err(Error::EmptyTree);
    }
    if attachments.len() + 1 != bonsais.len() {
        return Err(Error::InvalidBonsai(format!(
            "{} bonsais need {} attachments, got {}",
            bonsais.len(),
            bonsais.len() - 1,
            attachments.len()
        )));
    }
    let mut map = BTreeMap::new();
    let mut available: BTreeSet<usize> = BTreeSet::from([ROOT]);
    let mut last_root = 0;
    for (idx, bonsai) in bonsais.iter().enumerate() {
        if bonsai.root() <= last_root {
            return Err(Error::InvalidBonsai(
                "bonsai roots must be strictly increasing".into(),
            ));
        }
        last_root = bonsai.root();
        let target = if idx == 0 { ROOT } else { attachments[idx - 1] };
        if !available.contains(&target) {
            return Err(Error::DanglingAttachment {
                bonsai: idx + 1,
                target,
            });
        }
        for (&v, &p) in bonsai.parent_map() {
            let p = if v == bonsai.root() { target } else { p };
            if map.insert(v, p).is_some() {
                return Err(Error::InvalidBonsai(format!("label {v} appears twice")));
            }
            available.insert(v);
        }
    }
    CayleyTree::from_map(&map)
}

/// Decomposes a tree on an arbitrary label set (root `0`) into bonsais.
pub(crate) fn decompose_labelled(parent: &BTreeMap<usize, usize>) -> (Vec<Bonsai>, Vec<usize>) {
    let records = labelled_records(parent);
    // owner: the nearest record at or above each vertex
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    let mut walk = Vec::new();
    for &start in parent.keys() {
        let mut v = start;
        let found = loop {
            if let Some(&o) = owner.get(&v) {
                break o;
            }
            if records.contains(&v) {
                break v;
            }
            walk.push(v);
            v = parent[&v];
        };
        owner.insert(v, found);
        for u in walk.drain(..) {
            owner.insert(u, found);
        }
    }
    let mut bonsais = Vec::with_capacity(records.len());
    let mut attachments = Vec::with_capacity(records.len().saturating_sub(1));
    for (idx, &r) in records.iter().enumerate() {
        let map: BTreeMap<usize, usize> = owner
            .iter()
            .filter(|(_, &o)| o == r)
            .map(|(&v, _)| (v, if v == r { ROOT } else { parent[&v] }))
            .collect();
        bonsais.push(Bonsai {
            root: r,
            parent: map,
        });
        if idx > 0 {
            attachments.push(parent[&r]);
        }
    }
    (bonsais, attachments)
}

/// Records of a tree on an arbitrary label set (root `0`), ascending.
pub(crate) fn labelled_records(parent: &BTreeMap<usize, usize>) -> Vec<usize> {
    let mut max_anc: BTreeMap<usize, usize> = BTreeMap::new();
    max_anc.insert(ROOT, 0);
    let mut stack = Vec::new();
    for &start in parent.keys() {
        let mut v = start;
        while !max_anc.contains_key(&v) {
            stack.push(v);
            v = parent[&v];
        }
        while let Some(u) = stack.pop() {
            let p = parent[&u];
            let m = max_anc[&p].max(p);
            max_anc.insert(u, m);
        }
    }
    parent.keys().copied().filter(|v| *v > max_anc[v]).collect()
}
