//! Exhaustive enumeration, restricted families on both sides of `rho`, and the
//! counting identities for trees whose first records are `[k]`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::codec::{code_count, decode, lex_range, lex_range_membership, RecordCode};
use crate::error::{Error, Result};
use crate::parking::{classical_park, rho, rho_inv, ParkingFunction};
use crate::stats::{children_sequence, hexad_pf, hexad_tree, pf_stats, Histogram};
use crate::tree::{CayleyTree, ROOT};

/// Trees of order `n` in code-lexicographic order.
pub fn enumerate_trees(n: usize) -> impl Iterator<Item = CayleyTree> {
    enumerate_trees_range(n, 0..code_count(n))
}

/// The trees whose code ranks fall in `ranks`.
pub fn enumerate_trees_range(n: usize, ranks: Range<u64>) -> impl Iterator<Item = CayleyTree> {
    ranks.map(move |rank| tree_at(n, rank))
}

pub fn tree_at(n: usize, rank: u64) -> CayleyTree {
    if n == 0 {
        assert_eq!(rank, 0);
        CayleyTree::bare_root()
    } else {
        decode(&RecordCode::from_rank(n, rank))
    }
}

/// Number of preference sequences in `[n]^n`.
pub fn sequence_count(n: usize) -> u64 {
    (n as u64).pow(n as u32)
}

/// The preference sequence whose base-`n` digits (plus one) read `rank`.
pub fn sequence_at(n: usize, mut rank: u64) -> Vec<usize> {
    let mut prefs = vec![1; n];
    for slot in prefs.iter_mut().rev() {
        *slot = (rank % n as u64) as usize + 1;
        rank /= n as u64;
    }
    prefs
}

/// Parking functions of length `n`, filtered from all `n^n` sequences in
/// lexicographic order.
pub fn enumerate_parking_functions(n: usize) -> impl Iterator<Item = ParkingFunction> {
    enumerate_parking_functions_range(n, 0..sequence_count(n))
}

pub fn enumerate_parking_functions_range(
    n: usize,
    ranks: Range<u64>,
) -> impl Iterator<Item = ParkingFunction> {
    ranks.filter_map(move |rank| {
        let prefs = sequence_at(n, rank);
        classical_park(&prefs).ok()?;
        Some(ParkingFunction::new_unchecked(prefs))
    })
}

/// Number of trees of order `n` (and parking functions of length `n`).
pub fn cayley_count(n: usize) -> u64 {
    code_count(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Tree,
    Parking,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Tree => "tree",
            Side::Parking => "parking",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tree" | "trees" => Ok(Side::Tree),
            "pf" | "parking" => Ok(Side::Parking),
            other => Err(Error::UnknownFamily(format!("side {other}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    All,
    Increasing,
    Subexceedant,
    Path,
    Permutation,
    Catalan,
    Pf02,
    Kary(usize),
    PfLe(usize),
    Stirling,
    FirstRecords(usize),
}

impl FamilyKind {
    pub fn allowed_on(self, side: Side) -> bool {
        use FamilyKind::*;
        match self {
            All | Stirling => true,
            Increasing | Path | Catalan | Kary(_) | FirstRecords(_) => side == Side::Tree,
            Subexceedant | Permutation | Pf02 | PfLe(_) => side == Side::Parking,
        }
    }

    /// The record-dual kind on the other side, where one is known.
    pub fn dual(self) -> Option<FamilyKind> {
        use FamilyKind::*;
        Some(match self {
            All => All,
            Increasing => Subexceedant,
            Subexceedant => Increasing,
            Path => Permutation,
            Permutation => Path,
            Catalan => Pf02,
            Pf02 => Catalan,
            Kary(k) => PfLe(k),
            PfLe(k) => Kary(k),
            Stirling => Stirling,
            FirstRecords(_) => return None,
        })
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyKind::*;
        match self {
            All => f.write_str("all"),
            Increasing => f.write_str("increasing"),
            Subexceedant => f.write_str("subexceedant"),
            Path => f.write_str("path"),
            Permutation => f.write_str("permutation"),
            Catalan => f.write_str("catalan"),
            Pf02 => f.write_str("pf02"),
            Kary(k) => write!(f, "kary:{k}"),
            PfLe(k) => write!(f, "pfle:{k}"),
            Stirling => f.write_str("stirling"),
            FirstRecords(k) => write!(f, "first_records:{k}"),
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    /// Parses `name` or `name:k`.
    fn from_str(s: &str) -> Result<Self> {
        use FamilyKind::*;
        let (name, param) = match s.split_once(':') {
            Some((name, k)) => {
                let k: usize = k.parse().map_err(|_| Error::UnknownFamily(s.to_string()))?;
                if k == 0 {
                    return Err(Error::UnknownFamily(format!("{s}: k must be at least 1")));
                }
                (name, Some(k))
            }
            None => (s, None),
        };
        let kind = match (name, param) {
            ("all", None) => All,
            ("increasing", None) => Increasing,
            ("subexceedant", None) => Subexceedant,
            ("path", None) => Path,
            ("permutation", None) => Permutation,
            ("catalan", None) => Catalan,
            ("pf02", None) => Pf02,
            ("kary", Some(k)) => Kary(k),
            ("pfle", Some(k)) => PfLe(k),
            ("stirling", None) => Stirling,
            ("first_records", Some(k)) => FirstRecords(k),
            _ => return Err(Error::UnknownFamily(s.to_string())),
        };
        Ok(kind)
    }
}

/// A family of trees or of parking functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilySpec {
    side: Side,
    kind: FamilyKind,
}

impl FamilySpec {
    pub fn new(side: Side, kind: FamilyKind) -> Result<Self> {
        if !kind.allowed_on(side) {
            return Err(Error::SideMismatch {
                family: kind.to_string(),
                side: side.to_string(),
            });
        }
        Ok(Self { side, kind })
    }

    pub fn tree(kind: FamilyKind) -> Result<Self> {
        Self::new(Side::Tree, kind)
    }

    pub fn parking(kind: FamilyKind) -> Result<Self> {
        Self::new(Side::Parking, kind)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    /// The record-dual family, if one is known.
    pub fn dual(&self) -> Option<FamilySpec> {
        let side = match self.side {
            Side::Tree => Side::Parking,
            Side::Parking => Side::Tree,
        };
        FamilySpec::new(side, self.kind.dual()?).ok()
    }

    pub fn contains_tree(&self, tree: &CayleyTree) -> Result<bool> {
        family_predicate(self, Object::Tree(tree))
    }

    pub fn contains_pf(&self, pf: &ParkingFunction) -> Result<bool> {
        family_predicate(self, Object::Parking(pf))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.side, self.kind)
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Object<'a> {
    Tree(&'a CayleyTree),
    Parking(&'a ParkingFunction),
}

pub fn family_predicate(spec: &FamilySpec, object: Object<'_>) -> Result<bool> {
    use FamilyKind::*;
    match object {
        Object::Tree(t) => {
            if spec.side != Side::Tree {
                return Err(Error::SideMismatch {
                    family: spec.kind.to_string(),
                    side: Side::Tree.to_string(),
                });
            }
            Ok(match spec.kind {
                All => true,
                Increasing => t.is_increasing(),
                Path => is_rooted_path(t),
                Catalan => only_counts(&children_sequence(t), |c| c == 0 || c == 2),
                Kary(k) => only_counts(&children_sequence(t), |c| c <= k),
                Stirling => is_stirling_permutation(rho_inv(t).prefs()),
                FirstRecords(k) => {
                    let roots: Vec<usize> =
                        (1..=t.order()).filter(|&v| t.parent(v) == ROOT).collect();
                    roots.iter().copied().eq(1..=k)
                }
                Subexceedant | Permutation | Pf02 | PfLe(_) => unreachable!(),
            })
        }
        Object::Parking(pf) => {
            if spec.side != Side::Parking {
                return Err(Error::SideMismatch {
                    family: spec.kind.to_string(),
                    side: Side::Parking.to_string(),
                });
            }
            Ok(match spec.kind {
                All => true,
                Subexceedant => pf.prefs().iter().enumerate().all(|(i, &a)| a <= i + 1),
                Permutation => {
                    crate::permutation::Permutation::from_word(pf.prefs().to_vec()).is_ok()
                }
                Pf02 => only_counts(&pf_stats(pf).mult, |c| c == 0 || c == 2),
                PfLe(k) => only_counts(&pf_stats(pf).mult, |c| c <= k),
                Stirling => is_stirling_permutation(pf.prefs()),
                Increasing | Path | Catalan | Kary(_) | FirstRecords(_) => unreachable!(),
            })
        }
    }
}

/// A path graph with the root at one end; the far end may be any label.
fn is_rooted_path(tree: &CayleyTree) -> bool {
    tree.children_counts().iter().all(|&c| c <= 1)
}

/// Every index with a nonzero count satisfies `allowed`.
fn only_counts(seq: &[usize], allowed: impl Fn(usize) -> bool) -> bool {
    seq.iter()
        .enumerate()
        .all(|(i, &count)| count == 0 || allowed(i))
}

/// A word on `{1,1,2,2,…,m,m}` in which every value strictly between the two
/// copies of `i` exceeds `i`.
pub fn is_stirling_permutation(word: &[usize]) -> bool {
    if !word.len().is_multiple_of(2) {
        return false;
    }
    let m = word.len() / 2;
    let mut first = vec![None; m + 1];
    let mut second = vec![None; m + 1];
    for (pos, &v) in word.iter().enumerate() {
        if v == 0 || v > m {
            return false;
        }
        if first[v].is_none() {
            first[v] = Some(pos);
        } else if second[v].is_none() {
            second[v] = Some(pos);
        } else {
            return false;
        }
    }
    (1..=m).all(|i| match (first[i], second[i]) {
        (Some(a), Some(b)) => word[a + 1..b].iter().all(|&j| j > i),
        _ => false,
    })
}

/// Stirling permutations of order `m`, built by inserting the adjacent pair
/// `m m` into every gap of each permutation of order `m − 1`. Sorted.
pub fn stirling_permutations(m: usize) -> Vec<Vec<usize>> {
    let mut current = vec![Vec::new()];
    for value in 1..=m {
        let mut next = Vec::with_capacity(current.len() * (2 * value - 1));
        for word in &current {
            for gap in 0..=word.len() {
                let mut w = Vec::with_capacity(word.len() + 2);
                w.extend_from_slice(&word[..gap]);
                w.extend([value, value]);
                w.extend_from_slice(&word[gap..]);
                next.push(w);
            }
        }
        current = next;
    }
    current.sort();
    current
}

/// Outcome of comparing a tree family with a parking family under `rho`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub n: usize,
    pub tree_family: String,
    pub parking_family: String,
    pub tree_count: u64,
    pub parking_count: u64,
    /// `rho` maps the parking family onto the tree family exactly.
    pub image_matches: bool,
    /// The two restricted hexad multisets coincide.
    pub hexads_match: bool,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.image_matches && self.hexads_match && self.tree_count == self.parking_count
    }
}

pub fn duality_check(trees: &FamilySpec, parking: &FamilySpec, n: usize) -> Result<DualityReport> {
    if trees.side != Side::Tree || parking.side != Side::Parking {
        return Err(Error::SideMismatch {
            family: format!("{trees} vs {parking}"),
            side: "tree/parking".into(),
        });
    }
    let mut tree_set = BTreeSet::new();
    let mut tree_hist = Histogram::default();
    for t in enumerate_trees(n) {
        if trees.contains_tree(&t)? {
            tree_hist.add(hexad_tree(&t));
            tree_set.insert(t);
        }
    }
    let mut image = BTreeSet::new();
    let mut pf_hist = Histogram::default();
    for pf in enumerate_parking_functions(n) {
        if parking.contains_pf(&pf)? {
            pf_hist.add(hexad_pf(&pf));
            image.insert(rho(&pf));
        }
    }
    Ok(DualityReport {
        n,
        tree_family: trees.kind.to_string(),
        parking_family: parking.kind.to_string(),
        tree_count: tree_set.len() as u64,
        parking_count: pf_hist.total(),
        image_matches: image == tree_set,
        hexads_match: tree_hist == pf_hist,
    })
}

/// `f(n, k) = k·n^{n−k−1}`: forests on `[n]` rooted at `[k]`, with
/// `f(n, n) = 1` and `f(n, 0) = 0` for `n ≥ 1`.
pub fn forest_count(n: usize, k: usize) -> u128 {
    assert!(k <= n);
    if k == n {
        1
    } else if k == 0 {
        0
    } else {
        k as u128 * (n as u128).pow((n - k - 1) as u32)
    }
}

/// Count of trees with first-record set `[k]`, scanning the codes between the
/// lexicographic bounds and keeping those inside the coordinatewise window.
pub fn count_first_record_trees(n: usize, k: usize) -> Result<u64> {
    Ok(first_record_codes(n, k)?.count() as u64)
}

/// Trees with first-record set `[k]`, decoded from the code window.
pub fn enumerate_first_record_trees(
    n: usize,
    k: usize,
) -> Result<impl Iterator<Item = CayleyTree>> {
    Ok(first_record_codes(n, k)?.map(|code| decode(&code)))
}

fn first_record_codes(n: usize, k: usize) -> Result<impl Iterator<Item = RecordCode>> {
    let (lower, upper) = lex_range(n, k)?;
    Ok((lower.rank()..=upper.rank())
        .map(move |rank| RecordCode::from_rank(n, rank))
        .filter(move |code| lex_range_membership(code, k).expect("k checked above")))
}

/// A rooted forest on `[n]`; roots have no parent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootedForest {
    parents: Vec<Option<usize>>,
}

impl RootedForest {
    pub fn parents(&self) -> &[Option<usize>] {
        &self.parents
    }

    pub fn roots(&self) -> Vec<usize> {
        (1..=self.parents.len())
            .filter(|&v| self.parents[v - 1].is_none())
            .collect()
    }

    fn root_of(&self, mut v: usize) -> usize {
        while let Some(p) = self.parents[v - 1] {
            v = p;
        }
        v
    }

    /// `|S|` components, with the members of `S` in distinct components.
    pub fn is_rooted_at(&self, set: &[usize]) -> bool {
        let components: BTreeSet<usize> = set.iter().map(|&v| self.root_of(v)).collect();
        components.len() == set.len() && self.roots().len() == set.len()
    }
}

/// Deletes the root and its edges.
pub fn forest_bridge(tree: &CayleyTree) -> RootedForest {
    RootedForest {
        parents: tree
            .parents()
            .iter()
            .map(|&p| (p != ROOT).then_some(p))
            .collect(),
    }
}

/// Adds a root above every component root.
pub fn forest_bridge_inv(forest: &RootedForest) -> Result<CayleyTree> {
    CayleyTree::from_parents(forest.parents.iter().map(|p| p.unwrap_or(ROOT)).collect())
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `(k+j−1)(n−1)^{n−k−j−1}`, the closed form of `f(n−1, k+j−1)`. The
/// exponent is `−1` only at `j = n − k`, where the factor `k+j−1 = n−1`
/// cancels exactly.
fn takacs_term(n: usize, k: usize, j: usize) -> u128 {
    let base = (n - 1) as u128;
    let factor = (k + j - 1) as u128;
    match (n - k - j).checked_sub(1) {
        Some(exp) => factor * base.pow(exp as u32),
        None => {
            debug_assert_eq!(factor, base);
            factor / base
        }
    }
}

pub fn takacs_sum(n: usize, k: usize) -> u128 {
    (0..=n - k)
        .map(|j| binomial((n - k) as u128, j as u128) * takacs_term(n, k, j))
        .sum()
}

/// `k·n^{n−k−1} = Σ_j C(n−k, j)(k+j−1)(n−1)^{n−k−j−1}` for every `k ∈ [n]`.
/// Requires `n ≥ 2`.
pub fn takacs_identity_check(n: usize) -> bool {
    assert!(n >= 2);
    (1..=n).all(|k| forest_count(n, k) == takacs_sum(n, k))
}

/// The recursion `f(n,k) = Σ_j C(n−k, j) f(n−1, k+j−1)` evaluated with a
/// caller-supplied `f(n−1, ·)`.
pub fn takacs_recursion_holds(n: usize, k: usize, smaller: impl Fn(usize) -> u128) -> bool {
    let rhs: u128 = (0..=n - k)
        .map(|j| binomial((n - k) as u128, j as u128) * smaller(k + j - 1))
        .sum();
    forest_count(n, k) == rhs
}

/// `f(n,k)² ≥ f(n,k−1)·f(n,k+1)` for every interior `k`.
pub fn log_concavity_check(n: usize) -> bool {
    (2..n).all(|k| {
        let mid = forest_count(n, k);
        mid * mid >= forest_count(n, k - 1) * forest_count(n, k + 1)
    })
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
