//! Classical parking, weary parking (priority-first search on a tree), and the
//! record-preserving bijection `rho` between parking functions and trees.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::decomposition::decompose_labelled;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::tree::{CayleyTree, ROOT};

/// A preference sequence under which every car parks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParkingFunction {
    prefs: Vec<usize>,
}

impl ParkingFunction {
    /// The empty parking function.
    pub fn empty() -> Self {
        Self { prefs: Vec::new() }
    }

    /// Accepts `prefs` iff the classical process parks every car.
    pub fn new(prefs: Vec<usize>) -> Result<Self> {
        classical_park(&prefs)?;
        Ok(Self { prefs })
    }

    pub(crate) fn new_unchecked(prefs: Vec<usize>) -> Self {
        debug_assert!(classical_park(&prefs).is_ok());
        Self { prefs }
    }

    pub fn len(&self) -> usize {
        self.prefs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prefs.is_empty()
    }

    pub fn prefs(&self) -> &[usize] {
        &self.prefs
    }

    /// Preference of car `i` (1-based).
    pub fn get(&self, car: usize) -> usize {
        self.prefs[car - 1]
    }

    /// The bird's-eye permutation: spot `i` ↦ the car parked there.
    pub fn birds_eye(&self) -> Permutation {
        classical_park(&self.prefs).expect("validated on construction")
    }

    /// Left-to-right maxima of the bird's-eye permutation.
    pub fn records(&self) -> Vec<usize> {
        self.birds_eye().records()
    }
}

impl fmt::Display for ParkingFunction {
    /// Canonical text form: `n a_1 … a_n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.len())?;
        for a in &self.prefs {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

/// `σ_i` = preferred spot of the car that ends up in spot `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PriorityVector {
    values: Vec<usize>,
}

impl PriorityVector {
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn is_subexceedant(&self) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(i, &v)| (1..=i + 1).contains(&v))
    }

    /// Spots whose car parked at its preferred spot.
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.values.len())
            .filter(|&i| self.values[i - 1] == i)
            .collect()
    }
}

/// One car's journey down the street.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CarTrace {
    pub car: usize,
    pub preference: usize,
    pub attempts: Vec<usize>,
    pub spot: usize,
}

/// Runs the classical process and returns the bird's-eye permutation.
///
/// This is the membership test for parking functions.
pub fn classical_park(prefs: &[usize]) -> Result<Permutation> {
    park_with(prefs, |_| {})
}

pub fn classical_park_traced(prefs: &[usize]) -> Result<(Permutation, Vec<CarTrace>)> {
    let mut trace = Vec::with_capacity(prefs.len());
    let omega = park_with(prefs, |t| trace.push(t))?;
    Ok((omega, trace))
}

fn park_with(prefs: &[usize], mut observe: impl FnMut(CarTrace)) -> Result<Permutation> {
    let n = prefs.len();
    let mut spots = vec![0usize; n];
    for (idx, &pref) in prefs.iter().enumerate() {
        let car = idx + 1;
        if pref == 0 || pref > n {
            return Err(Error::PreferenceOutOfRange {
                car,
                preference: pref,
                n,
            });
        }
        let Some(offset) = spots[pref - 1..].iter().position(|&c| c == 0) else {
            return Err(Error::NotAParkingFunction { car });
        };
        let spot = pref + offset;
        spots[spot - 1] = car;
        observe(CarTrace {
            car,
            preference: pref,
            attempts: (pref..=spot).collect(),
            spot,
        });
    }
    Ok(Permutation::from_word_unchecked(spots))
}

/// The pigeonhole test: the `i`-th smallest preference is at most `i`.
/// Kept independent of [`classical_park`] for cross-checking.
pub fn sorted_is_subexceedant(prefs: &[usize]) -> bool {
    let mut sorted = prefs.to_vec();
    sorted.sort_unstable();
    sorted
        .iter()
        .enumerate()
        .all(|(i, &a)| (1..=i + 1).contains(&a))
}

/// One step of the priority-first search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VisitStep {
    pub step: usize,
    /// Unblocked, unvisited vertices before this step, ascending.
    pub frontier: Vec<usize>,
    pub visited: usize,
}

/// The weary permutation: priority-first search from the root, always taking
/// the smallest unblocked vertex.
pub fn weary_permutation(tree: &CayleyTree) -> Permutation {
    weary_with(tree, |_| {})
}

pub fn weary_permutation_traced(tree: &CayleyTree) -> (Permutation, Vec<VisitStep>) {
    let mut trace = Vec::with_capacity(tree.order());
    let omega = weary_with(tree, |s| trace.push(s));
    (omega, trace)
}

fn weary_with(tree: &CayleyTree, mut observe: impl FnMut(VisitStep)) -> Permutation {
    let children = tree.children();
    let mut frontier: BinaryHeap<Reverse<usize>> =
        children[ROOT].iter().map(|&c| Reverse(c)).collect();
    let mut order = Vec::with_capacity(tree.order());
    while let Some(Reverse(v)) = frontier.peek().copied() {
        let mut snapshot: Vec<usize> = frontier.iter().map(|r| r.0).collect();
        snapshot.sort_unstable();
        frontier.pop();
        order.push(v);
        observe(VisitStep {
            step: order.len(),
            frontier: snapshot,
            visited: v,
        });
        frontier.extend(children[v].iter().map(|&c| Reverse(c)));
    }
    Permutation::from_word_unchecked(order)
}

/// The weary permutation via the bonsai-word recursion: emit each bonsai root
/// in root order, then recurse into the bonsai with its root replaced by the
/// root sentinel.
pub fn weary_permutation_recursive(tree: &CayleyTree) -> Permutation {
    let mut out = Vec::with_capacity(tree.order());
    bonsai_word(&tree.to_map(), &mut out);
    Permutation::from_word_unchecked(out)
}

fn bonsai_word(parent: &BTreeMap<usize, usize>, out: &mut Vec<usize>) {
    if parent.is_empty() {
        return;
    }
    let (bonsais, _) = decompose_labelled(parent);
    for bonsai in bonsais {
        out.push(bonsai.root());
        if bonsai.len() > 1 {
            bonsai_word(&bonsai.without_root(), out);
        }
    }
}

/// `π_T(i)` = (position of `parent(i)` in `ω_T`, root at 0) + 1.
pub fn preference_sequence(tree: &CayleyTree) -> ParkingFunction {
    let position = weary_permutation(tree).position_table();
    let prefs = tree.parents().iter().map(|&p| position[p] + 1).collect();
    ParkingFunction::new_unchecked(prefs)
}

pub fn priority_vector(pf: &ParkingFunction) -> PriorityVector {
    let omega = pf.birds_eye();
    PriorityVector {
        values: omega.word().iter().map(|&car| pf.get(car)).collect(),
    }
}

/// Increasing tree with `parent(i) = σ_i − 1`.
pub fn arrival_tree(pf: &ParkingFunction) -> CayleyTree {
    let pv = priority_vector(pf);
    CayleyTree::from_parents_unchecked(pv.values().iter().map(|&s| s - 1).collect())
}

/// Tree with `parent(i) = ω_π(π(i) − 1)`, using `ω_π(0) = 0`.
pub fn parking_tree(pf: &ParkingFunction) -> CayleyTree {
    let omega = pf.birds_eye().value_table();
    CayleyTree::from_parents_unchecked(pf.prefs().iter().map(|&a| omega[a - 1]).collect())
}

pub fn rho(pf: &ParkingFunction) -> CayleyTree {
    parking_tree(pf)
}

pub fn rho_inv(tree: &CayleyTree) -> ParkingFunction {
    preference_sequence(tree)
}

/// Cars parked at their preferred spot, ascending.
pub fn lucky_set(pf: &ParkingFunction) -> Vec<usize> {
    let omega = pf.birds_eye();
    let mut lucky: Vec<usize> = omega
        .word()
        .iter()
        .enumerate()
        .filter(|&(i, &car)| pf.get(car) == i + 1)
        .map(|(_, &car)| car)
        .collect();
    lucky.sort_unstable();
    lucky
}
