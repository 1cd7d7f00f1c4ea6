//! Exhaustive verification of every identity in the crate.
//!
//! Each order `n ≤ n_max` is checked over three independent streams: trees in
//! code-rank order, raw parent maps, and preference sequences. A shard `i/t`
//! owns the `i`-th contiguous slice of every stream, and shard 0 also runs the
//! fixed checks that do not depend on `n_max`. [`finalize`] merges any
//! complete set of shard reports into the same canonical [`VerifyReport`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codec::{
    code_count, decode, encode, lex_range_membership, multiplicity_check, path_word, verify_foata,
    RecordCode,
};
use crate::decomposition::bonsai_decomposition;
use crate::error::{Error, Result};
use crate::families::{
    count_first_record_trees, factorial, family_predicate, forest_bridge, forest_bridge_inv,
    forest_count, is_stirling_permutation, log_concavity_check, sequence_at, sequence_count,
    stirling_permutations, takacs_identity_check, takacs_recursion_holds, FamilyKind, FamilySpec,
    Object,
};
use crate::parking::{
    arrival_tree, classical_park, priority_vector, rho, rho_inv, sorted_is_subexceedant,
    weary_permutation, weary_permutation_recursive, ParkingFunction,
};
use crate::stats::{hexad_pf, hexad_tree, pf_stats, priority_tree, tree_stats, Histogram};
use crate::tree::{CayleyTree, ROOT};

pub const REPORT_SCHEMA: &str = "weary-verify/1";
pub const SHARD_SCHEMA: &str = "weary-verify-shard/1";

/// Largest order accepted unless the caller raises the ceiling.
pub const DEFAULT_MAX_N: usize = 6;

/// Largest order for the fixed counting-identity checks.
const IDENTITY_MAX_N: usize = 8;
const STIRLING_MAX_M: usize = 4;
const BLOCK: u64 = 1024;

/// Shard `index` of `total`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShardId {
    pub index: usize,
    pub total: usize,
}

impl ShardId {
    pub const WHOLE: ShardId = ShardId { index: 0, total: 1 };

    pub fn new(index: usize, total: usize) -> Result<Self> {
        if total == 0 || index >= total {
            return Err(Error::Shard(format!(
                "{index}/{total} needs 0 ≤ index < total"
            )));
        }
        Ok(Self { index, total })
    }

    /// This shard's contiguous slice of `0..len`.
    pub fn range(&self, len: u64) -> Range<u64> {
        let cut = |i: usize| (len as u128 * i as u128 / self.total as u128) as u64;
        cut(self.index)..cut(self.index + 1)
    }
}

impl fmt::Display for ShardId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index, self.total)
    }
}

impl FromStr for ShardId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Shard(format!("expected i/t, got {s:?}"));
        let (i, t) = s.split_once('/').ok_or_else(bad)?;
        ShardId::new(
            i.trim().parse().map_err(|_| bad())?,
            t.trim().parse().map_err(|_| bad())?,
        )
    }
}

/// The earliest failing object of a check, by stream rank.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub rank: u64,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub checked: u64,
    pub failed: u64,
    pub first_failure: Option<Failure>,
}

impl CheckTally {
    fn record(&mut self, rank: u64, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.as_ref().is_none_or(|f| rank < f.rank) {
                self.first_failure = Some(Failure {
                    rank,
                    detail: detail(),
                });
            }
        }
    }

    fn merge(&mut self, other: CheckTally) {
        self.checked += other.checked;
        self.failed += other.failed;
        self.first_failure = match (self.first_failure.take(), other.first_failure) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
}

/// Partial results for one shard. Merging is associative and commutative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShardReport {
    pub schema: String,
    pub n_max: usize,
    pub shard: ShardId,
    pub checks: BTreeMap<String, CheckTally>,
    pub counts: BTreeMap<String, u64>,
    pub histograms: BTreeMap<String, Histogram>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub passed: bool,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: String,
    pub n_max: usize,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    pub counts: BTreeMap<String, u64>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Checks whose name starts with `prefix`.
    pub fn group<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a CheckResult> {
        self.checks
            .iter()
            .filter(move |c| c.name.starts_with(prefix))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }
}

/// Unsharded run: the single shard `0/1`, finalized.
pub fn verify(n_max: usize) -> VerifyReport {
    finalize(vec![run_shard(n_max, ShardId::WHOLE)]).expect("one complete shard")
}

pub fn run_shard(n_max: usize, shard: ShardId) -> ShardReport {
    let mut report = ShardReport {
        schema: SHARD_SCHEMA.into(),
        n_max,
        shard,
        checks: BTreeMap::new(),
        counts: BTreeMap::new(),
        histograms: BTreeMap::new(),
    };
    for n in 0..=n_max {
        let trees = scan(shard.range(code_count(n)), |rank, acc| {
            visit_tree(n, rank, acc)
        });
        trees.store(n, "hexad.tree", &mut report);
        let maps = scan(shard.range(map_count(n)), |rank, acc| {
            visit_parent_map(n, rank, acc)
        });
        maps.store(n, "hexad.tree.parent_maps", &mut report);
        let prefs = scan(shard.range(sequence_count(n)), |rank, acc| {
            visit_sequence(n, rank, acc)
        });
        prefs.store(n, "hexad.pf", &mut report);
    }
    if shard.index == 0 {
        fixed_checks(&mut report.checks);
    }
    report
}

/// Merges a complete set of shards (any order) and derives the count and
/// distribution checks.
pub fn finalize(shards: Vec<ShardReport>) -> Result<VerifyReport> {
    let first = shards
        .first()
        .ok_or_else(|| Error::Shard("no shard reports".into()))?;
    let (n_max, total) = (first.n_max, first.shard.total);
    let mut seen = BTreeSet::new();
    for s in &shards {
        if s.schema != SHARD_SCHEMA {
            return Err(Error::Shard(format!("unknown schema {:?}", s.schema)));
        }
        if s.n_max != n_max || s.shard.total != total || s.shard.index >= total {
            return Err(Error::Shard(format!(
                "shard {} (n_max {}) does not match {}/{} (n_max {n_max})",
                s.shard, s.n_max, first.shard.index, total
            )));
        }
        if !seen.insert(s.shard.index) {
            return Err(Error::Shard(format!("shard {} given twice", s.shard)));
        }
    }
    if seen.len() != total {
        return Err(Error::Shard(format!(
            "{} of {total} shards given",
            seen.len()
        )));
    }

    let mut checks: BTreeMap<String, CheckTally> = BTreeMap::new();
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut histograms: BTreeMap<String, Histogram> = BTreeMap::new();
    for s in shards {
        for (k, v) in s.checks {
            checks.entry(k).or_default().merge(v);
        }
        for (k, v) in s.counts {
            *counts.entry(k).or_default() += v;
        }
        for (k, v) in s.histograms {
            histograms.entry(k).or_default().merge(v);
        }
    }
    for n in 0..=n_max {
        derived_checks(n, &counts, &histograms, &mut checks);
    }

    let checks: Vec<CheckResult> = checks
        .into_iter()
        .map(|(name, t)| CheckResult {
            name,
            checked: t.checked,
            failed: t.failed,
            passed: t.failed == 0,
            first_failure: t.first_failure.map(|f| f.detail),
        })
        .collect();
    Ok(VerifyReport {
        schema: REPORT_SCHEMA.into(),
        n_max,
        passed: checks.iter().all(|c| c.passed),
        checks,
        counts,
    })
}

/// Maps `[n] → [n]₀`, valid trees or not.
fn map_count(n: usize) -> u64 {
    (n as u64 + 1).pow(n as u32)
}

/// Per-block accumulator with static keys; formatted once per order.
#[derive(Default)]
struct Acc {
    checks: BTreeMap<&'static str, CheckTally>,
    counts: BTreeMap<(&'static str, Option<usize>), u64>,
    hexads: Histogram,
}

impl Acc {
    fn check(&mut self, name: &'static str, rank: u64, ok: bool, detail: impl FnOnce() -> String) {
        self.checks
            .entry(name)
            .or_default()
            .record(rank, ok, detail);
    }

    fn count(&mut self, name: &'static str) {
        *self.counts.entry((name, None)).or_default() += 1;
    }

    fn count_k(&mut self, name: &'static str, k: usize) {
        *self.counts.entry((name, Some(k))).or_default() += 1;
    }

    fn merge(mut self, other: Acc) -> Acc {
        for (k, v) in other.checks {
            self.checks.entry(k).or_default().merge(v);
        }
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        self.hexads.merge(other.hexads);
        self
    }

    fn store(self, n: usize, histogram: &str, report: &mut ShardReport) {
        for (name, tally) in self.checks {
            report
                .checks
                .entry(key(name, n, None))
                .or_default()
                .merge(tally);
        }
        for ((name, k), count) in self.counts {
            *report.counts.entry(key(name, n, k)).or_default() += count;
        }
        if self.hexads.total() > 0 {
            report
                .histograms
                .insert(key(histogram, n, None), self.hexads);
        }
    }
}

fn key(name: &str, n: usize, k: Option<usize>) -> String {
    match k {
        Some(k) => format!("{name}[n={n},k={k}]"),
        None => format!("{name}[n={n}]"),
    }
}

fn scan(range: Range<u64>, visit: impl Fn(u64, &mut Acc) + Sync) -> Acc {
    let blocks: Vec<Range<u64>> = (range.start..range.end)
        .step_by(BLOCK as usize)
        .map(|lo| lo..(lo + BLOCK).min(range.end))
        .collect();
    blocks
        .into_par_iter()
        .map(|block| {
            let mut acc = Acc::default();
            for rank in block {
                visit(rank, &mut acc);
            }
            acc
        })
        .reduce(Acc::default, Acc::merge)
}

struct Duality {
    check: &'static str,
    tree_count: &'static str,
    pf_count: &'static str,
    tree: FamilyKind,
    parking: FamilyKind,
}

const DUALITIES: [Duality; 5] = [
    Duality {
        check: "duality.increasing/subexceedant",
        tree_count: "family.tree.increasing",
        pf_count: "family.pf.subexceedant",
        tree: FamilyKind::Increasing,
        parking: FamilyKind::Subexceedant,
    },
    Duality {
        check: "duality.path/permutation",
        tree_count: "family.tree.path",
        pf_count: "family.pf.permutation",
        tree: FamilyKind::Path,
        parking: FamilyKind::Permutation,
    },
    Duality {
        check: "duality.catalan/pf02",
        tree_count: "family.tree.catalan",
        pf_count: "family.pf.pf02",
        tree: FamilyKind::Catalan,
        parking: FamilyKind::Pf02,
    },
    Duality {
        check: "duality.kary:2/pfle:2",
        tree_count: "family.tree.kary:2",
        pf_count: "family.pf.pfle:2",
        tree: FamilyKind::Kary(2),
        parking: FamilyKind::PfLe(2),
    },
    Duality {
        check: "duality.kary:3/pfle:3",
        tree_count: "family.tree.kary:3",
        pf_count: "family.pf.pfle:3",
        tree: FamilyKind::Kary(3),
        parking: FamilyKind::PfLe(3),
    },
];

fn in_family(side_tree: bool, kind: FamilyKind, object: Object<'_>) -> bool {
    let spec = if side_tree {
        FamilySpec::tree(kind)
    } else {
        FamilySpec::parking(kind)
    };
    family_predicate(&spec.expect("static pairing"), object).expect("sides match")
}

fn visit_tree(n: usize, rank: u64, acc: &mut Acc) {
    let (t, code) = if n == 0 {
        (CayleyTree::bare_root(), None)
    } else {
        let code = RecordCode::from_rank(n, rank);
        (decode(&code), Some(code))
    };
    acc.count("trees");

    if let Some(code) = &code {
        let back = encode(&t).expect("order ≥ 1");
        acc.check("codec.encode_decode", rank, back == *code, || {
            format!("code {code} decodes to {t}, which encodes to {back}")
        });
        acc.check(
            "codec.multiplicity",
            rank,
            multiplicity_check(&t) == Ok(true),
            || format!("tree {t}"),
        );
        acc.check(
            "codec.increasing_iff_subexceedant",
            rank,
            t.is_increasing() == code.is_subexceedant(),
            || format!("code {code}"),
        );
    }

    let omega = weary_permutation(&t);
    let recursive = weary_permutation_recursive(&t);
    acc.check("weary.recursive", rank, recursive == omega, || {
        format!("tree {t}: search {omega}, recursion {recursive}")
    });
    let pf = rho_inv(&t);
    acc.check(
        "weary.preference_sequence",
        rank,
        pf.birds_eye() == omega,
        || {
            format!(
                "tree {t}: ω_T {omega}, bird's-eye of {pf} is {}",
                pf.birds_eye()
            )
        },
    );
    acc.check("rho.tree_round_trip", rank, rho(&pf) == t, || {
        format!("tree {t} -> {pf} -> {}", rho(&pf))
    });
    acc.check(
        "rho.records_from_trees",
        rank,
        t.records() == pf.records(),
        || format!("tree {t}"),
    );

    let ht = hexad_tree(&t);
    let hp = hexad_pf(&pf);
    acc.check("stats.hexad_per_object", rank, ht == hp, || {
        format!("tree {t}: {ht} vs {pf}: {hp}")
    });
    acc.hexads.add(ht);

    if n >= 1 {
        let first_records = root_children_prefix(&t);
        let code = code.as_ref().expect("order ≥ 1");
        let window_ok = (1..=n).all(|k| {
            lex_range_membership(code, k).expect("k in range") == (first_records == Some(k))
        });
        acc.check("first_records.window", rank, window_ok, || {
            format!("code {code}")
        });
        if let Some(k) = first_records {
            acc.count_k("first_records.enumeration", k);
        }
        let forest = forest_bridge(&t);
        acc.check(
            "first_records.forest_round_trip",
            rank,
            forest_bridge_inv(&forest).as_ref() == Ok(&t),
            || format!("tree {t}"),
        );
        let roots = forest.roots();
        if roots.iter().copied().eq(1..=roots.len()) && forest.is_rooted_at(&roots) {
            acc.count_k("first_records.forest", roots.len());
        }

        if path_word(&t).is_ok() {
            acc.count("foata.paths");
            acc.check("foata", rank, verify_foata(&t) == Ok(true), || {
                format!("tree {t}")
            });
        }
    }

    for d in &DUALITIES {
        let a = in_family(true, d.tree, Object::Tree(&t));
        let b = in_family(false, d.parking, Object::Parking(&pf));
        acc.check(d.check, rank, a == b, || {
            format!("tree {t} in {}: {a}; {pf} in {}: {b}", d.tree, d.parking)
        });
        if a {
            acc.count(d.tree_count);
        }
    }
    if n.is_multiple_of(2) && is_stirling_permutation(pf.prefs()) {
        acc.count("stirling.trees");
    }
}

/// `Some(k)` when the root's children are exactly `1..=k`.
fn root_children_prefix(t: &CayleyTree) -> Option<usize> {
    let roots: Vec<usize> = (1..=t.order()).filter(|&v| t.parent(v) == ROOT).collect();
    roots
        .iter()
        .copied()
        .eq(1..=roots.len())
        .then_some(roots.len())
}

/// Independent enumeration: every map `[n] → [n]₀`, kept when it is a tree.
fn visit_parent_map(n: usize, mut rank: u64, acc: &mut Acc) {
    let original = rank;
    let base = n as u64 + 1;
    let mut parents = vec![0; n];
    for slot in parents.iter_mut().rev() {
        *slot = (rank % base) as usize;
        rank /= base;
    }
    let Ok(t) = CayleyTree::from_parents(parents) else {
        return;
    };
    acc.count("parent_maps.trees");
    if n >= 1 {
        let code = encode(&t).expect("order ≥ 1");
        acc.check("codec.decode_encode", original, decode(&code) == t, || {
            format!(
                "tree {t} encodes to {code}, which decodes to {}",
                decode(&code)
            )
        });
    }
}

fn visit_sequence(n: usize, rank: u64, acc: &mut Acc) {
    let prefs = sequence_at(n, rank);
    let parks = classical_park(&prefs).is_ok();
    acc.check(
        "parking.sorted_characterization",
        rank,
        parks == sorted_is_subexceedant(&prefs),
        || format!("{prefs:?}"),
    );
    if !parks {
        return;
    }
    let pf = ParkingFunction::new_unchecked(prefs);
    acc.count("parking_functions");

    let t = rho(&pf);
    acc.check("rho.parking_round_trip", rank, rho_inv(&t) == pf, || {
        format!("{pf} -> {t} -> {}", rho_inv(&t))
    });
    acc.check(
        "rho.records_from_parking",
        rank,
        t.records() == pf.records(),
        || format!("{pf} -> {t}"),
    );
    acc.check(
        "rho.weary_is_birds_eye",
        rank,
        weary_permutation(&t) == pf.birds_eye(),
        || format!("{pf} -> {t}"),
    );
    acc.check(
        "parking.priority_vector_subexceedant",
        rank,
        priority_vector(&pf).is_subexceedant(),
        || format!("{pf}"),
    );
    let ct = arrival_tree(&pf);
    acc.check(
        "parking.arrival_tree_increasing",
        rank,
        ct.is_increasing(),
        || format!("{pf} -> {ct}"),
    );
    acc.check(
        "stats.priority_tree_is_arrival_tree",
        rank,
        priority_tree(&t) == ct,
        || format!("{pf}: pt {}, CT {ct}", priority_tree(&t)),
    );
    acc.hexads.add(hexad_pf(&pf));

    for d in &DUALITIES {
        if in_family(false, d.parking, Object::Parking(&pf)) {
            acc.count(d.pf_count);
        }
    }
    if n.is_multiple_of(2) && is_stirling_permutation(pf.prefs()) {
        acc.count("stirling.pf");
    }
}

fn expect_eq(checks: &mut BTreeMap<String, CheckTally>, name: String, got: u64, expected: u64) {
    checks
        .entry(name)
        .or_default()
        .record(0, got == expected, || {
            format!("got {got}, expected {expected}")
        });
}

fn derived_checks(
    n: usize,
    counts: &BTreeMap<String, u64>,
    histograms: &BTreeMap<String, Histogram>,
    checks: &mut BTreeMap<String, CheckTally>,
) {
    let count = |name: &str| counts.get(&key(name, n, None)).copied().unwrap_or(0);
    let count_k = |name: &str, k| counts.get(&key(name, n, Some(k))).copied().unwrap_or(0);
    let cayley = code_count(n);
    expect_eq(checks, key("count.trees", n, None), count("trees"), cayley);
    expect_eq(
        checks,
        key("count.parent_maps", n, None),
        count("parent_maps.trees"),
        cayley,
    );
    expect_eq(
        checks,
        key("count.parking_functions", n, None),
        count("parking_functions"),
        cayley,
    );

    for d in &DUALITIES {
        let name = d.check.replacen("duality.", "count.duality.", 1);
        expect_eq(
            checks,
            key(&name, n, None),
            count(d.tree_count),
            count(d.pf_count),
        );
    }
    let fact = factorial(n);
    expect_eq(
        checks,
        key("count.increasing", n, None),
        count("family.tree.increasing"),
        fact,
    );
    expect_eq(
        checks,
        key("count.path", n, None),
        count("family.tree.path"),
        fact,
    );
    if n >= 1 {
        expect_eq(
            checks,
            key("count.foata_paths", n, None),
            count("foata.paths"),
            factorial(n - 1),
        );
        for k in 1..=n {
            let formula = forest_count(n, k) as u64;
            let lex = count_first_record_trees(n, k).expect("k in range");
            let name = |route: &str| key(&format!("count.first_records.{route}"), n, Some(k));
            expect_eq(
                checks,
                name("enumeration"),
                count_k("first_records.enumeration", k),
                formula,
            );
            expect_eq(checks, name("lex_window"), lex, formula);
            expect_eq(
                checks,
                name("forest_bridge"),
                count_k("first_records.forest", k),
                formula,
            );
        }
    }
    if n.is_multiple_of(2) {
        let double_factorial: u64 = (1..n as u64).step_by(2).product();
        expect_eq(
            checks,
            key("count.stirling.trees", n, None),
            count("stirling.trees"),
            double_factorial,
        );
        expect_eq(
            checks,
            key("count.stirling.pf", n, None),
            count("stirling.pf"),
            double_factorial,
        );
    }

    let empty = Histogram::default();
    let trees = histograms
        .get(&key("hexad.tree", n, None))
        .unwrap_or(&empty);
    let pfs = histograms.get(&key("hexad.pf", n, None)).unwrap_or(&empty);
    let all: BTreeSet<_> = trees.0.keys().chain(pfs.0.keys()).collect();
    let tally = checks
        .entry(key("stats.equidistribution", n, None))
        .or_default();
    for (idx, hexad) in all.into_iter().enumerate() {
        let a = trees.0.get(hexad).copied().unwrap_or(0);
        let b = pfs.0.get(hexad).copied().unwrap_or(0);
        tally.record(idx as u64, a == b, || {
            format!("{hexad}: {a} trees, {b} parking functions")
        });
    }
}

/// Checks that run once, in shard 0: worked examples, the closed-form
/// counting identities, and Stirling permutations.
fn fixed_checks(checks: &mut BTreeMap<String, CheckTally>) {
    let mut record = |name: String, ok: bool, detail: String| {
        checks.entry(name).or_default().record(0, ok, || detail);
    };

    let code = RecordCode::new(9, vec![7, 5, 7, 2, 0, 1, 5, 1]).expect("valid code");
    let t = decode(&code);
    let d = bonsai_decomposition(&t).expect("order 9");
    let pf = rho_inv(&t);
    let ct_code = encode(&arrival_tree(&pf)).expect("order 9");
    let omega = weary_permutation(&t);
    let pv = priority_vector(&pf);
    record(
        "fixture.record_code.tree".into(),
        t.parents() == [7, 5, 7, 2, 0, 1, 0, 5, 1],
        format!("{t}"),
    );
    record(
        "fixture.record_code.records".into(),
        t.records() == [5, 7, 8, 9],
        format!("{:?}", t.records()),
    );
    record(
        "fixture.record_code.attachments".into(),
        d.attachments == [0, 5, 1],
        format!("{:?}", d.attachments),
    );
    record(
        "fixture.record_code.weary_permutation".into(),
        omega.word() == [5, 2, 4, 7, 1, 3, 6, 8, 9],
        format!("{omega}"),
    );
    record(
        "fixture.record_code.preference_sequence".into(),
        pf.prefs() == [5, 2, 5, 3, 1, 6, 1, 2, 6],
        format!("{pf}"),
    );
    record(
        "fixture.record_code.priority_vector".into(),
        pv.values() == [1, 2, 3, 1, 5, 5, 6, 2, 6],
        format!("{:?}", pv.values()),
    );
    record(
        "fixture.record_code.arrival_tree_code".into(),
        ct_code.entries() == [1, 2, 0, 4, 4, 5, 1, 5],
        format!("{ct_code}"),
    );

    let ten = ParkingFunction::new(vec![1, 2, 5, 1, 5, 5, 6, 5, 1, 1]).expect("parking function");
    let s = pf_stats(&ten);
    record(
        "fixture.statistics.parking".into(),
        (s.dis, s.probes, s.lucky, s.ones, s.absent) == (23, 33, 3, 4, 7)
            && s.mult == [7, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0],
        format!("{s:?}"),
    );
    let ts = tree_stats(&rho(&ten));
    record(
        "fixture.statistics.tree".into(),
        (ts.deg_root, ts.leaves, ts.sasc, ts.wait, ts.psa, ts.diff) == (4, 7, 2, 33, 3, 15)
            && ts.chseq == [7, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0],
        format!("{ts:?}"),
    );

    let path = CayleyTree::from_parents(vec![3, 6, 5, 1, 0, 4, 2, 7]).expect("path");
    let path_code = encode(&path).expect("order 8");
    record(
        "fixture.foata".into(),
        path_word(&path).ok() == Some(vec![5, 3, 1, 4, 6, 2, 7, 8])
            && path_code.entries() == [3, 6, 5, 1, 4, 2, 7]
            && verify_foata(&path) == Ok(true),
        format!("{path_code}"),
    );

    for n in 2..=IDENTITY_MAX_N {
        record(
            format!("identity.takacs[n={n}]"),
            takacs_identity_check(n),
            format!("n = {n}"),
        );
        record(
            format!("identity.takacs_recursion[n={n}]"),
            (1..=n).all(|k| takacs_recursion_holds(n, k, |j| forest_count(n - 1, j))),
            format!("n = {n}"),
        );
    }
    for n in 1..=IDENTITY_MAX_N {
        record(
            format!("identity.log_concavity[n={n}]"),
            log_concavity_check(n),
            format!("n = {n}"),
        );
    }

    for m in 1..=STIRLING_MAX_M {
        let words = stirling_permutations(m);
        let double_factorial: u64 = (1..2 * m as u64).step_by(2).product();
        record(
            format!("stirling.count[m={m}]"),
            words.len() as u64 == double_factorial,
            format!("{} words", words.len()),
        );
        let pfs: Vec<ParkingFunction> = words
            .iter()
            .filter_map(|w| ParkingFunction::new(w.clone()).ok())
            .collect();
        record(
            format!("stirling.parking[m={m}]"),
            pfs.len() == words.len(),
            format!("{} of {} park", pfs.len(), words.len()),
        );
        let images: BTreeSet<CayleyTree> = pfs.iter().map(rho).collect();
        let onto = pfs.iter().all(|pf| {
            let t = rho(pf);
            rho_inv(&t) == *pf && in_family(true, FamilyKind::Stirling, Object::Tree(&t))
        });
        record(
            format!("stirling.rho_bijective[m={m}]"),
            images.len() == pfs.len() && onto,
            format!("{} images of {} words", images.len(), pfs.len()),
        );
    }
}
