//! One line per acceptance criterion. Expected values come either from the
//! worked examples or from brute-force oracles in this file, which share no
//! code with the library beyond its types.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::process::{Command, ExitCode};
use std::time::Instant;

use weary::codec::{code_count, decode, encode, RecordCode};
use weary::decomposition::bonsai_decomposition;
use weary::families::{
    count_first_record_trees, duality_check, enumerate_trees, forest_bridge, log_concavity_check,
    takacs_identity_check, FamilyKind, FamilySpec,
};
use weary::parking::{
    arrival_tree, preference_sequence, priority_vector, rho, rho_inv, weary_permutation,
    weary_permutation_recursive, ParkingFunction,
};
use weary::stats::{hexad_tree, pf_stats, tree_stats, Histogram, StatHexad};
use weary::tree::CayleyTree;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---- oracles ----

fn digits(mut rank: u64, base: u64, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = (rank % base) as usize;
        rank /= base;
    }
    out
}

/// Every parent map `[n] → [n]₀` that reaches 0 from every vertex.
fn oracle_trees(n: usize) -> Vec<Vec<usize>> {
    let base = n as u64 + 1;
    (0..base.pow(n as u32))
        .map(|r| digits(r, base, n))
        .filter(|p| {
            (1..=n).all(|start| {
                let mut v = start;
                for _ in 0..=n {
                    if v == 0 {
                        return true;
                    }
                    v = p[v - 1];
                }
                false
            })
        })
        .collect()
}

/// Parking functions as the sequences with at least `j` preferences `≤ j`
/// for every `j`.
fn oracle_parking_functions(n: usize) -> Vec<Vec<usize>> {
    let base = n as u64;
    (0..base.pow(n as u32))
        .map(|r| {
            digits(r, base, n)
                .into_iter()
                .map(|d| d + 1)
                .collect::<Vec<_>>()
        })
        .filter(|a| (1..=n).all(|j| a.iter().filter(|&&x| x <= j).count() >= j))
        .collect()
}

/// Spot-by-spot simulation; returns (car in each spot, spot of each car).
fn oracle_park(prefs: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = prefs.len();
    let mut street = vec![0; n + 1];
    let mut spot_of = vec![0; n + 1];
    for (idx, &p) in prefs.iter().enumerate() {
        let mut s = p;
        while street[s] != 0 {
            s += 1;
        }
        street[s] = idx + 1;
        spot_of[idx + 1] = s;
    }
    (street[1..].to_vec(), spot_of[1..].to_vec())
}

/// Repeatedly visit the smallest vertex whose parent has been visited.
fn oracle_weary(parents: &[usize]) -> Vec<usize> {
    let n = parents.len();
    let mut visited = vec![false; n + 1];
    visited[0] = true;
    let mut order = Vec::new();
    while order.len() < n {
        let v = (1..=n)
            .find(|&v| !visited[v] && visited[parents[v - 1]])
            .expect("tree");
        visited[v] = true;
        order.push(v);
    }
    order
}

fn oracle_records(parents: &[usize]) -> Vec<usize> {
    (1..=parents.len())
        .filter(|&v| {
            let mut u = parents[v - 1];
            while u != 0 {
                if u > v {
                    return false;
                }
                u = parents[u - 1];
            }
            true
        })
        .collect()
}

fn lr_maxima(word: &[usize]) -> Vec<usize> {
    let mut best = 0;
    let mut out = Vec::new();
    for &w in word {
        if w > best {
            best = w;
            out.push(w);
        }
    }
    out.sort_unstable();
    out
}

fn oracle_pf_hexad(prefs: &[usize]) -> StatHexad {
    let n = prefs.len();
    let (street, spot_of) = oracle_park(prefs);
    let probes: usize = (0..n).map(|i| spot_of[i] - prefs[i] + 1).sum();
    let lucky = (0..n).filter(|&i| spot_of[i] == prefs[i]).count();
    let mut occ = vec![0; n + 2];
    for &a in prefs {
        occ[a] += 1;
    }
    let mut mult = vec![0; n + 1];
    for &c in &occ[1..=n + 1] {
        mult[c] += 1;
    }
    StatHexad {
        rec_set: lr_maxima(&street),
        stat2: probes as u64,
        stat3: lucky,
        stat4: occ.get(1).copied().unwrap_or(0),
        seq5: mult,
        stat6: n,
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn f(n: usize, k: usize) -> u128 {
    if k == n {
        1
    } else {
        k as u128 * (n as u128).pow((n - k - 1) as u32)
    }
}

fn choose(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Cycles split before each left-to-right maximum, `a_1 → a_2 → … → a_1`.
fn oracle_foata(word: &[usize]) -> Vec<usize> {
    let mut image = vec![0; word.len() + 1];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut best = 0;
    for &w in word {
        if w > best {
            best = w;
            blocks.push(Vec::new());
        }
        blocks.last_mut().unwrap().push(w);
    }
    for b in &blocks {
        for i in 0..b.len() {
            image[b[i]] = b[(i + 1) % b.len()];
        }
    }
    image[1..].to_vec()
}

fn inverse(word: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; word.len()];
    for (i, &w) in word.iter().enumerate() {
        inv[w - 1] = i + 1;
    }
    inv
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

/// Distinct arrangements of `{1,1,…,m,m}` where everything between the two
/// copies of `i` exceeds `i`.
fn oracle_stirling(m: usize) -> BTreeSet<Vec<usize>> {
    fn go(left: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if left.iter().all(|&c| c == 0) {
            out.insert(prefix.clone());
            return;
        }
        for v in 1..left.len() {
            if left[v] > 0 {
                left[v] -= 1;
                prefix.push(v);
                go(left, prefix, out);
                prefix.pop();
                left[v] += 1;
            }
        }
    }
    let mut left = vec![2; m + 1];
    left[0] = 0;
    let mut all = BTreeSet::new();
    go(&mut left, &mut Vec::new(), &mut all);
    all.into_iter()
        .filter(|w| {
            (1..=m).all(|i| {
                let a = w.iter().position(|&x| x == i).unwrap();
                let b = w.iter().rposition(|&x| x == i).unwrap();
                w[a + 1..b].iter().all(|&x| x > i)
            })
        })
        .collect()
}

fn tree(parents: &[usize]) -> CayleyTree {
    CayleyTree::from_parents(parents.to_vec()).unwrap()
}

fn pf(prefs: &[usize]) -> ParkingFunction {
    ParkingFunction::new(prefs.to_vec()).unwrap()
}

// ---- criteria ----

fn codec_bijectivity() -> Outcome {
    let mut total = 0;
    for n in 1..=7 {
        let expected = (n as u64 + 1).pow(n as u32 - 1);
        let trees = oracle_trees(n);
        ensure(trees.len() as u64 == expected, || {
            format!("n={n}: {} parent maps are trees", trees.len())
        })?;
        for p in &trees {
            let t = tree(p);
            let code = encode(&t).unwrap();
            ensure(decode(&code) == t, || format!("decode∘encode fails on {t}"))?;
        }
        let mut images = BTreeSet::new();
        for rank in 0..expected {
            let code = RecordCode::from_rank(n, rank);
            let t = decode(&code);
            ensure(encode(&t).unwrap() == code, || {
                format!("encode∘decode fails on {code}")
            })?;
            images.insert(t.parents().to_vec());
        }
        ensure(images.len() as u64 == expected, || {
            format!("n={n}: decode not injective")
        })?;
        ensure(code_count(n) == expected, || format!("code_count({n})"))?;
        total += expected;
    }
    ensure(oracle_trees(3).len() == 16, || "n=3 count".into())?;
    Ok(format!("n<=7, {total} trees both ways; n=3 gives 16"))
}

fn record_code_fixture() -> Outcome {
    let t = decode(&RecordCode::new(9, vec![7, 5, 7, 2, 0, 1, 5, 1]).unwrap());
    let d = bonsai_decomposition(&t).unwrap();
    let pi = preference_sequence(&t);
    ensure(t.records() == [5, 7, 8, 9], || {
        format!("records {:?}", t.records())
    })?;
    ensure(d.attachments == [0, 5, 1], || {
        format!("attachments {:?}", d.attachments)
    })?;
    ensure(
        weary_permutation(&t).word() == [5, 2, 4, 7, 1, 3, 6, 8, 9],
        || "ω".into(),
    )?;
    ensure(pi.prefs() == [5, 2, 5, 3, 1, 6, 1, 2, 6], || {
        format!("π_T {pi}")
    })?;
    ensure(
        priority_vector(&pi).values() == [1, 2, 3, 1, 5, 5, 6, 2, 6],
        || "pv".into(),
    )?;
    let ct = encode(&arrival_tree(&pi)).unwrap();
    ensure(ct.entries() == [1, 2, 0, 4, 4, 5, 1, 5], || {
        format!("arrival code {ct}")
    })?;
    Ok("records, attachments, ω, π_T, pv, arrival code".into())
}

fn bijection() -> Outcome {
    let mut total = 0;
    for n in 0..=7 {
        let trees = oracle_trees(n);
        let pfs = oracle_parking_functions(n);
        ensure(trees.len() == pfs.len(), || {
            format!("n={n}: {} trees, {} pfs", trees.len(), pfs.len())
        })?;
        let mut image = BTreeSet::new();
        for prefs in &pfs {
            let p = pf(prefs);
            let t = rho(&p);
            ensure(rho_inv(&t) == p, || format!("rho_inv∘rho fails on {p}"))?;
            let (street, _) = oracle_park(prefs);
            ensure(oracle_records(t.parents()) == lr_maxima(&street), || {
                format!("records of rho({p}) = {t}")
            })?;
            image.insert(t.parents().to_vec());
        }
        ensure(image.len() == trees.len(), || {
            format!("n={n}: rho not onto")
        })?;
        for parents in &trees {
            let t = tree(parents);
            ensure(rho(&rho_inv(&t)) == t, || {
                format!("rho∘rho_inv fails on {t}")
            })?;
        }
        total += pfs.len();
    }
    Ok(format!("n<=7, {total} pairs, records preserved"))
}

fn equidistribution() -> Outcome {
    for n in 0..=6 {
        let trees: Histogram = enumerate_trees(n).map(|t| hexad_tree(&t)).collect();
        let pfs: Histogram = oracle_parking_functions(n)
            .iter()
            .map(|a| oracle_pf_hexad(a))
            .collect();
        ensure(trees == pfs, || format!("n={n}: hexad multisets differ"))?;
        for t in enumerate_trees(n) {
            let p = rho_inv(&t);
            let (ts, ps) = (tree_stats(&t), pf_stats(&p));
            ensure(
                ts.wait == ps.probes
                    && ts.psa == ps.lucky
                    && ts.deg_root == ps.ones
                    && ts.chseq == ps.mult
                    && ts.ord == ps.len,
                || format!("per-object identities fail on {t}"),
            )?;
        }
    }
    Ok("n<=6, multisets equal and per-object identities hold".into())
}

fn statistics_fixture() -> Outcome {
    let p = pf(&[1, 2, 5, 1, 5, 5, 6, 5, 1, 1]);
    let s = pf_stats(&p);
    let mult = vec![7, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0];
    ensure(
        (s.dis, s.probes, s.lucky, s.ones, s.absent) == (23, 33, 3, 4, 7) && s.mult == mult,
        || format!("{s:?}"),
    )?;
    let t = tree_stats(&rho(&p));
    ensure(
        (t.deg_root, t.leaves, t.sasc, t.wait, t.psa) == (4, 7, 2, 33, 3) && t.chseq == mult,
        || format!("{t:?}"),
    )?;
    // oracle value; the worked example prints 13
    ensure(t.diff == 15, || format!("diff {}", t.diff))?;
    Ok("parking and tree statistics; diff pinned at 15".into())
}

fn counting_identities() -> Outcome {
    for n in 1..=6 {
        let trees = oracle_trees(n);
        for k in 1..=n {
            let formula = f(n, k) as u64;
            let brute = trees
                .iter()
                .filter(|p| (1..=n).filter(|&v| p[v - 1] == 0).eq(1..=k))
                .count() as u64;
            let forests = trees
                .iter()
                .filter(|p| forest_bridge(&tree(p)).roots().into_iter().eq(1..=k))
                .count() as u64;
            let window = count_first_record_trees(n, k).unwrap();
            ensure(
                brute == formula && forests == formula && window == formula,
                || {
                    format!("n={n} k={k}: formula {formula}, brute {brute}, forests {forests}, window {window}")
                },
            )?;
        }
    }
    for n in 2..=8usize {
        for k in 1..=n {
            let mut sum = 0u128;
            for j in 0..=n - k {
                let factor = (k + j - 1) as u128;
                let base = (n - 1) as u128;
                let term = match (n - k - j).checked_sub(1) {
                    Some(e) => factor * base.pow(e as u32),
                    None => {
                        ensure(factor.is_multiple_of(base), || {
                            format!("n={n} k={k}: inexact boundary term")
                        })?;
                        factor / base
                    }
                };
                sum += choose((n - k) as u128, j as u128) * term;
            }
            ensure(sum == f(n, k), || {
                format!("Takács n={n} k={k}: {sum} vs {}", f(n, k))
            })?;
        }
        ensure(takacs_identity_check(n), || format!("library Takács n={n}"))?;
    }
    for n in 1..=8 {
        let ok = (2..n).all(|k| f(n, k) * f(n, k) >= f(n, k - 1) * f(n, k + 1));
        ensure(ok && log_concavity_check(n), || {
            format!("log-concavity n={n}")
        })?;
    }
    Ok("first records n<=6 three ways; Takács 2<=n<=8; log-concave n<=8".into())
}

fn foata() -> Outcome {
    let mut total = 0;
    for n in 1..=7 {
        for word in permutations(n - 1) {
            let mut parents = vec![0; n];
            let mut prev = 0;
            for &v in word.iter().chain(std::iter::once(&n)) {
                parents[v - 1] = prev;
                prev = v;
            }
            let t = tree(&parents);
            let code = encode(&t).unwrap();
            ensure(code.entries() == inverse(&oracle_foata(&word)), || {
                format!("word {word:?}: code {code}")
            })?;
            total += 1;
        }
    }
    let example = tree(&[3, 6, 5, 1, 0, 4, 2, 7]);
    let code = encode(&example).unwrap();
    ensure(code.entries() == [3, 6, 5, 1, 4, 2, 7], || {
        format!("example code {code}")
    })?;
    ensure(
        code.entries() == inverse(&oracle_foata(&[5, 3, 1, 4, 6, 2, 7])),
        || "example".into(),
    )?;
    Ok(format!("{total} paths n<=7 plus the order-8 example"))
}

fn weary_equivalence() -> Outcome {
    let mut total = 0;
    for n in 0..=7 {
        for parents in oracle_trees(n) {
            let t = tree(&parents);
            let omega = weary_permutation(&t);
            ensure(omega.word() == oracle_weary(&parents), || {
                format!("search on {t}")
            })?;
            ensure(weary_permutation_recursive(&t) == omega, || {
                format!("recursion on {t}")
            })?;
            let (street, _) = oracle_park(preference_sequence(&t).prefs());
            ensure(street == omega.word(), || format!("ω_T vs ω_π_T on {t}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} trees n<=7"))
}

fn dualities() -> Outcome {
    let pairs = [
        (FamilyKind::Increasing, FamilyKind::Subexceedant, true),
        (FamilyKind::Path, FamilyKind::Permutation, true),
        (FamilyKind::Catalan, FamilyKind::Pf02, false),
        (FamilyKind::Kary(2), FamilyKind::PfLe(2), false),
        (FamilyKind::Kary(3), FamilyKind::PfLe(3), false),
    ];
    for n in 0..=6 {
        for (a, b, factorial_count) in pairs {
            let r = duality_check(
                &FamilySpec::tree(a).unwrap(),
                &FamilySpec::parking(b).unwrap(),
                n,
            )
            .unwrap();
            ensure(r.holds(), || format!("n={n}: {r:?}"))?;
            ensure(!factorial_count || r.tree_count == factorial(n), || {
                format!("n={n}: {a} count {}", r.tree_count)
            })?;
        }
        // independent counts on the parking side
        let pfs = oracle_parking_functions(n);
        let sub = pfs
            .iter()
            .filter(|a| a.iter().enumerate().all(|(i, &x)| x <= i + 1))
            .count();
        let perm = pfs
            .iter()
            .filter(|a| a.iter().collect::<BTreeSet<_>>().len() == n)
            .count();
        ensure(
            sub as u64 == factorial(n) && perm as u64 == factorial(n),
            || format!("n={n}: {sub} subexceedant, {perm} permutations"),
        )?;
    }
    for m in 1..=4 {
        let words = oracle_stirling(m);
        let double_factorial: u64 = (1..2 * m as u64).step_by(2).product();
        ensure(words.len() as u64 == double_factorial, || {
            format!("m={m}: {} words", words.len())
        })?;
        let mut images = BTreeMap::new();
        for w in &words {
            let p = ParkingFunction::new(w.clone()).map_err(|e| format!("{w:?}: {e}"))?;
            let t = rho(&p);
            ensure(rho_inv(&t) == p, || format!("{p} does not come back"))?;
            images.insert(t, p);
        }
        ensure(images.len() == words.len(), || {
            format!("m={m}: rho not injective")
        })?;
        if m <= 3 {
            // the Stirling trees, read off the whole tree side
            let trees: BTreeSet<CayleyTree> = enumerate_trees(2 * m)
                .filter(|t| words.contains(rho_inv(t).prefs()))
                .collect();
            ensure(trees.iter().eq(images.keys()), || {
                format!("m={m}: image differs")
            })?;
        }
    }
    Ok("five pairs n<=6; Stirling m<=4 park and map bijectively".into())
}

fn sharding() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_weary");
    let dir = std::env::temp_dir().join(format!("weary-acceptance-{}", std::process::id()));
    fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut files = Vec::new();
    for i in 0..8 {
        let out = Command::new(bin)
            .args(["verify", "6", "--shard", &format!("{i}/8")])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("shard {i} exit {:?}", out.status.code())
        })?;
        let path = dir.join(format!("shard{i}.json"));
        fs::write(&path, &out.stdout).map_err(|e| e.to_string())?;
        files.push(path);
    }
    // merge order must not matter
    files.reverse();
    let merged = Command::new(bin)
        .args(["--format", "json", "verify-merge"])
        .args(&files)
        .output()
        .map_err(|e| e.to_string())?;
    let whole = Command::new(bin)
        .args(["verify", "6", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    let _ = fs::remove_dir_all(&dir);
    ensure(merged.status.success() && whole.status.success(), || {
        "verify failed".into()
    })?;
    ensure(merged.stdout == whole.stdout, || {
        "merged report differs from unsharded".into()
    })?;
    let report: serde_json::Value =
        serde_json::from_slice(&whole.stdout).map_err(|e| e.to_string())?;
    ensure(report["passed"] == true, || "report not passing".into())?;
    Ok(format!(
        "8 shards merge byte-identically ({} bytes, {} checks)",
        whole.stdout.len(),
        report["checks"].as_array().map_or(0, Vec::len)
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("codec bijectivity", codec_bijectivity),
        ("record code fixture", record_code_fixture),
        ("bijection rho", bijection),
        ("equidistribution", equidistribution),
        ("statistics fixture", statistics_fixture),
        ("counting identities", counting_identities),
        ("Foata paths", foata),
        ("weary equivalence", weary_equivalence),
        ("duality suites", dualities),
        ("determinism and sharding", sharding),
    ];
    let mut failed = 0;
    for (idx, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS {name}: {detail} [{secs:.1}s]",
                idx + 1
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {:>2} FAIL {name}: {detail} [{secs:.1}s]",
                    idx + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
