//! Runs the exhaustive suite up to a given order, once whole and once split
//! into shards, and checks that the two reports agree byte for byte.
//!
//! cargo run --release --example sharded_verify -- 5 4

use std::time::Instant;

use weary::verify::{finalize, run_shard, verify, ShardId};

fn main() {
    let mut args = std::env::args().skip(1);
    let n_max: usize = args.next().map_or(5, |a| a.parse().expect("order"));
    let shards: usize = args.next().map_or(4, |a| a.parse().expect("shard count"));

    let start = Instant::now();
    let whole = verify(n_max);
    println!(
        "unsharded: {} checks in {:.2?}",
        whole.checks.len(),
        start.elapsed()
    );

    let start = Instant::now();
    let parts = (0..shards)
        .map(|i| run_shard(n_max, ShardId::new(i, shards).unwrap()))
        .collect();
    let merged = finalize(parts).expect("complete shard set");
    println!("{shards} shards merged in {:.2?}", start.elapsed());

    for failure in whole.failures() {
        println!("FAIL {} {:?}", failure.name, failure.first_failure);
    }
    println!("verdict: {}", if whole.passed { "pass" } else { "fail" });
    println!("identical: {}", merged.to_json() == whole.to_json());
}
