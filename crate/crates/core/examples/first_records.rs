//! Trees whose first records are exactly 1..=k: three ways to count them,
//! plus the Takács recursion and log-concavity of the counts.
//!
//! cargo run --release --example first_records -- 5

use weary::codec::{lex_interval_size, lex_range};
use weary::families::{
    count_first_record_trees, enumerate_trees, forest_bridge, forest_count, log_concavity_check,
    takacs_sum,
};
use weary::tree::ROOT;

fn main() -> weary::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(5, |a| a.parse().expect("order"));
    println!(" k  formula  window  brute  forests  takács  lex-interval");
    for k in 1..=n {
        let brute = enumerate_trees(n)
            .filter(|t| (1..=n).filter(|&v| t.parent(v) == ROOT).eq(1..=k))
            .count();
        let forests = enumerate_trees(n)
            .map(|t| forest_bridge(&t))
            .filter(|f| f.roots().into_iter().eq(1..=k))
            .count();
        let (lo, hi) = lex_range(n, k)?;
        println!(
            "{k:>2} {:>8} {:>7} {brute:>6} {forests:>8} {:>7} {:>13}   [{lo} .. {hi}]",
            forest_count(n, k),
            count_first_record_trees(n, k)?,
            if n >= 2 {
                takacs_sum(n, k).to_string()
            } else {
                "-".into()
            },
            lex_interval_size(n, k)?,
        );
    }
    println!("log-concave: {}", log_concavity_check(n));
    Ok(())
}
