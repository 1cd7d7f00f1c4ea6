//! Parking-function and tree statistics, and the hexad distributions that
//! agree across the bijection.
//!
//! cargo run --release --example statistics -- 5

use weary::families::{enumerate_parking_functions, enumerate_trees};
use weary::parking::{rho, ParkingFunction};
use weary::stats::{hexad_pf, hexad_tree, pf_stats, priority_tree, tree_stats, Histogram};

fn main() -> weary::Result<()> {
    let pf = ParkingFunction::new(vec![1, 2, 5, 1, 5, 5, 6, 5, 1, 1])?;
    let tree = rho(&pf);
    println!("{pf}\n  {:?}", pf_stats(&pf));
    println!("{tree}\n  {:?}", tree_stats(&tree));
    println!("priority tree {}", priority_tree(&tree));
    println!("hexads {} | {}", hexad_pf(&pf), hexad_tree(&tree));

    let n: usize = std::env::args()
        .nth(1)
        .map_or(4, |a| a.parse().expect("order"));
    let trees: Histogram = enumerate_trees(n).map(|t| hexad_tree(&t)).collect();
    let pfs: Histogram = enumerate_parking_functions(n)
        .map(|p| hexad_pf(&p))
        .collect();
    println!(
        "order {n}: {} objects, {} distinct hexads, distributions equal: {}",
        trees.total(),
        trees.distinct(),
        trees == pfs
    );
    Ok(())
}
