//! Weary parking on a tree: priority-first search from the root, traced step
//! by step, and the same order produced by the bonsai recursion.
//!
//! cargo run --example weary_parking

use weary::parking::{preference_sequence, weary_permutation_recursive, weary_permutation_traced};
use weary::tree::CayleyTree;

fn main() -> weary::Result<()> {
    let tree = CayleyTree::from_parents(vec![7, 5, 7, 2, 0, 1, 0, 5, 1])?;
    let (omega, steps) = weary_permutation_traced(&tree);
    for s in &steps {
        println!(
            "step {:>2}  frontier {:<12} visit {}",
            s.step,
            format!("{:?}", s.frontier),
            s.visited
        );
    }
    println!("weary permutation   {omega}");
    println!("bonsai recursion    {}", weary_permutation_recursive(&tree));

    // each car prefers the spot right after its parent's
    let pf = preference_sequence(&tree);
    println!("preference sequence {pf}");
    println!("bird's-eye          {}", pf.birds_eye());
    assert_eq!(pf.birds_eye(), omega);
    Ok(())
}
