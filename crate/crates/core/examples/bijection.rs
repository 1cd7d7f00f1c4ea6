//! The record-preserving bijection between parking functions and Cayley
//! trees, through the priority vector, the arrival tree and the parking tree.
//!
//! cargo run --example bijection

use weary::parking::{
    arrival_tree, classical_park_traced, priority_vector, rho, rho_inv, ParkingFunction,
};

fn main() -> weary::Result<()> {
    let pf = ParkingFunction::new(vec![1, 2, 5, 1, 5, 5, 6, 5, 1, 1])?;
    let (omega, trace) = classical_park_traced(pf.prefs())?;
    for car in &trace {
        println!(
            "car {:>2} prefers {:>2}, tries {:?}",
            car.car, car.preference, car.attempts
        );
    }
    println!("bird's-eye      {omega}");
    println!("priority vector {:?}", priority_vector(&pf).values());
    println!("arrival tree    {}", arrival_tree(&pf));

    let tree = rho(&pf);
    println!("parking tree    {tree}");
    println!("tree records    {:?}", tree.records());
    println!("ω records       {:?}", pf.records());
    assert_eq!(tree.records(), pf.records());
    assert_eq!(rho_inv(&tree), pf);

    // and it is onto: every tree of order 4 comes back
    let trees: Vec<_> = weary::families::enumerate_trees(4).collect();
    assert!(trees.iter().all(|t| rho(&rho_inv(t)) == *t));
    println!("order 4: {} trees, all round-trip", trees.len());
    Ok(())
}
