//! Record-dual families: for each pair, rho maps the parking family onto the
//! tree family.
//!
//! cargo run --release --example families -- 5

use weary::families::{duality_check, stirling_permutations, FamilyKind, FamilySpec};
use weary::parking::{rho, ParkingFunction};

fn main() -> weary::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(4, |a| a.parse().expect("order"));
    let pairs = [
        (FamilyKind::Increasing, FamilyKind::Subexceedant),
        (FamilyKind::Path, FamilyKind::Permutation),
        (FamilyKind::Catalan, FamilyKind::Pf02),
        (FamilyKind::Kary(2), FamilyKind::PfLe(2)),
        (FamilyKind::Kary(3), FamilyKind::PfLe(3)),
    ];
    for (t, p) in pairs {
        let r = duality_check(&FamilySpec::tree(t)?, &FamilySpec::parking(p)?, n)?;
        println!(
            "{:<12} {:<14} {:>5} {:>5}  {}",
            r.tree_family,
            r.parking_family,
            r.tree_count,
            r.parking_count,
            if r.holds() { "ok" } else { "MISMATCH" }
        );
    }

    for word in stirling_permutations(2) {
        let pf = ParkingFunction::new(word)?;
        println!("stirling {pf} -> {}", rho(&pf));
    }
    Ok(())
}
