//! Exhaustive bases: enumerate the family diagrams of a type, cross-check
//! the counts, and confirm closure of composition inside each family.
//!
//! Run with: cargo run --example enumerate_and_count

use diagcat::enumeration::{closure_check, count, enumerate};
use diagcat::Family;

fn main() {
    println!("diagrams of type 2 -> 2 per family:");
    for family in Family::ALL {
        println!("  {family:<18} {}", count(family, 2, 2));
    }

    println!("\nall Temperley-Lieb diagrams of type 3 -> 3:");
    for d in enumerate(Family::TemperleyLieb, 3, 3) {
        println!("  {d}");
    }

    println!("\nclosure of the Motzkin family at sizes (2,2,2):");
    let report = closure_check(Family::Motzkin, 2, 2, 2);
    println!("{report}");
    assert!(report.is_clean());
}
