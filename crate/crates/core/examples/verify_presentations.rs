//! Symbolic soundness of all eight presentations: every defining relation,
//! closed under the two reflections, evaluates to equal morphisms over Z[t].
//!
//! Run with: cargo run --example verify_presentations

use diagcat::{verify_presentation, CategoryName};

fn main() {
    let mut total = 0;
    for category in CategoryName::ALL {
        let reports = verify_presentation(category);
        let failures = reports.iter().filter(|r| !r.holds).count();
        println!(
            "{category:<16} {:>2} relation instances, {failures} failures",
            reports.len()
        );
        for r in &reports {
            if !r.holds {
                println!("  FAIL {}: {} vs {}", r.name, r.lhs_value, r.rhs_value);
            }
        }
        total += reports.len();
    }
    println!("checked {total} relation instances in total");
}
