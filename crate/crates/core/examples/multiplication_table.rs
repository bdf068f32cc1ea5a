//! The endomorphism algebra of an object: compose every pair of basis
//! diagrams and print the structure constants as powers of t.
//!
//! Run with: cargo run --example multiplication_table

use diagcat::enumeration::enumerate;
use diagcat::Family;

fn main() {
    let family = Family::TemperleyLieb;
    let k = 3;
    let basis = enumerate(family, k, k);
    println!("{family} basis of End({k}):");
    for (i, d) in basis.iter().enumerate() {
        println!("  {} = {d}", i + 1);
    }
    println!();
    for left in &basis {
        let row: Vec<String> = basis
            .iter()
            .map(|right| {
                let c = left.compose(right).expect("square types compose");
                let index = basis.binary_search(&c.diagram).expect("closed family") + 1;
                format!("t^{} * {index}", c.alpha)
            })
            .collect();
        println!("{}", row.join(" | "));
    }

    // Specializing t recovers an integer multiplication table.
    println!("\nsame table at t = 2 (coefficient * index):");
    for left in &basis {
        let row: Vec<String> = basis
            .iter()
            .map(|right| {
                let c = left.compose(right).expect("square types compose");
                let index = basis.binary_search(&c.diagram).expect("closed family") + 1;
                format!("{} * {index}", 2i64.pow(c.alpha as u32))
            })
            .collect();
        println!("{}", row.join(" | "));
    }
}
