//! The two reflections: star flips diagrams upside down (reversing
//! composition), sharp mirrors them left to right (reversing tensor order).
//!
//! Run with: cargo run --example involutions

use diagcat::text::parse_diagram;
use diagcat::{Family, Involution};

fn main() -> diagcat::Result<()> {
    let d = parse_diagram("7 -> 5 ; {1,3,1'},{2,4},{5,3',5'},{7,2'},{6},{4'}")?;
    println!("d        = {d}");
    println!("d star   = {}", d.involute(Involution::Star));
    println!("d sharp  = {}", d.involute(Involution::Sharp));

    // Both are involutions and they commute.
    assert_eq!(d.star().star(), d);
    assert_eq!(d.sharp().sharp(), d);
    assert_eq!(d.star().sharp(), d.sharp().star());

    // Star reverses composition and keeps the loop count.
    let lower = parse_diagram("4 -> 7 ; {1,1'},{2},{3,7'},{4,5'},{2',4'},{3'},{6'}")?;
    let forward = d.compose(&lower)?;
    let reversed = lower.star().compose(&d.star())?;
    assert_eq!(forward.alpha, reversed.alpha);
    assert_eq!(forward.diagram.star(), reversed.diagram);
    println!("(d o lower)* = lower* o d*  with alpha = {}", forward.alpha);

    // Every family is closed under both reflections.
    let motzkin = parse_diagram("2 -> 2 ; {1,1'},{2},{2'}")?;
    assert!(motzkin.is_family(Family::Motzkin));
    assert!(motzkin.star().is_family(Family::Motzkin));
    assert!(motzkin.sharp().is_family(Family::Motzkin));
    println!("families are invariant under both reflections");
    Ok(())
}
