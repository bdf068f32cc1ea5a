//! Deleting all singleton blocks leaves the skeleton; planar rook diagrams
//! delete and reinsert those singletons, so every diagram factors as
//! upper ∘ skeleton ∘ lower with no stray power of t.
//!
//! Run with: cargo run --example skeleton_factorization

use diagcat::text::parse_diagram;
use diagcat::{decompose_skeleton, decompose_via_skeleton_family, Family};

fn main() -> diagcat::Result<()> {
    let d = parse_diagram("7 -> 5 ; {1,3,1'},{2,4},{5,3',5'},{7,2'},{6},{4'}")?;
    let s = d.skeleton();
    println!("d          = {d}");
    println!("skeleton   = {}", s.diagram);
    println!("kept bottom {:?}, kept top {:?}", s.kept_bottom, s.kept_top);

    let f = decompose_skeleton(&d);
    println!("upper      = {}", f.upper);
    println!("core       = {}", f.core);
    println!("lower      = {}", f.lower);
    let inner = f.core.compose(&f.lower)?;
    let outer = f.upper.compose(&inner.diagram)?;
    assert_eq!(inner.alpha + outer.alpha, 0);
    assert_eq!(outer.diagram, d);
    println!("recomposes exactly, total alpha = 0");

    // Skeletons specialize: rook -> permutation, rook-Brauer -> Brauer,
    // Motzkin -> Temperley-Lieb.
    let motzkin = parse_diagram("2 -> 2 ; {1,1'},{2},{2'}")?;
    let f = decompose_via_skeleton_family(&motzkin, Family::Motzkin)?;
    assert!(f.core.is_family(Family::TemperleyLieb));
    println!("motzkin core is Temperley-Lieb: {}", f.core);
    Ok(())
}
