//! Two-factor decompositions of rook-Brauer diagrams: a Brauer diagram above
//! a planar rook diagram always exists (and dually); a permutation paired
//! with a Motzkin diagram exists exactly when the row the Motzkin factor must
//! copy verbatim is free of trapped crossings.
//!
//! Run with: cargo run --example rook_brauer_factorizations

use diagcat::text::parse_diagram;
use diagcat::{decompose_rook_brauer, Family, RookBrauerMode};

fn main() -> diagcat::Result<()> {
    let d = parse_diagram("8 -> 5 ; {1},{2,5'},{3,5},{4,3'},{6},{7,8},{1',2'},{4'}")?;
    println!("d = {d}");

    let (b, p) = decompose_rook_brauer(&d, RookBrauerMode::Bp)?;
    assert!(b.is_family(Family::Brauer) && p.is_family(Family::PlanarRook));
    println!("B  = {b}");
    println!("P  = {p}");
    let back = b.compose(&p)?;
    assert_eq!((back.alpha, back.diagram), (0, d.clone()));
    println!("B o P recomposes d exactly\n");

    // A diagram with crossing arcs on the bottom row: the lower permutation
    // of the MS mode absorbs them.
    let crossing = parse_diagram("4 -> 0 ; {1,3},{2,4}")?;
    let (m, s) = decompose_rook_brauer(&crossing, RookBrauerMode::Ms)?;
    println!("{crossing}\n  = ({m}) o ({s})");

    // But a strand trapped under an arc on both rows defeats both orders;
    // the error names the obstruction.
    let stuck = parse_diagram("3 -> 3 ; {1,3},{2,2'},{1',3'}")?;
    for mode in [RookBrauerMode::Sm, RookBrauerMode::Ms] {
        match decompose_rook_brauer(&stuck, mode) {
            Ok(_) => unreachable!("no permutation/Motzkin factorization exists"),
            Err(e) => println!("{stuck} ({mode:?}): {e}"),
        }
    }
    Ok(())
}
