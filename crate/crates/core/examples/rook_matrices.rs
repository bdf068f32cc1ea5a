//! Rook diagrams are 0/1 matrices with at most one 1 per row and column;
//! planarity becomes the pseudo-echelon condition, and permuting the nonzero
//! rows factors any rook diagram through a planar one.
//!
//! Run with: cargo run --example rook_matrices

use diagcat::text::parse_diagram;
use diagcat::{decompose_rook, from_matrix, to_matrix, FactorMode, Family};

fn main() -> diagcat::Result<()> {
    let d = parse_diagram("5 -> 4 ; {2,1'},{5,2'},{3,4'},{1},{4},{3'}")?;
    let m = to_matrix(&d)?;
    println!("diagram:\n  {d}");
    println!("matrix:\n{m}");
    println!("pseudo-echelon? {}", m.is_pseudo_echelon());
    println!("planar?         {}", d.is_planar());
    assert_eq!(from_matrix(&m), d);

    let (s, p) = m.factor(FactorMode::SP);
    println!("permutation factor:\n{s}");
    println!("pseudo-echelon factor:\n{p}");
    assert_eq!(s.mul(&p)?, m);

    // The same factorization at the diagram level: D = S o P with S a
    // permutation and P planar rook.
    let (s_diag, p_diag) = decompose_rook(&d, FactorMode::SP)?;
    assert!(s_diag.is_family(Family::Permutation));
    assert!(p_diag.is_family(Family::PlanarRook));
    let back = s_diag.compose(&p_diag)?;
    assert_eq!((back.alpha, back.diagram), (0, d.clone()));
    println!("D = ({s_diag}) o ({p_diag})");

    // Transposition mirrors the horizontal reflection.
    assert_eq!(to_matrix(&d.star())?, m.transpose());
    println!("transpose corresponds to the star reflection");
    Ok(())
}
