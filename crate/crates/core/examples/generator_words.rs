//! Generator words: syntactic morphisms built from atoms stacked in slices.
//! Evaluation lands on a single diagram times a power of t, and every family
//! diagram can be synthesized back into a word.
//!
//! Run with: cargo run --example generator_words

use diagcat::text::{parse_diagram, parse_word};
use diagcat::{synthesize_word, Atom, CategoryName, Involution, Slice, Word};

fn main() -> diagcat::Result<()> {
    // A closed loop: create a strand, then delete it.
    let loop_word = Word::new(0, vec![Slice(vec![Atom::Eta]), Slice(vec![Atom::Eps])])?;
    println!("{loop_word}  evaluates to  {}", loop_word.evaluate());

    // The planar rook diagram read off as a single tensor slice.
    let d = parse_diagram("5 -> 7 ; {1,1'},{2,5'},{4,7'},{3},{5},{2'},{3'},{4'},{6'}")?;
    let w = synthesize_word(&d, CategoryName::PlanarRook)?;
    println!("{d}\n  = {w}");
    assert_eq!(w.evaluate_parts(), (0, d));

    // Words parse from text, and the reflections act syntactically.
    let braid = parse_word("3 : s | ; | s ; s |")?;
    println!("{braid}  evaluates to  {}", braid.evaluate());
    let star = braid.involute(Involution::Star);
    println!("its star is   {star}");
    assert_eq!(star.evaluate(), braid.evaluate().involute(Involution::Star));

    // Synthesis works in every presented category; here a Motzkin diagram.
    let m = parse_diagram("2 -> 2 ; {1,1'},{2},{2'}")?;
    let w = synthesize_word(&m, CategoryName::Motzkin)?;
    println!("{m}\n  = {w}");
    Ok(())
}
