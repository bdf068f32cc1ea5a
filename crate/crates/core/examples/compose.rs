//! Build two diagrams and compose them: stacking contracts the shared middle
//! row and every component swallowed there becomes one power of t.
//!
//! Run with: cargo run --example compose

use diagcat::text::parse_diagram;
use diagcat::{Diagram, Morphism, Scalar};

fn main() -> diagcat::Result<()> {
    let upper = parse_diagram("7 -> 5 ; {1,3,1'},{2,4},{5,3',5'},{7,2'},{6},{4'}")?;
    let lower = parse_diagram("4 -> 7 ; {1,1'},{2},{3,7'},{4,5'},{2',4'},{3'},{6'}")?;
    println!("upper = {upper}");
    println!("lower = {lower}");

    let c = upper.compose(&lower)?;
    println!(
        "upper o lower = {}",
        Morphism::with_coeff(Scalar::t_power(c.alpha), c.diagram)
    );

    // A strand deleted from above and created from below closes into a loop.
    let eps = parse_diagram("1 -> 0 ; {1}")?;
    let eta = parse_diagram("0 -> 1 ; {1'}")?;
    let loop_ = eps.compose(&eta)?;
    println!("eps o eta = t^{} * ({})", loop_.alpha, loop_.diagram);

    // Identities are neutral and tensoring places the left operand leftmost.
    let id = Diagram::identity(7);
    assert_eq!(upper.compose(&id)?.diagram, upper);
    println!("eta (x) eps = {}", eta.tensor(&eps));
    Ok(())
}
