//! Exact diagram calculus for the partition category and its diagram
//! subcategories: planar rook, rook, Brauer, rook-Brauer, Temperley-Lieb and
//! Motzkin.
//!
//! Morphisms are set-partition diagrams on two rows of labeled vertices;
//! composing two diagrams stacks them, contracts the shared middle row, and
//! records every component swallowed by the middle row as one power of the
//! delooping parameter `t`. All coefficients are exact integer polynomials in
//! `t`, so every verified identity holds over an arbitrary commutative ring.
//!
//! ```
//! use diagcat::text::parse_diagram;
//!
//! let upper = parse_diagram("2 -> 1 ; {1,2,1'}")?;   // merge two strands
//! let lower = parse_diagram("0 -> 2 ; {1'},{2'}")?;  // create two strands
//! let c = upper.compose(&lower)?;
//! assert_eq!(c.alpha, 0);
//! assert_eq!(c.diagram, parse_diagram("0 -> 1 ; {1'}")?);
//! # Ok::<(), diagcat::Error>(())
//! ```
//!
//! The crate covers:
//!
//! - canonical diagrams, planarity, and the family predicates ([`diagram`]);
//! - composition with the power-of-t count, tensor product, the two
//!   reflections, and the skeleton map ([`category`]);
//! - exact scalars and formal linear combinations ([`scalar`], [`morphism`]);
//! - rook matrices, pseudo-echelon form, and matrix factorizations
//!   ([`matrix`]);
//! - deterministic diagram factorizations ([`factorization`]);
//! - generator words, relation catalogs for eight presented categories,
//!   symbolic soundness checks, and word synthesis ([`word`],
//!   [`presentation`]);
//! - exhaustive enumeration and closure checks ([`enumeration`]);
//! - a text/JSON grammar for all of the above ([`text`]).
//!
//! The `examples/` directory has one runnable example per capability, and the
//! `diagcat` binary exposes everything as subcommands.

pub mod category;
pub mod diagram;
pub mod enumeration;
pub mod error;
pub mod factorization;
pub mod matrix;
pub mod morphism;
pub mod presentation;
pub mod scalar;
pub mod text;
pub mod word;

pub use category::{Composed, Involution, Skeleton};
pub use diagram::{Diagram, Family, Row, Vertex};
pub use error::{Error, Result};
pub use factorization::{
    decompose_rook, decompose_rook_brauer, decompose_skeleton, decompose_via_skeleton_family,
    RookBrauerMode, SkeletonFactors,
};
pub use matrix::{from_matrix, to_matrix, FactorMode, RookMatrix};
pub use morphism::Morphism;
pub use presentation::{
    relation_catalog, synthesize_word, verify_presentation, CategoryName, CategorySpec, Relation,
    RelationReport,
};
pub use scalar::Scalar;
pub use word::{Atom, Slice, Word};
