use thiserror::Error;

/// Errors produced by diagram construction, composition, factorization,
/// word evaluation, and the text grammar.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a {bottom} -> {top} diagram")]
    OutOfRange {
        vertex: String,
        bottom: usize,
        top: usize,
    },

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("type mismatch: upper factor expects {expected} inputs, lower factor produces {found}")]
    TypeMismatch { expected: usize, found: usize },

    #[error("not a rook diagram: {0}")]
    NotARookDiagram(String),

    #[error("not a rook-Brauer diagram: {0}")]
    NotARookBrauerDiagram(String),

    #[error("no Brauer factor: {0}")]
    NoBrauerFactor(String),

    /// The requested factorization would need a planar factor whose row
    /// pattern is forced to cross itself.
    #[error("no planar factor: {0}")]
    NoPlanarFactor(String),

    #[error("family mismatch: expected a {expected} diagram, got {diagram}")]
    FamilyMismatch { expected: String, diagram: String },

    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    #[error("`{atom}` is not a generator of the {category} category")]
    NotAGenerator { atom: String, category: String },

    #[error("bad matrix: {0}")]
    BadMatrix(String),

    #[error("syntax error at offset {offset}: expected {expected}")]
    Syntax { offset: usize, expected: String },
}

pub type Result<T> = std::result::Result<T, Error>;
