//! Finite frames: order, meets, joins, Heyting implication,
//! pseudocomplements, Booleanization, products and `K(L)`.

mod boolean;
mod format;
mod frame;
mod kframe;
pub mod named;
mod poset;

pub use boolean::{booleanization, pseudocomplement_image, regular_elements, BooleanizationView};
pub use format::{parse_lattice, write_lattice};
pub use frame::{validate_frame, FiniteFrame};
pub use kframe::{k_frame, product_frame, KFrame};
pub use poset::FinitePoset;

/// Index of an element of a finite poset or frame.
pub type Elem = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("carrier of {size} elements exceeds the limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("element index {index} out of range for {size} elements")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("order is not antisymmetric: {a} <= {b} <= {a}")]
    NotAntisymmetric { a: String, b: String },
    #[error("order has no bottom element")]
    NoBottom,
    #[error("order has no top element")]
    NoTop,
    #[error("not a lattice: {a} and {b} have no {missing}")]
    NotALattice {
        a: String,
        b: String,
        missing: &'static str,
    },
    #[error("not distributive: {a} ∧ ({b} ∨ {c}) ≠ ({a} ∧ {b}) ∨ ({a} ∧ {c})")]
    NotDistributive { a: String, b: String, c: String },
    #[error("no Heyting implication {a} → {b}")]
    NoImplication { a: String, b: String },
    #[error("closure violation: {0}")]
    ClosureViolation(String),
}
