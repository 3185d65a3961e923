//! Point-free topology on finite structures.
//!
//! Finite frames (distributive lattices) with their Heyting operations and
//! Booleanization, the coframe of sublocales `S(L)` and the frame `S_c(L)`
//! of joins of closed sublocales, decision procedures for subfitness, weak
//! subfitness and symmetry, finite topological spaces, and an exact
//! regular-open calculus on finite unions of rational intervals.
//!
//! ```
//! use pointfree::lattice::named;
//! use pointfree::separation::is_subfit;
//!
//! let c3 = named::chain(3);
//! let report = is_subfit(&c3);
//! assert!(!report.holds());
//! assert_eq!(report.witness.unwrap().render(&c3), "(m,0)");
//! ```

pub mod campaign;
pub mod config;
pub mod dot;
pub mod elemset;
pub mod lattice;
pub mod realline;
pub mod separation;
pub mod sublocale;
pub mod topospace;

pub use config::Budget;
pub use elemset::ElemSet;
pub use lattice::{Elem, FiniteFrame, FinitePoset, LatticeError};
pub use realline::{ExtRat, KRealPair, RationalClosed, RationalOpen, RealLineError};
pub use separation::{Axiom, SeparationError, SeparationReport, Verdict, Witness};
pub use sublocale::{ScFrame, Sublocale, SublocaleError, SublocaleLattice};
pub use topospace::{FiniteSpace, TopoError};
