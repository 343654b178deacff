//! Words in the rank-two free group F2 = ⟨a, b⟩, its Sturmian and braid
//! automorphisms, Christoffel words and the chain procedure that decides
//! whether a pair of words is a basis.
//!
//! Words are written with `a`, `b` for the generators and `A`, `B` for
//! their inverses; `1` is the empty word.

pub mod autos;
pub mod braids;
pub mod chains;
pub mod christoffel;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod relations;
pub mod words;

pub use autos::{AutoName, F2Morphism, NamedLetter, SturmianWord};
pub use braids::{BraidGroup, BraidWord, ExtBraidElement, RankedMorphism};
pub use chains::{is_basis, maximal_chain, BasisVerdict, MaximalChain, WordPair};
pub use christoffel::{christoffel_word, ChristoffelPath};
pub use error::{Error, Result};
pub use lattice::{IntMatrix2, LatticeVector, Quadrant};
pub use words::{FreeWord, Gen, Letter, PositiveWord, RankedWord};
