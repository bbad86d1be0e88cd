//! Exact constructions of tableau-indexed modules for the rook monoid, the
//! partial and full transformation monoids, and the checks that tie their
//! dimensions, characters and filtrations together.
pub mod branching;
pub mod cauchy;
pub mod cache;
pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod functor;
pub mod harmonics;
pub mod linalg;
pub mod meataxe;
pub mod monoid;
pub mod poly;
pub mod rational;
pub mod report;
pub mod schur;
pub mod skew;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
