//! Exact computations with finite-dimensional n-ary algebras given by their
//! matrices of structure constants: generation from binary algebras, total
//! associativity, isomorphism search and expressibility certificates.

pub mod catalog;
pub mod error;
pub mod generate;
pub mod identities;
pub mod iso;
pub mod matrix;
pub mod msc;
pub mod polysolve;
pub mod ring;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use msc::{BasisChange, Msc, MscDocument, RingDoc};
pub use ring::{Ring, RingElem};
