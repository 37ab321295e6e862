//! Two-term silting enumeration for finite-dimensional algebras over prime
//! fields, with the reduction tools used to classify τ-tilting finite Schur
//! algebras.
//!
//! Conventions used throughout: paths compose left to right, so an arrow
//! `a: i -> j` lies in `e_i A e_j`. Projectives are right modules
//! `P_i = e_i A`, and `Hom(P_i, P_j)` is identified with `e_j A e_i` by
//! `f -> f(e_i)`. Under this identification composition of maps is
//! multiplication in `A`, so matrices of maps multiply like ordinary
//! matrices with algebra entries.

pub mod algebra;
pub mod catalog;
pub mod complex;
pub mod error;
pub mod field;
pub mod hom;
pub mod schur;
pub mod search;
pub mod sign;

pub use algebra::{BasedAlgebra, Quiver, Relation};
pub use complex::{BlockMatrix, ChainMap, TwoTermComplex};
pub use error::{Error, Result};
pub use field::{FMatrix, FieldElement};
pub use search::{enumerate, EnumerationResult, SearchOptions, SiltingObject};
pub use sign::SignVector;
