//! Exact constructions of the irreducible calibrated representations of the
//! type A affine Hecke algebra indexed by placed skew shapes, together with
//! the verification machinery for the defining relations, the intertwiner
//! calculus, the Garnir-style relations in the natural basis, character
//! formulas, and restriction/induction.

pub mod calibration;
pub mod catalog;
pub mod characters;
pub mod combinatorics;
pub mod induction;
pub mod natural_basis;
pub mod qfield;
pub mod seminormal;
pub mod suite;

pub use qfield::{LaurentPoly, Matrix, QError, RationalFn, RationalMatrix};
