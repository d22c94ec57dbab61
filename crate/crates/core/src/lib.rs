//! Exact constructions of the finite-dimensional irreducible representations
//! of `gl(n)` and `o(2n+1)` in weight bases labelled by Gelfand–Tsetlin type
//! patterns, together with independent checks of the result.
//!
//! Everything here is exact: scalars are arbitrary-precision rationals, and
//! matrix elements that only make sense as limits are computed as univariate
//! rational functions in a deformation parameter and then specialized.
//!
//! The crate is `no_std` and only needs an allocator.
//!
//! ```
//! use gtbasis_core::{patterns::SoHighestWeight, so::build_so};
//!
//! let hw = SoHighestWeight::parse(&["-1/2"]).unwrap();
//! let rep = build_so(&hw).unwrap();
//! assert_eq!(rep.dim(), 2);
//! // F(0,1) sends the second basis vector to half the highest vector.
//! assert_eq!(rep.gen(0, 1).get(0, 1).to_string(), "1/2");
//! ```
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
mod error;
pub mod gl;
pub mod lie;
pub mod linalg;
pub mod operator;
pub mod patterns;
pub mod so;
pub mod verify;

pub use arith::{HalfInt, Laurent, Rational, RationalFunction, UniPoly};
pub use error::Error;
pub use operator::{Operator, SparseVec};
