//! Exact-arithmetic implementation of the boson-fermion correspondence
//! as a chain of three isometries: substitution of Newton power sums,
//! multiplication by the Vandermonde determinant (through the Schur
//! basis), and relabeling to fermionic wedge monomials. Every isometry
//! claim is checkable as an exact rational identity.
//!
//! All values are immutable and all operations are pure; everything is
//! safe for concurrent use. With the `parallel` feature (on by default)
//! the isometry verifier and character tables fan out over rayon.

pub mod asymm;
pub mod boson;
pub mod bridge;
pub mod combinatorics;
pub mod error;
pub mod fermion;
mod render;
pub mod symm;

pub use error::Error;
