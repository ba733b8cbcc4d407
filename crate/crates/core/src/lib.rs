//! Exact construction of the special cocycles of the Weil representation for the
//! dual pair U(p,q) x U(a,b) in the polynomial Fock model, and the machinery to
//! check their properties at small parameters.

pub mod cochain;
pub mod error;
pub mod fock;
pub mod liealg;
pub mod linalg;
pub mod partition;
pub mod poly;
pub mod scalar;
pub mod schrodinger;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{Gauss, Scalar};
