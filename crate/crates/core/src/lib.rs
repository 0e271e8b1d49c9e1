//! Exact-arithmetic toolkit for constructing combinatorial matrix families
//! (Pascal, Narayana, m-Narayana, Fuss-Narayana, Delannoy, Eulerian) and
//! certifying total positivity, strict total positivity, Polya-frequency and
//! Stieltjes-moment properties on finite truncations.

pub mod error;
pub mod exactmat;
pub mod families;
pub mod harness;
pub mod identities;
pub mod tpkit;

pub use error::{Error, Result};
pub use exactmat::{ExactMatrix, Int, MinorSpec, Rat};
