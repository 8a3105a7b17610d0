//! twistlab-core: exact structure theory for twisted group algebras of
//! compactly generated abelian groups.
//!
//! The toolkit computes symmetry groups, simplicity, lifts to totally skew
//! cocycles, the canonical reduction to noncommutative tori, finite
//! brute-force block decompositions over cyclotomic fields, and the finite
//! poset combinatorics behind decomposition-by-subquotients arguments.
//! All arithmetic is exact: rationals are arbitrary precision and formal
//! symbols t1, t2, … are never evaluated numerically in kernel logic.

pub mod error;
pub mod exec;
pub mod intmat;
pub mod scalar;

pub use error::{Result, TwistError};
pub use scalar::{CircleValue, Scalar};
