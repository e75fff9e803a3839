//! Numerical evaluation of the mock theta functions attached to the affine
//! superalgebras sl(2|1)^ and osp(3|2)^, their Zwegers-type real-analytic
//! completions, the principal admissible supercharacters built on them, the
//! N=2 / N=3 superconformal reductions, and a verification engine that
//! machine-checks the modular, elliptic, residue and differential identities
//! the construction satisfies.
//!
//! Everything is double precision with explicit Gaussian tail truncation;
//! all evaluators are pure functions, safe to call concurrently.

pub mod error;
pub mod characters;
pub mod halfint;
pub mod point;
pub mod qexp;
pub mod theta;
pub mod verifier;
pub mod lattice;
pub mod numerators;
pub mod zwegers;

pub use error::{EvalError, EvalResult};
pub use halfint::{HalfInt, QuarterInt};
pub use point::{C64, ModularPoint, Truncation, UVPoint};
