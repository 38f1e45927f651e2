//! Exact-arithmetic machinery for skew-commuting pairs of matrices over
//! cyclotomic fields: symbol algebras, the basis/pair isomorphism, two
//! maximal-torus actions with their filtration, orbit-dimension
//! certificates, and square-zero lifting.
//!
//! Everything is computed over Q(rho_p) with arbitrary-precision
//! rational coordinates; there is no floating point anywhere.

pub mod cyclotomic;
pub mod cycpoly;
pub mod error;
pub mod filtration;
pub mod lifting;
pub mod linalg;
pub mod pairs;
pub mod sample;
pub mod suite;
pub mod symbol;

pub use cyclotomic::{check_prime, CycNum, SUPPORTED_PRIMES};
pub use cycpoly::CycPoly;
pub use error::{Error, Result};
pub use filtration::{DimCertificate, OrbitSpec};
pub use lifting::LiftProblem;
pub use linalg::{DualMat, Mat};
pub use pairs::{Basis, SkewPair, UnitSkewPair};
pub use suite::{run_suite, SuiteReport};
pub use symbol::{SymElem, SymPair, SymParams};
