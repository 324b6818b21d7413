//! Binary-code machinery for even sets of nodes on nodal surfaces in P^3.
//!
//! * [`gf2`]: words, linear codes, duals, weight distributions, projections,
//!   and the Griesmer bound.
//! * [`surface`]: node-count, Betti-number, dimension and divisibility
//!   constraints for nodal surfaces, plus the classical example codes.
//! * [`formulas`]: exact Riemann-Roch and contact-count arithmetic.
//! * [`certificate`]: replayable proof certificates.
//! * [`engine`]: derivation of minimal weights and weight gaps per degree,
//!   and the consistency checks built on it.

pub mod certificate;
pub mod engine;
pub mod formulas;
pub mod gf2;
pub mod report;
pub mod surface;

pub use certificate::{Conclusion, GapReport, ProofCertificate, Rule, Step, Value};
pub use formulas::ChiValue;
pub use gf2::{BitWord, CodeError, LinearCode, ParityClass, WeightDistribution};
pub use report::{CheckOutcome, CheckReport};
pub use surface::{EvenSetParity, NodalSurface, SurfaceCodeProfile};
