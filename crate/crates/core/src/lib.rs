//! Exact kernels for Kauffman bracket ideals: Laurent arithmetic, a
//! Temperley-Lieb transfer-matrix evaluator, colored recoupling coefficients,
//! closure constructions, the solid-torus generator algorithm and strong
//! Groebner bases over the integers.
//!
//! The crate is `no_std` with `alloc`. The `std` feature (on by default) only
//! enables process-wide memo tables for Jones-Wenzl idempotents and
//! tetrahedral values.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod error;
mod upoly;

pub mod diagrams;
pub mod genus1;
pub mod ideal;
pub mod laurent;
pub mod recoupling;
pub mod search;
pub mod tangleops;
pub mod tl;

pub use error::Error;
pub use laurent::{LaurentFraction, LaurentPoly};

pub type Result<T> = core::result::Result<T, Error>;
