//! Exact fusion ring arithmetic.
//!
//! The crate models based rings with nonnegative integer structure
//! constants, computes their Frobenius–Perron data, formal codegrees and
//! explicit representations for two-orbit families, and decides a catalogue
//! of categorifiability obstructions with exact certificates.

pub mod classify;
pub mod construct;
pub mod dims;
pub mod error;
pub mod group;
pub mod numbers;
pub mod numbertheory;
pub mod obstruct;
pub mod repr;
pub mod ring;
pub mod serial;
pub mod structure;

pub use construct::{AbelianGroupSpec, CharacterTable};
pub use dims::DimensionProfile;
pub use error::{FusionError, Result};
pub use group::FiniteGroup;
pub use numbers::{AlgebraicReal, Cyclotomic, IntPoly, QuadraticNumber, Rational};
pub use ring::{FusionRing, VerificationReport, Violation};
pub use structure::{OrbitStructure, TwoOrbitData};
