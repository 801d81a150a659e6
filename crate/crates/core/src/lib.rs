//! Probe-field optics of coherently driven (EIT) atomic media with a
//! spatially periodic response.
//!
//! The crate covers two physical settings: cold atoms localized in an
//! optical lattice, and a thermal gas whose Raman resonance is modulated by
//! a standing-wave ac Stark shift. Both reduce to a pair of coupled-mode
//! equations for forward and backward probe amplitudes, solved here in
//! closed form ([`cmt`]) and, independently, by Runge-Kutta integration
//! ([`oracle`]). Band-gap geometry lives in [`analysis`].
//!
//! All quantities are SI: rates and detunings in rad/s, lengths in m,
//! polarizabilities and wave numbers in 1/m.

pub mod analysis;
pub mod cmt;
pub mod constants;
pub mod error;
pub mod lattice;
pub mod medium;
pub mod oracle;
pub mod spectrum;
pub mod warning;

pub use analysis::{GapKind, GapReport};
pub use cmt::{BvpSolution, CmtCoefficients};
pub use error::{Error, Result};
pub use lattice::LatticeGeometry;
pub use medium::{Detunings, EitMedium, StarkModulation};
pub use warning::Warning;
pub use oracle::{OdeSettings, OdeSolution};
pub use spectrum::SpectrumRecord;

pub use num_complex::Complex64;
