//! Configuration, sweeps and output files for the `eit-bragg` command.
//!
//! Configs are TOML documents whose quantities carry unit suffixes
//! (`"2 ge"`, `"400 nm"`, `"0.1 lat"`); everything is converted to SI before
//! it reaches the core library.

pub mod app;
pub mod config;
pub mod emit;
pub mod error;
pub mod quantity;
pub mod run;

pub use config::{Command, RunConfig, Scenario};
pub use error::{CliError, Result};
pub use quantity::{Quantity, Unit};
