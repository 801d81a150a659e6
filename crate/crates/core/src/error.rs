use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("two-level limit is undefined at zero detuning")]
    ZeroDetuning,

    #[error("thermal coupling denominator vanishes (no drive and zero mean Raman detuning)")]
    SingularThermal,

    #[error("Fourier harmonic {0} outside the supported range |l| <= 16")]
    HarmonicOutOfRange(i32),

    #[error("atomic mass is required for the localization check")]
    MissingAtomicMass,

    #[error("no band gap: {0}")]
    NoGap(&'static str),

    #[error("position z = {z} m lies outside the medium [0, {length}] m")]
    OutsideMedium { z: f64, length: f64 },

    #[error("energy balance violated: R = {r}, T = {t}, 1 - R - T = {a}")]
    EnergyBalance { r: f64, t: f64, a: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require(cond: bool, name: &'static str, value: f64, reason: &'static str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter { name, value, reason })
    }
}
