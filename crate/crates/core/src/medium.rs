//! Polarizability models for the probe transition.
//!
//! The probe couples |g> to |e>; a strong drive of Rabi frequency `omega_d`
//! couples |s> to |e>. The returned polarizability `alpha` is
//! `(omega / c) * chi / 2` in 1/m, so a uniform medium multiplies the probe
//! amplitude by `exp(i * alpha * z)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::warning::Warning;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Atomic and drive parameters of a three-level Lambda medium.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EitMedium {
    /// Excited-state (half) decay rate, rad/s.
    pub gamma_e: f64,
    /// Raman coherence (half) decay rate, rad/s.
    pub gamma_s: f64,
    /// Drive Rabi frequency magnitude, rad/s.
    pub omega_d: f64,
    /// Resonant amplitude absorption coefficient of the bulk medium, 1/m.
    pub a0: f64,
}

impl EitMedium {
    pub fn new(gamma_e: f64, gamma_s: f64, omega_d: f64, a0: f64) -> Result<Self> {
        let m = Self {
            gamma_e,
            gamma_s,
            omega_d,
            a0,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        require(
            self.gamma_e.is_finite() && self.gamma_e > 0.0,
            "gamma_e",
            self.gamma_e,
            "must be finite and positive",
        )?;
        require(
            self.gamma_s.is_finite() && self.gamma_s >= 0.0,
            "gamma_s",
            self.gamma_s,
            "must be finite and non-negative",
        )?;
        require(
            self.omega_d.is_finite() && self.omega_d >= 0.0,
            "omega_d",
            self.omega_d,
            "must be finite and non-negative",
        )?;
        require(
            self.a0.is_finite() && self.a0 > 0.0,
            "a0",
            self.a0,
            "must be finite and positive",
        )
    }

    pub fn warnings(&self) -> Vec<Warning> {
        let mut out = Vec::new();
        if self.gamma_s >= self.gamma_e {
            out.push(Warning::RamanDecayNotSmall {
                gamma_s: self.gamma_s,
                gamma_e: self.gamma_e,
            });
        }
        out
    }

    /// Strong-drive conditions of the thermal model:
    /// `omega_d^2 >> gamma_e * gamma_s` and `omega_d^2 >> (S/4)^2` for both
    /// Stark amplitudes. Each one holding by less than 10x yields a warning.
    pub fn thermal_warnings(&self, stark: &StarkModulation) -> Vec<Warning> {
        let od2 = self.omega_d * self.omega_d;
        let checks = [
            ("|omega_d|^2 >> gamma_e * gamma_s", self.gamma_e * self.gamma_s),
            ("|omega_d|^2 >> (S_g / 4)^2", (stark.s_g / 4.0).powi(2)),
            ("|omega_d|^2 >> (S_s / 4)^2", (stark.s_s / 4.0).powi(2)),
        ];
        let mut out = self.warnings();
        for (condition, scale) in checks {
            if scale > 0.0 && od2 < 10.0 * scale {
                out.push(Warning::WeakDrive {
                    condition,
                    ratio: od2 / scale,
                });
            }
        }
        out
    }
}

/// One-photon and two-photon (Raman) detunings, rad/s.
///
/// The thermal model uses the same type for its mean detunings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Detunings {
    pub delta: f64,
    pub delta_r: f64,
}

impl Detunings {
    pub fn new(delta: f64, delta_r: f64) -> Result<Self> {
        require(delta.is_finite(), "delta", delta, "must be finite")?;
        require(delta_r.is_finite(), "delta_r", delta_r, "must be finite")?;
        Ok(Self { delta, delta_r })
    }

    /// Resonant drive: the Raman detuning follows the probe detuning.
    pub fn resonant(delta: f64) -> Self {
        Self {
            delta,
            delta_r: delta,
        }
    }
}

/// Standing-wave ac Stark modulation amplitudes of the two ground levels, rad/s.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StarkModulation {
    pub s_g: f64,
    pub s_s: f64,
}

impl StarkModulation {
    pub fn new(s_g: f64, s_s: f64) -> Self {
        Self { s_g, s_s }
    }

    /// Difference `S_g - S_s` that modulates the Raman resonance.
    pub fn s_gs(&self) -> f64 {
        self.s_g - self.s_s
    }
}

/// Full EIT polarizability
/// `i a0 gamma_e / (gamma_e - i delta + omega_d^2 / (gamma_s - i delta_r))`.
///
/// Evaluated in the rationalized form
/// `i a0 gamma_e w / ((gamma_e - i delta) w + omega_d^2)` with
/// `w = gamma_s - i delta_r`, which is regular at the two-photon resonance
/// when `gamma_s = 0`. The fully singular point (every rate and detuning
/// zero) cannot be reached with a valid medium since `gamma_e > 0`.
pub fn alpha_cold(m: &EitMedium, d: &Detunings) -> Complex64 {
    let one_photon = Complex64::new(m.gamma_e, -d.delta);
    if m.omega_d == 0.0 {
        return I * m.a0 * m.gamma_e / one_photon;
    }
    let raman = Complex64::new(m.gamma_s, -d.delta_r);
    I * m.a0 * m.gamma_e * raman / (one_photon * raman + m.omega_d * m.omega_d)
}

/// Far-detuned limit `-a0 gamma_e / delta` of [`alpha_cold`]; meaningful
/// only for `|delta| >> gamma_e, omega_d`.
pub fn alpha_two_level_limit(m: &EitMedium, delta: f64) -> Result<f64> {
    if delta == 0.0 {
        return Err(Error::ZeroDetuning);
    }
    Ok(-m.a0 * m.gamma_e / delta)
}

/// Averaged self-coupling `alpha'` and grating coupling `eta` of a thermal
/// medium whose detunings are modulated as `delta + S_g cos(2 k_s z) / 2`
/// and `delta_r + S_gs cos(2 k_s z) / 2`.
///
/// `mean` holds the mean detunings. Both results are in 1/m.
pub fn alpha_eta_thermal(
    m: &EitMedium,
    stark: &StarkModulation,
    mean: &Detunings,
) -> Result<(Complex64, Complex64)> {
    let od2 = m.omega_d * m.omega_d;
    let (dp, drp) = (mean.delta, mean.delta_r);
    let s_gs = stark.s_gs();
    let detuned = od2 - dp * drp;
    let denom = detuned * detuned + m.gamma_e * m.gamma_e * drp * drp;
    if denom == 0.0 {
        return Err(Error::SingularThermal);
    }
    let scale = m.a0 * m.gamma_e / denom;
    let alpha = Complex64::new(
        drp * detuned,
        od2 * m.gamma_s + m.gamma_e * (drp * drp + s_gs * s_gs / 8.0),
    ) * scale;
    let eta = Complex64::new(
        od2 * s_gs - drp * (2.0 * dp * s_gs + drp * stark.s_g),
        2.0 * m.gamma_e * drp * s_gs,
    ) * (scale / 4.0);
    Ok((alpha, eta))
}

/// Slow-light group velocity `omega_d^2 / (a0 gamma_e)` at the transparency point, m/s.
pub fn group_velocity(m: &EitMedium) -> Result<f64> {
    require(m.omega_d > 0.0, "omega_d", m.omega_d, "group velocity needs a drive field")?;
    Ok(m.omega_d * m.omega_d / (m.a0 * m.gamma_e))
}

/// Half-width `omega_d^2 / (gamma_e sqrt(2 a0 L))` of the transparency window, rad/s.
pub fn transparency_window(m: &EitMedium, length: f64) -> Result<f64> {
    require(
        length.is_finite() && length > 0.0,
        "length",
        length,
        "must be finite and positive",
    )?;
    Ok(m.omega_d * m.omega_d / (m.gamma_e * (2.0 * m.a0 * length).sqrt()))
}
