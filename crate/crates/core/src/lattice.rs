//! One-dimensional lattice geometry and the Fourier content of the atomic
//! density.
//!
//! Each site holds one atom in a Gaussian Wannier state of width `delta_r`,
//! so the on-axis density per site is `exp(-z^2 / delta_r^2) / (sqrt(pi) delta_r)`.
//! `kappa(l)` is the l-th Fourier coefficient of the periodic density
//! normalized to the bulk density.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::constants::{HBAR, SPEED_OF_LIGHT};
use crate::error::{require, Error, Result};
use crate::medium::EitMedium;
use crate::warning::Warning;

/// Largest supported harmonic; beyond it `kappa` underflows for any useful width.
pub const MAX_HARMONIC: i32 = 16;

/// Minimum `delta_r^2 M gamma_e / hbar` accepted by [`localization_validity`].
pub const LOCALIZATION_MARGIN: f64 = 10.0;

const KAPPA_TRUNCATION_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LatticeGeometry {
    /// Lattice period, m. The lattice wave number is `k_s = pi / lambda_lat`.
    pub lambda_lat: f64,
    /// Gaussian localization width, m.
    pub delta_r: f64,
    /// Number of lattice periods spanned by the medium.
    pub n_periods: u32,
    /// Atomic transition angular frequency, rad/s.
    pub omega_eg: f64,
    /// Atomic mass, kg; only needed for [`localization_validity`].
    pub atomic_mass: Option<f64>,
}

impl LatticeGeometry {
    pub fn new(
        lambda_lat: f64,
        delta_r: f64,
        n_periods: u32,
        omega_eg: f64,
        atomic_mass: Option<f64>,
    ) -> Result<Self> {
        let g = Self {
            lambda_lat,
            delta_r,
            n_periods,
            omega_eg,
            atomic_mass,
        };
        g.validate()?;
        Ok(g)
    }

    /// Geometry whose Bragg frequency `k_s c` sits `delta_s` above the atomic
    /// resonance, i.e. `omega_eg = pi c / lambda_lat - delta_s`.
    pub fn with_bragg_offset(
        lambda_lat: f64,
        delta_r: f64,
        n_periods: u32,
        delta_s: f64,
        atomic_mass: Option<f64>,
    ) -> Result<Self> {
        require(
            lambda_lat.is_finite() && lambda_lat > 0.0,
            "lambda_lat",
            lambda_lat,
            "must be finite and positive",
        )?;
        let omega_eg = PI / lambda_lat * SPEED_OF_LIGHT - delta_s;
        Self::new(lambda_lat, delta_r, n_periods, omega_eg, atomic_mass)
    }

    pub fn validate(&self) -> Result<()> {
        require(
            self.lambda_lat.is_finite() && self.lambda_lat > 0.0,
            "lambda_lat",
            self.lambda_lat,
            "must be finite and positive",
        )?;
        require(
            self.delta_r.is_finite() && self.delta_r > 0.0,
            "delta_r",
            self.delta_r,
            "must be finite and positive",
        )?;
        require(
            self.delta_r < self.lambda_lat / 2.0,
            "delta_r",
            self.delta_r,
            "must be below half the lattice period",
        )?;
        require(
            self.n_periods > 0,
            "n_periods",
            self.n_periods as f64,
            "must be positive",
        )?;
        require(
            self.omega_eg.is_finite() && self.omega_eg > 0.0,
            "omega_eg",
            self.omega_eg,
            "must be finite and positive",
        )?;
        if let Some(m) = self.atomic_mass {
            require(m.is_finite() && m > 0.0, "atomic_mass", m, "must be finite and positive")?;
        }
        Ok(())
    }

    pub fn warnings(&self) -> Vec<Warning> {
        let mut out = Vec::new();
        if self.delta_r > self.lambda_lat / 4.0 {
            out.push(Warning::WideLocalization {
                delta_r: self.delta_r,
                period: self.lambda_lat,
            });
        }
        let closed = kappa(self, 1).expect("l = 1 is in range");
        let single = kappa_single_site(self, 1).expect("l = 1 is in range");
        if (closed - single).abs() > KAPPA_TRUNCATION_TOL {
            out.push(Warning::KappaTruncation {
                harmonic: 1,
                closed_form: closed,
                quadrature: single,
            });
        }
        out
    }

    /// Lattice wave number `k_s = pi / lambda_lat`, rad/m.
    pub fn k_s(&self) -> f64 {
        PI / self.lambda_lat
    }

    /// Reciprocal lattice vector `g = 2 pi / lambda_lat = 2 k_s`, rad/m.
    pub fn g(&self) -> f64 {
        2.0 * PI / self.lambda_lat
    }

    /// Medium length `n_periods * lambda_lat`, m.
    pub fn length(&self) -> f64 {
        self.n_periods as f64 * self.lambda_lat
    }
}

fn check_harmonic(l: i32) -> Result<()> {
    if l.abs() > MAX_HARMONIC {
        Err(Error::HarmonicOutOfRange(l))
    } else {
        Ok(())
    }
}

/// Closed-form Fourier coefficient `exp(-(l g delta_r)^2 / 4)`.
pub fn kappa(geom: &LatticeGeometry, l: i32) -> Result<f64> {
    check_harmonic(l)?;
    let x = l as f64 * geom.g() * geom.delta_r;
    Ok((-x * x / 4.0).exp())
}

fn site_density(z: f64, delta_r: f64) -> f64 {
    (-(z * z) / (delta_r * delta_r)).exp() / (PI.sqrt() * delta_r)
}

/// Fourier coefficient by quadrature of the periodic site density over one
/// lattice period. Every site whose Gaussian reaches the cell contributes.
pub fn kappa_quadrature(geom: &LatticeGeometry, l: i32) -> Result<f64> {
    check_harmonic(l)?;
    let (period, dr) = (geom.lambda_lat, geom.delta_r);
    // exp(-40^2) is far below f64 resolution.
    let reach = (40.0 * dr / period).ceil() as i64 + 1;
    let k = l as f64 * geom.g();
    let integrand = |z: f64| {
        let density: f64 = (-reach..=reach)
            .map(|j| site_density(z - j as f64 * period, dr))
            .sum();
        density * (k * z).cos()
    };
    Ok(adaptive_simpson(&integrand, -period / 2.0, period / 2.0, 1e-15))
}

/// Fourier integral of a single site's density truncated to one period.
/// Differs from [`kappa`] by the tail mass that leaks into neighbouring
/// cells, which the tight-localization model neglects.
pub fn kappa_single_site(geom: &LatticeGeometry, l: i32) -> Result<f64> {
    check_harmonic(l)?;
    let k = l as f64 * geom.g();
    let dr = geom.delta_r;
    let integrand = |z: f64| site_density(z, dr) * (k * z).cos();
    let half = geom.lambda_lat / 2.0;
    Ok(adaptive_simpson(&integrand, -half, half, 1e-15))
}

fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    #[allow(clippy::too_many_arguments)]
    fn step(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        let floor = 4.0 * f64::EPSILON * (left.abs() + right.abs());
        if depth == 0 || delta.abs() <= 15.0 * tol.max(floor) {
            left + right + delta / 15.0
        } else {
            step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
                + step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
        }
    }
    // Seed with a uniform panel split so narrow peaks are resolved before
    // the error estimate is trusted.
    const PANELS: usize = 64;
    let h = (b - a) / PANELS as f64;
    (0..PANELS)
        .map(|i| {
            let (lo, hi) = (a + i as f64 * h, a + (i + 1) as f64 * h);
            let (flo, fmid, fhi) = (f(lo), f(0.5 * (lo + hi)), f(hi));
            let whole = h / 6.0 * (flo + 4.0 * fmid + fhi);
            step(f, lo, hi, flo, fmid, fhi, whole, tol / PANELS as f64, 24)
        })
        .sum()
}

/// Offset `k_s c - omega_eg` of the lattice Bragg frequency from the atomic
/// resonance, rad/s.
pub fn delta_s(geom: &LatticeGeometry) -> f64 {
    geom.k_s() * SPEED_OF_LIGHT - geom.omega_eg
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LocalizationReport {
    pub ok: bool,
    /// `delta_r^2 / (hbar / (M gamma_e))`.
    pub ratio: f64,
}

/// Checks that the recoil term dropped from the excited-state propagator is
/// negligible: `delta_r^2 >> hbar / (M gamma_e)`.
pub fn localization_validity(geom: &LatticeGeometry, m: &EitMedium) -> Result<LocalizationReport> {
    let mass = geom.atomic_mass.ok_or(Error::MissingAtomicMass)?;
    let ratio = geom.delta_r * geom.delta_r * mass * m.gamma_e / HBAR;
    Ok(LocalizationReport {
        ok: ratio >= LOCALIZATION_MARGIN,
        ratio,
    })
}
