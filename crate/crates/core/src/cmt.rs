//! Two-mode coupled-mode solver.
//!
//! Forward and backward probe amplitudes obey
//!
//! ```text
//! dE+/dz =  i q E+ + i c_f E- exp(-2 i m z)
//! dE-/dz = -i q E- - i c_b E+ exp( 2 i m z)
//! ```
//!
//! with self-coupling `q`, cross couplings `c_f`, `c_b` and phase mismatch
//! `m = omega/c - k_s`. For the boundary conditions `E+(0) = 1`, `E-(L) = 0`
//! the solution is closed form in `delta_beta = q + m` and
//! `s = sqrt(c_f c_b - delta_beta^2)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::SPEED_OF_LIGHT;
use crate::error::{require, Error, Result};
use crate::lattice::{self, LatticeGeometry};
use crate::medium::{self, Detunings, EitMedium, StarkModulation};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Below this `|s L|` the hyperbolic ratio `sinh(x)/x` uses its Taylor series.
const SINHC_SERIES_RADIUS: f64 = 1e-4;

/// Above this `|Re(s L)|` the solution is evaluated with the dominant
/// exponential factored out.
const OVERFLOW_EXPONENT: f64 = 300.0;

/// Largest tolerated excursion of R, T or A outside [0, 1] before clipping.
pub const ENERGY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CmtCoefficients {
    /// Diagonal polarizability term, 1/m.
    pub self_coupling: Complex64,
    /// Backward-to-forward coupling, 1/m.
    pub cross_fwd: Complex64,
    /// Forward-to-backward coupling, 1/m.
    pub cross_bwd: Complex64,
    /// Phase mismatch `omega/c - k_s`, 1/m.
    pub mismatch: f64,
}

impl CmtCoefficients {
    pub fn vacuum() -> Self {
        Self {
            self_coupling: Complex64::new(0.0, 0.0),
            cross_fwd: Complex64::new(0.0, 0.0),
            cross_bwd: Complex64::new(0.0, 0.0),
            mismatch: 0.0,
        }
    }

    pub fn delta_beta(&self) -> Complex64 {
        self.self_coupling + self.mismatch
    }

    /// Principal root `s = sqrt(c_f c_b - delta_beta^2)`; `Re s >= 0`.
    pub fn s_param(&self) -> Complex64 {
        let db = self.delta_beta();
        (self.cross_fwd * self.cross_bwd - db * db).sqrt()
    }
}

/// Reflection, transmission and absorption of a finite medium, plus the
/// Bloch wave vector of the corresponding infinite one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BvpSolution {
    pub r: f64,
    pub t: f64,
    pub a: f64,
    pub s_param: Complex64,
    pub delta_beta: Complex64,
    /// `K - k_s = i s`, 1/m.
    pub bloch_k_offset: Complex64,
}

impl BvpSolution {
    /// `Re K - k_s = -Im s`.
    pub fn re_k_minus_ks(&self) -> f64 {
        self.bloch_k_offset.re
    }

    /// `Im K = Re s`.
    pub fn im_k(&self) -> f64 {
        self.bloch_k_offset.im
    }

    /// Full Bloch wave vector for a lattice wave number `k_s`.
    pub fn bloch_k(&self, k_s: f64) -> Complex64 {
        self.bloch_k_offset + k_s
    }
}

/// Mismatch `omega/c - k_s = (delta - delta_s) / c` for a probe detuned by
/// `delta` from the atomic line.
pub fn mismatch_from_detuning(delta: f64, delta_s: f64) -> f64 {
    (delta - delta_s) / SPEED_OF_LIGHT
}

/// Coefficients of a cold-atom lattice: `q = alpha`, `c_f = alpha kappa_1`,
/// `c_b = alpha kappa_-1`.
pub fn build_cold(m: &EitMedium, geom: &LatticeGeometry, d: &Detunings) -> CmtCoefficients {
    let alpha = medium::alpha_cold(m, d);
    cold_from_alpha(alpha, geom, d.delta)
}

/// As [`build_cold`] with the far-detuned two-level polarizability `-a0 gamma_e / delta`.
pub fn build_two_level(m: &EitMedium, geom: &LatticeGeometry, delta: f64) -> Result<CmtCoefficients> {
    let alpha = Complex64::new(medium::alpha_two_level_limit(m, delta)?, 0.0);
    Ok(cold_from_alpha(alpha, geom, delta))
}

fn cold_from_alpha(alpha: Complex64, geom: &LatticeGeometry, delta: f64) -> CmtCoefficients {
    let fwd = lattice::kappa(geom, 1).expect("l = 1 is in range");
    let bwd = lattice::kappa(geom, -1).expect("l = -1 is in range");
    CmtCoefficients {
        self_coupling: alpha,
        cross_fwd: alpha * fwd,
        cross_bwd: alpha * bwd,
        mismatch: mismatch_from_detuning(delta, lattice::delta_s(geom)),
    }
}

/// Coefficients of a thermal gas under standing-wave Stark modulation:
/// `q = alpha'`, `c_f = c_b = eta`. `mean` holds the mean detunings.
pub fn build_thermal(
    m: &EitMedium,
    stark: &StarkModulation,
    mean: &Detunings,
    mismatch: f64,
) -> Result<CmtCoefficients> {
    require(mismatch.is_finite(), "mismatch", mismatch, "must be finite")?;
    let (alpha, eta) = medium::alpha_eta_thermal(m, stark, mean)?;
    Ok(CmtCoefficients {
        self_coupling: alpha,
        cross_fwd: eta,
        cross_bwd: eta,
        mismatch,
    })
}

/// `sinh(x) / x`, regular at the origin.
pub fn sinhc(x: Complex64) -> Complex64 {
    if x.norm() < SINHC_SERIES_RADIUS {
        let x2 = x * x;
        1.0 + x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sinh() / x
    }
}

/// `(R, T)` evaluated with an explicit root `s` of `s^2 = c_f c_b - delta_beta^2`.
///
/// Both roots give the same result; [`solve_bvp`] uses the principal one.
pub fn rt_for_root(c: &CmtCoefficients, length: f64, s: Complex64) -> (f64, f64) {
    let db = c.delta_beta();
    let x = s * length;
    if x.re.abs() <= OVERFLOW_EXPONENT {
        let sc = sinhc(x);
        let denom = x.cosh() - I * db * length * sc;
        let norm = denom.norm_sqr();
        ((c.cross_bwd * length * sc).norm_sqr() / norm, 1.0 / norm)
    } else {
        // sinh x = sgn e^{sgn x} (1 - E) / 2, cosh x = e^{sgn x} (1 + E) / 2,
        // E = e^{-2 sgn x}.
        let sgn = x.re.signum();
        let e = (-2.0 * sgn * x).exp();
        let denom = (s * (1.0 + e) - I * db * sgn * (1.0 - e)).norm_sqr();
        let r = (c.cross_bwd * (1.0 - e)).norm_sqr() / denom;
        let t = 4.0 * s.norm_sqr() * (-2.0 * x.re.abs()).exp() / denom;
        (r, t)
    }
}

fn require_length(length: f64) -> Result<()> {
    require(
        length.is_finite() && length > 0.0,
        "length",
        length,
        "must be finite and positive",
    )
}

/// Splits `1 - R - T` off as absorption, clipping rounding-level excursions
/// and rejecting anything larger.
pub fn energy_split(r: f64, t: f64) -> Result<(f64, f64, f64)> {
    let a = 1.0 - r - t;
    let bad = |v: f64| !(-ENERGY_TOLERANCE..=1.0 + ENERGY_TOLERANCE).contains(&v);
    if bad(r) || bad(t) || bad(a) {
        return Err(Error::EnergyBalance { r, t, a });
    }
    Ok((r.clamp(0.0, 1.0), t.clamp(0.0, 1.0), a.clamp(0.0, 1.0)))
}

/// Closed-form reflection, transmission and absorption of a medium of length `length`.
pub fn solve_bvp(c: &CmtCoefficients, length: f64) -> Result<BvpSolution> {
    require_length(length)?;
    let s = c.s_param();
    let (r, t) = rt_for_root(c, length, s);
    let (r, t, a) = energy_split(r, t)?;
    Ok(BvpSolution {
        r,
        t,
        a,
        s_param: s,
        delta_beta: c.delta_beta(),
        bloch_k_offset: I * s,
    })
}

/// `cosh(s u)` and `u sinh(s u) / (s u)`, both multiplied by `exp(-scale)`.
fn scaled_hyperbolics(s: Complex64, u: f64, scale: f64) -> (Complex64, Complex64) {
    let x = s * u;
    if scale == 0.0 {
        return (x.cosh(), u * sinhc(x));
    }
    // Re s > 0 here and u <= L, so both exponents have non-positive real part
    // up to the scale.
    let grow = (x - scale).exp();
    let decay = (-x - scale).exp();
    let sinh_term = if x.norm() < SINHC_SERIES_RADIUS {
        u * sinhc(x) * (-scale).exp()
    } else {
        (grow - decay) / (2.0 * s)
    };
    ((grow + decay) / 2.0, sinh_term)
}

/// Forward and backward amplitudes at each `z` for unit input, including the
/// `exp(-/+ i m z)` carrier factors.
pub fn field_profile(
    c: &CmtCoefficients,
    length: f64,
    z_grid: &[f64],
) -> Result<Vec<(Complex64, Complex64)>> {
    require_length(length)?;
    if let Some(&z) = z_grid.iter().find(|&&z| !(0.0..=length).contains(&z)) {
        return Err(Error::OutsideMedium { z, length });
    }
    let db = c.delta_beta();
    let s = c.s_param();
    let scale = if (s * length).re > OVERFLOW_EXPONENT {
        (s * length).re
    } else {
        0.0
    };
    let (cosh_l, sinh_l) = scaled_hyperbolics(s, length, scale);
    let denom = cosh_l - I * db * sinh_l;
    Ok(z_grid
        .iter()
        .map(|&z| {
            let u = length - z;
            let (cosh_u, sinh_u) = scaled_hyperbolics(s, u, scale);
            let phase = Complex64::from_polar(1.0, c.mismatch * z);
            let fwd = (cosh_u - I * db * sinh_u) / denom / phase;
            let bwd = I * c.cross_bwd * sinh_u / denom * phase;
            (fwd, bwd)
        })
        .collect())
}
