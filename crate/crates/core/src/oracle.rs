//! Fixed-step RK4 integration of the coupled-mode equations, used to check
//! the closed-form solver.
//!
//! The equations are linear, so integrating backwards from the terminal
//! state `(E+, E-)(L) = (1, 0)` and rescaling by `E+(0)` solves the
//! two-point problem in one pass.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cmt::CmtCoefficients;
use crate::error::{require, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Renormalize the state once its norm passes this bound.
const RESCALE_ABOVE: f64 = 1e150;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OdeSettings {
    pub n_steps: usize,
}

impl OdeSettings {
    pub const MIN_STEPS: usize = 1000;

    pub fn new(n_steps: usize) -> Result<Self> {
        let s = Self { n_steps };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        require(
            self.n_steps >= Self::MIN_STEPS,
            "n_steps",
            self.n_steps as f64,
            "must be at least 1000",
        )
    }
}

impl Default for OdeSettings {
    fn default() -> Self {
        Self { n_steps: 32768 }
    }
}

/// Unclipped result of an integration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OdeSolution {
    pub r: f64,
    pub t: f64,
    pub a: f64,
    /// `E+(0)` exceeded double range; `t` is reported as 0.
    pub saturated: bool,
}

type State = [Complex64; 2];

/// `carrier` is `exp(2 i m z)` at the evaluation point; it has unit modulus.
fn rhs(c: &CmtCoefficients, carrier: Complex64, y: &State) -> State {
    [
        I * (c.self_coupling * y[0] + c.cross_fwd * y[1] * carrier.conj()),
        -I * (c.self_coupling * y[1] + c.cross_bwd * y[0] * carrier),
    ]
}

fn carrier(c: &CmtCoefficients, z: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * c.mismatch * z)
}

fn axpy(y: &State, h: f64, k: &State) -> State {
    [y[0] + k[0] * h, y[1] + k[1] * h]
}

/// One step from `z` to `z + h`; `at_z` and `at_end` are the carriers at
/// the step ends.
fn rk4_step(c: &CmtCoefficients, z: f64, y: &State, h: f64, at_z: Complex64, at_end: Complex64) -> State {
    let mid = carrier(c, z + h / 2.0);
    let k1 = rhs(c, at_z, y);
    let k2 = rhs(c, mid, &axpy(y, h / 2.0, &k1));
    let k3 = rhs(c, mid, &axpy(y, h / 2.0, &k2));
    let k4 = rhs(c, at_end, &axpy(y, h, &k3));
    [
        y[0] + (k1[0] + k2[0] * 2.0 + k3[0] * 2.0 + k4[0]) * (h / 6.0),
        y[1] + (k1[1] + k2[1] * 2.0 + k3[1] * 2.0 + k4[1]) * (h / 6.0),
    ]
}

/// Integrates from `z = length` to `z = 0`, calling `visit(z, state, log_scale)`
/// at every node. The true amplitudes are `state * exp(log_scale)`.
fn integrate_back(
    c: &CmtCoefficients,
    length: f64,
    settings: &OdeSettings,
    mut visit: impl FnMut(f64, &State, f64),
) -> Result<(State, f64)> {
    settings.validate()?;
    require(
        length.is_finite() && length > 0.0,
        "length",
        length,
        "must be finite and positive",
    )?;
    let n = settings.n_steps;
    let h = -length / n as f64;
    let mut y: State = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
    let mut log_scale = 0.0;
    visit(length, &y, log_scale);
    let mut at_z = carrier(c, length);
    for i in 0..n {
        let z = length + i as f64 * h;
        let at_end = carrier(c, z + h);
        y = rk4_step(c, z, &y, h, at_z, at_end);
        at_z = at_end;
        let size = y[0].l1_norm().max(y[1].l1_norm());
        if size > RESCALE_ABOVE {
            y = [y[0] / size, y[1] / size];
            log_scale += size.ln();
        }
        let z_next = if i + 1 == n { 0.0 } else { length + (i + 1) as f64 * h };
        visit(z_next, &y, log_scale);
    }
    Ok((y, log_scale))
}

/// Reflection and transmission by direct integration.
pub fn integrate_bvp(c: &CmtCoefficients, length: f64, settings: &OdeSettings) -> Result<OdeSolution> {
    let (y, log_scale) = integrate_back(c, length, settings, |_, _, _| {})?;
    let r = (y[1] / y[0]).norm_sqr();
    let t = (-2.0 * (y[0].norm().ln() + log_scale)).exp();
    let saturated = t == 0.0;
    Ok(OdeSolution {
        r,
        t,
        a: 1.0 - r - t,
        saturated,
    })
}

/// Amplitudes `(z, E+, E-)` at every integration node, ordered by increasing
/// `z` and normalized to `E+(0) = 1`.
///
/// Fails if the dynamic range of the trajectory exceeds double precision.
pub fn integrate_trajectory(
    c: &CmtCoefficients,
    length: f64,
    settings: &OdeSettings,
) -> Result<Vec<(f64, Complex64, Complex64)>> {
    let mut nodes = Vec::with_capacity(settings.n_steps + 1);
    let (y0, final_scale) = integrate_back(c, length, settings, |z, y, scale| {
        nodes.push((z, y[0], y[1], scale));
    })?;
    let norm = y0[0];
    nodes.reverse();
    Ok(nodes
        .into_iter()
        .map(|(z, fwd, bwd, scale)| {
            let k = (scale - final_scale).exp();
            (z, fwd / norm * k, bwd / norm * k)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmt::solve_bvp;

    fn grating(q: Complex64, cross: Complex64, mismatch: f64) -> CmtCoefficients {
        CmtCoefficients {
            self_coupling: q,
            cross_fwd: cross,
            cross_bwd: cross,
            mismatch,
        }
    }

    #[test]
    fn vacuum() {
        let sol = integrate_bvp(&CmtCoefficients::vacuum(), 1e-3, &OdeSettings::default()).unwrap();
        assert!(sol.r < 1e-24);
        assert!((sol.t - 1.0).abs() < 1e-12);
        assert!(!sol.saturated);
    }

    #[test]
    fn settings_floor() {
        assert!(OdeSettings::new(999).is_err());
        assert_eq!(OdeSettings::new(1000).unwrap().n_steps, 1000);
        let bad = OdeSettings { n_steps: 10 };
        assert!(integrate_bvp(&CmtCoefficients::vacuum(), 1e-3, &bad).is_err());
    }

    #[test]
    fn matches_closed_form_for_lossy_grating() {
        let c = grating(Complex64::new(1.25e4, 6.4e2), Complex64::new(1.14e4, 5.8e2), -2.4e3);
        let ode = integrate_bvp(&c, 2e-4, &OdeSettings::default()).unwrap();
        let exact = solve_bvp(&c, 2e-4).unwrap();
        assert!((ode.r - exact.r).abs() < 1e-10);
        assert!((ode.t - exact.t).abs() < 1e-10);
    }

    #[test]
    fn saturates_for_opaque_medium() {
        let c = grating(Complex64::new(0.0, 1e7), 0.0.into(), 0.0);
        let sol = integrate_bvp(&c, 1e-4, &OdeSettings::new(100_000).unwrap()).unwrap();
        assert!(sol.saturated);
        assert_eq!(sol.t, 0.0);
        assert!(sol.r.is_finite());
    }

    #[test]
    fn trajectory_boundary_values() {
        let c = grating(Complex64::new(1e4, 3e2), Complex64::new(9e3, 2e2), 1e3);
        let traj = integrate_trajectory(&c, 2e-4, &OdeSettings::new(4096).unwrap()).unwrap();
        assert_eq!(traj.len(), 4097);
        assert_eq!(traj[0].0, 0.0);
        assert_eq!(traj[0].1, Complex64::new(1.0, 0.0));
        assert_eq!(traj.last().unwrap().2, Complex64::new(0.0, 0.0));
        assert!(traj.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn flux_non_increasing_for_passive_media() {
        // Real cross couplings are conjugate-symmetric.
        for q in [Complex64::new(2e3, 0.0), Complex64::new(2e3, 4e2), Complex64::new(-1e4, 1e3)] {
            let c = grating(q, 3e3.into(), -1.5e3);
            let traj = integrate_trajectory(&c, 3e-4, &OdeSettings::new(4096).unwrap()).unwrap();
            let flux: Vec<f64> = traj.iter().map(|(_, f, b)| f.norm_sqr() - b.norm_sqr()).collect();
            assert!(flux.windows(2).all(|w| w[1] <= w[0] + 1e-12), "q = {q}");
        }
    }
}
