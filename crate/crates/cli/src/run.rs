//! Detuning sweeps over a resolved [`Scenario`].

use eit_bragg::analysis::{
    self, DetuningBound, GapReport, ThermalCeiling, DEFAULT_THRESHOLD,
};
use eit_bragg::cmt::{self, solve_bvp};
use eit_bragg::medium::alpha_cold;
use eit_bragg::oracle::integrate_bvp;
use eit_bragg::{CmtCoefficients, Error, SpectrumRecord};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{Model, Scenario, Structure, Sweep};
use crate::error::{CliError, Result};

/// Largest analytic/oracle discrepancy `validate` accepts.
pub const VALIDATION_TOLERANCE: f64 = 1e-6;

/// Coupled-mode coefficients at probe detuning `delta`.
pub fn coefficients(sc: &Scenario, sweep: &Sweep, delta: f64) -> eit_bragg::Result<CmtCoefficients> {
    match (&sc.structure, sc.model) {
        (Structure::Lattice(g), Model::TwoLevel) => cmt::build_two_level(&sc.medium, g, delta),
        (Structure::Lattice(g), _) => Ok(cmt::build_cold(&sc.medium, g, &sweep.detunings(delta))),
        (Structure::Thermal(stark), _) => cmt::build_thermal(
            &sc.medium,
            stark,
            &sweep.detunings(delta),
            cmt::mismatch_from_detuning(delta, sc.delta_s),
        ),
    }
}

fn at_delta(delta: f64) -> impl Fn(Error) -> CliError {
    move |e| CliError::config("sweep", format!("at delta = {delta:e} rad/s: {e}"))
}

/// R, T, A and the Bloch wave number at each grid node, ordered by detuning.
pub fn spectrum(sc: &Scenario) -> Result<Vec<SpectrumRecord>> {
    let sweep = sc.sweep()?;
    sweep
        .grid()
        .into_par_iter()
        .map(|delta| {
            let c = coefficients(sc, &sweep, delta).map_err(at_delta(delta))?;
            let sol = solve_bvp(&c, sc.length).map_err(at_delta(delta))?;
            Ok(SpectrumRecord {
                delta,
                r: sol.r,
                t: sol.t,
                a: sol.a,
                re_k_minus_ks: sol.re_k_minus_ks(),
                im_k: sol.im_k(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SusceptibilityRecord {
    pub delta: f64,
    pub re_alpha_over_a0: f64,
    pub im_alpha_over_a0: f64,
}

/// EIT polarizability of the uniform medium, in units of `a0`.
pub fn susceptibility(sc: &Scenario) -> Vec<SusceptibilityRecord> {
    let sweep = sc.susceptibility_sweep();
    sweep
        .grid()
        .into_iter()
        .map(|delta| {
            let alpha = alpha_cold(&sc.medium, &sweep.detunings(delta)) / sc.medium.a0;
            SusceptibilityRecord {
                delta,
                re_alpha_over_a0: alpha.re,
                im_alpha_over_a0: alpha.im,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub n_points: usize,
    pub n_steps: usize,
    pub max_abs_dr: f64,
    pub max_abs_dt: f64,
    /// Detuning of the largest discrepancy, rad/s.
    pub worst_delta: f64,
    /// Points where the integrated transmission underflowed.
    pub saturated_points: usize,
    pub tolerance: f64,
    pub passed: bool,
}

/// Compares the closed-form solver against RK4 integration over the sweep.
pub fn validate(sc: &Scenario) -> Result<ValidationReport> {
    let settings = sc
        .oracle
        .ok_or_else(|| CliError::config("oracle", "section required by validate"))?;
    let sweep = sc.sweep()?;
    let rows: Vec<(f64, f64, f64, bool)> = sweep
        .grid()
        .into_par_iter()
        .map(|delta| {
            let c = coefficients(sc, &sweep, delta).map_err(at_delta(delta))?;
            let exact = solve_bvp(&c, sc.length).map_err(at_delta(delta))?;
            let ode = integrate_bvp(&c, sc.length, &settings).map_err(at_delta(delta))?;
            Ok((delta, (exact.r - ode.r).abs(), (exact.t - ode.t).abs(), ode.saturated))
        })
        .collect::<Result<_>>()?;
    let mut report = ValidationReport {
        n_points: rows.len(),
        n_steps: settings.n_steps,
        max_abs_dr: 0.0,
        max_abs_dt: 0.0,
        worst_delta: rows[0].0,
        saturated_points: rows.iter().filter(|r| r.3).count(),
        tolerance: VALIDATION_TOLERANCE,
        passed: true,
    };
    let mut worst = -1.0;
    for &(delta, dr, dt, _) in &rows {
        report.max_abs_dr = report.max_abs_dr.max(dr);
        report.max_abs_dt = report.max_abs_dt.max(dt);
        if dr.max(dt) > worst {
            worst = dr.max(dt);
            report.worst_delta = delta;
        }
    }
    report.passed = report.max_abs_dr <= VALIDATION_TOLERANCE && report.max_abs_dt <= VALIDATION_TOLERANCE;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BandgapReport {
    pub model: &'static str,
    pub threshold: f64,
    pub closed_form: Vec<GapReport>,
    pub numeric: Vec<GapReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detuning_bound: Option<DetuningBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thermal_ceiling: Option<ThermalCeiling>,
    /// Closed forms that do not apply to this configuration.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Closed-form gaps for the model plus gaps detected in the computed
/// spectrum. Also returns the spectrum.
pub fn bandgap(sc: &Scenario, threshold: Option<f64>) -> Result<(BandgapReport, Vec<SpectrumRecord>)> {
    let threshold = threshold.unwrap_or(DEFAULT_THRESHOLD);
    let records = spectrum(sc)?;
    let numeric = analysis::detect_gaps_numeric(&records, threshold)
        .map_err(|e| CliError::config("--threshold", e.to_string()))?;
    let mut report = BandgapReport {
        model: sc.model.name(),
        threshold,
        closed_form: Vec::new(),
        numeric,
        detuning_bound: None,
        thermal_ceiling: None,
        notes: Vec::new(),
    };
    match (&sc.structure, sc.model) {
        (Structure::Lattice(g), model) => {
            if model == Model::ColdLattice {
                match analysis::eit_gap(&sc.medium, g) {
                    Ok(gap) => report.closed_form.push(gap),
                    Err(e) => report.notes.push(format!("eit-window: {e}")),
                }
                report.detuning_bound = Some(analysis::lattice_detuning_bound(&sc.medium, g));
            }
            let (lower, upper) = analysis::two_level_gaps(&sc.medium, g);
            report.closed_form.extend([lower, upper]);
        }
        (Structure::Thermal(stark), _) => {
            match analysis::thermal_gap(&sc.medium, stark) {
                Ok(gap) => report.closed_form.push(gap),
                Err(e) => report.notes.push(format!("thermal: {e}")),
            }
            report.thermal_ceiling = Some(analysis::thermal_ceiling(&sc.medium, stark, sc.length)?);
        }
    }
    Ok((report, records))
}
