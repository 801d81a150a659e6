//! Run configuration: a TOML document with unit-suffixed quantities,
//! resolved into SI core types.
//!
//! ```toml
//! model = "cold-lattice"
//!
//! [medium]
//! gamma_e = "1e7 rad_s"
//! omega_d = "2 ge"
//! optical_depth = 100
//!
//! [lattice]
//! lambda_lat = "400 nm"
//! n_periods = 500
//! delta_r = "0.1 lat"
//! delta_s = "7.2e4 ge"
//!
//! [sweep]
//! delta_min = "0 ge"
//! delta_max = "0.6 ge"
//! n_points = 4001
//! ```

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};

use eit_bragg::analysis::lattice_detuning_bound;
use eit_bragg::constants::SPEED_OF_LIGHT;
use eit_bragg::lattice::localization_validity;
use eit_bragg::{Detunings, EitMedium, LatticeGeometry, OdeSettings, StarkModulation};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::quantity::{Quantity, Unit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    ColdLattice,
    ThermalStark,
    TwoLevel,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::ColdLattice => "cold-lattice",
            Model::ThermalStark => "thermal-stark",
            Model::TwoLevel => "two-level",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Spectrum,
    Dispersion,
    Bandgap,
    Validate,
    Susceptibility,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub format: Format,
    pub path: PathBuf,
    /// Restrict this output to one subcommand; all subcommands when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MediumSection {
    pub gamma_e: Quantity,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_s: Option<Quantity>,
    pub omega_d: Quantity,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a0: Option<Quantity>,
    /// `2 a0 L`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optical_depth: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma0: Option<Quantity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho0: Option<Quantity>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_lat: Option<Quantity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<Quantity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_periods: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_r: Option<Quantity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_s: Option<Quantity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_eg: Option<Quantity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub atomic_mass: Option<Quantity>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StarkSection {
    pub s_g: Quantity,
    pub s_s: Quantity,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub delta_min: Quantity,
    pub delta_max: Quantity,
    pub n_points: usize,
    #[serde(default = "yes")]
    pub resonant_drive: bool,
    /// Fixed Raman detuning when the drive is not resonant.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_r: Option<Quantity>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleSection {
    pub n_steps: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub model: Model,
    pub medium: MediumSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stark: Option<StarkSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub outputs: Vec<OutputSpec>,
}

/// Uniform detuning grid, rad/s.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sweep {
    pub delta_min: f64,
    pub delta_max: f64,
    pub n_points: usize,
    pub resonant_drive: bool,
    pub delta_r: f64,
}

impl Sweep {
    pub fn validate(&self, path: &str) -> Result<()> {
        if self.n_points < 2 {
            return Err(CliError::config(format!("{path}.n_points"), "must be at least 2"));
        }
        if self.delta_min.partial_cmp(&self.delta_max) != Some(Ordering::Less) {
            return Err(CliError::config(
                format!("{path}.delta_min"),
                format!("must be below delta_max ({} >= {})", self.delta_min, self.delta_max),
            ));
        }
        Ok(())
    }

    /// Grid nodes; the last one is exactly `delta_max`.
    pub fn grid(&self) -> Vec<f64> {
        let step = (self.delta_max - self.delta_min) / (self.n_points - 1) as f64;
        (0..self.n_points)
            .map(|i| {
                if i + 1 == self.n_points {
                    self.delta_max
                } else {
                    self.delta_min + i as f64 * step
                }
            })
            .collect()
    }

    pub fn detunings(&self, delta: f64) -> Detunings {
        if self.resonant_drive {
            Detunings::resonant(delta)
        } else {
            Detunings {
                delta,
                delta_r: self.delta_r,
            }
        }
    }
}

/// Spatial structure of the medium.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Structure {
    Lattice(LatticeGeometry),
    Thermal(StarkModulation),
}

/// A validated configuration in SI units.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub model: Model,
    pub medium: EitMedium,
    pub structure: Structure,
    /// Medium length, m.
    pub length: f64,
    /// Bragg offset `k_s c - omega_eg`, rad/s.
    pub delta_s: f64,
    pub sweep: Option<Sweep>,
    pub oracle: Option<OdeSettings>,
    pub outputs: Vec<OutputSpec>,
    /// Physics warnings raised while resolving.
    pub warnings: Vec<String>,
}

/// Susceptibility grid used when the config has no `[sweep]`.
pub const SUSCEPTIBILITY_RANGE_GE: (f64, f64) = (-8.0, 8.0);
pub const SUSCEPTIBILITY_POINTS: usize = 1601;

impl Scenario {
    pub fn sweep(&self) -> Result<Sweep> {
        self.sweep
            .ok_or_else(|| CliError::config("sweep", "section required by this subcommand"))
    }

    pub fn susceptibility_sweep(&self) -> Sweep {
        self.sweep.unwrap_or(Sweep {
            delta_min: SUSCEPTIBILITY_RANGE_GE.0 * self.medium.gamma_e,
            delta_max: SUSCEPTIBILITY_RANGE_GE.1 * self.medium.gamma_e,
            n_points: SUSCEPTIBILITY_POINTS,
            resonant_drive: true,
            delta_r: 0.0,
        })
    }

    /// Replaces the number of sweep points, creating the default
    /// susceptibility sweep if none is configured.
    pub fn override_points(&mut self, n_points: usize) -> Result<()> {
        let mut sweep = self.susceptibility_sweep();
        sweep.n_points = n_points;
        sweep.validate("--points")?;
        self.sweep = Some(sweep);
        Ok(())
    }

    pub fn geometry(&self) -> Option<&LatticeGeometry> {
        match &self.structure {
            Structure::Lattice(g) => Some(g),
            Structure::Thermal(_) => None,
        }
    }

    pub fn stark(&self) -> Option<&StarkModulation> {
        match &self.structure {
            Structure::Thermal(s) => Some(s),
            Structure::Lattice(_) => None,
        }
    }
}

fn frequency(q: Quantity, gamma_e: Option<f64>, path: &str) -> Result<f64> {
    match (q.unit, gamma_e) {
        (None | Some(Unit::RadS), _) => Ok(q.value),
        (Some(Unit::Ge), Some(ge)) => Ok(q.value * ge),
        (Some(Unit::Ge), None) => Err(CliError::config(path, "'ge' units are not allowed here")),
        (Some(u), _) => Err(CliError::config(
            path,
            format!("'{}' is not a frequency unit (use rad_s or ge)", u.suffix()),
        )),
    }
}

fn length(q: Quantity, period: Option<f64>, path: &str) -> Result<f64> {
    match (q.unit, period) {
        (None | Some(Unit::M), _) => Ok(q.value),
        (Some(Unit::Um), _) => Ok(q.value * 1e-6),
        (Some(Unit::Nm), _) => Ok(q.value * 1e-9),
        (Some(Unit::Lat), Some(p)) => Ok(q.value * p),
        (Some(Unit::Lat), None) => Err(CliError::config(
            path,
            "'lat' units need the lattice period (lattice.lambda_lat or lattice.length with n_periods)",
        )),
        (Some(u), _) => Err(CliError::config(
            path,
            format!("'{}' is not a length unit (use m, um, nm or lat)", u.suffix()),
        )),
    }
}

fn plain(q: Quantity, unit: Unit, path: &str) -> Result<f64> {
    match q.unit {
        None => Ok(q.value),
        Some(u) if u == unit => Ok(q.value),
        Some(u) => Err(CliError::config(
            path,
            format!("expected '{}' units, got '{}'", unit.suffix(), u.suffix()),
        )),
    }
}

fn model_error(path: &str) -> impl Fn(eit_bragg::Error) -> CliError + '_ {
    move |e| CliError::config(path, e.to_string())
}

impl RunConfig {
    pub fn from_toml_str(text: &str) -> std::result::Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("config is always representable as TOML")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_toml_str(&text).map_err(|source| CliError::Parse {
            file: path.to_path_buf(),
            source,
        })
    }

    pub fn resolve(&self) -> Result<Scenario> {
        let mut warnings = Vec::new();
        let med = &self.medium;

        let gamma_e = frequency(med.gamma_e, None, "medium.gamma_e")?;
        let ge = Some(gamma_e);
        let gamma_s = med
            .gamma_s
            .map(|q| frequency(q, ge, "medium.gamma_s"))
            .transpose()?
            .unwrap_or(0.0);
        let omega_d = frequency(med.omega_d, ge, "medium.omega_d")?;

        let lat = self.lattice.as_ref().ok_or_else(|| {
            CliError::config("lattice", format!("section required by model {}", self.model.name()))
        })?;
        let lambda = lat
            .lambda_lat
            .map(|q| length(q, None, "lattice.lambda_lat"))
            .transpose()?;
        let (period, total) = match (lambda, lat.length, lat.n_periods) {
            (Some(_), Some(_), _) => {
                return Err(CliError::config(
                    "lattice.length",
                    "give either lambda_lat or length, not both",
                ))
            }
            (Some(_), None, None) => {
                return Err(CliError::config("lattice.n_periods", "required with lambda_lat"))
            }
            (Some(p), None, Some(n)) => (Some(p), p * n as f64),
            (None, Some(q), Some(n)) => {
                let l = length(q, None, "lattice.length")?;
                (Some(l / n.max(1) as f64), l)
            }
            (None, Some(q), None) => (None, length(q, None, "lattice.length")?),
            (None, None, _) => {
                return Err(CliError::config(
                    "lattice.lambda_lat",
                    "the medium length is undefined (give lambda_lat with n_periods, or length)",
                ))
            }
        };
        if !(total.is_finite() && total > 0.0) {
            return Err(CliError::config("lattice", format!("medium length {total} m must be positive")));
        }
        if lat.n_periods == Some(0) {
            return Err(CliError::config("lattice.n_periods", "must be positive"));
        }

        let delta_s = match (lat.delta_s, lat.omega_eg) {
            (Some(q), None) => frequency(q, ge, "lattice.delta_s")?,
            (None, Some(q)) => {
                let w = frequency(q, None, "lattice.omega_eg")?;
                let p = period.ok_or_else(|| {
                    CliError::config("lattice.omega_eg", "needs the lattice period to fix delta_s")
                })?;
                PI * SPEED_OF_LIGHT / p - w
            }
            (Some(_), Some(_)) => {
                return Err(CliError::config("lattice.omega_eg", "give either delta_s or omega_eg, not both"))
            }
            (None, None) => return Err(CliError::config("lattice.delta_s", "required (or omega_eg)")),
        };

        let a0 = match (med.a0, med.optical_depth, med.sigma0, med.rho0) {
            (Some(q), None, None, None) => plain(q, Unit::PerM, "medium.a0")?,
            (None, Some(od), None, None) => od / (2.0 * total),
            (None, None, Some(s), Some(r)) => {
                plain(s, Unit::M2, "medium.sigma0")? * plain(r, Unit::PerM3, "medium.rho0")?
            }
            (None, None, Some(_), None) => {
                return Err(CliError::config("medium.rho0", "required with sigma0"))
            }
            (None, None, None, Some(_)) => {
                return Err(CliError::config("medium.sigma0", "required with rho0"))
            }
            (None, None, None, None) => {
                return Err(CliError::config(
                    "medium.a0",
                    "required (or optical_depth, or sigma0 with rho0)",
                ))
            }
            _ => {
                return Err(CliError::config(
                    "medium.a0",
                    "give exactly one of a0, optical_depth, or sigma0 with rho0",
                ))
            }
        };
        let medium = EitMedium::new(gamma_e, gamma_s, omega_d, a0).map_err(model_error("medium"))?;
        warnings.extend(medium.warnings().iter().map(ToString::to_string));

        let structure = match self.model {
            Model::ColdLattice | Model::TwoLevel => {
                if self.stark.is_some() {
                    warnings.push(format!("stark section is ignored by model {}", self.model.name()));
                }
                let period = period.ok_or_else(|| {
                    CliError::config(
                        "lattice.lambda_lat",
                        "the lattice period is undefined (give lambda_lat, or length with n_periods)",
                    )
                })?;
                let n = lat
                    .n_periods
                    .ok_or_else(|| CliError::config("lattice.n_periods", "required"))?;
                let delta_r = lat
                    .delta_r
                    .ok_or_else(|| CliError::config("lattice.delta_r", "required"))?;
                let delta_r = length(delta_r, Some(period), "lattice.delta_r")?;
                let mass = lat
                    .atomic_mass
                    .map(|q| plain(q, Unit::Kg, "lattice.atomic_mass"))
                    .transpose()?;
                let geom = LatticeGeometry::with_bragg_offset(period, delta_r, n, delta_s, mass)
                    .map_err(model_error("lattice"))?;
                warnings.extend(geom.warnings().iter().map(ToString::to_string));
                if mass.is_some() {
                    let loc = localization_validity(&geom, &medium).map_err(model_error("lattice"))?;
                    if !loc.ok {
                        warnings.push(format!(
                            "atoms are not localized well enough for stationary scattering (ratio {:.3} < 10)",
                            loc.ratio
                        ));
                    }
                }
                if self.model == Model::ColdLattice {
                    let bound = lattice_detuning_bound(&medium, &geom);
                    if !bound.satisfied {
                        warnings.push(format!(
                            "|delta_s| = {:.4e} rad/s exceeds {:.4e} rad/s; the gap leaves the transparency window",
                            delta_s.abs(),
                            bound.bound
                        ));
                    }
                }
                Structure::Lattice(geom)
            }
            Model::ThermalStark => {
                let st = self.stark.as_ref().ok_or_else(|| {
                    CliError::config("stark", "section required by model thermal-stark")
                })?;
                let stark = StarkModulation::new(
                    frequency(st.s_g, ge, "stark.s_g")?,
                    frequency(st.s_s, ge, "stark.s_s")?,
                );
                warnings.extend(medium.thermal_warnings(&stark).iter().map(ToString::to_string));
                Structure::Thermal(stark)
            }
        };

        let sweep = self
            .sweep
            .as_ref()
            .map(|sw| -> Result<Sweep> {
                let delta_r = match (sw.resonant_drive, sw.delta_r) {
                    (true, Some(_)) => {
                        return Err(CliError::config(
                            "sweep.delta_r",
                            "only used when resonant_drive = false",
                        ))
                    }
                    (true, None) => 0.0,
                    (false, q) => q
                        .map(|q| frequency(q, ge, "sweep.delta_r"))
                        .transpose()?
                        .unwrap_or(0.0),
                };
                let sweep = Sweep {
                    delta_min: frequency(sw.delta_min, ge, "sweep.delta_min")?,
                    delta_max: frequency(sw.delta_max, ge, "sweep.delta_max")?,
                    n_points: sw.n_points,
                    resonant_drive: sw.resonant_drive,
                    delta_r,
                };
                sweep.validate("sweep")?;
                if self.model == Model::TwoLevel && sweep.delta_min <= 0.0 && sweep.delta_max >= 0.0 {
                    return Err(CliError::config(
                        "sweep.delta_min",
                        "the two-level model is singular at zero detuning; use a range excluding 0",
                    ));
                }
                Ok(sweep)
            })
            .transpose()?;

        let oracle = self
            .oracle
            .as_ref()
            .map(|o| OdeSettings::new(o.n_steps).map_err(model_error("oracle.n_steps")))
            .transpose()?;

        Ok(Scenario {
            model: self.model,
            medium,
            structure,
            length: total,
            delta_s,
            sweep,
            oracle,
            outputs: self.outputs.clone(),
            warnings,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const FIG4A: &str = r#"
model = "cold-lattice"

[medium]
gamma_e = "1e7 rad_s"
gamma_s = 0
omega_d = "2.0 ge"
optical_depth = 100

[lattice]
lambda_lat = "400 nm"
n_periods = 500
delta_r = "0.1 lat"
delta_s = "7.2e4 ge"

[sweep]
delta_min = "0 ge"
delta_max = "0.6 ge"
n_points = 4001
"#;

    fn fig4a() -> RunConfig {
        RunConfig::from_toml_str(FIG4A).unwrap()
    }

    fn expect_path(cfg: &RunConfig, path: &str) {
        match cfg.resolve() {
            Err(CliError::Config { path: p, .. }) => assert_eq!(p, path),
            other => panic!("expected error at {path}, got {other:?}"),
        }
    }

    #[test]
    fn resolves_reference_config() {
        let sc = fig4a().resolve().unwrap();
        assert_eq!(sc.medium.omega_d, 2e7);
        assert_relative_eq!(sc.length, 2e-4, max_relative = 1e-14);
        assert_relative_eq!(sc.medium.a0, 2.5e5, max_relative = 1e-12);
        assert_relative_eq!(sc.delta_s, 7.2e11);
        let g = sc.geometry().unwrap();
        assert_relative_eq!(g.delta_r, 40e-9, max_relative = 1e-14);
        let sweep = sc.sweep().unwrap();
        assert_eq!(sweep.grid().len(), 4001);
        assert_eq!(*sweep.grid().last().unwrap(), 6e6);
        assert!(sc.warnings.is_empty(), "{:?}", sc.warnings);
    }

    #[test]
    fn round_trips_through_toml() {
        let cfg = fig4a();
        let text = cfg.to_toml_string();
        assert_eq!(RunConfig::from_toml_str(&text).unwrap(), cfg);
    }

    #[test]
    fn alternative_density_and_length_inputs() {
        let mut cfg = fig4a();
        cfg.medium.optical_depth = None;
        cfg.medium.sigma0 = Some(Quantity::new(1e-13, Unit::M2));
        cfg.medium.rho0 = Some(Quantity::new(2.5e18, Unit::PerM3));
        let lat = cfg.lattice.as_mut().unwrap();
        lat.lambda_lat = None;
        lat.length = Some(Quantity::new(200.0, Unit::Um));
        let sc = cfg.resolve().unwrap();
        assert_relative_eq!(sc.medium.a0, 2.5e5, max_relative = 1e-12);
        assert_relative_eq!(sc.geometry().unwrap().lambda_lat, 400e-9, max_relative = 1e-12);
    }

    #[test]
    fn omega_eg_fixes_delta_s() {
        let mut cfg = fig4a();
        let lat = cfg.lattice.as_mut().unwrap();
        lat.delta_s = None;
        lat.omega_eg = Some(Quantity::si(PI * SPEED_OF_LIGHT / 400e-9 - 7.2e11));
        let sc = cfg.resolve().unwrap();
        assert!((sc.delta_s - 7.2e11).abs() < 1.0);
    }

    #[test]
    fn errors_carry_field_paths() {
        let mut cfg = fig4a();
        cfg.sweep.as_mut().unwrap().n_points = 1;
        expect_path(&cfg, "sweep.n_points");

        let mut cfg = fig4a();
        cfg.sweep.as_mut().unwrap().delta_max = Quantity::new(-1.0, Unit::Ge);
        expect_path(&cfg, "sweep.delta_min");

        let mut cfg = fig4a();
        cfg.medium.omega_d = Quantity::new(2.0, Unit::Nm);
        expect_path(&cfg, "medium.omega_d");

        let mut cfg = fig4a();
        cfg.medium.gamma_e = Quantity::new(1.0, Unit::Ge);
        expect_path(&cfg, "medium.gamma_e");

        let mut cfg = fig4a();
        cfg.medium.a0 = Some(Quantity::si(1.0));
        expect_path(&cfg, "medium.a0");

        let mut cfg = fig4a();
        cfg.lattice.as_mut().unwrap().delta_r = Some(Quantity::new(0.6, Unit::Lat));
        expect_path(&cfg, "lattice");

        let mut cfg = fig4a();
        cfg.lattice = None;
        expect_path(&cfg, "lattice");

        let mut cfg = fig4a();
        cfg.model = Model::ThermalStark;
        expect_path(&cfg, "stark");

        let mut cfg = fig4a();
        cfg.model = Model::TwoLevel;
        expect_path(&cfg, "sweep.delta_min");

        let mut cfg = fig4a();
        cfg.oracle = Some(OracleSection { n_steps: 10 });
        expect_path(&cfg, "oracle.n_steps");
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = FIG4A.replace("n_periods = 500", "n_periods = 500\nperiods = 3");
        assert!(RunConfig::from_toml_str(&text).is_err());
    }

    #[test]
    fn points_override_creates_default_susceptibility_grid() {
        let mut cfg = fig4a();
        cfg.sweep = None;
        let mut sc = cfg.resolve().unwrap();
        assert!(sc.sweep().is_err());
        assert_eq!(sc.susceptibility_sweep().delta_min, -8e7);
        sc.override_points(11).unwrap();
        assert_eq!(sc.sweep().unwrap().grid()[5], 0.0);
        assert!(sc.override_points(1).is_err());
    }

    #[test]
    fn weak_drive_is_reported() {
        let mut cfg = fig4a();
        cfg.model = Model::ThermalStark;
        cfg.medium.omega_d = Quantity::new(0.5, Unit::Ge);
        cfg.stark = Some(StarkSection {
            s_g: Quantity::new(0.8, Unit::Ge),
            s_s: Quantity::si(0.0),
        });
        let sc = cfg.resolve().unwrap();
        assert!(!sc.warnings.is_empty());
    }
}
