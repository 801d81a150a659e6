use std::fmt;

/// Soft validity-regime violations. Evaluation proceeds; callers decide
/// whether to surface them.
#[derive(Debug, Clone, PartialEq)]
pub enum Warning {
    /// The Raman coherence decays at least as fast as the excited state.
    RamanDecayNotSmall { gamma_s: f64, gamma_e: f64 },
    /// A thermal-EIT strong-drive condition holds by less than a factor of 10.
    WeakDrive { condition: &'static str, ratio: f64 },
    /// Localization width exceeds a quarter lattice period.
    WideLocalization { delta_r: f64, period: f64 },
    /// Closed-form and finite-interval Fourier coefficients disagree.
    KappaTruncation { harmonic: i32, closed_form: f64, quadrature: f64 },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::RamanDecayNotSmall { gamma_s, gamma_e } => write!(
                f,
                "gamma_s = {gamma_s:e} rad/s is not small compared with gamma_e = {gamma_e:e} rad/s"
            ),
            Warning::WeakDrive { condition, ratio } => write!(
                f,
                "thermal EIT regime marginal: {condition} holds only by a factor {ratio:.3}"
            ),
            Warning::WideLocalization { delta_r, period } => write!(
                f,
                "localization width {delta_r:e} m exceeds a quarter of the lattice period {period:e} m"
            ),
            Warning::KappaTruncation {
                harmonic,
                closed_form,
                quadrature,
            } => write!(
                f,
                "kappa_{harmonic}: closed form {closed_form:.9} differs from one-period quadrature \
                 {quadrature:.9}; localization too wide for the tight-binding density"
            ),
        }
    }
}
