use serde::{Deserialize, Serialize};

/// One detuning sample of a computed spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRecord {
    /// Probe detuning, rad/s.
    pub delta: f64,
    pub r: f64,
    pub t: f64,
    pub a: f64,
    /// `Re K - k_s`, 1/m.
    pub re_k_minus_ks: f64,
    /// `Im K`, 1/m.
    pub im_k: f64,
}
