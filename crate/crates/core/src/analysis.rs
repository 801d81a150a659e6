//! Photonic band-gap geometry.
//!
//! Closed-form edges follow from linearized polarizabilities: `alpha ~ delta / v_g`
//! near the transparency point and `alpha ~ -a0 gamma_e / delta` far from
//! it. [`detect_gaps_numeric`] recovers gaps from a computed reflection
//! spectrum instead.

use serde::Serialize;

use crate::constants::SPEED_OF_LIGHT;
use crate::error::{require, Error, Result};
use crate::lattice::{self, LatticeGeometry};
use crate::medium::{self, EitMedium, StarkModulation};
use crate::spectrum::SpectrumRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GapKind {
    EitWindow,
    Thermal,
    TwoLevelLower,
    TwoLevelUpper,
    Numeric,
}

/// A detuning interval of strong Bragg reflection. Edges are probe
/// detunings in rad/s.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GapReport {
    pub kind: GapKind,
    pub lower_edge: f64,
    pub upper_edge: f64,
    pub center: f64,
    pub width: f64,
    /// Peak `Im K` over the gap, 1/m.
    pub max_im_k: f64,
    /// Far-detuned expansion of the edges, when it applies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub asymptotic_edges: Option<(f64, f64)>,
    /// Reflectivity threshold used by numeric detection.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
}

impl GapReport {
    fn closed_form(kind: GapKind, lower: f64, upper: f64, max_im_k: f64) -> Self {
        Self {
            kind,
            lower_edge: lower,
            upper_edge: upper,
            center: 0.5 * (lower + upper),
            width: upper - lower,
            max_im_k,
            asymptotic_edges: None,
            threshold: None,
        }
    }

    pub fn contains(&self, delta: f64) -> bool {
        (self.lower_edge..=self.upper_edge).contains(&delta)
    }
}

fn kappa1(geom: &LatticeGeometry) -> f64 {
    lattice::kappa(geom, 1).expect("l = 1 is in range")
}

/// Gap inside the transparency window of a cold lattice.
///
/// Edges `delta_s v_g / ((1 +/- kappa_1) c)`, centre
/// `delta_s v_g / (c (1 - kappa_1^2))`, peak
/// `Im K = |delta_s| kappa_1 / (c sqrt(1 - kappa_1^2))`.
pub fn eit_gap(m: &EitMedium, geom: &LatticeGeometry) -> Result<GapReport> {
    let k1 = kappa1(geom);
    if k1 >= 1.0 {
        return Err(Error::NoGap("kappa_1 = 1 makes the gap edges diverge"));
    }
    let ds = lattice::delta_s(geom);
    if ds == 0.0 {
        return Err(Error::NoGap("delta_s = 0 leaves no gap inside the transparency window"));
    }
    let vg = medium::group_velocity(m)?;
    let scale = ds * vg / SPEED_OF_LIGHT;
    let (a, b) = (scale / (1.0 + k1), scale / (1.0 - k1));
    let max_im_k = ds.abs() / SPEED_OF_LIGHT * k1 / (1.0 - k1 * k1).sqrt();
    let mut gap = GapReport::closed_form(GapKind::EitWindow, a.min(b), a.max(b), max_im_k);
    gap.center = scale / (1.0 - k1 * k1);
    gap.width = ds.abs() * vg / SPEED_OF_LIGHT * 2.0 * k1 / (1.0 - k1 * k1);
    Ok(gap)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DetuningBound {
    /// Largest `|delta_s|` keeping the gap inside the transparency window, rad/s.
    pub bound: f64,
    pub satisfied: bool,
}

/// `|delta_s| <= c (1 - kappa_1^2) sqrt(a0 / (2 L))`.
pub fn lattice_detuning_bound(m: &EitMedium, geom: &LatticeGeometry) -> DetuningBound {
    let k1 = kappa1(geom);
    let bound = SPEED_OF_LIGHT * (1.0 - k1 * k1) * (m.a0 / (2.0 * geom.length())).sqrt();
    DetuningBound {
        bound,
        satisfied: lattice::delta_s(geom).abs() <= bound,
    }
}

/// `(delta_s / 2)^2 >= FAR_DETUNED_MARGIN * a0 gamma_e c` enables the expanded edges.
pub const FAR_DETUNED_MARGIN: f64 = 100.0;

/// Far-detuned gaps on the red (lower) and blue (upper) side of the line.
///
/// Edges are `delta_s / 2 -/+ D_+/-` with
/// `D_+/- = sqrt((delta_s / 2)^2 + a0 gamma_e c (1 +/- kappa_1))`.
pub fn two_level_gaps(m: &EitMedium, geom: &LatticeGeometry) -> (GapReport, GapReport) {
    let k1 = kappa1(geom);
    let ds = lattice::delta_s(geom);
    let strength = m.a0 * m.gamma_e * SPEED_OF_LIGHT;
    let half = ds / 2.0;
    let d_plus = (half * half + strength * (1.0 + k1)).sqrt();
    let d_minus = (half * half + strength * (1.0 - k1)).sqrt();

    let peak = |lo: f64, hi: f64| {
        let f = |d: f64| two_level_im_k_sq(strength, k1, ds, d);
        let best = golden_section_max(f, lo, hi);
        f(best).max(0.0).sqrt()
    };

    let (l_lo, l_hi) = (half - d_plus, half - d_minus);
    let (u_lo, u_hi) = (half + d_minus, half + d_plus);
    let mut lower = GapReport::closed_form(GapKind::TwoLevelLower, l_lo, l_hi, peak(l_lo, l_hi));
    let mut upper = GapReport::closed_form(GapKind::TwoLevelUpper, u_lo, u_hi, peak(u_lo, u_hi));

    if half * half >= FAR_DETUNED_MARGIN * strength && ds != 0.0 {
        let abs = ds.abs();
        let near = |sign: f64| strength * (1.0 + sign * k1) / abs;
        let shift = (ds - abs) / 2.0;
        let back = (ds + abs) / 2.0;
        lower.asymptotic_edges = Some((shift - near(1.0), shift - near(-1.0)));
        upper.asymptotic_edges = Some((back + near(-1.0), back + near(1.0)));
    }
    (lower, upper)
}

/// `(Im K)^2` of the far-detuned dispersion relation at detuning `d`.
fn two_level_im_k_sq(strength: f64, k1: f64, ds: f64, d: f64) -> f64 {
    let a = strength / (SPEED_OF_LIGHT * d);
    let db = a + (ds - d) / SPEED_OF_LIGHT;
    (a * k1).powi(2) - db * db
}

fn golden_section_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..120 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1);
        }
    }
    0.5 * (lo + hi)
}

/// Gap of a thermal gas with Stark-modulated Raman resonance, assuming
/// `delta_s = 0`: `|delta'| < |S_gs| / 4`, peak `Im K = |S_gs| / (4 v_g)`.
pub fn thermal_gap(m: &EitMedium, stark: &StarkModulation) -> Result<GapReport> {
    let s_gs = stark.s_gs();
    if s_gs == 0.0 {
        return Err(Error::NoGap("S_g - S_s = 0 leaves the Raman resonance unmodulated"));
    }
    let vg = medium::group_velocity(m)?;
    let edge = s_gs.abs() / 4.0;
    Ok(GapReport::closed_form(GapKind::Thermal, -edge, edge, edge / vg))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThermalCeiling {
    /// `|S_gs| / 2 <= omega_d^2 / (gamma_e sqrt(2 a0 L))`.
    pub within_window: bool,
    /// `sqrt(a0 / (8 L))`, the largest peak `Im K` a window-contained gap reaches, 1/m.
    pub max_im_k_bound: f64,
}

/// Keeping the Stark modulation inside the transparency window caps the peak `Im K`.
pub fn thermal_ceiling(m: &EitMedium, stark: &StarkModulation, length: f64) -> Result<ThermalCeiling> {
    let window = medium::transparency_window(m, length)?;
    Ok(ThermalCeiling {
        within_window: stark.s_gs().abs() / 2.0 <= window,
        max_im_k_bound: (m.a0 / (8.0 * length)).sqrt(),
    })
}

/// Default reflectivity threshold for [`detect_gaps_numeric`].
pub const DEFAULT_THRESHOLD: f64 = 0.5;

/// Maximal runs of consecutive records with `R >= threshold`. Edges are
/// linearly interpolated at the threshold crossing; a run touching the end
/// of the spectrum ends at that sample.
pub fn detect_gaps_numeric(spectrum: &[SpectrumRecord], threshold: f64) -> Result<Vec<GapReport>> {
    require(
        threshold > 0.0 && threshold < 1.0,
        "threshold",
        threshold,
        "must lie strictly between 0 and 1",
    )?;
    let crossing = |a: &SpectrumRecord, b: &SpectrumRecord| {
        a.delta + (threshold - a.r) / (b.r - a.r) * (b.delta - a.delta)
    };
    let mut gaps = Vec::new();
    let mut i = 0;
    while i < spectrum.len() {
        if spectrum[i].r < threshold {
            i += 1;
            continue;
        }
        let start = i;
        while i < spectrum.len() && spectrum[i].r >= threshold {
            i += 1;
        }
        let end = i - 1;
        let lower = if start == 0 {
            spectrum[0].delta
        } else {
            crossing(&spectrum[start - 1], &spectrum[start])
        };
        let upper = if end + 1 == spectrum.len() {
            spectrum[end].delta
        } else {
            crossing(&spectrum[end], &spectrum[end + 1])
        };
        let max_im_k = spectrum[start..=end]
            .iter()
            .map(|rec| rec.im_k)
            .fold(f64::NEG_INFINITY, f64::max);
        let mut gap = GapReport::closed_form(GapKind::Numeric, lower, upper, max_im_k);
        gap.threshold = Some(threshold);
        gaps.push(gap);
    }
    Ok(gaps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const GE: f64 = 1e7;
    const A0: f64 = 2.5e5;
    const PERIOD: f64 = 400e-9;

    fn medium(omega_d: f64) -> EitMedium {
        EitMedium::new(GE, 0.0, omega_d * GE, A0).unwrap()
    }

    fn geom(delta_s: f64, delta_r: f64) -> LatticeGeometry {
        LatticeGeometry::with_bragg_offset(PERIOD, delta_r, 500, delta_s, None).unwrap()
    }

    #[test]
    fn eit_gap_reference_point() {
        let gap = eit_gap(&medium(2.0), &geom(7.2e4 * GE, PERIOD / 10.0)).unwrap();
        assert_eq!(gap.kind, GapKind::EitWindow);
        assert!((gap.lower_edge / GE - 0.0201).abs() < 1e-4);
        assert!((gap.upper_edge / GE - 0.4089).abs() < 1e-4);
        assert!((gap.width / GE - 0.388).abs() < 1e-3);
        assert!((gap.center / GE - 0.2145).abs() < 1e-4);
        assert_relative_eq!(gap.width, gap.upper_edge - gap.lower_edge, max_relative = 1e-9);
        assert_relative_eq!(gap.center, 0.5 * (gap.upper_edge + gap.lower_edge), max_relative = 1e-9);
        assert!((gap.max_im_k - 5.14e3).abs() < 5.0);
        assert!((gap.max_im_k * 2e-4 - 1.03).abs() < 2e-3);
    }

    #[test]
    fn eit_gap_errors_and_limits() {
        assert!(matches!(
            eit_gap(&medium(2.0), &geom(0.0, PERIOD / 10.0)),
            Err(Error::NoGap(_))
        ));
        let no_drive = EitMedium::new(GE, 0.0, 0.0, A0).unwrap();
        assert!(eit_gap(&no_drive, &geom(7.2e4 * GE, PERIOD / 10.0)).is_err());
        // Tight localization drives kappa_1 to 1 in floating point.
        let pinned = LatticeGeometry::with_bragg_offset(PERIOD, 1e-18, 500, 7.2e11, None).unwrap();
        assert!(matches!(eit_gap(&medium(2.0), &pinned), Err(Error::NoGap(_))));
        let shallow = eit_gap(&medium(2.0), &geom(7.2e4 * GE, 0.49 * PERIOD)).unwrap();
        assert!(shallow.width < 0.03 * eit_gap(&medium(2.0), &geom(7.2e4 * GE, PERIOD / 10.0)).unwrap().width);
    }

    #[test]
    fn eit_gap_mirrors_with_delta_s() {
        let pos = eit_gap(&medium(2.0), &geom(7.2e4 * GE, PERIOD / 10.0)).unwrap();
        let neg = eit_gap(&medium(2.0), &geom(-7.2e4 * GE, PERIOD / 10.0)).unwrap();
        assert_relative_eq!(neg.lower_edge, -pos.upper_edge, max_relative = 1e-9);
        assert_relative_eq!(neg.upper_edge, -pos.lower_edge, max_relative = 1e-9);
        assert_relative_eq!(neg.width, pos.width, max_relative = 1e-9);
    }

    #[test]
    fn eit_edges_bound_linearized_im_k_support() {
        // Im K of K - k_s = i sqrt((kappa delta / v_g)^2 - (delta / v_g - delta_s / c)^2).
        let m = medium(2.0);
        let g = geom(7.2e4 * GE, PERIOD / 10.0);
        let gap = eit_gap(&m, &g).unwrap();
        let vg = medium::group_velocity(&m).unwrap();
        let k1 = lattice::kappa(&g, 1).unwrap();
        let ds = lattice::delta_s(&g);
        let n = 20001;
        let step = 0.6 * GE / (n - 1) as f64;
        let support: Vec<f64> = (0..n)
            .map(|i| i as f64 * step)
            .filter(|d| (k1 * d / vg).powi(2) - (d / vg - ds / SPEED_OF_LIGHT).powi(2) > 0.0)
            .collect();
        assert!((support[0] - gap.lower_edge).abs() <= step);
        assert!((support.last().unwrap() - gap.upper_edge).abs() <= step);
    }

    #[test]
    fn detuning_bound() {
        let m = medium(2.0);
        let g = geom(7.2e4 * GE, PERIOD / 10.0);
        let b = lattice_detuning_bound(&m, &g);
        assert!((b.bound / SPEED_OF_LIGHT - 4477.0).abs() < 5.0);
        assert!((b.bound - 1.342e12).abs() < 2e9);
        assert!(b.satisfied);
        assert!(!lattice_detuning_bound(&m, &geom(2.0 * b.bound, PERIOD / 10.0)).satisfied);

        let long = LatticeGeometry::with_bragg_offset(PERIOD, PERIOD / 10.0, 2000, 0.0, None).unwrap();
        assert_relative_eq!(lattice_detuning_bound(&m, &long).bound, b.bound / 2.0, max_relative = 1e-9);
        let pinned = LatticeGeometry::with_bragg_offset(PERIOD, 1e-18, 500, 0.0, None).unwrap();
        assert_eq!(lattice_detuning_bound(&m, &pinned).bound, 0.0);
    }

    #[test]
    fn two_level_reference_point() {
        let (lower, upper) = two_level_gaps(&medium(2.0), &geom(7.2e11, PERIOD / 10.0));
        let (lo, hi) = lower.asymptotic_edges.unwrap();
        assert!((lo / GE + 198.6).abs() < 0.3, "{}", lo / GE);
        assert!((hi / GE + 9.79).abs() < 0.02, "{}", hi / GE);
        for (gap, kind) in [(lower, GapKind::TwoLevelLower), (upper, GapKind::TwoLevelUpper)] {
            assert_eq!(gap.kind, kind);
            assert!(gap.lower_edge < gap.upper_edge);
            let (alo, ahi) = gap.asymptotic_edges.unwrap();
            assert!((alo - gap.lower_edge).abs() <= 0.01 * gap.lower_edge.abs());
            assert!((ahi - gap.upper_edge).abs() <= 0.01 * gap.upper_edge.abs());
            assert!(gap.max_im_k > 0.0);
        }
        assert_relative_eq!(lower.width, upper.width, max_relative = 1e-9);
        assert!(upper.lower_edge > 7.2e11);
    }

    #[test]
    fn two_level_limits() {
        // delta_s = 0: gaps symmetric about the line at sqrt(a0 gamma_e c (1 -/+ kappa)).
        let g = geom(0.0, PERIOD / 10.0);
        let (lower, upper) = two_level_gaps(&medium(2.0), &g);
        let k1 = lattice::kappa(&g, 1).unwrap();
        let strength = A0 * GE * SPEED_OF_LIGHT;
        assert_relative_eq!(upper.lower_edge, (strength * (1.0 - k1)).sqrt(), max_relative = 1e-12);
        assert_relative_eq!(upper.upper_edge, (strength * (1.0 + k1)).sqrt(), max_relative = 1e-12);
        assert_relative_eq!(lower.lower_edge, -upper.upper_edge, max_relative = 1e-12);
        assert_relative_eq!(lower.upper_edge, -upper.lower_edge, max_relative = 1e-12);
        assert!(lower.asymptotic_edges.is_none());

        // Far detuned, the width 2 a0 gamma_e c kappa_1 / |delta_s| scales with kappa_1.
        let shallow = geom(7.2e11, 0.49 * PERIOD);
        let tight = geom(7.2e11, PERIOD / 10.0);
        let ratio = two_level_gaps(&medium(2.0), &shallow).0.width / two_level_gaps(&medium(2.0), &tight).0.width;
        let expected = lattice::kappa(&shallow, 1).unwrap() / lattice::kappa(&tight, 1).unwrap();
        assert_relative_eq!(ratio, expected, max_relative = 1e-2);
    }

    #[test]
    fn thermal_gap_values() {
        let m = EitMedium::new(GE, 1e-4 * GE, 2.0 * GE, A0).unwrap();
        let gap = thermal_gap(&m, &StarkModulation::new(0.8 * GE, 0.0)).unwrap();
        assert_eq!(gap.kind, GapKind::Thermal);
        assert_relative_eq!(gap.width, 0.4 * GE, max_relative = 1e-12);
        assert_eq!(gap.center, 0.0);
        assert_relative_eq!(gap.max_im_k, 1.25e4, max_relative = 1e-12);
        assert_relative_eq!(gap.max_im_k * 2e-4, 2.5, max_relative = 1e-12);

        let wide = thermal_gap(&m, &StarkModulation::new(1.6 * GE, 0.0)).unwrap();
        assert_relative_eq!(wide.width, 0.8 * GE, max_relative = 1e-12);

        assert!(matches!(
            thermal_gap(&m, &StarkModulation::new(0.3 * GE, 0.3 * GE)),
            Err(Error::NoGap(_))
        ));
    }

    #[test]
    fn thermal_peak_capped_by_window() {
        let m = EitMedium::new(GE, 1e-4 * GE, 2.0 * GE, A0).unwrap();
        let length = 2e-4;
        let window = medium::transparency_window(&m, length).unwrap();
        for frac in [0.1, 0.5, 0.99, 1.0] {
            let stark = StarkModulation::new(2.0 * frac * window, 0.0);
            let ceiling = thermal_ceiling(&m, &stark, length).unwrap();
            assert!(ceiling.within_window);
            let gap = thermal_gap(&m, &stark).unwrap();
            assert!(gap.max_im_k <= ceiling.max_im_k_bound * (1.0 + 1e-12));
        }
        let outside = StarkModulation::new(2.2 * window, 0.0);
        assert!(!thermal_ceiling(&m, &outside, length).unwrap().within_window);
    }

    fn record(delta: f64, r: f64) -> SpectrumRecord {
        SpectrumRecord {
            delta,
            r,
            t: 1.0 - r,
            a: 0.0,
            re_k_minus_ks: 0.0,
            im_k: r * 10.0,
        }
    }

    #[test]
    fn numeric_detection() {
        let flat: Vec<_> = (0..50).map(|i| record(i as f64, 0.0)).collect();
        assert!(detect_gaps_numeric(&flat, 0.5).unwrap().is_empty());
        assert!(detect_gaps_numeric(&[], 0.5).unwrap().is_empty());
        assert!(detect_gaps_numeric(&flat, 0.0).is_err());
        assert!(detect_gaps_numeric(&flat, 1.0).is_err());

        // Box with edges at grid midpoints 10.5 and 20.5, plus a run at the end.
        let boxy: Vec<_> = (0..40)
            .map(|i| {
                let d = i as f64;
                record(d, if (10.5..20.5).contains(&d) || d > 35.0 { 1.0 } else { 0.0 })
            })
            .collect();
        let gaps = detect_gaps_numeric(&boxy, 0.5).unwrap();
        assert_eq!(gaps.len(), 2);
        assert_eq!((gaps[0].lower_edge, gaps[0].upper_edge), (10.5, 20.5));
        assert_eq!(gaps[0].width, 10.0);
        assert_eq!(gaps[0].max_im_k, 10.0);
        assert_eq!(gaps[0].threshold, Some(0.5));
        assert_eq!((gaps[1].lower_edge, gaps[1].upper_edge), (35.5, 39.0));

        let ramp = [record(0.0, 0.2), record(1.0, 0.6), record(2.0, 0.8), record(3.0, 0.4)];
        let gaps = detect_gaps_numeric(&ramp, 0.5).unwrap();
        assert_relative_eq!(gaps[0].lower_edge, 0.75, max_relative = 1e-15);
        assert_relative_eq!(gaps[0].upper_edge, 2.75, max_relative = 1e-15);
    }
}
