//! CSV, JSON and SVG writers.
//!
//! CSV values use scientific notation with 12 significant digits and LF
//! line endings, so identical inputs give byte-identical files.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use eit_bragg::analysis::GapReport;
use eit_bragg::SpectrumRecord;
use plotters::prelude::*;
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::run::SusceptibilityRecord;

pub const SPECTRUM_HEADER: &str = "delta_rad_s,R,T,A,reK_minus_ks_per_m,imK_per_m";
pub const DISPERSION_HEADER: &str = "delta_rad_s,reK_minus_ks_per_m,imK_per_m";
pub const SUSCEPTIBILITY_HEADER: &str = "delta_rad_s,re_alpha_over_a0,im_alpha_over_a0";
pub const GAPS_HEADER: &str = "kind,lower_edge_rad_s,upper_edge_rad_s,center_rad_s,width_rad_s,max_imK_per_m";

fn sci(x: f64) -> String {
    format!("{x:.11e}")
}

fn csv_rows<W: Write>(mut w: W, header: &str, rows: impl Iterator<Item = Vec<f64>>) -> io::Result<()> {
    writeln!(w, "{header}")?;
    for row in rows {
        let line: Vec<String> = row.into_iter().map(sci).collect();
        writeln!(w, "{}", line.join(","))?;
    }
    w.flush()
}

pub fn spectrum_csv<W: Write>(w: W, records: &[SpectrumRecord]) -> io::Result<()> {
    csv_rows(
        w,
        SPECTRUM_HEADER,
        records
            .iter()
            .map(|r| vec![r.delta, r.r, r.t, r.a, r.re_k_minus_ks, r.im_k]),
    )
}

pub fn dispersion_csv<W: Write>(w: W, records: &[SpectrumRecord]) -> io::Result<()> {
    csv_rows(
        w,
        DISPERSION_HEADER,
        records.iter().map(|r| vec![r.delta, r.re_k_minus_ks, r.im_k]),
    )
}

pub fn susceptibility_csv<W: Write>(w: W, records: &[SusceptibilityRecord]) -> io::Result<()> {
    csv_rows(
        w,
        SUSCEPTIBILITY_HEADER,
        records
            .iter()
            .map(|r| vec![r.delta, r.re_alpha_over_a0, r.im_alpha_over_a0]),
    )
}

pub fn gaps_csv<W: Write>(mut w: W, gaps: &[GapReport]) -> io::Result<()> {
    writeln!(w, "{GAPS_HEADER}")?;
    for g in gaps {
        let kind = serde_json::to_value(g.kind).expect("enum serializes");
        writeln!(
            w,
            "{},{},{},{},{},{}",
            kind.as_str().unwrap_or_default(),
            sci(g.lower_edge),
            sci(g.upper_edge),
            sci(g.center),
            sci(g.width),
            sci(g.max_im_k)
        )?;
    }
    w.flush()
}

/// Creates `path` (and its parent directories) and hands a buffered writer to `body`.
pub fn write_file(path: &Path, body: impl FnOnce(&mut BufWriter<File>) -> io::Result<()>) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut w = BufWriter::new(file);
    body(&mut w).and_then(|_| w.flush()).map_err(|e| CliError::io(path, e))
}

pub fn json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    write_file(path, |w| {
        serde_json::to_writer_pretty(&mut *w, value)?;
        writeln!(w)
    })
}

/// `out/fig.svg` with tag `R` becomes `out/fig_R.svg`.
pub fn tagged_path(path: &Path, tag: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy()).unwrap_or_default();
    let ext = path.extension().map(|e| e.to_string_lossy()).unwrap_or("svg".into());
    path.with_file_name(format!("{stem}_{tag}.{ext}"))
}

fn padded_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values
        .filter(|v| v.is_finite())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if !lo.is_finite() {
        return (-1.0, 1.0);
    }
    let pad = if hi > lo { 0.05 * (hi - lo) } else { lo.abs().max(1.0) * 0.05 };
    (lo - pad, hi + pad)
}

/// Line chart of `ys` against detuning in units of `gamma_e`.
pub fn line_chart(path: &Path, y_label: &str, deltas: &[f64], ys: &[f64], gamma_e: f64) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    let plot_err = |e: &dyn std::fmt::Display| CliError::Plot {
        path: path.to_path_buf(),
        message: e.to_string(),
    };
    let xs: Vec<f64> = deltas.iter().map(|d| d / gamma_e).collect();
    let (x0, x1) = match (xs.first(), xs.last()) {
        (Some(&a), Some(&b)) if b > a => (a, b),
        _ => (-1.0, 1.0),
    };
    let (y0, y1) = padded_range(ys.iter().copied());

    let root = SVGBackend::new(path, (800, 500)).into_drawing_area();
    root.fill(&WHITE).map_err(|e| plot_err(&e))?;
    let mut chart = ChartBuilder::on(&root)
        .margin(20)
        .x_label_area_size(45)
        .y_label_area_size(80)
        .build_cartesian_2d(x0..x1, y0..y1)
        .map_err(|e| plot_err(&e))?;
    chart
        .configure_mesh()
        .disable_mesh()
        .x_desc("detuning / gamma_e")
        .y_desc(y_label)
        .draw()
        .map_err(|e| plot_err(&e))?;
    chart
        .draw_series(LineSeries::new(
            xs.iter().zip(ys).map(|(&x, &y)| (x, y)),
            &BLUE,
        ))
        .map_err(|e| plot_err(&e))?;
    root.present().map_err(|e| plot_err(&e))?;
    Ok(())
}
