//! Subcommand dispatch: load, resolve, run, write.

use std::path::{Path, PathBuf};

use eit_bragg::SpectrumRecord;
use serde::Serialize;

use crate::config::{Command, Format, RunConfig, Scenario};
use crate::emit;
use crate::error::Result;
use crate::run;

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub config: PathBuf,
    pub out_dir: Option<PathBuf>,
    pub points: Option<usize>,
    pub threshold: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    /// 0 on success, 2 when `validate` finds a mismatch.
    pub exit_code: i32,
    pub summary: Vec<String>,
    pub written: Vec<PathBuf>,
}

#[derive(Serialize)]
struct RecordsDocument<'a, T> {
    model: &'static str,
    n_points: usize,
    records: &'a [T],
}

#[derive(Serialize)]
struct SpectrumDocument<'a> {
    model: &'static str,
    n_points: usize,
    peak_r: f64,
    peak_r_delta: f64,
    records: &'a [SpectrumRecord],
}

#[derive(Serialize)]
struct DispersionRecord {
    delta: f64,
    re_k_minus_ks: f64,
    im_k: f64,
}

pub fn load(opts: &Options) -> Result<Scenario> {
    let mut sc = RunConfig::load(&opts.config)?.resolve()?;
    if let Some(n) = opts.points {
        sc.override_points(n)?;
    }
    Ok(sc)
}

pub fn execute(cmd: Command, opts: &Options) -> Result<Outcome> {
    let sc = load(opts)?;
    for w in &sc.warnings {
        log::warn!("{w}");
    }
    run_scenario(cmd, &sc, opts)
}

struct Writer<'a> {
    out_dir: Option<&'a Path>,
    written: Vec<PathBuf>,
}

impl Writer<'_> {
    fn target(&self, path: &Path) -> PathBuf {
        match self.out_dir {
            Some(dir) if path.is_relative() => dir.join(path),
            _ => path.to_path_buf(),
        }
    }

    fn chart(&mut self, path: &Path, tag: &str, label: &str, deltas: &[f64], ys: &[f64], ge: f64) -> Result<()> {
        let p = emit::tagged_path(path, tag);
        emit::line_chart(&p, label, deltas, ys, ge)?;
        self.written.push(p);
        Ok(())
    }
}

fn peak(records: &[SpectrumRecord]) -> Option<&SpectrumRecord> {
    records.iter().max_by(|a, b| a.r.total_cmp(&b.r))
}

pub fn run_scenario(cmd: Command, sc: &Scenario, opts: &Options) -> Result<Outcome> {
    let mut out = Writer {
        out_dir: opts.out_dir.as_deref(),
        written: Vec::new(),
    };
    let outputs: Vec<(Format, PathBuf)> = sc
        .outputs
        .iter()
        .filter(|o| o.command.is_none_or(|c| c == cmd))
        .map(|o| (o.format, out.target(&o.path)))
        .collect();
    let model = sc.model.name();
    let ge = sc.medium.gamma_e;
    let mut summary = Vec::new();
    let mut exit_code = 0;

    match cmd {
        Command::Spectrum | Command::Dispersion => {
            let records = run::spectrum(sc)?;
            let deltas: Vec<f64> = records.iter().map(|r| r.delta).collect();
            let col = |f: fn(&SpectrumRecord) -> f64| records.iter().map(f).collect::<Vec<_>>();
            if let Some(p) = peak(&records) {
                summary.push(format!(
                    "{} points, peak R = {:.6} at delta = {:.6e} rad/s ({:.6} gamma_e)",
                    records.len(),
                    p.r,
                    p.delta,
                    p.delta / ge
                ));
            }
            let dispersion = cmd == Command::Dispersion;
            for (format, path) in &outputs {
                match (dispersion, format) {
                    (false, Format::Csv) => {
                        emit::write_file(path, |w| emit::spectrum_csv(w, &records))?
                    }
                    (true, Format::Csv) => {
                        emit::write_file(path, |w| emit::dispersion_csv(w, &records))?
                    }
                    (false, Format::Json) => {
                        let p = peak(&records);
                        emit::json(
                            path,
                            &SpectrumDocument {
                                model,
                                n_points: records.len(),
                                peak_r: p.map_or(0.0, |p| p.r),
                                peak_r_delta: p.map_or(0.0, |p| p.delta),
                                records: &records,
                            },
                        )?
                    }
                    (true, Format::Json) => {
                        let rows: Vec<DispersionRecord> = records
                            .iter()
                            .map(|r| DispersionRecord {
                                delta: r.delta,
                                re_k_minus_ks: r.re_k_minus_ks,
                                im_k: r.im_k,
                            })
                            .collect();
                        emit::json(
                            path,
                            &RecordsDocument {
                                model,
                                n_points: rows.len(),
                                records: &rows,
                            },
                        )?
                    }
                    (false, Format::Svg) => {
                        out.chart(path, "R", "R", &deltas, &col(|r| r.r), ge)?;
                        out.chart(path, "T", "T", &deltas, &col(|r| r.t), ge)?;
                        out.chart(path, "A", "A", &deltas, &col(|r| r.a), ge)?;
                        continue;
                    }
                    (true, Format::Svg) => {
                        out.chart(path, "reK", "Re K - k_s (1/m)", &deltas, &col(|r| r.re_k_minus_ks), ge)?;
                        out.chart(path, "imK", "Im K (1/m)", &deltas, &col(|r| r.im_k), ge)?;
                        continue;
                    }
                }
                out.written.push(path.clone());
            }
        }
        Command::Susceptibility => {
            let records = run::susceptibility(sc);
            let deltas: Vec<f64> = records.iter().map(|r| r.delta).collect();
            summary.push(format!("{} points of alpha / a0", records.len()));
            for (format, path) in &outputs {
                match format {
                    Format::Csv => emit::write_file(path, |w| emit::susceptibility_csv(w, &records))?,
                    Format::Json => emit::json(
                        path,
                        &RecordsDocument {
                            model,
                            n_points: records.len(),
                            records: &records,
                        },
                    )?,
                    Format::Svg => {
                        let re: Vec<f64> = records.iter().map(|r| r.re_alpha_over_a0).collect();
                        let im: Vec<f64> = records.iter().map(|r| r.im_alpha_over_a0).collect();
                        out.chart(path, "re_alpha", "Re alpha / a0", &deltas, &re, ge)?;
                        out.chart(path, "im_alpha", "Im alpha / a0", &deltas, &im, ge)?;
                        continue;
                    }
                }
                out.written.push(path.clone());
            }
        }
        Command::Bandgap => {
            let (report, records) = run::bandgap(sc, opts.threshold)?;
            for g in report.closed_form.iter().chain(&report.numeric) {
                summary.push(format!(
                    "{:<16} [{:.6e}, {:.6e}] rad/s = [{:.6}, {:.6}] gamma_e, max Im K = {:.4e} /m",
                    serde_json::to_value(g.kind).expect("enum serializes").as_str().unwrap_or_default(),
                    g.lower_edge,
                    g.upper_edge,
                    g.lower_edge / ge,
                    g.upper_edge / ge,
                    g.max_im_k
                ));
            }
            summary.extend(report.notes.iter().cloned());
            for (format, path) in &outputs {
                match format {
                    Format::Json => emit::json(path, &report)?,
                    Format::Csv => {
                        let gaps: Vec<_> = report.closed_form.iter().chain(&report.numeric).copied().collect();
                        emit::write_file(path, |w| emit::gaps_csv(w, &gaps))?
                    }
                    Format::Svg => {
                        let deltas: Vec<f64> = records.iter().map(|r| r.delta).collect();
                        let r: Vec<f64> = records.iter().map(|r| r.r).collect();
                        out.chart(path, "R", "R", &deltas, &r, ge)?;
                        continue;
                    }
                }
                out.written.push(path.clone());
            }
        }
        Command::Validate => {
            let report = run::validate(sc)?;
            summary.push(format!(
                "{} points, {} RK4 steps: max |dR| = {:.3e}, max |dT| = {:.3e} (worst at delta = {:.6e} rad/s), {}",
                report.n_points,
                report.n_steps,
                report.max_abs_dr,
                report.max_abs_dt,
                report.worst_delta,
                if report.passed { "ok" } else { "MISMATCH" }
            ));
            if report.saturated_points > 0 {
                summary.push(format!("{} points saturated the oracle", report.saturated_points));
            }
            if !report.passed {
                exit_code = 2;
            }
            for (format, path) in &outputs {
                match format {
                    Format::Json => {
                        emit::json(path, &report)?;
                        out.written.push(path.clone());
                    }
                    _ => log::info!("validate writes JSON only; skipping {}", path.display()),
                }
            }
        }
    }

    Ok(Outcome {
        exit_code,
        summary,
        written: out.written,
    })
}
