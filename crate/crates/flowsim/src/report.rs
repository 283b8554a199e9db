//! Aggregates per-path simulation output into the evaluation report: K-S
//! rejection counts under Hochberg's step-up, Jarque-Bera kurtosis summaries,
//! tail-exponent and volatility t-tests against the real series — each over a
//! set of horizons ("first H of the series"), for any number of models side
//! by side.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::simulate::PathResult;
use crate::stats::{
    hochberg_rejections, jarque_bera, ks_two_sample, log_returns, t_test_one_sample,
    tail_exponent, volatilities, JarqueBera, StatsError, TTest, VolatilityTriple,
};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Stats(#[from] StatsError),
    #[error("invalid evaluation config: {0}")]
    BadConfig(String),
}

/// One evaluation horizon: the first `seconds` of every series.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HorizonSpec {
    pub label: String,
    pub seconds: f64,
}

/// Evaluation knobs, echoed into the report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    /// Grid step of the mid-price series, in seconds.
    pub sample_step: f64,
    pub horizons: Vec<HorizonSpec>,
    /// Significance for the K-S Hochberg pass.
    pub ks_alpha: f64,
    /// Significance for the Jarque-Bera Hochberg pass.
    pub jb_alpha: f64,
    /// Upper-tail fraction for the tail-exponent estimator.
    pub tail_fraction: f64,
}

impl EvalConfig {
    /// The standard horizon ladder (1 h / 6 h / 48 h) clipped to series that
    /// cover at least `total_seconds`.
    pub fn standard(sample_step: f64, total_seconds: f64) -> Self {
        let ladder = [("1 Hour", 3_600.0), ("6 Hours", 21_600.0), ("48 Hours", 172_800.0)];
        let horizons = ladder
            .iter()
            .filter(|(_, s)| *s <= total_seconds)
            .map(|(l, s)| HorizonSpec { label: (*l).to_string(), seconds: *s })
            .collect();
        EvalConfig { sample_step, horizons, ks_alpha: 0.1, jb_alpha: 0.01, tail_fraction: 0.05 }
    }

    fn steps_for(&self, spec: &HorizonSpec, grid_len: usize) -> Result<usize, ReportError> {
        let raw = spec.seconds / self.sample_step;
        let steps = raw.round();
        if !(raw.is_finite() && (raw - steps).abs() < 1e-9) {
            return Err(ReportError::BadConfig(format!(
                "horizon '{}' ({} s) is not a whole number of {}-second steps",
                spec.label, spec.seconds, self.sample_step
            )));
        }
        let steps = steps as usize;
        if steps < 4 {
            return Err(ReportError::BadConfig(format!(
                "horizon '{}' spans only {steps} grid steps; need at least 4",
                spec.label
            )));
        }
        if steps >= grid_len {
            return Err(ReportError::BadConfig(format!(
                "horizon '{}' needs {} grid points but the series has {grid_len}",
                spec.label,
                steps + 1
            )));
        }
        Ok(steps)
    }
}

/// The real series' own statistics over one horizon.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealHorizon {
    pub label: String,
    pub steps: usize,
    pub trades: usize,
    /// Absent when the horizon holds fewer tail points than the estimator
    /// needs at the configured fraction.
    pub tail_exponent: Option<f64>,
    pub jb: JarqueBera,
    pub vol: VolatilityTriple,
}

/// A t-test of a per-path statistic against the real value. The test is
/// absent when the real value itself is, or when the per-path sample is
/// degenerate (fewer than two values, or zero variance).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub real: Option<f64>,
    pub sim_mean: Option<f64>,
    /// Paths that produced the statistic.
    pub n: usize,
    pub t: Option<TTest>,
}

/// One model's results over one horizon.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelHorizon {
    pub label: String,
    pub ks_rejections: usize,
    pub ks_mean_statistic: f64,
    pub jb_mean_kurtosis: f64,
    pub jb_rejections: usize,
    pub tail: Comparison,
    pub vol_realized: Comparison,
    pub vol_per_trade: Comparison,
    pub vol_range: Comparison,
}

/// One model's results across all horizons.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelEval {
    pub model: String,
    pub n_paths: usize,
    pub horizons: Vec<ModelHorizon>,
}

/// The full evaluation: real-series statistics plus any number of models'
/// comparisons, horizon by horizon.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub config: EvalConfig,
    pub real: Vec<RealHorizon>,
    pub models: Vec<ModelEval>,
}

fn mean(xs: &[f64]) -> Option<f64> {
    if xs.is_empty() {
        None
    } else {
        Some(xs.iter().sum::<f64>() / xs.len() as f64)
    }
}

fn trades_within(trade_times: &[f64], horizon_seconds: f64) -> usize {
    trade_times.iter().filter(|&&t| t > 0.0 && t <= horizon_seconds).count()
}

fn compare(real: Option<f64>, sims: &[f64]) -> Comparison {
    let t = match real {
        Some(mu0) if sims.len() >= 2 => t_test_one_sample(sims, mu0).ok(),
        _ => None,
    };
    Comparison { real, sim_mean: mean(sims), n: sims.len(), t }
}

/// Builds the evaluation report for `models` (label, simulated paths) against
/// the real grid series. All grids — real and per-path — must share the
/// report's step and be long enough for every horizon.
pub fn build_report(
    real_grid: &[f64],
    real_trade_times: &[f64],
    models: &[(String, &[PathResult])],
    cfg: &EvalConfig,
) -> Result<EvalReport, ReportError> {
    if cfg.horizons.is_empty() {
        return Err(ReportError::BadConfig("no horizons configured".into()));
    }
    for (label, paths) in models {
        if paths.is_empty() {
            return Err(ReportError::BadConfig(format!("model '{label}' has no paths")));
        }
        for p in *paths {
            if p.grid.len() != real_grid.len() {
                return Err(ReportError::BadConfig(format!(
                    "model '{label}' grid length {} differs from the real series' {}",
                    p.grid.len(),
                    real_grid.len()
                )));
            }
        }
    }

    let mut real_rows = Vec::with_capacity(cfg.horizons.len());
    let mut model_rows: Vec<Vec<ModelHorizon>> =
        models.iter().map(|_| Vec::with_capacity(cfg.horizons.len())).collect();

    for spec in &cfg.horizons {
        let steps = cfg.steps_for(spec, real_grid.len())?;
        let real_returns = log_returns(&real_grid[..=steps])?;
        let real_abs: Vec<f64> = real_returns.iter().map(|r| r.abs()).collect();
        let real_tail = tail_exponent(&real_abs, cfg.tail_fraction).ok();
        let real_trades = trades_within(real_trade_times, spec.seconds);
        real_rows.push(RealHorizon {
            label: spec.label.clone(),
            steps,
            trades: real_trades,
            tail_exponent: real_tail,
            jb: jarque_bera(&real_returns)?,
            vol: volatilities(&real_grid[..=steps], real_trades as u64)?,
        });
        let real_vol = &real_rows.last().expect("just pushed").vol;

        for ((_, paths), rows) in models.iter().zip(model_rows.iter_mut()) {
            let mut ks_ps = Vec::with_capacity(paths.len());
            let mut ks_ds = Vec::with_capacity(paths.len());
            let mut jb_ps = Vec::new();
            let mut kurtoses = Vec::new();
            let mut tails = Vec::new();
            let mut v_r = Vec::new();
            let mut v_p = Vec::new();
            let mut v_d = Vec::new();
            for path in *paths {
                let returns = log_returns(&path.grid[..=steps])?;
                let ks = ks_two_sample(&returns, &real_returns)?;
                ks_ps.push(ks.p_value);
                ks_ds.push(ks.statistic);
                // a flat path has no return variance: JB and the tail are undefined
                if let Ok(jb) = jarque_bera(&returns) {
                    jb_ps.push(jb.p_value);
                    kurtoses.push(jb.kurtosis);
                }
                let abs: Vec<f64> = returns.iter().map(|r| r.abs()).collect();
                if let Ok(alpha) = tail_exponent(&abs, cfg.tail_fraction) {
                    tails.push(alpha);
                }
                let trades = trades_within(&path.trade_times, spec.seconds);
                let vol = volatilities(&path.grid[..=steps], trades as u64)?;
                v_r.push(vol.realized);
                v_p.push(vol.per_trade);
                v_d.push(vol.range);
            }
            rows.push(ModelHorizon {
                label: spec.label.clone(),
                ks_rejections: hochberg_rejections(&ks_ps, cfg.ks_alpha)?.len(),
                ks_mean_statistic: mean(&ks_ds).unwrap_or(f64::NAN),
                jb_mean_kurtosis: mean(&kurtoses).unwrap_or(f64::NAN),
                jb_rejections: hochberg_rejections(&jb_ps, cfg.jb_alpha)?.len(),
                tail: compare(real_tail, &tails),
                vol_realized: compare(Some(real_vol.realized), &v_r),
                vol_per_trade: compare(Some(real_vol.per_trade), &v_p),
                vol_range: compare(Some(real_vol.range), &v_d),
            });
        }
    }

    Ok(EvalReport {
        config: cfg.clone(),
        real: real_rows,
        models: models
            .iter()
            .zip(model_rows)
            .map(|((label, paths), horizons)| ModelEval {
                model: label.clone(),
                n_paths: paths.len(),
                horizons,
            })
            .collect(),
    })
}

/// `x` to `sig` significant digits, trailing zeros trimmed. Integer digits
/// are never rounded away, so large values keep their full magnitude.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn fmt2(x: f64) -> String {
    format!("{x:.2}")
}

fn fmt_opt<F: Fn(f64) -> String>(x: Option<f64>, f: F) -> String {
    x.map(f).unwrap_or_else(|| "-".to_string())
}

struct TableBuf(String);

impl TableBuf {
    fn title(&mut self, t: &str) {
        if !self.0.is_empty() {
            self.0.push('\n');
        }
        self.0.push_str(t);
        self.0.push('\n');
    }

    fn row(&mut self, cells: &[String]) {
        self.0.push_str(&cells.join(" | "));
        self.0.push('\n');
    }
}

impl EvalReport {
    /// The six tables as readable text.
    pub fn to_text(&self) -> String {
        let mut out = TableBuf(String::new());
        let model_names: Vec<String> = self.models.iter().map(|m| m.model.clone()).collect();
        let header = |extra: &[&str]| -> Vec<String> {
            let mut h = vec!["horizon".to_string()];
            h.extend(extra.iter().map(|s| s.to_string()));
            h
        };

        out.title(&format!(
            "K-S rejections under Hochberg (alpha {}, out of {} paths)",
            fmt_sig(self.config.ks_alpha, 3),
            self.models.first().map(|m| m.n_paths).unwrap_or(0)
        ));
        out.row(&header(&model_names.iter().map(String::as_str).collect::<Vec<_>>()));
        for (i, real) in self.real.iter().enumerate() {
            let mut cells = vec![real.label.clone()];
            cells.extend(self.models.iter().map(|m| m.horizons[i].ks_rejections.to_string()));
            out.row(&cells);
        }

        out.title("Real series: tail exponent, kurtosis, Jarque-Bera p-value");
        out.row(&header(&["tail exponent", "kurtosis", "p-value"]));
        for real in &self.real {
            out.row(&[
                real.label.clone(),
                fmt_opt(real.tail_exponent, fmt2),
                fmt2(real.jb.kurtosis),
                fmt2(real.jb.p_value),
            ]);
        }

        out.title(&format!(
            "Simulated series: mean kurtosis and Jarque-Bera rejections under Hochberg (alpha {})",
            fmt_sig(self.config.jb_alpha, 3)
        ));
        out.row(&header(&["metric", "models..."]));
        for (i, real) in self.real.iter().enumerate() {
            let mut kurt = vec![real.label.clone(), "mean kurtosis".to_string()];
            let mut rej = vec![real.label.clone(), "rejection count".to_string()];
            for m in &self.models {
                kurt.push(fmt2(m.horizons[i].jb_mean_kurtosis));
                rej.push(m.horizons[i].jb_rejections.to_string());
            }
            out.row(&kurt);
            out.row(&rej);
        }

        out.title("Tail exponents t-tested against the real exponent");
        out.row(&header(&["metric", "models..."]));
        for (i, real) in self.real.iter().enumerate() {
            let mut p = vec![real.label.clone(), "p-value".to_string()];
            let mut t = vec![real.label.clone(), "t-statistic".to_string()];
            for m in &self.models {
                let c = &m.horizons[i].tail;
                p.push(fmt_opt(c.t.as_ref().map(|t| t.p_value), fmt2));
                t.push(fmt_opt(c.t.as_ref().map(|t| t.t), fmt2));
            }
            out.row(&p);
            out.row(&t);
        }

        out.title("Real series volatility");
        out.row(&header(&["v_r", "v_p", "v_d"]));
        for real in &self.real {
            out.row(&[
                real.label.clone(),
                fmt_sig(real.vol.realized, 3),
                fmt_sig(real.vol.per_trade, 3),
                fmt_sig(real.vol.range, 3),
            ]);
        }

        out.title("Volatility t-tests against the real values (t, then p, per model)");
        out.row(&header(&["volatility", "models..."]));
        for (i, real) in self.real.iter().enumerate() {
            for (name, pick) in [
                ("v_r", &ModelHorizon::vol_realized as &dyn Fn(&ModelHorizon) -> &Comparison),
                ("v_p", &ModelHorizon::vol_per_trade),
                ("v_d", &ModelHorizon::vol_range),
            ] {
                let mut cells = vec![real.label.clone(), name.to_string()];
                for m in &self.models {
                    let c = pick(&m.horizons[i]);
                    cells.push(fmt_opt(c.t.as_ref().map(|t| t.t), fmt2));
                    cells.push(fmt_opt(c.t.as_ref().map(|t| t.p_value), fmt2));
                }
                out.row(&cells);
            }
        }

        out.0
    }

    /// The same tables as CSV bodies, named.
    pub fn csv_tables(&self) -> Vec<(&'static str, String)> {
        let mut tables = Vec::new();
        let model_header: String =
            self.models.iter().map(|m| m.model.clone()).collect::<Vec<_>>().join(",");

        let mut ks = format!("horizon,{model_header}\n");
        for (i, real) in self.real.iter().enumerate() {
            let cells: Vec<String> =
                self.models.iter().map(|m| m.horizons[i].ks_rejections.to_string()).collect();
            ks.push_str(&format!("{},{}\n", real.label, cells.join(",")));
        }
        tables.push(("ks_rejections", ks));

        let mut real_tails = String::from("horizon,tail_exponent,kurtosis,jb_p\n");
        for real in &self.real {
            real_tails.push_str(&format!(
                "{},{},{},{}\n",
                real.label,
                fmt_opt(real.tail_exponent, |x| x.to_string()),
                real.jb.kurtosis,
                real.jb.p_value
            ));
        }
        tables.push(("real_tails", real_tails));

        let mut jb = format!("horizon,metric,{model_header}\n");
        for (i, real) in self.real.iter().enumerate() {
            let kurt: Vec<String> =
                self.models.iter().map(|m| m.horizons[i].jb_mean_kurtosis.to_string()).collect();
            let rej: Vec<String> =
                self.models.iter().map(|m| m.horizons[i].jb_rejections.to_string()).collect();
            jb.push_str(&format!("{},mean_kurtosis,{}\n", real.label, kurt.join(",")));
            jb.push_str(&format!("{},rejections,{}\n", real.label, rej.join(",")));
        }
        tables.push(("jb_summary", jb));

        let mut tail = format!("horizon,metric,{model_header}\n");
        for (i, real) in self.real.iter().enumerate() {
            let t: Vec<String> = self
                .models
                .iter()
                .map(|m| fmt_opt(m.horizons[i].tail.t.as_ref().map(|t| t.t), |x| x.to_string()))
                .collect();
            let p: Vec<String> = self
                .models
                .iter()
                .map(|m| {
                    fmt_opt(m.horizons[i].tail.t.as_ref().map(|t| t.p_value), |x| x.to_string())
                })
                .collect();
            tail.push_str(&format!("{},t,{}\n", real.label, t.join(",")));
            tail.push_str(&format!("{},p,{}\n", real.label, p.join(",")));
        }
        tables.push(("tail_t_tests", tail));

        let mut real_vol = String::from("horizon,v_r,v_p,v_d\n");
        for real in &self.real {
            real_vol.push_str(&format!(
                "{},{},{},{}\n",
                real.label, real.vol.realized, real.vol.per_trade, real.vol.range
            ));
        }
        tables.push(("real_volatility", real_vol));

        let mut vol = format!("horizon,measure,metric,{model_header}\n");
        for (i, real) in self.real.iter().enumerate() {
            for (name, pick) in [
                ("v_r", &ModelHorizon::vol_realized as &dyn Fn(&ModelHorizon) -> &Comparison),
                ("v_p", &ModelHorizon::vol_per_trade),
                ("v_d", &ModelHorizon::vol_range),
            ] {
                let t: Vec<String> = self
                    .models
                    .iter()
                    .map(|m| fmt_opt(pick(&m.horizons[i]).t.as_ref().map(|t| t.t), |x| x.to_string()))
                    .collect();
                let p: Vec<String> = self
                    .models
                    .iter()
                    .map(|m| {
                        fmt_opt(pick(&m.horizons[i]).t.as_ref().map(|t| t.p_value), |x| {
                            x.to_string()
                        })
                    })
                    .collect();
                vol.push_str(&format!("{},{name},t,{}\n", real.label, t.join(",")));
                vol.push_str(&format!("{},{name},p,{}\n", real.label, p.join(",")));
            }
        }
        tables.push(("volatility_t_tests", vol));

        tables
    }
}

impl ModelHorizon {
    fn vol_realized(&self) -> &Comparison {
        &self.vol_realized
    }

    fn vol_per_trade(&self) -> &Comparison {
        &self.vol_per_trade
    }

    fn vol_range(&self) -> &Comparison {
        &self.vol_range
    }
}
