//! Distributional test statistics for comparing price paths.
//!
//! Everything protocol-shaped is implemented directly (two-sample
//! Kolmogorov–Smirnov with the asymptotic p series, Jarque-Bera with its
//! closed-form χ²(2) tail, Hochberg's step-up procedure, the Hill tail-index
//! estimator, the realized/per-trade/range volatility triple). Only textbook
//! distribution functions (Student-t CDF, χ² CDF and quantile) are delegated
//! to `statrs`.

use statrs::distribution::{ChiSquared, ContinuousCDF, StudentsT};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("need at least {need} observations, got {got}")]
    TooFewObservations { need: usize, got: usize },
    #[error("sample variance is zero")]
    ZeroVariance,
    #[error("prices must be positive and finite to take log-returns")]
    NonPositivePrice,
    #[error("observations must be finite")]
    NonFiniteObservation,
    #[error("p-values must lie in [0, 1]")]
    InvalidPValue,
    #[error("significance level must lie in (0, 1)")]
    InvalidAlpha,
    #[error("tail fraction {fraction} of {n} points leaves {got} tail points; need at least {need}")]
    TailTooSmall { fraction: f64, n: usize, got: usize, need: usize },
    #[error("tail threshold must be positive")]
    NonPositiveTail,
    #[error("tail observations are all equal")]
    DegenerateTail,
    #[error("observed ({observed}) and expected ({expected}) bin counts differ")]
    BinMismatch { observed: usize, expected: usize },
    #[error("expected bin probabilities must be positive and sum to 1")]
    InvalidExpected,
}

/// Minimum number of tail order statistics the Hill estimator accepts.
pub const MIN_TAIL_POINTS: usize = 20;

fn check_finite(x: &[f64]) -> Result<(), StatsError> {
    if x.iter().any(|v| !v.is_finite()) {
        return Err(StatsError::NonFiniteObservation);
    }
    Ok(())
}

/// Log-returns `ln(p[i+1] / p[i])` of a positive price series.
pub fn log_returns(prices: &[f64]) -> Result<Vec<f64>, StatsError> {
    if prices.len() < 2 {
        return Err(StatsError::TooFewObservations { need: 2, got: prices.len() });
    }
    if prices.iter().any(|p| !p.is_finite() || *p <= 0.0) {
        return Err(StatsError::NonPositivePrice);
    }
    Ok(prices.windows(2).map(|w| (w[1] / w[0]).ln()).collect())
}

/// Two-sample Kolmogorov–Smirnov test.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KsResult {
    /// `D = sup_x |F_a(x) − F_b(x)|`, exact over the pooled sample points.
    pub statistic: f64,
    /// Asymptotic p-value at effective size `n_a·n_b/(n_a+n_b)`.
    pub p_value: f64,
}

/// Exact sup-distance between the two empirical CDFs (merge sweep; ties are
/// resolved by advancing both samples past the tied value before comparing).
pub fn ks_statistic(a: &[f64], b: &[f64]) -> Result<f64, StatsError> {
    if a.is_empty() || b.is_empty() {
        return Err(StatsError::TooFewObservations { need: 1, got: 0 });
    }
    check_finite(a)?;
    check_finite(b)?;
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort_by(f64::total_cmp);
    sb.sort_by(f64::total_cmp);
    let (n, m) = (sa.len(), sb.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < n || j < m {
        let v = match (sa.get(i), sb.get(j)) {
            (Some(&x), Some(&y)) => x.min(y),
            (Some(&x), None) => x,
            (None, Some(&y)) => y,
            (None, None) => unreachable!(),
        };
        while i < n && sa[i] == v {
            i += 1;
        }
        while j < m && sb[j] == v {
            j += 1;
        }
        let diff = (i as f64 / n as f64 - j as f64 / m as f64).abs();
        if diff > d {
            d = diff;
        }
    }
    Ok(d)
}

/// Kolmogorov survival function `Q(λ) = 2 Σ_{k≥1} (−1)^{k−1} e^{−2k²λ²}`,
/// clipped to `[0, 1]`.
pub fn ks_survival(lambda: f64) -> f64 {
    if lambda <= 0.05 {
        return 1.0; // series numerically 1 below here
    }
    let mut sum = 0.0;
    for k in 1..=200u32 {
        let term = (-2.0 * (k as f64).powi(2) * lambda * lambda).exp();
        sum += if k % 2 == 1 { term } else { -term };
        if term < 1e-17 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

pub fn ks_two_sample(a: &[f64], b: &[f64]) -> Result<KsResult, StatsError> {
    let d = ks_statistic(a, b)?;
    let n_eff = (a.len() * b.len()) as f64 / (a.len() + b.len()) as f64;
    Ok(KsResult { statistic: d, p_value: ks_survival(n_eff.sqrt() * d) })
}

/// Jarque-Bera normality test.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct JarqueBera {
    /// Sample skewness `m₃ / m₂^{3/2}` (biased moment estimators).
    pub skewness: f64,
    /// Raw sample kurtosis `m₄ / m₂²` (3 under normality).
    pub kurtosis: f64,
    /// `JB = n/6 · (S² + (K−3)²/4)`.
    pub statistic: f64,
    /// χ²(2) upper tail, `exp(−JB/2)` in closed form.
    pub p_value: f64,
}

pub fn jarque_bera(x: &[f64]) -> Result<JarqueBera, StatsError> {
    if x.len() < 4 {
        return Err(StatsError::TooFewObservations { need: 4, got: x.len() });
    }
    check_finite(x)?;
    let n = x.len() as f64;
    let mean = x.iter().sum::<f64>() / n;
    let mut m2 = 0.0;
    let mut m3 = 0.0;
    let mut m4 = 0.0;
    for v in x {
        let d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    if m2 <= 0.0 {
        return Err(StatsError::ZeroVariance);
    }
    let skewness = m3 / m2.powf(1.5);
    let kurtosis = m4 / (m2 * m2);
    let statistic = n / 6.0 * (skewness * skewness + (kurtosis - 3.0).powi(2) / 4.0);
    Ok(JarqueBera { skewness, kurtosis, statistic, p_value: (-statistic / 2.0).exp() })
}

/// One-sample two-tailed t-test.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TTest {
    pub mean: f64,
    pub t: f64,
    pub p_value: f64,
}

/// Two-tailed Student-t p-value, `2·P(T_df ≥ |t|)`.
pub fn student_t_two_tailed(t: f64, df: f64) -> f64 {
    let dist = StudentsT::new(0.0, 1.0, df).expect("df > 0");
    (2.0 * (1.0 - dist.cdf(t.abs()))).clamp(0.0, 1.0)
}

pub fn t_test_one_sample(x: &[f64], mu0: f64) -> Result<TTest, StatsError> {
    if x.len() < 2 {
        return Err(StatsError::TooFewObservations { need: 2, got: x.len() });
    }
    check_finite(x)?;
    let n = x.len() as f64;
    let mean = x.iter().sum::<f64>() / n;
    let var = x.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    if var <= 0.0 {
        return Err(StatsError::ZeroVariance);
    }
    let t = (mean - mu0) / (var / n).sqrt();
    Ok(TTest { mean, t, p_value: student_t_two_tailed(t, n - 1.0) })
}

/// Hochberg's step-up multiple-testing procedure.
///
/// Finds the largest k (1-based, over p-values sorted ascending) with
/// `p_(k) ≤ α/(m−k+1)` and rejects the k smallest p-values. Returns the
/// rejected indices into the input slice, sorted ascending; ties keep input
/// order. Empty input yields an empty rejection set.
pub fn hochberg_rejections(p_values: &[f64], alpha: f64) -> Result<Vec<usize>, StatsError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(StatsError::InvalidAlpha);
    }
    if p_values.iter().any(|p| !p.is_finite() || *p < 0.0 || *p > 1.0) {
        return Err(StatsError::InvalidPValue);
    }
    let m = p_values.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| p_values[i].total_cmp(&p_values[j]));
    let mut k_best = 0;
    for k in 1..=m {
        if p_values[order[k - 1]] <= alpha / (m - k + 1) as f64 {
            k_best = k;
        }
    }
    let mut rejected: Vec<usize> = order[..k_best].to_vec();
    rejected.sort_unstable();
    Ok(rejected)
}

/// Hill estimator of the tail exponent (density convention): with the k
/// largest observations `x₁ ≥ … ≥ x_k` and threshold `x_min = x_k`,
/// `α = 1 + k · (Σ ln(xᵢ/x_min))⁻¹`. `k = ⌊fraction·n⌋`.
pub fn tail_exponent(abs_returns: &[f64], tail_fraction: f64) -> Result<f64, StatsError> {
    if !(tail_fraction > 0.0 && tail_fraction < 1.0) {
        return Err(StatsError::InvalidAlpha);
    }
    check_finite(abs_returns)?;
    let n = abs_returns.len();
    let k = (tail_fraction * n as f64).floor() as usize;
    if k < MIN_TAIL_POINTS {
        return Err(StatsError::TailTooSmall {
            fraction: tail_fraction,
            n,
            got: k,
            need: MIN_TAIL_POINTS,
        });
    }
    let mut sorted = abs_returns.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a)); // descending
    let x_min = sorted[k - 1];
    if x_min <= 0.0 {
        return Err(StatsError::NonPositiveTail);
    }
    let sum: f64 = sorted[..k].iter().map(|x| (x / x_min).ln()).sum();
    if sum <= 0.0 {
        return Err(StatsError::DegenerateTail);
    }
    Ok(1.0 + k as f64 / sum)
}

/// Realized / per-trade / range volatility of one price series.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VolatilityTriple {
    /// `√(Σ r²)` over the series' log-returns.
    pub realized: f64,
    /// Realized volatility normalized by trade count: `√(Σ r² / max(trades, 1))`.
    pub per_trade: f64,
    /// `(max − min) / first`.
    pub range: f64,
}

pub fn volatilities(prices: &[f64], trade_count: u64) -> Result<VolatilityTriple, StatsError> {
    let returns = log_returns(prices)?;
    let ss: f64 = returns.iter().map(|r| r * r).sum();
    let realized = ss.sqrt();
    let per_trade = (ss / trade_count.max(1) as f64).sqrt();
    let max = prices.iter().cloned().fold(f64::MIN, f64::max);
    let min = prices.iter().cloned().fold(f64::MAX, f64::min);
    Ok(VolatilityTriple { realized, per_trade, range: (max - min) / prices[0] })
}

/// χ² goodness-of-fit for binned counts.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GofResult {
    pub statistic: f64,
    pub df: f64,
    pub p_value: f64,
}

/// Pearson χ² test of observed bin counts against expected bin probabilities
/// (df = bins − 1).
pub fn chi_square_gof(observed: &[u64], expected_probs: &[f64]) -> Result<GofResult, StatsError> {
    if observed.len() != expected_probs.len() {
        return Err(StatsError::BinMismatch {
            observed: observed.len(),
            expected: expected_probs.len(),
        });
    }
    if observed.len() < 2 {
        return Err(StatsError::TooFewObservations { need: 2, got: observed.len() });
    }
    let psum: f64 = expected_probs.iter().sum();
    if expected_probs.iter().any(|p| !(*p > 0.0)) || (psum - 1.0).abs() > 1e-8 {
        return Err(StatsError::InvalidExpected);
    }
    let total: u64 = observed.iter().sum();
    if total == 0 {
        return Err(StatsError::TooFewObservations { need: 1, got: 0 });
    }
    let mut statistic = 0.0;
    for (o, p) in observed.iter().zip(expected_probs) {
        let e = p * total as f64;
        statistic += (*o as f64 - e).powi(2) / e;
    }
    let df = (observed.len() - 1) as f64;
    let dist = ChiSquared::new(df).expect("df > 0");
    Ok(GofResult { statistic, df, p_value: (1.0 - dist.cdf(statistic)).clamp(0.0, 1.0) })
}

/// χ² quantile (inverse CDF), e.g. the 0.99 critical value for a test at 1%.
pub fn chi_square_quantile(df: f64, prob: f64) -> Result<f64, StatsError> {
    if !(prob > 0.0 && prob < 1.0) {
        return Err(StatsError::InvalidAlpha);
    }
    let dist = ChiSquared::new(df).map_err(|_| StatsError::InvalidAlpha)?;
    Ok(dist.inverse_cdf(prob))
}
