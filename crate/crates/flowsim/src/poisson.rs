//! Independent-Poisson benchmark flow model.
//!
//! Each token gets its own homogeneous Poisson process: the MLE rate is
//! `count / duration`, and sampling draws exponential inter-arrival gaps per
//! token, merges the streams, and orders them by time with token id as the
//! tie-break.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tokenize::{TokenId, Vocabulary};

#[derive(Debug, Error)]
pub enum PoissonError {
    #[error("duration must be positive and finite, got {0}")]
    BadDuration(f64),
    #[error("horizon must be positive and finite, got {0}")]
    BadHorizon(f64),
    #[error("token id {id} out of range for alphabet of size {size}")]
    TokenOutOfRange { id: TokenId, size: usize },
    #[error("rate file mismatch: {0}")]
    BadRateFile(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("invalid rate file JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// Fitted per-token arrival rates (events per second).
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonRates {
    vocab: Vocabulary,
    rates: Vec<f64>,
    fitted_duration: f64,
}

/// On-disk representation: token names to rates, ordered keys.
#[derive(Serialize, Deserialize)]
struct RatesFile {
    q_max: i64,
    fitted_duration: f64,
    rates: BTreeMap<String, f64>,
}

impl PoissonRates {
    /// Maximum-likelihood fit: `λ_k = count_k / duration`. Tokens that never
    /// occur get rate zero.
    pub fn fit(
        tokens: &[TokenId],
        duration: f64,
        vocab: &Vocabulary,
    ) -> Result<Self, PoissonError> {
        if !(duration > 0.0 && duration.is_finite()) {
            return Err(PoissonError::BadDuration(duration));
        }
        let mut counts = vec![0u64; vocab.size()];
        for &t in tokens {
            if t >= vocab.size() {
                return Err(PoissonError::TokenOutOfRange { id: t, size: vocab.size() });
            }
            counts[t] += 1;
        }
        let rates = counts.iter().map(|&c| c as f64 / duration).collect();
        Ok(Self { vocab: *vocab, rates, fitted_duration: duration })
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn rate(&self, token: TokenId) -> f64 {
        self.rates[token]
    }

    pub fn rates(&self) -> &[f64] {
        &self.rates
    }

    /// Total arrival rate over the whole alphabet.
    pub fn total_rate(&self) -> f64 {
        self.rates.iter().sum()
    }

    /// Samples a merged flow over `[0, horizon)`: exponential gaps per token,
    /// merged and sorted by `(time, token id)`. Tokens draw their gaps in id
    /// order, so the stream is a pure function of the RNG state.
    pub fn sample_flow<R: Rng>(
        &self,
        horizon: f64,
        rng: &mut R,
    ) -> Result<Vec<(f64, TokenId)>, PoissonError> {
        if !(horizon > 0.0 && horizon.is_finite()) {
            return Err(PoissonError::BadHorizon(horizon));
        }
        let mut flow: Vec<(f64, TokenId)> = Vec::new();
        for (token, &rate) in self.rates.iter().enumerate() {
            if rate <= 0.0 {
                continue;
            }
            let mut t = 0.0;
            loop {
                let mut gap = 0.0;
                while gap <= 0.0 {
                    let u: f64 = rng.random();
                    gap = -(1.0 - u).ln() / rate;
                }
                t += gap;
                if t >= horizon {
                    break;
                }
                flow.push((t, token));
            }
        }
        flow.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        Ok(flow)
    }

    /// Writes the rates as JSON keyed by token name.
    pub fn save(&self, path: &Path) -> Result<(), PoissonError> {
        let mut rates = BTreeMap::new();
        for (id, &rate) in self.rates.iter().enumerate() {
            rates.insert(self.vocab.token_name(id).expect("id in range"), rate);
        }
        let file = RatesFile {
            q_max: self.vocab.q_max(),
            fitted_duration: self.fitted_duration,
            rates,
        };
        fs::write(path, serde_json::to_string_pretty(&file)?)?;
        Ok(())
    }

    /// Reads rates saved by [`save`](Self::save). Every token of the alphabet
    /// must be present exactly once.
    pub fn load(path: &Path) -> Result<Self, PoissonError> {
        let file: RatesFile = serde_json::from_str(&fs::read_to_string(path)?)?;
        Self::from_rates_file(file)
    }

    fn from_rates_file(file: RatesFile) -> Result<Self, PoissonError> {
        let vocab = Vocabulary::new(file.q_max)
            .map_err(|e| PoissonError::BadRateFile(e.to_string()))?;
        if !(file.fitted_duration > 0.0 && file.fitted_duration.is_finite()) {
            return Err(PoissonError::BadDuration(file.fitted_duration));
        }
        let mut rates = vec![f64::NAN; vocab.size()];
        for (name, rate) in &file.rates {
            let id = vocab
                .parse_name(name)
                .map_err(|_| PoissonError::BadRateFile(format!("unknown token `{name}`")))?;
            if !rates[id].is_nan() {
                return Err(PoissonError::BadRateFile(format!("duplicate token `{name}`")));
            }
            if !(rate.is_finite() && *rate >= 0.0) {
                return Err(PoissonError::BadRateFile(format!("invalid rate for `{name}`")));
            }
            rates[id] = *rate;
        }
        if let Some(missing) = rates.iter().position(|r| r.is_nan()) {
            return Err(PoissonError::BadRateFile(format!(
                "missing token `{}`",
                vocab.token_name(missing).expect("id in range")
            )));
        }
        Ok(Self { vocab, rates, fitted_duration: file.fitted_duration })
    }
}
