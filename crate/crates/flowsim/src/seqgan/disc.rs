//! Convolutional sequence discriminator.
//!
//! Embedded token sequences pass through parallel 1-D convolution banks of
//! different widths, ReLU, max-over-time pooling, and an affine map to one
//! logit. Pooling argmaxes take the first maximum, so forward and backward
//! passes are deterministic.

use ndarray::{Array1, Array2, Array3};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::SeqGanError;
use crate::tokenize::TokenId;

/// One convolution bank: `filters × width × d_emb` weights.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvBank {
    pub weight: Array3<f64>,
    pub bias: Array1<f64>,
}

impl ConvBank {
    pub fn filters(&self) -> usize {
        self.weight.shape()[0]
    }

    pub fn width(&self) -> usize {
        self.weight.shape()[1]
    }
}

/// Discriminator parameters (and, shape-for-shape, gradients).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscriminatorParams {
    /// Token embeddings, `vocab × d_emb`.
    pub embed: Array2<f64>,
    pub banks: Vec<ConvBank>,
    /// Affine output over the concatenated pooled features.
    pub w_out: Array1<f64>,
    pub b_out: f64,
}

impl DiscriminatorParams {
    pub fn init<R: Rng>(
        vocab_size: usize,
        d_emb: usize,
        widths: &[usize],
        filters_per_width: usize,
        rng: &mut R,
    ) -> Self {
        fn uniform<R: Rng>(rng: &mut R) -> f64 {
            rng.random::<f64>() * 0.16 - 0.08
        }
        let embed = Array2::from_shape_fn((vocab_size, d_emb), |_| uniform(rng));
        let mut banks = Vec::with_capacity(widths.len());
        for &w in widths {
            banks.push(ConvBank {
                weight: Array3::from_shape_fn((filters_per_width, w, d_emb), |_| uniform(rng)),
                bias: Array1::zeros(filters_per_width),
            });
        }
        let w_out = Array1::from_shape_fn(widths.len() * filters_per_width, |_| uniform(rng));
        DiscriminatorParams { embed, banks, w_out, b_out: 0.0 }
    }

    pub fn vocab_size(&self) -> usize {
        self.embed.nrows()
    }

    pub fn max_width(&self) -> usize {
        self.banks.iter().map(ConvBank::width).max().unwrap_or(1)
    }

    pub fn zeros_like(&self) -> Self {
        DiscriminatorParams {
            embed: Array2::zeros(self.embed.raw_dim()),
            banks: self
                .banks
                .iter()
                .map(|b| ConvBank {
                    weight: Array3::zeros(b.weight.raw_dim()),
                    bias: Array1::zeros(b.bias.raw_dim()),
                })
                .collect(),
            w_out: Array1::zeros(self.w_out.raw_dim()),
            b_out: 0.0,
        }
    }

    pub fn param_slices_mut(&mut self) -> Vec<&mut [f64]> {
        let mut out: Vec<&mut [f64]> = vec![self.embed.as_slice_mut().expect("contiguous")];
        for bank in &mut self.banks {
            out.push(bank.weight.as_slice_mut().expect("contiguous"));
            out.push(bank.bias.as_slice_mut().expect("contiguous"));
        }
        out.push(self.w_out.as_slice_mut().expect("contiguous"));
        out.push(std::slice::from_mut(&mut self.b_out));
        out
    }

    pub fn param_slices(&self) -> Vec<&[f64]> {
        let mut out: Vec<&[f64]> = vec![self.embed.as_slice().expect("contiguous")];
        for bank in &self.banks {
            out.push(bank.weight.as_slice().expect("contiguous"));
            out.push(bank.bias.as_slice().expect("contiguous"));
        }
        out.push(self.w_out.as_slice().expect("contiguous"));
        out.push(std::slice::from_ref(&self.b_out));
        out
    }

    pub fn is_finite(&self) -> bool {
        self.param_slices().iter().all(|s| s.iter().all(|v| v.is_finite()))
    }

    pub fn add_scaled(&mut self, other: &DiscriminatorParams, k: f64) {
        self.embed.scaled_add(k, &other.embed);
        for (a, b) in self.banks.iter_mut().zip(&other.banks) {
            a.weight.scaled_add(k, &b.weight);
            a.bias.scaled_add(k, &b.bias);
        }
        self.w_out.scaled_add(k, &other.w_out);
        self.b_out += k * other.b_out;
    }
}

/// Forward-pass cache for one sequence.
pub struct DiscCache {
    tokens: Vec<TokenId>,
    /// Embedded sequence, `len × d_emb`.
    x: Array2<f64>,
    /// Per bank: pooled feature values and the argmax position of each filter
    /// (`None` when every ReLU output was zero).
    pooled: Vec<Array1<f64>>,
    argmax: Vec<Vec<Option<usize>>>,
    /// Concatenated pooled features.
    z: Array1<f64>,
    pub logit: f64,
    pub score: f64,
}

fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

/// Scores one token sequence; returns `(σ(logit), cache)`.
pub fn disc_forward(
    p: &DiscriminatorParams,
    tokens: &[TokenId],
) -> Result<(f64, DiscCache), SeqGanError> {
    if tokens.len() < p.max_width() {
        return Err(SeqGanError::SequenceTooShort { len: tokens.len(), min: p.max_width() });
    }
    for &t in tokens {
        if t >= p.vocab_size() {
            return Err(SeqGanError::TokenOutOfRange { id: t, size: p.vocab_size() });
        }
    }
    let len = tokens.len();
    let d = p.embed.ncols();
    let mut x = Array2::zeros((len, d));
    for (row, &tok) in tokens.iter().enumerate() {
        x.row_mut(row).assign(&p.embed.row(tok));
    }

    let mut pooled = Vec::with_capacity(p.banks.len());
    let mut argmax = Vec::with_capacity(p.banks.len());
    for bank in &p.banks {
        let (width, filters) = (bank.width(), bank.filters());
        let positions = len - width + 1;
        let mut bank_pooled = Array1::zeros(filters);
        let mut bank_arg = vec![None; filters];
        for f in 0..filters {
            let mut best = 0.0_f64; // ReLU floor: zero activation pools to 0
            let mut best_pos = None;
            for pos in 0..positions {
                let mut pre = bank.bias[f];
                for j in 0..width {
                    for k in 0..d {
                        pre += bank.weight[[f, j, k]] * x[[pos + j, k]];
                    }
                }
                if pre > best {
                    best = pre;
                    best_pos = Some(pos);
                }
            }
            bank_pooled[f] = best;
            bank_arg[f] = best_pos;
        }
        pooled.push(bank_pooled);
        argmax.push(bank_arg);
    }

    let z = Array1::from_iter(pooled.iter().flat_map(|b| b.iter().copied()));
    let logit = p.w_out.dot(&z) + p.b_out;
    let score = sigmoid(logit);
    Ok((
        score,
        DiscCache { tokens: tokens.to_vec(), x, pooled, argmax, z, logit, score },
    ))
}

/// Backpropagates `d loss / d logit` through a cached forward pass.
pub fn disc_backward(
    p: &DiscriminatorParams,
    cache: &DiscCache,
    dlogit: f64,
) -> DiscriminatorParams {
    let mut grads = p.zeros_like();
    grads.b_out = dlogit;
    for (k, &zv) in cache.z.iter().enumerate() {
        grads.w_out[k] = dlogit * zv;
    }

    let d = p.embed.ncols();
    let mut dx = Array2::<f64>::zeros(cache.x.raw_dim());
    let mut offset = 0;
    for (bank_idx, bank) in p.banks.iter().enumerate() {
        let (width, filters) = (bank.width(), bank.filters());
        for f in 0..filters {
            let dz = dlogit * p.w_out[offset + f];
            // gradient flows only through the argmax position, and only when
            // the pooled value cleared the ReLU floor
            let Some(pos) = cache.argmax[bank_idx][f] else { continue };
            if cache.pooled[bank_idx][f] <= 0.0 {
                continue;
            }
            grads.banks[bank_idx].bias[f] += dz;
            for j in 0..width {
                for k in 0..d {
                    grads.banks[bank_idx].weight[[f, j, k]] += dz * cache.x[[pos + j, k]];
                    dx[[pos + j, k]] += dz * bank.weight[[f, j, k]];
                }
            }
        }
        offset += filters;
    }
    for (row, &tok) in cache.tokens.iter().enumerate() {
        let mut er = grads.embed.row_mut(tok);
        for k in 0..d {
            er[k] += dx[[row, k]];
        }
    }
    grads
}

/// Binary cross-entropy on a logit: returns `(loss, dloss/dlogit)` for a
/// label in {0, 1}. Stable for large |logit|.
pub fn bce_with_logit(logit: f64, label: f64) -> (f64, f64) {
    let loss = logit.max(0.0) - logit * label + (1.0 + (-logit.abs()).exp()).ln();
    (loss, sigmoid(logit) - label)
}
