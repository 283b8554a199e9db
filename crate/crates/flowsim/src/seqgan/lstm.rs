//! LSTM token generator: forward steps, sampling, and backpropagation
//! through time over a recorded tape.
//!
//! Gate layout in the stacked pre-activation vector is `[input, forget,
//! cell, output]`, each block of size `hidden`. The output distribution after
//! consuming a token comes from the *updated* hidden state, so conditioning
//! on a start window already yields the distribution of the first generated
//! token.

use ndarray::{s, Array1, Array2};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::SeqGanError;
use crate::tokenize::TokenId;

/// Generator parameters (and, shape-for-shape, generator gradients).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorParams {
    /// Token embeddings, `vocab × d_emb`.
    pub embed: Array2<f64>,
    /// Input weights, `4·hidden × d_emb`.
    pub w_x: Array2<f64>,
    /// Recurrent weights, `4·hidden × hidden`.
    pub w_h: Array2<f64>,
    /// Gate biases, `4·hidden`.
    pub b: Array1<f64>,
    /// Output projection, `vocab × hidden`.
    pub w_out: Array2<f64>,
    /// Output bias, `vocab`.
    pub b_out: Array1<f64>,
}

impl GeneratorParams {
    /// Uniform ±0.08 init (forget-gate bias raised to 1 so early gradients
    /// flow through time).
    pub fn init<R: Rng>(vocab_size: usize, d_emb: usize, hidden: usize, rng: &mut R) -> Self {
        let mut u = |rows: usize, cols: usize| {
            Array2::from_shape_fn((rows, cols), |_| rng.random::<f64>() * 0.16 - 0.08)
        };
        let embed = u(vocab_size, d_emb);
        let w_x = u(4 * hidden, d_emb);
        let w_h = u(4 * hidden, hidden);
        let w_out = u(vocab_size, hidden);
        let mut b = Array1::zeros(4 * hidden);
        b.slice_mut(s![hidden..2 * hidden]).fill(1.0);
        GeneratorParams { embed, w_x, w_h, b, w_out, b_out: Array1::zeros(vocab_size) }
    }

    pub fn vocab_size(&self) -> usize {
        self.embed.nrows()
    }

    pub fn hidden(&self) -> usize {
        self.w_h.ncols()
    }

    pub fn zeros_like(&self) -> Self {
        GeneratorParams {
            embed: Array2::zeros(self.embed.raw_dim()),
            w_x: Array2::zeros(self.w_x.raw_dim()),
            w_h: Array2::zeros(self.w_h.raw_dim()),
            b: Array1::zeros(self.b.raw_dim()),
            w_out: Array2::zeros(self.w_out.raw_dim()),
            b_out: Array1::zeros(self.b_out.raw_dim()),
        }
    }

    /// Flat views over every tensor, in a fixed order (for the optimizer).
    pub fn param_slices_mut(&mut self) -> Vec<&mut [f64]> {
        vec![
            self.embed.as_slice_mut().expect("contiguous"),
            self.w_x.as_slice_mut().expect("contiguous"),
            self.w_h.as_slice_mut().expect("contiguous"),
            self.b.as_slice_mut().expect("contiguous"),
            self.w_out.as_slice_mut().expect("contiguous"),
            self.b_out.as_slice_mut().expect("contiguous"),
        ]
    }

    pub fn param_slices(&self) -> Vec<&[f64]> {
        vec![
            self.embed.as_slice().expect("contiguous"),
            self.w_x.as_slice().expect("contiguous"),
            self.w_h.as_slice().expect("contiguous"),
            self.b.as_slice().expect("contiguous"),
            self.w_out.as_slice().expect("contiguous"),
            self.b_out.as_slice().expect("contiguous"),
        ]
    }

    pub fn is_finite(&self) -> bool {
        self.param_slices().iter().all(|s| s.iter().all(|v| v.is_finite()))
    }

    /// Adds `other` scaled by `k` (gradient accumulation).
    pub fn add_scaled(&mut self, other: &GeneratorParams, k: f64) {
        self.embed.scaled_add(k, &other.embed);
        self.w_x.scaled_add(k, &other.w_x);
        self.w_h.scaled_add(k, &other.w_h);
        self.b.scaled_add(k, &other.b);
        self.w_out.scaled_add(k, &other.w_out);
        self.b_out.scaled_add(k, &other.b_out);
    }

    fn check_token(&self, token: TokenId) -> Result<(), SeqGanError> {
        if token >= self.vocab_size() {
            return Err(SeqGanError::TokenOutOfRange { id: token, size: self.vocab_size() });
        }
        Ok(())
    }
}

/// Recurrent state (hidden and cell vectors).
#[derive(Clone, Debug, PartialEq)]
pub struct HiddenState {
    pub h: Array1<f64>,
    pub c: Array1<f64>,
}

impl HiddenState {
    pub fn zeros(hidden: usize) -> Self {
        HiddenState { h: Array1::zeros(hidden), c: Array1::zeros(hidden) }
    }
}

fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

/// Numerically stable softmax.
fn softmax(logits: &Array1<f64>) -> Array1<f64> {
    let max = logits.fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    let mut out = logits.mapv(|v| (v - max).exp());
    let sum = out.sum();
    out /= sum;
    out
}

/// Everything one forward step needs to be replayed backwards.
struct StepCache {
    token: TokenId,
    h_prev: Array1<f64>,
    c_prev: Array1<f64>,
    /// Post-activation gates `[i, f, g, o]`, length `4·hidden`.
    gates: Array1<f64>,
    tanh_c: Array1<f64>,
    h: Array1<f64>,
    probs: Array1<f64>,
}

/// Cache for backprop plus the new cell state for stepping onwards.
struct FullStepCache {
    cache: StepCache,
    c_new: Array1<f64>,
}

fn step_full(p: &GeneratorParams, state: &HiddenState, token: TokenId) -> FullStepCache {
    let hidden = p.hidden();
    let x = p.embed.row(token);
    let mut gates = p.w_x.dot(&x) + p.w_h.dot(&state.h) + &p.b;
    let mut c_new = Array1::zeros(hidden);
    for j in 0..hidden {
        let i_g = sigmoid(gates[j]);
        let f_g = sigmoid(gates[hidden + j]);
        let g_g = gates[2 * hidden + j].tanh();
        let o_g = sigmoid(gates[3 * hidden + j]);
        c_new[j] = f_g * state.c[j] + i_g * g_g;
        gates[j] = i_g;
        gates[hidden + j] = f_g;
        gates[2 * hidden + j] = g_g;
        gates[3 * hidden + j] = o_g;
    }
    let tanh_c = c_new.mapv(f64::tanh);
    let o = gates.slice(s![3 * hidden..]);
    let h = &tanh_c * &o;
    let logits = p.w_out.dot(&h) + &p.b_out;
    FullStepCache {
        cache: StepCache {
            token,
            h_prev: state.h.clone(),
            c_prev: state.c.clone(),
            gates,
            tanh_c,
            h,
            probs: softmax(&logits),
        },
        c_new,
    }
}

/// One generator step: consume `token`, return the updated state and the
/// distribution over the next token (sums to 1 up to rounding).
pub fn gen_step(
    p: &GeneratorParams,
    state: &HiddenState,
    token: TokenId,
) -> Result<(HiddenState, Array1<f64>), SeqGanError> {
    p.check_token(token)?;
    let full = step_full(p, state, token);
    Ok((HiddenState { h: full.cache.h, c: full.c_new }, full.cache.probs))
}

/// Folds the generator over a start window from the zero state. Returns the
/// conditioned state and the distribution of the first generated token.
pub fn condition_on_start(
    p: &GeneratorParams,
    start: &[TokenId],
) -> Result<(HiddenState, Array1<f64>), SeqGanError> {
    if start.is_empty() {
        return Err(SeqGanError::EmptyStart);
    }
    let mut state = HiddenState::zeros(p.hidden());
    let mut probs = Array1::zeros(p.vocab_size());
    for &tok in start {
        let (next, pr) = gen_step(p, &state, tok)?;
        state = next;
        probs = pr;
    }
    Ok((state, probs))
}

/// Draws an index from a probability vector by inverse CDF.
pub fn sample_categorical<R: Rng>(probs: &Array1<f64>, rng: &mut R) -> usize {
    let u: f64 = rng.random();
    let mut cum = 0.0;
    for (idx, &p) in probs.iter().enumerate() {
        cum += p;
        if u < cum {
            return idx;
        }
    }
    probs.len() - 1
}

/// Samples `len` tokens conditioned on `start`.
pub fn generate<R: Rng>(
    p: &GeneratorParams,
    start: &[TokenId],
    len: usize,
    rng: &mut R,
) -> Result<Vec<TokenId>, SeqGanError> {
    Ok(generate_with_states(p, start, len, rng)?.tokens)
}

/// A generated sequence plus the per-step states and next-token
/// distributions needed to roll out continuations from any prefix:
/// `states[k]` / `probs[k]` follow the k-th generated token (`k = 0` is the
/// conditioned state), so a rollout from prefix length `t` resumes at
/// `states[t]` sampling from `probs[t]`.
pub struct Generated {
    pub tokens: Vec<TokenId>,
    pub states: Vec<HiddenState>,
    pub probs: Vec<Array1<f64>>,
}

pub fn generate_with_states<R: Rng>(
    p: &GeneratorParams,
    start: &[TokenId],
    len: usize,
    rng: &mut R,
) -> Result<Generated, SeqGanError> {
    let (state, probs) = condition_on_start(p, start)?;
    let mut out = Generated {
        tokens: Vec::with_capacity(len),
        states: vec![state],
        probs: vec![probs],
    };
    for _ in 0..len {
        let token = sample_categorical(out.probs.last().expect("non-empty"), rng);
        out.tokens.push(token);
        let (next, pr) = gen_step(p, out.states.last().expect("non-empty"), token)?;
        out.states.push(next);
        out.probs.push(pr);
    }
    Ok(out)
}

/// Loss attachment for [`forward_tape`]: after consuming the token at
/// `position`, charge `-weight · ln p(target)`.
#[derive(Clone, Copy, Debug)]
pub struct LossSpec {
    pub position: usize,
    pub target: TokenId,
    pub weight: f64,
}

/// Tape of cached steps for backpropagation through time.
pub struct GenTape {
    steps: Vec<StepCache>,
    losses: Vec<LossSpec>,
}

/// Runs the generator over `inputs` from the zero state, recording the tape
/// and accumulating the weighted negative log-likelihood from `losses`.
pub fn forward_tape(
    p: &GeneratorParams,
    inputs: &[TokenId],
    losses: &[LossSpec],
) -> Result<(f64, GenTape), SeqGanError> {
    if inputs.is_empty() {
        return Err(SeqGanError::EmptyStart);
    }
    for spec in losses {
        if spec.position >= inputs.len() {
            return Err(SeqGanError::LengthMismatch {
                expected: inputs.len(),
                got: spec.position + 1,
            });
        }
        p.check_token(spec.target)?;
    }
    let mut state = HiddenState::zeros(p.hidden());
    let mut steps = Vec::with_capacity(inputs.len());
    for &tok in inputs {
        p.check_token(tok)?;
        let full = step_full(p, &state, tok);
        state = HiddenState { h: full.cache.h.clone(), c: full.c_new };
        steps.push(full.cache);
    }
    let mut loss = 0.0;
    for spec in losses {
        let prob = steps[spec.position].probs[spec.target].max(1e-300);
        loss -= spec.weight * prob.ln();
    }
    Ok((loss, GenTape { steps, losses: losses.to_vec() }))
}

/// Backpropagates the tape's loss, returning gradients with the same shapes
/// as the parameters. Loss weights are treated as constants.
pub fn backward_tape(p: &GeneratorParams, tape: &GenTape) -> GeneratorParams {
    let hidden = p.hidden();
    let mut grads = p.zeros_like();
    let mut loss_at: Vec<Vec<(TokenId, f64)>> = vec![Vec::new(); tape.steps.len()];
    for spec in &tape.losses {
        loss_at[spec.position].push((spec.target, spec.weight));
    }

    let mut dh_next = Array1::<f64>::zeros(hidden);
    let mut dc_next = Array1::<f64>::zeros(hidden);
    for (idx, step) in tape.steps.iter().enumerate().rev() {
        let mut dh = dh_next.clone();
        // output-layer gradient at loss positions
        for &(target, weight) in &loss_at[idx] {
            let mut dlogits = step.probs.clone() * weight;
            dlogits[target] -= weight;
            for (r, &dl) in dlogits.iter().enumerate() {
                if dl != 0.0 {
                    grads.b_out[r] += dl;
                    for (cidx, &hv) in step.h.iter().enumerate() {
                        grads.w_out[[r, cidx]] += dl * hv;
                    }
                    for cidx in 0..hidden {
                        dh[cidx] += p.w_out[[r, cidx]] * dl;
                    }
                }
            }
        }

        let i_g = step.gates.slice(s![0..hidden]);
        let f_g = step.gates.slice(s![hidden..2 * hidden]);
        let g_g = step.gates.slice(s![2 * hidden..3 * hidden]);
        let o_g = step.gates.slice(s![3 * hidden..]);

        let mut da = Array1::<f64>::zeros(4 * hidden);
        let mut dc_prev = Array1::<f64>::zeros(hidden);
        for j in 0..hidden {
            let dc = dc_next[j] + dh[j] * o_g[j] * (1.0 - step.tanh_c[j] * step.tanh_c[j]);
            let d_o = dh[j] * step.tanh_c[j];
            let d_i = dc * g_g[j];
            let d_f = dc * step.c_prev[j];
            let d_g = dc * i_g[j];
            da[j] = d_i * i_g[j] * (1.0 - i_g[j]);
            da[hidden + j] = d_f * f_g[j] * (1.0 - f_g[j]);
            da[2 * hidden + j] = d_g * (1.0 - g_g[j] * g_g[j]);
            da[3 * hidden + j] = d_o * o_g[j] * (1.0 - o_g[j]);
            dc_prev[j] = dc * f_g[j];
        }

        let x = p.embed.row(step.token);
        for (r, &dav) in da.iter().enumerate() {
            if dav != 0.0 {
                grads.b[r] += dav;
                for (cidx, &xv) in x.iter().enumerate() {
                    grads.w_x[[r, cidx]] += dav * xv;
                }
                for (cidx, &hv) in step.h_prev.iter().enumerate() {
                    grads.w_h[[r, cidx]] += dav * hv;
                }
            }
        }
        // d embed row and d h_prev
        let dx = p.w_x.t().dot(&da);
        let mut embed_row = grads.embed.row_mut(step.token);
        embed_row += &dx;
        dh_next = p.w_h.t().dot(&da);
        dc_next = dc_prev;
    }
    grads
}
