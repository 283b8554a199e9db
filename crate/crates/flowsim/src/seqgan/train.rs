//! Training procedures for the generator/discriminator pair.
//!
//! The generator is first fit by maximum likelihood on real windows, the
//! discriminator on real-vs-generated windows, and the adversarial loop then
//! alternates policy-gradient generator updates (action values from
//! discriminator-scored Monte-Carlo rollouts) with discriminator refreshes on
//! balanced batches.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::adam::Adam;
use super::disc::{bce_with_logit, disc_backward, disc_forward, DiscriminatorParams};
use super::lstm::{
    backward_tape, forward_tape, generate, generate_with_states, gen_step, sample_categorical,
    GeneratorParams, HiddenState, LossSpec,
};
use super::SeqGanError;
use crate::ingest::TrainingPair;
use crate::tokenize::TokenId;
use ndarray::Array1;

/// Network sizes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelConfig {
    pub d_emb: usize,
    pub hidden: usize,
    pub filter_widths: Vec<usize>,
    pub filters_per_width: usize,
}

impl Default for ModelConfig {
    fn default() -> Self {
        ModelConfig { d_emb: 32, hidden: 64, filter_widths: vec![2, 3, 5], filters_per_width: 32 }
    }
}

/// Training-loop knobs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    /// Window length T: generated sequences and real halves share it.
    pub seq_len: usize,
    /// Monte-Carlo rollouts per non-terminal action value.
    pub n_rollouts: usize,
    /// Adversarial rounds.
    pub rounds: usize,
    /// Generator policy-gradient steps per round.
    pub g_steps: usize,
    /// Discriminator refreshes per round.
    pub d_steps: usize,
    /// Epochs per discriminator refresh.
    pub d_epochs: usize,
    /// Generator maximum-likelihood pretraining epochs.
    pub mle_epochs: usize,
    pub batch_size: usize,
    pub lr_gen: f64,
    pub lr_disc: f64,
    /// Global gradient-norm clip (0 disables).
    pub clip_norm: f64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            seq_len: 200,
            n_rollouts: 8,
            rounds: 20,
            g_steps: 1,
            d_steps: 1,
            d_epochs: 3,
            mle_epochs: 10,
            batch_size: 32,
            lr_gen: 5e-3,
            lr_disc: 2e-3,
            clip_norm: 5.0,
        }
    }
}

impl TrainConfig {
    fn validate(&self) -> Result<(), SeqGanError> {
        let positive = [
            ("seq_len", self.seq_len),
            ("n_rollouts", self.n_rollouts),
            ("batch_size", self.batch_size),
        ];
        for (name, v) in positive {
            if v == 0 {
                return Err(SeqGanError::BadConfig(format!("{name} must be positive")));
            }
        }
        if !(self.lr_gen > 0.0 && self.lr_disc > 0.0) {
            return Err(SeqGanError::BadConfig("learning rates must be positive".into()));
        }
        Ok(())
    }
}

fn check_pairs(
    pairs: &[TrainingPair],
    seq_len: usize,
    vocab_size: usize,
) -> Result<(), SeqGanError> {
    if pairs.is_empty() {
        return Err(SeqGanError::EmptyCorpus);
    }
    for pair in pairs {
        for half in [&pair.start, &pair.real] {
            if half.len() != seq_len {
                return Err(SeqGanError::LengthMismatch { expected: seq_len, got: half.len() });
            }
            for &t in half {
                if t >= vocab_size {
                    return Err(SeqGanError::TokenOutOfRange { id: t, size: vocab_size });
                }
            }
        }
    }
    Ok(())
}

/// Teacher-forced inputs and per-step NLL losses for one window: consume the
/// start then the real half shifted by one, predicting each real token.
fn mle_spec(start: &[TokenId], real: &[TokenId]) -> (Vec<TokenId>, Vec<LossSpec>) {
    let mut inputs = Vec::with_capacity(start.len() + real.len() - 1);
    inputs.extend_from_slice(start);
    inputs.extend_from_slice(&real[..real.len() - 1]);
    let losses = (0..real.len())
        .map(|i| LossSpec { position: start.len() - 1 + i, target: real[i], weight: 1.0 })
        .collect();
    (inputs, losses)
}

/// Same wiring with per-step action-value weights (policy gradient).
fn pg_spec(start: &[TokenId], seq: &[TokenId], q: &[f64]) -> (Vec<TokenId>, Vec<LossSpec>) {
    debug_assert_eq!(seq.len(), q.len());
    let mut inputs = Vec::with_capacity(start.len() + seq.len() - 1);
    inputs.extend_from_slice(start);
    inputs.extend_from_slice(&seq[..seq.len() - 1]);
    let losses = (0..seq.len())
        .map(|i| LossSpec { position: start.len() - 1 + i, target: seq[i], weight: q[i] })
        .collect();
    (inputs, losses)
}

/// Mean per-sequence negative log-likelihood of the real halves given their
/// starts (sum over the window's steps, averaged over windows).
pub fn mle_nll(gen: &GeneratorParams, pairs: &[TrainingPair]) -> Result<f64, SeqGanError> {
    if pairs.is_empty() {
        return Err(SeqGanError::EmptyCorpus);
    }
    let mut total = 0.0;
    for pair in pairs {
        let (inputs, losses) = mle_spec(&pair.start, &pair.real);
        let (loss, _) = forward_tape(gen, &inputs, &losses)?;
        total += loss;
    }
    Ok(total / pairs.len() as f64)
}

/// Splits pair indices into train/held-out (every tenth window is held out;
/// tiny corpora fall back to evaluating on everything).
fn holdout_split(n: usize) -> (Vec<usize>, Vec<usize>) {
    let held: Vec<usize> = (0..n).filter(|i| i % 10 == 9).collect();
    let train: Vec<usize> = (0..n).filter(|i| i % 10 != 9).collect();
    if held.is_empty() || train.is_empty() {
        ((0..n).collect(), (0..n).collect())
    } else {
        (train, held)
    }
}

/// Maximum-likelihood pretraining. Returns the held-out mean NLL after each
/// epoch.
pub fn pretrain_generator_mle<R: Rng>(
    gen: &mut GeneratorParams,
    opt: &mut Adam,
    pairs: &[TrainingPair],
    cfg: &TrainConfig,
    rng: &mut R,
) -> Result<Vec<f64>, SeqGanError> {
    cfg.validate()?;
    check_pairs(pairs, cfg.seq_len, gen.vocab_size())?;
    let (train_idx, held_idx) = holdout_split(pairs.len());
    let held: Vec<TrainingPair> = held_idx.iter().map(|&i| pairs[i].clone()).collect();

    let mut history = Vec::with_capacity(cfg.mle_epochs);
    let mut order = train_idx;
    for _epoch in 0..cfg.mle_epochs {
        order.shuffle(rng);
        for chunk in order.chunks(cfg.batch_size) {
            let mut grads = gen.zeros_like();
            for &i in chunk {
                let (inputs, losses) = mle_spec(&pairs[i].start, &pairs[i].real);
                let (_, tape) = forward_tape(gen, &inputs, &losses)?;
                grads.add_scaled(&backward_tape(gen, &tape), 1.0);
            }
            let scale = 1.0 / (chunk.len() * cfg.seq_len) as f64;
            scale_params(&mut grads, scale);
            opt.step(&mut gen.param_slices_mut(), &grads.param_slices());
        }
        if !gen.is_finite() {
            return Err(SeqGanError::NumericFailure("generator parameters left ℝ".into()));
        }
        history.push(mle_nll(gen, &held)?);
    }
    Ok(history)
}

fn scale_params(p: &mut GeneratorParams, k: f64) {
    for s in p.param_slices_mut() {
        for v in s {
            *v *= k;
        }
    }
}

fn scale_disc(p: &mut DiscriminatorParams, k: f64) {
    for s in p.param_slices_mut() {
        for v in s {
            *v *= k;
        }
    }
}

/// Discriminator training metrics.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscMetrics {
    /// Mean BCE per epoch.
    pub loss_history: Vec<f64>,
    /// Accuracy over the balanced training set after the final epoch.
    pub accuracy: f64,
}

/// Trains the discriminator on balanced real/generated sequences for
/// `epochs`. Classes are truncated to the smaller side.
pub fn pretrain_discriminator<R: Rng>(
    disc: &mut DiscriminatorParams,
    opt: &mut Adam,
    real: &[Vec<TokenId>],
    generated: &[Vec<TokenId>],
    epochs: usize,
    batch_size: usize,
    rng: &mut R,
) -> Result<DiscMetrics, SeqGanError> {
    let n = real.len().min(generated.len());
    if n == 0 {
        return Err(SeqGanError::EmptyCorpus);
    }
    if batch_size == 0 {
        return Err(SeqGanError::BadConfig("batch_size must be positive".into()));
    }
    let mut examples: Vec<(&[TokenId], f64)> = Vec::with_capacity(2 * n);
    examples.extend(real[..n].iter().map(|s| (s.as_slice(), 1.0)));
    examples.extend(generated[..n].iter().map(|s| (s.as_slice(), 0.0)));

    let mut loss_history = Vec::with_capacity(epochs);
    for _ in 0..epochs {
        examples.shuffle(rng);
        let mut epoch_loss = 0.0;
        for chunk in examples.chunks(batch_size) {
            let mut grads = disc.zeros_like();
            let mut batch_loss = 0.0;
            for &(tokens, label) in chunk {
                let (_, cache) = disc_forward(disc, tokens)?;
                let (loss, dlogit) = bce_with_logit(cache.logit, label);
                batch_loss += loss;
                grads.add_scaled(&disc_backward(disc, &cache, dlogit), 1.0);
            }
            scale_disc(&mut grads, 1.0 / chunk.len() as f64);
            opt.step(&mut disc.param_slices_mut(), &grads.param_slices());
            epoch_loss += batch_loss;
        }
        if !disc.is_finite() {
            return Err(SeqGanError::NumericFailure("discriminator parameters left ℝ".into()));
        }
        loss_history.push(epoch_loss / examples.len() as f64);
    }

    let mut correct = 0usize;
    for &(tokens, label) in &examples {
        let (score, _) = disc_forward(disc, tokens)?;
        if (score >= 0.5) == (label >= 0.5) {
            correct += 1;
        }
    }
    Ok(DiscMetrics { loss_history, accuracy: correct as f64 / examples.len() as f64 })
}

/// Internal: action values for a generated sequence whose per-step states and
/// next-token distributions were cached during generation.
fn action_values_cached<R: Rng>(
    gen: &GeneratorParams,
    disc: &DiscriminatorParams,
    seq: &[TokenId],
    states: &[HiddenState],
    probs: &[Array1<f64>],
    n_rollouts: usize,
    rng: &mut R,
) -> Result<Vec<f64>, SeqGanError> {
    let t_len = seq.len();
    let mut q = vec![0.0; t_len];
    let mut rollout = Vec::with_capacity(t_len);
    for t in 1..t_len {
        let mut acc = 0.0;
        for _ in 0..n_rollouts {
            rollout.clear();
            rollout.extend_from_slice(&seq[..t]);
            let mut state = states[t].clone();
            let mut dist = probs[t].clone();
            for k in t..t_len {
                let y = sample_categorical(&dist, rng);
                rollout.push(y);
                if k + 1 < t_len {
                    let (next, np) = gen_step(gen, &state, y)?;
                    state = next;
                    dist = np;
                }
            }
            acc += disc_forward(disc, &rollout)?.0;
        }
        q[t - 1] = acc / n_rollouts as f64;
    }
    // terminal action value: the discriminator score of the full sequence,
    // no sampling involved
    q[t_len - 1] = disc_forward(disc, seq)?.0;
    Ok(q)
}

/// Monte-Carlo action values for each step of `seq` generated after `start`:
/// positions `t < T` average `n_rollouts` discriminator scores of completed
/// sequences; the terminal position is the discriminator score of `seq`
/// itself, exactly.
pub fn rollout_action_values<R: Rng>(
    gen: &GeneratorParams,
    disc: &DiscriminatorParams,
    start: &[TokenId],
    seq: &[TokenId],
    n_rollouts: usize,
    rng: &mut R,
) -> Result<Vec<f64>, SeqGanError> {
    if seq.is_empty() {
        return Err(SeqGanError::LengthMismatch { expected: 1, got: 0 });
    }
    if n_rollouts == 0 {
        return Err(SeqGanError::BadConfig("n_rollouts must be positive".into()));
    }
    let (state, dist) = super::lstm::condition_on_start(gen, start)?;
    let mut states = vec![state];
    let mut probs = vec![dist];
    for &tok in seq {
        let (next, np) = gen_step(gen, states.last().expect("non-empty"), tok)?;
        states.push(next);
        probs.push(np);
    }
    action_values_cached(gen, disc, seq, &states, &probs, n_rollouts, rng)
}

/// Policy-gradient metrics for one step.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PgMetrics {
    /// Mean action value over all steps and sequences in the batch.
    pub mean_action_value: f64,
    /// Mean discriminator score of the completed generated sequences.
    pub mean_terminal_score: f64,
}

/// One REINFORCE step over a batch of start windows: generate, score with
/// rollouts, ascend `Σ_t Q_t · ∇ log p(y_t)`.
pub fn policy_gradient_step<R: Rng>(
    gen: &mut GeneratorParams,
    opt: &mut Adam,
    disc: &DiscriminatorParams,
    starts: &[&[TokenId]],
    cfg: &TrainConfig,
    rng: &mut R,
) -> Result<PgMetrics, SeqGanError> {
    cfg.validate()?;
    if starts.is_empty() {
        return Err(SeqGanError::EmptyCorpus);
    }
    let mut grads = gen.zeros_like();
    let mut q_sum = 0.0;
    let mut terminal_sum = 0.0;
    for &start in starts {
        let g = generate_with_states(gen, start, cfg.seq_len, rng)?;
        let q = action_values_cached(gen, disc, &g.tokens, &g.states, &g.probs, cfg.n_rollouts, rng)?;
        q_sum += q.iter().sum::<f64>() / q.len() as f64;
        terminal_sum += q[q.len() - 1];
        let (inputs, losses) = pg_spec(start, &g.tokens, &q);
        let (_, tape) = forward_tape(gen, &inputs, &losses)?;
        grads.add_scaled(&backward_tape(gen, &tape), 1.0);
    }
    scale_params(&mut grads, 1.0 / (starts.len() * cfg.seq_len) as f64);
    opt.step(&mut gen.param_slices_mut(), &grads.param_slices());
    if !gen.is_finite() {
        return Err(SeqGanError::NumericFailure("generator parameters left ℝ".into()));
    }
    Ok(PgMetrics {
        mean_action_value: q_sum / starts.len() as f64,
        mean_terminal_score: terminal_sum / starts.len() as f64,
    })
}

/// Per-round adversarial training metrics.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoundMetrics {
    pub round: usize,
    pub generator: PgMetrics,
    pub discriminator: DiscMetrics,
    /// Held-out mean NLL after the round (same split rule as pretraining).
    pub heldout_nll: f64,
}

/// The adversarial loop: per round, `g_steps` policy-gradient updates on
/// uniformly sampled starts (with replacement), then `d_steps` discriminator
/// refreshes on balanced batches of real halves versus fresh generations.
pub fn adversarial_train<R: Rng>(
    gen: &mut GeneratorParams,
    disc: &mut DiscriminatorParams,
    gen_opt: &mut Adam,
    disc_opt: &mut Adam,
    pairs: &[TrainingPair],
    cfg: &TrainConfig,
    rng: &mut R,
) -> Result<Vec<RoundMetrics>, SeqGanError> {
    cfg.validate()?;
    check_pairs(pairs, cfg.seq_len, gen.vocab_size())?;
    let (_, held_idx) = holdout_split(pairs.len());
    let held: Vec<TrainingPair> = held_idx.iter().map(|&i| pairs[i].clone()).collect();

    let mut rounds = Vec::with_capacity(cfg.rounds);
    for round in 0..cfg.rounds {
        let mut gen_metrics = PgMetrics { mean_action_value: 0.0, mean_terminal_score: 0.0 };
        for _ in 0..cfg.g_steps {
            let batch: Vec<&[TokenId]> = (0..cfg.batch_size)
                .map(|_| pairs[rng.random_range(0..pairs.len())].start.as_slice())
                .collect();
            let m = policy_gradient_step(gen, gen_opt, disc, &batch, cfg, rng)?;
            gen_metrics.mean_action_value += m.mean_action_value / cfg.g_steps as f64;
            gen_metrics.mean_terminal_score += m.mean_terminal_score / cfg.g_steps as f64;
        }

        let mut disc_metrics = DiscMetrics { loss_history: Vec::new(), accuracy: 0.0 };
        for _ in 0..cfg.d_steps {
            let mut fake = Vec::with_capacity(cfg.batch_size);
            let mut real = Vec::with_capacity(cfg.batch_size);
            for _ in 0..cfg.batch_size {
                let pair = &pairs[rng.random_range(0..pairs.len())];
                fake.push(generate(gen, &pair.start, cfg.seq_len, rng)?);
                real.push(pair.real.clone());
            }
            disc_metrics = pretrain_discriminator(
                disc,
                disc_opt,
                &real,
                &fake,
                cfg.d_epochs,
                cfg.batch_size,
                rng,
            )?;
        }

        rounds.push(RoundMetrics {
            round,
            generator: gen_metrics,
            discriminator: disc_metrics,
            heldout_nll: mle_nll(gen, &held)?,
        });
    }
    Ok(rounds)
}
