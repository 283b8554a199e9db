//! Adversarially trained sequence model over the order-flow alphabet.
//!
//! A single-layer LSTM generator proposes token sequences conditioned on a
//! start window; a convolutional discriminator scores sequences as real or
//! generated. The generator is pretrained by maximum likelihood and then
//! updated with policy gradients whose action values come from Monte-Carlo
//! rollouts scored by the discriminator (the terminal step is scored exactly,
//! without sampling).
//!
//! All parameters are `f64` and every source of randomness is an explicit
//! caller-provided RNG, so training and generation are reproducible bit for
//! bit from a seed.

mod adam;
mod disc;
mod lstm;
mod train;

pub use adam::{Adam, AdamConfig};
pub use disc::{bce_with_logit, disc_backward, disc_forward, ConvBank, DiscCache, DiscriminatorParams};
pub use lstm::{
    backward_tape, condition_on_start, forward_tape, gen_step, generate, generate_with_states,
    sample_categorical, GenTape, Generated, GeneratorParams, HiddenState, LossSpec,
};
pub use train::{
    adversarial_train, mle_nll, policy_gradient_step, pretrain_discriminator,
    pretrain_generator_mle, rollout_action_values, DiscMetrics, ModelConfig, PgMetrics,
    RoundMetrics, TrainConfig,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SeqGanError {
    #[error("start sequence must be non-empty")]
    EmptyStart,
    #[error("training corpus is empty")]
    EmptyCorpus,
    #[error("token id {id} out of range for alphabet of size {size}")]
    TokenOutOfRange { id: usize, size: usize },
    #[error("sequence length {got} does not match configured length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("sequence of length {len} shorter than the widest filter ({min})")]
    SequenceTooShort { len: usize, min: usize },
    #[error("numeric failure: {0}")]
    NumericFailure(String),
    #[error("bad configuration: {0}")]
    BadConfig(String),
}
