//! Generative order-flow modeling over a limit order book.
//!
//! The crate covers the full pipeline: parse an exchange feed into order
//! events, reduce them to a finite token alphabet, fit flow models (an
//! adversarially trained recurrent generator and a multiple-Poisson
//! benchmark), replay generated flow through a matching engine to produce
//! mid-price paths, and compare simulated paths against held-out real data
//! with a battery of distributional tests.
//!
//! Modules:
//! - [`book`]: integer-tick, price–time-priority matching engine
//! - [`tokenize`]: event ↔ token alphabet
//! - [`ingest`]: feed parsing, token encoding, slicing, empirical samplers
//! - [`poisson`]: independent-Poisson benchmark flow model
//! - [`seqgan`]: recurrent generator + convolutional discriminator training
//! - [`simulate`]: token materialization, replay, resampling, path batches
//! - [`stats`]: test statistics (K-S, Jarque-Bera, Hill, t, Hochberg, …)
//! - [`report`]: evaluation tables (CSV / JSON / text)
//! - [`pipeline`]: run-directory orchestration used by the CLI

pub mod book;
pub mod ingest;
pub mod pipeline;
pub mod poisson;
pub mod report;
pub mod seqgan;
pub mod simulate;
pub mod stats;
pub mod tokenize;

pub use book::{BookState, Side};
pub use tokenize::{OrderEvent, TokenId, Vocabulary};
