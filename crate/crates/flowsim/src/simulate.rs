//! Turning token streams back into order flow and mid-price paths.
//!
//! A timed token stream (from the sequence generator or the rate benchmark)
//! is *materialized* against an evolving book: each token is resolved to an
//! absolute-price event using the book's current reference quotes, sized from
//! an empirical size distribution (or an exact sequence), and applied. The
//! resulting mid-price series is resampled onto a fixed grid by
//! last-observation-carried-forward for downstream statistics.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::book::{volume_units_from_size, BookError, BookState, VolumeUnits};
use crate::ingest::EmpiricalSampler;
use crate::poisson::{PoissonError, PoissonRates};
use crate::seqgan::{generate, GeneratorParams, SeqGanError};
use crate::tokenize::{EventBody, OrderEvent, Token, TokenError, TokenId, Vocabulary};

#[derive(Debug, Error)]
pub enum SimError {
    #[error(transparent)]
    Token(#[from] TokenError),
    #[error(transparent)]
    Gen(#[from] SeqGanError),
    #[error(transparent)]
    Poisson(#[from] PoissonError),
    #[error("book rejected event: {0}")]
    Book(#[from] BookError),
    #[error("exact size sequence exhausted after {consumed} draws")]
    ExhaustedSizes { consumed: usize },
    #[error("sampled size {0} cannot be represented as a volume")]
    BadVolume(f64),
    #[error("invalid simulation spec: {0}")]
    BadSpec(String),
    #[error("mid-price series has no observation at or before the grid start")]
    EmptySeries,
    #[error("event budget of {max} exceeded before the horizon")]
    EventBudget { max: usize },
}

/// A mid-price observation per applied event (skipped while a side is empty).
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct MidPriceSeries {
    pub times: Vec<f64>,
    pub mids: Vec<f64>,
}

impl MidPriceSeries {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    fn record(&mut self, time: f64, mid: Option<f64>) {
        if let Some(m) = mid {
            self.times.push(time);
            self.mids.push(m);
        }
    }
}

/// Samples the grid `start + k·step` for `k = 0..=n_steps` by carrying the
/// last observation forward. The series must contain an observation at or
/// before `start`.
pub fn resample_locf(
    series: &MidPriceSeries,
    start: f64,
    step: f64,
    n_steps: usize,
) -> Result<Vec<f64>, SimError> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(SimError::BadSpec(format!("grid step must be positive, got {step}")));
    }
    let mut out = Vec::with_capacity(n_steps + 1);
    let mut idx = 0usize;
    let mut last: Option<f64> = None;
    for k in 0..=n_steps {
        let t = start + k as f64 * step;
        while idx < series.len() && series.times[idx] <= t {
            last = Some(series.mids[idx]);
            idx += 1;
        }
        out.push(last.ok_or(SimError::EmptySeries)?);
    }
    Ok(out)
}

/// Where event sizes come from during materialization.
pub enum SizeModel<'a> {
    /// Draw from the empirical size distribution.
    Empirical(&'a EmpiricalSampler),
    /// Consume a fixed sequence (replaying known flow exactly).
    Exact(&'a [VolumeUnits]),
}

struct SizeFeed<'a> {
    model: SizeModel<'a>,
    cursor: usize,
}

impl SizeFeed<'_> {
    fn next<R: Rng>(&mut self, rng: &mut R) -> Result<VolumeUnits, SimError> {
        match &self.model {
            SizeModel::Empirical(sampler) => {
                let size = sampler.sample(rng);
                let units = volume_units_from_size(size).ok_or(SimError::BadVolume(size))?;
                Ok(units.max(1))
            }
            SizeModel::Exact(seq) => {
                let v = *seq
                    .get(self.cursor)
                    .ok_or(SimError::ExhaustedSizes { consumed: self.cursor })?;
                self.cursor += 1;
                Ok(v)
            }
        }
    }
}

/// Tallies of what happened to the token stream on its way into the book.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimCounters {
    /// Events applied to the book.
    pub events: usize,
    /// Tokens skipped because their reference quote side was empty.
    pub dropped_unquoted: usize,
    /// Market orders that exhausted the opposite side (fills kept).
    pub unfilled_markets: usize,
    /// Cancels that referenced more volume than was resting.
    pub phantom_cancels: u64,
    /// Out-of-band placeholders materialized as deep limit orders.
    pub out_of_band_limits: usize,
    /// Events that crossed and produced fills.
    pub trades: usize,
}

/// Result of materializing a token stream.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Materialized {
    pub events: Vec<OrderEvent>,
    pub series: MidPriceSeries,
    pub trade_times: Vec<f64>,
    pub counters: SimCounters,
}

/// Resolves each timed token to an absolute-price event against the evolving
/// book and applies it. Out-of-band placeholders become limit orders one tick
/// beyond the band; tokens whose reference quote side is empty are dropped.
/// The series starts with the initial mid at `start_time` (when quoted).
pub fn materialize<R: Rng>(
    book: &mut BookState,
    vocab: &Vocabulary,
    timed: &[(f64, TokenId)],
    sizes: SizeModel,
    tick_size: f64,
    start_time: f64,
    rng: &mut R,
) -> Result<Materialized, SimError> {
    let mut feed = SizeFeed { model: sizes, cursor: 0 };
    let mut out = Materialized::default();
    let phantoms_before = book.phantom_cancels();
    out.series.record(start_time, book.mid_price(tick_size));

    for &(time, id) in timed {
        let token = vocab.decode(id)?;
        let (side, q) = match token {
            Token::Limit { side, q } | Token::Cancel { side, q } => (side, q),
            Token::OutOfBand { side } => (side, vocab.q_max() + 1),
            Token::Market { hits } => (hits, 0),
        };

        let body = match token {
            Token::Limit { .. } | Token::OutOfBand { .. } | Token::Cancel { .. } => {
                let Some(price) = book.absolute_price(side, q) else {
                    out.counters.dropped_unquoted += 1;
                    continue;
                };
                match token {
                    Token::Cancel { .. } => EventBody::Cancel { side, price },
                    _ => EventBody::Limit { side, price },
                }
            }
            Token::Market { hits } => EventBody::Market { taker: hits.opposite() },
        };
        if matches!(token, Token::OutOfBand { .. }) {
            out.counters.out_of_band_limits += 1;
        }

        let volume = feed.next(rng)?;
        let filled = match body {
            EventBody::Limit { side, price } => {
                book.apply_limit(side, price, volume)?.fills.len() > 0
            }
            EventBody::Cancel { side, price } => {
                book.apply_cancel(side, price, volume)?;
                false
            }
            EventBody::Market { taker } => match book.apply_market(taker, volume) {
                Ok(_) => true,
                Err(BookError::UnfilledMarket { fills, .. }) => {
                    out.counters.unfilled_markets += 1;
                    !fills.is_empty()
                }
                Err(BookError::EmptyBookSide { .. }) => {
                    out.counters.dropped_unquoted += 1;
                    continue;
                }
                Err(e) => return Err(e.into()),
            },
        };

        if filled {
            out.counters.trades += 1;
            out.trade_times.push(time);
        }
        out.counters.events += 1;
        out.events.push(OrderEvent { time, body, volume });
        out.series.record(time, book.mid_price(tick_size));
    }
    out.counters.phantom_cancels = book.phantom_cancels() - phantoms_before;
    Ok(out)
}

/// Result of replaying absolute-price events.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ReplayResult {
    pub series: MidPriceSeries,
    pub trade_times: Vec<f64>,
    pub counters: SimCounters,
}

/// Applies recorded events to the book, tracking the mid after each one.
/// Market orders that exhaust a side keep their fills; cancels beyond the
/// resting volume are counted as phantom.
pub fn replay(
    book: &mut BookState,
    events: &[OrderEvent],
    tick_size: f64,
    start_time: f64,
) -> Result<ReplayResult, SimError> {
    let mut out = ReplayResult::default();
    let phantoms_before = book.phantom_cancels();
    out.series.record(start_time, book.mid_price(tick_size));
    for event in events {
        let filled = match event.body {
            EventBody::Limit { side, price } => {
                book.apply_limit(side, price, event.volume)?.fills.len() > 0
            }
            EventBody::Cancel { side, price } => {
                book.apply_cancel(side, price, event.volume)?;
                false
            }
            EventBody::Market { taker } => match book.apply_market(taker, event.volume) {
                Ok(_) => true,
                Err(BookError::UnfilledMarket { fills, .. }) => {
                    out.counters.unfilled_markets += 1;
                    !fills.is_empty()
                }
                Err(BookError::EmptyBookSide { .. }) => {
                    out.counters.dropped_unquoted += 1;
                    continue;
                }
                Err(e) => return Err(e.into()),
            },
        };
        if filled {
            out.counters.trades += 1;
            out.trade_times.push(event.time);
        }
        out.counters.events += 1;
        out.series.record(event.time, book.mid_price(tick_size));
    }
    out.counters.phantom_cancels = book.phantom_cancels() - phantoms_before;
    Ok(out)
}

/// Generates a timed token stream long enough to cover `horizon` seconds by
/// chaining fixed-length windows: each window is generated conditioned on the
/// previous one (the first on `start`), and inter-arrival gaps are drawn from
/// the empirical gap distribution. Times are relative to zero and strictly
/// below the horizon.
pub fn generator_timed_flow<R: Rng>(
    params: &GeneratorParams,
    start: &[TokenId],
    seq_len: usize,
    horizon: f64,
    gaps: &EmpiricalSampler,
    max_events: usize,
    rng: &mut R,
) -> Result<Vec<(f64, TokenId)>, SimError> {
    if !(horizon > 0.0 && horizon.is_finite()) {
        return Err(SimError::BadSpec(format!("horizon must be positive, got {horizon}")));
    }
    let mut flow = Vec::new();
    let mut window = start.to_vec();
    let mut t = 0.0;
    loop {
        window = generate(params, &window, seq_len, rng)?;
        for &tok in &window {
            t += gaps.sample(rng);
            if t >= horizon {
                return Ok(flow);
            }
            if flow.len() >= max_events {
                return Err(SimError::EventBudget { max: max_events });
            }
            flow.push((t, tok));
        }
    }
}

/// The flow model a simulation draws its token stream from.
pub enum FlowModel<'a> {
    /// Path `i` seeds its first window from `starts[i % starts.len()]`.
    Generator { params: &'a GeneratorParams, starts: &'a [Vec<TokenId>], seq_len: usize },
    Poisson(&'a PoissonRates),
}

/// Everything a batch of simulated paths shares.
pub struct SimSpec<'a> {
    pub vocab: &'a Vocabulary,
    pub initial_book: &'a BookState,
    pub tick_size: f64,
    /// Seconds of flow per path.
    pub horizon: f64,
    pub n_paths: usize,
    pub sizes: &'a EmpiricalSampler,
    /// Inter-arrival gaps (generator model only; the rate benchmark carries
    /// its own clock).
    pub gaps: &'a EmpiricalSampler,
    /// Grid step for the resampled mid series, in seconds.
    pub sample_step: f64,
    /// Defensive cap on events per path.
    pub max_events: usize,
}

impl SimSpec<'_> {
    fn validate(&self) -> Result<(), SimError> {
        let positive = [
            ("tick_size", self.tick_size),
            ("horizon", self.horizon),
            ("sample_step", self.sample_step),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(SimError::BadSpec(format!("{name} must be positive, got {v}")));
            }
        }
        if self.n_paths == 0 || self.max_events == 0 {
            return Err(SimError::BadSpec("n_paths and max_events must be positive".into()));
        }
        Ok(())
    }

    /// Number of grid steps after the start point.
    pub fn grid_steps(&self) -> usize {
        (self.horizon / self.sample_step).floor() as usize
    }
}

/// One simulated path.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathResult {
    /// Mids at `k·sample_step` for `k = 0..=grid_steps`.
    pub grid: Vec<f64>,
    pub trade_times: Vec<f64>,
    pub counters: SimCounters,
}

/// Simulates `n_paths` independent paths. Each path uses the same seed on its
/// own RNG stream, so any path can be reproduced in isolation.
pub fn run_paths(model: &FlowModel, spec: &SimSpec, seed: u64) -> Result<Vec<PathResult>, SimError> {
    spec.validate()?;
    match model {
        FlowModel::Generator { params, starts, seq_len } => {
            if params.vocab_size() != spec.vocab.size() {
                return Err(SimError::BadSpec(format!(
                    "generator vocabulary {} does not match alphabet {}",
                    params.vocab_size(),
                    spec.vocab.size()
                )));
            }
            if starts.is_empty() || starts.iter().any(Vec::is_empty) || *seq_len == 0 {
                return Err(SimError::BadSpec(
                    "generator needs non-empty start windows and a positive seq_len".into(),
                ));
            }
        }
        FlowModel::Poisson(rates) => {
            if rates.vocabulary().size() != spec.vocab.size() {
                return Err(SimError::BadSpec(format!(
                    "benchmark vocabulary {} does not match alphabet {}",
                    rates.vocabulary().size(),
                    spec.vocab.size()
                )));
            }
        }
    }

    let mut paths = Vec::with_capacity(spec.n_paths);
    for path_idx in 0..spec.n_paths {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(path_idx as u64);
        let timed = match model {
            FlowModel::Generator { params, starts, seq_len } => generator_timed_flow(
                params,
                &starts[path_idx % starts.len()],
                *seq_len,
                spec.horizon,
                spec.gaps,
                spec.max_events,
                &mut rng,
            )?,
            FlowModel::Poisson(rates) => {
                let flow = rates.sample_flow(spec.horizon, &mut rng)?;
                if flow.len() > spec.max_events {
                    return Err(SimError::EventBudget { max: spec.max_events });
                }
                flow
            }
        };
        let mut book = spec.initial_book.clone();
        let m = materialize(
            &mut book,
            spec.vocab,
            &timed,
            SizeModel::Empirical(spec.sizes),
            spec.tick_size,
            0.0,
            &mut rng,
        )?;
        let grid = resample_locf(&m.series, 0.0, spec.sample_step, spec.grid_steps())?;
        paths.push(PathResult { grid, trade_times: m.trade_times, counters: m.counters });
    }
    Ok(paths)
}
