//! Feed parsing and token-corpus construction.
//!
//! Feeds arrive as NDJSON (one object per line) or headered CSV with fields
//! `time, type, side, price, size`; `type` is `limit`, `market` or `cancel`,
//! `side` is `buy` or `sell` (for markets: the taker side), and `price` must
//! be present exactly when the event is not a market order. Input is
//! untrusted: every record is validated and errors carry line numbers.
//!
//! Parsed events are encoded against an evolving book into token sequences,
//! sliced into fixed-length training windows, and summarized into empirical
//! volume / inter-arrival samplers for later materialization.

use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::book::{volume_units_from_size, BookError, BookState, Side};
use crate::tokenize::{EventBody, OrderEvent, TokenId, Vocabulary};

#[derive(Debug, Error)]
pub enum IngestError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: timestamps must be non-decreasing")]
    TimeOrder { line: usize },
    #[error("feed contains no events")]
    EmptyFeed,
    #[error("slice length must be even and at least 2, got {0}")]
    BadSliceLen(usize),
    #[error("cannot fit a sampler on an empty value set")]
    EmptySample,
    #[error("sampler values must be positive and finite")]
    InvalidSample,
}

/// Wire format of a feed file.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FeedFormat {
    Ndjson,
    Csv,
}

impl FromStr for FeedFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ndjson" => Ok(FeedFormat::Ndjson),
            "csv" => Ok(FeedFormat::Csv),
            other => Err(format!("unknown feed format `{other}` (expected ndjson or csv)")),
        }
    }
}

/// One feed record as it appears on the wire.
#[derive(Debug, Deserialize)]
struct RawRecord {
    time: f64,
    #[serde(rename = "type")]
    kind: String,
    side: String,
    #[serde(default)]
    price: Option<f64>,
    size: f64,
}

fn malformed(line: usize, msg: impl Into<String>) -> IngestError {
    IngestError::Malformed { line, msg: msg.into() }
}

/// Largest tick count a parsed price may map to; beyond this the price is
/// rejected rather than silently wrapped.
const MAX_ABS_TICKS: f64 = 4.0e15;

fn convert_record(raw: RawRecord, tick_size: f64, line: usize) -> Result<OrderEvent, IngestError> {
    if !raw.time.is_finite() {
        return Err(malformed(line, "time must be finite"));
    }
    let side = match raw.side.as_str() {
        "buy" => Side::Bid,
        "sell" => Side::Ask,
        other => return Err(malformed(line, format!("unknown side `{other}`"))),
    };
    let volume = volume_units_from_size(raw.size)
        .ok_or_else(|| malformed(line, format!("size {} out of range", raw.size)))?;
    let price_ticks = |price: Option<f64>| -> Result<i64, IngestError> {
        let p = price.ok_or_else(|| malformed(line, "limit/cancel requires a price"))?;
        if !p.is_finite() || p <= 0.0 {
            return Err(malformed(line, format!("price {p} must be positive and finite")));
        }
        let ticks = (p / tick_size).round();
        if !ticks.is_finite() || ticks.abs() > MAX_ABS_TICKS {
            return Err(malformed(line, format!("price {p} out of tick range")));
        }
        Ok(ticks as i64)
    };
    let body = match raw.kind.as_str() {
        "limit" => EventBody::Limit { side, price: price_ticks(raw.price)? },
        "cancel" => EventBody::Cancel { side, price: price_ticks(raw.price)? },
        "market" => {
            if raw.price.is_some() {
                return Err(malformed(line, "market orders must not carry a price"));
            }
            EventBody::Market { taker: side }
        }
        other => return Err(malformed(line, format!("unknown event type `{other}`"))),
    };
    Ok(OrderEvent { time: raw.time, body, volume })
}

fn check_order(events: &[OrderEvent], time: f64, line: usize) -> Result<(), IngestError> {
    if let Some(last) = events.last() {
        if time < last.time {
            return Err(IngestError::TimeOrder { line });
        }
    }
    Ok(())
}

/// Parses an NDJSON feed. Blank lines are ignored; `tick_size` converts
/// prices to integer ticks.
pub fn parse_ndjson<R: Read>(reader: R, tick_size: f64) -> Result<Vec<OrderEvent>, IngestError> {
    let mut events = Vec::new();
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let line_no = idx + 1;
        let text = line?;
        if text.trim().is_empty() {
            continue;
        }
        let raw: RawRecord = serde_json::from_str(&text)
            .map_err(|e| malformed(line_no, format!("invalid JSON record: {e}")))?;
        let event = convert_record(raw, tick_size, line_no)?;
        check_order(&events, event.time, line_no)?;
        events.push(event);
    }
    Ok(events)
}

/// Parses a headered CSV feed (`time,type,side,price,size`; empty price for
/// market orders).
pub fn parse_csv<R: Read>(reader: R, tick_size: f64) -> Result<Vec<OrderEvent>, IngestError> {
    let mut csv_reader = csv::ReaderBuilder::new().flexible(false).from_reader(reader);
    let mut events = Vec::new();
    for (idx, row) in csv_reader.deserialize::<RawRecordCsv>().enumerate() {
        let line_no = idx + 2; // header occupies line 1
        let raw = row.map_err(|e| malformed(line_no, format!("invalid CSV record: {e}")))?;
        let event = convert_record(raw.into(), tick_size, line_no)?;
        check_order(&events, event.time, line_no)?;
        events.push(event);
    }
    Ok(events)
}

/// CSV mirror of [`RawRecord`] (empty price field ⇒ `None`).
#[derive(Debug, Deserialize)]
struct RawRecordCsv {
    time: f64,
    #[serde(rename = "type")]
    kind: String,
    side: String,
    #[serde(deserialize_with = "csv::invalid_option", default)]
    price: Option<f64>,
    size: f64,
}

impl From<RawRecordCsv> for RawRecord {
    fn from(r: RawRecordCsv) -> Self {
        RawRecord { time: r.time, kind: r.kind, side: r.side, price: r.price, size: r.size }
    }
}

/// Parses a feed file in the given format.
pub fn parse_feed(
    path: &Path,
    format: FeedFormat,
    tick_size: f64,
) -> Result<Vec<OrderEvent>, IngestError> {
    let file = File::open(path)?;
    match format {
        FeedFormat::Ndjson => parse_ndjson(file, tick_size),
        FeedFormat::Csv => parse_csv(file, tick_size),
    }
}

/// Counters from an encoding pass.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncodeCounters {
    /// Events that fell outside the band (or had no reference quote).
    pub out_of_band: u64,
    /// Crossing limit/cancel prices clamped to the band edge q = 1.
    pub clamped_crossing: u64,
    /// Market orders that exhausted (or found empty) the opposite side.
    pub unfilled_markets: u64,
    /// Cancels that referenced more volume than was resting.
    pub phantom_cancels: u64,
}

/// A token stream aligned with the raw sizes and times it came from, plus the
/// book left at the end of the pass.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EncodedFlow {
    pub tokens: Vec<TokenId>,
    pub times: Vec<f64>,
    pub sizes: Vec<f64>,
    pub final_book: BookState,
    pub counters: EncodeCounters,
}

/// Encodes events into tokens against an evolving book.
///
/// Each event is tokenized against the book state *before* it, then applied
/// with its true (absolute) body, so the pass observes exactly the flow the
/// matching engine would see.
pub fn encode_flow(events: &[OrderEvent], initial: &BookState, vocab: &Vocabulary) -> EncodedFlow {
    let mut book = initial.clone();
    let phantoms_before = book.phantom_cancels();
    let mut out = EncodedFlow {
        tokens: Vec::with_capacity(events.len()),
        times: Vec::with_capacity(events.len()),
        sizes: Vec::with_capacity(events.len()),
        final_book: BookState::new(),
        counters: EncodeCounters::default(),
    };
    for event in events {
        let token = vocab.encode_event(&book, event.body);
        match event.body {
            EventBody::Limit { side, price } | EventBody::Cancel { side, price } => {
                match book.relative_price(side, price) {
                    None => out.counters.out_of_band += 1,
                    Some(q) if q > vocab.q_max() => out.counters.out_of_band += 1,
                    Some(q) if q < 1 => out.counters.clamped_crossing += 1,
                    Some(_) => {}
                }
            }
            EventBody::Market { .. } => {}
        }
        match event.body {
            EventBody::Limit { side, price } => {
                let _ = book.apply_limit(side, price, event.volume);
            }
            EventBody::Cancel { side, price } => {
                let _ = book.apply_cancel(side, price, event.volume);
            }
            EventBody::Market { taker } => {
                if let Err(BookError::UnfilledMarket { .. } | BookError::EmptyBookSide { .. }) =
                    book.apply_market(taker, event.volume)
                {
                    out.counters.unfilled_markets += 1;
                }
            }
        }
        out.tokens.push(token);
        out.times.push(event.time);
        out.sizes.push(crate::book::size_from_volume_units(event.volume));
    }
    out.counters.phantom_cancels = book.phantom_cancels() - phantoms_before;
    out.final_book = book;
    out
}

/// One training window: a conditioning start half and a real continuation
/// half of equal length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrainingPair {
    pub start: Vec<TokenId>,
    pub real: Vec<TokenId>,
}

/// Cuts a token stream into consecutive non-overlapping windows of
/// `slice_len` tokens, splitting each into start/real halves. The trailing
/// remainder shorter than `slice_len` is dropped.
pub fn slice_flow(tokens: &[TokenId], slice_len: usize) -> Result<Vec<TrainingPair>, IngestError> {
    if slice_len < 2 || slice_len % 2 != 0 {
        return Err(IngestError::BadSliceLen(slice_len));
    }
    let half = slice_len / 2;
    Ok(tokens
        .chunks_exact(slice_len)
        .map(|w| TrainingPair { start: w[..half].to_vec(), real: w[half..].to_vec() })
        .collect())
}

/// Empirical distribution sampled by inverse CDF: draws uniformly among the
/// stored values, with replacement.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalSampler {
    values: Vec<f64>, // sorted ascending
}

impl EmpiricalSampler {
    /// Fits on raw values; requires a non-empty set of positive finite values.
    pub fn fit(values: &[f64]) -> Result<Self, IngestError> {
        if values.is_empty() {
            return Err(IngestError::EmptySample);
        }
        if values.iter().any(|v| !v.is_finite() || *v <= 0.0) {
            return Err(IngestError::InvalidSample);
        }
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        Ok(Self { values: sorted })
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> f64 {
        let u: f64 = rng.random();
        let idx = ((u * self.values.len() as f64) as usize).min(self.values.len() - 1);
        self.values[idx]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        *self.values.last().expect("non-empty")
    }
}

/// Strictly positive gaps between consecutive timestamps (zero gaps from
/// simultaneous events are dropped).
pub fn interarrival_gaps(times: &[f64]) -> Vec<f64> {
    times.windows(2).map(|w| w[1] - w[0]).filter(|g| *g > 0.0).collect()
}

/// Median resting volume per occupied price level, both sides pooled.
/// `None` for an empty book.
pub fn median_level_depth(book: &BookState) -> Option<u64> {
    let mut depths: Vec<u64> = book
        .level_volumes(Side::Bid)
        .into_iter()
        .chain(book.level_volumes(Side::Ask))
        .map(|(_, v)| v)
        .collect();
    if depths.is_empty() {
        return None;
    }
    depths.sort_unstable();
    Some(depths[depths.len() / 2])
}
