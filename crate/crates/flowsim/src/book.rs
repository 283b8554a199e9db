//! Price–time-priority limit order book over integer tick prices.
//!
//! Prices are `i64` tick counts and volumes are `u64` fixed-point units
//! ([`VOLUME_SCALE`] units per 1.0 of feed size), so matching, cancellation and
//! replay are exact integer arithmetic: replaying the same event sequence twice
//! yields bit-identical books and fills. Floating point only appears at the
//! boundaries (feed parsing, mid-price output).

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Price expressed as a signed number of ticks.
pub type PriceTicks = i64;

/// Volume expressed in fixed-point units.
pub type VolumeUnits = u64;

/// Fixed-point units per 1.0 of raw feed size.
pub const VOLUME_SCALE: f64 = 1e8;

/// Largest volume accepted at the parse boundary, in units. Keeps sums of any
/// realistic event count inside `u64`/`u128` audit arithmetic.
pub const MAX_VOLUME_UNITS: VolumeUnits = 1 << 53;

/// Converts a raw feed size into integer volume units (half-up rounding).
///
/// Returns `None` for sizes that are non-finite, round to zero, or exceed
/// [`MAX_VOLUME_UNITS`].
pub fn volume_units_from_size(size: f64) -> Option<VolumeUnits> {
    if !size.is_finite() {
        return None;
    }
    let scaled = (size * VOLUME_SCALE).round();
    if scaled < 1.0 || scaled > MAX_VOLUME_UNITS as f64 {
        return None;
    }
    Some(scaled as VolumeUnits)
}

/// Converts integer volume units back to a raw size.
pub fn size_from_volume_units(units: VolumeUnits) -> f64 {
    units as f64 / VOLUME_SCALE
}

/// Book side. `Bid` rests buy interest, `Ask` rests sell interest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Bid,
    Ask,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Bid => Side::Ask,
            Side::Ask => Side::Bid,
        }
    }
}

/// One resting order in a price level's FIFO queue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestingOrder {
    pub id: u64,
    pub volume: VolumeUnits,
}

/// One maker-order execution produced by an incoming marketable order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fill {
    pub maker_id: u64,
    pub price: PriceTicks,
    pub volume: VolumeUnits,
}

/// Result of submitting a limit order: fills taken on arrival (if it crossed)
/// plus the id of the resting remainder, if any volume rested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitOutcome {
    pub fills: Vec<Fill>,
    pub resting_id: Option<u64>,
}

/// Result of a cancel: volume actually removed and the excess that referenced
/// nothing (phantom).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CancelOutcome {
    pub removed: VolumeUnits,
    pub phantom: VolumeUnits,
}

#[derive(Debug, Error)]
pub enum BookError {
    #[error("volume must be positive")]
    ZeroVolume,
    #[error("market order found no resting volume on the {side:?} side")]
    EmptyBookSide { side: Side },
    #[error("market order left {residual} units unfilled after {} fills", fills.len())]
    UnfilledMarket {
        fills: Vec<Fill>,
        residual: VolumeUnits,
    },
}

/// Limit order book: FIFO queues per price level, price–time priority.
///
/// Order ids are assigned internally from a monotone counter, so a given event
/// sequence always produces the same ids, fills and state.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BookState {
    bids: BTreeMap<PriceTicks, VecDeque<RestingOrder>>,
    asks: BTreeMap<PriceTicks, VecDeque<RestingOrder>>,
    next_order_id: u64,
    phantom_cancels: u64,
}

impl BookState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a symmetric synthetic book: `levels` price levels per side,
    /// one resting order of `per_level` units each, spread of 2 ticks centred
    /// on `center`.
    pub fn symmetric(center: PriceTicks, levels: usize, per_level: VolumeUnits) -> Self {
        let mut book = Self::new();
        for i in 1..=levels as i64 {
            let _ = book.apply_limit(Side::Bid, center - i, per_level);
            let _ = book.apply_limit(Side::Ask, center + i, per_level);
        }
        book
    }

    pub fn best_bid(&self) -> Option<PriceTicks> {
        self.bids.keys().next_back().copied()
    }

    pub fn best_ask(&self) -> Option<PriceTicks> {
        self.asks.keys().next().copied()
    }

    /// Mid price in real units, `(a + b) / 2 * tick_size`. `None` while either
    /// side is empty.
    pub fn mid_price(&self, tick_size: f64) -> Option<f64> {
        let b = self.best_bid()?;
        let a = self.best_ask()?;
        Some((a + b) as f64 * tick_size / 2.0)
    }

    pub fn spread_ticks(&self) -> Option<i64> {
        Some(self.best_ask()? - self.best_bid()?)
    }

    /// Resting volume at one price level (0 when the level is absent).
    pub fn level_volume(&self, side: Side, price: PriceTicks) -> VolumeUnits {
        self.levels(side)
            .get(&price)
            .map(|q| q.iter().map(|o| o.volume).sum())
            .unwrap_or(0)
    }

    /// Number of occupied price levels on a side.
    pub fn level_count(&self, side: Side) -> usize {
        self.levels(side).len()
    }

    /// Total resting volume on a side (u128: immune to audit-sum overflow).
    pub fn total_volume(&self, side: Side) -> u128 {
        self.levels(side)
            .values()
            .flat_map(|q| q.iter())
            .map(|o| o.volume as u128)
            .sum()
    }

    /// Volumes of all occupied levels on a side, best first.
    pub fn level_volumes(&self, side: Side) -> Vec<(PriceTicks, VolumeUnits)> {
        let mut out: Vec<(PriceTicks, VolumeUnits)> = self
            .levels(side)
            .iter()
            .map(|(&p, q)| (p, q.iter().map(|o| o.volume).sum()))
            .collect();
        if side == Side::Bid {
            out.reverse(); // best (highest) first
        }
        out
    }

    /// Count of cancel events that referenced more volume than was resting.
    pub fn phantom_cancels(&self) -> u64 {
        self.phantom_cancels
    }

    /// Distance of `price` from the opposite best quote, in ticks:
    /// bids measure from the best ask, asks from the best bid. `None` when the
    /// reference side is unquoted. Zero or negative means the order crosses.
    pub fn relative_price(&self, side: Side, price: PriceTicks) -> Option<i64> {
        match side {
            Side::Bid => Some(self.best_ask()? - price),
            Side::Ask => Some(price - self.best_bid()?),
        }
    }

    /// Inverse of [`relative_price`](Self::relative_price): the absolute price
    /// `q` ticks from the opposite best quote.
    pub fn absolute_price(&self, side: Side, q: i64) -> Option<PriceTicks> {
        match side {
            Side::Bid => Some(self.best_ask()? - q),
            Side::Ask => Some(self.best_bid()? + q),
        }
    }

    /// Submits a limit order. A crossing limit fills against the opposite side
    /// up to its own price first (price–time priority); any remainder rests.
    pub fn apply_limit(
        &mut self,
        side: Side,
        price: PriceTicks,
        volume: VolumeUnits,
    ) -> Result<LimitOutcome, BookError> {
        if volume == 0 {
            return Err(BookError::ZeroVolume);
        }
        let (fills, remaining) = self.consume(side.opposite(), Some(price), volume);
        let resting_id = if remaining > 0 {
            let id = self.next_order_id;
            self.next_order_id += 1;
            self.levels_mut(side)
                .entry(price)
                .or_default()
                .push_back(RestingOrder {
                    id,
                    volume: remaining,
                });
            Some(id)
        } else {
            None
        };
        Ok(LimitOutcome { fills, resting_id })
    }

    /// Submits a market order for the taker side (`Bid` buys, consuming asks;
    /// `Ask` sells, consuming bids). Fills as much as the book holds; if the
    /// order exhausts the side, the executed fills stay applied and the
    /// residual is reported as an error.
    pub fn apply_market(
        &mut self,
        taker: Side,
        volume: VolumeUnits,
    ) -> Result<Vec<Fill>, BookError> {
        if volume == 0 {
            return Err(BookError::ZeroVolume);
        }
        let maker_side = taker.opposite();
        if self.levels(maker_side).is_empty() {
            return Err(BookError::EmptyBookSide { side: maker_side });
        }
        let (fills, remaining) = self.consume(maker_side, None, volume);
        if remaining > 0 {
            return Err(BookError::UnfilledMarket {
                fills,
                residual: remaining,
            });
        }
        Ok(fills)
    }

    /// Cancels up to `volume` units at a price level, newest orders first.
    /// Excess beyond the resting volume is a no-op counted as phantom.
    pub fn apply_cancel(
        &mut self,
        side: Side,
        price: PriceTicks,
        volume: VolumeUnits,
    ) -> Result<CancelOutcome, BookError> {
        if volume == 0 {
            return Err(BookError::ZeroVolume);
        }
        let mut removed: VolumeUnits = 0;
        let levels = self.levels_mut(side);
        if let Some(queue) = levels.get_mut(&price) {
            let mut remaining = volume;
            while remaining > 0 {
                let Some(back) = queue.back_mut() else { break };
                let take = back.volume.min(remaining);
                back.volume -= take;
                remaining -= take;
                removed += take;
                if back.volume == 0 {
                    queue.pop_back();
                }
            }
            if queue.is_empty() {
                levels.remove(&price);
            }
        }
        let phantom = volume - removed;
        if phantom > 0 {
            self.phantom_cancels += 1;
        }
        Ok(CancelOutcome { removed, phantom })
    }

    fn levels(&self, side: Side) -> &BTreeMap<PriceTicks, VecDeque<RestingOrder>> {
        match side {
            Side::Bid => &self.bids,
            Side::Ask => &self.asks,
        }
    }

    fn levels_mut(&mut self, side: Side) -> &mut BTreeMap<PriceTicks, VecDeque<RestingOrder>> {
        match side {
            Side::Bid => &mut self.bids,
            Side::Ask => &mut self.asks,
        }
    }

    /// Consumes resting volume from `maker_side`, best price first, FIFO within
    /// a level. `limit_price` bounds how deep a crossing limit may execute;
    /// `None` sweeps without a price bound (market order). Returns the fills
    /// and the unexecuted remainder.
    fn consume(
        &mut self,
        maker_side: Side,
        limit_price: Option<PriceTicks>,
        volume: VolumeUnits,
    ) -> (Vec<Fill>, VolumeUnits) {
        let mut fills = Vec::new();
        let mut remaining = volume;
        while remaining > 0 {
            let best = match maker_side {
                Side::Ask => self.asks.keys().next().copied(),
                Side::Bid => self.bids.keys().next_back().copied(),
            };
            let Some(price) = best else { break };
            if let Some(limit) = limit_price {
                let executable = match maker_side {
                    Side::Ask => price <= limit, // buying: pay up to limit
                    Side::Bid => price >= limit, // selling: accept down to limit
                };
                if !executable {
                    break;
                }
            }
            let levels = self.levels_mut(maker_side);
            let queue = levels.get_mut(&price).expect("best level exists");
            while remaining > 0 {
                let Some(front) = queue.front_mut() else { break };
                let take = front.volume.min(remaining);
                front.volume -= take;
                remaining -= take;
                fills.push(Fill {
                    maker_id: front.id,
                    price,
                    volume: take,
                });
                if front.volume == 0 {
                    queue.pop_front();
                }
            }
            if queue.is_empty() {
                levels.remove(&price);
            }
        }
        (fills, remaining)
    }
}
