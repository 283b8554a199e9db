//! Token alphabet for order-flow sequences.
//!
//! Flow events are reduced to a finite alphabet of size `4Q + 4`: limit and
//! cancel tokens carry a side and a *relative* price `q ∈ 1..=Q` measured in
//! ticks from the opposite best quote (buys from the best ask, sells from the
//! best bid), market tokens carry the book side they arrive at, and two η
//! tokens absorb out-of-band activity (deeper than `Q`, or events whose
//! reference quote is missing).
//!
//! Token ids are laid out contiguously:
//! `l_B,1..Q`, `l_A,1..Q`, `c_B,1..Q`, `c_A,1..Q`, `μ_B`, `μ_A`, `η_B`, `η_A`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::book::{BookState, PriceTicks, Side, VolumeUnits};

/// Index into the token alphabet, in `0..vocabulary.size()`.
pub type TokenId = usize;

/// What a flow event does to the book, with absolute prices.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum EventBody {
    Limit { side: Side, price: PriceTicks },
    Cancel { side: Side, price: PriceTicks },
    /// Market order; `taker` is the aggressor side (`Bid` buys and consumes
    /// asks, `Ask` sells and consumes bids).
    Market { taker: Side },
}

/// One order-flow event.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrderEvent {
    pub time: f64,
    pub body: EventBody,
    pub volume: VolumeUnits,
}

/// Decoded meaning of a token id.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Token {
    /// Limit order resting `q` ticks from the opposite best quote.
    Limit { side: Side, q: i64 },
    /// Cancellation `q` ticks from the opposite best quote.
    Cancel { side: Side, q: i64 },
    /// Market order arriving at (consuming) the `hits` side of the book:
    /// `hits == Bid` is a sell, `hits == Ask` is a buy.
    Market { hits: Side },
    /// Out-of-band activity attributed to `side`.
    OutOfBand { side: Side },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TokenError {
    #[error("band depth must be at least 1")]
    ZeroBand,
    #[error("token id {id} out of range for alphabet of size {size}")]
    IdOutOfRange { id: TokenId, size: usize },
    #[error("relative price {q} outside 1..={q_max}")]
    RelativeOutOfBand { q: i64, q_max: i64 },
    #[error("unknown token name `{0}`")]
    UnknownName(String),
}

/// The alphabet for a given band depth `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vocabulary {
    q_max: i64,
}

impl Vocabulary {
    pub fn new(q_max: i64) -> Result<Self, TokenError> {
        if q_max < 1 {
            return Err(TokenError::ZeroBand);
        }
        Ok(Self { q_max })
    }

    pub fn q_max(&self) -> i64 {
        self.q_max
    }

    /// Alphabet size, `4Q + 4`.
    pub fn size(&self) -> usize {
        (4 * self.q_max + 4) as usize
    }

    fn checked_q(&self, q: i64) -> Result<usize, TokenError> {
        if q < 1 || q > self.q_max {
            return Err(TokenError::RelativeOutOfBand { q, q_max: self.q_max });
        }
        Ok((q - 1) as usize)
    }

    pub fn limit(&self, side: Side, q: i64) -> Result<TokenId, TokenError> {
        let base = match side {
            Side::Bid => 0,
            Side::Ask => self.q_max as usize,
        };
        Ok(base + self.checked_q(q)?)
    }

    pub fn cancel(&self, side: Side, q: i64) -> Result<TokenId, TokenError> {
        let base = match side {
            Side::Bid => 2 * self.q_max as usize,
            Side::Ask => 3 * self.q_max as usize,
        };
        Ok(base + self.checked_q(q)?)
    }

    /// Market token arriving at the `hits` side of the book.
    pub fn market(&self, hits: Side) -> TokenId {
        let base = 4 * self.q_max as usize;
        match hits {
            Side::Bid => base,
            Side::Ask => base + 1,
        }
    }

    pub fn out_of_band(&self, side: Side) -> TokenId {
        let base = 4 * self.q_max as usize + 2;
        match side {
            Side::Bid => base,
            Side::Ask => base + 1,
        }
    }

    pub fn decode(&self, id: TokenId) -> Result<Token, TokenError> {
        let q_max = self.q_max as usize;
        if id >= self.size() {
            return Err(TokenError::IdOutOfRange { id, size: self.size() });
        }
        let token = if id < q_max {
            Token::Limit { side: Side::Bid, q: (id + 1) as i64 }
        } else if id < 2 * q_max {
            Token::Limit { side: Side::Ask, q: (id - q_max + 1) as i64 }
        } else if id < 3 * q_max {
            Token::Cancel { side: Side::Bid, q: (id - 2 * q_max + 1) as i64 }
        } else if id < 4 * q_max {
            Token::Cancel { side: Side::Ask, q: (id - 3 * q_max + 1) as i64 }
        } else {
            match id - 4 * q_max {
                0 => Token::Market { hits: Side::Bid },
                1 => Token::Market { hits: Side::Ask },
                2 => Token::OutOfBand { side: Side::Bid },
                _ => Token::OutOfBand { side: Side::Ask },
            }
        };
        Ok(token)
    }

    /// Token-level inverse of [`decode`](Self::decode).
    pub fn encode_token(&self, token: Token) -> Result<TokenId, TokenError> {
        match token {
            Token::Limit { side, q } => self.limit(side, q),
            Token::Cancel { side, q } => self.cancel(side, q),
            Token::Market { hits } => Ok(self.market(hits)),
            Token::OutOfBand { side } => Ok(self.out_of_band(side)),
        }
    }

    /// Stable short name, e.g. `l_B3`, `c_A1`, `mu_B`, `eta_A`. Used as keys
    /// in rate files and report rows.
    pub fn token_name(&self, id: TokenId) -> Result<String, TokenError> {
        let name = match self.decode(id)? {
            Token::Limit { side, q } => format!("l_{}{q}", side_letter(side)),
            Token::Cancel { side, q } => format!("c_{}{q}", side_letter(side)),
            Token::Market { hits } => format!("mu_{}", side_letter(hits)),
            Token::OutOfBand { side } => format!("eta_{}", side_letter(side)),
        };
        Ok(name)
    }

    /// Inverse of [`token_name`](Self::token_name).
    pub fn parse_name(&self, name: &str) -> Result<TokenId, TokenError> {
        let err = || TokenError::UnknownName(name.to_string());
        let (prefix, rest) = name.split_once('_').ok_or_else(err)?;
        let side = match rest.chars().next() {
            Some('B') => Side::Bid,
            Some('A') => Side::Ask,
            _ => return Err(err()),
        };
        let digits = &rest[1..];
        match prefix {
            "mu" if digits.is_empty() => Ok(self.market(side)),
            "eta" if digits.is_empty() => Ok(self.out_of_band(side)),
            "l" | "c" => {
                let q: i64 = digits.parse().map_err(|_| err())?;
                if prefix == "l" {
                    self.limit(side, q)
                } else {
                    self.cancel(side, q)
                }
                .map_err(|_| err())
            }
            _ => Err(err()),
        }
    }

    /// Encodes a flow event against the current book.
    ///
    /// Limit/cancel prices are converted to relative ticks from the opposite
    /// best quote. Crossing prices (`q < 1`) clamp to the nearest in-band
    /// price `q = 1`; prices deeper than `Q`, or events whose reference side
    /// is unquoted, encode as η for the event's side. Total by construction.
    pub fn encode_event(&self, book: &BookState, body: EventBody) -> TokenId {
        match body {
            EventBody::Limit { side, price } | EventBody::Cancel { side, price } => {
                let q = match book.relative_price(side, price) {
                    Some(q) => q,
                    None => return self.out_of_band(side),
                };
                if q > self.q_max {
                    return self.out_of_band(side);
                }
                let q = q.max(1); // clamped into band, so the encoders cannot fail
                match body {
                    EventBody::Limit { .. } => self.limit(side, q),
                    EventBody::Cancel { .. } => self.cancel(side, q),
                    EventBody::Market { .. } => unreachable!(),
                }
                .expect("q in 1..=q_max")
            }
            EventBody::Market { taker } => self.market(taker.opposite()),
        }
    }
}

fn side_letter(side: Side) -> char {
    match side {
        Side::Bid => 'B',
        Side::Ask => 'A',
    }
}
