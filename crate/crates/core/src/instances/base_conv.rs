//! Base conversion for fractions.
//!
//! The state `(v, w_i, w_o)` holds the value consumed so far, the weight of
//! the next input digit and the weight of the next output digit. Consuming a
//! digit adds its weighted value to `v`; producing extracts the next output
//! digit from `v`.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use super::{InstanceError, Rational};
use crate::algebra::{Coalgebra, LeftAlgebra};
use crate::streaming::StreamingSpec;

/// A radix of at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Base(u32);

impl Base {
    pub fn new(radix: u32) -> Result<Self, InstanceError> {
        if radix < 2 {
            return Err(InstanceError::InvalidBase(radix));
        }
        Ok(Base(radix))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    fn as_rational(self) -> Rational {
        Rational::from_integer(self.0)
    }
}

/// A single digit. Range checks against a base happen at ingestion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Digit(pub u64);

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BaseConvState {
    /// Accumulated value not yet emitted.
    pub v: Rational,
    /// Weight of the next input digit.
    pub w_i: Rational,
    /// Weight of the next output digit.
    pub w_o: Rational,
}

impl BaseConvState {
    pub fn new(v: Rational, w_i: Rational, w_o: Rational) -> Self {
        BaseConvState { v, w_i, w_o }
    }
}

impl fmt::Display for BaseConvState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.v, self.w_i, self.w_o)
    }
}

/// Conversion of fractions in `[0, 1)` from one base to another.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BaseConversion {
    pub from: Base,
    pub to: Base,
}

impl BaseConversion {
    pub fn new(from: u32, to: u32) -> Result<Self, InstanceError> {
        Ok(BaseConversion {
            from: Base::new(from)?,
            to: Base::new(to)?,
        })
    }

    /// `(0, 1/b_i, 1/b_o)`.
    pub fn initial_state(&self) -> BaseConvState {
        BaseConvState {
            v: Rational::zero(),
            w_i: self.from.as_rational().recip(),
            w_o: self.to.as_rational().recip(),
        }
    }

    /// Validates raw digits against the input base.
    pub fn digits(&self, raw: &[u64]) -> Result<Vec<Digit>, InstanceError> {
        raw.iter()
            .map(|&d| {
                if d < u64::from(self.from.0) {
                    Ok(Digit(d))
                } else {
                    Err(InstanceError::InvalidDigit {
                        digit: d,
                        base: self.from.0,
                    })
                }
            })
            .collect()
    }

    /// Consumes one input digit, checking its range first.
    pub fn consume(&self, s: &BaseConvState, d: Digit) -> Result<BaseConvState, InstanceError> {
        self.digits(&[d.0])?;
        Ok(self.consume_unchecked(s, d))
    }

    /// `(v + d·w_i, w_i / b_i, w_o)`.
    pub fn consume_unchecked(&self, s: &BaseConvState, d: Digit) -> BaseConvState {
        BaseConvState {
            v: &s.v + &(&Rational::from_integer(d.0) * &s.w_i),
            w_i: &s.w_i / &self.from.as_rational(),
            w_o: s.w_o.clone(),
        }
    }

    /// The digit `⌊v / w_o⌋`, its remainder, and the state after emitting it.
    fn extract(&self, s: &BaseConvState) -> (Digit, Rational, BaseConvState) {
        let d: BigInt = s.v.floor_div(&s.w_o);
        let r = &s.v - &(&Rational::from_integer(d.clone()) * &s.w_o);
        let digit = Digit(u64::try_from(d).expect("output digit does not fit in u64"));
        let next = BaseConvState {
            v: r.clone(),
            w_i: s.w_i.clone(),
            w_o: &s.w_o / &self.to.as_rational(),
        };
        (digit, r, next)
    }

    /// Emits a digit whenever the accumulator is positive, regardless of
    /// what input may still come.
    pub fn produce_eager(&self, s: &BaseConvState) -> Option<(Digit, BaseConvState)> {
        if !s.v.is_positive() {
            return None;
        }
        let (d, _, next) = self.extract(s);
        Some((d, next))
    }

    /// Like [`produce_eager`](Self::produce_eager), but withholds the digit
    /// unless `r + b_i·w_i ≤ w_o`, i.e. unless no further input could push
    /// the remainder past the next output weight.
    pub fn produce_streaming(&self, s: &BaseConvState) -> Option<(Digit, BaseConvState)> {
        if !s.v.is_positive() {
            return None;
        }
        let (d, r, next) = self.extract(s);
        let headroom = &self.from.as_rational() * &s.w_i;
        (&r + &headroom <= s.w_o).then_some((d, next))
    }

    pub fn left_algebra(&self) -> LeftAlgebra<Digit, BaseConvState> {
        let conv = *self;
        LeftAlgebra::new(move |s, d| conv.consume_unchecked(s, *d))
    }

    pub fn eager_coalgebra(&self) -> Coalgebra<Digit, BaseConvState> {
        let conv = *self;
        Coalgebra::new(move |s| conv.produce_eager(s))
    }

    pub fn streaming_coalgebra(&self) -> Coalgebra<Digit, BaseConvState> {
        let conv = *self;
        Coalgebra::new(move |s| conv.produce_streaming(s))
    }

    /// The streaming coalgebra, optionally flushed by the eager one once the
    /// input is exhausted.
    pub fn streaming_spec(&self, flush: bool) -> StreamingSpec<Digit, Digit, BaseConvState> {
        let spec = StreamingSpec::new(self.left_algebra(), self.streaming_coalgebra());
        if flush {
            spec.with_flusher(self.eager_coalgebra())
        } else {
            spec
        }
    }

    /// `Σ d_k · b^-(k+1)` for digits in the input base.
    pub fn input_value(&self, digits: &[Digit]) -> Rational {
        positional_value(self.from, digits)
    }

    /// `Σ d_k · b^-(k+1)` for digits in the output base.
    pub fn output_value(&self, digits: &[Digit]) -> Rational {
        positional_value(self.to, digits)
    }
}

fn positional_value(base: Base, digits: &[Digit]) -> Rational {
    let b = base.as_rational();
    let mut weight = Rational::one();
    let mut total = Rational::zero();
    for d in digits {
        weight = &weight / &b;
        total = &total + &(&Rational::from_integer(d.0) * &weight);
    }
    total
}

/// Parses `d1,d2,...,dk`; the empty string is the empty list.
pub fn parse_digit_list(s: &str) -> Result<Vec<u64>, InstanceError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| InstanceError::BadDigitList(s.to_string()))
        })
        .collect()
}
