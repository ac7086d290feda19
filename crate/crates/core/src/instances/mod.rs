//! The two worked instances: base conversion for fractions and heapsort.

pub mod base_conv;
pub mod heapsort;
mod rational;

pub use base_conv::{parse_digit_list, Base, BaseConvState, BaseConversion, Digit};
pub use heapsort::{parse_values, ExtVal, Heap};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InstanceError {
    #[error("invalid base {0}: bases must be at least 2")]
    InvalidBase(u32),
    #[error("invalid digit {digit} for base {base}")]
    InvalidDigit { digit: u64, base: u32 },
    #[error("malformed digit list {0:?}")]
    BadDigitList(String),
    #[error("malformed value {0:?}: expected a natural number or \"inf\"")]
    BadValue(String),
    #[error("malformed rational {0:?}: expected p/q")]
    BadRational(String),
}
