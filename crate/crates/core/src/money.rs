//! Integer-cent money and exact percentages.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use crate::error::Error;

/// A non-negative amount in cents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Money(u64);

impl Money {
    pub const ZERO: Money = Money(0);

    pub const fn from_cents(cents: u64) -> Self {
        Money(cents)
    }

    pub const fn cents(self) -> u64 {
        self.0
    }

    /// Parses a decimal dollar amount such as `4.50`, `5.3` or `2`.
    /// A leading `$` is tolerated; at most two decimal places.
    pub fn parse_dollars(text: &str) -> Result<Self, Error> {
        let malformed = || Error::MalformedMoney(text.to_string());
        let trimmed = text.trim();
        let body = trimmed.strip_prefix('$').unwrap_or(trimmed);
        let (whole, frac) = match body.split_once('.') {
            Some((w, f)) => (w, f),
            None => (body, ""),
        };
        if whole.is_empty() && frac.is_empty() {
            return Err(malformed());
        }
        if frac.len() > 2
            || !whole.bytes().all(|b| b.is_ascii_digit())
            || !frac.bytes().all(|b| b.is_ascii_digit())
            || (body.contains('.') && frac.is_empty())
        {
            return Err(malformed());
        }
        let dollars: u64 = if whole.is_empty() {
            0
        } else {
            whole.parse().map_err(|_| malformed())?
        };
        let cents: u64 = match frac.len() {
            0 => 0,
            1 => frac.parse::<u64>().map_err(|_| malformed())? * 10,
            _ => frac.parse().map_err(|_| malformed())?,
        };
        dollars
            .checked_mul(100)
            .and_then(|c| c.checked_add(cents))
            .map(Money)
            .ok_or_else(malformed)
    }

    pub fn checked_sub(self, other: Money) -> Option<Money> {
        self.0.checked_sub(other.0).map(Money)
    }
}

impl FromStr for Money {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Money::parse_dollars(s)
    }
}

/// Renders as dollars with exactly two decimals (`4.50`).
impl fmt::Display for Money {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{:02}", self.0 / 100, self.0 % 100)
    }
}

impl Add for Money {
    type Output = Money;

    fn add(self, rhs: Money) -> Money {
        Money(self.0 + rhs.0)
    }
}

impl Sub for Money {
    type Output = Money;

    fn sub(self, rhs: Money) -> Money {
        Money(self.0 - rhs.0)
    }
}

impl std::iter::Sum for Money {
    fn sum<I: Iterator<Item = Money>>(iter: I) -> Money {
        Money(iter.map(|m| m.0).sum())
    }
}

/// An exact ratio `numerator / denominator × 100`, kept unreduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Percent {
    pub numerator: u64,
    pub denominator: u64,
}

impl Percent {
    pub fn of(part: u64, whole: u64) -> Self {
        Percent {
            numerator: part,
            denominator: whole,
        }
    }

    /// Round-half-up to an integer percent. A zero denominator yields 0.
    pub fn rounded(&self) -> u64 {
        round_half_up(self.numerator as u128 * 100, self.denominator as u128) as u64
    }

    /// Round-half-up to one decimal place, returned in tenths of a percent.
    pub fn rounded_tenths(&self) -> u64 {
        round_half_up(self.numerator as u128 * 1000, self.denominator as u128) as u64
    }

    pub fn as_f64(&self) -> f64 {
        if self.denominator == 0 {
            0.0
        } else {
            self.numerator as f64 * 100.0 / self.denominator as f64
        }
    }
}

fn round_half_up(num: u128, den: u128) -> u128 {
    if den == 0 {
        0
    } else {
        (2 * num + den) / (2 * den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_dollar_strings() {
        assert_eq!(Money::parse_dollars("4.50").unwrap().cents(), 450);
        assert_eq!(Money::parse_dollars("5.3").unwrap().cents(), 530);
        assert_eq!(Money::parse_dollars("2").unwrap().cents(), 200);
        assert_eq!(Money::parse_dollars("$1.85").unwrap().cents(), 185);
        assert_eq!(Money::parse_dollars(".05").unwrap().cents(), 5);
        assert_eq!(Money::parse_dollars(" 0.00 ").unwrap().cents(), 0);
    }

    #[test]
    fn rejects_malformed_money() {
        for bad in ["", "4.505", "-1.00", "abc", "1.2.3", "4.", ".", "1,50", "$"] {
            assert!(
                matches!(Money::parse_dollars(bad), Err(Error::MalformedMoney(_))),
                "{bad:?} should be rejected"
            );
        }
    }

    #[test]
    fn displays_two_decimals() {
        assert_eq!(Money::from_cents(175).to_string(), "1.75");
        assert_eq!(Money::from_cents(5).to_string(), "0.05");
        assert_eq!(Money::from_cents(1200).to_string(), "12.00");
    }

    #[test]
    fn percent_rounds_half_up() {
        assert_eq!(Percent::of(175, 870).rounded(), 20);
        assert_eq!(Percent::of(235, 1020).rounded(), 23);
        assert_eq!(Percent::of(1, 200).rounded(), 1);
        assert_eq!(Percent::of(60334, 446985).rounded_tenths(), 135);
        assert_eq!(Percent::of(4666, 446985).rounded_tenths(), 10);
        assert_eq!(Percent::of(3, 0).rounded(), 0);
    }
}
