//! Exact fractions for indices and exponents.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{overflow, Error, Result};

/// A normalized fraction `numer / denom` with `denom >= 1` and
/// `gcd(|numer|, denom) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRational", into = "RawRational")]
pub struct Rational {
    numer: i64,
    denom: i64,
}

#[derive(Serialize, Deserialize)]
struct RawRational {
    numer: i64,
    denom: i64,
}

impl TryFrom<RawRational> for Rational {
    type Error = Error;

    fn try_from(r: RawRational) -> Result<Self> {
        Rational::new(r.numer, r.denom)
    }
}

impl From<Rational> for RawRational {
    fn from(r: Rational) -> Self {
        RawRational {
            numer: r.numer,
            denom: r.denom,
        }
    }
}

impl Rational {
    pub const ZERO: Rational = Rational { numer: 0, denom: 1 };
    pub const ONE: Rational = Rational { numer: 1, denom: 1 };

    pub fn new(numer: i64, denom: i64) -> Result<Rational> {
        if denom == 0 {
            return Err(Error::Domain("zero denominator".into()));
        }
        let (mut n, mut d) = (numer, denom);
        if d < 0 {
            n = n
                .checked_neg()
                .ok_or_else(|| overflow("negating numerator"))?;
            d = d
                .checked_neg()
                .ok_or_else(|| overflow("negating denominator"))?;
        }
        let g = n.gcd(&d);
        Ok(Rational {
            numer: n / g,
            denom: d / g,
        })
    }

    pub fn integer(n: i64) -> Rational {
        Rational { numer: n, denom: 1 }
    }

    /// Builds `numer / denom` from unsigned quantities such as word lengths.
    pub fn from_lengths(numer: u64, denom: u64) -> Result<Rational> {
        let n = i64::try_from(numer).map_err(|_| overflow("numerator exceeds i64"))?;
        let d = i64::try_from(denom).map_err(|_| overflow("denominator exceeds i64"))?;
        Rational::new(n, d)
    }

    pub fn numer(&self) -> i64 {
        self.numer
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.denom == 1
    }

    pub fn is_negative(&self) -> bool {
        self.numer < 0
    }

    pub fn checked_add(self, other: Rational) -> Result<Rational> {
        let l = self.denom.lcm(&other.denom);
        let a = self
            .numer
            .checked_mul(l / self.denom)
            .ok_or_else(|| overflow("rational add"))?;
        let b = other
            .numer
            .checked_mul(l / other.denom)
            .ok_or_else(|| overflow("rational add"))?;
        Rational::new(a.checked_add(b).ok_or_else(|| overflow("rational add"))?, l)
    }

    pub fn checked_sub(self, other: Rational) -> Result<Rational> {
        self.checked_add(Rational {
            numer: -other.numer,
            denom: other.denom,
        })
    }

    /// `self * len` when the product is a whole number.
    pub fn times_length(self, len: u64) -> Option<u64> {
        let len = i64::try_from(len).ok()?;
        let p = self.numer.checked_mul(len)?;
        if p % self.denom != 0 {
            return None;
        }
        u64::try_from(p / self.denom).ok()
    }

    /// Renders values below 3 as `3-p/q` (lowest terms); others as `p/q`.
    pub fn to_deficit_string(&self) -> String {
        let three = Rational::integer(3);
        if *self >= three || self.is_integer() {
            return self.to_string();
        }
        let d = three
            .checked_sub(*self)
            .expect("3 - r cannot overflow for r < 3");
        format!("3-{d}")
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numer as i128 * other.denom as i128;
        let rhs = other.numer as i128 * self.denom as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl std::str::FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rational> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Rational::new(parse(n)?, parse(d)?),
            None => Ok(Rational::integer(parse(s)?)),
        }
    }
}
