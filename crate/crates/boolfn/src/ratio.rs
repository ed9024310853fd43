//! Exact non-negative rationals for complexity ratios.
//!
//! All comparisons cross-multiply in 128 bits; no floating point. A
//! distinguished infinite value covers the "queries on a constant function"
//! convention and never participates in arithmetic.

use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub const ZERO: Ratio = Ratio { num: 0, den: 1 };
    /// Distinguished top value (den = 0).
    pub const INFINITY: Ratio = Ratio { num: 1, den: 0 };

    pub fn new(num: u64, den: u64) -> Ratio {
        assert!(den > 0, "Ratio::new requires a positive denominator");
        if num == 0 {
            return Ratio::ZERO;
        }
        let g = gcd(num, den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn integer(v: u64) -> Ratio {
        Ratio { num: v, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        // cross-multiplication handles the infinite value too: a/0 compares
        // greater than any finite b/d since a*d > b*0
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl std::str::FromStr for Ratio {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "inf" {
            return Ok(Ratio::INFINITY);
        }
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a, b),
            None => (s, "1"),
        };
        let num: u64 = num.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let den: u64 = den.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if den == 0 {
            return Err("zero denominator".into());
        }
        Ok(Ratio::new(num, den))
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
