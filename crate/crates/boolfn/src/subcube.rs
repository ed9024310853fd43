//! Partial assignments (restrictions) of the input variables.

use crate::error::{Error, Result};
use crate::table::MAX_VARS;

/// A subcube of {0,1}^n: a set of fixed variables with assigned values.
///
/// The canonical base-3 key (one ternary digit per variable: 0 = fixed to 0,
/// 1 = fixed to 1, 2 = free) is unique per subcube and is used as the memo
/// key of every lattice DP in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Subcube {
    n: usize,
    fixed: u32,
    values: u32,
}

impl Subcube {
    /// The full cube (no variable fixed).
    pub fn full(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::TooLarge {
                what: "subcube",
                n,
                cap: MAX_VARS,
            });
        }
        Ok(Subcube {
            n,
            fixed: 0,
            values: 0,
        })
    }

    /// Fix one variable (0-based index) to a value.
    pub fn fix(mut self, var: usize, value: bool) -> Result<Self> {
        if var >= self.n {
            return Err(Error::VarOutOfRange { var, n: self.n });
        }
        self.fixed |= 1 << var;
        if value {
            self.values |= 1 << var;
        } else {
            self.values &= !(1 << var);
        }
        Ok(self)
    }

    pub fn from_assignments(n: usize, fixes: &[(usize, bool)]) -> Result<Self> {
        let mut rho = Subcube::full(n)?;
        for &(var, value) in fixes {
            rho = rho.fix(var, value)?;
        }
        Ok(rho)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn fixed_mask(&self) -> u32 {
        self.fixed
    }

    pub fn free_mask(&self) -> u32 {
        !self.fixed & ((1u32 << self.n) - 1)
    }

    /// Assigned values, packed at the fixed positions (0 elsewhere).
    pub fn values(&self) -> u32 {
        self.values
    }

    pub fn codim(&self) -> usize {
        self.fixed.count_ones() as usize
    }

    pub fn free_count(&self) -> usize {
        self.n - self.codim()
    }

    pub fn assignment(&self, var: usize) -> Option<bool> {
        (self.fixed >> var & 1 == 1).then(|| self.values >> var & 1 == 1)
    }

    pub fn free_vars(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&i| self.fixed >> i & 1 == 0)
    }

    /// Does the point with this table index lie in the subcube?
    pub fn contains(&self, index: usize) -> bool {
        index as u32 & self.fixed == self.values
    }

    /// Canonical ternary key.
    pub fn key(&self) -> usize {
        let mut key = 0;
        for i in (0..self.n).rev() {
            let digit = if self.fixed >> i & 1 == 0 {
                2
            } else {
                (self.values >> i & 1) as usize
            };
            key = key * 3 + digit;
        }
        key
    }

    pub fn from_key(n: usize, mut key: usize) -> Result<Self> {
        let mut rho = Subcube::full(n)?;
        for i in 0..n {
            let digit = key % 3;
            key /= 3;
            if digit < 2 {
                rho = rho.fix(i, digit == 1)?;
            }
        }
        Ok(rho)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_round_trip_is_canonical() {
        let n = 5;
        for key in 0..3usize.pow(n as u32) {
            let rho = Subcube::from_key(n, key).unwrap();
            assert_eq!(rho.key(), key);
        }
    }

    #[test]
    fn full_cube_has_codim_zero() {
        let rho = Subcube::full(4).unwrap();
        assert_eq!(rho.codim(), 0);
        assert_eq!(rho.free_count(), 4);
        assert!(rho.contains(0b1010));
    }

    #[test]
    fn fix_out_of_range() {
        assert!(Subcube::full(3).unwrap().fix(3, true).is_err());
    }

    #[test]
    fn contains_respects_assignment() {
        let rho = Subcube::from_assignments(4, &[(1, true), (3, false)]).unwrap();
        assert_eq!(rho.codim(), 2);
        assert!(rho.contains(0b0010));
        assert!(rho.contains(0b0011));
        assert!(!rho.contains(0b0000));
        assert!(!rho.contains(0b1010));
    }
}
