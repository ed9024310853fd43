//! Möbius expansion (unique multilinear polynomial) and degree.

use crate::error::{Error, Result};
use crate::table::{TruthTable, MAX_VARS};

/// Integer Möbius coefficients, indexed by variable-subset bitmask.
///
/// Reconstruction identity: f(x) = sum over S subseteq supp(x) of coef[S].
pub struct MobiusExpansion {
    n: usize,
    coefficients: Vec<i64>,
}

impl MobiusExpansion {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, subset: usize) -> i64 {
        self.coefficients[subset]
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn degree(&self) -> u32 {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(s, _)| s.count_ones())
            .max()
            .unwrap_or(0)
    }

    /// Evaluate the polynomial at a 0/1 point given by its table index.
    pub fn evaluate(&self, index: usize) -> i64 {
        let mut sum = 0i64;
        let mut sub = index;
        loop {
            sum += self.coefficients[sub];
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & index;
        }
        sum
    }
}

/// Compute the Möbius coefficients by the in-place subset transform.
pub fn mobius(f: &TruthTable) -> Result<MobiusExpansion> {
    let n = f.n();
    if n > MAX_VARS {
        return Err(Error::TooLarge {
            what: "mobius transform",
            n,
            cap: MAX_VARS,
        });
    }
    let mut coefficients: Vec<i64> = (0..f.len()).map(|i| f.value(i) as i64).collect();
    for i in 0..n {
        for mask in 0..f.len() {
            if mask >> i & 1 == 1 {
                coefficients[mask] -= coefficients[mask ^ (1 << i)];
            }
        }
    }
    Ok(MobiusExpansion { n, coefficients })
}

/// deg(f): maximum size of a monomial with non-zero coefficient; 0 for
/// constant functions.
pub fn degree(f: &TruthTable) -> Result<u32> {
    Ok(mobius(f)?.degree())
}
