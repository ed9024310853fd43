//! Whole-lattice constancy classification over all 3^n subcubes.
//!
//! Every solver in this crate (cmin, decision-tree depth, per-input
//! certificates, the budget-feasibility recursion) is a dynamic program over
//! this lattice, keyed by the canonical ternary subcube key.

use crate::error::{Error, Result};
use crate::subcube::Subcube;
use crate::table::TruthTable;

/// Default cap for 3^n dynamic programs.
pub const LATTICE_MAX: usize = 13;
/// Raised cap for explicitly requested long-running solves.
pub const LATTICE_MAX_SLOW: usize = 15;

pub const NOT_CONSTANT: u8 = 2;

pub struct ConstancyLattice {
    n: usize,
    pow3: Vec<usize>,
    /// Per subcube key: 0 or 1 if f is constant with that value, 2 otherwise.
    class: Vec<u8>,
}

impl ConstancyLattice {
    pub fn build(f: &TruthTable) -> Result<Self> {
        Self::build_with_cap(f, LATTICE_MAX)
    }

    pub fn build_slow(f: &TruthTable) -> Result<Self> {
        Self::build_with_cap(f, LATTICE_MAX_SLOW)
    }

    fn build_with_cap(f: &TruthTable, cap: usize) -> Result<Self> {
        let n = f.n();
        if n > cap {
            return Err(Error::TooLarge {
                what: "subcube lattice",
                n,
                cap,
            });
        }
        let pow3: Vec<usize> = std::iter::successors(Some(1usize), |&p| Some(p * 3))
            .take(n + 1)
            .collect();
        let mut class = vec![0u8; pow3[n]];
        // Children (one more variable fixed) always have smaller keys, so a
        // single ascending pass suffices. A subcube is constant iff both
        // children along any one free variable are constant with equal value;
        // since 2 == 2 propagates, the match below covers that too.
        for key in 0..pow3[n] {
            let mut k = key;
            let mut point = 0usize;
            let mut lowest_free = None;
            for i in 0..n {
                match k % 3 {
                    2 => {
                        lowest_free = Some(i);
                        break;
                    }
                    1 => point |= 1 << i,
                    _ => {}
                }
                k /= 3;
            }
            class[key] = match lowest_free {
                None => f.value(point) as u8,
                Some(i) => {
                    let c0 = class[key - 2 * pow3[i]];
                    let c1 = class[key - pow3[i]];
                    if c0 == c1 {
                        c0
                    } else {
                        NOT_CONSTANT
                    }
                }
            };
        }
        Ok(ConstancyLattice { n, pow3, class })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn key_count(&self) -> usize {
        self.pow3[self.n]
    }

    pub fn pow3(&self, i: usize) -> usize {
        self.pow3[i]
    }

    /// Raw classification by key: 0, 1, or [`NOT_CONSTANT`].
    pub fn classify_key(&self, key: usize) -> u8 {
        self.class[key]
    }

    /// Lattice-DP route of the constancy test.
    pub fn constant_on(&self, rho: &Subcube) -> Option<bool> {
        match self.class[rho.key()] {
            NOT_CONSTANT => None,
            v => Some(v == 1),
        }
    }

    /// Minimum certificate complexity: n minus the maximum number of free
    /// variables over all constant subcubes.
    pub fn min_certificate(&self) -> u32 {
        let mut max_free = 0usize;
        for key in 0..self.key_count() {
            if self.class[key] == NOT_CONSTANT {
                continue;
            }
            let free = free_digit_count(key, self.n);
            max_free = max_free.max(free);
            if max_free == self.n {
                break;
            }
        }
        (self.n - max_free) as u32
    }

    /// C(f,x) for every input x, as the minimum co-dimension over constant
    /// subcubes containing x. Only subcubes that are minimal (no fixed
    /// variable can be freed while staying constant) relax anything.
    pub fn per_input_certificates(&self) -> Vec<u32> {
        let n = self.n;
        let mut best = vec![n as u32; 1 << n];
        'keys: for key in 0..self.key_count() {
            if self.class[key] == NOT_CONSTANT {
                continue;
            }
            let mut k = key;
            let mut base = 0usize;
            let mut free_mask = 0usize;
            let mut codim = 0u32;
            for i in 0..n {
                let d = k % 3;
                k /= 3;
                match d {
                    2 => free_mask |= 1 << i,
                    d => {
                        // skip non-minimal subcubes: freeing a fixed
                        // variable that keeps the subcube constant means a
                        // strictly better subcube relaxes the same points
                        if self.class[key + (2 - d) * self.pow3[i]] != NOT_CONSTANT {
                            continue 'keys;
                        }
                        codim += 1;
                        if d == 1 {
                            base |= 1 << i;
                        }
                    }
                }
            }
            let mut sub = free_mask;
            loop {
                let idx = base | sub;
                if codim < best[idx] {
                    best[idx] = codim;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free_mask;
            }
        }
        best
    }

    /// Minimum decision-tree depth, by the memoized minimax recursion
    /// DT(rho) = 0 if constant, else 1 + min over free i of
    /// max(DT(rho, x_i=0), DT(rho, x_i=1)).
    pub fn decision_tree_depth(&self) -> u32 {
        let n = self.n;
        let mut depth = vec![0u8; self.key_count()];
        for key in 0..self.key_count() {
            if self.class[key] != NOT_CONSTANT {
                continue;
            }
            let mut k = key;
            let mut best = u8::MAX;
            for i in 0..n {
                let d = k % 3;
                k /= 3;
                if d == 2 {
                    let d0 = depth[key - 2 * self.pow3[i]];
                    let d1 = depth[key - self.pow3[i]];
                    best = best.min(1 + d0.max(d1));
                }
            }
            depth[key] = best;
        }
        depth[self.key_count() - 1] as u32
    }
}

pub(crate) fn free_digit_count(mut key: usize, n: usize) -> usize {
    let mut free = 0;
    for _ in 0..n {
        if key % 3 == 2 {
            free += 1;
        }
        key /= 3;
    }
    free
}
