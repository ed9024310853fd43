//! Explicit truth-table representation of a Boolean function.
//!
//! Index convention used throughout the crate: variable `x_1` (library index
//! 0) is the least significant bit of the table index, so `f(x)` lives at
//! index `sum_i x_{i+1} << i`.

use crate::error::{Error, Result};
use crate::subcube::Subcube;

/// Hard cap on variable count for core operations (table of 2^20 bits).
pub const MAX_VARS: usize = 20;

/// A Boolean function f: {0,1}^n -> {0,1} stored as all 2^n output bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: usize,
    bits: Vec<bool>,
}

impl TruthTable {
    pub fn from_fn(n: usize, f: impl FnMut(usize) -> bool) -> Result<Self> {
        check_var_count(n)?;
        let bits = (0..1usize << n).map(f).collect();
        Ok(TruthTable { n, bits })
    }

    pub fn from_bits(n: usize, bits: Vec<bool>) -> Result<Self> {
        check_var_count(n)?;
        if bits.len() != 1 << n {
            return Err(Error::ParseTable(format!(
                "expected {} entries for n={n}, got {}",
                1usize << n,
                bits.len()
            )));
        }
        Ok(TruthTable { n, bits })
    }

    pub fn constant(n: usize, value: bool) -> Result<Self> {
        Self::from_fn(n, |_| value)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Output at a table index (the packed input, x_1 least significant).
    pub fn value(&self, index: usize) -> bool {
        self.bits[index]
    }

    pub fn eval(&self, x: &[bool]) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::InputShape {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok(self.bits[index_of(x)])
    }

    pub fn is_constant(&self) -> Option<bool> {
        let v = self.bits[0];
        self.bits.iter().all(|&b| b == v).then_some(v)
    }

    /// Direct-scan constancy test on a subcube.
    ///
    /// The lattice DP in [`crate::lattice`] computes the same predicate for
    /// every subcube at once; the two routes are cross-checked in tests.
    pub fn constant_on(&self, rho: &Subcube) -> Result<Option<bool>> {
        self.check_subcube(rho)?;
        let base = rho.values() as usize;
        let free = rho.free_mask() as usize;
        let first = self.bits[base | free];
        let mut sub = free;
        loop {
            sub = (sub.wrapping_sub(1)) & free;
            if self.bits[base | sub] != first {
                return Ok(None);
            }
            if sub == 0 {
                break;
            }
        }
        Ok(Some(first))
    }

    /// Subfunction on the free variables of `rho`, kept in ascending order.
    pub fn restrict(&self, rho: &Subcube) -> Result<TruthTable> {
        self.check_subcube(rho)?;
        let free: Vec<usize> = rho.free_vars().collect();
        let base = rho.values() as usize;
        let bits = (0..1usize << free.len())
            .map(|sub| {
                let mut idx = base;
                for (j, &v) in free.iter().enumerate() {
                    if sub >> j & 1 == 1 {
                        idx |= 1 << v;
                    }
                }
                self.bits[idx]
            })
            .collect();
        Ok(TruthTable {
            n: free.len(),
            bits,
        })
    }

    /// If f depends only on Hamming weight, return its predicate as the
    /// n+1 values D_f(0..=n); otherwise `None`. Inputs are grouped by
    /// weight, so this is a single pass over the table.
    pub fn symmetric_predicate(&self) -> Option<Vec<bool>> {
        let mut pred: Vec<Option<bool>> = vec![None; self.n + 1];
        for (idx, &b) in self.bits.iter().enumerate() {
            let w = idx.count_ones() as usize;
            match pred[w] {
                None => pred[w] = Some(b),
                Some(p) if p != b => return None,
                _ => {}
            }
        }
        Some(pred.into_iter().map(|p| p.unwrap()).collect())
    }

    /// Parse the text format: line `n=<k>` followed by 2^k characters from
    /// {0,1}; whitespace anywhere is ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rest = text.trim_start();
        if !rest.starts_with("n=") {
            return Err(Error::ParseTable("expected leading `n=<k>`".into()));
        }
        rest = &rest[2..];
        let num_end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        let n: usize = rest[..num_end]
            .parse()
            .map_err(|_| Error::ParseTable("bad variable count".into()))?;
        check_var_count(n)?;
        let mut bits = Vec::with_capacity(1 << n);
        for c in rest[num_end..].chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                c if c.is_whitespace() => {}
                c => {
                    return Err(Error::ParseTable(format!("unexpected character {c:?}")));
                }
            }
        }
        Self::from_bits(n, bits)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("n={}\n", self.n);
        s.extend(self.bits.iter().map(|&b| if b { '1' } else { '0' }));
        s.push('\n');
        s
    }

    fn check_subcube(&self, rho: &Subcube) -> Result<()> {
        if rho.n() != self.n {
            return Err(Error::InputShape {
                expected: self.n,
                got: rho.n(),
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TruthTable(n={}, ", self.n)?;
        for &b in &self.bits {
            write!(f, "{}", b as u8)?;
        }
        write!(f, ")")
    }
}

/// Table index of an input given as bits, x_1 first (least significant).
pub fn index_of(x: &[bool]) -> usize {
    x.iter()
        .enumerate()
        .fold(0, |acc, (i, &b)| acc | ((b as usize) << i))
}

/// Inverse of [`index_of`].
pub fn point(n: usize, index: usize) -> Vec<bool> {
    (0..n).map(|i| index >> i & 1 == 1).collect()
}

fn check_var_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::TooLarge {
            what: "truth table",
            n,
            cap: MAX_VARS,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn eval_examples() {
        let and2 = FamilySpec::And { n: 2 }.build().unwrap();
        assert!(and2.eval(&bits("11")).unwrap());
        let xor3 = FamilySpec::Xor { n: 3 }.build().unwrap();
        assert!(!xor3.eval(&bits("101")).unwrap());
        let omb3 = FamilySpec::Omb { n: 3 }.build().unwrap();
        // max index with value 1 is x_1, odd
        assert!(omb3.eval(&bits("100")).unwrap());
    }

    #[test]
    fn eval_shape_error() {
        let and2 = FamilySpec::And { n: 2 }.build().unwrap();
        assert!(matches!(
            and2.eval(&bits("111")),
            Err(Error::InputShape { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn restrict_examples() {
        let xor2 = FamilySpec::Xor { n: 2 }.build().unwrap();
        let rho = Subcube::full(2).unwrap().fix(1, true).unwrap();
        let not1 = xor2.restrict(&rho).unwrap();
        assert_eq!(not1.n(), 1);
        assert!(not1.value(0) && !not1.value(1));

        let and3 = FamilySpec::And { n: 3 }.build().unwrap();
        let rho = Subcube::full(3).unwrap().fix(2, false).unwrap();
        assert_eq!(and3.restrict(&rho).unwrap().is_constant(), Some(false));

        let maj3 = FamilySpec::Maj { n: 3 }.build().unwrap();
        let rho = Subcube::full(3).unwrap().fix(0, true).unwrap();
        let or2 = FamilySpec::Or { n: 2 }.build().unwrap();
        assert_eq!(maj3.restrict(&rho).unwrap(), or2);
    }

    #[test]
    fn constant_on_examples() {
        let and3 = FamilySpec::And { n: 3 }.build().unwrap();
        let rho = Subcube::full(3).unwrap().fix(0, false).unwrap();
        assert_eq!(and3.constant_on(&rho).unwrap(), Some(false));

        let xor3 = FamilySpec::Xor { n: 3 }.build().unwrap();
        let rho = Subcube::from_assignments(3, &[(0, false), (1, false)]).unwrap();
        assert_eq!(xor3.constant_on(&rho).unwrap(), None);

        // symmetric predicate constant on weights [2,3] over n=3: fixing two
        // ones pins the weight inside the interval
        let f = FamilySpec::Symmetric {
            predicate: bits("0011"),
        }
        .build()
        .unwrap();
        let rho = Subcube::from_assignments(3, &[(0, true), (1, true)]).unwrap();
        assert_eq!(f.constant_on(&rho).unwrap(), Some(true));
    }

    #[test]
    fn symmetric_predicate_examples() {
        let xor3 = FamilySpec::Xor { n: 3 }.build().unwrap();
        assert_eq!(xor3.symmetric_predicate(), Some(bits("0101")));
        let and2 = FamilySpec::And { n: 2 }.build().unwrap();
        assert_eq!(and2.symmetric_predicate(), Some(bits("001")));
        let ind1 = FamilySpec::Ind { m: 1 }.build().unwrap();
        assert_eq!(ind1.symmetric_predicate(), None);
    }

    #[test]
    fn text_format_round_trip() {
        let maj3 = FamilySpec::Maj { n: 3 }.build().unwrap();
        let text = maj3.to_text();
        assert_eq!(TruthTable::parse(&text).unwrap(), maj3);
        // whitespace tolerant
        assert_eq!(TruthTable::parse("n=2\n 01 1\t1\n").unwrap().n(), 2);
        assert!(TruthTable::parse("n=2\n011").is_err());
        assert!(TruthTable::parse("x=2\n0111").is_err());
    }
}
