//! Constructors for the function families under study.
//!
//! Conventions (fixed once, used everywhere):
//! - x_1 is the least significant bit of the table index.
//! - GT input order is (x_1..x_n, y_1..y_n); x_n / y_n are most significant.
//! - OMB(0^n) = 0.
//! - IND input order is (x_1..x_m addressing, y_1..y_{2^m} targets) with
//!   bin(x) = 1 + sum 2^{i-1} x_i, so the all-zeros address selects y_1.
//! - Graph variables are the edges (u,v), u < v, in lexicographic order over
//!   vertices numbered 1..v.

use crate::error::{Error, Result};
use crate::table::{TruthTable, MAX_VARS};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    Xor { n: usize },
    And { n: usize },
    Or { n: usize },
    Maj { n: usize },
    Ind { m: usize },
    Symmetric { predicate: Vec<bool> },
    Gt { n: usize },
    Omb { n: usize },
    Conn { vertices: usize },
    Clique { vertices: usize, k: usize },
}

impl FamilySpec {
    /// Total number of input variables of the constructed function.
    pub fn var_count(&self) -> usize {
        match *self {
            FamilySpec::Xor { n }
            | FamilySpec::And { n }
            | FamilySpec::Or { n }
            | FamilySpec::Maj { n }
            | FamilySpec::Omb { n } => n,
            FamilySpec::Gt { n } => 2 * n,
            FamilySpec::Ind { m } => m + (1 << m),
            FamilySpec::Symmetric { ref predicate } => predicate.len().saturating_sub(1),
            FamilySpec::Conn { vertices } => vertices * (vertices - 1) / 2,
            FamilySpec::Clique { vertices, .. } => vertices * (vertices - 1) / 2,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Xor { .. } => "xor",
            FamilySpec::And { .. } => "and",
            FamilySpec::Or { .. } => "or",
            FamilySpec::Maj { .. } => "maj",
            FamilySpec::Ind { .. } => "ind",
            FamilySpec::Symmetric { .. } => "symmetric",
            FamilySpec::Gt { .. } => "gt",
            FamilySpec::Omb { .. } => "omb",
            FamilySpec::Conn { .. } => "conn",
            FamilySpec::Clique { .. } => "clique",
        }
    }

    pub fn build(&self) -> Result<TruthTable> {
        self.validate()?;
        match *self {
            FamilySpec::Xor { n } => TruthTable::from_fn(n, |idx| idx.count_ones() % 2 == 1),
            FamilySpec::And { n } => TruthTable::from_fn(n, |idx| idx == (1 << n) - 1),
            FamilySpec::Or { n } => TruthTable::from_fn(n, |idx| idx != 0),
            // 1 iff the number of 1's is at least the number of 0's
            FamilySpec::Maj { n } => {
                TruthTable::from_fn(n, |idx| 2 * idx.count_ones() as usize >= n)
            }
            FamilySpec::Ind { m } => {
                let n = m + (1 << m);
                TruthTable::from_fn(n, |idx| {
                    let address = idx & ((1 << m) - 1);
                    // bin(x) in [2^m], 1-indexed; target y_bin(x) is variable
                    // m + bin(x) - 1, i.e. bit m + address.
                    idx >> (m + address) & 1 == 1
                })
            }
            FamilySpec::Symmetric { ref predicate } => {
                let n = predicate.len() - 1;
                let predicate = predicate.clone();
                TruthTable::from_fn(n, |idx| predicate[idx.count_ones() as usize])
            }
            FamilySpec::Gt { n } => {
                // Both halves share the bit order of the table index, so the
                // comparison is a plain integer comparison.
                let mask = (1usize << n) - 1;
                TruthTable::from_fn(2 * n, |idx| (idx & mask) > (idx >> n))
            }
            FamilySpec::Omb { n } => TruthTable::from_fn(n, |idx| {
                if idx == 0 {
                    return false;
                }
                let top = usize::BITS as usize - 1 - idx.leading_zeros() as usize;
                // variable index top+1 must be odd
                top.is_multiple_of(2)
            }),
            FamilySpec::Conn { vertices } => {
                let n = vertices * (vertices - 1) / 2;
                TruthTable::from_fn(n, |idx| is_connected(vertices, idx))
            }
            FamilySpec::Clique { vertices, k } => {
                let n = vertices * (vertices - 1) / 2;
                TruthTable::from_fn(n, |idx| has_clique(vertices, k, idx))
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::FamilyParams(msg));
        match *self {
            FamilySpec::Xor { n }
            | FamilySpec::And { n }
            | FamilySpec::Or { n }
            | FamilySpec::Maj { n }
            | FamilySpec::Omb { n } => {
                if n == 0 || n > MAX_VARS {
                    return bad(format!("{} requires 1 <= n <= {MAX_VARS}", self.name()));
                }
            }
            FamilySpec::Gt { n } => {
                if n == 0 || 2 * n > MAX_VARS {
                    return bad(format!("gt requires 1 <= n <= {}", MAX_VARS / 2));
                }
            }
            FamilySpec::Ind { m } => {
                if m == 0 || m + (1 << m) > MAX_VARS {
                    return bad("ind requires 1 <= m <= 4".into());
                }
            }
            FamilySpec::Symmetric { ref predicate } => {
                let n = predicate.len().saturating_sub(1);
                if n == 0 || n > MAX_VARS {
                    return bad(format!(
                        "symmetric predicate needs n+1 values with 1 <= n <= {MAX_VARS}"
                    ));
                }
            }
            FamilySpec::Conn { vertices } => {
                if vertices < 2 || vertices * (vertices - 1) / 2 > MAX_VARS {
                    return bad("conn requires 2 <= vertices <= 6".into());
                }
            }
            FamilySpec::Clique { vertices, k } => {
                if vertices < 2 || vertices * (vertices - 1) / 2 > MAX_VARS {
                    return bad("clique requires 2 <= vertices <= 6".into());
                }
                if k < 2 || k > vertices {
                    return bad("clique requires 2 <= k <= vertices".into());
                }
            }
        }
        Ok(())
    }
}

/// Lexicographic edge order: (1,2), (1,3), ..., (1,v), (2,3), ...
/// Vertices are 0-based internally.
pub fn edge_pairs(vertices: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(vertices * (vertices - 1) / 2);
    for u in 0..vertices {
        for v in u + 1..vertices {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Variable index of the edge (u,v), u < v, under the lexicographic order.
pub fn edge_index(vertices: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < vertices);
    // edges with smaller first endpoint come first
    let before = (0..u).map(|a| vertices - 1 - a).sum::<usize>();
    before + (v - u - 1)
}

fn is_connected(vertices: usize, graph: usize) -> bool {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for (i, (u, v)) in edge_pairs(vertices).into_iter().enumerate() {
        if graph >> i & 1 == 1 {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            parent[ru] = rv;
        }
    }
    let root = find(&mut parent, 0);
    (1..vertices).all(|v| find(&mut parent, v) == root)
}

fn has_clique(vertices: usize, k: usize, graph: usize) -> bool {
    // check every k-subset of vertices
    'subsets: for subset in 0usize..1 << vertices {
        if subset.count_ones() as usize != k {
            continue;
        }
        for u in 0..vertices {
            if subset >> u & 1 == 0 {
                continue;
            }
            for v in u + 1..vertices {
                if subset >> v & 1 == 0 {
                    continue;
                }
                if graph >> edge_index(vertices, u, v) & 1 == 0 {
                    continue 'subsets;
                }
            }
        }
        return true;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maj3_is_threshold_two() {
        let maj3 = FamilySpec::Maj { n: 3 }.build().unwrap();
        for idx in 0..8 {
            assert_eq!(maj3.value(idx), idx.count_ones() >= 2);
        }
    }

    #[test]
    fn gt1_table() {
        let gt1 = FamilySpec::Gt { n: 1 }.build().unwrap();
        // f(x_1, y_1) = 1 iff x_1 = 1 and y_1 = 0
        for idx in 0..4 {
            let (x, y) = (idx & 1, idx >> 1);
            assert_eq!(gt1.value(idx), x == 1 && y == 0);
        }
    }

    #[test]
    fn gt_diagonal_is_zero() {
        for n in 1..=6 {
            let gt = FamilySpec::Gt { n }.build().unwrap();
            for x in 0..1usize << n {
                assert!(!gt.value(x | (x << n)));
            }
        }
    }

    #[test]
    fn conn3_counts() {
        // brute-force oracle: a 3-vertex graph is connected iff it has >= 2
        // edges (any two of the three possible edges share a vertex)
        let conn = FamilySpec::Conn { vertices: 3 }.build().unwrap();
        let ones = (0..8).filter(|&g| conn.value(g)).count();
        assert_eq!(ones, 4);
        for g in 0..8usize {
            assert_eq!(conn.value(g), g.count_ones() >= 2);
        }
    }

    #[test]
    fn clique2_is_or_over_edges() {
        for vertices in 2..=5 {
            let cl2 = FamilySpec::Clique { vertices, k: 2 }.build().unwrap();
            let or = FamilySpec::Or {
                n: vertices * (vertices - 1) / 2,
            }
            .build()
            .unwrap();
            assert_eq!(cl2, or);
        }
    }

    #[test]
    fn ind_addressing_convention() {
        let ind2 = FamilySpec::Ind { m: 2 }.build().unwrap();
        // address x = 00 -> bin = 1 -> target y_1 (variable index 2)
        for target in 0..4usize {
            for tv in [false, true] {
                let mut idx = 0usize;
                if tv {
                    idx |= 1 << (2 + target);
                }
                idx |= target; // address bits select y_{target+1}
                assert_eq!(ind2.value(idx), tv);
            }
        }
    }

    #[test]
    fn edge_index_is_lexicographic() {
        assert_eq!(edge_pairs(4), vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        for (i, (u, v)) in edge_pairs(5).into_iter().enumerate() {
            assert_eq!(edge_index(5, u, v), i);
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(FamilySpec::Clique { vertices: 4, k: 5 }.build().is_err());
        assert!(FamilySpec::Clique { vertices: 4, k: 1 }.build().is_err());
        assert!(FamilySpec::Conn { vertices: 1 }.build().is_err());
        assert!(FamilySpec::Xor { n: 0 }.build().is_err());
        assert!(FamilySpec::Gt { n: 11 }.build().is_err());
    }
}
