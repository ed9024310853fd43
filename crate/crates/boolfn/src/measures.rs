//! Certificate complexity, decision-tree complexity, and the closed-form
//! minimum-certificate values for symmetric functions and graph properties.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::lattice::ConstancyLattice;
use crate::subcube::Subcube;
use crate::table::TruthTable;

/// Cap for the exhaustive per-input subset search.
pub const CERT_SEARCH_MAX: usize = 16;

/// C(f,x): minimum size of a variable set whose values at x force f.
///
/// Subsets are searched in ascending size, lexicographic within a size, and
/// the first hit wins, so the witness is deterministic.
pub fn certificate_complexity(f: &TruthTable, x: &[bool]) -> Result<u32> {
    certificate_with_witness(f, x).map(|(c, _)| c)
}

pub fn certificate_with_witness(f: &TruthTable, x: &[bool]) -> Result<(u32, Vec<usize>)> {
    let n = f.n();
    if n > CERT_SEARCH_MAX {
        return Err(Error::TooLarge {
            what: "certificate search",
            n,
            cap: CERT_SEARCH_MAX,
        });
    }
    if x.len() != n {
        return Err(Error::InputShape {
            expected: n,
            got: x.len(),
        });
    }
    for size in 0..=n {
        for subset in (0..n).combinations(size) {
            let rho = Subcube::from_assignments(
                n,
                &subset.iter().map(|&i| (i, x[i])).collect::<Vec<_>>(),
            )?;
            if f.constant_on(&rho)?.is_some() {
                return Ok((size as u32, subset));
            }
        }
    }
    unreachable!("fixing all variables always yields a constant subcube")
}

/// C(f) = max over inputs of C(f,x).
pub fn certificate_complexity_max(f: &TruthTable) -> Result<u32> {
    Ok(*per_input_certificates(f)?.iter().max().unwrap())
}

/// C_min(f) = min over inputs of C(f,x), via the lattice DP when it fits.
pub fn min_certificate_complexity(f: &TruthTable) -> Result<u32> {
    if f.n() <= crate::lattice::LATTICE_MAX {
        Ok(ConstancyLattice::build(f)?.min_certificate())
    } else {
        Ok(*per_input_certificates(f)?.iter().min().unwrap())
    }
}

/// C(f,x) for all 2^n inputs, choosing the lattice route when possible and
/// the per-input subset search otherwise.
pub fn per_input_certificates(f: &TruthTable) -> Result<Vec<u32>> {
    if f.n() <= crate::lattice::LATTICE_MAX {
        Ok(ConstancyLattice::build(f)?.per_input_certificates())
    } else {
        (0..f.len())
            .map(|idx| certificate_complexity(f, &crate::table::point(f.n(), idx)))
            .collect()
    }
}

/// DT(f): minimum depth of a decision tree computing f.
pub fn decision_tree_complexity(f: &TruthTable) -> Result<u32> {
    Ok(ConstancyLattice::build(f)?.decision_tree_depth())
}

/// End points of the largest Hamming-weight interval on which a symmetric
/// predicate is constant. Among maximal-length intervals the one with the
/// smallest lower end is returned.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SymmetricInterval {
    pub ell0: usize,
    pub ell1: usize,
}

pub fn symmetric_interval(predicate: &[bool]) -> SymmetricInterval {
    assert!(!predicate.is_empty());
    let mut best = SymmetricInterval { ell0: 0, ell1: 0 };
    let mut start = 0;
    for i in 1..=predicate.len() {
        if i == predicate.len() || predicate[i] != predicate[start] {
            if i - 1 - start > best.ell1 - best.ell0 {
                best = SymmetricInterval {
                    ell0: start,
                    ell1: i - 1,
                };
            }
            start = i;
        }
    }
    best
}

/// C_min of the symmetric function with this predicate over n = len-1
/// variables: ell0 + n - ell1.
pub fn cmin_symmetric(predicate: &[bool]) -> u32 {
    let n = predicate.len() - 1;
    let iv = symmetric_interval(predicate);
    (iv.ell0 + n - iv.ell1) as u32
}

/// Maximum edge count of an n-vertex graph with no k-clique, floored to an
/// integer: floor(n^2 (k-2) / (2 (k-1))).
pub fn turan_bound(vertices: usize, k: usize) -> Result<u64> {
    if k < 2 || k > vertices {
        return Err(Error::FamilyParams(
            "turan bound requires 2 <= k <= vertices".into(),
        ));
    }
    let (n, k) = (vertices as u64, k as u64);
    Ok(n * n * (k - 2) / (2 * (k - 1)))
}

/// C_min(CL_k) = min(binom(k,2), binom(n,2) - turan_bound(n,k)).
pub fn cmin_clique_formula(vertices: usize, k: usize) -> Result<u64> {
    let t = turan_bound(vertices, k)?;
    let edges = binom2(vertices);
    Ok((binom2(k)).min(edges - t))
}

/// C_min(CONN) = n - 1.
pub fn cmin_conn_formula(vertices: usize) -> Result<u64> {
    if vertices < 2 {
        return Err(Error::FamilyParams("conn requires vertices >= 2".into()));
    }
    Ok(vertices as u64 - 1)
}

pub fn binom2(n: usize) -> u64 {
    (n as u64) * (n as u64 - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn certificate_examples() {
        let omb3 = FamilySpec::Omb { n: 3 }.build().unwrap();
        assert_eq!(certificate_complexity(&omb3, &bits("000")).unwrap(), 2);

        let gt2 = FamilySpec::Gt { n: 2 }.build().unwrap();
        // any input with x = y needs all n pairs touched
        assert_eq!(certificate_complexity(&gt2, &bits("1010")).unwrap(), 2);

        let one = TruthTable::constant(3, true).unwrap();
        assert_eq!(certificate_complexity(&one, &bits("010")).unwrap(), 0);
    }

    #[test]
    fn certificate_max_examples() {
        let and3 = FamilySpec::And { n: 3 }.build().unwrap();
        assert_eq!(certificate_complexity_max(&and3).unwrap(), 3);
        let xor4 = FamilySpec::Xor { n: 4 }.build().unwrap();
        assert_eq!(certificate_complexity_max(&xor4).unwrap(), 4);
        let or3 = FamilySpec::Or { n: 3 }.build().unwrap();
        assert_eq!(certificate_complexity_max(&or3).unwrap(), 3);
    }

    #[test]
    fn dt_examples() {
        let gt2 = FamilySpec::Gt { n: 2 }.build().unwrap();
        assert_eq!(decision_tree_complexity(&gt2).unwrap(), 4);
        let omb5 = FamilySpec::Omb { n: 5 }.build().unwrap();
        assert_eq!(decision_tree_complexity(&omb5).unwrap(), 5);
        let conn4 = FamilySpec::Conn { vertices: 4 }.build().unwrap();
        assert_eq!(decision_tree_complexity(&conn4).unwrap(), 6);
    }

    #[test]
    fn symmetric_interval_examples() {
        // MAJ_3: ties broken towards the smaller lower end
        let iv = symmetric_interval(&bits("0011"));
        assert_eq!(iv, SymmetricInterval { ell0: 0, ell1: 1 });
        assert_eq!(cmin_symmetric(&bits("0011")), 2);

        // XOR predicates alternate; every interval has length one
        for n in 2..=8usize {
            let pred: Vec<bool> = (0..=n).map(|w| w % 2 == 1).collect();
            assert_eq!(cmin_symmetric(&pred), n as u32);
        }

        assert_eq!(cmin_symmetric(&bits("11111")), 0);
    }

    #[test]
    fn graph_formulas() {
        assert_eq!(cmin_conn_formula(4).unwrap(), 3);
        assert_eq!(turan_bound(6, 3).unwrap(), 9);
        assert_eq!(cmin_clique_formula(6, 3).unwrap(), 3);
        // regime where the Turan side is the minimum
        assert_eq!(cmin_clique_formula(4, 3).unwrap(), 2);
    }

    #[test]
    fn conn_formula_matches_brute_force() {
        for vertices in 2..=4 {
            let conn = FamilySpec::Conn { vertices }.build().unwrap();
            assert_eq!(
                min_certificate_complexity(&conn).unwrap() as u64,
                cmin_conn_formula(vertices).unwrap()
            );
        }
    }

    #[test]
    fn clique_formula_matches_brute_force() {
        for (vertices, k) in [(3, 2), (4, 2), (4, 3), (5, 3), (5, 4)] {
            let cl = FamilySpec::Clique { vertices, k }.build().unwrap();
            assert_eq!(
                min_certificate_complexity(&cl).unwrap() as u64,
                cmin_clique_formula(vertices, k).unwrap(),
                "vertices={vertices} k={k}"
            );
        }
    }

    #[test]
    fn cmin_symmetric_matches_brute_force_exhaustively() {
        for n in 1..=6usize {
            for p in 0..1u32 << (n + 1) {
                let pred: Vec<bool> = (0..=n).map(|w| p >> w & 1 == 1).collect();
                let f = FamilySpec::Symmetric {
                    predicate: pred.clone(),
                }
                .build()
                .unwrap();
                assert_eq!(
                    cmin_symmetric(&pred),
                    min_certificate_complexity(&f).unwrap(),
                    "n={n} predicate={p:b}"
                );
            }
        }
    }

    #[test]
    fn omb_per_input_class_formulas() {
        // per-input certificate values for odd n, by input class
        for n in [3usize, 5, 7] {
            let omb = FamilySpec::Omb { n }.build().unwrap();
            let certs = per_input_certificates(&omb).unwrap();
            assert_eq!(certs[0] as usize, n.div_ceil(2));
            #[allow(clippy::needless_range_loop)] // index doubles as the input bit pattern
            for idx in 1..1usize << n {
                let top = usize::BITS as usize - 1 - idx.leading_zeros() as usize;
                let max_one = top + 1; // 1-based variable index
                let i = n - max_one;
                let expect = if max_one % 2 == 1 {
                    (i + 2) / 2
                } else {
                    (i + 3) / 2
                };
                assert_eq!(certs[idx] as usize, expect, "n={n} idx={idx:b}");
            }
        }
    }

    #[test]
    fn gt_per_input_certificate_bounds() {
        for n in 1..=4usize {
            let gt = FamilySpec::Gt { n }.build().unwrap();
            let certs = per_input_certificates(&gt).unwrap();
            let mask = (1usize << n) - 1;
            #[allow(clippy::needless_range_loop)] // index doubles as the input bit pattern
            for idx in 0..1usize << (2 * n) {
                let (x, y) = (idx & mask, idx >> n);
                if x == y {
                    assert_eq!(certs[idx] as usize, n);
                } else {
                    let top = usize::BITS as usize - 1 - (x ^ y).leading_zeros() as usize;
                    let j = n - (top + 1);
                    assert!(
                        (certs[idx] as usize) == j + 1 || (certs[idx] as usize) == j + 2,
                        "n={n} idx={idx:b} cert={} j={j}",
                        certs[idx]
                    );
                }
            }
        }
    }
}
