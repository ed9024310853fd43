//! Explicit query algorithms for specific families, and the Greater-Than
//! adversary.
//!
//! The GT and OMB trees are the most-significant-bit-first scanning
//! algorithms; both are gated by an exhaustive computes-check in tests.

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::table::TruthTable;
use crate::tree::{DecisionTree, QueryAlgorithm};

/// The Greater-Than scanning tree on 2n variables (x_1..x_n, y_1..y_n).
///
/// At level l it queries x_l; on x_l = 0 it can stop with output 0 only at
/// the bottom level, otherwise it queries y_l and either decides (bits
/// differ) or recurses on the remaining lower-order pairs.
pub fn gt_tree(n: usize) -> DecisionTree {
    fn build(level: usize, n: usize) -> DecisionTree {
        let x = level - 1;
        let y = n + level - 1;
        if level == 1 {
            // x_1 = 0 already decides: the only way to win is x_1=1, y_1=0
            DecisionTree::query(
                x,
                DecisionTree::leaf(false),
                DecisionTree::query(y, DecisionTree::leaf(true), DecisionTree::leaf(false)),
            )
        } else {
            DecisionTree::query(
                x,
                DecisionTree::query(y, build(level - 1, n), DecisionTree::leaf(false)),
                DecisionTree::query(y, DecisionTree::leaf(true), build(level - 1, n)),
            )
        }
    }
    assert!(n >= 1);
    build(n, n)
}

/// The Odd-Max-Bit scanning tree for odd n: query x_n (1 -> output 1), then
/// x_{n-1} (1 -> output 0), then recurse two levels down.
pub fn omb_tree(n: usize) -> Result<DecisionTree> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::FamilyParams(
            "the scanning tree for odd-max-bit is defined for odd n".into(),
        ));
    }
    fn build(level: usize) -> DecisionTree {
        if level == 1 {
            DecisionTree::query(0, DecisionTree::leaf(false), DecisionTree::leaf(true))
        } else {
            DecisionTree::query(
                level - 1,
                DecisionTree::query(level - 2, build(level - 2), DecisionTree::leaf(false)),
                DecisionTree::leaf(true),
            )
        }
    }
    Ok(build(n))
}

pub const IND_TREE_MAX_M: usize = 3;

/// Address-then-target tree for the indexing function: query the m
/// addressing bits, then the single addressed target.
pub fn ind_tree(m: usize) -> Result<DecisionTree> {
    if m == 0 || m > IND_TREE_MAX_M {
        return Err(Error::FamilyParams(format!(
            "ind tree requires 1 <= m <= {IND_TREE_MAX_M}"
        )));
    }
    fn build(m: usize, depth: usize, address: usize) -> DecisionTree {
        if depth == m {
            // bin(x) = 1 + address selects target variable m + address
            let target = m + address;
            DecisionTree::query(target, DecisionTree::leaf(false), DecisionTree::leaf(true))
        } else {
            DecisionTree::query(
                depth,
                build(m, depth + 1, address),
                build(m, depth + 1, address | 1 << depth),
            )
        }
    }
    Ok(build(m, 0, 0))
}

pub const NAIVE_MATERIALIZE_MAX: usize = 13;

/// Materialize the naive query-everything tree explicitly (2^{n+1}-1 nodes);
/// the lazy [`crate::tree::NaivePolicy`] is preferred for anything big.
pub fn materialize_naive(f: &TruthTable) -> Result<DecisionTree> {
    if f.n() > NAIVE_MATERIALIZE_MAX {
        return Err(Error::TooLarge {
            what: "materialized naive tree",
            n: f.n(),
            cap: NAIVE_MATERIALIZE_MAX,
        });
    }
    fn build(f: &TruthTable, depth: usize, index: usize) -> DecisionTree {
        if depth == f.n() {
            DecisionTree::leaf(f.value(index))
        } else {
            DecisionTree::query(
                depth,
                build(f, depth + 1, index),
                build(f, depth + 1, index | 1 << depth),
            )
        }
    }
    Ok(build(f, 0, 0))
}

/// Result of playing a query algorithm against the Greater-Than adversary.
pub struct AdversaryOutcome {
    /// Number of queries forced before the algorithm stopped.
    pub depth: u32,
    /// Ordered (variable, answer) transcript.
    pub transcript: Vec<(usize, bool)>,
    pub output: bool,
    /// If the algorithm stopped before 2n queries: two completions of the
    /// transcript (as table indices) on which Greater-Than disagrees,
    /// proving the algorithm wrong.
    pub refutation: Option<(usize, usize)>,
}

/// Play the Greater-Than adversary against a query algorithm on 2n
/// variables. Answer rules: a first-queried x_i gets 1, a first-queried y_i
/// gets 0, and the second of a pair copies its partner.
pub fn run_gt_adversary(n: usize, alg: &dyn QueryAlgorithm) -> Result<AdversaryOutcome> {
    if alg.var_count() > 2 * n {
        return Err(Error::VarOutOfRange {
            var: alg.var_count() - 1,
            n: 2 * n,
        });
    }
    let mut answered: Vec<Option<bool>> = vec![None; 2 * n];
    let run = alg.run(&mut |var| {
        let partner = if var < n { var + n } else { var - n };
        let a = match answered[partner] {
            Some(b) => b,
            None => var < n,
        };
        answered[var] = Some(a);
        a
    });
    let depth = run.queries();
    let refutation = if (depth as usize) < 2 * n {
        find_disagreeing_completions(n, &answered)
    } else {
        None
    };
    Ok(AdversaryOutcome {
        depth,
        transcript: run.queried,
        output: run.output,
        refutation,
    })
}

/// Two inputs consistent with the adversary's answers on which GT differs,
/// found by scanning all completions of the unanswered variables.
fn find_disagreeing_completions(n: usize, answered: &[Option<bool>]) -> Option<(usize, usize)> {
    let gt = FamilySpec::Gt { n }.build().ok()?;
    let mut base = 0usize;
    let mut free: Vec<usize> = Vec::new();
    for (var, a) in answered.iter().enumerate() {
        match a {
            Some(true) => base |= 1 << var,
            Some(false) => {}
            None => free.push(var),
        }
    }
    let mut zero_input = None;
    let mut one_input = None;
    for sub in 0..1usize << free.len() {
        let mut idx = base;
        for (j, &var) in free.iter().enumerate() {
            if sub >> j & 1 == 1 {
                idx |= 1 << var;
            }
        }
        if gt.value(idx) {
            one_input.get_or_insert(idx);
        } else {
            zero_input.get_or_insert(idx);
        }
        if let (Some(z), Some(o)) = (zero_input, one_input) {
            return Some((z, o));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::Ratio;
    use crate::solver::instc_wrt;
    use crate::tree::NaivePolicy;

    #[test]
    fn gt_tree_computes_gt() {
        for n in 1..=6 {
            let gt = FamilySpec::Gt { n }.build().unwrap();
            let tree = gt_tree(n);
            tree.validate(2 * n).unwrap();
            assert!(tree.computes(&gt), "n={n}");
        }
    }

    #[test]
    fn gt_tree_base_case_short_circuits() {
        let tree = gt_tree(1);
        // x_1 = 0 terminates after a single query
        assert_eq!(tree.queries_on(&[false, false]), 1);
        assert_eq!(tree.queries_on(&[false, true]), 1);
        assert_eq!(tree.queries_on(&[true, false]), 2);
    }

    #[test]
    fn gt_tree_query_count_classes() {
        for n in 1..=5usize {
            let tree = gt_tree(n);
            let mask = (1usize << n) - 1;
            for idx in 0..1usize << (2 * n) {
                let x = crate::table::point(2 * n, idx);
                let q = tree.queries_on(&x) as usize;
                let (a, b) = (idx & mask, idx >> n);
                if a == b {
                    assert!(q == 2 * n - 1 || q == 2 * n, "n={n} idx={idx:b} q={q}");
                } else {
                    let top = usize::BITS as usize - 1 - (a ^ b).leading_zeros() as usize;
                    let j = n - (top + 1);
                    assert!(q == 2 * j + 1 || q == 2 * j + 2, "n={n} idx={idx:b} q={q}");
                }
            }
        }
    }

    #[test]
    fn gt_tree_ratio_is_exactly_two() {
        // the bound 2 is attained at some input for every n
        for n in 1..=5 {
            let gt = FamilySpec::Gt { n }.build().unwrap();
            let r = instc_wrt(&gt, &gt_tree(n)).unwrap();
            assert_eq!(r, Ratio::integer(2), "n={n} got {r}");
        }
    }

    #[test]
    fn omb_tree_computes_omb() {
        for n in [1usize, 3, 5, 7, 9, 11, 13] {
            let omb = FamilySpec::Omb { n }.build().unwrap();
            let tree = omb_tree(n).unwrap();
            tree.validate(n).unwrap();
            assert!(tree.computes(&omb), "n={n}");
        }
        assert!(omb_tree(4).is_err());
    }

    #[test]
    fn omb_tree_examples() {
        let t3 = omb_tree(3).unwrap();
        assert_eq!(t3.queries_on(&[false, false, false]), 3);
        assert!(!t3.output_on(&[false, false, false]));
        assert_eq!(t3.queries_on(&[false, false, true]), 1);
        assert!(t3.output_on(&[false, false, true]));
    }

    #[test]
    fn omb_tree_ratio_is_2n_over_n_plus_1() {
        for n in [3usize, 5, 7, 9] {
            let omb = FamilySpec::Omb { n }.build().unwrap();
            let r = instc_wrt(&omb, &omb_tree(n).unwrap()).unwrap();
            assert_eq!(r, Ratio::new(2 * n as u64, n as u64 + 1), "n={n}");
            assert!(r < Ratio::integer(2));
        }
    }

    #[test]
    fn ind_tree_every_input_three_queries() {
        let ind2 = FamilySpec::Ind { m: 2 }.build().unwrap();
        let tree = ind_tree(2).unwrap();
        assert!(tree.computes(&ind2));
        for idx in 0..ind2.len() {
            assert_eq!(tree.queries_on(&crate::table::point(6, idx)), 3);
        }
        assert_eq!(instc_wrt(&ind2, &tree).unwrap(), Ratio::integer(1));
    }

    #[test]
    fn naive_policy_matches_materialized_tree() {
        for f in [
            FamilySpec::Maj { n: 6 }.build().unwrap(),
            FamilySpec::Omb { n: 7 }.build().unwrap(),
            FamilySpec::Gt { n: 4 }.build().unwrap(),
        ] {
            let policy = NaivePolicy::new(f.clone());
            let tree = materialize_naive(&f).unwrap();
            for idx in 0..f.len() {
                let x = crate::table::point(f.n(), idx);
                let run = policy.run_on_index(idx);
                assert_eq!(run.queries(), tree.queries_on(&x));
                assert_eq!(run.output, tree.output_on(&x));
            }
        }
    }

    #[test]
    fn naive_on_xor_is_instance_optimal() {
        let xor3 = FamilySpec::Xor { n: 3 }.build().unwrap();
        let r = instc_wrt(&xor3, &NaivePolicy::new(xor3.clone())).unwrap();
        assert_eq!(r, Ratio::integer(1));
    }

    #[test]
    fn adversary_forces_full_depth_on_gt_tree() {
        for n in 1..=5 {
            let outcome = run_gt_adversary(n, &gt_tree(n)).unwrap();
            assert_eq!(outcome.depth as usize, 2 * n, "n={n}");
            assert!(outcome.refutation.is_none());
        }
    }

    #[test]
    fn adversary_forces_full_depth_on_naive_tree() {
        let gt2 = FamilySpec::Gt { n: 2 }.build().unwrap();
        let outcome = run_gt_adversary(2, &NaivePolicy::new(gt2)).unwrap();
        assert_eq!(outcome.depth, 4);
    }

    #[test]
    fn adversary_refutes_every_shallow_tree_for_gt1() {
        // every tree on 2 variables of depth <= 1 fails to compute GT_1, and
        // the adversary exhibits two disagreeing completions
        let mut shallow = vec![DecisionTree::leaf(false), DecisionTree::leaf(true)];
        for var in 0..2 {
            for z in [false, true] {
                for o in [false, true] {
                    shallow.push(DecisionTree::query(
                        var,
                        DecisionTree::leaf(z),
                        DecisionTree::leaf(o),
                    ));
                }
            }
        }
        let gt1 = FamilySpec::Gt { n: 1 }.build().unwrap();
        for tree in shallow {
            let outcome = run_gt_adversary(1, &tree).unwrap();
            assert!(outcome.depth < 2);
            let (z, o) = outcome.refutation.expect("shallow tree must be refuted");
            assert!(!gt1.value(z));
            assert!(gt1.value(o));
            // both completions are consistent with the transcript
            for &(var, a) in &outcome.transcript {
                assert_eq!(z >> var & 1 == 1, a);
                assert_eq!(o >> var & 1 == 1, a);
            }
        }
    }
}
