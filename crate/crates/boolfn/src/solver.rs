//! Exact instance complexity by ratio-feasibility search.
//!
//! `InstC(f)` is the least ratio r such that a tree computing f exists with
//! `T(x) <= r * C(f,x)` for every input x. Since any achieved ratio is of the
//! form d/c with d a depth in [0,n] and c an attained certificate size, the
//! candidate set is finite; feasibility of a single r is decided by a budget
//! recursion over the subcube lattice, and the least feasible candidate is
//! found by binary search (feasibility is monotone in r).

use crate::error::{Error, Result};
use crate::lattice::{ConstancyLattice, LATTICE_MAX, LATTICE_MAX_SLOW, NOT_CONSTANT};
use crate::ratio::Ratio;
use crate::table::TruthTable;
use crate::tree::{DecisionTree, QueryAlgorithm};

pub const SOLVER_MAX: usize = LATTICE_MAX;
pub const SOLVER_MAX_SLOW: usize = LATTICE_MAX_SLOW;

/// Sentinel for an infeasible branch; never mixed with budget arithmetic.
const BOTTOM: i64 = i64::MIN;

pub struct InstcSolver {
    f: TruthTable,
    lattice: ConstancyLattice,
    /// C(f,x) per input index.
    certs: Vec<u32>,
    /// min over x in the subcube of C(f,x), per subcube key.
    min_cert: Vec<u8>,
}

impl InstcSolver {
    pub fn new(f: &TruthTable) -> Result<Self> {
        Self::with_lattice(f, ConstancyLattice::build(f)?)
    }

    /// Raised cap (n <= 15) for explicitly requested long runs.
    pub fn new_slow(f: &TruthTable) -> Result<Self> {
        Self::with_lattice(f, ConstancyLattice::build_slow(f)?)
    }

    fn with_lattice(f: &TruthTable, lattice: ConstancyLattice) -> Result<Self> {
        let n = f.n();
        let certs = lattice.per_input_certificates();
        let mut min_cert = vec![0u8; lattice.key_count()];
        for key in 0..lattice.key_count() {
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
            min_cert[key] = match lowest_free {
                None => certs[point] as u8,
                Some(i) => {
                    let a = min_cert[key - 2 * lattice.pow3(i)];
                    let b = min_cert[key - lattice.pow3(i)];
                    a.min(b)
                }
            };
        }
        Ok(InstcSolver {
            f: f.clone(),
            lattice,
            certs,
            min_cert,
        })
    }

    pub fn function(&self) -> &TruthTable {
        &self.f
    }

    pub fn certificate(&self, index: usize) -> u32 {
        self.certs[index]
    }

    pub fn certificates(&self) -> &[u32] {
        &self.certs
    }

    pub fn min_certificate(&self) -> u32 {
        self.lattice.min_certificate()
    }

    pub fn decision_tree_depth(&self) -> u32 {
        self.lattice.decision_tree_depth()
    }

    /// Every ratio d/c with d in [0,n] and c an attained certificate size,
    /// sorted and de-duplicated. `InstC(f)` lies in this set for
    /// non-constant f.
    pub fn candidate_ratios(&self) -> Vec<Ratio> {
        let n = self.f.n() as u64;
        let mut cs: Vec<u64> = self.certs.iter().map(|&c| c as u64).collect();
        cs.sort_unstable();
        cs.dedup();
        let mut out = Vec::new();
        for &c in cs.iter().filter(|&&c| c > 0) {
            for d in 0..=n {
                out.push(Ratio::new(d, c));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Does a tree computing f exist with T(x) <= r * C(f,x) for all x?
    pub fn feasible(&self, r: Ratio) -> bool {
        let budgets = self.budgets(r);
        budgets[self.lattice.key_count() - 1] >= 0
    }

    /// Budget recursion. B(rho) is the largest number of queries that may
    /// already have been spent on reaching rho such that a completing tree
    /// within budget exists:
    ///   - f constant on rho: B = floor(r * min_{x in rho} C(f,x)); a tree
    ///     never needs to query further once the function is decided, and
    ///     extra queries only raise numerators.
    ///   - else: B = max over free i of min(B(rho,x_i=0), B(rho,x_i=1)) - 1,
    ///     BOTTOM if every branch is infeasible.
    fn budgets(&self, r: Ratio) -> Vec<i64> {
        assert!(!r.is_infinite());
        let n = self.f.n();
        let keys = self.lattice.key_count();
        let mut b = vec![BOTTOM; keys];
        for key in 0..keys {
            if self.lattice.classify_key(key) != NOT_CONSTANT {
                // floor computed in integer arithmetic
                b[key] = (r.num() * self.min_cert[key] as u64 / r.den()) as i64;
                continue;
            }
            let mut k = key;
            let mut best = BOTTOM;
            for i in 0..n {
                let d = k % 3;
                k /= 3;
                if d == 2 {
                    let b0 = b[key - 2 * self.lattice.pow3(i)];
                    let b1 = b[key - self.lattice.pow3(i)];
                    let m = b0.min(b1);
                    if m != BOTTOM && m - 1 > best {
                        best = m - 1;
                    }
                }
            }
            b[key] = best;
        }
        b
    }

    /// The exact instance complexity with a witness tree.
    ///
    /// Constant functions get InstC = 0/1 with the single-leaf witness.
    pub fn instance_complexity(&self) -> (Ratio, DecisionTree) {
        if let Some(v) = self.f.is_constant() {
            return (Ratio::ZERO, DecisionTree::leaf(v));
        }
        let candidates = self.candidate_ratios();
        // binary search for the least feasible candidate; the largest
        // candidate n/cmin is always feasible (the naive tree attains it)
        let mut lo = 0usize;
        let mut hi = candidates.len() - 1;
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.feasible(candidates[mid]) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let r = candidates[lo];
        let budgets = self.budgets(r);
        debug_assert!(budgets[self.lattice.key_count() - 1] >= 0);
        let witness = self.reconstruct(&budgets, self.lattice.key_count() - 1);
        (r, witness)
    }

    /// Greedy witness from the budget memo: at each subcube pick the branch
    /// variable with the largest surviving budget, lowest index on ties.
    fn reconstruct(&self, budgets: &[i64], key: usize) -> DecisionTree {
        match self.lattice.classify_key(key) {
            0 => return DecisionTree::leaf(false),
            1 => return DecisionTree::leaf(true),
            _ => {}
        }
        let n = self.f.n();
        let mut k = key;
        let mut best: Option<(i64, usize)> = None;
        for i in 0..n {
            let d = k % 3;
            k /= 3;
            if d == 2 {
                let b0 = budgets[key - 2 * self.lattice.pow3(i)];
                let b1 = budgets[key - self.lattice.pow3(i)];
                let m = b0.min(b1);
                if m != BOTTOM && best.is_none_or(|(bm, _)| m > bm) {
                    best = Some((m, i));
                }
            }
        }
        let (_, var) = best.expect("reconstruct called on an infeasible subcube");
        DecisionTree::query(
            var,
            self.reconstruct(budgets, key - 2 * self.lattice.pow3(var)),
            self.reconstruct(budgets, key - self.lattice.pow3(var)),
        )
    }
}

/// Convenience wrapper: solve and return `(InstC(f), witness tree)`.
pub fn instance_complexity(f: &TruthTable) -> Result<(Ratio, DecisionTree)> {
    Ok(InstcSolver::new(f)?.instance_complexity())
}

/// InstC(f, x, T) = T(x) / C(f,x), after verifying that the algorithm
/// computes f.
pub fn instc_at(f: &TruthTable, x: &[bool], alg: &dyn QueryAlgorithm) -> Result<Ratio> {
    if x.len() != f.n() {
        return Err(Error::InputShape {
            expected: f.n(),
            got: x.len(),
        });
    }
    verify_computes(f, alg)?;
    let queries = alg.run_on_index(crate::table::index_of(x)).queries();
    let cert = crate::measures::certificate_complexity(f, x)?;
    Ok(ratio_with_constant_convention(queries, cert))
}

/// InstC(f, T) = max over inputs of T(x) / C(f,x).
pub fn instc_wrt(f: &TruthTable, alg: &dyn QueryAlgorithm) -> Result<Ratio> {
    verify_computes(f, alg)?;
    let certs = crate::measures::per_input_certificates(f)?;
    let mut worst = Ratio::ZERO;
    #[allow(clippy::needless_range_loop)] // index doubles as the input bit pattern
    for idx in 0..f.len() {
        let queries = alg.run_on_index(idx).queries();
        let r = ratio_with_constant_convention(queries, certs[idx]);
        worst = worst.max(r);
    }
    Ok(worst)
}

/// InstC of a symmetric function from its predicate: n / cmin. Constant
/// predicates return 0/1 by convention.
pub fn symmetric_instc_formula(predicate: &[bool]) -> Ratio {
    let n = (predicate.len() - 1) as u64;
    let cmin = crate::measures::cmin_symmetric(predicate) as u64;
    if cmin == 0 {
        Ratio::ZERO
    } else {
        Ratio::new(n, cmin)
    }
}

/// C(f,x) = 0 only for constant f; a single-leaf tree then makes 0 queries
/// (ratio 0/1 by convention) while any querying tree is scored infinite.
fn ratio_with_constant_convention(queries: u32, cert: u32) -> Ratio {
    match (queries, cert) {
        (0, 0) => Ratio::ZERO,
        (_, 0) => Ratio::INFINITY,
        (q, c) => Ratio::new(q as u64, c as u64),
    }
}

fn verify_computes(f: &TruthTable, alg: &dyn QueryAlgorithm) -> Result<()> {
    for idx in 0..f.len() {
        if alg.run_on_index(idx).output != f.value(idx) {
            return Err(Error::DoesNotCompute { at: idx });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;
    use crate::tree::NaivePolicy;

    #[test]
    fn feasible_examples() {
        let and2 = InstcSolver::new(&FamilySpec::And { n: 2 }.build().unwrap()).unwrap();
        assert!(!and2.feasible(Ratio::integer(1)));
        assert!(and2.feasible(Ratio::integer(2)));

        let xor3 = InstcSolver::new(&FamilySpec::Xor { n: 3 }.build().unwrap()).unwrap();
        assert!(xor3.feasible(Ratio::integer(1)));

        let maj3 = InstcSolver::new(&FamilySpec::Maj { n: 3 }.build().unwrap()).unwrap();
        assert!(maj3.feasible(Ratio::new(3, 2)));
        assert!(!maj3.feasible(Ratio::new(4, 3)));
    }

    #[test]
    fn candidate_ratio_examples() {
        let xor3 = InstcSolver::new(&FamilySpec::Xor { n: 3 }.build().unwrap()).unwrap();
        let expect: Vec<Ratio> = [(0, 3), (1, 3), (2, 3), (3, 3)]
            .iter()
            .map(|&(d, c)| Ratio::new(d, c))
            .collect();
        assert_eq!(xor3.candidate_ratios(), expect);

        let gt1 = InstcSolver::new(&FamilySpec::Gt { n: 1 }.build().unwrap()).unwrap();
        // attained certificate sizes {1,2} on n=2 variables; depths 0..=2
        let expect: Vec<Ratio> = ["0", "1/2", "1", "2"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(gt1.candidate_ratios(), expect);

        let and1 = InstcSolver::new(&FamilySpec::And { n: 1 }.build().unwrap()).unwrap();
        assert_eq!(
            and1.candidate_ratios(),
            vec![Ratio::ZERO, Ratio::integer(1)]
        );
    }

    #[test]
    fn instc_exact_examples() {
        let conn4 = FamilySpec::Conn { vertices: 4 }.build().unwrap();
        let (r, witness) = instance_complexity(&conn4).unwrap();
        assert_eq!(r, Ratio::integer(2));
        assert!(witness.computes(&conn4));

        let ind2 = FamilySpec::Ind { m: 2 }.build().unwrap();
        let (r, _) = instance_complexity(&ind2).unwrap();
        assert_eq!(r, Ratio::integer(1));

        // odd n: 2n/(n+1); even n: 2
        for n in 2..=7usize {
            let maj = FamilySpec::Maj { n }.build().unwrap();
            let (r, _) = instance_complexity(&maj).unwrap();
            let expect = if n % 2 == 1 {
                Ratio::new(2 * n as u64, n as u64 + 1)
            } else {
                Ratio::integer(2)
            };
            assert_eq!(r, expect, "n={n}");
        }
    }

    #[test]
    fn witness_attains_the_exact_value() {
        for f in [
            FamilySpec::Maj { n: 4 }.build().unwrap(),
            FamilySpec::Omb { n: 5 }.build().unwrap(),
            FamilySpec::Gt { n: 2 }.build().unwrap(),
            FamilySpec::And { n: 4 }.build().unwrap(),
        ] {
            let solver = InstcSolver::new(&f).unwrap();
            let (r, witness) = solver.instance_complexity();
            witness.validate(f.n()).unwrap();
            assert_eq!(instc_wrt(&f, &witness).unwrap(), r);
            // definition sandwich against dt/cmin
            let upper = Ratio::new(
                solver.decision_tree_depth() as u64,
                solver.min_certificate() as u64,
            );
            assert!(r <= upper);
        }
    }

    #[test]
    fn monotone_feasibility() {
        let f = FamilySpec::Maj { n: 5 }.build().unwrap();
        let solver = InstcSolver::new(&f).unwrap();
        let candidates = solver.candidate_ratios();
        let flags: Vec<bool> = candidates.iter().map(|&r| solver.feasible(r)).collect();
        for w in flags.windows(2) {
            assert!(w[1] >= w[0], "feasibility must be monotone in r");
        }
    }

    #[test]
    fn constant_function_convention() {
        let one = TruthTable::constant(3, true).unwrap();
        let (r, witness) = instance_complexity(&one).unwrap();
        assert_eq!(r, Ratio::ZERO);
        assert_eq!(witness, DecisionTree::leaf(true));
        assert_eq!(instc_wrt(&one, &witness).unwrap(), Ratio::ZERO);
        // a tree that queries on a constant function scores infinite
        let wasteful =
            DecisionTree::query(0, DecisionTree::leaf(true), DecisionTree::leaf(true));
        assert_eq!(instc_wrt(&one, &wasteful).unwrap(), Ratio::INFINITY);
    }

    #[test]
    fn instc_wrt_rejects_wrong_trees() {
        let and2 = FamilySpec::And { n: 2 }.build().unwrap();
        let not_and = DecisionTree::leaf(true);
        assert!(matches!(
            instc_wrt(&and2, &not_and),
            Err(Error::DoesNotCompute { .. })
        ));
    }

    #[test]
    fn naive_policy_attains_dt_over_cmin_on_symmetric() {
        for n in 2..=6usize {
            let maj = FamilySpec::Maj { n }.build().unwrap();
            let pred = maj.symmetric_predicate().unwrap();
            let naive = NaivePolicy::new(maj.clone());
            assert_eq!(
                instc_wrt(&maj, &naive).unwrap(),
                symmetric_instc_formula(&pred)
            );
        }
    }

    #[test]
    fn symmetric_formula_examples() {
        let xor5: Vec<bool> = (0..=5).map(|w| w % 2 == 1).collect();
        assert_eq!(symmetric_instc_formula(&xor5), Ratio::integer(1));
        let maj3 = vec![false, false, true, true];
        assert_eq!(symmetric_instc_formula(&maj3), Ratio::new(3, 2));
        for n in 2..=6usize {
            let or: Vec<bool> = (0..=n).map(|w| w > 0).collect();
            assert_eq!(symmetric_instc_formula(&or), Ratio::integer(n as u64));
        }
        assert_eq!(symmetric_instc_formula(&[true, true, true]), Ratio::ZERO);
    }
}
