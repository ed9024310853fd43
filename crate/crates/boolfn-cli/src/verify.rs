//! The `verify` subcommand: exhaustive and derived checks of the closed-form
//! results, one instance per line, summary `PASS k/k` or `FAIL`.

use anyhow::Result;
use boolfn::algos::{gt_tree, omb_tree, run_gt_adversary};
use boolfn::solver::{instc_wrt, symmetric_instc_formula, InstcSolver};
use boolfn::{measures, mobius, FamilySpec, Ratio, TruthTable};
use clap::Args;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::UsageError;

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    id: CheckId,
    /// size parameter; meaning depends on the check id
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    vertices: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// sample count for `oracle` on 4 variables
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// raise the instance-complexity cap from 13 to 15 variables
    #[arg(long)]
    slow: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckId {
    /// instc and cmin of every symmetric function vs the interval formulas
    Symmetric,
    /// connectivity: evasiveness, cmin = vertices - 1, instc = dt/cmin
    GraphConn,
    /// k-clique: evasiveness, cmin vs the Turán-side formula, instc = dt/cmin
    GraphClique,
    /// greater-than: dt = 2n by solver and adversary, cmin = 2, scan tree ratio
    Gt,
    /// odd-max-bit: dt = n, cmin = 1, degree, scan tree ratio, certificate classes
    Omb,
    /// baseline families: instc of xor, and, or and the indexing function
    Gkn,
    /// dt >= degree for every function on up to n variables
    DegLb,
    /// exact solver vs tree-enumeration oracle
    Oracle,
}

struct Check {
    line: String,
    ok: bool,
}

fn check(ok: bool, line: String) -> Check {
    Check { line, ok }
}

pub fn run(args: &VerifyArgs) -> Result<i32> {
    let checks = match args.id {
        CheckId::Symmetric => symmetric(args.n.unwrap_or(6))?,
        CheckId::GraphConn => graph_conn(require(args.vertices, "vertices")?)?,
        CheckId::GraphClique => graph_clique(
            require(args.vertices, "vertices")?,
            require(args.k, "k")?,
            args.slow,
        )?,
        CheckId::Gt => gt(args.n.unwrap_or(4))?,
        CheckId::Omb => omb(args.n.unwrap_or(7))?,
        CheckId::Gkn => gkn(args.n.unwrap_or(10))?,
        CheckId::DegLb => deg_lb(args.n.unwrap_or(4))?,
        CheckId::Oracle => oracle(args.n.unwrap_or(3), args.count, args.seed)?,
    };
    let mut out = String::new();
    let passed = checks.iter().filter(|c| c.ok).count();
    for c in &checks {
        out.push_str(&c.line);
        out.push_str(if c.ok { " ok\n" } else { " FAIL\n" });
    }
    if passed == checks.len() {
        out.push_str(&format!("PASS {passed}/{}\n", checks.len()));
    } else {
        out.push_str(&format!("FAIL {passed}/{}\n", checks.len()));
    }
    print!("{out}");
    Ok(if passed == checks.len() { 0 } else { 1 })
}

fn require(v: Option<usize>, flag: &str) -> Result<usize> {
    Ok(v.ok_or_else(|| UsageError(format!("this check requires --{flag}")))?)
}

/// cmin <= C(f,x) <= C(f) for every input, instc <= dt/cmin, and dt >= deg
/// when a degree is supplied. Applied to every function a check touches.
pub fn universal_bounds_ok(solver: &InstcSolver, instc: Ratio, deg: Option<u32>) -> bool {
    let cmin = solver.min_certificate();
    let cmax = *solver.certificates().iter().max().unwrap();
    let dt = solver.decision_tree_depth();
    let per_input = solver
        .certificates()
        .iter()
        .all(|&c| cmin <= c && c <= cmax);
    let upper = if cmin == 0 {
        Ratio::ZERO
    } else {
        Ratio::new(dt as u64, cmin as u64)
    };
    per_input && instc <= upper && deg.is_none_or(|d| dt >= d)
}

fn symmetric(n: usize) -> Result<Vec<Check>> {
    let top = (1u64 << (n + 1)) - 1;
    // non-constant predicates only; constant ones have instc 0 by convention
    let checks: Vec<Result<Check>> = (1..top)
        .into_par_iter()
        .map(|code| {
            let predicate: Vec<bool> = (0..=n).map(|w| code >> w & 1 == 1).collect();
            let f = FamilySpec::Symmetric {
                predicate: predicate.clone(),
            }
            .build()?;
            let solver = InstcSolver::new(&f)?;
            let (r, _) = solver.instance_complexity();
            let formula = symmetric_instc_formula(&predicate);
            let cmin = solver.min_certificate();
            let cmin_formula = measures::cmin_symmetric(&predicate);
            let ok = r == formula
                && cmin == cmin_formula
                && universal_bounds_ok(&solver, r, Some(mobius::degree(&f)?));
            let bits: String = predicate.iter().map(|&b| if b { '1' } else { '0' }).collect();
            Ok(check(
                ok,
                format!("pred={bits} instc={r} formula={formula} cmin={cmin} formula={cmin_formula}"),
            ))
        })
        .collect();
    checks.into_iter().collect()
}

fn graph_conn(vertices: usize) -> Result<Vec<Check>> {
    let f = FamilySpec::Conn { vertices }.build()?;
    let solver = InstcSolver::new(&f)?;
    let edges = measures::binom2(vertices);
    let cmin_formula = measures::cmin_conn_formula(vertices)?;
    let (r, _) = solver.instance_complexity();
    let dt = solver.decision_tree_depth();
    let cmin = solver.min_certificate();
    let expect = Ratio::new(edges, cmin_formula);
    let ok = dt as u64 == edges
        && cmin as u64 == cmin_formula
        && r == expect
        && universal_bounds_ok(&solver, r, Some(mobius::degree(&f)?));
    Ok(vec![check(
        ok,
        format!(
            "conn vertices={vertices} dt={dt} edges={edges} cmin={cmin} formula={cmin_formula} instc={r} expect={expect}"
        ),
    )])
}

fn graph_clique(vertices: usize, k: usize, slow: bool) -> Result<Vec<Check>> {
    let f = FamilySpec::Clique { vertices, k }.build()?;
    let solver = if slow {
        InstcSolver::new_slow(&f)?
    } else {
        InstcSolver::new(&f)?
    };
    let edges = measures::binom2(vertices);
    let cmin_formula = measures::cmin_clique_formula(vertices, k)?;
    let (r, _) = solver.instance_complexity();
    let dt = solver.decision_tree_depth();
    let cmin = solver.min_certificate();
    let expect = Ratio::new(edges, cmin_formula);
    let ok = dt as u64 == edges && cmin as u64 == cmin_formula && r == expect;
    Ok(vec![check(
        ok,
        format!(
            "clique vertices={vertices} k={k} dt={dt} edges={edges} cmin={cmin} formula={cmin_formula} instc={r} expect={expect}"
        ),
    )])
}

fn gt(n_max: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 1..=n_max {
        let f = FamilySpec::Gt { n }.build()?;
        let solver = InstcSolver::new(&f)?;
        let dt = solver.decision_tree_depth();
        let cmin = solver.min_certificate();
        let tree = gt_tree(n);
        let outcome = run_gt_adversary(n, &tree)?;
        let r = instc_wrt(&f, &tree)?;
        let classes = gt_query_classes_ok(n, &tree);
        // n = 1 is degenerate: x_1 = 0 alone forces the output, so cmin = 1
        let cmin_expect = if n == 1 { 1 } else { 2 };
        let ok = dt as usize == 2 * n
            && outcome.depth as usize == 2 * n
            && outcome.refutation.is_none()
            && cmin == cmin_expect
            && r <= Ratio::integer(2)
            && classes
            && universal_bounds_ok(&solver, r, Some(mobius::degree(&f)?));
        checks.push(check(
            ok,
            format!(
                "gt n={n} dt={dt} adversary_depth={} cmin={cmin} instc_wrt(scan)={r} query_classes={classes}",
                outcome.depth
            ),
        ));
    }
    Ok(checks)
}

/// Scan-tree query counts: {2n-1, 2n} when x = y, {2j+1, 2j+2} when the
/// highest disagreeing pair is the j-th from the bottom.
fn gt_query_classes_ok(n: usize, tree: &boolfn::DecisionTree) -> bool {
    let mask = (1usize << n) - 1;
    (0..1usize << (2 * n)).all(|idx| {
        let q = tree.queries_on(&boolfn::table::point(2 * n, idx)) as usize;
        let (x, y) = (idx & mask, idx >> n);
        if x == y {
            q == 2 * n - 1 || q == 2 * n
        } else {
            let top = usize::BITS as usize - 1 - (x ^ y).leading_zeros() as usize;
            let j = n - (top + 1);
            q == 2 * j + 1 || q == 2 * j + 2
        }
    })
}

fn omb(n_max: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in (1..=n_max).step_by(2) {
        let f = FamilySpec::Omb { n }.build()?;
        let solver = InstcSolver::new(&f)?;
        let dt = solver.decision_tree_depth();
        let cmin = solver.min_certificate();
        let expansion = mobius::mobius(&f)?;
        let deg = expansion.degree();
        let top_coeff = expansion.coefficient((1 << n) - 1);
        let tree = omb_tree(n)?;
        let r = instc_wrt(&f, &tree)?;
        let expect = Ratio::new(2 * n as u64, n as u64 + 1);
        let classes = omb_cert_classes_ok(n, solver.certificates());
        let ok = dt as usize == n
            && cmin == 1
            && deg as usize == n
            && top_coeff == if n % 2 == 1 { 1 } else { -1 }
            && r == expect
            && r < Ratio::integer(2)
            && classes
            && universal_bounds_ok(&solver, r, Some(deg));
        checks.push(check(
            ok,
            format!(
                "omb n={n} dt={dt} cmin={cmin} deg={deg} top_coeff={top_coeff} instc_wrt(scan)={r} expect={expect} cert_classes={classes}"
            ),
        ));
    }
    Ok(checks)
}

/// Per-input certificate values of odd-max-bit by input class: (n+1)/2 on
/// the all-zero input, otherwise determined by the highest set variable.
fn omb_cert_classes_ok(n: usize, certs: &[u32]) -> bool {
    if certs[0] as usize != n.div_ceil(2) {
        return false;
    }
    (1..1usize << n).all(|idx| {
        let max_one = usize::BITS as usize - idx.leading_zeros() as usize;
        let i = n - max_one;
        let expect = if max_one % 2 == 1 {
            (i + 2) / 2
        } else {
            (i + 3) / 2
        };
        certs[idx] as usize == expect
    })
}

fn gkn(n_max: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut baseline = |name: &str, f: &TruthTable, expect: Ratio| -> Result<()> {
        let solver = InstcSolver::new(f)?;
        let (r, _) = solver.instance_complexity();
        let ok = r == expect && universal_bounds_ok(&solver, r, Some(mobius::degree(f)?));
        checks.push(check(ok, format!("{name} instc={r} expect={expect}")));
        Ok(())
    };
    for n in 2..=n_max {
        let ratio_n = Ratio::integer(n as u64);
        baseline(
            &format!("xor n={n}"),
            &FamilySpec::Xor { n }.build()?,
            Ratio::integer(1),
        )?;
        baseline(&format!("and n={n}"), &FamilySpec::And { n }.build()?, ratio_n)?;
        baseline(&format!("or n={n}"), &FamilySpec::Or { n }.build()?, ratio_n)?;
    }
    for m in 1..=2 {
        baseline(
            &format!("ind m={m}"),
            &FamilySpec::Ind { m }.build()?,
            Ratio::integer(1),
        )?;
    }
    Ok(checks)
}

fn deg_lb(n_max: usize) -> Result<Vec<Check>> {
    if n_max > 4 {
        return Err(UsageError("deg-lb is exhaustive and capped at --n 4".into()).into());
    }
    let mut checks = Vec::new();
    for n in 1..=n_max {
        let codes = 1u64 << (1 << n);
        let failures: u64 = (0..codes)
            .into_par_iter()
            .map(|code| {
                let f = TruthTable::from_fn(n, |idx| code >> idx & 1 == 1).unwrap();
                let dt = measures::decision_tree_complexity(&f).unwrap();
                let deg = mobius::degree(&f).unwrap();
                (dt < deg) as u64
            })
            .sum();
        checks.push(check(
            failures == 0,
            format!("n={n} functions={codes} dt>=deg violations={failures}"),
        ));
    }
    Ok(checks)
}

fn oracle(n: usize, count: usize, seed: u64) -> Result<Vec<Check>> {
    let funcs: Vec<(String, TruthTable)> = if n <= 3 {
        (0..1u64 << (1 << n))
            .map(|code| {
                let f = TruthTable::from_fn(n, |idx| code >> idx & 1 == 1)?;
                Ok((format!("f={code:#04x}"), f))
            })
            .collect::<Result<_>>()?
    } else if n == 4 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|i| {
                let code: u16 = rng.gen();
                let f = TruthTable::from_fn(4, |idx| code >> idx & 1 == 1)?;
                Ok((format!("sample={i} f={code:#06x}"), f))
            })
            .collect::<Result<_>>()?
    } else {
        return Err(boolfn::Error::TooLarge {
            what: "tree-enumeration oracle",
            n,
            cap: boolfn::oracle::ORACLE_MAX,
        }
        .into());
    };
    let tables: Vec<TruthTable> = funcs.iter().map(|(_, f)| f.clone()).collect();
    let oracle_values = boolfn::oracle::instc_oracle_batch(&tables)?;
    let checks: Vec<Result<Check>> = funcs
        .par_iter()
        .zip(oracle_values.par_iter())
        .map(|((name, f), &o)| {
            let solver = InstcSolver::new(f)?;
            let (r, _) = solver.instance_complexity();
            let ok = r == o && universal_bounds_ok(&solver, r, Some(mobius::degree(f)?));
            Ok(check(ok, format!("{name} solver={r} oracle={o}")))
        })
        .collect();
    checks.into_iter().collect()
}
