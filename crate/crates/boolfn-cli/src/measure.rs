//! The `measure` subcommand.

use std::time::Instant;

use anyhow::Result;
use boolfn::solver::InstcSolver;
use boolfn::{algos, measures, mobius, FamilySpec, Ratio};
use clap::Args;

use crate::input::{self, FamilyParams};
use crate::report::{MeasureReport, RatioJson, TreeResult};
use crate::UsageError;

/// Witness trees above this node count are left out of the report.
const WITNESS_NODE_LIMIT: usize = 2047;

const KNOWN_MEASURES: &[&str] = &["dt", "cmin", "cmax", "deg", "instc", "trees"];

#[derive(Args)]
pub struct MeasureArgs {
    /// family name: xor|and|or|maj|ind|symmetric|gt|omb|conn|clique
    #[arg(long, conflicts_with = "file")]
    family: Option<String>,
    /// truth-table file (text format: `n=<k>` then 2^k bits)
    #[arg(long)]
    file: Option<std::path::PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    vertices: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// predicate bits for --family symmetric, weight 0 first, e.g. 0011
    #[arg(long)]
    predicate: Option<String>,
    /// comma-separated subset of dt,cmin,cmax,deg,instc,trees
    #[arg(long, value_delimiter = ',', default_value = "dt,cmin,cmax,deg,instc")]
    measures: Vec<String>,
    /// raise the instance-complexity cap from 13 to 15 variables
    #[arg(long)]
    slow: bool,
    /// json (default) or csv
    #[arg(long, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn run(args: &MeasureArgs) -> Result<i32> {
    for m in &args.measures {
        if !KNOWN_MEASURES.contains(&m.as_str()) {
            return Err(UsageError(format!("unknown measure {m:?}")).into());
        }
    }
    let params = FamilyParams {
        n: args.n,
        m: args.m,
        vertices: args.vertices,
        k: args.k,
        predicate: args.predicate.clone(),
    };
    let input = match (&args.family, &args.file) {
        (Some(name), None) => input::from_family(name, &params)?,
        (None, Some(path)) => input::from_file(path)?,
        _ => return Err(UsageError("exactly one of --family / --file is required".into()).into()),
    };
    let f = &input.table;
    let want = |id: &str| args.measures.iter().any(|m| m == id);
    let mut report = MeasureReport::new(input.desc.clone(), f.n());
    let time = |report: &mut MeasureReport, id: &str, start: Instant| {
        report
            .timings_ms
            .insert(id.to_owned(), start.elapsed().as_millis() as u64);
    };

    let mut solver = None;
    if want("dt") || want("cmin") || want("instc") {
        let t0 = Instant::now();
        solver = Some(if args.slow {
            InstcSolver::new_slow(f)?
        } else {
            InstcSolver::new(f)?
        });
        time(&mut report, "solver_build", t0);
    }
    if let Some(solver) = &solver {
        if want("dt") {
            let t0 = Instant::now();
            report.dt = Some(solver.decision_tree_depth());
            time(&mut report, "dt", t0);
        }
        if want("cmin") {
            let t0 = Instant::now();
            report.cmin = Some(solver.min_certificate());
            time(&mut report, "cmin", t0);
        }
        if want("instc") {
            let t0 = Instant::now();
            let (r, witness) = solver.instance_complexity();
            report.instc = Some(r.into());
            if witness.node_count() <= WITNESS_NODE_LIMIT {
                report.witness = Some(witness.to_text());
            }
            time(&mut report, "instc", t0);
        }
        if let (Some(dt), Some(cmin)) = (report.dt, report.cmin) {
            report.instc_upper = Some(if cmin == 0 {
                RatioJson { num: 0, den: 1 }
            } else {
                Ratio::new(dt as u64, cmin as u64).into()
            });
        }
    }
    if want("cmax") {
        let t0 = Instant::now();
        report.cmax = Some(measures::certificate_complexity_max(f)?);
        time(&mut report, "cmax", t0);
    }
    if want("deg") {
        let t0 = Instant::now();
        report.degree = Some(mobius::degree(f)?);
        time(&mut report, "deg", t0);
    }
    if want("trees") {
        let t0 = Instant::now();
        report.trees = handcrafted_trees(&input)?;
        time(&mut report, "trees", t0);
    }

    match args.format {
        Format::Json => print!("{}", report.to_json()),
        Format::Csv => print!("{}", report.to_csv()),
    }
    Ok(0)
}

/// instc_wrt of the family's handcrafted scanning/addressing tree, when one
/// exists for the given parameters.
fn handcrafted_trees(input: &input::FunctionInput) -> Result<Vec<TreeResult>> {
    let mut out = Vec::new();
    let mut push = |name: &str, tree: &boolfn::DecisionTree| -> Result<()> {
        let r = boolfn::solver::instc_wrt(&input.table, tree)?;
        out.push(TreeResult {
            tree: name.to_owned(),
            instc_wrt: r.into(),
        });
        Ok(())
    };
    match &input.family {
        Some(FamilySpec::Gt { n }) => push("gt-scan", &algos::gt_tree(*n))?,
        Some(FamilySpec::Omb { n }) if n % 2 == 1 => push("omb-scan", &algos::omb_tree(*n)?)?,
        Some(FamilySpec::Ind { m }) if *m <= algos::IND_TREE_MAX_M => {
            push("ind-address", &algos::ind_tree(*m)?)?
        }
        _ => {}
    }
    Ok(out)
}
