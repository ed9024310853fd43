//! The `report-gap` subcommand: per-function CSV of dt, cmin, cmax, instc
//! and the ratios dt/cmin and dt/cmax, for probing how far instc sits below
//! dt/cmin. Rationals are emitted as reduced integer pairs.

use anyhow::Result;
use boolfn::solver::InstcSolver;
use boolfn::{FamilySpec, Ratio, TruthTable};
use clap::Args;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::UsageError;

#[derive(Args)]
pub struct GapArgs {
    /// sample random functions on this many variables
    #[arg(long, conflicts_with = "families")]
    n: Option<usize>,
    #[arg(long, default_value_t = 20)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// named rows instead of random sampling, e.g. gt:3,and:3,xor:4,clique:5:2
    #[arg(long)]
    families: Option<String>,
    /// raise the instance-complexity cap from 13 to 15 variables
    #[arg(long)]
    slow: bool,
}

pub fn run(args: &GapArgs) -> Result<i32> {
    let targets: Vec<(String, TruthTable)> = if let Some(spec) = &args.families {
        spec.split(',')
            .map(|token| Ok((token.to_owned(), parse_token(token)?.build()?)))
            .collect::<Result<_>>()?
    } else if let Some(n) = args.n {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        (0..args.count)
            .map(|i| {
                let f = TruthTable::from_fn(n, |_| rng.gen())?;
                Ok((format!("rand{i}"), f))
            })
            .collect::<Result<_>>()?
    } else {
        return Err(UsageError("one of --families / --n is required".into()).into());
    };

    let rows: Vec<Result<String>> = targets
        .par_iter()
        .map(|(name, f)| row(name, f, args.slow))
        .collect();
    let mut out = String::from(
        "function,n,dt,cmin,cmax,instc_num,instc_den,dt_over_cmin_num,dt_over_cmin_den,dt_over_cmax_num,dt_over_cmax_den\n",
    );
    for r in rows {
        out.push_str(&r?);
    }
    print!("{out}");
    Ok(0)
}

fn row(name: &str, f: &TruthTable, slow: bool) -> Result<String> {
    let solver = if slow {
        InstcSolver::new_slow(f)?
    } else {
        InstcSolver::new(f)?
    };
    let dt = solver.decision_tree_depth() as u64;
    let cmin = solver.min_certificate() as u64;
    let cmax = *solver.certificates().iter().max().unwrap() as u64;
    let (instc, _) = solver.instance_complexity();
    // a constant function has cmin = cmax = dt = 0; both ratios are 0/1 then
    let over = |den: u64| if den == 0 { Ratio::ZERO } else { Ratio::new(dt, den) };
    let (a, b) = (over(cmin), over(cmax));
    Ok(format!(
        "{},{},{},{},{},{},{},{},{},{},{}\n",
        name,
        f.n(),
        dt,
        cmin,
        cmax,
        instc.num(),
        instc.den(),
        a.num(),
        a.den(),
        b.num(),
        b.den(),
    ))
}

fn parse_token(token: &str) -> Result<FamilySpec> {
    let parts: Vec<&str> = token.split(':').collect();
    let int = |s: &str| -> Result<usize> {
        Ok(s.parse::<usize>()
            .map_err(|_| UsageError(format!("bad integer {s:?} in family token {token:?}")))?)
    };
    let spec = match parts.as_slice() {
        [name, a] => {
            let a = int(a)?;
            match *name {
                "xor" => FamilySpec::Xor { n: a },
                "and" => FamilySpec::And { n: a },
                "or" => FamilySpec::Or { n: a },
                "maj" => FamilySpec::Maj { n: a },
                "gt" => FamilySpec::Gt { n: a },
                "omb" => FamilySpec::Omb { n: a },
                "ind" => FamilySpec::Ind { m: a },
                "conn" => FamilySpec::Conn { vertices: a },
                other => {
                    return Err(UsageError(format!("unknown family {other:?}")).into());
                }
            }
        }
        [name @ "clique", v, k] => {
            let _ = name;
            FamilySpec::Clique {
                vertices: int(v)?,
                k: int(k)?,
            }
        }
        _ => {
            return Err(UsageError(format!("bad family token {token:?}")).into());
        }
    };
    Ok(spec)
}
