//! Building the target function from flags: either a named family with
//! parameters or a truth-table file (digested for the report descriptor).

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::Result;
use boolfn::{FamilySpec, TruthTable};
use sha2::{Digest, Sha256};

use crate::report::FunctionDesc;
use crate::UsageError;

pub struct FunctionInput {
    pub table: TruthTable,
    pub desc: FunctionDesc,
    pub family: Option<FamilySpec>,
}

#[derive(Clone, Default)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub vertices: Option<usize>,
    pub k: Option<usize>,
    pub predicate: Option<String>,
}

pub fn from_family(name: &str, params: &FamilyParams) -> Result<FunctionInput> {
    let spec = parse_family(name, params)?;
    let table = spec.build()?;
    let desc = FunctionDesc {
        family: Some(spec.name().to_owned()),
        params: Some(param_map(&spec)),
        file: None,
        sha256: None,
    };
    Ok(FunctionInput {
        table,
        desc,
        family: Some(spec),
    })
}

pub fn from_file(path: &Path) -> Result<FunctionInput> {
    let bytes = std::fs::read(path)?;
    let text = String::from_utf8_lossy(&bytes);
    let table = TruthTable::parse(&text)?;
    let desc = FunctionDesc {
        family: None,
        params: None,
        file: Some(path.display().to_string()),
        sha256: Some(hex::encode(Sha256::digest(&bytes))),
    };
    Ok(FunctionInput {
        table,
        desc,
        family: None,
    })
}

pub fn parse_family(name: &str, params: &FamilyParams) -> Result<FamilySpec> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| UsageError(format!("--family {name} requires --{flag}")))
    };
    let spec = match name {
        "xor" => FamilySpec::Xor {
            n: need(params.n, "n")?,
        },
        "and" => FamilySpec::And {
            n: need(params.n, "n")?,
        },
        "or" => FamilySpec::Or {
            n: need(params.n, "n")?,
        },
        "maj" => FamilySpec::Maj {
            n: need(params.n, "n")?,
        },
        "gt" => FamilySpec::Gt {
            n: need(params.n, "n")?,
        },
        "omb" => FamilySpec::Omb {
            n: need(params.n, "n")?,
        },
        "ind" => FamilySpec::Ind {
            m: need(params.m, "m")?,
        },
        "conn" => FamilySpec::Conn {
            vertices: need(params.vertices, "vertices")?,
        },
        "clique" => FamilySpec::Clique {
            vertices: need(params.vertices, "vertices")?,
            k: need(params.k, "k")?,
        },
        "symmetric" => {
            let text = params
                .predicate
                .as_deref()
                .ok_or_else(|| UsageError("--family symmetric requires --predicate".into()))?;
            let predicate = text
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    c => Err(UsageError(format!("bad predicate character {c:?}"))),
                })
                .collect::<Result<Vec<bool>, _>>()?;
            FamilySpec::Symmetric { predicate }
        }
        other => return Err(UsageError(format!("unknown family {other:?}")).into()),
    };
    Ok(spec)
}

fn param_map(spec: &FamilySpec) -> BTreeMap<String, u64> {
    let mut map = BTreeMap::new();
    match spec {
        FamilySpec::Xor { n }
        | FamilySpec::And { n }
        | FamilySpec::Or { n }
        | FamilySpec::Maj { n }
        | FamilySpec::Gt { n }
        | FamilySpec::Omb { n } => {
            map.insert("n".into(), *n as u64);
        }
        FamilySpec::Ind { m } => {
            map.insert("m".into(), *m as u64);
        }
        FamilySpec::Symmetric { predicate } => {
            map.insert("weights".into(), predicate.len() as u64 - 1);
            // pack the predicate bits, weight 0 least significant
            let bits = predicate
                .iter()
                .enumerate()
                .fold(0u64, |acc, (w, &b)| acc | ((b as u64) << w));
            map.insert("predicate_bits".into(), bits);
        }
        FamilySpec::Conn { vertices } => {
            map.insert("vertices".into(), *vertices as u64);
        }
        FamilySpec::Clique { vertices, k } => {
            map.insert("vertices".into(), *vertices as u64);
            map.insert("k".into(), *k as u64);
        }
    }
    map
}
