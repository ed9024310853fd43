//! Serialized report shapes. Field order is the canonical JSON key order:
//! parsing an emitted report and re-emitting it is byte-identical.

use std::collections::BTreeMap;

use boolfn::Ratio;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
pub struct RatioJson {
    pub num: u64,
    pub den: u64,
}

impl From<Ratio> for RatioJson {
    fn from(r: Ratio) -> RatioJson {
        RatioJson {
            num: r.num(),
            den: r.den(),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FunctionDesc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<BTreeMap<String, u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sha256: Option<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TreeResult {
    pub tree: String,
    pub instc_wrt: RatioJson,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct MeasureReport {
    pub function: FunctionDesc,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dt: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cmin: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cmax: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instc: Option<RatioJson>,
    /// dt/cmin, present whenever both were computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instc_upper: Option<RatioJson>,
    /// Optimal-ratio witness, in decision-tree text format.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub trees: Vec<TreeResult>,
    pub timings_ms: BTreeMap<String, u64>,
}

impl MeasureReport {
    pub fn new(function: FunctionDesc, n: usize) -> MeasureReport {
        MeasureReport {
            function,
            n,
            dt: None,
            cmin: None,
            cmax: None,
            degree: None,
            instc: None,
            instc_upper: None,
            witness: None,
            trees: Vec::new(),
            timings_ms: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let name = self
            .function
            .family
            .clone()
            .or_else(|| self.function.file.clone())
            .unwrap_or_default();
        let opt = |v: Option<u32>| v.map(|x| x.to_string()).unwrap_or_default();
        let rat = |v: Option<RatioJson>| match v {
            Some(r) => format!("{},{}", r.num, r.den),
            None => ",".into(),
        };
        let mut s = String::from(
            "function,n,dt,cmin,cmax,degree,instc_num,instc_den,instc_upper_num,instc_upper_den\n",
        );
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            name,
            self.n,
            opt(self.dt),
            opt(self.cmin),
            opt(self.cmax),
            opt(self.degree),
            rat(self.instc),
            rat(self.instc_upper),
        ));
        s
    }
}
