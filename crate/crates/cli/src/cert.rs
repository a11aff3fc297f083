use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    Defect,
    Pmi,
    BergeCover,
    HexCore,
    SixCut,
    BipartiteIndex,
    Oddness,
    CyclicConnectivity,
    CoverDefect3,
    FourCover,
    JoinVerify,
}

/// One line of JSONL output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub version: String,
    /// Input graph as a `cmg` block.
    pub graph: String,
    pub claim: Claim,
    pub value: Value,
    pub witness: Value,
    pub verified: bool,
    #[serde(default)]
    pub error: Option<String>,
    #[serde(default)]
    pub runtime_ms: Option<u64>,
}

impl Certificate {
    pub fn new(graph: String, claim: Claim) -> Self {
        Certificate {
            schema: SCHEMA,
            version: env!("CARGO_PKG_VERSION").to_string(),
            graph,
            claim,
            value: Value::Null,
            witness: Value::Null,
            verified: false,
            error: None,
            runtime_ms: None,
        }
    }

    pub fn tsv_row(&self, index: usize) -> String {
        let claim = serde_json::to_value(self.claim).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
        let value = match &self.value {
            Value::String(s) => s.clone(),
            v => v.to_string(),
        };
        let error = self.error.as_deref().unwrap_or("").replace(['\t', '\n'], " ");
        format!("{index}\t{claim}\t{value}\t{}\t{error}", self.verified)
    }
}

pub const TSV_HEADER: &str = "index\tclaim\tvalue\tverified\terror";
