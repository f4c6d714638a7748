//! One JSON object per run, appended as a line to the `--report` file.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counters {
    pub predicate_evaluations: u64,
    pub visibility_queries: u64,
    pub block_updates: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub subcommand: String,
    pub inputs: Vec<InputDigest>,
    pub outputs: BTreeMap<String, String>,
    pub counters: Counters,
}

impl RunReport {
    pub fn new(subcommand: &str) -> Self {
        Self { subcommand: subcommand.to_string(), ..Self::default() }
    }

    pub fn input(&mut self, name: &str, contents: &str) {
        let digest = Sha256::digest(contents.as_bytes());
        let sha256 = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.inputs.push(InputDigest { name: name.to_string(), sha256 });
    }

    pub fn output(&mut self, key: &str, value: impl ToString) {
        self.outputs.insert(key.to_string(), value.to_string());
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn append_to(&self, path: &Path) -> std::io::Result<()> {
        let mut f = OpenOptions::new().create(true).append(true).open(path)?;
        writeln!(f, "{}", self.to_line())
    }
}
