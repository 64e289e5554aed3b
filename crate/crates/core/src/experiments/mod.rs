//! Reproducible experiments with JSON reports.
//!
//! Each experiment runs a list of checks. A check records a short id, the
//! mathematical statement it tests, its verdict and the witness data that
//! backs the verdict. Reports are deterministic apart from the `ms` timing
//! field, which [`ExperimentReport::canonical_json`] leaves out.

mod epsilon;
mod topology;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::Result;
use crate::groups::OracleConfig;
use crate::marked::BallConfig;

pub use epsilon::{
    epsilon_substitution, exp_epsilon, kernel_derivation, kernel_witness, surjectivity_preimages,
};
pub use topology::{exp_continuity, exp_orbit, exp_zmod_limit};

/// Oracle and sweep settings shared by all experiments.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub oracle: OracleConfig,
    pub ball: BallConfig,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub pass: bool,
    pub witness: Value,
    pub ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub params: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl ExperimentReport {
    fn new(experiment: &str) -> Self {
        ExperimentReport {
            experiment: experiment.to_string(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            pass: true,
        }
    }

    fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    /// Runs `body`, which returns the verdict and witness, and records it.
    fn check(
        &mut self,
        id: impl Into<String>,
        anchor: &str,
        body: impl FnOnce() -> Result<(bool, Value)>,
    ) -> Result<()> {
        let start = Instant::now();
        let (pass, witness) = body()?;
        self.pass &= pass;
        self.checks.push(Check {
            id: id.into(),
            anchor: anchor.to_string(),
            pass,
            witness,
            ms: start.elapsed().as_millis() as u64,
        });
        Ok(())
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_value(&self, timing: bool) -> Value {
        let mut v = serde_json::to_value(self).expect("report is serializable");
        if !timing {
            if let Some(checks) = v.get_mut("checks").and_then(Value::as_array_mut) {
                for c in checks {
                    if let Some(obj) = c.as_object_mut() {
                        obj.remove("ms");
                    }
                }
            }
        }
        v
    }

    /// Pretty JSON without timing: identical across runs and worker counts.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value(false)).expect("report is serializable")
    }

    pub fn json(&self, timing: bool) -> String {
        serde_json::to_string_pretty(&self.to_value(timing)).expect("report is serializable")
    }
}
