//! The `ReportV1` output of `invariants`, `classify` and `verify`.

use std::collections::BTreeMap;

use serde::Serialize;
use sha2::{Digest, Sha256};
use spinorlab::invariants::Provenance;

use crate::state_file::{CoeffV1, Render, StateFileV1};

pub const REPORT_FORMAT: &str = "spinorlab-report/1";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValueV1 {
    pub value: CoeffV1,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationV1 {
    pub modes: usize,
    pub chirality: String,
    pub particle_sectors: Vec<usize>,
    pub nullity: usize,
    pub pure: bool,
    pub majorana: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FailureV1 {
    pub trial: usize,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub state: Option<StateFileV1>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityV1 {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<FailureV1>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteV1 {
    pub name: String,
    pub seed: u64,
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub identities: Vec<IdentityV1>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportV1 {
    pub format: &'static str,
    pub command: String,
    pub input_digest: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, ValueV1>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationV1>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<SuiteV1>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

impl ReportV1 {
    pub fn new(command: impl Into<String>, input: &[u8]) -> Self {
        ReportV1 {
            format: REPORT_FORMAT,
            command: command.into(),
            input_digest: sha256_hex(input),
            values: BTreeMap::new(),
            classification: None,
            suite: None,
        }
    }

    pub fn add_value<S: Render>(
        &mut self,
        label: impl Into<String>,
        v: &S,
        provenance: Provenance,
    ) {
        self.values.insert(
            label.into(),
            ValueV1 {
                value: v.render(),
                provenance: provenance.to_string(),
            },
        );
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// `label,re,im` rows. Classification fields and suite identities reuse the
    /// three columns as `label,value,` and `identity,passed,failed`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("label,re,im\n");
        for (label, v) in &self.values {
            out.push_str(&format!("{label},{},{}\n", v.value.re, v.value.im));
        }
        if let Some(c) = &self.classification {
            let sectors: Vec<String> = c.particle_sectors.iter().map(ToString::to_string).collect();
            for (k, v) in [
                ("modes", c.modes.to_string()),
                ("chirality", c.chirality.clone()),
                ("particle_sectors", sectors.join(" ")),
                ("nullity", c.nullity.to_string()),
                ("pure", c.pure.to_string()),
                ("majorana", c.majorana.to_string()),
            ] {
                out.push_str(&format!("{k},{v},\n"));
            }
        }
        if let Some(s) = &self.suite {
            for id in &s.identities {
                out.push_str(&format!("{},{},{}\n", id.name, id.passed, id.failed));
            }
        }
        out
    }
}
