use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Verified,
    Counterexample,
    PreconditionFailed,
    Vacuous,
}

impl Status {
    /// Process exit code for a report with this status.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::Counterexample => 2,
            Status::PreconditionFailed | Status::Vacuous => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "VERIFIED",
            Status::Counterexample => "COUNTEREXAMPLE",
            Status::PreconditionFailed => "PRECONDITION_FAILED",
            Status::Vacuous => "VACUOUS",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which conjecture variant an instance is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Check {
    SP1,
    SP2,
    ID1,
    ID2,
    #[serde(rename = "WEAK_ID2")]
    WeakId2,
}

impl Check {
    pub fn is_sp(self) -> bool {
        matches!(self, Check::SP1 | Check::SP2)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Check::SP1 => "SP1",
            Check::SP2 => "SP2",
            Check::ID1 => "ID1",
            Check::ID2 => "ID2",
            Check::WeakId2 => "WEAK_ID2",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_uppercase().replace('-', "_").as_str() {
            "SP1" | "SP_1" => Ok(Check::SP1),
            "SP2" | "SP_2" => Ok(Check::SP2),
            "ID1" | "ID_1" => Ok(Check::ID1),
            "ID2" | "ID_2" => Ok(Check::ID2),
            "WEAK_ID2" | "WEAK_ID_2" => Ok(Check::WeakId2),
            _ => Err(Error::usage(format!("unknown check {s:?}"))),
        }
    }
}

/// A labelled polynomial certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    pub label: String,
    pub polynomial: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub status: Status,
    pub quantities: BTreeMap<String, Value>,
    pub witnesses: Vec<Witness>,
    pub assumptions: Vec<String>,
    pub seed: Option<u64>,
    pub toolkit_version: String,
}

impl Report {
    pub fn new(status: Status) -> Self {
        Report {
            status,
            quantities: BTreeMap::new(),
            witnesses: Vec::new(),
            assumptions: Vec::new(),
            seed: None,
            toolkit_version: crate::TOOLKIT_VERSION.to_string(),
        }
    }

    pub fn quantity(&mut self, key: &str, value: impl Into<Value>) {
        self.quantities.insert(key.to_string(), value.into());
    }

    pub fn witness(&mut self, label: &str, poly: impl fmt::Display) {
        self.witnesses.push(Witness {
            label: label.to_string(),
            polynomial: poly.to_string(),
        });
    }

    pub fn assume(&mut self, note: impl Into<String>) {
        self.assumptions.push(note.into());
    }

    pub fn witness_named(&self, label: &str) -> Option<&str> {
        self.witnesses
            .iter()
            .find(|w| w.label == label)
            .map(|w| w.polynomial.as_str())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::usage(format!("bad report JSON: {e}")))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "status: {}", self.status)?;
        for (k, v) in &self.quantities {
            writeln!(f, "  {k} = {v}")?;
        }
        for w in &self.witnesses {
            writeln!(f, "  witness {}: {}", w.label, w.polynomial)?;
        }
        for a in &self.assumptions {
            writeln!(f, "  assuming: {a}")?;
        }
        if let Some(seed) = self.seed {
            writeln!(f, "  seed: {seed}")?;
        }
        write!(f, "  toolkit_version: {}", self.toolkit_version)
    }
}
