use serde::{Deserialize, Serialize};

use crate::algebra::{Polynomial, Ring};
use crate::error::{Error, Result};
use crate::ideal::Ideal;

use super::report::Check;

/// Primes `p`, `q`, an element `f` and exponents for one conjecture check.
#[derive(Clone, Debug)]
pub struct ConjectureInstance {
    pub ring: Ring,
    pub p: Ideal,
    pub q: Ideal,
    pub f: Polynomial,
    pub m: u32,
    pub n: u32,
    pub check: Check,
    /// Element outside `p` used to saturate, when the family ships one.
    pub separator: Option<Polynomial>,
    pub seed: Option<u64>,
}

impl ConjectureInstance {
    pub fn new(
        p: Ideal,
        q: Ideal,
        f: Polynomial,
        m: u32,
        n: u32,
        check: Check,
    ) -> Result<Self> {
        let ring = p.ring().clone();
        if q.ring() != &ring || f.ring() != &ring {
            return Err(Error::usage("instance parts live in different rings"));
        }
        if f.is_zero() {
            return Err(Error::usage("the instance element must be nonzero"));
        }
        if m == 0 || n == 0 {
            return Err(Error::usage("instance exponents must be at least 1"));
        }
        Ok(ConjectureInstance {
            ring,
            p,
            q,
            f,
            m,
            n,
            check,
            separator: None,
            seed: None,
        })
    }

    pub fn with_separator(mut self, s: Polynomial) -> Self {
        self.separator = Some(s);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn to_file(&self) -> InstanceFile {
        let strs = |i: &Ideal| i.gens().iter().map(|g| g.to_string()).collect();
        InstanceFile {
            ring: RingFile {
                characteristic: self.ring.characteristic(),
                variables: self.ring.variables().to_vec(),
                relation: self
                    .ring
                    .relation(Default::default())
                    .map(|r| r.to_string()),
            },
            p: strs(&self.p),
            q: strs(&self.q),
            f: self.f.to_string(),
            m: self.m,
            n: self.n,
            check: self.check,
            separator: self.separator.as_ref().map(|s| s.to_string()),
            seed: self.seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFile {
    pub characteristic: u64,
    pub variables: Vec<String>,
    #[serde(default)]
    pub relation: Option<String>,
}

/// JSON form of a [`ConjectureInstance`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub ring: RingFile,
    pub p: Vec<String>,
    pub q: Vec<String>,
    pub f: String,
    pub m: u32,
    pub n: u32,
    pub check: Check,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::usage(format!("bad instance JSON: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instances serialize")
    }

    pub fn to_ring(&self) -> Result<Ring> {
        let base = Ring::new(&self.ring.variables, self.ring.characteristic)?;
        match &self.ring.relation {
            Some(rel) => base.with_relation(rel),
            None => Ok(base),
        }
    }

    pub fn to_instance(&self) -> Result<ConjectureInstance> {
        self.to_instance_in(&self.to_ring()?)
    }

    /// Builds the instance in `ring`, which must match the declared ring (it
    /// may carry different limits).
    pub fn to_instance_in(&self, ring: &Ring) -> Result<ConjectureInstance> {
        if ring != &self.to_ring()? {
            return Err(Error::usage("ring does not match the instance file"));
        }
        let ideal = |gens: &[String]| -> Result<Ideal> {
            let polys = gens.iter().map(|g| ring.parse(g)).collect::<Result<Vec<_>>>()?;
            Ideal::new(ring, polys)
        };
        let mut inst = ConjectureInstance::new(
            ideal(&self.p)?,
            ideal(&self.q)?,
            ring.parse(&self.f)?,
            self.m,
            self.n,
            self.check,
        )?;
        if let Some(s) = &self.separator {
            inst.separator = Some(ring.parse(s)?);
        }
        inst.seed = self.seed;
        Ok(inst)
    }
}
