use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder};
use super::poly::{Polynomial, Term};
use crate::error::{Error, Result};

/// Name of the reserved elimination variable used by tag-variable constructions.
pub const TAG_VARIABLE: &str = "_t";

/// Soft cap on the number of ring variables (dimension search is `2^n`).
pub const MAX_VARIABLES: usize = 16;

/// Resource limits honoured by every computation in a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Maximum number of polynomials in a Gröbner basis under construction.
    pub max_basis: usize,
    /// Maximum number of terms in any intermediate polynomial.
    pub max_terms: usize,
    /// Degree cap for Hilbert-function stabilization.
    pub max_degree: usize,
    /// Default cap for symbolic-order searches.
    pub max_order: usize,
    /// Iteration cap for colon-chain saturation.
    pub max_saturation_steps: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_basis: 20_000,
            max_terms: 1_000_000,
            max_degree: 60,
            max_order: 50,
            max_saturation_steps: 100,
        }
    }
}

/// The ambient ring: variables, characteristic, and an optional hypersurface
/// relation `f_rel` so that computations take place in `R/(f_rel)`.
#[derive(Clone, Debug)]
pub struct RingSpec {
    variables: Vec<String>,
    field: Field,
    relation: Option<Vec<Term>>,
    limits: Limits,
}

/// Shared handle to a [`RingSpec`]. Two handles are equal when variables,
/// field and relation agree; limits do not take part in equality.
#[derive(Clone)]
pub struct Ring(Arc<RingSpec>);

impl Deref for Ring {
    type Target = RingSpec;
    fn deref(&self) -> &RingSpec {
        &self.0
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.variables == other.variables
                && self.field == other.field
                && self.relation == other.relation)
    }
}

impl Eq for Ring {}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    /// Polynomial ring over the field of the given characteristic.
    pub fn new<S: AsRef<str>>(variables: &[S], characteristic: u64) -> Result<Ring> {
        let field = Field::from_characteristic(characteristic)?;
        let variables: Vec<String> = variables.iter().map(|s| s.as_ref().trim().to_string()).collect();
        if variables.is_empty() {
            return Err(Error::usage("a ring needs at least one variable"));
        }
        if variables.len() > MAX_VARIABLES {
            return Err(Error::usage(format!(
                "{} variables exceed the supported maximum of {MAX_VARIABLES}",
                variables.len()
            )));
        }
        for (i, v) in variables.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::usage(format!("invalid variable name '{v}'")));
            }
            if variables[..i].contains(v) {
                return Err(Error::usage(format!("duplicate variable '{v}'")));
            }
        }
        Ok(Ring(Arc::new(RingSpec {
            variables,
            field,
            relation: None,
            limits: Limits::default(),
        })))
    }

    /// Hypersurface quotient `R/(relation)` where `relation` is parsed in `R`.
    pub fn with_relation(&self, relation: &str) -> Result<Ring> {
        let ambient = self.ambient();
        let rel = Polynomial::parse(relation, &ambient)?;
        self.with_relation_poly(&rel)
    }

    pub fn with_relation_poly(&self, rel: &Polynomial) -> Result<Ring> {
        if rel.is_zero() {
            return Err(Error::usage("the ring relation must be nonzero"));
        }
        if rel.terms().iter().any(|t| t.mono.degree() == 0) {
            return Err(Error::usage(
                "every term of the ring relation must have positive degree",
            ));
        }
        let rel = rel.with_order(MonomialOrder::DegRevLex);
        Ok(Ring(Arc::new(RingSpec {
            variables: self.variables.clone(),
            field: self.field,
            relation: Some(rel.terms().to_vec()),
            limits: self.limits,
        })))
    }

    /// Parses the inline syntax `char=<n>; vars=<a,b,...>[; rel=<poly>]`.
    pub fn parse_inline(text: &str) -> Result<Ring> {
        let mut characteristic = None;
        let mut vars = None;
        let mut rel = None;
        for part in text.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::usage(format!("ring field '{part}' lacks '='")))?;
            match key.trim() {
                "char" => {
                    characteristic = Some(value.trim().parse::<u64>().map_err(|_| {
                        Error::usage(format!("invalid characteristic '{}'", value.trim()))
                    })?)
                }
                "vars" => vars = Some(value.split(',').map(|v| v.trim().to_string()).collect::<Vec<_>>()),
                "rel" => rel = Some(value.trim().to_string()),
                other => return Err(Error::usage(format!("unknown ring field '{other}'"))),
            }
        }
        let vars = vars.ok_or_else(|| Error::usage("ring specification lacks 'vars='"))?;
        let ring = Ring::new(&vars, characteristic.unwrap_or(0))?;
        match rel {
            Some(r) if !r.is_empty() && r != "null" => ring.with_relation(&r),
            _ => Ok(ring),
        }
    }

    /// Same variables and field, no relation.
    pub fn ambient(&self) -> Ring {
        if self.relation.is_none() {
            return self.clone();
        }
        Ring(Arc::new(RingSpec {
            variables: self.variables.clone(),
            field: self.field,
            relation: None,
            limits: self.limits,
        }))
    }

    pub fn with_limits(&self, limits: Limits) -> Ring {
        let mut spec = (*self.0).clone();
        spec.limits = limits;
        Ring(Arc::new(spec))
    }

    /// The ring with the reserved tag variable prepended as variable 0. The
    /// relation is carried over.
    pub fn with_tag(&self) -> Ring {
        let mut variables = Vec::with_capacity(self.variables.len() + 1);
        let mut tag = TAG_VARIABLE.to_string();
        while self.variables.contains(&tag) {
            tag.push('_');
        }
        variables.push(tag);
        variables.extend(self.variables.iter().cloned());
        let relation = self.relation.as_ref().map(|rel| {
            rel.iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    mono: t.mono.prepend_vars(1),
                })
                .collect::<Vec<_>>()
        });
        let mut ring = RingSpec {
            variables,
            field: self.field,
            relation: None,
            limits: self.limits,
        };
        // re-sort the shifted relation under degrevlex in the larger ring
        if let Some(rel) = relation {
            let tmp = Ring(Arc::new(ring.clone()));
            let p = Polynomial::from_terms(&tmp, MonomialOrder::DegRevLex, rel);
            ring.relation = Some(p.terms().to_vec());
        }
        Ring(Arc::new(ring))
    }

    /// The relation as a polynomial in the given order, if any.
    pub fn relation(&self, order: MonomialOrder) -> Option<Polynomial> {
        self.relation
            .as_ref()
            .map(|rel| Polynomial::from_terms(self, order, rel.clone()))
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(self, self.field.one(), Monomial::var(self.nvars(), i))
    }

    pub fn var_by_name(&self, name: &str) -> Option<Polynomial> {
        self.variables.iter().position(|v| v == name).map(|i| self.var(i))
    }

    /// All ring variables, the generators of the irrelevant maximal ideal.
    pub fn variables_polys(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self, self.field.one())
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        Polynomial::parse(text, self)
    }

    pub fn parse_list(&self, text: &str) -> Result<Vec<Polynomial>> {
        text.split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| Polynomial::parse(s, self))
            .collect()
    }
}

impl RingSpec {
    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn has_relation(&self) -> bool {
        self.relation.is_some()
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Inline syntax accepted by [`Ring::parse_inline`].
    pub fn to_inline(&self) -> String {
        let mut s = format!(
            "char={}; vars={}",
            self.characteristic(),
            self.variables.join(",")
        );
        if let Some(rel) = &self.relation {
            s.push_str("; rel=");
            s.push_str(&super::parse::format_terms(rel, &self.variables, self.field));
        }
        s
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.to_inline())
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_inline())
    }
}
