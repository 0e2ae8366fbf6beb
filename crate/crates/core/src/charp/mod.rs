//! Characteristic-p tools: Frobenius powers, Jacobian ideals, and a probe
//! that can refute tight-closure membership given an assumed test element.

use serde::{Deserialize, Serialize};

use crate::algebra::{MonomialOrder, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::ideal::Ideal;

fn frobenius_factor(ring: &Ring, e: u32) -> Result<u32> {
    let p = ring.characteristic();
    if p == 0 {
        return Err(Error::usage("Frobenius powers need positive characteristic"));
    }
    let q = p
        .checked_pow(e)
        .filter(|q| *q <= u32::MAX as u64)
        .ok_or_else(|| Error::cap("frobenius_exponent", u32::MAX as usize))?;
    Ok(q as u32)
}

/// `z^{p^e}`; Frobenius is additive in characteristic `p`, so this only
/// multiplies exponents.
pub fn frobenius_image(z: &Polynomial, e: u32) -> Result<Polynomial> {
    let q = frobenius_factor(z.ring(), e)?;
    z.frobenius_exponents(q)
        .ok_or_else(|| Error::cap("exponent_overflow", u32::MAX as usize))
}

/// `I^[p^e]`: generated by the `p^e`-th powers of the generators. In a
/// quotient ring the relation stays unraised.
pub fn frobenius_power(ideal: &Ideal, e: u32) -> Result<Ideal> {
    frobenius_factor(ideal.ring(), e)?;
    let gens = ideal
        .gens()
        .iter()
        .map(|g| frobenius_image(g, e))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens)
}

/// Ideal of the partial derivatives of the ring relation, in the quotient ring.
pub fn jacobian_ideal(ring: &Ring) -> Result<Ideal> {
    let rel = ring
        .relation(MonomialOrder::DegRevLex)
        .ok_or_else(|| Error::usage("the Jacobian ideal needs a ring relation"))?;
    let partials = (0..ring.nvars()).map(|i| rel.derivative(i)).collect();
    Ideal::new(ring, partials)
}

/// Outcome of [`tc_nonmembership_probe`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum TcProbeResult {
    /// `c·z^{p^e}` has a nonzero normal form modulo `I^[p^e]` at `failing_e`;
    /// if `c` is a test element, `z` is not in the tight closure of `I`.
    NotInTightClosure {
        failing_e: u32,
        /// The nonzero normal form.
        certificate: String,
    },
    /// Every exponent up to `e_max` passed; no membership claim follows.
    ConsistentUpTo { e_max: u32 },
}

/// Probe result plus the assumption it rests on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TcProbe {
    pub result: TcProbeResult,
    /// Normal form of the failing product, when there is one.
    pub normal_form: Option<Polynomial>,
    pub assumption: String,
}

/// Tests `c·z^{p^e} ∈ I^[p^e]` for `e = 0..=e_max` and stops at the first failure.
/// The answer is meaningful only if `c` is a test element, which is assumed.
pub fn tc_nonmembership_probe(
    z: &Polynomial,
    ideal: &Ideal,
    c: &Polynomial,
    e_max: u32,
) -> Result<TcProbe> {
    if z.ring() != ideal.ring() || c.ring() != ideal.ring() {
        return Err(Error::usage("probe inputs live in different rings"));
    }
    if ideal.ring().characteristic() == 0 {
        return Err(Error::usage("tight-closure probes need positive characteristic"));
    }
    if c.is_zero() {
        return Err(Error::usage("the test element must be nonzero"));
    }
    let assumption = format!("{c} is assumed to be a test element (not verified)");
    for e in 0..=e_max {
        let step = || -> Result<Option<Polynomial>> {
            let frob = frobenius_power(ideal, e)?;
            let target = c.mul_ref(&frobenius_image(z, e)?);
            let nf = frob.basis()?.reduce(&target)?;
            Ok((!nf.is_zero()).then_some(nf))
        };
        let outcome = step().map_err(|err| {
            let done = if e == 0 {
                "none".to_string()
            } else {
                (e - 1).to_string()
            };
            err.with_cap_context(format!("at e = {e}; last completed e = {done}"))
        })?;
        if let Some(nf) = outcome {
            return Ok(TcProbe {
                result: TcProbeResult::NotInTightClosure {
                    failing_e: e,
                    certificate: nf.to_string(),
                },
                normal_form: Some(nf),
                assumption,
            });
        }
    }
    Ok(TcProbe {
        result: TcProbeResult::ConsistentUpTo { e_max },
        normal_form: None,
        assumption,
    })
}
