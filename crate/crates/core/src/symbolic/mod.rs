//! Symbolic powers along asserted primes, symbolic orders, and multiplicities.
//!
//! `f ∈ p^(m)` holds iff the colon `(p^m : f)` is not contained in `p`; a
//! generator of the colon outside `p` is the witness `s` with `s·f ∈ p^m`.
//! In a regular ring the symbolic order of `f` along `p` is the multiplicity
//! of the hypersurface `R_p/(f)`, which is what [`hypersurface_mults`] reports.

mod multiplicity;

pub use multiplicity::{
    hilbert_function, hilbert_samuel_multiplicity, hilbert_series_numerator, HilbertData,
};

use crate::algebra::{MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// An ideal whose primality is taken on trust from the caller.
#[derive(Clone, Debug)]
pub struct AssertedPrime {
    ideal: Ideal,
}

impl AssertedPrime {
    /// Checks properness and, in a quotient ring, that the relation lies in the
    /// ideal generated in the ambient ring. Primality itself is not verified.
    pub fn new(ideal: Ideal) -> Result<Self> {
        if !ideal.is_proper()? {
            return Err(Error::usage(format!("asserted prime {ideal} is not proper")));
        }
        let ring = ideal.ring();
        if let Some(rel) = ring.relation(MonomialOrder::DegRevLex) {
            let ambient = ring.ambient();
            let lifted = ideal.in_ring(&ambient)?;
            if !lifted.contains(&rel.in_ring(&ambient))? {
                return Err(Error::usage(format!(
                    "asserted prime {ideal} does not contain the ring relation"
                )));
            }
        }
        Ok(AssertedPrime { ideal })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.ideal.contains(f)
    }
}

/// Outcome of a symbolic-power membership query.
#[derive(Clone, Debug)]
pub struct SymbolicMembership {
    pub element: Polynomial,
    pub exponent: u32,
    pub verdict: bool,
    /// `s` with `s·f ∈ p^m` and `s ∉ p`, present iff the verdict is true.
    pub witness: Option<Polynomial>,
}

impl SymbolicMembership {
    /// Re-checks the witness conditions from scratch.
    pub fn recheck(&self, p: &AssertedPrime) -> Result<bool> {
        match (&self.witness, self.verdict) {
            (Some(s), true) => check_witness(&self.element, s, p, self.exponent),
            (None, false) => Ok(true),
            _ => Ok(false),
        }
    }
}

/// `s·f ∈ p^m` and `s ∉ p`.
pub fn check_witness(f: &Polynomial, s: &Polynomial, p: &AssertedPrime, m: u32) -> Result<bool> {
    if p.contains(s)? {
        return Ok(false);
    }
    let pm = p.ideal().power(m)?;
    pm.contains(&s.mul_ref(f))
}

/// Decides `f ∈ p^(m)` against an already computed `p^m`.
fn member_with_power(f: &Polynomial, p: &AssertedPrime, pm: &Ideal, m: u32) -> Result<SymbolicMembership> {
    let colon = pm.colon(f)?;
    let gb = colon.basis()?;
    let mut witness = None;
    for s in gb.generators() {
        if !p.contains(s)? {
            witness = Some(s.clone());
            break;
        }
    }
    Ok(SymbolicMembership {
        element: f.clone(),
        exponent: m,
        verdict: witness.is_some(),
        witness,
    })
}

pub fn symbolic_member(f: &Polynomial, p: &AssertedPrime, m: u32) -> Result<SymbolicMembership> {
    if f.is_zero() {
        return Err(Error::usage("symbolic membership of the zero polynomial"));
    }
    if m == 0 {
        return Err(Error::usage("symbolic power exponent must be at least 1"));
    }
    // p^(m) ⊆ p
    if !p.contains(f)? {
        return Ok(SymbolicMembership {
            element: f.clone(),
            exponent: m,
            verdict: false,
            witness: None,
        });
    }
    let pm = p.ideal().power(m)?;
    member_with_power(f, p, &pm, m)
}

/// Largest `m <= cap` with `f ∈ p^(m)`; 0 when `f ∉ p`. Errors when `f` lies
/// in `p^(cap+1)` as well.
pub fn symbolic_order(f: &Polynomial, p: &AssertedPrime, cap: u32) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::usage("the zero polynomial has infinite symbolic order"));
    }
    if cap == 0 {
        return Err(Error::usage("symbolic order cap must be at least 1"));
    }
    if !p.contains(f)? {
        return Ok(0);
    }
    let mut power = p.ideal().interreduced()?;
    for m in 1..=cap + 1 {
        if m > 1 {
            power = power.product(p.ideal())?.interreduced()?;
        }
        if !member_with_power(f, p, &power, m)?.verdict {
            return Ok(m - 1);
        }
    }
    Err(Error::cap("symbolic_order", cap as usize).with_cap_context(format!(
        "{f} lies in the symbolic power of exponent {}",
        cap + 1
    )))
}

/// `saturate(p^m, s)`, always contained in `p^(m)`. The flag records whether
/// every generator passed the symbolic-membership re-check.
pub fn symbolic_power_candidate(
    p: &AssertedPrime,
    m: u32,
    separator: &Polynomial,
) -> Result<(Ideal, bool)> {
    if p.contains(separator)? {
        return Err(Error::usage(format!(
            "separator {separator} lies in the prime {}",
            p.ideal()
        )));
    }
    let pm = p.ideal().power(m)?;
    let candidate = pm.saturate(separator)?;
    let mut sound = true;
    for g in candidate.gens() {
        if !member_with_power(g, p, &pm, m)?.verdict {
            sound = false;
            break;
        }
    }
    Ok((candidate, sound))
}

/// Order of vanishing at the origin: the least total degree of a term.
pub fn order_at_origin(f: &Polynomial) -> Result<u32> {
    if f.ring().has_relation() {
        return Err(Error::usage("order at the origin needs a relation-free ring"));
    }
    f.min_degree()
        .ok_or_else(|| Error::usage("the zero polynomial has no order"))
}

/// `(e(A), e(A_P), e(A_Q))` for the hypersurface `A = R/(f)` in a regular ring.
pub fn hypersurface_mults(
    f: &Polynomial,
    p: &AssertedPrime,
    q: &AssertedPrime,
) -> Result<(u32, u32, u32)> {
    if f.ring().has_relation() {
        return Err(Error::usage("hypersurface multiplicities need a relation-free ring"));
    }
    if f.is_zero() || f.is_unit() {
        return Err(Error::usage("the hypersurface equation must be a nonzero non-unit"));
    }
    for (name, prime) in [("p", p), ("q", q)] {
        if !prime.contains(f)? {
            return Err(Error::usage(format!("{f} does not lie in {name}")));
        }
    }
    let cap = f.ring().limits().max_order as u32;
    Ok((
        order_at_origin(f)?,
        symbolic_order(f, p, cap)?,
        symbolic_order(f, q, cap)?,
    ))
}
