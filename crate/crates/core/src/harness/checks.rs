use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::symbolic::{check_witness, hypersurface_mults, symbolic_member, AssertedPrime};

use super::instance::ConjectureInstance;
use super::report::{Check, Report, Status};

const ANALYTIC_NOTE: &str = "quasi-unmixed and analytically unramified hold for hypersurfaces \
     of polynomial rings over a field (excellent, equidimensional); logged, not computed";

fn base_report(inst: &ConjectureInstance) -> Report {
    let mut r = Report::new(Status::Verified);
    r.seed = inst.seed;
    r.quantity("check", inst.check.as_str());
    r.quantity("variables", inst.ring.nvars());
    r.quantity("characteristic", inst.ring.characteristic());
    r.assume(format!("p = {} is prime (asserted, not verified)", inst.p));
    r.assume(format!("q = {} is prime (asserted, not verified)", inst.q));
    if let Some(s) = &inst.separator {
        r.assume(format!(
            "separator {s} meets every embedded prime of the powers of p (documented, not verified)"
        ));
    }
    r
}

fn fail(mut r: Report, why: impl Into<String>) -> Report {
    r.status = Status::PreconditionFailed;
    r.quantity("precondition", why.into());
    r
}

fn asserted(ideal: &Ideal, name: &str) -> Result<std::result::Result<AssertedPrime, String>> {
    if !ideal.is_proper()? {
        return Ok(Err(format!("{name} is not a proper ideal")));
    }
    Ok(Ok(AssertedPrime::new(ideal.clone())?))
}

/// Shared preconditions: proper primes whose sum has the maximal ideal as radical.
fn primes_and_radical(
    inst: &ConjectureInstance,
    r: &mut Report,
) -> Result<std::result::Result<(AssertedPrime, AssertedPrime), String>> {
    let p = match asserted(&inst.p, "p")? {
        Ok(p) => p,
        Err(e) => return Ok(Err(e)),
    };
    let q = match asserted(&inst.q, "q")? {
        Ok(q) => q,
        Err(e) => return Ok(Err(e)),
    };
    let radical_max = inst.p.sum(&inst.q)?.is_radical_maximal()?;
    r.quantity("radical_p_plus_q_is_maximal", radical_max);
    if !radical_max {
        return Ok(Err("the radical of p + q is not the maximal ideal".into()));
    }
    Ok(Ok((p, q)))
}

/// SP-1: `p^(m) ∩ q ⊆ m^(m+1)`; SP-2: `p^(m) ∩ q^(n) ⊆ m^(m+n)`, tested on `f`.
pub fn check_sp(inst: &ConjectureInstance) -> Result<Report> {
    if !inst.check.is_sp() {
        return Err(Error::usage(format!("check_sp cannot run {}", inst.check)));
    }
    let mut r = base_report(inst);
    let ring = &inst.ring;
    if ring.has_relation() {
        return Ok(fail(r, "SP checks need a relation-free (regular) ring"));
    }
    let (p, q) = match primes_and_radical(inst, &mut r)? {
        Ok(pq) => pq,
        Err(why) => return Ok(fail(r, why)),
    };
    let nvars = ring.nvars();
    let (dp, dq) = (inst.p.krull_dim()?, inst.q.krull_dim()?);
    r.quantity("dim_R_mod_p", dp);
    r.quantity("dim_R_mod_q", dq);
    r.quantity("dim_R", nvars);
    r.quantity("serre_bound_holds", dp + dq <= nvars);
    if dp + dq != nvars {
        return Ok(fail(r, "dim(R/p) + dim(R/q) differs from dim R"));
    }

    let in_p = symbolic_member(&inst.f, &p, inst.m)?;
    r.quantity("f_in_symbolic_power_of_p", in_p.verdict);
    let Some(sp) = in_p.witness else {
        return Ok(fail(r, "f does not lie in the symbolic power of p"));
    };
    r.witness("p_symbolic_witness", &sp);
    let target = match inst.check {
        Check::SP1 => {
            let in_q = inst.q.contains(&inst.f)?;
            r.quantity("f_in_q", in_q);
            if !in_q {
                return Ok(fail(r, "f does not lie in q"));
            }
            inst.m + 1
        }
        _ => {
            let in_q = symbolic_member(&inst.f, &q, inst.n)?;
            r.quantity("f_in_symbolic_power_of_q", in_q.verdict);
            let Some(sq) = in_q.witness else {
                return Ok(fail(r, "f does not lie in the symbolic power of q"));
            };
            r.witness("q_symbolic_witness", &sq);
            inst.m + inst.n
        }
    };
    r.quantity("target_power", target);
    let order = inst.f.min_degree().unwrap_or(0);
    r.quantity("order_at_origin", order);
    let contained = Ideal::maximal(ring).power(target)?.contains(&inst.f)?;
    r.quantity("f_in_maximal_power", contained);
    if !contained {
        r.status = Status::Counterexample;
        r.witness("failing_element", &inst.f);
    }
    Ok(r)
}

/// ID-1 / ID-2 / weak ID-2 on the hypersurface `R/(f)`.
pub fn check_id(inst: &ConjectureInstance) -> Result<Report> {
    if inst.check.is_sp() {
        return Err(Error::usage(format!("check_id cannot run {}", inst.check)));
    }
    let mut r = base_report(inst);
    r.assume(ANALYTIC_NOTE);
    let ring = &inst.ring;
    if ring.has_relation() {
        return Ok(fail(r, "ID checks take f in a relation-free ambient ring"));
    }
    if inst.f.is_unit() {
        return Ok(fail(r, "f is a unit"));
    }
    let (p, q) = match primes_and_radical(inst, &mut r)? {
        Ok(pq) => pq,
        Err(why) => return Ok(fail(r, why)),
    };
    let in_both = inst.p.contains(&inst.f)? && inst.q.contains(&inst.f)?;
    r.quantity("f_in_p_and_q", in_both);
    if !in_both {
        return Ok(fail(r, "f does not lie in p ∩ q"));
    }
    let nvars = ring.nvars();
    let (dp, dq) = (inst.p.krull_dim()?, inst.q.krull_dim()?);
    let dim_a = nvars - 1;
    r.quantity("dim_A_mod_P", dp);
    r.quantity("dim_A_mod_Q", dq);
    r.quantity("dim_A", dim_a);
    r.quantity("serre_bound_holds", dp + dq <= nvars);

    let (ea, eap, eaq) = hypersurface_mults(&inst.f, &p, &q)?;
    r.quantity("eA", ea);
    r.quantity("eAP", eap);
    r.quantity("eAQ", eaq);
    let hypothesis = match inst.check {
        Check::ID1 => ea == eap,
        _ => ea < eap + eaq,
    };
    r.quantity("hypothesis_holds", hypothesis);
    let bound = match inst.check {
        Check::WeakId2 => dim_a + 1,
        _ => dim_a,
    };
    r.quantity("dimension_bound", bound);
    r.quantity("conclusion_holds", dp + dq <= bound);
    r.status = if !hypothesis {
        Status::Vacuous
    } else if dp + dq <= bound {
        Status::Verified
    } else {
        Status::Counterexample
    };
    Ok(r)
}

/// Dispatches on the instance's check.
pub fn run_instance(inst: &ConjectureInstance) -> Result<Report> {
    if inst.check.is_sp() {
        check_sp(inst)
    } else {
        check_id(inst)
    }
}

/// Re-checks every witness of a report against the instance.
pub fn recheck_witnesses(inst: &ConjectureInstance, report: &Report) -> Result<bool> {
    let parse = |s: &str| -> Result<Polynomial> { inst.ring.parse(s) };
    for w in &report.witnesses {
        let poly = parse(&w.polynomial)?;
        let ok = match w.label.as_str() {
            "p_symbolic_witness" => {
                check_witness(&inst.f, &poly, &AssertedPrime::new(inst.p.clone())?, inst.m)?
            }
            "q_symbolic_witness" => {
                check_witness(&inst.f, &poly, &AssertedPrime::new(inst.q.clone())?, inst.n)?
            }
            "failing_element" => {
                let target = match inst.check {
                    Check::SP1 => inst.m + 1,
                    _ => inst.m + inst.n,
                };
                poly == inst.f && !Ideal::maximal(&inst.ring).power(target)?.contains(&poly)?
            }
            other => return Err(Error::usage(format!("unknown witness label {other:?}"))),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}
