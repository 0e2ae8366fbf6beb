use serde_json::json;

use crate::algebra::{Polynomial, Ring};
use crate::charp::{tc_nonmembership_probe, TcProbeResult};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::symbolic::{check_witness, symbolic_member, AssertedPrime};

use super::report::{Report, Status};

/// Parameters of the hypersurface example `xy(z+u) - u^s z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KrParams {
    pub s: u32,
    pub q: u32,
    pub m: u32,
}

impl KrParams {
    pub fn new(s: u32, q: u32) -> Result<Self> {
        if s < 3 {
            return Err(Error::usage("the example needs s >= 3"));
        }
        if q == 0 {
            return Err(Error::usage("the example needs q >= 1"));
        }
        if !(2 * q).is_multiple_of(s - 1) {
            return Err(Error::usage(format!(
                "s - 1 = {} does not divide 2q = {}",
                s - 1,
                2 * q
            )));
        }
        Ok(KrParams {
            s,
            q,
            m: 2 * q / (s - 1) + 1,
        })
    }

    pub fn ms(&self) -> u32 {
        self.m * self.s
    }

    pub fn relation(&self) -> String {
        format!("x*y*(z+u)-u^{}*z", self.s)
    }

    pub fn ring(&self, characteristic: u64) -> Result<Ring> {
        Ring::new(&["x", "y", "z", "u"], characteristic)?.with_relation(&self.relation())
    }
}

/// Reproduces the counterexample `x^m y ∈ (p^(ms) ∩ q) \ (m^(ms+1))^*` in
/// `k[x,y,z,u]/(xy(z+u) - u^s z)` with `p = (x,u)`, `q = (y,z)`.
pub fn kr_example(s: u32, q: u32, characteristic: u64) -> Result<Report> {
    let params = KrParams::new(s, q)?;
    if characteristic == 0 {
        return Err(Error::usage("the example needs a prime characteristic"));
    }
    let ring = params.ring(characteristic)?;
    kr_example_in(&ring, params)
}

/// As [`kr_example`], in a ring built by [`KrParams::ring`] (possibly with
/// non-default limits).
pub fn kr_example_in(ring: &Ring, params: KrParams) -> Result<Report> {
    let KrParams { s, q, m } = params;
    let ms = params.ms();
    let mut r = Report::new(Status::Verified);
    r.quantity("s", s);
    r.quantity("q", q);
    r.quantity("m", m);
    r.quantity("ms", ms);
    r.quantity("characteristic", ring.characteristic());
    r.quantity("relation", params.relation());
    r.assume("p = (x, u) and q = (y, z) are prime in A (asserted, not verified)");
    r.assume(format!(
        "(x*y - u^{s})^{q} is a test element (assumed; only a power of a Jacobian element is guaranteed)"
    ));

    let p_ideal = Ideal::from_strs(ring, &["x", "u"])?;
    let q_ideal = Ideal::from_strs(ring, &["y", "z"])?;
    let maximal = Ideal::maximal(ring);

    // (i) preconditions
    let radical_max = p_ideal.sum(&q_ideal)?.is_radical_maximal()?;
    let dim_p = p_ideal.krull_dim()?;
    let dim_q = q_ideal.krull_dim()?;
    let dim_a = Ideal::zero(ring).krull_dim()?;
    r.quantity("radical_p_plus_q_is_maximal", radical_max);
    r.quantity("dim_A_mod_p", dim_p);
    r.quantity("dim_A_mod_q", dim_q);
    r.quantity("dim_A", dim_a);
    let pre = radical_max && dim_p + dim_q == dim_a + 1;
    r.quantity("preconditions_hold", pre);
    if !pre {
        r.status = Status::PreconditionFailed;
        return Ok(r);
    }

    let p = AssertedPrime::new(p_ideal)?;
    let x = ring.var(0);
    let y = ring.var(1);
    let element = x.pow(m).mul_ref(&y);
    r.quantity("element", element.to_string());

    // (ii) symbolic membership, by the explicit witness and by the colon
    let explicit = ring.parse(&format!("y^{m}*(z+u)^{m}"))?;
    let identity = {
        let lhs = x.pow(m).mul_ref(&explicit);
        let rhs = ring.parse(&format!("u^{ms}*z^{m}"))?;
        Ideal::zero(ring).contains(&lhs.sub_ref(&rhs))?
    };
    let u_power_in = p.ideal().power(ms)?.contains(&ring.parse(&format!("u^{ms}*z^{m}"))?)?;
    let explicit_ok = identity && u_power_in && check_witness(&element, &explicit, &p, ms)?;
    r.quantity("explicit_witness_identity", identity);
    r.quantity("explicit_witness_valid", explicit_ok);
    r.witness("explicit_symbolic_witness", &explicit);
    let member = symbolic_member(&element, &p, ms)?;
    let computed_ok = member.verdict && member.recheck(&p)?;
    r.quantity("symbolic_member", member.verdict);
    if let Some(w) = &member.witness {
        r.witness("computed_symbolic_witness", w);
    }

    // (iii)
    let in_q = q_ideal.contains(&element)?;
    r.quantity("element_in_q", in_q);

    // (iv) probe against m^(ms+1) with c = (xy - u^s)^q, e = 0 only
    let c = ring.parse(&format!("(x*y-u^{s})^{q}"))?;
    let big = maximal.power(ms + 1)?;
    let probe = tc_nonmembership_probe(&element, &big, &c, 0)?;
    let probe_fails = matches!(probe.result, TcProbeResult::NotInTightClosure { failing_e: 0, .. });
    r.quantity("tc_probe", serde_json::to_value(&probe.result).expect("probe serializes"));
    if let Some(nf) = &probe.normal_form {
        r.witness("tc_certificate", nf);
    }

    // (v) the leading term, and the bracket terms reported as found
    let gb = big.basis()?;
    let lead = ring.parse(&format!("x^{}*y^{}", q + m, q + 1))?;
    let lead_nf = gb.reduce(&lead)?;
    r.quantity("leading_term", lead.to_string());
    r.quantity("leading_term_outside", !lead_nf.is_zero());
    if !lead_nf.is_zero() {
        r.witness("leading_term_normal_form", &lead_nf);
    }
    let mut brackets = Vec::new();
    let mut bracket_sum = ring.zero();
    for k in 1..=q {
        let term = bracket_term(ring, params, k)?;
        let inside = gb.contains(&term)?;
        brackets.push(json!({ "k": k, "term": term.to_string(), "in_m_power": inside }));
        bracket_sum = bracket_sum.add_ref(&term);
    }
    r.quantity("bracket_terms", brackets);
    r.quantity("bracket_sum_in_m_power", gb.contains(&bracket_sum)?);

    let all = explicit_ok && computed_ok && in_q && probe_fails && !lead_nf.is_zero();
    if !all {
        r.status = Status::Counterexample;
    }
    Ok(r)
}

/// `C(q,k) (-1)^k x^(q-k+m) y^(q-k+1) u^(sk)`, the `k`-th term of `(xy - u^s)^q x^m y`.
fn bracket_term(ring: &Ring, params: KrParams, k: u32) -> Result<Polynomial> {
    let KrParams { s, q, m } = params;
    let mut binom: u64 = 1;
    for i in 0..k as u64 {
        binom = binom * (q as u64 - i) / (i + 1);
    }
    let sign = if k % 2 == 1 { "-" } else { "" };
    ring.parse(&format!(
        "{sign}{binom}*x^{}*y^{}*u^{}",
        q - k + m,
        q - k + 1,
        s * k
    ))
}
