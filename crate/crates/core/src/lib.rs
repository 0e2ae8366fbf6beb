//! Exact computer algebra for symbolic powers of prime ideals.
//!
//! The crate provides polynomial arithmetic over `Q` and `F_p`, a
//! Buchberger Gröbner-basis engine, ideal operations (intersection, colon,
//! saturation, radical membership, dimension), symbolic-power membership and
//! multiplicities, characteristic-p tools (Frobenius powers, Jacobian ideals,
//! tight-closure non-membership probes), and a harness that checks
//! containment and dimension conjectures on concrete instances.

pub mod algebra;
pub mod charp;
pub mod error;
pub mod groebner;
pub mod harness;
pub mod ideal;
pub mod symbolic;

pub use algebra::{ArithOp, Field, Limits, Monomial, MonomialOrder, Polynomial, Ring, Scalar, Term};
pub use error::{Error, Result};
pub use groebner::{buchberger, eliminate, ideal_member, normal_form, DivisionCertificate, GroebnerBasis};
pub use ideal::Ideal;
pub use charp::{frobenius_power, jacobian_ideal, tc_nonmembership_probe, TcProbeResult};
pub use harness::{check_id, check_sp, gen_family, kr_example, Check, ConjectureInstance, Report, Status};
pub use symbolic::{
    hilbert_samuel_multiplicity, hypersurface_mults, order_at_origin, symbolic_member, symbolic_order,
    symbolic_power_candidate, AssertedPrime,
};

/// Version string embedded in reports.
pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");
