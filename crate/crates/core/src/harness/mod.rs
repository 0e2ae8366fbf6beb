//! Conjecture instances, the SP/ID checkers, the hypersurface counterexample
//! and seeded instance families.

mod checks;
mod family;
mod instance;
mod kr;
mod report;

pub use checks::{check_id, check_sp, recheck_witnesses, run_instance};
pub use family::{gen_family, FamilyParams, CURVE_345_PRIME, FAMILIES};
pub use instance::{ConjectureInstance, InstanceFile, RingFile};
pub use kr::{kr_example, kr_example_in, KrParams};
pub use report::{Check, Report, Status, Witness};
