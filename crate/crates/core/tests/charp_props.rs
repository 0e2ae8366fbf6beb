mod common;

use common::*;
use proptest::prelude::*;

use sympow_core::charp::TcProbeResult;
use sympow_core::{frobenius_power, jacobian_ideal, tc_nonmembership_probe, Ideal, Ring};

fn ideal(r: &Ring, raws: &[RawPoly]) -> Option<Ideal> {
    let gens = build_all(r, raws);
    (!gens.is_empty()).then(|| Ideal::new(r, gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn frobenius_powers_compose(
        a in prop::collection::vec(raw_poly(3, 2, 2), 1..=2),
        e in 0u32..=1,
        e2 in 0u32..=1,
    ) {
        let r = ring(3, 3);
        let Some(i) = ideal(&r, &a) else { return Ok(()) };
        let stepwise = frobenius_power(&frobenius_power(&i, e).unwrap(), e2).unwrap();
        let direct = frobenius_power(&i, e + e2).unwrap();
        prop_assert!(stepwise.equals(&direct).unwrap());
    }

    #[test]
    fn frobenius_power_respects_sums(
        a in prop::collection::vec(raw_poly(3, 2, 2), 1..=2),
        b in prop::collection::vec(raw_poly(3, 2, 2), 1..=2),
    ) {
        let r = ring(3, 5);
        let (Some(i), Some(j)) = (ideal(&r, &a), ideal(&r, &b)) else { return Ok(()) };
        let lhs = frobenius_power(&i.sum(&j).unwrap(), 1).unwrap();
        let rhs = frobenius_power(&i, 1).unwrap().sum(&frobenius_power(&j, 1).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn probe_never_refutes_members(
        a in prop::collection::vec(raw_poly(3, 2, 2), 1..=2),
        cofactor in raw_poly(3, 2, 1),
        c in raw_poly(3, 2, 1),
    ) {
        let r = ring(3, 3);
        let Some(i) = ideal(&r, &a) else { return Ok(()) };
        let z = i.gens()[0].mul_ref(&build(&r, &cofactor));
        let c = build(&r, &c);
        prop_assume!(!c.is_zero());
        let probe = tc_nonmembership_probe(&z, &i, &c, 2).unwrap();
        prop_assert_eq!(probe.result, TcProbeResult::ConsistentUpTo { e_max: 2 });
    }

    #[test]
    fn jacobian_ideal_contains_leibniz_partials(
        f in raw_poly(3, 2, 2),
        g in raw_poly(3, 2, 2),
    ) {
        let base = ring(3, 7);
        let (f, g) = (build(&base, &f), build(&base, &g));
        let rel = f.mul_ref(&g);
        prop_assume!(!rel.is_zero() && rel.terms().iter().all(|t| t.mono.degree() > 0));
        let a = base.with_relation_poly(&rel).unwrap();
        let jac = jacobian_ideal(&a).unwrap();
        for k in 0..3 {
            let leibniz = f.derivative(k).mul_ref(&g).add_ref(&f.mul_ref(&g.derivative(k)));
            prop_assert!(jac.contains(&leibniz.in_ring(&a)).unwrap());
        }
    }
}
