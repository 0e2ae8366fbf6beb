mod common;

use common::*;
use proptest::prelude::*;

use sympow_core::{order_at_origin, symbolic_member, symbolic_order, AssertedPrime, Ideal, Polynomial, Ring};

fn prime(r: &Ring, pick: u8) -> AssertedPrime {
    let gens: &[&str] = match pick % 3 {
        0 => &["x", "y"],
        1 => &["x-y", "z"],
        _ => &["x", "y", "z"],
    };
    AssertedPrime::new(Ideal::from_strs(r, gens).unwrap()).unwrap()
}

// random element of p^k: sum of products of k generators with random cofactors
fn element_of_power(r: &Ring, p: &AssertedPrime, k: u32, picks: &[(usize, RawPoly)]) -> Polynomial {
    let gens = p.ideal().gens();
    let mut acc = r.zero();
    for (i, (start, cofactor)) in picks.iter().enumerate() {
        let mut term = build(r, cofactor);
        for j in 0..k as usize {
            term = term.mul_ref(&gens[(start + i + j) % gens.len()]);
        }
        acc = acc.add_ref(&term);
    }
    acc
}

fn pieces() -> impl Strategy<Value = Vec<(usize, RawPoly)>> {
    prop::collection::vec((0usize..3, raw_poly(3, 2, 2)), 1..=2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn ordinary_powers_sit_inside_symbolic_powers(
        pick in 0u8..3,
        char_pick in 0u8..2,
        m in 1u32..=3,
        parts in pieces(),
    ) {
        let r = ring(3, [0, 7][char_pick as usize]);
        let p = prime(&r, pick);
        let f = element_of_power(&r, &p, m, &parts);
        prop_assume!(!f.is_zero());
        for k in 1..=m {
            let verdict = symbolic_member(&f, &p, k).unwrap();
            prop_assert!(verdict.verdict);
            let s = verdict.witness.unwrap();
            prop_assert!(!p.contains(&s).unwrap());
        }
    }

    #[test]
    fn membership_is_monotone_in_the_exponent(
        pick in 0u8..3,
        f in raw_poly(3, 3, 4),
    ) {
        let r = ring(3, 0);
        let p = prime(&r, pick);
        let f = build(&r, &f);
        prop_assume!(!f.is_zero());
        let mut previous = true;
        for m in 1..=4 {
            let now = symbolic_member(&f, &p, m).unwrap().verdict;
            prop_assert!(previous || !now);
            previous = now;
        }
    }

    #[test]
    fn symbolic_order_is_additive_on_products(
        pick in 0u8..3,
        a in 1u32..=2,
        b in 1u32..=2,
        left in pieces(),
        right in pieces(),
    ) {
        let r = ring(3, 0);
        let p = prime(&r, pick);
        let f = element_of_power(&r, &p, a, &left);
        let g = element_of_power(&r, &p, b, &right);
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = f.mul_ref(&g);
        prop_assert!(symbolic_member(&fg, &p, a + b).unwrap().verdict);
        let (of, og) = (symbolic_order(&f, &p, 8).unwrap(), symbolic_order(&g, &p, 8).unwrap());
        // primes generated by linear forms have a valuation
        prop_assert_eq!(symbolic_order(&fg, &p, 16).unwrap(), of + og);
    }

    #[test]
    fn order_at_origin_bounds_the_symbolic_order(
        pick in 0u8..3,
        f in raw_poly(3, 3, 4),
    ) {
        let r = ring(3, 0);
        let p = prime(&r, pick);
        let f = build(&r, &f);
        prop_assume!(!f.is_zero());
        prop_assert!(symbolic_order(&f, &p, 8).unwrap() <= order_at_origin(&f).unwrap());
    }
}
