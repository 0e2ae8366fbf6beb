#![allow(dead_code)]

use proptest::prelude::*;

use sympow_core::{Monomial, MonomialOrder, Polynomial, Ring, Term};

pub const NAMES: [&str; 5] = ["x", "y", "z", "w", "v"];

pub fn ring(nvars: usize, characteristic: u64) -> Ring {
    Ring::new(&NAMES[..nvars], characteristic).unwrap()
}

/// Raw polynomial: (coefficient, variable indices whose multiset is the monomial).
pub type RawPoly = Vec<(i64, Vec<usize>)>;

pub fn raw_poly(nvars: usize, terms: usize, degree: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec(
        (-6i64..=6, prop::collection::vec(0..nvars, 0..=degree)),
        1..=terms,
    )
}

pub fn raw_monomial(nvars: usize, degree: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..nvars, 0..=degree)
}

pub fn monomial(nvars: usize, vars: &[usize]) -> Monomial {
    let mut e = vec![0u32; nvars];
    for &v in vars {
        e[v] += 1;
    }
    Monomial::from_exponents(&e)
}

pub fn build(ring: &Ring, raw: &RawPoly) -> Polynomial {
    let field = ring.field();
    let terms = raw
        .iter()
        .map(|(c, vars)| Term {
            coeff: field.from_i64(*c),
            mono: monomial(ring.nvars(), vars),
        })
        .collect();
    Polynomial::from_terms(ring, MonomialOrder::DegRevLex, terms)
}

pub fn build_all(ring: &Ring, raws: &[RawPoly]) -> Vec<Polynomial> {
    raws.iter()
        .map(|r| build(ring, r))
        .filter(|p| !p.is_zero())
        .collect()
}

pub fn mono_poly(ring: &Ring, vars: &[usize]) -> Polynomial {
    ring.one().mul_term(&ring.field().one(), &monomial(ring.nvars(), vars))
}
