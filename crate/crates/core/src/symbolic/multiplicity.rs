use crate::algebra::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// Hilbert data of a graded quotient `R/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n`, lowest degree first.
    pub numerator: Vec<i128>,
    pub dimension: usize,
    pub multiplicity: u64,
    /// First degree from which the Samuel function agrees with its polynomial.
    pub stable_from: usize,
}

fn poly_add(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] += v;
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

fn poly_shift(a: &[i128], k: usize) -> Vec<i128> {
    let mut out = vec![0; k];
    out.extend_from_slice(a);
    out
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Numerator of the Hilbert series of `k[x_1..x_n]/(gens)` for monomial `gens`,
/// by the pivot recursion `N(I) = N(I + (v)) + t^deg(v) N(I : v)`.
pub fn hilbert_series_numerator(gens: &[Monomial], nvars: usize) -> Vec<i128> {
    numerator_rec(minimalize(gens.to_vec()), nvars)
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    // pure powers of distinct variables: product of (1 - t^a)
    if gens.iter().all(|g| g.support().count() == 1) {
        let mut acc = vec![1i128];
        for g in &gens {
            let d = g.degree() as usize;
            let mut factor = vec![0i128; d + 1];
            factor[0] = 1;
            factor[d] = -1;
            let mut next = vec![0i128; acc.len() + d];
            for (i, a) in acc.iter().enumerate() {
                for (j, f) in factor.iter().enumerate() {
                    next[i + j] += a * f;
                }
            }
            acc = next;
        }
        while acc.len() > 1 && *acc.last().unwrap() == 0 {
            acc.pop();
        }
        return acc;
    }
    // pivot on the variable occurring in the most mixed generators
    let mut counts = vec![0usize; nvars];
    for g in gens.iter().filter(|g| g.support().count() > 1) {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let var = (0..nvars).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
    // exponents from mixed generators only, so the pivot lies outside the ideal
    let mut exps: Vec<u32> = gens
        .iter()
        .filter(|g| g.support().count() > 1)
        .map(|g| g.exponent(var))
        .filter(|&e| e > 0)
        .collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2].max(1);
    let pivot = Monomial::var(nvars, var).pow(e).unwrap();

    let mut sum = gens.clone();
    sum.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let ex = g.exponent(var);
            g.with_exponent(var, ex.saturating_sub(e))
        })
        .collect();
    let a = numerator_rec(minimalize(sum), nvars);
    let b = numerator_rec(minimalize(colon), nvars);
    poly_add(&a, &poly_shift(&b, e as usize))
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Values `H(0..=up_to)` of the Hilbert function with the given series numerator.
pub fn hilbert_function(numerator: &[i128], nvars: usize, up_to: usize) -> Vec<i128> {
    (0..=up_to as i128)
        .map(|t| {
            numerator
                .iter()
                .enumerate()
                .map(|(k, c)| c * binomial(t - k as i128 + nvars as i128 - 1, nvars as i128 - 1))
                .sum()
        })
        .collect()
}

/// Hilbert–Samuel multiplicity of `R/I` at the irrelevant ideal, for a
/// homogeneous ideal of a relation-free ring.
///
/// Counts standard monomials of the initial ideal degree by degree, sums them
/// into the Samuel function, and reads `e` off the `d`-th finite difference
/// once it has stabilized (`d` the Krull dimension).
pub fn hilbert_samuel_multiplicity(ideal: &Ideal) -> Result<HilbertData> {
    let ring = ideal.ring();
    if ring.has_relation() {
        return Err(Error::usage(
            "multiplicity needs a relation-free ring; fold the relation into the ideal",
        ));
    }
    if let Some(g) = ideal.gens().iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::usage(format!("generator {g} is not homogeneous")));
    }
    let gb = ideal.groebner(MonomialOrder::DegRevLex)?;
    if gb.is_unit_ideal() {
        return Err(Error::NotProper);
    }
    let n = ring.nvars();
    let numerator = hilbert_series_numerator(&gb.leading_monomials(), n);
    let d = ideal.krull_dim()?;

    // H agrees with its polynomial from degree deg N - n + 1 on
    let stable_from = (numerator.len() as i64 - n as i64).max(0) as usize;
    let window = 3;
    let needed = stable_from + d + window;
    let cap = ring.limits().max_degree;
    if needed > cap {
        return Err(Error::cap("max_degree", cap).with_cap_context(format!(
            "Hilbert function stabilizes only from degree {stable_from}"
        )));
    }
    let h = hilbert_function(&numerator, n, needed);
    let mut samuel: Vec<i128> = h
        .iter()
        .scan(0i128, |acc, v| {
            *acc += v;
            Some(*acc)
        })
        .collect();
    for _ in 0..d {
        samuel = samuel.windows(2).map(|w| w[1] - w[0]).collect();
    }
    let tail = &samuel[stable_from..stable_from + window];
    if tail.iter().any(|v| *v != tail[0]) {
        return Err(Error::Internal(format!(
            "finite differences did not stabilize: {tail:?}"
        )));
    }
    let e = tail[0];
    if e <= 0 {
        return Err(Error::Internal(format!("non-positive multiplicity {e}")));
    }
    Ok(HilbertData {
        numerator,
        dimension: d,
        multiplicity: e as u64,
        stable_from,
    })
}
