//! Multivariate division, Buchberger's algorithm and reduced Gröbner bases.
//!
//! Pairs are selected by the normal strategy (smallest lcm by degree, ties
//! broken by the monomial order) and pruned with the Gebauer–Möller
//! installation of Buchberger's product and chain criteria. Over `Q` the
//! intermediate polynomials stay integer-primitive and reductions are
//! fraction-free; over `F_p` basis elements are kept monic.
//!
//! When the ring carries a relation it is adjoined to every generator list,
//! so bases describe ideals of the quotient ring.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::algebra::{Field, Limits, Monomial, MonomialOrder, Polynomial, Ring, Scalar, Term};
use crate::error::{Error, Result};

/// Result of dividing a polynomial by an ordered list of divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionCertificate {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

impl DivisionCertificate {
    /// `f - sum q_i g_i - r`, which is zero for a valid certificate.
    pub fn defect(&self, f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
        let ord = f.order();
        let mut acc = f.sub_ref(&self.remainder.with_order(ord));
        for (q, g) in self.quotients.iter().zip(divisors) {
            acc = acc.sub_ref(&q.with_order(ord).mul_ref(&g.with_order(ord)));
        }
        acc
    }
}

/// Division of `f` by `basis` in the order `ord`.
///
/// Divisors are tried in list order against the leading term of the running
/// dividend; irreducible leading terms move to the remainder.
pub fn normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    ord: MonomialOrder,
) -> Result<DivisionCertificate> {
    let ring = f.ring();
    for g in basis {
        if g.ring() != ring {
            return Err(Error::usage("divisor lives in a different ring"));
        }
        if g.is_zero() {
            return Err(Error::usage("zero divisor in division"));
        }
    }
    let field = ring.field();
    let divisors: Vec<Polynomial> = basis.iter().map(|g| g.with_order(ord)).collect();
    let mut quotients: Vec<Polynomial> = divisors
        .iter()
        .map(|_| Polynomial::zero(ring).with_order(ord))
        .collect();
    let mut remainder = Polynomial::zero(ring).with_order(ord);
    let mut p = f.with_order(ord);
    while let Some(lt) = p.leading_term().cloned() {
        let hit = divisors.iter().enumerate().find_map(|(i, g)| {
            let glt = g.leading_term().unwrap();
            lt.mono.div(&glt.mono).map(|m| (i, m, field.div(&lt.coeff, &glt.coeff)))
        });
        match hit {
            Some((i, m, c)) => {
                quotients[i].push_term_unchecked(Term {
                    coeff: c.clone(),
                    mono: m.clone(),
                });
                p = p.sub_ref(&divisors[i].mul_term(&c, &m));
            }
            None => {
                remainder.push_term_unchecked(lt);
                let rest = p.terms()[1..].to_vec();
                p = Polynomial::from_sorted(ring, ord, rest);
            }
        }
    }
    Ok(DivisionCertificate {
        quotients,
        remainder,
    })
}

/// Exact quotient `f / g`; errors when `g` does not divide `f`.
pub fn divide_exact(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let cert = normal_form(f, std::slice::from_ref(g), f.order())?;
    if !cert.remainder.is_zero() {
        return Err(Error::Internal(format!("{g} does not divide {f}")));
    }
    Ok(cert.quotients.into_iter().next().unwrap())
}

/// A reduced Gröbner basis: monic, interreduced, sorted by increasing leading
/// monomial, and therefore unique for the ideal and order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    source: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Reduced basis of the ideal generated by `gens` (plus the ring relation).
    pub fn compute(ring: &Ring, gens: &[Polynomial], ord: MonomialOrder) -> Result<Self> {
        for g in gens {
            if g.ring() != ring {
                return Err(Error::usage("generator lives in a different ring"));
            }
        }
        if !ring.has_relation() && gens.iter().all(|g| g.is_zero() || g.is_monomial()) {
            return Ok(GroebnerBasis {
                ring: ring.clone(),
                order: ord,
                generators: monomial_basis(ring, gens, ord),
                source: gens.to_vec(),
            });
        }
        let mut input: Vec<Polynomial> = gens.to_vec();
        if let Some(rel) = ring.relation(ord) {
            input.push(rel);
        }
        let generators = Engine::new(ring, ord).run(input)?;
        Ok(GroebnerBasis {
            ring: ring.clone(),
            order: ord,
            generators,
            source: gens.to_vec(),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The generators the basis was computed from (without the relation).
    pub fn source(&self) -> &[Polynomial] {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_unit()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    /// Normal form of `f` with respect to the basis.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::usage("polynomial lives in a different ring"));
        }
        let set = ReducerSet::from_monic(&self.generators);
        let f = f.with_order(self.order);
        let terms = reduce_terms(
            f.into_terms(),
            &set,
            self.ring.field(),
            self.order,
            self.ring.limits().max_terms,
            false,
        )?;
        Ok(Polynomial::from_sorted(&self.ring, self.order, terms))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Every S-polynomial of basis pairs reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> Result<bool> {
        let g = &self.generators;
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let s = s_polynomial(&g[i], &g[j]);
                if !self.reduce(&s)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Minimal monomial generators, monic and sorted; already a reduced basis.
fn monomial_basis(ring: &Ring, gens: &[Polynomial], ord: MonomialOrder) -> Vec<Polynomial> {
    let mut monos: Vec<Monomial> = gens
        .iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .collect();
    monos.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| ord.cmp(a, b)));
    monos.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(monos.len());
    for m in monos {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort_by(|a, b| ord.cmp(a, b));
    let one = ring.field().one();
    kept.into_iter()
        .map(|mono| Polynomial::from_sorted(ring, ord, vec![Term { coeff: one.clone(), mono }]))
        .collect()
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], ord: MonomialOrder) -> Result<GroebnerBasis> {
    let ring = gens
        .iter()
        .find(|g| !g.is_zero())
        .map(|g| g.ring().clone())
        .ok_or_else(|| Error::usage("buchberger needs at least one nonzero generator"))?;
    GroebnerBasis::compute(&ring, gens, ord)
}

/// `f` lies in the ideal generated by `gens` (in the quotient ring, if any).
pub fn ideal_member(f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let gb = GroebnerBasis::compute(f.ring(), gens, MonomialOrder::DegRevLex)?;
    gb.contains(f)
}

/// Generators of the intersection of the ideal with the subring in the last
/// `n - k` variables, read off a `Block(k)` basis.
pub fn eliminate(gens: &[Polynomial], k: usize) -> Result<Vec<Polynomial>> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => return Ok(Vec::new()),
    };
    eliminate_in(&ring, gens, k)
}

pub fn eliminate_in(ring: &Ring, gens: &[Polynomial], k: usize) -> Result<Vec<Polynomial>> {
    if k >= ring.nvars() {
        return Err(Error::usage(format!(
            "cannot eliminate {k} of {} variables",
            ring.nvars()
        )));
    }
    let gb = GroebnerBasis::compute(ring, gens, MonomialOrder::Block(k))?;
    Ok(gb
        .generators
        .iter()
        .filter(|g| !g.involves_leading_vars(k))
        .map(|g| g.with_order(MonomialOrder::DegRevLex))
        .collect())
}

/// S-polynomial of two nonzero polynomials over a field.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.field();
    let (ft, gt) = (f.leading_term().unwrap(), g.leading_term().unwrap());
    let l = ft.mono.lcm(&gt.mono);
    let a = f.mul_term(&field.inv(&ft.coeff), &l.div(&ft.mono).unwrap());
    let b = g
        .with_order(f.order())
        .mul_term(&field.inv(&gt.coeff), &l.div(&gt.mono).unwrap());
    a.sub_ref(&b)
}

struct ReducerSet {
    terms: Vec<Vec<Term>>,
    lms: Vec<Monomial>,
    masks: Vec<u64>,
    active: Vec<bool>,
}

impl ReducerSet {
    fn new() -> Self {
        ReducerSet {
            terms: Vec::new(),
            lms: Vec::new(),
            masks: Vec::new(),
            active: Vec::new(),
        }
    }

    fn from_monic(polys: &[Polynomial]) -> Self {
        let mut s = Self::new();
        for p in polys {
            s.push(p.terms().to_vec());
        }
        s
    }

    fn push(&mut self, terms: Vec<Term>) -> usize {
        let lm = terms[0].mono.clone();
        self.masks.push(lm.divmask());
        self.lms.push(lm);
        self.terms.push(terms);
        self.active.push(true);
        self.terms.len() - 1
    }

    #[inline]
    fn find_divisor(&self, m: &Monomial, mask: u64, skip: Option<usize>) -> Option<usize> {
        (0..self.lms.len()).find(|&i| {
            self.active[i]
                && Some(i) != skip
                && self.masks[i] & !mask == 0
                && self.lms[i].divides(m)
        })
    }
}

fn big(s: &Scalar) -> &BigRational {
    match s {
        Scalar::Rat(r) => r,
        Scalar::Mod(_) => unreachable!("integer view of a residue"),
    }
}

/// `a * x - c * m * y` on descending term lists (for `a = None`, `x` unscaled).
fn combine(
    x: &[Term],
    a: Option<&Scalar>,
    y: &[Term],
    c: &Scalar,
    m: &Monomial,
    field: Field,
    ord: MonomialOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let scale_x = |t: &Term| match a {
        Some(a) => field.mul(&t.coeff, a),
        None => t.coeff.clone(),
    };
    let (mut i, mut j) = (0, 0);
    let mut ym: Option<Monomial> = y.first().map(|t| t.mono.mul(m));
    while i < x.len() {
        let Some(cur) = ym.as_ref() else { break };
        match ord.cmp(&x[i].mono, cur) {
            Ordering::Greater => {
                out.push(Term {
                    coeff: scale_x(&x[i]),
                    mono: x[i].mono.clone(),
                });
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    coeff: field.neg(&field.mul(&y[j].coeff, c)),
                    mono: ym.take().unwrap(),
                });
                j += 1;
                ym = y.get(j).map(|t| t.mono.mul(m));
            }
            Ordering::Equal => {
                let v = field.sub(&scale_x(&x[i]), &field.mul(&y[j].coeff, c));
                if !field.is_zero(&v) {
                    out.push(Term {
                        coeff: v,
                        mono: x[i].mono.clone(),
                    });
                }
                i += 1;
                j += 1;
                ym = y.get(j).map(|t| t.mono.mul(m));
            }
        }
    }
    for t in &x[i..] {
        out.push(Term {
            coeff: scale_x(t),
            mono: t.mono.clone(),
        });
    }
    if let Some(first) = ym {
        out.push(Term {
            coeff: field.neg(&field.mul(&y[j].coeff, c)),
            mono: first,
        });
        for t in &y[j + 1..] {
            out.push(Term {
                coeff: field.neg(&field.mul(&t.coeff, c)),
                mono: t.mono.mul(m),
            });
        }
    }
    out
}

/// Full reduction of a term list by the active reducers.
///
/// With `fraction_free` (only meaningful over `Q`, reducers integer-primitive)
/// the result is a nonzero scalar multiple of the normal form; otherwise the
/// reducers must be monic and the result is the normal form itself.
fn reduce_terms(
    terms: Vec<Term>,
    set: &ReducerSet,
    field: Field,
    ord: MonomialOrder,
    max_terms: usize,
    fraction_free: bool,
) -> Result<Vec<Term>> {
    reduce_terms_skip(terms, set, field, ord, max_terms, fraction_free, None)
}

fn reduce_terms_skip(
    mut work: Vec<Term>,
    set: &ReducerSet,
    field: Field,
    ord: MonomialOrder,
    max_terms: usize,
    fraction_free: bool,
    skip: Option<usize>,
) -> Result<Vec<Term>> {
    let fraction_free = fraction_free && field == Field::Rational;
    let mut rem: Vec<Term> = Vec::new();
    let mut head = 0;
    let mut steps = 0usize;
    while head < work.len() {
        let t = &work[head];
        let Some(i) = set.find_divisor(&t.mono, t.mono.divmask(), skip) else {
            head += 1;
            continue;
        };
        // terms before `head` are irreducible and final
        rem.extend(work.drain(..head));
        head = 0;
        let g = &set.terms[i];
        let m = work[0].mono.div(&g[0].mono).unwrap();
        work = if fraction_free {
            let a = big(&g[0].coeff).to_integer();
            let c = big(&work[0].coeff).to_integer();
            let d = a.gcd(&c);
            let a = Scalar::Rat(Box::new(BigRational::from_integer(&a / &d)));
            let c = Scalar::Rat(Box::new(BigRational::from_integer(&c / &d)));
            if !field.is_one(&a) {
                for r in rem.iter_mut() {
                    r.coeff = field.mul(&r.coeff, &a);
                }
            }
            combine(&work[1..], Some(&a), &g[1..], &c, &m, field, ord)
        } else {
            let c = if field.is_one(&g[0].coeff) {
                work[0].coeff.clone()
            } else {
                field.div(&work[0].coeff, &g[0].coeff)
            };
            combine(&work[1..], None, &g[1..], &c, &m, field, ord)
        };
        if work.len() + rem.len() > max_terms {
            return Err(Error::cap("max_terms", max_terms));
        }
        steps += 1;
        if fraction_free && steps.is_multiple_of(CONTENT_INTERVAL) {
            remove_content(&mut rem, &mut work);
        }
    }
    rem.extend(work);
    Ok(rem)
}

/// Fraction-free reduction steps between content removals.
const CONTENT_INTERVAL: usize = 6;

/// Divides integer term lists by the gcd of all their coefficients.
fn remove_content(a: &mut [Term], b: &mut [Term]) {
    let mut g = BigInt::from(0);
    for t in a.iter().chain(b.iter()) {
        g = g.gcd(big(&t.coeff).numer());
        if num_traits::One::is_one(&g) {
            return;
        }
    }
    if num_traits::Zero::is_zero(&g) {
        return;
    }
    for t in a.iter_mut().chain(b.iter_mut()) {
        let v = big(&t.coeff).numer() / &g;
        t.coeff = Scalar::Rat(Box::new(BigRational::from_integer(v)));
    }
}

/// Normalizes a term list: monic over `F_p`, integer-primitive with positive
/// leading coefficient over `Q`.
fn normalize(terms: &mut [Term], field: Field) {
    if terms.is_empty() {
        return;
    }
    match field {
        Field::Prime(_) => {
            if !field.is_one(&terms[0].coeff) {
                let inv = field.inv(&terms[0].coeff);
                for t in terms.iter_mut() {
                    t.coeff = field.mul(&t.coeff, &inv);
                }
            }
        }
        Field::Rational => {
            let mut den = BigInt::from(1);
            let mut num = BigInt::from(0);
            for t in terms.iter() {
                let r = big(&t.coeff);
                den = den.lcm(r.denom());
                num = num.gcd(r.numer());
            }
            let mut f = BigRational::new(den, num);
            if field.is_negative(&terms[0].coeff) {
                f = -f;
            }
            if !num_traits::One::is_one(&f) {
                let f = Scalar::Rat(Box::new(f));
                for t in terms.iter_mut() {
                    t.coeff = field.mul(&t.coeff, &f);
                }
            }
        }
    }
}

fn max_degree(terms: &[Term]) -> u32 {
    terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
}

fn make_monic(terms: &mut [Term], field: Field) {
    if let Some(first) = terms.first() {
        if !field.is_one(&first.coeff) {
            let inv = field.inv(&first.coeff);
            for t in terms.iter_mut() {
                t.coeff = field.mul(&t.coeff, &inv);
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine {
    ring: Ring,
    ord: MonomialOrder,
    field: Field,
    limits: Limits,
    set: ReducerSet,
    sugar: Vec<u32>,
    pairs: Vec<Pair>,
    pairs_sorted: bool,
}

impl Engine {
    fn new(ring: &Ring, ord: MonomialOrder) -> Self {
        Engine {
            ring: ring.clone(),
            ord,
            field: ring.field(),
            limits: *ring.limits(),
            set: ReducerSet::new(),
            sugar: Vec::new(),
            pairs: Vec::new(),
            pairs_sorted: true,
        }
    }

    fn reduce(&self, terms: Vec<Term>) -> Result<Vec<Term>> {
        let mut out = reduce_terms(
            terms,
            &self.set,
            self.field,
            self.ord,
            self.limits.max_terms,
            true,
        )?;
        normalize(&mut out, self.field);
        Ok(out)
    }

    fn unit(&self) -> Vec<Polynomial> {
        vec![self.ring.one().with_order(self.ord)]
    }

    fn run(mut self, input: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
        let mut input: Vec<Vec<Term>> = input
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                let mut t = g.with_order(self.ord).into_terms();
                normalize(&mut t, self.field);
                t
            })
            .collect();
        if input.iter().any(|t| t[0].mono.is_one()) {
            return Ok(self.unit());
        }
        let ord = self.ord;
        input.sort_by(|a, b| {
            ord.cmp(&a[0].mono, &b[0].mono)
                .then_with(|| a.len().cmp(&b.len()))
        });
        input.dedup();
        for g in input {
            let sugar = max_degree(&g);
            let h = self.reduce(g)?;
            if h.is_empty() {
                continue;
            }
            if h[0].mono.is_one() {
                return Ok(self.unit());
            }
            self.install(h, sugar)?;
        }
        while let Some(pair) = self.next_pair() {
            let s = self.spoly(&pair);
            if s.is_empty() {
                continue;
            }
            let h = self.reduce(s)?;
            if h.is_empty() {
                continue;
            }
            if h[0].mono.is_one() {
                return Ok(self.unit());
            }
            let sugar = pair.sugar.max(max_degree(&h));
            self.install(h, sugar)?;
        }
        self.finish()
    }

    fn next_pair(&mut self) -> Option<Pair> {
        if !self.pairs_sorted {
            let ord = self.ord;
            // descending so the selected pair sits at the end
            self.pairs.sort_by(|a, b| {
                b.sugar
                    .cmp(&a.sugar)
                    .then_with(|| b.lcm.degree().cmp(&a.lcm.degree()))
                    .then_with(|| ord.cmp(&b.lcm, &a.lcm))
                    .then_with(|| (b.j, b.i).cmp(&(a.j, a.i)))
            });
            self.pairs_sorted = true;
        }
        self.pairs.pop()
    }

    fn spoly(&self, p: &Pair) -> Vec<Term> {
        let f = &self.set.terms[p.i];
        let g = &self.set.terms[p.j];
        let mf = p.lcm.div(&f[0].mono).unwrap();
        let mg = p.lcm.div(&g[0].mono).unwrap();
        let field = self.field;
        // lc(g) * mf * f - lc(f) * mg * g, dropping the cancelled leading terms
        let x: Vec<Term> = f[1..]
            .iter()
            .map(|t| Term {
                coeff: field.mul(&t.coeff, &g[0].coeff),
                mono: t.mono.mul(&mf),
            })
            .collect();
        combine(&x, None, &g[1..], &f[0].coeff, &mg, field, self.ord)
    }

    /// Gebauer–Möller installation of a new, fully reduced element.
    fn install(&mut self, h: Vec<Term>, sugar: u32) -> Result<()> {
        if self.set.terms.len() >= self.limits.max_basis {
            return Err(Error::cap("max_basis", self.limits.max_basis));
        }
        let lm_h = h[0].mono.clone();
        let hi = self.set.push(h);
        self.sugar.push(sugar);

        let candidates: Vec<Pair> = (0..hi)
            .filter(|&g| self.set.active[g])
            .map(|g| {
                let lcm = self.set.lms[g].lcm(&lm_h);
                let d = lcm.degree();
                let sugar = (self.sugar[g] + d - self.set.lms[g].degree()).max(sugar + d - lm_h.degree());
                Pair { i: g, j: hi, lcm, sugar }
            })
            .collect();

        // chain criterion among the new pairs
        let mut keep = vec![true; candidates.len()];
        for (a, pa) in candidates.iter().enumerate() {
            if self.set.lms[pa.i].is_coprime(&lm_h) {
                continue;
            }
            let dominated = candidates.iter().enumerate().any(|(b, pb)| {
                b != a
                    && pb.lcm.divides(&pa.lcm)
                    && (pb.lcm != pa.lcm || (keep[b] && b < a))
            });
            if dominated {
                keep[a] = false;
            }
        }
        let new_pairs: Vec<Pair> = candidates
            .into_iter()
            .zip(keep)
            .filter(|(p, k)| *k && !self.set.lms[p.i].is_coprime(&lm_h))
            .map(|(p, _)| p)
            .collect();

        // chain criterion against the old pairs
        let lms = &self.set.lms;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && lms[p.i].lcm(&lm_h) != p.lcm
                && lms[p.j].lcm(&lm_h) != p.lcm)
        });

        for g in 0..hi {
            if self.set.active[g] && lm_h.divides(&self.set.lms[g]) {
                self.set.active[g] = false;
            }
        }

        if !new_pairs.is_empty() {
            self.pairs.extend(new_pairs);
            self.pairs_sorted = false;
        }
        Ok(())
    }

    fn finish(self) -> Result<Vec<Polynomial>> {
        let field = self.field;
        let active: Vec<usize> = (0..self.set.terms.len())
            .filter(|&i| self.set.active[i])
            .collect();
        let mut out = Vec::with_capacity(active.len());
        for &i in &active {
            let mut t = reduce_terms_skip(
                self.set.terms[i].clone(),
                &self.set,
                field,
                self.ord,
                self.limits.max_terms,
                true,
                Some(i),
            )?;
            make_monic(&mut t, field);
            out.push(Polynomial::from_sorted(&self.ring, self.ord, t));
        }
        let ord = self.ord;
        out.sort_by(|a, b| ord.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        Ok(out)
    }
}
