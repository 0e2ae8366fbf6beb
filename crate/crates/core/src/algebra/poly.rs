use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{Field, Scalar};
use super::monomial::{Monomial, MonomialOrder};
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub mono: Monomial,
}

/// A polynomial in canonical form: terms strictly decreasing in `order`,
/// no zero coefficients. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    order: MonomialOrder,
    terms: Vec<Term>,
}

/// Binary ring operations accepted by [`Polynomial::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.order == other.order && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state)
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            order: MonomialOrder::DegRevLex,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn monomial(ring: &Ring, c: Scalar, mono: Monomial) -> Self {
        let terms = if ring.field().is_zero(&c) {
            Vec::new()
        } else {
            vec![Term { coeff: c, mono }]
        };
        Polynomial {
            ring: ring.clone(),
            order: MonomialOrder::DegRevLex,
            terms,
        }
    }

    /// Canonicalizes an arbitrary term list: sorts, merges like terms, drops zeros.
    pub fn from_terms(ring: &Ring, order: MonomialOrder, mut terms: Vec<Term>) -> Self {
        let field = ring.field();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !field.is_zero(&t.coeff));
        Polynomial {
            ring: ring.clone(),
            order,
            terms: out,
        }
    }

    /// Wraps a term list the caller guarantees to be canonical.
    pub(crate) fn from_sorted(ring: &Ring, order: MonomialOrder, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            order,
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.field().is_one(&self.terms[0].coeff)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree (maximum term degree); `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// Minimum term degree; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).min()
    }

    /// All terms share one total degree.
    pub fn is_homogeneous(&self) -> bool {
        self.total_degree() == self.min_degree()
    }

    /// Re-sorts the terms for another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial {
            ring: self.ring.clone(),
            order,
            terms,
        }
    }

    /// Reinterprets the polynomial in another ring with the same variable
    /// count and field (e.g. dropping or adding the relation).
    pub fn in_ring(&self, ring: &Ring) -> Polynomial {
        assert_eq!(ring.nvars(), self.ring.nvars());
        assert_eq!(ring.field(), self.ring.field());
        Polynomial {
            ring: ring.clone(),
            order: self.order,
            terms: self.terms.clone(),
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::usage(format!(
                "ring mismatch: [{}] vs [{}]",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    /// Checked ring operation; errors on ring mismatch. A differing monomial
    /// order on `g` is converted to `f`'s order.
    pub fn arith(&self, g: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        self.check_compatible(g)?;
        let g = g.with_order(self.order);
        Ok(match op {
            ArithOp::Add => self.add_ref(&g),
            ArithOp::Sub => self.sub_ref(&g),
            ArithOp::Mul => self.mul_ref(&g),
        })
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        debug_assert!(self.ring == other.ring);
        let other_terms;
        let other = if other.order != self.order {
            other_terms = other.with_order(self.order);
            &other_terms
        } else {
            other
        };
        let field = self.field();
        let ord = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match ord.cmp(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { field.neg(&b[j].coeff) } else { b[j].coeff.clone() };
                    out.push(Term { coeff: c, mono: b[j].mono.clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        field.sub(&a[i].coeff, &b[j].coeff)
                    } else {
                        field.add(&a[i].coeff, &b[j].coeff)
                    };
                    if !field.is_zero(&c) {
                        out.push(Term { coeff: c, mono: a[i].mono.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { field.neg(&t.coeff) } else { t.coeff.clone() };
            out.push(Term { coeff: c, mono: t.mono.clone() });
        }
        Polynomial::from_sorted(&self.ring, ord, out)
    }

    pub fn add_ref(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    pub fn sub_ref(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    pub fn mul_ref(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(self.ring == other.ring);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring).with_order(self.order);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].coeff, &other.terms[0].mono);
        }
        if self.terms.len() == 1 {
            return other
                .with_order(self.order)
                .mul_term(&self.terms[0].coeff, &self.terms[0].mono);
        }
        let field = self.field();
        let mut acc: HashMap<Monomial, Scalar> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let c = field.mul(&a.coeff, &b.coeff);
                let m = a.mono.mul(&b.mono);
                match acc.get_mut(&m) {
                    Some(v) => *v = field.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        Polynomial::from_terms(&self.ring, self.order, terms)
    }

    /// `self * c * m`.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring).with_order(self.order);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: field.mul(&t.coeff, c),
                mono: t.mono.mul(m),
            })
            .collect();
        Polynomial::from_sorted(&self.ring, self.order, terms)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    pub fn neg_ref(&self) -> Polynomial {
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: field.neg(&t.coeff),
                mono: t.mono.clone(),
            })
            .collect();
        Polynomial::from_sorted(&self.ring, self.order, terms)
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = self.ring.one().with_order(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if self.field().is_one(lc) => self.clone(),
            Some(lc) => self.scale(&self.field().inv(lc)),
        }
    }

    /// Over `Q`: the unique associate with coprime integer coefficients and
    /// positive leading coefficient. Over `F_p`: the monic associate.
    pub fn primitive(&self) -> Polynomial {
        match self.field() {
            Field::Prime(_) => self.monic(),
            Field::Rational => {
                if self.is_zero() {
                    return self.clone();
                }
                let mut den = BigInt::one();
                let mut num = BigInt::zero();
                for t in &self.terms {
                    let Scalar::Rat(r) = &t.coeff else { unreachable!() };
                    den = den.lcm(r.denom());
                    num = num.gcd(r.numer());
                }
                let mut factor = BigRational::new(den, num);
                if self.is_negative_leading() {
                    factor = -factor;
                }
                self.scale(&Scalar::Rat(Box::new(factor)))
            }
        }
    }

    fn is_negative_leading(&self) -> bool {
        self.leading_coeff()
            .map(|c| self.field().is_negative(c))
            .unwrap_or(false)
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .filter(|t| t.mono.exponent(i) > 0)
            .map(|t| {
                let e = t.mono.exponent(i);
                Term {
                    coeff: field.mul(&t.coeff, &field.from_i64(e as i64)),
                    mono: t.mono.with_exponent(i, e - 1),
                }
            })
            .collect();
        Polynomial::from_terms(&self.ring, self.order, terms)
    }

    /// Image under `x_i -> values[i]`.
    pub fn substitute(&self, values: &[Polynomial]) -> Polynomial {
        assert_eq!(values.len(), self.ring.nvars());
        let target = values
            .first()
            .map(|v| v.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        let mut acc = Polynomial::zero(&target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(&target, t.coeff.clone());
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e > 0 {
                    prod = prod.mul_ref(&values[i].pow(e));
                }
            }
            acc = acc.add_ref(&prod);
        }
        acc
    }

    /// Substitutes integer values into every variable.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        let field = self.field();
        let mut acc = field.zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e > 0 {
                    v = field.mul(&v, &field.pow(&point[i], e as u64));
                }
            }
            acc = field.add(&acc, &v);
        }
        acc
    }

    /// Moves the polynomial into `target`, which has `count` extra leading variables.
    pub fn lift_prepend(&self, target: &Ring, count: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                mono: t.mono.prepend_vars(count),
            })
            .collect();
        Polynomial::from_terms(target, self.order, terms)
    }

    /// Inverse of [`lift_prepend`](Self::lift_prepend); errors if a dropped variable occurs.
    pub fn drop_leading_vars(&self, target: &Ring, count: usize) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.mono.exponents()[..count].iter().any(|&e| e > 0) {
                return Err(Error::Internal(
                    "eliminated variable survives in a projected polynomial".into(),
                ));
            }
            terms.push(Term {
                coeff: t.coeff.clone(),
                mono: t.mono.drop_vars(count),
            });
        }
        Ok(Polynomial::from_terms(target, self.order, terms))
    }

    /// Whether any of the first `count` variables occurs.
    pub fn involves_leading_vars(&self, count: usize) -> bool {
        self.terms
            .iter()
            .any(|t| t.mono.exponents()[..count].iter().any(|&e| e > 0))
    }

    /// Raises each exponent by `k` keeping coefficients: the Frobenius image
    /// when `k` is a power of the characteristic. `None` on exponent overflow.
    pub fn frobenius_exponents(&self, k: u32) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                coeff: t.coeff.clone(),
                mono: t.mono.pow(k)?,
            });
        }
        Some(Polynomial::from_sorted(&self.ring, self.order, terms))
    }

    pub(crate) fn push_term_unchecked(&mut self, t: Term) {
        self.terms.push(t);
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.arith(rhs, ArithOp::Add).expect("ring mismatch in +")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.arith(rhs, ArithOp::Sub).expect("ring mismatch in -")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.arith(rhs, ArithOp::Mul).expect("ring mismatch in *")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::format_terms(
            &self.terms,
            self.ring.variables(),
            self.field(),
        ))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
