//! Ideal-level operations on top of the Gröbner engine.
//!
//! Intersection, saturation and radical membership share one mechanism: a
//! reserved tag variable prepended to the ring and eliminated with a
//! `Block(1)` order. Ideals of a quotient ring `R/(f_rel)` are represented by
//! generators in `R`; the relation is adjoined whenever a basis is computed.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::algebra::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::groebner::{divide_exact, eliminate_in, GroebnerBasis};

pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", shown.join(", "))
    }
}

impl Ideal {
    /// Ideal generated by `gens`; zeros are dropped, duplicates up to scalars removed.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
        let mut seen = HashSet::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::usage(format!(
                    "generator {g} does not live in [{ring}]"
                )));
            }
            if g.is_zero() {
                continue;
            }
            let g = g.with_order(MonomialOrder::DegRevLex);
            if seen.insert(g.primitive()) {
                out.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// Parses a comma-separated generator list.
    pub fn parse(ring: &Ring, text: &str) -> Result<Ideal> {
        Ideal::new(ring, ring.parse_list(text)?)
    }

    pub fn from_strs(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        let polys = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![ring.one()]).unwrap()
    }

    /// The ideal of all variables.
    pub fn maximal(ring: &Ring) -> Ideal {
        Ideal::new(ring, ring.variables_polys()).unwrap()
    }

    pub fn principal(f: &Polynomial) -> Ideal {
        Ideal::new(f.ring(), vec![f.clone()]).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Gröbner basis for `ord`, computed once per order.
    pub fn groebner(&self, ord: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.lock().unwrap().get(&ord) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(GroebnerBasis::compute(&self.ring, &self.gens, ord)?);
        let mut cache = self.cache.lock().unwrap();
        Ok(cache.entry(ord).or_insert(gb).clone())
    }

    /// The DegRevLex basis.
    pub fn basis(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner(MonomialOrder::DegRevLex)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        self.basis()?.contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        let gb = self.basis()?;
        for g in &other.gens {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality by mutual generator membership.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_proper(&self) -> Result<bool> {
        Ok(!self.basis()?.is_unit_ideal())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        let cap = self.ring.limits().max_basis;
        if self.gens.len() * other.gens.len() > cap {
            return Err(Error::cap("max_basis", cap).with_cap_context("product generator count"));
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul_ref(b));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I^m`, with an interreduced generator list.
    pub fn power(&self, m: u32) -> Result<Ideal> {
        if m == 0 {
            return Err(Error::usage("ideal power needs m >= 1"));
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.product(self)?.interreduced()?;
        }
        if m == 1 {
            acc = acc.interreduced()?;
        }
        Ok(acc)
    }

    /// Drops every generator lying in the ideal of the remaining ones. Monomial
    /// generator lists are minimalized by divisibility alone.
    pub fn interreduced(&self) -> Result<Ideal> {
        if self.gens.iter().all(|g| g.is_monomial()) {
            return Ideal::new(&self.ring, minimal_monomial_gens(&self.gens));
        }
        let mut kept = self.gens.clone();
        kept.sort_by(|a, b| {
            MonomialOrder::DegRevLex.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
        });
        let mut i = kept.len();
        while i > 0 {
            i -= 1;
            if kept.len() == 1 {
                break;
            }
            let others: Vec<Polynomial> = kept
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let gb = GroebnerBasis::compute(&self.ring, &others, MonomialOrder::DegRevLex)?;
            if gb.contains(&kept[i])? {
                kept.remove(i);
            }
        }
        Ideal::new(&self.ring, kept)
    }

    fn lift_to_tag(&self, tag: &Ring) -> Vec<Polynomial> {
        self.gens.iter().map(|g| g.lift_prepend(tag, 1)).collect()
    }

    fn project_from_tag(&self, tag: &Ring, gens: &[Polynomial]) -> Result<Ideal> {
        let _ = tag;
        let projected = gens
            .iter()
            .map(|g| g.drop_leading_vars(&self.ring, 1))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, projected)
    }

    /// `I ∩ J` via elimination of `t` from `t·I + (1 - t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::usage("intersect: ideals live in different rings"));
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        let tag = self.ring.with_tag();
        let t = tag.var(0);
        let one_minus_t = tag.one().sub_ref(&t);
        let mut gens: Vec<Polynomial> = self
            .lift_to_tag(&tag)
            .into_iter()
            .map(|g| g.mul_ref(&t))
            .collect();
        gens.extend(
            other
                .lift_to_tag(&tag)
                .into_iter()
                .map(|g| g.mul_ref(&one_minus_t)),
        );
        let elim = eliminate_in(&tag, &gens, 1)?;
        self.project_from_tag(&tag, &elim)
    }

    /// `(I : f) = {g : g·f ∈ I}`, computed as `(1/f)·(I ∩ (f))`.
    ///
    /// In a quotient ring the intersection is taken in the ambient ring with the
    /// relation adjoined to `I`, so the exact division by `f` is valid.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::usage("colon by the zero polynomial"));
        }
        if f.ring() != &self.ring {
            return Err(Error::usage("colon: polynomial lives in a different ring"));
        }
        if f.is_unit() {
            return Ok(self.clone());
        }
        let ambient = self.ring.ambient();
        let mut lifted: Vec<Polynomial> = self.gens.iter().map(|g| g.in_ring(&ambient)).collect();
        if let Some(rel) = self.ring.relation(MonomialOrder::DegRevLex) {
            lifted.push(rel.in_ring(&ambient));
        }
        let big = Ideal::new(&ambient, lifted)?;
        let fa = f.in_ring(&ambient).with_order(MonomialOrder::DegRevLex);
        let meet = big.intersect(&Ideal::principal(&fa))?;
        let quotients = meet
            .gens
            .iter()
            .map(|g| divide_exact(g, &fa).map(|q| q.in_ring(&self.ring)))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, quotients)
    }

    /// `(I : f^∞)` by iterating colons until the chain stabilizes.
    pub fn saturate_iterated(&self, f: &Polynomial) -> Result<Ideal> {
        let cap = self.ring.limits().max_saturation_steps;
        let mut current = self.clone();
        for _ in 0..cap {
            let next = current.colon(f)?;
            if current.contains_ideal(&next)? {
                return Ok(current);
            }
            current = next;
        }
        Err(Error::Internal(format!(
            "saturation chain did not stabilize within {cap} steps"
        )))
    }

    /// `(I : f^∞)` in one shot: eliminate `t` from `I + (1 - t·f)`.
    pub fn saturate_tagged(&self, f: &Polynomial) -> Result<Ideal> {
        let tag = self.ring.with_tag();
        let mut gens = self.lift_to_tag(&tag);
        let tf = f.lift_prepend(&tag, 1).mul_ref(&tag.var(0));
        gens.push(tag.one().sub_ref(&tf));
        let elim = eliminate_in(&tag, &gens, 1)?;
        self.project_from_tag(&tag, &elim)
    }

    /// `(I : f^∞)`, computed by both routes; they must agree.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::usage("saturation by the zero polynomial"));
        }
        if f.ring() != &self.ring {
            return Err(Error::usage("saturate: polynomial lives in a different ring"));
        }
        if f.is_unit() {
            return Ok(self.clone());
        }
        let tagged = self.saturate_tagged(f)?;
        let iterated = self.saturate_iterated(f)?;
        if !tagged.equals(&iterated)? {
            return Err(Error::Internal(
                "tagged and iterated saturation disagree".into(),
            ));
        }
        Ok(tagged)
    }

    /// `f ∈ √I`, decided by `1 ∈ I + (1 - t·f)`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        let tag = self.ring.with_tag();
        let mut gens = self.lift_to_tag(&tag);
        let tf = f.lift_prepend(&tag, 1).mul_ref(&tag.var(0));
        gens.push(tag.one().sub_ref(&tf));
        let gb = GroebnerBasis::compute(&tag, &gens, MonomialOrder::DegRevLex)?;
        Ok(gb.is_unit_ideal())
    }

    /// Krull dimension of `R/I` (of `A/I·A` in a quotient ring): the largest
    /// variable set carrying no leading monomial of the DegRevLex basis.
    pub fn krull_dim(&self) -> Result<usize> {
        let gb = self.basis()?;
        if gb.is_unit_ideal() {
            return Err(Error::NotProper);
        }
        Ok(max_independent_set(&gb.leading_monomials(), self.ring.nvars()))
    }

    /// `√I` is the ideal of all variables.
    pub fn is_radical_maximal(&self) -> Result<bool> {
        for x in self.ring.variables_polys() {
            if !self.radical_contains(&x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dimension route for [`is_radical_maximal`](Self::is_radical_maximal).
    /// Agrees with it for homogeneous ideals, where a zero-dimensional proper
    /// ideal is primary to the irrelevant ideal.
    pub fn is_radical_maximal_by_dim(&self) -> Result<bool> {
        match self.krull_dim() {
            Ok(d) => Ok(d == 0),
            Err(Error::NotProper) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Same generators viewed in another ring with matching variables and field.
    pub fn in_ring(&self, ring: &Ring) -> Result<Ideal> {
        Ideal::new(ring, self.gens.iter().map(|g| g.in_ring(ring)).collect())
    }
}

/// Minimal generators of a monomial ideal given by monomial generators.
pub fn minimal_monomial_gens(gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut sorted: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    sorted.sort_by(|a, b| {
        let (ma, mb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        ma.degree()
            .cmp(&mb.degree())
            .then_with(|| MonomialOrder::DegRevLex.cmp(mb, ma))
    });
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in sorted {
        let m = g.leading_monomial().unwrap();
        if !kept.iter().any(|k| k.leading_monomial().unwrap().divides(m)) {
            kept.push(g.monic());
        }
    }
    kept
}

/// Largest cardinality of a variable subset `S` such that no monomial has
/// support inside `S`.
pub fn max_independent_set(monomials: &[Monomial], nvars: usize) -> usize {
    let supports: Vec<u32> = monomials
        .iter()
        .map(|m| m.support().fold(0u32, |acc, i| acc | (1 << i)))
        .collect();
    let mut best = 0;
    for s in 0u32..(1u32 << nvars) {
        let size = s.count_ones() as usize;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&sup| sup & !s != 0) {
            best = size;
        }
    }
    best
}

pub fn ideal_power(i: &Ideal, m: u32) -> Result<Ideal> {
    i.power(m)
}

pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.intersect(j)
}

pub fn colon(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    i.colon(f)
}

pub fn saturate(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    i.saturate(f)
}

pub fn radical_member(f: &Polynomial, i: &Ideal) -> Result<bool> {
    i.radical_contains(f)
}

pub fn krull_dim(i: &Ideal) -> Result<usize> {
    i.krull_dim()
}

pub fn is_radical_maximal(i: &Ideal) -> Result<bool> {
    i.is_radical_maximal()
}
