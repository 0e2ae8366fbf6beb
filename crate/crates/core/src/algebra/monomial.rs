use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

type Exponents = SmallVec<[u32; 7]>;

/// A power product `x_0^{e_0} ... x_{n-1}^{e_{n-1}}` with its total degree cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial {
            degree: exps.iter().sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    /// The variable `x_i` in `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Bit `i` is set iff `x_i` divides the monomial (first 64 variables).
    #[inline]
    pub fn divmask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate().take(64) {
            if e > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
            degree: self.degree - other.degree,
        })
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial {
            degree: exps.iter().sum(),
            exps,
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial {
            degree: exps.iter().sum(),
            exps,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Raises every exponent by the factor `k`; `None` on overflow.
    pub fn pow(&self, k: u32) -> Option<Monomial> {
        let mut exps = Exponents::with_capacity(self.nvars());
        for &e in &self.exps {
            exps.push(e.checked_mul(k)?);
        }
        Some(Monomial {
            degree: self.degree.checked_mul(k)?,
            exps,
        })
    }

    /// Inserts `count` zero exponents in front.
    pub fn prepend_vars(&self, count: usize) -> Monomial {
        let mut exps = Exponents::from_elem(0, count);
        exps.extend_from_slice(&self.exps);
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Drops the first `count` variables. The caller ensures their exponents vanish
    /// or accepts that they are forgotten.
    pub fn drop_vars(&self, count: usize) -> Monomial {
        Monomial::from_exponents(&self.exps[count..])
    }

    pub fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = e;
        Monomial {
            degree: exps.iter().sum(),
            exps,
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Monomial orders. Variable 0 is the largest variable in every order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    #[default]
    DegRevLex,
    /// Elimination order for the first `k` variables: DegRevLex on that block,
    /// ties broken by DegRevLex on the remaining variables.
    Block(usize),
}

#[inline]
fn degrevlex(a: &[u32], b: &[u32], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.exps.as_slice().cmp(b.exps.as_slice()),
            MonomialOrder::DegRevLex => degrevlex(&a.exps, &b.exps, a.degree, b.degree),
            MonomialOrder::Block(k) => {
                let k = k.min(a.nvars());
                let (a1, a2) = a.exps.split_at(k);
                let (b1, b2) = b.exps.split_at(k);
                let da: u32 = a1.iter().sum();
                let db: u32 = b1.iter().sum();
                degrevlex(a1, b1, da, db)
                    .then_with(|| degrevlex(a2, b2, a.degree - da, b.degree - db))
            }
        }
    }
}

impl std::fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::DegRevLex => f.write_str("degrevlex"),
            MonomialOrder::Block(k) => write!(f, "block({k})"),
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lex" => Ok(MonomialOrder::Lex),
            "degrevlex" | "grevlex" => Ok(MonomialOrder::DegRevLex),
            other => {
                if let Some(k) = other
                    .strip_prefix("block(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|k| k.parse().ok())
                {
                    Ok(MonomialOrder::Block(k))
                } else {
                    Err(crate::Error::usage(format!("unknown monomial order '{s}'")))
                }
            }
        }
    }
}
