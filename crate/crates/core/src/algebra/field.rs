//! Coefficient fields: prime fields `F_p` (p < 2^31) and the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible characteristic (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

/// The coefficient field of a ring. All scalars of one computation live in
/// exactly one field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// `F_p` for a prime `p < 2^31`.
    Prime(u32),
    /// `Q`.
    Rational,
}

/// A field element. Prime-field residues are always in `[0, p)`; rationals
/// are kept in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod(u32),
    Rat(Box<BigRational>),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    /// Field of characteristic `c`; 0 means `Q`.
    pub fn from_characteristic(c: u64) -> Result<Self> {
        if c == 0 {
            return Ok(Field::Rational);
        }
        if c >= MAX_MODULUS {
            return Err(Error::usage(format!(
                "characteristic {c} exceeds the supported bound 2^31"
            )));
        }
        if !is_prime(c) {
            return Err(Error::usage(format!("characteristic {c} is not prime")));
        }
        Ok(Field::Prime(c as u32))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Prime(p) => p as u64,
            Field::Rational => 0,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Mod(0),
            Field::Rational => Scalar::Rat(Box::new(BigRational::zero())),
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Mod(1),
            Field::Rational => Scalar::Rat(Box::new(BigRational::one())),
        }
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod(v.rem_euclid(p as i64) as u32),
            Field::Rational => Scalar::Rat(Box::new(BigRational::from_integer(v.into()))),
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Mod(r.to_u32().expect("residue fits"))
            }
            Field::Rational => Scalar::Rat(Box::new(BigRational::from_integer(v.clone()))),
        }
    }

    pub fn from_rational(self, v: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rat(Box::new(v.clone()))),
            Field::Prime(_) => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                if self.is_zero(&den) {
                    return Err(Error::usage("denominator vanishes in the prime field"));
                }
                Ok(self.div(&num, &den))
            }
        }
    }

    pub fn is_zero(self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(v) => *v == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(v) => *v == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                let s = *x as u64 + *y as u64;
                Scalar::Mod((s % p as u64) as u32)
            }
            (Field::Rational, Scalar::Rat(x), Scalar::Rat(y)) => {
                Scalar::Rat(Box::new(x.as_ref() + y.as_ref()))
            }
            _ => mixed(),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                let s = *x as u64 + p as u64 - *y as u64;
                Scalar::Mod((s % p as u64) as u32)
            }
            (Field::Rational, Scalar::Rat(x), Scalar::Rat(y)) => {
                Scalar::Rat(Box::new(x.as_ref() - y.as_ref()))
            }
            _ => mixed(),
        }
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => {
                Scalar::Mod(if *x == 0 { 0 } else { p - *x })
            }
            (Field::Rational, Scalar::Rat(x)) => Scalar::Rat(Box::new(-x.as_ref())),
            _ => mixed(),
        }
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u64 * *y as u64) % p as u64) as u32)
            }
            (Field::Rational, Scalar::Rat(x), Scalar::Rat(y)) => {
                Scalar::Rat(Box::new(x.as_ref() * y.as_ref()))
            }
            _ => mixed(),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => {
                assert!(*x != 0, "inverse of zero");
                Scalar::Mod(pow_mod(*x as u64, p as u64 - 2, p as u64) as u32)
            }
            (Field::Rational, Scalar::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Scalar::Rat(Box::new(x.recip()))
            }
            _ => mixed(),
        }
    }

    pub fn div(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Signed integer view of a scalar, if it has one. Prime-field residues
    /// use the symmetric range `(-p/2, p/2]`.
    pub fn to_integer(self, a: &Scalar) -> Option<BigInt> {
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => Some(BigInt::from(symmetric(*x, p))),
            (Field::Rational, Scalar::Rat(x)) => {
                if x.is_integer() {
                    Some(x.to_integer())
                } else {
                    None
                }
            }
            _ => mixed(),
        }
    }

    /// Whether the scalar prints with a leading minus sign.
    pub fn is_negative(self, a: &Scalar) -> bool {
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => symmetric(*x, p) < 0,
            (Field::Rational, Scalar::Rat(x)) => x.is_negative(),
            _ => mixed(),
        }
    }

    /// Formats a scalar; residues print in the symmetric range.
    pub fn display(self, a: &Scalar) -> String {
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => symmetric(*x, p).to_string(),
            (Field::Rational, Scalar::Rat(x)) => x.to_string(),
            _ => mixed(),
        }
    }
}

fn symmetric(x: u32, p: u32) -> i64 {
    if (x as u64) * 2 > p as u64 {
        x as i64 - p as i64
    } else {
        x as i64
    }
}

fn mixed() -> ! {
    panic!("scalar does not belong to the ring's coefficient field")
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn characteristic_checks() {
        assert_eq!(Field::from_characteristic(0).unwrap(), Field::Rational);
        assert_eq!(Field::from_characteristic(7).unwrap(), Field::Prime(7));
        assert!(Field::from_characteristic(9).is_err());
        assert!(Field::from_characteristic(1).is_err());
        assert!(Field::from_characteristic(1 << 31).is_err());
        assert_eq!(
            Field::from_characteristic(2147483647).unwrap(),
            Field::Prime(2147483647)
        );
    }

    #[test]
    fn half_in_f7_is_four() {
        let f = Field::Prime(7);
        assert_eq!(f.inv(&f.from_i64(2)), Scalar::Mod(4));
        assert_eq!(f.from_i64(-3), Scalar::Mod(4));
    }

    #[test]
    fn large_modulus_products_do_not_overflow() {
        let f = Field::Prime(2147483647);
        let a = f.from_i64(2147483646);
        assert_eq!(f.mul(&a, &a), Scalar::Mod(1));
    }

    fn fields() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::Rational),
            Just(Field::Prime(2)),
            Just(Field::Prime(5)),
            Just(Field::Prime(32003)),
            Just(Field::Prime(2147483647)),
        ]
    }

    fn scalar(f: Field) -> impl Strategy<Value = Scalar> {
        (any::<i64>(), 1i64..1000).prop_map(move |(n, d)| match f {
            Field::Rational => Scalar::Rat(Box::new(BigRational::new(n.into(), d.into()))),
            Field::Prime(_) => f.from_i64(n),
        })
    }

    fn triple() -> impl Strategy<Value = (Field, Scalar, Scalar, Scalar)> {
        fields().prop_flat_map(|f| (Just(f), scalar(f), scalar(f), scalar(f)))
    }

    proptest! {
        #[test]
        fn field_axioms((f, a, b, c) in triple()) {
            prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
            prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            prop_assert_eq!(
                f.mul(&a, &f.add(&b, &c)),
                f.add(&f.mul(&a, &b), &f.mul(&a, &c))
            );
            prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
            prop_assert_eq!(f.sub(&a, &b), f.add(&a, &f.neg(&b)));
            if !f.is_zero(&a) {
                prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a))));
            }
        }
    }
}
