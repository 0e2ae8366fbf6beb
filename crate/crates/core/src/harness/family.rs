use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Monomial, Polynomial, Ring, Scalar};
use crate::error::{Error, Result};
use crate::ideal::Ideal;

use super::instance::ConjectureInstance;
use super::kr::KrParams;
use super::report::Check;

pub const FAMILIES: [&str; 4] = [
    "coordinate",
    "coordinate-hypersurface",
    "monomial-curve-345",
    "kurano-roberts",
];

pub const CURVE_345_PRIME: [&str; 3] = ["x^3-y*z", "y^2-x*z", "z^2-x^2*y"];

/// Knobs for [`gen_family`]. Zero or `None` means "pick at random" where that
/// makes sense for the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub count: usize,
    pub nvars: usize,
    pub split: usize,
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub characteristic: u64,
    pub s: u32,
    pub q: u32,
    pub seed: u64,
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams {
            count: 1,
            nvars: 4,
            split: 0,
            m: None,
            n: None,
            characteristic: 0,
            s: 3,
            q: 2,
            seed: 0,
        }
    }
}

/// Instances of a named family. Instance `i` is drawn from seed `seed + i`,
/// so any single instance can be regenerated with `count = 1`.
pub fn gen_family(name: &str, params: &FamilyParams) -> Result<Vec<ConjectureInstance>> {
    let build: fn(&FamilyParams, &mut ChaCha8Rng) -> Result<ConjectureInstance> = match name {
        "coordinate" => coordinate,
        "coordinate-hypersurface" => coordinate_hypersurface,
        "monomial-curve-345" => curve_345,
        "kurano-roberts" => {
            let kr = KrParams::new(params.s, params.q)?;
            let ring = kr.ring(params.characteristic)?;
            let p = Ideal::from_strs(&ring, &["x", "u"])?;
            let q = Ideal::from_strs(&ring, &["y", "z"])?;
            let f = ring.parse(&format!("x^{}*y", kr.m))?;
            let inst = ConjectureInstance::new(p, q, f, kr.ms(), 1, Check::SP1)?
                .with_seed(params.seed);
            return Ok(vec![inst]);
        }
        other => {
            return Err(Error::usage(format!(
                "unknown family {other:?}; expected one of {}",
                FAMILIES.join(", ")
            )))
        }
    };
    (0..params.count as u64)
        .map(|i| {
            let seed = params.seed.wrapping_add(i);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(build(params, &mut rng)?.with_seed(seed))
        })
        .collect()
}

fn numbered_ring(nvars: usize, characteristic: u64) -> Result<Ring> {
    let names: Vec<String> = (1..=nvars).map(|i| format!("x{i}")).collect();
    Ring::new(&names, characteristic)
}

fn coefficient(ring: &Ring, rng: &mut ChaCha8Rng) -> Scalar {
    let field = ring.field();
    loop {
        let c = field.from_i64(rng.gen_range(-5..=5));
        if !field.is_zero(&c) {
            return c;
        }
    }
}

/// Random monomial of the given degree in the listed variables.
fn random_monomial(nvars: usize, vars: &[usize], degree: u32, rng: &mut ChaCha8Rng) -> Monomial {
    let mut exps = vec![0u32; nvars];
    for _ in 0..degree {
        exps[*vars.choose(rng).expect("nonempty variable block")] += 1;
    }
    Monomial::from_exponents(&exps)
}

/// Random nonzero combination `Σ c_i·g_i·μ_i` with `g_i` from `pool` and
/// monomials `μ_i` of degree at most `extra`.
fn combination(
    ring: &Ring,
    pool: &[Polynomial],
    extra: u32,
    rng: &mut ChaCha8Rng,
) -> Polynomial {
    let all: Vec<usize> = (0..ring.nvars()).collect();
    loop {
        let mut f = ring.zero();
        for _ in 0..rng.gen_range(1..=3) {
            let g = pool.choose(rng).expect("nonempty pool");
            let mu = random_monomial(ring.nvars(), &all, rng.gen_range(0..=extra), rng);
            let c = coefficient(ring, rng);
            f = f.add_ref(&g.mul_term(&c, &mu));
        }
        if !f.is_zero() {
            return f;
        }
    }
}

fn var_ideal(ring: &Ring, vars: &[usize]) -> Result<Ideal> {
    Ideal::new(ring, vars.iter().map(|&i| ring.var(i)).collect())
}

/// Complementary variable blocks, `f ∈ p^m q^n = p^(m) ∩ q^(n)`, checked as SP-2.
fn coordinate(params: &FamilyParams, rng: &mut ChaCha8Rng) -> Result<ConjectureInstance> {
    let nvars = params.nvars.max(2);
    let ring = numbered_ring(nvars, params.characteristic)?;
    let split = if params.split == 0 {
        rng.gen_range(1..nvars)
    } else if params.split < nvars {
        params.split
    } else {
        return Err(Error::usage("split must leave both blocks nonempty"));
    };
    let m = params.m.unwrap_or_else(|| rng.gen_range(1..=3));
    let n = params.n.unwrap_or_else(|| rng.gen_range(1..=3));
    let a: Vec<usize> = (0..split).collect();
    let b: Vec<usize> = (split..nvars).collect();
    let pool: Vec<Polynomial> = (0..4)
        .map(|_| {
            let mono = random_monomial(nvars, &a, m, rng).mul(&random_monomial(nvars, &b, n, rng));
            ring.one().mul_term(&ring.field().one(), &mono)
        })
        .collect();
    let f = combination(&ring, &pool, 1, rng);
    ConjectureInstance::new(var_ideal(&ring, &a)?, var_ideal(&ring, &b)?, f, m, n, Check::SP2)
}

/// Coordinate primes sharing zero or one variable, `f ∈ p ∩ q`, checked as one
/// of the ID variants.
fn coordinate_hypersurface(
    params: &FamilyParams,
    rng: &mut ChaCha8Rng,
) -> Result<ConjectureInstance> {
    let nvars = params.nvars.max(2);
    let ring = numbered_ring(nvars, params.characteristic)?;
    let overlap = if nvars >= 3 { rng.gen_range(0..=1) } else { 0 };
    let free = nvars - overlap;
    let split = rng.gen_range(1..free);
    let mut order: Vec<usize> = (0..nvars).collect();
    order.shuffle(rng);
    let a = &order[..split];
    let b = &order[split..free];
    let shared = &order[free..];
    let pa: Vec<usize> = a.iter().chain(shared).copied().collect();
    let qb: Vec<usize> = b.iter().chain(shared).copied().collect();
    let mut pool: Vec<Polynomial> = shared.iter().map(|&i| ring.var(i)).collect();
    for &i in a {
        for &j in b {
            pool.push(ring.var(i).mul_ref(&ring.var(j)));
        }
    }
    let f = combination(&ring, &pool, 2, rng);
    let check = *[Check::ID1, Check::ID2, Check::WeakId2].choose(rng).unwrap();
    ConjectureInstance::new(var_ideal(&ring, &pa)?, var_ideal(&ring, &qb)?, f, 1, 1, check)
}

/// The prime of `(t^3, t^4, t^5)` against `q = (x)`, `f = x·g` with `g` in
/// `p^m` or, for `m = 2`, in the saturation of `p^2` by the separator `x`.
fn curve_345(params: &FamilyParams, rng: &mut ChaCha8Rng) -> Result<ConjectureInstance> {
    let ring = Ring::new(&["x", "y", "z"], params.characteristic)?;
    let p = Ideal::from_strs(&ring, &CURVE_345_PRIME)?;
    let x = ring.var(0);
    let m = params.m.unwrap_or_else(|| rng.gen_range(1..=2));
    let pool = if m == 2 {
        p.power(2)?.saturate(&x)?.gens().to_vec()
    } else {
        p.power(m)?.gens().to_vec()
    };
    let g = combination(&ring, &pool, 1, rng);
    let f = x.mul_ref(&g);
    let q = Ideal::principal(&x);
    Ok(ConjectureInstance::new(p, q, f, m, 1, Check::SP1)?.with_separator(x))
}
