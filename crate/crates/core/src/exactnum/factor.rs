//! Prime factorizations of positive rationals.
//!
//! Square roots of factorial ratios (Clebsch–Gordan prefactors, recursion
//! weights, harmonic normalizations) are split into a rational part and a
//! squarefree radicand through this type, so no large integer is ever
//! factored by trial division.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{NumError, Rational};

/// Largest trial divisor used when factoring an arbitrary integer.
const TRIAL_LIMIT: u64 = 1_000_000;

/// A positive rational as a map from primes to signed exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Factorization {
    exps: BTreeMap<u64, i64>,
}

fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut k = i * i;
            while k <= n {
                sieve[k] = false;
                k += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(p, &is_p)| is_p.then_some(p as u64))
        .collect()
}

impl Factorization {
    pub fn one() -> Self {
        Self::default()
    }

    /// Factors a small positive integer by trial division.
    ///
    /// Panics on zero.
    pub fn of_u64(mut n: u64) -> Self {
        assert!(n > 0, "cannot factor zero");
        let mut out = Self::one();
        let mut p = 2u64;
        while p * p <= n {
            while n.is_multiple_of(p) {
                *out.exps.entry(p).or_insert(0) += 1;
                n /= p;
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if n > 1 {
            *out.exps.entry(n).or_insert(0) += 1;
        }
        out
    }

    /// `n!` via Legendre's formula.
    pub fn factorial(n: u64) -> Self {
        let mut out = Self::one();
        for p in primes_up_to(n) {
            let mut e = 0i64;
            let mut q = n;
            while q > 0 {
                q /= p;
                e += q as i64;
            }
            if e != 0 {
                out.exps.insert(p, e);
            }
        }
        out
    }

    /// Factors an arbitrary positive integer; fails when a cofactor beyond
    /// the trial limit is not provably prime or square.
    pub fn of_biguint(n: &BigUint) -> Result<Self, NumError> {
        if n.is_zero() {
            return Err(NumError::ZeroFactorization);
        }
        if let Some(small) = n.to_u64() {
            if small <= TRIAL_LIMIT * TRIAL_LIMIT {
                return Ok(Self::of_u64(small));
            }
        }
        let mut rest = n.clone();
        let mut out = Self::one();
        for p in primes_up_to(TRIAL_LIMIT) {
            let bp = BigUint::from(p);
            if &bp * &bp > rest {
                break;
            }
            while (&rest % &bp).is_zero() {
                rest /= &bp;
                *out.exps.entry(p).or_insert(0) += 1;
            }
        }
        if rest.is_one() {
            return Ok(out);
        }
        let limit_sq = BigUint::from(TRIAL_LIMIT) * BigUint::from(TRIAL_LIMIT);
        if rest < limit_sq {
            let p = rest.to_u64().expect("cofactor below trial limit squared fits u64");
            *out.exps.entry(p).or_insert(0) += 1;
            return Ok(out);
        }
        Err(NumError::Unfactorable(n.to_string()))
    }

    pub fn of_rational(q: &Rational) -> Result<Self, NumError> {
        if q.numer().is_zero() || q.numer() < &BigInt::zero() {
            return Err(NumError::NonPositive(q.to_string()));
        }
        let num = Self::of_biguint(q.numer().magnitude())?;
        let den = Self::of_biguint(q.denom().magnitude())?;
        Ok(num.div(&den))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&p, &e) in &other.exps {
            let slot = out.exps.entry(p).or_insert(0);
            *slot += e;
            if *slot == 0 {
                out.exps.remove(&p);
            }
        }
        out
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.pow(-1))
    }

    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return Self::one();
        }
        Self {
            exps: self.exps.iter().map(|(&p, &e)| (p, e * k)).collect(),
        }
    }

    pub fn to_rational(&self) -> Rational {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (&p, &e) in &self.exps {
            let pp = BigInt::from(p).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num *= pp;
            } else {
                den *= pp;
            }
        }
        Rational::new(num, den)
    }

    /// `sqrt(self)` when every exponent is even.
    pub fn sqrt_exact(&self) -> Option<Self> {
        let mut out = Self::one();
        for (&p, &e) in &self.exps {
            if e % 2 != 0 {
                return None;
            }
            out.exps.insert(p, e / 2);
        }
        Some(out)
    }

    /// Writes `sqrt(self)` as `q * sqrt(d)` with `d` squarefree.
    pub fn sqrt_split(&self) -> (Rational, u128) {
        let mut outer = Self::one();
        let mut radicand: u128 = 1;
        for (&p, &e) in &self.exps {
            let (q, r) = e.div_mod_floor(&2);
            if q != 0 {
                outer.exps.insert(p, q);
            }
            if r == 1 {
                radicand = radicand
                    .checked_mul(p as u128)
                    .expect("squarefree radicand overflows u128");
            }
        }
        (outer.to_rational(), radicand)
    }
}

/// Squarefree part test for small radicands.
pub fn is_squarefree(d: u128) -> bool {
    if d == 0 {
        return false;
    }
    let mut n = d;
    let mut p: u128 = 2;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        if n.is_multiple_of(p) {
            n /= p;
        }
        p += 1;
    }
    true
}
