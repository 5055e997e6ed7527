use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor::{is_squarefree, Factorization};
use super::{GaussRational, NumError, Rational};

/// Basis element `sqrt(radicand) * pi^(pi_half/2) * s^s_pow`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurdKey {
    pub radicand: u128,
    pub pi_half: i32,
    pub s_pow: i32,
}

impl SurdKey {
    pub const UNIT: SurdKey = SurdKey { radicand: 1, pi_half: 0, s_pow: 0 };

    /// Product of two basis elements: the new key and the integer pulled
    /// out of the radicand (`sqrt(d1) sqrt(d2) = g sqrt(d1 d2 / g^2)`).
    fn mul(self, other: SurdKey) -> (SurdKey, u128) {
        let g = self.radicand.gcd(&other.radicand);
        let radicand = (self.radicand / g)
            .checked_mul(other.radicand / g)
            .expect("radicand overflow");
        (
            SurdKey {
                radicand,
                pi_half: self.pi_half + other.pi_half,
                s_pow: self.s_pow + other.s_pow,
            },
            g,
        )
    }
}

// Display order: descending powers of s, then of pi, then ascending radicand.
impl Ord for SurdKey {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .s_pow
            .cmp(&self.s_pow)
            .then(other.pi_half.cmp(&self.pi_half))
            .then(self.radicand.cmp(&other.radicand))
    }
}

impl PartialOrd for SurdKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact scalar: a Q(i)-combination of `sqrt(d) * pi^(p/2) * s^k` with
/// squarefree `d`.
///
/// Terms are kept sorted by key with no zero values, so structural equality
/// is equality of values (distinct keys are linearly independent over Q(i)).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Coefficient {
    terms: Vec<(SurdKey, GaussRational)>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_gauss(GaussRational::one())
    }

    pub fn i() -> Self {
        Self::from_gauss(GaussRational::i())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_gauss(GaussRational::from_int(n))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_gauss(GaussRational::real(q))
    }

    pub fn from_gauss(g: GaussRational) -> Self {
        Self::single(g, SurdKey::UNIT)
    }

    /// One term. The radicand must already be squarefree.
    pub fn single(value: GaussRational, key: SurdKey) -> Self {
        debug_assert!(is_squarefree(key.radicand));
        if value.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(key, value)] }
        }
    }

    /// The radius symbol raised to `k`.
    pub fn s_pow(k: i32) -> Self {
        Self::single(GaussRational::one(), SurdKey { s_pow: k, ..SurdKey::UNIT })
    }

    /// `pi^(p/2)`.
    pub fn pi_half_pow(p: i32) -> Self {
        Self::single(GaussRational::one(), SurdKey { pi_half: p, ..SurdKey::UNIT })
    }

    /// `sqrt(f)` for a factored positive rational.
    pub fn sqrt_factored(f: &Factorization) -> Self {
        let (outer, radicand) = f.sqrt_split();
        Self::single(GaussRational::real(outer), SurdKey { radicand, ..SurdKey::UNIT })
    }

    /// Principal square root of a rational; negative input gives `i*sqrt(|q|)`.
    pub fn sqrt_rational(q: &Rational) -> Result<Self, NumError> {
        if q.is_zero() {
            return Ok(Self::zero());
        }
        let root = Self::sqrt_factored(&Factorization::of_rational(&q.abs())?);
        Ok(if q.is_negative() { root.mul_i() } else { root })
    }

    pub fn sqrt_int(n: u64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        Self::sqrt_factored(&Factorization::of_u64(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].0 == SurdKey::UNIT
            && self.terms[0].1 == GaussRational::one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SurdKey, &GaussRational)> {
        self.terms.iter().map(|(k, v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_single_term(&self) -> bool {
        self.terms.len() == 1
    }

    /// The value when the coefficient lies in Q(i).
    pub fn as_gauss(&self) -> Option<GaussRational> {
        match self.terms.as_slice() {
            [] => Some(GaussRational::zero()),
            [(k, v)] if *k == SurdKey::UNIT => Some(v.clone()),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_gauss().filter(|g| g.is_real()).map(|g| g.re)
    }

    /// Value squared when it is a rational number (single real or purely
    /// imaginary surd term without pi or s).
    pub fn square_if_rational(&self) -> Option<Rational> {
        let sq = self * self;
        sq.as_rational()
    }

    fn from_map(map: BTreeMap<SurdKey, GaussRational>) -> Self {
        Self {
            terms: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v.conj())).collect(),
        }
    }

    /// Part with real Q(i) coefficients.
    pub fn real_part(&self) -> Self {
        Self::from_map(
            self.terms
                .iter()
                .map(|(k, v)| (*k, GaussRational::real(v.re.clone())))
                .collect(),
        )
    }

    /// Imaginary part, as a real coefficient.
    pub fn imag_part(&self) -> Self {
        Self::from_map(
            self.terms
                .iter()
                .map(|(k, v)| (*k, GaussRational::real(v.im.clone())))
                .collect(),
        )
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v.scale(q))).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(n)))
    }

    pub fn mul_i(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v.mul_i())).collect(),
        }
    }

    /// Multiplies by `s^k`; key order is preserved.
    pub fn mul_s_pow(&self, k: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(key, v)| (SurdKey { s_pow: key.s_pow + k, ..*key }, v.clone()))
                .collect(),
        }
    }

    /// Inverse of a single-term value `q sqrt(d) pi^(p/2) s^k`.
    pub fn inv_single(&self) -> Option<Self> {
        match self.terms.as_slice() {
            [(k, v)] => {
                let d = Rational::from_integer(BigInt::from(k.radicand));
                let value = v.inv()?.scale(&d.recip());
                Some(Self::single(
                    value,
                    SurdKey { radicand: k.radicand, pi_half: -k.pi_half, s_pow: -k.s_pow },
                ))
            }
            _ => None,
        }
    }

    /// Exact quotient by a single-term divisor.
    pub fn div_single(&self, divisor: &Self) -> Result<Self, NumError> {
        let inv = divisor.inv_single().ok_or(NumError::NotInvertible(divisor.to_string()))?;
        Ok(self * &inv)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Highest and lowest power of `s` present.
    pub fn s_pow_range(&self) -> Option<(i32, i32)> {
        let lo = self.terms.iter().map(|(k, _)| k.s_pow).min()?;
        let hi = self.terms.iter().map(|(k, _)| k.s_pow).max()?;
        Some((lo, hi))
    }

    /// Rewrites the coefficient as a polynomial in `s`: map from power of
    /// `s` to the s-free part.
    pub fn split_by_s_pow(&self) -> BTreeMap<i32, Coefficient> {
        let mut out: BTreeMap<i32, Vec<(SurdKey, GaussRational)>> = BTreeMap::new();
        for (k, v) in &self.terms {
            out.entry(k.s_pow)
                .or_default()
                .push((SurdKey { s_pow: 0, ..*k }, v.clone()));
        }
        out.into_iter()
            .map(|(p, mut ts)| {
                ts.sort_by_key(|a| a.0);
                (p, Coefficient { terms: ts })
            })
            .collect()
    }

    fn merge(&self, rhs: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < rhs.terms.len() {
            let ord = match (self.terms.get(i), rhs.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (k, v) = &rhs.terms[j];
                    out.push((*k, if negate { -v } else { v.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let (k, a) = &self.terms[i];
                    let b = &rhs.terms[j].1;
                    let v = if negate { a - b } else { a + b };
                    if !v.is_zero() {
                        out.push((*k, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self { terms: out }
    }

    fn product(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 && rhs.terms.len() == 1 {
            let (ka, va) = &self.terms[0];
            let (kb, vb) = &rhs.terms[0];
            let (key, g) = ka.mul(*kb);
            let mut v = va * vb;
            if g != 1 {
                v = v.scale(&Rational::from_integer(BigInt::from(g)));
            }
            return Self::single(v, key);
        }
        let mut acc: BTreeMap<SurdKey, GaussRational> = BTreeMap::new();
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                let (key, g) = ka.mul(*kb);
                let mut v = va * vb;
                if g != 1 {
                    v = v.scale(&Rational::from_integer(BigInt::from(g)));
                }
                match acc.get_mut(&key) {
                    Some(slot) => *slot += &v,
                    None => {
                        acc.insert(key, v);
                    }
                }
            }
        }
        Self::from_map(acc)
    }
}

impl From<Rational> for Coefficient {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<GaussRational> for Coefficient {
    fn from(g: GaussRational) -> Self {
        Self::from_gauss(g)
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        self.product(rhs)
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: Coefficient) -> Coefficient {
        self.merge(&rhs, false)
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: Coefficient) -> Coefficient {
        self.merge(&rhs, true)
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        self.product(&rhs)
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&Coefficient> for Coefficient {
    fn sub_assign(&mut self, rhs: &Coefficient) {
        *self = self.merge(rhs, true);
    }
}

fn key_factors(key: &SurdKey) -> Vec<String> {
    let mut out = Vec::new();
    if key.radicand > 1 {
        out.push(format!("sqrt({})", key.radicand));
    }
    let p = key.pi_half;
    if p != 0 {
        if p % 2 == 0 {
            let e = p / 2;
            out.push(match e {
                1 => "pi".to_string(),
                e if e > 1 => format!("pi^{e}"),
                e => format!("pi^({e})"),
            });
        } else {
            out.push(format!("pi^({p}/2)"));
        }
    }
    match key.s_pow {
        0 => {}
        1 => out.push("s".to_string()),
        k if k > 1 => out.push(format!("s^{k}")),
        k => out.push(format!("s^({k})")),
    }
    out
}

fn render_term(key: &SurdKey, v: &GaussRational) -> String {
    let factors = key_factors(key);
    if factors.is_empty() {
        return v.to_string();
    }
    let f = factors.join("*");
    let minus_one = GaussRational::from_int(-1);
    let minus_i = -GaussRational::i();
    if *v == GaussRational::one() {
        f
    } else if *v == minus_one {
        format!("-{f}")
    } else if *v == GaussRational::i() {
        format!("i*{f}")
    } else if *v == minus_i {
        format!("-i*{f}")
    } else {
        format!("{v}*{f}")
    }
}

/// Joins already-rendered signed terms with ` + ` / ` - `.
pub(crate) fn join_signed<I: IntoIterator<Item = String>>(parts: I) -> String {
    let mut out = String::new();
    for (idx, part) in parts.into_iter().enumerate() {
        if idx == 0 {
            out.push_str(&part);
        } else if let Some(rest) = part.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&part);
        }
    }
    out
}

/// Canonical text form, e.g. `3/4*sqrt(6)*pi^(-1/2)*s^2 + i*1/2`.
impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&join_signed(self.terms.iter().map(|(k, v)| render_term(k, v))))
    }
}

struct CoeffParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> CoeffParser<'a> {
    fn err(&self, what: &str) -> NumError {
        NumError::Parse { pos: self.pos, msg: what.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), NumError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn integer(&mut self) -> Result<BigInt, NumError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse as integer"))
    }

    fn signed_int(&mut self) -> Result<i64, NumError> {
        let neg = self.eat(b'-');
        let n = self.integer()?;
        let n: i64 = n.try_into().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -n } else { n })
    }

    fn rational(&mut self) -> Result<Rational, NumError> {
        let num = self.integer()?;
        if self.peek() == Some(b'/') && self.src.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
            let den = self.integer()?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn digit_after_star(&self) -> bool {
        self.peek() == Some(b'*') && self.src.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit())
    }

    fn value(&mut self) -> Result<Option<GaussRational>, NumError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let neg_re = self.eat(b'-');
                let mut re = self.rational()?;
                if neg_re {
                    re = -re;
                }
                self.skip_ws();
                let neg_im = if self.eat(b'-') {
                    true
                } else {
                    self.expect(b'+')?;
                    false
                };
                self.skip_ws();
                self.expect(b'i')?;
                let mut im = if self.digit_after_star() {
                    self.pos += 1;
                    self.rational()?
                } else {
                    Rational::one()
                };
                if neg_im {
                    im = -im;
                }
                self.skip_ws();
                self.expect(b')')?;
                Ok(Some(GaussRational::new(re, im)))
            }
            Some(b'i') => {
                self.pos += 1;
                let im = if self.digit_after_star() {
                    self.pos += 1;
                    self.rational()?
                } else {
                    Rational::one()
                };
                Ok(Some(GaussRational::new(Rational::zero(), im)))
            }
            Some(c) if c.is_ascii_digit() => Ok(Some(GaussRational::real(self.rational()?))),
            _ => Ok(None),
        }
    }

    fn exponent(&mut self) -> Result<(i64, bool), NumError> {
        // Returns (numerator, halved).
        if self.eat(b'(') {
            let n = self.signed_int()?;
            let halved = if self.eat(b'/') {
                if self.integer()? != BigInt::from(2) {
                    return Err(self.err("only /2 exponents are allowed"));
                }
                true
            } else {
                false
            };
            self.expect(b')')?;
            Ok((n, halved))
        } else {
            Ok((self.signed_int()?, false))
        }
    }

    fn factor(&mut self) -> Result<Coefficient, NumError> {
        if self.eat_str("sqrt(") {
            let n = self.integer()?;
            self.expect(b')')?;
            let n: u64 = n.try_into().map_err(|_| self.err("radicand too large"))?;
            Ok(Coefficient::sqrt_int(n))
        } else if self.eat_str("pi") {
            let p = if self.eat(b'^') {
                let (n, halved) = self.exponent()?;
                if halved { n } else { 2 * n }
            } else {
                2
            };
            Ok(Coefficient::pi_half_pow(p as i32))
        } else if self.eat(b's') {
            let k = if self.eat(b'^') {
                let (n, halved) = self.exponent()?;
                if halved {
                    return Err(self.err("half powers of s are not allowed"));
                }
                n
            } else {
                1
            };
            Ok(Coefficient::s_pow(k as i32))
        } else {
            Err(self.err("expected sqrt(..), pi or s"))
        }
    }

    fn term(&mut self) -> Result<Coefficient, NumError> {
        let neg = self.eat(b'-');
        let mut acc = match self.value()? {
            Some(v) => {
                let mut acc = Coefficient::from_gauss(v);
                while self.eat(b'*') {
                    acc = &acc * &self.factor()?;
                }
                acc
            }
            None => {
                let mut acc = self.factor()?;
                while self.eat(b'*') {
                    acc = &acc * &self.factor()?;
                }
                acc
            }
        };
        if neg {
            acc = -acc;
        }
        Ok(acc)
    }

    fn sum(&mut self) -> Result<Coefficient, NumError> {
        self.skip_ws();
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            if self.eat(b'+') {
                self.skip_ws();
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                self.skip_ws();
                acc = &acc - &self.term()?;
            } else {
                break;
            }
        }
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.err("trailing input"));
        }
        Ok(acc)
    }
}

impl FromStr for Coefficient {
    type Err = NumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CoeffParser { src: s.as_bytes(), pos: 0 }.sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn c(s: &str) -> Coefficient {
        s.parse().unwrap()
    }

    #[test]
    fn radicand_products() {
        assert_eq!(&Coefficient::sqrt_int(2) * &Coefficient::sqrt_int(3), Coefficient::sqrt_int(6));
        assert_eq!(
            &Coefficient::sqrt_int(6) * &Coefficient::sqrt_int(10),
            Coefficient::sqrt_int(15).scale_int(2)
        );
        assert_eq!(
            &Coefficient::pi_half_pow(-1) * &Coefficient::pi_half_pow(-1),
            Coefficient::pi_half_pow(-2)
        );
    }

    #[test]
    fn zero_tests() {
        let r2 = Coefficient::sqrt_int(2);
        assert!((&r2 - &r2).is_zero());
        assert!(!(&r2 + &Coefficient::sqrt_int(3)).is_zero());
        let lhs = Coefficient::sqrt_int(15).scale_int(2);
        assert!((&lhs - &Coefficient::sqrt_int(60)).is_zero());
    }

    #[test]
    fn single_term_inverse() {
        let x = c("3/4*sqrt(6)*pi^(-1/2)*s^2");
        let inv = x.inv_single().unwrap();
        assert!((&x * &inv).is_one());
        assert!((&Coefficient::sqrt_int(2) + &Coefficient::one()).inv_single().is_none());
    }

    #[test]
    fn rendering_examples() {
        let x = &c("3/4*sqrt(6)*pi^(-1/2)*s^2") + &Coefficient::from_gauss(GaussRational::new(rat(0, 1), rat(1, 2)));
        assert_eq!(x.to_string(), "3/4*sqrt(6)*pi^(-1/2)*s^2 + i*1/2");
        assert_eq!(Coefficient::zero().to_string(), "0");
        assert_eq!(Coefficient::sqrt_int(2).scale_int(-1).to_string(), "-sqrt(2)");
        assert_eq!(Coefficient::pi_half_pow(2).mul_s_pow(2).scale_int(4).to_string(), "4*pi*s^2");
        assert_eq!(c("s^(-3)*pi^(3/2)").to_string(), "pi^(3/2)*s^(-3)");
    }

    #[test]
    fn parse_accepts_rendered_forms() {
        for text in [
            "0",
            "1",
            "-i",
            "(1 - i*2)*sqrt(3)",
            "i*1/2*sqrt(6)*pi^(-1)",
            "sqrt(5)*s - 7/3 + i",
            "-2/9*pi^2*s^(-4)",
        ] {
            let parsed = c(text);
            assert_eq!(c(&parsed.to_string()), parsed, "{text}");
        }
    }

    #[test]
    fn sqrt_of_rationals() {
        let r = Coefficient::sqrt_rational(&rat(2, 3)).unwrap();
        assert_eq!(r, Coefficient::sqrt_int(6).scale(&rat(1, 3)));
        assert_eq!(Coefficient::sqrt_rational(&rat(-4, 1)).unwrap(), Coefficient::i().scale_int(2));
        assert_eq!((&r * &r).as_rational(), Some(rat(2, 3)));
    }

    #[test]
    fn s_polynomial_split() {
        let x = c("2*s^2 + sqrt(3)*s^2 - 5");
        let parts = x.split_by_s_pow();
        assert_eq!(parts[&2], c("2 + sqrt(3)"));
        assert_eq!(parts[&0], Coefficient::from_int(-5));
    }
}
