//! The Poisson algebra of spin polynomials restricted to the sphere
//! `S1² + S2² + S3² = s²`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::exactnum::{Coefficient, Rational};
use crate::harmonics;
use crate::poly::SparsePoly;

/// Polynomial in `S1, S2, S3` before passing to the quotient.
pub type Poly3 = SparsePoly<Coefficient, 3>;

pub const NAMES: [&str; 3] = ["S1", "S2", "S3"];

/// Coordinate axis; `index()` is zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X1,
    X2,
    X3,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X1, Axis::X2, Axis::X3];

    /// From a one-based label.
    pub fn from_label(i: usize) -> Option<Self> {
        match i {
            1 => Some(Axis::X1),
            2 => Some(Axis::X2),
            3 => Some(Axis::X3),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> usize {
        self.index() + 1
    }
}

/// Levi-Civita symbol on zero-based indices.
pub fn epsilon(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Canonical expansion of `S3^(2q)` as `(s² − S1² − S2²)^q`.
fn s3_even_power(q: u32) -> Vec<([u32; 3], Coefficient)> {
    let qf = factorial(q);
    let mut out = Vec::new();
    for u in 0..=q {
        for v in 0..=(q - u) {
            let w = q - u - v;
            let multinom = &qf / (factorial(u) * factorial(v) * factorial(w));
            let sign = if (v + w).is_multiple_of(2) { 1 } else { -1 };
            let c = Coefficient::from_rational(Rational::from(multinom * sign))
                .mul_s_pow(2 * u as i32);
            out.push(([2 * v, 2 * w, 0], c));
        }
    }
    out
}

/// Element of the quotient algebra, stored with every `S3` exponent ≤ 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SpherePoly {
    poly: Poly3,
}

/// Reduces `p` modulo the sphere relation.
pub fn canonicalize(p: &Poly3) -> SpherePoly {
    if p.terms().all(|(e, _)| e[2] <= 1) {
        return SpherePoly { poly: p.clone() };
    }
    let mut out = Poly3::zero();
    for (e, c) in p.terms() {
        if e[2] <= 1 {
            out.add_term(*e, c);
            continue;
        }
        for (de, dc) in s3_even_power(e[2] / 2) {
            let mono = [e[0] + de[0], e[1] + de[1], e[2] % 2];
            out.add_term(mono, &(c * &dc));
        }
    }
    SpherePoly { poly: out }
}

/// `Σ ε_ijk S_i ∂_j f ∂_k g` on representatives, without reduction.
pub fn poisson_raw(f: &Poly3, g: &Poly3) -> Poly3 {
    let df: Vec<Poly3> = (0..3).map(|i| f.derivative(i)).collect();
    let dg: Vec<Poly3> = (0..3).map(|i| g.derivative(i)).collect();
    let mut out = Poly3::zero();
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let inner = &(&df[j] * &dg[k]) - &(&df[k] * &dg[j]);
        out = &out + &inner.shift(&unit(i));
    }
    out
}

fn unit(i: usize) -> [u32; 3] {
    let mut e = [0; 3];
    e[i] = 1;
    e
}

/// The Poisson bracket of two classes.
pub fn poisson(f: &SpherePoly, g: &SpherePoly) -> SpherePoly {
    canonicalize(&poisson_raw(&f.poly, &g.poly))
}

/// `{S_i, p}`.
pub fn rot_action(axis: Axis, p: &SpherePoly) -> SpherePoly {
    let i = axis.index();
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    // {S_i, p} = S_k ∂_j p − S_j ∂_k p
    let out = &p.poly.derivative(j).shift(&unit(k)) - &p.poly.derivative(k).shift(&unit(j));
    canonicalize(&out)
}

/// Harmonic degree of a class; `-1` for the zero class.
pub fn degree(p: &SpherePoly) -> i64 {
    harmonics::harmonic_decompose(p)
        .components()
        .keys()
        .next_back()
        .map_or(-1, |&l| l as i64)
}

impl SpherePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Coefficient::one())
    }

    pub fn constant(c: Coefficient) -> Self {
        Self { poly: Poly3::constant(c) }
    }

    /// The coordinate function `S_i`.
    pub fn coord(axis: Axis) -> Self {
        Self { poly: Poly3::var(axis.index()) }
    }

    /// `c · S1^e1 S2^e2 S3^e3`, reduced.
    pub fn monomial(exps: [u32; 3], c: Coefficient) -> Self {
        canonicalize(&Poly3::monomial(exps, c))
    }

    /// The squared radius `s²` as a constant class.
    pub fn s_squared() -> Self {
        Self::constant(Coefficient::s_pow(2))
    }

    pub fn from_poly(p: &Poly3) -> Self {
        canonicalize(p)
    }

    pub fn as_poly(&self) -> &Poly3 {
        &self.poly
    }

    pub fn into_poly(self) -> Poly3 {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Coefficient)> {
        self.poly.terms()
    }

    pub fn coeff(&self, exps: &[u32; 3]) -> Coefficient {
        self.poly.coeff(exps)
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self { poly: self.poly.scale(c) }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn conj(&self) -> Self {
        Self { poly: self.poly.conj() }
    }

    /// Coefficient-wise real part.
    pub fn real_part(&self) -> Self {
        Self { poly: self.poly.map_coeffs(Coefficient::real_part) }
    }

    /// Coefficient-wise imaginary part.
    pub fn imag_part(&self) -> Self {
        Self { poly: self.poly.map_coeffs(Coefficient::imag_part) }
    }

    /// Largest total degree of the canonical representative.
    pub fn rep_degree(&self) -> Option<u32> {
        self.poly.total_degree()
    }

    pub fn poisson(&self, other: &Self) -> Self {
        poisson(self, other)
    }
}

impl Add<&SpherePoly> for &SpherePoly {
    type Output = SpherePoly;
    fn add(self, rhs: &SpherePoly) -> SpherePoly {
        SpherePoly { poly: &self.poly + &rhs.poly }
    }
}

impl Sub<&SpherePoly> for &SpherePoly {
    type Output = SpherePoly;
    fn sub(self, rhs: &SpherePoly) -> SpherePoly {
        SpherePoly { poly: &self.poly - &rhs.poly }
    }
}

impl Mul<&SpherePoly> for &SpherePoly {
    type Output = SpherePoly;
    fn mul(self, rhs: &SpherePoly) -> SpherePoly {
        canonicalize(&(&self.poly * &rhs.poly))
    }
}

impl Neg for &SpherePoly {
    type Output = SpherePoly;
    fn neg(self) -> SpherePoly {
        SpherePoly { poly: -&self.poly }
    }
}

impl Add for SpherePoly {
    type Output = SpherePoly;
    fn add(self, rhs: SpherePoly) -> SpherePoly {
        &self + &rhs
    }
}

impl Sub for SpherePoly {
    type Output = SpherePoly;
    fn sub(self, rhs: SpherePoly) -> SpherePoly {
        &self - &rhs
    }
}

impl Mul for SpherePoly {
    type Output = SpherePoly;
    fn mul(self, rhs: SpherePoly) -> SpherePoly {
        &self * &rhs
    }
}

impl Neg for SpherePoly {
    type Output = SpherePoly;
    fn neg(self) -> SpherePoly {
        -&self
    }
}

impl fmt::Display for SpherePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.render(&NAMES))
    }
}

impl fmt::Debug for SpherePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpherePoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn s(i: usize) -> SpherePoly {
        SpherePoly::coord(Axis::from_label(i).unwrap())
    }

    fn mono(e: [u32; 3]) -> SpherePoly {
        SpherePoly::monomial(e, Coefficient::one())
    }

    #[test]
    fn sphere_relation_collapses() {
        let p = &(&mono([2, 0, 0]) + &mono([0, 2, 0])) + &mono([0, 0, 2]);
        assert_eq!(p, SpherePoly::s_squared());
    }

    #[test]
    fn s3_cubed() {
        let expect = &(&SpherePoly::s_squared() * &s(3)) - &(&mono([2, 0, 1]) + &mono([0, 2, 1]));
        assert_eq!(mono([0, 0, 3]), expect);
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let p = mono([1, 2, 5]);
        assert_eq!(canonicalize(p.as_poly()), p);
        assert!(p.terms().all(|(e, _)| e[2] <= 1));
    }

    #[test]
    fn structure_constants() {
        for i in 0..3 {
            for j in 0..3 {
                let mut expect = SpherePoly::zero();
                for k in 0..3 {
                    let e = epsilon(i, j, k);
                    if e != 0 {
                        expect = &expect + &s(k + 1).scale(&Coefficient::from_int(e));
                    }
                }
                assert_eq!(poisson(&s(i + 1), &s(j + 1)), expect, "({i},{j})");
            }
        }
    }

    #[test]
    fn rot_action_matches_bracket() {
        let p = &mono([2, 1, 0]) + &mono([0, 1, 1]).scale(&Coefficient::from_rational(rat(3, 2)));
        for ax in Axis::ALL {
            assert_eq!(rot_action(ax, &p), poisson(&SpherePoly::coord(ax), &p));
        }
        assert!(rot_action(Axis::X3, &s(3)).is_zero());
        assert_eq!(rot_action(Axis::X1, &s(2)), s(3));
    }

    #[test]
    fn first_classical_identity() {
        let lhs = poisson(&(&mono([2, 0, 0]) - &mono([0, 2, 0])), &mono([1, 1, 0]));
        let rhs = poisson(&mono([0, 1, 1]), &mono([1, 0, 1]));
        assert_eq!(&lhs - &rhs, &SpherePoly::s_squared() * &s(3));
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&SpherePoly::zero()), -1);
        assert_eq!(degree(&SpherePoly::s_squared()), 0);
        assert_eq!(degree(&mono([0, 0, 2])), 2);
        assert_eq!(degree(&mono([1, 1, 1])), 3);
        assert_eq!(degree(&(&mono([0, 0, 2]) + &mono([2, 0, 0]) + mono([0, 2, 0]))), 0);
    }
}
