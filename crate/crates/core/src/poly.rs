//! Sparse commutative polynomials over exact coefficient rings.
//!
//! One kernel backs three domain types: polynomials in `S1, S2, S3`
//! (`Poly3`), polynomials in the quantization constants `a, c` (`PolyAC`)
//! and the symbolic scalars of the enveloping-algebra engine.

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};

use crate::exactnum::{join_signed, Coefficient, GaussRational};

/// Commutative ring with exact equality.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_int(n: i64) -> Self;
    /// Complex conjugation, treating every symbol as real.
    fn conj(&self) -> Self;

    fn mul_int(&self, n: i64) -> Self {
        self.mul_ref(&Self::from_int(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Ring for GaussRational {
    fn zero() -> Self {
        GaussRational::zero()
    }
    fn one() -> Self {
        GaussRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussRational::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        GaussRational::from_int(n)
    }
    fn conj(&self) -> Self {
        GaussRational::conj(self)
    }
}

impl Ring for Coefficient {
    fn zero() -> Self {
        Coefficient::zero()
    }
    fn one() -> Self {
        Coefficient::one()
    }
    fn is_zero(&self) -> bool {
        Coefficient::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        Coefficient::from_int(n)
    }
    fn conj(&self) -> Self {
        Coefficient::conj(self)
    }
    fn mul_int(&self, n: i64) -> Self {
        self.scale_int(n)
    }
    fn is_one(&self) -> bool {
        Coefficient::is_one(self)
    }
}

/// Exponent vector of a monomial in `N` commuting variables.
pub type Exponents<const N: usize> = [u32; N];

/// Sparse polynomial; no zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly<C, const N: usize> {
    terms: BTreeMap<Exponents<N>, C>,
}

impl<C: Ring, const N: usize> Default for SparsePoly<C, N> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<C: Ring, const N: usize> SparsePoly<C, N> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial([0; N], c)
    }

    pub fn monomial(exps: Exponents<N>, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { terms }
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Self::monomial(e, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents<N>, C)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents<N>, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exponents<N>, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, exps: &Exponents<N>) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> C {
        self.coeff(&[0; N])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add_term(&mut self, exps: Exponents<N>, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(slot) => {
                let v = slot.add_ref(c);
                if v.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *slot = v;
                }
            }
            None => {
                self.terms.insert(exps, c.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &c.neg_ref());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb) {
                    *x += y;
                }
                out.add_term(e, &ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|x| x.mul_ref(c))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Applies `f` to each coefficient, dropping zeros.
    pub fn map_coeffs<F: Fn(&C) -> C>(&self, f: F) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter_map(|(e, c)| {
                    let v = f(c);
                    (!v.is_zero()).then_some((*e, v))
                })
                .collect(),
        }
    }

    pub fn conj(&self) -> Self {
        self.map_coeffs(|c| c.conj())
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut d = *e;
                d[i] -= 1;
                out.add_term(d, &c.mul_int(e[i] as i64));
            }
        }
        out
    }

    /// Multiplies by the monomial `exps`.
    pub fn shift(&self, exps: &Exponents<N>) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut d = *e;
                    for (x, y) in d.iter_mut().zip(exps) {
                        *x += y;
                    }
                    (d, c.clone())
                })
                .collect(),
        }
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Evaluates at ring values, one per variable.
    pub fn eval<R: Ring, F: Fn(&C) -> R>(&self, values: &[R; N], lift: F) -> R {
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut term = lift(c);
            for (v, &k) in values.iter().zip(e) {
                for _ in 0..k {
                    term = term.mul_ref(v);
                }
            }
            acc = acc.add_ref(&term);
        }
        acc
    }
}

impl<C: Ring + Display, const N: usize> SparsePoly<C, N> {
    /// Human-readable rendering with the given variable names, highest total
    /// degree first.
    pub fn render(&self, names: &[&str; N]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut entries: Vec<_> = self.terms.iter().collect();
        entries.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then(b.cmp(a))
        });
        join_signed(entries.into_iter().map(|(e, c)| {
            let mono: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, name)| if k == 1 { name.to_string() } else { format!("{name}^{k}") })
                .collect();
            let cs = c.to_string();
            if mono.is_empty() {
                return cs;
            }
            let mono = mono.join("*");
            let needs_parens = cs.contains(" + ") || cs.contains(" - ");
            if needs_parens {
                format!("({cs})*{mono}")
            } else if cs == "1" {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else {
                format!("{cs}*{mono}")
            }
        }))
    }
}

impl<C: Ring, const N: usize> Debug for SparsePoly<C, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<C: Ring, const N: usize> Ring for SparsePoly<C, N> {
    fn zero() -> Self {
        SparsePoly::zero()
    }
    fn one() -> Self {
        SparsePoly::one()
    }
    fn is_zero(&self) -> bool {
        SparsePoly::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn from_int(n: i64) -> Self {
        SparsePoly::constant(C::from_int(n))
    }
    fn conj(&self) -> Self {
        SparsePoly::conj(self)
    }
    fn mul_int(&self, n: i64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        self.map_coeffs(|c| c.mul_int(n))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inherent:ident) => {
        impl<C: Ring, const N: usize> std::ops::$tr<&SparsePoly<C, N>> for &SparsePoly<C, N> {
            type Output = SparsePoly<C, N>;
            fn $method(self, rhs: &SparsePoly<C, N>) -> SparsePoly<C, N> {
                SparsePoly::$inherent(self, rhs)
            }
        }

        impl<C: Ring, const N: usize> std::ops::$tr for SparsePoly<C, N> {
            type Output = SparsePoly<C, N>;
            fn $method(self, rhs: SparsePoly<C, N>) -> SparsePoly<C, N> {
                SparsePoly::$inherent(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl<C: Ring, const N: usize> std::ops::Neg for &SparsePoly<C, N> {
    type Output = SparsePoly<C, N>;
    fn neg(self) -> SparsePoly<C, N> {
        SparsePoly::neg(self)
    }
}

impl<C: Ring, const N: usize> std::ops::Neg for SparsePoly<C, N> {
    type Output = SparsePoly<C, N>;
    fn neg(self) -> SparsePoly<C, N> {
        SparsePoly::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    type P2 = SparsePoly<Coefficient, 2>;

    #[test]
    fn binomial_square() {
        let x = P2::var(0);
        let y = P2::var(1);
        let sq = x.add(&y).pow(2);
        let expect = P2::from_terms([
            ([2, 0], Coefficient::one()),
            ([1, 1], Coefficient::from_int(2)),
            ([0, 2], Coefficient::one()),
        ]);
        assert_eq!(sq, expect);
    }

    #[test]
    fn derivative_and_cancellation() {
        let x = P2::var(0);
        let p = x.pow(3).scale(&Coefficient::from_rational(rat(1, 3)));
        assert_eq!(p.derivative(0), x.pow(2));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn render_uses_names() {
        let p = P2::var(0).pow(2).sub(&P2::var(1).scale(&Coefficient::sqrt_int(2)));
        assert_eq!(p.render(&["a", "c"]), "a^2 - sqrt(2)*c");
    }
}
