//! Spin-j representations and the parameterized quantization rules for
//! polynomials of degree at most three.
//!
//! Matrix entries are polynomials in the two quantization constants `a`, `c`
//! with surd coefficients; `s` lives inside the coefficients.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::{rat, Coefficient, Rational};
use crate::matrix::Matrix;
use crate::poly::{Ring, SparsePoly};
use crate::sphere_poly::{canonicalize, epsilon, poisson, poisson_raw, Poly3, SpherePoly};

/// Polynomial in the symbols `a` (index 0) and `c` (index 1).
pub type PolyAC = SparsePoly<Coefficient, 2>;

pub type SpinMatrix = Matrix<PolyAC>;

pub const AC_NAMES: [&str; 2] = ["a", "c"];

pub fn sym_a() -> PolyAC {
    PolyAC::var(0)
}

pub fn sym_c() -> PolyAC {
    PolyAC::var(1)
}

pub fn ac_const(c: Coefficient) -> PolyAC {
    PolyAC::constant(c)
}

pub fn ac_rat(q: Rational) -> PolyAC {
    PolyAC::constant(Coefficient::from_rational(q))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpinError {
    #[error("monomial of degree {0} has no quantization rule (degree <= 3 only)")]
    DegreeTooHigh(u32),
    #[error("representatives are not equal on the sphere")]
    NotEquivalent,
    #[error("classical identity fails; residual {0}")]
    ClassicalIdentityFails(String),
    #[error("projector forms need a multi-index of length 2 or 3, got {0}")]
    ProjectorArity(u32),
    #[error("projection 2m = {two_m} out of range for 2j = {two_j}")]
    BadProjection { two_j: u32, two_m: i64 },
    #[error("invalid spin {0:?}: expected a nonnegative integer or half-integer like 3/2")]
    BadSpin(String),
}

/// Twice the spin quantum number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoJ(pub u32);

impl TwoJ {
    pub fn dim(self) -> usize {
        self.0 as usize + 1
    }

    pub fn j(self) -> Rational {
        rat(self.0 as i64, 2)
    }

    /// `j(j+1)`.
    pub fn kappa(self) -> Rational {
        let t = self.0 as i64;
        rat(t * (t + 2), 4)
    }

    /// All `2j` from 0 to `2·jmax`.
    pub fn up_to(two_jmax: u32) -> impl Iterator<Item = TwoJ> {
        (0..=two_jmax).map(TwoJ)
    }
}

impl fmt::Display for TwoJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for TwoJ {
    type Err = SpinError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SpinError::BadSpin(s.to_string());
        let q: Rational = s.trim().parse().map_err(|_| bad())?;
        let twice = q * rat(2, 1);
        if !twice.is_integer() || twice < Rational::zero() {
            return Err(bad());
        }
        let n: u32 = twice.to_integer().try_into().map_err(|_| bad())?;
        Ok(TwoJ(n))
    }
}

struct SpinSet {
    j: [SpinMatrix; 3],
}

type SpinCache = RwLock<HashMap<TwoJ, Arc<SpinSet>>>;

fn spin_cache() -> &'static SpinCache {
    static CACHE: OnceLock<SpinCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn build_spin(two_j: TwoJ) -> SpinSet {
    let n = two_j.dim();
    let t = two_j.0 as i64;
    // basis index i <-> 2m = 2i - 2j
    let raise = |i: usize| -> Coefficient {
        let tm = 2 * i as i64 - t;
        Coefficient::sqrt_rational(&rat(t * (t + 2) - tm * (tm + 2), 4)).expect("nonnegative")
    };
    let half = Coefficient::from_rational(rat(1, 2));
    let minus_half_i = Coefficient::i().scale(&rat(-1, 2));
    let j1 = Matrix::from_fn(n, |r, c| {
        if r == c + 1 {
            ac_const(&raise(c) * &half)
        } else if c == r + 1 {
            ac_const(&raise(r) * &half)
        } else {
            PolyAC::zero()
        }
    });
    // J2 = (J+ - J-)/(2i)
    let j2 = Matrix::from_fn(n, |r, c| {
        if r == c + 1 {
            ac_const(&raise(c) * &minus_half_i)
        } else if c == r + 1 {
            ac_const(-(&raise(r) * &minus_half_i))
        } else {
            PolyAC::zero()
        }
    });
    let j3 = Matrix::from_fn(n, |r, c| {
        if r == c {
            ac_rat(rat(2 * r as i64 - t, 2))
        } else {
            PolyAC::zero()
        }
    });
    SpinSet { j: [j1, j2, j3] }
}

fn spin_set(two_j: TwoJ) -> Arc<SpinSet> {
    if let Some(s) = spin_cache().read().expect("spin cache poisoned").get(&two_j) {
        return s.clone();
    }
    let set = Arc::new(build_spin(two_j));
    let mut w = spin_cache().write().expect("spin cache poisoned");
    w.entry(two_j).or_insert(set).clone()
}

/// `(J1, J2, J3)` in the basis `|j,−j⟩ … |j,j⟩`.
pub fn spin_matrices(two_j: TwoJ) -> [SpinMatrix; 3] {
    spin_set(two_j).j.clone()
}

/// Product `J_{i1} J_{i2} …` of zero-based generator indices.
pub fn j_word(two_j: TwoJ, word: &[usize]) -> SpinMatrix {
    let set = spin_set(two_j);
    let mut acc = SpinMatrix::identity(two_j.dim());
    for &i in word {
        acc = acc.mul(&set.j[i]);
    }
    acc
}

fn scale_ac(m: &SpinMatrix, c: &PolyAC) -> SpinMatrix {
    m.scale(c)
}

fn third() -> Rational {
    rat(1, 3)
}

/// Quantization of a single monomial with unit coefficient.
pub fn quantize_monomial(e: [u32; 3], two_j: TwoJ) -> Result<SpinMatrix, SpinError> {
    let deg: u32 = e.iter().sum();
    let dim = two_j.dim();
    let a = sym_a();
    let c = sym_c();
    let id = SpinMatrix::identity(dim);
    // indices with multiplicity, in increasing order
    let mut idx = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        for _ in 0..k {
            idx.push(i);
        }
    }
    Ok(match deg {
        0 => id,
        1 => j_word(two_j, &idx),
        2 => {
            let (i, l) = (idx[0], idx[1]);
            if i == l {
                scale_ac(&j_word(two_j, &[i, i]), &a).add(&scale_ac(&id, &c))
            } else {
                let sym = j_word(two_j, &[i, l]).add(&j_word(two_j, &[l, i]));
                scale_ac(&sym, &a.scale(&Coefficient::from_rational(rat(1, 2))))
            }
        }
        3 => {
            let distinct: Vec<usize> = (0..3).filter(|&i| e[i] > 0).collect();
            match distinct.len() {
                1 => {
                    let i = distinct[0];
                    scale_ac(&j_word(two_j, &[i, i, i]), &a).add(&scale_ac(&j_word(two_j, &[i]), &c))
                }
                2 => {
                    let i = if e[distinct[0]] == 2 { distinct[0] } else { distinct[1] };
                    let l = if i == distinct[0] { distinct[1] } else { distinct[0] };
                    let coeff = a.add(&c).scale(&Coefficient::from_rational(third()));
                    scale_ac(&j_word(two_j, &[i, l, i]), &a).add(&scale_ac(&j_word(two_j, &[l]), &coeff))
                }
                _ => {
                    let squares = j_word(two_j, &[0, 0])
                        .sub(&j_word(two_j, &[1, 1]))
                        .add(&j_word(two_j, &[2, 2]));
                    // a/(2i) = -i a / 2
                    let half_over_i = a.scale(&Coefficient::i().scale(&rat(-1, 2)));
                    scale_ac(&j_word(two_j, &[0, 1, 2]), &a).add(&scale_ac(&squares, &half_over_i))
                }
            }
        }
        d => return Err(SpinError::DegreeTooHigh(d)),
    })
}

/// Quantizes a representative of degree at most 3, monomial by monomial.
pub fn quantize_repr(p: &Poly3, two_j: TwoJ) -> Result<SpinMatrix, SpinError> {
    let mut out = SpinMatrix::zero(two_j.dim());
    for (e, coeff) in p.terms() {
        let q = quantize_monomial(*e, two_j)?;
        out = out.add(&q.scale(&ac_const(coeff.clone())));
    }
    Ok(out)
}

/// `quantize_repr(p) − quantize_repr(q)` for two representatives of the
/// same class.
pub fn representative_consistency(p: &Poly3, q: &Poly3, two_j: TwoJ) -> Result<SpinMatrix, SpinError> {
    if canonicalize(p) != canonicalize(q) {
        return Err(SpinError::NotEquivalent);
    }
    Ok(quantize_repr(p, two_j)?.sub(&quantize_repr(q, two_j)?))
}

/// Value of `s²` forced by the quadratic rules: `a j(j+1) + 3c`.
pub fn s2_quadratic(two_j: TwoJ) -> PolyAC {
    sym_a().scale(&Coefficient::from_rational(two_j.kappa())).add(&sym_c().mul_int(3))
}

/// Value of `s²` forced by the cubic rules: `a(j(j+1) − 1/3) + 5c/3`.
pub fn s2_cubic(two_j: TwoJ) -> PolyAC {
    sym_a()
        .scale(&Coefficient::from_rational(two_j.kappa() - third()))
        .add(&sym_c().scale(&Coefficient::from_rational(rat(5, 3))))
}

/// Replaces every even power `s^(2t)` by `s2^t`; `None` if an odd or
/// negative power of `s` occurs.
pub fn substitute_s2(p: &PolyAC, s2: &PolyAC) -> Option<PolyAC> {
    let mut out = PolyAC::zero();
    for (e, c) in p.terms() {
        for (pow, part) in c.split_by_s_pow() {
            if pow < 0 || pow % 2 != 0 {
                return None;
            }
            let term = PolyAC::monomial(*e, part).mul(&s2.pow(pow as u32 / 2));
            out = out.add(&term);
        }
    }
    Some(out)
}

pub fn substitute_s2_matrix(m: &SpinMatrix, s2: &PolyAC) -> Option<SpinMatrix> {
    let mut out = SpinMatrix::zero(m.dim());
    for (i, j, v) in m.entries() {
        out.set(i, j, substitute_s2(v, s2)?);
    }
    Some(out)
}

fn index_of(two_j: TwoJ, two_m: i64) -> Result<usize, SpinError> {
    let t = two_j.0 as i64;
    if two_m.abs() > t || (two_m + t) % 2 != 0 {
        return Err(SpinError::BadProjection { two_j: two_j.0, two_m });
    }
    Ok(((two_m + t) / 2) as usize)
}

/// `⟨j, m1 | M | j, m2⟩`, with projections given doubled.
pub fn matrix_element(m: &SpinMatrix, two_j: TwoJ, two_m1: i64, two_m2: i64) -> Result<PolyAC, SpinError> {
    Ok(m.get(index_of(two_j, two_m1)?, index_of(two_j, two_m2)?).clone())
}

/// A nested bracket expression over representatives.
#[derive(Clone, Debug, PartialEq)]
pub enum BracketExpr {
    Leaf(Poly3),
    Bracket(Box<BracketExpr>, Box<BracketExpr>),
}

impl BracketExpr {
    pub fn leaf(p: Poly3) -> Self {
        BracketExpr::Leaf(p)
    }

    pub fn bracket(f: BracketExpr, g: BracketExpr) -> Self {
        BracketExpr::Bracket(Box::new(f), Box::new(g))
    }

    /// `{f, g}` of two representatives.
    pub fn pb(f: Poly3, g: Poly3) -> Self {
        Self::bracket(Self::leaf(f), Self::leaf(g))
    }

    pub fn classical(&self) -> SpherePoly {
        match self {
            BracketExpr::Leaf(p) => canonicalize(p),
            BracketExpr::Bracket(f, g) => poisson(&f.classical(), &g.classical()),
        }
    }

    /// Brackets quantize to `−i[·,·]`; leaves by the von Neumann rules.
    pub fn quantum(&self, two_j: TwoJ) -> Result<SpinMatrix, SpinError> {
        match self {
            BracketExpr::Leaf(p) => quantize_repr(p, two_j),
            BracketExpr::Bracket(f, g) => {
                let comm = f.quantum(two_j)?.commutator(&g.quantum(two_j)?);
                Ok(comm.scale(&ac_const(Coefficient::i().scale_int(-1))))
            }
        }
    }
}

/// `Σ coeff · term = rhs` as an identity in the Poisson algebra.
#[derive(Clone, Debug)]
pub struct BracketIdentity {
    pub terms: Vec<(Coefficient, BracketExpr)>,
    pub rhs: Poly3,
}

impl BracketIdentity {
    /// `Σ coeff · term − rhs` on the sphere.
    pub fn classical_residual(&self) -> SpherePoly {
        let lhs = self
            .terms
            .iter()
            .fold(SpherePoly::zero(), |acc, (c, t)| &acc + &t.classical().scale(c));
        &lhs - &canonicalize(&self.rhs)
    }
}

/// Checks the classical identity exactly, then returns the quantum residual
/// `Σ coeff · Q(term) − Q(rhs)`.
pub fn verify_bracket_identity(id: &BracketIdentity, two_j: TwoJ) -> Result<SpinMatrix, SpinError> {
    let classical = id.classical_residual();
    if !classical.is_zero() {
        return Err(SpinError::ClassicalIdentityFails(classical.to_string()));
    }
    let mut out = quantize_repr(&id.rhs, two_j)?.neg();
    for (c, t) in &id.terms {
        out = out.add(&t.quantum(two_j)?.scale(&ac_const(c.clone())));
    }
    Ok(out)
}

/// Quadratic or cubic projector reconstruction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VnKind {
    Quadratic,
    Cubic,
}

fn delta(i: usize, j: usize) -> Rational {
    if i == j {
        Rational::one()
    } else {
        Rational::zero()
    }
}

fn permutations3(t: [usize; 3]) -> [[usize; 3]; 6] {
    let [i, k, l] = t;
    [[i, k, l], [i, l, k], [k, i, l], [k, l, i], [l, i, k], [l, k, i]]
}

/// `P₂(1_i+1_ℓ, 1_p+1_q)`.
pub fn proj2(i: usize, l: usize, p: usize, q: usize) -> Rational {
    (delta(i, p) * delta(l, q) + delta(i, q) * delta(l, p)) * rat(1, 2) - delta(i, l) * delta(p, q) * third()
}

/// `P₀(1_i+1_ℓ, 0)`.
pub fn proj0(i: usize, l: usize) -> Rational {
    delta(i, l) * third()
}

/// `P₃(1_i+1_k+1_ℓ, 1_p+1_q+1_r)`.
pub fn proj3(m: [usize; 3], n: [usize; 3]) -> Rational {
    let [p, q, r] = n;
    let mut first = Rational::zero();
    let mut second = Rational::zero();
    for [i, k, l] in permutations3(m) {
        first += delta(i, p) * delta(k, q) * delta(l, r);
        second += delta(i, k)
            * (delta(p, q) * delta(l, r) + delta(p, r) * delta(l, q) + delta(q, r) * delta(l, p));
    }
    first * rat(1, 6) - second * rat(1, 30)
}

/// `P₁(1_i+1_k+1_ℓ, 1_p)`.
pub fn proj1(m: [usize; 3], p: usize) -> Rational {
    let [i, k, l] = m;
    (delta(i, k) * delta(l, p) + delta(k, l) * delta(i, p) + delta(l, i) * delta(k, p)) * rat(1, 15)
}

/// Fully symmetrized product of generators.
fn sym_word(two_j: TwoJ, word: &[usize]) -> SpinMatrix {
    let mut out = SpinMatrix::zero(two_j.dim());
    let perms: Vec<Vec<usize>> = match word.len() {
        2 => vec![vec![word[0], word[1]], vec![word[1], word[0]]],
        3 => permutations3([word[0], word[1], word[2]]).iter().map(|p| p.to_vec()).collect(),
        _ => vec![word.to_vec()],
    };
    let w = Coefficient::from_rational(rat(1, perms.len() as i64));
    for p in &perms {
        out = out.add(&j_word(two_j, p));
    }
    out.scale(&ac_const(w))
}

/// Evaluates the projector reconstruction of `Q(S^m)` for a multi-index of
/// length 2 or 3, with `b` eliminated in favour of `c`.
pub fn projector_vn_forms(kind: VnKind, m: [u32; 3], two_j: TwoJ) -> Result<SpinMatrix, SpinError> {
    let len: u32 = m.iter().sum();
    let mut idx = Vec::new();
    for (i, &k) in m.iter().enumerate() {
        for _ in 0..k {
            idx.push(i);
        }
    }
    let kappa = two_j.kappa();
    let a = sym_a();
    let mut out = SpinMatrix::zero(two_j.dim());
    match (kind, len) {
        (VnKind::Quadratic, 2) => {
            let b = a.scale(&Coefficient::from_rational(kappa)).add(&sym_c().mul_int(3));
            for p in 0..3 {
                for q in 0..3 {
                    let w = proj2(idx[0], idx[1], p, q);
                    if !w.is_zero() {
                        out = out.add(&sym_word(two_j, &[p, q]).scale(&a.scale(&Coefficient::from_rational(w))));
                    }
                }
            }
            let w0 = proj0(idx[0], idx[1]);
            out = out.add(&SpinMatrix::identity(two_j.dim()).scale(&b.scale(&Coefficient::from_rational(w0))));
        }
        (VnKind::Cubic, 3) => {
            let b = a
                .scale(&Coefficient::from_rational((kappa - third()) * rat(3, 1)))
                .add(&sym_c().mul_int(5));
            let mi = [idx[0], idx[1], idx[2]];
            for p in 0..3 {
                for q in 0..3 {
                    for r in 0..3 {
                        let w = proj3(mi, [p, q, r]);
                        if !w.is_zero() {
                            out = out.add(&sym_word(two_j, &[p, q, r]).scale(&a.scale(&Coefficient::from_rational(w))));
                        }
                    }
                }
            }
            for p in 0..3 {
                let w = proj1(mi, p);
                if !w.is_zero() {
                    out = out.add(&j_word(two_j, &[p]).scale(&b.scale(&Coefficient::from_rational(w))));
                }
            }
        }
        (_, other) => return Err(SpinError::ProjectorArity(other)),
    }
    Ok(out)
}

fn unit_exps(i: usize, k: u32) -> [u32; 3] {
    let mut e = [0; 3];
    e[i] = k;
    e
}

fn third_index(i: usize, l: usize) -> usize {
    3 - i - l
}

/// `Q(S_ℓ S_i)` obtained from the square rule alone by equivariance:
/// `{S_k, S_ℓ²} = 2ε_kℓi S_ℓ S_i`, so `Q(S_ℓ S_i) = −i[J_k, Q(S_ℓ²)] / (2ε_kℓi)`.
pub fn derive_pr_from_ii(l: usize, i: usize, two_j: TwoJ) -> Result<SpinMatrix, SpinError> {
    let k = third_index(i, l);
    let eps = epsilon(k, l, i);
    let q_sq = quantize_monomial(unit_exps(l, 2), two_j)?;
    let jk = j_word(two_j, &[k]);
    let factor = Coefficient::i().scale(&rat(-1, 2 * eps));
    Ok(jk.commutator(&q_sq).scale(&ac_const(factor)))
}

/// `Q(S_i² S_m)` from the cube rule: `{S_k, S_i³} = 3ε_kim S_i² S_m`.
pub fn derive_iji_from_vn3(i: usize, m: usize, two_j: TwoJ) -> Result<SpinMatrix, SpinError> {
    let k = third_index(i, m);
    let eps = epsilon(k, i, m);
    let q_cube = quantize_monomial(unit_exps(i, 3), two_j)?;
    let jk = j_word(two_j, &[k]);
    let factor = Coefficient::i().scale(&rat(-1, 3 * eps));
    Ok(jk.commutator(&q_cube).scale(&ac_const(factor)))
}

/// `Q(S1 S2 S3)` from the derived `Q(S1² S3)`: `{S3, S1² S3} = 2 S1 S2 S3`.
pub fn derive_123_from_vn3(two_j: TwoJ) -> Result<SpinMatrix, SpinError> {
    let q = derive_iji_from_vn3(0, 2, two_j)?;
    let j3 = j_word(two_j, &[2]);
    Ok(j3.commutator(&q).scale(&ac_const(Coefficient::i().scale(&rat(-1, 2)))))
}

/// Checks `Q({S_i, p}) = −i[J_i, Q(p)]` for a monomial `p` and each axis,
/// with the bracket taken on the representative.
pub fn equivariance_holds(e: [u32; 3], two_j: TwoJ) -> Result<bool, SpinError> {
    let p = Poly3::monomial(e, Coefficient::one());
    let qp = quantize_repr(&p, two_j)?;
    let minus_i = ac_const(Coefficient::i().scale_int(-1));
    for i in 0..3 {
        let lhs = quantize_repr(&poisson_raw(&Poly3::var(i), &p), two_j)?;
        let rhs = j_word(two_j, &[i]).commutator(&qp).scale(&minus_i);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every exponent triple of total degree at most `d`.
pub fn monomials_up_to(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for n in 0..=d {
        for a in 0..=n {
            for b in 0..=(n - a) {
                out.push([a, b, n - a - b]);
            }
        }
    }
    out
}

/// `ΣQ(S_i)Q(S_ℓ)Q(S_i)` for axis `ℓ`.
pub fn sandwich_sum(l: usize, two_j: TwoJ) -> SpinMatrix {
    (0..3).fold(SpinMatrix::zero(two_j.dim()), |acc, i| acc.add(&j_word(two_j, &[i, l, i])))
}

/// Renders a PolyAC with `a`, `c` names.
pub fn render_ac(p: &PolyAC) -> String {
    p.render(&AC_NAMES)
}

/// Integer-valued helper for tests and drivers: `n` as a PolyAC constant.
pub fn ac_int(n: i64) -> PolyAC {
    ac_rat(Rational::from_integer(BigInt::from(n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(two_j: TwoJ) -> SpinMatrix {
        SpinMatrix::identity(two_j.dim())
    }

    #[test]
    fn spin_half() {
        let [_, _, j3] = spin_matrices(TwoJ(1));
        assert_eq!(*j3.get(0, 0), ac_rat(rat(-1, 2)));
        assert_eq!(*j3.get(1, 1), ac_rat(rat(1, 2)));
    }

    #[test]
    fn commutation_and_casimir() {
        let i = ac_const(Coefficient::i());
        for two_j in TwoJ::up_to(12) {
            let [j1, j2, j3] = spin_matrices(two_j);
            assert_eq!(j1.commutator(&j2), j3.scale(&i));
            assert_eq!(j2.commutator(&j3), j1.scale(&i));
            assert_eq!(j3.commutator(&j1), j2.scale(&i));
            let cas = j1.mul(&j1).add(&j2.mul(&j2)).add(&j3.mul(&j3));
            assert_eq!(cas, id(two_j).scale(&ac_rat(two_j.kappa())));
            for m in [&j1, &j2, &j3] {
                assert!(m.is_self_adjoint());
            }
        }
    }

    #[test]
    fn parse_spin() {
        assert_eq!("3/2".parse::<TwoJ>().unwrap(), TwoJ(3));
        assert_eq!("2".parse::<TwoJ>().unwrap(), TwoJ(4));
        assert!("1/3".parse::<TwoJ>().is_err());
        assert!("-1".parse::<TwoJ>().is_err());
        assert_eq!(TwoJ(5).to_string(), "5/2");
    }

    #[test]
    fn casimir_rule_fixes_c() {
        for two_j in TwoJ::up_to(6) {
            let p = Poly3::from_terms([([2, 0, 0], Coefficient::one()), ([0, 2, 0], Coefficient::one()), ([0, 0, 2], Coefficient::one())]);
            let q = Poly3::constant(Coefficient::s_pow(2));
            let r = representative_consistency(&p, &q, two_j).unwrap();
            let expect = s2_quadratic(two_j).sub(&ac_const(Coefficient::s_pow(2)));
            assert_eq!(r, id(two_j).scale(&expect));
            assert!(substitute_s2_matrix(&r, &s2_quadratic(two_j)).unwrap().is_zero());
        }
    }

    #[test]
    fn cubic_representatives_need_js() {
        for two_j in TwoJ::up_to(6).skip(1) {
            let p = Poly3::from_terms([([2, 0, 1], Coefficient::one()), ([0, 2, 1], Coefficient::one()), ([0, 0, 3], Coefficient::one())]);
            let q = Poly3::monomial([0, 0, 1], Coefficient::s_pow(2));
            let r = representative_consistency(&p, &q, two_j).unwrap();
            assert!(!r.is_zero());
            assert!(substitute_s2_matrix(&r, &s2_cubic(two_j)).unwrap().is_zero());
        }
        let p = Poly3::var(0);
        assert!(representative_consistency(&p, &p, TwoJ(2)).unwrap().is_zero());
        assert_eq!(
            representative_consistency(&p, &Poly3::var(1), TwoJ(2)),
            Err(SpinError::NotEquivalent)
        );
    }

    #[test]
    fn degree_four_rejected() {
        assert_eq!(quantize_monomial([4, 0, 0], TwoJ(1)), Err(SpinError::DegreeTooHigh(4)));
    }

    #[test]
    fn sandwich_identity() {
        for two_j in TwoJ::up_to(12) {
            for l in 0..3 {
                let expect = j_word(two_j, &[l]).scale(&ac_rat(two_j.kappa() - Rational::one()));
                assert_eq!(sandwich_sum(l, two_j), expect);
            }
        }
    }

    #[test]
    fn matrix_elements() {
        for two_j in 1..=12u32 {
            let tj = TwoJ(two_j);
            let t = two_j as i64;
            let j3 = j_word(tj, &[2]);
            assert_eq!(matrix_element(&j3, tj, t, t).unwrap(), ac_rat(tj.j()));
            let m = j_word(tj, &[1, 2]).scale(&ac_int(2)).sub(&j_word(tj, &[0]).scale(&ac_const(Coefficient::i())));
            let expect = Coefficient::i().scale(&(rat(1, 2) - tj.j())) * Coefficient::sqrt_int(two_j as u64);
            assert_eq!(matrix_element(&m, tj, t, t - 2).unwrap(), ac_const(expect));
        }
        assert!(matrix_element(&id(TwoJ(2)), TwoJ(2), 1, 0).is_err());
    }

    #[test]
    fn projector_weights() {
        for i in 0..3 {
            for l in 0..3 {
                assert_eq!(proj0(i, l), delta(i, l) * third());
            }
        }
    }

    #[test]
    fn projectors_reproduce_rules() {
        for two_j in TwoJ::up_to(6) {
            for e in monomials_up_to(3) {
                let deg: u32 = e.iter().sum();
                let kind = match deg {
                    2 => VnKind::Quadratic,
                    3 => VnKind::Cubic,
                    _ => continue,
                };
                assert_eq!(
                    projector_vn_forms(kind, e, two_j).unwrap(),
                    quantize_monomial(e, two_j).unwrap(),
                    "{e:?} 2j={}",
                    two_j.0
                );
            }
        }
        assert!(projector_vn_forms(VnKind::Quadratic, [1, 0, 0], TwoJ(1)).is_err());
    }

    #[test]
    fn equivariance_small_j() {
        for two_j in TwoJ::up_to(4) {
            for e in monomials_up_to(3) {
                assert!(equivariance_holds(e, two_j).unwrap(), "{e:?}");
            }
        }
    }

    #[test]
    fn derived_rules() {
        for two_j in TwoJ::up_to(6) {
            for i in 0..3 {
                for l in 0..3 {
                    if i == l {
                        continue;
                    }
                    let mut e = [0; 3];
                    e[i] += 1;
                    e[l] += 1;
                    assert_eq!(derive_pr_from_ii(l, i, two_j).unwrap(), quantize_monomial(e, two_j).unwrap());
                    let mut e = [0; 3];
                    e[i] = 2;
                    e[l] = 1;
                    assert_eq!(derive_iji_from_vn3(i, l, two_j).unwrap(), quantize_monomial(e, two_j).unwrap());
                }
            }
            assert_eq!(derive_123_from_vn3(two_j).unwrap(), quantize_monomial([1, 1, 1], two_j).unwrap());
        }
    }
}
