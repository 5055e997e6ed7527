//! Normal ordering in the enveloping algebra of su(2) modulo the Casimir
//! relation `X1² + X2² + X3² = κ`, with scalars polynomial in `a, c, κ, σ`.
//!
//! Words are rewritten with `X_b X_a → X_a X_b + i ε_bak X_k` (`b > a`) and,
//! when Casimir reduction is on, `X3 X3 → κ − X1 X1 − X2 X2`. Normal forms
//! are `X1^α X2^β X3^γ` (with `γ ≤ 1` after Casimir reduction).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactnum::{Coefficient, GaussRational, Rational};
use crate::poly::{Ring, SparsePoly};
use crate::sphere_poly::{epsilon, Poly3};
use crate::spinrep::{j_word, BracketExpr, BracketIdentity, PolyAC, SpinMatrix, TwoJ};

/// Polynomial in `a, c, κ, σ` over Q(i); `κ` stands for `j(j+1)` and `σ`
/// for `s²`.
pub type SymScalar = SparsePoly<GaussRational, 4>;

pub const SYM_NAMES: [&str; 4] = ["a", "c", "kappa", "sigma"];
pub const GEN_NAMES: [&str; 3] = ["X1", "X2", "X3"];

pub const A: usize = 0;
pub const C: usize = 1;
pub const KAPPA: usize = 2;
pub const SIGMA: usize = 3;

pub fn sym(i: usize) -> SymScalar {
    SymScalar::var(i)
}

pub fn sym_rat(q: Rational) -> SymScalar {
    SymScalar::constant(GaussRational::real(q))
}

pub fn sym_gauss(g: GaussRational) -> SymScalar {
    SymScalar::constant(g)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PbwError {
    #[error("coefficient {0} is not a polynomial in s² over Q(i)")]
    NonSymbolic(String),
    #[error("monomial of degree {0} has no quantization rule (degree <= 3 only)")]
    DegreeTooHigh(u32),
    #[error("input is not fully reduced")]
    NotReduced,
    #[error("classical identity fails; residual {0}")]
    ClassicalIdentityFails(String),
}

/// A word in the generators, as zero-based indices.
pub type Word = Vec<u8>;

/// Noncommutative polynomial: words with scalar coefficients.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct NcPoly {
    terms: BTreeMap<Word, SymScalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Vec::new(), SymScalar::one())
    }

    pub fn gen(i: usize) -> Self {
        Self::word(vec![i as u8], SymScalar::one())
    }

    pub fn scalar(c: SymScalar) -> Self {
        Self::word(Vec::new(), c)
    }

    pub fn word(w: Word, c: SymScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(w, &c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &SymScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: &SymScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot = slot.add(c);
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&SymScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &SymScalar) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), &v.mul(c));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.add_term(w, &ca.mul(cb));
            }
        }
        out
    }

    /// `−i[f, g]`.
    pub fn quantum_bracket(&self, rhs: &Self) -> Self {
        self.mul(rhs)
            .sub(&rhs.mul(self))
            .scale(&sym_gauss(GaussRational::i().scale(&Rational::from_integer((-1).into()))))
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }
}

/// Element in normal-ordered form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PbwPoly {
    terms: BTreeMap<[u32; 3], SymScalar>,
}

impl PbwPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(e: [u32; 3], c: SymScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(e, &c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &SymScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32; 3]) -> SymScalar {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// No monomial has `X3^γ` with `γ ≥ 2`.
    pub fn is_casimir_reduced(&self) -> bool {
        self.terms.keys().all(|e| e[2] <= 1)
    }

    fn add_term(&mut self, e: [u32; 3], c: &SymScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot = slot.add(c);
        if slot.is_zero() {
            self.terms.remove(&e);
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
            out.add_term(*e, &c.neg());
        }
        out
    }

    pub fn scale(&self, c: &SymScalar) -> Self {
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            out.add_term(*e, &v.mul(c));
        }
        out
    }

    /// The same element as a word polynomial.
    pub fn to_nc(&self) -> NcPoly {
        let mut out = NcPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(exps_to_word(e), c);
        }
        out
    }

    /// Maps each scalar coefficient.
    pub fn map_scalars<F: Fn(&SymScalar) -> SymScalar>(&self, f: F) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, &f(c));
        }
        out
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .zip(GEN_NAMES)
                    .filter(|(&k, _)| k > 0)
                    .map(|(&k, n)| if k == 1 { n.to_string() } else { format!("{n}^{k}") })
                    .collect();
                let cs = c.render(&SYM_NAMES);
                if mono.is_empty() {
                    format!("({cs})")
                } else {
                    format!("({cs})*{}", mono.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for PbwPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn exps_to_word(e: &[u32; 3]) -> Word {
    let mut w = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        for _ in 0..k {
            w.push(i as u8);
        }
    }
    w
}

fn word_to_exps(w: &[u8]) -> [u32; 3] {
    let mut e = [0; 3];
    for &g in w {
        e[g as usize] += 1;
    }
    e
}

/// Which rules are active.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rules {
    pub casimir: bool,
}

fn redexes(w: &[u8], rules: Rules) -> Vec<usize> {
    (0..w.len().saturating_sub(1))
        .filter(|&p| w[p] > w[p + 1] || (rules.casimir && w[p] == 2 && w[p + 1] == 2))
        .collect()
}

fn first_redex(w: &[u8], rules: Rules) -> Option<usize> {
    (0..w.len().saturating_sub(1))
        .find(|&p| w[p] > w[p + 1] || (rules.casimir && w[p] == 2 && w[p + 1] == 2))
}

/// One rewrite step at position `p`.
fn rewrite_at(w: &[u8], p: usize) -> Vec<(Word, SymScalar)> {
    let (b, a) = (w[p], w[p + 1]);
    let splice = |mid: &[u8]| -> Word {
        let mut out = w[..p].to_vec();
        out.extend_from_slice(mid);
        out.extend_from_slice(&w[p + 2..]);
        out
    };
    if b == 2 && a == 2 {
        let minus_one = SymScalar::from_int(-1);
        return vec![
            (splice(&[]), sym(KAPPA)),
            (splice(&[0, 0]), minus_one.clone()),
            (splice(&[1, 1]), minus_one),
        ];
    }
    let k = 3 - a - b;
    let eps = epsilon(b as usize, a as usize, k as usize);
    let corr = GaussRational::i().scale(&Rational::from_integer(eps.into()));
    vec![(splice(&[a, b]), SymScalar::one()), (splice(&[k]), sym_gauss(corr))]
}

type WordCache = RwLock<HashMap<(Word, bool), Arc<PbwPoly>>>;

fn word_cache() -> &'static WordCache {
    static CACHE: OnceLock<WordCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Normal form of a single word with the leftmost-first strategy, memoized.
fn reduce_word(w: &[u8], rules: Rules) -> Arc<PbwPoly> {
    let key = (w.to_vec(), rules.casimir);
    if let Some(hit) = word_cache().read().expect("word cache poisoned").get(&key) {
        return hit.clone();
    }
    let result = match first_redex(w, rules) {
        None => PbwPoly::monomial(word_to_exps(w), SymScalar::one()),
        Some(p) => {
            let mut acc = PbwPoly::zero();
            for (nw, c) in rewrite_at(w, p) {
                acc = acc.add(&reduce_word(&nw, rules).scale(&c));
            }
            acc
        }
    };
    let result = Arc::new(result);
    word_cache()
        .write()
        .expect("word cache poisoned")
        .entry(key)
        .or_insert(result)
        .clone()
}

fn reduce_default(p: &NcPoly, rules: Rules) -> PbwPoly {
    let mut acc = PbwPoly::zero();
    for (w, c) in p.terms() {
        acc = acc.add(&reduce_word(w, rules).scale(c));
    }
    acc
}

/// Redex selection for the order-independence checks.
pub enum Strategy {
    /// Leftmost redex first, with memoized word normal forms.
    Leftmost,
    /// Rightmost redex first, no memoization.
    Rightmost,
    /// Uniformly random redex among all words and positions.
    Random(Box<ChaCha8Rng>),
}

impl Strategy {
    pub fn random(seed: u64) -> Self {
        Strategy::Random(Box::new(ChaCha8Rng::seed_from_u64(seed)))
    }
}

fn reduce_with(p: &NcPoly, rules: Rules, strategy: &mut Strategy) -> PbwPoly {
    if matches!(strategy, Strategy::Leftmost) {
        return reduce_default(p, rules);
    }
    let mut pending = p.clone();
    let mut done = PbwPoly::zero();
    loop {
        let (normal, open): (Vec<_>, Vec<_>) = pending
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c.clone()))
            .partition(|(w, _)| redexes(w, rules).is_empty());
        for (w, c) in normal {
            done.add_term(word_to_exps(&w), &c);
        }
        if open.is_empty() {
            return done;
        }
        let (pick_word, pick_pos) = match strategy {
            Strategy::Rightmost => {
                let (w, _) = &open[0];
                (0, *redexes(w, rules).last().expect("open word has a redex"))
            }
            Strategy::Random(rng) => {
                let i = rng.gen_range(0..open.len());
                let rs = redexes(&open[i].0, rules);
                (i, rs[rng.gen_range(0..rs.len())])
            }
            Strategy::Leftmost => unreachable!(),
        };
        let mut next = NcPoly::zero();
        for (i, (w, c)) in open.iter().enumerate() {
            if i == pick_word {
                for (nw, k) in rewrite_at(w, pick_pos) {
                    next.add_term(nw, &c.mul(&k));
                }
            } else {
                next.add_term(w.clone(), c);
            }
        }
        pending = next;
    }
}

/// PBW normal form using only the commutation relations.
pub fn normal_order(p: &NcPoly) -> PbwPoly {
    reduce_default(p, Rules { casimir: false })
}

/// Applies the Casimir relation to a normal-ordered element until every
/// `X3` exponent is at most 1.
pub fn casimir_reduce(p: &PbwPoly) -> PbwPoly {
    reduce_default(&p.to_nc(), Rules { casimir: true })
}

/// Full reduction (commutators and Casimir) with an explicit strategy.
pub fn reduce_with_strategy(p: &NcPoly, strategy: &mut Strategy) -> PbwPoly {
    reduce_with(p, Rules { casimir: true }, strategy)
}

/// Full reduction with the default strategy.
pub fn reduce(p: &NcPoly) -> PbwPoly {
    reduce_default(p, Rules { casimir: true })
}

/// The Casimir element `X1² + X2² + X3²` as a word polynomial.
pub fn casimir() -> NcPoly {
    (0..3).fold(NcPoly::zero(), |acc, i| acc.add(&NcPoly::gen(i).mul(&NcPoly::gen(i))))
}

/// Converts a coefficient `Σ q_t s^(2t)` over Q(i) into a polynomial in `σ`.
pub fn coefficient_to_sym(c: &Coefficient) -> Result<SymScalar, PbwError> {
    let bad = || PbwError::NonSymbolic(c.to_string());
    let mut out = SymScalar::zero();
    for (pow, part) in c.split_by_s_pow() {
        if pow < 0 || pow % 2 != 0 {
            return Err(bad());
        }
        let g = part.as_gauss().ok_or_else(bad)?;
        out = out.add(&SymScalar::monomial([0, 0, 0, pow as u32 / 2], g));
    }
    Ok(out)
}

fn word_of(idx: &[usize]) -> NcPoly {
    NcPoly::word(idx.iter().map(|&i| i as u8).collect(), SymScalar::one())
}

/// The von Neumann rules with `X_i` in place of `Q(S_i)`.
pub fn quantize_monomial_symbolic(e: [u32; 3]) -> Result<NcPoly, PbwError> {
    let deg: u32 = e.iter().sum();
    let a = sym(A);
    let c = sym(C);
    let mut idx = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        for _ in 0..k {
            idx.push(i);
        }
    }
    let third = Rational::new(1.into(), 3.into());
    Ok(match deg {
        0 => NcPoly::one(),
        1 => word_of(&idx),
        2 => {
            let (i, l) = (idx[0], idx[1]);
            if i == l {
                word_of(&[i, i]).scale(&a).add(&NcPoly::scalar(c))
            } else {
                let half = sym_rat(Rational::new(1.into(), 2.into()));
                word_of(&[i, l]).add(&word_of(&[l, i])).scale(&a.mul(&half))
            }
        }
        3 => {
            let distinct: Vec<usize> = (0..3).filter(|&i| e[i] > 0).collect();
            match distinct.len() {
                1 => {
                    let i = distinct[0];
                    word_of(&[i, i, i]).scale(&a).add(&word_of(&[i]).scale(&c))
                }
                2 => {
                    let i = if e[distinct[0]] == 2 { distinct[0] } else { distinct[1] };
                    let l = if i == distinct[0] { distinct[1] } else { distinct[0] };
                    let k = a.add(&c).mul(&sym_rat(third));
                    word_of(&[i, l, i]).scale(&a).add(&word_of(&[l]).scale(&k))
                }
                _ => {
                    let squares = word_of(&[0, 0]).sub(&word_of(&[1, 1])).add(&word_of(&[2, 2]));
                    let half_over_i = a.mul(&sym_gauss(GaussRational::new(
                        Rational::from_integer(0.into()),
                        Rational::new((-1).into(), 2.into()),
                    )));
                    word_of(&[0, 1, 2]).scale(&a).add(&squares.scale(&half_over_i))
                }
            }
        }
        d => return Err(PbwError::DegreeTooHigh(d)),
    })
}

pub fn quantize_symbolic(p: &Poly3) -> Result<NcPoly, PbwError> {
    let mut out = NcPoly::zero();
    for (e, c) in p.terms() {
        out = out.add(&quantize_monomial_symbolic(*e)?.scale(&coefficient_to_sym(c)?));
    }
    Ok(out)
}

fn quantum_symbolic(t: &BracketExpr) -> Result<NcPoly, PbwError> {
    match t {
        BracketExpr::Leaf(p) => quantize_symbolic(p),
        BracketExpr::Bracket(f, g) => Ok(quantum_symbolic(f)?.quantum_bracket(&quantum_symbolic(g)?)),
    }
}

/// Quantum residual `Σ coeff · Q(term) − Q(rhs)` with `j` symbolic, fully
/// reduced.
pub fn verify_symbolic(id: &BracketIdentity) -> Result<PbwPoly, PbwError> {
    let classical = id.classical_residual();
    if !classical.is_zero() {
        return Err(PbwError::ClassicalIdentityFails(classical.to_string()));
    }
    let mut total = quantize_symbolic(&id.rhs)?.scale(&SymScalar::from_int(-1));
    for (c, t) in &id.terms {
        total = total.add(&quantum_symbolic(t)?.scale(&coefficient_to_sym(c)?));
    }
    Ok(reduce(&total))
}

/// Substitutes `κ = j(j+1)`, `σ = s²` and keeps `a, c` symbolic.
pub fn scalar_at(c: &SymScalar, two_j: TwoJ) -> PolyAC {
    let kappa = Coefficient::from_rational(two_j.kappa());
    let s2 = Coefficient::s_pow(2);
    let mut out = PolyAC::zero();
    for (e, g) in c.terms() {
        let v = &(&Coefficient::from_gauss(g.clone()) * &kappa.pow(e[KAPPA])) * &s2.pow(e[SIGMA]);
        out.add_term([e[A], e[C]], &v);
    }
    out
}

/// Evaluates a word polynomial in the spin-`j` representation.
pub fn eval_nc(p: &NcPoly, two_j: TwoJ) -> SpinMatrix {
    let mut out = SpinMatrix::zero(two_j.dim());
    for (w, c) in p.terms() {
        let idx: Vec<usize> = w.iter().map(|&g| g as usize).collect();
        out = out.add(&j_word(two_j, &idx).scale(&scalar_at(c, two_j)));
    }
    out
}

/// Evaluates a normal-ordered element in the spin-`j` representation.
pub fn eval_at(p: &PbwPoly, two_j: TwoJ) -> SpinMatrix {
    eval_nc(&p.to_nc(), two_j)
}

/// Rejects input that still has `X3²` factors.
pub fn require_reduced(p: &PbwPoly) -> Result<(), PbwError> {
    if p.is_casimir_reduced() {
        Ok(())
    } else {
        Err(PbwError::NotReduced)
    }
}

/// Random word polynomial of degree at most `max_deg` with small Gaussian
/// integer coefficients.
pub fn random_nc(rng: &mut ChaCha8Rng, max_deg: usize, max_terms: usize) -> NcPoly {
    let mut out = NcPoly::zero();
    let n = rng.gen_range(1..=max_terms);
    for _ in 0..n {
        let len = rng.gen_range(0..=max_deg);
        let w: Word = (0..len).map(|_| rng.gen_range(0..3u8)).collect();
        let re: i64 = rng.gen_range(-3..=3);
        let im: i64 = rng.gen_range(-2..=2);
        let g = GaussRational::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()));
        let mut c = sym_gauss(g);
        if rng.gen_bool(0.3) {
            c = c.mul(&sym(rng.gen_range(0..2)));
        }
        out.add_term(w, &c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> NcPoly {
        NcPoly::gen(i)
    }

    fn i_unit() -> SymScalar {
        sym_gauss(GaussRational::i())
    }

    #[test]
    fn single_commutator() {
        let p = normal_order(&x(1).mul(&x(0)));
        let expect = PbwPoly::monomial([1, 1, 0], SymScalar::one())
            .sub(&PbwPoly::monomial([0, 0, 1], i_unit()));
        assert_eq!(p, expect);
        assert_eq!(normal_order(&x(0).mul(&x(1))), PbwPoly::monomial([1, 1, 0], SymScalar::one()));
    }

    #[test]
    fn three_generators_reversed() {
        let p = x(2).mul(&x(1)).mul(&x(0));
        let n = normal_order(&p);
        let expect = PbwPoly::monomial([1, 1, 1], SymScalar::one())
            .sub(&PbwPoly::monomial([2, 0, 0], i_unit()))
            .add(&PbwPoly::monomial([0, 2, 0], i_unit()))
            .sub(&PbwPoly::monomial([0, 0, 2], i_unit()));
        assert_eq!(n, expect);
        for tj in [TwoJ(1), TwoJ(2), TwoJ(3)] {
            assert_eq!(eval_at(&n, tj), eval_nc(&p, tj));
        }
    }

    #[test]
    fn casimir_steps() {
        let x3sq = normal_order(&x(2).mul(&x(2)));
        let expect = PbwPoly::monomial([0, 0, 0], sym(KAPPA))
            .sub(&PbwPoly::monomial([2, 0, 0], SymScalar::one()))
            .sub(&PbwPoly::monomial([0, 2, 0], SymScalar::one()));
        assert_eq!(casimir_reduce(&x3sq), expect);
        let cube = casimir_reduce(&normal_order(&x(2).mul(&x(2)).mul(&x(2))));
        assert!(cube.is_casimir_reduced());
        assert_eq!(cube.coeff(&[0, 0, 1]), sym(KAPPA));
        assert_eq!(cube.coeff(&[2, 0, 1]), SymScalar::from_int(-1));
        assert_eq!(cube.coeff(&[0, 2, 1]), SymScalar::from_int(-1));
    }

    #[test]
    fn sandwich_sum_symbolic() {
        for l in 0..3 {
            let s = (0..3).fold(NcPoly::zero(), |acc, i| acc.add(&x(i).mul(&x(l)).mul(&x(i))));
            let expect = PbwPoly::monomial(word_to_exps(&[l as u8]), sym(KAPPA).sub(&SymScalar::one()));
            assert_eq!(reduce(&s), expect);
        }
    }

    #[test]
    fn casimir_is_central() {
        for i in 0..3 {
            assert_eq!(reduce(&x(i).mul(&casimir())), reduce(&casimir().mul(&x(i))));
            assert_eq!(reduce(&x(i).mul(&casimir())), PbwPoly::monomial(word_to_exps(&[i as u8]), sym(KAPPA)));
        }
    }

    #[test]
    fn strategies_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let p = random_nc(&mut rng, 4, 4);
            let base = reduce(&p);
            assert_eq!(reduce_with_strategy(&p, &mut Strategy::Rightmost), base);
            let seed = rng.gen();
            assert_eq!(reduce_with_strategy(&p, &mut Strategy::random(seed)), base);
        }
    }

    #[test]
    fn evaluation_homomorphism_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let p = random_nc(&mut rng, 4, 3);
            let r = reduce(&p);
            for tj in [TwoJ(1), TwoJ(2), TwoJ(3), TwoJ(4)] {
                assert_eq!(eval_at(&r, tj), eval_nc(&p, tj));
            }
        }
    }

    #[test]
    fn sigma_conversion() {
        let c = Coefficient::s_pow(4).scale_int(3);
        assert_eq!(coefficient_to_sym(&c).unwrap(), SymScalar::monomial([0, 0, 0, 2], GaussRational::from_int(3)));
        assert!(coefficient_to_sym(&Coefficient::sqrt_int(2)).is_err());
        assert!(coefficient_to_sym(&Coefficient::s_pow(1)).is_err());
    }
}
