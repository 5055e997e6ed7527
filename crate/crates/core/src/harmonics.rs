//! Exact spherical harmonics, sphere integration and harmonic decomposition.
//!
//! Harmonics follow the Condon–Shortley convention and are normalized so
//! that `∫ conj(Y_l^m) Y_l'^m' dσ = s² δ δ` over the sphere of radius `s`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactnum::{factor::Factorization, rat, Coefficient, GaussRational, Rational};
use crate::sphere_poly::{canonicalize, Poly3, SpherePoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarmonicsError {
    #[error("invalid harmonic labels l = {l}, m = {m}: need |m| <= l")]
    InvalidOrder { l: i64, m: i64 },
}

/// A spherical harmonic as a sphere polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ylm {
    pub l: u32,
    pub m: i32,
    pub poly: SpherePoly,
}

impl Ylm {
    /// Coefficient-wise real part `R_l^m`.
    pub fn real_part(&self) -> SpherePoly {
        self.poly.real_part()
    }

    /// Coefficient-wise imaginary part `I_l^m`.
    pub fn imag_part(&self) -> SpherePoly {
        self.poly.imag_part()
    }
}

fn binom(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn falling(n: u32, k: u32) -> BigInt {
    (0..k).map(|i| BigInt::from(n - i)).product()
}

/// `(S1 + i S2)^m`.
fn plus_power(m: u32) -> Poly3 {
    let mut out = Poly3::zero();
    let mut ipow = GaussRational::one();
    for b in 0..=m {
        let c = GaussRational::real(Rational::from(binom(m, b))) * ipow.clone();
        out.add_term([m - b, b, 0], &Coefficient::from_gauss(c));
        ipow = ipow.mul_i();
    }
    out
}

fn build(l: u32, m: u32) -> SpherePoly {
    // d^m/dt^m of the Legendre polynomial, written in z with t = z/s and
    // each t^(l-m-2k) homogenized by s^(2k).
    let mut radial = Poly3::zero();
    let mut k = 0;
    while l >= m + 2 * k {
        let num = binom(l, k) * binom(2 * l - 2 * k, l) * falling(l - 2 * k, m);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let c = Coefficient::from_rational(Rational::new(num * sign, BigInt::from(2).pow(l)))
            .mul_s_pow(2 * k as i32);
        radial.add_term([0, 0, l - m - 2 * k], &c);
        k += 1;
    }
    let norm_sq = Factorization::of_u64(2 * l as u64 + 1)
        .mul(&Factorization::factorial((l - m) as u64))
        .div(&Factorization::of_u64(4))
        .div(&Factorization::factorial((l + m) as u64));
    let cs = if m.is_multiple_of(2) { 1 } else { -1 };
    let norm = Coefficient::sqrt_factored(&norm_sq)
        .scale_int(cs)
        .mul_s_pow(-(l as i32))
        * Coefficient::pi_half_pow(-1);
    canonicalize(&(&plus_power(m) * &radial).scale(&norm))
}

type Cache = RwLock<HashMap<(u32, i32), Arc<Ylm>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Y_l^m`; values are built once and shared.
pub fn ylm(l: u32, m: i32) -> Result<Arc<Ylm>, HarmonicsError> {
    if m.unsigned_abs() > l {
        return Err(HarmonicsError::InvalidOrder { l: l as i64, m: m as i64 });
    }
    if let Some(y) = cache().read().expect("harmonics cache poisoned").get(&(l, m)) {
        return Ok(y.clone());
    }
    let mu = m.unsigned_abs();
    let mut poly = build(l, mu);
    if m < 0 {
        poly = poly.conj();
        if mu % 2 == 1 {
            poly = -poly;
        }
    }
    let y = Arc::new(Ylm { l, m, poly });
    let mut w = cache().write().expect("harmonics cache poisoned");
    Ok(w.entry((l, m)).or_insert(y).clone())
}

fn odd_double_factorial(n: u32) -> BigInt {
    // (2n - 1)!!
    (1..=n).map(|i| BigInt::from(2 * i - 1)).product()
}

/// Exact integral over the sphere of radius `s` with its area element.
pub fn sphere_integral(p: &SpherePoly) -> Coefficient {
    let four_pi = Coefficient::from_int(4) * Coefficient::pi_half_pow(2);
    let mut acc = Coefficient::zero();
    for (e, c) in p.terms() {
        if e.iter().any(|x| x % 2 == 1) {
            continue;
        }
        let (a, b, g) = (e[0] / 2, e[1] / 2, e[2] / 2);
        let num = odd_double_factorial(a) * odd_double_factorial(b) * odd_double_factorial(g);
        let den = odd_double_factorial(a + b + g + 1);
        let weight = Coefficient::from_rational(Rational::new(num, den))
            .mul_s_pow(2 + (e[0] + e[1] + e[2]) as i32);
        acc = &acc + &(&(c * &weight) * &four_pi);
    }
    acc
}

/// `∫ conj(f) g dσ`.
pub fn inner(f: &SpherePoly, g: &SpherePoly) -> Coefficient {
    sphere_integral(&(&f.conj() * g))
}

/// The harmonic decomposition of a class together with homogeneous harmonic
/// lifts of each component.
#[derive(Clone, Debug)]
pub struct HarmonicDecomp {
    original: SpherePoly,
    components: BTreeMap<u32, SpherePoly>,
    lifts: BTreeMap<u32, Poly3>,
}

impl HarmonicDecomp {
    pub fn original(&self) -> &SpherePoly {
        &self.original
    }

    pub fn components(&self) -> &BTreeMap<u32, SpherePoly> {
        &self.components
    }

    pub fn component(&self, l: u32) -> SpherePoly {
        self.components.get(&l).cloned().unwrap_or_default()
    }

    /// Homogeneous degree-`l` harmonic polynomial restricting to component `l`.
    pub fn lift(&self, l: u32) -> Poly3 {
        self.lifts.get(&l).cloned().unwrap_or_default()
    }

    pub fn reconstruct(&self) -> SpherePoly {
        self.components
            .values()
            .fold(SpherePoly::zero(), |acc, c| &acc + c)
    }
}

/// Euclidean Laplacian.
pub fn laplacian(p: &Poly3) -> Poly3 {
    (0..3).fold(Poly3::zero(), |acc, i| &acc + &p.derivative(i).derivative(i))
}

fn r_squared() -> Poly3 {
    Poly3::from_terms((0..3).map(|i| {
        let mut e = [0; 3];
        e[i] = 2;
        (e, Coefficient::one())
    }))
}

/// Splits a homogeneous `h` of degree `n` as `H + r² q` with `ΔH = 0`.
pub fn harmonic_split(h: &Poly3, n: u32) -> (Poly3, Poly3) {
    let r2 = r_squared();
    let mut harmonic = h.clone();
    let mut quotient = Poly3::zero();
    let mut lap = h.clone();
    let mut r_pow = Poly3::one();
    let mut denom = Rational::from_integer(1.into());
    let mut k = 1u32;
    loop {
        lap = laplacian(&lap);
        if lap.is_zero() || 2 * k > n {
            break;
        }
        denom *= rat(-2 * (k as i64) * (2 * n as i64 - 2 * k as i64 + 1), 1);
        let ck = Coefficient::from_rational(denom.recip());
        let term = (&r_pow * &lap).scale(&ck);
        quotient = &quotient - &term;
        r_pow = &r_pow * &r2;
        harmonic = &harmonic + &(&r2 * &term);
        k += 1;
    }
    (harmonic, quotient)
}

/// Harmonic decomposition by repeated Laplacian projection.
pub fn harmonic_decompose(p: &SpherePoly) -> HarmonicDecomp {
    let mut lifts: BTreeMap<u32, Poly3> = BTreeMap::new();
    let Some(top) = p.rep_degree() else {
        return HarmonicDecomp {
            original: p.clone(),
            components: BTreeMap::new(),
            lifts,
        };
    };
    for n in 0..=top {
        let mut cur = p.as_poly().homogeneous_part(n);
        let mut d = n;
        while !cur.is_zero() {
            let (h, q) = harmonic_split(&cur, d);
            if !h.is_zero() {
                let scaled = h.scale(&Coefficient::s_pow((n - d) as i32));
                let slot = lifts.entry(d).or_default();
                *slot = &*slot + &scaled;
            }
            if d < 2 {
                debug_assert!(q.is_zero());
                break;
            }
            cur = q;
            d -= 2;
        }
    }
    lifts.retain(|_, v| !v.is_zero());
    let components = lifts.iter().map(|(&l, v)| (l, canonicalize(v))).collect();
    HarmonicDecomp {
        original: p.clone(),
        components,
        lifts,
    }
}

/// Component `l` by orthogonal projection onto the harmonics `Y_l^m`.
pub fn component_by_projection(p: &SpherePoly, l: u32) -> SpherePoly {
    let inv_s2 = Coefficient::s_pow(-2);
    let mut out = SpherePoly::zero();
    for m in -(l as i32)..=(l as i32) {
        let y = ylm(l, m).expect("valid labels");
        let c = &inner(&y.poly, p) * &inv_s2;
        if !c.is_zero() {
            out = &out + &y.poly.scale(&c);
        }
    }
    out
}

/// Every `Y_l^m` is orthogonal to every monomial of degree below `l`, so no
/// representative of lower degree exists.
pub fn orthogonal_to_lower_degrees(l: u32) -> bool {
    let monos: Vec<SpherePoly> = (0..l)
        .flat_map(|d| (0..=d).flat_map(move |a| (0..=d - a).map(move |b| [a, b, d - a - b])))
        .map(|e| SpherePoly::monomial(e, Coefficient::one()))
        .collect();
    (-(l as i32)..=(l as i32)).all(|m| {
        let y = ylm(l, m).expect("valid labels");
        monos.iter().all(|x| inner(x, &y.poly).is_zero())
    })
}

/// The `c` with `p = c · Y`, if one exists.
pub fn coefficient_of(p: &SpherePoly, y: &Ylm) -> Option<Coefficient> {
    if p.is_zero() {
        return Some(Coefficient::zero());
    }
    let (mono, yc) = y.poly.terms().next()?;
    let c = p.coeff(mono).div_single(yc).ok()?;
    (y.poly.scale(&c) == *p).then_some(c)
}
