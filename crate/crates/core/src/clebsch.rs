//! Clebsch–Gordan coefficients, the product decomposition of harmonics and
//! the bracket-coefficient recursion for `{Y_l^m, Y_l^n}` with its
//! non-vanishing certificates.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{factor::Factorization, rat, Coefficient, Rational};
use crate::harmonics::{coefficient_of, harmonic_decompose, ylm, HarmonicsError};
use crate::sphere_poly::poisson;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClebschError {
    #[error("projection |{m}| exceeds angular momentum {l}")]
    InvalidProjection { l: u32, m: i64 },
    #[error("negative factorial argument {0}")]
    NegativeFactorial(i64),
    #[error("need l >= 1 and 1 <= j <= 2l, got l = {l}, j = {j}")]
    OutOfRange { l: u32, j: u32 },
    #[error("component of degree {degree} in the bracket is not a multiple of Y_{degree}^{order}")]
    StrayComponent { degree: u32, order: i64 },
    #[error(transparent)]
    Harmonics(#[from] HarmonicsError),
}

fn fact(n: i64) -> Result<Factorization, ClebschError> {
    if n < 0 {
        return Err(ClebschError::NegativeFactorial(n));
    }
    Ok(Factorization::factorial(n as u64))
}

fn fact_big(n: i64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn int(n: i64) -> Factorization {
    Factorization::of_u64(n as u64)
}

/// A Clebsch–Gordan coefficient: a single signed real surd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CGValue {
    pub value: Coefficient,
}

impl CGValue {
    fn zero() -> Self {
        Self { value: Coefficient::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// `value²`, always rational.
    pub fn square(&self) -> Rational {
        self.value
            .square_if_rational()
            .expect("Clebsch-Gordan values square to rationals")
    }

    fn is_negative(&self) -> bool {
        self.value
            .terms()
            .next()
            .is_some_and(|(_, v)| v.re.is_negative())
    }
}

/// Renders as `sqrt(q)`, `-sqrt(q)`, or a plain rational when `q` is a
/// perfect square.
impl fmt::Display for CGValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.value.as_rational() {
            return write!(f, "{q}");
        }
        let sign = if self.is_negative() { "-" } else { "" };
        write!(f, "{sign}sqrt({})", self.square())
    }
}

/// `⟨l1 l2 m1 m2 | L M⟩` by the Racah formula.
pub fn cg(l1: u32, l2: u32, m1: i64, m2: i64, big_l: u32, big_m: i64) -> Result<CGValue, ClebschError> {
    for (l, m) in [(l1, m1), (l2, m2), (big_l, big_m)] {
        if m.unsigned_abs() > l as u64 {
            return Err(ClebschError::InvalidProjection { l, m });
        }
    }
    let (j1, j2, j) = (l1 as i64, l2 as i64, big_l as i64);
    if m1 + m2 != big_m || j < (j1 - j2).abs() || j > j1 + j2 {
        return Ok(CGValue::zero());
    }
    let pre = int(2 * j + 1)
        .mul(&fact(j + j1 - j2)?)
        .mul(&fact(j - j1 + j2)?)
        .mul(&fact(j1 + j2 - j)?)
        .div(&fact(j1 + j2 + j + 1)?)
        .mul(&fact(j + big_m)?)
        .mul(&fact(j - big_m)?)
        .mul(&fact(j1 - m1)?)
        .mul(&fact(j1 + m1)?)
        .mul(&fact(j2 - m2)?)
        .mul(&fact(j2 + m2)?);
    let mut sum = Rational::zero();
    let mut k = 0i64;
    loop {
        let args = [
            k,
            j1 + j2 - j - k,
            j1 - m1 - k,
            j2 + m2 - k,
            j - j2 + m1 + k,
            j - j1 - m2 + k,
        ];
        if args[1] < 0 || args[2] < 0 || args[3] < 0 {
            break;
        }
        if args[4] >= 0 && args[5] >= 0 {
            let den: BigInt = args.iter().map(|&a| fact_big(a)).product();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            sum += Rational::new(BigInt::from(sign), den);
        }
        k += 1;
    }
    Ok(CGValue {
        value: Coefficient::sqrt_factored(&pre).scale(&sum),
    })
}

fn cg_or_zero(l1: u32, l2: u32, m1: i64, m2: i64, big_l: u32, big_m: i64) -> CGValue {
    cg(l1, l2, m1, m2, big_l, big_m).unwrap_or_else(|_| CGValue::zero())
}

/// Closed form of `⟨l l 0 0 | 2k 0⟩`.
pub fn cg_l_l_00(l: u32, k: u32) -> Result<CGValue, ClebschError> {
    let (l, k) = (l as i64, k as i64);
    let root = int(4 * k + 1)
        .mul(&fact(2 * l - 2 * k)?)
        .div(&fact(2 * l + 2 * k + 1)?);
    let outer = fact(2 * k)?
        .mul(&fact(l + k)?)
        .div(&fact(k)?.pow(2))
        .div(&fact(l - k)?)
        .to_rational();
    let sign = if (k + l) % 2 == 0 { 1 } else { -1 };
    Ok(CGValue {
        value: Coefficient::sqrt_factored(&root).scale(&(outer * rat(sign, 1))),
    })
}

/// Closed form of `⟨l l, l−j+1, l | 2k, 2l−j+1⟩`.
pub fn cg_stretched(l: u32, j: u32, k: u32) -> Result<CGValue, ClebschError> {
    let (l, j, k) = (l as i64, j as i64, k as i64);
    if 2 * k - 2 * l + j - 1 < 0 {
        return Ok(CGValue::zero());
    }
    let root = int(4 * k + 1)
        .mul(&fact(2 * l)?)
        .mul(&fact(j - 1)?)
        .mul(&fact(2 * k + 2 * l - j + 1)?)
        .div(&fact(2 * l - j + 1)?)
        .div(&fact(2 * l + 2 * k + 1)?)
        .div(&fact(2 * l - 2 * k)?)
        .div(&fact(2 * k - 2 * l + j - 1)?);
    Ok(CGValue {
        value: Coefficient::sqrt_factored(&root),
    })
}

/// Both closed forms at this `l` agree with the Racah formula, including
/// the zero of the stretched form outside its range.
pub fn closed_forms_agree(l: u32) -> Result<bool, ClebschError> {
    for k in 0..=l {
        if cg_l_l_00(l, k)? != cg(l, l, 0, 0, 2 * k, 0)? {
            return Ok(false);
        }
    }
    for j in 1..=2 * l {
        for k in 0..=l {
            let m1 = l as i64 - j as i64 + 1;
            let big_m = 2 * l as i64 - j as i64 + 1;
            let closed = cg_stretched(l, j, k)?;
            let ok = if big_m > 2 * k as i64 || m1.unsigned_abs() > l as u64 {
                closed.is_zero()
            } else {
                closed == cg(l, l, m1, l as i64, 2 * k, big_m)?
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `β_{l,m} = sqrt((l+m+1)(l−m))`.
pub fn beta(l: u32, m: i64) -> Coefficient {
    let v = (l as i64 + m + 1) * (l as i64 - m);
    if v <= 0 {
        Coefficient::zero()
    } else {
        Coefficient::sqrt_int(v as u64)
    }
}

fn inv_sqrt_pi() -> Coefficient {
    Coefficient::pi_half_pow(-1)
}

/// Coefficients of `Y_L^(m1+m2)` in `Y_l1^m1 · Y_l2^m2`.
pub fn product_decompose(l1: u32, m1: i64, l2: u32, m2: i64) -> Result<BTreeMap<u32, Coefficient>, ClebschError> {
    let big_m = m1 + m2;
    let mut out = BTreeMap::new();
    for big_l in l1.abs_diff(l2)..=(l1 + l2) {
        if big_m.unsigned_abs() > big_l as u64 {
            continue;
        }
        let a = cg(l1, l2, 0, 0, big_l, 0)?;
        let b = cg(l1, l2, m1, m2, big_l, big_m)?;
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let norm = Coefficient::sqrt_rational(&Rational::new(
            BigInt::from((2 * l1 + 1) * (2 * l2 + 1)),
            BigInt::from(4 * (2 * big_l + 1)),
        ))
        .expect("positive");
        let c = &(&(&norm * &inv_sqrt_pi()) * &a.value) * &b.value;
        out.insert(big_l, c);
    }
    Ok(out)
}

/// Coefficients `y_{2k−1, m+n}`, keyed by `k`, of the bracket of `Y_l^m` and
/// `Y_l^n` in the angular orientation `(csc θ / s)(f_φ g_θ − f_θ g_φ)`,
/// which equals `poisson(Y_l^n, Y_l^m)`.
pub fn bracket_coeffs_direct(l: u32, m: i64, n: i64) -> Result<BTreeMap<u32, Coefficient>, ClebschError> {
    let ym = ylm(l, m as i32)?;
    let yn = ylm(l, n as i32)?;
    let bracket = poisson(&yn.poly, &ym.poly);
    let dec = harmonic_decompose(&bracket);
    let r = m + n;
    let mut out = BTreeMap::new();
    for (&deg, comp) in dec.components() {
        let stray = ClebschError::StrayComponent { degree: deg, order: r };
        if deg % 2 == 0 || r.unsigned_abs() > deg as u64 {
            return Err(stray);
        }
        let y = ylm(deg, r as i32)?;
        let c = coefficient_of(comp, &y).ok_or(stray)?;
        out.insert(deg.div_ceil(2), c);
    }
    for k in 1..=l {
        out.entry(k).or_insert_with(Coefficient::zero);
    }
    Ok(out)
}

/// `d_{t,r}` of the `Y_1^1` product expansion.
pub fn d_coeff(t: i64, r: i64) -> Coefficient {
    sqrt_ratio((t + r + 1) * (t + r + 2), (2 * t + 1) * (2 * t + 3))
}

/// `e_{t,r}` of the `Y_1^1` product expansion.
pub fn e_coeff(t: i64, r: i64) -> Coefficient {
    sqrt_ratio((t - r) * (t - r - 1), (2 * t + 1) * (2 * t - 1))
}

fn sqrt_ratio(num: i64, den: i64) -> Coefficient {
    if num == 0 {
        return Coefficient::zero();
    }
    Coefficient::sqrt_rational(&rat(num, den)).expect("factorable")
}

/// The general recursion for `y_{2k−1}(m, n)`, run downward from
/// `y_{2l+1} = 0`; coefficients of harmonics that do not exist are zero.
pub fn bracket_coeffs_general(l: u32, m: i64, n: i64) -> Result<BTreeMap<u32, Coefficient>, ClebschError> {
    for x in [m, n] {
        if x.unsigned_abs() > l as u64 {
            return Err(ClebschError::InvalidProjection { l, m: x });
        }
    }
    let r = m + n;
    let li = l as i64;
    let mut out = BTreeMap::new();
    let mut above = Coefficient::zero();
    let i_over_s = Coefficient::i().mul_s_pow(-1);
    for k in (1..=li).rev() {
        let t = 2 * k - 1;
        if r.abs() > t {
            above = Coefficient::zero();
            out.insert(k as u32, above.clone());
            continue;
        }
        let d_inv = d_coeff(t, r).inv_single().expect("d nonzero in range");
        let e = e_coeff(t + 2, r);
        let c00 = cg(l, l, 0, 0, 2 * k as u32, 0)?;
        let bracket = &(&Coefficient::from_int(m) * &beta(l, n))
            * &cg_or_zero(l, l, m, n + 1, 2 * k as u32, r + 1).value
            - &(&Coefficient::from_int(n) * &beta(l, m))
                * &cg_or_zero(l, l, m + 1, n, 2 * k as u32, r + 1).value;
        let weight = &(&Coefficient::sqrt_rational(&rat(1, 4 * (4 * k + 1))).expect("positive")
            * &inv_sqrt_pi())
            .scale_int(2 * li + 1)
            * &c00.value;
        let source = &(&(&i_over_s * &weight) * &bracket) * &d_inv;
        let value = &(&(&e * &d_inv) * &above) - &source;
        out.insert(k as u32, value.clone());
        above = value;
    }
    Ok(out)
}

/// One row of the `(l, j)` recursion.
#[derive(Clone, Debug, PartialEq)]
pub struct RecursionRow {
    pub l: u32,
    pub j: u32,
    /// `ỹ_{2k−1}` for `1 ≤ k ≤ l+1`.
    pub ytilde: BTreeMap<u32, Coefficient>,
    /// `y_{2k−1}(l−j, l)` for `1 ≤ k ≤ l`.
    pub y: BTreeMap<u32, Coefficient>,
    /// `(Z_{2k−1}, W_{2k−1})`; a `W` with a negative factorial argument is zero.
    pub zw: BTreeMap<u32, (Coefficient, Coefficient)>,
}

fn check_row_range(l: u32, j: u32) -> Result<(), ClebschError> {
    if l == 0 || j == 0 || j > 2 * l {
        return Err(ClebschError::OutOfRange { l, j });
    }
    Ok(())
}

/// `Z_{2k−1}`.
pub fn z_coeff(l: u32, j: u32, k: u32) -> Coefficient {
    let (l, j, k) = (l as i64, j as i64, k as i64);
    let num = (2 * k - 2 * l + j + 1) * (2 * k - 2 * l + j) * (4 * k - 1);
    let den = (2 * k + 2 * l - j) * (2 * k + 2 * l - j + 1) * (4 * k + 3);
    if num == 0 {
        return Coefficient::zero();
    }
    Coefficient::sqrt_rational(&rat(num, den)).expect("factorable")
}

/// `W_{2k−1}`; fails on a negative factorial argument.
pub fn w_coeff(l: u32, j: u32, k: u32) -> Result<Coefficient, ClebschError> {
    let (root, outer) = w_parts(l, j, k)?;
    Ok(Coefficient::sqrt_factored(&root).scale(&outer.to_rational()))
}

fn w_parts(l: u32, j: u32, k: u32) -> Result<(Factorization, Factorization), ClebschError> {
    let (l, j, k) = (l as i64, j as i64, k as i64);
    let root = fact(2 * k + 2 * l - j + 1)?
        .div(&fact(2 * k - 2 * l + j + 1)?)
        .mul(&int(4 * k + 3));
    let outer = int(4 * k + 1)
        .mul(&fact(l + k)?)
        .mul(&fact(2 * k)?)
        .div(&fact(2 * l + 2 * k + 1)?)
        .div(&fact(l - k)?)
        .div(&fact(k)?.pow(2));
    Ok((root, outer))
}

/// `W_{2k−1}²` in factored form; positive whenever defined.
fn w_squared(l: u32, j: u32, k: u32) -> Result<Factorization, ClebschError> {
    let (root, outer) = w_parts(l, j, k)?;
    Ok(root.mul(&outer.pow(2)))
}

/// `(i/s)(−1)^l l(2l+1)/sqrt(4π) · sqrt(j!(2l)!/(2l−j)!)`.
pub fn ytilde_prefactor(l: u32, j: u32) -> Coefficient {
    let (li, ji) = (l as i64, j as i64);
    let root = Factorization::factorial(j as u64)
        .mul(&Factorization::factorial(2 * l as u64))
        .div(&Factorization::factorial((2 * li - ji) as u64));
    let sign = if l.is_multiple_of(2) { 1 } else { -1 };
    let scalar = rat(sign * li * (2 * li + 1), 2);
    &(&Coefficient::sqrt_factored(&root).scale(&scalar) * &inv_sqrt_pi())
        * &Coefficient::i().mul_s_pow(-1)
}

/// Runs `ỹ_{2k−1} = Z_{2k−1}(ỹ_{2k+1} + (−1)^k W_{2k−1})` from `ỹ_{2l+1} = 0`.
pub fn bracket_coeffs_recursion(l: u32, j: u32) -> Result<RecursionRow, ClebschError> {
    check_row_range(l, j)?;
    let mut ytilde = BTreeMap::new();
    let mut zw = BTreeMap::new();
    let mut y = BTreeMap::new();
    let mut above = Coefficient::zero();
    ytilde.insert(l + 1, above.clone());
    let pre = ytilde_prefactor(l, j);
    for k in (1..=l).rev() {
        let z = z_coeff(l, j, k);
        let w = match w_coeff(l, j, k) {
            Ok(w) => w,
            Err(ClebschError::NegativeFactorial(_)) => Coefficient::zero(),
            Err(e) => return Err(e),
        };
        let signed_w = if k % 2 == 0 { w.clone() } else { -&w };
        let value = &z * &(&above + &signed_w);
        y.insert(k, &pre * &value);
        ytilde.insert(k, value.clone());
        zw.insert(k, (z, w));
        above = value;
    }
    Ok(RecursionRow { l, j, ytilde, y, zw })
}

/// The Step-4 ratio `(4k+1)(l−k+1)(2k−1) / ((4k−3)(2l+2k+1)k)`.
pub fn ratio_closed_form(l: u32, k: u32) -> Rational {
    let (l, k) = (l as i64, k as i64);
    rat(
        (4 * k + 1) * (l - k + 1) * (2 * k - 1),
        (4 * k - 3) * (2 * l + 2 * k + 1) * k,
    )
}

fn ratio_squared_factored(l: u32, j: u32, k: u32) -> Option<Factorization> {
    let (li, ji, ki) = (l as i64, j as i64, k as i64);
    let num = (2 * ki - 2 * li + ji + 1) * (2 * ki - 2 * li + ji) * (4 * ki - 1);
    if num <= 0 {
        return None;
    }
    let den = (2 * ki + 2 * li - ji) * (2 * ki + 2 * li - ji + 1) * (4 * ki + 3);
    let z2 = int(num).div(&int(den));
    Some(z2.mul(&w_squared(l, j, k).ok()?).div(&w_squared(l, j, k - 1).ok()?))
}

/// Square of `Z_{2k−1} W_{2k−1} / W_{2k−3}`, when both weights are defined
/// and `Z_{2k−1} ≠ 0`.
pub fn ratio_squared_from_weights(l: u32, j: u32, k: u32) -> Option<Rational> {
    ratio_squared_factored(l, j, k).map(|f| f.to_rational())
}

/// `Z_{2k−1} W_{2k−1} / W_{2k−3}` from the recursion weights; `None` where
/// undefined or irrational.
pub fn ratio_from_weights(l: u32, j: u32, k: u32) -> Option<Rational> {
    Some(ratio_squared_factored(l, j, k)?.sqrt_exact()?.to_rational())
}

fn in_ratio_domain(l: u32, k: u32) -> bool {
    l >= 5 && 2 * k + 1 >= l && k <= l && k >= 2
}

/// Checks `Z_{2k−1} W_{2k−1} < W_{2k−3}` at `(l, k)` by comparing the squared
/// ratio with 1, and that the weights reproduce the closed-form ratio for
/// every `j` where they are defined.
pub fn ratio_bound_check(l: u32, k: u32) -> bool {
    if !in_ratio_domain(l, k) {
        return false;
    }
    let r = ratio_closed_form(l, k);
    let r2 = &r * &r;
    let consistent = (1..=2 * l)
        .filter_map(|j| ratio_squared_from_weights(l, j, k))
        .all(|q| q == r2);
    consistent && r2 < Rational::one()
}

/// Maximum of the closed-form ratio over the admissible grid `5 ≤ l ≤ lmax`,
/// together with a maximizer.
pub fn ratio_grid_max(lmax: u32) -> Option<(Rational, u32, u32)> {
    let mut best: Option<(Rational, u32, u32)> = None;
    for l in 5..=lmax {
        for k in 2..=l {
            if !in_ratio_domain(l, k) {
                continue;
            }
            let r = ratio_closed_form(l, k);
            if best.as_ref().is_none_or(|(b, _, _)| r > *b) {
                best = Some((r, l, k));
            }
        }
    }
    best
}

/// Non-vanishing certificate for one value of `l`.
#[derive(Clone, Debug, Serialize)]
pub struct NonvanishingReport {
    pub l: u32,
    /// For each `j`, the `k` with `y_{2k−1}(l−j, l) ≠ 0`.
    pub nonzero: BTreeMap<u32, Vec<u32>>,
    /// `y_{2l−1}(l−1, l) ≠ 0`.
    pub top_nonzero: bool,
    /// Every `(j, k)` of the claimed range is nonzero; `None` below `l = 5`.
    pub claimed_range: Option<bool>,
    /// Points of the claimed range where `Y_{2k−1}^{2l−j}` does not exist
    /// (`2k−1 < 2l−j`), so the coefficient is zero by definition.
    pub vacuous: Vec<(u32, u32)>,
    /// Zero whenever `2k−1 ≤ 2l−j−2`.
    pub vanishing: bool,
    /// `U_{k+1}/U_k > 1` at every step of the alternating sum; `None` below
    /// `l = 5`.
    pub monotone: Option<bool>,
}

impl NonvanishingReport {
    pub fn passed(&self) -> bool {
        self.top_nonzero
            && self.vanishing
            && self.claimed_range.unwrap_or(true)
            && self.monotone.unwrap_or(true)
    }
}

fn in_claimed_range(l: u32, j: u32, k: u32) -> bool {
    let (l, j, k) = (l as i64, j as i64, k as i64);
    l >= 5 && 2 * k >= l - 1 && 2 * k > 2 * l - j - 1 && k <= l
}

fn monotone_steps(l: u32, j: u32) -> bool {
    // U_{k+1}/U_k = W_{2K−3} / (Z_{2K−1} W_{2K−1}) with K = l − k.
    for big_k in 2..=l {
        if 2 * big_k + 1 < l || 2 * big_k as i64 - 3 <= 2 * l as i64 - j as i64 - 2 {
            continue;
        }
        let Some(r) = ratio_from_weights(l, j, big_k) else {
            return false;
        };
        let inv = r.recip();
        if &inv * &inv <= Rational::one() {
            return false;
        }
    }
    true
}

pub fn nonvanishing_report(l: u32) -> Result<NonvanishingReport, ClebschError> {
    let mut nonzero = BTreeMap::new();
    let mut top_nonzero = false;
    let mut claimed_ok = true;
    let mut vanishing = true;
    let mut monotone = true;
    let mut vacuous = Vec::new();
    for j in 1..=2 * l {
        let row = bracket_coeffs_recursion(l, j)?;
        let ks: Vec<u32> = row
            .y
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(&k, _)| k)
            .collect();
        for (&k, v) in &row.y {
            if (2 * k as i64 - 1) <= 2 * l as i64 - j as i64 - 2 && !v.is_zero() {
                vanishing = false;
            }
            if in_claimed_range(l, j, k) {
                if 2 * k < 2 * l - j + 1 {
                    vacuous.push((j, k));
                    claimed_ok &= v.is_zero();
                } else if v.is_zero() {
                    claimed_ok = false;
                }
            }
        }
        if j == 1 {
            top_nonzero = row.y.get(&l).is_some_and(|v| !v.is_zero());
        }
        if l >= 5 {
            monotone &= monotone_steps(l, j);
        }
        nonzero.insert(j, ks);
    }
    Ok(NonvanishingReport {
        l,
        nonzero,
        top_nonzero,
        claimed_range: (l >= 5).then_some(claimed_ok),
        vacuous,
        vanishing,
        monotone: (l >= 5).then_some(monotone),
    })
}

/// `(S1 + i S2)/s` expressed through `Y_1^1`: the factor `−sqrt(8π/3)`.
pub fn sin_theta_e_i_phi_factor() -> Coefficient {
    -(&Coefficient::sqrt_rational(&rat(8, 3)).expect("positive") * &Coefficient::pi_half_pow(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere_poly::{Axis, SpherePoly};

    #[test]
    fn simple_values() {
        let v = cg(1, 1, 0, 0, 2, 0).unwrap();
        assert_eq!(v.value, Coefficient::sqrt_rational(&rat(2, 3)).unwrap());
        assert_eq!(v.to_string(), "sqrt(2/3)");
        for l in 0..6 {
            assert_eq!(cg(l, l, l as i64, l as i64, 2 * l, 2 * l as i64).unwrap().value, Coefficient::one());
        }
        assert_eq!(cg(1, 1, 1, -1, 0, 0).unwrap().to_string(), "sqrt(1/3)");
        assert_eq!(cg(1, 1, 0, 0, 1, 0).unwrap().to_string(), "0");
        assert!(cg(1, 1, 2, 0, 2, 2).is_err());
    }

    #[test]
    fn odd_parity_vanishes() {
        for l in 0..7u32 {
            for j in (1..=2 * l).step_by(2) {
                assert!(cg(l, l, 0, 0, j, 0).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn closed_forms_agree_with_racah() {
        for l in 0..=8u32 {
            assert!(closed_forms_agree(l).unwrap(), "l={l}");
        }
    }

    #[test]
    fn constant_harmonic_product() {
        for (l, m) in [(0u32, 0i64), (2, -1), (3, 3)] {
            let p = product_decompose(0, 0, l, m).unwrap();
            assert_eq!(p.len(), 1);
            assert_eq!(p[&l], Coefficient::from_rational(rat(1, 2)) * Coefficient::pi_half_pow(-1));
        }
        assert_eq!(product_decompose(1, 1, 1, 1).unwrap().keys().collect::<Vec<_>>(), [&2]);
        assert_eq!(product_decompose(1, 0, 1, 0).unwrap().keys().collect::<Vec<_>>(), [&0, &2]);
    }

    #[test]
    fn sin_theta_bridge() {
        let y11 = ylm(1, 1).unwrap();
        let lhs = (&SpherePoly::coord(Axis::X1) + &SpherePoly::coord(Axis::X2).scale(&Coefficient::i()))
            .scale(&Coefficient::s_pow(-1));
        assert_eq!(lhs, y11.poly.scale(&sin_theta_e_i_phi_factor()));
    }

    #[test]
    fn recursion_matches_direct_small() {
        for l in 1..=3u32 {
            for j in 1..=2 * l {
                let row = bracket_coeffs_recursion(l, j).unwrap();
                let direct = bracket_coeffs_direct(l, l as i64 - j as i64, l as i64).unwrap();
                assert_eq!(row.y, direct, "l={l} j={j}");
                assert!(row.ytilde[&(l + 1)].is_zero());
            }
        }
    }

    #[test]
    fn general_recursion_matches_direct() {
        for l in 1..=5u32 {
            let li = l as i64;
            for m in -li..=li {
                for n in -li..=li {
                    assert_eq!(
                        bracket_coeffs_general(l, m, n).unwrap(),
                        bracket_coeffs_direct(l, m, n).unwrap(),
                        "l={l} m={m} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn direct_coefficients_shape() {
        let c = bracket_coeffs_direct(1, 0, 1).unwrap();
        assert_eq!(c.len(), 1);
        assert!(!c[&1].is_zero());
        for m in -2..=2 {
            assert!(bracket_coeffs_direct(2, m, m).unwrap().values().all(Coefficient::is_zero));
        }
        assert!(!bracket_coeffs_direct(2, 1, 2).unwrap()[&2].is_zero());
    }

    #[test]
    fn ratio_maximum() {
        let (max, l, k) = ratio_grid_max(40).unwrap();
        assert_eq!(max, rat(18, 25));
        assert_eq!((l, k), (5, 2));
        assert!(ratio_bound_check(5, 5));
        assert_eq!(ratio_closed_form(5, 5), rat(9, 85));
        assert!(!ratio_bound_check(4, 2));
    }

    #[test]
    fn certificates_l3_and_l5() {
        let r3 = nonvanishing_report(3).unwrap();
        assert!(r3.passed());
        assert!(r3.nonzero[&1].contains(&3));
        let r5 = nonvanishing_report(5).unwrap();
        assert_eq!(r5.claimed_range, Some(true));
        assert_eq!(r5.monotone, Some(true));
        assert_eq!(r5.vacuous, vec![(2, 4), (4, 3), (6, 2)]);
        assert!(r5.passed());
    }
}
