//! Step-by-step replay of the two no-go arguments for the sphere at a fixed
//! spin `j`, plus the certificates behind the trivial quantization.
//!
//! Every claim is an exact equality of matrices whose entries are
//! polynomials in `a, c` (with `s` kept symbolic), or an exact
//! non-vanishing check. A failed step stops the chain.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::clebsch::beta;
use crate::exactnum::{rat, Coefficient, Rational};
use crate::harmonics::{coefficient_of, harmonic_decompose, ylm};
use crate::exactnum::GaussRational;
use crate::pbw::{self, sym, sym_rat, NcPoly, PbwPoly, SymScalar};
use crate::sphere_poly::{rot_action, Axis, Poly3, SpherePoly};
use crate::spinrep::{
    ac_const, ac_rat, j_word, matrix_element, quantize_monomial, render_ac, s2_cubic, sandwich_sum,
    spin_matrices, sym_a, sym_c, verify_bracket_identity, BracketExpr, BracketIdentity, PolyAC,
    SpinMatrix, TwoJ,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProofStep {
    pub desc: String,
    pub anchor: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NogoVerdict {
    /// Every branch ends in `s = 0` or `a = 0` against its own hypothesis.
    Contradiction,
    /// `j = 0`: the one-dimensional representation, consistent.
    ConsistentTrivial,
    /// Some step failed; the chain was aborted.
    Failed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem {
    #[serde(rename = "quadratic")]
    Quadratic,
    #[serde(rename = "cubic")]
    Cubic,
}

impl Theorem {
    pub fn id(self) -> u8 {
        match self {
            Theorem::Quadratic => 2,
            Theorem::Cubic => 5,
        }
    }

    pub fn from_id(id: u8) -> Option<Self> {
        match id {
            2 => Some(Theorem::Quadratic),
            5 => Some(Theorem::Cubic),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NogoReport {
    pub j: String,
    #[serde(skip)]
    pub two_j: TwoJ,
    pub theorem: Theorem,
    pub steps: Vec<ProofStep>,
    pub verdict: NogoVerdict,
}

impl NogoReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.verdict == Verdict::Pass)
            && match self.verdict {
                NogoVerdict::Failed => false,
                NogoVerdict::ConsistentTrivial => self.two_j.0 == 0,
                NogoVerdict::Contradiction => self.two_j.0 > 0,
            }
    }
}

struct Abort;

#[derive(Default)]
struct Chain {
    steps: Vec<ProofStep>,
}

impl Chain {
    fn check(&mut self, desc: &str, anchor: &str, ok: bool, detail: impl Into<String>) -> Result<(), Abort> {
        self.steps.push(ProofStep {
            desc: desc.to_string(),
            anchor: anchor.to_string(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            detail: detail.into(),
        });
        if ok {
            Ok(())
        } else {
            Err(Abort)
        }
    }

    fn fallible<T, E: std::fmt::Display>(&mut self, desc: &str, anchor: &str, r: Result<T, E>) -> Result<T, Abort> {
        match r {
            Ok(v) => Ok(v),
            Err(e) => {
                self.check(desc, anchor, false, e.to_string())?;
                unreachable!()
            }
        }
    }
}

fn mono(e: [u32; 3]) -> Poly3 {
    Poly3::monomial(e, Coefficient::one())
}

fn mono_s(e: [u32; 3], k: i64, s_pow: i32) -> Poly3 {
    Poly3::monomial(e, Coefficient::from_int(k).mul_s_pow(s_pow))
}

fn leaf(e: [u32; 3]) -> BracketExpr {
    BracketExpr::leaf(mono(e))
}

fn c_int(k: i64) -> Coefficient {
    Coefficient::from_int(k)
}

/// `s²S3 = {S1² − S2², S1S2} − {S2S3, S3S1}`.
pub fn identity_quadratic_first() -> BracketIdentity {
    let diff = mono([2, 0, 0]).sub(&mono([0, 2, 0]));
    BracketIdentity {
        terms: vec![
            (c_int(1), BracketExpr::pb(diff, mono([1, 1, 0]))),
            (c_int(-1), BracketExpr::pb(mono([0, 1, 1]), mono([1, 0, 1]))),
        ],
        rhs: mono_s([0, 0, 1], 1, 2),
    }
}

/// `2s²S2S3 = {S2², {S1S2, S1S3}} − ¾{S1², {S1², S2S3}}`.
pub fn identity_quadratic_second() -> BracketIdentity {
    let inner1 = BracketExpr::bracket(leaf([1, 1, 0]), leaf([1, 0, 1]));
    let inner2 = BracketExpr::bracket(leaf([2, 0, 0]), leaf([0, 1, 1]));
    BracketIdentity {
        terms: vec![
            (c_int(1), BracketExpr::bracket(leaf([0, 2, 0]), inner1)),
            (Coefficient::from_rational(rat(-3, 4)), BracketExpr::bracket(leaf([2, 0, 0]), inner2)),
        ],
        rhs: mono_s([0, 1, 1], 2, 2),
    }
}

/// The six-bracket identity for `3s⁴S3`.
pub fn identity_cubic_first() -> BracketIdentity {
    let pb = |f: [u32; 3], g: [u32; 3]| BracketExpr::pb(mono(f), mono(g));
    BracketIdentity {
        terms: vec![
            (c_int(4), pb([3, 0, 0], [0, 1, 2])),
            (c_int(-4), pb([0, 3, 0], [1, 0, 2])),
            (c_int(1), pb([1, 2, 0], [0, 3, 0])),
            (c_int(-1), pb([2, 1, 0], [3, 0, 0])),
            (c_int(-6), pb([0, 3, 0], [3, 0, 0])),
            (c_int(-3), pb([0, 1, 2], [1, 0, 2])),
        ],
        rhs: mono_s([0, 0, 1], 3, 4),
    }
}

/// `6s²S1S2S3 = {S1³, S2²S1} + {S2³, S3²S2} + {S3³, S1²S3}`.
pub fn identity_cubic_second() -> BracketIdentity {
    let pb = |f: [u32; 3], g: [u32; 3]| BracketExpr::pb(mono(f), mono(g));
    BracketIdentity {
        terms: vec![
            (c_int(1), pb([3, 0, 0], [1, 2, 0])),
            (c_int(1), pb([0, 3, 0], [0, 1, 2])),
            (c_int(1), pb([0, 0, 3], [2, 0, 1])),
        ],
        rhs: mono_s([1, 1, 1], 6, 2),
    }
}

/// The four identities in proof order.
pub fn all_identities() -> [(&'static str, BracketIdentity); 4] {
    [
        ("s^2 S3", identity_quadratic_first()),
        ("2 s^2 S2 S3", identity_quadratic_second()),
        ("3 s^4 S3", identity_cubic_first()),
        ("6 s^2 S1 S2 S3", identity_cubic_second()),
    ]
}

fn symbolic_residuals() -> &'static [Result<PbwPoly, pbw::PbwError>; 4] {
    static CACHE: OnceLock<[Result<PbwPoly, pbw::PbwError>; 4]> = OnceLock::new();
    CACHE.get_or_init(|| all_identities().map(|(_, id)| pbw::verify_symbolic(&id)))
}

/// Residual of identity `idx` with `κ` symbolic.
pub fn symbolic_residual(idx: usize) -> Result<PbwPoly, pbw::PbwError> {
    symbolic_residuals()[idx].clone()
}

fn sx(i: usize) -> NcPoly {
    NcPoly::gen(i)
}

fn sq(n: i64, d: i64) -> SymScalar {
    sym_rat(rat(n, d))
}

/// `X1X2X3 + (1/2i)(X1² − X2² + X3²)` in the enveloping algebra.
fn symbolic_x() -> NcPoly {
    let squares = sx(0).mul(&sx(0)).sub(&sx(1).mul(&sx(1))).add(&sx(2).mul(&sx(2)));
    let half_over_i = SymScalar::constant(GaussRational::new(rat(0, 1), rat(-1, 2)));
    sx(0).mul(&sx(1)).mul(&sx(2)).add(&squares.scale(&half_over_i))
}

/// Closed-form residuals with `κ` and `σ` symbolic, fully reduced, in the
/// order of [`all_identities`].
pub fn expected_symbolic(idx: usize) -> PbwPoly {
    let (a, c, k, sigma) = (sym(pbw::A), sym(pbw::C), sym(pbw::KAPPA), sym(pbw::SIGMA));
    let x3 = sx(2);
    let nc = match idx {
        0 => x3.scale(&a.pow(2).mul(&k.sub(&sq(3, 4))).sub(&sigma)),
        1 => {
            let b = sx(1).mul(&sx(2)).scale(&sq(2, 1)).sub(&sx(0).scale(&SymScalar::constant(GaussRational::i())));
            b.scale(&a.pow(3).mul(&k.sub(&sq(9, 4))).sub(&a.mul(&sigma)))
        }
        2 => {
            let a2 = a.pow(2);
            let ac = a.mul(&c);
            let p = a2.mul(&k.pow(2)).mul(&sq(3, 1))
                .add(&a2.mul(&k).mul(&sq(5, 1)))
                .add(&ac.mul(&k).mul(&sq(14, 1)))
                .add(&c.pow(2).mul(&sq(29, 3)))
                .sub(&ac.mul(&sq(14, 3)))
                .sub(&a2.mul(&sq(7, 3)));
            let cube = x3.mul(&x3).mul(&x3).scale(&a2.mul(&sq(10, 1)).add(&ac.mul(&sq(4, 1))));
            x3.scale(&p.sub(&sigma.pow(2).mul(&sq(3, 1)))).sub(&cube)
        }
        3 => {
            let inner = c.sub(&a.mul(&sq(2, 1))).add(&a.mul(&k)).sub(&sigma);
            symbolic_x().scale(&a.mul(&inner).mul(&sq(6, 1)))
        }
        _ => panic!("identity index out of range"),
    };
    pbw::reduce(&nc)
}

/// The reduced cubic constraint with `κ` symbolic.
pub fn cubic_constraint_symbolic() -> PbwPoly {
    let (a, c, k) = (sym(pbw::A), sym(pbw::C), sym(pbw::KAPPA));
    let x3 = sx(2);
    let lin = a.mul(&sq(2, 1)).sub(&c).mul(&a.add(&c)).mul(&sq(4, 3))
        .sub(&a.mul(&a.mul(&sq(7, 1)).add(&c.mul(&sq(4, 1)))).mul(&k));
    let cube = a.mul(&a.mul(&sq(10, 1)).add(&c.mul(&sq(4, 1))));
    pbw::reduce(&x3.scale(&lin).add(&x3.mul(&x3).mul(&x3).scale(&cube)))
}

/// `σ ↦ a(κ − 1/3) + 5c/3` applied to every scalar.
pub fn substitute_sigma_cubic(p: &PbwPoly) -> PbwPoly {
    let (a, c, k) = (sym(pbw::A), sym(pbw::C), sym(pbw::KAPPA));
    let js = a.mul(&k.sub(&sq(1, 3))).add(&c.mul(&sq(5, 3)));
    let values = [a, c, k, js];
    p.map_scalars(|s| s.eval(&values, |g| SymScalar::constant(g.clone())))
}

/// Whether each symbolic residual equals its closed form, plus whether the
/// first cubic residual reduces to minus the cubic constraint under the
/// cubic `s²` relation.
pub fn symbolic_checks() -> Result<[bool; 5], pbw::PbwError> {
    let mut out = [false; 5];
    for (i, slot) in out.iter_mut().take(4).enumerate() {
        *slot = symbolic_residual(i)? == expected_symbolic(i);
    }
    let cubic = symbolic_residual(2)?;
    out[4] = substitute_sigma_cubic(&cubic) == cubic_constraint_symbolic().map_scalars(|s| s.neg());
    Ok(out)
}

fn s2() -> PolyAC {
    ac_const(Coefficient::s_pow(2))
}

fn s4() -> PolyAC {
    ac_const(Coefficient::s_pow(4))
}

fn kappa(two_j: TwoJ) -> PolyAC {
    ac_rat(two_j.kappa())
}

fn q(n: i64, d: i64) -> PolyAC {
    ac_rat(rat(n, d))
}

fn subst(p: &PolyAC, a: &PolyAC, c: &PolyAC) -> PolyAC {
    p.eval(&[a.clone(), c.clone()], |k| ac_const(k.clone()))
}

fn subst_matrix(m: &SpinMatrix, a: &PolyAC, c: &PolyAC) -> SpinMatrix {
    m.map(|e| subst(e, a, c))
}

/// `p / a` when every term carries a factor of `a`.
fn div_by_a(p: &PolyAC) -> Option<PolyAC> {
    let mut out = PolyAC::zero();
    for (e, c) in p.terms() {
        if e[0] == 0 {
            return None;
        }
        out.add_term([e[0] - 1, e[1]], c);
    }
    Some(out)
}

/// `λ` with `m = λ · basis`, if it exists.
pub fn scalar_multiple(m: &SpinMatrix, basis: &SpinMatrix) -> Option<PolyAC> {
    let (i, j, b) = basis.entries().find(|(_, _, v)| !v.is_zero())?;
    if !b.is_constant() {
        return None;
    }
    let inv = b.constant_term().inv_single()?;
    let lambda = m.get(i, j).scale(&inv);
    (basis.scale(&lambda) == *m).then_some(lambda)
}

fn j3(two_j: TwoJ) -> SpinMatrix {
    spin_matrices(two_j)[2].clone()
}

/// `2J2J3 − iJ1`.
pub fn operator_b(two_j: TwoJ) -> SpinMatrix {
    let [j1, _, _] = spin_matrices(two_j);
    j_word(two_j, &[1, 2])
        .scale(&ac_rat(rat(2, 1)))
        .sub(&j1.scale(&ac_const(Coefficient::i())))
}

/// `J1J2J3 + (1/2i)(J1² − J2² + J3²)`.
pub fn operator_x(two_j: TwoJ) -> SpinMatrix {
    let squares = j_word(two_j, &[0, 0]).sub(&j_word(two_j, &[1, 1])).add(&j_word(two_j, &[2, 2]));
    let half_over_i = ac_const(Coefficient::i().scale(&rat(-1, 2)));
    j_word(two_j, &[0, 1, 2]).add(&squares.scale(&half_over_i))
}

/// `i(½ − j)√(2j)`.
pub fn expected_b_element(two_j: TwoJ) -> Coefficient {
    let j = two_j.j();
    let root = Coefficient::sqrt_rational(&(j.clone() * rat(2, 1))).expect("nonnegative");
    &Coefficient::i().scale(&(rat(1, 2) - j)) * &root
}

/// `(1/2i)(1 − j)√(j(2j − 1))`.
pub fn expected_x_element(two_j: TwoJ) -> Coefficient {
    let j = two_j.j();
    let root = Coefficient::sqrt_rational(&(j.clone() * (j.clone() * rat(2, 1) - rat(1, 1)))).expect("nonnegative");
    &Coefficient::i().scale(&((rat(1, 1) - j) * rat(-1, 2))) * &root
}

/// Closed-form residual of the first quadratic identity.
pub fn expected_quadratic_first(two_j: TwoJ) -> SpinMatrix {
    let k = kappa(two_j).sub(&q(3, 4));
    j3(two_j).scale(&sym_a().pow(2).mul(&k).sub(&s2()))
}

/// Closed-form residual of the second quadratic identity.
pub fn expected_quadratic_second(two_j: TwoJ) -> SpinMatrix {
    let k = kappa(two_j).sub(&q(9, 4));
    let lambda = sym_a().pow(3).mul(&k).sub(&sym_a().mul(&s2()));
    operator_b(two_j).scale(&lambda)
}

/// `3a²κ² + 5a²κ + 14acκ + 29c²/3 − 14ac/3 − 7a²/3`.
fn cubic_p(two_j: TwoJ) -> PolyAC {
    let (a, c, k) = (sym_a(), sym_c(), kappa(two_j));
    let a2 = a.pow(2);
    let ac = a.mul(&c);
    a2.mul(&k.pow(2)).mul(&q(3, 1))
        .add(&a2.mul(&k).mul(&q(5, 1)))
        .add(&ac.mul(&k).mul(&q(14, 1)))
        .add(&c.pow(2).mul(&q(29, 3)))
        .sub(&ac.mul(&q(14, 3)))
        .sub(&a2.mul(&q(7, 3)))
}

/// Closed-form residual of the six-bracket identity.
pub fn expected_cubic_first(two_j: TwoJ) -> SpinMatrix {
    let j3 = j3(two_j);
    let j3_cubed = j_word(two_j, &[2, 2, 2]);
    let cube_coeff = sym_a().pow(2).mul(&q(10, 1)).add(&sym_a().mul(&sym_c()).mul(&q(4, 1)));
    j3.scale(&cubic_p(two_j).sub(&s4().mul(&q(3, 1)))).sub(&j3_cubed.scale(&cube_coeff))
}

/// Closed-form residual of the three-bracket identity.
pub fn expected_cubic_second(two_j: TwoJ) -> SpinMatrix {
    let (a, c) = (sym_a(), sym_c());
    let inner = c.sub(&a.mul(&q(2, 1))).add(&a.mul(&kappa(two_j))).sub(&s2());
    operator_x(two_j).scale(&a.mul(&inner).mul(&q(6, 1)))
}

/// The left side of the reduced cubic constraint:
/// `[4/3(2a − c)(a + c) − a(7a + 4c)κ]J3 + a(10a + 4c)J3³`.
pub fn cubic_constraint(two_j: TwoJ) -> SpinMatrix {
    let (a, c) = (sym_a(), sym_c());
    let lin = a.mul(&q(2, 1)).sub(&c).mul(&a.add(&c)).mul(&q(4, 3))
        .sub(&a.mul(&a.mul(&q(7, 1)).add(&c.mul(&q(4, 1)))).mul(&kappa(two_j)));
    let cube = a.mul(&a.mul(&q(10, 1)).add(&c.mul(&q(4, 1))));
    j3(two_j).scale(&lin).add(&j_word(two_j, &[2, 2, 2]).scale(&cube))
}

/// `true` iff `n² + 2n − 12 = 0` (i.e. `j² + j − 3 = 0` with `n = 2j`) has no
/// integer root, checked through its discriminant `52`.
pub fn kappa_three_has_no_spin() -> bool {
    let disc = BigInt::from(2 * 2 + 4 * 12);
    let r = disc.sqrt();
    &r * &r != disc
}

fn render_m(m: &SpinMatrix) -> String {
    if m.is_zero() {
        "0".to_string()
    } else {
        format!("nonzero {0}x{0} matrix", m.dim())
    }
}

fn spinrep_pbw_agree(chain: &mut Chain, idx: usize, residual: &SpinMatrix, two_j: TwoJ) -> Result<(), Abort> {
    let sym = chain.fallible("symbolic residual with kappa", "pbw-symbolic-residual", symbolic_residual(idx))?;
    let ok = pbw::eval_at(&sym, two_j) == *residual;
    chain.check(
        "symbolic residual evaluated at kappa = j(j+1) equals the fixed-j residual",
        "pbw-spinrep-agreement",
        ok,
        format!("{} PBW terms", sym.terms().count()),
    )
}

fn classical_step(chain: &mut Chain, idx: usize) -> Result<(), Abort> {
    let (name, id) = &all_identities()[idx];
    let res = id.classical_residual();
    chain.check(
        &format!("classical identity for {name}"),
        "classical-identity",
        res.is_zero(),
        format!("residual {res}"),
    )
}

fn trivial_branch(chain: &mut Chain, two_j: TwoJ, idxs: &[usize]) -> Result<NogoVerdict, Abort> {
    let zero_rep = spin_matrices(two_j).iter().all(SpinMatrix::is_zero);
    chain.check("j = 0: every Q(S_i) vanishes", "trivial-representation", zero_rep, "1x1 zero matrices")?;
    for &i in idxs {
        let (name, id) = &all_identities()[i];
        let res = chain.fallible("quantum residual", "quantum-residual", verify_bracket_identity(id, two_j))?;
        chain.check(
            &format!("quantized {name} identity holds in the trivial representation"),
            "trivial-consistency",
            res.is_zero(),
            render_m(&res),
        )?;
    }
    let p0 = trivial_quantization(&SpherePoly::monomial([2, 0, 0], Coefficient::one()));
    let quad = crate::spinrep::s2_quadratic(two_j);
    chain.check(
        "Q(S_i^2) = c with s^2 = 3c, i.e. the l = 0 component s^2/3",
        "trivial-quantization",
        p0 == Coefficient::from_rational(rat(1, 3)).mul_s_pow(2) && quad == sym_c().mul(&q(3, 1)),
        format!("p0(S1^2) = {p0}"),
    )?;
    Ok(NogoVerdict::ConsistentTrivial)
}

fn nonzero_j3(chain: &mut Chain, two_j: TwoJ) -> Result<(), Abort> {
    let j3 = j3(two_j);
    let diag_nonzero = (0..two_j.dim()).any(|i| !j3.get(i, i).is_zero());
    chain.check("Q(S3) = J3 is nonzero for j > 0 (diagonal)", "j3-nonzero", diag_nonzero, format!("j = {two_j}"))
}

fn theorem2_chain(chain: &mut Chain, two_j: TwoJ) -> Result<NogoVerdict, Abort> {
    classical_step(chain, 0)?;
    classical_step(chain, 1)?;
    if two_j.0 == 0 {
        return trivial_branch(chain, two_j, &[0, 1]);
    }
    let (id1, id2) = (identity_quadratic_first(), identity_quadratic_second());
    let r1 = chain.fallible("quantum residual", "quantum-residual", verify_bracket_identity(&id1, two_j))?;
    chain.check(
        "quantized s^2 S3 identity leaves (a^2(j(j+1) - 3/4) - s^2) J3",
        "quadratic-first-residual",
        r1 == expected_quadratic_first(two_j),
        render_m(&r1.sub(&expected_quadratic_first(two_j))),
    )?;
    spinrep_pbw_agree(chain, 0, &r1, two_j)?;
    nonzero_j3(chain, two_j)?;
    let lambda1 = scalar_multiple(&r1, &j3(two_j)).expect("checked above");
    let qc1 = lambda1.add(&s2());
    chain.check(
        "hence s^2 = a^2(j(j+1) - 3/4)",
        "quadratic-constraint",
        true,
        format!("s^2 = {}", render_ac(&qc1)),
    )?;
    if two_j.0 == 1 {
        return chain
            .check("j = 1/2: the constraint forces s^2 = 0, against s > 0", "spin-half-branch", qc1.is_zero(), render_ac(&qc1))
            .map(|_| NogoVerdict::Contradiction);
    }
    let r2 = chain.fallible("quantum residual", "quantum-residual", verify_bracket_identity(&id2, two_j))?;
    chain.check(
        "quantized 2 s^2 S2 S3 identity leaves (a^3(j(j+1) - 9/4) - a s^2)(2J2J3 - iJ1)",
        "quadratic-second-residual",
        r2 == expected_quadratic_second(two_j),
        render_m(&r2.sub(&expected_quadratic_second(two_j))),
    )?;
    spinrep_pbw_agree(chain, 1, &r2, two_j)?;
    let b = operator_b(two_j);
    let elem = chain.fallible("matrix element", "b-matrix-element", matrix_element(&b, two_j, two_j.0 as i64, two_j.0 as i64 - 2))?;
    let expect = expected_b_element(two_j);
    chain.check(
        "<j,j| 2J2J3 - iJ1 |j,j-1> = i(1/2 - j) sqrt(2j), nonzero",
        "b-matrix-element",
        elem == ac_const(expect.clone()) && !expect.is_zero(),
        expect.to_string(),
    )?;
    let lambda2 = scalar_multiple(&r2, &b).expect("checked above");
    chain.check("hence a s^2 = a^3(j(j+1) - 9/4)", "quadratic-second-constraint", true, format!("{} = 0", render_ac(&lambda2)))?;
    let zero = PolyAC::zero();
    let qc1_a0 = subst(&qc1, &zero, &sym_c());
    chain.check("case a = 0: s^2 = 0, against s > 0", "case-a-zero", qc1_a0.is_zero(), render_ac(&qc1_a0))?;
    let over_a = div_by_a(&lambda2);
    let diff = over_a.as_ref().map(|d| lambda1.sub(d));
    let expect_diff = sym_a().pow(2).mul(&q(3, 2));
    chain.check(
        "case a != 0: dividing by a and comparing leaves (3/2) a^2 = 0, against a != 0",
        "case-a-nonzero",
        diff.as_ref() == Some(&expect_diff),
        diff.map(|d| render_ac(&d)).unwrap_or_else(|| "not divisible by a".into()),
    )?;
    Ok(NogoVerdict::Contradiction)
}

fn theorem5_chain(chain: &mut Chain, two_j: TwoJ) -> Result<NogoVerdict, Abort> {
    classical_step(chain, 2)?;
    classical_step(chain, 3)?;
    if two_j.0 == 0 {
        return trivial_branch(chain, two_j, &[2, 3]);
    }
    let js = s2_cubic(two_j);
    let k = kappa(two_j);
    for l in 0..3 {
        let sandwich = sandwich_sum(l, two_j);
        let jl = spin_matrices(two_j)[l].clone();
        chain.check(
            &format!("sum_i J_i J_{0} J_i = (j(j+1) - 1) J_{0}", l + 1),
            "sandwich-sum",
            sandwich == jl.scale(&k.sub(&q(1, 1))),
            "",
        )?;
        let mut lhs = jl.scale(&s2()).neg();
        for i in 0..3 {
            let mut e = [0u32; 3];
            e[i] += 2;
            e[l] += 1;
            let qm = chain.fallible("quantize", "cubic-rules", quantize_monomial(e, two_j))?;
            lhs = lhs.add(&qm);
        }
        chain.check(
            &format!("sum_i Q(S_i^2 S_{}) - s^2 J = (a(j(j+1) - 1/3) + 5c/3 - s^2) J", l + 1),
            "cubic-s2",
            lhs == jl.scale(&js.sub(&s2())),
            render_ac(&js),
        )?;
    }
    nonzero_j3(chain, two_j)?;
    let r1 = chain.fallible("quantum residual", "quantum-residual", verify_bracket_identity(&identity_cubic_first(), two_j))?;
    chain.check(
        "quantized 3 s^4 S3 identity leaves P J3 - (10a^2 + 4ac) J3^3 - 3 s^4 J3",
        "cubic-first-residual",
        r1 == expected_cubic_first(two_j),
        render_m(&r1.sub(&expected_cubic_first(two_j))),
    )?;
    spinrep_pbw_agree(chain, 2, &r1, two_j)?;
    let cc1 = cubic_constraint(two_j);
    let reduced = crate::spinrep::substitute_s2_matrix(&r1, &js);
    chain.check(
        "substituting s^2 = a(j(j+1) - 1/3) + 5c/3 gives the reduced cubic constraint",
        "cubic-constraint",
        reduced.as_ref() == Some(&cc1.neg()),
        "",
    )?;
    if two_j.0 == 1 || two_j.0 == 2 {
        let (shape, a_val, name) = if two_j.0 == 1 {
            let j3sq = j_word(two_j, &[2, 2]);
            chain.check("J3^2 = I/4", "spin-half-branch", j3sq == SpinMatrix::identity(2).scale(&q(1, 4)), "")?;
            (sym_a().add(&sym_c().mul(&q(4, 1))).pow(2).mul(&q(-1, 12)), sym_c().mul(&q(-4, 1)), "a = -4c")
        } else {
            let j3cube = j_word(two_j, &[2, 2, 2]);
            chain.check("J3^3 = J3", "spin-one-branch", j3cube == j3(two_j), "")?;
            (sym_a().add(&sym_c()).pow(2).mul(&q(-4, 3)), sym_c().neg(), "a = -c")
        };
        let lambda = scalar_multiple(&cc1, &j3(two_j));
        chain.check(
            &format!("the constraint is a square multiple of J3, forcing {name}"),
            "cubic-square",
            lambda.as_ref() == Some(&shape),
            lambda.map(|l| render_ac(&l)).unwrap_or_default(),
        )?;
        let s_forced = subst(&js, &a_val, &sym_c());
        chain.check(
            &format!("{name} in s^2 = a(j(j+1) - 1/3) + 5c/3 gives s^2 = 0, against s > 0"),
            "cubic-low-spin",
            s_forced.is_zero(),
            render_ac(&s_forced),
        )?;
        return Ok(NogoVerdict::Contradiction);
    }
    let r2 = chain.fallible("quantum residual", "quantum-residual", verify_bracket_identity(&identity_cubic_second(), two_j))?;
    chain.check(
        "quantized 6 s^2 S1 S2 S3 identity leaves 6a(c - 2a + a j(j+1) - s^2) X",
        "cubic-second-residual",
        r2 == expected_cubic_second(two_j),
        render_m(&r2.sub(&expected_cubic_second(two_j))),
    )?;
    spinrep_pbw_agree(chain, 3, &r2, two_j)?;
    let x = operator_x(two_j);
    let elem = chain.fallible("matrix element", "x-matrix-element", matrix_element(&x, two_j, two_j.0 as i64 - 4, two_j.0 as i64))?;
    let expect = expected_x_element(two_j);
    chain.check(
        "<j,j-2| X |j,j> = (1/2i)(1 - j) sqrt(j(2j - 1)), nonzero",
        "x-matrix-element",
        elem == ac_const(expect.clone()) && !expect.is_zero(),
        expect.to_string(),
    )?;
    let (a, c, zero) = (sym_a(), sym_c(), PolyAC::zero());
    let cc1_a0 = subst_matrix(&cc1, &zero, &c);
    chain.check(
        "case a = 0: the constraint reads -(4/3) c^2 J3 = 0, so c = 0",
        "case-a-zero",
        cc1_a0 == j3(two_j).scale(&c.pow(2).mul(&q(-4, 3))),
        "",
    )?;
    let s_a0 = subst(&js, &zero, &zero);
    chain.check("then s^2 = 0, against s > 0", "case-a-zero", s_a0.is_zero(), render_ac(&s_a0))?;
    let cc2 = c.sub(&a.mul(&q(2, 1))).add(&a.mul(&k));
    let diff = js.sub(&cc2);
    chain.check(
        "case a != 0: s^2 = c - 2a + a j(j+1); subtracting gives 5a/3 + 2c/3 = 0, so c = -5a/2",
        "case-a-nonzero",
        diff == a.mul(&q(5, 3)).add(&c.mul(&q(2, 3))),
        render_ac(&diff),
    )?;
    let cc1_sub = subst_matrix(&cc1, &a, &a.mul(&q(-5, 2)));
    let k3 = two_j.kappa() - rat(3, 1);
    chain.check(
        "then the constraint reads 3a^2(j^2 + j - 3) J3 = 0",
        "cubic-final",
        cc1_sub == j3(two_j).scale(&a.pow(2).mul(&ac_rat(k3.clone() * rat(3, 1)))),
        "",
    )?;
    chain.check(
        "j^2 + j - 3 != 0 for every half-integer j (discriminant 13 is not a square), so a = 0, against a != 0",
        "cubic-final",
        !k3.is_zero() && kappa_three_has_no_spin(),
        format!("j^2 + j - 3 = {k3}"),
    )?;
    Ok(NogoVerdict::Contradiction)
}

fn run(two_j: TwoJ, theorem: Theorem) -> NogoReport {
    let mut chain = Chain::default();
    let outcome = match theorem {
        Theorem::Quadratic => theorem2_chain(&mut chain, two_j),
        Theorem::Cubic => theorem5_chain(&mut chain, two_j),
    };
    NogoReport {
        j: two_j.to_string(),
        two_j,
        theorem,
        steps: chain.steps,
        verdict: outcome.unwrap_or(NogoVerdict::Failed),
    }
}

/// The quadratic argument at spin `j`.
pub fn run_theorem2(two_j: TwoJ) -> NogoReport {
    run(two_j, Theorem::Quadratic)
}

/// The cubic argument at spin `j`.
pub fn run_theorem5(two_j: TwoJ) -> NogoReport {
    run(two_j, Theorem::Cubic)
}

/// Both arguments for every `j ≤ jmax`, in `(j, theorem)` order.
pub fn run_sweep(two_jmax: u32) -> Vec<NogoReport> {
    let jobs: Vec<(TwoJ, Theorem)> = TwoJ::up_to(two_jmax)
        .flat_map(|j| [(j, Theorem::Quadratic), (j, Theorem::Cubic)])
        .collect();
    crate::exec::map(&jobs, |&(j, t)| run(j, t))
}

/// The `l = 0` component `p₀` of `p`.
pub fn trivial_quantization(p: &SpherePoly) -> Coefficient {
    harmonic_decompose(p).component(0).coeff(&[0, 0, 0])
}

#[derive(Clone, Debug, Serialize)]
pub struct IrreducibilityReport {
    pub l: u32,
    /// `(m, c)` with `(X1 + iX2)·Y_l^m = c Y_l^(m+1)`, or the lowering
    /// counterpart, whichever the bracket orientation produces.
    pub ladder: Vec<(i64, String)>,
    pub span_dim: usize,
    pub passed: bool,
}

/// Certifies that brackets with `H1` span `H_l` by exhibiting every basis
/// direction: `X3` fixes `Y_l^m` with eigenvalue `−im`, and one ladder
/// combination shifts `m` with a coefficient of modulus `β_{l,m}`.
pub fn adjoint_irreducibility(l: u32) -> IrreducibilityReport {
    let li = l as i64;
    let mut reached = std::collections::BTreeSet::new();
    let mut ladder = Vec::new();
    let mut ok = true;
    for m in -li..=li {
        let y = ylm(l, m as i32).expect("valid order");
        let r3 = rot_action(Axis::X3, &y.poly);
        match coefficient_of(&r3, &y) {
            Some(c) if c == Coefficient::i().scale_int(-m) => {
                if m != 0 {
                    reached.insert(m);
                }
            }
            _ => ok = false,
        }
        if m == li {
            continue;
        }
        let r1 = rot_action(Axis::X1, &y.poly);
        let r2 = rot_action(Axis::X2, &y.poly);
        let up = ylm(l, (m + 1) as i32).expect("valid order");
        let hit = [Coefficient::i(), Coefficient::i().scale_int(-1)].into_iter().find_map(|w| {
            let comb = &r1 + &r2.scale(&w);
            coefficient_of(&comb, &up).filter(|c| !c.is_zero())
        });
        match hit {
            Some(c) => {
                let b = beta(l, m);
                let modulus_ok = (&c * &c.conj()) == (&b * &b);
                ok &= modulus_ok && !b.is_zero();
                reached.insert(m + 1);
                ladder.push((m, c.to_string()));
            }
            None => ok = false,
        }
    }
    let span_dim = reached.len();
    let expect = if l == 0 { 0 } else { 2 * l as usize + 1 };
    if l == 0 {
        let y = ylm(0, 0).expect("valid order");
        ok &= Axis::ALL.iter().all(|&ax| rot_action(ax, &y.poly).is_zero());
    }
    IrreducibilityReport { l, ladder, span_dim, passed: ok && span_dim == expect }
}

/// Whether `κ − 3` vanishes for some `2j ≤ n_max`; always `false`.
pub fn kappa_three_vanishes_upto(n_max: u32) -> bool {
    TwoJ::up_to(n_max).any(|t| (t.kappa() - Rational::from_integer(3.into())).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold_classically() {
        for (name, id) in all_identities() {
            assert!(id.classical_residual().is_zero(), "{name}");
        }
    }

    #[test]
    fn low_spin_verdicts() {
        for t in 0..=4 {
            let tj = TwoJ(t);
            for r in [run_theorem2(tj), run_theorem5(tj)] {
                let failed: Vec<_> = r.steps.iter().filter(|s| s.verdict == Verdict::Fail).collect();
                assert!(r.passed(), "j = {tj}, {:?}: {failed:?}", r.theorem);
                let expect = if t == 0 { NogoVerdict::ConsistentTrivial } else { NogoVerdict::Contradiction };
                assert_eq!(r.verdict, expect);
            }
        }
    }

    #[test]
    fn spin_half_stops_early() {
        let r = run_theorem2(TwoJ(1));
        assert_eq!(r.steps.last().unwrap().anchor, "spin-half-branch");
        let r = run_theorem5(TwoJ(2));
        assert_eq!(r.steps.last().unwrap().anchor, "cubic-low-spin");
    }

    #[test]
    fn matrix_elements_small() {
        assert_eq!(expected_b_element(TwoJ(2)), &Coefficient::i().scale(&rat(-1, 2)) * &Coefficient::sqrt_int(2));
        assert!(expected_x_element(TwoJ(2)).is_zero());
    }

    #[test]
    fn trivial_component() {
        let third = Coefficient::from_rational(rat(1, 3)).mul_s_pow(2);
        for ax in Axis::ALL {
            let p = SpherePoly::coord(ax).pow(2);
            assert_eq!(trivial_quantization(&p), third);
        }
        assert_eq!(trivial_quantization(&SpherePoly::one()), Coefficient::one());
        let f = SpherePoly::monomial([2, 1, 0], Coefficient::one());
        let g = SpherePoly::monomial([0, 1, 3], Coefficient::from_int(2));
        assert!(trivial_quantization(&f.poisson(&g)).is_zero());
    }

    #[test]
    fn irreducibility_small() {
        for l in 0..=4 {
            let r = adjoint_irreducibility(l);
            assert!(r.passed, "l = {l}: {r:?}");
        }
        assert_eq!(adjoint_irreducibility(1).span_dim, 3);
        assert_eq!(adjoint_irreducibility(4).span_dim, 9);
    }

    #[test]
    fn symbolic_residuals_match_closed_forms() {
        assert_eq!(symbolic_checks().unwrap(), [true; 5]);
    }

    #[test]
    fn no_spin_has_kappa_three() {
        assert!(kappa_three_has_no_spin());
        assert!(!kappa_three_vanishes_upto(40));
    }
}
