//! Seeded randomized property suites shared by the test targets and the
//! `selftest` command.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clebsch::{cg, product_decompose};
use crate::exactnum::{rat, Coefficient, GaussRational, Rational};
use crate::exec;
use crate::harmonics::{component_by_projection, harmonic_decompose, ylm};
use crate::nogo::trivial_quantization;
use crate::pbw::{self, Strategy};
use crate::sphere_poly::{canonicalize, Poly3, SpherePoly};
use crate::spinrep::{representative_consistency, s2_cubic, s2_quadratic, substitute_s2_matrix, TwoJ};

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Suite {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Self { name, cases: 0, failures: Vec::new() }
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport { name: self.name.to_string(), cases: self.cases, failures: self.failures }
    }
}

const SQUAREFREE: [u64; 5] = [1, 2, 3, 5, 6];

/// Small Gaussian rational times an optional square root.
pub fn random_coefficient(rng: &mut ChaCha8Rng) -> Coefficient {
    let re = rat(rng.gen_range(-6..=6), rng.gen_range(1..=4));
    let im = if rng.gen_bool(0.3) { rat(rng.gen_range(-3..=3), rng.gen_range(1..=3)) } else { Rational::from_integer(0.into()) };
    let g = Coefficient::from_gauss(GaussRational::new(re, im));
    let root = SQUAREFREE[rng.gen_range(0..SQUAREFREE.len())];
    &g * &Coefficient::sqrt_int(root)
}

/// Random representative of degree at most `max_deg` with rational
/// coefficients.
pub fn random_poly3(rng: &mut ChaCha8Rng, max_deg: u32, max_terms: usize) -> Poly3 {
    let mut p = Poly3::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let d = rng.gen_range(0..=max_deg);
        let a = rng.gen_range(0..=d);
        let b = rng.gen_range(0..=d - a);
        let c = Coefficient::from_rational(rat(rng.gen_range(-5..=5), rng.gen_range(1..=3)));
        p = p.add(&Poly3::monomial([a, b, d - a - b], c));
    }
    p
}

pub fn random_sphere_poly(rng: &mut ChaCha8Rng, max_deg: u32, max_terms: usize) -> SpherePoly {
    canonicalize(&random_poly3(rng, max_deg, max_terms))
}

fn exactnum_suite(seed: u64, n: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = Suite::new("exactnum");
    for _ in 0..n {
        let (x, y, z) = (random_coefficient(&mut rng), random_coefficient(&mut rng), random_coefficient(&mut rng));
        s.case(&(&x * &y) * &z == &x * &(&y * &z), || format!("associativity: {x}, {y}, {z}"));
        s.case(&x * &(&y + &z) == &(&x * &y) + &(&x * &z), || format!("distributivity: {x}, {y}, {z}"));
        s.case(&x * &y == &y * &x, || format!("commutativity: {x}, {y}"));
        s.case(&(&x + &y) - &y == x, || format!("subtraction: {x}, {y}"));
        let q = rat(rng.gen_range(1..=200), rng.gen_range(1..=50));
        let r = Coefficient::sqrt_rational(&q).expect("positive");
        s.case(&r * &r == Coefficient::from_rational(q.clone()), || format!("sqrt({q})^2"));
        if !x.is_zero() && x.is_single_term() {
            let inv = x.inv_single().expect("single term");
            s.case((&x * &inv).is_one(), || format!("inverse of {x}"));
        }
    }
    s.finish()
}

fn poisson_suite(seed: u64, n: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = Suite::new("poisson");
    for _ in 0..n {
        let f = random_sphere_poly(&mut rng, 3, 3);
        let g = random_sphere_poly(&mut rng, 3, 3);
        let h = random_sphere_poly(&mut rng, 2, 3);
        let fg = f.poisson(&g);
        s.case(fg == -g.poisson(&f), || format!("antisymmetry: {f}, {g}"));
        let leibniz = &(&f.poisson(&g) * &h) + &(&g * &f.poisson(&h));
        s.case(f.poisson(&(&g * &h)) == leibniz, || format!("leibniz: {f}, {g}, {h}"));
        let jacobi = &(&f.poisson(&g.poisson(&h)) + &g.poisson(&h.poisson(&f))) + &h.poisson(&f.poisson(&g));
        s.case(jacobi.is_zero(), || format!("jacobi: {f}, {g}, {h}"));
        s.case(trivial_quantization(&fg).is_zero(), || format!("zero mean bracket: {f}, {g}"));
    }
    s.finish()
}

fn harmonics_suite(seed: u64, n: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = Suite::new("harmonics");
    for _ in 0..n {
        let p = random_sphere_poly(&mut rng, 4, 4);
        let dec = harmonic_decompose(&p);
        s.case(dec.reconstruct() == p, || format!("reconstruct: {p}"));
        for l in 0..=4 {
            let oracle = component_by_projection(&p, l);
            s.case(dec.component(l) == oracle, || format!("component {l} of {p}"));
        }
    }
    s.finish()
}

fn clebsch_suite(seed: u64, n: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = Suite::new("clebsch");
    for _ in 0..n {
        let l1 = rng.gen_range(0..=3u32);
        let l2 = rng.gen_range(0..=3u32);
        let m1 = rng.gen_range(-(l1 as i64)..=l1 as i64);
        let m2 = rng.gen_range(-(l2 as i64)..=l2 as i64);
        let prod = &ylm(l1, m1 as i32).expect("valid").poly * &ylm(l2, m2 as i32).expect("valid").poly;
        let expect = product_decompose(l1, m1, l2, m2).expect("valid");
        let dec = harmonic_decompose(&prod);
        let ok = (0..=l1 + l2).all(|big_l| {
            let want = match expect.get(&big_l) {
                Some(c) => ylm(big_l, (m1 + m2) as i32).expect("valid").poly.scale(c),
                None => SpherePoly::zero(),
            };
            dec.component(big_l) == want
        });
        s.case(ok, || format!("product Y({l1},{m1}) Y({l2},{m2})"));
        let big_l = rng.gen_range(l1.abs_diff(l2)..=l1 + l2);
        let big_l2 = rng.gen_range(l1.abs_diff(l2)..=l1 + l2);
        let big_m = rng.gen_range(-(big_l.min(big_l2) as i64)..=big_l.min(big_l2) as i64);
        let mut sum = Coefficient::zero();
        for a in -(l1 as i64)..=l1 as i64 {
            let b = big_m - a;
            if b.unsigned_abs() > l2 as u64 {
                continue;
            }
            let x = cg(l1, l2, a, b, big_l, big_m).expect("valid");
            let y = cg(l1, l2, a, b, big_l2, big_m).expect("valid");
            sum = &sum + &(&x.value * &y.value);
        }
        let want = if big_l == big_l2 { Coefficient::one() } else { Coefficient::zero() };
        s.case(sum == want, || format!("orthogonality ({l1},{l2}) L={big_l},{big_l2} M={big_m}"));
    }
    s.finish()
}

fn spinrep_suite(seed: u64, n: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = Suite::new("spinrep");
    let sphere = Poly3::monomial([0, 0, 0], Coefficient::s_pow(2))
        .sub(&Poly3::monomial([2, 0, 0], Coefficient::one()))
        .sub(&Poly3::monomial([0, 2, 0], Coefficient::one()))
        .sub(&Poly3::monomial([0, 0, 2], Coefficient::one()));
    for _ in 0..n {
        let p = random_poly3(&mut rng, 3, 4);
        let two_j = TwoJ(rng.gen_range(0..=4));
        let linear = rng.gen_bool(0.5);
        let r = if linear {
            let i = rng.gen_range(0..3);
            Poly3::var(i).scale(&Coefficient::from_int(rng.gen_range(1..=4)))
        } else {
            Poly3::constant(Coefficient::from_int(rng.gen_range(1..=4)))
        };
        let other = p.add(&sphere.mul(&r));
        let s2 = if linear { s2_cubic(two_j) } else { s2_quadratic(two_j) };
        let ok = representative_consistency(&p, &other, two_j)
            .ok()
            .and_then(|m| substitute_s2_matrix(&m, &s2))
            .is_some_and(|m| m.is_zero());
        s.case(ok, || format!("representatives at 2j = {}: {p:?} + (s^2 - |S|^2) {r:?}", two_j.0));
    }
    s.finish()
}

fn pbw_suite(seed: u64, n: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = Suite::new("pbw");
    for _ in 0..n {
        let p = pbw::random_nc(&mut rng, 4, 4);
        let base = pbw::reduce(&p);
        let right = pbw::reduce_with_strategy(&p, &mut Strategy::Rightmost);
        let random = pbw::reduce_with_strategy(&p, &mut Strategy::random(rng.gen()));
        s.case(base == right && base == random, || format!("order independence: {p:?}"));
        let two_j = TwoJ(rng.gen_range(1..=4));
        s.case(pbw::eval_at(&base, two_j) == pbw::eval_nc(&p, two_j), || format!("evaluation at 2j = {}: {p:?}", two_j.0));
    }
    s.finish()
}

/// Runs every suite with `n` cases each; suites run in the current
/// execution mode.
pub fn run_all(seed: u64, n: usize) -> Vec<SuiteReport> {
    type SuiteFn = fn(u64, usize) -> SuiteReport;
    let suites: [SuiteFn; 6] = [exactnum_suite, poisson_suite, harmonics_suite, clebsch_suite, spinrep_suite, pbw_suite];
    let seeded: Vec<(u64, SuiteFn)> = suites.iter().enumerate().map(|(i, f)| (seed.wrapping_add(i as u64), *f)).collect();
    exec::map(&seeded, |&(sd, f)| f(sd, n))
}
