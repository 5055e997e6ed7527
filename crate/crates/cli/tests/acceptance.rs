use std::process::ExitCode;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nogo_core::clebsch::{
    bracket_coeffs_direct, bracket_coeffs_recursion, cg, nonvanishing_report, ratio_bound_check, ratio_grid_max,
};
use nogo_core::exactnum::{rat, Coefficient};
use nogo_core::exec;
use nogo_core::nogo::{
    all_identities, expected_b_element, expected_cubic_first, expected_cubic_second, expected_quadratic_first,
    expected_quadratic_second, expected_x_element, operator_b, operator_x, run_sweep, symbolic_checks,
    trivial_quantization, NogoVerdict,
};
use nogo_core::pbw;
use nogo_core::selftest::random_sphere_poly;
use nogo_core::sphere_poly::{Axis, SpherePoly};
use nogo_core::spinrep::{
    ac_const, derive_123_from_vn3, derive_iji_from_vn3, derive_pr_from_ii, equivariance_holds, matrix_element,
    monomials_up_to, projector_vn_forms, quantize_monomial, verify_bracket_identity, SpinMatrix, TwoJ, VnKind,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn spins() -> Vec<TwoJ> {
    (1..=12).map(TwoJ).collect()
}

fn classical_identities() -> Outcome {
    for (name, id) in all_identities() {
        let res = id.classical_residual();
        ensure(res.is_zero(), || format!("{name}: residual {res}"))?;
    }
    Ok("4 identities".into())
}

fn quantum_residuals() -> Outcome {
    type Expect = fn(TwoJ) -> SpinMatrix;
    let expected: [Expect; 4] =
        [expected_quadratic_first, expected_quadratic_second, expected_cubic_first, expected_cubic_second];
    let ids = all_identities();
    let cases: Vec<(TwoJ, usize)> = spins().into_iter().flat_map(|t| (0..4).map(move |i| (t, i))).collect();
    let results = exec::map(&cases, |&(t, i)| {
        verify_bracket_identity(&ids[i].1, t).map(|m| m == expected[i](t)).unwrap_or(false)
    });
    for ((t, i), ok) in cases.iter().zip(results) {
        ensure(ok, || format!("{} at j = {t}", ids[*i].0))?;
    }
    let symbolic = symbolic_checks().map_err(|e| e.to_string())?;
    ensure(symbolic.iter().all(|&b| b), || format!("symbolic-j checks {symbolic:?}"))?;
    Ok(format!("{} (j, identity) pairs, symbolic-j residuals", cases.len()))
}

fn matrix_elements() -> Outcome {
    let mut n = 0;
    for t in spins() {
        let top = t.0 as i64;
        let b = matrix_element(&operator_b(t), t, top, top - 2).map_err(|e| e.to_string())?;
        ensure(b == ac_const(expected_b_element(t)), || format!("B element at j = {t}: {b:?}"))?;
        n += 1;
        if t.0 >= 2 {
            let x = matrix_element(&operator_x(t), t, top - 4, top).map_err(|e| e.to_string())?;
            ensure(x == ac_const(expected_x_element(t)), || format!("X element at j = {t}: {x:?}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} elements"))
}

fn nogo_verdicts() -> Outcome {
    let reports = run_sweep(12);
    ensure(reports.len() == 26, || format!("{} reports", reports.len()))?;
    for r in &reports {
        let want = if r.two_j.0 == 0 { NogoVerdict::ConsistentTrivial } else { NogoVerdict::Contradiction };
        ensure(r.passed() && r.verdict == want, || format!("j = {}, theorem {}: {:?}", r.j, r.theorem.id(), r.verdict))?;
    }
    let steps: usize = reports.iter().map(|r| r.steps.len()).sum();
    Ok(format!("{} runs, {steps} proof steps", reports.len()))
}

fn recursion_oracle() -> Outcome {
    let rows: Vec<(u32, u32)> = (1..=8).flat_map(|l| (1..=2 * l).map(move |j| (l, j))).collect();
    let ok = exec::map(&rows, |&(l, j)| {
        match (bracket_coeffs_recursion(l, j), bracket_coeffs_direct(l, l as i64 - j as i64, l as i64)) {
            (Ok(r), Ok(d)) => r.y == d,
            _ => false,
        }
    });
    for (row, good) in rows.iter().zip(ok) {
        ensure(good, || format!("(l, j) = {row:?}"))?;
    }
    Ok(format!("{} rows", rows.len()))
}

fn certificates() -> Outcome {
    let reports = exec::map(&(1..=9u32).collect::<Vec<_>>(), |&l| nonvanishing_report(l));
    for (l, r) in (1..=9u32).zip(reports) {
        let r = r.map_err(|e| format!("l = {l}: {e}"))?;
        ensure(r.top_nonzero, || format!("top coefficient at l = {l}"))?;
        ensure(r.vanishing, || format!("vanishing range at l = {l}"))?;
        if (5..=8).contains(&l) {
            ensure(r.claimed_range == Some(true), || format!("claimed range at l = {l}"))?;
        }
    }
    Ok("l <= 9".into())
}

fn ratio_bound() -> Outcome {
    let grid: Vec<(u32, u32)> =
        (5..=40u32).flat_map(|l| (2..=l).filter(move |&k| 2 * k + 1 >= l).map(move |k| (l, k))).collect();
    let ok = exec::map(&grid, |&(l, k)| ratio_bound_check(l, k));
    for (p, good) in grid.iter().zip(ok) {
        ensure(good, || format!("(l, k) = {p:?}"))?;
    }
    let (max, l, k) = ratio_grid_max(40).ok_or("empty grid")?;
    ensure(max == rat(18, 25), || format!("maximum {max} at ({l}, {k})"))?;
    Ok(format!("{} points, maximum {max} at l = {l}, k = {k}", grid.len()))
}

fn trivial_quantization_checks() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 0..200 {
        let f = random_sphere_poly(&mut rng, 6, 5);
        let g = random_sphere_poly(&mut rng, 6, 5);
        let v = trivial_quantization(&f.poisson(&g));
        ensure(v.is_zero(), || format!("pair {n}: {f}, {g} -> {v}"))?;
    }
    let third = Coefficient::from_rational(rat(1, 3)).mul_s_pow(2);
    for ax in Axis::ALL {
        let sq = SpherePoly::coord(ax).pow(2);
        ensure(trivial_quantization(&sq) == third, || format!("square of axis {ax:?}"))?;
    }
    Ok("200 pairs, 3 squares".into())
}

fn clebsch_orthogonality() -> Result<usize, String> {
    let mut n = 0;
    for l1 in 0..=4u32 {
        for l2 in 0..=4u32 {
            for big_l in l1.abs_diff(l2)..=l1 + l2 {
                for big_l2 in l1.abs_diff(l2)..=l1 + l2 {
                    let m_max = big_l.min(big_l2) as i64;
                    for big_m in -m_max..=m_max {
                        let mut sum = Coefficient::zero();
                        for m1 in -(l1 as i64)..=l1 as i64 {
                            let m2 = big_m - m1;
                            if m2.unsigned_abs() <= l2 as u64 {
                                let x = cg(l1, l2, m1, m2, big_l, big_m).map_err(|e| e.to_string())?;
                                let y = cg(l1, l2, m1, m2, big_l2, big_m).map_err(|e| e.to_string())?;
                                sum = &sum + &(&x.value * &y.value);
                            }
                        }
                        let want = if big_l == big_l2 { Coefficient::one() } else { Coefficient::zero() };
                        ensure(sum == want, || format!("CG ({l1},{l2}) L = {big_l},{big_l2} M = {big_m}"))?;
                        n += 1;
                    }
                }
            }
        }
    }
    Ok(n)
}

fn structural() -> Outcome {
    let orth = clebsch_orthogonality()?;

    let all: Vec<TwoJ> = (0..=12).map(TwoJ).collect();
    let monos = monomials_up_to(3);
    let cases: Vec<(TwoJ, [u32; 3])> = all.iter().flat_map(|&t| monos.iter().map(move |&e| (t, e))).collect();
    let eq = exec::map(&cases, |&(t, e)| equivariance_holds(e, t).unwrap_or(false));
    for (c, ok) in cases.iter().zip(eq) {
        ensure(ok, || format!("equivariance {c:?}"))?;
    }

    let q = |e: [u32; 3], t: TwoJ| quantize_monomial(e, t).map_err(|e| e.to_string());
    for &t in &all {
        for i in 0..3 {
            for l in 0..3 {
                if i == l {
                    continue;
                }
                let mut e = [0; 3];
                e[i] += 1;
                e[l] += 1;
                ensure(derive_pr_from_ii(l, i, t).map_err(|e| e.to_string())? == q(e, t)?, || {
                    format!("mixed quadratic rule ({l}, {i}) at j = {t}")
                })?;
                let mut e = [0; 3];
                e[i] = 2;
                e[l] = 1;
                ensure(derive_iji_from_vn3(i, l, t).map_err(|e| e.to_string())? == q(e, t)?, || {
                    format!("mixed cubic rule ({i}, {l}) at j = {t}")
                })?;
            }
        }
        ensure(derive_123_from_vn3(t).map_err(|e| e.to_string())? == q([1, 1, 1], t)?, || {
            format!("S1 S2 S3 rule at j = {t}")
        })?;
        for &e in &monos {
            let kind = match e.iter().sum::<u32>() {
                2 => VnKind::Quadratic,
                3 => VnKind::Cubic,
                _ => continue,
            };
            ensure(projector_vn_forms(kind, e, t).map_err(|e| e.to_string())? == q(e, t)?, || {
                format!("projector form {e:?} at j = {t}")
            })?;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0xbeef);
    for n in 0..100 {
        let p = pbw::random_nc(&mut rng, 4, 4);
        let r = pbw::reduce(&p);
        for t in 1..=4 {
            ensure(pbw::eval_at(&r, TwoJ(t)) == pbw::eval_nc(&p, TwoJ(t)), || format!("pbw input {n} at 2j = {t}"))?;
        }
    }
    Ok(format!("{orth} CG sums, {} equivariance cases, derived and projector rules, 100 pbw inputs", cases.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("classical identities", classical_identities),
        ("quantum residuals for j = 1/2 .. 6", quantum_residuals),
        ("matrix elements", matrix_elements),
        ("no-go verdicts up to j = 6", nogo_verdicts),
        ("recursion equals direct decomposition, l <= 8", recursion_oracle),
        ("non-vanishing certificates", certificates),
        ("ratio bound on l <= 40", ratio_bound),
        ("trivial quantization", trivial_quantization_checks),
        ("structural certificates", structural),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}; {secs:.2}s)", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({why}; {secs:.2}s)", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
