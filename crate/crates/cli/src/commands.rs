//! Command definitions and dispatch.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use nogo_core::clebsch::{
    bracket_coeffs_direct, bracket_coeffs_general, bracket_coeffs_recursion, cg, closed_forms_agree,
    nonvanishing_report, ratio_bound_check, ratio_grid_max,
};
use nogo_core::exactnum::rat;
use nogo_core::exec;
use nogo_core::harmonics::{harmonic_decompose, orthogonal_to_lower_degrees};
use nogo_core::nogo::{
    adjoint_irreducibility, all_identities, run_sweep, run_theorem2, run_theorem5, symbolic_checks, NogoReport,
    NogoVerdict, Theorem,
};
use nogo_core::selftest;
use nogo_core::sphere_poly::poisson;
use nogo_core::spinrep::TwoJ;

use crate::expr::{eval_sphere, parse};
use crate::report::{Report, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "s2nogo", version, about = "Exact verification of quantization no-go computations on the two-sphere")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Run sweeps on the calling thread only.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical Poisson bracket of two expressions.
    Bracket { f: String, g: String },
    /// Harmonic decomposition of an expression.
    Hdecomp { expr: String },
    /// Clebsch–Gordan coefficient <l1 l2 m1 m2 | L M>.
    #[command(allow_negative_numbers = true)]
    Cg { l1: u32, l2: u32, m1: i64, m2: i64, l: u32, m: i64 },
    /// Recursion versus direct bracket coefficients of Y_l^(l-j) and Y_l^l.
    Ylbracket {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        j: u32,
    },
    /// Checks the classical bracket identities, or LHS = RHS on the sphere.
    VerifyClassical {
        #[arg(long)]
        theorem: Option<u8>,
        lhs: Option<String>,
        rhs: Option<String>,
    },
    /// Runs one no-go argument at a fixed spin.
    VerifyQuantum {
        #[arg(long)]
        j: TwoJ,
        #[arg(long)]
        theorem: u8,
    },
    /// Runs both no-go arguments for j = 0, 1/2, ..., jmax.
    Nogo {
        #[arg(long, default_value = "6")]
        jmax: TwoJ,
    },
    /// Recursion/oracle agreement, non-vanishing and ratio certificates.
    Appendixb {
        #[arg(long, default_value_t = 8)]
        lmax: u32,
        /// Upper l for the top-coefficient certificate.
        #[arg(long, default_value_t = 9)]
        cert_lmax: u32,
        /// Upper l for the ratio grid.
        #[arg(long, default_value_t = 40)]
        ratio_lmax: u32,
        /// Upper l for the all-orders recursion check.
        #[arg(long, default_value_t = 5)]
        general_lmax: u32,
    },
    /// Randomized property suites and the symbolic residual checks.
    Selftest {
        #[arg(long, default_value_t = 20240611)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        cases: usize,
    },
}

/// A command's report plus its plain-text rendering.
pub struct Outcome {
    pub report: Report,
    pub text: String,
    pub input_error: bool,
}

impl Outcome {
    fn from_report(report: Report) -> Self {
        let text = report.to_text();
        Self { report, text, input_error: false }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => self.report.to_json() + "\n",
        }
    }

    /// 0 when every step passed, 2 on invalid input, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.input_error {
            2
        } else if self.report.passed() {
            0
        } else {
            1
        }
    }
}

fn failure(command: &str, params: serde_json::Value, anchor: &str, err: impl ToString) -> Outcome {
    let msg = err.to_string();
    let report = Report::new(command, params, vec![Step::new("input", anchor, false, msg.clone())], None);
    Outcome { report, text: format!("error: {msg}\n"), input_error: true }
}

fn bracket(f: &str, g: &str) -> Outcome {
    let params = json!({ "f": f, "g": g });
    let parsed = parse(f).and_then(|a| parse(g).map(|b| (a, b)));
    let (a, b) = match parsed {
        Ok(p) => p,
        Err(e) => return failure("bracket", params, "parse", e),
    };
    match eval_sphere(&a).and_then(|x| eval_sphere(&b).map(|y| (x, y))) {
        Ok((x, y)) => {
            let v = poisson(&x, &y).to_string();
            let report = Report::new("bracket", params, vec![Step::new("Poisson bracket", "bracket", true, v.clone())], None);
            Outcome { report, text: v + "\n", input_error: false }
        }
        Err(e) => failure("bracket", params, "eval", e),
    }
}

fn hdecomp(src: &str) -> Outcome {
    let params = json!({ "expr": src });
    let p = match parse(src).map_err(|e| e.to_string()).and_then(|e| eval_sphere(&e).map_err(|e| e.to_string())) {
        Ok(p) => p,
        Err(e) => return failure("hdecomp", params, "parse", e),
    };
    let dec = harmonic_decompose(&p);
    let mut steps = Vec::new();
    let mut text = String::new();
    for (l, comp) in dec.components() {
        text.push_str(&format!("l={l}: {comp}\n"));
        steps.push(Step::new(format!("component l = {l}"), "hdecomp", true, comp.to_string()));
    }
    if dec.components().is_empty() {
        text.push_str("0\n");
    }
    let ok = dec.reconstruct() == p;
    steps.push(Step::new("components sum to the input", "hdecomp-reconstruct", ok, ""));
    Outcome { report: Report::new("hdecomp", params, steps, None), text, input_error: false }
}

fn cg_command(l1: u32, l2: u32, m1: i64, m2: i64, l: u32, m: i64) -> Outcome {
    let params = json!({ "l1": l1, "l2": l2, "m1": m1, "m2": m2, "L": l, "M": m });
    match cg(l1, l2, m1, m2, l, m) {
        Ok(v) => {
            let s = v.to_string();
            let report = Report::new("cg", params, vec![Step::new("Clebsch-Gordan coefficient", "cg", true, s.clone())], None);
            Outcome { report, text: s + "\n", input_error: false }
        }
        Err(e) => failure("cg", params, "cg", e),
    }
}

fn ylbracket(l: u32, j: u32) -> Outcome {
    let params = json!({ "l": l, "j": j });
    let row = match bracket_coeffs_recursion(l, j) {
        Ok(r) => r,
        Err(e) => return failure("ylbracket", params, "recursion", e),
    };
    let direct = match bracket_coeffs_direct(l, l as i64 - j as i64, l as i64) {
        Ok(d) => d,
        Err(e) => return failure("ylbracket", params, "direct", e),
    };
    let steps = (1..=l)
        .map(|k| {
            let r = row.y[&k].clone();
            let d = direct.get(&k).cloned().unwrap_or_default();
            Step::new(
                format!("y_{} (k = {k})", 2 * k - 1),
                "recursion-vs-direct",
                r == d,
                format!("recursion {r}; direct {d}"),
            )
        })
        .collect();
    Outcome::from_report(Report::new("ylbracket", params, steps, None))
}

fn verify_classical(theorem: Option<u8>, lhs: Option<&str>, rhs: Option<&str>) -> Outcome {
    let params = json!({ "theorem": theorem, "lhs": lhs, "rhs": rhs });
    let mut steps = Vec::new();
    if let (Some(l), Some(r)) = (lhs, rhs) {
        let vals = parse(l)
            .map_err(|e| e.to_string())
            .and_then(|a| eval_sphere(&a).map_err(|e| e.to_string()))
            .and_then(|x| {
                parse(r)
                    .map_err(|e| e.to_string())
                    .and_then(|b| eval_sphere(&b).map_err(|e| e.to_string()))
                    .map(|y| (x, y))
            });
        match vals {
            Ok((x, y)) => {
                let diff = &x - &y;
                steps.push(Step::new(format!("{l} = {r} on the sphere"), "classical-identity", diff.is_zero(), format!("difference {diff}")));
            }
            Err(e) => return failure("verify-classical", params, "parse", e),
        }
    } else if lhs.is_some() || rhs.is_some() {
        return failure("verify-classical", params, "input", "give both LHS and RHS");
    } else {
        let pick: &[usize] = match theorem {
            None => &[0, 1, 2, 3],
            Some(2) => &[0, 1],
            Some(5) => &[2, 3],
            Some(t) => return failure("verify-classical", params, "input", format!("unknown theorem {t}; use 2 or 5")),
        };
        let ids = all_identities();
        for &i in pick {
            let (name, id) = &ids[i];
            let res = id.classical_residual();
            steps.push(Step::new(format!("classical identity for {name}"), "classical-identity", res.is_zero(), format!("residual {res}")));
        }
    }
    Outcome::from_report(Report::new("verify-classical", params, steps, None))
}

fn nogo_verdict_text(v: NogoVerdict) -> &'static str {
    match v {
        NogoVerdict::Contradiction => "contradiction",
        NogoVerdict::ConsistentTrivial => "consistent-trivial",
        NogoVerdict::Failed => "failed",
    }
}

fn verify_quantum(two_j: TwoJ, theorem: u8) -> Outcome {
    let params = json!({ "j": two_j.to_string(), "theorem": theorem });
    let r = match Theorem::from_id(theorem) {
        Some(Theorem::Quadratic) => run_theorem2(two_j),
        Some(Theorem::Cubic) => run_theorem5(two_j),
        None => return failure("verify-quantum", params, "input", format!("unknown theorem {theorem}; use 2 or 5")),
    };
    let mut steps: Vec<Step> = r.steps.iter().map(Step::from).collect();
    steps.push(Step::new(format!("verdict at j = {two_j}"), "verdict", r.passed(), nogo_verdict_text(r.verdict)));
    let report = Report::new("verify-quantum", params, steps, Some(nogo_verdict_text(r.verdict).to_string()));
    Outcome::from_report(report)
}

fn nogo(two_jmax: TwoJ) -> Outcome {
    let params = json!({ "jmax": two_jmax.to_string() });
    let reports: Vec<NogoReport> = run_sweep(two_jmax.0);
    let mut steps = Vec::new();
    let mut text = format!("{:>5}  {:<20} {:<20}\n", "j", "theorem 2", "theorem 5");
    for pair in reports.chunks(2) {
        let (a, b) = (&pair[0], &pair[1]);
        text.push_str(&format!(
            "{:>5}  {:<20} {:<20}\n",
            a.j,
            nogo_verdict_text(a.verdict),
            nogo_verdict_text(b.verdict)
        ));
        for r in pair {
            let tag = format!("j={}, theorem {}", r.j, r.theorem.id());
            steps.extend(r.steps.iter().map(|s| {
                let mut st = Step::from(s);
                st.desc = format!("[{tag}] {}", st.desc);
                st.anchor = format!("theorem{}.{}", r.theorem.id(), st.anchor);
                st
            }));
            let expect = if r.two_j.0 == 0 { NogoVerdict::ConsistentTrivial } else { NogoVerdict::Contradiction };
            steps.push(Step::new(
                format!("[{tag}] verdict"),
                format!("theorem{}.verdict", r.theorem.id()),
                r.passed() && r.verdict == expect,
                nogo_verdict_text(r.verdict),
            ));
        }
    }
    let report = Report::new("nogo", params, steps, None);
    for s in report.failed_steps() {
        text.push_str(&format!("FAIL: {} ({})\n", s.desc, s.detail));
    }
    text.push_str(&format!("verdict: {}\n", report.verdict));
    Outcome { report, text, input_error: false }
}

fn appendixb(lmax: u32, cert_lmax: u32, ratio_lmax: u32, general_lmax: u32) -> Outcome {
    let params = json!({ "lmax": lmax, "cert_lmax": cert_lmax, "ratio_lmax": ratio_lmax, "general_lmax": general_lmax });
    let mut steps = Vec::new();

    let rows: Vec<(u32, u32)> = (1..=lmax).flat_map(|l| (1..=2 * l).map(move |j| (l, j))).collect();
    let agree = exec::map(&rows, |&(l, j)| {
        let r = bracket_coeffs_recursion(l, j).map_err(|e| e.to_string())?;
        let d = bracket_coeffs_direct(l, l as i64 - j as i64, l as i64).map_err(|e| e.to_string())?;
        Ok::<bool, String>(r.y == d)
    });
    for l in 1..=lmax {
        let mine: Vec<_> = rows.iter().zip(&agree).filter(|((ll, _), _)| *ll == l).collect();
        let bad: Vec<String> = mine
            .iter()
            .filter(|(_, r)| !matches!(r, Ok(true)))
            .map(|((_, j), r)| match r {
                Err(e) => format!("j={j}: {e}"),
                _ => format!("j={j}"),
            })
            .collect();
        steps.push(Step::new(
            format!("l = {l}: recursion equals direct bracket decomposition for 1 <= j <= {}", 2 * l),
            "recursion-vs-direct",
            bad.is_empty(),
            if bad.is_empty() { format!("{} rows", mine.len()) } else { bad.join("; ") },
        ));
    }

    let pairs: Vec<(u32, i64, i64)> = (1..=general_lmax)
        .flat_map(|l| {
            let li = l as i64;
            (-li..=li).flat_map(move |m| (-li..=li).map(move |n| (l, m, n)))
        })
        .collect();
    let general = exec::map(&pairs, |&(l, m, n)| {
        matches!((bracket_coeffs_general(l, m, n), bracket_coeffs_direct(l, m, n)), (Ok(a), Ok(b)) if a == b)
    });
    let bad = pairs.iter().zip(&general).filter(|(_, ok)| !**ok).count();
    steps.push(Step::new(
        format!("general-order recursion equals direct decomposition for l <= {general_lmax}, all m, n"),
        "general-recursion",
        bad == 0,
        format!("{} pairs, {bad} mismatches", pairs.len()),
    ));

    let certs = exec::map(&(1..=cert_lmax.max(lmax)).collect::<Vec<_>>(), |&l| (l, nonvanishing_report(l)));
    for (l, rep) in certs {
        match rep {
            Ok(r) => {
                if l <= cert_lmax {
                    steps.push(Step::new(format!("l = {l}: top coefficient y_{} nonzero", 2 * l - 1), "top-coefficient", r.top_nonzero, ""));
                }
                steps.push(Step::new(
                    format!("l = {l}: coefficients vanish for 2k - 1 <= 2l - j - 2"),
                    "vanishing-range",
                    r.vanishing,
                    "",
                ));
                if let Some(c) = r.claimed_range {
                    if l <= lmax {
                        steps.push(Step::new(
                            format!("l = {l}: claimed non-vanishing range certified"),
                            "claimed-range",
                            c,
                            format!("vacuous points (j, k): {:?}", r.vacuous),
                        ));
                    }
                }
                if let Some(mono) = r.monotone {
                    steps.push(Step::new(format!("l = {l}: alternating terms strictly increase"), "monotone-terms", mono, ""));
                }
            }
            Err(e) => steps.push(Step::new(format!("l = {l}: certificate"), "top-coefficient", false, e.to_string())),
        }
    }

    let grid: Vec<(u32, u32)> = (5..=ratio_lmax).flat_map(|l| (2..=l).filter(move |&k| 2 * k + 1 >= l).map(move |k| (l, k))).collect();
    let bounded = exec::map(&grid, |&(l, k)| ratio_bound_check(l, k));
    let bad: Vec<_> = grid.iter().zip(&bounded).filter(|(_, ok)| !**ok).map(|(p, _)| *p).collect();
    steps.push(Step::new(
        format!("ratio bound below 1 on the admissible grid l <= {ratio_lmax}"),
        "ratio-bound",
        bad.is_empty(),
        format!("{} points, failures {bad:?}", grid.len()),
    ));
    let max = ratio_grid_max(ratio_lmax);
    steps.push(Step::new(
        "ratio maximum on the grid is 18/25",
        "ratio-max",
        max.as_ref().is_some_and(|(r, _, _)| *r == rat(18, 25)),
        max.map(|(r, l, k)| format!("{r} at l = {l}, k = {k}")).unwrap_or_default(),
    ));

    for l in 0..=lmax {
        let closed = closed_forms_agree(l);
        steps.push(Step::new(
            format!("l = {l}: closed-form CG values equal the Racah formula"),
            "cg-closed-forms",
            matches!(closed, Ok(true)),
            closed.err().map(|e| e.to_string()).unwrap_or_default(),
        ));
        let irr = adjoint_irreducibility(l);
        steps.push(Step::new(
            format!("l = {l}: brackets with H_1 span H_l"),
            "adjoint-irreducibility",
            irr.passed,
            format!("span dimension {}", irr.span_dim),
        ));
        steps.push(Step::new(
            format!("l = {l}: Y_l^m orthogonal to all lower-degree monomials"),
            "degree-minimality",
            orthogonal_to_lower_degrees(l),
            "",
        ));
    }
    Outcome::from_report(Report::new("appendixb", params, steps, None))
}

fn selftest_command(seed: u64, cases: usize) -> Outcome {
    let params = json!({ "seed": seed, "cases": cases });
    let mut steps: Vec<Step> = selftest::run_all(seed, cases)
        .into_iter()
        .map(|r| Step::new(format!("{} properties", r.name), r.name.clone(), r.passed(), format!("{} cases; {}", r.cases, r.failures.join("; "))))
        .collect();
    let names = ["s^2 S3", "2 s^2 S2 S3", "3 s^4 S3", "6 s^2 S1 S2 S3", "cubic constraint after the s^2 relation"];
    match symbolic_checks() {
        Ok(flags) => {
            for (name, ok) in names.iter().zip(flags) {
                steps.push(Step::new(format!("symbolic-j residual: {name}"), "pbw-symbolic", ok, ""));
            }
        }
        Err(e) => steps.push(Step::new("symbolic-j residuals", "pbw-symbolic", false, e.to_string())),
    }
    Outcome::from_report(Report::new("selftest", params, steps, None))
}

pub fn dispatch(command: &Command) -> Outcome {
    match command {
        Command::Bracket { f, g } => bracket(f, g),
        Command::Hdecomp { expr } => hdecomp(expr),
        Command::Cg { l1, l2, m1, m2, l, m } => cg_command(*l1, *l2, *m1, *m2, *l, *m),
        Command::Ylbracket { l, j } => ylbracket(*l, *j),
        Command::VerifyClassical { theorem, lhs, rhs } => verify_classical(*theorem, lhs.as_deref(), rhs.as_deref()),
        Command::VerifyQuantum { j, theorem } => verify_quantum(*j, *theorem),
        Command::Nogo { jmax } => nogo(*jmax),
        Command::Appendixb { lmax, cert_lmax, ratio_lmax, general_lmax } => appendixb(*lmax, *cert_lmax, *ratio_lmax, *general_lmax),
        Command::Selftest { seed, cases } => selftest_command(*seed, *cases),
    }
}

/// Parses arguments (first item is the program name), applies the
/// execution settings and runs the command. Returns the exit code and the
/// rendered output; argument errors yield code 2 and clap's message.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    if cli.sequential {
        exec::set_mode(exec::Mode::Sequential);
    }
    let out = dispatch(&cli.command);
    (out.exit_code(), out.render(cli.format))
}
