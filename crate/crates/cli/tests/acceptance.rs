//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! Corpus: every `gl(n)` highest weight with `λ_n = 0`, `n ≤ 4` and
//! dimension at most 200, and every `o(2n+1)` highest weight with `n ≤ 3`
//! and dimension at most 200.

use std::process::{Command, ExitCode};
use std::time::Instant;

use gtbasis_core::gl::{self, GlRepresentation};
use gtbasis_core::patterns::{GlHighestWeight, SoHighestWeight};
use gtbasis_core::so::{self, BuildOptions, Mode, SoRepresentation, PROFILES};
use gtbasis_core::verify::{self, Level, VerificationReport};
use gtbasis_core::{HalfInt, Rational};

const MAX_DIM: u64 = 200;

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn gl_corpus() -> Vec<GlHighestWeight> {
    let mut out = Vec::new();
    for n in 1..=4usize {
        // non-increasing prefixes, padded with zeros to test the bound
        let mut stack: Vec<Vec<i64>> = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == n - 1 {
                let mut w = prefix;
                w.push(0);
                out.push(gl_weight(&w));
                continue;
            }
            let hi = prefix.last().copied().unwrap_or(i64::MAX);
            let mut v = 0;
            while v <= hi {
                let mut w = prefix.clone();
                w.push(v);
                w.resize(n, 0);
                if verify::weyl_dim_a(&gl_weight(&w)).unwrap() > MAX_DIM {
                    break;
                }
                w.truncate(prefix.len() + 1);
                stack.push(w);
                v += 1;
            }
        }
    }
    out.sort_by(|a, b| (a.rank(), a.entries()).cmp(&(b.rank(), b.entries())));
    out
}

fn gl_weight(w: &[i64]) -> GlHighestWeight {
    GlHighestWeight::new(w.iter().map(|&v| int(v)).collect()).unwrap()
}

fn so_weight(doubled: &[i64]) -> SoHighestWeight {
    SoHighestWeight::new(
        doubled
            .iter()
            .map(|&d| HalfInt::from_doubled(d.into()))
            .collect(),
    )
    .unwrap()
}

fn so_corpus() -> Vec<SoHighestWeight> {
    let mut out = Vec::new();
    for n in 1..=3usize {
        for top in [0i64, -1] {
            // doubled entries, non-increasing from `top`, padded with the
            // last entry to test the bound
            let mut stack: Vec<Vec<i64>> = vec![Vec::new()];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == n {
                    out.push(so_weight(&prefix));
                    continue;
                }
                let mut v = prefix.last().copied().unwrap_or(top);
                loop {
                    let mut w = prefix.clone();
                    w.push(v);
                    w.resize(n, v);
                    if verify::weyl_dim_b(so_weight(&w).entries()).unwrap() > MAX_DIM {
                        break;
                    }
                    w.truncate(prefix.len() + 1);
                    stack.push(w);
                    v -= 2;
                }
            }
        }
    }
    out.sort_by(|a, b| (a.rank(), a.entries()).cmp(&(b.rank(), b.entries())));
    out
}

fn show<T: ToString>(xs: &[T]) -> String {
    format!(
        "({})",
        xs.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    )
}

struct Built {
    gl: Vec<(GlRepresentation, VerificationReport)>,
    so: Vec<(SoRepresentation, VerificationReport)>,
}

/// Every representation that failed the named check, with its witness.
fn failures(built: &Built, check: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut scan = |label: String, report: &VerificationReport| match report.get(check) {
        Some(c) if c.pass => {}
        Some(c) => out.push(format!("{label}: {}", c.witness)),
        None => out.push(format!("{label}: check {check} missing")),
    };
    for (rep, report) in &built.gl {
        scan(format!("A{}", show(rep.highest_weight().entries())), report);
    }
    for (rep, report) in &built.so {
        scan(format!("B{}", show(rep.highest_weight().entries())), report);
    }
    out
}

fn gl_only(built: &Built, check: &str) -> Vec<String> {
    built
        .gl
        .iter()
        .filter_map(|(rep, report)| match report.get(check) {
            Some(c) if c.pass => None,
            Some(c) => Some(format!(
                "A{}: {}",
                show(rep.highest_weight().entries()),
                c.witness
            )),
            None => Some(format!(
                "A{}: check {check} missing",
                show(rep.highest_weight().entries())
            )),
        })
        .collect()
}

fn verdict(failed: Vec<String>, ok: String) -> Result<String, String> {
    match failed.first() {
        None => Ok(ok),
        Some(first) => Err(format!("{} failing, first: {first}", failed.len())),
    }
}

fn spinor_example() -> Result<String, String> {
    let rep = so::build_so(&so_weight(&[-1])).map_err(|e| e.to_string())?;
    let top = rep.highest_index();
    let other = 1 - top;
    let raise = rep.gen(0, 1);
    let mut half_top = gtbasis_core::SparseVec::new();
    half_top.insert(top, Rational::new(1.into(), 2.into()));
    let on_other = raise.apply(&[(other, int(1))].into_iter().collect());
    let on_top = raise.apply(&[(top, int(1))].into_iter().collect());
    if on_other != half_top {
        return Err(format!(
            "F(0,1) applied to the second vector gives {on_other:?}"
        ));
    }
    if !on_top.is_empty() {
        return Err("F(0,1) does not kill the highest vector".into());
    }
    if !rep.phi_minus(1).is_zero() {
        return Err("the quadratic operator is not zero".into());
    }
    Ok("F(0,1) xi' = 1/2 xi, quadratic operator = 0".into())
}

fn raising_action() -> Result<String, String> {
    let rep = gl::build_gl(&gl_weight(&[2, 1, 0]));
    let cases = gl::check_raising_action(&rep)?;
    let expected = gl::admissible_mus(rep.highest_weight()).len() * (rep.rank() - 1);
    if cases != expected {
        return Err(format!("{cases} cases checked, expected {expected}"));
    }
    Ok(format!("{cases} (mu, i) cases"))
}

fn defining_equivalence() -> Result<String, String> {
    for n in 1..=3usize {
        let mut w = vec![0i64; n];
        w[n - 1] = -2;
        let rep = so::build_so(&so_weight(&w)).map_err(|e| e.to_string())?;
        verify::check_defining_equivalence(&rep).map_err(|e| format!("n={n}: {e}"))?;
    }
    Ok("n = 1, 2, 3".into())
}

fn run_build(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_gtbasis"))
        .arg("build")
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("build {args:?} exited with {}", out.status));
    }
    Ok(out.stdout)
}

fn determinism(built: &Built) -> Result<String, String> {
    let cases: [&[&str]; 4] = [
        &["--type", "B", "--rank", "3", "--weight", "-1/2,-1/2,-1/2"],
        &["--type", "B", "--rank", "2", "--weight", "-1,-2"],
        &["--type", "A", "--rank", "3", "--weight", "2,1,0"],
        &[
            "--type",
            "B",
            "--rank",
            "1",
            "--weight",
            "-1/2",
            "--deform-trace",
        ],
    ];
    for args in cases {
        if run_build(args)? != run_build(args)? {
            return Err(format!("build {args:?} differs between runs"));
        }
    }
    // deformed evaluation of every column against the default path
    let mut compared = 0;
    for (rep, _) in built.so.iter().filter(|(r, _)| r.dim() <= 40) {
        let hw = rep.highest_weight();
        let deformed = PROFILES
            .iter()
            .find_map(|&p| {
                so::build_so_with(
                    hw,
                    BuildOptions {
                        mode: Mode::Deformed(p),
                        trace: false,
                    },
                )
                .ok()
            })
            .ok_or_else(|| format!("B{}: no deformation profile succeeds", show(hw.entries())))?;
        if deformed.gens() != rep.gens() {
            return Err(format!(
                "B{}: deformed and exact generators differ",
                show(hw.entries())
            ));
        }
        compared += 1;
    }
    Ok(format!(
        "{} CLI builds byte-identical, {compared} deformed builds agree",
        cases.len()
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let gl_weights = gl_corpus();
    let so_weights = so_corpus();
    let mut build_errors = Vec::new();
    let mut built = Built {
        gl: Vec::new(),
        so: Vec::new(),
    };
    for hw in &gl_weights {
        let rep = gl::build_gl(hw);
        let report = verify::verify_gl(&rep, Level::Full, 10_000);
        built.gl.push((rep, report));
    }
    for hw in &so_weights {
        match so::build_so(hw) {
            Ok(rep) => {
                let report = verify::verify_so(&rep, Level::Full, 10_000);
                built.so.push((rep, report));
            }
            Err(e) => build_errors.push(format!("B{}: {e}", show(hw.entries()))),
        }
    }
    println!(
        "corpus: {} gl(n) weights, {} o(2n+1) weights, built and checked in {:.1?}",
        gl_weights.len(),
        so_weights.len(),
        start.elapsed()
    );
    let total = format!("{} representations", gl_weights.len() + so_weights.len());
    let with_builds = |mut f: Vec<String>| {
        f.splice(0..0, build_errors.iter().cloned());
        f
    };

    let criteria: Vec<(&str, Result<String, String>)> = vec![
        (
            "spinor of o(3): raising action and vanishing quadratic operator",
            spinor_example(),
        ),
        (
            "structure constants",
            verdict(
                with_builds(failures(&built, "structure_constants")),
                total.clone(),
            ),
        ),
        (
            "pattern count equals Weyl dimension",
            verdict(with_builds(failures(&built, "dimension")), total.clone()),
        ),
        (
            "branching to rank n-1 for o(2n+1), n >= 2",
            verdict(
                built
                    .so
                    .iter()
                    .filter(|(r, _)| r.rank() >= 2)
                    .filter_map(|(r, rep)| {
                        let c = rep.get("branching")?;
                        (!c.pass).then(|| {
                            format!("B{}: {}", show(r.highest_weight().entries()), c.witness)
                        })
                    })
                    .collect(),
                format!(
                    "{} representations",
                    built.so.iter().filter(|(r, _)| r.rank() >= 2).count()
                ),
            ),
        ),
        (
            "central polynomial T(u) at u = 0, 1, -1, 7",
            verdict(
                gl_only(&built, "central_polynomial"),
                format!("{} representations", built.gl.len()),
            ),
        ),
        (
            "raising operators on gl(n-1) highest vectors of (2,1,0)",
            raising_action(),
        ),
        (
            "contravariant form: diagonal, nonzero, adjoint",
            verdict(
                gl_only(&built, "contravariant_form"),
                format!("{} representations", built.gl.len()),
            ),
        ),
        (
            "Casimir element is scalar",
            verdict(with_builds(failures(&built, "casimir")), total.clone()),
        ),
        (
            "equivalence with the defining representation",
            defining_equivalence(),
        ),
        (
            "weight multiplicities match Freudenthal",
            verdict(with_builds(failures(&built, "freudenthal")), total.clone()),
        ),
        (
            "deterministic output and deformed/exact agreement",
            determinism(&built),
        ),
    ];

    let mut failed = 0;
    for (i, (title, result)) in criteria.iter().enumerate() {
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {title} [{detail}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {title}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1?}",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
