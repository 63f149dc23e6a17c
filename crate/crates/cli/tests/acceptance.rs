//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use colorlie::axioms::{check_fundamental_identity, check_lie, check_skew_symmetry};
use colorlie::constructions::{
    centroid, centromorphisms, check_centroid, check_centromorphism, check_derivation, derivations,
};
use colorlie::forms::check_symplectic;
use colorlie::io::{self, AlgebraFile, SolutionFile};
use colorlie::linalg::{in_span, span_basis};
use colorlie::prelie::{phase_space, pre_lie_from_symplectic, recovered_pre_lie};
use colorlie::samples::{z2_cubed, z2_cubed_hom, z2_cubed_symplectic};
use colorlie::{Algebra3Rho, BilinearForm, Matrix, Scalar};
use colorlie_testkit::oracle;
use colorlie_testkit::random::Gen;
use colorlie_testkit::suite::{abelian_quadratic, closure, equivalence_round, mutation_campaign, CONSTRUCTIONS};

type Outcome = Result<String, String>;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn colorlie(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_colorlie"))
        .current_dir(fixture(""))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn example() -> Result<Algebra3Rho, String> {
    let text = std::fs::read_to_string(fixture("example_z2cubed.json")).map_err(|e| e.to_string())?;
    let file: AlgebraFile = io::parse(&text).map_err(|e| e.to_string())?;
    file.to_algebra().map_err(|e| e.to_string())
}

fn flat(m: &Matrix) -> Vec<Scalar> {
    m.to_rows().into_iter().flatten().collect()
}

fn golden_example() -> Outcome {
    let alg = example()?;
    let start = Instant::now();
    let skew = check_skew_symmetry(&alg);
    let fi = check_fundamental_identity(&alg);
    let elapsed = start.elapsed();
    ensure(skew.passed(), format!("{skew}"))?;
    ensure(fi.passed(), format!("{fi}"))?;
    ensure(elapsed.as_secs_f64() < 1.0, format!("took {elapsed:?}"))?;
    Ok(format!("skew-symmetry and fundamental identity hold on all 4^5 tuples in {elapsed:?}"))
}

fn symplectic_forms() -> Outcome {
    let alg = example()?;
    for k in 1..=6 {
        let r = check_symplectic(&alg, &z2_cubed_symplectic(k));
        ensure(r.passed(), format!("omega_{k}: {r}"))?;
    }
    let out = colorlie(&["solve", "symplectic-forms", "example_z2cubed.json"]);
    ensure(out.status.success(), String::from_utf8_lossy(&out.stderr))?;
    let sol: SolutionFile = io::parse(&String::from_utf8_lossy(&out.stdout)).map_err(|e| e.to_string())?;
    let members: Vec<Vec<Scalar>> = sol.to_matrices().map_err(|e| e.to_string())?.iter().map(flat).collect();
    let basis = span_basis(alg.order(), 16, &members);
    for k in 1..=6 {
        ensure(
            in_span(alg.order(), 16, &basis, &flat(z2_cubed_symplectic(k).matrix())),
            format!("solver space misses omega_{k}"),
        )?;
    }
    let mut gen = Gen::new(2);
    let mut checked = 0;
    let mut failed = Vec::new();
    while checked < 100 {
        let m = gen.graded_form(&alg, -1);
        let f = BilinearForm::new(m).map_err(|e| e.to_string())?;
        if !f.is_nondegenerate() {
            continue;
        }
        checked += 1;
        let r = check_symplectic(&alg, &f);
        if !r.passed() {
            failed.push(r.violated_identities().join(", "));
        }
    }
    ensure(
        failed.is_empty(),
        format!("{} of 100 random non-degenerate rho-skew forms are not symplectic (first: {})", failed.len(), failed.first().cloned().unwrap_or_default()),
    )?;
    Ok(format!("omega_1..omega_6 symplectic, all in the {}-dimensional solver space; 100 random forms pass", sol.dimension))
}

fn yau_reproduction() -> Outcome {
    let out = colorlie(&["construct", "yau", "example_z2cubed.json", "phi.json"]);
    ensure(out.status.success(), String::from_utf8_lossy(&out.stderr))?;
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    let golden = std::fs::read_to_string(fixture("hom_example.json")).map_err(|e| e.to_string())?;
    ensure(text == golden, "output differs from the shipped Hom example")?;
    let hom = io::parse::<AlgebraFile>(&text).and_then(|f| f.to_algebra()).map_err(|e| e.to_string())?;
    ensure(hom == z2_cubed_hom(), "constants differ from [l1,l2,l3] = l4 and its companions")?;
    let lie = check_lie(&hom);
    ensure(lie.passed(), format!("{lie}"))?;
    for k in 1..=6 {
        let r = check_symplectic(&hom, &z2_cubed_symplectic(k));
        ensure(r.passed(), format!("omega_{k}: {r}"))?;
    }
    Ok("Hom example reproduced byte for byte; Hom axioms and omega_1..omega_6 pass".into())
}

fn closure_suite() -> Outcome {
    let mut lines = Vec::new();
    for name in CONSTRUCTIONS {
        let (golden, random) = closure(name, 1, 50);
        ensure(golden.all_passed(), format!("{name} golden: {:?}", golden.failures))?;
        ensure(random.all_passed() && random.total >= 50, format!("{name} random: {:?}", random.failures))?;
        lines.push(format!("{name} {}+{}", golden.passed, random.passed));
    }
    Ok(lines.join(", "))
}

fn phase_space_round_trip() -> Outcome {
    let start = Instant::now();
    let alg = z2_cubed();
    let pre = pre_lie_from_symplectic(&alg, &z2_cubed_symplectic(5)).map_err(|e| e.to_string())?;
    let ps = phase_space(&pre).map_err(|e| e.to_string())?;
    let back = recovered_pre_lie(&ps).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(back.bracket() == pre.bracket(), "recovered constants differ")?;
    ensure(elapsed.as_secs_f64() < 10.0, format!("took {elapsed:?}"))?;
    Ok(format!("pre-Lie constants recovered exactly in {elapsed:?}"))
}

fn oracle_equivalence() -> Outcome {
    let mut total = 0;
    for seed in 0..100 {
        let mut gen = Gen::new(seed);
        for v in equivalence_round(&mut gen) {
            total += 1;
            ensure(
                v.report == v.oracle,
                format!("seed {seed}: {} says {}, oracle says {}", v.verifier, v.report, v.oracle),
            )?;
        }
    }
    Ok(format!("{total} verdicts agree"))
}

fn mutation_sensitivity() -> Outcome {
    let mut lines = Vec::new();
    for (name, s) in mutation_campaign(256) {
        ensure(
            s.acceptable(),
            format!("{name}: {}/{} detected, missed {:?}", s.detected, s.mutations, s.missed),
        )?;
        let kept = if s.preserving > 0 { format!(" (+{} oracle-confirmed valid)", s.preserving) } else { String::new() };
        lines.push(format!("{name} {}/{}{kept}", s.detected, s.mutations));
    }
    Ok(lines.join(", "))
}

/// Every matrix with entries in {-1, 0, 1}.
fn grid(alg: &Algebra3Rho) -> Vec<Matrix> {
    let (d, o) = (alg.dim(), alg.order());
    (0..3usize.pow((d * d) as u32))
        .map(|mut code| {
            Matrix::from_fn(o, d, d, |_, _| {
                let v = (code % 3) as i64 - 1;
                code /= 3;
                Scalar::from_int(o, v)
            })
        })
        .collect()
}

fn solver_soundness() -> Outcome {
    let alg = example()?;
    let mut members = 0;
    for degree in alg.group().elements() {
        let ders = derivations(&alg, &degree, None).map_err(|e| e.to_string())?;
        let cents = centroid(&alg, &degree).map_err(|e| e.to_string())?;
        for h in &ders.maps {
            let r = check_derivation(&alg, h, None);
            ensure(r.passed() && oracle::derivation(&alg, h.matrix(), &degree), format!("derivation: {r}"))?;
        }
        for h in &cents.maps {
            let r = check_centroid(&alg, h);
            ensure(r.passed() && oracle::centroid(&alg, h.matrix(), &degree), format!("centroid: {r}"))?;
        }
        members += ders.dim() + cents.dim();
    }
    // the example carries no quadratic structure; centromorphisms use an abelian one
    let (qa, chi) = abelian_quadratic();
    for degree in qa.group().elements() {
        let space = centromorphisms(&qa, &chi, &degree).map_err(|e| e.to_string())?;
        for h in &space.maps {
            let r = check_centromorphism(&qa, &chi, h);
            ensure(r.passed(), format!("centromorphism: {r}"))?;
        }
        members += space.dim();
    }

    let mut gen = Gen::new(8);
    let mut algebras = 0;
    while algebras < 40 {
        let (alg, chi) = gen.quadratic_pair();
        let alg = if alg.dim() <= 2 && alg.order().get() <= 2 { alg } else { continue };
        algebras += 1;
        let candidates = grid(&alg);
        for degree in alg.group().elements() {
            let ders = derivations(&alg, &degree, None).map_err(|e| e.to_string())?;
            let cents = centroid(&alg, &degree).map_err(|e| e.to_string())?;
            let cms = centromorphisms(&alg, &chi, &degree).map_err(|e| e.to_string())?;
            for m in &candidates {
                ensure(oracle::derivation(&alg, m, &degree) == ders.contains(m), format!("derivations disagree on {m:?}"))?;
                ensure(oracle::centroid(&alg, m, &degree) == cents.contains(m), format!("centroid disagrees on {m:?}"))?;
                ensure(
                    oracle::centromorphism(&alg, chi.matrix(), m, &degree) == cms.contains(m),
                    format!("centromorphisms disagree on {m:?}"),
                )?;
            }
        }
    }
    Ok(format!("{members} golden members re-verified; grids match on {algebras} algebras of dimension at most 2"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("golden example", golden_example),
        ("symplectic forms", symplectic_forms),
        ("Yau twist reproduction", yau_reproduction),
        ("closure suite", closure_suite),
        ("phase-space round trip", phase_space_round_trip),
        ("oracle equivalence", oracle_equivalence),
        ("mutation sensitivity", mutation_sensitivity),
        ("solver soundness and completeness", solver_soundness),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
