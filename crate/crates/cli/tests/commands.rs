use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use colorlie::io::{self, AlgebraFile, MapFile, RepresentationFile, SolutionFile};
use colorlie::prelie::left_bundle;
use colorlie::samples::z2_cubed;
use colorlie::{AlgebraKind, BilinearForm, CyclotomicOrder, GradedBasis, GradingGroup, Matrix, TernaryBracket, TwoCycle};
use colorlie_testkit::suite::golden_pre_lie;
use tempfile::TempDir;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn colorlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colorlie")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn golden_example_verifies() {
    let example = fixture("example_z2cubed.json");
    let out = colorlie(&["verify", path(&example), "lie"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    for k in 1..=6 {
        let out = colorlie(&["verify", path(&example), "symplectic", "--form", &format!("omega{k}")]);
        assert_eq!(code(&out), 0, "omega{k}: {}", stdout(&out));
    }
}

#[test]
fn zero_algebra_verifies() {
    assert_eq!(code(&colorlie(&["verify", path(&fixture("empty.json")), "lie", "hom"])), 0);
}

#[test]
fn mutated_fixture_names_the_skew_tuple() {
    let out = colorlie(&["verify", path(&fixture("mutated.json")), "lie", "--json"]);
    assert_eq!(code(&out), 1);
    let report: io::ReportFile = io::parse(&stdout(&out)).unwrap();
    assert!(!report.passed);
    let skew: Vec<_> = report.reports[0]
        .violations
        .iter()
        .filter(|v| v.identity.starts_with("skew-symmetry"))
        .collect();
    assert!(skew.iter().any(|v| v.indices == [0, 1, 2]), "{skew:?}");
}

#[test]
fn reports_are_deterministic() {
    let mutated = fixture("mutated.json");
    let args = ["verify", path(&mutated), "lie", "--json"];
    assert_eq!(stdout(&colorlie(&args)), stdout(&colorlie(&args)));
    let single = Command::new(env!("CARGO_BIN_EXE_colorlie"))
        .env("COLORLIE_THREADS", "1")
        .args(args)
        .output()
        .unwrap();
    assert_eq!(stdout(&single), stdout(&colorlie(&args)));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let broken = write(&dir, "broken.json", "{\n  \"scalar_order\": \"two\"\n}\n");
    let out = colorlie(&["verify", path(&broken), "lie"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(code(&colorlie(&["verify", path(&dir.path().join("missing.json")), "lie"])), 2);
    let bad_threads = Command::new(env!("CARGO_BIN_EXE_colorlie"))
        .env("COLORLIE_THREADS", "zero")
        .args(["verify", path(&fixture("empty.json")), "lie"])
        .output()
        .unwrap();
    assert_eq!(code(&bad_threads), 2);
}

#[test]
fn yau_reproduces_the_hom_example() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("hom.json");
    let example = fixture("example_z2cubed.json");
    let out = colorlie(&["construct", "yau", path(&example), path(&fixture("phi.json")), "-o", path(&out_path)]);
    assert_eq!(code(&out), 0);
    let built = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(built, std::fs::read_to_string(fixture("hom_example.json")).unwrap());
    for k in 1..=6 {
        let form = format!("omega{k}");
        let out = colorlie(&["verify", path(&out_path), "hom", "symplectic", "--form", &form]);
        assert_eq!(code(&out), 0, "{form}: {}", stdout(&out));
    }
}

#[test]
fn provenance_records_input_hashes() {
    let file: AlgebraFile = io::parse(&std::fs::read_to_string(fixture("prelie_w5.json")).unwrap()).unwrap();
    let p = file.provenance.unwrap();
    assert_eq!(p.construction, "prelie-from-symplectic");
    assert_eq!(p.parameters, ["form=omega5"]);
    assert_eq!(p.inputs[0].path, "example_z2cubed.json");
    assert_eq!(p.inputs[0].sha256.len(), 64);
}

#[test]
fn subadjacent_of_zero_pre_lie_is_zero() {
    let out = colorlie(&["construct", "subadjacent", path(&fixture("zero_prelie.json"))]);
    assert_eq!(code(&out), 0);
    let alg = io::parse::<AlgebraFile>(&stdout(&out)).unwrap().to_algebra().unwrap();
    assert_eq!(alg.kind(), AlgebraKind::Lie);
    assert!(alg.bracket().is_zero());
}

#[test]
fn phase_space_pipeline_verifies() {
    let dir = TempDir::new().unwrap();
    let ps = dir.path().join("ps.json");
    let out = colorlie(&["construct", "phase-space", path(&fixture("prelie_w5.json")), "-o", path(&ps)]);
    assert_eq!(code(&out), 0);
    let out = colorlie(&["verify", path(&ps), "phase-space", "lie"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let file: AlgebraFile = io::parse(&std::fs::read_to_string(&ps).unwrap()).unwrap();
    assert_eq!(file.basis.len(), 8);
}

#[test]
fn double_of_the_example_is_metric() {
    let dir = TempDir::new().unwrap();
    let coad = dir.path().join("coad.json");
    assert_eq!(code(&colorlie(&["construct", "coadjoint", path(&fixture("example_z2cubed.json")), "-o", path(&coad)])), 0);
    assert_eq!(code(&colorlie(&["verify", path(&coad), "representation"])), 0);
    let dual = dir.path().join("dual.json");
    assert_eq!(code(&colorlie(&["construct", "dual-rep", path(&coad), "-o", path(&dual)])), 0);
    assert_eq!(code(&colorlie(&["verify", path(&dual), "representation"])), 0);
    let out = colorlie(&["verify", path(&fixture("double_z2cubed.json")), "lie", "metric"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn failed_preconditions_write_nothing() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("out.json");
    // the adjoint of the Hom example is not multiplicative
    let out = colorlie(&["construct", "double-metric", path(&fixture("hom_example.json")), "-o", path(&target)]);
    assert_eq!(code(&out), 1);
    assert!(!target.exists());
    let out = colorlie(&["construct", "yau", path(&fixture("example_z2cubed.json"))]);
    assert_eq!(code(&out), 2);
}

#[test]
fn o_operator_round_trip() {
    let dir = TempDir::new().unwrap();
    let bundle = left_bundle(&golden_pre_lie()).unwrap();
    let t = Matrix::identity(bundle.order(), 4);
    let rep = write(&dir, "op.json", &io::render(&RepresentationFile::from_bundle(&bundle).with_operator(&t)));
    assert_eq!(code(&colorlie(&["verify", path(&rep), "representation", "o-operator"])), 0);
    let pre = dir.path().join("pre.json");
    assert_eq!(code(&colorlie(&["construct", "prelie-from-o-operator", path(&rep), "-o", path(&pre)])), 0);
    assert_eq!(code(&colorlie(&["verify", path(&pre), "prelie"])), 0);
    assert_eq!(code(&colorlie(&["report", path(&rep)])), 0);
}

/// Two even basis vectors, zero bracket and the identity form.
fn abelian_plane(dir: &TempDir) -> (PathBuf, PathBuf) {
    let o = CyclotomicOrder::new(1).unwrap();
    let g = GradingGroup::trivial();
    let basis = GradedBasis::new(g.clone(), vec!["x".into(), "y".into()], vec![g.zero(); 2]).unwrap();
    let alg = colorlie::Algebra3Rho::new(basis, TwoCycle::trivial(o), TernaryBracket::zero(o, 2), None, AlgebraKind::Lie)
        .unwrap();
    let form = BilinearForm::new(Matrix::identity(o, 2)).unwrap();
    let a = write(dir, "plane.json", &io::render(&AlgebraFile::from_algebra(&alg).with_form("metric", &form)));
    let d = Matrix::from_ints(o, &[&[0, 1], &[-1, 0]]);
    let m = write(dir, "rot.json", &io::render(&MapFile::new(&d, None)));
    (a, m)
}

#[test]
fn symplectic_from_an_antisymmetric_derivation() {
    let dir = TempDir::new().unwrap();
    let (alg, rot) = abelian_plane(&dir);
    let out_path = dir.path().join("sym.json");
    let out = colorlie(&["construct", "symplectic-from-derivation", path(&alg), path(&rot), "-o", path(&out_path)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(code(&colorlie(&["verify", path(&out_path), "symplectic", "--form", "omega"])), 0);
    let out = colorlie(&["construct", "fundamental", path(&alg)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    // the induced pairing on pairs vanishes when the bracket does
    let out = colorlie(&["construct", "fundamental", path(&alg), "--form", "metric"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn twists_by_the_identity_change_nothing() {
    let example = fixture("example_z2cubed.json");
    let dir = TempDir::new().unwrap();
    let id = write(&dir, "id.json", &io::render(&MapFile::new(&Matrix::identity(z2_cubed().order(), 4), None)));
    for name in ["twist", "twist3"] {
        let out = colorlie(&["construct", name, path(&example), path(&id)]);
        assert_eq!(code(&out), 0);
        let alg = io::parse::<AlgebraFile>(&stdout(&out)).unwrap().to_algebra().unwrap();
        assert_eq!(alg, z2_cubed());
    }
}

#[test]
fn tensor_with_a_line() {
    let dir = TempDir::new().unwrap();
    let (alg, _) = abelian_plane(&dir);
    let o = CyclotomicOrder::new(1).unwrap();
    let g = GradingGroup::trivial();
    let basis = GradedBasis::new(g.clone(), vec!["u".into()], vec![g.zero()]).unwrap();
    let mut br = TernaryBracket::zero(o, 1);
    br.set(0, 0, 0, &[colorlie::Scalar::from_int(o, 1)]);
    let line = colorlie::Algebra3Rho::new(basis, TwoCycle::trivial(o), br, None, AlgebraKind::Associative).unwrap();
    let unit = BilinearForm::new(Matrix::identity(o, 1)).unwrap();
    let line = write(&dir, "line.json", &io::render(&AlgebraFile::from_algebra(&line).with_form("chi", &unit)));
    let out = colorlie(&["construct", "tensor", path(&alg), path(&line)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(code(&colorlie(&["verify", path(&line), "associative"])), 0);
}

#[test]
fn solvers_write_verified_spaces() {
    let example = fixture("example_z2cubed.json");
    let out = colorlie(&["solve", "centroid", path(&example), "--degree", "0"]);
    let sol: SolutionFile = io::parse(&stdout(&out)).unwrap();
    let members = sol.to_matrices().unwrap();
    assert!(members.iter().any(Matrix::is_identity));

    let out = colorlie(&["solve", "symplectic-forms", path(&example)]);
    let sol: SolutionFile = io::parse(&stdout(&out)).unwrap();
    assert!(sol.nondegenerate_combinations.is_some());

    let dir = TempDir::new().unwrap();
    let (plane, _) = abelian_plane(&dir);
    let out = colorlie(&["solve", "derivations", path(&plane), "--antisymmetric", path(&plane)]);
    let sol: SolutionFile = io::parse(&stdout(&out)).unwrap();
    assert_eq!(sol.dimension, 1);
    let out = colorlie(&["solve", "centromorphisms", path(&plane), "--degree", "0"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let out = colorlie(&["solve", "quadratic-forms", path(&plane)]);
    let sol: SolutionFile = io::parse(&stdout(&out)).unwrap();
    assert_eq!(sol.dimension, 3);
}

#[test]
fn morphism_check_uses_target_and_map() {
    let example = fixture("example_z2cubed.json");
    let dir = TempDir::new().unwrap();
    let id = write(&dir, "id.json", &io::render(&MapFile::new(&Matrix::identity(z2_cubed().order(), 4), None)));
    let out = colorlie(&["verify", path(&example), "morphism", "--target", path(&example), "--map", path(&id)]);
    assert_eq!(code(&out), 0);
    let out = colorlie(&["verify", path(&example), "morphism"]);
    assert_eq!(code(&out), 2);
}
