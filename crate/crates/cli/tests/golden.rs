//! Shipped fixtures are reproduced byte for byte. Set COLORLIE_REGENERATE=1 to
//! rewrite them instead.

use std::path::{Path, PathBuf};
use std::process::Command;

use colorlie::io::{self, AlgebraFile, MapFile, RepresentationFile, SolutionFile};
use colorlie::samples::{z2_cubed, z2_cubed_hom, z2_cubed_symplectic, z2_cubed_twist};
use colorlie::{Algebra3Rho, AlgebraKind, CyclotomicOrder, GradedBasis, GradingGroup, TernaryBracket, TwoCycle};
use colorlie_testkit::mutate::bump_bracket;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn regenerate() -> bool {
    std::env::var_os("COLORLIE_REGENERATE").is_some()
}

fn check(name: &str, text: &str) {
    let path = fixtures().join(name);
    if regenerate() {
        std::fs::write(&path, text).unwrap();
        return;
    }
    let shipped = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
    assert_eq!(shipped, text, "{name} differs from the shipped fixture");
}

fn run(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_colorlie"))
        .current_dir(fixtures())
        .args(args)
        .output()
        .unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn example() -> String {
    let mut file = AlgebraFile::from_algebra(&z2_cubed());
    for k in 1..=6 {
        file = file.with_form(&format!("omega{k}"), &z2_cubed_symplectic(k));
    }
    io::render(&file)
}

fn zero(kind: AlgebraKind) -> Algebra3Rho {
    let order = CyclotomicOrder::new(1).unwrap();
    let group = GradingGroup::trivial();
    let names = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
    let basis = GradedBasis::new(group.clone(), names, vec![group.zero(); 3]).unwrap();
    Algebra3Rho::new(basis, TwoCycle::trivial(order), TernaryBracket::zero(order, 3), None, kind).unwrap()
}

#[test]
fn fixtures_are_reproduced() {
    check("example_z2cubed.json", &example());
    check("phi.json", &io::render(&MapFile::new(&z2_cubed_twist(), Some(vec![0, 0, 0]))));
    check("mutated.json", &io::render(&AlgebraFile::from_algebra(&bump_bracket(&z2_cubed(), (0, 1, 2, 3)))));
    check("empty.json", &io::render(&AlgebraFile::from_algebra(&zero(AlgebraKind::Lie))));
    check("zero_prelie.json", &io::render(&AlgebraFile::from_algebra(&zero(AlgebraKind::PreLie))));

    check("hom_example.json", &run(&["construct", "yau", "example_z2cubed.json", "phi.json"]));
    check(
        "prelie_w5.json",
        &run(&["construct", "prelie-from-symplectic", "example_z2cubed.json", "--form", "omega5"]),
    );
    check("phase_space_w5.json", &run(&["construct", "phase-space", "prelie_w5.json"]));
    check("coadjoint_z2cubed.json", &run(&["construct", "coadjoint", "example_z2cubed.json"]));
    check("double_z2cubed.json", &run(&["construct", "double-metric", "example_z2cubed.json"]));
    check("symplectic_forms.json", &run(&["solve", "symplectic-forms", "example_z2cubed.json"]));
}

#[test]
fn shipped_example_is_the_sample() {
    let file: AlgebraFile = io::parse(&std::fs::read_to_string(fixtures().join("example_z2cubed.json")).unwrap()).unwrap();
    assert_eq!(file.to_algebra().unwrap(), z2_cubed());
    for k in 1..=6 {
        assert_eq!(file.form(&format!("omega{k}")).unwrap(), z2_cubed_symplectic(k));
    }
    let hom: AlgebraFile = io::parse(&std::fs::read_to_string(fixtures().join("hom_example.json")).unwrap()).unwrap();
    assert_eq!(hom.to_algebra().unwrap(), z2_cubed_hom());
}

fn round_trips<T: serde::Serialize + serde::de::DeserializeOwned>(text: &str) -> bool {
    io::parse::<T>(text).map(|v| io::render(&v) == text).unwrap_or(false)
}

#[test]
fn fixtures_round_trip() {
    for entry in std::fs::read_dir(fixtures()).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let ok = round_trips::<AlgebraFile>(&text)
            || round_trips::<RepresentationFile>(&text)
            || round_trips::<MapFile>(&text)
            || round_trips::<SolutionFile>(&text);
        assert!(ok, "{} does not survive parse and render", path.display());
    }
}
