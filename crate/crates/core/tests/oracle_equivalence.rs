use colorlie::axioms::check_lie;
use colorlie::forms::check_symplectic;
use colorlie::samples::{z2_cubed, z2_cubed_hom, z2_cubed_symplectic};
use colorlie_testkit::oracle;
use colorlie_testkit::random::Gen;
use colorlie_testkit::suite::equivalence_round;
use proptest::prelude::*;

#[test]
fn samples_agree_with_the_oracle() {
    let alg = z2_cubed();
    assert!(check_lie(&alg).passed() && oracle::lie(&alg));
    let hom = z2_cubed_hom();
    assert!(check_lie(&hom).passed() && oracle::lie(&hom));
    for k in 1..=6 {
        let w = z2_cubed_symplectic(k);
        assert!(check_symplectic(&alg, &w).passed());
        assert!(oracle::symplectic(&alg, w.matrix()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn verifiers_match_brute_force(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        for v in equivalence_round(&mut gen) {
            prop_assert_eq!(v.report, v.oracle, "{} disagrees", v.verifier);
        }
    }
}
