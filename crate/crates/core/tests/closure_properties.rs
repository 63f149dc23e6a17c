use colorlie::axioms::{check_lie, check_pre_lie, sub_adjacent};
use colorlie::constructions::{centroid, derivations, tensor_with_associative, twist_by_centroid, yau_twist, TwistMode};
use colorlie::forms::{check_symplectic, solve_quadratic_forms, solve_symplectic_forms, NONDEGENERACY};
use colorlie::linalg::{in_span, span_basis};
use colorlie::prelie::{check_phase_space, left_bundle, phase_space, recovered_pre_lie};
use colorlie::representations::{
    adjoint, check_four_term, check_representation, semidirect_sum_unchecked, RepresentationBundle,
};
use colorlie::{Algebra3Rho, AlgebraKind, BilinearForm, HomogeneousMap, Matrix, Scalar};
use colorlie_testkit::mutate::bump_matrix;
use colorlie_testkit::oracle;
use colorlie_testkit::random::Gen;
use colorlie_testkit::suite::{closure, CONSTRUCTIONS};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn constructions_close_on_golden_and_random_inputs() {
    for name in CONSTRUCTIONS {
        let (golden, random) = closure(name, 7, 4);
        assert!(golden.all_passed(), "{name} golden: {:?}", golden.failures);
        assert!(random.all_passed(), "{name} random: {:?}", random.failures);
    }
}

/// A random Lie algebra of dimension at most two over Q or Q(i) with rho = +-1.
fn small_lie(gen: &mut Gen) -> Algebra3Rho {
    loop {
        let alg = gen.lie();
        if alg.dim() <= 2 && alg.order().get() <= 2 {
            return alg;
        }
    }
}

/// Every square matrix of the given size with entries in {-1, 0, 1}.
fn grid(alg: &Algebra3Rho) -> Vec<Matrix> {
    let d = alg.dim();
    let o = alg.order();
    let cells = d * d;
    (0..3usize.pow(cells as u32))
        .map(|mut code| {
            Matrix::from_fn(o, d, d, |_, _| {
                let v = (code % 3) as i64 - 1;
                code /= 3;
                Scalar::from_int(o, v)
            })
        })
        .collect()
}

fn flat(m: &Matrix) -> Vec<Scalar> {
    m.to_rows().into_iter().flatten().collect()
}

fn spans(alg: &Algebra3Rho, forms: &[BilinearForm], m: &Matrix) -> bool {
    let n = alg.dim() * alg.dim();
    let members: Vec<_> = forms.iter().map(|f| flat(f.matrix())).collect();
    in_span(alg.order(), n, &span_basis(alg.order(), n, &members), &flat(m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sub_adjacent_of_pre_lie_is_lie(seed in any::<u64>()) {
        let pre = Gen::new(seed).pre_lie();
        prop_assert!(check_pre_lie(&pre).passed());
        prop_assert!(check_lie(&sub_adjacent(&pre).unwrap()).passed());
    }

    #[test]
    fn left_bundle_represents_the_sub_adjacent(seed in any::<u64>()) {
        let pre = Gen::new(seed).pre_lie();
        prop_assert!(check_representation(&left_bundle(&pre).unwrap()).passed());
    }

    #[test]
    fn sign_character_twists_stay_lie(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let alg = gen.lie();
        let beta = HomogeneousMap::even(alg.basis(), gen.sign_character(&alg)).unwrap();
        prop_assert!(check_lie(&yau_twist(&alg, &beta).unwrap()).passed());
    }

    #[test]
    fn semidirect_is_lie_exactly_for_representations(seed in any::<u64>(), pick in any::<usize>()) {
        let mut gen = Gen::new(seed);
        let alg = if gen.rng().gen_bool(0.5) { gen.lie() } else { gen.hom_lie() };
        let b = adjoint(&alg).unwrap();
        let d = alg.dim();
        let mut mu = b.mu_all().to_vec();
        let (p, r, c) = (pick % mu.len(), (pick / 7) % d, (pick / 31) % d);
        mu[p] = bump_matrix(&mu[p], r, c);
        let beta = Some(alg.twist().clone());
        for bundle in [Some(b), RepresentationBundle::new(alg.clone(), alg.basis().clone(), mu, beta).ok()]
            .into_iter()
            .flatten()
        {
            let rep = check_representation(&bundle).passed();
            let big = semidirect_sum_unchecked(&bundle, AlgebraKind::Lie).unwrap();
            prop_assert_eq!(rep, check_lie(&big).passed());
        }
    }

    #[test]
    fn representations_satisfy_the_four_term_identity(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let alg = gen.lie();
        let b = adjoint(&alg).unwrap();
        prop_assert!(check_representation(&b).passed());
        prop_assert!(check_four_term(&b).passed());
    }

    #[test]
    fn phase_space_recovers_the_pre_lie_product(seed in any::<u64>()) {
        let pre = Gen::new(seed).pre_lie();
        let ps = phase_space(&pre).unwrap();
        prop_assert!(check_phase_space(&ps).passed());
        let back = recovered_pre_lie(&ps).unwrap();
        prop_assert_eq!(back.bracket(), pre.bracket());
    }

    #[test]
    fn identity_inputs_change_nothing(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let alg = gen.lie();
        let id = HomogeneousMap::identity(alg.order(), alg.basis());
        for mode in [TwistMode::Once, TwistMode::Thrice] {
            let twisted = twist_by_centroid(&alg, &id, mode).unwrap();
            prop_assert_eq!(twisted.bracket(), alg.bracket());
        }
        let yau = yau_twist(&alg, &id).unwrap();
        prop_assert_eq!(yau.bracket(), alg.bracket());

        let (qa, chi) = gen.quadratic_pair();
        let (mut line, unit) = gen.associative_line(&qa);
        let mut br = line.bracket().clone();
        br.set(0, 0, 0, &[Scalar::one(qa.order())]);
        line = line.with_bracket(br, AlgebraKind::Associative).unwrap();
        let (e, form) = tensor_with_associative(&qa, &chi, &line, &unit).unwrap();
        prop_assert_eq!(e.bracket(), qa.bracket());
        prop_assert_eq!(form.matrix(), chi.matrix());
    }

    #[test]
    fn map_solvers_are_sound_and_complete_on_small_grids(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let alg = small_lie(&mut gen);
        let candidates = grid(&alg);
        for degree in alg.group().elements() {
            let ders = derivations(&alg, &degree, None).unwrap();
            let cents = centroid(&alg, &degree).unwrap();
            for h in &ders.maps {
                prop_assert!(oracle::derivation(&alg, h.matrix(), &degree));
            }
            for h in &cents.maps {
                prop_assert!(oracle::centroid(&alg, h.matrix(), &degree));
            }
            for m in &candidates {
                if oracle::derivation(&alg, m, &degree) {
                    prop_assert!(ders.contains(m), "missed derivation {:?}", m);
                }
                if oracle::centroid(&alg, m, &degree) {
                    prop_assert!(cents.contains(m), "missed centroid element {:?}", m);
                }
            }
        }
    }

    #[test]
    fn form_solvers_are_sound_and_complete_on_small_grids(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let alg = small_lie(&mut gen);
        let symplectic = solve_symplectic_forms(&alg).unwrap();
        let quadratic = solve_quadratic_forms(&alg).unwrap();
        for w in &symplectic {
            let report = check_symplectic(&alg, w);
            prop_assert!(report.violations.iter().all(|v| v.identity == NONDEGENERACY));
        }
        for m in grid(&alg) {
            if oracle::symplectic(&alg, &m) {
                prop_assert!(spans(&alg, &symplectic, &m), "missed symplectic form {:?}", m);
            }
            if oracle::quadratic(&alg, &m) {
                prop_assert!(spans(&alg, &quadratic, &m), "missed quadratic form {:?}", m);
            }
        }
    }
}
