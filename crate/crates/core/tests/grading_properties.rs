use colorlie::{CyclotomicOrder, GradingGroup, Scalar, TwoCycle};
use proptest::prelude::*;

/// Groups of order at most 64 with a valid random exponent matrix.
fn cycle() -> impl Strategy<Value = TwoCycle> {
    let moduli = prop::collection::vec(prop::sample::select(vec![2u32, 3, 4]), 1..=3)
        .prop_filter("order at most 64", |m| m.iter().product::<u32>() <= 64);
    moduli.prop_flat_map(|m| {
        let k = m.len();
        (Just(m), prop::collection::vec(0i64..12, k * k))
    })
    .prop_map(|(m, raw)| {
        let k = m.len();
        let order = 12u32;
        // e_ij must be killed by both moduli and antisymmetric mod 12
        let mut e = vec![vec![0i64; k]; k];
        for i in 0..k {
            for j in 0..k {
                let step = 12 / gcd(m[i], m[j]) as i64;
                if i < j {
                    e[i][j] = raw[i * k + j] * step;
                    e[j][i] = -e[i][j];
                } else if i == j {
                    // 2 e_ii = 0 mod 12 forces e_ii in {0, 6}
                    let v = if raw[i * k + i] % 2 == 1 { 6 } else { 0 };
                    e[i][i] = if v % step == 0 { v } else { 0 };
                }
            }
        }
        let group = GradingGroup::new(m).unwrap();
        TwoCycle::new_validated(group, CyclotomicOrder::new(order).unwrap(), &e).unwrap()
    })
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bicharacter_laws(rho in cycle()) {
        let g = rho.group();
        let all = g.elements();
        let one = Scalar::one(rho.order());
        for a in &all {
            let aa = rho.value(a, a);
            prop_assert!(aa.is_one() || (&aa + &one).is_zero());
            for b in &all {
                prop_assert!((rho.value(a, b) * rho.value(b, a)).is_one());
                for c in &all {
                    prop_assert_eq!(rho.value(&g.add(a, b), c), rho.value(a, c) * rho.value(b, c));
                }
            }
        }
    }

    #[test]
    fn values_recover_the_exponents(rho in cycle()) {
        let g = rho.group().clone();
        let gens: Vec<_> = (0..g.rank())
            .map(|i| {
                let r: Vec<i64> = (0..g.rank()).map(|j| i64::from(i == j)).collect();
                g.element(&r).unwrap()
            })
            .collect();
        let values: Vec<Vec<Scalar>> =
            gens.iter().map(|a| gens.iter().map(|b| rho.value(a, b)).collect()).collect();
        let back = TwoCycle::from_matrix(g, rho.order(), &gens, &values).unwrap();
        prop_assert_eq!(back, rho);
    }
}
