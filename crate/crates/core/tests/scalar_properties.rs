use colorlie::{CyclotomicOrder, Scalar};
use proptest::prelude::*;

const ORDERS: [u32; 8] = [1, 2, 3, 4, 5, 6, 8, 12];

fn scalar(order: u32) -> impl Strategy<Value = Scalar> {
    let o = CyclotomicOrder::new(order).unwrap();
    prop::collection::vec((-6i64..=6, 1i64..=5), order as usize).prop_map(move |terms| {
        terms.iter().enumerate().fold(Scalar::zero(o), |acc, (k, &(n, d))| {
            acc + Scalar::from_ratio(o, n, d).unwrap().mul_zeta(k as i64)
        })
    })
}

fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(|n| (scalar(n), scalar(n), scalar(n)))
}

proptest! {
    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses((a, _, _) in triple()) {
        if a.is_zero() {
            prop_assert!(a.inverse().is_err());
        } else {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn text_round_trip((a, _, _) in triple()) {
        prop_assert_eq!(Scalar::parse(a.order(), &a.to_string()).unwrap(), a);
    }
}

#[test]
fn roots_of_unity_have_exact_order() {
    for n in 1..=24u32 {
        let o = CyclotomicOrder::new(n).unwrap();
        let z = Scalar::zeta_pow(o, 1);
        assert!(z.pow(n).is_one());
        for k in 1..n {
            assert!(!z.pow(k).is_one(), "z_{n}^{k} = 1");
        }
    }
}
