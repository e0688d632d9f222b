//! Cross-module invariants at moderate bounds. The acceptance suite in the
//! CLI crate drives the full desk-profile sweeps; these stay quick enough
//! for every test run.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use unimodal::binomial::{binomial_factorial, binomial_pascal, factorial};
use unimodal::chains::{aigner_scd, gk_scd, recursive_scd, relabel_reverse, validate_scd};
use unimodal::chebyshev::{pi_comparison, sieve, theta_sweep};
use unimodal::injections::{gk_analyze, gk_predecessor, gk_successor, prefix_swap_successor};
use unimodal::operators::{
    check_eq1, check_eq2, check_injectivity, check_kernel_scalar, FieldSpec,
};
use unimodal::sperner::{lubell_sum, random_antichain, sperner_via_chains};
use unimodal::subset::Subset;
use unimodal::zpoly::{add_same_darga, atom, darga, decompose_atoms, is_z, mul, mul_raw, ZPolynomial};

fn subset_strategy(n_max: u8) -> impl Strategy<Value = Subset> {
    (1..=n_max).prop_flat_map(|n| {
        (Just(n), 0..(1u64 << n)).prop_map(|(n, mask)| Subset::new(n, mask).unwrap())
    })
}

fn zpoly_strategy(darga_max: u64) -> impl Strategy<Value = ZPolynomial> {
    (0..=darga_max, prop::collection::vec((0.0..=1.0f64, 1..=5u64), 1..4)).prop_map(
        |(d, layers)| {
            let mut acc = ZPolynomial::zero();
            for (frac, weight) in layers {
                let low = (frac * (d / 2) as f64) as u64;
                let layer = mul_raw(
                    &atom(low, d - low).unwrap(),
                    &ZPolynomial::from_u64_coeffs(0, &[weight]),
                );
                acc = if acc.is_zero() { layer } else { add_same_darga(&acc, &layer).unwrap() };
            }
            acc
        },
    )
}

proptest! {
    #[test]
    fn gk_successor_round_trips(s in subset_strategy(14)) {
        if let Some(next) = gk_successor(&s) {
            prop_assert_eq!(gk_predecessor(&next), Some(s));
            prop_assert!(s.is_proper_subset_of(&next));
            prop_assert_eq!(next.rank(), s.rank() + 1);
            let before = gk_analyze(&s).pairs;
            let after = gk_analyze(&next).pairs;
            prop_assert!(before.iter().all(|p| after.contains(p)));
        }
    }

    #[test]
    fn bracket_residue_is_always_ordered(s in subset_strategy(16)) {
        prop_assert!(gk_analyze(&s).residue_is_ordered());
    }

    #[test]
    fn prefix_swap_images_grow_and_separate(pair in subset_strategy(14).prop_flat_map(|a| {
        let n = a.n();
        (Just(a), 0..(1u64 << n)).prop_map(move |(a, mask)| (a, Subset::new(n, mask).unwrap()))
    })) {
        let (a, b) = pair;
        if 2 * a.rank() < u32::from(a.n()) && a.rank() == b.rank() {
            let fa = prefix_swap_successor(&a).unwrap();
            let fb = prefix_swap_successor(&b).unwrap();
            prop_assert_eq!(fa.image.rank(), a.rank() + 1);
            if a != b {
                prop_assert_ne!(fa.image, fb.image);
            }
        }
    }

    #[test]
    fn z_products_close(p in zpoly_strategy(40), q in zpoly_strategy(40)) {
        prop_assert!(is_z(&p) && is_z(&q));
        let product = mul(&p, &q).unwrap();
        prop_assert!(is_z(&product));
        prop_assert_eq!(darga(&product).unwrap(), darga(&p).unwrap() + darga(&q).unwrap());
    }

    #[test]
    fn z_sums_close(p in zpoly_strategy(30), q in zpoly_strategy(30)) {
        if darga(&p) == darga(&q) {
            let sum = add_same_darga(&p, &q).unwrap();
            prop_assert!(is_z(&sum));
            prop_assert_eq!(darga(&sum), darga(&p));
        }
    }

    #[test]
    fn atom_decomposition_round_trips(p in zpoly_strategy(40)) {
        let layers = decompose_atoms(&p).unwrap();
        let mut rebuilt = ZPolynomial::zero();
        for (a, m) in layers {
            let term = mul_raw(&a, &ZPolynomial::new(0, vec![m]));
            rebuilt = if rebuilt.is_zero() { term } else { add_same_darga(&rebuilt, &term).unwrap() };
        }
        prop_assert_eq!(rebuilt, p);
    }

    #[test]
    fn pascal_matches_factorial(n in 0u32..=40, k in 0i64..=40) {
        if k <= i64::from(n) {
            prop_assert_eq!(binomial_pascal(n, k), binomial_factorial(n, k).unwrap());
        } else {
            prop_assert_eq!(binomial_pascal(n, k), BigUint::from(0u32));
        }
    }
}

#[test]
fn prefix_swap_injective_exhaustively_to_twelve() {
    for n in 1..=12u8 {
        for k in 0..u32::from(n).div_ceil(2) {
            let mut seen = vec![false; 1 << n];
            for mask in Subset::masks_of_rank(n, k) {
                let s = Subset::new(n, mask).unwrap();
                let image = prefix_swap_successor(&s).unwrap().image;
                assert_eq!(image.rank(), k + 1, "n={n} {s}");
                assert!(!seen[image.mask() as usize], "collision at n={n} image {image}");
                seen[image.mask() as usize] = true;
            }
        }
    }
}

#[test]
fn all_constructions_validate_to_ten() {
    for n in 1..=10u8 {
        for (name, dec) in [
            ("recursive", recursive_scd(n).unwrap()),
            ("aigner", aigner_scd(n).unwrap()),
            ("gk", gk_scd(n).unwrap()),
        ] {
            let v = validate_scd(&dec);
            assert!(v.pass(), "{name} n={n}: {v:?}");
            assert_eq!(
                BigUint::from(v.chains),
                binomial_pascal(u32::from(n), i64::from(n / 2)),
                "{name} n={n} chain count"
            );
        }
    }
}

#[test]
fn construction_equivalences_to_ten() {
    for n in 1..=10u8 {
        let recursive = recursive_scd(n).unwrap();
        assert!(aigner_scd(n).unwrap().same_chains(&recursive), "aigner n={n}");
        assert!(
            relabel_reverse(&gk_scd(n).unwrap()).same_chains(&recursive),
            "gk relabel n={n}"
        );
    }
}

#[test]
fn relabel_preserves_validity() {
    for n in 1..=9u8 {
        let relabeled = relabel_reverse(&gk_scd(n).unwrap());
        assert!(validate_scd(&relabeled).pass(), "n={n}");
    }
}

#[test]
fn random_antichains_respect_every_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for n in 1..=12u8 {
        for round in 0..400 {
            let a = random_antichain(n, &mut rng, round % 2 == 0);
            let (blocked, normalized) = lubell_sum(&a);
            assert!(blocked <= factorial(u32::from(n)));
            assert!(normalized <= BigRational::one());
            let report = sperner_via_chains(n, &a).unwrap();
            assert!(report.pass(), "n={n} hits {:?}", report.hits);
            assert!(BigUint::from(a.len()) <= report.bound);
        }
    }
}

#[test]
fn operator_identities_to_eight() {
    for field in [FieldSpec::Rational, FieldSpec::GfP(101)] {
        for n in 1..=8u8 {
            for k in 0..=n {
                assert!(check_eq1(field, n, k).unwrap().pass, "eq1 n={n} k={k}");
                if k >= 1 {
                    for r in 1..=k {
                        assert!(check_eq2(field, n, k, r).unwrap().pass, "eq2 n={n} k={k} r={r}");
                    }
                }
                if k < n {
                    assert!(check_injectivity(field, n, k).unwrap().pass, "rank n={n} k={k}");
                }
                assert!(
                    check_kernel_scalar(field, n, k, k + 1).unwrap().pass,
                    "kernel n={n} k={k}"
                );
            }
        }
    }
}

#[test]
fn chebyshev_bounds_to_ten_thousand() {
    let table = sieve(20_000).unwrap();
    let sweep = theta_sweep(10_000, &table).unwrap();
    assert!(sweep.pass(), "{sweep:?}");
    assert!(sweep.max_gap_ratio < 1.0);
    assert!(sweep.max_linear_ratio < 1.0);

    let comparison = pi_comparison(10_000, &table).unwrap();
    assert!(comparison.checkpoints.len() > 5);
    // Not a failure condition by contract, but worth seeing if it drifts.
    assert_eq!(comparison.flagged, 0);
}

#[test]
fn dual_enumerators_agree_at_six() {
    use unimodal::sperner::{count_antichains, count_antichains_by_deletion};
    // Walks all 7.8 million antichains of B_6 both ways.
    assert_eq!(count_antichains(6).unwrap(), count_antichains_by_deletion(6).unwrap());
}
