//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Bounds and tolerances are pinned here, in code.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use unimodal::binomial::{binomial_factorial, binomial_pascal, verify_monotone, BinomialTable};
use unimodal::chains::{aigner_scd, gk_scd, recursive_scd, relabel_reverse, validate_scd};
use unimodal::chebyshev::{central_sweep, pi_comparison, sieve, theta_sweep};
use unimodal::injections::prefix_swap_successor;
use unimodal::sperner::{
    chain_index, lubell_sum, max_antichain_exhaustive, random_antichain, sperner_via_chains_with,
};
use unimodal::subset::Subset;
use unimodal_cli::runners::{self, Bounds};
use unimodal_cli::export_dot;

fn criterion(number: u32, label: &str, body: impl FnOnce()) {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!("criterion {number:02} ({label}): PASS"),
        Err(cause) => {
            println!("criterion {number:02} ({label}): FAIL");
            resume_unwind(cause);
        }
    }
}

#[test]
fn criterion_01_monotonicity() {
    criterion(1, "monotonicity n<=60, equality iff n=2k+1", || {
        let start = Instant::now();
        for n in 0..=60u32 {
            let checks = verify_monotone(n);
            assert_eq!(checks.len() as u32, n / 2 + n % 2);
            for c in &checks {
                assert!(c.le_ok, "C({n},{}) > C({n},{})", c.k, c.k + 1);
                assert!(c.ratio_ok, "ratio identity fails at n={n} k={}", c.k);
                assert_eq!(c.equality, n == 2 * c.k + 1, "equality off at n={n} k={}", c.k);
            }
        }
        assert!(start.elapsed().as_secs() < 1, "monotonicity sweep exceeded 1 s");
    });
}

#[test]
fn criterion_02_dual_definition() {
    criterion(2, "Pascal vs factorial identical n<=60", || {
        let start = Instant::now();
        let table = BinomialTable::new(60);
        for n in 0..=60u32 {
            for k in 0..=n {
                // binomial_factorial asserts the division is exact.
                let factorial_form = binomial_factorial(n, i64::from(k)).unwrap();
                assert_eq!(table.get(n, i64::from(k)), factorial_form, "n={n} k={k}");
            }
        }
        // The standalone recurrence entry point agrees with the table.
        for (n, k) in [(0, 0), (11, 4), (37, 18), (60, 30)] {
            assert_eq!(binomial_pascal(n, k), table.get(n, k));
        }
        assert!(start.elapsed().as_secs() < 1, "dual-definition sweep exceeded 1 s");
    });
}

#[test]
fn criterion_03_worked_injection_example() {
    criterion(3, "n=11 {1,2,4,11} -> {3,5,6,7,11}, r=7", || {
        let input = Subset::from_elements(11, &[1, 2, 4, 11]).unwrap();
        let out = prefix_swap_successor(&input).unwrap();
        assert_eq!(out.image, Subset::from_elements(11, &[3, 5, 6, 7, 11]).unwrap());
        assert_eq!(out.r, 7);
        assert!(!input.is_subset_of(&out.image), "this image must not contain the input");
    });
}

#[test]
fn criterion_04_prefix_swap_injectivity() {
    criterion(4, "prefix-swap injective, exhaustive n<=20", || {
        for n in 1..=20u8 {
            for k in 0..u32::from(n).div_ceil(2) {
                let mut seen = vec![false; 1 << n];
                for mask in Subset::masks_of_rank(n, k) {
                    let s = Subset::new(n, mask).unwrap();
                    let out = prefix_swap_successor(&s).unwrap();
                    assert_eq!(out.image.rank(), k + 1, "size off for {s} at n={n}");
                    assert!(
                        !seen[out.image.mask() as usize],
                        "collision at n={n} k={k}: image {}",
                        out.image
                    );
                    seen[out.image.mask() as usize] = true;
                }
            }
        }
    });
}

#[test]
fn criterion_05_scd_validity() {
    criterion(5, "recursive/Aigner/GK are SCDs for n<=16", || {
        for n in 1..=16u8 {
            let expected_chains = binomial_pascal(u32::from(n), i64::from(n / 2));
            for (name, dec) in [
                ("recursive", recursive_scd(n).unwrap()),
                ("aigner", aigner_scd(n).unwrap()),
                ("gk", gk_scd(n).unwrap()),
            ] {
                let v = validate_scd(&dec);
                assert!(v.pass(), "{name} n={n}: {v:?}");
                assert_eq!(BigUint::from(v.chains), expected_chains, "{name} n={n}");
            }
        }

        let rendered: Vec<String> =
            recursive_scd(1).unwrap().chains().iter().map(|c| c.to_string()).collect();
        assert_eq!(rendered, ["{} -> {1}"]);
        let rendered: Vec<String> =
            recursive_scd(2).unwrap().chains().iter().map(|c| c.to_string()).collect();
        assert_eq!(rendered, ["{} -> {1} -> {1,2}", "{2}"]);
        let rendered: Vec<String> =
            recursive_scd(3).unwrap().chains().iter().map(|c| c.to_string()).collect();
        assert_eq!(
            rendered,
            ["{} -> {1} -> {1,2} -> {1,2,3}", "{3} -> {1,3}", "{2} -> {2,3}"]
        );
    });
}

#[test]
fn criterion_06_construction_equivalences() {
    criterion(6, "Aigner = recursive, reversed GK = recursive, n<=12", || {
        for n in 1..=12u8 {
            let recursive = recursive_scd(n).unwrap();
            assert!(
                aigner_scd(n).unwrap().same_chains(&recursive),
                "aigner differs from recursive at n={n}"
            );

            let relabeled = relabel_reverse(&gk_scd(n).unwrap());
            if !relabeled.same_chains(&recursive) {
                // Contracted fallback: both must still be valid SCDs, and
                // the discrepancy is a reported finding, not a failure.
                assert!(validate_scd(&relabeled).pass(), "relabeled GK invalid at n={n}");
                assert!(validate_scd(&recursive).pass(), "recursive invalid at n={n}");
                println!(
                    "finding: reversed Greene-Kleitman differs from recursive at n={n}; both validate"
                );
            }
        }
    });
}

#[test]
fn criterion_07_sperner() {
    criterion(7, "exhaustive max antichain, LYM on 10^4 random antichains per n<=14", || {
        for n in 1..=5u8 {
            let max = max_antichain_exhaustive(n).unwrap();
            assert_eq!(
                BigUint::from(max),
                binomial_pascal(u32::from(n), i64::from(n / 2)),
                "n={n}"
            );
        }

        const SAMPLES: usize = 10_000;
        for n in 1..=14u8 {
            let dec = recursive_scd(n).unwrap();
            let index = chain_index(&dec);
            let total = unimodal::binomial::factorial(u32::from(n));
            let mut rng = ChaCha8Rng::seed_from_u64(0xacce97 ^ u64::from(n));
            for round in 0..SAMPLES {
                let a = random_antichain(n, &mut rng, round % 2 == 0);
                let (blocked, normalized) = lubell_sum(&a);
                assert!(blocked <= total, "Lubell integer sum exceeds n! at n={n}");
                assert!(normalized <= BigRational::one(), "LYM sum exceeds 1 at n={n}");
                let report = sperner_via_chains_with(&dec, &index, &a).unwrap();
                assert!(
                    report.pass(),
                    "chain bound violated at n={n}: chain {:?} hit twice",
                    report.violation
                );
            }
        }
    });
}

#[test]
fn criterion_08_z_algebra() {
    criterion(8, "Z closure: (1+x)^n n<=100, dice n<=50, atoms b,d<=8, 10^3 products", || {
        let bounds = Bounds::desk();
        assert_eq!(bounds.zpoly_gf_max, 100);
        assert_eq!(bounds.zpoly_dice_max, 50);
        assert_eq!(bounds.zpoly_atom_max, 8);
        assert_eq!(bounds.zpoly_closure_samples, 1000);
        let report = runners::zpoly_suite(&bounds, None);
        let failures: Vec<_> = report.records.iter().filter(|r| !r.pass).collect();
        assert!(failures.is_empty(), "{failures:?}");
    });
}

#[test]
fn criterion_09_operator_identities() {
    criterion(9, "Eq1 n<=12, Eq2 n<=10, ranks over Q and GF(101), kernel scalars", || {
        let bounds = Bounds::desk();
        assert_eq!(bounds.operators_n_max, 12);
        assert_eq!(bounds.operators_eq2_max, 10);
        assert_eq!(bounds.operators_kernel_max, 10);
        assert_eq!(bounds.gfp_prime, 101);
        let report = runners::operators_suite_desk(&bounds);
        let failures: Vec<_> = report.records.iter().filter(|r| !r.pass).collect();
        assert!(failures.is_empty(), "{failures:?}");

        // The sweep must actually cover both fields and all four checks.
        for needle in [
            "eq1 field=rational n=12",
            "eq1 field=gfp:101 n=12",
            "eq2 field=rational n=10",
            "rank field=gfp:101 n=12",
            "kernel-scalar field=rational n=10",
        ] {
            assert!(
                report.records.iter().any(|r| format!("{}/{} {}", "operators", r.id, r.params)
                    .contains(needle)),
                "missing coverage: {needle}"
            );
        }
    });
}

#[test]
fn criterion_10_chebyshev() {
    criterion(10, "central divisibility n<=2000, theta bounds n<=10^6, pi tabulated", || {
        let start = Instant::now();
        let table = sieve(2_000_000).unwrap();

        let sweep = central_sweep(2000, &table).unwrap();
        assert_eq!(sweep.len(), 2000);
        for check in &sweep {
            assert!(check.divides, "prime product does not divide C(2n,n) at n={}", check.n);
            assert!(check.below_four_to_n, "prime product exceeds 4^n at n={}", check.n);
        }

        // Relative tolerance 1e-6 is inside theta_sweep's pass criterion.
        assert!((unimodal::chebyshev::THETA_RELATIVE_EPS - 1e-6).abs() < f64::EPSILON);
        let theta = theta_sweep(1_000_000, &table).unwrap();
        assert!(theta.pass(), "{theta:?}");

        let comparison = pi_comparison(1_000_000, &table).unwrap();
        assert!(comparison.checkpoints.iter().any(|c| c.x == 1_000_000));
        let last = comparison.checkpoints.last().unwrap();
        assert_eq!(last.pi, 78_498);
        assert!(start.elapsed().as_secs() < 60, "chebyshev sweep exceeded 1 minute");
    });
}

#[test]
fn criterion_11_cli_desk_profile() {
    criterion(11, "`all --profile desk` exits 0; DOT golden file", || {
        let output = Command::new(env!("CARGO_BIN_EXE_unimodal"))
            .args(["all", "--profile", "desk"])
            .output()
            .expect("binary spawns");
        assert!(
            output.status.success(),
            "desk profile failed:\n{}",
            String::from_utf8_lossy(&output.stdout)
        );

        let golden = include_str!("golden/recursive_scd_3.dot");
        assert_eq!(export_dot(&recursive_scd(3).unwrap()), golden);
    });
}
