use num_bigint::BigInt;
use proptest::prelude::*;
use zerocover::covers::{cover_generator, parse_cover, serialize_cover};
use zerocover::exactmath::{gen_binomial, rational};
use zerocover::{Error, ResidueSystem};

fn brute_reciprocal_counts(a: &ResidueSystem, m: usize) -> Vec<u64> {
    let mut counts = vec![0u64; m + 1];
    for mask in 0..1u64 << a.len() {
        let r = a.reciprocal_sum(mask);
        if r.is_integer() {
            let n: usize = r.to_integer().try_into().unwrap();
            if n <= m {
                counts[n] += 1;
            }
        }
    }
    counts
}

#[test]
fn choi_fixture() {
    let choi = ResidueSystem::choi();
    let p = choi.profile().unwrap();
    assert_eq!(p.period, 30);
    assert_eq!((p.min_mult, p.max_mult), (2, 2));
    assert_eq!(p.reciprocal_sum, rational(2, 1));
    for x in 0..30 {
        assert_eq!(choi.covering_function(x), 2);
    }
    assert_eq!(choi.find_exact_split(2, 1).unwrap(), None);
}

#[test]
fn generated_covers_have_reciprocal_sum_m() {
    for seed in 0..100u64 {
        let m = 1 + (seed % 4) as usize;
        let a = cover_generator(m, (seed % 6) as usize, seed);
        let p = a.profile().unwrap();
        assert_eq!(p.reciprocal_sum, rational(m as i64, 1));
        assert_eq!((p.min_mult, p.max_mult), (m, m));
    }
}

#[test]
fn subset_counts_match_enumeration() {
    for seed in 0..60u64 {
        let m = 1 + (seed % 4) as usize;
        let steps = (seed % 5) as usize;
        let a = cover_generator(m, steps, seed);
        if a.len() > 14 {
            continue;
        }
        let counts = a.exact_cover_subset_counts(m).unwrap();
        assert_eq!(counts, brute_reciprocal_counts(&a, m), "seed {seed}");
        for (n, &c) in counts.iter().enumerate() {
            assert!(BigInt::from(c) >= gen_binomial(&BigInt::from(m), n as u64));
        }
    }
}

#[test]
fn split_of_a_concatenation_exists() {
    for seed in 0..40u64 {
        let a = cover_generator(1, (seed % 4) as usize, seed);
        let b = cover_generator(2, (seed % 3) as usize, seed + 1000);
        let joined = a.concat(&b);
        let split = joined.find_exact_split(3, 1).unwrap().expect("a concatenation splits");
        assert_eq!(split.part.len() + split.rest.len(), joined.len());
    }
}

#[test]
fn zhang_subset_on_generated_covers() {
    for seed in 0..50u64 {
        let a = cover_generator(1 + (seed % 3) as usize, (seed % 7) as usize, seed);
        let i = a.zhang_integer_subset().unwrap();
        assert!(!i.is_empty());
        let mask = i.iter().fold(0u64, |m, &s| m | 1 << (s - 1));
        assert!(a.reciprocal_sum(mask).is_integer());
    }
}

#[test]
fn bad_files_are_input_errors() {
    assert!(matches!(parse_cover("0 mod 0\n"), Err(Error::Input(_))));
    assert!(matches!(parse_cover("x mod 2\n"), Err(Error::Input(_))));
    assert!(matches!(parse_cover("# nothing\n"), Err(Error::Input(_))));
}

fn arb_system() -> impl Strategy<Value = ResidueSystem> {
    prop::collection::vec((-40i64..40, 1u64..13, -6i64..7), 1..10).prop_map(|v| {
        let pairs: Vec<(i64, u64)> = v.iter().map(|&(a, n, _)| (a, n)).collect();
        let weights = v.iter().map(|&(_, _, w)| w).collect();
        ResidueSystem::from_pairs(&pairs).unwrap().reweighted(weights).unwrap()
    })
}

proptest! {
    #[test]
    fn cover_file_round_trip(a in arb_system()) {
        let text = serialize_cover(&a);
        let back = parse_cover(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(serialize_cover(&back), text);
    }

    #[test]
    fn reciprocal_sum_is_average_multiplicity(a in arb_system()) {
        let p = a.profile().unwrap();
        let total: u64 = p.histogram.iter().map(|(&m, &c)| m as u64 * c).sum();
        prop_assert_eq!(p.reciprocal_sum, rational(total as i64, p.period as i64));
    }

    #[test]
    fn spectrum_contains_every_subset_fraction(a in arb_system(), mask in any::<u64>()) {
        let mask = mask & a.full_mask();
        let s = a.subset_fraction_spectrum().unwrap();
        let f = zerocover::exactmath::frac_part(&a.weighted_sum(mask));
        prop_assert!(s.contains(&f));
    }
}
