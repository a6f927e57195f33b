use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zerocover::covers::cover_generator;
use zerocover::exactmath::indicator_sweep;
use zerocover::pgroups::{davenport_constant, egz_constant, has_nonempty_zero_sum, olson_signed_count};
use zerocover::zerosum::egz_weighted_find;
use zerocover::{GroupElement, GroupShape};

fn brute_signed(g: &GroupShape, c: &GroupElement, seq: &[GroupElement]) -> i64 {
    (0..1u64 << seq.len())
        .filter(|mask| {
            let picked = (0..seq.len()).filter(|i| mask >> i & 1 == 1).map(|i| &seq[i]);
            g.sum(picked).unwrap() == *c
        })
        .map(|mask| if mask.count_ones() % 2 == 0 { 1 } else { -1 })
        .sum()
}

#[test]
fn davenport_values_for_small_p_groups() {
    for (desc, expect) in [("2:1", 2), ("3:1", 3), ("2:2", 4), ("2:1,1", 3), ("5:1", 5), ("7:1", 7), ("2:3", 8), ("2:1,2", 5), ("2:1,1,1", 4), ("3:2", 9), ("3:1,1", 5)] {
        let g: GroupShape = desc.parse().unwrap();
        assert_eq!(davenport_constant(&g).unwrap(), expect, "{desc}");
    }
}

#[test]
fn egz_values() {
    for (desc, expect) in [("2:1", 3), ("3:1", 5), ("2:2", 7), ("5:1", 9), ("2:1,1", 5), ("2:1,2", 9)] {
        let g: GroupShape = desc.parse().unwrap();
        assert_eq!(egz_constant(&g).unwrap(), expect, "{desc}");
    }
}

#[test]
fn olson_against_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for desc in ["3:1", "3:2", "2:1,2", "5:1", "2:1,1,1"] {
        let g: GroupShape = desc.parse().unwrap();
        let k = g.d_star() as usize + 1;
        for _ in 0..200 {
            let seq: Vec<_> = (0..k).map(|_| g.element_at(rng.gen_range(0..g.order() as usize))).collect();
            let c = g.element_at(rng.gen_range(0..g.order() as usize));
            let got = olson_signed_count(&g, &c, &seq).unwrap();
            assert_eq!(got, brute_signed(&g, &c, &seq));
            assert_eq!(got.rem_euclid(g.prime().unwrap() as i64), 0);
        }
        // the extremal length d*(G) admits a zero-sum-free sequence
        let free = zerocover::pgroups::extremal_sequence(&g);
        assert!(!has_nonempty_zero_sum(&g, &free).unwrap());
    }
}

#[test]
fn weighted_egz_witnesses() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for (desc, q) in [("2:1", 2u64), ("3:1", 3), ("2:1", 4), ("2:1,1", 4)] {
        let g: GroupShape = desc.parse().unwrap();
        for seed in 0..15u64 {
            let m = (g.d_star() + q) as usize;
            let a = cover_generator(m, rng.gen_range(0..3), seed);
            let seq: Vec<_> = (0..a.len()).map(|_| g.element_at(rng.gen_range(0..g.order() as usize))).collect();
            let w = egz_weighted_find(&a, &g, &seq, q).unwrap();
            let picked = w.indices.iter().map(|&i| &seq[i - 1]);
            assert!(g.is_zero(&g.sum(picked).unwrap()));
            let mask = w.indices.iter().fold(0u64, |acc, &s| acc | 1 << (s - 1));
            assert_eq!(a.reciprocal_sum(mask), zerocover::exactmath::rational(q as i64, 1));
        }
    }
}

#[test]
fn indicator_sweep_full_range() {
    for p in [2u64, 3, 5, 7] {
        for h in 0..=3 {
            let r = indicator_sweep(p, h, -300, 300).unwrap();
            assert_eq!(r.checked, 601);
            assert_eq!(r.lucas_checked, 300);
        }
    }
}
