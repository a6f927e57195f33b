use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zerocover::characterization::{
    identity_42_check, lemma41_check, psi_value, theorem41_converse, theorem41_forward, UniPoly,
};
use zerocover::covers::cover_generator;
use zerocover::exactmath::{frac_part, rational, Rational};
use zerocover::zerosum::SubsetPolynomial;
use zerocover::{CycloElement, ResidueSystem};

fn random_poly(rng: &mut ChaCha8Rng, k: usize, degree: u32) -> SubsetPolynomial {
    let terms = (0..4)
        .map(|_| {
            let mut e = vec![0u32; k];
            for _ in 0..rng.gen_range(0..=degree) {
                e[rng.gen_range(0..k)] += 1;
            }
            (e, rational(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
        })
        .collect();
    SubsetPolynomial::from_terms(k, degree, terms).unwrap()
}

/// `ψ(θ)` summed term by term over all subsets, one root of unity at a time.
fn psi_by_enumeration(a: &ResidueSystem, f: &SubsetPolynomial, theta: &Rational) -> CycloElement {
    let n = a.period().unwrap() as usize;
    let mut acc = CycloElement::zero(n);
    for mask in 0..1u64 << a.len() {
        if frac_part(&a.weighted_sum(mask)) != *theta {
            continue;
        }
        let mut phase = Rational::from_integer(0.into());
        for s in (0..a.len()).filter(|s| mask >> s & 1 == 1) {
            let c = a.classes()[s];
            phase += rational(c.residue() * a.weights()[s], c.modulus() as i64);
        }
        let e = (phase * Rational::from_integer((n as i64).into())).to_integer();
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        let coeff = f.eval_indicator(mask) * Rational::from_integer(sign.into());
        acc.add_monomial(i64::try_from(e).unwrap(), &coeff);
    }
    acc
}

#[test]
fn psi_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for seed in 0..30u64 {
        let a = cover_generator(1 + (seed % 2) as usize, (seed % 4) as usize, seed);
        let a = a.reweighted((0..a.len()).map(|_| rng.gen_range(-3..=3)).collect()).unwrap();
        let f = random_poly(&mut rng, a.len(), 2);
        for theta in a.subset_fraction_spectrum().unwrap() {
            let got = psi_value(&a, &f, &theta).unwrap();
            assert!(got.value_eq(&psi_by_enumeration(&a, &f, &theta)), "seed {seed} theta {theta}");
        }
    }
}

#[test]
fn identity_at_z_holds_when_degree_is_small() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    for seed in 0..200u64 {
        let m = 1 + (seed % 3) as usize;
        let a = cover_generator(m, (seed % 4) as usize, seed);
        let a = a.reweighted((0..a.len()).map(|_| rng.gen_range(-3..=3)).collect()).unwrap();
        let z = rng.gen_range(-20..20);
        let w = a.covering_function(z) as u32;
        let f = random_poly(&mut rng, a.len(), w);
        assert!(identity_42_check(&a, &f, z).unwrap());
        checked += 1;
    }
    assert_eq!(checked, 200);
}

#[test]
fn psi_vanishing_on_generated_covers() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for seed in 0..40u64 {
        let m = 1 + (seed % 3) as usize;
        let a = cover_generator(m, (seed % 4) as usize, seed);
        // deg f <= m(A) and c(I_z) = 0 for all z once f has no squarefree
        // monomial of degree m
        let f = random_poly(&mut rng, a.len(), m as u32 - 1);
        let r = lemma41_check(&a, &f).unwrap();
        assert!(r.coprime);
        if r.coefficients_vanish {
            assert!(r.psi_vanish);
        }
    }
}

#[test]
fn forward_identities_on_generated_covers() {
    for seed in 0..60u64 {
        let m = 1 + (seed % 3) as usize;
        let a = cover_generator(m, (seed % 5) as usize, seed);
        let cert = theorem41_forward(&a, m, None).unwrap();
        assert!(cert.results.iter().all(|r| r.vanishes));
        assert!(!cert.results.is_empty());
    }
}

#[test]
fn converse_detects_non_covers() {
    for seed in 0..60u64 {
        let m = 1 + (seed % 3) as usize;
        let a = cover_generator(m, 1 + (seed % 5) as usize, seed);
        let drop = seed as usize % a.len();
        let mask = a.full_mask() & !(1 << drop);
        let b = a.select(mask).unwrap();
        let v = theorem41_converse(&b, m, None).unwrap();
        assert!(!v.is_m_cover && !v.all_vanish);
        assert!(v.failing.is_some());
    }
}

#[test]
fn custom_families_agree_with_the_default() {
    let a = ResidueSystem::choi();
    let polys: Vec<UniPoly> = (0..2).map(UniPoly::monomial).collect();
    let mu: Vec<Rational> = a.classes().iter().map(|c| rational(1, c.modulus() as i64)).collect();
    assert!(theorem41_forward(&a, 2, Some((&polys, &mu))).is_ok());
    assert!(theorem41_converse(&a, 2, None).unwrap().all_vanish);
}
