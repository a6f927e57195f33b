use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use super::ZeroSumInstance;
use crate::covers::{cover_generator, ResidueClass, ResidueSystem};
use crate::error::Result;
use crate::exactmath::Rational;
use crate::pgroups::GroupShape;

/// A random instance on a `(d*(G) + p^h)`-cover with at most `max_k`
/// classes: a generated exact cover of that multiplicity plus up to two
/// random extra classes, random weights in `[-5, 5]`, random elements and
/// target, and `α` taken from the subset spectrum (shifted by an integer)
/// or, one time in four, a fraction with a fresh denominator.
pub fn random_instance<R: Rng>(shape: &GroupShape, level: u32, max_k: usize, rng: &mut R) -> Result<ZeroSumInstance> {
    let q = match level {
        0 => 1,
        h => shape.prime().expect("p-group").pow(h),
    };
    let m = (shape.d_star() + q) as usize;
    let room = max_k.saturating_sub(m);
    let steps = rng.gen_range(0..=room / 2);
    let mut system = cover_generator(m, steps, rng.gen());
    let extras = rng.gen_range(0..=2usize).min(max_k.saturating_sub(system.len()));
    for _ in 0..extras {
        let n = *[2u64, 3, 4, 6].choose(rng).expect("nonempty");
        let extra = ResidueSystem::new(vec![ResidueClass::new(rng.gen_range(0..n as i64), n)?])?;
        system = system.concat(&extra);
    }
    let weights = (0..system.len()).map(|_| rng.gen_range(-5..=5)).collect();
    let system = system.reweighted(weights)?;

    let order = shape.order() as usize;
    let elements = (0..system.len())
        .map(|_| shape.element_at(rng.gen_range(0..order)))
        .collect();
    let target = if rng.gen_bool(0.5) { shape.zero() } else { shape.element_at(rng.gen_range(0..order)) };

    let alpha = if rng.gen_range(0..4) == 0 {
        let den = *[5i64, 7, 11].choose(rng).expect("nonempty");
        Rational::new(BigInt::from(rng.gen_range(1..den)), BigInt::from(den))
    } else {
        let spectrum = system.subset_fraction_spectrum()?;
        let base = spectrum.choose(rng).expect("contains 0").clone();
        base + Rational::from_integer(BigInt::from(rng.gen_range(-3..=3)))
    };
    ZeroSumInstance::new(system, shape.clone(), elements, target, level, alpha)
}
