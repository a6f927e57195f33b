use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ResidueClass, ResidueSystem};

/// Random exact `m`-cover: starting from `m` copies of `0(1)`, each step
/// replaces a random class `a(n)` by `{a + jn (tn)}_{j<t}` with `t ∈ {2, 3}`.
///
/// Splitting preserves exact covering, so every output is an exact `m`-cover;
/// equivalently it is a concatenation of `m` independently refined exact
/// 1-covers. Deterministic in `seed`.
pub fn cover_generator(m: usize, steps: usize, seed: u64) -> ResidueSystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut classes = vec![ResidueClass::new(0, 1).expect("valid"); m.max(1)];
    for _ in 0..steps {
        let idx = rng.gen_range(0..classes.len());
        let t: u64 = rng.gen_range(2..=3);
        let c = classes[idx];
        let refined = (0..t).map(|j| {
            ResidueClass::new(c.residue() + (j * c.modulus()) as i64, t * c.modulus())
                .expect("valid modulus")
        });
        classes.splice(idx..=idx, refined);
    }
    ResidueSystem::new(classes).expect("nonempty")
}
