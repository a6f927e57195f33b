//! Randomized search for counterexamples to statements that are only known
//! for prime powers, run at non-prime-power parameters.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::covers::{cover_generator, ResidueSystem};
use crate::error::{Error, Result};
use crate::subsets::{mask_to_indices, SubsetSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanKind {
    /// `w_A ∈ {2n-1, 2n}` over `Z_n`: a zero-sum `I` with `Σ 1/n_s = n`
    Conj21i,
    /// exact `3n`-cover, zero-sum sequence over `Z_n ⊕ Z_n`: a zero-sum `I`
    /// with `Σ 1/n_s = n`
    Conj21ii,
    /// `n`-cover over `Z_n`: a nonempty zero-sum `I` with `Σ m_s/n_s ∈ Z`
    Rem21a,
    /// `m`-cover: a nonempty `I` with `Σ m_s/n_s ∈ mZ`, and an `I ≠ J` in the
    /// class of a random `J`
    Rem22,
}

impl FromStr for ScanKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "conj21i" => Ok(ScanKind::Conj21i),
            "conj21ii" => Ok(ScanKind::Conj21ii),
            "rem21a" => Ok(ScanKind::Rem21a),
            "rem22" => Ok(ScanKind::Rem22),
            _ => Err(Error::Input(format!(
                "unknown scan kind {s:?} (expected conj21i, conj21ii, rem21a, rem22)"
            ))),
        }
    }
}

impl fmt::Display for ScanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ScanKind::Conj21i => "conj21i",
            ScanKind::Conj21ii => "conj21ii",
            ScanKind::Rem21a => "rem21a",
            ScanKind::Rem22 => "rem22",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub kind: ScanKind,
    pub seed: u64,
    pub budget: usize,
    pub searched: usize,
    pub counterexamples: Vec<serde_json::Value>,
}

/// Runs `budget` random instances of `kind`; deterministic in `seed`.
pub fn conjecture_scan(kind: ScanKind, budget: usize, seed: u64) -> Result<ScanReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counterexamples = Vec::new();
    for index in 0..budget {
        if let Some(bundle) = run_one(kind, &mut rng)? {
            counterexamples.push(serde_json::json!({ "index": index, "instance": bundle }));
        }
    }
    Ok(ScanReport { kind, seed, budget, searched: budget, counterexamples })
}

/// Exact `m`-cover, optionally with some classes of an extra exact 1-cover
/// (keeps `w_A <= m + 1`).
fn cover(m: usize, steps: usize, extra: bool, rng: &mut ChaCha8Rng) -> Result<ResidueSystem> {
    let base = cover_generator(m, rng.gen_range(0..=steps), rng.gen());
    if !extra {
        return Ok(base);
    }
    let more = cover_generator(1, rng.gen_range(0..=3), rng.gen());
    let mask = rng.gen_range(0..=more.full_mask());
    if mask == 0 {
        return Ok(base);
    }
    Ok(base.concat(&more.select(mask)?))
}

fn random_elements(n: u64, rank: usize, k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<u64>> {
    (0..k).map(|_| (0..rank).map(|_| rng.gen_range(0..n)).collect()).collect()
}

fn group_space(elements: &[Vec<u64>], n: u64) -> Result<SubsetSpace> {
    let rank = elements.first().map_or(0, Vec::len);
    let mut space = SubsetSpace::new(elements.len());
    for t in 0..rank {
        let v: Vec<i128> = elements.iter().map(|e| e[t] as i128).collect();
        space = space.modular(&v, n, 0)?;
    }
    Ok(space)
}

fn random_weights(k: usize, rng: &mut ChaCha8Rng) -> Vec<i64> {
    (0..k).map(|_| rng.gen_range(-6..=6)).collect()
}

fn run_one(kind: ScanKind, rng: &mut ChaCha8Rng) -> Result<Option<serde_json::Value>> {
    match kind {
        ScanKind::Conj21i => {
            let n = *[4u64, 6].choose(rng).expect("nonempty");
            let system = cover(2 * n as usize - 1, 4, rng.gen_bool(0.5), rng)?;
            let elements = random_elements(n, 1, system.len(), rng);
            let period = system.period()?;
            let space = group_space(&elements, n)?
                .exact(&system.reciprocal_numerators(period), (n * period) as i128)?;
            Ok(match space.first(None)? {
                Some(_) => None,
                None => Some(serde_json::json!({ "n": n, "system": system.to_json(), "elements": elements })),
            })
        }
        ScanKind::Conj21ii => {
            let n = *[4u64, 6].choose(rng).expect("nonempty");
            let system = cover(3 * n as usize, 3, false, rng)?;
            let mut elements = random_elements(n, 2, system.len() - 1, rng);
            let last = (0..2)
                .map(|t| (n - elements.iter().map(|e| e[t]).sum::<u64>() % n) % n)
                .collect();
            elements.push(last);
            let period = system.period()?;
            let space = group_space(&elements, n)?
                .exact(&system.reciprocal_numerators(period), (n * period) as i128)?;
            Ok(match space.first(None)? {
                Some(_) => None,
                None => Some(serde_json::json!({ "n": n, "system": system.to_json(), "elements": elements })),
            })
        }
        ScanKind::Rem21a => {
            let n = *[6u64, 10].choose(rng).expect("nonempty");
            let system = cover(n as usize, 4, rng.gen_bool(0.5), rng)?;
            let system = system.reweighted(random_weights(system.len(), rng))?;
            let elements = random_elements(n, 1, system.len(), rng);
            let period = system.period()?;
            let space = group_space(&elements, n)?
                .modular(&system.weighted_numerators(period), period, 0)?;
            Ok(match space.first(Some(0))? {
                Some(_) => None,
                None => Some(serde_json::json!({ "n": n, "system": system.to_json(), "elements": elements })),
            })
        }
        ScanKind::Rem22 => {
            let m = *[6u64, 10, 12].choose(rng).expect("nonempty");
            let system = cover(m as usize, 4, rng.gen_bool(0.5), rng)?;
            let system = system.reweighted(random_weights(system.len(), rng))?;
            let j = rng.gen_range(0..=system.full_mask());
            let period = system.period()?;
            let numerators = system.weighted_numerators(period);
            let modulus = m * period;
            let nonempty = SubsetSpace::new(system.len()).modular(&numerators, modulus, 0)?.first(Some(0))?;
            let j_target: i128 = (0..system.len()).filter(|s| j >> s & 1 == 1).map(|s| numerators[s]).sum();
            let other = SubsetSpace::new(system.len())
                .modular(&numerators, modulus, j_target)?
                .first(Some(j))?;
            Ok(match (nonempty, other) {
                (Some(_), Some(_)) => None,
                _ => Some(serde_json::json!({
                    "m": m, "system": system.to_json(), "j": mask_to_indices(j),
                    "nonempty_found": nonempty.is_some(), "j_mode_found": other.is_some(),
                })),
            })
        }
    }
}
