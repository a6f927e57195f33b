use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{exponent_of, mask_of, membership_dim, ZeroSumInstance};
use crate::covers::ResidueSystem;
use crate::error::{Error, Result};
use crate::exactmath::{is_prime, lcm_u64, prime_power, serialize_rationals, Rational};
use crate::pgroups::GroupShape;
use crate::subsets::{mask_to_indices, SubsetSpace};

fn require_cover(system: &ResidueSystem, m: usize) -> Result<()> {
    if !system.is_m_cover(m)? {
        return Err(Error::Hypothesis(format!("the system is not a {m}-cover")));
    }
    Ok(())
}

fn subset_sum(system: &ResidueSystem, indices: Option<&[usize]>) -> Result<Rational> {
    match indices {
        None => Ok(Rational::zero()),
        Some(j) => Ok(system.weighted_sum(mask_of(j, system.len())?)),
    }
}

/// On an `m`-cover with `m` a prime power: a nonempty `I` with
/// `Σ_{s∈I} m_s/n_s ∈ mZ`, or with `j` given, some `I ≠ J` with
/// `Σ_I - Σ_J ∈ mZ`. Indices are 1-based.
pub fn corollary22_find(system: &ResidueSystem, m: u64, j: Option<&[usize]>) -> Result<Vec<usize>> {
    let p = match prime_power(m) {
        Some((p, _)) => p,
        None if m == 1 => 2,
        None => return Err(Error::Hypothesis(format!("{m} is not a prime power"))),
    };
    require_cover(system, m as usize)?;
    let alpha = subset_sum(system, j)?;
    let exclude = match j {
        Some(j) => mask_of(j, system.len())?,
        None => 0,
    };
    let shape = GroupShape::trivial(p)?;
    let inst = ZeroSumInstance::new(
        system.clone(),
        shape.clone(),
        vec![shape.zero(); system.len()],
        shape.zero(),
        exponent_of(m, p).expect("m is a power of p"),
        alpha,
    )?;
    let found = inst.space()?.first(Some(exclude))?;
    let bundle = || serde_json::json!({ "system": system.to_json(), "m": m, "j": j });
    let Some(mask) = found else {
        return Err(Error::violation("a second subset with sum in the same class mod m exists", bundle()));
    };
    let indices = mask_to_indices(mask);
    let diff = system.weighted_sum(mask) - subset_sum(system, j)?;
    if mask == exclude || !(diff / Rational::from_integer(BigInt::from(m))).is_integer() {
        return Err(Error::violation("witness satisfies its constraints", bundle()));
    }
    Ok(indices)
}

/// Number of `I` with `Σ_I m_s/n_s - Σ_J m_s/n_s ∈ Z`, checked to be at
/// least `2^m` on an `m`-cover.
pub fn theorem13ii_count(system: &ResidueSystem, m: usize, j: &[usize]) -> Result<u64> {
    require_cover(system, m)?;
    let alpha = subset_sum(system, Some(j))?;
    let (values, modulus, target) = membership_dim(system, &alpha, 1)?;
    let count = SubsetSpace::new(system.len()).modular(&values, modulus, target)?.count()?;
    if m < 64 && count < 1u64 << m {
        return Err(Error::violation(
            "at least 2^m subsets share the class of J mod Z",
            serde_json::json!({ "system": system.to_json(), "m": m, "j": j, "count": count }),
        ));
    }
    Ok(count)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Corollary31Report {
    /// `{Σ_{s∈I} μ_s mod p}` over nonempty `I` with integral weighted sum
    pub residues: Vec<u64>,
    /// no such `I` has `Σ μ_s ≡ 0 (mod p)`, so the bound applies
    pub applicable: bool,
    /// `{|I|}` over the same subsets
    pub cardinalities: Vec<usize>,
    /// `{Σ_{s∈I} μ_s}` when every `μ_s > 0`
    #[serde(serialize_with = "serialize_opt_rationals")]
    pub positive_values: Option<Vec<Rational>>,
}

fn serialize_opt_rationals<S: serde::Serializer>(v: &Option<Vec<Rational>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => serialize_rationals(v, s),
        None => s.serialize_none(),
    }
}

/// Residue-set bound for an `m`-cover with rationals `μ_s`, plus the
/// positive-`μ` and `|I|` specializations.
pub fn corollary31_check(system: &ResidueSystem, m: usize, mu: &[Rational], p: u64) -> Result<Corollary31Report> {
    if !is_prime(p) {
        return Err(Error::Input(format!("{p} is not prime")));
    }
    if mu.len() != system.len() {
        return Err(Error::Input(format!("{} values of mu for {} classes", mu.len(), system.len())));
    }
    require_cover(system, m)?;
    let denom = mu.iter().try_fold(1u64, |acc, r| {
        r.denom().to_u64().and_then(|d| lcm_u64(acc, d))
    });
    let denom = denom.ok_or_else(|| Error::Resource("denominators of mu too large".into()))?;
    let scaled: Vec<i128> = mu
        .iter()
        .map(|r| (r.numer() * BigInt::from(denom / r.denom().to_u64().unwrap())).to_i128())
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Resource("mu too large".into()))?;
    let (values, modulus, _) = membership_dim(system, &Rational::zero(), 1)?;
    let space = SubsetSpace::new(system.len())
        .modular(&values, modulus, 0)?
        .exact(&scaled, 0)?;

    let mut sums: BTreeSet<i64> = BTreeSet::new();
    let mut cards: BTreeSet<usize> = BTreeSet::new();
    let mut residues: BTreeSet<u64> = BTreeSet::new();
    let mut non_integral = None;
    space.walk(|mask, acc| {
        if acc[0] != 0 {
            return;
        }
        if acc[1] % denom as i64 != 0 {
            non_integral.get_or_insert(mask);
            return;
        }
        if mask != 0 {
            let v = acc[1] / denom as i64;
            sums.insert(v);
            cards.insert(mask.count_ones() as usize);
            residues.insert(v.rem_euclid(p as i64) as u64);
        }
    })?;
    if let Some(mask) = non_integral {
        return Err(Error::Hypothesis(format!(
            "Σ mu over I = {:?} is not an integer although the weighted sum is",
            mask_to_indices(mask)
        )));
    }
    let applicable = !residues.contains(&0);
    let bundle = |what: &str| {
        serde_json::json!({
            "system": system.to_json(), "m": m, "p": p,
            "mu": mu.iter().map(|r| r.to_string()).collect::<Vec<_>>(), "failed": what,
        })
    };
    if applicable && residues.len() < m {
        return Err(Error::violation("at least m residues mod p", bundle("residues")));
    }
    if cards.len() < m {
        return Err(Error::violation("at least m cardinalities |I|", bundle("cardinalities")));
    }
    let positive_values = if mu.iter().all(|r| r.is_positive()) {
        if sums.len() < m {
            return Err(Error::violation("at least m distinct sums of positive mu", bundle("values")));
        }
        Some(
            sums.iter()
                .map(|&v| Rational::new(BigInt::from(v), BigInt::from(1)))
                .collect(),
        )
    } else {
        None
    };
    Ok(Corollary31Report {
        residues: residues.into_iter().collect(),
        applicable,
        cardinalities: cards.into_iter().collect(),
        positive_values,
    })
}

/// The positive integers of the form `Σ_{s∈I} m_s/n_s` on an `m`-cover with
/// positive weights; at least `m` of them.
pub fn theorem13i_values(system: &ResidueSystem, m: usize) -> Result<Vec<Rational>> {
    if system.weights().iter().any(|&w| w <= 0) {
        return Err(Error::Hypothesis("weights must be positive".into()));
    }
    let mu: Vec<Rational> = system
        .classes()
        .iter()
        .zip(system.weights())
        .map(|(c, &w)| Rational::new(BigInt::from(w), BigInt::from(c.modulus())))
        .collect();
    // any prime works for the positive specialization
    let report = corollary31_check(system, m, &mu, 2)?;
    Ok(report.positive_values.expect("positive mu"))
}

/// The set `{Σ_{s∈I} a_s m_s/n_s - |I|/2}` over `I` whose weighted sum is
/// congruent to that of `J` mod `Z`; more than `m` values on an `m`-cover.
pub fn corollary32_values(system: &ResidueSystem, m: usize, j: &[usize]) -> Result<Vec<Rational>> {
    require_cover(system, m)?;
    let alpha = subset_sum(system, Some(j))?;
    let (values, modulus, target) = membership_dim(system, &alpha, 1)?;
    let two_n = lcm_u64(2, system.period()?)
        .and_then(|n| n.checked_mul(2))
        .ok_or_else(|| Error::Resource("period overflows".into()))?;
    let half = (two_n / 2) as i128;
    let phases: Vec<i128> = system
        .phase_numerators(two_n)
        .into_iter()
        .map(|v| v - half)
        .collect();
    let space = SubsetSpace::new(system.len())
        .modular(&values, modulus, target)?
        .exact(&phases, 0)?;
    let target = target as i64;
    let mut seen: BTreeSet<i64> = BTreeSet::new();
    space.walk(|_, acc| {
        if acc[0] == target {
            seen.insert(acc[1]);
        }
    })?;
    let out: Vec<Rational> = seen
        .into_iter()
        .map(|v| Rational::new(BigInt::from(v), BigInt::from(two_n)))
        .collect();
    if out.len() <= m {
        return Err(Error::violation(
            "more than m values of Σ a_s m_s/n_s - |I|/2",
            serde_json::json!({ "system": system.to_json(), "m": m, "j": j, "values": out.len() }),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational;

    fn sys(pairs: &[(i64, u64)]) -> ResidueSystem {
        ResidueSystem::from_pairs(pairs).unwrap()
    }

    #[test]
    fn multiple_of_m_examples() {
        let a = sys(&[(0, 2), (1, 2), (0, 2), (1, 2)]);
        assert_eq!(corollary22_find(&a, 2, None).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(corollary22_find(&ResidueSystem::trivial(3), 3, None).unwrap(), vec![1, 2, 3]);
        assert_eq!(corollary22_find(&a, 2, Some(&[])).unwrap(), corollary22_find(&a, 2, None).unwrap());
        let i = corollary22_find(&a, 2, Some(&[1, 2, 3, 4])).unwrap();
        assert!(i.is_empty());
        assert!(matches!(corollary22_find(&a, 6, None), Err(Error::Hypothesis(_))));
        assert!(matches!(corollary22_find(&a, 4, None), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn multiple_of_m_weighted_choi() {
        let choi = ResidueSystem::choi().reweighted((1..=19).map(|i| i * 3 - 20).collect()).unwrap();
        let i = corollary22_find(&choi, 2, None).unwrap();
        let s = choi.weighted_sum(mask_of(&i, 19).unwrap());
        assert!(!i.is_empty() && (s / rational(2, 1)).is_integer());
        let j = [2, 5, 11];
        let i = corollary22_find(&choi, 2, Some(&j)).unwrap();
        assert_ne!(i, j.to_vec());
    }

    #[test]
    fn residue_set_examples() {
        let r = corollary31_check(&sys(&[(0, 2), (1, 2)]), 1, &[rational(1, 2), rational(1, 2)], 5).unwrap();
        assert_eq!(r.residues, vec![1]);
        assert!(r.applicable);

        let m = 4;
        let r = corollary31_check(&ResidueSystem::trivial(m), m, &vec![rational(1, 1); m], 5).unwrap();
        assert_eq!(r.residues, vec![1, 2, 3, 4]);
        assert_eq!(r.cardinalities, vec![1, 2, 3, 4]);

        let r = corollary31_check(&ResidueSystem::trivial(1), 1, &[rational(1, 1)], 3).unwrap();
        assert_eq!(r.residues, vec![1]);

        let bad = corollary31_check(&sys(&[(0, 2), (1, 2)]), 1, &[rational(1, 3), rational(1, 3)], 5);
        assert!(matches!(bad, Err(Error::Hypothesis(_))));
    }

    #[test]
    fn positive_value_examples() {
        let v = theorem13i_values(&ResidueSystem::choi(), 2).unwrap();
        assert!(v.len() >= 2 && v.iter().all(|r| r.is_positive() && r.is_integer()));
        let w = ResidueSystem::trivial(3).reweighted(vec![1, 2, 4]).unwrap();
        assert_eq!(theorem13i_values(&w, 3).unwrap().len(), 7);
        assert_eq!(theorem13ii_count(&ResidueSystem::trivial(3), 3, &[]).unwrap(), 8);
        assert!(theorem13ii_count(&ResidueSystem::choi(), 2, &[1]).unwrap() >= 4);
    }

    #[test]
    fn phase_value_examples() {
        assert_eq!(
            corollary32_values(&sys(&[(0, 2), (1, 2)]), 1, &[]).unwrap(),
            vec![rational(-1, 2), rational(0, 1)]
        );
        assert_eq!(
            corollary32_values(&ResidueSystem::trivial(1), 1, &[]).unwrap(),
            vec![rational(-1, 2), rational(0, 1)]
        );
        assert!(corollary32_values(&ResidueSystem::choi(), 2, &[]).unwrap().len() > 2);
    }
}
