use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::UniPoly;
use crate::covers::ResidueSystem;
use crate::error::{Error, Result};
use crate::exactmath::{gcd_u64, lcm_u64, CycloElement, Rational};
use crate::subsets::SubsetSpace;

/// Whether the `(θ, n)` sum vanishes; `θ` is written as a reduced fraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityResult {
    pub theta: String,
    pub n: usize,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverCertificate {
    pub m: usize,
    /// `P_0..P_{m-1}`
    pub polynomials: Vec<String>,
    pub mu: Vec<String>,
    pub results: Vec<IdentityResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConverseVerdict {
    pub all_vanish: bool,
    pub is_m_cover: bool,
    /// first `(θ, n)` whose sum is nonzero
    pub failing: Option<IdentityResult>,
}

/// `P_n(x) = C(x, n)` and `μ_s = m_s / n_s`.
fn default_family(system: &ResidueSystem, m: usize) -> (Vec<UniPoly>, Vec<Rational>) {
    let polys = (0..m).map(UniPoly::binomial).collect();
    let mu = system
        .classes()
        .iter()
        .zip(system.weights())
        .map(|(c, &w)| Rational::new(BigInt::from(w), BigInt::from(c.modulus())))
        .collect();
    (polys, mu)
}

fn family(system: &ResidueSystem, m: usize, given: Option<(&[UniPoly], &[Rational])>) -> Result<(Vec<UniPoly>, Vec<Rational>)> {
    let (polys, mu) = match given {
        Some((p, mu)) => (p.to_vec(), mu.to_vec()),
        None => default_family(system, m),
    };
    if polys.len() != m {
        return Err(Error::Input(format!("{} polynomials for m = {m}", polys.len())));
    }
    for (n, p) in polys.iter().enumerate() {
        if p.degree() != Some(n) {
            return Err(Error::Input(format!("P_{n} must have degree {n}")));
        }
    }
    if mu.len() != system.len() {
        return Err(Error::Input(format!("{} values of mu for {} classes", mu.len(), system.len())));
    }
    Ok((polys, mu))
}

/// Evaluates every `(θ, n)` sum
/// `Σ_{I: {Σ m_s/n_s} = θ} (-1)^{|I|} P_n(Σ_{s∈I} μ_s) e^{2πi Σ_{s∈I} a_s m_s/n_s}`
/// with `θ` ranging over the subset spectrum (other `θ` give empty sums).
fn identity_grid(system: &ResidueSystem, polys: &[UniPoly], mu: &[Rational]) -> Result<Vec<IdentityResult>> {
    let n = system.period()?;
    let big = || Error::Resource("mu has too large a denominator".into());
    let denom = mu
        .iter()
        .try_fold(1u64, |acc, r| r.denom().to_u64().and_then(|d| lcm_u64(acc, d)))
        .ok_or_else(big)?;
    let scaled: Vec<i128> = mu
        .iter()
        .map(|r| (r.numer() * BigInt::from(denom) / r.denom()).to_i128())
        .collect::<Option<_>>()
        .ok_or_else(big)?;
    let space = SubsetSpace::new(system.len())
        .modular(&system.weighted_numerators(n), n, 0)?
        .exact(&scaled, 0)?
        .modular(&system.phase_numerators(n), n, 0)?;

    // signed subset counts per (θ, Σμ, phase)
    let mut groups: HashMap<(i64, i64, i64), i64> = HashMap::new();
    space.walk(|mask, acc| {
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *groups.entry((acc[0], acc[1], acc[2])).or_default() += sign;
    })?;
    let mut by_theta: BTreeMap<i64, Vec<(i64, i64, i64)>> = BTreeMap::new();
    for ((theta, m, phase), count) in groups {
        if count != 0 {
            by_theta.entry(theta).or_default().push((m, phase, count));
        }
    }
    let theta_keys: Vec<i64> = {
        let (period, members) = system.spectrum_numerators()?;
        debug_assert_eq!(period, n);
        members.into_iter().map(|t| t as i64).collect()
    };

    let mut values: HashMap<i64, Vec<Rational>> = HashMap::new();
    let d = Rational::from_integer(BigInt::from(denom));
    let mut out = Vec::new();
    for theta in theta_keys {
        let cells = by_theta.remove(&theta).unwrap_or_default();
        for (idx, _) in polys.iter().enumerate() {
            let mut coeffs = vec![Rational::zero(); n as usize];
            for &(m, phase, count) in &cells {
                let vals = values.entry(m).or_insert_with(|| {
                    let x = Rational::from_integer(BigInt::from(m)) / &d;
                    polys.iter().map(|p| p.eval(&x)).collect()
                });
                coeffs[phase as usize] += &vals[idx] * Rational::from_integer(BigInt::from(count));
            }
            let vanishes = CycloElement::new(n as usize, coeffs)?.is_zero();
            out.push(IdentityResult {
                theta: Rational::new(BigInt::from(theta), BigInt::from(n)).to_string(),
                n: idx,
                vanishes,
            });
        }
    }
    Ok(out)
}

fn certificate(m: usize, polys: &[UniPoly], mu: &[Rational], results: Vec<IdentityResult>) -> CoverCertificate {
    CoverCertificate {
        m,
        polynomials: polys.iter().map(UniPoly::to_string).collect(),
        mu: mu.iter().map(Rational::to_string).collect(),
        results,
    }
}

/// On an `m`-cover, every `(θ, n)` sum vanishes. Defaults to
/// `P_n(x) = C(x, n)` and `μ_s = m_s/n_s`.
pub fn theorem41_forward(system: &ResidueSystem, m: usize, given: Option<(&[UniPoly], &[Rational])>) -> Result<CoverCertificate> {
    if m == 0 {
        return Err(Error::Input("m must be positive".into()));
    }
    let (polys, mu) = family(system, m, given)?;
    if !system.is_m_cover(m)? {
        return Err(Error::Hypothesis(format!("the system is not a {m}-cover")));
    }
    let results = identity_grid(system, &polys, &mu)?;
    let cert = certificate(m, &polys, &mu, results);
    if cert.results.iter().any(|r| !r.vanishes) {
        return Err(Error::violation(
            "every (theta, n) sum vanishes on an m-cover",
            serde_json::json!({ "system": system.to_json(), "certificate": cert }),
        ));
    }
    Ok(cert)
}

/// With `gcd(m_s, n_s) = 1` and nonzero `μ_s`: all sums vanish exactly
/// when the system is an `m`-cover. Reports the first failing `(θ, n)`.
pub fn theorem41_converse(system: &ResidueSystem, m: usize, given: Option<(&[UniPoly], &[Rational])>) -> Result<ConverseVerdict> {
    if m == 0 {
        return Err(Error::Input("m must be positive".into()));
    }
    let (polys, mu) = family(system, m, given)?;
    for (c, &w) in system.classes().iter().zip(system.weights()) {
        if gcd_u64(w.unsigned_abs(), c.modulus()) != 1 {
            return Err(Error::Hypothesis(format!("weight {w} is not coprime to {}", c.modulus())));
        }
    }
    if mu.iter().any(Zero::is_zero) {
        return Err(Error::Hypothesis("every mu_s must be nonzero".into()));
    }
    let results = identity_grid(system, &polys, &mu)?;
    let failing = results.iter().find(|r| !r.vanishes).cloned();
    let all_vanish = failing.is_none();
    let is_m_cover = system.is_m_cover(m)?;
    if all_vanish != is_m_cover {
        return Err(Error::violation(
            "the (theta, n) sums all vanish iff the system is an m-cover",
            serde_json::json!({
                "system": system.to_json(),
                "certificate": certificate(m, &polys, &mu, results),
                "is_m_cover": is_m_cover,
            }),
        ));
    }
    Ok(ConverseVerdict { all_vanish, is_m_cover, failing })
}
