//! Subset-sum questions about `Σ_{s∈I} m_s/n_s` and `Σ_{s∈I} 1/n_s`.

use num_bigint::BigInt;
use serde::Serialize;

use super::profile::DEFAULT_PERIOD_BOUND;
use super::ResidueSystem;
use crate::error::{Error, Result};
use crate::exactmath::{gcd_u64, gen_binomial, Rational};
use crate::subsets::{mask_to_indices, SubsetSpace, MITM_MAX};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalGlobalReport {
    /// `|S|`, the number of distinct fractional parts of weighted subset sums
    pub window: u64,
    /// `w_A(x) >= m` on `[0, window)`
    pub local: bool,
    /// `w_A(x) >= m` everywhere
    pub global: bool,
}

impl ResidueSystem {
    /// Numerators `t` (over `N_A`) of the fractional parts `t / N_A` of all
    /// weighted subset sums, ascending.
    pub fn spectrum_numerators(&self) -> Result<(u64, Vec<u64>)> {
        if self.len() > MITM_MAX {
            return Err(Error::Resource(format!(
                "spectrum limited to {MITM_MAX} classes, got {}",
                self.len()
            )));
        }
        let n = self.period()?;
        if n > DEFAULT_PERIOD_BOUND {
            return Err(Error::Resource(format!("period {n} exceeds the scan bound")));
        }
        let mut reach = vec![false; n as usize];
        reach[0] = true;
        for v in self.weighted_numerators(n) {
            let shift = v.rem_euclid(n as i128) as usize;
            if shift == 0 {
                continue;
            }
            let prev = reach.clone();
            for (t, _) in prev.iter().enumerate().filter(|(_, &r)| r) {
                reach[(t + shift) % n as usize] = true;
            }
        }
        let members = (0..n).filter(|&t| reach[t as usize]).collect();
        Ok((n, members))
    }

    /// The set `S` of fractional parts `{Σ_{s∈I} m_s/n_s}`, ascending.
    pub fn subset_fraction_spectrum(&self) -> Result<Vec<Rational>> {
        let (n, members) = self.spectrum_numerators()?;
        Ok(members
            .into_iter()
            .map(|t| Rational::new(BigInt::from(t), BigInt::from(n)))
            .collect())
    }

    /// Checks `w_A >= m` on the first `|S|` integers and compares with the
    /// global answer; they must agree when every `m_s` is coprime to `n_s`.
    pub fn local_global_cover_check(&self, m: usize) -> Result<LocalGlobalReport> {
        for (c, &w) in self.classes().iter().zip(self.weights()) {
            if gcd_u64(w.unsigned_abs(), c.modulus()) != 1 {
                return Err(Error::Hypothesis(format!(
                    "weight {w} is not coprime to modulus {}",
                    c.modulus()
                )));
            }
        }
        let (_, members) = self.spectrum_numerators()?;
        let window = members.len() as u64;
        let local = (0..window as i64).all(|x| self.covering_function(x) >= m);
        let global = self.is_m_cover(m)?;
        if local != global {
            return Err(Error::violation(
                "covering |S| consecutive integers m times implies an m-cover",
                serde_json::json!({ "system": self.to_json(), "m": m, "window": window }),
            ));
        }
        Ok(LocalGlobalReport { window, local, global })
    }

    fn reciprocal_space(&self, target_numer: i128) -> Result<SubsetSpace> {
        let n = self.period()?;
        SubsetSpace::new(self.len()).exact(&self.reciprocal_numerators(n), target_numer)
    }

    /// For an exact `m`-cover, the number of `I` with `Σ_{s∈I} 1/n_s = n`
    /// for each `n` in `[0, m]`; each count is checked against `C(m, n)`.
    pub fn exact_cover_subset_counts(&self, m: usize) -> Result<Vec<u64>> {
        if !self.is_exact_m_cover(m)? {
            return Err(Error::Hypothesis(format!("not an exact {m}-cover")));
        }
        let period = self.period()? as i128;
        let mut counts = Vec::with_capacity(m + 1);
        for n in 0..=m {
            let count = self.reciprocal_space(n as i128 * period)?.count()?;
            let floor = gen_binomial(&BigInt::from(m), n as u64);
            if BigInt::from(count) < floor {
                return Err(Error::violation(
                    format!("at least C({m},{n}) subsets have reciprocal sum {n}"),
                    serde_json::json!({ "system": self.to_json(), "m": m, "n": n, "count": count }),
                ));
            }
            counts.push(count);
        }
        Ok(counts)
    }

    /// A nonempty `I` (1-based, ascending) with `Σ_{s∈I} 1/n_s ∈ Z`, first in
    /// cardinality-lexicographic order. Requires a cover.
    pub fn zhang_integer_subset(&self) -> Result<Vec<usize>> {
        if !self.is_m_cover(1)? {
            return Err(Error::Hypothesis("the system is not a cover".into()));
        }
        let n = self.period()?;
        let space = SubsetSpace::new(self.len()).modular(&self.reciprocal_numerators(n), n, 0)?;
        match space.first(Some(0))? {
            Some(mask) => Ok(mask_to_indices(mask)),
            None => Err(Error::violation(
                "every cover has a nonempty subset with integral reciprocal sum",
                serde_json::json!({ "system": self.to_json() }),
            )),
        }
    }
}
