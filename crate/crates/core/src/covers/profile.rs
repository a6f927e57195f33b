use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::ResidueSystem;
use crate::error::{Error, Result};
use crate::exactmath::{serialize_rational, Rational};

/// Largest period scanned by default.
pub const DEFAULT_PERIOD_BOUND: u64 = 10_000_000;

/// Multiplicity data of a system over one full period `[0, N_A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverProfile {
    pub period: u64,
    pub min_mult: usize,
    pub max_mult: usize,
    /// multiplicity -> number of `x` in `[0, N_A)` attaining it
    pub histogram: BTreeMap<usize, u64>,
    #[serde(serialize_with = "serialize_rational")]
    pub reciprocal_sum: Rational,
}

impl ResidueSystem {
    /// Covering function over `[0, N_A)`, one entry per residue.
    pub fn multiplicities(&self, bound: u64) -> Result<Vec<u32>> {
        let period = self.period()?;
        if period > bound {
            return Err(Error::Resource(format!(
                "period {period} exceeds the scan bound {bound}"
            )));
        }
        let mut w = vec![0u32; period as usize];
        for c in self.classes() {
            let step = c.modulus() as usize;
            let mut x = c.residue() as usize;
            while x < w.len() {
                w[x] += 1;
                x += step;
            }
        }
        Ok(w)
    }

    pub fn profile(&self) -> Result<CoverProfile> {
        self.profile_with_bound(DEFAULT_PERIOD_BOUND)
    }

    /// Scans one period and checks `Σ 1/n_s = (1/N_A) Σ_x w_A(x)` exactly.
    pub fn profile_with_bound(&self, bound: u64) -> Result<CoverProfile> {
        let w = self.multiplicities(bound)?;
        let period = w.len() as u64;
        let mut histogram = BTreeMap::new();
        let mut total = 0u64;
        for &v in &w {
            *histogram.entry(v as usize).or_insert(0u64) += 1;
            total += v as u64;
        }
        let reciprocal_sum = self.reciprocal_sum(self.full_mask());
        let average = Rational::new(BigInt::from(total), BigInt::from(period));
        if average != reciprocal_sum {
            return Err(Error::violation(
                "reciprocal sum equals the average multiplicity",
                serde_json::json!({ "system": self.to_json(), "average": average.to_string() }),
            ));
        }
        Ok(CoverProfile {
            period,
            min_mult: *histogram.keys().next().expect("period >= 1"),
            max_mult: *histogram.keys().next_back().expect("period >= 1"),
            histogram,
            reciprocal_sum,
        })
    }

    /// Covering multiplicity `m(A)`.
    pub fn covering_multiplicity(&self) -> Result<usize> {
        Ok(self.profile()?.min_mult)
    }

    pub fn is_m_cover(&self, m: usize) -> Result<bool> {
        Ok(self.profile()?.min_mult >= m)
    }

    pub fn is_exact_m_cover(&self, m: usize) -> Result<bool> {
        let p = self.profile()?;
        Ok(p.min_mult == m && p.max_mult == m)
    }
}
