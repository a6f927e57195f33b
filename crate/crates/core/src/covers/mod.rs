//! Finite systems of residue classes `{a_s(n_s)}` with integer weights `m_s`.

mod egyptian;
mod format;
mod generate;
mod profile;
mod split;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{lcm_u64, Rational};

pub use egyptian::LocalGlobalReport;
pub use format::{parse_cover, serialize_cover};
pub use generate::cover_generator;
pub use profile::{CoverProfile, DEFAULT_PERIOD_BOUND};
pub use split::ExactSplit;

/// The residue class `a(n) = a + nZ`, stored with `0 <= a < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ResidueClass {
    residue: i64,
    modulus: u64,
}

impl ResidueClass {
    pub fn new(residue: i64, modulus: u64) -> Result<Self> {
        if modulus == 0 || modulus > i64::MAX as u64 {
            return Err(Error::Input(format!("modulus {modulus} out of range")));
        }
        Ok(ResidueClass {
            residue: residue.rem_euclid(modulus as i64),
            modulus,
        })
    }

    pub fn residue(&self) -> i64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn contains(&self, x: i64) -> bool {
        x.rem_euclid(self.modulus as i64) == self.residue
    }
}

/// An ordered system `A = {a_s(n_s)}_{s=1}^k` with weights `m_1..m_k`
/// (all 1 unless given).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueSystem {
    classes: Vec<ResidueClass>,
    weights: Vec<i64>,
}

impl ResidueSystem {
    pub fn new(classes: Vec<ResidueClass>) -> Result<Self> {
        let weights = vec![1; classes.len()];
        Self::with_weights(classes, weights)
    }

    pub fn with_weights(classes: Vec<ResidueClass>, weights: Vec<i64>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::Input("a residue system needs at least one class".into()));
        }
        if classes.len() != weights.len() {
            return Err(Error::Input(format!(
                "{} classes but {} weights",
                classes.len(),
                weights.len()
            )));
        }
        Ok(ResidueSystem { classes, weights })
    }

    /// Builds a unit-weight system from `(residue, modulus)` pairs.
    pub fn from_pairs(pairs: &[(i64, u64)]) -> Result<Self> {
        let classes = pairs
            .iter()
            .map(|&(a, n)| ResidueClass::new(a, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(classes)
    }

    /// `m` copies of `0(1)`.
    pub fn trivial(m: usize) -> Self {
        Self::from_pairs(&vec![(0, 1); m.max(1)]).expect("valid classes")
    }

    /// Choi's irreducible exact 2-cover with 19 classes and period 30.
    pub fn choi() -> Self {
        let mut pairs = vec![(1, 2), (0, 3), (2, 6)];
        pairs.extend([0, 4, 6, 8].map(|a| (a, 10)));
        pairs.extend([1, 2, 4, 7, 10, 13].map(|a| (a, 15)));
        pairs.extend([5, 11, 12, 22, 23, 29].map(|a| (a, 30)));
        Self::from_pairs(&pairs).expect("valid classes")
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ResidueClass] {
        &self.classes
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn reweighted(&self, weights: Vec<i64>) -> Result<Self> {
        Self::with_weights(self.classes.clone(), weights)
    }

    /// Unit weights on the same classes.
    pub fn unweighted(&self) -> Self {
        self.reweighted(vec![1; self.len()]).expect("same length")
    }

    /// The least common multiple `N_A` of the moduli.
    pub fn period(&self) -> Result<u64> {
        self.classes.iter().try_fold(1u64, |acc, c| {
            lcm_u64(acc, c.modulus)
                .ok_or_else(|| Error::Resource("period overflows 64 bits".into()))
        })
    }

    /// `w_A(x)`: how many classes contain `x`.
    pub fn covering_function(&self, x: i64) -> usize {
        self.classes.iter().filter(|c| c.contains(x)).count()
    }

    /// 0-based indices of the classes containing `x`.
    pub fn classes_containing(&self, x: i64) -> Vec<usize> {
        (0..self.len()).filter(|&s| self.classes[s].contains(x)).collect()
    }

    /// The first `len` classes.
    pub fn truncated(&self, len: usize) -> Result<Self> {
        if len == 0 || len > self.len() {
            return Err(Error::Input(format!("cannot truncate {} classes to {len}", self.len())));
        }
        Self::with_weights(self.classes[..len].to_vec(), self.weights[..len].to_vec())
    }

    /// Subsystem on the classes selected by `mask` (bit `i` = class `i + 1`).
    pub fn select(&self, mask: u64) -> Result<Self> {
        let idx: Vec<usize> = (0..self.len()).filter(|i| mask >> i & 1 == 1).collect();
        Self::with_weights(
            idx.iter().map(|&i| self.classes[i]).collect(),
            idx.iter().map(|&i| self.weights[i]).collect(),
        )
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.classes.extend_from_slice(&other.classes);
        out.weights.extend_from_slice(&other.weights);
        out
    }

    /// `m_s · denom / n_s` for each class; `denom` must be a multiple of every
    /// modulus.
    pub fn weighted_numerators(&self, denom: u64) -> Vec<i128> {
        self.classes
            .iter()
            .zip(&self.weights)
            .map(|(c, &m)| {
                debug_assert_eq!(denom % c.modulus, 0);
                m as i128 * (denom / c.modulus) as i128
            })
            .collect()
    }

    /// `denom / n_s` for each class.
    pub fn reciprocal_numerators(&self, denom: u64) -> Vec<i128> {
        self.classes
            .iter()
            .map(|c| (denom / c.modulus) as i128)
            .collect()
    }

    /// `a_s · m_s · denom / n_s` for each class: phases of `e^{2πi a_s m_s / n_s}`
    /// as exponents of `ζ_denom`.
    pub fn phase_numerators(&self, denom: u64) -> Vec<i128> {
        self.classes
            .iter()
            .zip(&self.weights)
            .map(|(c, &m)| c.residue as i128 * m as i128 * (denom / c.modulus) as i128)
            .collect()
    }

    /// `Σ_{s∈I} m_s / n_s` for the classes in `mask`.
    pub fn weighted_sum(&self, mask: u64) -> Rational {
        self.sum_over(mask, |s| self.weights[s])
    }

    /// `Σ_{s∈I} 1 / n_s` for the classes in `mask`.
    pub fn reciprocal_sum(&self, mask: u64) -> Rational {
        self.sum_over(mask, |_| 1)
    }

    fn sum_over(&self, mask: u64, numer: impl Fn(usize) -> i64) -> Rational {
        (0..self.len())
            .filter(|i| mask >> i & 1 == 1)
            .fold(Rational::zero(), |acc, s| {
                acc + Rational::new(
                    BigInt::from(numer(s)),
                    BigInt::from(self.classes[s].modulus),
                )
            })
    }

    pub fn full_mask(&self) -> u64 {
        if self.len() >= 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational;

    #[test]
    fn normalization() {
        let c = ResidueClass::new(-1, 3).unwrap();
        assert_eq!(c.residue(), 2);
        assert!(c.contains(5) && c.contains(-1) && !c.contains(0));
        assert!(ResidueClass::new(0, 0).is_err());
        assert_eq!(ResidueClass::new(7, 5).unwrap(), ResidueClass::new(2, 5).unwrap());
    }

    #[test]
    fn covering_function_examples() {
        let choi = ResidueSystem::choi();
        assert_eq!(choi.len(), 19);
        assert_eq!(choi.covering_function(0), 2);
        assert_eq!(ResidueSystem::trivial(1).covering_function(-17), 1);
        let a = ResidueSystem::from_pairs(&[(1, 2), (0, 3)]).unwrap();
        assert_eq!(a.covering_function(3), 2);
    }

    #[test]
    fn sums_and_numerators() {
        let a = ResidueSystem::from_pairs(&[(0, 2), (1, 3)]).unwrap();
        assert_eq!(a.period().unwrap(), 6);
        assert_eq!(a.reciprocal_sum(0b11), rational(5, 6));
        assert_eq!(a.weighted_numerators(6), vec![3, 2]);
        assert_eq!(a.phase_numerators(6), vec![0, 2]);
        let w = a.reweighted(vec![3, -1]).unwrap();
        assert_eq!(w.weighted_sum(0b11), rational(7, 6));
        assert!(a.reweighted(vec![1]).is_err());
        assert!(ResidueSystem::new(vec![]).is_err());
    }

    #[test]
    fn period_is_periodic() {
        let choi = ResidueSystem::choi();
        let n = choi.period().unwrap() as i64;
        for x in -2 * n..2 * n {
            assert_eq!(choi.covering_function(x), choi.covering_function(x + n));
        }
    }
}
