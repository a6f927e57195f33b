//! Subsets `I ⊆ [1,k]` with `Σ_{s∈I} c_s = c` in a p-group and
//! `Σ_{s∈I} m_s/n_s ∈ α + p^h Z`, and the statements built on them.

mod corollaries;
mod egz;
mod generate;
mod polynomial;
mod scan;
mod theorem31;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::covers::ResidueSystem;
use crate::error::{Error, Result};
use crate::exactmath::{lcm_u64, pow_u64, prime_power, serialize_rational, Rational};
use crate::pgroups::{GroupElement, GroupShape};
use crate::subsets::{mask_to_indices, SubsetSpace, DIRECT_MAX};

pub use corollaries::{
    corollary22_find, corollary31_check, corollary32_values, theorem13i_values, theorem13ii_count,
    Corollary31Report,
};
pub use egz::{egz_exact3q_find, egz_weighted_find, EgzWitness};
pub use generate::random_instance;
pub use polynomial::SubsetPolynomial;
pub use scan::{conjecture_scan, ScanKind, ScanReport};
pub use theorem31::{theorem31_check, Theorem31Branch, Theorem31Report};

pub(crate) use polynomial::scaled_table;

#[derive(Clone, Debug, Serialize)]
pub struct ZeroSumInstance {
    pub system: ResidueSystem,
    pub shape: GroupShape,
    pub elements: Vec<GroupElement>,
    pub target: GroupElement,
    /// `h`
    pub level: u32,
    #[serde(serialize_with = "serialize_rational")]
    pub alpha: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem21Report {
    pub count: u64,
    pub holds: bool,
    /// `d*(G) + p^h`
    pub required_multiplicity: u64,
    pub multiplicity: usize,
}

/// `(values, modulus, target)` for the test `Σ_{s∈I} m_s/n_s ∈ α + qZ`,
/// scaled by `L = lcm(N_A, den α)`.
pub(crate) fn membership_dim(system: &ResidueSystem, alpha: &Rational, q: u64) -> Result<(Vec<i128>, u64, i128)> {
    let den = alpha
        .denom()
        .to_u64()
        .ok_or_else(|| Error::Resource("denominator of alpha too large".into()))?;
    let big = || Error::Resource("common denominator overflows".into());
    let l = lcm_u64(system.period()?, den).ok_or_else(big)?;
    let modulus = l.checked_mul(q).ok_or_else(big)?;
    let target = (alpha.numer() * BigInt::from(l / den))
        .mod_floor(&BigInt::from(modulus))
        .to_i128()
        .ok_or_else(big)?;
    Ok((system.weighted_numerators(l), modulus, target))
}

pub(crate) fn mask_of(indices: &[usize], k: usize) -> Result<u64> {
    crate::subsets::indices_to_mask(indices, k)
}

impl ZeroSumInstance {
    pub fn new(
        system: ResidueSystem,
        shape: GroupShape,
        elements: Vec<GroupElement>,
        target: GroupElement,
        level: u32,
        alpha: Rational,
    ) -> Result<Self> {
        if elements.len() != system.len() {
            return Err(Error::Input(format!(
                "{} elements for {} classes",
                elements.len(),
                system.len()
            )));
        }
        for e in elements.iter().chain(std::iter::once(&target)) {
            if !shape.contains(e) {
                return Err(Error::Input(format!("{e} is not an element of {shape}")));
            }
        }
        Ok(ZeroSumInstance { system, shape, elements, target, level, alpha })
    }

    pub fn len(&self) -> usize {
        self.system.len()
    }

    pub fn is_empty(&self) -> bool {
        self.system.is_empty()
    }

    /// `p^h`; `h = 0` gives 1 for any shape.
    pub fn level_modulus(&self) -> Result<u64> {
        if self.level == 0 {
            return Ok(1);
        }
        let p = self.prime()?;
        pow_u64(p, self.level).ok_or_else(|| Error::Resource("p^h overflows".into()))
    }

    fn prime(&self) -> Result<u64> {
        self.shape
            .prime()
            .ok_or_else(|| Error::Hypothesis(format!("{} is not a p-group", self.shape.name())))
    }

    /// `d*(G) + p^h + delta`, the multiplicity the statements require.
    pub fn required_multiplicity(&self, delta: u64) -> Result<u64> {
        self.prime()?;
        Ok(self.shape.d_star() + self.level_modulus()? + delta)
    }

    pub(crate) fn check_cover(&self, delta: u64) -> Result<usize> {
        let need = self.required_multiplicity(delta)?;
        let have = self.system.covering_multiplicity()?;
        if (have as u64) < need {
            return Err(Error::Hypothesis(format!(
                "the system is a {have}-cover but a {need}-cover is required"
            )));
        }
        Ok(have)
    }

    /// Group dimensions followed by the membership dimension.
    pub(crate) fn space(&self) -> Result<SubsetSpace> {
        let mut space = SubsetSpace::new(self.len());
        for (t, &m) in self.shape.moduli().iter().enumerate() {
            let values: Vec<i128> = self.elements.iter().map(|e| e.components()[t] as i128).collect();
            space = space.modular(&values, m, self.target.components()[t] as i128)?;
        }
        let (values, modulus, target) = membership_dim(&self.system, &self.alpha, self.level_modulus()?)?;
        space.modular(&values, modulus, target)
    }

    /// `|𝓘|`.
    pub fn family_count(&self) -> Result<u64> {
        self.space()?.count()
    }

    /// Members of `𝓘` (1-based) in cardinality-lexicographic order.
    pub fn family_iterate(&self) -> Result<Vec<Vec<usize>>> {
        if self.len() > DIRECT_MAX {
            return Err(Error::Resource(format!("listing limited to {DIRECT_MAX} classes")));
        }
        Ok(self.space()?.matches_sorted()?.into_iter().map(mask_to_indices).collect())
    }

    /// Independent membership test for `I ∈ 𝓘`.
    pub fn is_member(&self, indices: &[usize]) -> Result<bool> {
        let mask = mask_of(indices, self.len())?;
        let picked = indices.iter().map(|&i| &self.elements[i - 1]);
        if self.shape.sum(picked)? != self.target {
            return Ok(false);
        }
        let diff = self.system.weighted_sum(mask) - &self.alpha;
        let q = Rational::from_integer(BigInt::from(self.level_modulus()?));
        Ok((diff / q).is_integer())
    }

    /// Checks `|𝓘| ≠ 1` on a `(d*(G) + p^h)`-cover.
    pub fn theorem21_check(&self) -> Result<Theorem21Report> {
        let multiplicity = self.check_cover(0)?;
        let count = self.family_count()?;
        if count == 1 {
            return Err(Error::violation(
                "|I| != 1 on a (d*(G)+p^h)-cover",
                serde_json::json!({ "instance": self, "count": count }),
            ));
        }
        Ok(Theorem21Report {
            count,
            holds: true,
            required_multiplicity: self.required_multiplicity(0)?,
            multiplicity,
        })
    }

    /// First nonempty `I ∈ 𝓘` in cardinality-lexicographic order. When
    /// `∅ ∈ 𝓘` (target zero, `α ∈ p^h Z`) a witness must exist.
    pub fn find_zero_sum_subsequence(&self) -> Result<Option<Vec<usize>>> {
        self.check_cover(0)?;
        let empty_in_family = self.is_member(&[])?;
        match self.space()?.first(Some(0))? {
            Some(mask) => {
                let indices = mask_to_indices(mask);
                if !self.is_member(&indices)? {
                    return Err(Error::violation(
                        "witness satisfies its constraints",
                        serde_json::json!({ "instance": self, "witness": indices }),
                    ));
                }
                Ok(Some(indices))
            }
            None if empty_in_family => Err(Error::violation(
                "a nonempty zero-sum subsequence exists on a (d*(G)+p^h)-cover",
                serde_json::json!({ "instance": self }),
            )),
            None => Ok(None),
        }
    }
}

/// `q = p^e` for the given prime (e >= 0); returns `e`.
pub(crate) fn exponent_of(q: u64, p: u64) -> Option<u32> {
    if q == 1 {
        return Some(0);
    }
    match prime_power(q) {
        Some((r, e)) if r == p => Some(e),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational;

    fn z2() -> GroupShape {
        GroupShape::p_group(2, &[1]).unwrap()
    }

    fn inst(sys: ResidueSystem, shape: GroupShape, elems: &[i64], target: i64, h: u32, alpha: Rational) -> ZeroSumInstance {
        let elements = elems.iter().map(|&c| shape.element(&[c]).unwrap()).collect();
        let target = shape.element(&[target]).unwrap();
        ZeroSumInstance::new(sys, shape, elements, target, h, alpha).unwrap()
    }

    #[test]
    fn family_count_examples() {
        let a = inst(ResidueSystem::trivial(2), z2(), &[1, 1], 0, 0, rational(0, 1));
        assert_eq!(a.family_count().unwrap(), 2);
        assert_eq!(a.family_iterate().unwrap(), vec![vec![], vec![1, 2]]);

        let triv = GroupShape::trivial(2).unwrap();
        let b = ZeroSumInstance::new(ResidueSystem::trivial(1), triv.clone(), vec![triv.zero()], triv.zero(), 0, rational(1, 2)).unwrap();
        assert_eq!(b.family_count().unwrap(), 0);
        assert_eq!(b.theorem21_check().unwrap().count, 0);

        let c = inst(ResidueSystem::trivial(3), z2(), &[1, 1, 1], 0, 1, rational(0, 1));
        assert_eq!(c.family_count().unwrap(), 4);
        assert_eq!(c.family_iterate().unwrap().len(), 4);
        for i in c.family_iterate().unwrap() {
            assert!(c.is_member(&i).unwrap());
        }
        for r in [a, c] {
            let rep = r.theorem21_check().unwrap();
            assert!(rep.holds && rep.count != 1);
        }
    }

    #[test]
    fn cover_multiplicity_precondition() {
        let a = inst(ResidueSystem::trivial(1), z2(), &[1], 0, 0, rational(0, 1));
        assert!(matches!(a.theorem21_check(), Err(Error::Hypothesis(_))));
        let six = GroupShape::cyclic(6).unwrap();
        let b = ZeroSumInstance::new(ResidueSystem::trivial(1), six.clone(), vec![six.zero()], six.zero(), 0, rational(0, 1)).unwrap();
        assert!(matches!(b.theorem21_check(), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn find_examples() {
        let a = inst(ResidueSystem::trivial(2), z2(), &[1, 1], 0, 0, rational(0, 1));
        assert_eq!(a.find_zero_sum_subsequence().unwrap(), Some(vec![1, 2]));

        // n classes r(n) over the trivial group: a nonempty I with Σ 1/n ∈ Z
        let n = 5;
        let sys = ResidueSystem::from_pairs(&(0..n).map(|r| (r, n as u64)).collect::<Vec<_>>()).unwrap();
        let triv = GroupShape::trivial(5).unwrap();
        let t = ZeroSumInstance::new(sys, triv.clone(), vec![triv.zero(); 5], triv.zero(), 0, rational(0, 1)).unwrap();
        assert_eq!(t.find_zero_sum_subsequence().unwrap(), Some(vec![1, 2, 3, 4, 5]));
    }

    #[test]
    fn unit_level_witness_has_integral_weighted_sum() {
        let g = GroupShape::p_group(2, &[1, 1]).unwrap();
        let sys = ResidueSystem::choi().concat(&ResidueSystem::from_pairs(&[(0, 2), (1, 2)]).unwrap());
        let sys = sys.reweighted((0..21).map(|i| (i * 7 % 11) - 5).collect()).unwrap();
        let elements: Vec<GroupElement> = (0..21).map(|i| g.element(&[i % 2, i / 2 % 2]).unwrap()).collect();
        let inst = ZeroSumInstance::new(sys, g.clone(), elements, g.zero(), 0, rational(0, 1)).unwrap();
        let i = inst.find_zero_sum_subsequence().unwrap().unwrap();
        assert!(!i.is_empty());
        assert!(inst.system.weighted_sum(mask_of(&i, 21).unwrap()).is_integer());
    }

    #[test]
    fn membership_scaling() {
        let a = ResidueSystem::from_pairs(&[(0, 2), (1, 3)]).unwrap();
        let (v, m, t) = membership_dim(&a, &rational(-1, 4), 3).unwrap();
        assert_eq!((v, m, t), (vec![6, 4], 36, 33));
    }
}
