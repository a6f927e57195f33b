//! Signed exponential sums over subsets grouped by the fractional part of
//! `Σ_{s∈I} m_s/n_s`, evaluated exactly in `Q(ζ_N)`, and the resulting
//! characterization of `m`-covers.

mod theorem41;
mod unipoly;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::covers::ResidueSystem;
use crate::error::{Error, Result};
use crate::exactmath::{gcd_u64, CycloElement, Rational};
use crate::subsets::SubsetSpace;
use crate::zerosum::{scaled_table, SubsetPolynomial};

pub use theorem41::{theorem41_converse, theorem41_forward, ConverseVerdict, CoverCertificate, IdentityResult};
pub use unipoly::UniPoly;

fn check_vars(system: &ResidueSystem, f: &SubsetPolynomial) -> Result<()> {
    if f.vars() != system.len() {
        return Err(Error::Input(format!(
            "polynomial in {} variables for {} classes",
            f.vars(),
            system.len()
        )));
    }
    Ok(())
}

/// `f` at indicator points as `(denominator, support masks with integer
/// coefficients)`.
fn integer_table(f: &SubsetPolynomial) -> Result<(i128, Vec<(u64, i128)>)> {
    let (denom, table) = scaled_table(&f.indicator_table());
    let big = || Error::Resource("polynomial coefficients too large".into());
    let denom = denom.to_i128().ok_or_else(big)?;
    let table = table
        .into_iter()
        .map(|(s, c)| c.to_i128().map(|c| (s, c)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(big)?;
    Ok((denom, table))
}

/// `ψ(θ)` for every `θ` in the subset spectrum, keyed by `θ·N_A`.
pub fn psi_all(system: &ResidueSystem, f: &SubsetPolynomial) -> Result<BTreeMap<u64, CycloElement>> {
    check_vars(system, f)?;
    let n = system.period()?;
    let (denom, table) = integer_table(f)?;
    let space = SubsetSpace::new(system.len())
        .modular(&system.weighted_numerators(n), n, 0)?
        .modular(&system.phase_numerators(n), n, 0)?;
    let mut sums: BTreeMap<u64, Vec<i128>> = BTreeMap::new();
    space.walk(|mask, acc| {
        let value: i128 = table
            .iter()
            .filter(|(s, _)| s & !mask == 0)
            .map(|(_, c)| c)
            .sum();
        let slot = sums.entry(acc[0] as u64).or_insert_with(|| vec![0; n as usize]);
        if mask.count_ones() % 2 == 0 {
            slot[acc[1] as usize] += value;
        } else {
            slot[acc[1] as usize] -= value;
        }
    })?;
    let denom = BigInt::from(denom);
    sums.into_iter()
        .map(|(theta, coeffs)| {
            let coeffs = coeffs
                .into_iter()
                .map(|c| Rational::new(BigInt::from(c), denom.clone()))
                .collect();
            Ok((theta, CycloElement::new(n as usize, coeffs)?))
        })
        .collect()
}

/// `ψ(θ)`; zero when `θ` is outside the subset spectrum.
pub fn psi_value(system: &ResidueSystem, f: &SubsetPolynomial, theta: &Rational) -> Result<CycloElement> {
    if theta < &Rational::zero() || theta >= &Rational::from_integer(1.into()) {
        return Err(Error::Input(format!("theta = {theta} is not in [0, 1)")));
    }
    let n = system.period()?;
    let scaled = theta * Rational::from_integer(BigInt::from(n));
    let all = psi_all(system, f)?;
    if !scaled.is_integer() {
        return Ok(CycloElement::zero(n as usize));
    }
    let key = scaled.to_integer().to_u64().expect("in [0, N)");
    Ok(all.get(&key).cloned().unwrap_or_else(|| CycloElement::zero(n as usize)))
}

fn classes_mask(system: &ResidueSystem, z: i64) -> u64 {
    system
        .classes_containing(z)
        .into_iter()
        .fold(0u64, |m, s| m | 1 << s)
}

/// `c(I_z)`: the coefficient of `Π_{s∈I_z} x_s` in `f`, where `I_z` is the
/// set of classes containing `z`.
pub fn lemma41_coefficient(f: &SubsetPolynomial, system: &ResidueSystem, z: i64) -> Result<Rational> {
    check_vars(system, f)?;
    Ok(f.squarefree_coefficient(classes_mask(system, z)))
}

/// Checks
/// `Σ_{θ∈S} e^{-2πizθ} ψ(θ) = (-1)^k c(I_z) Π_{s∉I_z} (e^{2πi(a_s-z)m_s/n_s} - 1)`
/// exactly at level `N_A`. Requires `deg f <= w_A(z)`, which makes every
/// other squarefree monomial containing `I_z` vanish.
pub fn identity_42_check(system: &ResidueSystem, f: &SubsetPolynomial, z: i64) -> Result<bool> {
    check_vars(system, f)?;
    let w = system.covering_function(z);
    if f.total_degree() as usize > w {
        return Err(Error::Hypothesis(format!(
            "deg f = {} exceeds w_A({z}) = {w}",
            f.total_degree()
        )));
    }
    let n = system.period()?;
    let level = n as usize;
    let mut lhs = CycloElement::zero(level);
    for (theta, psi) in psi_all(system, f)? {
        let shift = CycloElement::root_of_unity(level, -(z.rem_euclid(n as i64) * theta as i64));
        lhs = &lhs + &(&shift * &psi);
    }
    let inside = classes_mask(system, z);
    let sign = if system.len() % 2 == 0 { 1 } else { -1 };
    let c = f.squarefree_coefficient(inside) * Rational::from_integer(sign.into());
    let mut rhs = CycloElement::monomial(level, 0, c);
    for (s, (class, &m)) in system.classes().iter().zip(system.weights()).enumerate() {
        if inside >> s & 1 == 1 {
            continue;
        }
        let step = (n / class.modulus()) as i64;
        let e = (class.residue() - z).rem_euclid(class.modulus() as i64) * m.rem_euclid(class.modulus() as i64) * step;
        let factor = &CycloElement::root_of_unity(level, e) - &CycloElement::from_integer(level, 1);
        rhs = &rhs * &factor;
    }
    if !(&lhs - &rhs).is_zero() {
        return Err(Error::violation(
            "the subset sum identity at z holds when deg f <= w_A(z)",
            serde_json::json!({ "system": system.to_json(), "z": z, "degree": f.total_degree() }),
        ));
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma41Report {
    /// `c(I_z) = 0` for every `z` in one period
    pub coefficients_vanish: bool,
    /// `ψ(θ) = 0` for every `θ` in the spectrum
    pub psi_vanish: bool,
    /// every `m_s` is coprime to `n_s`
    pub coprime: bool,
}

/// Both directions of the vanishing criterion for `ψ`: with `deg f <= m(A)`,
/// vanishing coefficients force `ψ ≡ 0`; with coprime weights, `ψ ≡ 0`
/// forces vanishing coefficients.
pub fn lemma41_check(system: &ResidueSystem, f: &SubsetPolynomial) -> Result<Lemma41Report> {
    check_vars(system, f)?;
    let n = system.period()?;
    let coefficients_vanish = (0..n as i64).all(|z| f.squarefree_coefficient(classes_mask(system, z)).is_zero());
    let psi_vanish = psi_all(system, f)?.values().all(CycloElement::is_zero);
    let coprime = system
        .classes()
        .iter()
        .zip(system.weights())
        .all(|(c, &m)| gcd_u64(m.unsigned_abs(), c.modulus()) == 1);
    let low_degree = f.total_degree() as usize <= system.covering_multiplicity()?;
    let bundle = || serde_json::json!({ "system": system.to_json(), "degree": f.total_degree() });
    if low_degree && coefficients_vanish && !psi_vanish {
        return Err(Error::violation("vanishing coefficients force psi = 0", bundle()));
    }
    if coprime && psi_vanish && !coefficients_vanish {
        return Err(Error::violation("psi = 0 forces vanishing coefficients", bundle()));
    }
    Ok(Lemma41Report { coefficients_vanish, psi_vanish, coprime })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational;

    fn sys(pairs: &[(i64, u64)]) -> ResidueSystem {
        ResidueSystem::from_pairs(pairs).unwrap()
    }

    fn one(k: usize) -> SubsetPolynomial {
        SubsetPolynomial::constant(k, rational(1, 1))
    }

    #[test]
    fn psi_examples() {
        let a = sys(&[(0, 2), (1, 2)]);
        assert!(psi_value(&a, &one(2), &rational(0, 1)).unwrap().is_zero());
        assert!(psi_value(&a, &one(2), &rational(1, 2)).unwrap().is_zero());
        assert!(psi_value(&a, &one(2), &rational(1, 3)).unwrap().is_zero());

        let b = sys(&[(0, 3)]);
        let v = psi_value(&b, &one(1), &rational(1, 3)).unwrap();
        assert!(v.value_eq(&CycloElement::from_integer(3, -1)));
        assert!(psi_value(&b, &one(1), &rational(1, 1)).is_err());
    }

    #[test]
    fn coefficient_examples() {
        let a = sys(&[(0, 2), (1, 2)]);
        let x1 = SubsetPolynomial::variable(2, 0).unwrap();
        let x2 = SubsetPolynomial::variable(2, 1).unwrap();
        let f = x1.mul(&x2).unwrap();
        assert_eq!(lemma41_coefficient(&f, &a, 0).unwrap(), rational(0, 1));
        let g = x1.scale(&rational(3, 1)).add(&f).unwrap();
        assert_eq!(lemma41_coefficient(&g, &a, 0).unwrap(), rational(3, 1));
        let sq = x1.add(&x2).unwrap().pow(2).unwrap();
        assert_eq!(lemma41_coefficient(&sq, &ResidueSystem::trivial(2), 0).unwrap(), rational(2, 1));
    }

    #[test]
    fn identity_examples() {
        let a = sys(&[(0, 2), (1, 2)]);
        assert!(identity_42_check(&a, &one(2), 0).unwrap());
        let b = sys(&[(0, 2)]);
        let x1 = SubsetPolynomial::variable(1, 0).unwrap();
        assert!(identity_42_check(&b, &x1, 0).unwrap());
        assert!(matches!(identity_42_check(&b, &x1, 1), Err(Error::Hypothesis(_))));
        for z in -4..5 {
            assert!(identity_42_check(&ResidueSystem::trivial(1), &one(1), z).unwrap());
        }
    }

    #[test]
    fn identity_on_weighted_choi_prefix() {
        let a = ResidueSystem::choi().truncated(10).unwrap();
        let a = a.reweighted(vec![1, -1, 2, 3, 1, 1, -2, 1, 1, 7]).unwrap();
        let x: Vec<SubsetPolynomial> = (0..10).map(|s| SubsetPolynomial::variable(10, s).unwrap()).collect();
        let f = x[0].add(&x[3]).unwrap().mul(&x[1].scale(&rational(1, 2))).unwrap();
        for z in 0..30 {
            if a.covering_function(z) >= 2 {
                assert!(identity_42_check(&a, &f, z).unwrap());
            }
        }
    }

    #[test]
    fn psi_vanishing_on_choi() {
        let choi = ResidueSystem::choi();
        let r = lemma41_check(&choi, &one(19)).unwrap();
        assert!(r.coefficients_vanish && r.psi_vanish && r.coprime);
        let lone = sys(&[(0, 2)]);
        let r = lemma41_check(&lone, &one(1)).unwrap();
        assert!(!r.coefficients_vanish && !r.psi_vanish);
    }
}
