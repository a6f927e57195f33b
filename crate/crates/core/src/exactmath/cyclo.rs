use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::numtheory::is_prime;
use super::poly::{cyclotomic_polynomial, div_rem_monic_slice, rem_monic_mod_p};
use super::rational::Rational;
use crate::error::{Error, Result};

/// An element `Σ_j c_j ζ_N^j` of `Q(ζ_N)`, `ζ_N = e^{2πi/N}`, stored densely
/// with exactly `N` rational coefficients.
///
/// The representation is not canonical: reduction modulo `Φ_N` happens only
/// inside [`is_zero`](Self::is_zero) and the divisibility tests.
#[derive(Clone, Debug)]
pub struct CycloElement {
    level: usize,
    coeffs: Vec<Rational>,
}

impl CycloElement {
    pub fn new(level: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if level == 0 {
            return Err(Error::Input("cyclotomic level must be positive".into()));
        }
        if coeffs.len() != level {
            return Err(Error::Input(format!(
                "level {level} needs {level} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(CycloElement { level, coeffs })
    }

    pub fn zero(level: usize) -> Self {
        assert!(level >= 1);
        CycloElement {
            level,
            coeffs: vec![Rational::zero(); level],
        }
    }

    pub fn from_integer(level: usize, value: i64) -> Self {
        let mut e = Self::zero(level);
        e.coeffs[0] = Rational::from_integer(BigInt::from(value));
        e
    }

    /// `coeff * ζ_N^exponent`, exponent folded mod `N`.
    pub fn monomial(level: usize, exponent: i64, coeff: Rational) -> Self {
        let mut e = Self::zero(level);
        e.coeffs[exponent.rem_euclid(level as i64) as usize] = coeff;
        e
    }

    pub fn root_of_unity(level: usize, exponent: i64) -> Self {
        Self::monomial(level, exponent, Rational::one())
    }

    /// Builds `Σ_j counts[j] ζ_N^j` from integer coefficients.
    pub fn from_integer_coeffs(counts: &[i128]) -> Self {
        CycloElement {
            level: counts.len(),
            coeffs: counts
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Adds `coeff * ζ_N^exponent` in place.
    pub fn add_monomial(&mut self, exponent: i64, coeff: &Rational) {
        let j = exponent.rem_euclid(self.level as i64) as usize;
        self.coeffs[j] += coeff;
    }

    /// Rewrites the element at a multiple of its level using
    /// `ζ_N^j = ζ_M^{j·M/N}`.
    pub fn relevel(&self, level: usize) -> Result<Self> {
        if level == 0 || level % self.level != 0 {
            return Err(Error::Input(format!(
                "cannot move level {} to level {level}",
                self.level
            )));
        }
        let step = level / self.level;
        let mut out = Self::zero(level);
        for (j, c) in self.coeffs.iter().enumerate() {
            out.coeffs[j * step] = c.clone();
        }
        Ok(out)
    }

    fn common_level(&self, other: &Self) -> (Self, Self) {
        let level = self.level.lcm(&other.level);
        (
            self.relevel(level).expect("lcm is a multiple"),
            other.relevel(level).expect("lcm is a multiple"),
        )
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        CycloElement {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients scaled by one common multiplier so they become integers.
    fn cleared(&self) -> Vec<BigInt> {
        let denom = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coeffs
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect()
    }

    /// Exact test for `self == 0` as a complex number: the coefficient
    /// polynomial must vanish modulo `Φ_N`.
    pub fn is_zero(&self) -> bool {
        if self.coeffs.iter().all(Zero::is_zero) {
            return true;
        }
        let phi = cyclotomic_polynomial(self.level);
        let (_, rem) = div_rem_monic_slice(&self.cleared(), phi.coeffs());
        rem.iter().all(Zero::is_zero)
    }

    pub fn value_eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }

    fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                c.is_integer()
                    .then(|| c.to_integer())
                    .ok_or_else(|| Error::Input(format!("coefficient {c} is not an integer")))
            })
            .collect()
    }

    /// Decides `self ∈ pΩ` for an element of `Z[ζ_N]`.
    ///
    /// `Z[ζ_N]` is the full ring of integers of `Q(ζ_N)`, so membership in
    /// `pΩ` is membership in `pZ[ζ_N]`, which holds iff the coefficient
    /// polynomial is divisible by `Φ_N` over the field with `p` elements.
    pub fn is_divisible_by_prime(&self, p: u64) -> Result<bool> {
        if !is_prime(p) {
            return Err(Error::Input(format!("{p} is not prime")));
        }
        let ints = self.integer_coeffs()?;
        let phi = cyclotomic_polynomial(self.level);
        let rem = rem_monic_mod_p(&ints, phi.coeffs(), &BigInt::from(p));
        Ok(rem.iter().all(Zero::is_zero))
    }

    /// A witness `w ∈ Z[ζ_N]` with `self = p·w`, if one exists. Computed from
    /// the integral remainder modulo `Φ_N`, independently of
    /// [`is_divisible_by_prime`](Self::is_divisible_by_prime).
    pub fn prime_quotient(&self, p: u64) -> Result<Option<CycloElement>> {
        if !is_prime(p) {
            return Err(Error::Input(format!("{p} is not prime")));
        }
        let ints = self.integer_coeffs()?;
        let phi = cyclotomic_polynomial(self.level);
        let (_, rem) = div_rem_monic_slice(&ints, phi.coeffs());
        let p = BigInt::from(p);
        if rem.iter().any(|c| !c.mod_floor(&p).is_zero()) {
            return Ok(None);
        }
        let mut w = Self::zero(self.level);
        for (j, c) in rem.into_iter().enumerate() {
            w.coeffs[j] = Rational::from_integer(c / &p);
        }
        Ok(Some(w))
    }
}

impl Add for &CycloElement {
    type Output = CycloElement;

    fn add(self, rhs: &CycloElement) -> CycloElement {
        let (mut a, b) = self.common_level(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for &CycloElement {
    type Output = CycloElement;

    fn sub(self, rhs: &CycloElement) -> CycloElement {
        let (mut a, b) = self.common_level(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl Neg for &CycloElement {
    type Output = CycloElement;

    fn neg(self) -> CycloElement {
        CycloElement {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycloElement {
    type Output = CycloElement;

    fn mul(self, rhs: &CycloElement) -> CycloElement {
        let (a, b) = self.common_level(rhs);
        let n = a.level;
        let mut out = CycloElement::zero(n);
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    out.coeffs[(i + j) % n] += x * y;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rational;

    fn int_elem(coeffs: &[i128]) -> CycloElement {
        CycloElement::from_integer_coeffs(coeffs)
    }

    #[test]
    fn zero_examples() {
        assert!(int_elem(&[1, 1]).is_zero());
        assert!(int_elem(&[1, 1, 1, 1]).is_zero());
        assert!(!int_elem(&[1, 1, 0]).is_zero());
    }

    #[test]
    fn full_root_sums_vanish() {
        for n in 2..=60usize {
            assert!(int_elem(&vec![1; n]).is_zero(), "n={n}");
            // a proper subset of the roots never sums to zero when it is a single root
            assert!(!CycloElement::root_of_unity(n, 1).is_zero());
        }
    }

    #[test]
    fn divisibility_examples() {
        assert!(int_elem(&[0, 2, 0, 0]).is_divisible_by_prime(2).unwrap());
        assert!(!int_elem(&[-1, 1, 0, 0]).is_divisible_by_prime(2).unwrap());
        assert!(int_elem(&[7]).is_divisible_by_prime(7).unwrap());
        let frac = CycloElement::new(1, vec![rational(1, 2)]).unwrap();
        assert!(matches!(frac.is_divisible_by_prime(2), Err(Error::Input(_))));
        assert!(matches!(int_elem(&[1]).is_divisible_by_prime(4), Err(Error::Input(_))));
    }

    #[test]
    fn divisibility_sees_through_non_reduced_forms() {
        // 1 + ζ_3 + ζ_3^2 = 0, so 1 + ζ_3 + ζ_3^2 + 3ζ_3 is divisible by 3.
        let e = int_elem(&[1, 4, 1]);
        assert!(e.is_divisible_by_prime(3).unwrap());
        let w = e.prime_quotient(3).unwrap().unwrap();
        assert!((&e - &w.scale(&rational(3, 1))).is_zero());
    }

    #[test]
    fn relevel_and_mixed_levels() {
        // ζ_2 = -1 and ζ_4^2 = -1
        let a = CycloElement::root_of_unity(2, 1);
        let b = CycloElement::root_of_unity(4, 2);
        assert!(a.value_eq(&b));
        let i = CycloElement::root_of_unity(4, 1);
        assert!((&i * &i).value_eq(&CycloElement::from_integer(1, -1)));
        let sum = &a + &CycloElement::from_integer(3, 1);
        assert_eq!(sum.level(), 6);
        assert!(sum.is_zero());
        assert!(a.relevel(3).is_err());
    }

    #[test]
    fn witness_quotient_consistency() {
        let cases: &[(&[i128], u64)] = &[
            (&[0, 2, 0, 0], 2),
            (&[6, 3, 9], 3),
            (&[5, 0, 0, 0, 0], 5),
            (&[1, 1, 1, 1, 1, 1], 2),
            (&[2, 3, 4, 5, 6], 7),
        ];
        for &(coeffs, p) in cases {
            let e = int_elem(coeffs);
            let divisible = e.is_divisible_by_prime(p).unwrap();
            let w = e.prime_quotient(p).unwrap();
            assert_eq!(divisible, w.is_some(), "{coeffs:?} mod {p}");
            if let Some(w) = w {
                let pw = w.scale(&Rational::from_integer(BigInt::from(p)));
                assert!((&e - &pw).is_zero());
            }
        }
    }
}
