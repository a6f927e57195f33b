use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::Rational;

/// Sparse polynomial in `x_1..x_k` over `Q` with a declared degree bound,
/// evaluated at 0/1 indicator points of subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetPolynomial {
    vars: usize,
    degree: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl SubsetPolynomial {
    pub fn zero(vars: usize, degree: u32) -> Self {
        SubsetPolynomial { vars, degree, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, value: Rational) -> Self {
        let mut p = Self::zero(vars, 0);
        p.insert(vec![0; vars], value);
        p
    }

    /// `Σ coeffs[s] x_{s+1}` with declared degree 1.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let vars = coeffs.len();
        let mut p = Self::zero(vars, 1);
        for (s, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; vars];
            e[s] = 1;
            p.insert(e, c.clone());
        }
        p
    }

    /// `x_{var+1}` (0-based `var`).
    pub fn variable(vars: usize, var: usize) -> Result<Self> {
        if var >= vars {
            return Err(Error::Input(format!("variable {} out of range", var + 1)));
        }
        let mut e = vec![0; vars];
        e[var] = 1;
        let mut p = Self::zero(vars, 1);
        p.insert(e, Rational::one());
        Ok(p)
    }

    /// Builds from `(exponent vector, coefficient)` pairs; every term must
    /// have total degree at most `degree`.
    pub fn from_terms(vars: usize, degree: u32, terms: Vec<(Vec<u32>, Rational)>) -> Result<Self> {
        let mut p = Self::zero(vars, degree);
        for (e, c) in terms {
            if e.len() != vars {
                return Err(Error::Input(format!(
                    "exponent vector of length {} for {vars} variables",
                    e.len()
                )));
            }
            if e.iter().sum::<u32>() > degree {
                return Err(Error::Input(format!("term {e:?} exceeds degree {degree}")));
            }
            p.insert(e, c);
        }
        Ok(p)
    }

    fn insert(&mut self, e: Vec<u32>, c: Rational) {
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn declared_degree(&self) -> u32 {
        self.degree
    }

    /// Largest total degree of a nonzero term (0 for the zero polynomial).
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut out = Self::zero(self.vars, self.degree.max(other.degree));
        for (e, c) in self.terms.iter().chain(&other.terms) {
            out.insert(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut out = Self::zero(self.vars, self.degree + other.degree);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut out = Self::constant(self.vars, Rational::one());
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let mut out = Self::zero(self.vars, self.degree);
        for (e, c) in &self.terms {
            out.insert(e.clone(), c * factor);
        }
        out
    }

    fn same_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::Input(format!(
                "polynomials in {} and {} variables",
                self.vars, other.vars
            )));
        }
        Ok(())
    }

    /// Value at `x_s = [s ∈ I]`, with `I` given as a bitmask.
    pub fn eval_indicator(&self, mask: u64) -> Rational {
        self.terms
            .iter()
            .filter(|(e, _)| e.iter().enumerate().all(|(s, &d)| d == 0 || mask >> s & 1 == 1))
            .fold(Rational::zero(), |acc, (_, c)| acc + c)
    }

    /// Precomputed indicator evaluator: support masks with coefficients.
    pub fn indicator_table(&self) -> Vec<(u64, Rational)> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let support = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d > 0)
                    .fold(0u64, |m, (s, _)| m | 1 << s);
                (support, c.clone())
            })
            .collect()
    }

    /// Coefficient of `Π_{s ∈ mask} x_{s+1}` (each exponent exactly 1).
    pub fn squarefree_coefficient(&self, mask: u64) -> Rational {
        let e: Vec<u32> = (0..self.vars).map(|s| (mask >> s & 1) as u32).collect();
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }
}

/// `Σ_{(S,c)} c [S ⊆ mask]` for a table from [`SubsetPolynomial::indicator_table`].
#[cfg(test)]
fn eval_table(table: &[(u64, Rational)], mask: u64) -> Rational {
    table
        .iter()
        .filter(|(support, _)| support & !mask == 0)
        .fold(Rational::zero(), |acc, (_, c)| acc + c)
}

/// Same, with integer coefficients scaled by a common denominator.
pub(crate) fn scaled_table(table: &[(u64, Rational)]) -> (BigInt, Vec<(u64, BigInt)>) {
    let denom = table
        .iter()
        .fold(BigInt::one(), |acc, (_, c)| num_integer::lcm(acc, c.denom().clone()));
    let scaled = table
        .iter()
        .map(|(s, c)| (*s, c.numer() * (&denom / c.denom())))
        .collect();
    (denom, scaled)
}
