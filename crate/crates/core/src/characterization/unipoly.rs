use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactmath::Rational;

/// Univariate polynomial over `Q`, coefficients in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn monomial(n: usize) -> Self {
        let mut c = vec![Rational::zero(); n + 1];
        c[n] = Rational::one();
        Self::new(c)
    }

    /// `C(x, n) = x(x-1)...(x-n+1) / n!`.
    pub fn binomial(n: usize) -> Self {
        let mut c = vec![Rational::one()];
        for i in 0..n {
            // multiply by (x - i) / (i + 1)
            let mut next = vec![Rational::zero(); c.len() + 1];
            let shift = Rational::from_integer(BigInt::from(i));
            let div = Rational::from_integer(BigInt::from(i + 1));
            for (j, a) in c.iter().enumerate() {
                next[j + 1] += a / &div;
                next[j] -= a * &shift / &div;
            }
            c = next;
        }
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| match j {
                0 => format!("{c}"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{j}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{gen_binomial, rational};

    #[test]
    fn binomial_basis_matches_generalized_binomials() {
        for n in 0..6 {
            let p = UniPoly::binomial(n);
            assert_eq!(p.degree(), Some(n));
            for x in -7..8 {
                let expect = Rational::from_integer(gen_binomial(&BigInt::from(x), n as u64));
                assert_eq!(p.eval(&rational(x, 1)), expect);
            }
        }
        assert_eq!(UniPoly::binomial(2).eval(&rational(1, 2)), rational(-1, 8));
    }

    #[test]
    fn trimming_and_display() {
        assert_eq!(UniPoly::new(vec![rational(0, 1)]).degree(), None);
        assert_eq!(UniPoly::monomial(2).to_string(), "(1)x^2");
        assert_eq!(UniPoly::binomial(1).to_string(), "(1)x");
    }
}
