use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::numtheory::{divisors, mobius};

/// Dense integer polynomial, lowest degree first, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += 1;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder by a monic divisor, exact over the integers.
    ///
    /// # Panics
    /// If `divisor` is not monic.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let (q, r) = div_rem_monic_slice(&self.coeffs, &divisor.coeffs);
        (Self::new(q), Self::new(r))
    }

    /// Reduces every coefficient into `[0, p)`.
    pub fn reduce_mod(&self, p: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mod_floor(p)).collect())
    }
}

/// Long division by a monic polynomial. Returns `(quotient, remainder)` as raw
/// coefficient vectors (remainder has length `deg(divisor)` before trimming).
pub(crate) fn div_rem_monic_slice(dividend: &[BigInt], divisor: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let d = divisor.len() - 1;
    let mut rem: Vec<BigInt> = dividend.to_vec();
    if rem.len() <= d {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - d];
    for i in (d..rem.len()).rev() {
        let lead = std::mem::take(&mut rem[i]);
        if lead.is_zero() {
            continue;
        }
        let shift = i - d;
        for (j, c) in divisor[..d].iter().enumerate() {
            if !c.is_zero() {
                rem[shift + j] -= &lead * c;
            }
        }
        quot[shift] = lead;
    }
    rem.truncate(d);
    (quot, rem)
}

/// Remainder over the field with `p` elements; `divisor` must be monic.
pub(crate) fn rem_monic_mod_p(dividend: &[BigInt], divisor: &[BigInt], p: &BigInt) -> Vec<BigInt> {
    let d = divisor.len() - 1;
    let mut rem: Vec<BigInt> = dividend.iter().map(|c| c.mod_floor(p)).collect();
    let div: Vec<BigInt> = divisor.iter().map(|c| c.mod_floor(p)).collect();
    if rem.len() <= d {
        return rem;
    }
    for i in (d..rem.len()).rev() {
        let lead = std::mem::take(&mut rem[i]);
        if lead.is_zero() {
            continue;
        }
        let shift = i - d;
        for (j, c) in div[..d].iter().enumerate() {
            if !c.is_zero() {
                rem[shift + j] = (&rem[shift + j] - &lead * c).mod_floor(p);
            }
        }
    }
    rem.truncate(d);
    rem
}

/// The `n`-th cyclotomic polynomial via `Φ_n = Π_{d|n} (x^d - 1)^{μ(n/d)}`.
///
/// # Panics
/// If `n == 0`.
pub fn cyclotomic_polynomial(n: usize) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic level must be positive");
    let mut numer = IntPolynomial::one();
    let mut denom = IntPolynomial::one();
    for d in divisors(n as u64) {
        let factor = IntPolynomial::x_pow_minus_one(d as usize);
        match mobius(n as u64 / d) {
            1 => numer = numer.mul(&factor),
            -1 => denom = denom.mul(&factor),
            _ => {}
        }
    }
    // denom is monic up to sign: (x^d - 1) products have leading coefficient 1.
    let (q, r) = numer.div_rem_monic(&denom);
    debug_assert!(r.is_zero());
    q
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{a}x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}
