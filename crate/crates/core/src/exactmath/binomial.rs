use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::numtheory::{is_prime, pow_u64};
use crate::error::{Error, Result};

/// Generalized binomial `x(x-1)...(x-n+1)/n!` for any integer `x`.
///
/// Each partial product is itself a generalized binomial, so every division
/// in the loop is exact.
pub fn gen_binomial(x: &BigInt, n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..n {
        acc = acc * (x - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// `binom(a-1, p^h - 1) mod p`, which equals 1 exactly when `p^h | a`.
pub fn binom_indicator_mod_p(a: &BigInt, p: u64, h: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::Input(format!("{p} is not prime")));
    }
    let q = pow_u64(p, h).ok_or_else(|| Error::Resource(format!("{p}^{h} overflows")))?;
    let value = gen_binomial(&(a - 1), q - 1);
    Ok(value.mod_floor(&BigInt::from(p)).to_u64().unwrap())
}

/// `binom(n, k) mod p` for `n, k >= 0` by Lucas' theorem on base-`p` digits.
pub fn lucas_binomial_mod_p(n: u64, k: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::Input(format!("{p} is not prime")));
    }
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return Ok(0);
        }
        acc = acc * small_binomial_mod(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct IndicatorSweep {
    pub checked: u64,
    /// values of `a >= 1` also evaluated digitwise
    pub lucas_checked: u64,
}

/// Checks `binom(a-1, p^h - 1) ≡ [p^h | a] (mod p)` for every `a` in
/// `[from, to]`; for `a >= 1` the binomial is recomputed by Lucas' theorem.
pub fn indicator_sweep(p: u64, h: u32, from: i64, to: i64) -> Result<IndicatorSweep> {
    if from > to {
        return Err(Error::Input(format!("empty range [{from}, {to}]")));
    }
    let q = pow_u64(p, h).ok_or_else(|| Error::Resource(format!("{p}^{h} overflows")))?;
    let mut out = IndicatorSweep { checked: 0, lucas_checked: 0 };
    for a in from..=to {
        let got = binom_indicator_mod_p(&BigInt::from(a), p, h)?;
        let expect = u64::from(a.rem_euclid(q as i64) == 0);
        let lucas = if a >= 1 {
            out.lucas_checked += 1;
            Some(lucas_binomial_mod_p(a as u64 - 1, q - 1, p)?)
        } else {
            None
        };
        if got != expect || lucas.is_some_and(|l| l != got) {
            return Err(Error::violation(
                "binom(a-1, p^h-1) mod p is the indicator of p^h | a",
                serde_json::json!({ "a": a, "p": p, "h": h, "value": got, "lucas": lucas }),
            ));
        }
        out.checked += 1;
    }
    Ok(out)
}

// Digits are below p, so no factor in the product is divisible by p.
fn small_binomial_mod(n: u64, k: u64, p: u64) -> u64 {
    let (mut num, mut den) = (1u128, 1u128);
    let pm = p as u128;
    for i in 0..k {
        num = num * ((n - i) as u128) % pm;
        den = den * ((i + 1) as u128) % pm;
    }
    (num * mod_pow(den, pm - 2, pm) % pm) as u64
}

fn mod_pow(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1u128 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}


#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn gen_binomial_examples() {
        assert_eq!(gen_binomial(&big(5), 3), big(10));
        assert_eq!(gen_binomial(&big(-7), 0), big(1));
        assert_eq!(gen_binomial(&big(-1), 2), big(1));
        // (-2)(-3)(-4)/6
        assert_eq!(gen_binomial(&big(-2), 3), big(-4));
        assert_eq!(gen_binomial(&big(3), 5), big(0));
    }

    #[test]
    fn indicator_examples() {
        assert_eq!(binom_indicator_mod_p(&big(4), 2, 2).unwrap(), 1);
        assert_eq!(binom_indicator_mod_p(&big(6), 2, 2).unwrap(), 0);
        assert_eq!(binom_indicator_mod_p(&big(5), 3, 0).unwrap(), 1);
        assert!(matches!(binom_indicator_mod_p(&big(5), 4, 1), Err(Error::Input(_))));
    }

    #[test]
    fn indicator_matches_divisibility_on_symmetric_range() {
        for p in [2u64, 3, 5, 7] {
            for h in 0..=3u32 {
                let q = p.pow(h) as i64;
                for a in -300i64..=300 {
                    let got = binom_indicator_mod_p(&big(a), p, h).unwrap();
                    assert_eq!(got == 1, a.rem_euclid(q) == 0, "a={a} p={p} h={h}");
                    assert!(got <= 1);
                }
            }
        }
    }

    #[test]
    fn sweep_counts() {
        let r = indicator_sweep(2, 2, -50, 50).unwrap();
        assert_eq!(r, IndicatorSweep { checked: 101, lucas_checked: 50 });
        assert!(matches!(indicator_sweep(4, 1, 0, 3), Err(Error::Input(_))));
        assert!(matches!(indicator_sweep(2, 1, 3, 0), Err(Error::Input(_))));
    }

    #[test]
    fn lucas_agrees_with_exact_binomials() {
        for p in [2u64, 3, 5, 7] {
            for n in 0..60u64 {
                for k in 0..=n + 2 {
                    let exact = gen_binomial(&big(n as i64), k);
                    let expect = exact.mod_floor(&big(p as i64)).to_u64().unwrap();
                    assert_eq!(lucas_binomial_mod_p(n, k, p).unwrap(), expect);
                }
            }
        }
    }
}
