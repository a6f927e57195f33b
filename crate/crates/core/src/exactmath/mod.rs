//! Exact arithmetic: rationals, generalized binomials, integer polynomials
//! and elements of cyclotomic rings.

mod binomial;
mod cyclo;
mod numtheory;
mod poly;
mod rational;

pub use binomial::{
    binom_indicator_mod_p, gen_binomial, indicator_sweep, lucas_binomial_mod_p, IndicatorSweep,
};
pub use cyclo::CycloElement;
pub use numtheory::{
    divisors, gcd_u64, is_prime, lcm_u64, mobius, next_prime_above, prime_power, pow_u64,
};
pub use poly::{cyclotomic_polynomial, IntPolynomial};
pub use rational::{
    frac_part, parse_rational, rational, serialize_rational, serialize_rationals, Rational,
};
