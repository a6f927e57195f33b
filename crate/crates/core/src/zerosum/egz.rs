use num_bigint::BigInt;
use serde::Serialize;

use super::{exponent_of, mask_of, ZeroSumInstance};
use crate::covers::ResidueSystem;
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::pgroups::{GroupElement, GroupShape};

/// A zero-sum subsequence with `Σ_{s∈I} 1/n_s = q`; `I` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EgzWitness {
    pub indices: Vec<usize>,
    /// the first search hit had weight `2q` and was replaced
    pub redirected: bool,
}

fn check_q(shape: &GroupShape, q: u64) -> Result<u32> {
    let p = shape
        .prime()
        .ok_or_else(|| Error::Hypothesis(format!("{} is not a p-group", shape.name())))?;
    let e = exponent_of(q, p).ok_or_else(|| Error::Hypothesis(format!("{q} is not a power of {p}")))?;
    if q <= shape.d_star() {
        return Err(Error::Hypothesis(format!("q = {q} must exceed d*(G) = {}", shape.d_star())));
    }
    Ok(e)
}

/// First nonempty zero-sum `I` with `Σ_{s∈I} 1/n_s ∈ qZ` (weights ignored).
fn first_hit(system: &ResidueSystem, shape: &GroupShape, elements: &[GroupElement], e: u32) -> Result<Option<Vec<usize>>> {
    let inst = ZeroSumInstance::new(
        system.unweighted(),
        shape.clone(),
        elements.to_vec(),
        shape.zero(),
        e,
        Rational::from_integer(0.into()),
    )?;
    inst.find_zero_sum_subsequence()
}

fn weight(system: &ResidueSystem, indices: &[usize]) -> Result<Rational> {
    Ok(system.reciprocal_sum(mask_of(indices, system.len())?))
}

fn q_rat(q: u64, times: u64) -> Rational {
    Rational::from_integer(BigInt::from(q * times))
}

/// Zero-sum `I` with `Σ_{s∈I} 1/n_s = q` when `w_A` takes values in
/// `[d*(G) + q, 2q]`. If the first hit has weight `2q` (so `A` is an exact
/// `2q`-cover) the search is repeated without the last class.
pub fn egz_weighted_find(system: &ResidueSystem, shape: &GroupShape, elements: &[GroupElement], q: u64) -> Result<EgzWitness> {
    let e = check_q(shape, q)?;
    let profile = system.profile()?;
    let (lo, hi) = (shape.d_star() + q, 2 * q);
    if (profile.min_mult as u64) < lo || profile.max_mult as u64 > hi {
        return Err(Error::Hypothesis(format!(
            "covering function takes values in [{}, {}], not inside [{lo}, {hi}]",
            profile.min_mult, profile.max_mult
        )));
    }
    let bundle = || {
        serde_json::json!({
            "system": system.to_json(), "group": shape.to_string(), "elements": elements, "q": q,
        })
    };
    let Some(first) = first_hit(system, shape, elements, e)? else {
        return Err(Error::violation("a zero-sum witness with weight in qZ exists", bundle()));
    };
    let w = weight(system, &first)?;
    if w == q_rat(q, 1) {
        return Ok(EgzWitness { indices: first, redirected: false });
    }
    if w == q_rat(q, 2) && profile.min_mult as u64 == hi && system.len() > 1 {
        let shorter = system.truncated(system.len() - 1)?;
        if let Some(i) = first_hit(&shorter, shape, &elements[..shorter.len()], e)? {
            if weight(system, &i)? == q_rat(q, 1) {
                return Ok(EgzWitness { indices: i, redirected: true });
            }
        }
    }
    Err(Error::violation("a zero-sum witness with weight exactly q exists", bundle()))
}

/// For an exact `3q`-cover and a zero-sum sequence over `G ⊕ G` (given in
/// the canonical component order of `shape.doubled()`), a zero-sum `I` with
/// `Σ_{s∈I} 1/n_s = q`. Searches the first `k - 1` classes and takes the
/// complement when the hit has weight `2q`.
pub fn egz_exact3q_find(system: &ResidueSystem, shape: &GroupShape, elements: &[GroupElement], q: u64) -> Result<EgzWitness> {
    let e = check_q(shape, q)?;
    let doubled = shape.doubled()?;
    if elements.len() != system.len() {
        return Err(Error::Input(format!("{} elements for {} classes", elements.len(), system.len())));
    }
    if !doubled.is_zero(&doubled.sum(elements)?) {
        return Err(Error::Hypothesis("the sequence does not sum to zero".into()));
    }
    if !system.is_exact_m_cover(3 * q as usize)? {
        return Err(Error::Hypothesis(format!("not an exact {}-cover", 3 * q)));
    }
    let bundle = || {
        serde_json::json!({
            "system": system.to_json(), "group": shape.to_string(), "elements": elements, "q": q,
        })
    };
    let shorter = system.truncated(system.len() - 1)?;
    let Some(hit) = first_hit(&shorter, &doubled, &elements[..shorter.len()], e)? else {
        return Err(Error::violation("a zero-sum witness with weight in qZ exists", bundle()));
    };
    let w = weight(system, &hit)?;
    if w == q_rat(q, 1) {
        return Ok(EgzWitness { indices: hit, redirected: false });
    }
    if w == q_rat(q, 2) {
        let complement: Vec<usize> = (1..=system.len()).filter(|i| !hit.contains(i)).collect();
        return Ok(EgzWitness { indices: complement, redirected: true });
    }
    Err(Error::violation("the witness weight is q or 2q", bundle()))
}
