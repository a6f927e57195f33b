//! Exhaustive Davenport and EGZ constants for tiny groups. Zero-sum existence
//! does not depend on order, so sequences are enumerated as multisets
//! (nondecreasing element indices).

use super::{GroupElement, GroupShape};
use crate::error::{Error, Result};

/// Largest order accepted by [`davenport_constant`].
pub const DAVENPORT_ORDER_BOUND: u64 = 9;
/// Largest order accepted by [`egz_constant`].
pub const EGZ_ORDER_BOUND: u64 = 12;

/// Element indices as bitmasks over `[0, |G|)`.
struct Table {
    order: usize,
    add: Vec<Vec<usize>>,
}

impl Table {
    fn new(shape: &GroupShape) -> Self {
        let order = shape.order() as usize;
        let elems: Vec<GroupElement> = shape.elements().collect();
        let add = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| shape.index_of(&shape.add(a, b).expect("same shape")))
                    .collect()
            })
            .collect();
        Table { order, add }
    }

    fn translate(&self, mask: u64, g: usize) -> u64 {
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let r = m.trailing_zeros() as usize;
            out |= 1 << self.add[r][g];
            m &= m - 1;
        }
        out
    }
}

fn bounded(shape: &GroupShape, bound: u64, what: &str) -> Result<Table> {
    if shape.order() > bound {
        return Err(Error::Resource(format!(
            "{what} is exhaustive only up to order {bound}; {} has order {}",
            shape.name(),
            shape.order()
        )));
    }
    Ok(Table::new(shape))
}

/// `reach` holds the nonempty subsequence sums so far.
fn longest_zero_sum_free(t: &Table, start: usize, reach: u64, depth: usize) -> usize {
    let mut best = depth;
    for g in start.max(1)..t.order {
        let next = reach | t.translate(reach, g) | 1 << g;
        if next & 1 == 0 {
            best = best.max(longest_zero_sum_free(t, g, next, depth + 1));
        }
    }
    best
}

/// `D(G)`: the least `k` such that every length-`k` sequence has a nonempty
/// zero-sum subsequence. Checked against `d*(G) + 1`.
pub fn davenport_constant(shape: &GroupShape) -> Result<u64> {
    let t = bounded(shape, DAVENPORT_ORDER_BOUND, "the Davenport constant")?;
    let d = longest_zero_sum_free(&t, 1, 0, 0) as u64 + 1;
    if d != shape.d_star() + 1 {
        return Err(Error::violation(
            "D(G) = d*(G) + 1",
            serde_json::json!({ "group": shape.to_string(), "davenport": d }),
        ));
    }
    Ok(d)
}

/// `sums[j]` holds the sums of `j`-element subsequences, `j <= exp(G)`.
fn longest_without_short_zero_sum(t: &Table, start: usize, sums: &[u64], depth: usize) -> usize {
    let e = sums.len() - 1;
    let mut best = depth;
    let mut next = sums.to_vec();
    for g in start..t.order {
        next.copy_from_slice(sums);
        for j in (1..=e).rev() {
            next[j] |= t.translate(sums[j - 1], g);
        }
        if next[e] & 1 == 0 {
            best = best.max(longest_without_short_zero_sum(t, g, &next, depth + 1));
        }
    }
    best
}

fn known_egz(shape: &GroupShape) -> Option<u64> {
    let moduli = shape.moduli();
    match moduli.as_slice() {
        [] => Some(1),
        [n] => Some(2 * n - 1),
        [d, n] if n % d == 0 => Some(2 * (d + n) - 3),
        _ => None,
    }
}

/// `s(G)`: the least `k` such that every length-`k` sequence has a zero-sum
/// subsequence of length `exp(G)`. Checked against the known values for
/// rank at most two.
pub fn egz_constant(shape: &GroupShape) -> Result<u64> {
    let t = bounded(shape, EGZ_ORDER_BOUND, "the EGZ constant")?;
    let e = shape.exponent() as usize;
    let mut sums = vec![0u64; e + 1];
    sums[0] = 1;
    let s = longest_without_short_zero_sum(&t, 0, &sums, 0) as u64 + 1;
    if let Some(expected) = known_egz(shape) {
        if s != expected {
            return Err(Error::violation(
                "s(G) matches 2n-1 / 2(d+n)-3",
                serde_json::json!({ "group": shape.to_string(), "egz": s, "expected": expected }),
            ));
        }
    }
    Ok(s)
}

/// `d_t - 1` copies of each standard generator; length `d*(G)`.
pub fn extremal_sequence(shape: &GroupShape) -> Vec<GroupElement> {
    let moduli = shape.moduli();
    let mut out = Vec::new();
    for (t, &m) in moduli.iter().enumerate() {
        let mut comps = vec![0i64; moduli.len()];
        comps[t] = 1;
        let g = shape.element(&comps).expect("right length");
        out.extend(std::iter::repeat(g).take(m as usize - 1));
    }
    out
}

/// Whether some nonempty subsequence sums to zero (subset-sum reachability).
pub fn has_nonempty_zero_sum(shape: &GroupShape, seq: &[GroupElement]) -> Result<bool> {
    let order = shape.order();
    if order > 1 << 24 {
        return Err(Error::Resource(format!("group order {order} too large")));
    }
    let mut reach = vec![false; order as usize];
    for c in seq {
        shape.check(c)?;
        let prev = reach.clone();
        for (i, _) in prev.iter().enumerate().filter(|(_, &r)| r) {
            let s = shape.add(&shape.element_at(i), c)?;
            reach[shape.index_of(&s)] = true;
        }
        reach[shape.index_of(c)] = true;
        if reach[0] {
            return Ok(true);
        }
    }
    Ok(false)
}
