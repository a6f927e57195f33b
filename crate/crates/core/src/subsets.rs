//! Constrained subset enumeration over `[1, k]`.
//!
//! A [`SubsetSpace`] attaches to every index a vector of integer values, one
//! per dimension. A dimension is either modular (sums compared modulo a
//! positive modulus) or exact (sums compared as integers). A subset matches
//! when its value sums equal the target in every dimension.
//!
//! Two independent routes are provided: direct Gray-code enumeration for
//! `k <= DIRECT_MAX` and a meet-in-the-middle join for `k <= MITM_MAX`.
//! Masks use bit `i` for index `i + 1`.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};

pub const DIRECT_MAX: usize = 24;
pub const MITM_MAX: usize = 40;

/// Orders masks by cardinality, then lexicographically on their sorted index
/// lists.
pub fn card_lex_cmp(a: u64, b: u64) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let diff = a ^ b;
        if diff == 0 {
            Ordering::Equal
        } else if a & diff & diff.wrapping_neg() != 0 {
            // the smallest index where they differ belongs to `a`
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

/// 1-based indices of a mask.
pub fn mask_to_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

pub fn indices_to_mask(indices: &[usize], k: usize) -> Result<u64> {
    let mut mask = 0u64;
    for &i in indices {
        if i == 0 || i > k {
            return Err(Error::Input(format!("index {i} outside [1, {k}]")));
        }
        mask |= 1 << (i - 1);
    }
    Ok(mask)
}

#[derive(Clone, Debug)]
pub struct SubsetSpace {
    len: usize,
    // 0 marks an exact dimension
    moduli: Vec<u64>,
    // values[item * dims + dim]
    values: Vec<i64>,
    target: Vec<i64>,
}

fn reduce(v: i128, modulus: u64) -> i64 {
    if modulus == 0 {
        v as i64
    } else {
        v.rem_euclid(modulus as i128) as i64
    }
}

impl SubsetSpace {
    pub fn new(len: usize) -> Self {
        SubsetSpace {
            len,
            moduli: Vec::new(),
            values: Vec::new(),
            target: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn dims(&self) -> usize {
        self.moduli.len()
    }

    fn push_dim(mut self, values: &[i128], modulus: u64, target: i128) -> Result<Self> {
        if values.len() != self.len {
            return Err(Error::Input(format!(
                "dimension has {} values for {} indices",
                values.len(),
                self.len
            )));
        }
        if modulus == 0 {
            let bound = 1i128 << 40;
            if values.iter().chain(std::iter::once(&target)).any(|v| v.abs() > bound) {
                return Err(Error::Resource("exact subset values exceed 2^40".into()));
            }
        } else if modulus > 1 << 40 {
            return Err(Error::Resource(format!("modulus {modulus} exceeds 2^40")));
        }
        let dims = self.dims();
        let mut merged = Vec::with_capacity(self.len * (dims + 1));
        for (i, &v) in values.iter().enumerate() {
            merged.extend_from_slice(&self.values[i * dims..(i + 1) * dims]);
            merged.push(reduce(v, modulus));
        }
        self.values = merged;
        self.moduli.push(modulus);
        self.target.push(reduce(target, modulus));
        Ok(self)
    }

    /// Adds a dimension compared modulo `modulus` (which must be positive).
    pub fn modular(self, values: &[i128], modulus: u64, target: i128) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Input("modulus must be positive".into()));
        }
        self.push_dim(values, modulus, target)
    }

    /// Adds a dimension compared as exact integers.
    pub fn exact(self, values: &[i128], target: i128) -> Result<Self> {
        self.push_dim(values, 0, target)
    }

    fn item(&self, i: usize) -> &[i64] {
        let d = self.dims();
        &self.values[i * d..(i + 1) * d]
    }

    fn add_into(&self, acc: &mut [i64], item: usize, sign: i64) {
        for ((a, &v), &m) in acc.iter_mut().zip(self.item(item)).zip(&self.moduli) {
            *a += sign * v;
            if m != 0 {
                let m = m as i64;
                if *a >= m {
                    *a -= m;
                } else if *a < 0 {
                    *a += m;
                }
            }
        }
    }

    /// Value sums of one subset.
    pub fn sums_of(&self, mask: u64) -> Vec<i64> {
        let mut acc = vec![0i64; self.dims()];
        for i in 0..self.len {
            if mask >> i & 1 == 1 {
                self.add_into(&mut acc, i, 1);
            }
        }
        acc
    }

    pub fn matches(&self, mask: u64) -> bool {
        self.sums_of(mask) == self.target
    }

    fn check_direct(&self) -> Result<()> {
        if self.len > DIRECT_MAX {
            return Err(Error::Resource(format!(
                "direct enumeration limited to {DIRECT_MAX} indices, got {}",
                self.len
            )));
        }
        Ok(())
    }

    fn check_mitm(&self) -> Result<()> {
        if self.len > MITM_MAX {
            return Err(Error::Resource(format!(
                "meet-in-the-middle limited to {MITM_MAX} indices, got {}",
                self.len
            )));
        }
        Ok(())
    }

    /// Calls `f` on every subset with its running sums, in Gray-code order.
    fn gray_walk(&self, count: usize, offset: usize, mut f: impl FnMut(u64, &[i64])) {
        let mut acc = vec![0i64; self.dims()];
        let mut mask = 0u64;
        f(0, &acc);
        for step in 1u64..(1u64 << count) {
            let bit = step.trailing_zeros() as usize;
            let sign = if mask >> bit & 1 == 1 { -1 } else { 1 };
            mask ^= 1 << bit;
            self.add_into(&mut acc, offset + bit, sign);
            f(mask, &acc);
        }
    }

    /// Calls `f` on every subset with its per-dimension sums (direct
    /// enumeration, Gray-code order).
    pub fn walk(&self, f: impl FnMut(u64, &[i64])) -> Result<()> {
        self.check_direct()?;
        self.gray_walk(self.len, 0, f);
        Ok(())
    }

    /// Calls `f` on every matching mask (direct enumeration).
    pub fn for_each_match(&self, mut f: impl FnMut(u64)) -> Result<()> {
        self.check_direct()?;
        self.gray_walk(self.len, 0, |mask, acc| {
            if acc == self.target.as_slice() {
                f(mask)
            }
        });
        Ok(())
    }

    /// All matching masks in cardinality-lexicographic order.
    pub fn matches_sorted(&self) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        self.for_each_match(|m| out.push(m))?;
        out.sort_by(|a, b| card_lex_cmp(*a, *b));
        Ok(out)
    }

    pub fn count_direct(&self) -> Result<u64> {
        let mut n = 0;
        self.for_each_match(|_| n += 1)?;
        Ok(n)
    }

    /// First match in cardinality-lexicographic order other than `exclude`.
    pub fn first_direct(&self, exclude: Option<u64>) -> Result<Option<u64>> {
        let mut best: Option<u64> = None;
        self.for_each_match(|m| {
            if Some(m) != exclude && best.is_none_or(|b| card_lex_cmp(m, b) == Ordering::Less) {
                best = Some(m);
            }
        })?;
        Ok(best)
    }

    fn needed(&self, left: &[i64]) -> Vec<i64> {
        left.iter()
            .zip(&self.target)
            .zip(&self.moduli)
            .map(|((&l, &t), &m)| {
                if m == 0 {
                    t - l
                } else {
                    (t - l).rem_euclid(m as i64)
                }
            })
            .collect()
    }

    fn halves(&self) -> (usize, usize) {
        let low = self.len / 2;
        (low, self.len - low)
    }

    pub fn count_mitm(&self) -> Result<u64> {
        self.check_mitm()?;
        let (low, high) = self.halves();
        let mut table: HashMap<Vec<i64>, u64> = HashMap::new();
        self.gray_walk(high, low, |_, acc| *table.entry(acc.to_vec()).or_default() += 1);
        let mut total = 0u64;
        self.gray_walk(low, 0, |_, acc| {
            if let Some(n) = table.get(&self.needed(acc)) {
                total += n;
            }
        });
        Ok(total)
    }

    /// First match in cardinality-lexicographic order other than `exclude`,
    /// found by joining the two halves.
    ///
    /// Every index of the low half precedes every index of the high half, so
    /// for a fixed low part and high cardinality only the two smallest high
    /// parts can matter (one of them may be excluded).
    pub fn first_mitm(&self, exclude: Option<u64>) -> Result<Option<u64>> {
        self.check_mitm()?;
        let (low, high) = self.halves();
        let mut table: HashMap<Vec<i64>, Vec<[Option<u64>; 2]>> = HashMap::new();
        self.gray_walk(high, low, |mask, acc| {
            let slots = table
                .entry(acc.to_vec())
                .or_insert_with(|| vec![[None, None]; high + 1]);
            let slot = &mut slots[mask.count_ones() as usize];
            match slot {
                [None, _] => slot[0] = Some(mask),
                [Some(a), second] => {
                    if card_lex_cmp(mask, *a) == Ordering::Less {
                        *second = Some(*a);
                        slot[0] = Some(mask);
                    } else if second.is_none_or(|b| card_lex_cmp(mask, b) == Ordering::Less) {
                        *second = Some(mask);
                    }
                }
            }
        });
        let mut best: Option<u64> = None;
        self.gray_walk(low, 0, |left, acc| {
            let Some(slots) = table.get(&self.needed(acc)) else {
                return;
            };
            for slot in slots {
                for right in slot.iter().flatten() {
                    let full = left | right << low;
                    if Some(full) == exclude {
                        continue;
                    }
                    if best.is_none_or(|b| card_lex_cmp(full, b) == Ordering::Less) {
                        best = Some(full);
                    }
                }
            }
        });
        Ok(best)
    }

    /// Number of matches; meet-in-the-middle up to [`MITM_MAX`] indices.
    pub fn count(&self) -> Result<u64> {
        if self.len <= 12 {
            self.count_direct()
        } else {
            self.count_mitm()
        }
    }

    /// First match other than `exclude`; direct up to [`DIRECT_MAX`] indices,
    /// meet-in-the-middle beyond.
    pub fn first(&self, exclude: Option<u64>) -> Result<Option<u64>> {
        if self.len <= DIRECT_MAX {
            self.first_direct(exclude)
        } else {
            self.first_mitm(exclude)
        }
    }
}
