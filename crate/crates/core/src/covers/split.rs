use serde::Serialize;

use super::profile::DEFAULT_PERIOD_BOUND;
use super::ResidueSystem;
use crate::error::{Error, Result};

/// A bipartition of an exact `m`-cover into an exact `n`-cover (`part`) and
/// an exact `(m - n)`-cover (`rest`); indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactSplit {
    pub part: Vec<usize>,
    pub rest: Vec<usize>,
}

struct SplitSearch<'a> {
    classes: Vec<(usize, usize, usize)>, // (original index, residue, modulus)
    target: u32,
    // multiplicity inside the chosen part
    chosen: Vec<u32>,
    // multiplicity of chosen plus undecided classes
    open: Vec<u32>,
    // Σ 1/n_s over the chosen part, and over chosen + undecided, as numerators over the period
    chosen_sum: u64,
    open_sum: u64,
    goal_sum: u64,
    period: usize,
    picked: Vec<bool>,
    system: &'a ResidueSystem,
}

impl SplitSearch<'_> {
    fn points(&self, depth: usize) -> impl Iterator<Item = usize> {
        let (_, a, n) = self.classes[depth];
        (a..self.period).step_by(n)
    }

    fn search(&mut self, depth: usize) -> bool {
        if depth == self.classes.len() {
            return self.chosen_sum == self.goal_sum;
        }
        let (orig, _, n) = self.classes[depth];
        let weight = (self.period / n) as u64;

        // include
        if self.chosen_sum + weight <= self.goal_sum {
            let ok = self.points(depth).all(|x| self.chosen[x] < self.target);
            if ok {
                for x in self.points(depth).collect::<Vec<_>>() {
                    self.chosen[x] += 1;
                }
                self.chosen_sum += weight;
                self.picked[orig] = true;
                if self.search(depth + 1) {
                    return true;
                }
                self.picked[orig] = false;
                self.chosen_sum -= weight;
                for x in self.points(depth).collect::<Vec<_>>() {
                    self.chosen[x] -= 1;
                }
            }
        }

        // exclude
        if self.open_sum - weight >= self.goal_sum {
            let ok = self.points(depth).all(|x| self.open[x] > self.target);
            if ok {
                for x in self.points(depth).collect::<Vec<_>>() {
                    self.open[x] -= 1;
                }
                self.open_sum -= weight;
                if self.search(depth + 1) {
                    return true;
                }
                self.open_sum += weight;
                for x in self.points(depth).collect::<Vec<_>>() {
                    self.open[x] += 1;
                }
            }
        }
        false
    }
}

impl ResidueSystem {
    /// Splits an exact `m`-cover into an exact `n`-cover and an exact
    /// `(m - n)`-cover, or returns `None` when no such bipartition exists.
    ///
    /// Depth-first over classes (smallest modulus first), including before
    /// excluding. A branch dies as soon as some residue in the period is
    /// covered more than `n` times by the chosen part, or can no longer reach
    /// `n`, or the chosen reciprocal sum can no longer end at exactly `n`.
    pub fn find_exact_split(&self, m: usize, n: usize) -> Result<Option<ExactSplit>> {
        if n == 0 || n >= m {
            return Err(Error::Hypothesis(format!("need 0 < n < m, got n={n}, m={m}")));
        }
        if !self.is_exact_m_cover(m)? {
            return Err(Error::Hypothesis(format!("not an exact {m}-cover")));
        }
        let period = self.period()?;
        if period > DEFAULT_PERIOD_BOUND {
            return Err(Error::Resource(format!("period {period} exceeds the scan bound")));
        }
        let period = period as usize;
        let mut classes: Vec<(usize, usize, usize)> = self
            .classes()
            .iter()
            .enumerate()
            .map(|(i, c)| (i, c.residue() as usize, c.modulus() as usize))
            .collect();
        classes.sort_by_key(|&(i, _, modulus)| (modulus, i));
        let mut search = SplitSearch {
            classes,
            target: n as u32,
            chosen: vec![0; period],
            open: vec![m as u32; period],
            chosen_sum: 0,
            open_sum: (m * period) as u64,
            goal_sum: (n * period) as u64,
            period,
            picked: vec![false; self.len()],
            system: self,
        };
        if !search.search(0) {
            return Ok(None);
        }
        let part: Vec<usize> = (0..self.len()).filter(|&i| search.picked[i]).map(|i| i + 1).collect();
        let rest: Vec<usize> = (0..self.len()).filter(|&i| !search.picked[i]).map(|i| i + 1).collect();
        debug_assert_eq!(search.system.len(), part.len() + rest.len());
        Ok(Some(ExactSplit { part, rest }))
    }
}
