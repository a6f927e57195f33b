//! Finite abelian p-groups `Z_{p^{h_1}} ⊕ ... ⊕ Z_{p^{h_l}}` (and cyclic
//! groups `Z_n`) with elements stored as residue vectors.

mod constants;
mod olson;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::{is_prime, prime_power};

pub use constants::{
    davenport_constant, egz_constant, extremal_sequence, has_nonempty_zero_sum,
    DAVENPORT_ORDER_BOUND, EGZ_ORDER_BOUND,
};
pub use olson::olson_signed_count;

/// Group descriptor. P-groups keep their exponents nondecreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupShape {
    PGroup { prime: u64, exponents: Vec<u32> },
    Cyclic(u64),
}

/// Residue vector; component `t` lies in `[0, modulus_t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupElement(Vec<u64>);

impl GroupElement {
    pub fn components(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl GroupShape {
    pub fn p_group(prime: u64, exponents: &[u32]) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::Input(format!("{prime} is not prime")));
        }
        if exponents.contains(&0) {
            return Err(Error::Input("exponents must be positive".into()));
        }
        let mut exponents = exponents.to_vec();
        exponents.sort_unstable();
        let order = exponents
            .iter()
            .try_fold(1u64, |acc, &h| prime.checked_pow(h).and_then(|q| acc.checked_mul(q)));
        if order.is_none() {
            return Err(Error::Resource("group order overflows 64 bits".into()));
        }
        Ok(GroupShape::PGroup { prime, exponents })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("cyclic group order must be positive".into()));
        }
        Ok(GroupShape::Cyclic(n))
    }

    /// The trivial group, viewed as a p-group for the given prime.
    pub fn trivial(prime: u64) -> Result<Self> {
        Self::p_group(prime, &[])
    }

    pub fn moduli(&self) -> Vec<u64> {
        match self {
            GroupShape::PGroup { prime, exponents } => {
                exponents.iter().map(|&h| prime.pow(h)).collect()
            }
            GroupShape::Cyclic(n) => vec![*n],
        }
    }

    pub fn rank_len(&self) -> usize {
        self.moduli().len()
    }

    pub fn order(&self) -> u64 {
        self.moduli().iter().product()
    }

    /// Largest element order (1 for the trivial group).
    pub fn exponent(&self) -> u64 {
        self.moduli()
            .into_iter()
            .fold(1, |acc, n| num_integer::lcm(acc, n))
    }

    /// The prime `p` when this is a p-group.
    pub fn prime(&self) -> Option<u64> {
        match self {
            GroupShape::PGroup { prime, .. } => Some(*prime),
            GroupShape::Cyclic(n) => prime_power(*n).map(|(p, _)| p),
        }
    }

    pub fn is_p_group(&self) -> bool {
        self.prime().is_some()
    }

    /// `d*(G) = Σ (d_i - 1)` over the invariant factors.
    pub fn d_star(&self) -> u64 {
        self.moduli().iter().map(|&d| d - 1).sum()
    }

    /// `G ⊕ G`; only defined for p-groups.
    pub fn doubled(&self) -> Result<Self> {
        match self {
            GroupShape::PGroup { prime, exponents } => {
                let mut both = exponents.clone();
                both.extend_from_slice(exponents);
                Self::p_group(*prime, &both)
            }
            GroupShape::Cyclic(n) => match prime_power(*n) {
                Some((p, h)) => Self::p_group(p, &[h, h]),
                None if *n == 1 => Ok(self.clone()),
                None => Err(Error::Input(format!("Z_{n} ⊕ Z_{n} is outside the supported shapes"))),
            },
        }
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank_len()])
    }

    /// Reduces integer components into an element.
    pub fn element(&self, components: &[i64]) -> Result<GroupElement> {
        let moduli = self.moduli();
        if components.len() != moduli.len() {
            return Err(Error::Input(format!(
                "{self} needs {} components, got {}",
                moduli.len(),
                components.len()
            )));
        }
        Ok(GroupElement(
            components
                .iter()
                .zip(&moduli)
                .map(|(&c, &m)| c.rem_euclid(m as i64) as u64)
                .collect(),
        ))
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        let moduli = self.moduli();
        e.0.len() == moduli.len() && e.0.iter().zip(&moduli).all(|(c, m)| c < m)
    }

    pub(crate) fn check(&self, e: &GroupElement) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::Input(format!("{e} is not an element of {self}")))
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(self.moduli())
                .map(|((x, y), m)| (x + y) % m)
                .collect(),
        ))
    }

    pub fn negate(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(GroupElement(
            a.0.iter().zip(self.moduli()).map(|(x, m)| (m - x) % m).collect(),
        ))
    }

    pub fn is_zero(&self, a: &GroupElement) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a GroupElement>) -> Result<GroupElement> {
        items
            .into_iter()
            .try_fold(self.zero(), |acc, e| self.add(&acc, e))
    }

    /// Mixed-radix index in `[0, |G|)`; the identity has index 0.
    pub fn index_of(&self, e: &GroupElement) -> usize {
        let mut idx = 0usize;
        for (c, m) in e.0.iter().zip(self.moduli()).rev() {
            idx = idx * m as usize + *c as usize;
        }
        idx
    }

    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        GroupElement(
            self.moduli()
                .into_iter()
                .map(|m| {
                    let c = (idx % m as usize) as u64;
                    idx /= m as usize;
                    c
                })
                .collect(),
        )
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order() as usize).map(|i| self.element_at(i))
    }

    /// Human-readable `Z_2+Z_4` form.
    pub fn name(&self) -> String {
        let moduli = self.moduli();
        if moduli.is_empty() {
            return "{0}".into();
        }
        moduli
            .iter()
            .map(|m| format!("Z_{m}"))
            .collect::<Vec<_>>()
            .join("+")
    }
}

impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupShape::PGroup { prime, exponents } => {
                let hs: Vec<String> = exponents.iter().map(u32::to_string).collect();
                write!(f, "{prime}:{}", hs.join(","))
            }
            GroupShape::Cyclic(n) => write!(f, "cyclic:{n}"),
        }
    }
}

impl FromStr for GroupShape {
    type Err = Error;

    /// `p:h1,h2,...` (empty list for the trivial group) or `cyclic:n`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Input(format!("bad group descriptor {s:?}"));
        let (head, tail) = s.trim().split_once(':').ok_or_else(bad)?;
        if head == "cyclic" {
            return Self::cyclic(tail.trim().parse().map_err(|_| bad())?);
        }
        let prime: u64 = head.trim().parse().map_err(|_| bad())?;
        let exponents = if tail.trim().is_empty() {
            Vec::new()
        } else {
            tail.split(',')
                .map(|h| h.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        };
        Self::p_group(prime, &exponents)
    }
}

impl Serialize for GroupShape {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parses an element file: one element per line, comma-separated integer
/// components; blank lines and `#` comments are skipped.
pub fn parse_elements(shape: &GroupShape, text: &str) -> Result<Vec<GroupElement>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.starts_with('#'))
        .filter(|l| !l.is_empty() || shape.rank_len() == 0)
        .map(|l| parse_element(shape, l))
        .collect()
}

/// Comma-separated components, e.g. `1,3`.
pub fn parse_element(shape: &GroupShape, text: &str) -> Result<GroupElement> {
    let text = text.trim();
    let comps = if text.is_empty() {
        Vec::new()
    } else {
        text.split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Input(format!("bad element component {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?
    };
    shape.element(&comps)
}
