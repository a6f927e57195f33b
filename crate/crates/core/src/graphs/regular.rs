use serde::Serialize;

use super::Multigraph;
use crate::covers::ResidueSystem;
use crate::error::{Error, Result};
use crate::exactmath::{pow_u64, prime_power};
use crate::subsets::DIRECT_MAX;

/// Edge weights `m_s/n_s` from a residue system (one class per edge) and the
/// requirement `Σ_{s∈E(H)} m_s/n_s ∈ p^h Z`, `p` being the prime of `q`.
#[derive(Clone, Copy, Debug)]
pub struct CoverConstraint<'a> {
    pub system: &'a ResidueSystem,
    pub level: u32,
}

/// Edge set `I` (1-based) of a subgraph in which every incident vertex has
/// degree `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgraphWitness {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
    /// `(vertex, degree inside I)` for each vertex of `V_I`
    pub degrees: Vec<(usize, usize)>,
}

fn prime_of(q: u64) -> Result<u64> {
    match prime_power(q) {
        Some((p, _)) => Ok(p),
        None => Err(Error::Input(format!("q = {q} is not a prime power greater than 1"))),
    }
}

/// Constraint as `(values, modulus)` with the test `Σ values ≡ 0`.
fn constraint_values(g: &Multigraph, q: u64, c: &CoverConstraint) -> Result<(Vec<u64>, u64)> {
    if c.system.len() != g.edge_count() {
        return Err(Error::Input(format!(
            "{} classes for {} edges",
            c.system.len(),
            g.edge_count()
        )));
    }
    let p = prime_of(q)?;
    let n = c.system.period()?;
    let overflow = || Error::Resource("p^h times the period overflows".into());
    let modulus = pow_u64(p, c.level)
        .and_then(|ph| ph.checked_mul(n))
        .filter(|&m| m < 1 << 62)
        .ok_or_else(overflow)?;
    let values = c
        .system
        .weighted_numerators(n)
        .into_iter()
        .map(|v| v.rem_euclid(modulus as i128) as u64)
        .collect();
    Ok((values, modulus))
}

struct Search<'a> {
    ends: &'a [(usize, usize)],
    order: Vec<usize>,
    q: usize,
    deg: Vec<usize>,
    remaining: Vec<usize>,
    chosen: Vec<bool>,
    picked: usize,
    weights: Option<(Vec<u64>, u64)>,
    acc: u64,
}

impl Search<'_> {
    fn feasible(&self, x: usize) -> bool {
        let d = self.deg[x];
        d == 0 || d == self.q || d + self.remaining[x] >= self.q
    }

    fn shift(&mut self, e: usize, add: bool) {
        if let Some((values, m)) = &self.weights {
            self.acc = if add {
                (self.acc + values[e]) % m
            } else {
                (self.acc + m - values[e]) % m
            };
        }
    }

    fn dfs(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return self.picked > 0 && self.acc == 0;
        }
        let e = self.order[i];
        let (u, v) = self.ends[e];
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
        if self.deg[u] < self.q && self.deg[v] < self.q {
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.chosen[e] = true;
            self.picked += 1;
            self.shift(e, true);
            if self.feasible(u) && self.feasible(v) && self.dfs(i + 1) {
                return true;
            }
            self.shift(e, false);
            self.picked -= 1;
            self.chosen[e] = false;
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        }
        if self.feasible(u) && self.feasible(v) && self.dfs(i + 1) {
            return true;
        }
        self.remaining[u] += 1;
        self.remaining[v] += 1;
        false
    }
}

fn witness(g: &Multigraph, edges: Vec<usize>) -> SubgraphWitness {
    let mut deg = vec![0usize; g.vertex_count() + 1];
    for &s in &edges {
        let (u, v) = g.edges()[s - 1];
        deg[u] += 1;
        deg[v] += 1;
    }
    let vertices: Vec<usize> = (1..=g.vertex_count()).filter(|&v| deg[v] > 0).collect();
    let degrees = vertices.iter().map(|&v| (v, deg[v])).collect();
    SubgraphWitness { edges, vertices, degrees }
}

impl SubgraphWitness {
    /// Recomputes degrees and the weight condition from scratch.
    pub fn verify(&self, g: &Multigraph, q: u64, constraint: Option<&CoverConstraint>) -> Result<bool> {
        if self.edges.is_empty() || self.edges.iter().any(|&s| s == 0 || s > g.edge_count()) {
            return Ok(false);
        }
        let mut deg = vec![0u64; g.vertex_count() + 1];
        for &s in &self.edges {
            let (u, v) = g.edges()[s - 1];
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|&d| d != 0 && d != q) {
            return Ok(false);
        }
        if let Some(c) = constraint {
            let p = prime_of(q)?;
            let mask = self.edges.iter().fold(0u64, |m, &s| m | 1 << (s - 1));
            let sum = c.system.weighted_sum(mask);
            let ph = crate::exactmath::Rational::from_integer(pow_u64(p, c.level).unwrap_or(0).into());
            if !(sum / ph).is_integer() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Backtracking search for a nonempty `q`-regular subgraph, no hypothesis
/// checks. Edges are tried in order of decreasing larger-endpoint degree,
/// including before excluding; a branch dies once some vertex exceeds `q` or
/// cannot reach `q` with its undecided edges.
pub fn search_regular_subgraph(g: &Multigraph, q: u64, constraint: Option<&CoverConstraint>) -> Result<Option<SubgraphWitness>> {
    prime_of(q)?;
    let weights = constraint.map(|c| constraint_values(g, q, c)).transpose()?;
    let ends: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    let degrees = g.degrees();
    let mut order: Vec<usize> = (0..ends.len()).collect();
    order.sort_by_key(|&e| std::cmp::Reverse(degrees[ends[e].0].max(degrees[ends[e].1])));
    let mut search = Search {
        ends: &ends,
        order,
        q: q as usize,
        deg: vec![0; g.vertex_count()],
        remaining: degrees,
        chosen: vec![false; ends.len()],
        picked: 0,
        weights,
        acc: 0,
    };
    if !search.dfs(0) {
        return Ok(None);
    }
    let edges = (0..ends.len()).filter(|&e| search.chosen[e]).map(|e| e + 1).collect();
    Ok(Some(witness(g, edges)))
}

/// Exhaustive oracle over all nonempty edge subsets.
fn exhaustive(g: &Multigraph, q: u64, constraint: Option<&CoverConstraint>) -> Result<Option<SubgraphWitness>> {
    let k = g.edge_count();
    if k > DIRECT_MAX {
        return Err(Error::Resource(format!("exhaustive check limited to {DIRECT_MAX} edges")));
    }
    let weights = constraint.map(|c| constraint_values(g, q, c)).transpose()?;
    for mask in 1u64..1 << k {
        let mut deg = vec![0u64; g.vertex_count() + 1];
        let mut acc = 0u64;
        for s in 0..k {
            if mask >> s & 1 == 1 {
                let (u, v) = g.edges()[s];
                deg[u] += 1;
                deg[v] += 1;
                if let Some((values, m)) = &weights {
                    acc = (acc + values[s]) % m;
                }
            }
        }
        if acc == 0 && deg.iter().all(|&d| d == 0 || d == q) {
            let edges = (0..k).filter(|s| mask >> s & 1 == 1).map(|s| s + 1).collect();
            return Ok(Some(witness(g, edges)));
        }
    }
    Ok(None)
}

/// A `q`-regular subgraph of a graph with maximum degree at most `2q - 1`,
/// either with `k >= l(q-1) + 1` edges (plain mode) or with edge weights
/// from an `(l(q-1) + p^h)`-cover whose sum over the subgraph lies in
/// `p^h Z` (constrained mode).
pub fn find_regular_subgraph(g: &Multigraph, q: u64, constraint: Option<&CoverConstraint>) -> Result<SubgraphWitness> {
    let p = prime_of(q)?;
    let (l, k) = (g.vertex_count() as u64, g.edge_count() as u64);
    if g.max_degree() as u64 > 2 * q - 1 {
        return Err(Error::Hypothesis(format!(
            "maximum degree {} exceeds 2q - 1 = {}",
            g.max_degree(),
            2 * q - 1
        )));
    }
    match constraint {
        None => {
            if k < l * (q - 1) + 1 {
                return Err(Error::Hypothesis(format!(
                    "{k} edges; at least l(q-1)+1 = {} are required",
                    l * (q - 1) + 1
                )));
            }
        }
        Some(c) => {
            if c.system.len() as u64 != k {
                return Err(Error::Input(format!("{} classes for {k} edges", c.system.len())));
            }
            let ph = pow_u64(p, c.level).ok_or_else(|| Error::Resource("p^h overflows".into()))?;
            let need = l * (q - 1) + ph;
            if (c.system.covering_multiplicity()? as u64) < need {
                return Err(Error::Hypothesis(format!("the weights need an {need}-cover")));
            }
        }
    }
    let found = search_regular_subgraph(g, q, constraint)?;
    let bundle = |oracle: Option<bool>| {
        serde_json::json!({
            "graph": g.serialize(),
            "q": q,
            "system": constraint.map(|c| c.system.to_json()),
            "h": constraint.map(|c| c.level),
            "exhaustive_found": oracle,
        })
    };
    match found {
        Some(w) if w.verify(g, q, constraint)? => Ok(w),
        Some(_) => Err(Error::violation("witness satisfies its constraints", bundle(None))),
        None => {
            let oracle = if g.edge_count() <= DIRECT_MAX {
                Some(exhaustive(g, q, constraint)?.is_some())
            } else {
                None
            };
            Err(Error::violation("a q-regular subgraph exists under the degree hypotheses", bundle(oracle)))
        }
    }
}

/// Plain-mode search under the hypotheses average degree `> 2q - 2` and
/// maximum degree `<= 2q - 1`.
pub fn afk_check(g: &Multigraph, q: u64) -> Result<bool> {
    find_regular_subgraph(g, q, None).map(|_| true)
}
