//! Loopless multigraphs with indexed edges, and the search for `q`-regular
//! subgraphs whose edge weights `Σ m_s/n_s` land in `p^h Z`.

mod regular;

use std::fmt::Write as _;

use crate::error::{Error, Result};

pub use regular::{afk_check, find_regular_subgraph, search_regular_subgraph, CoverConstraint, SubgraphWitness};

/// Vertices `1..=l`; edge `s` (1-based) joins `edges[s-1]`. Parallel edges
/// are distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::Input("a graph needs at least one vertex".into()));
        }
        if edges.len() > 64 {
            return Err(Error::Resource(format!("{} edges; at most 64 are supported", edges.len())));
        }
        for &(u, v) in &edges {
            if u == 0 || v == 0 || u > vertices || v > vertices {
                return Err(Error::Input(format!("edge ({u}, {v}) leaves [1, {vertices}]")));
            }
            if u == v {
                return Err(Error::Input(format!("loop at vertex {u}")));
            }
        }
        Ok(Multigraph { vertices, edges })
    }

    /// `K_l`, edges in lexicographic order.
    pub fn complete(l: usize) -> Self {
        let edges = (1..=l).flat_map(|u| (u + 1..=l).map(move |v| (u, v))).collect();
        Self::new(l, edges).expect("valid")
    }

    /// The cycle `1-2-...-l-1`.
    pub fn cycle(l: usize) -> Result<Self> {
        if l < 3 {
            return Err(Error::Input("a cycle needs at least 3 vertices".into()));
        }
        Self::new(l, (1..=l).map(|u| (u, u % l + 1)).collect())
    }

    /// Every loopless multigraph on `l` labelled vertices with maximum
    /// degree at most `max_degree` and at least `min_edges` edges, one per
    /// multiset of vertex pairs (edges listed in pair order).
    pub fn enumerate(l: usize, max_degree: usize, min_edges: usize) -> Vec<Self> {
        let pairs: Vec<(usize, usize)> = (1..=l).flat_map(|u| (u + 1..=l).map(move |v| (u, v))).collect();
        let mut out = Vec::new();
        let mut deg = vec![0usize; l + 1];
        let mut edges = Vec::new();
        enumerate_from(&pairs, 0, max_degree, &mut deg, &mut edges, &mut |e| {
            if e.len() >= min_edges {
                out.push(Multigraph { vertices: l, edges: e.to_vec() });
            }
        });
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Self::new(self.vertices, edges)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.vertices {
            return Err(Error::Input(format!("vertex {v} out of range")));
        }
        Ok(())
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|&&(a, b)| a == v || b == v).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices];
        for &(u, v) in &self.edges {
            d[u - 1] += 1;
            d[v - 1] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// 1 when vertex `t` is an endpoint of edge `s`.
    pub fn incidence(&self, s: usize, t: usize) -> Result<u8> {
        self.check_vertex(t)?;
        let &(u, v) = self
            .edges
            .get(s.wrapping_sub(1))
            .ok_or_else(|| Error::Input(format!("edge {s} out of range")))?;
        Ok((u == t || v == t) as u8)
    }

    /// `vertices <l>` then one `u v` line per edge; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Input("empty graph file".into()))?;
        let l = header
            .strip_prefix("vertices")
            .and_then(|rest| rest.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::Input(format!("expected `vertices <l>`, got {header:?}")))?;
        let edges = lines
            .map(|line| {
                let parts: Vec<&str> = line.split_whitespace().collect();
                match parts.as_slice() {
                    [u, v] => match (u.parse(), v.parse()) {
                        (Ok(u), Ok(v)) => Ok((u, v)),
                        _ => Err(Error::Input(format!("bad edge line {line:?}"))),
                    },
                    _ => Err(Error::Input(format!("bad edge line {line:?}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(l, edges)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("vertices {}\n", self.vertices);
        for (u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn enumerate_from(
    pairs: &[(usize, usize)],
    i: usize,
    cap: usize,
    deg: &mut [usize],
    edges: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    if i == pairs.len() {
        emit(edges);
        return;
    }
    let (u, v) = pairs[i];
    let mut added = 0;
    loop {
        enumerate_from(pairs, i + 1, cap, deg, edges, emit);
        if deg[u] == cap || deg[v] == cap {
            break;
        }
        deg[u] += 1;
        deg[v] += 1;
        edges.push((u, v));
        added += 1;
    }
    deg[u] -= added;
    deg[v] -= added;
    edges.truncate(edges.len() - added);
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn degree_examples() {
        let k4 = Multigraph::complete(4);
        assert!((1..=4).all(|v| k4.degree(v).unwrap() == 3));
        let double = Multigraph::new(2, vec![(1, 2), (1, 2)]).unwrap();
        assert_eq!(double.degrees(), vec![2, 2]);
        let tri = Multigraph::complete(3);
        assert_eq!(tri.incidence(1, 3).unwrap(), 0);
        assert_eq!(tri.incidence(1, 2).unwrap(), 1);
        assert!(tri.incidence(4, 1).is_err());
        assert!(tri.degree(0).is_err());
    }

    #[test]
    fn degree_is_incidence_row_sum() {
        let g = Multigraph::complete(5).with_edge(1, 2).unwrap();
        for t in 1..=5 {
            let sum: usize = (1..=g.edge_count()).map(|s| g.incidence(s, t).unwrap() as usize).sum();
            assert_eq!(sum, g.degree(t).unwrap());
        }
    }

    #[test]
    fn enumeration_counts() {
        // on two vertices: 0..=3 parallel edges
        assert_eq!(Multigraph::enumerate(2, 3, 0).len(), 4);
        // simple graphs on 3 vertices with max degree 1: empty or one edge
        assert_eq!(Multigraph::enumerate(3, 1, 0).len(), 4);
        let all = Multigraph::enumerate(4, 3, 5);
        assert!(all.iter().all(|g| g.max_degree() <= 3 && g.edge_count() >= 5));
        assert!(all.contains(&Multigraph::complete(4)));
    }

    #[test]
    fn parse_examples() {
        let g = Multigraph::parse("# triangle plus\nvertices 3\n1 2\n2 3 # edge 2\n1 3\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degrees(), vec![3, 3, 2]);
        for bad in ["", "vertices x", "vertices 2\n1 1", "vertices 2\n1 3", "vertices 2\n1"] {
            assert!(Multigraph::parse(bad).is_err(), "{bad:?}");
        }
    }

    proptest! {
        #[test]
        fn round_trip(l in 2usize..7, raw in proptest::collection::vec((1usize..7, 1usize..7), 0..12)) {
            let edges: Vec<(usize, usize)> = raw
                .into_iter()
                .map(|(u, v)| (u.min(l), v.min(l)))
                .filter(|(u, v)| u != v)
                .collect();
            let g = Multigraph::new(l, edges).unwrap();
            prop_assert_eq!(Multigraph::parse(&g.serialize()).unwrap(), g);
        }
    }
}
