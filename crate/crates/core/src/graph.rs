use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topology {
    Path,
    Cycle,
    General,
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Topology::Path => "path",
            Topology::Cycle => "cycle",
            Topology::General => "general",
        })
    }
}

/// Cumulative edge weight along a path: `cw(1) = 0`,
/// `cw(v) = w({1,2}) + ... + w({v-1,v})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixTable {
    cw: Vec<Weight>,
}

impl PrefixTable {
    /// `weights[i]` is the cost of edge `{i+1, i+2}`.
    pub fn from_edge_weights(weights: &[Weight]) -> Self {
        let mut cw = Vec::with_capacity(weights.len() + 1);
        let mut acc = Weight::ZERO;
        cw.push(acc);
        for &w in weights {
            acc += w;
            cw.push(acc);
        }
        PrefixTable { cw }
    }

    pub fn len(&self) -> usize {
        self.cw.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cw.is_empty()
    }

    #[inline]
    pub fn cw(&self, v: usize) -> Weight {
        self.cw[v - 1]
    }

    /// Cost of walking from `x` to `y` along the path.
    #[inline]
    pub fn dist(&self, x: usize, y: usize) -> Weight {
        self.cw(x).abs_diff(self.cw(y))
    }

    pub fn total(&self) -> Weight {
        *self.cw.last().expect("prefix table is never empty")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Edges {
    /// `weights[i]` is edge `{i+1, i+2}`.
    Path {
        weights: Vec<Weight>,
        prefix: PrefixTable,
    },
    /// Like `Path`, plus a last entry for edge `{n, 1}`; `prefix` spans all n edges.
    Cycle {
        weights: Vec<Weight>,
        prefix: PrefixTable,
    },
    General {
        adjacency: Vec<Vec<(usize, Weight)>>,
    },
}

/// An undirected weighted graph on nodes `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Edges,
}

impl Graph {
    pub fn path(weights: Vec<Weight>) -> Self {
        let prefix = PrefixTable::from_edge_weights(&weights);
        Graph {
            n: weights.len() + 1,
            edges: Edges::Path { weights, prefix },
        }
    }

    pub fn unit_path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("a path needs at least one node".into()));
        }
        Ok(Graph::path(vec![Weight::ONE; n - 1]))
    }

    /// `weights.len()` is the node count; the last weight belongs to edge `{n, 1}`.
    pub fn cycle(weights: Vec<Weight>) -> Result<Self> {
        if weights.len() < 3 {
            return Err(Error::InvalidGraph(format!(
                "a cycle needs at least 3 nodes, got {}",
                weights.len()
            )));
        }
        let prefix = PrefixTable::from_edge_weights(&weights);
        Ok(Graph {
            n: weights.len(),
            edges: Edges::Cycle { weights, prefix },
        })
    }

    pub fn unit_cycle(n: usize) -> Result<Self> {
        Graph::cycle(vec![Weight::ONE; n])
    }

    /// Parallel edges collapse to the cheapest one.
    pub fn general(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, Weight)>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph(
                "a graph needs at least one node".into(),
            ));
        }
        let mut best: HashMap<(usize, usize), Weight> = HashMap::new();
        for (u, v, w) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(Error::NodeOutOfRange { node: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at node {u}")));
            }
            let key = (u.min(v), u.max(v));
            best.entry(key)
                .and_modify(|cur| *cur = (*cur).min(w))
                .or_insert(w);
        }
        let mut adjacency = vec![Vec::new(); n + 1];
        let mut keys: Vec<_> = best.into_iter().collect();
        keys.sort();
        for ((u, v), w) in keys {
            adjacency[u].push((v, w));
            adjacency[v].push((u, w));
        }
        Ok(Graph {
            n,
            edges: Edges::General { adjacency },
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn topology(&self) -> Topology {
        match self.edges {
            Edges::Path { .. } => Topology::Path,
            Edges::Cycle { .. } => Topology::Cycle,
            Edges::General { .. } => Topology::General,
        }
    }

    /// Edge weights of a path or cycle in node order; `None` for general graphs.
    pub fn line_weights(&self) -> Option<&[Weight]> {
        match &self.edges {
            Edges::Path { weights, .. } | Edges::Cycle { weights, .. } => Some(weights),
            Edges::General { .. } => None,
        }
    }

    /// Prefix sums for a path, or for a cycle read as the path `1..=n+1`
    /// where node `n+1` stands for node 1 after the closing edge.
    pub fn prefix_table(&self) -> Option<&PrefixTable> {
        match &self.edges {
            Edges::Path { prefix, .. } | Edges::Cycle { prefix, .. } => Some(prefix),
            Edges::General { .. } => None,
        }
    }

    /// Explicit edge list `(u, v, w)` with `u < v`, mostly for serialization.
    pub fn edge_list(&self) -> Vec<(usize, usize, Weight)> {
        match &self.edges {
            Edges::Path { weights, .. } => weights
                .iter()
                .enumerate()
                .map(|(i, &w)| (i + 1, i + 2, w))
                .collect(),
            Edges::Cycle { weights, .. } => weights
                .iter()
                .enumerate()
                .map(|(i, &w)| {
                    let (u, v) = (i + 1, if i + 1 == self.n { 1 } else { i + 2 });
                    (u.min(v), u.max(v), w)
                })
                .collect(),
            Edges::General { adjacency } => adjacency
                .iter()
                .enumerate()
                .flat_map(|(u, list)| {
                    list.iter()
                        .filter(move |(v, _)| u < *v)
                        .map(move |&(v, w)| (u, v, w))
                })
                .collect(),
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        (1..=self.n).contains(&v)
    }

    pub fn check_node(&self, v: usize) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node: v, n: self.n })
        }
    }

    pub fn edge_weight(&self, u: usize, v: usize) -> Option<Weight> {
        if !self.contains(u) || !self.contains(v) || u == v {
            return None;
        }
        match &self.edges {
            Edges::Path { weights, .. } => (u.abs_diff(v) == 1).then(|| weights[u.min(v) - 1]),
            Edges::Cycle { weights, .. } => {
                let (lo, hi) = (u.min(v), u.max(v));
                if hi - lo == 1 {
                    Some(weights[lo - 1])
                } else if lo == 1 && hi == self.n {
                    Some(weights[self.n - 1])
                } else {
                    None
                }
            }
            Edges::General { adjacency } => {
                adjacency[u].iter().find(|(x, _)| *x == v).map(|&(_, w)| w)
            }
        }
    }

    pub fn neighbors(&self, v: usize) -> Vec<(usize, Weight)> {
        match &self.edges {
            Edges::Path { weights, .. } => {
                let mut out = Vec::with_capacity(2);
                if v > 1 {
                    out.push((v - 1, weights[v - 2]));
                }
                if v < self.n {
                    out.push((v + 1, weights[v - 1]));
                }
                out
            }
            Edges::Cycle { weights, .. } => {
                let prev = if v == 1 { self.n } else { v - 1 };
                let next = if v == self.n { 1 } else { v + 1 };
                vec![(prev, weights[prev - 1]), (next, weights[v - 1])]
            }
            Edges::General { adjacency } => adjacency[v].clone(),
        }
    }

    /// The same path read right to left: node `v` becomes `n - v + 1`.
    pub fn mirrored(&self) -> Result<Graph> {
        match &self.edges {
            Edges::Path { weights, .. } => Ok(Graph::path(weights.iter().rev().copied().collect())),
            _ => Err(Error::WrongTopology {
                expected: Topology::Path,
                found: self.topology(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_distances_match_edge_sums() {
        let w: Vec<Weight> = [2u64, 0, 5, 1]
            .iter()
            .map(|&x| Weight::integer(x))
            .collect();
        let g = Graph::path(w);
        let t = g.prefix_table().unwrap();
        assert_eq!(t.cw(1), Weight::ZERO);
        assert_eq!(t.cw(5), Weight::integer(8));
        assert_eq!(t.dist(4, 2), Weight::integer(5));
        assert_eq!(t.dist(3, 3), Weight::ZERO);
    }

    #[test]
    fn cycle_closing_edge() {
        let g = Graph::cycle((1..=4).map(Weight::integer).collect()).unwrap();
        assert_eq!(g.edge_weight(4, 1), Some(Weight::integer(4)));
        assert_eq!(g.edge_weight(1, 3), None);
        assert_eq!(
            g.neighbors(1),
            vec![(4, Weight::integer(4)), (2, Weight::integer(1))]
        );
    }

    #[test]
    fn small_cycles_are_rejected() {
        assert!(Graph::unit_cycle(2).is_err());
        assert!(Graph::unit_cycle(3).is_ok());
    }

    #[test]
    fn general_graph_validation() {
        assert!(matches!(
            Graph::general(3, [(1, 4, Weight::ONE)]),
            Err(Error::NodeOutOfRange { node: 4, n: 3 })
        ));
        assert!(Graph::general(3, [(2, 2, Weight::ONE)]).is_err());
        let g = Graph::general(3, [(1, 2, Weight::integer(3)), (2, 1, Weight::ONE)]).unwrap();
        assert_eq!(g.edge_weight(1, 2), Some(Weight::ONE));
    }
}
