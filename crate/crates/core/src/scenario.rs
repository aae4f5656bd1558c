use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Graph, Topology};

/// An object to pick up at `s` and drop off at `t` (possibly `s == t`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Request {
    pub s: usize,
    pub t: usize,
}

impl Request {
    pub const fn new(s: usize, t: usize) -> Self {
        Request { s, t }
    }

    /// `t < s`: the delivery lies to the left of the pickup.
    pub fn is_backward(&self) -> bool {
        self.t < self.s
    }
}

impl From<(usize, usize)> for Request {
    fn from((s, t): (usize, usize)) -> Self {
        Request { s, t }
    }
}

impl fmt::Display for Request {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s, self.t)
    }
}

/// Maps an unrolled or shifted coordinate `v >= 1` onto the node range `1..=n`.
#[inline]
pub fn wrap(v: usize, n: usize) -> usize {
    debug_assert!(v >= 1 && n >= 1);
    (v - 1) % n + 1
}

/// A graph, a start/end pair and a non-empty set of transport requests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    graph: Arc<Graph>,
    start: usize,
    end: usize,
    requests: Vec<Request>,
    left: usize,
    right: usize,
}

impl Scenario {
    /// Requests are deduplicated and stored in sorted order.
    pub fn new(
        graph: impl Into<Arc<Graph>>,
        start: usize,
        end: usize,
        requests: impl IntoIterator<Item = Request>,
    ) -> Result<Self> {
        let graph = graph.into();
        graph.check_node(start)?;
        graph.check_node(end)?;
        let mut requests: Vec<Request> = requests.into_iter().collect();
        if requests.is_empty() {
            return Err(Error::EmptyRequests);
        }
        for r in &requests {
            graph.check_node(r.s)?;
            graph.check_node(r.t)?;
        }
        requests.sort_unstable();
        requests.dedup();
        let left = requests.iter().map(|r| r.s.min(r.t)).min().unwrap();
        let right = requests.iter().map(|r| r.s.max(r.t)).max().unwrap();
        Ok(Scenario {
            graph,
            start,
            end,
            requests,
            left,
            right,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shared_graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn topology(&self) -> Topology {
        self.graph.topology()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn requests(&self) -> &[Request] {
        &self.requests
    }

    /// Smallest request endpoint.
    pub fn left(&self) -> usize {
        self.left
    }

    /// Largest request endpoint.
    pub fn right(&self) -> usize {
        self.right
    }

    /// Sorted, distinct request endpoints.
    pub fn endpoint_nodes(&self) -> Vec<usize> {
        let mut nodes: Vec<usize> = self.requests.iter().flat_map(|r| [r.s, r.t]).collect();
        nodes.sort_unstable();
        nodes.dedup();
        nodes
    }

    /// Request endpoints together with the start and end node, sorted.
    pub fn key_nodes(&self) -> Vec<usize> {
        let mut nodes = self.endpoint_nodes();
        nodes.extend([self.start, self.end]);
        nodes.sort_unstable();
        nodes.dedup();
        nodes
    }

    pub fn with_requests(&self, requests: impl IntoIterator<Item = Request>) -> Result<Scenario> {
        Scenario::new(self.graph.clone(), self.start, self.end, requests)
    }

    pub(crate) fn require(&self, expected: Topology) -> Result<()> {
        if self.topology() == expected {
            Ok(())
        } else {
            Err(Error::WrongTopology {
                expected,
                found: self.topology(),
            })
        }
    }

    /// The mirror image of a path scenario: node `v` becomes `n - v + 1`.
    /// Applying it twice gives back the original scenario.
    pub fn symmetrize(&self) -> Result<Scenario> {
        self.require(Topology::Path)?;
        let n = self.n();
        let sym = |v: usize| n - v + 1;
        Scenario::new(
            self.graph.mirrored()?,
            sym(self.start),
            sym(self.end),
            self.requests
                .iter()
                .map(|r| Request::new(sym(r.s), sym(r.t))),
        )
    }

    /// Relabels a cycle so that node `v` becomes `wrap(v + n - shift)`;
    /// `rotate(s - 1)` moves node `s` to label 1.
    pub fn rotate(&self, shift: usize) -> Result<Scenario> {
        self.require(Topology::Cycle)?;
        let n = self.n();
        let shift = shift % n;
        let relabel = |v: usize| wrap(v + n - shift, n);
        let weights = self.graph.line_weights().expect("cycle has line weights");
        // new edge {i, i+1} is old edge {i+shift, i+shift+1}
        let rotated = (1..=n).map(|i| weights[wrap(i + shift, n) - 1]).collect();
        Scenario::new(
            Graph::cycle(rotated)?,
            relabel(self.start),
            relabel(self.end),
            self.requests
                .iter()
                .map(|r| Request::new(relabel(r.s), relabel(r.t))),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::Weight;

    fn req(pairs: &[(usize, usize)]) -> Vec<Request> {
        pairs.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn wrap_is_one_based() {
        assert_eq!(wrap(4, 4), 4);
        assert_eq!(wrap(5, 4), 1);
        assert_eq!(wrap(9, 4), 1);
        assert_eq!(wrap(1, 4), 1);
    }

    #[test]
    fn requests_are_deduplicated() {
        let g = Graph::unit_path(5).unwrap();
        let sc = Scenario::new(g, 1, 5, req(&[(3, 2), (3, 2), (4, 4)])).unwrap();
        assert_eq!(sc.requests(), &req(&[(3, 2), (4, 4)])[..]);
        assert_eq!((sc.left(), sc.right()), (2, 4));
        assert_eq!(sc.key_nodes(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn rejects_bad_input() {
        let g = Arc::new(Graph::unit_path(7).unwrap());
        assert_eq!(
            Scenario::new(g.clone(), 1, 7, req(&[(8, 1)])),
            Err(Error::NodeOutOfRange { node: 8, n: 7 })
        );
        assert_eq!(Scenario::new(g, 1, 7, []), Err(Error::EmptyRequests));
    }

    #[test]
    fn symmetrize_maps_nodes_and_weights() {
        let g = Graph::path((1..=6).map(Weight::integer).collect());
        let sc = Scenario::new(g, 1, 7, req(&[(4, 1)])).unwrap();
        let sym = sc.symmetrize().unwrap();
        assert_eq!((sym.start(), sym.end()), (7, 1));
        assert_eq!(sym.requests(), &req(&[(4, 7)])[..]);
        assert_eq!(sym.graph().edge_weight(1, 2), Some(Weight::integer(6)));
        assert_eq!(sym.symmetrize().unwrap(), sc);

        let mid = Scenario::new(Graph::unit_path(5).unwrap(), 1, 5, req(&[(3, 3)])).unwrap();
        assert_eq!(mid.symmetrize().unwrap().requests(), &req(&[(3, 3)])[..]);
    }

    #[test]
    fn rotation_moves_start_to_one() {
        let g = Graph::cycle((1..=5).map(Weight::integer).collect()).unwrap();
        let sc = Scenario::new(g, 3, 2, req(&[(5, 1)])).unwrap();
        let rot = sc.rotate(2).unwrap();
        assert_eq!((rot.start(), rot.end()), (1, 5));
        assert_eq!(rot.requests(), &req(&[(3, 4)])[..]);
        // old edge {3,4} (weight 3) is now {1,2}
        assert_eq!(rot.graph().edge_weight(1, 2), Some(Weight::integer(3)));
        assert_eq!(rot.graph().edge_weight(5, 1), Some(Weight::integer(2)));
        assert_eq!(rot.rotate(3).unwrap(), sc);
    }
}
