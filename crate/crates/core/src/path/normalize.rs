//! Reduction of an outer-case request set to its normal form.
//!
//! Forward requests (`s <= t`) are satisfied by any left-to-right sweep and
//! vanish. Overlapping backward requests merge, and a backward request nested
//! inside another one is dropped. What remains is a chain of backward
//! requests `(s_1, t_1), ..., (s_h, t_h)` with `t_i < s_i < t_{i+1}`.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use crate::error::{Error, Result};
use crate::scenario::Request;

/// Backward requests in strictly increasing, non-overlapping order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NormalForm {
    pairs: Vec<Request>,
}

impl NormalForm {
    fn new(mut pairs: Vec<Request>) -> Self {
        pairs.sort_unstable_by_key(|r| r.s);
        let nf = NormalForm { pairs };
        assert!(nf.is_well_formed(), "normalize produced {:?}", nf.pairs);
        nf
    }

    pub fn pairs(&self) -> &[Request] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_well_formed(&self) -> bool {
        self.pairs.iter().all(|r| r.t < r.s) && self.pairs.windows(2).all(|w| w[0].s < w[1].t)
    }

    pub fn into_pairs(self) -> Vec<Request> {
        self.pairs
    }
}

fn check_outer(requests: &[Request], start: usize, end: usize) -> Result<()> {
    let lo = requests.iter().map(|r| r.s.min(r.t)).min();
    let hi = requests.iter().map(|r| r.s.max(r.t)).max();
    match (lo, hi) {
        (Some(lo), Some(hi)) if !(start <= lo && hi <= end) => Err(Error::Precondition(format!(
            "normalize needs start <= {lo} and {hi} <= end, got start={start}, end={end}"
        ))),
        _ => Ok(()),
    }
}

/// Literal fixpoint: drop forward requests, merge overlapping backward pairs
/// until none overlap, then drop nested ones. Quadratic per pass.
pub fn normalize_naive(requests: &[Request], start: usize, end: usize) -> Result<NormalForm> {
    check_outer(requests, start, end)?;
    let mut set: BTreeSet<Request> = requests
        .iter()
        .copied()
        .filter(|r| r.is_backward())
        .collect();

    'merge: loop {
        for &a in &set {
            for &b in &set {
                // a = (s, t), b = (s', t') with t' <= t <= s' <= s
                if a != b && b.t <= a.t && a.t <= b.s && b.s <= a.s {
                    set.remove(&a);
                    set.remove(&b);
                    set.insert(Request::new(a.s, b.t));
                    continue 'merge;
                }
            }
        }
        break;
    }

    'drop: loop {
        for &a in &set {
            for &b in &set {
                // a nested in b: t' <= t < s <= s'
                if a != b && b.t <= a.t && a.t < a.s && a.s <= b.s {
                    set.remove(&a);
                    continue 'drop;
                }
            }
        }
        break;
    }

    Ok(NormalForm::new(set.into_iter().collect()))
}

/// Sweep over the request endpoints in increasing order, in
/// `O(|C| log |C|)`.
///
/// At node `v` the backward requests split into `T1` (`t = v < s`),
/// `T2` (`t < v < s`) and `T3` (`t < v = s`). The normal form's delivery
/// nodes are exactly the `v` with only `T1` non-empty, its pickup nodes the
/// `v` with only `T3` non-empty, and each delivery node pairs with the next
/// pickup node to its right.
pub fn normalize(requests: &[Request], start: usize, end: usize) -> Result<NormalForm> {
    check_outer(requests, start, end)?;
    let mut backward: Vec<Request> = requests
        .iter()
        .copied()
        .filter(|r| r.is_backward())
        .collect();
    backward.sort_unstable_by_key(|r| (r.t, r.s));
    backward.dedup();

    let mut nodes: Vec<usize> = backward.iter().flat_map(|r| [r.s, r.t]).collect();
    nodes.sort_unstable();
    nodes.dedup();

    let mut by_t = backward.iter().peekable();
    // T1 and T3 are only ever drained wholesale; T2 is popped by pickup node.
    let mut t1: Vec<usize> = Vec::new();
    let mut t2: BinaryHeap<Reverse<usize>> = BinaryHeap::new();
    let mut t3: Vec<usize> = Vec::new();
    let mut deliveries = Vec::new();
    let mut pickups = Vec::new();

    for &v in &nodes {
        t3.clear();
        t2.extend(t1.drain(..).map(Reverse));
        while let Some(&Reverse(s)) = t2.peek() {
            if s != v {
                debug_assert!(s > v);
                break;
            }
            t3.push(s);
            t2.pop();
        }
        while let Some(r) = by_t.next_if(|r| r.t == v) {
            t1.push(r.s);
        }
        match (t1.is_empty(), t2.is_empty(), t3.is_empty()) {
            (false, true, true) => deliveries.push(v),
            (true, true, false) => pickups.push(v),
            _ => {}
        }
    }

    let mut pairs = Vec::with_capacity(deliveries.len());
    let mut next_pickup = pickups.iter().peekable();
    for t in deliveries {
        while next_pickup.next_if(|&&s| s <= t).is_some() {}
        let &&s = next_pickup.peek().ok_or_else(|| {
            Error::Internal(format!("delivery node {t} has no pickup to its right"))
        })?;
        pairs.push(Request::new(s, t));
    }
    Ok(NormalForm::new(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn req(pairs: &[(usize, usize)]) -> Vec<Request> {
        pairs.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn worked_example() {
        let c = req(&[(2, 3), (4, 4), (4, 2), (3, 1), (2, 1), (6, 5), (5, 7)]);
        let expected = req(&[(4, 1), (6, 5)]);
        assert_eq!(normalize(&c, 1, 7).unwrap().pairs(), &expected[..]);
        assert_eq!(normalize_naive(&c, 1, 7).unwrap().pairs(), &expected[..]);
    }

    #[test]
    fn forward_only_is_empty() {
        let c = req(&[(1, 3), (2, 2), (4, 6)]);
        assert!(normalize(&c, 1, 6).unwrap().is_empty());
        assert!(normalize_naive(&c, 1, 6).unwrap().is_empty());
    }

    #[test]
    fn overlapping_pair_merges() {
        let c = req(&[(5, 2), (4, 1)]);
        assert_eq!(normalize(&c, 1, 5).unwrap().pairs(), &req(&[(5, 1)])[..]);
        assert_eq!(
            normalize_naive(&c, 1, 5).unwrap().pairs(),
            &req(&[(5, 1)])[..]
        );
    }

    #[test]
    fn touching_pairs_merge() {
        // t' <= t <= s' <= s with t = s'
        let c = req(&[(5, 3), (3, 1)]);
        assert_eq!(normalize(&c, 1, 5).unwrap().pairs(), &req(&[(5, 1)])[..]);
    }

    #[test]
    fn rejects_inner_orientation() {
        let c = req(&[(5, 2)]);
        assert!(matches!(normalize(&c, 3, 7), Err(Error::Precondition(_))));
        assert!(matches!(
            normalize_naive(&c, 1, 4),
            Err(Error::Precondition(_))
        ));
    }
}
