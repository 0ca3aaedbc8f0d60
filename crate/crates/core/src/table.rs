//! Per-subset clique numbers and perfection flags over the whole subset
//! lattice of one graph, keyed by vertex bitmask.
//!
//! Perfection is filled bottom-up: a set is perfect iff all its
//! one-vertex-deleted subsets are and it does not itself induce an odd hole
//! or odd antihole (the only minimal imperfect graphs).

use crate::graph::{Graph, VertexSet};
use crate::invariants::components_in;

pub(crate) struct SubsetTable {
    omega: Vec<u8>,
    perfect: Vec<bool>,
}

impl SubsetTable {
    /// Memory and time are `O(2^n)`; callers enforce the cap.
    pub(crate) fn build(g: &Graph) -> SubsetTable {
        let n = g.n();
        assert!(n <= 26, "subset table over {n} vertices");
        let size = 1usize << n;
        let rows = g.rows();
        let mut omega = vec![0u8; size];
        let mut perfect = vec![true; size];
        for s in 1..size {
            let low = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            let with_low = 1 + omega[s & rows[low] as usize];
            omega[s] = omega[rest].max(with_low);

            if s.count_ones() < 5 {
                continue;
            }
            let mut bits = s;
            let mut ok = true;
            while bits != 0 {
                let v = bits & bits.wrapping_neg();
                if !perfect[s ^ v] {
                    ok = false;
                    break;
                }
                bits ^= v;
            }
            perfect[s] = ok && !is_minimal_imperfect(g, s as u64);
        }
        SubsetTable { omega, perfect }
    }

    #[inline]
    pub(crate) fn omega(&self, s: u64) -> usize {
        self.omega[s as usize] as usize
    }

    #[inline]
    pub(crate) fn perfect(&self, s: u64) -> bool {
        self.perfect[s as usize]
    }
}

/// `G[s]` is an odd hole or an odd antihole.
pub(crate) fn is_minimal_imperfect(g: &Graph, s: u64) -> bool {
    let k = s.count_ones() as usize;
    if k < 5 || k.is_multiple_of(2) {
        return false;
    }
    let degrees = || {
        VertexSet::from_bits(s)
            .iter()
            .map(|v| (g.rows()[v] & s).count_ones() as usize)
    };
    let set = VertexSet::from_bits(s);
    if degrees().all(|d| d == 2) && components_in(g, set).len() == 1 {
        return true;
    }
    if degrees().all(|d| d == k - 3) {
        let co = g.complement();
        return components_in(&co, set).len() == 1;
    }
    false
}
