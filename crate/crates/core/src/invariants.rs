//! Exact clique, stability and chromatic numbers, clique enumeration and
//! connectivity.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::limits::Limits;

/// A proper coloring: `colors[v] < k` and adjacent vertices differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c < self.k)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn class(&self, color: usize) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == color)
            .map(|(v, _)| v)
            .collect()
    }
}

/// Lexicographically least maximum clique among the vertices of `within`,
/// where `rows[v]` is the neighborhood of `v`.
pub(crate) fn max_clique_in(rows: &[u64], within: u64) -> u64 {
    fn expand(rows: &[u64], clique: u64, size: u32, mut cand: u64, best: &mut (u64, u32)) {
        if cand == 0 {
            if size > best.1 {
                *best = (clique, size);
            }
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() <= best.1 {
                return;
            }
            let v = cand.trailing_zeros();
            cand &= cand - 1;
            expand(
                rows,
                clique | 1 << v,
                size + 1,
                cand & rows[v as usize],
                best,
            );
        }
        if size > best.1 {
            *best = (clique, size);
        }
    }
    let mut best = (0u64, 0u32);
    expand(rows, 0, 0, within, &mut best);
    best.0
}

/// A maximum clique; ties go to the lexicographically least vertex list.
pub fn max_clique(g: &Graph) -> VertexSet {
    let c = VertexSet::from_bits(max_clique_in(g.rows(), g.vertices().bits()));
    debug_assert!(g.is_clique(c));
    c
}

/// Clique number; `0` for the graph with no vertices.
pub fn omega(g: &Graph) -> usize {
    max_clique(g).len()
}

pub fn max_stable_set(g: &Graph) -> VertexSet {
    let s = max_clique(&g.complement());
    debug_assert!(g.is_stable(s));
    s
}

pub fn alpha(g: &Graph) -> usize {
    max_stable_set(g).len()
}

/// Lexicographically least proper `k`-coloring under ascending vertex
/// order, or `None`.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    fn assign(
        g: &Graph,
        v: usize,
        k: usize,
        used: usize,
        classes: &mut [u64],
        colors: &mut [usize],
    ) -> bool {
        if v == g.n() {
            return true;
        }
        let row = g.rows()[v];
        // colors above `used` are interchangeable
        for c in 0..k.min(used + 1) {
            if classes[c] & row != 0 {
                continue;
            }
            classes[c] |= 1 << v;
            colors[v] = c;
            if assign(g, v + 1, k, used.max(c + 1), classes, colors) {
                return true;
            }
            classes[c] &= !(1 << v);
        }
        false
    }
    if g.n() == 0 {
        return Some(Coloring { colors: vec![], k });
    }
    if k == 0 {
        return None;
    }
    let mut classes = vec![0u64; k];
    let mut colors = vec![0; g.n()];
    assign(g, 0, k, 0, &mut classes, &mut colors).then(|| {
        let c = Coloring { colors, k };
        debug_assert!(c.is_proper(g));
        c
    })
}

/// Minimum coloring, searching `k = omega, omega + 1, ..`.
pub fn chromatic(g: &Graph, limits: &Limits) -> Result<Coloring> {
    limits.check_exact(g.n())?;
    let mut k = omega(g);
    loop {
        if let Some(c) = is_k_colorable(g, k) {
            return Ok(c);
        }
        k += 1;
    }
}

/// Chromatic number; `0` for the graph with no vertices.
pub fn chi(g: &Graph, limits: &Limits) -> Result<usize> {
    chromatic(g, limits).map(|c| c.k)
}

/// Every inclusion-maximal clique exactly once, in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    // Bron-Kerbosch with Tomita pivoting.
    fn bk(rows: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>) {
        if p == 0 {
            if x == 0 {
                out.push(VertexSet::from_bits(r));
            }
            return;
        }
        let pivot = VertexSet::from_bits(p | x)
            .iter()
            .max_by_key(|&u| (p & rows[u]).count_ones())
            .expect("p is nonempty");
        let mut todo = p & !rows[pivot];
        while todo != 0 {
            let v = todo.trailing_zeros() as usize;
            todo &= todo - 1;
            bk(rows, r | 1 << v, p & rows[v], x & rows[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut out = Vec::new();
    bk(g.rows(), 0, g.vertices().bits(), 0, &mut out);
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

/// Every clique, the empty one included, in lexicographic order.
pub fn all_cliques_iter(g: &Graph) -> AllCliques<'_> {
    AllCliques {
        rows: g.rows(),
        stack: vec![(0, g.vertices().bits())],
    }
}

/// Depth-first clique stream; see [`all_cliques_iter`].
pub struct AllCliques<'a> {
    rows: &'a [u64],
    // (clique, vertices above its maximum adjacent to all of it)
    stack: Vec<(u64, u64)>,
}

impl Iterator for AllCliques<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let (clique, cand) = self.stack.pop()?;
        let children: Vec<usize> = VertexSet::from_bits(cand).to_vec();
        for &v in children.iter().rev() {
            let above = !((2u64 << v) - 1);
            self.stack
                .push((clique | 1 << v, cand & self.rows[v] & above));
        }
        Some(VertexSet::from_bits(clique))
    }
}

/// Cliques of exactly `size` vertices in lexicographic order.
pub fn cliques_of_size(g: &Graph, size: usize) -> Vec<VertexSet> {
    fn walk(rows: &[u64], clique: u64, cand: u64, left: usize, out: &mut Vec<VertexSet>) {
        if left == 0 {
            out.push(VertexSet::from_bits(clique));
            return;
        }
        let mut c = cand;
        while c != 0 && c.count_ones() as usize >= left {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            walk(rows, clique | 1 << v, c & rows[v], left - 1, out);
        }
    }
    let mut out = Vec::new();
    walk(g.rows(), 0, g.vertices().bits(), size, &mut out);
    out
}

/// Connected components of `G[within]`, ordered by least vertex.
pub fn components_in(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut left = within.bits();
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet::from_bits(frontier) {
                next |= g.rows()[v];
            }
            frontier = next & left & !comp;
            comp |= frontier;
        }
        left &= !comp;
        out.push(VertexSet::from_bits(comp));
    }
    out
}

pub fn components(g: &Graph) -> Vec<VertexSet> {
    components_in(g, g.vertices())
}

/// The graph with no vertices counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// Two-coloring of `G[within]` as the side containing each component's
/// least vertex, or `None` when `G[within]` has an odd cycle.
pub(crate) fn bipartition_in(rows: &[u64], within: u64) -> Option<u64> {
    let mut left = within;
    let mut side = 0u64;
    while left != 0 {
        let start = left & left.wrapping_neg();
        let mut layer = start;
        let mut seen = start;
        let mut even = true;
        while layer != 0 {
            if even {
                side |= layer;
            }
            let mut next = 0;
            for v in VertexSet::from_bits(layer) {
                next |= rows[v];
            }
            next &= within;
            // an edge inside a layer or back into the same parity class
            // closes an odd cycle
            for v in VertexSet::from_bits(layer) {
                if rows[v] & layer != 0 {
                    return None;
                }
            }
            layer = next & !seen;
            seen |= layer;
            even = !even;
        }
        left &= !seen;
    }
    Some(side)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, named};
    use proptest::prelude::*;

    fn brute_omega(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .map(VertexSet::from_bits)
            .filter(|&s| g.is_clique(s))
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    fn brute_chi(g: &Graph) -> usize {
        let n = g.n();
        (0..=n)
            .find(|&k| {
                let total = k.pow(n as u32);
                (0..total).any(|code| {
                    let colors: Vec<usize> = (0..n).map(|v| code / k.pow(v as u32) % k).collect();
                    g.edges().all(|(u, v)| colors[u] != colors[v])
                })
            })
            .unwrap()
    }

    fn brute_maximal(g: &Graph) -> Vec<VertexSet> {
        let all: Vec<VertexSet> = (0u64..1 << g.n())
            .map(VertexSet::from_bits)
            .filter(|&s| g.is_clique(s))
            .collect();
        let mut max: Vec<VertexSet> = all
            .iter()
            .copied()
            .filter(|&s| !all.iter().any(|&t| t != s && s.is_subset(t)))
            .collect();
        max.sort_by(|a, b| a.lex_cmp(*b));
        max
    }

    fn set(s: &str) -> VertexSet {
        s.chars()
            .map(|c| catalog::figure1_vertex(c).unwrap())
            .collect()
    }

    fn random_graph(n: usize, bits: u64) -> Graph {
        let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
        let edges: Vec<_> = pairs
            .enumerate()
            .filter(|(i, _)| bits >> (i % 64) & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn clique_numbers() {
        let lim = Limits::default();
        assert_eq!(omega(&named("complete(4)").unwrap()), 4);
        assert_eq!(omega(&named("c5").unwrap()), 2);
        assert_eq!(omega(&Graph::empty(0).unwrap()), 0);
        assert_eq!(omega(&Graph::empty(3).unwrap()), 1);
        let f = catalog::figure1();
        assert_eq!(max_clique(&f), set("AEF"));
        assert_eq!(chi(&Graph::empty(0).unwrap(), &lim).unwrap(), 0);
    }

    #[test]
    fn stability_numbers() {
        assert_eq!(alpha(&named("fourK1").unwrap()), 4);
        assert_eq!(alpha(&named("complete(4)").unwrap()), 1);
        let c5 = named("c5").unwrap();
        assert_eq!(alpha(&c5), 2);
        let brute = (0u64..32)
            .map(VertexSet::from_bits)
            .filter(|&s| c5.is_stable(s))
            .map(|s| s.len())
            .max();
        assert_eq!(brute, Some(2));
    }

    #[test]
    fn chromatic_numbers() {
        let lim = Limits::default();
        assert_eq!(chi(&named("c5").unwrap(), &lim).unwrap(), 3);
        assert_eq!(chi(&catalog::grotzsch(), &lim).unwrap(), 4);
        assert_eq!(chi(&Graph::empty(3).unwrap(), &lim).unwrap(), 1);
        assert_eq!(chi(&catalog::petersen(), &lim).unwrap(), 3);
        let big = Graph::empty(17).unwrap();
        assert!(chi(&big, &lim).is_err());
    }

    #[test]
    fn k_colorability() {
        let p = catalog::petersen();
        let c = is_k_colorable(&p, 3).unwrap();
        assert!(c.is_proper(&p));
        assert!(is_k_colorable(&catalog::grotzsch(), 3).is_none());
        assert!(is_k_colorable(&named("complete(3)").unwrap(), 2).is_none());
        // least assignment under ascending order
        let c5 = named("c5").unwrap();
        assert_eq!(is_k_colorable(&c5, 3).unwrap().colors, vec![0, 1, 0, 1, 2]);
    }

    #[test]
    fn maximal_clique_lists() {
        let c5 = named("c5").unwrap();
        let mc = maximal_cliques(&c5);
        assert_eq!(mc.len(), 5);
        assert!(mc.iter().all(|s| s.len() == 2 && c5.is_clique(*s)));
        assert_eq!(mc, brute_maximal(&c5));
        let k4 = named("complete(4)").unwrap();
        assert_eq!(maximal_cliques(&k4), vec![k4.vertices()]);
        let f = catalog::figure1();
        let maximum: Vec<_> = all_cliques_iter(&f).filter(|s| s.len() == 3).collect();
        assert_eq!(maximum, vec![set("AEF"), set("EFJ")]);
    }

    #[test]
    fn component_lists() {
        let f = catalog::figure1();
        let rest = f.vertices() - set("EF");
        assert_eq!(components_in(&f, rest), vec![set("ABCD"), set("GHIJ")]);
        assert_eq!(components(&named("complete(4)").unwrap()).len(), 1);
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(
            components(&e3),
            (0..3).map(VertexSet::singleton).collect::<Vec<_>>()
        );
        assert!(is_connected(&Graph::empty(0).unwrap()));
        assert!(!is_connected(&e3));
    }

    #[test]
    fn bipartition() {
        let c6 = named("cycle(6)").unwrap();
        let side = bipartition_in(c6.rows(), c6.vertices().bits()).unwrap();
        assert_eq!(side, 0b010101);
        assert!(bipartition_in(named("c5").unwrap().rows(), 0b11111).is_none());
        // removing one vertex of C5 leaves a path
        assert!(bipartition_in(named("c5").unwrap().rows(), 0b11110).is_some());
    }

    proptest! {
        #[test]
        fn omega_matches_brute_force(n in 0usize..=9, bits in any::<u64>()) {
            let g = random_graph(n, bits);
            let w = max_clique(&g);
            prop_assert!(g.is_clique(w));
            prop_assert_eq!(w.len(), brute_omega(&g));
            // lexicographically least among maximum cliques
            let least = (0u64..1 << n).map(VertexSet::from_bits)
                .filter(|&s| g.is_clique(s) && s.len() == w.len())
                .min_by(|a, b| a.lex_cmp(*b)).unwrap();
            prop_assert_eq!(w, least);
            prop_assert_eq!(alpha(&g), omega(&g.complement()));
        }

        #[test]
        fn chi_matches_brute_force(n in 0usize..=7, bits in any::<u64>()) {
            let g = random_graph(n, bits);
            let col = chromatic(&g, &Limits::default()).unwrap();
            prop_assert!(col.is_proper(&g));
            prop_assert_eq!(col.k, brute_chi(&g));
            prop_assert!(omega(&g) <= col.k && col.k <= n);
        }

        #[test]
        fn maximal_cliques_match_brute_force(n in 0usize..=9, bits in any::<u64>()) {
            let g = random_graph(n, bits);
            prop_assert_eq!(maximal_cliques(&g), brute_maximal(&g));
        }

        #[test]
        fn all_cliques_are_every_clique(n in 0usize..=8, bits in any::<u64>()) {
            let g = random_graph(n, bits);
            let streamed: Vec<_> = all_cliques_iter(&g).collect();
            let mut brute: Vec<_> = (0u64..1 << n).map(VertexSet::from_bits).filter(|&s| g.is_clique(s)).collect();
            brute.sort_by(|a, b| a.lex_cmp(*b));
            prop_assert_eq!(streamed, brute);
            for k in 0..=n {
                let by_size: Vec<_> = all_cliques_iter(&g).filter(|s| s.len() == k).collect();
                prop_assert_eq!(cliques_of_size(&g, k), by_size);
            }
        }

        #[test]
        fn components_partition(n in 0usize..=12, bits in any::<u64>()) {
            let g = random_graph(n, bits);
            let comps = components(&g);
            let union = comps.iter().fold(VertexSet::EMPTY, |a, &b| a | b);
            prop_assert_eq!(union, g.vertices());
            for (i, &a) in comps.iter().enumerate() {
                prop_assert_eq!(components_in(&g, a).len(), 1);
                for &b in &comps[i + 1..] {
                    prop_assert!(a.iter().all(|v| g.neighbors(v).is_disjoint(b)));
                }
            }
        }
    }
}
