//! Induced-subgraph detection: pattern embeddings, L-freeness, and holes
//! or antiholes of a requested parity.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Induced embedding: pattern vertex `i` maps to host vertex `map[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Injective, and preserves both adjacency and non-adjacency.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        let m = &self.map;
        m.len() == pattern.n()
            && m.iter().all(|&v| v < host.n())
            && m.iter().collect::<VertexSet>().len() == m.len()
            && (0..m.len())
                .all(|i| (0..i).all(|j| host.has_edge(m[i], m[j]) == pattern.has_edge(i, j)))
    }

    pub fn image(&self) -> VertexSet {
        self.map.iter().collect()
    }
}

/// First induced embedding of `pattern` into `host`.
///
/// Pattern vertices are placed in descending-degree order (ties by index);
/// candidates for each are tried in ascending host order.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    find_induced_in(host, host.vertices(), pattern)
}

/// As [`find_induced`], restricted to host vertices in `within`.
pub fn find_induced_in(host: &Graph, within: VertexSet, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.n();
    if k > within.len() {
        return None;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(pattern.degree(i)), i));
    // for position p: which earlier positions are pattern-neighbors
    let earlier_adj: Vec<u64> = (0..k)
        .map(|p| {
            (0..p)
                .filter(|&q| pattern.has_edge(order[p], order[q]))
                .fold(0u64, |acc, q| acc | 1 << q)
        })
        .collect();

    fn place(
        host: &Graph,
        p: usize,
        free: u64,
        placed: &mut Vec<usize>,
        earlier_adj: &[u64],
    ) -> bool {
        if p == earlier_adj.len() {
            return true;
        }
        let mut cand = free;
        for (q, &h) in placed.iter().enumerate() {
            if earlier_adj[p] >> q & 1 == 1 {
                cand &= host.rows()[h];
            } else {
                cand &= !host.rows()[h];
            }
        }
        for v in VertexSet::from_bits(cand) {
            placed.push(v);
            if place(host, p + 1, free & !(1 << v), placed, earlier_adj) {
                return true;
            }
            placed.pop();
        }
        false
    }

    let mut placed = Vec::with_capacity(k);
    if !place(host, 0, within.bits(), &mut placed, &earlier_adj) {
        return None;
    }
    let mut map = vec![0; k];
    for (p, &i) in order.iter().enumerate() {
        map[i] = placed[p];
    }
    let e = Embedding { map };
    debug_assert!(e.verify(host, pattern));
    Some(e)
}

/// Result of an L-freeness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LFreeness {
    Free,
    /// `patterns[pattern]` embeds as `embedding`.
    Violated {
        pattern: usize,
        embedding: Embedding,
    },
}

impl LFreeness {
    pub fn is_free(&self) -> bool {
        matches!(self, LFreeness::Free)
    }
}

/// Checks the patterns in order and reports the first that embeds.
pub fn is_l_free(g: &Graph, patterns: &[Graph]) -> LFreeness {
    patterns
        .iter()
        .enumerate()
        .find_map(|(pattern, h)| {
            find_induced(g, h).map(|embedding| LFreeness::Violated { pattern, embedding })
        })
        .unwrap_or(LFreeness::Free)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
    Any,
}

impl Parity {
    pub fn admits(self, len: usize) -> bool {
        match self {
            Parity::Odd => len % 2 == 1,
            Parity::Even => len.is_multiple_of(2),
            Parity::Any => true,
        }
    }
}

/// A chordless cycle given in cyclic order, starting at its least vertex.
///
/// The same type carries antihole certificates: there the cycle is a hole
/// of the complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleCertificate {
    pub cycle: Vec<usize>,
    pub parity: Parity,
}

impl HoleCertificate {
    fn new(cycle: Vec<usize>) -> Self {
        let parity = if cycle.len() % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        };
        HoleCertificate { cycle, parity }
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.cycle.iter().collect()
    }

    /// Chordless cycle of length at least 4 in `g` with matching parity.
    pub fn verify_hole(&self, g: &Graph) -> bool {
        let c = &self.cycle;
        let k = c.len();
        k >= 4
            && self.parity
                == if k % 2 == 1 {
                    Parity::Odd
                } else {
                    Parity::Even
                }
            && c.iter().all(|&v| v < g.n())
            && self.vertices().len() == k
            && (0..k).all(|i| {
                (0..i).all(|j| {
                    let consecutive = i - j == 1 || (j == 0 && i == k - 1);
                    g.has_edge(c[i], c[j]) == consecutive
                })
            })
    }

    /// The cycle is a hole of the complement of `g`.
    pub fn verify_antihole(&self, g: &Graph) -> bool {
        self.verify_hole(&g.complement())
    }

    /// Re-expresses the certificate through a vertex map (e.g. the map
    /// returned by [`Graph::induced`]).
    pub fn mapped(&self, map: &[usize]) -> HoleCertificate {
        let mut cycle: Vec<usize> = self.cycle.iter().map(|&v| map[v]).collect();
        normalize(&mut cycle);
        HoleCertificate::new(cycle)
    }
}

impl fmt::Display for HoleCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cycle.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("-"))
    }
}

/// Rotate to start at the least vertex and orient toward its smaller
/// neighbor on the cycle.
fn normalize(cycle: &mut [usize]) {
    let k = cycle.len();
    if k == 0 {
        return;
    }
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    cycle.rotate_left(start);
    if k > 2 && cycle[k - 1] < cycle[1] {
        cycle[1..].reverse();
    }
}

/// Shortest hole of the given parity with at least `min_len` vertices.
///
/// Among the shortest, the one with the least anchor (minimum vertex) is
/// chosen, then the lexicographically least sequence oriented toward the
/// anchor's smaller cycle neighbor.
pub fn find_hole(g: &Graph, parity: Parity, min_len: usize) -> Option<HoleCertificate> {
    find_hole_in(g, g.vertices(), parity, min_len)
}

/// As [`find_hole`], restricted to `G[within]`.
pub fn find_hole_in(
    g: &Graph,
    within: VertexSet,
    parity: Parity,
    min_len: usize,
) -> Option<HoleCertificate> {
    let mut search = HoleSearch {
        rows: g.rows(),
        parity,
        min_len: min_len.max(4),
        best: None,
        path: Vec::with_capacity(within.len()),
        first_only: false,
    };
    search.run(within.bits());
    search.best.map(|cycle| {
        let cert = HoleCertificate::new(cycle);
        debug_assert!(cert.verify_hole(g));
        cert
    })
}

/// Existence test without the shortest-first guarantee.
pub fn has_hole(g: &Graph, parity: Parity, min_len: usize) -> bool {
    let mut search = HoleSearch {
        rows: g.rows(),
        parity,
        min_len: min_len.max(4),
        best: None,
        path: Vec::with_capacity(g.n()),
        first_only: true,
    };
    search.run(g.vertices().bits());
    search.best.is_some()
}

/// Shortest odd antihole with at least `min_len` vertices, as a hole of
/// the complement expressed in `g`'s vertex numbering.
pub fn find_odd_antihole(g: &Graph, min_len: usize) -> Option<HoleCertificate> {
    find_hole(&g.complement(), Parity::Odd, min_len)
}

struct HoleSearch<'a> {
    rows: &'a [u64],
    parity: Parity,
    min_len: usize,
    best: Option<Vec<usize>>,
    path: Vec<usize>,
    first_only: bool,
}

impl HoleSearch<'_> {
    fn bound(&self) -> usize {
        self.best.as_ref().map_or(usize::MAX, Vec::len)
    }

    fn done(&self) -> bool {
        self.first_only && self.best.is_some()
    }

    fn run(&mut self, within: u64) {
        for anchor in VertexSet::from_bits(within) {
            if self.done() {
                return;
            }
            // vertices above the anchor only: each hole is found from its
            // least vertex
            let allowed = within & !((2u64 << anchor) - 1);
            if allowed.count_ones() + 1 < self.min_len as u32 {
                break;
            }
            self.path.clear();
            self.path.push(anchor);
            let firsts = self.rows[anchor] & allowed;
            for p1 in VertexSet::from_bits(firsts) {
                if self.done() {
                    return;
                }
                self.path.push(p1);
                // interior = path minus anchor and tip
                self.extend(anchor, allowed & !(1 << p1), 0);
                self.path.pop();
            }
        }
    }

    /// `interior_nbrs` is the union of neighborhoods of path vertices
    /// strictly between the anchor and the tip.
    fn extend(&mut self, anchor: usize, free: u64, interior_nbrs: u64) {
        let tip = *self.path.last().unwrap();
        // closing vertex adds one: the hole would have path.len() + 1 vertices
        if self.path.len() + 1 >= self.bound() {
            return;
        }
        let cand = self.rows[tip] & free & !interior_nbrs;
        let p1 = self.path[1];
        for v in VertexSet::from_bits(cand) {
            if self.done() {
                return;
            }
            let len = self.path.len() + 1;
            if self.rows[anchor] >> v & 1 == 1 {
                // v closes the cycle; it must not touch the rest of the
                // path, and the orientation rule avoids double counting
                if len >= 4
                    && v > p1
                    && len >= self.min_len
                    && self.parity.admits(len)
                    && len < self.bound()
                {
                    let mut cycle = self.path.clone();
                    cycle.push(v);
                    self.best = Some(cycle);
                }
                continue;
            }
            // v extends the path and the old tip becomes interior
            self.path.push(v);
            self.extend(anchor, free & !(1 << v), interior_nbrs | self.rows[tip]);
            self.path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, named};
    use proptest::prelude::*;

    fn random_graph(n: usize, bits: u64) -> Graph {
        let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
        let edges: Vec<_> = pairs
            .enumerate()
            .filter(|(i, _)| bits.rotate_left((*i / 64) as u32 * 7) >> (i % 64) & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        Graph::from_edges(n, edges).unwrap()
    }

    /// Vertex subsets inducing a connected 2-regular graph, i.e. holes
    /// (size >= 4) by brute force.
    fn brute_holes(g: &Graph) -> Vec<VertexSet> {
        (0u64..1 << g.n())
            .map(VertexSet::from_bits)
            .filter(|&s| s.len() >= 4)
            .filter(|&s| s.iter().all(|v| (g.neighbors(v) & s).len() == 2))
            .filter(|&s| crate::invariants::components_in(g, s).len() == 1)
            .collect()
    }

    fn letters(s: &str) -> Vec<usize> {
        s.chars()
            .map(|c| catalog::figure1_vertex(c).unwrap())
            .collect()
    }

    #[test]
    fn figure1_contains_p5() {
        let f = catalog::figure1();
        let p5 = named("p5").unwrap();
        let e = find_induced(&f, &p5).unwrap();
        assert!(e.verify(&f, &p5));
        assert!(!is_l_free(&f, &[p5]).is_free());
    }

    #[test]
    fn embedding_examples() {
        let k4 = named("complete(4)").unwrap();
        assert!(find_induced(&k4, &named("fourK1").unwrap()).is_none());
        let c5 = named("c5").unwrap();
        let p4 = named("path(4)").unwrap();
        assert!(find_induced(&c5, &p4).unwrap().verify(&c5, &p4));
        assert!(is_l_free(&c5, &[named("p5").unwrap()]).is_free());
        assert!(is_l_free(&c5, &[named("complete(3)").unwrap()]).is_free());
        let v = is_l_free(&c5, &[named("complete(3)").unwrap(), p4.clone()]);
        match v {
            LFreeness::Violated { pattern, embedding } => {
                assert_eq!(pattern, 1);
                assert!(embedding.verify(&c5, &p4));
            }
            LFreeness::Free => panic!("C5 contains P4"),
        }
    }

    #[test]
    fn figure1_shortest_odd_hole() {
        let f = catalog::figure1();
        let h = find_hole(&f, Parity::Odd, 5).unwrap();
        assert_eq!(h.cycle, letters("ABCDF"));
        assert_eq!(h.parity, Parity::Odd);
        assert!(h.verify_hole(&f));
    }

    #[test]
    fn hole_examples() {
        assert!(find_hole(&named("complete(4)").unwrap(), Parity::Any, 4).is_none());
        let c6 = named("cycle(6)").unwrap();
        let h = find_hole(&c6, Parity::Even, 4).unwrap();
        assert_eq!(h.cycle, vec![0, 1, 2, 3, 4, 5]);
        assert!(find_hole(&c6, Parity::Odd, 5).is_none());
        assert!(find_hole(&c6, Parity::Any, 7).is_none());
    }

    #[test]
    fn antihole_examples() {
        let c7 = named("cycle(7)").unwrap();
        let co = c7.complement();
        let h = find_odd_antihole(&co, 5).unwrap();
        assert_eq!(h.len(), 7);
        assert!(h.verify_antihole(&co));
        let c5 = named("c5").unwrap();
        let h = find_odd_antihole(&c5, 5).unwrap();
        assert_eq!(h.vertices(), c5.vertices());
        assert!(h.verify_antihole(&c5) && !h.verify_hole(&c5));
        assert!(find_hole(&c5, Parity::Odd, 5).unwrap().vertices() == h.vertices());
        let k33 = Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        assert!(find_odd_antihole(&k33, 5).is_none());
    }

    #[test]
    fn mapped_certificate() {
        let f = catalog::figure1();
        let s: VertexSet = letters("EGHIJ").into_iter().collect();
        let (h, map) = f.induced(s).unwrap();
        let cert = find_hole(&h, Parity::Odd, 5).unwrap().mapped(&map);
        assert_eq!(cert.cycle, letters("EGHIJ"));
        assert!(cert.verify_hole(&f));
    }

    proptest! {
        #[test]
        fn hole_search_matches_subset_scan(n in 0usize..=9, bits in any::<u64>()) {
            let g = random_graph(n, bits);
            let holes = brute_holes(&g);
            for parity in [Parity::Odd, Parity::Even, Parity::Any] {
                for min_len in [4, 5, 6, 7] {
                    let expected = holes.iter().copied()
                        .filter(|s| s.len() >= min_len && parity.admits(s.len()))
                        .min_by_key(|s| (s.len(), s.min()));
                    let found = find_hole(&g, parity, min_len);
                    prop_assert_eq!(found.is_some(), expected.is_some());
                    prop_assert_eq!(has_hole(&g, parity, min_len), expected.is_some());
                    if let (Some(h), Some(s)) = (found, expected) {
                        prop_assert!(h.verify_hole(&g));
                        prop_assert_eq!(h.len(), s.len());
                        prop_assert_eq!(h.cycle[0], s.min().unwrap());
                        prop_assert!(h.len() >= min_len && parity.admits(h.len()));
                    }
                }
            }
        }

        #[test]
        fn embeddings_match_brute_force(n in 0usize..=8, bits in any::<u64>(), key in 0usize..6) {
            let g = random_graph(n, bits);
            let pattern = named(["p5", "c5", "k23", "fourK1", "fork", "bull"][key]).unwrap();
            let found = find_induced(&g, &pattern);
            let brute = (0u64..1 << n).map(VertexSet::from_bits)
                .filter(|s| s.len() == pattern.n())
                .any(|s| {
                    let (h, _) = g.induced(s).unwrap();
                    crate::conjectures::enumerate::canonical_code(&h)
                        == crate::conjectures::enumerate::canonical_code(&pattern)
                });
            prop_assert_eq!(found.is_some(), brute);
            if let Some(e) = found {
                prop_assert!(e.verify(&g, &pattern));
            }
        }

        #[test]
        fn l_freeness_is_hereditary(n in 0usize..=10, bits in any::<u64>(), sub in any::<u64>()) {
            let g = random_graph(n, bits);
            let pats = [named("p5").unwrap(), named("k23").unwrap()];
            if is_l_free(&g, &pats).is_free() {
                let (h, _) = g.induced(VertexSet::from_bits(sub) & g.vertices()).unwrap();
                prop_assert!(is_l_free(&h, &pats).is_free());
            }
        }
    }
}
