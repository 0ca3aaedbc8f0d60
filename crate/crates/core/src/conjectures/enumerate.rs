//! Isomorph-free enumeration of small graphs by vertex extension, with a
//! canonical form defined as the least adjacency code over all vertex
//! orderings.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` handled by [`enumerate_small`].
pub const SMALL_MAX: usize = 7;
/// Largest `n` handled by [`enumerate_hereditary`].
pub const HEREDITARY_MAX: usize = 10;

/// Known counts of unlabelled graphs on `0..=7` vertices.
pub const SMALL_COUNTS: [usize; 8] = [1, 1, 2, 4, 11, 34, 156, 1044];

fn code_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Adjacency code of `g` under the ordering `perm` (position -> vertex):
/// upper-triangle bits in column order `(0,1), (0,2), (1,2), (0,3), ..`,
/// first bit most significant.
pub fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..perm.len() {
        for i in 0..j {
            code = code << 1 | g.has_edge(perm[i], perm[j]) as u64;
        }
    }
    code
}

/// Least [`code_under`] over all orderings, by branch and bound on code
/// prefixes. Defined for `n <= 11`.
pub fn canonical_code(g: &Graph) -> u64 {
    canonical(g).0
}

/// Canonical relabelling: the graph whose identity ordering realizes the
/// canonical code.
pub fn canonical_form(g: &Graph) -> Graph {
    decode(g.n(), canonical(g).0)
}

fn canonical(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.n();
    assert!(n <= 11, "canonical code needs n <= 11, got {n}");
    let total = code_len(n);
    let mut st = Canon {
        g,
        total,
        best: u64::MAX,
        best_perm: (0..n).collect(),
        perm: Vec::with_capacity(n),
    };
    if n <= 1 {
        return (0, st.best_perm);
    }
    st.search(0, 0, false);
    (st.best, st.best_perm)
}

struct Canon<'a> {
    g: &'a Graph,
    total: usize,
    best: u64,
    best_perm: Vec<usize>,
    perm: Vec<usize>,
}

impl Canon<'_> {
    /// `prefix` holds the code bits for positions placed so far; `below`
    /// records that the prefix is already strictly smaller than `best`.
    fn search(&mut self, used: u64, prefix: u64, below: bool) {
        let j = self.perm.len();
        let n = self.g.n();
        if j == n {
            if prefix < self.best {
                self.best = prefix;
                self.best_perm = self.perm.clone();
            }
            return;
        }
        for v in 0..n {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut p = prefix;
            for &u in &self.perm {
                p = p << 1 | self.g.has_edge(u, v) as u64;
            }
            let mut now_below = below;
            if !below && self.best != u64::MAX {
                let bits = code_len(j + 1);
                let best_prefix = self.best >> (self.total - bits);
                if p > best_prefix {
                    continue;
                }
                now_below = p < best_prefix;
            }
            self.perm.push(v);
            self.search(used | 1 << v, p, now_below);
            self.perm.pop();
        }
    }
}

/// Inverse of [`code_under`] for the identity ordering.
pub fn decode(n: usize, code: u64) -> Graph {
    let total = code_len(n);
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).expect("decoded code is in range")
}

/// One representative per isomorphism class of `n`-vertex graphs whose
/// `(n-1)`-vertex classes are `prev` and that satisfy `keep`, in ascending
/// canonical-code order, each in canonical form.
pub fn extend_class(prev: &[Graph], keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    let Some(m) = prev.first().map(Graph::n) else {
        return Vec::new();
    };
    let n = m + 1;
    let mut codes = BTreeSet::new();
    for g in prev {
        let base: Vec<(usize, usize)> = g.edges().collect();
        for nbrs in 0u64..1 << m {
            let edges = base
                .iter()
                .copied()
                .chain((0..m).filter(|&u| nbrs >> u & 1 == 1).map(|u| (u, m)));
            let h = Graph::from_edges(n, edges).expect("extension stays in range");
            if keep(&h) {
                codes.insert(canonical_code(&h));
            }
        }
    }
    codes.into_iter().map(|c| decode(n, c)).collect()
}

/// All graphs on `n` vertices up to isomorphism, `n <= 7`.
pub fn enumerate_small(n: usize) -> Result<Vec<Graph>> {
    if n > SMALL_MAX {
        return Err(Error::Precondition(format!(
            "exhaustive enumeration is limited to n <= {SMALL_MAX}; supply a graph6 corpus for n = {n}"
        )));
    }
    enumerate_hereditary(n, |_| true)
}

/// All graphs on `n` vertices in a hereditary class given by `keep`, up to
/// isomorphism. `keep` must be closed under vertex deletion for the result
/// to be complete.
pub fn enumerate_hereditary(n: usize, keep: impl Fn(&Graph) -> bool) -> Result<Vec<Graph>> {
    if n > HEREDITARY_MAX {
        return Err(Error::Precondition(format!(
            "extension enumeration is limited to n <= {HEREDITARY_MAX}"
        )));
    }
    let mut level = vec![Graph::empty(0)?];
    for _ in 0..n {
        level = extend_class(&level, &keep);
    }
    Ok(level)
}

/// Every graph on at most `max_n <= 7` vertices, by increasing `n`.
pub fn corpus_up_to(max_n: usize) -> Result<Vec<Graph>> {
    if max_n > SMALL_MAX {
        return enumerate_small(max_n);
    }
    let mut out = Vec::new();
    let mut level = vec![Graph::empty(0)?];
    out.extend(level.iter().cloned());
    for _ in 0..max_n {
        level = extend_class(&level, |_| true);
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::omega;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_code(g: &Graph) -> u64 {
        all_perms(g.n())
            .iter()
            .map(|p| code_under(g, p))
            .min()
            .unwrap()
    }

    #[test]
    fn branch_and_bound_matches_all_permutations() {
        for n in 0..=6 {
            for g in enumerate_small(n).unwrap() {
                // scramble, then compare against the brute-force minimum
                let perm: Vec<usize> = (0..n).map(|i| (i * 5 + 3) % n.max(1)).collect();
                let h = if n > 0 && perm.iter().collect::<crate::graph::VertexSet>().len() == n {
                    g.permuted(&perm).unwrap()
                } else {
                    g.clone()
                };
                assert_eq!(canonical_code(&h), brute_code(&h));
                assert_eq!(canonical_code(&h), canonical_code(&g));
            }
        }
    }

    #[test]
    fn counts_match_known_sequence() {
        for (n, &count) in SMALL_COUNTS.iter().enumerate() {
            assert_eq!(enumerate_small(n).unwrap().len(), count, "n = {n}");
        }
        assert_eq!(corpus_up_to(7).unwrap().len(), 1253);
        assert!(enumerate_small(8).is_err());
    }

    #[test]
    fn brute_force_count_for_four() {
        // canonicalize every labelled graph on 4 vertices by full search
        let mut codes = BTreeSet::new();
        for mask in 0u64..64 {
            codes.insert(brute_code(&decode(4, mask)));
        }
        assert_eq!(codes.len(), 11);
        let mut three = BTreeSet::new();
        for mask in 0u64..8 {
            three.insert(brute_code(&decode(3, mask)));
        }
        assert_eq!(three.len(), 4);
    }

    #[test]
    fn triangle_free_counts() {
        let counts: Vec<usize> = (0..=8)
            .map(|n| enumerate_hereditary(n, |g| omega(g) <= 2).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 1, 2, 3, 7, 14, 38, 107, 410]);
    }

    #[test]
    fn canonical_forms_are_fixed_points() {
        for g in enumerate_small(5).unwrap() {
            assert_eq!(canonical_form(&g), g);
            assert_eq!(
                code_under(&g, &(0..g.n()).collect::<Vec<_>>()),
                canonical_code(&g)
            );
        }
    }
}
