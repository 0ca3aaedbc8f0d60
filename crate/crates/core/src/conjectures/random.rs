//! Seeded random fixtures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomposition::CutsetSplit;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Precondition(format!(
            "edge probability {p} is outside [0, 1]"
        )));
    }
    Ok(())
}

/// `G(n, p)` drawn from ChaCha8 seeded with `seed`; pairs are visited in
/// `(u, v)`, `u < v` lexicographic order.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Two random sides glued along a clique of size `csize`.
///
/// Vertices `0..n1` form `V1`, the next `csize` the clique `C`, the rest
/// `V2`. Edges inside `V1 ∪ C` and inside `C ∪ V2` (other than the clique
/// itself) appear with probability `p`; there are none between `V1` and
/// `V2`.
pub fn random_glued(
    n1: usize,
    n2: usize,
    csize: usize,
    p: f64,
    seed: u64,
) -> Result<(Graph, CutsetSplit)> {
    check_p(p)?;
    if n1 == 0 || n2 == 0 {
        return Err(Error::Precondition(
            "both sides of the cutset must be nonempty".into(),
        ));
    }
    if csize == 0 {
        return Err(Error::Precondition(
            "the glued clique needs at least one vertex".into(),
        ));
    }
    let n = n1 + n2 + csize;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let v1: VertexSet = (0..n1).collect();
    let c: VertexSet = (n1..n1 + csize).collect();
    let v2: VertexSet = (n1 + csize..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if c.contains(u) && c.contains(v) {
                edges.push((u, v));
            } else if (v1.contains(u) && v2.contains(v)) || (v2.contains(u) && v1.contains(v)) {
                continue;
            } else if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, edges)?;
    let split = CutsetSplit { c, v1, v2 };
    split.validate(&g)?;
    Ok((g, split))
}
