//! Good partitions, perfect divisibility, k-divisibility and the two
//! minimality notions built on them.
//!
//! Whole-lattice decisions build one [`SubsetTable`] per call, so repeated
//! questions about the same induced subgraph are answered from the table
//! rather than recomputed.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants;
use crate::limits::Limits;
use crate::perfection::is_perfect_subset;
use crate::table::SubsetTable;

/// `(A, B)` over the domain `A ∪ B` of some host graph: `G[A]` is perfect
/// and `omega(G[B]) < omega(G[A ∪ B])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodPartition {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl GoodPartition {
    pub fn new(a: VertexSet, b: VertexSet) -> Self {
        GoodPartition { a, b }
    }

    pub fn domain(&self) -> VertexSet {
        self.a | self.b
    }

    /// Recomputes both conditions from scratch on `G[A ∪ B]`.
    pub fn validate(&self, g: &Graph, limits: &Limits) -> Result<()> {
        g.check_set(self.a | self.b)?;
        if !self.a.is_disjoint(self.b) {
            return Err(Error::InvalidPartition(format!(
                "sides share {}",
                self.a & self.b
            )));
        }
        let perfection = is_perfect_subset(g, self.a, limits)?;
        if let Some(w) = perfection.witness {
            return Err(Error::InvalidPartition(format!("G[A] is not perfect: {w}")));
        }
        let whole = invariants::omega(&g.induced(self.domain())?.0);
        let part = invariants::omega(&g.induced(self.b)?.0);
        if part >= whole {
            return Err(Error::InvalidPartition(format!(
                "omega(G[B]) = {part} is not below omega = {whole}"
            )));
        }
        Ok(())
    }

    /// As [`validate`](Self::validate), additionally requiring the domain
    /// to be exactly `domain`.
    pub fn validate_on(&self, g: &Graph, domain: VertexSet, limits: &Limits) -> Result<()> {
        if self.domain() != domain {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} instead of {domain}",
                self.domain()
            )));
        }
        self.validate(g, limits)
    }
}

/// Parts covering the domain, none containing a largest clique of it.
/// Parts may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KPartition {
    pub parts: Vec<VertexSet>,
}

impl KPartition {
    pub fn domain(&self) -> VertexSet {
        self.parts.iter().fold(VertexSet::EMPTY, |acc, &p| acc | p)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let domain = self.domain();
        g.check_set(domain)?;
        if self.parts.iter().map(|p| p.len()).sum::<usize>() != domain.len() {
            return Err(Error::InvalidPartition("parts overlap".into()));
        }
        let whole = invariants::omega(&g.induced(domain)?.0);
        for &p in &self.parts {
            let w = invariants::omega(&g.induced(p)?.0);
            if w >= whole {
                return Err(Error::InvalidPartition(format!(
                    "part {p} has omega {w}, not below {whole}"
                )));
            }
        }
        Ok(())
    }
}

/// `failing_subgraph` is present exactly when `holds` is false; it induces
/// at least one edge and admits no qualifying partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityVerdict {
    pub holds: bool,
    pub failing_subgraph: Option<VertexSet>,
}

impl DivisibilityVerdict {
    fn holds() -> Self {
        DivisibilityVerdict {
            holds: true,
            failing_subgraph: None,
        }
    }

    fn fails(at: u64) -> Self {
        DivisibilityVerdict {
            holds: false,
            failing_subgraph: Some(VertexSet::from_bits(at)),
        }
    }
}

/// Some `B ⊆ h` with `omega(B) < omega(h)` and `G[h \ B]` perfect.
fn has_good_partition(t: &SubsetTable, h: u64) -> bool {
    let w = t.omega(h);
    if w == 0 {
        return false;
    }
    if t.perfect(h) {
        return true;
    }
    let mut b = h;
    while b != 0 {
        if t.omega(b) < w && t.perfect(h ^ b) {
            return true;
        }
        b = (b - 1) & h;
    }
    false
}

/// Subsets of `0..n` with exactly `k` members in increasing bitmask order.
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut next = (k <= n).then_some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let n2 = (((r ^ cur) >> 2) / c) | r;
            (n2 < limit).then_some(n2)
        };
        Some(cur)
    })
}

/// Calls `visit` on the `k`-subsets of `items` in lexicographic order until
/// it returns true.
fn lex_combinations(items: &[usize], k: usize, mut visit: impl FnMut(u64) -> bool) -> bool {
    fn rec(
        items: &[usize],
        start: usize,
        left: usize,
        acc: u64,
        visit: &mut dyn FnMut(u64) -> bool,
    ) -> bool {
        if left == 0 {
            return visit(acc);
        }
        for i in start..=items.len() - left {
            if rec(items, i + 1, left - 1, acc | 1 << items[i], visit) {
                return true;
            }
        }
        false
    }
    k <= items.len() && rec(items, 0, k, 0, &mut visit)
}

/// First good partition with the smallest `B`, ties broken by the
/// lexicographically least `B`. `None` means none exists.
pub fn find_good_partition(g: &Graph, limits: &Limits) -> Result<Option<GoodPartition>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    limits.check_search(g.n())?;
    let all = g.vertices();
    let gp = if is_perfect_subset(g, all, limits)?.perfect {
        Some(GoodPartition::new(all, VertexSet::EMPTY))
    } else {
        let t = SubsetTable::build(g);
        let full = all.bits();
        let w = t.omega(full);
        let items = all.to_vec();
        let mut found = None;
        for size in 1..=g.n() {
            let hit = lex_combinations(&items, size, |b| {
                if t.omega(b) < w && t.perfect(full ^ b) {
                    found = Some(b);
                    true
                } else {
                    false
                }
            });
            if hit {
                break;
            }
        }
        found.map(|b| {
            let b = VertexSet::from_bits(b);
            GoodPartition::new(all - b, b)
        })
    };
    if let Some(gp) = &gp {
        gp.validate_on(g, all, limits).map_err(|e| {
            Error::GuaranteeViolated(format!("search returned a bad partition: {e}"))
        })?;
    }
    Ok(gp)
}

/// Good partition of `G[s]`, in `g`'s numbering.
pub fn find_good_partition_of(
    g: &Graph,
    s: VertexSet,
    limits: &Limits,
) -> Result<Option<GoodPartition>> {
    let (h, map) = g.induced(s)?;
    let lift = |x: VertexSet| x.iter().map(|v| map[v]).collect::<VertexSet>();
    Ok(find_good_partition(&h, limits)?.map(|gp| GoodPartition::new(lift(gp.a), lift(gp.b))))
}

/// Every induced subgraph with an edge has a good partition. On failure the
/// reported subgraph has the fewest vertices (ties: least bitmask).
pub fn is_perfectly_divisible(g: &Graph, limits: &Limits) -> Result<DivisibilityVerdict> {
    limits.check_exact(g.n())?;
    let t = SubsetTable::build(g);
    for size in 2..=g.n() {
        for h in subsets_of_size(g.n(), size) {
            if t.omega(h) >= 2 && !has_good_partition(&t, h) {
                return Ok(DivisibilityVerdict::fails(h));
            }
        }
    }
    Ok(DivisibilityVerdict::holds())
}

/// Not perfectly divisible, while every proper induced subgraph is.
pub fn is_mnpd(g: &Graph, limits: &Limits) -> Result<bool> {
    limits.check_exact(g.n())?;
    if g.n() == 0 {
        return Ok(false);
    }
    let t = SubsetTable::build(g);
    let full = g.vertices().bits();
    if has_good_partition(&t, full) {
        return Ok(false);
    }
    // A proper subgraph that fails contains a failing subgraph; checking
    // every proper subset directly covers all of them.
    Ok((0..full).all(|h| t.omega(h) < 2 || has_good_partition(&t, h)))
}

/// Partitions `h` into at most `k` parts each with clique number below
/// `w`. Failing `(h, k)` pairs are memoized for the fixed `w`.
fn k_split(
    t: &SubsetTable,
    h: u64,
    k: usize,
    w: usize,
    dead: &mut HashSet<(u64, usize)>,
) -> Option<Vec<u64>> {
    if t.omega(h) < w {
        return Some(vec![h]);
    }
    if k <= 1 || dead.contains(&(h, k)) {
        return None;
    }
    // The least vertex goes in the first part; labels are interchangeable.
    let v = h & h.wrapping_neg();
    let rest = h ^ v;
    let mut sub = rest;
    loop {
        let b = sub | v;
        if t.omega(b) < w {
            if let Some(mut parts) = k_split(t, h ^ b, k - 1, w, dead) {
                parts.insert(0, b);
                return Some(parts);
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
    dead.insert((h, k));
    None
}

fn k_partition_with(t: &SubsetTable, h: u64, k: usize) -> Option<KPartition> {
    let w = t.omega(h);
    let mut parts = k_split(t, h, k, w, &mut HashSet::new())?;
    parts.resize(k.max(parts.len()), 0);
    Some(KPartition {
        parts: parts.into_iter().map(VertexSet::from_bits).collect(),
    })
}

/// A partition of `V(g)` into `k` parts, none containing a largest clique.
pub fn find_k_partition(g: &Graph, k: usize, limits: &Limits) -> Result<Option<KPartition>> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    limits.check_exact(g.n())?;
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let t = SubsetTable::build(g);
    let kp = k_partition_with(&t, g.vertices().bits(), k);
    if let Some(kp) = &kp {
        kp.validate(g).map_err(|e| {
            Error::GuaranteeViolated(format!("search returned a bad k-partition: {e}"))
        })?;
    }
    Ok(kp)
}

/// Every induced subgraph with an edge splits into `k` parts none of which
/// contains one of its largest cliques. Graphs without edges hold
/// vacuously.
pub fn is_k_divisible(g: &Graph, k: usize, limits: &Limits) -> Result<DivisibilityVerdict> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    limits.check_exact(g.n())?;
    let t = SubsetTable::build(g);
    let mut dead: Vec<HashSet<(u64, usize)>> = vec![HashSet::new(); g.n() + 1];
    for size in 2..=g.n() {
        for h in subsets_of_size(g.n(), size) {
            let w = t.omega(h);
            if w >= 2 && k_split(&t, h, k, w, &mut dead[w]).is_none() {
                return Ok(DivisibilityVerdict::fails(h));
            }
        }
    }
    Ok(DivisibilityVerdict::holds())
}

/// Not k-divisible, while every proper induced subgraph is.
pub fn is_minimally_non_k_divisible(g: &Graph, k: usize, limits: &Limits) -> Result<bool> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    limits.check_exact(g.n())?;
    if g.n() == 0 {
        return Ok(false);
    }
    let t = SubsetTable::build(g);
    let full = g.vertices().bits();
    let mut dead: Vec<HashSet<(u64, usize)>> = vec![HashSet::new(); g.n() + 1];
    let w = t.omega(full);
    if w < 2 || k_split(&t, full, k, w, &mut dead[w]).is_some() {
        return Ok(false);
    }
    Ok((0..full).all(|h| {
        let w = t.omega(h);
        w < 2 || k_split(&t, h, k, w, &mut dead[w]).is_some()
    }))
}

pub fn is_minimally_non_2_divisible(g: &Graph, limits: &Limits) -> Result<bool> {
    is_minimally_non_k_divisible(g, 2, limits)
}

/// How a vertex is added to a good partition of `G - x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionMode {
    /// `x` lies in no maximum clique of `G`; it joins `B`.
    NonClique,
    /// `x` is simplicial; it joins `A`.
    Simplicial,
}

/// Lifts a good partition of `G - x` (given in `g`'s numbering) to `G`.
pub fn extend_partition_around_vertex(
    g: &Graph,
    x: usize,
    gp: &GoodPartition,
    mode: ExtensionMode,
    limits: &Limits,
) -> Result<GoodPartition> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            n: g.n(),
        });
    }
    gp.validate_on(g, g.vertices().without(x), limits)?;
    let nbrs = g.neighbors(x);
    let out = match mode {
        ExtensionMode::NonClique => {
            let through_x = 1 + invariants::omega(&g.induced(nbrs)?.0);
            if through_x >= invariants::omega(g) {
                return Err(Error::Precondition(format!(
                    "vertex {x} lies in a maximum clique"
                )));
            }
            GoodPartition::new(gp.a, gp.b.with(x))
        }
        ExtensionMode::Simplicial => {
            if !g.is_clique(nbrs) {
                return Err(Error::Precondition(format!("vertex {x} is not simplicial")));
            }
            GoodPartition::new(gp.a.with(x), gp.b)
        }
    };
    out.validate_on(g, g.vertices(), limits)
        .map_err(|e| Error::GuaranteeViolated(format!("extension around {x}: {e}")))?;
    Ok(out)
}
