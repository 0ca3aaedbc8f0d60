//! Simplicial and bisimplicial vertices, clique cutsets, and the two
//! compositions of good partitions across a clique cutset.

use serde::{Deserialize, Serialize};

use crate::divisibility::GoodPartition;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{self, bipartition_in, components_in};
use crate::limits::Limits;
use crate::perfection::{is_perfect_subset, ImperfectionWitness};

/// Vertices whose neighborhood is a clique, ascending.
pub fn find_simplicial(g: &Graph) -> Vec<usize> {
    (0..g.n())
        .filter(|&v| g.is_clique(g.neighbors(v)))
        .collect()
}

/// Vertices whose neighborhood is covered by two cliques, ascending.
pub fn find_bisimplicial(g: &Graph) -> Vec<usize> {
    let co = g.complement();
    (0..g.n())
        .filter(|&v| bipartition_in(co.rows(), g.neighbors(v).bits()).is_some())
        .collect()
}

/// `G - c` has at least two components.
pub fn is_cutset(g: &Graph, c: VertexSet) -> bool {
    components_in(g, g.vertices() - c).len() >= 2
}

/// A clique cutset `c` with the rest split into two nonempty sides and no
/// edge between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutsetSplit {
    pub c: VertexSet,
    pub v1: VertexSet,
    pub v2: VertexSet,
}

impl CutsetSplit {
    /// Splits `G - c` into the component holding the least remaining vertex
    /// (`v1`) and everything else (`v2`).
    pub fn from_cutset(g: &Graph, c: VertexSet) -> Result<CutsetSplit> {
        g.check_set(c)?;
        let comps = components_in(g, g.vertices() - c);
        if comps.len() < 2 {
            return Err(Error::NotACutset(format!(
                "removing {c} leaves {} component(s)",
                comps.len()
            )));
        }
        let v1 = comps[0];
        let split = CutsetSplit {
            c,
            v1,
            v2: g.vertices() - c - v1,
        };
        split.validate(g)?;
        Ok(split)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        g.check_set(self.c | self.v1 | self.v2)?;
        let bad = |m: String| Err(Error::InvalidSplit(m));
        if !g.is_clique(self.c) {
            return bad(format!("{} is not a clique", self.c));
        }
        if self.v1.is_empty() || self.v2.is_empty() {
            return bad("a side is empty".into());
        }
        if !(self.c.is_disjoint(self.v1)
            && self.c.is_disjoint(self.v2)
            && self.v1.is_disjoint(self.v2))
        {
            return bad("parts overlap".into());
        }
        if (self.c | self.v1 | self.v2) != g.vertices() {
            return bad("parts do not cover the vertex set".into());
        }
        if let Some(v) = self
            .v1
            .iter()
            .find(|&v| !g.neighbors(v).is_disjoint(self.v2))
        {
            return bad(format!("vertex {v} has a neighbor across the cutset"));
        }
        Ok(())
    }

    /// `C ∪ V1`.
    pub fn side1(&self) -> VertexSet {
        self.c | self.v1
    }

    /// `C ∪ V2`.
    pub fn side2(&self) -> VertexSet {
        self.c | self.v2
    }

    /// The same cutset with the sides exchanged.
    pub fn swapped(&self) -> CutsetSplit {
        CutsetSplit {
            c: self.c,
            v1: self.v2,
            v2: self.v1,
        }
    }
}

/// First clique cutset in (size, lexicographic) order.
///
/// A disconnected graph yields the empty clique.
pub fn find_clique_cutset(g: &Graph) -> Option<CutsetSplit> {
    let w = invariants::omega(g);
    (0..=w)
        .flat_map(|size| invariants::cliques_of_size(g, size))
        .find(|&c| is_cutset(g, c))
        .map(|c| CutsetSplit::from_cutset(g, c).expect("cutset just checked"))
}

/// Inclusion-minimal sub-cutset of `c`: vertices are dropped one at a time
/// in ascending order while the remainder still separates, repeating until
/// no single vertex can be dropped. At that point no proper subset
/// separates either.
pub fn minimize_cutset(g: &Graph, c: VertexSet) -> Result<VertexSet> {
    g.check_set(c)?;
    if !is_cutset(g, c) {
        return Err(Error::NotACutset(format!(
            "{c} does not disconnect the graph"
        )));
    }
    let mut cur = c;
    loop {
        match cur.iter().find(|&v| is_cutset(g, cur.without(v))) {
            Some(v) => cur = cur.without(v),
            None => return Ok(cur),
        }
    }
}

/// Every cutset vertex has a neighbor in every component of `G - c`.
pub fn is_minimal_cutset(g: &Graph, c: VertexSet) -> bool {
    is_cutset(g, c) && c.iter().all(|v| !is_cutset(g, c.without(v)))
}

/// Outcome of joining side partitions across a clique cutset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinationReport {
    pub a: VertexSet,
    pub b: VertexSet,
    pub omega_ok: bool,
    pub a_perfect: bool,
    pub witness: Option<ImperfectionWitness>,
}

fn check_side(
    g: &Graph,
    gp: &GoodPartition,
    side: VertexSet,
    which: &str,
    limits: &Limits,
) -> Result<()> {
    gp.validate_on(g, side, limits)
        .map_err(|e| Error::InvalidPartition(format!("side {which}: {e}")))
}

/// `A = A1 ∪ A2`, `B = (B1 \ A2) ∪ (B2 \ A1)` from good partitions of the
/// two sides `G[C ∪ V1]` and `G[C ∪ V2]`.
///
/// The clique inequality for `B` is checked twice: directly, and through the
/// argument that every maximum clique of `G` sits inside one side and meets
/// that side's `A`.
pub fn combine_good_partitions(
    g: &Graph,
    split: &CutsetSplit,
    gp1: &GoodPartition,
    gp2: &GoodPartition,
    limits: &Limits,
) -> Result<CombinationReport> {
    split.validate(g)?;
    check_side(g, gp1, split.side1(), "1", limits)?;
    check_side(g, gp2, split.side2(), "2", limits)?;

    let a = gp1.a | gp2.a;
    let b = (gp1.b - gp2.a) | (gp2.b - gp1.a);
    debug_assert_eq!(a | b, g.vertices());
    debug_assert!(a.is_disjoint(b));

    let w = invariants::omega(g);
    let direct = invariants::omega(&g.induced(b)?.0) < w;
    let by_cliques = invariants::maximal_cliques(g)
        .into_iter()
        .filter(|k| k.len() == w)
        .all(|k| {
            let in_side = k.is_subset(split.side1()) || k.is_subset(split.side2());
            in_side && !k.is_disjoint(a)
        });
    let perfection = is_perfect_subset(g, a, limits)?;
    Ok(CombinationReport {
        a,
        b,
        omega_ok: direct && by_cliques,
        a_perfect: perfection.perfect,
        witness: perfection.witness,
    })
}

/// `(A2 ∪ V1, B2)` for a split whose side `G[C ∪ V1]` is perfect.
pub fn one_side_perfect_partition(
    g: &Graph,
    split: &CutsetSplit,
    gp2: &GoodPartition,
    limits: &Limits,
) -> Result<GoodPartition> {
    split.validate(g)?;
    if let Some(w) = is_perfect_subset(g, split.side1(), limits)?.witness {
        return Err(Error::Precondition(format!(
            "G[C ∪ V1] is not perfect: {w}"
        )));
    }
    check_side(g, gp2, split.side2(), "2", limits)?;
    let out = GoodPartition::new(gp2.a | split.v1, gp2.b);
    out.validate_on(g, g.vertices(), limits).map_err(|e| {
        Error::GuaranteeViolated(format!(
            "one-side-perfect composition failed on cutset {} with A2 = {}, B2 = {}: {e}",
            split.c, gp2.a, gp2.b
        ))
    })?;
    Ok(out)
}

/// Turns an imperfect combination into an induced `P5` of `g`, returned in
/// path order.
///
/// The odd hole or antihole of `G[A]` lies on one side. It meets the cutset
/// in some `c` that, by minimality of the cutset, has a neighbor `c'` on the
/// far side; `c'` followed by `c` and three witness vertices off the
/// cutset forming an induced path gives the `P5`. The three vertices are
/// found by exhaustive search over the witness.
pub fn extract_p5_witness(
    g: &Graph,
    split: &CutsetSplit,
    report: &CombinationReport,
) -> Result<[usize; 5]> {
    split.validate(g)?;
    let witness = match (&report.witness, report.a_perfect) {
        (Some(w), false) => w,
        _ => {
            return Err(Error::Precondition(
                "report has no imperfection witness".into(),
            ))
        }
    };
    if !witness.verify(g) {
        return Err(Error::Precondition(format!(
            "witness {witness} does not verify"
        )));
    }
    if !is_minimal_cutset(g, split.c) {
        return Err(Error::CutsetNotMinimal(format!("{}", split.c)));
    }
    let h = witness.vertices();
    let far = match (h.is_disjoint(split.v1), h.is_disjoint(split.v2)) {
        (true, _) => split.v1,
        (false, true) => split.v2,
        (false, false) => {
            return Err(Error::InvalidPartition(format!(
                "witness {witness} crosses the cutset; the side partitions were not good"
            )))
        }
    };
    let on_cut = h & split.c;
    if on_cut.is_empty() {
        return Err(Error::InvalidPartition(format!(
            "witness {witness} avoids the cutset, so one side's A was not perfect"
        )));
    }
    let off = h - split.c;
    let n = |v: usize| g.neighbors(v);
    for c in on_cut {
        for c2 in n(c) & far {
            for x in n(c) & (off - n(c2)) {
                for y in (n(x) & off) - n(c) - n(c2) {
                    for z in (n(y) & off) - n(x) - n(c) - n(c2) {
                        let path = [c2, c, x, y, z];
                        if is_induced_path(g, &path) {
                            return Ok(path);
                        }
                    }
                }
            }
        }
    }
    Err(Error::GuaranteeViolated(format!(
        "no induced P5 through cutset {} and witness {witness}",
        split.c
    )))
}

/// Consecutive vertices adjacent, all other pairs not.
pub fn is_induced_path(g: &Graph, path: &[usize]) -> bool {
    path.iter().collect::<VertexSet>().len() == path.len()
        && (0..path.len()).all(|i| (0..i).all(|j| g.has_edge(path[i], path[j]) == (i - j == 1)))
}
