//! For triangle-free graphs, perfect divisibility coincides with
//! 3-colorability. Both directions are constructive here.

use serde::{Deserialize, Serialize};

use crate::divisibility::{is_perfectly_divisible, GoodPartition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{self, bipartition_in, is_k_colorable, Coloring};
use crate::limits::Limits;

fn require_triangle_free(g: &Graph) -> Result<()> {
    let w = invariants::omega(g);
    if w > 2 {
        let t = invariants::max_clique(g);
        return Err(Error::Precondition(format!(
            "graph has a triangle inside {t}"
        )));
    }
    Ok(())
}

fn require_edge(g: &Graph) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(Error::Precondition("graph has no edge".into()));
    }
    Ok(())
}

/// Colors 0 and 1 form `A`, color 2 forms `B`.
pub fn coloring_to_good_partition(
    g: &Graph,
    col: &Coloring,
    limits: &Limits,
) -> Result<GoodPartition> {
    require_triangle_free(g)?;
    require_edge(g)?;
    if col.k > 3 || !col.is_proper(g) {
        return Err(Error::Precondition(
            "not a proper coloring with at most 3 colors".into(),
        ));
    }
    let b = col.class(2);
    let gp = GoodPartition::new(g.vertices() - b, b);
    gp.validate_on(g, g.vertices(), limits).map_err(|e| {
        Error::GuaranteeViolated(format!("3-coloring did not give a good partition: {e}"))
    })?;
    Ok(gp)
}

/// Two-colors the perfect triangle-free side `A` and gives the stable side
/// `B` a third color.
pub fn good_partition_to_coloring(
    g: &Graph,
    gp: &GoodPartition,
    limits: &Limits,
) -> Result<Coloring> {
    require_triangle_free(g)?;
    require_edge(g)?;
    gp.validate_on(g, g.vertices(), limits)?;
    if !g.is_stable(gp.b) {
        return Err(Error::GuaranteeViolated(format!(
            "B = {} is not stable",
            gp.b
        )));
    }
    let side = bipartition_in(g.rows(), gp.a.bits()).ok_or_else(|| {
        Error::GuaranteeViolated(format!("G[A] for A = {} is not bipartite", gp.a))
    })?;
    let side = VertexSet::from_bits(side);
    let colors = (0..g.n())
        .map(|v| {
            if gp.b.contains(v) {
                2
            } else if side.contains(v) {
                0
            } else {
                1
            }
        })
        .collect::<Vec<_>>();
    let k = colors.iter().max().map_or(0, |&c| c + 1);
    let col = Coloring { colors, k };
    if !col.is_proper(g) {
        return Err(Error::GuaranteeViolated(
            "assembled coloring is improper".into(),
        ));
    }
    Ok(col)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equivalence {
    pub pd: bool,
    pub three_colorable: bool,
    pub agree: bool,
}

/// Decides both sides independently: perfect divisibility through the
/// subset lattice, 3-colorability through backtracking.
pub fn pd_equals_3colorable(g: &Graph, limits: &Limits) -> Result<Equivalence> {
    require_triangle_free(g)?;
    let pd = is_perfectly_divisible(g, limits)?.holds;
    let three_colorable = is_k_colorable(g, 3).is_some();
    Ok(Equivalence {
        pd,
        three_colorable,
        agree: pd == three_colorable,
    })
}
