//! Perfection with certificates: an odd-hole/odd-antihole search, and an
//! independent check that chi equals omega on every induced subgraph.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants;
use crate::limits::Limits;
use crate::patterns::{self, HoleCertificate, Parity};

/// Largest input accepted by [`is_perfect_oracle`].
pub const ORACLE_MAX_VERTICES: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "cycle", rename_all = "snake_case")]
pub enum ImperfectionWitness {
    OddHole(HoleCertificate),
    OddAntihole(HoleCertificate),
}

impl ImperfectionWitness {
    pub fn certificate(&self) -> &HoleCertificate {
        match self {
            ImperfectionWitness::OddHole(c) | ImperfectionWitness::OddAntihole(c) => c,
        }
    }

    pub fn vertices(&self) -> VertexSet {
        self.certificate().vertices()
    }

    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            ImperfectionWitness::OddHole(c) => c.verify_hole(g) && c.len() >= 5,
            ImperfectionWitness::OddAntihole(c) => c.verify_antihole(g) && c.len() >= 5,
        }
    }

    pub fn mapped(&self, map: &[usize]) -> ImperfectionWitness {
        match self {
            ImperfectionWitness::OddHole(c) => ImperfectionWitness::OddHole(c.mapped(map)),
            ImperfectionWitness::OddAntihole(c) => ImperfectionWitness::OddAntihole(c.mapped(map)),
        }
    }
}

impl std::fmt::Display for ImperfectionWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ImperfectionWitness::OddHole(c) => write!(f, "odd hole {c}"),
            ImperfectionWitness::OddAntihole(c) => write!(f, "odd antihole {c}"),
        }
    }
}

/// `witness` is present exactly when the graph is imperfect.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectionVerdict {
    pub perfect: bool,
    pub witness: Option<ImperfectionWitness>,
}

impl PerfectionVerdict {
    pub fn verify(&self, g: &Graph) -> bool {
        match &self.witness {
            None => self.perfect,
            Some(w) => !self.perfect && w.verify(g),
        }
    }
}

/// Perfect iff there is no odd hole and no odd antihole. The witness is
/// the shortest odd hole if any, else the shortest odd antihole.
pub fn is_perfect(g: &Graph, limits: &Limits) -> Result<PerfectionVerdict> {
    limits.check_search(g.n())?;
    let witness = patterns::find_hole(g, Parity::Odd, 5)
        .map(ImperfectionWitness::OddHole)
        .or_else(|| patterns::find_odd_antihole(g, 5).map(ImperfectionWitness::OddAntihole));
    Ok(PerfectionVerdict {
        perfect: witness.is_none(),
        witness,
    })
}

/// Perfection of `G[s]`, certificate in `g`'s numbering.
pub fn is_perfect_subset(g: &Graph, s: VertexSet, limits: &Limits) -> Result<PerfectionVerdict> {
    let (h, map) = g.induced(s)?;
    let v = is_perfect(&h, limits)?;
    Ok(PerfectionVerdict {
        perfect: v.perfect,
        witness: v.witness.map(|w| w.mapped(&map)),
    })
}

/// Definitional check: `chi(H) == omega(H)` for every induced subgraph `H`.
///
/// Iterates all `2^n` subsets, so inputs are limited to
/// [`ORACLE_MAX_VERTICES`]. Note the quantified equation is read for the
/// subgraph `H`, not the host graph.
pub fn is_perfect_oracle(g: &Graph) -> Result<bool> {
    if g.n() > ORACLE_MAX_VERTICES {
        return Err(Error::CapExceeded {
            n: g.n(),
            cap: ORACLE_MAX_VERTICES,
        });
    }
    let limits = Limits::default();
    for bits in 0u64..1 << g.n() {
        let (h, _) = g.induced(VertexSet::from_bits(bits))?;
        if invariants::chi(&h, &limits)? != invariants::omega(&h) {
            return Ok(false);
        }
    }
    Ok(true)
}
