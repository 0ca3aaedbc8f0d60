//! Per-graph analysis report.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use perfdiv::catalog;
use perfdiv::decomposition::{
    find_bisimplicial, find_clique_cutset, find_simplicial, is_minimal_cutset,
};
use perfdiv::divisibility::{
    find_good_partition, find_k_partition, is_k_divisible, is_perfectly_divisible,
};
use perfdiv::invariants::{self, Coloring};
use perfdiv::patterns::find_induced;
use perfdiv::perfection::is_perfect;
use perfdiv::{
    write_graph6, CutsetSplit, DivisibilityVerdict, GoodPartition, Graph, KPartition, Limits,
    PerfectionVerdict, Result, VertexSet,
};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Witnessed<T: Serialize> {
    pub value: usize,
    pub witness: T,
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub label: Option<String>,
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub omega: Witnessed<VertexSet>,
    pub alpha: Witnessed<VertexSet>,
    pub chi: Witnessed<Coloring>,
    pub perfection: PerfectionVerdict,
    pub good_partition: Option<GoodPartition>,
    pub perfectly_divisible: DivisibilityVerdict,
    pub two_divisible: DivisibilityVerdict,
    pub two_partition: Option<KPartition>,
    pub clique_cutset: Option<CutsetSplit>,
    /// Every inclusion-minimal clique cutset, in (size, lexicographic) order.
    pub minimal_clique_cutsets: Vec<VertexSet>,
    pub simplicial: Vec<usize>,
    pub bisimplicial: Vec<usize>,
    /// Pattern key to an induced embedding, or `None` when the graph is
    /// free of it.
    pub patterns: BTreeMap<String, Option<Vec<usize>>>,
}

pub const PATTERNS: [&str; 5] = ["p5", "c5", "k23", "4K1", "complete(3)"];

pub fn analyze(g: &Graph, limits: &Limits) -> Result<CheckReport> {
    let clique = invariants::max_clique(g);
    let stable = invariants::max_stable_set(g);
    let coloring = invariants::chromatic(g, limits)?;
    let good_partition = if g.n() == 0 {
        None
    } else {
        find_good_partition(g, limits)?
    };
    let mut minimal_clique_cutsets: Vec<VertexSet> = invariants::all_cliques_iter(g)
        .filter(|&c| is_minimal_cutset(g, c))
        .collect();
    minimal_clique_cutsets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
    let mut patterns = BTreeMap::new();
    for key in PATTERNS {
        let p = catalog::named(key)?;
        patterns.insert(key.to_string(), find_induced(g, &p).map(|e| e.map));
    }
    Ok(CheckReport {
        label: g.label().map(str::to_string),
        graph6: write_graph6(g),
        n: g.n(),
        edges: g.edge_count(),
        omega: Witnessed {
            value: clique.len(),
            witness: clique,
        },
        alpha: Witnessed {
            value: stable.len(),
            witness: stable,
        },
        chi: Witnessed {
            value: coloring.k,
            witness: coloring,
        },
        perfection: is_perfect(g, limits)?,
        good_partition,
        perfectly_divisible: is_perfectly_divisible(g, limits)?,
        two_divisible: is_k_divisible(g, 2, limits)?,
        two_partition: if g.edge_count() > 0 {
            find_k_partition(g, 2, limits)?
        } else {
            None
        },
        clique_cutset: find_clique_cutset(g),
        minimal_clique_cutsets,
        simplicial: find_simplicial(g),
        bisimplicial: find_bisimplicial(g),
        patterns,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict(v: &DivisibilityVerdict) -> String {
    match v.failing_subgraph {
        None => "yes".into(),
        Some(s) => format!("no (fails on G[{s}])"),
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        if let Some(l) = &self.label {
            writeln!(out, "graph: {l}")?;
        }
        writeln!(out, "graph6: {}", self.graph6)?;
        writeln!(out, "n: {}, edges: {}", self.n, self.edges)?;
        writeln!(
            out,
            "omega: {} via clique {}",
            self.omega.value, self.omega.witness
        )?;
        writeln!(
            out,
            "alpha: {} via stable set {}",
            self.alpha.value, self.alpha.witness
        )?;
        writeln!(
            out,
            "chi: {} via coloring {:?}",
            self.chi.value, self.chi.witness.colors
        )?;
        match &self.perfection.witness {
            None => writeln!(out, "perfect: yes")?,
            Some(w) => writeln!(out, "perfect: no ({w})")?,
        }
        match &self.good_partition {
            Some(gp) => writeln!(out, "good partition: A = {}, B = {}", gp.a, gp.b)?,
            None => writeln!(out, "good partition: none")?,
        }
        writeln!(
            out,
            "perfectly divisible: {}",
            verdict(&self.perfectly_divisible)
        )?;
        writeln!(out, "2-divisible: {}", verdict(&self.two_divisible))?;
        if let Some(p) = &self.two_partition {
            let parts: Vec<String> = p.parts.iter().map(ToString::to_string).collect();
            writeln!(out, "2-partition: {}", parts.join(" | "))?;
        }
        match &self.clique_cutset {
            Some(s) => writeln!(
                out,
                "clique cutset: {} separating {} from {}",
                s.c, s.v1, s.v2
            )?,
            None => writeln!(out, "clique cutset: none")?,
        }
        if !self.minimal_clique_cutsets.is_empty() {
            let all: Vec<String> = self
                .minimal_clique_cutsets
                .iter()
                .map(ToString::to_string)
                .collect();
            writeln!(out, "minimal clique cutsets: {}", all.join(" "))?;
        }
        writeln!(out, "simplicial: {:?}", self.simplicial)?;
        writeln!(out, "bisimplicial: {:?}", self.bisimplicial)?;
        for (key, emb) in &self.patterns {
            let name = if key == "complete(3)" {
                "triangle"
            } else {
                key.as_str()
            };
            match emb {
                None => writeln!(out, "{name}-free: {}", yes_no(true))?,
                Some(m) => writeln!(out, "{name}-free: no (induced on {m:?})")?,
            }
        }
        f.write_str(&out)
    }
}
