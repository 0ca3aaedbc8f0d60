//! The acceptance battery: nine self-contained checks over the reference
//! graphs, the small-graph corpus and seeded random fixtures.
//!
//! Output is deterministic: details contain counts and certificates but no
//! timings, and all randomness is seeded.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, figure1_vertex};
use crate::conjectures::{self, enumerate, random, registry, scan, CorpusItem, Status};
use crate::decomposition::{
    combine_good_partitions, extract_p5_witness, is_induced_path, is_minimal_cutset,
    minimize_cutset, one_side_perfect_partition, CutsetSplit,
};
use crate::divisibility::{
    extend_partition_around_vertex, find_good_partition, find_good_partition_of, is_k_divisible,
    is_minimally_non_2_divisible, is_perfectly_divisible, ExtensionMode, GoodPartition,
};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::graph6::{parse_graph6, write_graph6};
use crate::hardness::pd_equals_3colorable;
use crate::invariants::{self, bipartition_in};
use crate::limits::Limits;
use crate::patterns;
use crate::perfection::{is_perfect, is_perfect_oracle, is_perfect_subset, ImperfectionWitness};

/// Reference graphs the battery runs against. Replaceable so that a faulty
/// constructor can be simulated.
#[derive(Debug, Clone)]
pub struct Fixtures {
    pub figure1: Graph,
    pub grotzsch: Graph,
    pub petersen: Graph,
}

impl Default for Fixtures {
    fn default() -> Self {
        Fixtures {
            figure1: catalog::figure1(),
            grotzsch: catalog::grotzsch(),
            petersen: catalog::petersen(),
        }
    }
}

/// Sample sizes for the randomized checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sizes {
    /// Random graphs per order (8 and 9) in the perfection cross-check.
    pub oracle_random: usize,
    pub glued: usize,
    /// Cases per extension mode.
    pub extension: usize,
    pub jobs: usize,
}

impl Default for Sizes {
    fn default() -> Self {
        Sizes {
            oracle_random: 1000,
            glued: 10_000,
            extension: 1000,
            jobs: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub id: u8,
    pub title: String,
    /// The statements or constructions this check exercises.
    pub covers: String,
    pub passed: bool,
    pub details: Vec<String>,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "[{mark}] {}. {} (covers: {})",
            self.id, self.title, self.covers
        )?;
        for d in &self.details {
            writeln!(f, "    {d}")?;
        }
        Ok(())
    }
}

/// Collects expectations; the first few failures are kept verbatim.
struct Check {
    outcome: CheckOutcome,
    failures: usize,
}

const MAX_REPORTED_FAILURES: usize = 5;

impl Check {
    fn new(id: u8, title: &str, covers: &str) -> Self {
        Check {
            outcome: CheckOutcome {
                id,
                title: title.into(),
                covers: covers.into(),
                passed: true,
                details: Vec::new(),
            },
            failures: 0,
        }
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.outcome.details.push(msg.into());
    }

    fn fail(&mut self, msg: impl Into<String>) {
        self.outcome.passed = false;
        self.failures += 1;
        if self.failures <= MAX_REPORTED_FAILURES {
            self.outcome.details.push(format!("FAILED: {}", msg.into()));
        }
    }

    fn expect(&mut self, ok: bool, msg: impl Into<String>) -> bool {
        if !ok {
            self.fail(msg);
        }
        ok
    }

    fn attempt<T>(&mut self, r: Result<T>, what: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(format!("{what}: {e}"));
                None
            }
        }
    }

    fn finish(mut self) -> CheckOutcome {
        if self.failures > MAX_REPORTED_FAILURES {
            let more = self.failures - MAX_REPORTED_FAILURES;
            self.outcome
                .details
                .push(format!("... and {more} more failure(s)"));
        }
        self.outcome
    }
}

fn letters(s: &str) -> VertexSet {
    s.chars().filter_map(figure1_vertex).collect()
}

fn named_set(s: VertexSet) -> String {
    s.iter()
        .map(|v| catalog::FIGURE1_NAMES.get(v).copied().unwrap_or('?'))
        .collect()
}

pub fn figure1_suite(fx: &Fixtures, limits: &Limits) -> CheckOutcome {
    let mut ck = Check::new(
        1,
        "figure1 suite",
        "figure1 construction; clique-cutset combination; P5 extraction",
    );
    let f = &fx.figure1;
    ck.expect(
        f.n() == 10 && f.edge_count() == 13,
        format!("figure1 has n = {}, m = {}", f.n(), f.edge_count()),
    );
    if f.n() != 10 {
        return ck.finish();
    }
    let ef = letters("EF");
    ck.expect(f.is_clique(ef), "EF is not a clique");
    ck.expect(is_minimal_cutset(f, ef), "EF is not a minimal cutset");
    let Some(split) = ck.attempt(CutsetSplit::from_cutset(f, ef), "split at EF") else {
        return ck.finish();
    };
    ck.expect(
        split.v1 == letters("ABCD") && split.v2 == letters("GHIJ"),
        format!("sides {} / {}", named_set(split.v1), named_set(split.v2)),
    );
    let gp1 = GoodPartition::new(letters("EABCD"), letters("F"));
    let gp2 = GoodPartition::new(letters("FJIHG"), letters("E"));
    let ok1 = ck
        .attempt(
            gp1.validate_on(f, split.side1(), limits),
            "(A1, B1) on side 1",
        )
        .is_some();
    let ok2 = ck
        .attempt(
            gp2.validate_on(f, split.side2(), limits),
            "(A2, B2) on side 2",
        )
        .is_some();
    ck.note(format!(
        "cutset EF, sides ABCD / GHIJ; (EABCD, F) and (FJIHG, E) valid: {}",
        ok1 && ok2
    ));
    let Some(report) = ck.attempt(
        combine_good_partitions(f, &split, &gp1, &gp2, limits),
        "combination",
    ) else {
        return ck.finish();
    };
    ck.expect(
        report.b.is_empty(),
        format!("combined B = {}", named_set(report.b)),
    );
    ck.expect(report.omega_ok, "omega_ok is false");
    ck.expect(!report.a_perfect, "combined A is perfect");
    match &report.witness {
        Some(w @ ImperfectionWitness::OddHole(h)) if h.len() == 5 && w.verify(f) => {
            let cyc: String = h.cycle.iter().map(|&v| catalog::FIGURE1_NAMES[v]).collect();
            ck.note(format!(
                "combined B empty, omega_ok, G[A] imperfect: 5-hole {cyc}"
            ));
        }
        other => {
            ck.fail(format!("expected a verified 5-hole witness, got {other:?}"));
        }
    }
    if let Some(p) = ck.attempt(extract_p5_witness(f, &split, &report), "P5 extraction") {
        let name: String = p.iter().map(|&v| catalog::FIGURE1_NAMES[v]).collect();
        if ck.expect(
            is_induced_path(f, &p),
            format!("{name} is not an induced path"),
        ) {
            ck.note(format!("induced P5 {name}"));
        }
    }
    ck.finish()
}

pub fn spgt_cross_validation(corpus: &[Graph], sizes: &Sizes, limits: &Limits) -> CheckOutcome {
    let mut ck = Check::new(
        2,
        "Perfection cross-validation",
        "odd hole/antihole search vs chi = omega on every induced subgraph",
    );
    let mut graphs: Vec<Graph> = corpus.to_vec();
    for n in [8usize, 9] {
        for seed in 0..sizes.oracle_random as u64 {
            match random::random_graph(n, 0.5, 1000 * n as u64 + seed) {
                Ok(g) => graphs.push(g),
                Err(e) => ck.fail(format!("random graph: {e}")),
            }
        }
    }
    let disagreements: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let fast = is_perfect(g, limits).map(|v| (v.perfect, v.verify(g)));
            let slow = is_perfect_oracle(g);
            match (fast, slow) {
                (Ok((p, true)), Ok(q)) if p == q => None,
                (fast, slow) => Some(format!(
                    "{}: search {fast:?}, oracle {slow:?}",
                    write_graph6(g)
                )),
            }
        })
        .collect();
    for d in &disagreements {
        ck.fail(d.clone());
    }
    ck.note(format!(
        "{} graphs ({} corpus, {} random), {} disagreements",
        graphs.len(),
        corpus.len(),
        graphs.len() - corpus.len(),
        disagreements.len()
    ));
    ck.finish()
}

pub fn triangle_free_equivalence(fx: &Fixtures, limits: &Limits) -> CheckOutcome {
    let mut ck = Check::new(
        3,
        "Triangle-free: PD iff 3-colorable",
        "triangle-free hardness equivalence; Grotzsch and Petersen values",
    );
    let mut graphs = Vec::new();
    for n in 0..=8 {
        match enumerate::enumerate_hereditary(n, |g| invariants::omega(g) <= 2) {
            Ok(level) => graphs.extend(level),
            Err(e) => ck.fail(format!("enumeration at n = {n}: {e}")),
        }
    }
    let bad: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| match pd_equals_3colorable(g, limits) {
            Ok(eq) if eq.agree => None,
            other => Some(format!("{}: {other:?}", write_graph6(g))),
        })
        .collect();
    for b in &bad {
        ck.fail(b.clone());
    }
    ck.note(format!(
        "{} triangle-free graphs with n <= 8, {} disagreements",
        graphs.len(),
        bad.len()
    ));

    let gz = &fx.grotzsch;
    let chi = ck.attempt(invariants::chi(gz, limits), "chi(grotzsch)");
    let gp = ck.attempt(
        find_good_partition(gz, limits),
        "good partition of grotzsch",
    );
    let pd = ck.attempt(is_perfectly_divisible(gz, limits), "PD(grotzsch)");
    ck.expect(chi == Some(4), format!("chi(grotzsch) = {chi:?}"));
    ck.expect(gp == Some(None), format!("grotzsch good partition {gp:?}"));
    ck.expect(pd.map(|v| v.holds) == Some(false), "grotzsch is PD");
    ck.note(format!(
        "grotzsch: chi = {}, no good partition, not PD",
        chi.unwrap_or(0)
    ));

    let pt = &fx.petersen;
    let chi = ck.attempt(invariants::chi(pt, limits), "chi(petersen)");
    let pd = ck.attempt(is_perfectly_divisible(pt, limits), "PD(petersen)");
    ck.expect(chi == Some(3), format!("chi(petersen) = {chi:?}"));
    ck.expect(pd.map(|v| v.holds) == Some(true), "petersen is not PD");
    ck.note(format!("petersen: chi = {}, PD", chi.unwrap_or(0)));
    ck.finish()
}

#[derive(Default)]
struct GluedTally {
    instances: usize,
    p5_free: usize,
    imperfect_unions: usize,
    perfect_side: usize,
    violations: Vec<String>,
}

impl GluedTally {
    fn merge(mut self, other: GluedTally) -> GluedTally {
        self.instances += other.instances;
        self.p5_free += other.p5_free;
        self.imperfect_unions += other.imperfect_unions;
        self.perfect_side += other.perfect_side;
        self.violations.extend(other.violations);
        self
    }
}

fn glued_instance(seed: u64, limits: &Limits) -> Result<GluedTally> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n1 = rng.gen_range(1..=5);
    let n2 = rng.gen_range(1..=5);
    let csize = rng.gen_range(1..=3);
    let p = [0.3, 0.5, 0.7][rng.gen_range(0..3)];
    let (g, glued) = random::random_glued(n1, n2, csize, p, seed)?;
    let g6 = write_graph6(&g);
    let mut t = GluedTally {
        instances: 1,
        ..GluedTally::default()
    };
    let c = minimize_cutset(&g, glued.c)?;
    let split = CutsetSplit::from_cutset(&g, c)?;
    let p5_free = patterns::find_induced(&g, &catalog::path(5)?).is_none();
    t.p5_free += p5_free as usize;

    for s in [split, split.swapped()] {
        let (Some(gp1), Some(gp2)) = (
            find_good_partition_of(&g, s.side1(), limits)?,
            find_good_partition_of(&g, s.side2(), limits)?,
        ) else {
            continue;
        };
        let report = combine_good_partitions(&g, &s, &gp1, &gp2, limits)?;
        if !report.omega_ok {
            t.violations
                .push(format!("{g6}: omega_ok false on cutset {}", s.c));
        }
        if !report.a_perfect {
            t.imperfect_unions += 1;
            if p5_free {
                t.violations
                    .push(format!("{g6}: P5-free but combined A is imperfect"));
            }
            match extract_p5_witness(&g, &s, &report) {
                Ok(path) if is_induced_path(&g, &path) => {}
                other => t
                    .violations
                    .push(format!("{g6}: P5 extraction gave {other:?}")),
            }
        }
        if is_perfect_subset(&g, s.side1(), limits)?.perfect {
            t.perfect_side += 1;
            if let Err(e) = one_side_perfect_partition(&g, &s, &gp2, limits) {
                t.violations
                    .push(format!("{g6}: one-side-perfect composition failed: {e}"));
            }
        }
    }
    Ok(t)
}

pub fn composition_guarantees(sizes: &Sizes, limits: &Limits) -> CheckOutcome {
    let mut ck = Check::new(
        4,
        "Clique-cutset composition guarantees",
        "T1.4 combination step; one-side-perfect composition",
    );
    let tally = (0..sizes.glued as u64)
        .into_par_iter()
        .map(|seed| {
            glued_instance(seed, limits).unwrap_or_else(|e| GluedTally {
                instances: 1,
                violations: vec![format!("seed {seed}: {e}")],
                ..GluedTally::default()
            })
        })
        .reduce(GluedTally::default, GluedTally::merge);
    for v in &tally.violations {
        ck.fail(v.clone());
    }
    ck.expect(tally.p5_free > 0, "no P5-free instance was generated");
    ck.note(format!(
        "{} glued instances, {} P5-free, {} imperfect combined A (all with a P5), {} perfect-side compositions, {} violations",
        tally.instances,
        tally.p5_free,
        tally.imperfect_unions,
        tally.perfect_side,
        tally.violations.len()
    ));
    ck.finish()
}

/// A random base graph on `3..=9` vertices plus a vertex `x = n - 1`
/// attached according to `mode`, with a good partition of `G - x`.
fn extension_case(
    seed: u64,
    mode: ExtensionMode,
    limits: &Limits,
) -> Result<Option<(Graph, GoodPartition)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base_n = rng.gen_range(3..=9);
    let p = rng.gen_range(0.2..0.8);
    let base = random::random_graph(base_n, p, seed)?;
    let w = invariants::omega(&base);
    let mut nbrs = VertexSet::EMPTY;
    for v in 0..base_n {
        if rng.gen_bool(0.5) {
            nbrs = nbrs.with(v);
        }
    }
    let nbrs = match mode {
        ExtensionMode::Simplicial => {
            // greedily thin to a clique
            let mut k = VertexSet::EMPTY;
            for v in nbrs {
                if k.is_subset(base.neighbors(v)) {
                    k = k.with(v);
                }
            }
            k
        }
        ExtensionMode::NonClique => {
            if w < 2 {
                return Ok(None);
            }
            let mut s = nbrs;
            while !s.is_empty() && 1 + invariants::omega(&base.induced(s)?.0) >= w {
                s = s.without(s.max().expect("nonempty"));
            }
            s
        }
    };
    let x = base_n;
    let edges = base.edges().chain(nbrs.iter().map(|u| (u, x)));
    let g = Graph::from_edges(base_n + 1, edges)?;
    Ok(find_good_partition_of(&g, g.vertices().without(x), limits)?.map(|gp| (g, gp)))
}

pub fn extension_steps(sizes: &Sizes, limits: &Limits) -> CheckOutcome {
    let mut ck = Check::new(
        5,
        "Single-vertex extension steps",
        "simplicial extension keeps A perfect; non-clique extension keeps omega(B) small",
    );
    for mode in [ExtensionMode::Simplicial, ExtensionMode::NonClique] {
        let mut cases = 0;
        let mut seed = 0u64;
        while cases < sizes.extension && seed < 100 * sizes.extension as u64 + 100 {
            seed += 1;
            let case = match extension_case(seed, mode, limits) {
                Ok(Some(c)) => c,
                Ok(None) => continue,
                Err(e) => {
                    ck.fail(format!("{mode:?} seed {seed}: {e}"));
                    continue;
                }
            };
            cases += 1;
            let (g, gp) = case;
            let x = g.n() - 1;
            let g6 = write_graph6(&g);
            let Some(out) = ck.attempt(
                extend_partition_around_vertex(&g, x, &gp, mode, limits),
                &format!("{mode:?} on {g6}"),
            ) else {
                continue;
            };
            match mode {
                ExtensionMode::Simplicial => {
                    let perfect = is_perfect_subset(&g, out.a, limits).map(|v| v.perfect);
                    ck.expect(
                        perfect == Ok(true) && out.a.contains(x),
                        format!("{g6}: A = {} not perfect", out.a),
                    );
                }
                ExtensionMode::NonClique => {
                    let wb = g.induced(out.b).map(|(h, _)| invariants::omega(&h));
                    ck.expect(
                        wb.as_ref().is_ok_and(|&wb| wb < invariants::omega(&g))
                            && out.b.contains(x),
                        format!("{g6}: omega(B) = {wb:?}"),
                    );
                }
            }
        }
        ck.expect(
            cases == sizes.extension,
            format!("{mode:?}: only {cases} cases generated"),
        );
        ck.note(format!("{mode:?}: {cases} cases"));
    }
    ck.finish()
}

pub fn conjecture_scans(items: &[CorpusItem], sizes: &Sizes, limits: &Limits) -> CheckOutcome {
    let mut ck = Check::new(
        6,
        "Statement scans over all graphs with n <= 7",
        "C1.2 T1.3 T1.4 T1.5 L2.1 L2.2 C4.1-C4.8",
    );
    let mut discoveries = 0;
    for spec in registry() {
        let Some(report) = ck.attempt(scan(items, &spec, limits, sizes.jobs, "all n<=7"), &spec.id)
        else {
            continue;
        };
        for cx in &report.counterexamples {
            let re = conjectures::revalidate(&spec, cx, limits);
            ck.expect(
                re == Ok(true),
                format!("{} hit {} does not revalidate", spec.id, cx.graph6),
            );
        }
        if report.theorem_violated() {
            ck.fail(format!("theorem {} violated: {report}", spec.id));
        }
        if spec.status == Status::Conjecture {
            discoveries += report.counterexamples.len();
        }
        ck.note(format!(
            "{} [{}]: scanned {}, skipped {}, counterexamples {}",
            spec.id,
            spec.status,
            report.scanned,
            report.skipped,
            report.counterexamples.len()
        ));
        for cx in &report.counterexamples {
            ck.note(format!(
                "  {} {}: {}",
                spec.id,
                cx.graph6,
                cx.certificates.get("clause").map_or("", |s| s)
            ));
        }
    }
    ck.note(format!("conjecture counterexamples: {discoveries}"));
    ck.finish()
}

pub fn quantitative_bounds(corpus: &[Graph], fx: &Fixtures, limits: &Limits) -> CheckOutcome {
    let mut ck = Check::new(
        7,
        "Chromatic bounds",
        "chi <= omega^2 for PD graphs; chi <= 2^(omega-1) for 2-divisible graphs",
    );
    let graphs: Vec<&Graph> = corpus
        .iter()
        .chain([&fx.petersen, &fx.grotzsch, &fx.figure1])
        .collect();
    let rows: Vec<Result<(bool, bool)>> = graphs
        .par_iter()
        .map(|g| {
            let w = invariants::omega(g);
            let chi = invariants::chi(g, limits)?;
            let pd = is_perfectly_divisible(g, limits)?.holds;
            let two = is_k_divisible(g, 2, limits)?.holds;
            let pd_ok = !pd || chi <= w * w;
            let two_ok = !two || w == 0 || chi <= 1 << (w - 1);
            if !pd_ok || !two_ok {
                return Err(crate::error::Error::GuaranteeViolated(format!(
                    "{}: chi = {chi}, omega = {w}, PD = {pd}, 2-divisible = {two}",
                    write_graph6(g)
                )));
            }
            Ok((pd, two))
        })
        .collect();
    let (mut pd, mut two) = (0, 0);
    for r in rows {
        if let Some((p, t)) = ck.attempt(r, "bound") {
            pd += p as usize;
            two += t as usize;
        }
    }
    ck.note(format!(
        "{} graphs, {pd} verified PD, {two} verified 2-divisible, {} bound violations",
        graphs.len(),
        ck.failures
    ));
    ck.finish()
}

pub fn two_divisibility(corpus: &[Graph], limits: &Limits) -> CheckOutcome {
    let mut ck = Check::new(
        8,
        "2-divisibility values",
        "C5 and C7 minimal; bipartite graphs; C4.6 forward direction",
    );
    for k in [5, 7] {
        let c = catalog::cycle(k).expect("cycle");
        let m = ck.attempt(is_minimally_non_2_divisible(&c, limits), "minimality");
        ck.expect(
            m == Some(true),
            format!("C{k} minimally non-2-divisible: {m:?}"),
        );
    }
    let mut bipartite = 0;
    let mut two_div = 0;
    for g in corpus {
        let Some(two) = ck.attempt(is_k_divisible(g, 2, limits), "2-divisibility") else {
            continue;
        };
        if bipartition_in(g.rows(), g.vertices().bits()).is_some() {
            bipartite += 1;
            ck.expect(
                two.holds,
                format!("bipartite {} is not 2-divisible", write_graph6(g)),
            );
        }
        if two.holds {
            two_div += 1;
            if let Some(h) = patterns::find_hole(g, patterns::Parity::Odd, 5) {
                ck.fail(format!("2-divisible {} has odd hole {h}", write_graph6(g)));
            }
        }
    }
    ck.note(format!(
        "C5, C7 minimally non-2-divisible; {bipartite} bipartite graphs 2-divisible; {two_div} 2-divisible graphs all odd-hole-free"
    ));
    ck.finish()
}

pub fn determinism(corpus: &[Graph], items: &[CorpusItem], limits: &Limits) -> CheckOutcome {
    let mut ck = Check::new(
        9,
        "Determinism and graph6 I/O",
        "graph6 round trip; scan invariance under worker count",
    );
    let mut round_trips = 0;
    for g in corpus {
        let s = write_graph6(g);
        match parse_graph6(&s) {
            Ok(h) if h == *g && write_graph6(&h) == s => round_trips += 1,
            other => ck.fail(format!("{s} round trip gave {other:?}")),
        }
    }
    for id in ["C4.1", "C4.6", "T1.4"] {
        let spec = conjectures::lookup(id).expect("registered");
        let runs: Vec<_> = [1usize, 2, 8]
            .iter()
            .filter_map(|&j| ck.attempt(scan(items, &spec, limits, j, "all n<=7"), id))
            .map(|mut r| {
                r.duration_ms = 0;
                serde_json::to_string(&r).expect("report serializes")
            })
            .collect();
        ck.expect(
            runs.len() == 3 && runs.windows(2).all(|w| w[0] == w[1]),
            format!("{id} scan differs across worker counts"),
        );
    }
    ck.note(format!(
        "{round_trips} graph6 round trips; scans identical for 1, 2 and 8 workers"
    ));
    ck.finish()
}

/// Runs all nine checks in order.
pub fn run_all(fx: &Fixtures, sizes: &Sizes, limits: &Limits) -> Result<Vec<CheckOutcome>> {
    let corpus = enumerate::corpus_up_to(7)?;
    let items: Vec<CorpusItem> = corpus.iter().cloned().map(Ok).collect();
    Ok(vec![
        figure1_suite(fx, limits),
        spgt_cross_validation(&corpus, sizes, limits),
        triangle_free_equivalence(fx, limits),
        composition_guarantees(sizes, limits),
        extension_steps(sizes, limits),
        conjecture_scans(&items, sizes, limits),
        quantitative_bounds(&corpus, fx, limits),
        two_divisibility(&corpus, limits),
        determinism(&corpus, &items, limits),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure1_suite_passes_and_detects_corruption() {
        let fx = Fixtures::default();
        let ok = figure1_suite(&fx, &Limits::default());
        assert!(ok.passed, "{ok}");
        let mut broken = fx.clone();
        broken.figure1 =
            Graph::from_edges(10, fx.figure1.edges().filter(|&e| e != (0, 1))).unwrap();
        assert!(!figure1_suite(&broken, &Limits::default()).passed);
        broken.figure1 = Graph::empty(3).unwrap();
        assert!(!figure1_suite(&broken, &Limits::default()).passed);
    }

    #[test]
    fn small_battery_passes() {
        let sizes = Sizes {
            oracle_random: 20,
            glued: 200,
            extension: 50,
            jobs: 2,
        };
        let fx = Fixtures::default();
        let lim = Limits::default();
        let corpus = enumerate::corpus_up_to(5).unwrap();
        let items: Vec<CorpusItem> = corpus.iter().cloned().map(Ok).collect();
        for o in [
            spgt_cross_validation(&corpus, &sizes, &lim),
            composition_guarantees(&sizes, &lim),
            extension_steps(&sizes, &lim),
            conjecture_scans(&items, &sizes, &lim),
            quantitative_bounds(&corpus, &fx, &lim),
            two_divisibility(&corpus, &lim),
            determinism(&corpus, &items, &lim),
        ] {
            assert!(o.passed, "{o}");
        }
    }
}
