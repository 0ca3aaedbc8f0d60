//! Registry of hypothesis ⇒ conclusion statements about perfect
//! divisibility, and a corpus scanner that looks for graphs violating them.
//!
//! A statement is a list of clauses. A graph violates a clause when every
//! hypothesis predicate holds and the conclusion does not; a clause with no
//! conclusion is violated by any graph meeting its hypothesis.

pub mod enumerate;
pub mod random;
pub mod scan;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::decomposition::{find_bisimplicial, find_clique_cutset, find_simplicial};
use crate::divisibility::{
    is_k_divisible, is_minimally_non_k_divisible, is_mnpd, is_perfectly_divisible,
};
use crate::error::Result;
use crate::graph::Graph;
use crate::invariants;
use crate::limits::Limits;
use crate::patterns::{self, Parity};

pub use enumerate::{
    canonical_code, canonical_form, corpus_up_to, enumerate_hereditary, enumerate_small,
};
pub use random::{random_glued, random_graph};
pub use scan::{
    read_graph6_corpus, revalidate, scan, CorpusItem, Counterexample, ParseIssue, ScanParams,
    ScanReport,
};

/// A named graph property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    TriangleFree,
    P5Free,
    C5Free,
    K23Free,
    FourK1Free,
    AlphaAtMost(usize),
    OddHoleFree,
    EvenHoleFree,
    HasSimplicial,
    HasBisimplicial,
    EveryVertexInMaxClique,
    HasCliqueCutset,
    PerfectlyDivisible,
    KDivisible(usize),
    Mnpd,
    MinimallyNonKDivisible(usize),
}

/// Outcome of one predicate on one graph, with a human-checkable reason.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    pub value: bool,
    pub evidence: String,
}

impl Evaluation {
    fn plain(value: bool) -> Self {
        Evaluation {
            value,
            evidence: value.to_string(),
        }
    }
}

impl Predicate {
    /// Evaluation order inside a clause: cheaper predicates first, the
    /// minimality tests last.
    pub fn cost(self) -> u8 {
        match self {
            Predicate::TriangleFree => 0,
            Predicate::P5Free | Predicate::C5Free | Predicate::K23Free | Predicate::FourK1Free => 1,
            Predicate::AlphaAtMost(_) => 2,
            Predicate::HasSimplicial
            | Predicate::HasBisimplicial
            | Predicate::EveryVertexInMaxClique => 3,
            Predicate::OddHoleFree | Predicate::EvenHoleFree => 4,
            Predicate::HasCliqueCutset => 5,
            Predicate::PerfectlyDivisible => 6,
            Predicate::KDivisible(_) => 7,
            Predicate::Mnpd => 8,
            Predicate::MinimallyNonKDivisible(_) => 9,
        }
    }

    fn forbidden(key: &str, g: &Graph) -> Evaluation {
        let pattern = catalog::named(key).expect("catalog pattern");
        match patterns::find_induced(g, &pattern) {
            None => Evaluation::plain(true),
            Some(e) => Evaluation {
                value: false,
                evidence: format!("induced {key} on {:?}", e.map),
            },
        }
    }

    pub fn evaluate(self, g: &Graph, limits: &Limits) -> Result<Evaluation> {
        Ok(match self {
            Predicate::TriangleFree => {
                let k = invariants::max_clique(g);
                if k.len() >= 3 {
                    Evaluation {
                        value: false,
                        evidence: format!("clique {k}"),
                    }
                } else {
                    Evaluation::plain(true)
                }
            }
            Predicate::P5Free => Self::forbidden("p5", g),
            Predicate::C5Free => Self::forbidden("c5", g),
            Predicate::K23Free => Self::forbidden("k23", g),
            Predicate::FourK1Free => Self::forbidden("4K1", g),
            Predicate::AlphaAtMost(k) => {
                let s = invariants::max_stable_set(g);
                Evaluation {
                    value: s.len() <= k,
                    evidence: format!("maximum stable set {s}"),
                }
            }
            Predicate::OddHoleFree | Predicate::EvenHoleFree => {
                let (parity, min) = match self {
                    Predicate::OddHoleFree => (Parity::Odd, 5),
                    _ => (Parity::Even, 4),
                };
                match patterns::find_hole(g, parity, min) {
                    None => Evaluation::plain(true),
                    Some(h) => Evaluation {
                        value: false,
                        evidence: format!("hole {h}"),
                    },
                }
            }
            Predicate::HasSimplicial | Predicate::HasBisimplicial => {
                let found = match self {
                    Predicate::HasSimplicial => find_simplicial(g),
                    _ => find_bisimplicial(g),
                };
                match found.first() {
                    Some(v) => Evaluation {
                        value: true,
                        evidence: format!("vertex {v}"),
                    },
                    None => Evaluation::plain(false),
                }
            }
            Predicate::EveryVertexInMaxClique => {
                let w = invariants::omega(g);
                let outside = g.vertices().iter().find(|&v| {
                    let (h, _) = g.induced(g.neighbors(v)).expect("in range");
                    1 + invariants::omega(&h) < w
                });
                match outside {
                    Some(v) => Evaluation {
                        value: false,
                        evidence: format!("vertex {v} is in no clique of size {w}"),
                    },
                    None => Evaluation::plain(true),
                }
            }
            Predicate::HasCliqueCutset => match find_clique_cutset(g) {
                Some(s) => Evaluation {
                    value: true,
                    evidence: format!("cutset {} separating {} from {}", s.c, s.v1, s.v2),
                },
                None => Evaluation::plain(false),
            },
            Predicate::PerfectlyDivisible | Predicate::KDivisible(_) => {
                let verdict = match self {
                    Predicate::KDivisible(k) => is_k_divisible(g, k, limits)?,
                    _ => is_perfectly_divisible(g, limits)?,
                };
                match verdict.failing_subgraph {
                    Some(s) => Evaluation {
                        value: false,
                        evidence: format!("no admissible partition of G[{s}]"),
                    },
                    None => Evaluation::plain(true),
                }
            }
            Predicate::Mnpd => Evaluation::plain(is_mnpd(g, limits)?),
            Predicate::MinimallyNonKDivisible(k) => {
                Evaluation::plain(is_minimally_non_k_divisible(g, k, limits)?)
            }
        })
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::TriangleFree => write!(f, "triangle-free"),
            Predicate::P5Free => write!(f, "P5-free"),
            Predicate::C5Free => write!(f, "C5-free"),
            Predicate::K23Free => write!(f, "K23-free"),
            Predicate::FourK1Free => write!(f, "4K1-free"),
            Predicate::AlphaAtMost(k) => write!(f, "alpha<={k}"),
            Predicate::OddHoleFree => write!(f, "odd-hole-free"),
            Predicate::EvenHoleFree => write!(f, "even-hole-free"),
            Predicate::HasSimplicial => write!(f, "has-simplicial"),
            Predicate::HasBisimplicial => write!(f, "has-bisimplicial"),
            Predicate::EveryVertexInMaxClique => write!(f, "every-vertex-in-max-clique"),
            Predicate::HasCliqueCutset => write!(f, "has-clique-cutset"),
            Predicate::PerfectlyDivisible => write!(f, "perfectly-divisible"),
            Predicate::KDivisible(k) => write!(f, "{k}-divisible"),
            Predicate::Mnpd => write!(f, "mnpd"),
            Predicate::MinimallyNonKDivisible(k) => write!(f, "minimally-non-{k}-divisible"),
        }
    }
}

/// `pred` is required to evaluate to `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Literal {
    pub pred: Predicate,
    pub value: bool,
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value {
            write!(f, "{}", self.pred)
        } else {
            write!(f, "not {}", self.pred)
        }
    }
}

/// `hypothesis ⇒ conclusion`; `None` as conclusion means "never".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub hypothesis: Vec<Literal>,
    pub conclusion: Option<Literal>,
}

impl Clause {
    /// Literals a violating graph must satisfy, cheapest first.
    fn violation(&self) -> Vec<Literal> {
        let mut lits = self.hypothesis.clone();
        if let Some(c) = self.conclusion {
            lits.push(Literal {
                pred: c.pred,
                value: !c.value,
            });
        }
        lits.sort_by_key(|l| l.pred.cost());
        lits
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hyp: Vec<String> = self.hypothesis.iter().map(ToString::to_string).collect();
        let hyp = if hyp.is_empty() {
            "true".to_string()
        } else {
            hyp.join(" and ")
        };
        match self.conclusion {
            Some(c) => write!(f, "{hyp} => {c}"),
            None => write!(f, "{hyp} => false"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Theorem,
    Conjecture,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Theorem => "theorem",
            Status::Conjecture => "conjecture",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureSpec {
    pub id: String,
    pub status: Status,
    pub clauses: Vec<Clause>,
}

/// Evidence for one violated clause, keyed by literal.
pub type Certificates = BTreeMap<String, String>;

impl ConjectureSpec {
    /// The first violated clause and its certificates, if any. Predicate
    /// values are shared between clauses.
    pub fn check(&self, g: &Graph, limits: &Limits) -> Result<Option<(usize, Certificates)>> {
        let mut memo: BTreeMap<Predicate, Evaluation> = BTreeMap::new();
        for (i, clause) in self.clauses.iter().enumerate() {
            let mut certs = Certificates::new();
            let mut violated = true;
            for lit in clause.violation() {
                let e = match memo.get(&lit.pred) {
                    Some(e) => e.clone(),
                    None => {
                        let e = lit.pred.evaluate(g, limits)?;
                        memo.insert(lit.pred, e.clone());
                        e
                    }
                };
                if e.value != lit.value {
                    violated = false;
                    break;
                }
                certs.insert(lit.pred.to_string(), e.evidence);
            }
            if violated {
                certs.insert("clause".into(), clause.to_string());
                return Ok(Some((i, certs)));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for ConjectureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let clauses: Vec<String> = self.clauses.iter().map(ToString::to_string).collect();
        write!(f, "{} [{}] {}", self.id, self.status, clauses.join("; "))
    }
}

fn yes(pred: Predicate) -> Literal {
    Literal { pred, value: true }
}

fn no(pred: Predicate) -> Literal {
    Literal { pred, value: false }
}

fn spec(id: &str, status: Status, clauses: Vec<Clause>) -> ConjectureSpec {
    ConjectureSpec {
        id: id.into(),
        status,
        clauses,
    }
}

fn implies(hypothesis: Vec<Literal>, conclusion: Literal) -> Vec<Clause> {
    vec![Clause {
        hypothesis,
        conclusion: Some(conclusion),
    }]
}

/// All registered statements, in a fixed order.
pub fn registry() -> Vec<ConjectureSpec> {
    use Predicate::*;
    use Status::*;
    vec![
        spec(
            "C1.2",
            Conjecture,
            vec![Clause {
                hypothesis: vec![yes(Mnpd), yes(HasCliqueCutset)],
                conclusion: None,
            }],
        ),
        spec(
            "T1.3",
            Theorem,
            implies(
                vec![yes(P5Free), yes(C5Free), yes(K23Free)],
                yes(PerfectlyDivisible),
            ),
        ),
        spec(
            "T1.4",
            Theorem,
            implies(vec![yes(P5Free), yes(Mnpd)], no(HasCliqueCutset)),
        ),
        spec(
            "T1.5",
            Theorem,
            implies(vec![yes(FourK1Free), yes(Mnpd)], no(HasCliqueCutset)),
        ),
        spec(
            "L2.1",
            Theorem,
            implies(vec![yes(Mnpd)], yes(EveryVertexInMaxClique)),
        ),
        spec("L2.2", Theorem, implies(vec![yes(Mnpd)], no(HasSimplicial))),
        spec(
            "C4.1",
            Conjecture,
            implies(vec![yes(OddHoleFree)], yes(PerfectlyDivisible)),
        ),
        spec(
            "C4.2",
            Conjecture,
            implies(vec![yes(P5Free)], yes(PerfectlyDivisible)),
        ),
        spec(
            "C4.3",
            Conjecture,
            implies(vec![yes(AlphaAtMost(3))], yes(PerfectlyDivisible)),
        ),
        spec(
            "C4.4",
            Conjecture,
            implies(vec![yes(EvenHoleFree)], yes(PerfectlyDivisible)),
        ),
        spec(
            "C4.5",
            Conjecture,
            implies(vec![yes(Mnpd)], no(HasBisimplicial)),
        ),
        spec(
            "C4.6",
            Conjecture,
            vec![
                Clause {
                    hypothesis: vec![yes(KDivisible(2))],
                    conclusion: Some(yes(OddHoleFree)),
                },
                Clause {
                    hypothesis: vec![yes(OddHoleFree)],
                    conclusion: Some(yes(KDivisible(2))),
                },
            ],
        ),
        spec(
            "C4.7",
            Conjecture,
            implies(vec![yes(MinimallyNonKDivisible(2))], no(HasCliqueCutset)),
        ),
        spec(
            "C4.8",
            Conjecture,
            implies(vec![yes(EvenHoleFree)], yes(KDivisible(3))),
        ),
    ]
}

/// Registered statement by id.
pub fn lookup(id: &str) -> Option<ConjectureSpec> {
    registry().into_iter().find(|s| s.id == id)
}

/// A minimal imperfect graph (odd hole or odd antihole) never has a clique
/// cutset. Returns a graph on which this fails, if any is found among
/// `graphs`.
pub fn minimal_imperfect_cutset_violation(graphs: &[Graph]) -> Option<Graph> {
    graphs
        .iter()
        .find(|g| {
            crate::table::is_minimal_imperfect(g, g.vertices().bits())
                && find_clique_cutset(g).is_some()
        })
        .cloned()
}
